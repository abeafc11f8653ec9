#include "farsinorm/segmenter.h"

#include <algorithm>
#include <map>

#include "farsinorm/mapping_table.h"
#include "farsinorm/utf8.h"

namespace farsinorm {

namespace {

// A verb followed by one of these keeps its clause going.
const std::unordered_set<std::u32string>& continuation_words() {
  static const std::unordered_set<std::u32string> words = {
      U"و", U"که", U"تا", U"یا", U"را", U"اما", U"ولی", U"زیرا", U"چون"};
  return words;
}

bool is_terminal(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?' || c == U'؟' || c == U'…';
}

bool is_closer(char32_t c) {
  return c == U'"' || c == U'\'' || c == U')' || c == U']' || c == U'}' ||
         c == U'»' || c == U'”' || c == U'’';
}

std::u32string_view strip_punct(std::u32string_view tok) {
  auto keep = [](char32_t c) { return chars::is_word_char(c) || chars::is_digit(c); };
  while (!tok.empty() && !keep(tok.front())) tok.remove_prefix(1);
  while (!tok.empty() && !keep(tok.back())) tok.remove_suffix(1);
  return tok;
}

std::vector<std::pair<std::u32string, std::u32string>> two_columns(
    const ResourceBundle& bundle, std::string_view name) {
  std::vector<std::pair<std::u32string, std::u32string>> rows;
  for (std::string_view line : resource_lines(bundle.get(name))) {
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ResourceError(std::string(name) + ": expected two columns: " +
                          std::string(line));
    }
    std::string_view second = line.substr(tab + 1);
    second = second.substr(0, second.find('\t'));
    rows.emplace_back(unescape_field(line.substr(0, tab)), unescape_field(second));
  }
  if (rows.empty()) throw ResourceError(std::string(name) + ": empty");
  return rows;
}

struct Token {
  size_t start;
  size_t end;
};

std::vector<Token> tokenize(std::u32string_view text, size_t from, size_t to) {
  std::vector<Token> out;
  size_t i = from;
  while (i < to) {
    while (i < to && chars::is_space(text[i])) ++i;
    size_t j = i;
    while (j < to && !chars::is_space(text[j])) ++j;
    if (j > i) out.push_back({i, j});
    i = j;
  }
  return out;
}

std::string collapse_ws(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

VerbLexicon::VerbLexicon(const ResourceBundle& bundle) {
  const auto stems = two_columns(bundle, "lexicon/verbs.tsv");
  std::map<std::u32string, std::vector<std::u32string>> affix;
  for (auto& [kind, value] : two_columns(bundle, "lexicon/affixes.tsv")) {
    affix[kind].push_back(value == U"-" ? std::u32string() : value);
  }
  for (const char32_t* required :
       {U"prefix", U"past_suffix", U"present_suffix", U"copula",
        U"participle_aux", U"future_aux"}) {
    if (affix[required].empty()) {
      throw ResourceError("lexicon/affixes.tsv: no " + utf8_encode(required) +
                          " rules");
    }
  }

  const std::u32string kAlef = U"آ";
  const std::u32string kYaAlef = U"یا";
  const std::u32string kHe = U"ه";
  auto with_prefix = [&](const std::u32string& prefix, const std::u32string& stem) {
    if ((prefix == U"ب" || prefix == U"ن") && stem.starts_with(kAlef)) {
      return prefix + kYaAlef + stem.substr(1);
    }
    return prefix + stem;
  };
  auto ends_in_vowel = [](const std::u32string& stem) {
    const char32_t last = stem.back();
    return last == U'ا' || last == U'و' || last == U'آ';
  };

  const auto& prefixes = affix[U"prefix"];
  for (const auto& [past, present] : stems) {
    past_stems_.insert(past);
    // Past forms, plain and prefixed ("رفتم", "می‌رفتیم", "نرفتند").
    for (const auto& s : affix[U"past_suffix"]) {
      if (!(s.empty() && past == U"مرد")) {  // bare "مرد" is a noun
        finite_.insert(past + s);
      }
      stem_forms_.insert(past + s);
      for (const auto& p : prefixes) {
        if (p == U"ب") continue;
        finite_.insert(with_prefix(p, past) + s);
      }
    }
    // Participles and attached perfect forms ("رفته", "رفته‌اند").
    participles_.insert(past + kHe);
    participles_.insert(with_prefix(U"ن", past) + kHe);
    for (const auto& c : affix[U"participle_aux"]) {
      if (c.size() <= 3 && c.starts_with(U"ا")) {
        finite_.insert(past + kHe + chars::kZwnj + c);
      }
    }
    // Present forms need a prefix unless listed as bare.
    std::vector<std::u32string> endings = affix[U"present_suffix"];
    if (ends_in_vowel(present)) {
      for (const auto& s : affix[U"present_suffix"]) {
        endings.push_back(s == U"ی" ? U"یی" : U"ی" + s);
      }
    }
    for (const auto& s : endings) {
      stem_forms_.insert(present + s);
      for (const auto& p : prefixes) finite_.insert(with_prefix(p, present) + s);
    }
    const std::u32string imperative = with_prefix(U"ب", present);
    if (imperative.size() > 2) finite_.insert(imperative);
  }
  for (const auto& bare : affix[U"bare_present"]) {
    for (const auto& s : affix[U"present_suffix"]) finite_.insert(bare + s);
  }
  for (const auto& c : affix[U"copula"]) finite_.insert(c);
  for (const auto& a : affix[U"participle_aux"]) aux_.insert(a);
  for (const auto& f : affix[U"future_aux"]) {
    for (const auto& s : affix[U"present_suffix"]) future_aux_.insert(f + s);
  }
  split_prefixes_ = {U"می", U"نمی"};
}

bool VerbLexicon::is_finite_verb(std::u32string_view token) const {
  return finite_.contains(std::u32string(token));
}

bool VerbLexicon::is_participle(std::u32string_view token) const {
  return participles_.contains(std::u32string(token));
}

bool VerbLexicon::is_aux(std::u32string_view token) const {
  return aux_.contains(std::u32string(token));
}

bool VerbLexicon::is_future_aux(std::u32string_view token) const {
  return future_aux_.contains(std::u32string(token));
}

namespace {

bool has_durative_prefix(std::u32string_view token) {
  return token.starts_with(U"\u0645\u06CC") || token.starts_with(U"\u0646\u0645\u06CC");
}

}  // namespace

std::vector<size_t> VerbLexicon::verb_positions(
    std::span<const std::u32string> tokens) const {
  std::vector<size_t> out;
  const size_t n = tokens.size();
  size_t i = 0;
  while (i < n) {
    const std::u32string t(strip_punct(tokens[i]));
    const std::u32string next =
        i + 1 < n ? std::u32string(strip_punct(tokens[i + 1])) : std::u32string();
    if (i + 1 < n && split_prefixes_.contains(t) && stem_forms_.contains(next)) {
      out.push_back(i + 1);
      i += 2;
      continue;
    }
    if (i + 1 < n && is_future_aux(t) && past_stems_.contains(next)) {
      out.push_back(i + 1);
      i += 2;
      continue;
    }
    if (i + 1 < n && is_participle(t) && (is_aux(next) || is_finite_verb(next))) {
      out.push_back(i + 1);
      i += 2;
      continue;
    }
    if (is_finite_verb(t)) out.push_back(i);
    ++i;
  }
  return out;
}

std::vector<size_t> detect_verb_positions(std::span<const std::u32string> tokens,
                                          const VerbTagger& tagger) {
  return tagger.verb_positions(tokens);
}

std::vector<std::pair<size_t, size_t>> protect_non_terminal_dots(
    std::u32string_view text, const SemioticScanner& scanner,
    const ScanOptions& options) {
  std::vector<std::pair<size_t, size_t>> out;
  for (const auto& span : scanner.scan(text, options)) {
    for (size_t k = span.start; k < span.end; ++k) {
      if (text[k] == U'.') out.emplace_back(k, k + 1);
    }
  }
  return out;
}

std::vector<std::u32string> split_sentences(std::u32string_view text,
                                            const SemioticScanner& scanner,
                                            const VerbTagger& tagger,
                                            const SegmenterOptions& options) {
  const size_t n = text.size();
  std::vector<char> in_span(n + 1, 0);
  for (const auto& span : scanner.scan(text, options.scan)) {
    std::fill(in_span.begin() + static_cast<std::ptrdiff_t>(span.start),
              in_span.begin() + static_cast<std::ptrdiff_t>(span.end), 1);
  }

  // Pass 1: terminal punctuation.
  std::vector<std::pair<size_t, size_t>> segments;
  size_t seg_start = 0;
  size_t i = 0;
  while (i < n) {
    if (!is_terminal(text[i]) || in_span[i]) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n && is_terminal(text[j]) && !in_span[j]) ++j;
    while (j < n && is_closer(text[j])) ++j;
    segments.emplace_back(seg_start, j);
    seg_start = i = j;
  }
  if (seg_start < n) segments.emplace_back(seg_start, n);

  // Pass 2: long segments are cut after verb groups.
  std::vector<std::pair<size_t, size_t>> pieces;
  for (const auto& [s, e] : segments) {
    const auto toks = tokenize(text, s, e);
    if (toks.size() <= options.verb_split_threshold) {
      pieces.emplace_back(s, e);
      continue;
    }
    std::vector<std::u32string> words;
    words.reserve(toks.size());
    for (const auto& t : toks) words.emplace_back(text.substr(t.start, t.end - t.start));
    size_t piece_start = s;
    size_t last_cut_token = 0;
    const auto verbs = tagger.verb_positions(words);
    for (size_t k = 0; k < verbs.size(); ++k) {
      const size_t v = verbs[k];
      if (v + 2 >= toks.size()) continue;  // leave at least two tokens after
      // A verb directly before a "می"-prefixed verb is usually a noun that
      // happens to look like one ("برنج می‌رفت").
      if (k + 1 < verbs.size() && verbs[k + 1] == v + 1 &&
          has_durative_prefix(words[v + 1])) {
        continue;
      }
      if (v + 1 < last_cut_token + 2) continue;
      const auto& w = words[v];
      const char32_t last = w.back();
      if (last == U'،' || last == U',' || last == U':' || last == U';' ||
          last == U'؛') {
        continue;
      }
      if (continuation_words().contains(std::u32string(strip_punct(words[v + 1])))) {
        continue;
      }
      const size_t cut = toks[v].end;
      if (in_span[cut] && cut > 0 && in_span[cut - 1]) continue;
      pieces.emplace_back(piece_start, cut);
      piece_start = cut;
      last_cut_token = v + 1;
    }
    pieces.emplace_back(piece_start, e);
  }

  std::vector<std::u32string> out;
  for (auto [s, e] : pieces) {
    while (s < e && chars::is_space(text[s])) ++s;
    while (e > s && chars::is_space(text[e - 1])) --e;
    if (e > s) out.emplace_back(text.substr(s, e - s));
  }
  return out;
}

std::vector<std::string> split_sentences(std::string_view text,
                                         const SemioticScanner& scanner,
                                         const VerbTagger& tagger,
                                         const SegmenterOptions& options) {
  std::vector<std::string> out;
  for (const auto& s : split_sentences(utf8_decode(text), scanner, tagger, options)) {
    out.push_back(utf8_encode(s));
  }
  return out;
}

double evaluate_segmentation(const std::vector<std::string>& predicted,
                             const std::vector<std::string>& gold) {
  if (gold.empty()) return 1.0;
  std::map<std::string, size_t> available;
  for (const auto& p : predicted) ++available[collapse_ws(p)];
  size_t hits = 0;
  for (const auto& g : gold) {
    auto it = available.find(collapse_ws(g));
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(gold.size());
}

std::vector<std::vector<std::string>> parse_gold_paragraphs(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> current;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = collapse_ws(line);
    if (!trimmed.empty() && trimmed[0] == '#') {
      // comment
    } else if (trimmed.empty()) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(trimmed);
    }
    pos = nl + 1;
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

SegmentationReport evaluate_gold(
    const std::vector<std::vector<std::string>>& paragraphs,
    const SemioticScanner& scanner, const VerbTagger& tagger,
    const SegmenterOptions& options) {
  SegmentationReport report;
  for (const auto& para : paragraphs) {
    std::string joined;
    for (const auto& s : para) {
      if (!joined.empty()) joined.push_back(' ');
      joined += s;
    }
    const auto predicted = split_sentences(std::string_view(joined), scanner,
                                           tagger, options);
    report.gold_sentences += para.size();
    report.matched += static_cast<size_t>(
        evaluate_segmentation(predicted, para) * static_cast<double>(para.size()) + 0.5);
  }
  report.accuracy = report.gold_sentences == 0
                        ? 1.0
                        : static_cast<double>(report.matched) /
                              static_cast<double>(report.gold_sentences);
  return report;
}

}  // namespace farsinorm
