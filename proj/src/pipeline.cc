#include "farsinorm/pipeline.h"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "farsinorm/utf8.h"

namespace farsinorm {

namespace {

constexpr SemioticClass kAllClasses[] = {
    SemioticClass::kDate,       SemioticClass::kTime,
    SemioticClass::kPhone,      SemioticClass::kNationalId,
    SemioticClass::kCardNumber, SemioticClass::kSheba,
    SemioticClass::kUrl,        SemioticClass::kEmail,
    SemioticClass::kCurrency,   SemioticClass::kSymbol,
    SemioticClass::kMathSymbol, SemioticClass::kAbbrevFa,
    SemioticClass::kAbbrevEn,   SemioticClass::kPlainNumber,
    SemioticClass::kLongNumber, SemioticClass::kDecimal,
};

std::string pass_name(SemioticClass cls) {
  std::string name(class_name(cls));
  for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return name;
}

bool glues(char32_t c) { return chars::is_word_char(c) || chars::is_digit(c); }

}  // namespace

const std::vector<std::string>& general_pass_names() {
  static const std::vector<std::string> names = {
      "entities", "characters", "digits", "punctuation", "emojis"};
  return names;
}

const std::vector<std::string>& speech_pass_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (SemioticClass cls : kAllClasses) v.push_back(pass_name(cls));
    return v;
  }();
  return names;
}

std::set<std::string> PipelineConfig::all_passes() {
  std::set<std::string> all(general_pass_names().begin(), general_pass_names().end());
  all.insert(speech_pass_names().begin(), speech_pass_names().end());
  return all;
}

void PipelineConfig::disable(const std::string& pass) {
  if (!all_passes().contains(pass)) {
    throw std::invalid_argument("unknown pass: " + pass);
  }
  enabled_passes.erase(pass);
}

bool PipelineConfig::enabled(std::string_view pass) const {
  return enabled_passes.contains(std::string(pass));
}

void PipelineConfig::validate() const {
  const auto all = all_passes();
  for (const auto& p : enabled_passes) {
    if (!all.contains(p)) throw std::invalid_argument("unknown pass: " + p);
  }
}

EnumerationLimitError::EnumerationLimitError(size_t count)
    : std::length_error("enumeration would produce " +
                        (count == std::numeric_limits<size_t>::max()
                             ? std::string("more than 2^64")
                             : std::to_string(count)) +
                        " strings (limit " + std::to_string(kMaxEnumeration) + ")"),
      count_(count) {}

Normalizer::Normalizer(PipelineConfig config, const ResourceBundle& bundle)
    : config_(std::move(config)),
      charset_(bundle),
      scanner_(bundle),
      verbalizers_(bundle),
      lexicon_(bundle) {
  config_.validate();
}

SegmenterOptions Normalizer::segmenter_options() const {
  SegmenterOptions o;
  o.verb_split_threshold = config_.verb_split_threshold;
  o.scan.overlap_calendar = config_.calendar_default;
  return o;
}

UrlStyle Normalizer::url_style() const {
  return UrlStyle{config_.persian_url_words, config_.read_url_digits};
}

std::u32string Normalizer::normalize_general(std::u32string_view text) const {
  auto once = [&](std::u32string t) {
    if (config_.enabled("entities")) t = charset_.decode_markup_entities(t);
    if (config_.enabled("characters")) t = charset_.fold_characters(t);
    if (config_.enabled("digits")) t = charset_.fold_digits(t);
    if (config_.enabled("punctuation")) t = charset_.fold_punctuation(t);
    if (config_.enabled("emojis")) t = charset_.strip_emojis(t);
    return t;
  };
  std::u32string t = once(std::u32string(text));
  // Folding can assemble a new reference ("＆lt;" -> "&lt;"); repeat until
  // decoding has nothing left to do.
  for (int round = 0; round < 4 && config_.enabled("entities") &&
                      t.find(U'&') != std::u32string::npos;
       ++round) {
    std::u32string again = once(t);
    if (again == t) break;
    t = std::move(again);
  }
  return t;
}

std::string Normalizer::normalize_general(std::string_view text) const {
  return utf8_encode(normalize_general(utf8_decode(text)));
}

std::vector<SemioticSpan> Normalizer::speech_spans(std::u32string_view text) const {
  ScanOptions options;
  options.overlap_calendar = config_.calendar_default;
  std::vector<SemioticSpan> spans = scanner_.scan(text, options);
  std::erase_if(spans, [&](const SemioticSpan& s) {
    return !config_.enabled(pass_name(s.cls));
  });
  return spans;
}

std::u32string Normalizer::assemble(std::u32string_view text,
                                    const std::vector<SemioticSpan>& spans,
                                    const std::vector<std::u32string>& words) const {
  std::u32string out;
  out.reserve(text.size() * 2);
  size_t pos = 0;
  for (size_t k = 0; k < spans.size(); ++k) {
    const auto& span = spans[k];
    out.append(text.substr(pos, span.start - pos));
    const std::u32string& w = words[k];
    if (!w.empty()) {
      if (!out.empty() && glues(out.back())) out.push_back(U' ');
      out += w;
      if (span.end < text.size() && glues(text[span.end])) out.push_back(U' ');
    }
    pos = span.end;
  }
  out.append(text.substr(pos));
  return out;
}

std::u32string Normalizer::normalize_speech(std::u32string_view text,
                                            std::mt19937_64* rng) const {
  const std::u32string general = normalize_general(text);
  const auto spans = speech_spans(general);
  if (spans.empty()) return general;

  std::mt19937_64 local(config_.seed);
  if (rng == nullptr) rng = &local;
  const SelectionPolicy policy = config_.policy == PolicyKind::kSeededRandom
                                     ? SelectionPolicy::seeded_random(*rng)
                                     : SelectionPolicy::fixed(config_.template_index);
  const UrlStyle style = url_style();
  std::vector<std::u32string> words;
  words.reserve(spans.size());
  for (const auto& span : spans) {
    try {
      words.push_back(utf8_decode(verbalizers_.forms(span, style).choose(policy)));
    } catch (const std::exception&) {
      words.push_back(span.raw);  // leave what cannot be read as written
    }
  }
  return assemble(general, spans, words);
}

std::string Normalizer::normalize_speech(std::string_view text,
                                         std::mt19937_64* rng) const {
  return utf8_encode(normalize_speech(utf8_decode(text), rng));
}

std::string Normalizer::normalize(std::string_view text) const {
  return config_.mode == Mode::kSpeech ? normalize_speech(text)
                                       : normalize_general(text);
}

std::vector<std::string> Normalizer::enumerate_verbalizations(
    std::string_view text) const {
  const std::u32string general = normalize_general(utf8_decode(text));
  const auto spans = speech_spans(general);
  const UrlStyle style = url_style();

  std::vector<std::vector<std::u32string>> options;
  size_t total = 1;
  std::vector<SpokenForms> families;
  families.reserve(spans.size());
  for (const auto& span : spans) {
    try {
      families.push_back(verbalizers_.forms(span, style));
    } catch (const std::exception&) {
      families.push_back(SpokenForms::single(utf8_encode(span.raw)));
    }
    const size_t c = families.back().count();
    total = c > kMaxEnumeration || total > kMaxEnumeration / c
                ? std::numeric_limits<size_t>::max()
                : total * c;
    if (total > kMaxEnumeration) break;
  }
  if (total > kMaxEnumeration) {
    // Finish the count for the message (saturating).
    for (size_t k = families.size(); k < spans.size(); ++k) {
      size_t c = 1;
      try {
        c = verbalizers_.forms(spans[k], style).count();
      } catch (const std::exception&) {
      }
      total = total > std::numeric_limits<size_t>::max() / c
                  ? std::numeric_limits<size_t>::max()
                  : total * c;
    }
    throw EnumerationLimitError(total);
  }
  for (const auto& f : families) {
    std::vector<std::u32string> rendered;
    for (size_t k = 0; k < f.count(); ++k) rendered.push_back(utf8_decode(f.render(k)));
    options.push_back(std::move(rendered));
  }

  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::vector<size_t> choice(spans.size(), 0);
  std::vector<std::u32string> words(spans.size());
  while (true) {
    for (size_t k = 0; k < spans.size(); ++k) words[k] = options[k][choice[k]];
    std::string s = utf8_encode(assemble(general, spans, words));
    if (seen.insert(s).second) out.push_back(std::move(s));
    // Odometer, last span fastest.
    size_t k = spans.size();
    while (k > 0) {
      --k;
      if (++choice[k] < options[k].size()) break;
      choice[k] = 0;
      if (k == 0) return out;
    }
    if (spans.empty()) return out;
  }
}

std::vector<SemioticSpan> Normalizer::scan(std::string_view text) const {
  ScanOptions options;
  options.overlap_calendar = config_.calendar_default;
  return scanner_.scan(normalize_general(utf8_decode(text)), options);
}

std::vector<std::string> Normalizer::split(std::string_view text) const {
  return split_sentences(text, scanner_, lexicon_, segmenter_options());
}

}  // namespace farsinorm
