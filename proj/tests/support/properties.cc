#include "properties.h"

#include <functional>
#include <random>
#include <sstream>

#include "corpus.h"
#include "farsinorm/number_words.h"
#include "farsinorm/utf8.h"

namespace farsinorm::testing {

namespace {

void fail(PropertyResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char32_t c : utf8_decode(s)) {
    if (!chars::is_space(c)) utf8_append(out, c);
  }
  return out;
}

std::vector<std::string> table_surfaces(const Normalizer& norm) {
  std::vector<std::string> out;
  for (const MappingTable* t : {&norm.scanner().symbols(), &norm.scanner().currencies(),
                                &norm.scanner().math_symbols()}) {
    for (const auto& e : t->entries()) out.push_back(utf8_encode(e.surface));
  }
  return out;
}

}  // namespace

std::string digits_from_reading(const std::string& words) {
  std::vector<std::string> tokens;
  std::istringstream in(words);
  for (std::string t; in >> t;) tokens.push_back(t);
  std::string out;
  for (size_t i = 0; i < tokens.size();) {
    if (tokens[i] == "صفر") {
      out += '0';
      ++i;
      continue;
    }
    std::string chunk = tokens[i++];
    while (i + 1 < tokens.size() && tokens[i] == "و") {
      chunk += " و " + tokens[i + 1];
      i += 2;
    }
    out += std::to_string(words_to_number(chunk));
  }
  return out;
}

PropertyResult check_charset_idempotence(const Normalizer& norm, size_t cases,
                                         uint64_t seed) {
  PropertyResult r{"charset passes are idempotent", 0, 0, {}};
  CorpusGenerator gen(seed, norm.scanner());
  const CharsetUnifier& c = norm.charset();
  const std::pair<const char*, std::function<std::u32string(std::u32string_view)>>
      passes[] = {
          {"fold_characters", [&](std::u32string_view t) { return c.fold_characters(t); }},
          {"fold_digits", [&](std::u32string_view t) { return c.fold_digits(t); }},
          {"fold_punctuation", [&](std::u32string_view t) { return c.fold_punctuation(t); }},
          {"decode_markup_entities",
           [&](std::u32string_view t) { return c.decode_markup_entities(t); }},
          {"strip_emojis", [&](std::u32string_view t) { return c.strip_emojis(t); }},
          {"normalize_general",
           [&](std::u32string_view t) { return norm.normalize_general(t); }},
      };
  for (size_t i = 0; i < cases; ++i) {
    const std::string x = i % 4 == 0 ? gen.sentence() : gen.char_soup();
    const std::u32string u = utf8_decode(x);
    ++r.cases;
    for (const auto& [name, f] : passes) {
      const std::u32string once = f(u);
      if (f(once) != once) {
        fail(r, std::string(name) + ": " + x);
        break;
      }
    }
  }
  return r;
}

PropertyResult check_speech_idempotence(const Normalizer& norm, size_t cases,
                                        uint64_t seed) {
  PropertyResult r{"normalize_speech is idempotent (FIXED)", 0, 0, {}};
  CorpusGenerator gen(seed, norm.scanner());
  for (size_t i = 0; i < cases; ++i) {
    const std::string x = gen.sentence();
    const std::string once = norm.normalize_speech(std::string_view(x));
    ++r.cases;
    if (norm.normalize_speech(std::string_view(once)) != once) fail(r, x);
  }
  return r;
}

PropertyResult check_speech_purity(const Normalizer& norm, size_t cases, uint64_t seed) {
  PropertyResult r{"no digit or table symbol survives normalize_speech", 0, 0, {}};
  CorpusGenerator gen(seed, norm.scanner());
  const auto symbols = table_surfaces(norm);
  for (size_t i = 0; i < cases; ++i) {
    const std::string x = gen.sentence();
    const std::string y = norm.normalize_speech(std::string_view(x));
    ++r.cases;
    bool bad = false;
    for (char32_t ch : utf8_decode(y)) bad = bad || chars::is_digit(ch);
    for (const auto& s : symbols) bad = bad || y.find(s) != std::string::npos;
    bad = bad || y.find("://") != std::string::npos;
    if (bad) fail(r, x + " => " + y);
  }
  return r;
}

PropertyResult check_digit_conservation(const Normalizer& norm, size_t cases,
                                        uint64_t seed) {
  PropertyResult r{"phone and ID readings conserve digits", 0, 0, {}};
  CorpusGenerator gen(seed, norm.scanner());
  const Verbalizers& v = norm.verbalizers();
  for (size_t i = 0; i < cases; ++i) {
    std::string digits;
    std::optional<SpokenForms> forms;
    switch (i % 5) {
      case 0:
        digits = gen.national_id();
        forms = v.grouped_id_forms(digits, SemioticClass::kNationalId);
        break;
      case 1:
        digits = gen.card();
        forms = v.grouped_id_forms(digits, SemioticClass::kCardNumber);
        break;
      case 2:
        digits = gen.mobile();
        forms = v.phone_forms(digits, PhoneKind::kMobile);
        break;
      case 3:
        digits = gen.landline();
        forms = v.phone_forms(digits, PhoneKind::kLandline);
        break;
      default:
        digits = gen.landline().substr(3);
        forms = v.phone_forms(digits, PhoneKind::kLandline);
        break;
    }
    const size_t k = std::uniform_int_distribution<size_t>(0, forms->count() - 1)(gen.rng());
    const std::string reading = forms->render(k);
    ++r.cases;
    std::string back;
    try {
      back = digits_from_reading(reading);
    } catch (const std::exception& e) {
      back = std::string("parse error: ") + e.what();
    }
    if (back != digits) fail(r, digits + " => " + reading + " => " + back);
  }
  return r;
}

PropertyResult check_split_conservation(const Normalizer& norm, size_t cases,
                                        uint64_t seed) {
  PropertyResult r{"split_sentences conserves characters", 0, 0, {}};
  CorpusGenerator gen(seed, norm.scanner());
  std::mt19937_64 len_rng(seed ^ 0x5bd1e995u);
  for (size_t i = 0; i < cases; ++i) {
    const int n = 1 + static_cast<int>(len_rng() % 4);
    const std::string x = gen.paragraph(n);
    std::string joined;
    for (const auto& s : norm.split(x)) joined += s;
    ++r.cases;
    if (strip_spaces(joined) != strip_spaces(x)) fail(r, x);
  }
  return r;
}

PropertyResult check_seeded_determinism(const ResourceBundle& bundle, size_t cases,
                                        uint64_t seed) {
  PropertyResult r{"equal seeds give byte-equal output", 0, 0, {}};
  PipelineConfig config;
  config.policy = PolicyKind::kSeededRandom;
  config.seed = seed;
  const Normalizer a(config, bundle);
  const Normalizer b(config, bundle);
  CorpusGenerator gen(seed, a.scanner());
  for (size_t i = 0; i < cases; ++i) {
    const std::string x = gen.sentence();
    std::mt19937_64 ra(seed + i), rb(seed + i);
    ++r.cases;
    if (a.normalize_speech(std::string_view(x), &ra) !=
            b.normalize_speech(std::string_view(x), &rb) ||
        a.normalize_speech(std::string_view(x)) != b.normalize_speech(std::string_view(x))) {
      fail(r, x);
    }
  }
  return r;
}

std::vector<PropertyResult> run_all_properties(const Normalizer& norm, size_t cases,
                                               uint64_t seed) {
  return {
      check_charset_idempotence(norm, cases, seed),
      check_speech_idempotence(norm, cases, seed + 1),
      check_speech_purity(norm, cases, seed + 2),
      check_digit_conservation(norm, cases, seed + 3),
      check_split_conservation(norm, cases, seed + 4),
      check_seeded_determinism(ResourceBundle::embedded(), cases, seed + 5),
  };
}

}  // namespace farsinorm::testing
