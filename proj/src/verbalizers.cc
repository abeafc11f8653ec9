#include "farsinorm/verbalizers.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "farsinorm/number_words.h"
#include "farsinorm/utf8.h"

namespace farsinorm {

namespace {

constexpr size_t kSaturated = std::numeric_limits<size_t>::max();

size_t sat_add(size_t a, size_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::string ascii_digits(std::u32string_view text) {
  std::string out;
  for (char32_t c : text) {
    if (chars::is_digit(c)) {
      out.push_back(static_cast<char>('0' + chars::digit_value(c)));
    }
  }
  return out;
}

std::string ascii_digits(std::string_view text) {
  return ascii_digits(utf8_decode(text));
}

std::string to_utf8(std::u32string_view s) { return utf8_encode(s); }

MappingTable load(const ResourceBundle& bundle, std::string_view name) {
  return MappingTable::parse(bundle.get(name), name);
}

void append_word(std::string& out, std::string_view word) {
  if (word.empty()) return;
  if (!out.empty()) out.push_back(' ');
  out += word;
}

// Digit strings of any length: up to 15 significant digits as a number
// (keeping leading zeros), otherwise one digit at a time.
std::string read_digit_run(const std::string& ascii) {
  size_t lead = 0;
  while (lead < ascii.size() && ascii[lead] == '0') ++lead;
  if (ascii.size() - lead <= 15) return digit_string_words(ascii).text;
  const std::vector<int> ones(ascii.size(), 1);
  return grouped_digit_words(ascii, ones).text;
}

MappingTable fractions_of(const MappingTable& punctuation) {
  MappingTable out;
  for (const auto& e : punctuation.entries()) {
    if (e.replacement.find(U'/') != std::u32string::npos) {
      out.add(e.surface, e.replacement);
    }
  }
  return out;
}

SpokenForms grouped_forms(std::string prefix_words, std::string digits) {
  const size_t n = digits.size();
  if (n <= 1) {
    std::string text = prefix_words;
    if (n == 1) {
      const int one[] = {1};
      append_word(text, grouped_digit_words(digits, one).text);
    }
    return SpokenForms::single(std::move(text));
  }
  return SpokenForms(digit_grouping_count(n),
                     [prefix = std::move(prefix_words),
                      digits = std::move(digits)](size_t k) {
                       const auto sizes = digit_grouping(digits.size(), k);
                       std::string text = prefix;
                       append_word(text, grouped_digit_words(digits, sizes).text);
                       return text;
                     });
}

}  // namespace

// --- SelectionPolicy --------------------------------------------------------

SelectionPolicy SelectionPolicy::fixed(size_t index) {
  return SelectionPolicy(Mode::kFixed, index, nullptr);
}

SelectionPolicy SelectionPolicy::seeded_random(std::mt19937_64& rng) {
  return SelectionPolicy(Mode::kSeededRandom, 0, &rng);
}

SelectionPolicy SelectionPolicy::enumerate_all() {
  return SelectionPolicy(Mode::kEnumerateAll, 0, nullptr);
}

size_t SelectionPolicy::pick(size_t count) const {
  if (count == 0) throw std::invalid_argument("no alternatives to pick from");
  switch (mode_) {
    case Mode::kFixed:
      return index_ % count;
    case Mode::kSeededRandom:
      return std::uniform_int_distribution<size_t>(0, count - 1)(*rng_);
    case Mode::kEnumerateAll:
      break;
  }
  throw std::logic_error("ENUMERATE_ALL selects every form, not one");
}

// --- SpokenForms -----------------------------------------------------------

SpokenForms::SpokenForms(size_t count, std::function<std::string(size_t)> render)
    : count_(count), render_(std::move(render)) {
  if (count_ == 0) throw std::invalid_argument("empty spoken-form family");
}

SpokenForms SpokenForms::single(std::string text) {
  return SpokenForms(1, [text = std::move(text)](size_t) { return text; });
}

std::string SpokenForms::render(size_t k) const {
  if (k >= count_) throw std::out_of_range("spoken form index out of range");
  return render_(k);
}

std::string SpokenForms::choose(const SelectionPolicy& policy) const {
  return render_(policy.pick(count_));
}

// --- TemplateSet -----------------------------------------------------------

TemplateSet TemplateSet::parse(std::string_view text, std::string_view name) {
  TemplateSet set;
  for (std::string_view line : resource_lines(text)) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    if (line.empty()) continue;
    int depth = 0;
    for (char c : line) {
      depth += c == '{' ? 1 : c == '}' ? -1 : 0;
      if (depth < 0 || depth > 1) {
        throw ResourceError(std::string(name) + ": unbalanced braces in \"" +
                            std::string(line) + "\"");
      }
    }
    if (depth != 0) {
      throw ResourceError(std::string(name) + ": unbalanced braces in \"" +
                          std::string(line) + "\"");
    }
    set.templates_.emplace_back(line);
  }
  if (set.templates_.empty()) {
    throw ResourceError(std::string(name) + ": no templates");
  }
  return set;
}

std::vector<std::string> TemplateSet::slots(size_t k) const {
  const std::string& t = templates_.at(k);
  std::vector<std::string> out;
  size_t pos = 0;
  while ((pos = t.find('{', pos)) != std::string::npos) {
    const size_t close = t.find('}', pos);
    out.push_back(t.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  return out;
}

std::string TemplateSet::instantiate(
    size_t k, const std::map<std::string, std::string>& values) const {
  const std::string& t = templates_.at(k);
  std::string out;
  size_t pos = 0;
  while (pos < t.size()) {
    const size_t open = t.find('{', pos);
    if (open == std::string::npos) {
      out.append(t, pos);
      break;
    }
    out.append(t, pos, open - pos);
    const size_t close = t.find('}', open);
    const std::string slot = t.substr(open + 1, close - open - 1);
    const auto it = values.find(slot);
    if (it == values.end()) {
      throw std::invalid_argument("template slot {" + slot + "} has no value");
    }
    out += it->second;
    pos = close + 1;
  }
  return out;
}

// --- digit groupings -------------------------------------------------------

size_t digit_grouping_count(size_t n) {
  // f(n) = f(n-2) + f(n-3), f(0) = 1, f(1) = 0.
  std::vector<size_t> f(std::max<size_t>(n + 1, 3), 0);
  f[0] = 1;
  f[1] = 0;
  f[2] = 1;
  for (size_t m = 3; m <= n; ++m) f[m] = sat_add(f[m - 2], f[m - 3]);
  return f[n];
}

std::vector<int> digit_grouping(size_t n, size_t k) {
  std::vector<size_t> f(std::max<size_t>(n + 1, 3), 0);
  f[0] = 1;
  f[2] = 1;
  for (size_t m = 3; m <= n; ++m) f[m] = sat_add(f[m - 2], f[m - 3]);
  if (f[n] == 0 || k >= f[n]) {
    throw std::out_of_range("digit grouping index out of range");
  }
  std::vector<int> parts;
  size_t rest = n;
  while (rest > 0) {
    const size_t with_two = rest >= 2 ? f[rest - 2] : 0;
    if (k < with_two) {
      parts.push_back(2);
      rest -= 2;
    } else {
      k -= with_two;
      parts.push_back(3);
      rest -= 3;
    }
  }
  return parts;
}

// --- Verbalizers -----------------------------------------------------------

Verbalizers::Verbalizers(const ResourceBundle& bundle)
    : date_templates_(TemplateSet::parse(bundle.get("templates/date.tpl"),
                                         "templates/date.tpl")),
      time_templates_(TemplateSet::parse(bundle.get("templates/time.tpl"),
                                         "templates/time.tpl")),
      months_solar_(load(bundle, "tables/months_solar.tsv")),
      months_gregorian_(load(bundle, "tables/months_gregorian.tsv")),
      months_lunar_(load(bundle, "tables/months_lunar.tsv")),
      symbols_(load(bundle, "tables/symbols.tsv")),
      currencies_(load(bundle, "tables/currencies.tsv")),
      math_(load(bundle, "tables/math_symbols.tsv")),
      abbreviations_(load(bundle, "tables/abbreviations_fa.tsv")),
      letter_names_(load(bundle, "tables/latin_letter_names.tsv")),
      url_latin_(load(bundle, "tables/url_words_latin.tsv")),
      url_persian_(load(bundle, "tables/url_words_persian.tsv")),
      fraction_chars_(fractions_of(load(bundle, "tables/punctuation.tsv"))) {
  for (const auto* months : {&months_solar_, &months_gregorian_, &months_lunar_}) {
    for (int m = 1; m <= 12; ++m) {
      if (!months->contains(utf8_decode(std::to_string(m)))) {
        throw ResourceError("month table is missing month " + std::to_string(m));
      }
    }
  }
  for (char c = 'A'; c <= 'Z'; ++c) {
    if (!letter_names_.contains(std::u32string(1, static_cast<char32_t>(c)))) {
      throw ResourceError(std::string("latin_letter_names.tsv lacks ") + c);
    }
  }
}

std::string Verbalizers::month_name(Calendar c, int month) const {
  const MappingTable& table = c == Calendar::kSolarHijri   ? months_solar_
                              : c == Calendar::kGregorian ? months_gregorian_
                                                          : months_lunar_;
  return to_utf8(*table.lookup(utf8_decode(std::to_string(month))));
}

SpokenForms Verbalizers::date_forms(const CalendarDate& d) const {
  if (!is_valid_date(d)) throw std::invalid_argument("invalid calendar date");
  std::map<std::string, std::string> values = {
      {"day_ordinal",
       ordinal_words(static_cast<uint64_t>(d.day), FirstOrdinal::kAval).text},
      {"day_cardinal", cardinal_words(static_cast<uint64_t>(d.day)).text},
      {"month_name", month_name(d.calendar, d.month)},
      {"month_cardinal", cardinal_words(static_cast<uint64_t>(d.month)).text},
      {"year_cardinal", cardinal_words(static_cast<uint64_t>(d.year)).text},
  };
  return SpokenForms(date_templates_.size(),
                     [this, values = std::move(values)](size_t k) {
                       return date_templates_.instantiate(k, values);
                     });
}

std::string Verbalizers::verbalize_date(const CalendarDate& d,
                                        const SelectionPolicy& policy) const {
  return date_forms(d).choose(policy);
}

SpokenForms Verbalizers::time_forms(int hour, int minute,
                                    std::optional<int> second) const {
  if (hour < 0 || hour > 23 || minute < 0 || minute > 59 ||
      (second && (*second < 0 || *second > 59))) {
    throw std::out_of_range("clock field out of range");
  }
  std::vector<std::string> wanted = {"hour"};
  if (second) {
    wanted = {"hour", "minute", "second"};
  } else if (minute != 0) {
    wanted = {"hour", "minute"};
  }
  std::vector<size_t> usable;
  for (size_t k = 0; k < time_templates_.size(); ++k) {
    auto slots = time_templates_.slots(k);
    std::sort(slots.begin(), slots.end());
    auto sorted_wanted = wanted;
    std::sort(sorted_wanted.begin(), sorted_wanted.end());
    if (slots == sorted_wanted) usable.push_back(k);
  }
  if (usable.empty()) {
    throw ResourceError("templates/time.tpl has no template for this time shape");
  }
  std::map<std::string, std::string> values = {
      {"hour", cardinal_words(static_cast<uint64_t>(hour)).text},
      {"minute", cardinal_words(static_cast<uint64_t>(minute)).text},
  };
  if (second) values["second"] = cardinal_words(static_cast<uint64_t>(*second)).text;
  return SpokenForms(usable.size(), [this, usable, values = std::move(values)](
                                        size_t k) {
    return time_templates_.instantiate(usable[k], values);
  });
}

std::string Verbalizers::verbalize_time(int hour, int minute,
                                        std::optional<int> second,
                                        const SelectionPolicy& policy) const {
  return time_forms(hour, minute, second).choose(policy);
}

SpokenForms Verbalizers::phone_forms(std::string_view digits_in,
                                     PhoneKind kind) const {
  std::string digits = ascii_digits(digits_in);
  if (kind == PhoneKind::kMobile) {
    if (digits.size() != 11) {
      throw std::invalid_argument("mobile numbers have 11 digits");
    }
    const int four[] = {4};
    std::string prefix = grouped_digit_words(digits.substr(0, 4), four).text;
    return grouped_forms(std::move(prefix), digits.substr(4));
  }
  if (digits.size() == 11) {
    const int three[] = {3};
    std::string prefix = grouped_digit_words(digits.substr(0, 3), three).text;
    return grouped_forms(std::move(prefix), digits.substr(3));
  }
  if (digits.size() == 8) return grouped_forms({}, digits);
  throw std::invalid_argument("landline numbers have 8 or 11 digits");
}

std::string Verbalizers::verbalize_phone(std::string_view digits, PhoneKind kind,
                                         const SelectionPolicy& policy) const {
  return phone_forms(digits, kind).choose(policy);
}

SpokenForms Verbalizers::grouped_id_forms(std::string_view raw,
                                          SemioticClass cls) const {
  std::string digits = ascii_digits(raw);
  switch (cls) {
    case SemioticClass::kNationalId:
      if (digits.size() != 10 || !validate_national_id(digits)) {
        throw std::invalid_argument("invalid national id");
      }
      return grouped_forms({}, std::move(digits));
    case SemioticClass::kCardNumber:
      if (digits.size() != 16 || !validate_card(digits)) {
        throw std::invalid_argument("invalid card number");
      }
      return grouped_forms({}, std::move(digits));
    case SemioticClass::kSheba: {
      const std::u32string r = utf8_decode(raw);
      if (r.size() < 2 || !validate_sheba("IR" + digits) ||
          (r[0] != U'I' && r[0] != U'i') || (r[1] != U'R' && r[1] != U'r')) {
        throw std::invalid_argument("invalid sheba number");
      }
      return grouped_forms(spell_latin(U"IR", U' '), std::move(digits));
    }
    case SemioticClass::kLongNumber:
      if (digits.empty()) throw std::invalid_argument("no digits");
      return grouped_forms({}, std::move(digits));
    default:
      throw std::invalid_argument("not a grouped-digit class");
  }
}

std::string Verbalizers::verbalize_grouped_id(std::string_view raw,
                                              SemioticClass cls,
                                              const SelectionPolicy& policy) const {
  return grouped_id_forms(raw, cls).choose(policy);
}

std::string Verbalizers::verbalize_symbol(std::string_view token,
                                          SemioticClass cls) const {
  const std::u32string t = utf8_decode(token);
  const MappingTable* table = nullptr;
  switch (cls) {
    case SemioticClass::kSymbol: table = &symbols_; break;
    case SemioticClass::kCurrency: table = &currencies_; break;
    case SemioticClass::kMathSymbol: table = &math_; break;
    default: throw std::invalid_argument("not a symbol class");
  }
  if (auto r = table->lookup(t)) return to_utf8(*r);
  if (cls == SemioticClass::kMathSymbol) {
    std::u32string frac = t;
    if (auto f = fraction_chars_.lookup(t)) frac = *f;
    const size_t slash = frac.find(U'/');
    if (slash != std::u32string::npos && slash > 0 && slash + 1 < frac.size()) {
      const auto num = frac.substr(0, slash);
      const auto den = frac.substr(slash + 1);
      auto all_digits = [](std::u32string_view s) {
        return std::all_of(s.begin(), s.end(), chars::is_digit);
      };
      if (all_digits(num) && all_digits(den)) {
        const uint64_t d = std::stoull(ascii_digits(den));
        if (d >= 1) {
          return verbalize_plain_number(to_utf8(num)) + " " +
                 ordinal_words(d).text;
        }
      }
    }
  }
  throw std::invalid_argument("unknown symbol: " + std::string(token));
}

std::string Verbalizers::spell_latin(std::u32string_view token, char32_t joiner) const {
  std::string out;
  for (char32_t c : token) {
    if (!chars::is_latin_letter(c)) continue;
    const char32_t upper = chars::is_latin_lower(c) ? c - (U'a' - U'A') : c;
    if (!out.empty()) utf8_append(out, joiner);
    out += to_utf8(*letter_names_.lookup(std::u32string(1, upper)));
  }
  return out;
}

std::string Verbalizers::expand_abbreviation(std::string_view token) const {
  const std::u32string t = utf8_decode(token);
  if (auto r = abbreviations_.lookup(t)) return to_utf8(*r);
  if (t.size() > 1 && t.back() == U'.') {
    if (auto r = abbreviations_.lookup(t.substr(0, t.size() - 1))) return to_utf8(*r);
  }
  size_t letters = 0;
  bool dotted = false;
  for (char32_t c : t) {
    if (chars::is_latin_letter(c)) {
      ++letters;
    } else if (c == U'.') {
      dotted = true;
    } else {
      return std::string(token);
    }
  }
  if (letters == 0 || (letters == 1 && !dotted)) return std::string(token);
  return spell_latin(t);
}

std::string Verbalizers::verbalize_url_email(std::string_view raw,
                                             const UrlStyle& style) const {
  const MappingTable& words = style.persian_words ? url_persian_ : url_latin_;
  std::u32string text;
  for (char32_t c : utf8_decode(raw)) {
    if (chars::is_latin_upper(c)) c += U'a' - U'A';
    if (chars::is_digit(c)) c = U'0' + static_cast<char32_t>(chars::digit_value(c));
    text.push_back(c);
  }

  std::string out;
  std::u32string_view rest = text;
  const size_t scheme_end = rest.find(U"://");
  if (scheme_end != std::u32string_view::npos && scheme_end > 0 &&
      std::all_of(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(scheme_end),
                  chars::is_latin_letter)) {
    append_word(out, to_utf8(rest.substr(0, scheme_end)));
    append_word(out, to_utf8(*words.lookup(U"://")));
    rest.remove_prefix(scheme_end + 3);
  }
  if (rest.find(U'@') == std::u32string_view::npos) {
    const size_t path_start = rest.find_first_of(U"/?#");
    if (path_start != std::u32string_view::npos) {
      std::u32string_view path = rest.substr(path_start);
      if (path.size() > 10 || path.find(U'%') != std::u32string_view::npos) {
        rest = rest.substr(0, path_start);
      } else {
        while (!rest.empty() && rest.back() == U'/') rest.remove_suffix(1);
      }
    }
  }

  size_t i = 0;
  while (i < rest.size()) {
    if (auto m = words.match_at(rest, i)) {
      append_word(out, to_utf8(*m->replacement));
      i += m->length;
      continue;
    }
    const char32_t c = rest[i];
    if (chars::is_digit(c) && style.read_digits) {
      size_t j = i;
      while (j < rest.size() && chars::is_digit(rest[j])) ++j;
      append_word(out, read_digit_run(to_utf8(rest.substr(i, j - i))));
      i = j;
      continue;
    }
    auto word_char = [&](char32_t x) {
      return chars::is_latin_letter(x) || chars::is_word_char(x) ||
             (chars::is_digit(x) && !style.read_digits);
    };
    if (word_char(c)) {
      size_t j = i;
      while (j < rest.size() && word_char(rest[j])) ++j;
      append_word(out, to_utf8(rest.substr(i, j - i)));
      i = j;
      continue;
    }
    ++i;  // unknown punctuation is not read
  }
  return out;
}

std::string Verbalizers::verbalize_plain_number(std::string_view raw) const {
  const std::string digits = ascii_digits(raw);
  if (digits.empty()) throw std::invalid_argument("no digits in number");
  if (digits.size() > 1 && digits[0] == '0') return read_digit_run(digits);
  if (digits.size() > 15) return read_digit_run(digits);
  return cardinal_words(std::stoull(digits)).text;
}

std::string Verbalizers::verbalize_decimal(std::string_view raw) const {
  const std::u32string t = utf8_decode(raw);
  const size_t dot = t.find(U'.');
  if (dot == std::u32string::npos) return verbalize_plain_number(raw);
  return decimal_words(ascii_digits(t.substr(0, dot)),
                       ascii_digits(t.substr(dot + 1)))
      .text;
}

std::string Verbalizers::verbalize_currency(std::string_view raw) const {
  const std::u32string t = utf8_decode(raw);
  std::string sign;
  std::u32string amount;
  size_t i = 0;
  while (i < t.size()) {
    if (sign.empty()) {
      if (auto m = currencies_.match_at(t, i)) {
        sign = to_utf8(*m->replacement);
        i += m->length;
        continue;
      }
    }
    if (chars::is_digit(t[i]) || t[i] == U'.' || t[i] == U',') amount.push_back(t[i]);
    ++i;
  }
  if (sign.empty()) throw std::invalid_argument("no currency sign in " + std::string(raw));
  if (amount.empty()) return sign;
  const std::string amount_utf8 = to_utf8(amount);
  const std::string words = amount.find(U'.') != std::u32string::npos
                                ? verbalize_decimal(amount_utf8)
                                : verbalize_plain_number(amount_utf8);
  return words + " " + sign;
}

SpokenForms Verbalizers::forms(const SemioticSpan& span,
                               const UrlStyle& style) const {
  const std::string raw = to_utf8(span.raw);
  switch (span.cls) {
    case SemioticClass::kDate:
      if (!span.date) throw std::invalid_argument("date span without fields");
      return date_forms(*span.date);
    case SemioticClass::kTime: {
      std::vector<int> fields;
      int cur = -1;
      for (char32_t c : span.raw) {
        if (chars::is_digit(c)) {
          cur = (cur < 0 ? 0 : cur * 10) + chars::digit_value(c);
        } else if (cur >= 0) {
          fields.push_back(cur);
          cur = -1;
        }
      }
      if (cur >= 0) fields.push_back(cur);
      if (fields.size() < 2) throw std::invalid_argument("malformed time");
      return time_forms(fields[0], fields[1],
                        fields.size() > 2 ? std::optional<int>(fields[2])
                                          : std::nullopt);
    }
    case SemioticClass::kPhone:
      return phone_forms(raw, span.phone_kind.value_or(PhoneKind::kLandline));
    case SemioticClass::kNationalId:
    case SemioticClass::kCardNumber:
    case SemioticClass::kSheba:
    case SemioticClass::kLongNumber:
      return grouped_id_forms(raw, span.cls);
    case SemioticClass::kUrl:
    case SemioticClass::kEmail:
      return SpokenForms::single(verbalize_url_email(raw, style));
    case SemioticClass::kCurrency:
      return SpokenForms::single(verbalize_currency(raw));
    case SemioticClass::kSymbol:
    case SemioticClass::kMathSymbol:
      return SpokenForms::single(verbalize_symbol(raw, span.cls));
    case SemioticClass::kAbbrevFa:
    case SemioticClass::kAbbrevEn:
      return SpokenForms::single(expand_abbreviation(raw));
    case SemioticClass::kPlainNumber:
      return SpokenForms::single(verbalize_plain_number(raw));
    case SemioticClass::kDecimal:
      return SpokenForms::single(verbalize_decimal(raw));
  }
  throw std::invalid_argument("unknown class");
}

}  // namespace farsinorm
