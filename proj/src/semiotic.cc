#include "farsinorm/semiotic.h"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "farsinorm/utf8.h"

namespace farsinorm {

namespace {

using chars::is_digit;

struct ClassInfo {
  SemioticClass cls;
  std::string_view name;
};

// Listed in priority order.
constexpr std::array<ClassInfo, 16> kClasses = {{
    {SemioticClass::kUrl, "URL"},
    {SemioticClass::kEmail, "EMAIL"},
    {SemioticClass::kSheba, "SHEBA"},
    {SemioticClass::kDate, "DATE"},
    {SemioticClass::kTime, "TIME"},
    {SemioticClass::kPhone, "PHONE"},
    {SemioticClass::kCardNumber, "CARD_NUMBER"},
    {SemioticClass::kNationalId, "NATIONAL_ID"},
    {SemioticClass::kDecimal, "DECIMAL"},
    {SemioticClass::kLongNumber, "LONG_NUMBER"},
    {SemioticClass::kCurrency, "CURRENCY"},
    {SemioticClass::kAbbrevEn, "ABBREV_EN"},
    {SemioticClass::kAbbrevFa, "ABBREV_FA"},
    {SemioticClass::kMathSymbol, "MATH_SYMBOL"},
    {SemioticClass::kSymbol, "SYMBOL"},
    {SemioticClass::kPlainNumber, "PLAIN_NUMBER"},
}};

constexpr std::array<std::u32string_view, 22> kTopLevelDomains = {
    U"com", U"net", U"org", U"ir",  U"edu", U"gov", U"info", U"io",
    U"co",  U"biz", U"me",  U"app", U"dev", U"ai",  U"uk",   U"de",
    U"fr",  U"tv",  U"us",  U"ca",  U"ru",  U"eu"};

bool is_latin_alnum(char32_t c) {
  return chars::is_latin_letter(c) || is_digit(c);
}

char32_t ascii_lower(char32_t c) {
  return chars::is_latin_upper(c) ? c + (U'a' - U'A') : c;
}

bool is_url_char(char32_t c) {
  if (is_latin_alnum(c)) return true;
  return std::u32string_view(U"-._~:/?#[]@!$&'()*+,;=%").find(c) !=
         std::u32string_view::npos;
}

bool is_email_local_char(char32_t c) {
  return is_latin_alnum(c) || c == U'.' || c == U'_' || c == U'%' ||
         c == U'+' || c == U'-';
}

bool is_label_char(char32_t c) { return is_latin_alnum(c) || c == U'-'; }

bool starts_with_ci(std::u32string_view text, size_t pos,
                    std::u32string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (size_t k = 0; k < prefix.size(); ++k) {
    if (ascii_lower(text[pos + k]) != prefix[k]) return false;
  }
  return true;
}

size_t digit_run_end(std::u32string_view text, size_t i) {
  while (i < text.size() && is_digit(text[i])) ++i;
  return i;
}

std::string ascii_digits(std::u32string_view text) {
  std::string out;
  for (char32_t c : text) {
    if (is_digit(c)) out.push_back(static_cast<char>('0' + chars::digit_value(c)));
  }
  return out;
}

int to_int(std::u32string_view digits) {
  int v = 0;
  for (char32_t c : digits) v = v * 10 + chars::digit_value(c);
  return v;
}

// Trims punctuation around a whitespace token so "تماس:" matches "تماس".
std::u32string_view strip_token(std::u32string_view tok) {
  auto is_punct = [](char32_t c) {
    return !chars::is_word_char(c) && !is_digit(c);
  };
  while (!tok.empty() && is_punct(tok.front())) tok.remove_prefix(1);
  while (!tok.empty() && is_punct(tok.back())) tok.remove_suffix(1);
  return tok;
}

std::vector<std::u32string_view> tokens_of(std::u32string_view text) {
  std::vector<std::u32string_view> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && chars::is_space(text[i])) ++i;
    size_t j = i;
    while (j < text.size() && !chars::is_space(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

// True when a cue word is among the nearest `left_n` tokens on the left or
// `right_n` tokens on the right. Cues may span several tokens.
bool cue_near(std::u32string_view left, std::u32string_view right,
              const std::vector<std::u32string>& cues, size_t left_n,
              size_t right_n) {
  const auto lt = tokens_of(left);
  const auto rt = tokens_of(right);
  auto matches_at = [&](const std::vector<std::u32string_view>& toks,
                        size_t k) {
    for (const auto& cue : cues) {
      const auto cue_toks = tokens_of(cue);
      if (cue_toks.empty() || k + cue_toks.size() > toks.size()) continue;
      bool ok = true;
      for (size_t m = 0; m < cue_toks.size() && ok; ++m) {
        ok = strip_token(toks[k + m]) == cue_toks[m];
      }
      if (ok) return true;
    }
    return false;
  };
  for (size_t k = 0; k < std::min(right_n, rt.size()); ++k) {
    if (matches_at(rt, k)) return true;
  }
  for (size_t d = 1; d <= std::min(left_n, lt.size()); ++d) {
    if (matches_at(lt, lt.size() - d)) return true;
  }
  return false;
}

// Cue words are looked up only this far (in code points) from a span.
constexpr size_t kContextWindow = 64;

std::u32string_view context_before(std::u32string_view text, size_t pos) {
  const size_t from = pos > kContextWindow ? pos - kContextWindow : 0;
  return text.substr(from, pos - from);
}

std::u32string_view context_after(std::u32string_view text, size_t pos) {
  return text.substr(pos, kContextWindow);
}

std::vector<std::u32string> first_column(const ResourceBundle& bundle,
                                         std::string_view name) {
  std::vector<std::u32string> out;
  const MappingTable table = MappingTable::parse(bundle.get(name), name);
  for (const auto& e : table.entries()) {
    out.push_back(e.surface);
  }
  return out;
}

bool all_same(std::u32string_view digits) {
  return !digits.empty() &&
         std::all_of(digits.begin(), digits.end(), [&](char32_t c) {
           return chars::digit_value(c) == chars::digit_value(digits[0]);
         });
}

}  // namespace

std::string_view class_name(SemioticClass cls) {
  for (const auto& info : kClasses) {
    if (info.cls == cls) return info.name;
  }
  return "UNKNOWN";
}

std::optional<SemioticClass> class_from_name(std::string_view name) {
  for (const auto& info : kClasses) {
    if (info.name == name) return info.cls;
  }
  return std::nullopt;
}

int class_priority(SemioticClass cls) {
  for (size_t k = 0; k < kClasses.size(); ++k) {
    if (kClasses[k].cls == cls) return static_cast<int>(k);
  }
  return static_cast<int>(kClasses.size());
}

std::string_view calendar_name(Calendar c) {
  switch (c) {
    case Calendar::kSolarHijri: return "SOLAR_HIJRI";
    case Calendar::kGregorian: return "GREGORIAN";
    case Calendar::kLunarHijri: return "LUNAR_HIJRI";
  }
  return "UNKNOWN";
}

bool is_solar_hijri_leap(int year) {
  // 33-year arithmetic cycle.
  return ((25 * static_cast<long long>(year) + 11) % 33) < 8;
}

bool is_gregorian_leap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(Calendar calendar, int year, int month) {
  if (month < 1 || month > 12) return 0;
  switch (calendar) {
    case Calendar::kSolarHijri:
      if (month <= 6) return 31;
      if (month <= 11) return 30;
      return is_solar_hijri_leap(year) ? 30 : 29;
    case Calendar::kGregorian: {
      static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                      31, 31, 30, 31, 30, 31};
      if (month == 2 && is_gregorian_leap(year)) return 29;
      return kDays[month - 1];
    }
    case Calendar::kLunarHijri:
      return 30;
  }
  return 0;
}

bool is_valid_date(const CalendarDate& date) {
  return date.year > 0 && date.day >= 1 &&
         date.day <= days_in_month(date.calendar, date.year, date.month);
}

Calendar infer_calendar(int year, Calendar overlap) {
  if (year >= 1700) return Calendar::kGregorian;
  return overlap;
}

bool is_repeated_digit(std::string_view digits) {
  return !digits.empty() &&
         digits.find_first_not_of(digits[0]) == std::string_view::npos;
}

bool validate_national_id(std::string_view digits) {
  if (digits.size() != 10 ||
      digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("national id must be 10 ASCII digits");
  }
  int sum = 0;
  for (int k = 0; k < 9; ++k) sum += (digits[k] - '0') * (10 - k);
  const int r = sum % 11;
  const int check = r < 2 ? r : 11 - r;
  return digits[9] - '0' == check;
}

bool validate_card(std::string_view digits) {
  if (digits.size() != 16 ||
      digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("card number must be 16 ASCII digits");
  }
  int sum = 0;
  for (size_t k = 0; k < 16; ++k) {
    int d = digits[15 - k] - '0';
    if (k % 2 == 1) {
      d *= 2;
      if (d > 9) d -= 9;
    }
    sum += d;
  }
  return sum % 10 == 0;
}

bool validate_sheba(std::string_view candidate) {
  if (candidate.size() != 26 || candidate.substr(0, 2) != "IR" ||
      candidate.find_first_not_of("0123456789", 2) != std::string_view::npos) {
    return false;
  }
  // Move the country code and check digits to the end, letters as numbers.
  const std::string rearranged =
      std::string(candidate.substr(4)) + "1827" + std::string(candidate.substr(2, 2));
  int rem = 0;
  for (char c : rearranged) rem = (rem * 10 + (c - '0')) % 97;
  return rem == 1;
}

SemioticScanner::SemioticScanner(const ResourceBundle& bundle)
    : symbols_(MappingTable::parse(bundle.get("tables/symbols.tsv"),
                                   "tables/symbols.tsv")),
      currencies_(MappingTable::parse(bundle.get("tables/currencies.tsv"),
                                      "tables/currencies.tsv")),
      math_(MappingTable::parse(bundle.get("tables/math_symbols.tsv"),
                                "tables/math_symbols.tsv")),
      abbreviations_(MappingTable::parse(
          bundle.get("tables/abbreviations_fa.tsv"),
          "tables/abbreviations_fa.tsv")),
      mobile_prefixes_(first_column(bundle, "tables/mobile_prefixes.tsv")),
      area_codes_(first_column(bundle, "tables/area_codes.tsv")),
      phone_cues_(first_column(bundle, "tables/phone_cues.tsv")),
      lunar_cues_(first_column(bundle, "tables/lunar_cues.tsv")) {
  const MappingTable months = MappingTable::parse(
      bundle.get("tables/months_lunar.tsv"), "tables/months_lunar.tsv");
  for (const auto& e : months.entries()) lunar_cues_.push_back(e.replacement);
}

size_t SemioticScanner::area_code_length(std::string_view digits) const {
  const std::u32string d = utf8_decode(digits);
  for (const auto& code : area_codes_) {
    if (d.starts_with(code)) return code.size();
  }
  return 0;
}

std::optional<PhoneKind> SemioticScanner::classify_phone(
    std::string_view digits, std::string_view left_context,
    std::string_view right_context) const {
  const std::u32string d = utf8_decode(digits);
  if (d.empty() || !std::all_of(d.begin(), d.end(), is_digit)) {
    return std::nullopt;
  }
  const std::string ascii = ascii_digits(d);
  const std::u32string ascii32(ascii.begin(), ascii.end());
  if (ascii.size() == 11) {
    for (const auto& p : mobile_prefixes_) {
      if (ascii32.starts_with(p)) return PhoneKind::kMobile;
    }
    if (area_code_length(ascii) != 0) return PhoneKind::kLandline;
    return std::nullopt;
  }
  if (ascii.size() == 8 &&
      cue_near(utf8_decode(left_context), utf8_decode(right_context),
               phone_cues_, 3, 2)) {
    return PhoneKind::kLandline;
  }
  return std::nullopt;
}

bool SemioticScanner::has_cue(std::u32string_view text, size_t start,
                              size_t end,
                              const std::vector<std::u32string>& cues) const {
  return cue_near(context_before(text, start), context_after(text, end), cues,
                  2, 2);
}

void SemioticScanner::find_urls(std::u32string_view text,
                                std::vector<Candidate>& out) const {
  const size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    if (!is_latin_alnum(text[i]) ||
        (i > 0 && (is_latin_alnum(text[i - 1]) || text[i - 1] == U'.' ||
                   text[i - 1] == U'@' || text[i - 1] == U'-' ||
                   text[i - 1] == U'_'))) {
      ++i;
      continue;
    }
    size_t end = 0;
    if (starts_with_ci(text, i, U"http://") ||
        starts_with_ci(text, i, U"https://") ||
        starts_with_ci(text, i, U"ftp://") || starts_with_ci(text, i, U"www.")) {
      end = i;
      while (end < n && is_url_char(text[end])) ++end;
    } else {
      // Bare domain: labels separated by dots, ending in a known TLD.
      size_t j = i;
      size_t last_label = i;
      int labels = 0;
      while (true) {
        const size_t label_start = j;
        while (j < n && is_label_char(text[j])) ++j;
        if (j == label_start) break;
        ++labels;
        last_label = label_start;
        if (j + 1 < n && text[j] == U'.' && is_latin_alnum(text[j + 1])) {
          ++j;
          continue;
        }
        break;
      }
      std::u32string tld;
      for (size_t k = last_label; k < j; ++k) tld.push_back(ascii_lower(text[k]));
      const bool known = std::find(kTopLevelDomains.begin(),
                                   kTopLevelDomains.end(),
                                   tld) != kTopLevelDomains.end();
      if (labels >= 2 && known && (j == n || !is_latin_alnum(text[j])) &&
          (j == n || text[j] != U'@')) {
        end = j;
        if (end < n && text[end] == U'/') {
          while (end < n && is_url_char(text[end])) ++end;
        }
      } else {
        i = std::max(j, i + 1);
        continue;
      }
    }
    // Trailing punctuation belongs to the sentence.
    while (end > i && std::u32string_view(U".,;:!?'\"").find(text[end - 1]) !=
                          std::u32string_view::npos) {
      --end;
    }
    if (end > i && text[end - 1] == U')' &&
        text.substr(i, end - i).find(U'(') == std::u32string_view::npos) {
      --end;
    }
    if (end > i) out.push_back({i, end, SemioticClass::kUrl, {}, {}});
    i = std::max(end, i + 1);
  }
}

void SemioticScanner::find_emails(std::u32string_view text,
                                  std::vector<Candidate>& out) const {
  const size_t n = text.size();
  for (size_t at = 0; at < n; ++at) {
    if (text[at] != U'@') continue;
    size_t s = at;
    while (s > 0 && is_email_local_char(text[s - 1])) --s;
    while (s < at && !is_latin_alnum(text[s])) ++s;
    if (s == at) continue;
    size_t j = at + 1;
    int labels = 0;
    size_t last_label = j;
    while (true) {
      const size_t label_start = j;
      while (j < n && is_label_char(text[j])) ++j;
      if (j == label_start) break;
      ++labels;
      last_label = label_start;
      if (j + 1 < n && text[j] == U'.' && is_latin_alnum(text[j + 1])) {
        ++j;
        continue;
      }
      break;
    }
    if (labels < 2) continue;
    const auto tld = text.substr(last_label, j - last_label);
    if (tld.size() < 2 ||
        !std::all_of(tld.begin(), tld.end(), chars::is_latin_letter)) {
      continue;
    }
    out.push_back({s, j, SemioticClass::kEmail, {}, {}});
  }
}

void SemioticScanner::find_shebas(std::u32string_view text,
                                  std::vector<Candidate>& out) const {
  const size_t n = text.size();
  for (size_t i = 0; i + 2 < n; ++i) {
    if (text[i] != U'I' || text[i + 1] != U'R') continue;
    if (i > 0 && is_latin_alnum(text[i - 1])) continue;
    std::string digits = "IR";
    size_t j = i + 2;
    size_t end = j;
    while (j < n && digits.size() < 26) {
      if (is_digit(text[j])) {
        digits.push_back(static_cast<char>('0' + chars::digit_value(text[j])));
        end = ++j;
      } else if ((text[j] == U' ' || text[j] == U'-') && j + 1 < n &&
                 is_digit(text[j + 1]) && j > i + 2) {
        ++j;
      } else {
        break;
      }
    }
    if (digits.size() != 26 || (end < n && is_digit(text[end]))) continue;
    if (validate_sheba(digits)) {
      out.push_back({i, end, SemioticClass::kSheba, {}, {}});
    }
  }
}

void SemioticScanner::find_numeric(std::u32string_view text,
                                   const ScanOptions& options,
                                   std::vector<Candidate>& out) const {
  const size_t n = text.size();
  // A separator char followed by a digit continues a numeric chain.
  auto sep_digit = [&](size_t k, char32_t sep) {
    return k + 1 < n && text[k] == sep && is_digit(text[k + 1]);
  };
  auto sep_digit_before = [&](size_t start, char32_t sep) {
    return start >= 2 && text[start - 1] == sep && is_digit(text[start - 2]);
  };

  size_t i = 0;
  while (i < n) {
    if (!is_digit(text[i])) {
      ++i;
      continue;
    }
    const size_t e0 = digit_run_end(text, i);
    const size_t len0 = e0 - i;
    const auto run0 = text.substr(i, len0);

    // TIME: h:mm or h:mm:ss.
    if (len0 <= 2 && sep_digit(e0, U':') && !sep_digit_before(i, U':')) {
      const size_t s1 = e0 + 1;
      const size_t e1 = digit_run_end(text, s1);
      if (e1 - s1 == 2) {
        size_t end = e1;
        int second = 0;
        bool has_second = false;
        if (sep_digit(e1, U':')) {
          const size_t e2 = digit_run_end(text, e1 + 1);
          if (e2 - (e1 + 1) == 2) {
            second = to_int(text.substr(e1 + 1, 2));
            has_second = true;
            end = e2;
          } else {
            end = 0;
          }
        }
        if (end != 0 && !sep_digit(end, U':') && to_int(run0) <= 23 &&
            to_int(text.substr(s1, 2)) <= 59 && (!has_second || second <= 59)) {
          out.push_back({i, end, SemioticClass::kTime, {}, {}});
        }
      }
    }

    // DATE: three fields with one consistent separator.
    for (char32_t sep : {U'/', U'-', U'.'}) {
      if (!sep_digit(e0, sep) || sep_digit_before(i, sep)) continue;
      const size_t s1 = e0 + 1, e1 = digit_run_end(text, s1);
      if (!sep_digit(e1, sep)) continue;
      const size_t s2 = e1 + 1, e2 = digit_run_end(text, s2);
      if (sep_digit(e2, sep)) continue;
      const size_t len1 = e1 - s1, len2 = e2 - s2;
      CalendarDate d;
      if (len0 == 4 && len1 <= 2 && len2 <= 2) {
        d.year = to_int(run0);
        d.month = to_int(text.substr(s1, len1));
        d.day = to_int(text.substr(s2, len2));
      } else if (len2 == 4 && len0 <= 2 && len1 <= 2) {
        d.day = to_int(run0);
        d.month = to_int(text.substr(s1, len1));
        d.year = to_int(text.substr(s2, len2));
      } else {
        continue;
      }
      if (d.year < 1000) continue;
      d.calendar = infer_calendar(d.year, options.overlap_calendar);
      if (d.year < 1700 && has_cue(text, i, e2, lunar_cues_)) {
        d.calendar = Calendar::kLunarHijri;
      }
      if (is_valid_date(d)) out.push_back({i, e2, SemioticClass::kDate, d, {}});
    }

    // DECIMAL and fractions: two fields.
    if (sep_digit(e0, U'.') && !sep_digit_before(i, U'.')) {
      const size_t e1 = digit_run_end(text, e0 + 1);
      size_t lead = 0;
      while (lead + 1 < len0 && chars::digit_value(run0[lead]) == 0) ++lead;
      if (!sep_digit(e1, U'.') && len0 - lead <= 15) {
        out.push_back({i, e1, SemioticClass::kDecimal, {}, {}});
      }
    }
    if (sep_digit(e0, U'/') && !sep_digit_before(i, U'/') && len0 <= 3) {
      const size_t e1 = digit_run_end(text, e0 + 1);
      if (!sep_digit(e1, U'/') && e1 - (e0 + 1) <= 3 &&
          to_int(text.substr(e0 + 1, e1 - e0 - 1)) >= 1) {
        out.push_back({i, e1, SemioticClass::kMathSymbol, {}, {}});
      }
    }

    // Card numbers written as four groups of four.
    if (len0 == 4) {
      for (char32_t sep : {U' ', U'-'}) {
        size_t k = e0;
        int groups = 1;
        while (groups < 4 && sep_digit(k, sep)) {
          const size_t e = digit_run_end(text, k + 1);
          if (e - (k + 1) != 4) break;
          k = e;
          ++groups;
        }
        if (groups == 4 && !sep_digit(k, sep) && !(k < n && is_digit(text[k]))) {
          const std::string digits = ascii_digits(text.substr(i, k - i));
          if (validate_card(digits) && !is_repeated_digit(digits)) {
            out.push_back({i, k, SemioticClass::kCardNumber, {}, {}});
          }
        }
      }
    }

    // Landline with a hyphen after the area code: 021-88776655.
    if ((len0 == 3 || len0 == 4) && sep_digit(e0, U'-')) {
      const size_t e1 = digit_run_end(text, e0 + 1);
      const std::string digits =
          ascii_digits(run0) + ascii_digits(text.substr(e0 + 1, e1 - e0 - 1));
      if (digits.size() == 11 && !sep_digit(e1, U'-')) {
        if (auto kind = classify_phone(digits, {}, {})) {
          out.push_back({i, e1, SemioticClass::kPhone, {}, kind});
        }
      }
    }

    // Grouped integers: 1,250,000 or 1.250.000 (dots need two groups so a
    // decimal stays a decimal).
    for (char32_t sep : {U',', U'.'}) {
      if (len0 > 3 || !sep_digit(e0, sep) || sep_digit_before(i, sep)) continue;
      size_t k = e0;
      size_t digits = len0;
      int groups = 0;
      while (sep_digit(k, sep)) {
        const size_t e = digit_run_end(text, k + 1);
        if (e - (k + 1) != 3) break;
        digits += 3;
        ++groups;
        k = e;
      }
      const int min_groups = sep == U'.' ? 2 : 1;
      if (groups >= min_groups && !sep_digit(k, sep) && digits <= 15) {
        out.push_back({i, k, SemioticClass::kPlainNumber, {}, {}});
      }
    }

    // The bare digit run.
    const std::string digits = ascii_digits(run0);
    if (len0 == 16 && validate_card(digits) && !all_same(run0)) {
      out.push_back({i, e0, SemioticClass::kCardNumber, {}, {}});
    }
    if (len0 > 15) {
      out.push_back({i, e0, SemioticClass::kLongNumber, {}, {}});
    } else {
      out.push_back({i, e0, SemioticClass::kPlainNumber, {}, {}});
      if (len0 == 10 && validate_national_id(digits) && !all_same(run0)) {
        out.push_back({i, e0, SemioticClass::kNationalId, {}, {}});
      }
      if (len0 == 11 || len0 == 8) {
        const std::string left = utf8_encode(context_before(text, i));
        const std::string right = utf8_encode(context_after(text, e0));
        if (auto kind = classify_phone(digits, left, right)) {
          out.push_back({i, e0, SemioticClass::kPhone, {}, kind});
        }
      }
    }
    i = e0;
  }
}

void SemioticScanner::find_tables(std::u32string_view text,
                                  std::vector<Candidate>& out) const {
  const size_t n = text.size();
  // Extent of an amount (digits, grouping commas, decimal point) whose last
  // character is at `last` (scanning left) or first at `first` (right).
  auto amount_left = [&](size_t last_excl) {
    size_t s = last_excl;
    while (s > 0 && (is_digit(text[s - 1]) ||
                     ((text[s - 1] == U',' || text[s - 1] == U'.') && s >= 2 &&
                      is_digit(text[s - 2]) && s < last_excl))) {
      --s;
    }
    return s;
  };
  auto amount_right = [&](size_t first) {
    size_t e = first;
    while (e < n && (is_digit(text[e]) ||
                     ((text[e] == U',' || text[e] == U'.') && e + 1 < n &&
                      is_digit(text[e + 1]) && e > first))) {
      ++e;
    }
    return e;
  };

  for (size_t i = 0; i < n; ++i) {
    if (auto m = symbols_.match_at(text, i)) {
      out.push_back({i, i + m->length, SemioticClass::kSymbol, {}, {}});
    }
    if (auto m = math_.match_at(text, i)) {
      out.push_back({i, i + m->length, SemioticClass::kMathSymbol, {}, {}});
    }
    if (auto m = abbreviations_.match_at(text, i)) {
      size_t end = i + m->length;
      // "ر.ک." keeps its closing dot unless the text ends there.
      if (end + 1 < n && text[end] == U'.' && text[end - 1] != U'.') ++end;
      const bool left_ok = i == 0 || !chars::is_word_char(text[i - 1]);
      const bool right_ok = end == n || !chars::is_word_char(text[end]);
      if (left_ok && right_ok) {
        out.push_back({i, end, SemioticClass::kAbbrevFa, {}, {}});
      }
    }
    if (auto m = currencies_.match_at(text, i)) {
      // Amount on the left, amount on the right and the bare sign all
      // compete; a neighbour claimed by another class leaves the others.
      const size_t sign_end = i + m->length;
      size_t before = i;
      if (before > 0 && text[before - 1] == U' ') --before;
      if (before > 0 && is_digit(text[before - 1])) {
        out.push_back({amount_left(before), sign_end, SemioticClass::kCurrency, {}, {}});
      }
      size_t after = sign_end;
      if (after < n && text[after] == U' ') ++after;
      if (after < n && is_digit(text[after])) {
        out.push_back({i, amount_right(after), SemioticClass::kCurrency, {}, {}});
      }
      out.push_back({i, sign_end, SemioticClass::kCurrency, {}, {}});
    }
  }
}

void SemioticScanner::find_latin_abbreviations(
    std::u32string_view text, std::vector<Candidate>& out) const {
  const size_t n = text.size();
  auto blocked = [&](char32_t c) {
    return is_latin_alnum(c) || c == U'.' || c == U'@' || c == U'-' ||
           c == U'_' || c == U'/';
  };
  size_t i = 0;
  while (i < n) {
    if (!chars::is_latin_letter(text[i]) || (i > 0 && blocked(text[i - 1]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n && chars::is_latin_letter(text[j])) ++j;
    const size_t first_len = j - i;

    // Dotted groups: Ph.D, U.S.A., e.g.
    if (first_len <= 3 && j + 1 < n && text[j] == U'.' &&
        chars::is_latin_letter(text[j + 1])) {
      size_t k = j;
      bool ok = true;
      while (k + 1 < n && text[k] == U'.' && chars::is_latin_letter(text[k + 1])) {
        size_t e = k + 1;
        while (e < n && chars::is_latin_letter(text[e])) ++e;
        if (e - (k + 1) > 3) {
          ok = false;
          break;
        }
        k = e;
      }
      if (ok && !(k < n && (is_digit(text[k]) || text[k] == U'@' ||
                            text[k] == U'/' || text[k] == U'-'))) {
        // Keep a final dot unless it ends the text.
        if (k + 1 < n && text[k] == U'.' && !is_latin_alnum(text[k + 1])) ++k;
        out.push_back({i, k, SemioticClass::kAbbrevEn, {}, {}});
        i = k;
        continue;
      }
    }

    // Capitalized tokens: NASA, PhD.
    if (first_len >= 2 && first_len <= 6 && !(j < n && blocked(text[j]))) {
      size_t upper = 0;
      for (size_t k = i; k < j; ++k) upper += chars::is_latin_upper(text[k]);
      if (upper >= 2 && upper + 1 >= first_len) {
        out.push_back({i, j, SemioticClass::kAbbrevEn, {}, {}});
      }
    }
    i = j;
  }
}

std::vector<SemioticSpan> SemioticScanner::scan(std::u32string_view text,
                                                const ScanOptions& options) const {
  std::vector<Candidate> cands;
  find_urls(text, cands);
  find_emails(text, cands);
  find_shebas(text, cands);
  find_numeric(text, options, cands);
  find_tables(text, cands);
  find_latin_abbreviations(text, cands);

  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) {
                     const int pa = class_priority(a.cls);
                     const int pb = class_priority(b.cls);
                     if (pa != pb) return pa < pb;
                     if (a.end - a.start != b.end - b.start) {
                       return a.end - a.start > b.end - b.start;
                     }
                     return a.start < b.start;
                   });
  std::vector<char> taken(text.size(), 0);
  std::vector<SemioticSpan> spans;
  for (const auto& c : cands) {
    if (std::any_of(taken.begin() + static_cast<std::ptrdiff_t>(c.start),
                    taken.begin() + static_cast<std::ptrdiff_t>(c.end),
                    [](char t) { return t != 0; })) {
      continue;
    }
    std::fill(taken.begin() + static_cast<std::ptrdiff_t>(c.start),
              taken.begin() + static_cast<std::ptrdiff_t>(c.end), 1);
    spans.push_back({c.start, c.end, c.cls,
                     std::u32string(text.substr(c.start, c.end - c.start)),
                     c.date, c.phone_kind});
  }
  std::sort(spans.begin(), spans.end(),
            [](const SemioticSpan& a, const SemioticSpan& b) {
              return a.start < b.start;
            });
  return spans;
}

std::vector<SemioticSpan> SemioticScanner::scan(std::string_view text,
                                                const ScanOptions& options) const {
  return scan(utf8_decode(text), options);
}

}  // namespace farsinorm
