#include "farsinorm/number_words.h"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "farsinorm/utf8.h"

namespace farsinorm {

namespace {

constexpr std::array<std::string_view, 20> kBelowTwenty = {
    "صفر",   "یک",    "دو",    "سه",    "چهار",   "پنج",   "شش",
    "هفت",   "هشت",   "نه",    "ده",    "یازده",  "دوازده", "سیزده",
    "چهارده", "پانزده", "شانزده", "هفده", "هجده", "نوزده"};

constexpr std::array<std::string_view, 10> kTens = {
    "", "", "بیست", "سی", "چهل", "پنجاه", "شصت", "هفتاد", "هشتاد", "نود"};

constexpr std::array<std::string_view, 10> kHundreds = {
    "",      "صد",    "دویست", "سیصد",  "چهارصد",
    "پانصد", "ششصد", "هفتصد", "هشتصد", "نهصد"};

constexpr std::string_view kAnd = " و ";
constexpr std::string_view kThousand = "هزار";
constexpr std::string_view kMillion = "میلیون";
constexpr std::string_view kMilliard = "میلیارد";

// Place-value words for 1, 2 and 3 fraction digits.
constexpr std::array<std::string_view, 3> kFractionPlaces = {"دهم", "صدم",
                                                             "هزارم"};

void join(std::string& out, std::string_view part) {
  if (!out.empty()) out += kAnd;
  out += part;
}

std::string below_thousand(unsigned v) {
  std::string out;
  if (v >= 100) join(out, kHundreds[v / 100]);
  const unsigned rest = v % 100;
  if (rest == 0) return out;
  if (rest < 20) {
    join(out, kBelowTwenty[rest]);
  } else {
    join(out, kTens[rest / 10]);
    if (rest % 10 != 0) join(out, kBelowTwenty[rest % 10]);
  }
  return out;
}

// Values below one million: "<t> هزار و <rest>", dropping a lone one.
std::string below_million(uint64_t v) {
  std::string out;
  const auto thousands = static_cast<unsigned>(v / 1000);
  if (thousands == 1) {
    join(out, kThousand);
  } else if (thousands > 1) {
    join(out, below_thousand(thousands) + " " + std::string(kThousand));
  }
  if (v % 1000 != 0) join(out, below_thousand(static_cast<unsigned>(v % 1000)));
  return out;
}

// Extracts ASCII digits from ASCII/Persian/Arabic-Indic digit text.
std::string ascii_digits(std::string_view text, const char* what) {
  std::string out;
  for (char32_t c : utf8_decode(text)) {
    const int d = chars::digit_value(c);
    if (d < 0) {
      throw std::invalid_argument(std::string(what) + ": not a digit string");
    }
    out.push_back(static_cast<char>('0' + d));
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty");
  return out;
}

uint64_t parse_u64(std::string_view ascii) {
  // Caller guarantees at most 15 significant digits.
  uint64_t v = 0;
  for (char c : ascii) v = v * 10 + static_cast<uint64_t>(c - '0');
  return v;
}

std::string digit_string_words_ascii(std::string_view ascii) {
  size_t zeros = 0;
  while (zeros < ascii.size() && ascii[zeros] == '0') ++zeros;
  std::string out;
  for (size_t i = 0; i < zeros; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += kBelowTwenty[0];
  }
  if (zeros == ascii.size()) return out;
  const std::string_view rest = ascii.substr(zeros);
  if (rest.size() > 15) {
    throw std::out_of_range("digit string longer than 15 significant digits");
  }
  if (!out.empty()) out.push_back(' ');
  out += cardinal_words(parse_u64(rest)).text;
  return out;
}

}  // namespace

NumberWords cardinal_words(uint64_t n) {
  if (n >= kMaxCardinal) {
    throw std::out_of_range("cardinal_words: value must be below 10^15");
  }
  NumberWords result{std::string(), std::to_string(n)};
  if (n == 0) {
    result.text = kBelowTwenty[0];
    return result;
  }
  std::string& out = result.text;
  const uint64_t milliards = n / 1'000'000'000ULL;
  const auto millions = static_cast<unsigned>((n / 1'000'000ULL) % 1000);
  const uint64_t rest = n % 1'000'000ULL;
  if (milliards != 0) {
    join(out, below_million(milliards) + " " + std::string(kMilliard));
  }
  if (millions != 0) {
    join(out, below_thousand(millions) + " " + std::string(kMillion));
  }
  if (rest != 0) join(out, below_million(rest));
  return result;
}

NumberWords ordinal_words(uint64_t n, FirstOrdinal first) {
  if (n == 0) throw std::out_of_range("ordinal_words: n must be positive");
  NumberWords result = cardinal_words(n);
  std::string& text = result.text;
  if (n == 1) {
    text = first == FirstOrdinal::kAval ? "اول" : "یکم";
    return result;
  }
  const size_t cut = text.rfind(' ');
  const size_t start = cut == std::string::npos ? 0 : cut + 1;
  const std::string_view last = std::string_view(text).substr(start);
  if (last == "سه") {
    text.replace(start, std::string::npos, "سوم");
  } else if (last == "سی") {
    text += "\u200Cام";
  } else {
    text += "م";
  }
  return result;
}

NumberWords decimal_words(std::string_view integer_part,
                          std::string_view fraction_part) {
  const std::string whole = ascii_digits(integer_part, "decimal integer part");
  const std::string frac = ascii_digits(fraction_part, "decimal fraction part");
  size_t zeros = 0;
  while (zeros + 1 < whole.size() && whole[zeros] == '0') ++zeros;
  const std::string_view significant = std::string_view(whole).substr(zeros);
  if (significant.size() > 15) {
    throw std::out_of_range("decimal_words: integer part too large");
  }
  NumberWords result{cardinal_words(parse_u64(significant)).text,
                     whole + "." + frac};
  result.text += " ممیز ";
  if (frac.size() <= kFractionPlaces.size()) {
    result.text += cardinal_words(parse_u64(frac)).text;
    result.text += ' ';
    result.text += kFractionPlaces[frac.size() - 1];
  } else {
    for (size_t i = 0; i < frac.size(); ++i) {
      if (i != 0) result.text.push_back(' ');
      result.text += kBelowTwenty[static_cast<size_t>(frac[i] - '0')];
    }
  }
  return result;
}

NumberWords digit_string_words(std::string_view digits) {
  const std::string ascii = ascii_digits(digits, "digit string");
  return {digit_string_words_ascii(ascii), ascii};
}

NumberWords grouped_digit_words(std::string_view digits,
                                std::span<const int> group_sizes) {
  const std::string ascii = ascii_digits(digits, "grouped digits");
  size_t total = 0;
  for (int size : group_sizes) {
    if (size < 1 || size > 4) {
      throw std::invalid_argument("group sizes must be in 1..4");
    }
    total += static_cast<size_t>(size);
  }
  if (total != ascii.size()) {
    throw std::invalid_argument("group sizes do not add up to digit count");
  }
  NumberWords result{std::string(), ascii};
  size_t pos = 0;
  for (int size : group_sizes) {
    if (!result.text.empty()) result.text.push_back(' ');
    result.text += digit_string_words_ascii(
        std::string_view(ascii).substr(pos, static_cast<size_t>(size)));
    pos += static_cast<size_t>(size);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Inverse parser. Written against the grammar, not against the generator:
//
//   number   := "صفر" | term ("و" term)*
//   term     := word | word scale | "هزار" | word "هزار" "میلیارد"
//             | "هزار" "میلیارد"
//
// Consecutive unscaled terms form a group (hundreds, then tens, then units,
// or a teen) whose value the next scale word multiplies. Scales must appear
// in strictly decreasing rank; a هزار followed later by میلیارد belongs to
// the milliard amount.

namespace {

enum class Category { kHundreds, kTens, kTeen, kUnit };

struct WordValue {
  unsigned value;
  Category category;
};

std::optional<WordValue> small_word(std::string_view w) {
  for (unsigned i = 1; i < 10; ++i) {
    if (w == kBelowTwenty[i]) return WordValue{i, Category::kUnit};
  }
  for (unsigned i = 10; i < 20; ++i) {
    if (w == kBelowTwenty[i]) return WordValue{i, Category::kTeen};
  }
  for (unsigned i = 2; i < 10; ++i) {
    if (w == kTens[i]) return WordValue{i * 10, Category::kTens};
  }
  for (unsigned i = 1; i < 10; ++i) {
    if (w == kHundreds[i]) return WordValue{i * 100, Category::kHundreds};
  }
  return std::nullopt;
}

bool may_follow(Category prev, Category next) {
  switch (prev) {
    case Category::kHundreds:
      return next != Category::kHundreds;
    case Category::kTens:
      return next == Category::kUnit;
    default:
      return false;
  }
}

[[noreturn]] void reject(std::string_view why) {
  throw std::invalid_argument("words_to_number: " + std::string(why));
}

struct Group {
  unsigned value = 0;
  int size = 0;
  Category last = Category::kUnit;

  void push(const WordValue& w) {
    if (size > 0 && !may_follow(last, w.category)) reject("misordered words");
    value += w.value;
    last = w.category;
    ++size;
  }
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

uint64_t words_to_number(std::string_view words) {
  const std::vector<std::string_view> tokens = split_ws(words);
  if (tokens.empty()) reject("empty input");
  if (tokens.size() == 1 && tokens[0] == kBelowTwenty[0]) return 0;

  std::vector<std::vector<std::string_view>> terms(1);
  for (std::string_view t : tokens) {
    if (t == "و") {
      if (terms.back().empty()) reject("dangling conjunction");
      terms.emplace_back();
    } else {
      terms.back().push_back(t);
    }
  }
  if (terms.back().empty()) reject("dangling conjunction");

  auto mentions_milliard = [&](size_t from) {
    for (size_t k = from; k < terms.size(); ++k) {
      for (std::string_view t : terms[k]) {
        if (t == kMilliard) return true;
      }
    }
    return false;
  };

  // Ranks: 5 = thousands of milliards, 4 = milliards, 3 = millions,
  // 2 = thousands, 1 = units.
  int prev_rank = 6;
  uint64_t total = 0;
  uint64_t milliard_thousands = 0;
  Group group;

  auto close = [&](int rank, bool implicit_one) -> uint64_t {
    if (rank >= prev_rank) reject("scale words out of order");
    prev_rank = rank;
    uint64_t g = group.value;
    if (group.size == 0) {
      if (!implicit_one) reject("scale word without a count");
      g = 1;
    } else if (group.size == 1 && group.value == 1 && implicit_one) {
      reject("explicit one before هزار");
    }
    group = Group{};
    return g;
  };

  for (size_t k = 0; k < terms.size(); ++k) {
    const auto& term = terms[k];
    size_t i = 0;
    if (auto w = small_word(term[0])) {
      group.push(*w);
      i = 1;
    }
    if (i == term.size()) continue;
    const std::string_view scale = term[i];
    const size_t remaining = term.size() - i;
    if (scale == kThousand && remaining == 2 && term[i + 1] == kMilliard) {
      milliard_thousands += close(5, true);
      close(4, true);
      total += milliard_thousands * 1'000'000'000ULL * 1000ULL;
      milliard_thousands = 0;
    } else if (remaining != 1) {
      reject("unexpected word");
    } else if (scale == kThousand) {
      if (mentions_milliard(k + 1)) {
        milliard_thousands += close(5, true);
      } else {
        total += close(2, true) * 1000ULL;
      }
    } else if (scale == kMillion) {
      total += close(3, false) * 1'000'000ULL;
    } else if (scale == kMilliard) {
      const uint64_t g = close(4, false);
      total += (milliard_thousands * 1000ULL + g) * 1'000'000'000ULL;
      milliard_thousands = 0;
    } else {
      reject("unknown word");
    }
  }
  if (group.size != 0) total += close(1, false);
  if (milliard_thousands != 0) reject("thousands of milliards without میلیارد");
  if (total >= kMaxCardinal) reject("value out of range");
  return total;
}

}  // namespace farsinorm
