#ifndef FARSINORM_NUMBER_WORDS_H_
#define FARSINORM_NUMBER_WORDS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace farsinorm {

/// Persian words for a number together with the value they read.
/// `value` is the ASCII rendering of what was verbalized ("1397", "3.14",
/// "0523924984").
struct NumberWords {
  std::string text;
  std::string value;
};

/// Exclusive upper bound of cardinal_words().
inline constexpr uint64_t kMaxCardinal = 1'000'000'000'000'000ULL;

/// How the ordinal of exactly 1 is spelled.
enum class FirstOrdinal {
  kYekom,  // "یکم", the general form
  kAval,   // "اول", preferred for day-of-month
};

/// Standard reading: three-digit groups with scale words (هزار, میلیون,
/// میلیارد), every part joined by " و ". Amounts of a thousand milliards and
/// up are read as a cardinal in front of میلیارد ("هزار میلیارد"), so the
/// grammar needs no scale word above میلیارد. A leading one is dropped before
/// هزار only ("هزار", but "یک میلیون").
///
/// Throws std::out_of_range for n >= kMaxCardinal.
NumberWords cardinal_words(uint64_t n);

/// Cardinal plus the ordinal suffix "م" on the final word. Irregulars:
/// سه -> سوم, a lone 1 -> یکم/اول, سی -> سی‌ام.
/// Throws std::out_of_range for n == 0 or n >= kMaxCardinal.
NumberWords ordinal_words(uint64_t n, FirstOrdinal first = FirstOrdinal::kYekom);

/// "<int> ممیز <fraction>" where 1-3 fraction digits are read as a cardinal
/// followed by دهم/صدم/هزارم and longer fractions are read digit by digit.
/// Both parts must be non-empty digit strings (ASCII or Persian digits).
/// Throws std::invalid_argument / std::out_of_range.
NumberWords decimal_words(std::string_view integer_part,
                          std::string_view fraction_part);

/// Reads `digits` as consecutive groups of the given sizes (each 1..4).
/// A group's leading zeros are read one "صفر" each and the remainder as a
/// cardinal; groups are separated by single spaces.
/// Throws std::invalid_argument when the sizes do not add up.
NumberWords grouped_digit_words(std::string_view digits,
                                std::span<const int> group_sizes);

/// Reads a digit string that may carry leading zeros: "007" -> "صفر صفر هفت".
/// Strings longer than 15 significant digits are rejected.
NumberWords digit_string_words(std::string_view digits);

/// Inverse of cardinal_words(). Parses the grammar it produces and rejects
/// anything else with std::invalid_argument.
uint64_t words_to_number(std::string_view words);

}  // namespace farsinorm

#endif  // FARSINORM_NUMBER_WORDS_H_
