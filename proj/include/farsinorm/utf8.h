#ifndef FARSINORM_UTF8_H_
#define FARSINORM_UTF8_H_

#include <string>
#include <string_view>

namespace farsinorm {

// All offsets inside the library are code-point offsets into a
// std::u32string. Conversion happens once at the API boundary.

/// Decodes UTF-8. Malformed sequences become U+FFFD, one per bad byte.
std::u32string utf8_decode(std::string_view bytes);

std::string utf8_encode(std::u32string_view text);

void utf8_append(std::string& out, char32_t cp);

namespace chars {

inline constexpr char32_t kZwnj = U'\u200C';
inline constexpr char32_t kZwj = U'\u200D';

/// ASCII, Arabic-Indic and Extended Arabic-Indic (Persian) digits.
inline bool is_digit(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= U'\u0660' && c <= U'\u0669') ||
         (c >= U'\u06F0' && c <= U'\u06F9');
}

/// Value of a digit accepted by is_digit(); -1 otherwise.
inline int digit_value(char32_t c) {
  if (c >= U'0' && c <= U'9') return static_cast<int>(c - U'0');
  if (c >= U'\u0660' && c <= U'\u0669') return static_cast<int>(c - U'\u0660');
  if (c >= U'\u06F0' && c <= U'\u06F9') return static_cast<int>(c - U'\u06F0');
  return -1;
}

inline char32_t persian_digit(int v) { return U'\u06F0' + static_cast<char32_t>(v); }

inline bool is_latin_upper(char32_t c) { return c >= U'A' && c <= U'Z'; }
inline bool is_latin_lower(char32_t c) { return c >= U'a' && c <= U'z'; }
inline bool is_latin_letter(char32_t c) {
  return is_latin_upper(c) || is_latin_lower(c);
}

/// Arabic-script letters (base block, excluding digits, punctuation and
/// diacritics) plus the supplement blocks.
inline bool is_arabic_letter(char32_t c) {
  if (c >= U'\u0621' && c <= U'\u063A') return true;
  if (c >= U'\u0641' && c <= U'\u064A') return true;
  if (c >= U'\u0671' && c <= U'\u06D3') return true;
  if (c == U'\u06D5' || (c >= U'\u06EE' && c <= U'\u06EF')) return true;
  if (c >= U'\u06FA' && c <= U'\u06FF') return true;
  if (c >= U'\u0750' && c <= U'\u077F') return true;
  return false;
}

/// Harakat and other combining marks used over Arabic script.
inline bool is_arabic_mark(char32_t c) {
  return (c >= U'\u064B' && c <= U'\u065F') || c == U'\u0670' ||
         (c >= U'\u06D6' && c <= U'\u06ED');
}

/// A letter for word-boundary purposes: Latin, Arabic script, marks, ZWNJ.
inline bool is_word_char(char32_t c) {
  return is_latin_letter(c) || is_arabic_letter(c) || is_arabic_mark(c) ||
         c == kZwnj;
}

inline bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v';
}

inline bool is_horizontal_space(char32_t c) { return c == U' ' || c == U'\t'; }

}  // namespace chars
}  // namespace farsinorm

#endif  // FARSINORM_UTF8_H_
