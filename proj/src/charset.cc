#include "farsinorm/charset.h"

#include "farsinorm/utf8.h"

namespace farsinorm {

namespace {

MappingTable merged_letter_table(const ResourceBundle& bundle) {
  MappingTable table = MappingTable::parse(bundle.get("tables/letters.tsv"),
                                           "tables/letters.tsv");
  const MappingTable ligatures = MappingTable::parse(
      bundle.get("tables/ligatures.tsv"), "tables/ligatures.tsv");
  for (const auto& e : ligatures.entries()) {
    try {
      table.add(e.surface, e.replacement);
    } catch (const ResourceError& err) {
      throw ResourceError(std::string("tables/ligatures.tsv: ") + err.what());
    }
  }
  return table;
}

bool is_hex(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'f') ||
         (c >= U'A' && c <= U'F');
}

int hex_value(char32_t c) {
  if (c >= U'0' && c <= U'9') return static_cast<int>(c - U'0');
  if (c >= U'a' && c <= U'f') return static_cast<int>(c - U'a') + 10;
  return static_cast<int>(c - U'A') + 10;
}

// Parses "&#123;" / "&#x1F;" at text[pos]. Returns the consumed length, or
// 0 when there is no well-formed numeric reference.
size_t numeric_reference(std::u32string_view text, size_t pos, char32_t& out) {
  size_t i = pos + 2;  // past "&#"
  const bool hex = i < text.size() && (text[i] == U'x' || text[i] == U'X');
  if (hex) ++i;
  const size_t digits_start = i;
  uint32_t value = 0;
  while (i < text.size() && (hex ? is_hex(text[i]) : (text[i] >= U'0' &&
                                                      text[i] <= U'9'))) {
    value = value * (hex ? 16 : 10) +
            static_cast<uint32_t>(hex ? hex_value(text[i]) : text[i] - U'0');
    if (value > 0x10FFFF) return 0;
    ++i;
  }
  if (i == digits_start) return 0;
  if (value == 0 || (value >= 0xD800 && value <= 0xDFFF)) return 0;
  if (i < text.size() && text[i] == U';') ++i;
  out = value;
  return i - pos;
}

// ZWJ and the variation selectors are removed only as part of a region
// that contains an emoji.
bool is_emoji_joiner(char32_t c) {
  return c == chars::kZwj || c == U'\uFE0F' || c == U'\uFE0E';
}

}  // namespace

CharsetUnifier::CharsetUnifier(const ResourceBundle& bundle)
    : letters_(merged_letter_table(bundle)),
      digits_(MappingTable::parse(bundle.get("tables/digits.tsv"),
                                  "tables/digits.tsv")),
      punctuation_(MappingTable::parse(bundle.get("tables/punctuation.tsv"),
                                       "tables/punctuation.tsv")),
      entities_(MappingTable::parse(bundle.get("tables/entities.tsv"),
                                    "tables/entities.tsv")),
      emoji_(RangeSet::parse(bundle.get("tables/emoji_ranges.txt"),
                             "tables/emoji_ranges.txt")) {}

std::u32string CharsetUnifier::fold_characters(std::u32string_view text) const {
  return letters_.apply(text);
}

std::u32string CharsetUnifier::fold_digits(std::u32string_view text) const {
  return digits_.apply(text);
}

std::u32string CharsetUnifier::fold_punctuation(std::u32string_view text) const {
  return punctuation_.apply(text);
}

std::u32string CharsetUnifier::decode_once(std::u32string_view text,
                                           bool& changed) const {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != U'&') {
      out.push_back(text[i++]);
      continue;
    }
    if (i + 1 < text.size() && text[i + 1] == U'#') {
      char32_t cp = 0;
      if (const size_t len = numeric_reference(text, i, cp); len != 0) {
        out.push_back(cp);
        i += len;
        changed = true;
        continue;
      }
    } else if (auto m = entities_.match_at(text, i)) {
      out += *m->replacement;
      i += m->length;
      changed = true;
      continue;
    }
    out.push_back(text[i++]);
  }
  return out;
}

std::u32string CharsetUnifier::decode_markup_entities(
    std::u32string_view text) const {
  // Every reference is longer than its expansion, so this terminates.
  bool changed = false;
  std::u32string current = decode_once(text, changed);
  while (changed) {
    changed = false;
    current = decode_once(current, changed);
  }
  return current;
}

std::u32string CharsetUnifier::strip_emojis(std::u32string_view text) const {
  const size_t n = text.size();
  auto in_region = [&](char32_t c) {
    return emoji_.contains(c) || is_emoji_joiner(c) ||
           chars::is_horizontal_space(c);
  };
  std::u32string out;
  out.reserve(n);
  size_t i = 0;
  while (i < n) {
    if (!in_region(text[i])) {
      out.push_back(text[i++]);
      continue;
    }
    size_t j = i;
    bool has_emoji = false;
    while (j < n && in_region(text[j])) {
      has_emoji = has_emoji || emoji_.contains(text[j]);
      ++j;
    }
    if (!has_emoji) {
      out.append(text.substr(i, j - i));
    } else {
      const bool left_content = !out.empty() && out.back() != U'\n' &&
                                out.back() != U'\r';
      const bool right_content = j < n && text[j] != U'\n' && text[j] != U'\r';
      if (left_content && right_content) out.push_back(U' ');
    }
    i = j;
  }
  return out;
}

std::string CharsetUnifier::fold_characters(std::string_view text) const {
  return utf8_encode(fold_characters(utf8_decode(text)));
}
std::string CharsetUnifier::fold_digits(std::string_view text) const {
  return utf8_encode(fold_digits(utf8_decode(text)));
}
std::string CharsetUnifier::fold_punctuation(std::string_view text) const {
  return utf8_encode(fold_punctuation(utf8_decode(text)));
}
std::string CharsetUnifier::decode_markup_entities(std::string_view text) const {
  return utf8_encode(decode_markup_entities(utf8_decode(text)));
}
std::string CharsetUnifier::strip_emojis(std::string_view text) const {
  return utf8_encode(strip_emojis(utf8_decode(text)));
}

}  // namespace farsinorm
