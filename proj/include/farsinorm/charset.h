#ifndef FARSINORM_CHARSET_H_
#define FARSINORM_CHARSET_H_

#include <string>
#include <string_view>

#include "farsinorm/mapping_table.h"
#include "farsinorm/resource_bundle.h"

namespace farsinorm {

/// Character-level canonicalization passes. Each pass is a pure function of
/// its input and the tables loaded at construction, and each is idempotent.
///
/// Tables (under tables/ in the resource bundle):
///   letters.tsv + ligatures.tsv   fold_characters
///   digits.tsv                    fold_digits
///   punctuation.tsv               fold_punctuation
///   entities.tsv                  decode_markup_entities (named references)
///   emoji_ranges.txt              strip_emojis
class CharsetUnifier {
 public:
  explicit CharsetUnifier(
      const ResourceBundle& bundle = ResourceBundle::embedded());

  /// Arabic-variant letters and presentation forms to Persian letters,
  /// decorated Latin letters to ASCII, ligature symbols to spelled words.
  std::u32string fold_characters(std::u32string_view text) const;

  /// Every supported digit variant to Persian digits ۰-۹; enclosed numbers
  /// such as ⑩ expand to digit sequences.
  std::u32string fold_digits(std::u32string_view text) const;

  /// Punctuation look-alikes to one canonical mark; vulgar fractions to
  /// Persian-digit "n/d".
  std::u32string fold_punctuation(std::u32string_view text) const;

  /// Named references from the entity table (with or without ';') and
  /// numeric references (&#N; / &#xH;). Decoding repeats until nothing
  /// changes, so doubly escaped text ("&amp;lt;") decodes fully. Unknown
  /// ampersand sequences are kept verbatim.
  std::u32string decode_markup_entities(std::u32string_view text) const;

  /// Removes emoji sequences (including joiners, variation selectors and
  /// skin-tone modifiers attached to them). The whitespace around a removed
  /// sequence collapses to one space, or to nothing at a line edge.
  std::u32string strip_emojis(std::u32string_view text) const;

  std::string fold_characters(std::string_view text) const;
  std::string fold_digits(std::string_view text) const;
  std::string fold_punctuation(std::string_view text) const;
  std::string decode_markup_entities(std::string_view text) const;
  std::string strip_emojis(std::string_view text) const;

  bool is_emoji(char32_t c) const { return emoji_.contains(c); }

  const MappingTable& letters() const { return letters_; }
  const MappingTable& digits() const { return digits_; }
  const MappingTable& punctuation() const { return punctuation_; }
  const MappingTable& entities() const { return entities_; }
  const RangeSet& emoji_ranges() const { return emoji_; }

 private:
  std::u32string decode_once(std::u32string_view text, bool& changed) const;

  MappingTable letters_;
  MappingTable digits_;
  MappingTable punctuation_;
  MappingTable entities_;
  RangeSet emoji_;
};

}  // namespace farsinorm

#endif  // FARSINORM_CHARSET_H_
