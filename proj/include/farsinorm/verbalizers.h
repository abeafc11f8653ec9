#ifndef FARSINORM_VERBALIZERS_H_
#define FARSINORM_VERBALIZERS_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "farsinorm/mapping_table.h"
#include "farsinorm/resource_bundle.h"
#include "farsinorm/semiotic.h"
#include "farsinorm/utf8.h"

namespace farsinorm {

/// How one spoken form is picked among the alternatives of a span.
/// The random generator of SEEDED_RANDOM is owned by the caller.
class SelectionPolicy {
 public:
  enum class Mode { kFixed, kSeededRandom, kEnumerateAll };

  static SelectionPolicy fixed(size_t index = 0);
  static SelectionPolicy seeded_random(std::mt19937_64& rng);
  static SelectionPolicy enumerate_all();

  Mode mode() const { return mode_; }
  size_t index() const { return index_; }

  /// Index of the alternative to use out of `count` (> 0). FIXED wraps its
  /// index modulo `count`, so one index can be applied to every class.
  /// Throws std::logic_error for ENUMERATE_ALL, which has no single choice.
  size_t pick(size_t count) const;

 private:
  SelectionPolicy(Mode mode, size_t index, std::mt19937_64* rng)
      : mode_(mode), index_(index), rng_(rng) {}

  Mode mode_;
  size_t index_;
  std::mt19937_64* rng_;
};

/// The indexed family of spoken renderings of one span. Families can be
/// astronomically large (groupings of a long digit string), so forms are
/// rendered on demand; count() saturates at SIZE_MAX.
class SpokenForms {
 public:
  SpokenForms(size_t count, std::function<std::string(size_t)> render);
  static SpokenForms single(std::string text);

  size_t count() const { return count_; }

  /// Throws std::out_of_range for k >= count().
  std::string render(size_t k) const;

  std::string choose(const SelectionPolicy& policy) const;

 private:
  size_t count_;
  std::function<std::string(size_t)> render_;
};

/// Slot-bearing templates, one per line, slots written "{name}". Lines
/// starting with '#' are comments.
class TemplateSet {
 public:
  static TemplateSet parse(std::string_view text, std::string_view name);

  size_t size() const { return templates_.size(); }
  const std::vector<std::string>& templates() const { return templates_; }

  /// Slot names used by template k, in order of appearance.
  std::vector<std::string> slots(size_t k) const;

  /// Throws std::invalid_argument when a slot has no value.
  std::string instantiate(size_t k,
                          const std::map<std::string, std::string>& values) const;

 private:
  std::vector<std::string> templates_;
};

/// Compositions of n into parts of 2 and 3 in lexicographic order, so
/// index 0 is all twos (plus one trailing three for odd n). Count saturates.
size_t digit_grouping_count(size_t n);
std::vector<int> digit_grouping(size_t n, size_t k);

struct UrlStyle {
  bool persian_words = false;  // "نقطه" instead of "dot"
  bool read_digits = false;    // digits inside URLs read as Persian words
};

/// Turns classified spans into words. Tables and templates are loaded once
/// from the bundle: templates/date.tpl, templates/time.tpl, tables/months_*,
/// symbols, currencies, math_symbols, abbreviations_fa, latin_letter_names,
/// url_words_latin, url_words_persian and the vulgar fractions of
/// punctuation.tsv.
class Verbalizers {
 public:
  explicit Verbalizers(const ResourceBundle& bundle = ResourceBundle::embedded());

  /// Throws std::invalid_argument for an invalid date.
  SpokenForms date_forms(const CalendarDate& d) const;
  std::string verbalize_date(const CalendarDate& d,
                             const SelectionPolicy& policy) const;

  /// Minute 0 without seconds uses only the hour-only templates.
  /// Throws std::out_of_range for bad clock fields.
  SpokenForms time_forms(int hour, int minute, std::optional<int> second) const;
  std::string verbalize_time(int hour, int minute, std::optional<int> second,
                             const SelectionPolicy& policy) const;

  /// Mobile: 11 digits, the first four read as one unit, the other seven
  /// grouped. Landline: 11 digits (three-digit area code, eight grouped
  /// digits) or 8 digits. Throws std::invalid_argument otherwise.
  SpokenForms phone_forms(std::string_view digits, PhoneKind kind) const;
  std::string verbalize_phone(std::string_view digits, PhoneKind kind,
                              const SelectionPolicy& policy) const;

  /// NATIONAL_ID, CARD_NUMBER, SHEBA ("IR" + 24 digits, the prefix spelled)
  /// or LONG_NUMBER. Separators in `raw` are ignored. Checksummed classes
  /// are validated; throws std::invalid_argument on failure.
  SpokenForms grouped_id_forms(std::string_view raw, SemioticClass cls) const;
  std::string verbalize_grouped_id(std::string_view raw, SemioticClass cls,
                                   const SelectionPolicy& policy) const;

  /// SYMBOL, CURRENCY or MATH_SYMBOL token (a fraction "n/d" counts as a
  /// math symbol). Throws std::invalid_argument when the token is unknown.
  std::string verbalize_symbol(std::string_view token, SemioticClass cls) const;

  /// Persian table entries expand to their phrase; Latin abbreviations are
  /// spelled letter by letter joined with ZWNJ. Anything else, including a
  /// lone Latin letter, comes back unchanged.
  std::string expand_abbreviation(std::string_view token) const;

  std::string verbalize_url_email(std::string_view raw,
                                  const UrlStyle& style = {}) const;

  /// Amount and sign in either order ("25$", "$ 25") or a bare sign.
  std::string verbalize_currency(std::string_view raw) const;

  /// Digit strings with optional grouping commas. Leading zeros are read.
  std::string verbalize_plain_number(std::string_view raw) const;
  std::string verbalize_decimal(std::string_view raw) const;

  /// Every spoken form of a span from SemioticScanner::scan.
  SpokenForms forms(const SemioticSpan& span, const UrlStyle& style = {}) const;

  const TemplateSet& date_templates() const { return date_templates_; }
  const TemplateSet& time_templates() const { return time_templates_; }

 private:
  std::string month_name(Calendar c, int month) const;
  std::string spell_latin(std::u32string_view token,
                          char32_t joiner = chars::kZwnj) const;

  TemplateSet date_templates_;
  TemplateSet time_templates_;
  MappingTable months_solar_;
  MappingTable months_gregorian_;
  MappingTable months_lunar_;
  MappingTable symbols_;
  MappingTable currencies_;
  MappingTable math_;
  MappingTable abbreviations_;
  MappingTable letter_names_;
  MappingTable url_latin_;
  MappingTable url_persian_;
  MappingTable fraction_chars_;
};

}  // namespace farsinorm

#endif  // FARSINORM_VERBALIZERS_H_
