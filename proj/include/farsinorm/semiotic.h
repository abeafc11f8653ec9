#ifndef FARSINORM_SEMIOTIC_H_
#define FARSINORM_SEMIOTIC_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "farsinorm/mapping_table.h"
#include "farsinorm/resource_bundle.h"

namespace farsinorm {

enum class SemioticClass {
  kDate,
  kTime,
  kPhone,
  kNationalId,
  kCardNumber,
  kSheba,
  kUrl,
  kEmail,
  kCurrency,
  kSymbol,
  kMathSymbol,
  kAbbrevFa,
  kAbbrevEn,
  kPlainNumber,
  kLongNumber,
  kDecimal,
};

/// "DATE", "TIME", "PHONE", "NATIONAL_ID", ...
std::string_view class_name(SemioticClass cls);
std::optional<SemioticClass> class_from_name(std::string_view name);

/// Overlap resolution rank; lower wins.
int class_priority(SemioticClass cls);

enum class Calendar { kSolarHijri, kGregorian, kLunarHijri };

std::string_view calendar_name(Calendar c);

struct CalendarDate {
  Calendar calendar = Calendar::kSolarHijri;
  int year = 0;
  int month = 0;
  int day = 0;

  bool operator==(const CalendarDate&) const = default;
};

bool is_solar_hijri_leap(int year);
bool is_gregorian_leap(int year);

/// Lunar Hijri months are observed, so every month may have 30 days.
int days_in_month(Calendar calendar, int year, int month);
bool is_valid_date(const CalendarDate& date);

/// >= 1700 Gregorian, otherwise `overlap` (Solar Hijri unless configured).
/// A lunar month name or cue next to the date overrides this in scan().
Calendar infer_calendar(int year, Calendar overlap = Calendar::kSolarHijri);

enum class PhoneKind { kMobile, kLandline };

/// Mod-11 national code checksum. Throws std::invalid_argument unless
/// `digits` is exactly 10 digits. Repeated-digit strings pass the arithmetic
/// and are rejected separately by the scanner.
bool validate_national_id(std::string_view digits);

/// Luhn check. Throws std::invalid_argument unless exactly 16 digits.
bool validate_card(std::string_view digits);

/// "IR" followed by 24 digits with IBAN mod-97 remainder 1.
bool validate_sheba(std::string_view candidate);

/// True for strings of one repeated digit ("0000000000").
bool is_repeated_digit(std::string_view digits);

struct SemioticSpan {
  size_t start = 0;  // code points
  size_t end = 0;    // exclusive
  SemioticClass cls = SemioticClass::kPlainNumber;
  std::u32string raw;
  // Filled for DATE.
  std::optional<CalendarDate> date;
  // Filled for PHONE.
  std::optional<PhoneKind> phone_kind;
};

struct ScanOptions {
  // Calendar for years in the Solar/Lunar overlap (1000-1699).
  Calendar overlap_calendar = Calendar::kSolarHijri;
};

/// Detects non-standard words. All rule tables are loaded once from the
/// bundle (tables/symbols.tsv, currencies.tsv, math_symbols.tsv,
/// abbreviations_fa.tsv, area_codes.tsv, mobile_prefixes.tsv,
/// phone_cues.tsv, lunar_cues.tsv, months_lunar.tsv) and never change.
class SemioticScanner {
 public:
  explicit SemioticScanner(
      const ResourceBundle& bundle = ResourceBundle::embedded());

  /// Non-overlapping spans sorted by start. Candidates from every detector
  /// are resolved by class priority, then by length, then by position.
  std::vector<SemioticSpan> scan(std::u32string_view text,
                                 const ScanOptions& options = {}) const;
  std::vector<SemioticSpan> scan(std::string_view text,
                                 const ScanOptions& options = {}) const;

  /// 11 digits with a mobile prefix -> mobile; 11 digits with a known area
  /// code -> landline; 8 digits with a cue word in either context ->
  /// landline; otherwise none. The contexts are the text on each side.
  std::optional<PhoneKind> classify_phone(std::string_view digits,
                                          std::string_view left_context,
                                          std::string_view right_context) const;

  /// Length of the area code `digits` starts with (0 when none).
  size_t area_code_length(std::string_view digits) const;

  const MappingTable& symbols() const { return symbols_; }
  const MappingTable& currencies() const { return currencies_; }
  const MappingTable& math_symbols() const { return math_; }
  const MappingTable& abbreviations() const { return abbreviations_; }

 private:
  struct Candidate {
    size_t start;
    size_t end;
    SemioticClass cls;
    std::optional<CalendarDate> date;
    std::optional<PhoneKind> phone_kind;
  };

  void find_urls(std::u32string_view text, std::vector<Candidate>& out) const;
  void find_emails(std::u32string_view text, std::vector<Candidate>& out) const;
  void find_shebas(std::u32string_view text, std::vector<Candidate>& out) const;
  void find_numeric(std::u32string_view text, const ScanOptions& options,
                    std::vector<Candidate>& out) const;
  void find_tables(std::u32string_view text, std::vector<Candidate>& out) const;
  void find_latin_abbreviations(std::u32string_view text,
                                std::vector<Candidate>& out) const;

  bool has_cue(std::u32string_view text, size_t start, size_t end,
               const std::vector<std::u32string>& cues) const;

  MappingTable symbols_;
  MappingTable currencies_;
  MappingTable math_;
  MappingTable abbreviations_;
  std::vector<std::u32string> mobile_prefixes_;
  std::vector<std::u32string> area_codes_;
  std::vector<std::u32string> phone_cues_;
  std::vector<std::u32string> lunar_cues_;
};

}  // namespace farsinorm

#endif  // FARSINORM_SEMIOTIC_H_
