#ifndef FARSINORM_PIPELINE_H_
#define FARSINORM_PIPELINE_H_

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "farsinorm/charset.h"
#include "farsinorm/resource_bundle.h"
#include "farsinorm/segmenter.h"
#include "farsinorm/semiotic.h"
#include "farsinorm/verbalizers.h"

namespace farsinorm {

enum class Mode { kGeneral, kSpeech };

enum class PolicyKind { kFixed, kSeededRandom };

/// General passes in the order they run.
const std::vector<std::string>& general_pass_names();

/// One speech pass per class, named by the lower-cased class name ("date",
/// "national_id", ...). A disabled class is left as written.
const std::vector<std::string>& speech_pass_names();

struct PipelineConfig {
  Mode mode = Mode::kSpeech;
  std::set<std::string> enabled_passes = all_passes();
  PolicyKind policy = PolicyKind::kFixed;
  size_t template_index = 0;  // FIXED
  uint64_t seed = 0;          // SEEDED_RANDOM
  Calendar calendar_default = Calendar::kSolarHijri;
  size_t verb_split_threshold = 30;
  bool persian_url_words = false;
  bool read_url_digits = true;

  static std::set<std::string> all_passes();

  /// Throws std::invalid_argument for a name outside the registry.
  void disable(const std::string& pass);
  bool enabled(std::string_view pass) const;
  void validate() const;
};

/// Raised when enumeration would produce more than kMaxEnumeration strings.
class EnumerationLimitError : public std::length_error {
 public:
  explicit EnumerationLimitError(size_t count);
  size_t count() const { return count_; }

 private:
  size_t count_;
};

inline constexpr size_t kMaxEnumeration = 10'000;

/// Both normalization pipelines over tables loaded once at construction.
/// All methods are const and safe to call from several threads; the random
/// generator for SEEDED_RANDOM is created per call or passed in.
class Normalizer {
 public:
  explicit Normalizer(PipelineConfig config = {},
                      const ResourceBundle& bundle = ResourceBundle::embedded());

  /// Runs the pipeline selected by config().mode.
  std::string normalize(std::string_view text) const;

  /// Entity decoding, character, digit and punctuation folding, emoji
  /// removal (each unless disabled).
  std::u32string normalize_general(std::u32string_view text) const;
  std::string normalize_general(std::string_view text) const;

  /// General passes, then every span verbalized. With SEEDED_RANDOM and no
  /// generator given, one is seeded from config().seed.
  std::u32string normalize_speech(std::u32string_view text,
                                  std::mt19937_64* rng = nullptr) const;
  std::string normalize_speech(std::string_view text,
                               std::mt19937_64* rng = nullptr) const;

  /// Every combination of spoken forms, deduplicated, in a fixed order.
  /// Throws EnumerationLimitError when the product of form counts exceeds
  /// kMaxEnumeration.
  std::vector<std::string> enumerate_verbalizations(std::string_view text) const;

  /// Scan of the text after general normalization; offsets refer to that.
  std::vector<SemioticSpan> scan(std::string_view text) const;

  std::vector<std::string> split(std::string_view text) const;

  const PipelineConfig& config() const { return config_; }
  const CharsetUnifier& charset() const { return charset_; }
  const SemioticScanner& scanner() const { return scanner_; }
  const Verbalizers& verbalizers() const { return verbalizers_; }
  const VerbLexicon& lexicon() const { return lexicon_; }
  SegmenterOptions segmenter_options() const;

 private:
  std::vector<SemioticSpan> speech_spans(std::u32string_view text) const;
  std::u32string assemble(std::u32string_view text,
                          const std::vector<SemioticSpan>& spans,
                          const std::vector<std::u32string>& words) const;
  UrlStyle url_style() const;

  PipelineConfig config_;
  CharsetUnifier charset_;
  SemioticScanner scanner_;
  Verbalizers verbalizers_;
  VerbLexicon lexicon_;
};

}  // namespace farsinorm

#endif  // FARSINORM_PIPELINE_H_
