#ifndef FARSINORM_SEGMENTER_H_
#define FARSINORM_SEGMENTER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "farsinorm/resource_bundle.h"
#include "farsinorm/semiotic.h"

namespace farsinorm {

/// Finds verbs in a whitespace-tokenized segment. Implement this to plug an
/// external POS tagger into the segmenter.
class VerbTagger {
 public:
  virtual ~VerbTagger() = default;

  /// Indices of the tokens that end a verb group, ascending.
  virtual std::vector<size_t> verb_positions(
      std::span<const std::u32string> tokens) const = 0;
};

/// Stem + affix verb recognizer. Built from lexicon/verbs.tsv (past and
/// present stem pairs) and lexicon/affixes.tsv (prefixes, person endings,
/// copulas, auxiliaries); every inflected form is generated once into a
/// hash set.
///
/// A verb group is a finite verb, a participle (past stem + ه) followed by
/// an auxiliary or copula, a future auxiliary followed by a past stem, or a
/// prefix "می"/"نمی" written as a separate token followed by its stem.
class VerbLexicon : public VerbTagger {
 public:
  explicit VerbLexicon(const ResourceBundle& bundle = ResourceBundle::embedded());

  std::vector<size_t> verb_positions(
      std::span<const std::u32string> tokens) const override;

  bool is_finite_verb(std::u32string_view token) const;
  bool is_participle(std::u32string_view token) const;
  size_t stem_count() const { return past_stems_.size(); }
  size_t form_count() const { return finite_.size(); }

 private:
  bool is_aux(std::u32string_view token) const;
  bool is_future_aux(std::u32string_view token) const;

  std::unordered_set<std::u32string> past_stems_;
  std::unordered_set<std::u32string> finite_;
  std::unordered_set<std::u32string> participles_;
  std::unordered_set<std::u32string> aux_;
  std::unordered_set<std::u32string> future_aux_;
  std::unordered_set<std::u32string> split_prefixes_;
  std::unordered_set<std::u32string> stem_forms_;  // what may follow "می"
};

/// Indices of verb-group ends in `tokens`. Tokens are compared with
/// surrounding punctuation removed.
std::vector<size_t> detect_verb_positions(std::span<const std::u32string> tokens,
                                          const VerbTagger& tagger);

struct SegmenterOptions {
  // Segments with more tokens than this are re-split after verb groups.
  size_t verb_split_threshold = 30;
  ScanOptions scan;
};

/// [start, end) code-point intervals, one per dot that sits inside a
/// detected span (decimal, URL, email, abbreviation, date, ...), sorted.
std::vector<std::pair<size_t, size_t>> protect_non_terminal_dots(
    std::u32string_view text, const SemioticScanner& scanner,
    const ScanOptions& options = {});

/// Splits at unprotected runs of terminal marks (. ! ? ؟ and ...), keeping
/// closing quotes and brackets with the sentence they close. Segments longer
/// than the threshold are then split after each verb group unless the next
/// token is a conjunction or object marker that continues the clause.
/// Returned sentences are trimmed and never empty.
std::vector<std::u32string> split_sentences(std::u32string_view text,
                                            const SemioticScanner& scanner,
                                            const VerbTagger& tagger,
                                            const SegmenterOptions& options = {});
std::vector<std::string> split_sentences(std::string_view text,
                                         const SemioticScanner& scanner,
                                         const VerbTagger& tagger,
                                         const SegmenterOptions& options = {});

/// Fraction of gold sentences that appear among the predicted sentences,
/// compared after collapsing whitespace. Each predicted sentence matches at
/// most one gold sentence. Empty gold gives 1.0.
double evaluate_segmentation(const std::vector<std::string>& predicted,
                             const std::vector<std::string>& gold);

/// Gold fixture: one sentence per line, paragraphs separated by blank lines.
/// Lines starting with '#' are comments.
std::vector<std::vector<std::string>> parse_gold_paragraphs(std::string_view text);

struct SegmentationReport {
  size_t gold_sentences = 0;
  size_t matched = 0;
  double accuracy = 1.0;
};

/// Joins each gold paragraph with spaces, splits it, and scores the result.
SegmentationReport evaluate_gold(const std::vector<std::vector<std::string>>& paragraphs,
                                 const SemioticScanner& scanner,
                                 const VerbTagger& tagger,
                                 const SegmenterOptions& options = {});

}  // namespace farsinorm

#endif  // FARSINORM_SEGMENTER_H_
