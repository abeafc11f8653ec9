#ifndef FARSINORM_TESTS_CORPUS_H_
#define FARSINORM_TESTS_CORPUS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "farsinorm/semiotic.h"

namespace farsinorm::testing {

// Seeded generator of mixed Persian text with every kind of non-standard
// word the scanner knows about, in several digit scripts.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(uint64_t seed,
                           const SemioticScanner& scanner = default_scanner());

  std::string national_id();
  std::string card();
  std::string mobile();
  std::string landline();
  std::string sheba();
  std::string date();
  std::string time();
  std::string number();
  std::string decimal();
  std::string currency();
  std::string symbol();
  std::string math();
  std::string url();
  std::string email();
  std::string abbreviation();
  std::string word();

  // One sentence of 3 to 12 items with terminal punctuation.
  std::string sentence();
  // Sentences joined by spaces.
  std::string paragraph(int sentences);
  // Table surfaces and random code points in any order, for charset passes.
  std::string char_soup();

  std::mt19937_64& rng() { return rng_; }

  static const SemioticScanner& default_scanner();

 private:
  size_t below(size_t n);
  std::string digits(size_t n);
  std::string script(std::string ascii);  // random digit script

  std::mt19937_64 rng_;
  std::vector<std::string> symbols_;
  std::vector<std::string> currencies_;
  std::vector<std::string> math_;
  std::vector<std::string> abbreviations_;
};

}  // namespace farsinorm::testing

#endif  // FARSINORM_TESTS_CORPUS_H_
