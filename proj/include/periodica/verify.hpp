#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "periodica/enumeration.hpp"

namespace periodica {

struct VerifyResult {
  std::string suite;
  bool passed = false;
  std::string detail;  // counts on success, first counterexample on failure
};

// Randomized check of the shift lemmas (multiply, add, subtract, divide,
// fine-wilf, closed suffixes, forward propagation) on generated words.
// Words mix uniform noise with tiled roots so nontrivial periods actually
// occur; the draw is deterministic in `seed`. Runs until every lemma saw
// `per_lemma` applicable instances; records at most one counterexample per
// lemma, pinning the word and parameters.
struct LemmaSuiteResult {
  std::vector<std::pair<std::string, std::size_t>> instances;
  std::vector<std::string> counterexamples;
};

LemmaSuiteResult run_word_lemma_suite(std::size_t max_len,
                                      std::size_t per_lemma,
                                      std::string_view alphabet,
                                      std::uint64_t seed);

// Exhaustive correlation structure at one length: the set of correlations
// of all binary pairs must equal { 0^(n-j) s : s in Gamma_j, 0 <= j <= n },
// and its size must equal the plain kappa sum. gamma_by_len[j] must hold
// Gamma_j for every 0 <= j <= n; n is capped by the mask width (64) in
// principle and by 2^(2n) pair enumerations in practice.
struct CorrelationStructureResult {
  bool ok = false;
  std::size_t observed = 0;
  std::size_t expected = 0;
  std::string detail;
};

CorrelationStructureResult check_correlation_structure(
    const std::vector<GammaSet>& gamma_by_len, std::size_t n);

// Drives every cross-module invariant over enumerated (and cached) sets up
// to n_max: closure round trips and minimality, generator size bound, shift
// certificates, case analysis, suffix closure, the lemma suite on random
// words, correlation structure (capped at length 12), and the bound
// inequalities. Enumerates missing lengths through the cache; corrupt
// caches propagate as CacheError.
std::vector<VerifyResult> run_verification(GammaCache& cache,
                                           std::size_t n_max, unsigned jobs,
                                           std::size_t ceiling =
                                               kDefaultEnumerationCeiling);

}  // namespace periodica
