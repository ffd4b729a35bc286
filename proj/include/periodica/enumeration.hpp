#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "periodica/periods.hpp"
#include "periodica/word.hpp"

namespace periodica {

// Every autocorrelation is realized by a binary word, so exhaustive runs
// only ever range over {a,b}^n. The defaults keep a casual CLI call from
// melting the machine; the hard cap is where the mask representation and
// any realistic runtime end.
inline constexpr std::size_t kDefaultEnumerationCeiling = 24;
inline constexpr std::size_t kHardEnumerationCeiling = 32;

// All distinct autocorrelations of length n, in textual order.
struct GammaSet {
  std::size_t n = 0;
  std::vector<Autocorrelation> members;

  std::size_t kappa() const { return members.size(); }
  bool contains(const Autocorrelation& s) const;
  bool operator==(const GammaSet&) const = default;
};

// Exhaustive enumeration over binary words with the first letter fixed
// (letter swapping preserves autocorrelations). Workers split the space by
// fixed prefixes and merge their local sets, so the result is identical for
// any job count. n above the ceiling throws CapacityError; n == 0 yields
// the singleton holding the empty autocorrelation.
GammaSet enumerate_gamma(std::size_t n, unsigned jobs = 1,
                         std::size_t ceiling = kDefaultEnumerationCeiling);

// Directory of files gamma_<n>.txt, one per enumerated length:
//
//   # n=3 kappa=3
//   100
//   101
//   111
//
// Lines are sorted ascending as binary strings. Writes go through a
// temporary file plus rename so readers never observe a partial file.
class GammaCache {
 public:
  explicit GammaCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(std::size_t n) const;

  // nullopt when no file exists; CacheError (naming the file) when one
  // exists but fails validation: bad header, bad line, wrong order or count.
  std::optional<GammaSet> load(std::size_t n) const;
  void store(const GammaSet& gamma) const;

  GammaSet get_or_enumerate(std::size_t n, unsigned jobs = 1,
                            std::size_t ceiling = kDefaultEnumerationCeiling,
                            bool persist = true);

 private:
  std::filesystem::path dir_;
};

// |Gamma_n| via the cache (enumerating and persisting on a miss).
std::size_t kappa(std::size_t n, GammaCache& cache, unsigned jobs = 1,
                  std::size_t ceiling = kDefaultEnumerationCeiling);

// Membership test by enumerate-and-look-up; desk scale only. A clear zero
// at position 0 short-circuits to false.
bool is_valid_autocorrelation(const Bitvector& s, GammaCache& cache,
                              unsigned jobs = 1,
                              std::size_t ceiling = kDefaultEnumerationCeiling);

// Lexicographically smallest binary word over {a,b} whose autocorrelation
// equals s, or nullopt when s is not a valid autocorrelation. Backtracking
// over positions: set positions of s force equalities that prune most of
// the tree; clear positions are confirmed on each completed word.
std::optional<Word> witness(const Bitvector& s);

}  // namespace periodica
