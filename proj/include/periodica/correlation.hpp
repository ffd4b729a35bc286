#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "periodica/bitvector.hpp"
#include "periodica/periods.hpp"
#include "periodica/word.hpp"

namespace periodica {

// Correlation of u over v for equal lengths: position k is set iff v,
// slid k places to the right under u, matches u on the whole overlap.
// Unlike an autocorrelation it may be all-zero, and position 0 is set
// iff u == v.
class Correlation {
 public:
  Correlation() = default;
  explicit Correlation(Bitvector bits) : bits_(std::move(bits)) {}
  static Correlation parse(std::string_view text);

  const Bitvector& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool test(std::size_t i) const { return bits_.test(i); }
  std::string str() const { return bits_.str(); }

  bool operator==(const Correlation&) const = default;

 private:
  Bitvector bits_;
};

// Throws DomainError when |u| != |v|. correlate(u, u) always equals the
// autocorrelation of u.
Correlation correlate(const Word& u, const Word& v);

// Every correlation is zeros followed by the autocorrelation of the
// overlap: j is the overlap length, s the trailing j positions. All-zero
// input gives j == 0 and the empty autocorrelation. Structural only; s
// being a *valid* autocorrelation is a separate question.
struct Decomposition {
  std::size_t j = 0;
  Autocorrelation s;
  bool operator==(const Decomposition&) const = default;
};

Decomposition decompose(const Correlation& t);

// Constructs (u, v) with correlate(u, v) == t, or throws DomainError when
// the tail of t is not a valid autocorrelation. Built as u = a^(n-j) w and
// v = w b^(n-j) from a binary witness w of the tail, relabeled so that w
// does not start with 'a' (otherwise the padding could create extra hits).
std::pair<Word, Word> correlation_witness(const Correlation& t);

// Number of distinct correlations of length n given kappas[j] = |Gamma_j|
// for 0 <= j <= n (so kappas[0] == 1): their plain sum.
std::uint64_t delta(std::size_t n, std::span<const std::uint64_t> kappas);

}  // namespace periodica
