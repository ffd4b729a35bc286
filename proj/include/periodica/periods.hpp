#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "periodica/bitvector.hpp"
#include "periodica/word.hpp"

namespace periodica {

// The set of periods of one word: 0 is always a period, every element is in
// [0, n). Stored ascending without duplicates.
struct PeriodSet {
  std::size_t n = 0;
  std::vector<std::size_t> periods;

  // Textual form, e.g. "{0,4,7}".
  std::string str() const;
  bool operator==(const PeriodSet&) const = default;
};

// Characteristic bitvector of a period set: position i is set iff i is a
// period. Nonempty autocorrelations always have position 0 set; the empty
// word's autocorrelation is the length-0 vector.
class Autocorrelation {
 public:
  Autocorrelation() = default;
  // Throws DomainError unless bits is empty or has position 0 set.
  explicit Autocorrelation(Bitvector bits);
  static Autocorrelation parse(std::string_view text);

  const Bitvector& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool test(std::size_t i) const { return bits_.test(i); }
  std::string str() const { return bits_.str(); }

  bool operator==(const Autocorrelation&) const = default;
  auto operator<=>(const Autocorrelation&) const = default;

 private:
  Bitvector bits_;
};

// True iff p is a period of u: u[i] == u[i + p] wherever both sides exist.
// p must lie in [0, |u|); |u| >= 1.
bool is_period(const Word& u, std::size_t p);

// All periods of u, smallest first. The production route derives them from
// the border array; debug builds cross-check it against period_set_naive.
PeriodSet period_set(const Word& u);

// Definition-chasing reference: tries every shift directly. Quadratic, kept
// as the oracle the fast route is checked against.
PeriodSet period_set_naive(const Word& u);

// Border array b[j] = length of the longest proper border of u[0..j].
std::vector<std::size_t> border_array(const Word& u);

Autocorrelation autocorrelation(const Word& u);

PeriodSet to_period_set(const Autocorrelation& s);
Autocorrelation to_autocorrelation(const PeriodSet& ps);

// Smallest nonzero period, or nullopt for the unbordered case P = {0}.
std::optional<std::size_t> basic_period(const PeriodSet& ps);

// The autocorrelation of any witness's suffix starting at a set position i:
// simply s[i..]. Throws DomainError when s[i] is absent or zero.
Autocorrelation suffix_autocorrelation(const Autocorrelation& s, std::size_t i);

// Fine and Wilf premise: n >= p + q - gcd(p, q).
bool fine_wilf_applies(std::size_t n, std::size_t p, std::size_t q);

}  // namespace periodica
