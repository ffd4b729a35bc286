#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace periodica {

class GammaCache;

using BigInt = boost::multiprecision::cpp_int;

// All curves live on the normalized scale ln(kappa_n) / ln^2(n) unless a
// name says otherwise.

// 1/(2 ln 2) + 3/(2 ln n); n >= 2.
double new_upper_bound(std::size_t n);

// Floor of sum_{k=1}^{floor(log2 n)} prod_{i=0}^{k-1} (2^{1-i} n - 1),
// evaluated exactly over rationals (the factors are dyadic, not integral,
// for most n). An upper bound on kappa_n itself, not normalized; n >= 2.
BigInt counting_bound(std::size_t n);

// exp(3 ln n / 2 + ln^2 n / (2 ln 2)) and its exponent. The log form never
// overflows and is the one identities are checked against.
double closed_form_bound(std::size_t n);
double log_closed_form_bound(std::size_t n);

// Historical constant bounds on the normalized limit.
struct GoBounds {
  double lower = 0.0;  // 1/(2 ln 2)
  double upper = 0.0;  // 1/(2 ln(3/2))
};
GoBounds go_bounds(std::size_t n);

// Three-term truncation of the sharpest known lower bound; n >= 3. Values
// are only meaningfully below go_bounds().lower from n = 4 on; the table
// builder starts the column there.
double rr_lower_bound(std::size_t n);

// ln(2 + (n-1) exp(ln^2 n/(2 ln 2) + 3 ln n/2)) / ln^2 n, evaluated in log
// space so the inner exp never overflows; n >= 2. A ceiling for the count
// of distinct correlations, normalized like everything else.
double delta_upper_bound(std::size_t n);

// Natural log of a positive big integer, exact enough for plotting (uses
// the leading 53 bits plus the bit length).
double log_big(const BigInt& value);

struct BoundsRow {
  std::size_t n = 0;
  std::optional<std::uint64_t> kappa;   // only where a cache exists
  std::optional<double> normalized;     // ln(kappa)/ln^2(n)
  double new_upper = 0.0;
  double go_upper = 0.0;
  double go_lower = 0.0;
  std::optional<double> rr_lower;       // n >= 4
  BigInt counting;
  double counting_norm = 0.0;           // ln(counting)/ln^2(n)
  double delta_upper = 0.0;
  std::string cache_note;               // nonempty when a cache was skipped
};

// Rows for n = 2..max_n in ascending order. kappa and normalized are
// filled from cache files when `cache` is given and the file loads; an
// unreadable file becomes a cache_note on its row instead of an error.
std::vector<BoundsRow> build_table(std::size_t max_n, GammaCache* cache);

// Header is fixed:
// n,kappa,normalized,new_upper,go_upper,go_lower,rr_lower,counting_bound,counting_bound_norm,delta_upper
// Reals carry 10 significant digits; absent values are empty fields. A
// trailing '#' note records how far from convergence the table horizon is.
void write_bounds_csv(std::ostream& os, std::span<const BoundsRow> rows);

}  // namespace periodica
