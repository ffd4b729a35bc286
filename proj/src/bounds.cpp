#include "periodica/bounds.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "periodica/enumeration.hpp"
#include "periodica/errors.hpp"

namespace periodica {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr double kLn2 = 0.6931471805599453094;

void require_at_least(std::size_t n, std::size_t floor, const char* what) {
  if (n < floor)
    throw DomainError(std::string(what) + " is defined for n >= " +
                      std::to_string(floor) + ", got " + std::to_string(n));
}

double ln(std::size_t n) { return std::log(static_cast<double>(n)); }

std::string real_field(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

double new_upper_bound(std::size_t n) {
  require_at_least(n, 2, "new_upper_bound");
  return 1.0 / (2.0 * kLn2) + 3.0 / (2.0 * ln(n));
}

BigInt counting_bound(std::size_t n) {
  require_at_least(n, 2, "counting_bound");
  const unsigned top = std::bit_width(n) - 1;  // floor(log2 n)
  // The factors 2^{1-i} n - 1 are dyadic rationals, not integers (n = 19
  // already yields 110371/4), so the sum is carried exactly over rationals
  // and floored at the end. Flooring is sound for a bound on an integer
  // count: kappa <= S implies kappa <= floor(S).
  Rational sum = 0;
  for (unsigned k = 1; k <= top; ++k) {
    Rational term = 1;
    for (unsigned i = 0; i < k; ++i)
      term *= Rational(BigInt(2) * n, BigInt(1) << i) - 1;
    sum += term;
  }
  return numerator(sum) / denominator(sum);
}

double log_closed_form_bound(std::size_t n) {
  require_at_least(n, 2, "closed_form_bound");
  const double l = ln(n);
  return 1.5 * l + l * l / (2.0 * kLn2);
}

double closed_form_bound(std::size_t n) {
  return std::exp(log_closed_form_bound(n));
}

GoBounds go_bounds(std::size_t) {
  return GoBounds{1.0 / (2.0 * kLn2), 1.0 / (2.0 * std::log(1.5))};
}

double rr_lower_bound(std::size_t n) {
  require_at_least(n, 3, "rr_lower_bound");  // needs ln ln n > 0
  const double l = ln(n);
  const double ll = std::log(l);
  const double trimmed = 1.0 - ll / l;
  return trimmed * trimmed / (2.0 * kLn2) + 0.4139 / l -
         1.47123 * ll / (l * l);
}

double delta_upper_bound(std::size_t n) {
  require_at_least(n, 2, "delta_upper_bound");
  const double l = ln(n);
  // ln(2 + (n-1) e^x) == x + ln((n-1) + 2 e^-x); the right side never
  // overflows and e^-x underflowing to zero is exact enough here.
  const double x = log_closed_form_bound(n);
  return (x + std::log(static_cast<double>(n - 1) + 2.0 * std::exp(-x))) /
         (l * l);
}

double log_big(const BigInt& value) {
  if (value <= 0) throw DomainError("log_big needs a positive value");
  const unsigned top = boost::multiprecision::msb(value);
  if (top < 900) return std::log(value.convert_to<double>());
  const BigInt lead = value >> (top - 52);
  return std::log(lead.convert_to<double>()) +
         static_cast<double>(top - 52) * kLn2;
}

std::vector<BoundsRow> build_table(std::size_t max_n, GammaCache* cache) {
  require_at_least(max_n, 2, "build_table");
  std::vector<BoundsRow> rows;
  rows.reserve(max_n - 1);
  for (std::size_t n = 2; n <= max_n; ++n) {
    BoundsRow row;
    row.n = n;
    row.new_upper = new_upper_bound(n);
    const GoBounds go = go_bounds(n);
    row.go_lower = go.lower;
    row.go_upper = go.upper;
    // The truncated lower bound only drops below the constant lower bound
    // from n = 4 on; earlier rows leave the column empty.
    if (n >= 4) row.rr_lower = rr_lower_bound(n);
    row.counting = counting_bound(n);
    const double l2 = ln(n) * ln(n);
    row.counting_norm = log_big(row.counting) / l2;
    row.delta_upper = delta_upper_bound(n);
    if (cache != nullptr) {
      try {
        if (auto gamma = cache->load(n)) {
          row.kappa = gamma->kappa();
          row.normalized = std::log(static_cast<double>(gamma->kappa())) / l2;
        }
      } catch (const CacheError& e) {
        row.cache_note = e.what();
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_bounds_csv(std::ostream& os, std::span<const BoundsRow> rows) {
  os << "n,kappa,normalized,new_upper,go_upper,go_lower,rr_lower,"
        "counting_bound,counting_bound_norm,delta_upper\n";
  for (const BoundsRow& r : rows) {
    os << r.n << ',';
    if (r.kappa) os << *r.kappa;
    os << ',';
    if (r.normalized) os << real_field(*r.normalized);
    os << ',' << real_field(r.new_upper) << ',' << real_field(r.go_upper)
       << ',' << real_field(r.go_lower) << ',';
    if (r.rr_lower) os << real_field(*r.rr_lower);
    os << ',' << r.counting.str() << ',' << real_field(r.counting_norm) << ','
       << real_field(r.delta_upper) << '\n';
  }
  if (!rows.empty())
    os << "# note: the plotted sequences are still far from convergence at "
          "n = "
       << rows.back().n << "; no curve is near its common limit yet\n";
}

}  // namespace periodica
