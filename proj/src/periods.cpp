#include "periodica/periods.hpp"

#include <cassert>
#include <numeric>
#include <utility>

#include "periodica/errors.hpp"

namespace periodica {

namespace {

void require_nonempty(const Word& u) {
  if (u.empty()) throw DomainError("word must be nonempty");
}

}  // namespace

std::string PeriodSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(periods[i]);
  }
  out += '}';
  return out;
}

Autocorrelation::Autocorrelation(Bitvector bits) : bits_(std::move(bits)) {
  if (!bits_.empty() && !bits_.test(0))
    throw DomainError("autocorrelation must have position 0 set: " +
                      bits_.str());
}

Autocorrelation Autocorrelation::parse(std::string_view text) {
  return Autocorrelation(Bitvector::parse(text));
}

bool is_period(const Word& u, std::size_t p) {
  require_nonempty(u);
  if (p >= u.size())
    throw DomainError("period " + std::to_string(p) +
                      " out of range for length " + std::to_string(u.size()));
  for (std::size_t i = 0; i + p < u.size(); ++i)
    if (u[i] != u[i + p]) return false;
  return true;
}

PeriodSet period_set_naive(const Word& u) {
  require_nonempty(u);
  PeriodSet ps{u.size(), {}};
  for (std::size_t p = 0; p < u.size(); ++p)
    if (is_period(u, p)) ps.periods.push_back(p);
  return ps;
}

std::vector<std::size_t> border_array(const Word& u) {
  std::vector<std::size_t> b(u.size(), 0);
  for (std::size_t j = 1; j < u.size(); ++j) {
    std::size_t k = b[j - 1];
    while (k > 0 && u[j] != u[k]) k = b[k - 1];
    b[j] = (u[j] == u[k]) ? k + 1 : 0;
  }
  return b;
}

PeriodSet period_set(const Word& u) {
  require_nonempty(u);
  const std::size_t n = u.size();
  // Periods are complements of borders: the border chain of the whole word
  // b[n-1], b[b[n-1]-1], ... lists every border length, longest first, so
  // n minus each nonzero length yields the periods in ascending order.
  const auto b = border_array(u);
  PeriodSet ps{n, {0}};
  for (std::size_t len = b[n - 1]; len > 0; len = b[len - 1])
    ps.periods.push_back(n - len);
#ifndef NDEBUG
  assert(ps == period_set_naive(u) && "border route diverged from definition");
#endif
  return ps;
}

Autocorrelation autocorrelation(const Word& u) {
  return to_autocorrelation(period_set(u));
}

PeriodSet to_period_set(const Autocorrelation& s) {
  PeriodSet ps{s.size(), {}};
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.test(i)) ps.periods.push_back(i);
  return ps;
}

Autocorrelation to_autocorrelation(const PeriodSet& ps) {
  Bitvector bits(ps.n);
  for (std::size_t p : ps.periods) {
    if (p >= ps.n)
      throw DomainError("period " + std::to_string(p) +
                        " out of range for length " + std::to_string(ps.n));
    bits.set(p);
  }
  return Autocorrelation(std::move(bits));
}

std::optional<std::size_t> basic_period(const PeriodSet& ps) {
  for (std::size_t p : ps.periods)
    if (p != 0) return p;
  return std::nullopt;
}

Autocorrelation suffix_autocorrelation(const Autocorrelation& s,
                                       std::size_t i) {
  if (i >= s.size())
    throw DomainError("suffix start " + std::to_string(i) +
                      " out of range for length " + std::to_string(s.size()));
  if (!s.test(i))
    throw DomainError("suffix start " + std::to_string(i) +
                      " is not a set position of " + s.str());
  return Autocorrelation(s.bits().slice_from(i));
}

bool fine_wilf_applies(std::size_t n, std::size_t p, std::size_t q) {
  const std::size_t g = std::gcd(p, q);
  return n + g >= p + q;
}

}  // namespace periodica
