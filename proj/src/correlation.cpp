#include "periodica/correlation.hpp"

#include <cstring>
#include <numeric>
#include <string>

#include "periodica/enumeration.hpp"
#include "periodica/errors.hpp"

namespace periodica {

Correlation Correlation::parse(std::string_view text) {
  return Correlation(Bitvector::parse(text));
}

Correlation correlate(const Word& u, const Word& v) {
  if (u.size() != v.size())
    throw DomainError("correlation needs equal lengths, got " +
                      std::to_string(u.size()) + " and " +
                      std::to_string(v.size()));
  const std::size_t n = u.size();
  Bitvector bits(n);
  for (std::size_t k = 0; k < n; ++k)
    if (std::memcmp(u.data() + k, v.data(), n - k) == 0) bits.set(k);
  return Correlation(std::move(bits));
}

Decomposition decompose(const Correlation& t) {
  const std::size_t lead = t.bits().first_set();
  return Decomposition{t.size() - lead,
                       Autocorrelation(t.bits().slice_from(lead))};
}

std::pair<Word, Word> correlation_witness(const Correlation& t) {
  const std::size_t n = t.size();
  const Decomposition dec = decompose(t);
  if (dec.j == 0)
    return {Word(std::string(n, 'a')), Word(std::string(n, 'b'))};

  const std::optional<Word> w = witness(dec.s.bits());
  if (!w)
    throw DomainError("tail " + dec.s.str() +
                      " is not a valid autocorrelation; " + t.str() +
                      " is not the correlation of any pair");

  // The padding is all 'a', so relabel the witness when it starts with 'a';
  // swapping letters everywhere keeps its autocorrelation intact while
  // ruling out spurious matches that cross into the padding.
  std::string core = w->str();
  if (core[0] == 'a')
    for (char& c : core) c = c == 'a' ? 'b' : 'a';

  return {Word(std::string(n - dec.j, 'a') + core),
          Word(core + std::string(n - dec.j, 'b'))};
}

std::uint64_t delta(std::size_t n, std::span<const std::uint64_t> kappas) {
  if (kappas.size() != n + 1)
    throw DomainError("need kappa_0..kappa_" + std::to_string(n) + ", got " +
                      std::to_string(kappas.size()) + " values");
  if (kappas[0] != 1)
    throw DomainError("kappa_0 must be 1 (the empty autocorrelation), got " +
                      std::to_string(kappas[0]));
  return std::accumulate(kappas.begin(), kappas.end(), std::uint64_t{0});
}

}  // namespace periodica
