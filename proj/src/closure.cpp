#include "periodica/closure.hpp"

#include <algorithm>

#include "periodica/errors.hpp"

namespace periodica {

std::string IrreducibleSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems[i]);
  }
  out += '}';
  return out;
}

std::string QSequence::str() const {
  std::string out;
  for (const Entry& e : entries) {
    if (!out.empty()) out += '\n';
    out += '(' + std::to_string(e.a) + ',' + std::to_string(e.q) + ')';
  }
  return out;
}

std::vector<std::size_t> forward_closure(std::span<const std::size_t> s,
                                         std::size_t n) {
  std::vector<char> in(n, 0);
  for (std::size_t v : s) {
    if (v >= n)
      throw DomainError("element " + std::to_string(v) +
                        " out of range for length " + std::to_string(n));
    in[v] = 1;
  }
  // Saturate: newly produced elements feed back as pair members until a
  // whole sweep adds nothing. The universe has n slots and every sweep
  // either stops or grows the set, so this terminates after <= n sweeps.
  std::vector<std::size_t> elems;
  bool grew = true;
  while (grew) {
    grew = false;
    elems.clear();
    for (std::size_t v = 0; v < n; ++v)
      if (in[v]) elems.push_back(v);
    for (std::size_t pi = 0; pi < elems.size(); ++pi) {
      for (std::size_t qi = pi + 1; qi < elems.size(); ++qi) {
        const std::size_t step = elems[qi] - elems[pi];
        for (std::size_t x = elems[pi]; x < n; x += step) {
          if (!in[x]) {
            in[x] = 1;
            grew = true;
          }
        }
      }
    }
  }
  elems.clear();
  for (std::size_t v = 0; v < n; ++v)
    if (in[v]) elems.push_back(v);
  return elems;
}

std::vector<std::size_t> irreducible_elements(std::span<const std::size_t> s,
                                              std::size_t n) {
  std::vector<std::size_t> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::span<const std::size_t> below{sorted.data(), i};
    const auto closed = forward_closure(below, n);
    if (!std::binary_search(closed.begin(), closed.end(), sorted[i]))
      kept.push_back(sorted[i]);
  }
  return kept;
}

IrreducibleSet irreducible(const PeriodSet& p) {
  return IrreducibleSet{p.n, irreducible_elements(p.periods, p.n)};
}

QSequence q_sequence(const IrreducibleSet& r) {
  const std::size_t n = r.n;
  QSequence qs{n, {}};
  for (std::size_t i = 0; i < r.elems.size(); ++i) {
    const std::size_t a = r.elems[i];
    if (a >= n)
      throw DomainError("element " + std::to_string(a) +
                        " out of range for length " + std::to_string(n));
    if (i > 0 && a <= r.elems[i - 1])
      throw DomainError("elements must be strictly ascending");
    const std::span<const std::size_t> upto{r.elems.data(), i + 1};
    const auto closed = forward_closure(upto, n);
    // Candidate shifts shrink geometrically with the index: q <= n / 2^i.
    const std::size_t depth_cap = i < 64 ? (n >> i) : 0;
    const std::size_t q_max = std::min(n - a, depth_cap);
    std::size_t found = 0;
    for (std::size_t q = 1; q <= q_max; ++q) {
      if (a + q == n ||
          std::binary_search(closed.begin(), closed.end(), a + q)) {
        found = q;
        break;
      }
    }
    if (found == 0)
      throw InvariantError("no shift certificate for element " +
                           std::to_string(a) + " at index " +
                           std::to_string(i) + " in " + r.str() +
                           " (length " + std::to_string(n) + ")");
    qs.entries.push_back({a, found});
  }
  return qs;
}

std::vector<ChoiceCase> choicebound_cases(const IrreducibleSet& r,
                                          const QSequence& qs) {
  if (r.elems.size() != qs.entries.size() || r.n != qs.n)
    throw DomainError("irreducible set and shift sequence do not line up");
  std::vector<ChoiceCase> cases;
  for (std::size_t i = 0; i + 1 < r.elems.size(); ++i) {
    const std::size_t next = r.elems[i + 1];
    const std::size_t a = qs.entries[i].a;
    const std::size_t q = qs.entries[i].q;
    if (next <= a + q)
      cases.push_back(ChoiceCase::kOne);
    else if (next >= r.n - q)
      cases.push_back(ChoiceCase::kTwo);
    else
      cases.push_back(ChoiceCase::kThree);
  }
  return cases;
}

}  // namespace periodica
