#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "periodica/periods.hpp"

namespace periodica {

// Minimal generating subset of a period set under forward closure. Ascending;
// element 0 is 0 whenever the input was a genuine period set.
struct IrreducibleSet {
  std::size_t n = 0;
  std::vector<std::size_t> elems;

  std::string str() const;
  bool operator==(const IrreducibleSet&) const = default;
};

// One shift certificate per irreducible element: q is the smallest value in
// [1, n - a] with q * 2^i <= n such that a + q == n or a + q lands in the
// forward closure of the elements up to and including a.
struct QSequence {
  struct Entry {
    std::size_t a = 0;
    std::size_t q = 0;
    bool operator==(const Entry&) const = default;
  };

  std::size_t n = 0;
  std::vector<Entry> entries;

  // "(a,q)" pairs, one per line.
  std::string str() const;
  bool operator==(const QSequence&) const = default;
};

enum class ChoiceCase { kOne = 1, kTwo = 2, kThree = 3 };

// Least fixpoint of S in [0, n) under the forward propagation rule: for
// p <= q already in the set and any k >= 0, p + k(q - p) joins it while
// staying below n. Input elements must lie in [0, n); the result is sorted
// and need not contain 0 (that holds only when 0 is in S).
std::vector<std::size_t> forward_closure(std::span<const std::size_t> s,
                                         std::size_t n);

// Characterization form: keep q iff q is outside the forward closure of the
// strictly smaller elements. Defined on any subset of [0, n); no membership
// validation happens here (pair with enumeration when strictness matters).
std::vector<std::size_t> irreducible_elements(std::span<const std::size_t> s,
                                              std::size_t n);

// The unique minimal generator R with forward_closure(R) == P.periods.
IrreducibleSet irreducible(const PeriodSet& p);

// Shift certificates for every element of R; throws InvariantError if some
// element admits none (impossible for irreducible sets of real period sets).
QSequence q_sequence(const IrreducibleSet& r);

// Classifies each consecutive pair (a_i, a_{i+1}): case 1 when
// a_{i+1} <= a_i + q_i, else case 2 when a_{i+1} >= n - q_i, else case 3.
// First match wins when both inequalities hold. Case 3 never occurs for
// genuine period sets; callers treat it as a red flag, not a result.
std::vector<ChoiceCase> choicebound_cases(const IrreducibleSet& r,
                                          const QSequence& qs);

}  // namespace periodica
