#include "periodica/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <unordered_set>

#include "periodica/bounds.hpp"
#include "periodica/closure.hpp"
#include "periodica/correlation.hpp"
#include "periodica/errors.hpp"
#include "periodica/periods.hpp"

namespace periodica {

namespace {

// Uniform words are almost always unbordered, which would starve the
// lemmas of nontrivial instances; half the draws tile a short root and
// occasionally smudge one position so richer period sets show up.
Word draw_word(std::mt19937_64& gen, std::size_t max_len,
               std::string_view alphabet) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
  const std::size_t n = len_dist(gen);
  std::string s(n, alphabet[0]);
  if (gen() & 1) {
    for (char& c : s) c = alphabet[sym(gen)];
  } else {
    std::uniform_int_distribution<std::size_t> root_dist(1, n);
    const std::size_t root = root_dist(gen);
    for (std::size_t i = 0; i < root; ++i) s[i] = alphabet[sym(gen)];
    for (std::size_t i = root; i < n; ++i) s[i] = s[i - root];
    if (gen() % 3 == 0) {
      std::uniform_int_distribution<std::size_t> pos(0, n - 1);
      s[pos(gen)] = alphabet[sym(gen)];
    }
  }
  return Word(std::move(s));
}

template <class T>
T pick(std::mt19937_64& gen, const std::vector<T>& from) {
  std::uniform_int_distribution<std::size_t> d(0, from.size() - 1);
  return from[d(gen)];
}

struct LemmaTally {
  std::map<std::string, std::size_t> instances;
  std::map<std::string, std::string> counterexamples;

  void pass(const std::string& lemma) { ++instances[lemma]; }
  void fail(const std::string& lemma, const std::string& what) {
    ++instances[lemma];
    counterexamples.emplace(lemma, what);
  }
};

}  // namespace

LemmaSuiteResult run_word_lemma_suite(std::size_t max_len,
                                      std::size_t per_lemma,
                                      std::string_view alphabet,
                                      std::uint64_t seed) {
  static const std::vector<std::string> kLemmas = {
      "multiply", "add", "subtract", "divide",
      "fine-wilf", "closed", "forward-propagation"};

  std::mt19937_64 gen(seed);
  LemmaTally tally;
  for (const auto& l : kLemmas) tally.instances[l] = 0;

  const auto done = [&] {
    return std::all_of(kLemmas.begin(), kLemmas.end(), [&](const auto& l) {
      return tally.instances[l] >= per_lemma;
    });
  };

  while (!done()) {
    const Word u = draw_word(gen, max_len, alphabet);
    const std::size_t n = u.size();
    const PeriodSet ps = period_set(u);
    const Autocorrelation s = autocorrelation(u);
    const std::vector<std::size_t>& periods = ps.periods;

    // multiply: p in P, kp < n -> kp in P
    {
      const std::size_t p = pick(gen, periods);
      std::vector<std::size_t> ks;
      for (std::size_t k = 0; (p == 0 && k <= 2) || (p > 0 && k * p < n); ++k)
        ks.push_back(k);
      const std::size_t k = pick(gen, ks);
      const std::size_t kp = k * p;
      if (is_period(u, kp))
        tally.pass("multiply");
      else
        tally.fail("multiply", u.str() + " p=" + std::to_string(p) +
                                   " k=" + std::to_string(k));
    }

    // add: p in P(u), q in P(u[p..]), p + kq < n -> p + kq in P(u)
    {
      const std::size_t p = pick(gen, periods);
      if (p < n) {
        const Word tail = u.suffix(p);
        if (!tail.empty()) {
          const std::size_t q = pick(gen, period_set(tail).periods);
          std::vector<std::size_t> ks;
          for (std::size_t k = 0;
               (q == 0 && k <= 2) || (q > 0 && p + k * q < n); ++k)
            ks.push_back(k);
          const std::size_t k = pick(gen, ks);
          if (is_period(u, p + k * q))
            tally.pass("add");
          else
            tally.fail("add", u.str() + " p=" + std::to_string(p) +
                                  " q=" + std::to_string(q) +
                                  " k=" + std::to_string(k));
        }
      }
    }

    // subtract: p, q in P, q <= p -> p - q is a period of both the prefix
    // and the suffix of length n - q
    {
      std::size_t p = pick(gen, periods);
      std::size_t q = pick(gen, periods);
      if (q > p) std::swap(p, q);
      const Word prefix = u.substr(0, n - q);
      const Word suffix = u.suffix(q);
      if (is_period(prefix, p - q) && is_period(suffix, p - q))
        tally.pass("subtract");
      else
        tally.fail("subtract", u.str() + " p=" + std::to_string(p) +
                                   " q=" + std::to_string(q));
    }

    // divide: p in P, v a factor of u with |v| >= p, r in P(v), r | p
    // -> r in P(u)
    {
      const std::size_t p = pick(gen, periods);
      if (p > 0) {
        std::uniform_int_distribution<std::size_t> len_dist(p, n);
        const std::size_t len = len_dist(gen);
        std::uniform_int_distribution<std::size_t> start_dist(0, n - len);
        const Word v = u.substr(start_dist(gen), len);
        std::vector<std::size_t> divisors;
        for (std::size_t r : period_set(v).periods)
          if (r > 0 && p % r == 0) divisors.push_back(r);
        if (!divisors.empty()) {
          const std::size_t r = pick(gen, divisors);
          if (is_period(u, r))
            tally.pass("divide");
          else
            tally.fail("divide", u.str() + " v=" + v.str() +
                                     " p=" + std::to_string(p) +
                                     " r=" + std::to_string(r));
        }
      }
    }

    // fine-wilf: p, q in P with n >= p + q - gcd -> gcd in P
    {
      const std::size_t p = pick(gen, periods);
      const std::size_t q = pick(gen, periods);
      if (fine_wilf_applies(n, p, q)) {
        const std::size_t g = std::gcd(p, q);
        if (g == 0 || is_period(u, g))
          tally.pass("fine-wilf");
        else
          tally.fail("fine-wilf", u.str() + " p=" + std::to_string(p) +
                                      " q=" + std::to_string(q));
      }
    }

    // closed: i in P -> s[i..] is the autocorrelation of u[i..]
    {
      const std::size_t i = pick(gen, periods);
      if (suffix_autocorrelation(s, i) == autocorrelation(u.suffix(i)))
        tally.pass("closed");
      else
        tally.fail("closed", u.str() + " i=" + std::to_string(i));
    }

    // forward propagation: p <= q in P, p + k(q - p) < n -> in P
    {
      std::size_t p = pick(gen, periods);
      std::size_t q = pick(gen, periods);
      if (p > q) std::swap(p, q);
      const std::size_t step = q - p;
      std::vector<std::size_t> ks;
      for (std::size_t k = 0;
           (step == 0 && k <= 2) || (step > 0 && p + k * step < n); ++k)
        ks.push_back(k);
      const std::size_t k = pick(gen, ks);
      const std::size_t target = p + k * step;
      if (target >= n || is_period(u, target))
        tally.pass("forward-propagation");
      else
        tally.fail("forward-propagation",
                   u.str() + " p=" + std::to_string(p) + " q=" +
                       std::to_string(q) + " k=" + std::to_string(k));
    }
  }

  LemmaSuiteResult out;
  for (const auto& [lemma, count] : tally.instances)
    out.instances.emplace_back(lemma, count);
  for (const auto& [lemma, what] : tally.counterexamples)
    out.counterexamples.push_back(lemma + ": " + what);
  return out;
}

CorrelationStructureResult check_correlation_structure(
    const std::vector<GammaSet>& gamma_by_len, std::size_t n) {
  CorrelationStructureResult res;
  if (gamma_by_len.size() <= n) {
    res.detail = "need Gamma_j for every j <= n";
    return res;
  }

  // Correlations of all pairs, words and vectors packed as masks. The
  // module route is cross-checked on a sample below; the mask route keeps
  // the full 4^n scan affordable.
  std::unordered_set<std::uint64_t> observed;
  const std::uint64_t words = std::uint64_t{1} << n;
  for (std::uint64_t u = 0; u < words; ++u) {
    for (std::uint64_t v = 0; v < words; ++v) {
      std::uint64_t t = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t overlap = (~std::uint64_t{0}) >> (64 - (n - k));
        if ((((u >> k) ^ v) & overlap) == 0) t |= std::uint64_t{1} << k;
      }
      observed.insert(t);
    }
  }

  std::unordered_set<std::uint64_t> expected;
  for (std::size_t j = 0; j <= n; ++j)
    for (const Autocorrelation& s : gamma_by_len[j].members)
      expected.insert(s.bits().mask() << (n - j));
  // j == 0 contributes the all-zero correlation via the empty mask.
  expected.insert(0);

  std::uint64_t expected_count = 1;  // kappa_0
  for (std::size_t j = 1; j <= n; ++j)
    expected_count += gamma_by_len[j].kappa();

  res.observed = observed.size();
  res.expected = static_cast<std::size_t>(expected_count);
  if (observed != expected) {
    res.detail = "correlation set mismatch at n=" + std::to_string(n);
    return res;
  }
  if (res.observed != res.expected) {
    res.detail = "kappa sum mismatch at n=" + std::to_string(n) + ": " +
                 std::to_string(res.observed) + " vs " +
                 std::to_string(res.expected);
    return res;
  }

  // Sample cross-check: mask route against the byte route.
  std::mt19937_64 gen(0xc0ffee ^ n);
  std::uniform_int_distribution<std::uint64_t> dist(0, words - 1);
  for (int it = 0; it < 2000; ++it) {
    const std::uint64_t u = dist(gen), v = dist(gen);
    std::string us(n, 'a'), vs(n, 'a');
    for (std::size_t i = 0; i < n; ++i) {
      if ((u >> i) & 1) us[i] = 'b';
      if ((v >> i) & 1) vs[i] = 'b';
    }
    std::uint64_t t = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t overlap = (~std::uint64_t{0}) >> (64 - (n - k));
      if ((((u >> k) ^ v) & overlap) == 0) t |= std::uint64_t{1} << k;
    }
    if (correlate(Word(us), Word(vs)).bits().mask() != t) {
      res.detail = "mask and byte correlate differ on u=" + us + " v=" + vs;
      return res;
    }
  }

  res.ok = true;
  return res;
}

std::vector<VerifyResult> run_verification(GammaCache& cache,
                                           std::size_t n_max, unsigned jobs,
                                           std::size_t ceiling) {
  std::vector<VerifyResult> results;
  const auto report = [&results](std::string suite, bool ok,
                                 std::string detail) {
    results.push_back({std::move(suite), ok, std::move(detail)});
  };

  std::vector<GammaSet> gamma(n_max + 1);
  gamma[0] = GammaSet{0, {Autocorrelation{}}};
  for (std::size_t n = 1; n <= n_max; ++n)
    gamma[n] = cache.get_or_enumerate(n, jobs, ceiling);

  // Closure round trip, minimality, size bound, certificates, cases.
  {
    std::size_t sets = 0;
    std::string bad_round, bad_min, bad_size, bad_cert, bad_case;
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (const Autocorrelation& s : gamma[n].members) {
        ++sets;
        const PeriodSet p = to_period_set(s);
        const IrreducibleSet r = irreducible(p);
        if (forward_closure(r.elems, n) != p.periods && bad_round.empty())
          bad_round = "FC(R) != P for P=" + p.str() + " n=" +
                      std::to_string(n);
        for (std::size_t drop = 0; drop < r.elems.size(); ++drop) {
          std::vector<std::size_t> rest = r.elems;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
          if (forward_closure(rest, n) == p.periods && bad_min.empty())
            bad_min = "R minus " + std::to_string(r.elems[drop]) +
                      " still generates P=" + p.str();
        }
        if (!r.elems.empty() &&
            (std::uint64_t{1} << (r.elems.size() - 1)) > n &&
            bad_size.empty())
          bad_size = "|R|-1 exceeds log2(n) for P=" + p.str() + " n=" +
                     std::to_string(n);
        try {
          const QSequence qs = q_sequence(r);
          for (std::size_t i = 0; i < qs.entries.size(); ++i) {
            const auto [a, q] = qs.entries[i];
            const bool depth_ok = i < 64 && q <= (n >> i);
            const auto closed = forward_closure(
                std::span<const std::size_t>{r.elems.data(), i + 1}, n);
            const bool lands_ok =
                a + q == n ||
                std::binary_search(closed.begin(), closed.end(), a + q);
            if ((!depth_ok || !lands_ok) && bad_cert.empty())
              bad_cert = "bad certificate (" + std::to_string(a) + "," +
                         std::to_string(q) + ") at index " +
                         std::to_string(i) + " for P=" + p.str();
          }
          for (ChoiceCase c : choicebound_cases(r, qs))
            if (c == ChoiceCase::kThree && bad_case.empty())
              bad_case = "case 3 reached for P=" + p.str() + " n=" +
                         std::to_string(n);
        } catch (const InvariantError& e) {
          if (bad_cert.empty()) bad_cert = e.what();
        }
      }
    }
    const std::string scope =
        std::to_string(sets) + " period sets, n <= " + std::to_string(n_max);
    report("closure-round-trip", bad_round.empty(),
           bad_round.empty() ? scope : bad_round);
    report("generator-minimality", bad_min.empty(),
           bad_min.empty() ? scope : bad_min);
    report("generator-size-bound", bad_size.empty(),
           bad_size.empty() ? scope : bad_size);
    report("shift-certificates", bad_cert.empty(),
           bad_cert.empty() ? scope : bad_cert);
    report("case-analysis", bad_case.empty(),
           bad_case.empty() ? scope : bad_case);
  }

  // Suffix closure needs all shorter sets, which we have.
  {
    std::string bad;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= n_max && bad.empty(); ++n) {
      for (const Autocorrelation& s : gamma[n].members) {
        for (std::size_t i = 1; i < n && bad.empty(); ++i) {
          if (!s.test(i)) continue;
          ++checked;
          if (!gamma[n - i].contains(suffix_autocorrelation(s, i)))
            bad = "suffix of " + s.str() + " at " + std::to_string(i) +
                  " escapes Gamma_" + std::to_string(n - i);
        }
      }
    }
    report("suffix-closure", bad.empty(),
           bad.empty() ? std::to_string(checked) + " suffixes" : bad);
  }

  // Random-word lemma spot checks, both alphabets.
  for (const std::string_view alphabet : {"ab", "abc"}) {
    const LemmaSuiteResult lem =
        run_word_lemma_suite(64, 2000, alphabet, 0xfeedULL ^ alphabet.size());
    std::size_t total = 0;
    for (const auto& [_, count] : lem.instances) total += count;
    report(std::string("word-lemmas-") + (alphabet.size() == 2 ? "binary"
                                                               : "ternary"),
           lem.counterexamples.empty(),
           lem.counterexamples.empty()
               ? std::to_string(total) + " instances"
               : lem.counterexamples.front());
  }

  // Correlation structure, capped: the pair scan is 4^n.
  {
    const std::size_t cap = std::min<std::size_t>(n_max, 12);
    bool ok = true;
    std::string detail;
    std::size_t total = 0;
    for (std::size_t n = 1; n <= cap && ok; ++n) {
      const auto res = check_correlation_structure(gamma, n);
      ok = res.ok;
      detail = res.detail;
      total += res.observed;
    }
    report("correlation-structure", ok,
           ok ? "distinct correlations up to n=" + std::to_string(cap) +
                    " all accounted for (" + std::to_string(total) + ")"
              : detail);
  }

  // Bound inequalities against the enumerated counts.
  {
    std::string bad;
    for (std::size_t n = 2; n <= n_max && bad.empty(); ++n) {
      const BigInt count(gamma[n].kappa());
      const BigInt bound = counting_bound(n);
      if (count > bound)
        bad = "kappa_" + std::to_string(n) + " = " +
              std::to_string(gamma[n].kappa()) + " exceeds counting bound " +
              bound.str();
      const double l = std::log(static_cast<double>(n));
      if (std::log(static_cast<double>(gamma[n].kappa())) >=
          new_upper_bound(n) * l * l)
        bad = "normalized kappa_" + std::to_string(n) +
              " not below the upper bound";
      if (log_big(bound) >= log_closed_form_bound(n))
        bad = "counting bound not below its closed form at n=" +
              std::to_string(n);
    }
    report("bound-inequalities", bad.empty(),
           bad.empty() ? "n <= " + std::to_string(n_max) : bad);
  }

  return results;
}

}  // namespace periodica
