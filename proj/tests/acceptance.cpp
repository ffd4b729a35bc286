// End-to-end checks over the whole library, one line per criterion. Exits
// nonzero if anything fails, so the binary doubles as a CI gate.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "periodica/bounds.hpp"
#include "periodica/chart_svg.hpp"
#include "periodica/closure.hpp"
#include "periodica/correlation.hpp"
#include "periodica/enumeration.hpp"
#include "periodica/periods.hpp"
#include "periodica/verify.hpp"
#include "periodica/word.hpp"

namespace {

using namespace periodica;
namespace fs = std::filesystem;

constexpr std::uint64_t kSeedBinary = 0xace5eedULL;
constexpr std::uint64_t kSeedTernary = 0xace5eedULL + 1;

std::vector<std::uint64_t> read_fixture(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::uint64_t> counts;
  std::uint64_t v = 0;
  while (in >> v) counts.push_back(v);
  return counts;
}

std::string word_for_mask(std::uint64_t mask, std::size_t n) {
  std::string s(n, 'a');
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) s[i] = 'b';
  return s;
}

// Just enough of an XML reader to catch unbalanced or mangled output.
std::string xml_problem(const std::string& text, const std::string& root) {
  std::vector<std::string> open;
  std::string first;
  std::size_t i = 0;
  while (true) {
    const std::size_t lt = text.find('<', i);
    if (lt == std::string::npos) break;
    if (text.compare(lt, 4, "<!--") == 0) {
      const std::size_t end = text.find("-->", lt);
      if (end == std::string::npos) return "unterminated comment";
      i = end + 3;
      continue;
    }
    if (text.compare(lt, 2, "<?") == 0) {
      const std::size_t end = text.find("?>", lt);
      if (end == std::string::npos) return "unterminated declaration";
      i = end + 2;
      continue;
    }
    const std::size_t gt = text.find('>', lt);
    if (gt == std::string::npos) return "unterminated tag";
    std::string inner = text.substr(lt + 1, gt - lt - 1);
    i = gt + 1;
    bool closing = false;
    bool selfclosing = false;
    if (!inner.empty() && inner.front() == '/') {
      closing = true;
      inner.erase(0, 1);
    }
    if (!inner.empty() && inner.back() == '/') {
      selfclosing = true;
      inner.pop_back();
    }
    const std::string name = inner.substr(0, inner.find_first_of(" \t\r\n"));
    if (name.empty()) return "empty tag name";
    if (first.empty()) first = name;
    if (closing) {
      if (open.empty() || open.back() != name)
        return "mismatched closing tag " + name;
      open.pop_back();
    } else if (!selfclosing) {
      open.push_back(name);
    }
  }
  if (!open.empty()) return "unclosed element " + open.back();
  if (first.empty()) return "no elements";
  if (first != root) return "root element is " + first + ", wanted " + root;
  return "";
}

class Runner {
 public:
  // body returns "" on success, a short failure description otherwise.
  void criterion(const std::string& label,
                 const std::function<std::string(std::string& note)>& body) {
    std::string note;
    std::string err;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      err = body(note);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::ostringstream line;
    if (err.empty()) {
      line << "[PASS] " << label;
      if (!note.empty()) line << ": " << note;
    } else {
      line << "[FAIL] " << label << ": " << err;
      failures_++;
    }
    line.setf(std::ios::fixed);
    line.precision(ms < 10 ? 2 : 0);
    line << " (" << ms << " ms)";
    std::cout << line.str() << std::endl;
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

}  // namespace

int main() {
  const fs::path scratch = fs::path(PERIODICA_TEST_SCRATCH) / "acceptance";
  std::error_code ec;
  fs::remove_all(scratch, ec);
  fs::create_directories(scratch);
  GammaCache cache{(scratch / "gamma").string()};

  Runner run;

  run.criterion("worked examples", [&](std::string& note) -> std::string {
    // Warm up so the timed section measures the calls, not first-touch cost.
    (void)autocorrelation(Word("abbaabba"));
    (void)correlate(Word("aabbaa"), Word("baabaa"));

    const auto t0 = std::chrono::steady_clock::now();
    const Autocorrelation ac = autocorrelation(Word("abbaabba"));
    const PeriodSet ps = period_set(Word("abbaabba"));
    const Correlation co = correlate(Word("aabbaa"), Word("baabaa"));
    const auto t1 = std::chrono::steady_clock::now();

    if (ac.str() != "10001001")
      return "autocorrelation(abbaabba) = " + ac.str();
    if (ps.str() != "{0,4,7}") return "period set = " + ps.str();
    if (co.str() != "000100")
      return "correlate(aabbaa,baabaa) = " + co.str();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms >= 1.0) return "took " + std::to_string(ms) + " ms, budget is 1";
    note = "exact, within budget";
    return "";
  });

  run.criterion("kappa agreement with the reference sequence",
                [&](std::string& note) -> std::string {
    const auto fixture = read_fixture(fs::path(PERIODICA_FIXTURE_DIR) /
                                      "a005434.txt");
    if (fixture.size() < 16) return "fixture has fewer than 16 lines";
    for (std::size_t n = 1; n <= 16; ++n) {
      const GammaSet gamma = enumerate_gamma(n);

      // Second, definition-chasing route: hash the naive period set of
      // every binary word of length n.
      std::set<std::string> seen;
      for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask)
        seen.insert(
            to_autocorrelation(period_set_naive(Word(word_for_mask(mask, n))))
                .str());

      if (gamma.kappa() != seen.size())
        return "n=" + std::to_string(n) + ": enumerator found " +
               std::to_string(gamma.kappa()) + ", naive scan found " +
               std::to_string(seen.size());
      if (gamma.kappa() != fixture[n - 1])
        return "n=" + std::to_string(n) + ": counted " +
               std::to_string(gamma.kappa()) + ", fixture says " +
               std::to_string(fixture[n - 1]);
    }
    note = "two routes and the fixture agree for n = 1..16";
    return "";
  });

  run.criterion("upper bounds at enumerated lengths",
                [&](std::string& note) -> std::string {
    for (std::size_t n = 2; n <= 20; ++n) {
      const std::uint64_t k = cache.get_or_enumerate(n, 1).kappa();
      const double normalized =
          std::log(static_cast<double>(k)) /
          (std::log(static_cast<double>(n)) * std::log(static_cast<double>(n)));
      if (!(normalized < new_upper_bound(n)))
        return "n=" + std::to_string(n) + ": ln(kappa)/ln^2 n = " +
               std::to_string(normalized) + " is not below " +
               std::to_string(new_upper_bound(n));
      if (BigInt(k) > counting_bound(n))
        return "n=" + std::to_string(n) + ": kappa " + std::to_string(k) +
               " exceeds the counting bound " + counting_bound(n).str();
    }
    note = "strict at every n = 2..20";
    return "";
  });

  run.criterion("irreducible round trips and certificates",
                [&](std::string& note) -> std::string {
    std::size_t sets = 0;
    for (std::size_t n = 1; n <= 16; ++n) {
      const GammaSet gamma = cache.get_or_enumerate(n, 1);
      for (const Autocorrelation& s : gamma.members) {
        ++sets;
        const PeriodSet p = to_period_set(s);
        const IrreducibleSet r = irreducible(p);
        if (forward_closure(r.elems, n) != p.periods)
          return s.str() + ": closure of " + r.str() +
                 " does not restore the period set";
        if (r.elems.empty() || (std::size_t{1} << (r.elems.size() - 1)) > n)
          return s.str() + ": generator " + r.str() + " is too large for n=" +
                 std::to_string(n);
        const QSequence qs = q_sequence(r);
        for (std::size_t i = 0; i < qs.entries.size(); ++i)
          if (qs.entries[i].q > (n >> i))
            return s.str() + ": q_" + std::to_string(i) + " = " +
                   std::to_string(qs.entries[i].q) + " exceeds n/2^i";
        for (ChoiceCase c : choicebound_cases(r, qs))
          if (c == ChoiceCase::kThree)
            return s.str() + ": case 3 occurred";
      }
    }
    note = std::to_string(sets) + " period sets over n = 1..16";
    return "";
  });

  run.criterion("correlation structure", [&](std::string& note)
                                             -> std::string {
    std::vector<GammaSet> gamma(13);
    gamma[0] = GammaSet{0, {Autocorrelation{}}};
    std::vector<std::uint64_t> kappas{1};
    for (std::size_t j = 1; j <= 12; ++j) {
      gamma[j] = cache.get_or_enumerate(j, 1);
      kappas.push_back(gamma[j].kappa());
    }
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
      const CorrelationStructureResult res =
          check_correlation_structure(gamma, n);
      if (!res.ok) return "n=" + std::to_string(n) + ": " + res.detail;
      const std::uint64_t expected =
          delta(n, std::span<const std::uint64_t>(kappas.data(), n + 1));
      if (res.observed != expected)
        return "n=" + std::to_string(n) + ": observed " +
               std::to_string(res.observed) + " correlations, kappa sum is " +
               std::to_string(expected);
      total += res.observed;
    }
    note = std::to_string(total) + " distinct correlations over n = 1..12";
    return "";
  });

  run.criterion("witness soundness", [&](std::string& note) -> std::string {
    std::size_t confirmed = 0;
    std::size_t rejected = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
      const GammaSet gamma = cache.get_or_enumerate(n, 1);
      for (const Autocorrelation& s : gamma.members) {
        const std::optional<Word> w = witness(s.bits());
        if (!w) return s.str() + ": no witness found";
        if (autocorrelation(*w).str() != s.str())
          return s.str() + ": witness " + w->str() +
                 " has autocorrelation " + autocorrelation(*w).str();
        ++confirmed;
      }
      if (n > 10) continue;
      std::set<std::string> members;
      for (const Autocorrelation& s : gamma.members) members.insert(s.str());
      for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::string bits(n, '0');
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1) bits[i] = '1';
        if (members.count(bits)) continue;
        if (witness(Bitvector::parse(bits)))
          return bits + ": witness exists for a non-member";
        ++rejected;
      }
    }
    note = std::to_string(confirmed) + " members realized, " +
           std::to_string(rejected) + " non-members rejected";
    return "";
  });

  run.criterion("randomized word lemmas", [&](std::string& note)
                                              -> std::string {
    std::size_t total = 0;
    for (const auto& [alphabet, seed] :
         {std::pair<std::string_view, std::uint64_t>{"ab", kSeedBinary},
          {"abc", kSeedTernary}}) {
      const LemmaSuiteResult res =
          run_word_lemma_suite(64, 10000, alphabet, seed);
      if (!res.counterexamples.empty()) return res.counterexamples.front();
      if (res.instances.empty()) return "no lemma instances recorded";
      for (const auto& [lemma, count] : res.instances) {
        if (count < 10000)
          return lemma + " saw only " + std::to_string(count) +
                 " instances on alphabet " + std::string(alphabet);
        total += count;
      }
    }
    note = std::to_string(total) + " instances, zero counterexamples";
    return "";
  });

  const fs::path csv_path = scratch / "bounds.csv";

  run.criterion("bounds table and chart shape", [&](std::string& note)
                                                    -> std::string {
    const std::vector<BoundsRow> rows = build_table(500, &cache);
    if (rows.size() != 499)
      return "expected 499 rows, built " + std::to_string(rows.size());

    const double lower_ref = 1.0 / (2.0 * std::log(2.0));
    const double upper_ref = 1.0 / (2.0 * std::log(1.5));
    std::size_t cached = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const BoundsRow& r = rows[i];
      if (i > 0 && !(r.new_upper < rows[i - 1].new_upper))
        return "new_upper is not strictly decreasing at n=" +
               std::to_string(r.n);
      if (std::fabs(r.go_lower - lower_ref) > 1e-6 ||
          std::fabs(r.go_lower - 0.72135) > 1e-5)
        return "go_lower drifted at n=" + std::to_string(r.n);
      if (std::fabs(r.go_upper - upper_ref) > 1e-6 ||
          std::fabs(r.go_upper - 1.2331) > 1e-4)
        return "go_upper drifted at n=" + std::to_string(r.n);
      if (r.rr_lower && !(*r.rr_lower < r.go_lower))
        return "rr_lower is not below go_lower at n=" + std::to_string(r.n);
      if (r.kappa) {
        ++cached;
        if (!r.normalized) return "cached row without a normalized value";
        if (!(*r.normalized < r.new_upper))
          return "normalized count breaks the upper bound at n=" +
                 std::to_string(r.n);
        if (r.rr_lower && !(*r.normalized > *r.rr_lower))
          return "normalized count falls below rr_lower at n=" +
                 std::to_string(r.n);
      }
    }
    if (cached == 0) return "no cached counts reached the table";

    {
      std::ofstream csv(csv_path);
      write_bounds_csv(csv, rows);
    }
    std::ostringstream svg;
    write_bounds_svg(svg, rows);
    const std::string problem = xml_problem(svg.str(), "svg");
    if (!problem.empty()) return "svg: " + problem;

    note = "499 rows, " + std::to_string(cached) + " with counts, svg is "
           "well-formed";
    return "";
  });

  run.criterion("convergence note in the CSV", [&](std::string& note)
                                                   -> std::string {
    std::ifstream in(csv_path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (text.empty()) return "CSV from the previous criterion is missing";
    if (text.find("# note:") == std::string::npos)
      return "no trailing note comment";
    if (text.find("far from convergence at n = 500") == std::string::npos)
      return "note does not flag the lack of convergence";
    note = "present";
    return "";
  });

  const int failed = run.failures();
  if (failed == 0) {
    std::cout << "all criteria passed" << std::endl;
    return 0;
  }
  std::cout << failed << " criteria FAILED" << std::endl;
  return 1;
}
