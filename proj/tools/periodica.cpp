// Command-line surface over the periodica library. Subcommands map onto the
// library modules one-to-one; the only logic living here is argument
// handling, output formatting and the exit-code contract:
//
//   0  success (including negative answers like "invalid" or "none")
//   1  verification failure or a broken internal invariant
//   2  usage or input error
//   3  environment or capacity error (ceiling, unreadable cache, bad paths)

#include <algorithm>
#include <cctype>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "periodica/bounds.hpp"
#include "periodica/chart_svg.hpp"
#include "periodica/closure.hpp"
#include "periodica/correlation.hpp"
#include "periodica/enumeration.hpp"
#include "periodica/errors.hpp"
#include "periodica/periods.hpp"
#include "periodica/verify.hpp"
#include "periodica/word.hpp"

namespace {

using nlohmann::json;
using namespace periodica;

enum class Format { kText, kJson, kCsv };

const std::map<std::string, Format> kFormatNames{
    {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};

Word parse_word(const std::string& raw) {
  if (raw.empty()) throw DomainError("words must be nonempty");
  for (unsigned char c : raw)
    if (!std::isprint(c))
      throw DomainError("words must consist of printable characters");
  return Word(raw);
}

Bitvector parse_bits(const std::string& raw) {
  if (raw.empty()) throw DomainError("bit strings must be nonempty");
  return Bitvector::parse(raw);
}

std::string brace_join(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// Routes writes to a file when a path is given, to stdout for "" or "-".
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::trunc);
      if (!file_) throw DomainError("cannot open output path: " + path);
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = &std::cout;
};

int run_periods(const std::string& raw, Format fmt) {
  const Word u = parse_word(raw);
  const PeriodSet ps = period_set(u);
  const Autocorrelation ac = autocorrelation(u);
  const IrreducibleSet r = irreducible(ps);
  const std::optional<std::size_t> bp = basic_period(ps);
  if (fmt == Format::kJson) {
    json out{{"word", u.str()},
             {"n", u.size()},
             {"periods", ps.periods},
             {"basic_period", bp ? json(*bp) : json(nullptr)},
             {"autocorrelation", ac.str()},
             {"irreducible", r.elems}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "word: " << u.str() << '\n'
              << "n: " << u.size() << '\n'
              << "periods: " << ps.str() << '\n'
              << "basic period: " << (bp ? std::to_string(*bp) : "none")
              << '\n'
              << "autocorrelation: " << ac.str() << '\n'
              << "irreducible: " << r.str() << '\n';
  }
  return 0;
}

int run_autocorr(const std::string& raw, Format fmt) {
  const Word u = parse_word(raw);
  const Autocorrelation ac = autocorrelation(u);
  if (fmt == Format::kJson) {
    json out{{"word", u.str()}, {"n", u.size()}, {"autocorrelation", ac.str()}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << ac.str() << '\n';
  }
  return 0;
}

int run_correlate(const std::string& raw_u, const std::string& raw_v,
                  Format fmt) {
  const Word u = parse_word(raw_u);
  const Word v = parse_word(raw_v);
  const Correlation t = correlate(u, v);
  const Decomposition d = decompose(t);
  if (fmt == Format::kJson) {
    json out{{"u", u.str()},
             {"v", v.str()},
             {"correlation", t.str()},
             {"j", d.j},
             {"s", d.s.str()}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "correlation: " << t.str() << '\n'
              << "j: " << d.j << '\n'
              << "s: " << (d.j == 0 ? "(empty)" : d.s.str()) << '\n';
  }
  return 0;
}

int run_closure(std::size_t n, const std::vector<std::size_t>& set,
                Format fmt) {
  const auto closed = forward_closure(set, n);
  if (fmt == Format::kJson) {
    json out{{"n", n}, {"set", set}, {"closure", closed}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << brace_join(closed) << '\n';
  }
  return 0;
}

int run_irreducible(std::size_t n, const std::vector<std::size_t>& set,
                    bool strict, Format fmt) {
  const auto closed = forward_closure(set, n);  // also validates ranges
  if (strict) {
    std::vector<std::size_t> given(set.begin(), set.end());
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given.empty() || given.front() != 0 || given != closed)
      throw DomainError(
          "--strict requires a forward-closed set containing 0; closure is " +
          brace_join(closed));
  }
  const IrreducibleSet r{n, irreducible_elements(set, n)};

  // Shift certificates exist exactly when the input generates a realizable
  // period set; for arbitrary integer sets their absence is an answer, not
  // an error.
  std::optional<QSequence> qs;
  std::vector<ChoiceCase> cases;
  try {
    qs = q_sequence(r);
    cases = choicebound_cases(r, *qs);
  } catch (const InvariantError&) {
    qs.reset();
  }

  if (fmt == Format::kJson) {
    json out{{"n", n}, {"set", set}, {"irreducible", r.elems}};
    if (qs) {
      json entries = json::array();
      for (const auto& e : qs->entries) entries.push_back({{"a", e.a}, {"q", e.q}});
      json case_list = json::array();
      for (ChoiceCase c : cases) case_list.push_back(static_cast<int>(c));
      out["q_sequence"] = entries;
      out["cases"] = case_list;
    } else {
      out["q_sequence"] = nullptr;
      out["cases"] = nullptr;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "irreducible: " << r.str() << '\n';
    if (qs) {
      std::cout << "q-sequence:";
      for (const auto& e : qs->entries)
        std::cout << " (" << e.a << ',' << e.q << ')';
      std::cout << '\n' << "cases:";
      if (cases.empty()) std::cout << " (none)";
      for (ChoiceCase c : cases) std::cout << ' ' << static_cast<int>(c);
      std::cout << '\n';
    } else {
      std::cout << "q-sequence: none (not the generator of a realizable "
                   "period set)\n";
    }
  }
  return 0;
}

int run_enumerate(std::size_t n, unsigned jobs, std::size_t ceiling,
                  const std::string& dir, const std::string& out_path,
                  Format fmt) {
  GammaCache cache{dir};
  const GammaSet gamma = cache.get_or_enumerate(n, jobs, ceiling);
  if (!out_path.empty()) {
    OutputTarget target{out_path};
    for (const Autocorrelation& s : gamma.members)
      target.stream() << s.str() << '\n';
    if (out_path == "-") return 0;  // raw listing requested, skip the summary
  }
  if (fmt == Format::kJson) {
    json out{{"n", n},
             {"kappa", gamma.kappa()},
             {"cache", cache.path_for(n).string()}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "n=" << n << " kappa=" << gamma.kappa() << '\n'
              << "cache: " << cache.path_for(n).string() << '\n';
  }
  return 0;
}

int run_witness(const std::string& raw, Format fmt) {
  const Bitvector bits = parse_bits(raw);
  const std::optional<Word> w = witness(bits);
  if (fmt == Format::kJson) {
    json out{{"bits", bits.str()},
             {"witness", w ? json(w->str()) : json(nullptr)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (w ? w->str() : std::string("none")) << '\n';
  }
  return 0;
}

int run_validate(const std::string& raw, unsigned jobs, std::size_t ceiling,
                 const std::string& dir, Format fmt) {
  const Bitvector bits = parse_bits(raw);
  GammaCache cache{dir};
  const bool ok = is_valid_autocorrelation(bits, cache, jobs, ceiling);
  if (fmt == Format::kJson) {
    json out{{"bits", bits.str()}, {"valid", ok}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (ok ? "valid" : "invalid") << '\n';
  }
  return 0;
}

int run_bounds(std::size_t max_n, const std::string& dir,
               const std::string& out_path, const std::string& svg_path,
               Format fmt) {
  GammaCache cache{dir};
  const std::vector<BoundsRow> rows = build_table(max_n, &cache);
  OutputTarget target{out_path};
  if (fmt == Format::kJson) {
    json arr = json::array();
    for (const BoundsRow& r : rows) {
      json row{{"n", r.n},
               {"new_upper", r.new_upper},
               {"go_upper", r.go_upper},
               {"go_lower", r.go_lower},
               {"counting_bound", r.counting.str()},
               {"counting_bound_norm", r.counting_norm},
               {"delta_upper", r.delta_upper}};
      row["kappa"] = r.kappa ? json(*r.kappa) : json(nullptr);
      row["normalized"] = r.normalized ? json(*r.normalized) : json(nullptr);
      row["rr_lower"] = r.rr_lower ? json(*r.rr_lower) : json(nullptr);
      if (!r.cache_note.empty()) row["cache_note"] = r.cache_note;
      arr.push_back(std::move(row));
    }
    target.stream() << arr.dump(2) << '\n';
  } else {
    write_bounds_csv(target.stream(), rows);
  }
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::trunc);
    if (!svg) throw DomainError("cannot open SVG path: " + svg_path);
    write_bounds_svg(svg, rows);
  }
  return 0;
}

int run_verify(std::size_t n_max, unsigned jobs, std::size_t ceiling,
               const std::string& dir, Format fmt) {
  GammaCache cache{dir};
  const std::vector<VerifyResult> results =
      run_verification(cache, n_max, jobs, ceiling);
  bool all_passed = true;
  if (fmt == Format::kJson) {
    json arr = json::array();
    for (const VerifyResult& r : results) {
      all_passed = all_passed && r.passed;
      arr.push_back(
          {{"suite", r.suite}, {"passed", r.passed}, {"detail", r.detail}});
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const VerifyResult& r : results) {
      all_passed = all_passed && r.passed;
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite << ": "
                << r.detail << '\n';
    }
    std::cout << (all_passed ? "all suites passed" : "FAILURES above") << '\n';
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "periodica: periods, autocorrelations and correlations of words,\n"
      "forward closures and irreducible period sets, exhaustive\n"
      "autocorrelation enumeration, and bound tables over the counts"};
  app.require_subcommand(1);

  Format fmt = Format::kText;
  std::string gamma_dir = "gamma";
  unsigned jobs = 1;
  std::size_t ceiling = kDefaultEnumerationCeiling;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
  };
  const auto add_gamma_dir = [&](CLI::App* sub) {
    sub->add_option("--gamma-dir", gamma_dir,
                    "directory holding gamma_<n>.txt cache files")
        ->envname("PERIODICA_GAMMA_DIR")
        ->capture_default_str();
  };
  const auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "parallel workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_ceiling = [&](CLI::App* sub) {
    sub->add_option("--ceiling", ceiling,
                    "largest length enumeration will attempt (hard cap " +
                        std::to_string(kHardEnumerationCeiling) + ")")
        ->capture_default_str();
  };

  std::string word_arg, word_arg2, bits_arg;
  std::size_t n_arg = 0, max_n_arg = 0, verify_max_n = 12;
  std::vector<std::size_t> set_arg;
  std::string out_path, svg_path;
  bool strict = false;

  CLI::App* cmd_periods = app.add_subcommand(
      "periods", "period set, basic period, autocorrelation and generator");
  cmd_periods->add_option("word", word_arg, "word to analyze")->required();
  add_format(cmd_periods);

  CLI::App* cmd_autocorr =
      app.add_subcommand("autocorr", "autocorrelation of one word");
  cmd_autocorr->add_option("word", word_arg, "word to analyze")->required();
  add_format(cmd_autocorr);

  CLI::App* cmd_correlate = app.add_subcommand(
      "correlate", "correlation of two equal-length words, with its "
                   "zeros-then-autocorrelation decomposition");
  cmd_correlate->add_option("u", word_arg, "reference word")->required();
  cmd_correlate->add_option("v", word_arg2, "sliding word")->required();
  add_format(cmd_correlate);

  CLI::App* cmd_closure = app.add_subcommand(
      "closure", "forward closure of an integer set below a length");
  cmd_closure->add_option("--n", n_arg, "word length (universe is [0,n))")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_closure->add_option("--set", set_arg, "comma-separated elements")
      ->delimiter(',');
  add_format(cmd_closure);

  CLI::App* cmd_irreducible = app.add_subcommand(
      "irreducible",
      "minimal generator of a set under forward closure, with shift "
      "certificates when the set is realizable");
  cmd_irreducible->add_option("--n", n_arg, "word length (universe is [0,n))")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_irreducible->add_option("--set", set_arg, "comma-separated elements")
      ->delimiter(',');
  cmd_irreducible->add_flag(
      "--strict", strict,
      "reject inputs that are not forward-closed sets containing 0");
  add_format(cmd_irreducible);

  CLI::App* cmd_enumerate = app.add_subcommand(
      "enumerate", "enumerate all autocorrelations of one length into the "
                   "cache directory");
  cmd_enumerate->add_option("--n", n_arg, "word length")->required();
  add_jobs(cmd_enumerate);
  add_ceiling(cmd_enumerate);
  add_gamma_dir(cmd_enumerate);
  cmd_enumerate->add_option(
      "--out", out_path,
      "also write the member list here ('-' for stdout, replacing the "
      "summary)");
  add_format(cmd_enumerate);

  CLI::App* cmd_witness = app.add_subcommand(
      "witness", "lexicographically smallest binary word with the given "
                 "autocorrelation, or 'none'");
  cmd_witness->add_option("bits", bits_arg, "candidate bit string")
      ->required();
  add_format(cmd_witness);

  CLI::App* cmd_validate = app.add_subcommand(
      "validate", "is the bit string the autocorrelation of some word?");
  cmd_validate->add_option("bits", bits_arg, "candidate bit string")
      ->required();
  add_jobs(cmd_validate);
  add_ceiling(cmd_validate);
  add_gamma_dir(cmd_validate);
  add_format(cmd_validate);

  CLI::App* cmd_bounds = app.add_subcommand(
      "bounds", "CSV table of every bound for n = 2..max-n, plus counts "
                "where caches exist");
  cmd_bounds->add_option("--max-n", max_n_arg, "largest length, at least 2")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{5'000'000}));
  add_gamma_dir(cmd_bounds);
  cmd_bounds->add_option("--out", out_path, "CSV destination ('-' = stdout)");
  cmd_bounds->add_option("--svg", svg_path, "also render a line chart here");
  add_format(cmd_bounds);

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "run every cross-module invariant suite up to a length");
  cmd_verify->add_option("--max-n", verify_max_n, "largest enumerated length")
      ->capture_default_str();
  add_jobs(cmd_verify);
  add_ceiling(cmd_verify);
  add_gamma_dir(cmd_verify);
  add_format(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fmt == Format::kCsv && !cmd_bounds->parsed())
      throw DomainError("csv output only exists for the bounds table");
    if (cmd_periods->parsed()) return run_periods(word_arg, fmt);
    if (cmd_autocorr->parsed()) return run_autocorr(word_arg, fmt);
    if (cmd_correlate->parsed())
      return run_correlate(word_arg, word_arg2, fmt);
    if (cmd_closure->parsed()) return run_closure(n_arg, set_arg, fmt);
    if (cmd_irreducible->parsed())
      return run_irreducible(n_arg, set_arg, strict, fmt);
    if (cmd_enumerate->parsed())
      return run_enumerate(n_arg, jobs, ceiling, gamma_dir, out_path, fmt);
    if (cmd_witness->parsed()) return run_witness(bits_arg, fmt);
    if (cmd_validate->parsed())
      return run_validate(bits_arg, jobs, ceiling, gamma_dir, fmt);
    if (cmd_bounds->parsed())
      return run_bounds(max_n_arg, gamma_dir, out_path, svg_path, fmt);
    if (cmd_verify->parsed())
      return run_verify(verify_max_n, jobs, ceiling, gamma_dir, fmt);
    return 2;  // unreachable with require_subcommand(1)
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
