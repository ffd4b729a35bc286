#include "periodica/enumeration.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <future>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "periodica/errors.hpp"

namespace periodica {

namespace {

// Autocorrelation of a word packed as a bitmask (position i = bit i): shift
// p is a period iff the word agrees with itself shifted p places on the low
// n - p bits. This is the definition run in word-parallel form, one compare
// per shift instead of per character.
std::uint64_t autocorr_mask(std::uint64_t w, std::size_t n) {
  std::uint64_t acc = 1;
  for (std::size_t p = 1; p < n; ++p) {
    const std::uint64_t overlap = (~std::uint64_t{0}) >> (64 - (n - p));
    if (((w ^ (w >> p)) & overlap) == 0) acc |= std::uint64_t{1} << p;
  }
  return acc;
}

// Words with bit 0 clear (first letter fixed), bits 1..pbits equal to cls,
// and bits pbits+1..n-1 free.
std::unordered_set<std::uint64_t> enumerate_class(std::size_t n,
                                                  std::uint64_t cls,
                                                  unsigned pbits) {
  std::unordered_set<std::uint64_t> out;
  const std::size_t freebits = n - 1 - pbits;
  const std::uint64_t base = cls << 1;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << freebits); ++x)
    out.insert(autocorr_mask(base | (x << (1 + pbits)), n));
  return out;
}

}  // namespace

bool GammaSet::contains(const Autocorrelation& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

GammaSet enumerate_gamma(std::size_t n, unsigned jobs, std::size_t ceiling) {
  const std::size_t cap = std::min(ceiling, kHardEnumerationCeiling);
  if (n > cap)
    throw CapacityError(
        "enumerating 2^" + std::to_string(n == 0 ? 0 : n - 1) +
        " words of length " + std::to_string(n) + " exceeds the ceiling " +
        std::to_string(cap) + "; raise the ceiling (structural cap " +
        std::to_string(kHardEnumerationCeiling) + ") or reuse cached sets");
  if (n == 0) return GammaSet{0, {Autocorrelation{}}};
  if (jobs == 0) jobs = 1;

  // Split the space by fixed prefixes right after the pinned first letter;
  // every worker unions its classes locally and the merge is a set union,
  // so the member list is independent of the job count.
  const std::size_t freebits = n - 1;
  unsigned pbits = 0;
  while ((std::uint64_t{1} << pbits) < jobs && pbits < freebits) ++pbits;
  const std::uint64_t classes = std::uint64_t{1} << pbits;

  std::vector<std::future<std::unordered_set<std::uint64_t>>> parts;
  for (unsigned t = 0; t < jobs; ++t) {
    parts.push_back(std::async(std::launch::async, [=] {
      std::unordered_set<std::uint64_t> local;
      for (std::uint64_t c = t; c < classes; c += jobs) {
        auto piece = enumerate_class(n, c, pbits);
        local.merge(piece);
      }
      return local;
    }));
  }

  std::unordered_set<std::uint64_t> merged;
  for (auto& part : parts) {
    auto piece = part.get();
    merged.merge(piece);
  }

  GammaSet gamma{n, {}};
  gamma.members.reserve(merged.size());
  for (std::uint64_t m : merged)
    gamma.members.emplace_back(Bitvector::from_mask(m, n));
  std::sort(gamma.members.begin(), gamma.members.end());
  return gamma;
}

GammaCache::GammaCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path GammaCache::path_for(std::size_t n) const {
  return dir_ / ("gamma_" + std::to_string(n) + ".txt");
}

std::optional<GammaSet> GammaCache::load(std::size_t n) const {
  const std::filesystem::path path = path_for(n);
  std::ifstream in(path);
  if (!in) {
    if (std::filesystem::exists(path))
      throw CacheError("cache file exists but cannot be opened: " +
                       path.string());
    return std::nullopt;
  }

  const auto bad = [&path](std::size_t lineno, const std::string& what) {
    return CacheError("cache file " + path.string() + " line " +
                      std::to_string(lineno) + ": " + what);
  };

  std::string header;
  if (!std::getline(in, header)) throw bad(1, "missing header");
  std::size_t header_n = 0, header_kappa = 0;
  if (std::sscanf(header.c_str(), "# n=%zu kappa=%zu", &header_n,
                  &header_kappa) != 2 ||
      header_n != n)
    throw bad(1, "bad header '" + header + "' (expected '# n=" +
                     std::to_string(n) + " kappa=<count>')");

  GammaSet gamma{n, {}};
  gamma.members.reserve(header_kappa);
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.size() != n)
      throw bad(lineno, "entry '" + line + "' is not " + std::to_string(n) +
                            " characters");
    Autocorrelation entry;
    try {
      entry = Autocorrelation::parse(line);
    } catch (const DomainError& e) {
      throw bad(lineno, "entry '" + line + "': " + e.what());
    }
    if (!gamma.members.empty() && !(gamma.members.back() < entry))
      throw bad(lineno, "entries out of ascending order at '" + line + "'");
    gamma.members.push_back(std::move(entry));
  }
  if (gamma.members.size() != header_kappa)
    throw CacheError("cache file " + path.string() + " holds " +
                     std::to_string(gamma.members.size()) +
                     " entries but the header says " +
                     std::to_string(header_kappa));
  return gamma;
}

void GammaCache::store(const GammaSet& gamma) const {
  std::filesystem::create_directories(dir_);
  const std::filesystem::path path = path_for(gamma.n);

  // Unique sibling, then rename: readers either see the old file or the
  // complete new one, never a torn write.
  static std::atomic<unsigned> seq{0};
  std::filesystem::path tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid()) + "-" +
         std::to_string(seq.fetch_add(1));

  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot create " + tmp.string());
    out << "# n=" << gamma.n << " kappa=" << gamma.kappa() << "\n";
    for (const Autocorrelation& s : gamma.members) out << s.str() << "\n";
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw CacheError("short write to " + tmp.string());
    }
  }

  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw CacheError("cannot move " + tmp.string() + " into place: " +
                     ec.message());
  }
}

GammaSet GammaCache::get_or_enumerate(std::size_t n, unsigned jobs,
                                      std::size_t ceiling, bool persist) {
  if (auto cached = load(n)) return *std::move(cached);
  GammaSet gamma = enumerate_gamma(n, jobs, ceiling);
  if (persist) store(gamma);
  return gamma;
}

std::size_t kappa(std::size_t n, GammaCache& cache, unsigned jobs,
                  std::size_t ceiling) {
  return cache.get_or_enumerate(n, jobs, ceiling).kappa();
}

bool is_valid_autocorrelation(const Bitvector& s, GammaCache& cache,
                              unsigned jobs, std::size_t ceiling) {
  if (s.empty())
    throw DomainError("autocorrelation candidates must be nonempty");
  if (!s.test(0)) return false;
  const GammaSet gamma = cache.get_or_enumerate(s.size(), jobs, ceiling);
  return gamma.contains(Autocorrelation(s));
}

std::optional<Word> witness(const Bitvector& s) {
  const std::size_t n = s.size();
  if (n == 0) throw DomainError("witness needs a nonempty bit vector");
  if (!s.test(0)) return std::nullopt;

  std::vector<std::size_t> set_shifts;
  for (std::size_t p = 1; p < n; ++p)
    if (s.test(p)) set_shifts.push_back(p);

  std::string u(n, 'a');

  // Each set shift p pins u[m] to u[m - p], so most positions are forced
  // and the tree only branches where no set shift reaches back. Clear
  // shifts cannot be checked incrementally (their last constrained pair
  // involves the final position), so completed words are verified whole.
  const auto matches = [&]() {
    const Autocorrelation got = autocorrelation(Word(u));
    return got.bits() == s;
  };

  const auto dfs = [&](auto&& self, std::size_t m) -> bool {
    if (m == n) return matches();
    char forced = 0;
    for (std::size_t p : set_shifts) {
      if (p > m) break;
      const char c = u[m - p];
      if (forced != 0 && forced != c) return false;
      forced = c;
    }
    if (forced != 0) {
      u[m] = forced;
      return self(self, m + 1);
    }
    for (char c : {'a', 'b'}) {
      u[m] = c;
      if (self(self, m + 1)) return true;
    }
    return false;
  };

  if (dfs(dfs, 0)) return Word(u);
  return std::nullopt;
}

}  // namespace periodica
