#include "schurlab/autocorr.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace schurlab {

int cross_correlation(const Word& x, const Word& y, long long k) {
  if (x.n != y.n) throw std::invalid_argument("length mismatch in correlation");
  return x.n - 2 * std::popcount(x.mask ^ cyclic_shift(y, k).mask);
}

AutocorrVector autocorr_vector(const Word& x) {
  AutocorrVector v{x.n, {}};
  v.values.reserve(static_cast<std::size_t>(x.n));
  for (int k = 0; k < x.n; ++k) v.values.push_back(cross_correlation(x, x, k));
  return v;
}

std::optional<int> two_level_offpeak(const Word& x) {
  if (x.n == 1) return std::nullopt;
  auto v = autocorr_vector(x);
  const int off = v.values[1];
  for (int k = 2; k < x.n; ++k)
    if (v.values[k] != off) return std::nullopt;
  return off;
}

bool check_divisibility(const Word& x) {
  const int a = weight(x);
  auto v = autocorr_vector(x);
  for (int k = 1; k < x.n; ++k) {
    const int p = v.values[k];
    if ((x.n - p) % 4 != 0) return false;
    if (p < x.n - 4 * a || p > x.n) return false;
  }
  return true;
}

bool decimation_diagram_check(const Word& x, long long a) {
  auto vx = autocorr_vector(x);
  auto vy = autocorr_vector(decimate(x, a));
  const int n = x.n;
  long long r = ((a % n) + n) % n;
  for (int k = 0; k < n; ++k)
    if (vy.values[k] != vx.values[static_cast<std::size_t>((r * k) % n)]) return false;
  return true;
}

namespace {

// Orbit of m under shifts, reversal, all decimations, and negation.
std::vector<std::uint64_t> symmetry_orbit(int n, std::uint64_t m) {
  std::set<std::uint64_t> seen{m};
  std::vector<std::uint64_t> frontier{m};
  std::vector<int> units;
  for (int a = 2; a < n; ++a)
    if (std::gcd(a, n) == 1) units.push_back(a);
  while (!frontier.empty()) {
    std::uint64_t cur = frontier.back();
    frontier.pop_back();
    Word w{n, cur};
    std::vector<std::uint64_t> images{cyclic_shift(w, 1).mask, reverse(w).mask,
                                      negate(w).mask};
    for (int a : units) images.push_back(decimate(w, a).mask);
    for (std::uint64_t img : images)
      if (seen.insert(img).second) frontier.push_back(img);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<TwoLevelClass> search_two_level(int n, const Caps& caps) {
  if (n < 2) throw std::invalid_argument("two-level search requires n >= 2");
  require_enumerable(n, caps);
  const std::uint64_t total = std::uint64_t{1} << n;

  // Scan shards only collect flat words; canonicalization happens on the
  // (few) survivors so the merge is deterministic.
  const unsigned shards = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  std::vector<std::future<std::vector<std::uint64_t>>> futures;
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t lo = total / shards * s;
    const std::uint64_t hi = (s + 1 == shards) ? total : total / shards * (s + 1);
    futures.push_back(std::async(std::launch::async, [n, lo, hi] {
      std::vector<std::uint64_t> hits;
      for (std::uint64_t m = lo; m < hi; ++m)
        if (two_level_offpeak(Word{n, m})) hits.push_back(m);
      return hits;
    }));
  }
  std::vector<std::uint64_t> flat;
  for (auto& f : futures) {
    auto part = f.get();
    flat.insert(flat.end(), part.begin(), part.end());
  }
  std::sort(flat.begin(), flat.end());

  std::map<std::uint64_t, TwoLevelClass> classes;
  std::set<std::uint64_t> assigned;
  for (std::uint64_t m : flat) {
    if (assigned.count(m)) continue;
    auto orb = symmetry_orbit(n, m);
    assigned.insert(orb.begin(), orb.end());
    Word rep{n, orb.front()};
    TwoLevelClass cls;
    cls.representative = rep;
    cls.weight = weight(rep);
    cls.offpeak = *two_level_offpeak(rep);
    cls.orbit_size = static_cast<long long>(orb.size());
    classes.emplace(rep.mask, std::move(cls));
  }
  std::vector<TwoLevelClass> out;
  out.reserve(classes.size());
  for (auto& [mask, cls] : classes) out.push_back(std::move(cls));
  return out;
}

}  // namespace schurlab
