#include "schurlab/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "schurlab/schur_ring.hpp"

namespace schurlab {
namespace {

bool has_kind(const PermGroupSpec& s, GroupKind k) {
  return std::find(s.generators.begin(), s.generators.end(), k) != s.generators.end();
}

void validate_spec(const PermGroupSpec& s) {
  if (s.n < 1 || s.n > 64) throw std::invalid_argument("group length must be in [1,64]");
  if (s.full && !s.generators.empty())
    throw std::invalid_argument("full symmetric spec takes no extra generators");
  std::set<GroupKind> seen;
  for (GroupKind k : s.generators) {
    if (k == GroupKind::full_symmetric)
      throw std::invalid_argument("full_symmetric cannot appear in a product");
    if (!seen.insert(k).second) throw std::invalid_argument("duplicate kind in product");
  }
  if (!s.full && s.generators.empty()) throw std::invalid_argument("empty group spec");
  if (has_kind(s, GroupKind::decimation) && s.n < 2)
    throw std::invalid_argument("decimation requires n >= 2");
}

// Images of x under the spec's generator set (not the whole group).
std::vector<Word> generator_images(const PermGroupSpec& s, const Word& x) {
  std::vector<Word> out;
  if (s.full) {
    // Adjacent transpositions generate S_n; swapping bits i and i+1 is enough
    // for orbit closure and avoids materializing n! permutations.
    for (int i = 0; i + 1 < s.n; ++i) {
      std::uint64_t a = (x.mask >> i) & 1, b = (x.mask >> (i + 1)) & 1;
      if (a != b) out.push_back(Word{s.n, x.mask ^ (std::uint64_t{3} << i)});
    }
    return out;
  }
  for (GroupKind k : s.generators) {
    switch (k) {
      case GroupKind::cyclic:
        out.push_back(cyclic_shift(x, 1));
        break;
      case GroupKind::reversal:
        out.push_back(reverse(x));
        break;
      case GroupKind::decimation:
        for (int a = 2; a < s.n; ++a)
          if (std::gcd(a, s.n) == 1) out.push_back(decimate(x, a));
        break;
      case GroupKind::full_symmetric:
        break;
    }
  }
  return out;
}

}  // namespace

PermGroupSpec PermGroupSpec::named(int n, std::string_view code) {
  PermGroupSpec s;
  s.n = n;
  if (code == "sn") {
    s.full = true;
  } else if (code == "cn") {
    s.generators = {GroupKind::cyclic};
  } else if (code == "dn") {
    s.generators = {GroupKind::decimation};
  } else if (code == "hn") {
    s.generators = {GroupKind::reversal};
  } else if (code == "hc") {
    s.generators = {GroupKind::reversal, GroupKind::cyclic};
  } else if (code == "dc") {
    s.generators = {GroupKind::decimation, GroupKind::cyclic};
  } else if (code == "hdc") {
    s.generators = {GroupKind::reversal, GroupKind::decimation, GroupKind::cyclic};
  } else {
    throw std::invalid_argument("unknown group code: " + std::string(code));
  }
  validate_spec(s);
  return s;
}

std::string PermGroupSpec::name() const {
  if (full) return "sn";
  std::string s;
  if (has_kind(*this, GroupKind::reversal)) s += 'h';
  if (has_kind(*this, GroupKind::decimation)) s += 'd';
  if (has_kind(*this, GroupKind::cyclic)) s += 'c';
  if (s == "h" || s == "d" || s == "c") s += 'n';
  return s;
}

Permutation identity_permutation(int n) {
  Permutation p{n, std::vector<int>(static_cast<std::size_t>(n))};
  std::iota(p.sigma.begin(), p.sigma.end(), 0);
  return p;
}

Word apply(const Permutation& p, const Word& x) {
  if (p.n != x.n) throw std::invalid_argument("length mismatch in permutation action");
  std::uint64_t m = 0;
  for (int i = 0; i < p.n; ++i)
    if ((x.mask >> p.sigma[i]) & 1) m |= std::uint64_t{1} << i;
  return Word{x.n, m};
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n != q.n) throw std::invalid_argument("length mismatch in composition");
  Permutation r{p.n, std::vector<int>(static_cast<std::size_t>(p.n))};
  // apply(r, x) == apply(q, apply(p, x))
  for (int i = 0; i < p.n; ++i) r.sigma[i] = p.sigma[q.sigma[i]];
  return r;
}

PermGroup build_group(const PermGroupSpec& spec, const Caps& caps) {
  validate_spec(spec);
  PermGroup g{spec, {}};
  if (spec.full) return g;

  const int n = spec.n;
  std::vector<Permutation> gens;
  for (GroupKind k : spec.generators) {
    switch (k) {
      case GroupKind::cyclic: {
        Permutation p = identity_permutation(n);
        for (int i = 0; i < n; ++i) p.sigma[i] = (i + 1) % n;
        gens.push_back(std::move(p));
        break;
      }
      case GroupKind::reversal: {
        Permutation p = identity_permutation(n);
        for (int i = 0; i < n; ++i) p.sigma[i] = n - 1 - i;
        gens.push_back(std::move(p));
        break;
      }
      case GroupKind::decimation: {
        for (int a = 2; a < n; ++a) {
          if (std::gcd(a, n) != 1) continue;
          Permutation p = identity_permutation(n);
          for (int i = 0; i < n; ++i) p.sigma[i] = static_cast<int>((1LL * a * i) % n);
          gens.push_back(std::move(p));
        }
        break;
      }
      case GroupKind::full_symmetric:
        break;
    }
  }

  std::set<Permutation> closure{identity_permutation(n)};
  std::vector<Permutation> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.back());
    frontier.pop_back();
    for (const Permutation& gen : gens) {
      Permutation next = compose(cur, gen);
      if (closure.insert(next).second) {
        if (closure.size() > caps.max_group_size)
          throw std::length_error("group closure exceeds size bound");
        frontier.push_back(std::move(next));
      }
    }
  }
  g.elements.assign(closure.begin(), closure.end());
  return g;
}

std::vector<Word> orbit(const Word& x, const PermGroup& g) {
  if (x.n != g.spec.n) throw std::invalid_argument("length mismatch in orbit");
  if (g.spec.full) return weight_class(x.n, weight(x));
  std::set<Word> seen{x};
  std::vector<Word> frontier{x};
  while (!frontier.empty()) {
    Word cur = frontier.back();
    frontier.pop_back();
    for (const Word& img : generator_images(g.spec, cur))
      if (seen.insert(img).second) frontier.push_back(img);
  }
  return {seen.begin(), seen.end()};
}

SPartition make_partition(int n, const PermGroup& g, const Caps& caps) {
  if (n != g.spec.n) throw std::invalid_argument("length mismatch in partition");
  require_enumerable(n, caps);
  SPartition part;
  part.n = n;
  part.spec = g.spec;
  part.orbit_of.assign(std::size_t{1} << n, -1);

  // Ascending scan: the first unvisited mask is its orbit's minimum.
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (part.orbit_of[m] >= 0) continue;
    auto orb = orbit(Word{n, m}, g);
    const auto idx = static_cast<std::int32_t>(part.orbits.size());
    for (const Word& w : orb) part.orbit_of[w.mask] = idx;
    part.orbits.push_back(std::move(orb));
  }
  return part;
}

bool SPartition::check_sring_axioms(int max_pairs, std::uint64_t seed) const {
  // Axiom 1: the identity is its own block.
  if (orbits.empty() || orbits.front().size() != 1 || orbits.front().front().mask != 0)
    return false;
  // Axiom 2 (inverse-closed blocks) is automatic: every element of Z_2^n is
  // an involution, so T^{-1} = T for every block.

  // Axiom 3: products of block sums lie in the span of block sums.
  const long long r = static_cast<long long>(orbits.size());
  std::vector<std::pair<int, int>> pairs;
  if (r * r <= max_pairs) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) pairs.emplace_back(i, j);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> pick(0, r - 1);
    for (int t = 0; t < max_pairs; ++t)
      pairs.emplace_back(static_cast<int>(pick(rng)), static_cast<int>(pick(rng)));
  }
  for (auto [i, j] : pairs) {
    auto prod = algebra_mul(simple_quantity(orbits[i]), simple_quantity(orbits[j]));
    std::vector<long long> per_orbit(orbits.size(), -1);
    for (const auto& [mask, c] : prod.coeffs) {
      auto k = static_cast<std::size_t>(orbit_of[mask]);
      if (per_orbit[k] == -1)
        per_orbit[k] = c;
      else if (per_orbit[k] != c)
        return false;
    }
    // A block partially covered by the support shows up as a member with
    // coefficient 0 while the block's recorded coefficient is nonzero.
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      if (per_orbit[k] == -1) continue;
      std::size_t present = 0;
      for (const Word& w : orbits[k]) present += prod.coeffs.count(w.mask);
      if (present != orbits[k].size()) return false;
    }
  }
  return true;
}

bool is_s_subgroup(const std::vector<Word>& words, const PermGroup& g) {
  if (words.empty()) return false;
  const int n = words.front().n;
  if (n != g.spec.n) throw std::invalid_argument("length mismatch");
  std::vector<bool> member(std::size_t{1} << n, false);
  for (const Word& w : words) {
    if (w.n != n) throw std::invalid_argument("mixed lengths");
    member[w.mask] = true;
  }
  if (!member[0]) return false;
  for (const Word& u : words)
    for (const Word& v : words)
      if (!member[u.mask ^ v.mask]) return false;
  for (const Word& w : words)
    for (const Word& img : generator_images(g.spec, w))
      if (!member[img.mask]) return false;
  return true;
}

}  // namespace schurlab
