#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schurlab/caps.hpp"
#include "schurlab/word.hpp"

namespace schurlab {

enum class GroupKind { full_symmetric, cyclic, decimation, reversal };

/// One of the coordinate-permutation group families, or a product of them.
/// The full symmetric group is never materialized; its orbits are weight
/// classes and membership tests reduce to popcounts.
struct PermGroupSpec {
  int n = 1;
  bool full = false;
  std::vector<GroupKind> generators;  //< subset of {cyclic, decimation, reversal}

  /// Named specs: sn, cn, dn, hn, hc, dc, hdc.
  static PermGroupSpec named(int n, std::string_view code);
  std::string name() const;

  friend bool operator==(const PermGroupSpec&, const PermGroupSpec&) = default;
};

/// Coordinate permutation acting by (p.x)_i = x_{sigma[i]}.
struct Permutation {
  int n = 1;
  std::vector<int> sigma;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

Permutation identity_permutation(int n);
Word apply(const Permutation& p, const Word& x);
/// Composite action: apply p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

struct PermGroup {
  PermGroupSpec spec;
  std::vector<Permutation> elements;  //< closure; empty when spec.full

  /// Number of elements; 0 means "not materialized" (full symmetric group).
  std::size_t order() const { return elements.size(); }
};

/// Closure of the spec's generators under composition.
/// Throws when the closure exceeds caps.max_group_size.
PermGroup build_group(const PermGroupSpec& spec, const Caps& caps = {});

/// Orbit of x, sorted by mask (so front() is the canonical representative).
/// For the full symmetric group this is the weight class of x.
std::vector<Word> orbit(const Word& x, const PermGroup& g);

/// Orbit partition of all 2^n words.
struct SPartition {
  int n = 1;
  PermGroupSpec spec;
  std::vector<std::vector<Word>> orbits;  //< each sorted; ordered by representative mask
  std::vector<std::int32_t> orbit_of;     //< orbit index per mask

  int orbit_index(const Word& w) const { return orbit_of[w.mask]; }

  /// Axioms of an orbit Schur ring: the identity forms its own block, blocks
  /// are inverse-closed, and products of block sums have coefficients constant
  /// on blocks. The third axiom is checked by exact convolution over at most
  /// max_pairs block pairs (all pairs when they fit, otherwise seeded samples).
  bool check_sring_axioms(int max_pairs = 64, std::uint64_t seed = 0) const;
};

SPartition make_partition(int n, const PermGroup& g, const Caps& caps = {});

/// True iff the set contains the identity, is closed under products, and is a
/// union of g-orbits.
bool is_s_subgroup(const std::vector<Word>& words, const PermGroup& g);

}  // namespace schurlab
