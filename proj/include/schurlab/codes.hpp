#pragma once

#include <optional>
#include <vector>

#include "schurlab/caps.hpp"
#include "schurlab/perm_group.hpp"
#include "schurlab/word.hpp"

namespace schurlab {

/// Ordered set of candidate generators; the identity is never a member.
struct CodeSet {
  int n = 1;
  std::vector<Word> words;
};

/// Validates lengths, excludes the identity and duplicates.
CodeSet make_code_set(int n, std::vector<Word> words);

/// A word with two distinct factorizations over the code, as index lists.
struct FactorizationWitness {
  Word word;
  std::vector<int> factors_a;
  std::vector<int> factors_b;
};

struct CodeCheckResult {
  bool code = false;
  std::optional<FactorizationWitness> witness;
};

/// GF(2) independence of the masks, with a dependency turned into a witness.
/// Accepts any size up to 64 words.
CodeCheckResult is_code_rank(const CodeSet& c);

/// Subset-product oracle: all 2^|c| products must be distinct. Requires
/// |c| <= 30. Among collisions the one with the smallest product word is
/// reported.
CodeCheckResult is_code_bruteforce(const CodeSet& c);

/// Whether the set freely generates: every element of the generated subgroup
/// has exactly one factorization. Rank-based fast path.
CodeCheckResult is_code(const CodeSet& c);

/// Closure of the code under products (the GF(2) span of the masks),
/// including the identity; sorted by mask. Size is 2^rank.
std::vector<Word> generated_subgroup(const CodeSet& c, const Caps& caps = {});

/// Set partition of a subset T of positions {0..n-1}.
struct SetPartitionPT {
  int n = 1;
  std::vector<std::vector<int>> blocks;  //< disjoint, nonempty
};

SetPartitionPT make_set_partition(int n, std::vector<std::vector<int>> blocks);

/// One codeword per block: the product of the unit generators over the block
/// (mask = the block's bit set). Always a code.
CodeSet pt_code(const SetPartitionPT& p);

/// True iff the codeword supports are pairwise disjoint and nonempty, i.e.
/// the set is pt_code of some partition.
bool is_pt_code(const CodeSet& c);

/// Census of subgroups generated by partition codes.
struct PtCensus {
  long long formula = 0;              //< sum over k of C(n,k) * Bell(k)
  long long constructions = 0;        //< distinct (T, P(T)) pairs enumerated
  long long distinct_subgroups = 0;   //< distinct generated element sets
};

/// Bell number B_k (k <= 25).
long long bell_number(int k);

/// formula is always filled; the enumeration fields require n <= 10.
PtCensus count_pt_free_subgroups(int n, bool enumerate = true);

/// Explicit enumeration: every partition code together with its subgroup.
struct PtEntry {
  SetPartitionPT partition;
  CodeSet code;
  std::vector<Word> subgroup;
};
std::vector<PtEntry> enumerate_pt_free_subgroups(int n);

/// Generated subgroup of the union of partition codes with pairwise disjoint
/// supports. Throws on overlap. The order is 2^(total codeword count).
std::vector<Word> disjoint_union_product(const std::vector<CodeSet>& codes,
                                         const Caps& caps = {});

/// A code that is one whole g-orbit.
bool is_g_code(const CodeSet& c, const PermGroup& g);

}  // namespace schurlab
