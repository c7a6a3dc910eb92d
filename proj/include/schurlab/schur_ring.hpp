#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "schurlab/caps.hpp"
#include "schurlab/word.hpp"

namespace schurlab {

/// Integer-coefficient element of the group algebra Z[Z_2^n].
/// Coefficients are exact; entries with coefficient zero are never stored.
struct GroupAlgebraElement {
  int n = 1;
  std::map<std::uint64_t, long long> coeffs;  //< mask -> coefficient

  long long coeff(std::uint64_t mask) const {
    auto it = coeffs.find(mask);
    return it == coeffs.end() ? 0 : it->second;
  }
  void add(std::uint64_t mask, long long c);
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;
};

/// Formal sum of a set of words, all coefficients 1.
GroupAlgebraElement simple_quantity(std::span<const Word> orbit);

/// Exact convolution over Z_2^n: coefficient of w is sum over uv = w of p(u)q(v).
GroupAlgebraElement algebra_mul(const GroupAlgebraElement& p, const GroupAlgebraElement& q);
GroupAlgebraElement algebra_add(const GroupAlgebraElement& p, const GroupAlgebraElement& q);

/// Binomial coefficient; exact, 0 outside the triangle. Requires m <= 64.
long long binomial(int m, int t);

/// Structure constant of the full-symmetric-group ring in the T-indexing
/// T_i = G_n(n-i): zero when i+j-k is odd, otherwise
/// C(k, (j-i+k)/2) * C(n-k, (j+i-k)/2).
long long lambda_formula(int n, int i, int j, int k);

/// Counting oracle for lambda_formula: picks words in T_k = G_n(n-k) and counts
/// factorizations u*v = w with u in T_i, v in T_j. Verifies the count does not
/// depend on the chosen witness w (checked over every w in the class).
/// Requires n <= 16.
long long lambda_bruteforce(int n, int i, int j, int k);

/// Weights c with G_n(c) contained in G_n(a)G_n(b). Closed form via the
/// two-case product formula, extended to every (a,b) by commutativity and the
/// complement identity G(a)G(b) = G(n-a)G(n-b).
std::set<int> gset_product_weights(int n, int a, int b);

/// Exhaustive support of the product of two weight classes (oracle).
std::set<int> gset_product_weights_bruteforce(int n, int a, int b);

enum class Parity { even, odd };

/// Union of the weight classes of the given parity, sorted by mask.
std::vector<Word> parity_subgroup(int n, Parity parity, const Caps& caps = {});

/// Query: is `candidate` a G_n(a)-complete set of weight classes?
struct CompleteSSetQuery {
  int n;
  std::vector<int> candidate;  //< weight values
  int a;                       //< target weight
};

struct CompleteSSetResult {
  bool complete = false;
  std::optional<std::pair<int, int>> failing_pair;  //< pair whose product misses G_n(a)
  std::optional<int> extending_b;                   //< class that could be added
};

/// Checks both conditions of the completeness definition: every pairwise
/// product of member classes covers G_n(a), and no further class could join.
CompleteSSetResult is_complete_sset(const CompleteSSetQuery& q);

/// All G_n(a)-complete sets of weight classes, by subset enumeration.
std::vector<std::vector<int>> complete_ssets(int n, int a);

/// Weight support of G_n(a)^e, by iterating gset_product_weights.
std::set<int> power_classes(int n, int a, int e);

}  // namespace schurlab
