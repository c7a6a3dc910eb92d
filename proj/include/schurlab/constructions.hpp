#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/caps.hpp"
#include "schurlab/codes.hpp"
#include "schurlab/word.hpp"

namespace schurlab {

/// Least d >= 1 with cyclic_shift(x, d) == x; always divides n.
int fundamental_period(const Word& x);

/// Words grouped by fundamental period (keys are the divisors of n).
std::map<int, std::vector<Word>> period_decomposition(int n, const Caps& caps = {});

/// Expected size of the period-d stratum: sum over r | d of mu(d/r) 2^r.
long long period_class_size_moebius(int n, int d);

/// The d-codeword arithmetic-progression code for d | n: codeword i is the
/// product of C^(i+jd) X over j, X the word with a single leading '-'.
CodeSet xfd_code(int n, int d);

/// Subgroup generated by xfd_code: order 2^d, the words of period dividing d.
std::vector<Word> g_subgroup(int n, int d);

/// Divisor lattice of n with covering edges; node d stands for the period-d
/// subgroup.
struct DivisorLattice {
  long long n = 1;
  std::vector<long long> divisors;                 //< ascending
  std::vector<std::pair<long long, long long>> edges;  //< (d, d') with d covered by d'
};
DivisorLattice g_lattice(long long n);

/// Decimation-action split of the weight-(n-1) class: the fixed word, the
/// words at unit shift offsets, and the rest.
struct BaseClassSplit {
  Word fixed;                   //< single '-' at position 0
  std::vector<Word> unit_part;     //< C^u X for unit u, phi(n) words
  std::vector<Word> nonunit_part;  //< the remaining n - phi(n) - 1 words
};
BaseClassSplit delta_partition_of_base(int n);

/// Multiplicative cosets {s, sa, sa^2, ...} of a on Z_n.
struct CyclotomicCosets {
  int n = 1;
  int a = 1;
  std::vector<std::vector<int>> cosets;  //< each starts at its least element; sorted by it
  std::vector<int> representatives;      //< least elements of the nonzero cosets
};
CyclotomicCosets cyclotomic_cosets(int n, int a);

/// Product of C^i(base) over the coset of s under multiplication by a.
Word coset_word(int n, int a, int s, const Word& base);

/// Decimation-invariant code: the base word plus one coset word per nonzero
/// coset. Defaults to the decimation-fixed base (single leading '-'), which
/// makes the generated subgroup exactly the fixed-point set of decimation
/// by a; other bases give shift-conjugate subgroups.
CodeSet invariant_code(int n, int a, std::optional<Word> base = std::nullopt);

/// Fixed points of decimation by a, by full scan; order 2^(r+1) with r the
/// number of nonzero cosets.
std::vector<Word> invariant_subgroup(int n, int a, const Caps& caps = {});

/// The reversal-fixed (palindromic) words, by full scan.
std::vector<Word> sym_subgroup(int n, const Caps& caps = {});

/// Palindromic code: odd n uses the centered '-' base word X and codewords
/// {X, C^i X C^(n-i) X}; even n uses the trailing '-' base and codewords
/// {C^i X C^(n-1-i) X}. Every codeword is reversal-fixed.
CodeSet sym_code(int n, std::optional<Word> base = std::nullopt);

/// One verified statement instance.
struct TheoremResult {
  std::string id;
  int n = 0;
  bool pass = false;
  std::optional<std::string> witness;  //< counterexample description on failure
};

struct TheoremReport {
  int n = 0;
  std::vector<TheoremResult> results;
  bool all_pass() const;
};

/// Runs every statement applicable at this n (checks self-select by parity,
/// divisor structure and prime form). Independent checks run concurrently;
/// the report order is fixed.
TheoremReport theorem_suite(int n, const Caps& caps = {});

}  // namespace schurlab
