#pragma once

#include <optional>
#include <vector>

#include "schurlab/caps.hpp"
#include "schurlab/word.hpp"

namespace schurlab {

/// Periodic correlation at shift k of two ±1 sequences of equal length:
/// sum over i of x_i * y_{i+k}. Computed bitwise as n - 2 popcount(x ^ C^k y).
int cross_correlation(const Word& x, const Word& y, long long k);

/// All-shift autocorrelation vector (P(0), ..., P(n-1)); P(0) = n.
struct AutocorrVector {
  int n = 1;
  std::vector<int> values;
};
AutocorrVector autocorr_vector(const Word& x);

/// Constant off-peak value, when the word is two-level.
std::optional<int> two_level_offpeak(const Word& x);

/// n - P(k) divisible by 4 for every k, and P(k) within [n-4a, n] for a
/// word of weight a.
bool check_divisibility(const Word& x);

/// Decimation permutes the autocorrelation vector: P_{delta_a x}(k) = P_x(ka).
bool decimation_diagram_check(const Word& x, long long a);

/// Canonical class of words sharing one autocorrelation spectrum.
struct TwoLevelClass {
  Word representative;   //< least mask under shifts, reversal, decimations, negation
  int weight = 0;        //< weight of the representative
  int offpeak = 0;
  long long orbit_size = 0;

  friend bool operator==(const TwoLevelClass&, const TwoLevelClass&) = default;
};

/// All words with constant off-peak autocorrelation, one entry per orbit under
/// the combined shift/reversal/decimation group and negation; sorted by
/// representative mask. The scan shards the mask space across threads.
std::vector<TwoLevelClass> search_two_level(int n, const Caps& caps = {});

}  // namespace schurlab
