#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schurlab {

/// Element of Z_2^n encoded as a bitmask: bit i set <=> component i is '-'.
/// The all-plus sequence is mask 0 and is the group identity; the product of
/// two sequences is XOR of masks, so every element is its own inverse.
struct Word {
  int n = 1;
  std::uint64_t mask = 0;

  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Mask with the low n bits set.
constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Validating constructor: 1 <= n <= 64, no bits at positions >= n.
Word make_word(int n, std::uint64_t mask);

Word identity(int n);                //< all '+'
Word minus_one(int n);               //< all '-'
Word unit_generator(int n, int i);   //< single '-' at position i

/// Parse a '+'/'-' string (length 1..64). Round-trips with render_word.
Word parse_word(std::string_view text);
std::string render_word(const Word& w);

/// Number of '+' components, i.e. n - popcount(mask).
int weight(const Word& w);

/// Componentwise product (XOR of masks). Throws on length mismatch.
Word mul(const Word& x, const Word& y);

/// result_i = x_{(i+k) mod n}; any integer k accepted.
Word cyclic_shift(const Word& x, long long k);

/// result_i = x_{n-1-i}.
Word reverse(const Word& x);

/// result_i = x_{(a*i) mod n}; requires gcd(a, n) = 1.
Word decimate(const Word& x, long long a);

/// Flip every component.
Word negate(const Word& x);

/// G_n(a): all words of weight a, sorted by mask. Enumerated combinatorially.
std::vector<Word> weight_class(int n, int a);

/// Identifier for a weight class G_n(a).
struct WeightClassId {
  int n;
  int a;
};

}  // namespace schurlab
