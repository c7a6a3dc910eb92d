#include "schurlab/word.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace schurlab {

Word make_word(int n, std::uint64_t mask) {
  if (n < 1 || n > 64) throw std::invalid_argument("word length must be in [1,64]");
  if (mask & ~full_mask(n)) throw std::invalid_argument("mask has bits beyond length");
  return Word{n, mask};
}

Word identity(int n) { return make_word(n, 0); }

Word minus_one(int n) { return make_word(n, full_mask(n)); }

Word unit_generator(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
  return make_word(n, std::uint64_t{1} << i);
}

Word parse_word(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty word");
  if (text.size() > 64) throw std::invalid_argument("word longer than 64");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-')
      mask |= std::uint64_t{1} << i;
    else if (text[i] != '+')
      throw std::invalid_argument("word characters must be '+' or '-'");
  }
  return Word{static_cast<int>(text.size()), mask};
}

std::string render_word(const Word& w) {
  std::string s(static_cast<std::size_t>(w.n), '+');
  for (int i = 0; i < w.n; ++i)
    if ((w.mask >> i) & 1) s[static_cast<std::size_t>(i)] = '-';
  return s;
}

int weight(const Word& w) { return w.n - std::popcount(w.mask); }

Word mul(const Word& x, const Word& y) {
  if (x.n != y.n) throw std::invalid_argument("length mismatch in product");
  return Word{x.n, x.mask ^ y.mask};
}

Word cyclic_shift(const Word& x, long long k) {
  const int n = x.n;
  int r = static_cast<int>(((k % n) + n) % n);
  if (r == 0) return x;
  // bit i of result = bit (i+r) mod n of x: rotate the mask right by r.
  std::uint64_t m = ((x.mask >> r) | (x.mask << (n - r))) & full_mask(n);
  return Word{n, m};
}

Word reverse(const Word& x) {
  std::uint64_t m = 0;
  for (int i = 0; i < x.n; ++i)
    if ((x.mask >> i) & 1) m |= std::uint64_t{1} << (x.n - 1 - i);
  return Word{x.n, m};
}

Word decimate(const Word& x, long long a) {
  const int n = x.n;
  long long r = ((a % n) + n) % n;
  if (std::gcd(r, static_cast<long long>(n)) != 1)
    throw std::invalid_argument("decimation step not coprime to length");
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i)
    if ((x.mask >> ((r * i) % n)) & 1) m |= std::uint64_t{1} << i;
  return Word{n, m};
}

Word negate(const Word& x) { return Word{x.n, x.mask ^ full_mask(x.n)}; }

std::vector<Word> weight_class(int n, int a) {
  if (n < 1 || n > 64) throw std::invalid_argument("word length must be in [1,64]");
  if (a < 0 || a > n) throw std::invalid_argument("weight out of range");
  const int k = n - a;  // popcount of members
  std::vector<Word> out;
  if (k == 0) {
    out.push_back(identity(n));
    return out;
  }
  // Gosper's hack over masks of popcount k.
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = full_mask(n);
  while (v <= limit) {
    out.push_back(Word{n, v});
    std::uint64_t c = v & (~v + 1), r = v + c;
    if (r == 0) break;  // would wrap past 64 bits
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

}  // namespace schurlab
