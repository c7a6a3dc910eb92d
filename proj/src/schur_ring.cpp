#include "schurlab/schur_ring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace schurlab {
namespace {

// Iterate all masks of the given popcount below 2^n (Gosper's hack).
template <typename F>
void for_each_mask_of_popcount(int n, int k, F&& f) {
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = full_mask(n);
  while (v <= limit) {
    f(v);
    std::uint64_t c = v & (~v + 1), r = v + c;
    if (r == 0) break;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

}  // namespace

void GroupAlgebraElement::add(std::uint64_t mask, long long c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

GroupAlgebraElement simple_quantity(std::span<const Word> orbit) {
  if (orbit.empty()) throw std::invalid_argument("simple quantity of empty set");
  GroupAlgebraElement e{orbit.front().n, {}};
  for (const Word& w : orbit) {
    if (w.n != e.n) throw std::invalid_argument("mixed lengths in simple quantity");
    if (!e.coeffs.emplace(w.mask, 1).second)
      throw std::invalid_argument("duplicate word in simple quantity");
  }
  return e;
}

GroupAlgebraElement algebra_mul(const GroupAlgebraElement& p, const GroupAlgebraElement& q) {
  if (p.n != q.n) throw std::invalid_argument("length mismatch in algebra product");
  GroupAlgebraElement out{p.n, {}};
  for (const auto& [u, cu] : p.coeffs)
    for (const auto& [v, cv] : q.coeffs) out.add(u ^ v, cu * cv);
  return out;
}

GroupAlgebraElement algebra_add(const GroupAlgebraElement& p, const GroupAlgebraElement& q) {
  if (p.n != q.n) throw std::invalid_argument("length mismatch in algebra sum");
  GroupAlgebraElement out = p;
  for (const auto& [v, cv] : q.coeffs) out.add(v, cv);
  return out;
}

long long binomial(int m, int t) {
  if (m < 0 || m > 64) throw std::invalid_argument("binomial row out of range");
  if (t < 0 || t > m) return 0;
  // Pascal table: every entry for m <= 64 fits in long long.
  static const auto table = [] {
    std::array<std::array<long long, 65>, 65> c{};
    for (int i = 0; i <= 64; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c;
  }();
  return table[m][t];
}

long long lambda_formula(int n, int i, int j, int k) {
  if (i < 0 || i > n || j < 0 || j > n || k < 0 || k > n)
    throw std::invalid_argument("lambda index out of range");
  if ((i + j - k) % 2 != 0) return 0;
  const int t1 = (j - i + k) / 2;
  const int t2 = (j + i - k) / 2;
  return binomial(k, t1) * binomial(n - k, t2);
}

long long lambda_bruteforce(int n, int i, int j, int k) {
  if (n > 16) throw std::length_error("lambda_bruteforce requires n <= 16");
  if (i < 0 || i > n || j < 0 || j > n || k < 0 || k > n)
    throw std::invalid_argument("lambda index out of range");
  // T_i = G_n(n-i): the class whose masks have popcount i.
  long long count = -1;
  for_each_mask_of_popcount(n, k, [&](std::uint64_t w) {
    long long c = 0;
    for_each_mask_of_popcount(n, i, [&](std::uint64_t u) {
      if (std::popcount(u ^ w) == j) ++c;
    });
    if (count < 0)
      count = c;
    else if (count != c)
      throw std::logic_error("factorization count depends on the witness word");
  });
  if (count < 0) throw std::invalid_argument("empty basic set");
  return count;
}

std::set<int> gset_product_weights(int n, int a, int b) {
  if (a < 0 || a > n || b < 0 || b > n) throw std::invalid_argument("weight out of range");
  if (a > b) std::swap(a, b);
  if (a + b > n) {
    int na = n - b, nb = n - a;  // G(a)G(b) = G(n-a)G(n-b)
    a = na;
    b = nb;
  }
  // Now a <= b and a+b <= n, so the first case of the product formula applies.
  std::set<int> out;
  for (int i = 0; i <= a; ++i) out.insert(n - a - b + 2 * i);
  return out;
}

std::set<int> gset_product_weights_bruteforce(int n, int a, int b) {
  if (n > 20) throw std::length_error("brute-force product support requires n <= 20");
  std::uint64_t seen = 0;  // bit c set <=> weight c reached (c <= n <= 20)
  for_each_mask_of_popcount(n, n - a, [&](std::uint64_t u) {
    for_each_mask_of_popcount(n, n - b, [&](std::uint64_t v) {
      seen |= std::uint64_t{1} << (n - std::popcount(u ^ v));
    });
  });
  std::set<int> out;
  for (int c = 0; c <= n; ++c)
    if ((seen >> c) & 1) out.insert(c);
  return out;
}

std::vector<Word> parity_subgroup(int n, Parity parity, const Caps& caps) {
  require_enumerable(n, caps);
  std::vector<Word> out;
  for (int a = (parity == Parity::even ? 0 : 1); a <= n; a += 2) {
    auto cls = weight_class(n, a);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CompleteSSetResult is_complete_sset(const CompleteSSetQuery& q) {
  for (int w : q.candidate)
    if (w < 0 || w > q.n) throw std::invalid_argument("weight out of range");
  if (q.a < 0 || q.a > q.n) throw std::invalid_argument("target weight out of range");
  CompleteSSetResult res;
  auto covers = [&](int i, int j) { return gset_product_weights(q.n, i, j).count(q.a) != 0; };
  for (int i : q.candidate)
    for (int j : q.candidate)
      if (!covers(i, j)) {
        res.failing_pair = {i, j};
        return res;
      }
  for (int b = 0; b <= q.n; ++b) {
    if (std::find(q.candidate.begin(), q.candidate.end(), b) != q.candidate.end()) continue;
    if (!covers(b, b)) continue;
    bool all = true;
    for (int k : q.candidate)
      if (!covers(b, k)) {
        all = false;
        break;
      }
    if (all) {
      res.extending_b = b;
      return res;
    }
  }
  res.complete = true;
  return res;
}

std::vector<std::vector<int>> complete_ssets(int n, int a) {
  if (n > 24) throw std::length_error("complete-set enumeration requires n <= 24");
  std::vector<std::vector<int>> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
    std::vector<int> cand;
    for (int w = 0; w <= n; ++w)
      if ((bits >> w) & 1) cand.push_back(w);
    if (is_complete_sset({n, cand, a}).complete) out.push_back(std::move(cand));
  }
  return out;
}

std::set<int> power_classes(int n, int a, int e) {
  if (e < 1) throw std::invalid_argument("exponent must be >= 1");
  std::set<int> cur{a};
  for (int t = 1; t < e; ++t) {
    std::set<int> next;
    for (int w : cur) {
      auto s = gset_product_weights(n, w, a);
      next.insert(s.begin(), s.end());
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace schurlab
