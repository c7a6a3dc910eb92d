#include "schurlab/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "schurlab/schur_ring.hpp"

namespace schurlab {
namespace {

std::vector<int> subset_indices(std::uint64_t bits) {
  std::vector<int> out;
  for (int i = 0; bits; ++i, bits >>= 1)
    if (bits & 1) out.push_back(i);
  return out;
}

// Echelon GF(2) basis over the code masks, indexed by pivot bit and tracking
// which input words combine into each row. Returns a dependency subset when
// one exists (a nonempty index set whose product is the identity).
std::optional<std::uint64_t> gf2_dependency(const std::vector<Word>& words) {
  std::array<std::uint64_t, 64> row{};    // row with leading bit p, or 0
  std::array<std::uint64_t, 64> combo{};  // index set producing that row
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t m = words[i].mask;
    std::uint64_t c = std::uint64_t{1} << i;
    while (m) {
      int p = 63 - std::countl_zero(m);
      if (!row[p]) {
        row[p] = m;
        combo[p] = c;
        break;
      }
      m ^= row[p];
      c ^= combo[p];
    }
    if (!m) return c;
  }
  return std::nullopt;
}

}  // namespace

CodeSet make_code_set(int n, std::vector<Word> words) {
  if (n < 1 || n > 64) throw std::invalid_argument("code length must be in [1,64]");
  std::set<std::uint64_t> seen;
  for (const Word& w : words) {
    if (w.n != n) throw std::invalid_argument("mixed lengths in code");
    if (w.mask == 0) throw std::invalid_argument("the identity is never in a code");
    if (!seen.insert(w.mask).second) throw std::invalid_argument("duplicate word in code");
  }
  return CodeSet{n, std::move(words)};
}

CodeCheckResult is_code_rank(const CodeSet& c) {
  if (c.words.size() > 64) throw std::length_error("rank check limited to 64 words");
  auto dep = gf2_dependency(c.words);
  if (!dep) return {true, std::nullopt};
  // Split the dependency D (product = identity, |D| >= 2 since no word is the
  // identity) into {d} and D \ {d}: two factorizations of words[d].
  auto idx = subset_indices(*dep);
  FactorizationWitness w;
  w.word = c.words[static_cast<std::size_t>(idx.front())];
  w.factors_a = {idx.front()};
  w.factors_b = {idx.begin() + 1, idx.end()};
  return {false, std::move(w)};
}

CodeCheckResult is_code_bruteforce(const CodeSet& c) {
  const std::size_t k = c.words.size();
  if (k > 30) throw std::length_error("subset oracle limited to 30 words");
  std::unordered_map<std::uint64_t, std::uint64_t> first;  // product -> subset bits
  first.reserve(std::size_t{1} << k);
  std::optional<FactorizationWitness> best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    std::uint64_t prod = 0;
    for (std::uint64_t b = bits; b;) {
      int i = std::countr_zero(b);
      prod ^= c.words[static_cast<std::size_t>(i)].mask;
      b &= b - 1;
    }
    auto [it, inserted] = first.emplace(prod, bits);
    if (!inserted && (!best || prod < best->word.mask)) {
      best = FactorizationWitness{Word{c.n, prod}, subset_indices(it->second),
                                  subset_indices(bits)};
    }
  }
  if (best) return {false, std::move(best)};
  return {true, std::nullopt};
}

CodeCheckResult is_code(const CodeSet& c) { return is_code_rank(c); }

std::vector<Word> generated_subgroup(const CodeSet& c, const Caps& caps) {
  std::array<std::uint64_t, 64> row{};
  std::vector<std::uint64_t> basis;
  for (const Word& w : c.words) {
    std::uint64_t m = w.mask;
    while (m) {
      int p = 63 - std::countl_zero(m);
      if (!row[p]) {
        row[p] = m;
        basis.push_back(m);
        break;
      }
      m ^= row[p];
    }
  }
  if (basis.size() >= 64 || (std::size_t{1} << basis.size()) > caps.max_subgroup_size)
    throw std::length_error("generated subgroup exceeds size cap");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << basis.size());
  out.push_back(identity(c.n));
  for (std::uint64_t b : basis) {
    const std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.push_back(Word{c.n, out[i].mask ^ b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetPartitionPT make_set_partition(int n, std::vector<std::vector<int>> blocks) {
  if (n < 1 || n > 64) throw std::invalid_argument("length must be in [1,64]");
  std::set<int> seen;
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    for (int i : b) {
      if (i < 0 || i >= n) throw std::invalid_argument("block index out of range");
      if (!seen.insert(i).second) throw std::invalid_argument("blocks are not disjoint");
    }
    std::sort(b.begin(), b.end());
  }
  return SetPartitionPT{n, std::move(blocks)};
}

CodeSet pt_code(const SetPartitionPT& p) {
  std::vector<Word> words;
  words.reserve(p.blocks.size());
  for (const auto& b : p.blocks) {
    std::uint64_t m = 0;
    for (int i : b) m |= std::uint64_t{1} << i;
    words.push_back(Word{p.n, m});
  }
  return make_code_set(p.n, std::move(words));
}

bool is_pt_code(const CodeSet& c) {
  std::uint64_t used = 0;
  for (const Word& w : c.words) {
    if (w.mask == 0 || (used & w.mask)) return false;
    used |= w.mask;
  }
  return true;
}

long long bell_number(int k) {
  if (k < 0 || k > 25) throw std::invalid_argument("Bell number out of supported range");
  static const auto bells = [] {
    std::vector<long long> b{1};  // Bell triangle; B_25 still fits in long long
    std::vector<long long> row{1};
    for (int i = 1; i <= 25; ++i) {
      std::vector<long long> next{row.back()};
      for (long long v : row) next.push_back(next.back() + v);
      row = std::move(next);
      b.push_back(row.front());
    }
    return b;
  }();
  return bells[static_cast<std::size_t>(k)];
}

namespace {

// All set partitions of `items`, emitted via restricted-growth assignment.
void for_each_partition(const std::vector<int>& items,
                        const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  std::vector<std::vector<int>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      f(blocks);
      return;
    }
    for (auto& b : blocks) {
      b.push_back(items[i]);
      rec(i + 1);
      b.pop_back();
    }
    blocks.push_back({items[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

}  // namespace

std::vector<PtEntry> enumerate_pt_free_subgroups(int n) {
  if (n > 10) throw std::length_error("partition census enumeration requires n <= 10");
  std::vector<PtEntry> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
    std::vector<int> items = subset_indices(t);
    for_each_partition(items, [&](const std::vector<std::vector<int>>& blocks) {
      PtEntry e;
      e.partition = make_set_partition(n, blocks);
      e.code = pt_code(e.partition);
      e.subgroup = generated_subgroup(e.code);
      out.push_back(std::move(e));
    });
  }
  return out;
}

PtCensus count_pt_free_subgroups(int n, bool enumerate) {
  PtCensus census;
  for (int k = 0; k <= n; ++k) census.formula += binomial(n, k) * bell_number(k);
  if (!enumerate) return census;
  auto entries = enumerate_pt_free_subgroups(n);
  census.constructions = static_cast<long long>(entries.size());
  std::set<std::vector<Word>> distinct;
  for (const auto& e : entries) distinct.insert(e.subgroup);
  census.distinct_subgroups = static_cast<long long>(distinct.size());
  return census;
}

std::vector<Word> disjoint_union_product(const std::vector<CodeSet>& codes, const Caps& caps) {
  if (codes.empty()) return {identity(1)};
  const int n = codes.front().n;
  std::uint64_t used = 0;
  std::vector<Word> all;
  for (const CodeSet& c : codes) {
    if (c.n != n) throw std::invalid_argument("mixed lengths");
    if (!is_pt_code(c)) throw std::invalid_argument("input is not a partition code");
    std::uint64_t support = 0;
    for (const Word& w : c.words) support |= w.mask;
    if (used & support) throw std::invalid_argument("overlapping code supports");
    used |= support;
    all.insert(all.end(), c.words.begin(), c.words.end());
  }
  return generated_subgroup(make_code_set(n, std::move(all)), caps);
}

bool is_g_code(const CodeSet& c, const PermGroup& g) {
  if (c.words.empty()) return false;
  if (!is_code(c).code) return false;
  auto orb = orbit(c.words.front(), g);
  std::vector<Word> sorted = c.words;
  std::sort(sorted.begin(), sorted.end());
  return sorted == orb;
}

}  // namespace schurlab
