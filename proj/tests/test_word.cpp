#include <doctest.h>

#include <numeric>
#include <random>

#include "schurlab/word.hpp"

using namespace schurlab;

TEST_CASE("parse and render") {
  Word w = parse_word("-+++");
  CHECK(w.n == 4);
  CHECK(w.mask == 0b0001);
  CHECK(parse_word("++++").mask == 0);
  Word ex = parse_word("-++-++-++");
  CHECK(ex.mask == ((1u << 0) | (1u << 3) | (1u << 6)));
  CHECK(render_word(ex) == "-++-++-++");

  CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("+-x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(std::string(65, '+')), std::invalid_argument);
  CHECK_THROWS_AS(make_word(4, 0b10000), std::invalid_argument);
  CHECK_THROWS_AS(make_word(0, 0), std::invalid_argument);
}

TEST_CASE("round trip over all short words") {
  for (int n = 1; n <= 12; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Word w{n, m};
      CHECK(parse_word(render_word(w)) == w);
    }
}

TEST_CASE("product") {
  CHECK(render_word(mul(parse_word("-+++"), parse_word("+-++"))) == "--++");
  CHECK_THROWS_AS(mul(identity(3), identity(4)), std::invalid_argument);

  // self-inverse and associativity, exhaustive at n = 4
  const int n = 4;
  for (std::uint64_t x = 0; x < 16; ++x) {
    CHECK(mul(Word{n, x}, Word{n, x}) == identity(n));
    for (std::uint64_t y = 0; y < 16; ++y) {
      CHECK(mul(Word{n, x}, Word{n, y}) == mul(Word{n, y}, Word{n, x}));
      for (std::uint64_t z = 0; z < 16; ++z)
        CHECK(mul(mul(Word{n, x}, Word{n, y}), Word{n, z}) ==
              mul(Word{n, x}, mul(Word{n, y}, Word{n, z})));
    }
  }

  // randomized at larger n
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    int len = 17 + static_cast<int>(rng() % 48);
    Word x{len, rng() & full_mask(len)};
    Word y{len, rng() & full_mask(len)};
    Word z{len, rng() & full_mask(len)};
    CHECK(mul(x, x) == identity(len));
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
  }

  // the base generators multiply to all '-'
  Word prod = identity(7);
  for (int i = 0; i < 7; ++i) prod = mul(prod, unit_generator(7, i));
  CHECK(prod == minus_one(7));
}

TEST_CASE("weight counts plus signs") {
  CHECK(weight(parse_word("++++")) == 4);
  CHECK(weight(parse_word("-+++")) == 3);
  CHECK(weight(parse_word("-++-++-++")) == 6);

  // popcount parity adds under products
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    int n = 1 + static_cast<int>(rng() % 20);
    Word x{n, rng() & full_mask(n)};
    Word y{n, rng() & full_mask(n)};
    int px = n - weight(x), py = n - weight(y), pxy = n - weight(mul(x, y));
    CHECK(pxy % 2 == (px + py) % 2);
  }
}

TEST_CASE("cyclic shift") {
  CHECK(render_word(cyclic_shift(parse_word("-+++"), 1)) == "+++-");
  for (int n = 1; n <= 10; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Word w{n, m};
      CHECK(cyclic_shift(w, n) == w);
      CHECK(cyclic_shift(w, -3) == cyclic_shift(w, ((-3 % n) + n) % n));
    }
  // shifting the single leading '-' sweeps the whole weight class
  std::vector<Word> orbit;
  for (int k = 0; k < 4; ++k) orbit.push_back(cyclic_shift(unit_generator(4, 0), k));
  std::sort(orbit.begin(), orbit.end());
  CHECK(orbit == weight_class(4, 3));
}

TEST_CASE("reversal") {
  CHECK(render_word(reverse(parse_word("-+++"))) == "+++-");
  for (int n = 1; n <= 10; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Word w{n, m};
      CHECK(reverse(reverse(w)) == w);
      for (int i = 0; i < n; ++i)
        CHECK(reverse(cyclic_shift(w, i)) == cyclic_shift(reverse(w), n - i));
    }
}

TEST_CASE("decimation") {
  for (int n = 2; n <= 10; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Word w{n, m};
      CHECK(decimate(w, 1) == w);
      for (int a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        // composition law and the shift commutation
        for (int b = 1; b < n; ++b)
          if (std::gcd(b, n) == 1)
            CHECK(decimate(decimate(w, b), a) == decimate(w, (a * b) % n));
        int ainv = 0;
        for (int c = 1; c < n; ++c)
          if ((a * c) % n == 1) ainv = c;
        for (int i = 0; i < n; ++i)
          CHECK(decimate(cyclic_shift(w, i), a) ==
                cyclic_shift(decimate(w, a), (i * ainv) % n));
      }
    }
    CHECK(decimate(unit_generator(n, 0), n - 1) == unit_generator(n, 0));
  }
  CHECK_THROWS_AS(decimate(identity(6), 2), std::invalid_argument);
}

TEST_CASE("negation") {
  CHECK(render_word(negate(parse_word("++++"))) == "----");
  for (std::uint64_t m = 0; m < 64; ++m) CHECK(negate(negate(Word{6, m})) == Word{6, m});
  // negation swaps the two extreme nontrivial weight classes
  for (int n = 2; n <= 9; ++n) {
    std::vector<Word> negated;
    for (const Word& w : weight_class(n, n - 1)) negated.push_back(negate(w));
    std::sort(negated.begin(), negated.end());
    CHECK(negated == weight_class(n, 1));
  }
}

TEST_CASE("weight class sizes") {
  CHECK(weight_class(9, 6).size() == 84);
  CHECK(weight_class(4, 3).size() == 4);
  CHECK(weight_class(64, 63).size() == 64);
  std::size_t total = 0;
  for (int a = 0; a <= 11; ++a) total += weight_class(11, a).size();
  CHECK(total == (std::size_t{1} << 11));
}
