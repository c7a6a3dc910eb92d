#include <doctest.h>

#include <algorithm>
#include <set>

#include "schurlab/codes.hpp"
#include "schurlab/perm_group.hpp"
#include "schurlab/word.hpp"

using namespace schurlab;

namespace {
const char* kFamilies[] = {"sn", "cn", "dn", "hn", "hc", "dc", "hdc"};
}

TEST_CASE("group orders") {
  CHECK(build_group(PermGroupSpec::named(7, "cn")).order() == 7);
  CHECK(build_group(PermGroupSpec::named(7, "dn")).order() == 6);   // phi(7)
  CHECK(build_group(PermGroupSpec::named(12, "dn")).order() == 4);  // phi(12)
  CHECK(build_group(PermGroupSpec::named(5, "hc")).order() == 10);  // dihedral
  CHECK(build_group(PermGroupSpec::named(5, "hn")).order() == 2);
  CHECK(build_group(PermGroupSpec::named(5, "sn")).order() == 0);   // not materialized
  CHECK_THROWS_AS(PermGroupSpec::named(9, "xx"), std::invalid_argument);
  CHECK_THROWS_AS(build_group(PermGroupSpec::named(1, "dn")), std::invalid_argument);
}

TEST_CASE("composition convention matches the word actions") {
  const int n = 6;
  auto g = build_group(PermGroupSpec::named(n, "hdc"));
  for (const auto& p : g.elements)
    for (const auto& q : g.elements)
      for (std::uint64_t m : {0x01ull, 0x2bull, 0x3full})
        CHECK(apply(compose(p, q), Word{n, m}) == apply(q, apply(p, Word{n, m})));
}

TEST_CASE("orbits") {
  auto c4 = build_group(PermGroupSpec::named(4, "cn"));
  auto orb = orbit(parse_word("-+++"), c4);
  CHECK(orb == weight_class(4, 3));

  auto s7 = build_group(PermGroupSpec::named(7, "sn"));
  auto cls = orbit(parse_word("-++++++"), s7);
  CHECK(cls.size() == 7);
  CHECK(cls == weight_class(7, 6));

  auto c9 = build_group(PermGroupSpec::named(9, "cn"));
  CHECK(orbit(parse_word("-++-++-++"), c9).size() == 3);
}

TEST_CASE("partition counts") {
  auto s4 = make_partition(4, build_group(PermGroupSpec::named(4, "sn")));
  CHECK(s4.orbits.size() == 5);  // one weight class per weight

  auto c4 = make_partition(4, build_group(PermGroupSpec::named(4, "cn")));
  CHECK(c4.orbits.size() == 6);  // necklaces of length 4

  // identity forms the first block
  CHECK(c4.orbits.front().size() == 1);
  CHECK(c4.orbits.front().front() == identity(4));
}

TEST_CASE("orbit sizes divide the group order") {
  for (int n = 2; n <= 10; ++n)
    for (const char* f : kFamilies) {
      if (std::string(f) == "sn") continue;
      auto g = build_group(PermGroupSpec::named(n, f));
      auto part = make_partition(n, g);
      std::size_t covered = 0;
      for (const auto& o : part.orbits) {
        CHECK(g.order() % o.size() == 0);
        covered += o.size();
      }
      CHECK(covered == (std::size_t{1} << n));
    }
}

TEST_CASE("product partitions are coarser than factor partitions") {
  struct Pair {
    const char* coarse;
    const char* fine;
  };
  const Pair pairs[] = {{"hc", "cn"}, {"hc", "hn"}, {"dc", "cn"}, {"dc", "dn"},
                        {"hdc", "hc"}, {"hdc", "dc"}, {"hdc", "hn"}, {"sn", "hdc"}};
  for (int n = 2; n <= 10; ++n)
    for (const auto& [coarse, fine] : pairs) {
      auto pc = make_partition(n, build_group(PermGroupSpec::named(n, coarse)));
      auto pf = make_partition(n, build_group(PermGroupSpec::named(n, fine)));
      for (const auto& o : pf.orbits) {
        std::set<int> targets;
        for (const Word& w : o) targets.insert(pc.orbit_index(w));
        CHECK(targets.size() == 1);
      }
    }
}

TEST_CASE("schur ring axioms hold for computed partitions") {
  for (int n = 2; n <= 6; ++n)
    for (const char* f : kFamilies) {
      auto part = make_partition(n, build_group(PermGroupSpec::named(n, f)));
      CHECK(part.check_sring_axioms(10000, 1));
    }
  // sampled pairs at a larger size
  auto part = make_partition(9, build_group(PermGroupSpec::named(9, "cn")));
  CHECK(part.check_sring_axioms(40, 123));
}

TEST_CASE("s-subgroup detection") {
  auto c4 = build_group(PermGroupSpec::named(4, "cn"));
  CHECK(is_s_subgroup({identity(4), minus_one(4)}, c4));
  CHECK_FALSE(is_s_subgroup({identity(4), parse_word("-+++")}, c4));

  // the non-code orbit set still generates an s-subgroup
  auto c7 = build_group(PermGroupSpec::named(7, "cn"));
  Word y = parse_word("+++-+--");  // one codeword of the weight-4 cyclic orbit
  auto orb = orbit(y, c7);
  auto sub = generated_subgroup(make_code_set(7, orb));
  CHECK(sub.size() == 16);
  CHECK(is_s_subgroup(sub, c7));
}

TEST_CASE("orbit subgroups are s-subgroups for every family") {
  for (int n = 2; n <= 9; ++n)
    for (const char* f : kFamilies) {
      auto g = build_group(PermGroupSpec::named(n, f));
      auto part = make_partition(n, g);
      for (const auto& o : part.orbits) {
        if (o.front().mask == 0) continue;  // identity orbit generates itself
        auto sub = generated_subgroup(make_code_set(n, o));
        CHECK(is_s_subgroup(sub, g));
      }
    }
}
