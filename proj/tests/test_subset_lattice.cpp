#include "multconv/oracle.hpp"
#include "multconv/subset.hpp"

#include <doctest.h>

using namespace multconv;

namespace {

SubsetMask S(int n, std::initializer_list<int> idx) { return SubsetMask::from_indices(n, idx); }

// Parity filter written out directly from the definition, as an oracle for index_set.
std::vector<SubsetMask> index_set_oracle(const SubsetMask& e, const GeneratingPair& p) {
  std::vector<SubsetMask> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p.dim); ++bits) {
    if ((bits & ~e.bits) != 0) continue;
    bool ok = true;
    for (const auto& f : p.evens) ok = ok && std::popcount(bits & f.bits) % 2 == 0;
    for (const auto& f : p.odds) ok = ok && std::popcount(bits & f.bits) % 2 == 1;
    if (ok) out.push_back({bits, p.dim});
  }
  return out;
}

}  // namespace

TEST_CASE("subset basics") {
  const SubsetMask e = S(4, {1, 3});
  CHECK(e.contains(1));
  CHECK_FALSE(e.contains(2));
  CHECK(e.size() == 2);
  CHECK(e.indices() == std::vector<int>{1, 3});
  CHECK(to_string(e) == "{1,3}");
  CHECK(to_string(SubsetMask::empty(2)) == "{}");
  CHECK(complement(e) == S(4, {2, 4}));
  CHECK(S(3, {1}).subset_of(S(3, {1, 2})));
  CHECK(power_set(3).size() == 8);
  CHECK_THROWS_AS(SubsetMask::from_indices(2, {3}), Error);
  CHECK_THROWS_AS(SubsetMask::full(64), Error);
}

TEST_CASE("symdiff") {
  CHECK(symdiff(S(3, {1, 2}), S(3, {2, 3})) == S(3, {1, 3}));
  const SubsetMask e = S(3, {2, 3});
  CHECK(symdiff(e, e).is_empty());
  CHECK(symdiff(e, SubsetMask::empty(3)) == e);
  CHECK_THROWS_AS(symdiff(S(2, {1}), S(3, {1})), Error);
}

TEST_CASE("Boolean group and distribution law, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = subsets_of(SubsetMask::full(n));
    for (const auto& a : all) {
      for (const auto& b : all) {
        CHECK(symdiff(a, b) == symdiff(b, a));
        for (const auto& c : all) {
          CHECK(symdiff(symdiff(a, b), c) == symdiff(a, symdiff(b, c)));
          CHECK(intersect(symdiff(a, b), c) == symdiff(intersect(a, c), intersect(b, c)));
        }
      }
    }
  }
}

TEST_CASE("gamma") {
  const GeneratingPair p{{S(2, {1})}, {S(2, {2})}, 2};
  const SymmetryPair g = gamma(p);
  CHECK(g.evens == Family{SubsetMask::empty(2), S(2, {1})});
  CHECK(g.odds == Family{S(2, {2}), S(2, {1, 2})});
  CHECK(g.proper);

  const SymmetryPair trivial = gamma(no_symmetry_pair(3));
  CHECK(trivial.evens == Family{SubsetMask::empty(3)});
  CHECK(trivial.odds.empty());
  CHECK(trivial.proper);

  // {1} both even and odd: everything collapses.
  const SymmetryPair bad = gamma(GeneratingPair{{S(2, {1})}, {S(2, {1})}, 2});
  CHECK_FALSE(bad.proper);
  CHECK(bad.evens.contains(S(2, {1})));
  CHECK(bad.odds.contains(S(2, {1})));

  // Odd empty set makes the pair improper.
  CHECK_FALSE(gamma(GeneratingPair{{}, {SubsetMask::empty(2)}, 2}).proper);

  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const GeneratingPair q = gen_pair(rng, 1 + t % 4);
    const SymmetryPair once = gamma(q);
    CHECK(gamma(once.as_generating()) == once);
    CHECK(satisfies_symmetry_pair_laws(once.as_generating()));
  }
}

TEST_CASE("restrict_pair") {
  const GeneratingPair p{{S(2, {1})}, {S(2, {2})}, 2};
  const GeneratingPair r = restrict_pair(p, S(2, {1}));
  CHECK(r.evens == Family{S(2, {1})});
  CHECK(r.odds == Family{SubsetMask::empty(2)});
  CHECK_FALSE(is_proper(r));
  CHECK(restrict_pair(p, SubsetMask::full(2)).evens == p.evens);
  CHECK(restrict_pair(p, SubsetMask::full(2)).odds == p.odds);

  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 4;
    const GeneratingPair q = gen_pair(rng, n);
    const SubsetMask e = gen_subset(rng, n);
    const SymmetryPair lhs = gamma(restrict_pair(q, e));
    const SymmetryPair g = gamma(q);
    CHECK(lhs.evens == restrict_family(g.evens, e));
    CHECK(lhs.odds == restrict_family(g.odds, e));
  }
}

TEST_CASE("index_set") {
  const SubsetMask e = S(3, {1, 3});
  CHECK(index_set(e, no_symmetry_pair(3)).size() == 4);
  CHECK(index_set(e, unconditional_pair(3)) == std::vector<SubsetMask>{SubsetMask::empty(3)});
  CHECK(index_set(SubsetMask::full(2), antisymmetric_pair(2)) == std::vector<SubsetMask>{S(2, {1}), S(2, {2})});

  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 4;
    const GeneratingPair q = gen_pair(rng, n);
    const SubsetMask f = gen_subset(rng, n);
    auto got = index_set(f, q);
    auto expect = index_set_oracle(f, q);
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
    CHECK(index_set(f, q) == index_set(f, gamma(q).as_generating()));
    CHECK(got.empty() == !is_proper(restrict_pair(q, f)));
  }
}

TEST_CASE("j_dual") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(j_dual(Family{SubsetMask::empty(n)}, n) == power_set(n));
    CHECK(j_dual(power_set(n), n) == Family{SubsetMask::empty(n)});
  }
  CHECK_THROWS_AS(j_dual(Family{S(2, {1})}, 2), Error);
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 4;
    const Family g = gen_subgroup(rng, n);
    const Family d = j_dual(g, n);
    CHECK(is_subgroup(d, n));
    CHECK(j_dual(d, n) == g);
  }
}

TEST_CASE("lifted pairs") {
  const GeneratingPair lp = lift_pair(no_symmetry_pair(2));
  CHECK(lp.dim == 3);
  CHECK(lp.evens == Family{SubsetMask::full(3)});
  CHECK(lp.odds.empty());
  CHECK(lift_set(S(2, {2})) == S(3, {1, 3}));
  CHECK(embed_set(S(2, {2})) == S(3, {3}));
  CHECK(script_lift(Family{S(1, {1})}, S(1, {1})) == Family{S(2, {2}), S(2, {1})});

  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 4;
    const GeneratingPair q = gen_pair(rng, n);
    const SubsetMask e = gen_subset(rng, n);
    CHECK(is_proper(restrict_pair(q, e)) == is_proper(restrict_pair(lift_pair(q), lift_set(e))));
    const Family f = gen_family(rng, n);
    CHECK(script_lift(restrict_family(f, e), e) == restrict_family(script_lift(f, SubsetMask::full(n)), lift_set(e)));
  }
}

TEST_CASE("j-s-g characterization for proper pairs") {
  Rng rng(17);
  int checked = 0;
  while (checked < 100) {
    const int n = 1 + checked % 4;
    const GeneratingPair q = gen_pair(rng, n);
    if (!is_proper(q)) continue;
    ++checked;
    const SymmetryPair g = gamma(q);
    const SubsetMask full = SubsetMask::full(n);
    const auto jg = index_set(full, g.as_generating());
    for (const auto& e : subsets_of(full)) {
      bool in_e = true, in_o = true;
      for (const auto& j : jg) {
        in_e = in_e && std::popcount(j.bits & e.bits) % 2 == 0;
        in_o = in_o && std::popcount(j.bits & e.bits) % 2 == 1;
      }
      CHECK(in_e == g.evens.contains(e));
      CHECK(in_o == g.odds.contains(e));
    }
  }
}
