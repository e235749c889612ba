#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "ordual/closure.hpp"
#include "ordual/duplication.hpp"
#include "ordual/error.hpp"
#include "ordual/mayet.hpp"

using namespace ordual;
using fixtures::subset;

namespace {

// Ground {1,2,3} is indexed 0,1,2.
ClosureSpace sample_space() { return ClosureSpace(3, {subset(3, {0, 1}), subset(3, {1, 2})}); }

ClosureSpace random_space(std::mt19937_64& rng, std::size_t max_points, std::size_t max_base) {
  const auto n = std::uniform_int_distribution<std::size_t>(1, max_points)(rng);
  const auto k = std::uniform_int_distribution<std::size_t>(0, max_base)(rng);
  std::bernoulli_distribution bit(0.6);
  Family base;
  for (std::size_t i = 0; i < k; ++i) {
    PointSubset s(n);
    for (std::size_t j = 0; j < n; ++j) s.set(j, bit(rng));
    base.push_back(s);
  }
  return ClosureSpace(n, std::move(base));
}

PointSubset random_subset(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution bit(0.4);
  PointSubset s(n);
  for (std::size_t j = 0; j < n; ++j) s.set(j, bit(rng));
  return s;
}

}  // namespace

TEST_CASE("closure_of") {
  const auto s = sample_space();
  CHECK(closure_of(s, subset(3, {1})) == subset(3, {1}));
  CHECK(closure_of(s, subset(3, {0, 2})) == s.full_set());
  CHECK(closure_of(s, s.empty_set()) == subset(3, {1}));
  try {
    closure_of(s, PointSubset(4));
    FAIL("size mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeMismatch);
  }
}

TEST_CASE("closed_family") {
  CHECK(closed_family(sample_space()) ==
        Family{subset(3, {1}), subset(3, {1, 2}), subset(3, {0, 1}), subset(3, {0, 1, 2})});
  CHECK(closed_family(ClosureSpace(3, {})) == Family{subset(3, {0, 1, 2})});
  CHECK(closed_family(ClosureSpace(2, {subset(2, {0}), subset(2, {1})})) ==
        Family{subset(2, {}), subset(2, {1}), subset(2, {0}), subset(2, {0, 1})});
  try {
    closed_family(sample_space(), 3);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeCap);
  }
}

TEST_CASE("classify_subset") {
  const auto s = sample_space();
  const auto two = classify_subset(s, subset(3, {1}));
  CHECK(two.closed);
  CHECK_FALSE(two.open);
  CHECK(classify_subset(s, s.full_set()).closed);
  CHECK(classify_subset(ClosureSpace(3, {subset(3, {0}), subset(3, {1, 2})}), subset(3, {0})).clopen());
}

TEST_CASE("mixed_families") {
  SUBCASE("same single base: nothing is closed and open") {
    const BiclosureSpace b(3, {subset(3, {0, 1})}, {subset(3, {0, 1})});
    CHECK(mixed_families(b, 1, 2).empty());
  }
  SUBCASE("complementary base members are in every CiOj") {
    const auto k = subset(4, {0, 2});
    const BiclosureSpace b(4, {k, ~k, subset(4, {1})}, {k, ~k});
    for (int i : {1, 2})
      for (int j : {1, 2}) {
        const auto fam = mixed_families(b, i, j);
        CHECK(std::find(fam.begin(), fam.end(), k) != fam.end());
      }
  }
  SUBCASE("Y of the chain a<b") {
    const auto y = build_y_space(fixtures::chain({"a", "b"}));
    // points (00, 01, 11) -> indices 0, 1, 2
    CHECK(mixed_families(y.bi, 1, 2) == Family{subset(3, {2}), subset(3, {1, 2})});
  }
}

TEST_CASE("join_closures") {
  const ClosureSpace a(3, {subset(3, {0, 1})});
  const ClosureSpace b(3, {subset(3, {1, 2})});
  const auto j = join_closures(a, b);
  const auto fam = closed_family(j);
  CHECK(std::find(fam.begin(), fam.end(), subset(3, {1})) != fam.end());
  CHECK(closed_family(join_closures(a, ClosureSpace(3, {}))) == closed_family(a));
  CHECK(closed_family(join_closures(a, b)) == closed_family(join_closures(b, a)));
  CHECK(closed_family(join_closures(a, a)) == closed_family(a));
  try {
    join_closures(a, ClosureSpace(2, {}));
    FAIL("size mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeMismatch);
  }
}

TEST_CASE("continuity") {
  const ClosureSpace s(3, {subset(3, {0, 1})});
  const PointMap id{0, 1, 2};
  CHECK(is_continuous(id, s, s, ContinuityMode::Weak));
  CHECK_FALSE(is_continuous(id, s, s, ContinuityMode::Strict));

  SUBCASE("restriction map of the duplicated antichain") {
    const auto p = fixtures::poset({"a", "b"});
    const auto d = duplicate(p);
    const auto dual = build_dual(d.e());
    const auto y = build_y_space(p);
    PointMap phi;
    for (const auto& x : dual.points) phi.push_back(*y.find(restrict_phi(d, x)));
    CHECK(is_continuous(phi, dual.space, y.joined, ContinuityMode::Weak));
  }
}

TEST_CASE("is_homeomorphic_pair") {
  const ClosureSpace s(3, {subset(3, {0, 1}), subset(3, {2})});
  const PointMap id{0, 1, 2};
  CHECK(is_homeomorphic_pair(id, id, s, s));
  const ClosureSpace t(2, {});
  CHECK_FALSE(is_homeomorphic_pair(PointMap{0, 1, 1}, PointMap{0, 1}, s, t));
  // a bijection that is not the inverse of its partner
  CHECK_FALSE(is_homeomorphic_pair(PointMap{1, 0, 2}, PointMap{1, 2, 0}, s, s));
}

TEST_CASE("family_as_poset") {
  const auto chain = family_as_poset({subset(2, {0}), subset(2, {0, 1})});
  CHECK(chain.le(0, 1));
  CHECK_FALSE(chain.le(1, 0));
  const auto anti = family_as_poset({subset(2, {0}), subset(2, {1})});
  CHECK_FALSE(anti.comparable(0, 1));
}

TEST_CASE("closure operator laws on random spaces") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 300; ++k) {
    const auto s = random_space(rng, 10, 8);
    const auto a = random_subset(rng, s.size());
    const auto b = a | random_subset(rng, s.size());
    const auto ca = closure_of(s, a);
    CHECK(a.is_subset_of(ca));
    CHECK(ca.is_subset_of(closure_of(s, b)));
    CHECK(closure_of(s, ca) == ca);
  }
}

TEST_CASE("closed_family agrees with the subfamily-intersection oracle") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const auto s = random_space(rng, 9, 7);
    std::vector<brute::Mask> base;
    for (const auto& b : s.base()) base.push_back(fixtures::mask_of(b));
    const auto expected = brute::closed_sets(s.size(), base);
    const auto fam = closed_family(s);
    REQUIRE(fam.size() == expected.size());
    for (const auto& a : fam) CHECK(expected.contains(fixtures::mask_of(a)));
    // classify agrees with membership for every subset
    for (brute::Mask m = 0; m < (brute::Mask{1} << s.size()); ++m)
      CHECK(classify_subset(s, fixtures::bits_of(m, s.size())).closed == expected.contains(m));
  }
}

TEST_CASE("base-checked weak continuity equals full-family weak continuity") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto src = random_space(rng, 7, 5);
    const auto dst = random_space(rng, 7, 5);
    PointMap f(src.size());
    for (auto& v : f) v = std::uniform_int_distribution<std::size_t>(0, dst.size() - 1)(rng);
    bool full = true;
    for (const auto& a : closed_family(dst)) full = full && is_closed(src, preimage(f, a));
    CHECK(is_continuous(f, src, dst, ContinuityMode::Weak) == full);
  }
}

TEST_CASE("clopen family contains base members closed under complement") {
  const auto k = subset(5, {0, 3});
  const ClosureSpace s(5, {k, ~k, subset(5, {1, 2}), subset(5, {0, 1, 2})});
  const auto co = clopen_family(s);
  CHECK(std::find(co.begin(), co.end(), k) != co.end());
  CHECK(std::find(co.begin(), co.end(), ~k) != co.end());
}
