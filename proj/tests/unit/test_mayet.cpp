#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "ordual/cli/generate.hpp"
#include "ordual/duplication.hpp"
#include "ordual/error.hpp"
#include "ordual/mayet.hpp"

using namespace ordual;
using fixtures::subset;

TEST_CASE("build_dual of B2") {
  const auto d = build_dual(fixtures::b2());
  CHECK(d.points.size() == 1);
  CHECK(d.space.base() == Family{subset(1, {}), subset(1, {0})});
}

TEST_CASE("build_dual of the Boolean four-element lattice") {
  const auto e = fixtures::boolean4();
  const auto d = build_dual(e);
  REQUIRE(d.points.size() == 2);
  // points: 0011 (a' true), 0101 (a true)
  CHECK(sigma(d, 1) == subset(2, {1}));
  CHECK(sigma(d, 2) == subset(2, {0}));
  CHECK(sigma(d, 0).none());
  CHECK(sigma(d, 3).all());
  try {
    sigma(d, 4);
    FAIL("unknown element accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::UnknownElement);
  }
}

TEST_CASE("build_dual of the duplicated 2-antichain") {
  const auto dup = duplicate(fixtures::poset({"a", "b"}));
  const auto d = build_dual(dup.e());
  CHECK(d.points.size() == 4);
  CHECK(sigma(d, dup.left(0)).count() == 2);
  for (std::size_t i = 0; i < dup.e().size(); ++i) {
    CHECK(classify_subset(d.space, sigma(d, i)).clopen());
    CHECK(sigma(d, dup.e().comp(i)) == ~sigma(d, i));
  }
}

TEST_CASE("verify_mayet on hand-built orthoposets") {
  SUBCASE("B2") {
    const auto r = verify_mayet(fixtures::b2());
    CHECK(r.checks.passed());
    CHECK(r.clopen == Family{subset(1, {}), subset(1, {0})});
  }
  SUBCASE("Boolean lattice") {
    const auto r = verify_mayet(fixtures::boolean4());
    CHECK(r.checks.passed());
    CHECK(r.clopen.size() == 4);
    CHECK(r.closed_count == 4);
  }
  SUBCASE("duplicated 2-antichain") {
    const auto r = verify_mayet(duplicate(fixtures::poset({"a", "b"})).e());
    CHECK(r.checks.passed());
    CHECK(r.clopen.size() == 6);
    CHECK(r.closed_count == 10);
  }
}

TEST_CASE("dual spaces of small duplications against the brute-force clopen oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& p : cli::exhaustive_posets(n)) {
      const auto e = duplicate(p).e();
      const auto d = build_dual(e);
      CHECK(sigma(d, e.bottom()).none());
      CHECK(sigma(d, e.top()).all());

      std::vector<brute::Mask> base;
      for (const auto& s : d.space.base()) base.push_back(fixtures::mask_of(s));
      const auto expected = brute::clopen_sets(d.points.size(), base);
      const auto co = clopen_family(d.space);
      REQUIRE(co.size() == expected.size());
      for (const auto& a : co) CHECK(expected.contains(fixtures::mask_of(a)));

      // CO(X) ordered by inclusion with set complement is an orthoposet
      auto bounded = as_bounded(family_as_poset(co));
      REQUIRE(bounded.has_value());
      std::vector<std::size_t> comp(co.size());
      for (std::size_t k = 0; k < co.size(); ++k)
        comp[k] = static_cast<std::size_t>(std::lower_bound(co.begin(), co.end(), ~co[k]) - co.begin());
      CHECK(check_ortho_axioms(*bounded, comp).all_passed());

      CHECK(verify_mayet(e).checks.passed());
    }
  }
}
