#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "ordual/cli/generate.hpp"
#include "ordual/duplication.hpp"
#include "ordual/error.hpp"

using namespace ordual;
using fixtures::subset;
using fixtures::val;

TEST_CASE("duplicate builds the horizontal sum") {
  SUBCASE("2-antichain") {
    const auto d = duplicate(fixtures::poset({"a", "b"}));
    CHECK(d.e().size() == 6);
    CHECK(bound(d.e().poset(), d.left(0), d.right(0), BoundKind::Join) == std::optional<std::size_t>{d.top()});
    CHECK(d.e().poset().label(d.left(1)) == "L(b)");
    CHECK(d.e().poset().label(d.rho(1)) == "R(b)");
  }
  SUBCASE("chain a<b") {
    const auto d = duplicate(fixtures::chain({"a", "b"}));
    const auto& e = d.e().poset();
    CHECK(e.lt(d.right(1), d.right(0)));
    CHECK_FALSE(e.comparable(d.left(0), d.right(0)));
    CHECK(e.lt(d.left(0), d.left(1)));
  }
  SUBCASE("labels 0 and 1 in P do not collide with the bounds") {
    const auto d = duplicate(fixtures::chain({"0", "1"}));
    CHECK(d.e().size() == 6);
  }
  SUBCASE("size and validity over all small posets") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& p : cli::exhaustive_posets(n)) {
        const auto d = duplicate(p);
        CHECK(d.e().size() == 2 * n + 2);
        CHECK(check_ortho_axioms(d.e().bounded(), d.e().comp_table()).all_passed());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            CHECK(d.e().poset().le(d.left(i), d.left(j)) == p.le(i, j));
            CHECK(d.e().poset().le(d.right(i), d.right(j)) == p.le(j, i));
            CHECK_FALSE(d.e().poset().comparable(d.left(i), d.right(j)));
          }
      }
  }
}

TEST_CASE("build_y_space") {
  SUBCASE("chain a<b") {
    const auto y = build_y_space(fixtures::chain({"a", "b"}));
    REQUIRE(y.points.size() == 3);  // 00, 01, 11
    CHECK(y.sigma1_table[0] == subset(3, {2}));
    CHECK(y.sigma2_table[1] == subset(3, {0}));
  }
  SUBCASE("2-antichain") {
    const auto y = build_y_space(fixtures::poset({"a", "b"}));
    REQUIRE(y.points.size() == 4);  // 00, 01, 10, 11
    CHECK(y.sigma1_table[0] == subset(4, {2, 3}));
  }
  SUBCASE("tables are monotone and complementary") {
    for (const auto& p : cli::exhaustive_posets(4)) {
      const auto y = build_y_space(p);
      for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(y.sigma2_table[i] == ~y.sigma1_table[i]);
        for (std::size_t j = 0; j < p.size(); ++j)
          if (p.le(i, j)) CHECK(y.sigma1_table[i].is_subset_of(y.sigma1_table[j]));
      }
      Family joined(y.sigma1_table.begin(), y.sigma1_table.end());
      joined.insert(joined.end(), y.sigma2_table.begin(), y.sigma2_table.end());
      normalize(joined);
      CHECK(y.joined.base() == joined);
    }
  }
}

TEST_CASE("restrict_phi and extend_psi") {
  const auto anti = duplicate(fixtures::poset({"a", "b"}));
  // bot, L(a), L(b), R(a), R(b), top
  CHECK(restrict_phi(anti, val("010011")) == val("10"));
  CHECK(restrict_phi(anti, extend_psi(anti, val("11"))) == val("11"));
  try {
    restrict_phi(anti, val("010001"));
    FAIL("non-orthovaluation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotOrthovaluation);
  }

  const auto chain = duplicate(fixtures::chain({"a", "b"}));
  CHECK(extend_psi(chain, val("01")) == val("001101"));
  CHECK(extend_psi(chain, val("00")) == val("000111"));
  try {
    extend_psi(chain, val("10"));
    FAIL("non-monotone accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMonotone);
  }
}

TEST_CASE("phi and psi are inverse over the brute-force valuation sets") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : cli::exhaustive_posets(n)) {
      const auto d = duplicate(p);
      const auto xs = brute::complement_preserving_maps(fixtures::relation_of(d.e().poset()), d.e().comp_table());
      const auto ys = brute::monotone_maps(fixtures::relation_of(p));
      REQUIRE(xs.size() == ys.size());
      for (auto xm : xs) {
        const TwoValuation x{fixtures::bits_of(xm, d.e().size())};
        CHECK(extend_psi(d, restrict_phi(d, x)) == x);
      }
      for (auto ym : ys) {
        const TwoValuation y{fixtures::bits_of(ym, n)};
        CHECK(restrict_phi(d, extend_psi(d, y)) == y);
      }
    }
}

TEST_CASE("verify_homeo") {
  SUBCASE("chain a<b") {
    const auto r = verify_homeo(fixtures::chain({"a", "b"}));
    CHECK(r.checks.passed());
    CHECK(r.x_size == 3);
    CHECK(r.y_size == 3);
    // psi^{-1}(sigma(bot)) is empty and psi^{-1}(sigma(top)) is everything
    const auto bot = std::find_if(r.preimages.begin(), r.preimages.end(), [](auto& row) { return row.element == "bot"; });
    const auto top = std::find_if(r.preimages.begin(), r.preimages.end(), [](auto& row) { return row.element == "top"; });
    REQUIRE(bot != r.preimages.end());
    REQUIRE(top != r.preimages.end());
    CHECK(bot->psi_preimage.none());
    CHECK(top->psi_preimage.all());
  }
  SUBCASE("2-antichain") {
    const auto r = verify_homeo(fixtures::poset({"a", "b"}));
    CHECK(r.checks.passed());
    CHECK(r.x_size == 4);
    CHECK(r.preimages.size() == 6);
  }
}

TEST_CASE("verify_main_lemma") {
  SUBCASE("chain a<b") {
    const auto r = verify_main_lemma(fixtures::chain({"a", "b"}));
    CHECK(r.checks.passed());
    CHECK(r.proper_family == Family{subset(3, {2}), subset(3, {1, 2})});
  }
  SUBCASE("2-antichain") {
    const auto r = verify_main_lemma(fixtures::poset({"a", "b"}));
    CHECK(r.checks.passed());
    CHECK(r.proper_family == Family{subset(4, {2, 3}), subset(4, {1, 3})});
  }
  SUBCASE("single element") {
    const auto r = verify_main_lemma(fixtures::poset({"a"}));
    CHECK(r.checks.passed());
    CHECK(r.proper_family == Family{subset(2, {1})});
  }
}
