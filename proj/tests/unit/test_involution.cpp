#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "ordual/cli/generate.hpp"
#include "ordual/error.hpp"
#include "ordual/involution.hpp"

using namespace ordual;
using fixtures::subset;
using fixtures::val;

namespace {

InvolutedPoset b2_swap() { return InvolutedPoset::make(fixtures::chain({"0", "1"}), {1, 0}); }
InvolutedPoset boolean4() { return InvolutedPoset::make(fixtures::boolean4_poset(), {3, 2, 1, 0}); }
InvolutedPoset three_chain() { return InvolutedPoset::make(fixtures::three_chain(), fixtures::three_chain_c()); }

// Every order-reversing involution of p.
std::vector<std::vector<std::size_t>> antitone_involutions(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) {
      if (perm[perm[i]] != i) ok = false;
      for (std::size_t j = 0; j < p.size() && ok; ++j)
        if (p.le(i, j) && !p.le(perm[j], perm[i])) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("InvolutedPoset rejects bad candidates") {
  const auto p = fixtures::chain({"0", "1"});
  for (auto c : {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{1, 1}}) {
    try {
      InvolutedPoset::make(p, c);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotAntitoneInvolution);
    }
  }
  CHECK_FALSE(InvolutedPoset::make(fixtures::poset({"a", "b"}), {0, 1}).is_bounded());
}

TEST_CASE("apply_pi") {
  const auto ip = b2_swap();
  CHECK(apply_pi(ip, val("00")) == val("11"));
  CHECK(apply_pi(ip, val("01")) == val("01"));
  for (const auto& x : enumerate_monotone(ip.poset())) CHECK(apply_pi(ip, apply_pi(ip, x)) == x);
  try {
    apply_pi(ip, val("10"));
    FAIL("non-monotone accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMonotone);
  }
}

TEST_CASE("build_pi") {
  SUBCASE("B2 swap") {
    const auto pi = build_pi(b2_swap());
    CHECK(pi.x_points == std::vector<TwoValuation>{val("00"), val("01"), val("11")});
    CHECK(pi.table == PointMap{2, 1, 0});
  }
  SUBCASE("Boolean lattice") {
    const auto pi = build_pi(boolean4());
    CHECK(pi.x_points.size() == 6);
    for (std::size_t k = 0; k < pi.table.size(); ++k) CHECK(pi.table[pi.table[k]] == k);
  }
  SUBCASE("identity on a 2-antichain flips every bit") {
    const auto pi = build_pi(InvolutedPoset::make(fixtures::poset({"a", "b"}), {0, 1}));
    CHECK(pi.table == PointMap{3, 2, 1, 0});
  }
}

TEST_CASE("verify_pi_bicontinuous") {
  SUBCASE("Boolean lattice") {
    const auto r = verify_pi_bicontinuous(boolean4());
    CHECK(r.checks.passed());
  }
  SUBCASE("B2 swap, explicit preimage") {
    const auto ip = b2_swap();
    const auto r = verify_pi_bicontinuous(ip);
    CHECK(r.checks.passed());
    const auto y = build_y_space(ip.poset());
    CHECK(preimage(r.pi.table, y.sigma1_table[1]) == subset(3, {0, 1}));
    CHECK(y.sigma2_table[0] == subset(3, {0, 1}));
  }
}

TEST_CASE("ortho_fixed_points") {
  CHECK(ortho_fixed_points(b2_swap()).fixed == std::vector<TwoValuation>{val("01")});
  const auto chain = ortho_fixed_points(three_chain());
  CHECK(chain.fixed.empty());
  CHECK(chain.checks.passed());
  const auto b4 = ortho_fixed_points(boolean4());
  CHECK(b4.fixed == enumerate_orthomonotone(fixtures::boolean4()));
  CHECK(b4.fixed.size() == 2);
}

TEST_CASE("verify_co_iso") {
  SUBCASE("B2") {
    const auto r = verify_co_iso(b2_swap());
    CHECK(r.checks.passed());
    CHECK(r.y_points.size() == 1);
    CHECK(r.clopen == Family{subset(1, {}), subset(1, {0})});
  }
  SUBCASE("Boolean lattice") {
    const auto r = verify_co_iso(boolean4());
    CHECK(r.checks.passed());
    CHECK(r.y_points.size() == 2);
    CHECK(r.clopen.size() == 4);
  }
  SUBCASE("rejects a non-orthoposet") {
    try {
      verify_co_iso(three_chain());
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotAnEOC);
    }
  }
}

TEST_CASE("detect_complementation") {
  SUBCASE("Boolean lattice") {
    const auto ev = detect_complementation(boolean4());
    CHECK(ev.criterion);
    CHECK(ev.oracle.all_passed());
    CHECK(ev.agrees());
  }
  SUBCASE("B2") { CHECK(detect_complementation(b2_swap()).criterion); }
  SUBCASE("3-chain with fixed middle: the criterion accepts, the axioms do not") {
    // pi^{-1}(sigma1(p)) = sigma2(c(p)) for every antitone involution, so the
    // homeomorphism criterion cannot see the failing complement law.
    const auto ev = detect_complementation(three_chain());
    CHECK(ev.criterion);
    CHECK_FALSE(ev.oracle.all_passed());
    CHECK_FALSE(ev.oracle.complement.passed);
    CHECK_FALSE(ev.agrees());
  }
  SUBCASE("strict continuity rejects even B2") {
    const auto ev = detect_complementation(b2_swap(), ContinuityMode::Strict);
    CHECK_FALSE(ev.criterion);
    CHECK_FALSE(ev.failing_base.empty());
  }
  SUBCASE("unbounded input") {
    try {
      detect_complementation(InvolutedPoset::make(fixtures::poset({"a", "b"}), {0, 1}));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotBounded);
    }
  }
}

TEST_CASE("involution laws over all small posets") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : cli::exhaustive_posets(n))
      for (const auto& c : antitone_involutions(p)) {
        const auto ip = InvolutedPoset::make(p, c);
        const auto pi = build_pi(ip);
        for (std::size_t k = 0; k < pi.table.size(); ++k) CHECK(pi.table[pi.table[k]] == k);
        CHECK(verify_pi_bicontinuous(ip).checks.passed());

        const auto fix = ortho_fixed_points(ip);
        CHECK(fix.checks.passed());
        std::vector<TwoValuation> expected;
        for (auto m : brute::complement_preserving_maps(fixtures::relation_of(p), c))
          expected.push_back({fixtures::bits_of(m, n)});
        std::sort(expected.begin(), expected.end());
        CHECK(fix.fixed == expected);
      }
}
