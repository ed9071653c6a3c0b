// The lambda-ring (Mumford reduction, Chern characters), the square-free
// generating functions solved from the potentials, and exact Hodge integrals
// with and without psi insertions.
#include <random>
#include <vector>

#include "hodge/intersection.hpp"
#include "hodge/lambda_extract.hpp"
#include "test_util.hpp"

using namespace hodge;
using testfx::ctx3;
using testfx::rec3;

namespace {

LambdaExtractor& ex3() {
  static LambdaExtractor ex(rec3());
  return ex;
}

LambdaCombo unit_combo() {
  LambdaCombo c;
  c.emplace(LambdaMask{}, rat(1));
  return c;
}

// <tau_{k_1}..tau_{k_n} lambda_g>_g = multinomial(2g-3+n; k) * b_g
rat bg(unsigned g) {
  rat b = bernoulli(2 * g);
  if (b < 0) b = -b;
  const rat pw(bigint(1) << (2 * g - 1));
  return (pw - 1) / pw * b / rat(factorial(2 * g));
}

}  // namespace

TEST_SUITE("lambda ring") {
  TEST_CASE("even Chern characters reduce to zero") {
    for (unsigned g = 2; g <= 4; ++g) {
      LambdaCalculus lc(g);
      CHECK(lc.chern(2).empty());
      CHECK(lc.chern(4).empty());
    }
  }

  TEST_CASE("small reductions") {
    LambdaCalculus lc(2);
    CHECK(lc.reduce({}) == unit_combo());
    CHECK(lc.chern(0) == LambdaCombo{{LambdaMask{}, rat(2)}});
    CHECK(lc.chern(1) == LambdaCombo{{LambdaMask{1}, rat(1)}});
    // lambda_1^2 = 2 lambda_2 in genus 2
    CHECK(lc.reduce({1, 1}) == LambdaCombo{{LambdaMask{2}, rat(2)}});
    // lambda_2^2 = 2 lambda_1 lambda_3 - 2 lambda_4 dies at rank 2
    CHECK(lc.reduce({2, 2}).empty());
    // lambda beyond the rank vanishes outright
    CHECK(lc.reduce({3}).empty());
    LambdaCalculus lc4(4);
    CHECK(lc4.reduce({2, 2}) ==
          LambdaCombo{{LambdaMask{1, 3}, rat(2)}, {LambdaMask{4}, rat(-2)}});
  }

  TEST_CASE("reduction is confluent and weight-graded") {
    std::mt19937 rng(20260819);
    for (int it = 0; it < 300; ++it) {
      const unsigned g = 2 + rng() % 3;
      LambdaCalculus lc(g);
      std::vector<unsigned> ms(rng() % 6);
      unsigned weight = 0;
      for (auto& e : ms) {
        e = 1 + rng() % g;
        weight += e;
      }
      const LambdaCombo direct = lc.reduce(ms);
      // fold the singleton reductions in both orders
      LambdaCombo left = unit_combo(), right = unit_combo();
      for (std::size_t i = 0; i < ms.size(); ++i) {
        left = lc.multiply(left, lc.reduce({ms[i]}));
        right = lc.multiply(lc.reduce({ms[ms.size() - 1 - i]}), right);
      }
      CHECK(direct == left);
      CHECK(direct == right);
      for (const auto& [mask, c] : direct) {
        CHECK(c != 0);
        unsigned msum = 0, prev = 0;
        for (unsigned i : mask) {
          CHECK(i > prev);  // strictly increasing, square-free
          CHECK(i <= g);
          prev = i;
          msum += i;
        }
        CHECK(msum == weight);
      }
    }
  }
}

TEST_SUITE("lambda generating functions") {
  TEST_CASE("extraction blocks close exactly") {
    const GfExtraction& e2 = ex3().extraction(2);
    CHECK(e2.consistent);
    CHECK(e2.n_masks == 3);  // {1}, {2}, {1,2}
    CHECK(e2.n_equations > e2.n_masks);
    const GfExtraction& e3 = ex3().extraction(3);
    CHECK(e3.consistent);
    CHECK(e3.n_masks == 7);  // nonempty subsets of {1,2,3}
    CHECK(e3.n_equations > e3.n_masks);
  }

  TEST_CASE("genus-2 functions") {
    CHECK(ex3().gf(2, {1}) ==
          DiffPoly::parse(ctx3(), "(-11/5760)*v1^-2*v2^2 + (1/480)*v1^-1*v3"));
    CHECK(ex3().gf(2, {2}) == DiffPoly::parse(ctx3(), "(7/5760)*v2"));
    CHECK(ex3().gf(2, {1, 2}) == DiffPoly::parse(ctx3(), "(1/5760)*v1^2"));
  }

  TEST_CASE("genus-3 spot values") {
    CHECK(ex3().gf(3, {3}) == DiffPoly::parse(ctx3(), "(31/967680)*v4"));
    CHECK(ex3().gf(3, {2, 3}) == DiffPoly::parse(ctx3(), "(1/120960)*v1^2*v2"));
    CHECK(ex3().gf(3, {1, 2, 3}) == DiffPoly::parse(ctx3(), "(1/1451520)*v1^4"));
  }

  TEST_CASE("empty mask returns the free energy") {
    CHECK(ex3().gf(2, {}) == rec3().free_energy(2));
  }

  TEST_CASE("top triple closed form") {
    CHECK(LambdaExtractor::triple_top_constant(2) == rat(1, 5760));
    CHECK(LambdaExtractor::triple_top_constant(3) == rat(1, 1451520));
    CHECK_THROWS_AS(LambdaExtractor::triple_top_constant(1), std::invalid_argument);
    for (unsigned g = 2; g <= 3; ++g) {
      LambdaMask triple;
      for (unsigned i = g - 2; i <= g; ++i)
        if (i >= 1) triple.push_back(i);
      CHECK(ex3().gf(g, triple) ==
            DiffPoly::jet(ctx3(), 1, 2 * static_cast<int>(g) - 2) *
                LambdaExtractor::triple_top_constant(g));
    }
  }

  TEST_CASE("unknown masks are rejected") {
    CHECK_THROWS_AS(ex3().gf(2, LambdaMask{3}), std::invalid_argument);
  }
}

TEST_SUITE("hodge numbers") {
  TEST_CASE("pure lambda integrals at t = 0") {
    CHECK(ex3().hodge_number(2, {1, 1, 1}) == rat(1, 2880));
    CHECK(ex3().hodge_number(3, {1, 2, 3}) == rat(1, 1451520));
    CHECK(ex3().hodge_number(3, {1, 1, 1, 1, 1, 1}) == rat(1, 90720));
    // wrong cohomological degree integrates to zero
    CHECK(ex3().hodge_number(2, {1}) == 0);
    // lambda beyond the rank vanishes in the ring already
    CHECK(ex3().hodge_number(2, {3}) == 0);
  }

  TEST_CASE("psi decorations against the lambda_g closed form") {
    CHECK(ex3().hodge_number(1, {1}, {0}) == rat(1, 24));
    CHECK(ex3().hodge_number(1, {1}, {0, 1}) == rat(1, 24));
    CHECK(ex3().hodge_number(2, {2}, {2}) == bg(2));
    CHECK(ex3().hodge_number(2, {2}, {0, 3}) == bg(2));
    CHECK(ex3().hodge_number(2, {2}, {1, 2}) == rat(3) * bg(2));
    CHECK(ex3().hodge_number(3, {3}, {4}) == bg(3));
    CHECK(ex3().hodge_number(2, {2}, {1}) == 0);  // dimension mismatch
    // order of the psi exponents is immaterial
    CHECK(ex3().hodge_number(1, {1}, {0, 1, 1}) == ex3().hodge_number(1, {1}, {1, 0, 1}));
  }

  TEST_CASE("pure psi numbers match the intersection oracle") {
    IntersectionOracle oracle;
    CHECK(ex3().hodge_number(2, {}, {4}) == oracle.correlator(2, {4}));
    CHECK(ex3().hodge_number(2, {}, {2, 3}) == oracle.correlator(2, {2, 3}));
  }
}
