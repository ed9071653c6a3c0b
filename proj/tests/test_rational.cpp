// Exact rational scalars, the number-theoretic sequences, and the exact
// linear solver they feed.
#include <stdexcept>

#include "hodge/linalg.hpp"
#include "hodge/rational.hpp"
#include "test_util.hpp"

using namespace hodge;

TEST_SUITE("rational") {
  TEST_CASE("construction canonicalizes sign and gcd") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(1, -2) == rational(-1, 2));
    CHECK(rational(-6, -4) == rational(3, 2));
    CHECK(rational(0, 7) == 0);
    CHECK(rational(5) == 5);
    CHECK_THROWS_AS(rational(1, 0), std::invalid_argument);
  }

  TEST_CASE("string round trips") {
    CHECK(to_string(rational(-7, 3)) == "-7/3");
    CHECK(to_string(rational(4, 2)) == "2");
    CHECK(to_string(rat(0)) == "0");
    CHECK(rational_from_string("7/3") == rational(7, 3));
    CHECK(rational_from_string("-7/3") == rational(-7, 3));
    CHECK(rational_from_string("2/4") == rational(1, 2));
    CHECK(rational_from_string("0") == 0);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), std::invalid_argument);
  }

  TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    // generalized binomial for Laurent expansions: C(a,k) = a(a-1)...(a-k+1)/k!
    CHECK(binomial_general(-1, 3) == rat(-1));
    CHECK(binomial_general(-3, 2) == rat(6));
    CHECK(binomial_general(4, 2) == rat(6));
    CHECK(binomial_general(-2, 0) == rat(1));
    CHECK(double_factorial_odd(-1) == 1);
    CHECK(double_factorial_odd(1) == 1);
    CHECK(double_factorial_odd(5) == 15);
    CHECK(double_factorial_odd(9) == 945);
    CHECK_THROWS_AS(double_factorial_odd(4), std::invalid_argument);
  }

  TEST_CASE("Bernoulli numbers, B_1 = -1/2 convention") {
    CHECK(bernoulli(0) == rat(1));
    CHECK(bernoulli(1) == rational(-1, 2));
    CHECK(bernoulli(2) == rational(1, 6));
    CHECK(bernoulli(4) == rational(-1, 30));
    CHECK(bernoulli(6) == rational(1, 42));
    CHECK(bernoulli(8) == rational(-1, 30));
    CHECK(bernoulli(10) == rational(5, 66));
    CHECK(bernoulli(12) == rational(-691, 2730));
    for (unsigned n = 3; n <= 13; n += 2) CHECK(bernoulli(n) == 0);
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("unique solve") {
    // 2x + y = 5, x - y = 1  ->  x = 2, y = 1
    auto sol = solve_linear<rat>({{rat(2), rat(1)}, {rat(1), rat(-1)}}, {rat(5), rat(1)}, rat(0));
    REQUIRE(sol.unique);
    CHECK(sol.rank == 2);
    CHECK(sol.x[0] == 2);
    CHECK(sol.x[1] == 1);
  }

  TEST_CASE("overdetermined consistent vs inconsistent") {
    std::vector<std::vector<rat>> A{{rat(1), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(1)}};
    auto good = solve_linear<rat>(A, {rat(3), rat(4), rat(7)}, rat(0));
    CHECK(good.unique);
    CHECK(good.x[0] == 3);
    CHECK(good.x[1] == 4);
    auto bad = solve_linear<rat>(A, {rat(3), rat(4), rat(8)}, rat(0));
    CHECK(!bad.consistent);
    CHECK(!bad.unique);
  }

  TEST_CASE("underdetermined solution sets free variables to zero") {
    // x + y = 2 with two unknowns: pivot on x, free y = 0
    auto sol = solve_linear<rat>({{rat(1), rat(1)}}, {rat(2)}, rat(0));
    CHECK(sol.consistent);
    CHECK(!sol.unique);
    CHECK(sol.rank == 1);
    REQUIRE(sol.pivot_cols == std::vector<std::size_t>{0});
    CHECK(sol.x[0] == 2);
    CHECK(sol.x[1] == 0);
  }

  TEST_CASE("differential-polynomial right-hand sides") {
    const auto& ctx = testfx::ctx3();
    const DiffPoly v1 = DiffPoly::jet(ctx, 1);
    const DiffPoly v2 = DiffPoly::jet(ctx, 2);
    // x0 + x1 = v1 + v2, x0 - x1 = v1 - v2  ->  x0 = v1, x1 = v2
    auto sol = solve_linear<DiffPoly>({{rat(1), rat(1)}, {rat(1), rat(-1)}}, {v1 + v2, v1 - v2},
                                      DiffPoly::zero(ctx));
    REQUIRE(sol.unique);
    CHECK(sol.x[0] == v1);
    CHECK(sol.x[1] == v2);
  }

  TEST_CASE("shape validation") {
    CHECK_THROWS_AS(solve_linear<rat>({{rat(1)}}, {rat(1), rat(2)}, rat(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_linear<rat>({{rat(1), rat(2)}, {rat(1)}}, {rat(1), rat(2)}, rat(0)),
                    std::invalid_argument);
  }
}
