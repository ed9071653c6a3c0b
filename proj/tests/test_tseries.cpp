// Truncated power series in the time variables and the jets of the
// topological solution they evaluate.
#include "hodge/tseries.hpp"
#include "test_util.hpp"

using namespace hodge;

namespace {

TSeries time_var(unsigned nvars, unsigned maxdeg, unsigned p) {
  TSeries s(nvars, maxdeg);
  TSeries::key k(nvars, 0);
  k[p] = 1;
  s.add(k, rat(1));
  return s;
}

}  // namespace

TEST_SUITE("time series") {
  TEST_CASE("arithmetic and truncation") {
    const TSeries t0 = time_var(2, 3, 0);
    const TSeries t1 = time_var(2, 3, 1);
    const TSeries p = (t0 + t1).pow(3);
    CHECK(p.coeff({1, 2}) == 3);
    CHECK(p.coeff({3, 0}) == 1);
    // degree overflow is dropped on add
    TSeries s(2, 2);
    s.add({3, 0}, rat(5));
    CHECK(s.is_zero());
    // products truncate at the smaller maxdeg
    const TSeries wide = time_var(2, 6, 0);
    CHECK((wide * time_var(2, 3, 0)).maxdeg() == 3);
    CHECK(p.truncated(2).coeff({1, 2}) == 0);
    CHECK(p.truncated(2).maxdeg() == 2);
    CHECK(TSeries::constant(2, 3, rat(7)).constant_term() == 7);
    CHECK((t0 + TSeries::constant(2, 3, rat(7))).positive_part() == t0);
  }

  TEST_CASE("derivatives") {
    const TSeries t0 = time_var(2, 4, 0);
    const TSeries t1 = time_var(2, 4, 1);
    const TSeries f = t0.pow(2) * t1;  // t0^2 t1
    CHECK(f.deriv(0).coeff({1, 1}) == 2);
    CHECK(f.deriv(1) == t0.pow(2));
    CHECK(f.deriv(0).deriv(1) == f.deriv(1).deriv(0));
  }

  TEST_CASE("nilpotent expansions invert each other") {
    const unsigned deg = 6;
    const TSeries h = time_var(2, deg, 0) + time_var(2, deg, 1).pow(2) * rational(1, 3);
    // (1+h)^a (1+h)^{-a} = 1
    const TSeries one = TSeries::constant(2, deg, rat(1));
    CHECK(h.one_plus_pow(3) * h.one_plus_pow(-3) == one);
    CHECK(h.one_plus_pow(-2) * (one + h).pow(2) == one);
    // exp(log(1+h)) = 1 + h
    CHECK(h.log_one_plus().exp() == one + h);
    // log((1+h)^2) = 2 log(1+h)
    CHECK((h.one_plus_pow(2) - one).log_one_plus() == rat(2) * h.log_one_plus());
  }

  TEST_CASE("topological jets satisfy the implicit equation") {
    const unsigned nvars = 3, deg = 6;
    TopologicalJets jets(nvars, deg);
    const TSeries& v = jets.jet(0);
    // v = sum_p t_p v^p / p!  (on the subspace t_p = 0, p >= nvars)
    TSeries rhs(nvars, deg);
    for (unsigned p = 0; p < nvars; ++p)
      rhs += time_var(nvars, deg, p) * v.pow(p) * (rat(1) / rat(factorial(p)));
    CHECK(v == rhs);
    // v(0) = 0, v_x(0) = 1
    CHECK(v.coeff(TSeries::key(nvars, 0)) == 0);
    CHECK(jets.jet(1).coeff(TSeries::key(nvars, 0)) == 1);
    // each jet is the t_0-derivative of the previous one
    for (unsigned m = 1; m <= 4; ++m)
      CHECK(jets.jet(m).truncated(deg - 1) == jets.jet(m - 1).deriv(0).truncated(deg - 1));
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    const unsigned nvars = 3, deg = 6;
    TopologicalJets jets(nvars, deg);
    context_ptr ctx = make_context(0);
    const DiffPoly f = DiffPoly::parse(ctx, "(1)*v1^-2*v2 + (3)*v*v3");
    const DiffPoly g = DiffPoly::parse(ctx, "(1/2)*v1^3 - (2)*v2^2");
    CHECK(jets.eval(f * g) == jets.eval(f) * jets.eval(g));
    CHECK(jets.eval(f + g) == jets.eval(f) + jets.eval(g));
    // Laurent inverse really inverts
    CHECK(jets.eval(DiffPoly::jet(ctx, 1, -1)) * jets.jet(1) ==
          TSeries::constant(nvars, deg, rat(1)));
    // the log generator evaluates to log v_x
    CHECK(jets.eval(DiffPoly::log_v1(ctx)).exp() == jets.jet(1));
    // the exp generator is rejected
    auto ectx = with_exp(make_context({"p"}), rat(1), {0});
    CHECK_THROWS_AS(jets.eval(DiffPoly::exp_v(ectx)), std::invalid_argument);
  }
}
