// Scratch driver: verifies the hierarchy module against the expected
// eps^2/eps^4 expressions before the real tests are written.
#include <chrono>
#include <cstdio>

#include "hodge/hierarchy.hpp"

using namespace hodge;

static int failures = 0;
#define REQUIRE(cond)                                      \
  do {                                                     \
    if (!(cond)) {                                         \
      std::printf("[FAIL] %s:%d  %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                          \
    }                                                      \
  } while (0)

static double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  context_ptr ctx = make_context(2);
  HodgeRecursion rec(ctx);
  HierarchyBuilder hb(rec, 4);
  QuasiMiura& qm = hb.map();

  // --- quasi-Miura forward: eps^2 and eps^4 coefficients ---------------
  const DiffPoly exp_fwd2 = DiffPoly::parse(ctx,
      "(-1/2)*s1*v2 - (1/24)*v1^-2*v2^2 + (1/24)*v1^-1*v3");
  const DiffPoly exp_fwd4 = DiffPoly::parse(ctx,
      "(1/18)*v1^-6*v2^5 - (35/288)*v1^-5*v2^3*v3 + (19/384)*v1^-4*v2*v3^2"
      " + (17/480)*v1^-4*v2^2*v4 - (73/5760)*v1^-3*v3*v4 - (41/5760)*v1^-3*v2*v5"
      " + (1/1152)*v1^-2*v6 + (11/80)*s1*v1^-4*v2^4 - (67/240)*s1*v1^-3*v2^2*v3"
      " + (17/240)*s1*v1^-2*v3^2 + (23/240)*s1*v1^-2*v2*v4 - (1/40)*s1*v1^-1*v5"
      " + (7/40)*s1^2*v4 - (1/5)*s1^3*v2^2 - (1/5)*s1^3*v1*v3"
      " - (1/24)*s2*v2^2 - (1/24)*s2*v1*v3");
  REQUIRE(qm.forward().coeff(0) == DiffPoly::jet(ctx, 0));
  if (qm.forward().coeff(2) != exp_fwd2) {
    std::printf("fwd2 got: %s\n", qm.forward().coeff(2).to_text().c_str());
  }
  REQUIRE(qm.forward().coeff(2) == exp_fwd2);
  if (qm.forward().coeff(4) != exp_fwd4) {
    std::printf("fwd4 got: %s\n", qm.forward().coeff(4).to_text().c_str());
  }
  REQUIRE(qm.forward().coeff(4) == exp_fwd4);
  std::printf("forward ok (%.0f ms)\n", ms_since(t0));

  // inverse round-trips (also enforced inside the constructor)
  REQUIRE(qm.to_w(qm.forward()) == EpsSeries::from_poly(DiffPoly::jet(ctx, 0), 4));

  // --- flows ------------------------------------------------------------
  REQUIRE(hb.flow(0) == EpsSeries::from_poly(DiffPoly::jet(ctx, 1), 4));
  const EpsSeries& f1 = hb.flow(1);
  REQUIRE(f1.coeff(0) == DiffPoly::parse(ctx, "(1)*v*v1"));
  const DiffPoly exp_f1_2 = DiffPoly::parse(ctx, "(1/12)*v3 - (1)*s1*v1*v2");
  const DiffPoly exp_f1_4 = DiffPoly::parse(ctx,
      "(-1/60)*s1*v5 + (1)*s1^2*v2*v3 + (1/5)*s1^2*v1*v4"
      " - (8/5)*s1^3*v1*v2^2 - (4/5)*s1^3*v1^2*v3"
      " - (1/3)*s2*v1*v2^2 - (1/6)*s2*v1^2*v3");
  if (f1.coeff(2) != exp_f1_2) std::printf("f1_2 got: %s\n", f1.coeff(2).to_text().c_str());
  REQUIRE(f1.coeff(2) == exp_f1_2);
  if (f1.coeff(4) != exp_f1_4) std::printf("f1_4 got: %s\n", f1.coeff(4).to_text().c_str());
  REQUIRE(f1.coeff(4) == exp_f1_4);
  std::printf("flows ok (%.0f ms)\n", ms_since(t0));

  // --- Hamiltonian operator ---------------------------------------------
  const DiffOperator& P = hb.hamiltonian_operator();
  DiffOperator expP(ctx, 4);
  {
    EpsSeries c1(ctx, 4);
    c1 += DiffPoly::constant(ctx, 1);
    expP.add_term(1, c1);
    EpsSeries c3(ctx, 4);
    c3.set_coeff(2, -DiffPoly::param(ctx, 0));
    expP.add_term(3, c3);
    EpsSeries c5(ctx, 4);
    c5.set_coeff(4, DiffPoly::param(ctx, 0, 2) * rational(3, 5));
    expP.add_term(5, c5);
  }
  if (!(P == expP)) {
    for (const auto& [k, c] : P.coeffs()) {
      for (const auto& [n, p] : c.coeffs()) {
        std::printf("P~ slot %u eps^%d: %s\n", k, n, p.to_text().c_str());
      }
    }
  }
  REQUIRE(P == expP);
  REQUIRE(hb.check_operator_skew());
  std::printf("operator ok (%.0f ms)\n", ms_since(t0));

  // --- densities ----------------------------------------------------------
  REQUIRE(hb.density(-1) == EpsSeries::from_poly(DiffPoly::jet(ctx, 0), 4));
  {
    EpsSeries h0(ctx, 4);
    h0.set_coeff(0, DiffPoly::parse(ctx, "(1/2)*v^2"));
    h0.set_coeff(2, DiffPoly::parse(ctx, "(-1/2)*s1*v1^2"));
    h0.set_coeff(4, DiffPoly::parse(ctx, "(1/5)*s1^2*v2^2"));
    EpsSeries diff = hb.density(0) - h0;
    REQUIRE(is_total_x_derivative(diff));
  }
  {
    EpsSeries h1(ctx, 4);
    h1.set_coeff(0, DiffPoly::parse(ctx, "(1/6)*v^3"));
    h1.set_coeff(2, DiffPoly::parse(ctx, "(-1/24)*v1^2 - (1/2)*s1*v*v1^2"));
    h1.set_coeff(4, DiffPoly::parse(ctx,
        "(-1/5)*s1^3*v*v1^2*v2 - (1/24)*s2*v*v1^2*v2"
        " + (1/30)*s1*v2^2 + (1/5)*s1^2*v*v2^2"));
    EpsSeries diff = hb.density(1) - h1;
    REQUIRE(is_total_x_derivative(diff));
  }
  std::printf("densities ok (%.0f ms)\n", ms_since(t0));

  // --- structural checks ----------------------------------------------------
  REQUIRE(hb.check_hamiltonian_form(0));
  REQUIRE(hb.check_hamiltonian_form(1));
  REQUIRE(hb.check_hamiltonian_form(2));
  std::printf("hamiltonian form ok (%.0f ms)\n", ms_since(t0));
  REQUIRE(hb.check_tau_symmetry(1, 2));
  REQUIRE(hb.check_tau_symmetry(1, 3));
  REQUIRE(hb.check_tau_symmetry(2, 3));
  std::printf("tau symmetry ok (%.0f ms)\n", ms_since(t0));
  REQUIRE(hb.check_flow_commute(1, 2));
  REQUIRE(hb.check_flow_commute(2, 3));
  std::printf("flow commute ok (%.0f ms)\n", ms_since(t0));

  // --- variational-derivative sanity ----------------------------------------
  {
    const DiffPoly f = DiffPoly::parse(ctx, "(1)*v1^-2*v2*L + (3)*s1*v*v2^2");
    REQUIRE(variational_derivative(f.dx()).is_zero());
    EpsSeries fs = EpsSeries::from_poly(f, 4);
    REQUIRE(is_total_x_derivative(fs.dx()));
    REQUIRE(!is_total_x_derivative(EpsSeries::from_poly(DiffPoly::jet(ctx, 0), 4)));
    REQUIRE(!is_total_x_derivative(EpsSeries::from_poly(DiffPoly::param(ctx, 0), 4)));
  }

  std::printf("total %.0f ms, failures %d\n", ms_since(t0), failures);
  return failures == 0 ? 0 : 1;
}
