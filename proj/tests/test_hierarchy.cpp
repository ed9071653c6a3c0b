// The deformed hierarchy: eps-series arithmetic, the quasi-Miura pair and
// its inverse, the deformed flows, the Hamiltonian operator, tau-symmetric
// densities, and the variational-derivative machinery.
#include "hodge/hierarchy.hpp"
#include "test_util.hpp"

using namespace hodge;

namespace {

HodgeRecursion& rec2() {
  static context_ptr ctx = make_context(2);
  static HodgeRecursion rec(ctx);
  return rec;
}
const context_ptr& ctx2() { return rec2().context(); }
HierarchyBuilder& hb4() {
  static HierarchyBuilder hb(rec2(), 4);
  return hb;
}

const char* kForward2 = "(-1/2)*s1*v2 - (1/24)*v1^-2*v2^2 + (1/24)*v1^-1*v3";
const char* kForward4 =
    "(1/18)*v1^-6*v2^5 - (35/288)*v1^-5*v2^3*v3 + (19/384)*v1^-4*v2*v3^2"
    " + (17/480)*v1^-4*v2^2*v4 - (73/5760)*v1^-3*v3*v4 - (41/5760)*v1^-3*v2*v5"
    " + (1/1152)*v1^-2*v6 + (11/80)*s1*v1^-4*v2^4 - (67/240)*s1*v1^-3*v2^2*v3"
    " + (17/240)*s1*v1^-2*v3^2 + (23/240)*s1*v1^-2*v2*v4 - (1/40)*s1*v1^-1*v5"
    " + (7/40)*s1^2*v4 - (1/5)*s1^3*v2^2 - (1/5)*s1^3*v1*v3"
    " - (1/24)*s2*v2^2 - (1/24)*s2*v1*v3";
const char* kFlow1Eps2 = "(1/12)*v3 - (1)*s1*v1*v2";
const char* kFlow1Eps4 =
    "(-1/60)*s1*v5 + (1)*s1^2*v2*v3 + (1/5)*s1^2*v1*v4"
    " - (8/5)*s1^3*v1*v2^2 - (4/5)*s1^3*v1^2*v3"
    " - (1/3)*s2*v1*v2^2 - (1/6)*s2*v1^2*v3";

}  // namespace

TEST_SUITE("eps series") {
  TEST_CASE("arithmetic and truncation") {
    const DiffPoly v = DiffPoly::jet(ctx2(), 0);
    const DiffPoly v1 = DiffPoly::jet(ctx2(), 1);
    EpsSeries a = EpsSeries::from_poly(v, 4);
    CHECK(a.coeff(0) == v);
    CHECK(a.coeff(2).is_zero());
    a.set_coeff(2, v1);
    EpsSeries b(ctx2(), 2);
    b.set_coeff(2, v);
    // products truncate at the smaller order
    const EpsSeries p = a * b;
    CHECK(p.trunc() == 2);
    CHECK(p.coeff(2) == v * v);
    // shifting multiplies by eps^n and drops overflow
    const EpsSeries s = a.shifted(2);
    CHECK(s.coeff(2) == v);
    CHECK(s.coeff(4).is_zero());  // the eps^2 part fell off the end
    CHECK(a.dx().coeff(2) == DiffPoly::jet(ctx2(), 2));
    CHECK(a - a == EpsSeries::zero(ctx2(), 4));
    CHECK_THROWS_AS(a.coeff(3), std::invalid_argument);
    CHECK_THROWS_AS(a.set_coeff(1, v), std::invalid_argument);
  }
}

TEST_SUITE("quasi-miura") {
  TEST_CASE("forward map") {
    QuasiMiura& qm = hb4().map();
    CHECK(qm.forward().coeff(0) == DiffPoly::jet(ctx2(), 0));
    CHECK(qm.forward().coeff(2) == DiffPoly::parse(ctx2(), kForward2));
    CHECK(qm.forward().coeff(4) == DiffPoly::parse(ctx2(), kForward4));
  }

  TEST_CASE("inverse round trip") {
    QuasiMiura& qm = hb4().map();
    CHECK(qm.inverse().coeff(0) == DiffPoly::jet(ctx2(), 0));
    CHECK(qm.to_w(qm.forward()) ==
          EpsSeries::from_poly(DiffPoly::jet(ctx2(), 0), 4));
  }

  TEST_CASE("generic series inversion") {
    // an artificial near-identity map, inverted and composed both ways
    EpsSeries image = EpsSeries::from_poly(DiffPoly::jet(ctx2(), 0), 4);
    image.set_coeff(2, DiffPoly::jet(ctx2(), 2) +
                           DiffPoly::param(ctx2(), 0) * DiffPoly::jet(ctx2(), 1, 2));
    const EpsSeries inv = invert_jet_series(image);
    JetSubstitution by_inv(ctx2(), inv);
    CHECK(by_inv.apply(image) == EpsSeries::from_poly(DiffPoly::jet(ctx2(), 0), 4));
    JetSubstitution by_image(ctx2(), image);
    CHECK(by_image.apply(inv) == EpsSeries::from_poly(DiffPoly::jet(ctx2(), 0), 4));
    // substitution is a ring map: it respects products and d/dx
    const DiffPoly f = DiffPoly::parse(ctx2(), "(1)*v1^-1*v2 + (2)*s1*v*L");
    const DiffPoly g = DiffPoly::parse(ctx2(), "(1)*v2 - (3)*v*v1");
    CHECK(by_image.apply(f * g) == by_image.apply(f) * by_image.apply(g));
    CHECK(by_image.apply(f.dx()) == by_image.apply(f).dx());
  }

  TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(QuasiMiura(rec2(), 3), std::invalid_argument);
    CHECK_THROWS_AS(QuasiMiura(ctx2(), std::vector<DiffPoly>{}, 2), std::invalid_argument);
  }
}

TEST_SUITE("hierarchy") {
  TEST_CASE("lowest flow is translation") {
    CHECK(hb4().flow(0) == EpsSeries::from_poly(DiffPoly::jet(ctx2(), 1), 4));
  }

  TEST_CASE("first flow through eps^4") {
    const EpsSeries& f1 = hb4().flow(1);
    CHECK(f1.coeff(0) == DiffPoly::parse(ctx2(), "(1)*v*v1"));
    CHECK(f1.coeff(2) == DiffPoly::parse(ctx2(), kFlow1Eps2));
    CHECK(f1.coeff(4) == DiffPoly::parse(ctx2(), kFlow1Eps4));
  }

  TEST_CASE("hamiltonian operator") {
    const DiffOperator& P = hb4().hamiltonian_operator();
    DiffOperator expP(ctx2(), 4);
    EpsSeries c1(ctx2(), 4);
    c1 += DiffPoly::constant(ctx2(), 1);
    expP.add_term(1, c1);
    EpsSeries c3(ctx2(), 4);
    c3.set_coeff(2, -DiffPoly::param(ctx2(), 0));
    expP.add_term(3, c3);
    EpsSeries c5(ctx2(), 4);
    c5.set_coeff(4, DiffPoly::param(ctx2(), 0, 2) * rational(3, 5));
    expP.add_term(5, c5);
    CHECK(P == expP);
    CHECK(hb4().check_operator_skew());
  }

  TEST_CASE("densities modulo total derivatives") {
    CHECK(hb4().density(-1) == EpsSeries::from_poly(DiffPoly::jet(ctx2(), 0), 4));
    EpsSeries h0(ctx2(), 4);
    h0.set_coeff(0, DiffPoly::parse(ctx2(), "(1/2)*v^2"));
    h0.set_coeff(2, DiffPoly::parse(ctx2(), "(-1/2)*s1*v1^2"));
    h0.set_coeff(4, DiffPoly::parse(ctx2(), "(1/5)*s1^2*v2^2"));
    CHECK(is_total_x_derivative(hb4().density(0) - h0));
    EpsSeries h1(ctx2(), 4);
    h1.set_coeff(0, DiffPoly::parse(ctx2(), "(1/6)*v^3"));
    h1.set_coeff(2, DiffPoly::parse(ctx2(), "(-1/24)*v1^2 - (1/2)*s1*v*v1^2"));
    h1.set_coeff(4, DiffPoly::parse(ctx2(),
        "(-1/5)*s1^3*v*v1^2*v2 - (1/24)*s2*v*v1^2*v2"
        " + (1/30)*s1*v2^2 + (1/5)*s1^2*v*v2^2"));
    CHECK(is_total_x_derivative(hb4().density(1) - h1));
    CHECK_THROWS_AS(hb4().density(-2), std::invalid_argument);
  }

  TEST_CASE("structure: hamiltonian form, tau symmetry, commuting flows") {
    for (unsigned q = 0; q <= 2; ++q) CHECK(hb4().check_hamiltonian_form(q));
    CHECK(hb4().check_tau_symmetry(1, 2));
    CHECK(hb4().check_tau_symmetry(1, 3));
    CHECK(hb4().check_tau_symmetry(2, 3));
    CHECK(hb4().check_flow_commute(1, 2));
    CHECK(hb4().check_flow_commute(2, 3));
  }
}

TEST_SUITE("variational calculus") {
  TEST_CASE("total derivatives are recognized exactly") {
    const DiffPoly f = DiffPoly::parse(ctx2(), "(1)*v1^-2*v2*L + (3)*s1*v*v2^2");
    CHECK(variational_derivative(f.dx()).is_zero());
    CHECK(is_total_x_derivative(EpsSeries::from_poly(f, 4).dx()));
    CHECK(is_total_x_derivative(EpsSeries::from_poly(DiffPoly::jet(ctx2(), 1), 4)));
    CHECK_FALSE(is_total_x_derivative(EpsSeries::from_poly(DiffPoly::jet(ctx2(), 0), 4)));
    CHECK_FALSE(is_total_x_derivative(EpsSeries::from_poly(DiffPoly::log_v1(ctx2()), 4)));
    CHECK_FALSE(is_total_x_derivative(EpsSeries::from_poly(DiffPoly::param(ctx2(), 0), 4)));
  }

  TEST_CASE("operator algebra") {
    // A = v dx + v2, B = v1 dx
    DiffOperator A(ctx2(), 4), B(ctx2(), 4);
    A.add_term(1, EpsSeries::from_poly(DiffPoly::jet(ctx2(), 0), 4));
    A.add_term(0, EpsSeries::from_poly(DiffPoly::jet(ctx2(), 2), 4));
    B.add_term(1, EpsSeries::from_poly(DiffPoly::jet(ctx2(), 1), 4));
    CHECK(A != B);
    const EpsSeries f =
        EpsSeries::from_poly(DiffPoly::parse(ctx2(), "(1)*s1*v1^2 + (1)*L"), 4);
    const EpsSeries g = EpsSeries::from_poly(DiffPoly::parse(ctx2(), "(2)*v*v2"), 4);
    // composition agrees with successive application
    CHECK(A.compose(B).apply(f) == A.apply(B.apply(f)));
    // adjoint is an anti-homomorphism and an involution
    CHECK(A.compose(B).adjoint() == B.adjoint().compose(A.adjoint()));
    CHECK(A.adjoint().adjoint() == A);
    // integration by parts: g (A f) - (A* g) f is a total x-derivative
    CHECK(is_total_x_derivative(g * A.apply(f) - f * A.adjoint().apply(g)));
  }
}
