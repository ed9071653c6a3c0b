// Parameter specializations of the hierarchy (intermediate-long-wave,
// Volterra / discrete KdV, the two-parameter cubic family) and the normal
// form of the first Hamiltonian density.
#include <set>
#include <string>

#include "hodge/specializations.hpp"
#include "test_util.hpp"

using namespace hodge;

namespace {

HodgeRecursion& rec2() {
  static context_ptr ctx = make_context(2);
  static HodgeRecursion rec(ctx);
  return rec;
}
const context_ptr& ctx2() { return rec2().context(); }

std::set<std::string> monomial_texts(const context_ptr& ctx, int n) {
  std::set<std::string> out;
  for (const DiffPoly& m : standard_form_monomials(ctx, n)) out.insert(m.to_text());
  return out;
}

}  // namespace

TEST_SUITE("specialization rules") {
  TEST_CASE("substitution coefficients") {
    CHECK(ilw_s_coefficient(1) == rat(-1, 12));
    CHECK(ilw_s_coefficient(2) == rat(1, 360));
    CHECK(ilw_s_coefficient(3) == rat(-1, 1260));
    CHECK(ilw_s_coefficient(4) == rat(1, 1680));
    CHECK(volterra_s_coefficient(1) == rat(1, 4));
    CHECK(volterra_s_coefficient(2) == rat(-1, 24));
    CHECK(volterra_s_coefficient(3) == rat(1, 20));
    CHECK(volterra_s_coefficient(4) == rat(-17, 112));
    for (unsigned k = 1; k <= 6; ++k) {
      const rat scale(1 - (bigint(1) << (2 * k)));  // -(4^k - 1)
      CHECK(volterra_s_coefficient(k) == scale * ilw_s_coefficient(k));
    }
  }

  TEST_CASE("cubic rule") {
    // q = 0 degenerates to the one-parameter rule with value p
    for (unsigned k = 1; k <= 4; ++k) {
      rat pw(1);
      for (unsigned i = 0; i < 2 * k - 1; ++i) pw *= rat(3);
      CHECK(cubic_s_value(k, rat(3), rat(0)) == ilw_s_coefficient(k) * pw);
    }
    // symmetric in p and q
    CHECK(cubic_s_value(2, rat(2), rat(5)) == cubic_s_value(2, rat(5), rat(2)));
    // p = q = 1: p + q - pq/(p+q) = 2 - 1/2 = 3/2, times -B_2/2 = -1/12
    CHECK(cubic_s_value(1, rat(1), rat(1)) == rat(-1, 8));
  }

  TEST_CASE("x over sin x") {
    CHECK(x_over_sin_coefficient(0) == 1);
    CHECK(x_over_sin_coefficient(1) == rat(1, 6));
    CHECK(x_over_sin_coefficient(2) == rat(7, 360));
    CHECK(x_over_sin_coefficient(3) == rat(31, 15120));
  }
}

TEST_SUITE("specialization checks") {
  TEST_CASE("intermediate long wave") {
    const CheckReport r = ilw_check(rec2(), 4);
    for (const std::string& l : r.lines) INFO(l);
    CHECK(r.ok);
    CHECK(!r.lines.empty());
  }

  TEST_CASE("volterra and discrete kdv") {
    const CheckReport r = volterra_check(rec2(), 4);
    for (const std::string& l : r.lines) INFO(l);
    CHECK(r.ok);
  }

  TEST_CASE("cubic two-parameter family") {
    const CheckReport r = cubic_check(rec2(), 4, {{rat(1), rat(1)}, {rat(2), rat(-3)}});
    for (const std::string& l : r.lines) INFO(l);
    CHECK(r.ok);
  }
}

TEST_SUITE("normal form") {
  TEST_CASE("standard monomial bases") {
    CHECK(monomial_texts(ctx2(), 2) == std::set<std::string>{"(1)*v1^2"});
    CHECK(monomial_texts(ctx2(), 4) == std::set<std::string>{"(1)*v2^2"});
    CHECK(monomial_texts(ctx2(), 6) == std::set<std::string>{"(1)*v2^3", "(1)*v3^2"});
    CHECK(monomial_texts(ctx2(), 8) ==
          std::set<std::string>{"(1)*v2^4", "(1)*v2*v3^2", "(1)*v4^2"});
  }

  TEST_CASE("reduction of the first density") {
    const NormalFormResult nf = normal_form_h1(rec2(), 4);
    for (const std::string& l : nf.lines) INFO(l);
    CHECK(nf.ok);
    CHECK(nf.a0 == DiffPoly::constant(ctx2(), 1));
    CHECK(nf.a1 == DiffPoly::param(ctx2(), 0) * rational(-1, 120));
    // the reduced density really is in the standard basis
    CHECK(nf.standard.coeff(0) == DiffPoly::parse(ctx2(), "(1/6)*v^3"));
    CHECK(nf.standard.coeff(2) ==
          DiffPoly::parse(ctx2(), "(-1/24)*v1^2"));
    CHECK(nf.standard.coeff(4) == nf.a1 * DiffPoly::jet(ctx2(), 2, 2));
  }

  TEST_CASE("coefficient maps at order four") {
    const CheckReport r = normal_form_check(rec2(), 4);
    for (const std::string& l : r.lines) INFO(l);
    CHECK(r.ok);
  }
}
