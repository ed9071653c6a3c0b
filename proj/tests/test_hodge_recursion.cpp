// The Hodge-potential recursion: closed genus-1 form, frozen genus-2 value,
// stage slices, source terms, invariance under extra stages, gradation
// bounds, and an end-to-end check of the defining flow on the topological
// t-series.
#include <map>
#include <utility>

#include "hodge/hodge_recursion.hpp"
#include "hodge/tseries.hpp"
#include "test_util.hpp"

using namespace hodge;
using testfx::ctx3;
using testfx::rec3;

namespace {

const char* kH2 =
    "(1/360)*v1^-4*v2^3 - (7/1920)*v1^-3*v2*v3 + (1/1152)*v1^-2*v4"
    " + (11/480)*s1*v1^-2*v2^2 - (1/40)*s1*v1^-1*v3 + (7/40)*s1^2*v2"
    " - (1/48)*s2*v1^2 - (1/10)*s1^3*v1^2";

// Expands f over its powers of s_1, s_2 and evaluates each parameter-free
// slice on the topological jets: out[{a,b}] = eval of [s_1^a s_2^b] f.
std::map<std::pair<int, int>, TSeries> eval_by_params(const DiffPoly& f,
                                                      const TopologicalJets& jets) {
  std::map<std::pair<int, int>, TSeries> out;
  const int da = f.deg_param(0), db = f.deg_param(1);
  for (int a = 0; a <= da; ++a) {
    const DiffPoly fa = f.coeff_of_param_power(0, static_cast<unsigned>(a));
    for (int b = 0; b <= db; ++b) {
      const DiffPoly fab = fa.coeff_of_param_power(1, static_cast<unsigned>(b));
      if (!fab.is_zero()) out[{a, b}] = jets.eval(fab);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("hodge recursion") {
  TEST_CASE("genus 1 closed form") {
    CHECK(rec3().potential(1) ==
          DiffPoly::log_v1(ctx3()) * rational(1, 24) -
              DiffPoly::param(ctx3(), 0) * DiffPoly::jet(ctx3(), 0) * rational(1, 2));
  }

  TEST_CASE("genus 2 frozen value and stage slices") {
    const DiffPoly& h2 = rec3().potential(2);
    CHECK(h2 == DiffPoly::parse(ctx3(), kH2));
    // the s_1-stage fills in the powers of s_1 one by one
    CHECK(h2.coeff_of_param_power(0, 1).restrict_params(1) ==
          DiffPoly::parse(ctx3(), "(11/480)*v1^-2*v2^2 - (1/40)*v1^-1*v3"));
    CHECK(h2.coeff_of_param_power(0, 2) == DiffPoly::parse(ctx3(), "(7/40)*v2"));
    CHECK(h2.coeff_of_param_power(0, 3) == DiffPoly::parse(ctx3(), "(-1/10)*v1^2"));
    // the s_2-stage adds a single term
    CHECK(h2.coeff_of_param_power(1, 1) == DiffPoly::parse(ctx3(), "(-1/48)*v1^2"));
  }

  TEST_CASE("restriction to s = 0 recovers the free energy") {
    for (unsigned g = 1; g <= 3; ++g)
      CHECK(rec3().potential(g).restrict_params(0) == rec3().free_energy(g));
  }

  TEST_CASE("source terms") {
    rec3().potential(2);
    // the genus-0 second derivatives enter as two-point functions
    CHECK(rec3().e_term(1, 1) == DiffPoly::parse(ctx3(), "(-1/2)*v"));
    // at s = 0 the genus-2 source reduces to derivatives of F_1 = (log v_x)/24
    CHECK(rec3().e_term(1, 2).restrict_params(0) ==
          DiffPoly::parse(ctx3(), "(-1/48)*v1^-1*v3 + (23/1152)*v1^-2*v2^2"));
    CHECK_THROWS_AS(rec3().e_term(0, 1), std::invalid_argument);
  }

  TEST_CASE("an extra stage leaves the potential unchanged") {
    for (unsigned g = 1; g <= 2; ++g) CHECK(rec3().verify_extra_stage(g));
  }

  TEST_CASE("gradation laws and stage degree bounds") {
    // genus 1 is exceptional: it carries bare v and auxiliary degree 1
    const DiffPoly& h1 = rec3().potential(1);
    CHECK(h1.degbar_max() == 1);
    CHECK(h1.pdiff(0) == DiffPoly::param(ctx3(), 0) * rational(-1, 2));
    for (unsigned g = 2; g <= 3; ++g) {
      const DiffPoly& h = rec3().potential(g);
      CHECK(h.is_deg_homogeneous(2 * static_cast<long>(g) - 2));
      CHECK(*h.degbar_max() <= 3 * static_cast<long>(g) - 3);
      CHECK(h.pdiff(0).is_zero());
      // coefficient of s_h^j has auxiliary degree at most 3g-3-(2h-1)j
      for (unsigned h_idx = 0; h_idx < 2; ++h_idx)
        for (int j = 1; j <= h.deg_param(h_idx); ++j) {
          const DiffPoly c = h.coeff_of_param_power(h_idx, static_cast<unsigned>(j));
          if (c.is_zero()) continue;
          CHECK(*c.degbar_max() <=
                3 * static_cast<long>(g) - 3 -
                    static_cast<long>((2 * (h_idx + 1) - 1) * static_cast<unsigned>(j)));
        }
    }
  }

  TEST_CASE("the same potential in a smaller ring") {
    context_ptr ctx2 = make_context(2);
    HodgeRecursion rec2(ctx2);
    CHECK(rec2.potential(2) == DiffPoly::parse(ctx2, kH2));
    // rings without enough parameters are rejected up front
    HodgeRecursion rec1(make_context(1));
    CHECK_THROWS_AS(rec1.potential(2), std::invalid_argument);
  }

  TEST_CASE("defining flow on the topological series") {
    // The potentials solve, order by order in the genus expansion,
    //   dH_g/ds_1 = sum_p (t_p - d_{p,1}) dH_g/dt_{p+1}
    //     - 1/2 [ d^2 H_{g-1}/dt_0^2 + sum_{g1+g2=g} dH_{g1}/dt_0 dH_{g2}/dt_0 ]
    // with H_0 = F_0.  Both sides are evaluated exactly on the topological
    // solution; the top term of the t-sum needs a time variable outside the
    // ring, and all its monomials contain t_{nvars-1}, so the comparison
    // drops those monomials (= restricting to the subspace t_{nvars-1} = 0).
    const unsigned nvars = 4, deg = 6;
    TopologicalJets jets(nvars, deg);
    IntersectionOracle& oracle = rec3().free_energies().oracle();
    const TSeries f0 = oracle.free_energy_series(0, nvars, deg + 2);
    const TSeries df0_dt0 = f0.deriv(0);
    const TSeries d2f0_dt00 = df0_dt0.deriv(0);
    REQUIRE(d2f0_dt00.truncated(deg) == jets.jet(0).truncated(deg));

    auto strip = [&](const TSeries& s) {
      TSeries out(nvars, deg);
      for (const auto& [k, c] : s.terms())
        if (k[nvars - 1] == 0) out.add(k, c);
      return out;
    };
    auto tvar = [&](unsigned p) {
      TSeries s(nvars, deg);
      TSeries::key k(nvars, 0);
      k[p] = 1;
      s.add(k, rat(1));
      return s;
    };

    // genus-0 slot: H_0 carries no s-dependence, so the right side vanishes
    {
      TSeries rhs(nvars, deg);
      for (unsigned p = 0; p + 1 < nvars; ++p) rhs += tvar(p) * f0.deriv(p + 1);
      rhs -= f0.deriv(2).truncated(deg);
      rhs -= rat(1, 2) * (df0_dt0 * df0_dt0);
      CHECK(strip(rhs).is_zero());
    }

    // genus-1 and genus-2 slots, compared per power of s_1 and s_2
    rec3().potential(2);
    for (unsigned g = 1; g <= 2; ++g) {
      std::map<std::pair<int, int>, TSeries> sides;  // lhs - rhs per s-monomial
      auto acc = [&](const std::map<std::pair<int, int>, TSeries>& m, const TSeries* factor,
                     const rat& scale) {
        for (const auto& [ab, s] : m) {
          TSeries add = (factor ? (*factor * s) : s) * scale;
          auto [it, fresh] = sides.emplace(ab, add);
          if (!fresh) it->second += add;
        }
      };
      acc(eval_by_params(rec3().potential(g).pdiff_param(0), jets), nullptr, rat(1));
      for (unsigned p = 0; p + 1 < nvars; ++p) {
        TSeries tp = tvar(p);
        if (p == 1) tp.add(TSeries::key(nvars, 0), rat(-1));
        acc(eval_by_params(rec3().potential_tderiv(g, p + 1), jets), &tp, rat(-1));
      }
      if (g == 1) {
        acc({{{0, 0}, d2f0_dt00.truncated(deg)}}, nullptr, rat(1, 2));
      } else {
        acc(eval_by_params(rec3().flows().second_tderiv(rec3().potential(g - 1), 0, 0), jets),
            nullptr, rat(1, 2));
      }
      for (unsigned g1 = 0; g1 <= g; ++g1) {
        const unsigned g2 = g - g1;
        if (g1 == 0 && g2 == 0) {
          acc({{{0, 0}, df0_dt0 * df0_dt0}}, nullptr, rat(1, 2));
        } else if (g1 == 0 || g2 == 0) {
          const unsigned gg = g1 == 0 ? g2 : g1;
          acc(eval_by_params(rec3().potential_tderiv(gg, 0), jets), &df0_dt0, rat(1, 2));
        } else {
          auto m1 = eval_by_params(rec3().potential_tderiv(g1, 0), jets);
          auto m2 = eval_by_params(rec3().potential_tderiv(g2, 0), jets);
          for (const auto& [ab1, s1] : m1)
            for (const auto& [ab2, s2] : m2)
              acc({{{ab1.first + ab2.first, ab1.second + ab2.second}, s1 * s2}}, nullptr,
                  rat(1, 2));
        }
      }
      for (const auto& [ab, s] : sides) {
        INFO("genus ", g, " slot s1^", ab.first, " s2^", ab.second);
        CHECK(strip(s).is_zero());
      }
    }
  }
}
