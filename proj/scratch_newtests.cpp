// Scratch driver: validates the remaining test targets before they are
// frozen into the unit suites (deleted before final assembly).
//   * [pdiff_m, dx] = pdiff_{m-1} on jet-only polynomials
//   * alternating second-t-derivative sums of F_g vanish for k >= g+1
//   * E-term pins: E_{1,1} = -v/2, E_{1,2}|_{s=0}
//   * defining-flow smoke test on the topological t-series
#include <chrono>
#include <cstdio>

#include "hodge/hodge_recursion.hpp"
#include "hodge/tseries.hpp"

using namespace hodge;

static int failures = 0;
#define REQUIRE(cond)                                                   \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::printf("[FAIL] %s:%d  %s\n", __FILE__, __LINE__, #cond);     \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

static double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Expands f over its powers of s_1, s_2 and evaluates each parameter-free
// slice on the topological jets: result[a][b] = eval of [s_1^a s_2^b] f.
static std::map<std::pair<int, int>, TSeries> eval_by_params(const DiffPoly& f,
                                                             const TopologicalJets& jets) {
  std::map<std::pair<int, int>, TSeries> out;
  const int da = f.deg_param(0), db = f.context()->params.size() > 1 ? f.deg_param(1) : 0;
  for (int a = 0; a <= da; ++a) {
    DiffPoly fa = f.coeff_of_param_power(0, static_cast<unsigned>(a));
    for (int b = 0; b <= db; ++b) {
      DiffPoly fab = fa.coeff_of_param_power(1, static_cast<unsigned>(b));
      if (!fab.is_zero()) out[{a, b}] = jets.eval(fab);
    }
  }
  return out;
}

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  context_ptr ctx = make_context(3);
  HodgeRecursion rec(ctx);
  PointFlows& fl = rec.flows();

  // --- [pdiff_m, dx] = pdiff_{m-1} on jet-only polynomials ----------------
  {
    const DiffPoly f = DiffPoly::parse(ctx, "(3)*v^2*v2 - (1/2)*v1^-3*v3^2 + (5)*v1*v4");
    for (unsigned m = 1; m <= 5; ++m) {
      const DiffPoly lhs = f.dx().pdiff(m) - f.pdiff(m).dx();
      REQUIRE(lhs == f.pdiff(m - 1));
    }
  }
  std::printf("pdiff/dx commutator ok (%.0f ms)\n", ms_since(t0));

  // --- E-term pins ---------------------------------------------------------
  {
    rec.potential(2);  // materialize H_1, H_2
    REQUIRE(rec.e_term(1, 1) == DiffPoly::parse(ctx, "(-1/2)*v"));
    const DiffPoly e12 = rec.e_term(1, 2).restrict_params(0);
    REQUIRE(e12 == DiffPoly::parse(ctx, "(-1/48)*v1^-1*v3 + (23/1152)*v1^-2*v2^2"));
  }
  std::printf("e-term pins ok (%.0f ms)\n", ms_since(t0));

  // --- alternating sums of second t-derivatives of F_g: nonzero at k = g+1,
  // vanish identically for k >= g+2 ----------------------------------------
  {
    REQUIRE(fl.second_tderiv_altsum(rec.free_energy(1), 2) ==
            DiffPoly::parse(ctx, "(1/24)*v1^2"));
    REQUIRE(fl.second_tderiv_altsum(rec.free_energy(2), 4) ==
            DiffPoly::parse(ctx, "(1/240)*v1^2*v2"));
    REQUIRE(fl.second_tderiv_altsum(rec.free_energy(3), 6) ==
            DiffPoly::parse(ctx, "(17/40320)*v1^2*v2^2 + (1/6720)*v1^3*v3"));
    for (unsigned g = 1; g <= 3; ++g) {
      const DiffPoly& fg = rec.free_energy(g);
      for (unsigned k = g + 2; k <= g + 3; ++k)
        REQUIRE(fl.second_tderiv_altsum(fg, 2 * k - 2).is_zero());
    }
  }
  std::printf("strong1 instances ok (%.0f ms)\n", ms_since(t0));

  // --- defining-flow smoke test on the topological series ------------------
  // eps^{2g-2} slot of dZ/ds_1 = (sum_p (t_p - d_{p,1}) d/dt_{p+1}
  //   - (eps^2/2)(d^2/dt_0^2)) Z, written for H = log Z:
  //   dH_g/ds_1 = sum_p (t_p - d_{p,1}) dH_g/dt_{p+1}
  //     - 1/2 [ d^2 H_{g-1}/dt_0^2 + sum_{g1+g2=g} dH_{g1}/dt_0 dH_{g2}/dt_0 ].
  {
    const unsigned nvars = 4, deg = 6;
    TopologicalJets jets(nvars, deg);
    IntersectionOracle& oracle = rec.free_energies().oracle();
    // F_0 at a deeper truncation so its t-derivatives are complete through 6.
    const TSeries f0 = oracle.free_energy_series(0, nvars, deg + 2);
    const TSeries df0_dt0 = f0.deriv(0);
    const TSeries d2f0_dt00 = df0_dt0.deriv(0);
    // Cross-check the genus-0 closed form d^2 F_0/dt_0^2 = v.
    REQUIRE(d2f0_dt00.truncated(deg) == jets.jet(0).truncated(deg));

    // The p = nvars-1 term of the t-sum, t_{nvars-1} dF/dt_nvars, needs a
    // variable outside the ring; all its monomials contain t_{nvars-1}, so
    // the identities are compared on the exact subspace t_{nvars-1} = 0 by
    // dropping those monomials from both sides.
    auto strip = [&](const TSeries& s) {
      TSeries out(nvars, deg);
      for (const auto& [k, c] : s.terms())
        if (k[nvars - 1] == 0) out.add(k, c);
      return out;
    };

    // genus-0 slot: 0 = sum_p (t_p - d_{p,1}) dF_0/dt_{p+1} - 1/2 (dF_0/dt_0)^2
    {
      TSeries rhs(nvars, deg);
      for (unsigned p = 0; p + 1 < nvars; ++p) {
        TSeries tp(nvars, deg);
        TSeries::key k(nvars, 0);
        k[p] = 1;
        tp.add(k, rat(1));
        rhs += tp * f0.deriv(p + 1);
      }
      rhs -= f0.deriv(2).truncated(deg);
      rhs -= rat(1, 2) * (df0_dt0 * df0_dt0);
      TSeries residue = strip(rhs);
      if (!residue.is_zero())
        std::printf("genus-0 slot residue has %zu terms\n", residue.terms().size());
      REQUIRE(residue.is_zero());
    }

    // genus-1 and genus-2 slots, compared per parameter monomial.
    const DiffPoly& h1 = rec.potential(1);
    const DiffPoly& h2 = rec.potential(2);
    const std::map<unsigned, const DiffPoly*> H{{1, &h1}, {2, &h2}};
    for (unsigned g = 1; g <= 2; ++g) {
      auto lhs = eval_by_params(H.at(g)->pdiff_param(0), jets);
      // sum_p (t_p - d_{p,1}) dH_g/dt_{p+1}
      std::map<std::pair<int, int>, TSeries> rhs;
      auto acc = [&](const std::map<std::pair<int, int>, TSeries>& m, const TSeries& factor,
                     const rat& scale) {
        for (const auto& [ab, s] : m) {
          TSeries add = (factor.is_zero() ? s : (factor * s)) * scale;
          auto it = rhs.find(ab);
          if (it == rhs.end())
            rhs[ab] = add;
          else
            it->second += add;
        }
      };
      for (unsigned p = 0; p + 1 < nvars; ++p) {
        TSeries tp(nvars, deg);
        TSeries::key k(nvars, 0);
        k[p] = 1;
        tp.add(k, rat(1));
        if (p == 1) tp.add(TSeries::key(nvars, 0), rat(-1));
        acc(eval_by_params(rec.potential_tderiv(g, p + 1), jets), tp, rat(1));
      }
      // -1/2 d^2 H_{g-1}/dt_0^2
      if (g == 1) {
        acc({{{0, 0}, d2f0_dt00.truncated(deg)}}, TSeries(nvars, deg), rat(-1, 2));
      } else {
        DiffPoly d2h = fl.second_tderiv(*H.at(g - 1), 0, 0);
        acc(eval_by_params(d2h, jets), TSeries(nvars, deg), rat(-1, 2));
      }
      // -1/2 sum_{g1+g2=g} dH_{g1}/dt_0 dH_{g2}/dt_0, genus-0 factor = series
      for (unsigned g1 = 0; g1 <= g; ++g1) {
        const unsigned g2 = g - g1;
        std::map<std::pair<int, int>, TSeries> prod;
        if (g1 == 0 && g2 == 0) {
          prod[{0, 0}] = df0_dt0 * df0_dt0;
        } else if (g1 == 0 || g2 == 0) {
          const unsigned gg = g1 == 0 ? g2 : g1;
          for (auto& [ab, s] : eval_by_params(rec.potential_tderiv(gg, 0), jets))
            prod[ab] = df0_dt0 * s;
        } else {
          auto m1 = eval_by_params(rec.potential_tderiv(g1, 0), jets);
          auto m2 = eval_by_params(rec.potential_tderiv(g2, 0), jets);
          for (const auto& [ab1, s1] : m1)
            for (const auto& [ab2, s2] : m2) {
              auto key = std::make_pair(ab1.first + ab2.first, ab1.second + ab2.second);
              TSeries pr = s1 * s2;
              auto it = prod.find(key);
              if (it == prod.end())
                prod[key] = pr;
              else
                it->second += pr;
            }
        }
        for (const auto& [ab, s] : prod) acc({{ab, s}}, TSeries(nvars, deg), rat(-1, 2));
      }
      std::map<std::pair<int, int>, TSeries> all;
      for (auto& [ab, s] : lhs) all[ab] = strip(s);
      for (auto& [ab, s] : rhs) {
        auto it = all.find(ab);
        TSeries diff = strip(s);
        if (it != all.end()) diff -= it->second, all.erase(it);
        if (!diff.is_zero()) {
          std::printf("genus-%u slot s1^%d s2^%d mismatch (%zu terms)\n", g, ab.first, ab.second,
                      diff.terms().size());
          ++failures;
        }
      }
      for (auto& [ab, s] : all)
        if (!s.is_zero()) {
          std::printf("genus-%u slot s1^%d s2^%d only on lhs\n", g, ab.first, ab.second);
          ++failures;
        }
    }
  }
  std::printf("defining-flow smoke ok (%.0f ms)\n", ms_since(t0));

  // --- topological-jet closed forms ----------------------------------------
  {
    const unsigned nvars = 3, deg = 6;
    TopologicalJets jets(nvars, deg);
    const TSeries& v = jets.jet(0);
    // implicit equation of the topological solution: v = sum_p t_p v^p / p!
    // (exact on the subspace t_p = 0, p >= nvars)
    TSeries rhs(nvars, deg);
    for (unsigned p = 0; p < nvars; ++p) {
      TSeries tp(nvars, deg);
      TSeries::key k(nvars, 0);
      k[p] = 1;
      tp.add(k, rat(1));
      rhs += tp * v.pow(p) * rat(1, factorial(p));
    }
    REQUIRE(v == rhs);
    // jets are t_0-derivatives of each other
    for (unsigned m = 1; m <= 4; ++m)
      REQUIRE(jets.jet(m).truncated(deg - 1) == jets.jet(m - 1).deriv(0).truncated(deg - 1));
    // v_x(0) = 1 and v(0) = 0
    REQUIRE(jets.jet(1).coeff(TSeries::key(nvars, 0)) == 1);
    REQUIRE(v.coeff(TSeries::key(nvars, 0)) == 0);
    // eval is a ring homomorphism handling Laurent v1 and L
    context_ptr c1 = make_context(0);
    const DiffPoly f = DiffPoly::parse(c1, "(1)*v1^-2*v2 + (3)*v*v3");
    const DiffPoly g = DiffPoly::parse(c1, "(1/2)*v1^3 - (2)*v2^2");
    REQUIRE(jets.eval(f * g) == jets.eval(f) * jets.eval(g));
    REQUIRE(jets.eval(DiffPoly::jet(c1, 1, -1)) * jets.jet(1) ==
            TSeries::constant(nvars, deg, rat(1)));
    REQUIRE(jets.eval(DiffPoly::log_v1(c1)).exp() == jets.jet(1));
  }
  std::printf("topological jets ok (%.0f ms)\n", ms_since(t0));

  std::printf("total %.0f ms, failures %d\n", ms_since(t0), failures);
  return failures == 0 ? 0 : 1;
}
