// Genus-g free energies: the closed genus-1 form, the fitted genus-2/3
// polynomials against their frozen values, the structure of the fit, and
// the gradation laws.
#include "hodge/free_energy.hpp"
#include "hodge/point_frobenius.hpp"
#include "test_util.hpp"

using namespace hodge;
using testfx::ctx3;
using testfx::rec3;

namespace {

const char* kF2 =
    "(1/360)*v1^-4*v2^3 - (7/1920)*v1^-3*v2*v3 + (1/1152)*v1^-2*v4";

const char* kF3 =
    "-(5/648)*v1^-8*v2^6 + (59/3024)*v1^-7*v2^4*v3 - (83/7168)*v1^-6*v2^2*v3^2"
    " - (83/15120)*v1^-6*v2^3*v4 + (59/64512)*v1^-5*v3^3 + (1273/322560)*v1^-5*v2*v3*v4"
    " + (353/322560)*v1^-5*v2^2*v5 - (103/483840)*v1^-4*v4^2 - (53/161280)*v1^-4*v3*v5"
    " - (7/46080)*v1^-4*v2*v6 + (1/82944)*v1^-3*v7";

}  // namespace

TEST_SUITE("free energy") {
  TEST_CASE("genus 1 is the closed log form") {
    CHECK(rec3().free_energy(1) == DiffPoly::log_v1(ctx3()) * rational(1, 24));
  }

  TEST_CASE("fitted genus 2 and 3 match their frozen values") {
    CHECK(rec3().free_energy(2) == DiffPoly::parse(ctx3(), kF2));
    CHECK(rec3().free_energy(3) == DiffPoly::parse(ctx3(), kF3));
  }

  TEST_CASE("candidate bases") {
    CHECK(free_energy_candidates(ctx3(), 2).size() == 7);
    CHECK(free_energy_candidates(ctx3(), 3).size() == 30);
    CHECK_THROWS_AS(free_energy_candidates(ctx3(), 1), std::invalid_argument);
    for (const DiffPoly& c : free_energy_candidates(ctx3(), 3)) {
      CHECK(c.is_deg_homogeneous(4));                // 2g-2
      CHECK(*c.degbar_max() <= 6);                   // 3g-3
      CHECK(c.pdiff(0).is_zero());                   // no bare v
      CHECK(!c.has_log());
    }
  }

  TEST_CASE("fit reports overdetermination and zero residual") {
    FreeEnergyFit fit = rec3().free_energies().fit_report(2);
    CHECK(fit.n_candidates == 7);
    CHECK(fit.n_rows > fit.n_candidates);
    CHECK(fit.unique);
    CHECK(fit.consistent);
    CHECK(fit.series_match);
    CHECK(fit.value == DiffPoly::parse(ctx3(), kF2));
  }

  TEST_CASE("gradation laws") {
    for (unsigned g = 1; g <= 3; ++g) {
      const DiffPoly& f = rec3().free_energy(g);
      CHECK(f.is_deg_homogeneous(2 * static_cast<long>(g) - 2));
      CHECK(*f.degbar_max() <= 3 * static_cast<long>(g) - 3);
      CHECK(f.pdiff(0).is_zero());
      CHECK(!f.depends_on_params());
    }
  }

  TEST_CASE("genus 0 is rejected as a differential polynomial") {
    CHECK_THROWS_AS(rec3().free_energies().value(0), std::invalid_argument);
  }

  TEST_CASE("alternating second-derivative sums vanish from k = g+2 on") {
    PointFlows& fl = rec3().flows();
    // the k = g+1 sums are the last nonvanishing ones; freeze them
    CHECK(fl.second_tderiv_altsum(rec3().free_energy(1), 2) ==
          DiffPoly::parse(ctx3(), "(1/24)*v1^2"));
    CHECK(fl.second_tderiv_altsum(rec3().free_energy(2), 4) ==
          DiffPoly::parse(ctx3(), "(1/240)*v1^2*v2"));
    CHECK(fl.second_tderiv_altsum(rec3().free_energy(3), 6) ==
          DiffPoly::parse(ctx3(), "(17/40320)*v1^2*v2^2 + (1/6720)*v1^3*v3"));
    for (unsigned g = 1; g <= 3; ++g)
      for (unsigned k = g + 2; k <= g + 3; ++k)
        CHECK(fl.second_tderiv_altsum(rec3().free_energy(g), 2 * k - 2).is_zero());
  }
}
