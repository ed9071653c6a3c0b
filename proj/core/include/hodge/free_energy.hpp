#ifndef HODGE_FREE_ENERGY_HPP
#define HODGE_FREE_ENERGY_HPP

// Genus-g free energies F_g of the KdV / topological-gravity hierarchy as
// differential polynomials in the jets of v.
//
// F_1 = (1/24) log v_x is closed form.  For g >= 2, F_g is determined by a
// finite ansatz: it is a polynomial in v_xx, v_xxx, ... and (Laurent) v_x,
// homogeneous of spatial degree 2g-2, with auxiliary degree at most 3g-3.
// The coefficients are fitted exactly against the intersection-number
// generating series evaluated on the topological solution, with enough
// independent series coefficients to overdetermine the system; solvability
// of the overdetermined system is itself a structural check, and the fit is
// validated afterwards by full truncated-series equality.

#include <cstddef>
#include <vector>

#include "hodge/cache.hpp"
#include "hodge/intersection.hpp"
#include "hodge/jet_ring.hpp"

namespace hodge {

// All candidate monomials prod_i v^(j_i) * v1^(2g-2-sum j_i) with j_i >= 2
// a multiset and sum (j_i - 1) <= 3g-3, in a fixed deterministic order
// (auxiliary degree ascending, then partition lexicographic).  The empty
// multiset contributes the pure v1 power.  Counts: g=2: 7, g=3: 30, g=4: 97.
std::vector<DiffPoly> free_energy_candidates(const context_ptr& ctx, unsigned g);

// The fit draws equations from two evaluations of the same identity:
//   * a "wide" one with all times t_0..t_{3g-2} at low truncation degree,
//     which sees every jet variable linearly;
//   * a "deep" one with few times but truncation degree >= 3g-3, which is
//     where candidates with many factors (v_xx^{3g-3} and friends) first
//     acquire nonzero series coefficients.
// Both are restrictions of one power-series identity, so mixing their rows
// is sound; if the combined system is still rank-deficient the truncations
// are raised and the fit retried.
struct FreeEnergyFit {
  unsigned genus = 0;
  unsigned wide_nvars = 0, wide_maxdeg = 0;
  unsigned deep_nvars = 0, deep_maxdeg = 0;
  std::size_t n_candidates = 0;
  std::size_t n_rows = 0;
  bool unique = false;       // the linear system had full column rank
  bool consistent = false;   // ... and the extra rows were satisfied
  bool series_match = false; // fitted polynomial reproduces the oracle series
  DiffPoly value;
};

// Fits F_g (g >= 2) against `oracle`.  Throws std::runtime_error if the
// system fails to be uniquely solvable; the returned report carries the
// overdetermination counts for logging and tests.
FreeEnergyFit fit_free_energy(const context_ptr& ctx, unsigned g,
                              IntersectionOracle& oracle);

// In-process (and optionally on-disk) cache of free energies per ring.
class FreeEnergies {
 public:
  explicit FreeEnergies(context_ptr ctx, DiskCache* cache = nullptr)
      : ctx_(std::move(ctx)), cache_(cache) {}

  const context_ptr& context() const { return ctx_; }
  IntersectionOracle& oracle() { return oracle_; }

  // F_g for g >= 1.  Fits on first use; disk-cached when a cache was given.
  const DiffPoly& value(unsigned g);
  // The fit report for g >= 2 (forces the fit even on a disk-cache hit).
  FreeEnergyFit fit_report(unsigned g);

 private:
  context_ptr ctx_;
  DiskCache* cache_;
  IntersectionOracle oracle_;
  std::map<unsigned, DiffPoly> values_;
};

}  // namespace hodge

#endif  // HODGE_FREE_ENERGY_HPP
