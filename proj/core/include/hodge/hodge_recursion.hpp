#ifndef HODGE_RECURSION_HPP
#define HODGE_RECURSION_HPP

// The genus-g Hodge potentials H_g(v, v_x, ...; s_1..s_g) of the point.
//
// H_g extends the free energy F_g by the parameter directions s_k: it is the
// unique solution of the commuting system
//     dH_g/ds_k = D_k(H_g) + E_{k,g},       k = 1..g,
//     H_g|_{s=0} = F_g,
// where D_k is the jet-space operator implemented in PointFlows and the
// source term couples the lower-genus potentials,
//     E_{k,g} = -1/2 sum_{p=0}^{2k-2} (-1)^p [ d^2 H_{g-1}/dt_p dt_{2k-2-p}
//               + sum_{l=1}^{g-1} dH_l/dt_p * dH_{g-l}/dt_{2k-2-p} ],
// with the genus-0 second derivatives read as the two-point functions
// Omega_{p,q}.  The solver integrates one parameter at a time: at stage h it
// drops every s_k with k > h from the source (those directions are handled by
// later stages), expands in powers of s_h and divides term by term.  The
// expansion terminates: the coefficient of s_h^j has auxiliary degree at most
// 3g-3-(2h-1)j for g >= 2, so at most floor((3g-3)/(2h-1)) powers appear.
// Both bounds are asserted at every step rather than assumed.

#include <map>
#include <utility>

#include "hodge/cache.hpp"
#include "hodge/free_energy.hpp"
#include "hodge/jet_ring.hpp"
#include "hodge/point_frobenius.hpp"

namespace hodge {

class HodgeRecursion {
 public:
  // ctx must provide parameters s_1..s_G for every genus G requested later.
  explicit HodgeRecursion(context_ptr ctx, DiskCache* cache = nullptr)
      : ctx_(std::move(ctx)), cache_(cache), flows_(ctx_), energies_(ctx_, cache) {}

  const context_ptr& context() const { return ctx_; }
  PointFlows& flows() { return flows_; }
  FreeEnergies& free_energies() { return energies_; }

  // F_g (parameter-free part); fitted against the intersection oracle.
  const DiffPoly& free_energy(unsigned g) { return energies_.value(g); }

  // The full Hodge potential H_g, g >= 1.
  const DiffPoly& potential(unsigned g);

  // dH_g/dt_p along the dispersionless flows (memoized).
  const DiffPoly& potential_tderiv(unsigned g, unsigned p);

  // Source term E_{k,g} built from the genus-(< g) potentials.
  DiffPoly e_term(unsigned k, unsigned g);

  // Integrating the (g+1)-th parameter direction must not change H_g:
  // checks D_{g+1}(H_g) + E_{g+1,g} = 0 identically.
  bool verify_extra_stage(unsigned g);

 private:
  DiffPoly run_stage(const DiffPoly& prev, unsigned g, unsigned h);

  context_ptr ctx_;
  DiskCache* cache_;
  PointFlows flows_;
  FreeEnergies energies_;
  std::map<unsigned, DiffPoly> potentials_;
  std::map<std::pair<unsigned, unsigned>, DiffPoly> tderiv_memo_;
};

}  // namespace hodge

#endif  // HODGE_RECURSION_HPP
