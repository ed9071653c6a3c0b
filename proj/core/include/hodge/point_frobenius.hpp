#ifndef HODGE_POINT_FROBENIUS_HPP
#define HODGE_POINT_FROBENIUS_HPP

// Structure functions of the one-dimensional Frobenius manifold (potential
// F = v^3/6, flat metric 1) and the t-space calculus of its principal
// hierarchy ∂v/∂t_q = (v^q/q!) v_x realized on differential polynomials:
//   * Hamiltonian densities theta_p and two-point functions Omega_{p,q};
//   * the time derivative of a differential polynomial along a flow;
//   * the alternating sums entering the Hodge-potential recursion;
//   * the degree-lowering operators D_k acting closedly on jets.
// One instance caches everything per ring context.

#include <map>
#include <utility>

#include "hodge/jet_ring.hpp"

namespace hodge {

// theta_p = v^(p+1)/(p+1)!   (density of the p-th Hamiltonian)
DiffPoly theta(const context_ptr& ctx, unsigned p);
// Omega_{p,q} = v^(p+q+1)/((p+q+1) p! q!)  (genus-0 two-point function)
DiffPoly omega(const context_ptr& ctx, unsigned p, unsigned q);

class PointFlows {
 public:
  explicit PointFlows(context_ptr ctx) : ctx_(std::move(ctx)) {}
  const context_ptr& context() const { return ctx_; }

  // dx^l (v^p v1 / p!): the l-th x-derivative of the t_p-flow right side.
  const DiffPoly& flow_rhs_dx(unsigned p, unsigned l);
  // dx^l (v^p / p!), the building block of the alternating sums.
  const DiffPoly& theta_grad_dx(unsigned p, unsigned l);

  // ∂f/∂t_q = sum_l ∂f/∂v^(l) * dx^l(v^q v1/q!); log and exp generators are
  // handled through the chain rule baked into DiffPoly::pdiff.
  DiffPoly tderiv(const DiffPoly& f, unsigned q);
  DiffPoly second_tderiv(const DiffPoly& f, unsigned p, unsigned q);

  // sum_{p=0}^N (-1)^p dx^l(v^p/p!) dx^m(v^{N-p}/(N-p)!);
  // vanishes for N > l+m and has degbar <= l+m-N.
  DiffPoly alt_sum(unsigned l, unsigned m, unsigned N);

  // sum_{p=0}^N (-1)^p ∂f1/∂t_p * ∂f2/∂t_{N-p}
  DiffPoly pair_tderiv_altsum(const DiffPoly& f1, const DiffPoly& f2, unsigned N);
  // sum_{p=0}^N (-1)^p ∂²f/∂t_p ∂t_{N-p}
  DiffPoly second_tderiv_altsum(const DiffPoly& f, unsigned N);

  // D_k action on jets: D_k(v) = 0 and
  //   D_k(v^(m)) = dx(D_k(v^(m-1))) - alt_sum(0, m, 2k);
  // vanishes for m < 2k, degbar <= m - 2k.  Memoized per (k, m).
  const DiffPoly& dk_on_jet(unsigned k, unsigned m);
  // D_k(f) by the chain rule over all jet slots (including L and X).
  DiffPoly dk_apply(unsigned k, const DiffPoly& f);

 private:
  context_ptr ctx_;
  std::map<std::pair<unsigned, unsigned>, DiffPoly> flow_cache_;
  std::map<std::pair<unsigned, unsigned>, DiffPoly> theta_grad_cache_;
  std::map<std::pair<unsigned, unsigned>, DiffPoly> dk_cache_;
};

}  // namespace hodge

#endif  // HODGE_POINT_FROBENIUS_HPP
