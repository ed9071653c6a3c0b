#ifndef HODGE_HIERARCHY_HPP
#define HODGE_HIERARCHY_HPP

// The deformed integrable hierarchy carried by the Hodge potentials.
//
// The substitution
//     w = v + sum_g eps^{2g} d^2/dx^2 H_g(v, v_x, ...; s)
// is an invertible quasi-Miura transformation.  Pushing the dispersionless
// flows dv/dt_q = (v^q/q!) v_x through it produces deformed flows polynomial
// in the new jets, a deformed Hamiltonian operator
//     P~ = L* . d/dx . L,   L = sum_s (-d/dx)^s . (dw/dv^(s) . ),
// and tau-symmetric Hamiltonian densities
//     h~_q = theta_{q+1}(v) + sum_g eps^{2g} d/dx dH_g/dt_{q+1},
// all re-expressed in w-jets.  Everything here is exact and truncated at a
// fixed even eps-order.
//
// The w-jets live in the *same* ring as the v-jets: a substitution is a map
// from polynomials to eps-series over that one ring, reinterpreting the
// generators.  Inverse powers of v_x, the log generator and the exp
// generator all substitute through finite binomial/log/exp expansions, since
// the jet images differ from the identity by terms of eps-order >= 2.

#include <map>
#include <vector>

#include "hodge/eps_series.hpp"
#include "hodge/hodge_recursion.hpp"
#include "hodge/jet_ring.hpp"

namespace hodge {

// Substitutes an eps-series image for the base jet variable: v -> image,
// v^(m) -> dx^m(image), L -> log of the image of v1, X -> exp(mu * image).
// Requires image = v + (eps-order >= 2), which makes all expansions finite.
class JetSubstitution {
 public:
  JetSubstitution(context_ptr ctx, EpsSeries image_of_v);

  EpsSeries apply(const DiffPoly& f);
  EpsSeries apply(const EpsSeries& f);

 private:
  const EpsSeries& jet_image(unsigned m);
  const EpsSeries& jet_power(unsigned m, int e);
  const EpsSeries& delta_power(unsigned k);  // (v1-image / v1 - 1)^k
  const EpsSeries& log_shift();              // image of L minus L
  const EpsSeries& exp_image(int c);         // image of X^c

  context_ptr ctx_;
  int trunc_;
  std::map<unsigned, EpsSeries> jets_;
  std::map<std::pair<unsigned, int>, EpsSeries> powers_;
  std::map<unsigned, EpsSeries> deltas_;
  std::map<int, EpsSeries> exps_;
  bool have_log_shift_ = false;
  EpsSeries log_shift_value_;
};

// Given F = v + (terms of eps-order >= 2) expressed in v-jets, returns the
// compositional inverse G (substituting G for the base variable of F gives
// back v).  Fixed-point iteration; the result is verified exactly.
EpsSeries invert_jet_series(const EpsSeries& image);

// The quasi-Miura pair: w(v) and its fixed-point inverse v(w).
class QuasiMiura {
 public:
  QuasiMiura(HodgeRecursion& recursion, int trunc);
  // Same construction from precomputed potentials (potentials[g-1] is the
  // genus-g term, differentiated twice here); used by the specializations,
  // where the potentials live in a different coefficient ring.
  QuasiMiura(context_ptr ctx, const std::vector<DiffPoly>& potentials, int trunc);

  int trunc() const { return trunc_; }
  const EpsSeries& forward() const { return forward_; }   // w in v-jets
  const EpsSeries& inverse() const { return inverse_; }   // v in w-jets

  // Re-expresses a v-jet quantity in w-jets.
  EpsSeries to_w(const DiffPoly& f) { return subst_->apply(f); }
  EpsSeries to_w(const EpsSeries& f) { return subst_->apply(f); }

 private:
  int trunc_;
  EpsSeries forward_;
  EpsSeries inverse_;
  std::unique_ptr<JetSubstitution> subst_;  // substitutes v -> inverse_
};

// Linear differential operators sum_k c_k(w; eps) (d/dx)^k with eps-series
// coefficients; the arena for the deformed Hamiltonian structure.
class DiffOperator {
 public:
  DiffOperator() = default;
  DiffOperator(context_ptr ctx, int trunc) : ctx_(std::move(ctx)), trunc_(trunc) {}

  const context_ptr& context() const { return ctx_; }
  int trunc() const { return trunc_; }
  const std::map<unsigned, EpsSeries>& coeffs() const { return c_; }
  const EpsSeries& coeff(unsigned k) const;  // zero series if absent
  void add_term(unsigned k, EpsSeries c);
  bool is_zero() const;

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }

  DiffOperator compose(const DiffOperator& o) const;  // this . o
  DiffOperator adjoint() const;  // sum (-d/dx)^k . (c_k .)
  EpsSeries apply(const EpsSeries& f) const;

  bool operator==(const DiffOperator& o) const;
  bool operator!=(const DiffOperator& o) const { return !(*this == o); }

 private:
  context_ptr ctx_;
  int trunc_ = 0;
  std::map<unsigned, EpsSeries> c_;
};

// Variational derivative delta/delta w = sum_s (-d/dx)^s d/dw^(s).
EpsSeries variational_derivative(const EpsSeries& f);
DiffPoly variational_derivative(const DiffPoly& f);

// A differential polynomial is a total x-derivative iff its variational
// derivative vanishes and it has no jet-free part (the ring contains log v_x,
// which makes the criterion exact for Laurent polynomials as well).
bool is_total_x_derivative(const EpsSeries& f);

class HierarchyBuilder {
 public:
  HierarchyBuilder(HodgeRecursion& recursion, int trunc);

  HodgeRecursion& recursion() { return rec_; }
  QuasiMiura& map() { return qm_; }
  int trunc() const { return qm_.trunc(); }

  // dw/dt_q in w-jets (memoized).  flow(0) = w_x exactly.
  const EpsSeries& flow(unsigned q);

  // Hamiltonian density h~_q for q >= -1; h~_{-1} = w exactly.
  const EpsSeries& density(int q);

  // d f/dt_q for a w-jet quantity, along the deformed flows.
  EpsSeries tderiv_w(const EpsSeries& f, unsigned q);

  // The deformed Hamiltonian operator in w-jets.
  const DiffOperator& hamiltonian_operator();

  // --- structural checks (exact identities, no tolerance) -----------------
  bool check_flow_commute(unsigned p, unsigned q);   // d_q d_p w = d_p d_q w
  bool check_tau_symmetry(unsigned p, unsigned q);   // d h~_{p-1}/dt_q symm.
  bool check_hamiltonian_form(unsigned q);  // flow(q) = P~ (delta h~_q / delta w)
  bool check_operator_skew();               // P~* = -P~

 private:
  HodgeRecursion& rec_;
  QuasiMiura qm_;
  std::map<unsigned, EpsSeries> flows_;
  std::map<int, EpsSeries> densities_;
  bool have_operator_ = false;
  DiffOperator op_;
};

}  // namespace hodge

#endif  // HODGE_HIERARCHY_HPP
