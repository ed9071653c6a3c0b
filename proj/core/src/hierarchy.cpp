#include "hodge/hierarchy.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hodge {

// ---------------------------------------------------------------------------
// JetSubstitution

JetSubstitution::JetSubstitution(context_ptr ctx, EpsSeries image_of_v)
    : ctx_(std::move(ctx)), trunc_(image_of_v.trunc()) {
  if (image_of_v.coeff(0) != DiffPoly::jet(ctx_, 0)) {
    throw std::invalid_argument(
        "JetSubstitution: image of v must be v + (terms of eps-order >= 2)");
  }
  jets_.emplace(0u, std::move(image_of_v));
}

const EpsSeries& JetSubstitution::jet_image(unsigned m) {
  auto it = jets_.find(m);
  if (it == jets_.end()) {
    it = jets_.emplace(m, jet_image(m - 1).dx()).first;
  }
  return it->second;
}

const EpsSeries& JetSubstitution::delta_power(unsigned k) {
  auto it = deltas_.find(k);
  if (it != deltas_.end()) return it->second;
  EpsSeries value(ctx_, trunc_);
  if (k == 0) {
    value += DiffPoly::constant(ctx_, 1);
  } else if (k == 1) {
    // delta = image(v1)/v1 - 1; the eps^0 part cancels exactly, which is what
    // makes every expansion below a finite sum.
    EpsSeries d = jet_image(1);
    d -= DiffPoly::jet(ctx_, 1);
    value = DiffPoly::jet(ctx_, 1, -1) * std::move(d);
    if (!value.coeff(0).is_zero()) {
      throw std::logic_error("JetSubstitution: delta has an eps^0 part");
    }
  } else {
    value = delta_power(k - 1) * delta_power(1);
  }
  return deltas_.emplace(k, std::move(value)).first->second;
}

const EpsSeries& JetSubstitution::jet_power(unsigned m, int e) {
  const auto key = std::make_pair(m, e);
  auto it = powers_.find(key);
  if (it != powers_.end()) return it->second;

  EpsSeries value(ctx_, trunc_);
  if (e == 0) {
    value += DiffPoly::constant(ctx_, 1);
  } else if (m == 1) {
    // image(v1)^e = v1^e (1 + delta)^e, expanded by the generalized binomial
    // series; delta^k has eps-order >= 2k, so k stops at trunc/2.
    for (unsigned k = 0; 2 * static_cast<int>(k) <= trunc_; ++k) {
      value += binomial_general(e, k) * delta_power(k);
    }
    value = DiffPoly::jet(ctx_, 1, e) * std::move(value);
  } else {
    if (e < 0) {
      throw std::invalid_argument(
          "JetSubstitution: negative power on a non-Laurent jet slot");
    }
    value = (e == 1) ? jet_image(m) : jet_power(m, e - 1) * jet_image(m);
  }
  return powers_.emplace(key, std::move(value)).first->second;
}

const EpsSeries& JetSubstitution::log_shift() {
  if (!have_log_shift_) {
    // image(L) = log(v1 (1+delta)) = L + sum_{k>=1} (-1)^{k+1} delta^k / k.
    EpsSeries value(ctx_, trunc_);
    for (unsigned k = 1; 2 * static_cast<int>(k) <= trunc_; ++k) {
      value += rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k)) * delta_power(k);
    }
    log_shift_value_ = std::move(value);
    have_log_shift_ = true;
  }
  return log_shift_value_;
}

const EpsSeries& JetSubstitution::exp_image(int c) {
  auto it = exps_.find(c);
  if (it != exps_.end()) return it->second;
  // image(X^c) = X^c exp(c*mu*(image(v) - v)); the argument has eps-order
  // >= 2, so the exponential series terminates at trunc/2.
  JetMonomial mu_mon;
  mu_mon.par = ctx_->mu_par;
  mu_mon.normalize();
  const DiffPoly cmu =
      DiffPoly::monomial(ctx_, mu_mon, ctx_->mu_coef * rat(c));
  EpsSeries shift = jet_image(0);
  shift -= DiffPoly::jet(ctx_, 0);
  if (!shift.coeff(0).is_zero()) {
    throw std::logic_error("JetSubstitution: exp shift has an eps^0 part");
  }
  EpsSeries value(ctx_, trunc_);
  value += DiffPoly::constant(ctx_, 1);
  EpsSeries shift_pow = value;  // shift^0
  DiffPoly cmu_pow = DiffPoly::constant(ctx_, 1);
  for (unsigned k = 1; 2 * static_cast<int>(k) <= trunc_; ++k) {
    shift_pow = shift_pow * shift;
    cmu_pow = cmu_pow * cmu;
    value += (cmu_pow * (rat(1) / rat(factorial(k)))) * shift_pow;
  }
  value = DiffPoly::exp_v(ctx_, c) * std::move(value);
  return exps_.emplace(c, std::move(value)).first->second;
}

EpsSeries JetSubstitution::apply(const DiffPoly& f) {
  EpsSeries out(ctx_, trunc_);
  for (const auto& [mon, coef] : f.terms()) {
    JetMonomial par_part;
    par_part.par = mon.par;
    par_part.normalize();
    EpsSeries acc =
        EpsSeries::from_poly(DiffPoly::monomial(ctx_, par_part, coef), trunc_);
    for (unsigned m = 0; m < mon.jet.size(); ++m) {
      if (mon.jet[m] != 0) acc = acc * jet_power(m, mon.jet[m]);
    }
    if (mon.lg > 0) {
      // image(L)^lg = (L + shift)^lg, binomially.
      EpsSeries lacc(ctx_, trunc_);
      for (int i = 0; i <= mon.lg; ++i) {
        EpsSeries piece = EpsSeries::from_poly(
            DiffPoly::constant(ctx_, rat(binomial(mon.lg, i))), trunc_);
        for (int r = 0; r < i; ++r) piece = piece * log_shift();
        JetMonomial lmon;
        lmon.lg = mon.lg - i;
        lacc += DiffPoly::monomial(ctx_, lmon, 1) * std::move(piece);
      }
      acc = acc * lacc;
    }
    if (mon.ex > 0) acc = acc * exp_image(mon.ex);
    out += acc;
  }
  return out;
}

EpsSeries JetSubstitution::apply(const EpsSeries& f) {
  EpsSeries out(ctx_, std::min(trunc_, f.trunc()));
  for (const auto& [n, poly] : f.coeffs()) {
    out += apply(poly).shifted(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuasiMiura

EpsSeries invert_jet_series(const EpsSeries& image) {
  // G from G = v - K(G), K = image - v the pure eps-correction.  Each pass
  // gains one eps^2 order, so trunc/2 passes reach the fixed point; the
  // result is verified exactly before returning.
  const context_ptr& ctx = image.context();
  const int trunc = image.trunc();
  const DiffPoly v = DiffPoly::jet(ctx, 0);
  EpsSeries correction = image;
  correction -= v;
  EpsSeries out = EpsSeries::from_poly(v, trunc);
  for (int pass = 0; pass < trunc / 2; ++pass) {
    JetSubstitution step(ctx, out);
    out = EpsSeries::from_poly(v, trunc);
    out -= step.apply(correction);
  }
  if (JetSubstitution(ctx, out).apply(image) != EpsSeries::from_poly(v, trunc)) {
    throw std::logic_error("invert_jet_series: fixed point failed to invert");
  }
  return out;
}

static std::vector<DiffPoly> recursion_potentials(HodgeRecursion& recursion, int trunc) {
  std::vector<DiffPoly> out;
  for (unsigned g = 1; 2 * g <= static_cast<unsigned>(trunc); ++g) {
    out.push_back(recursion.potential(g));
  }
  return out;
}

QuasiMiura::QuasiMiura(HodgeRecursion& recursion, int trunc)
    : QuasiMiura(recursion.context(), recursion_potentials(recursion, trunc), trunc) {}

QuasiMiura::QuasiMiura(context_ptr ctx, const std::vector<DiffPoly>& potentials,
                       int trunc)
    : trunc_(trunc) {
  if (trunc < 0 || trunc % 2 != 0) {
    throw std::invalid_argument("QuasiMiura: truncation order must be even and >= 0");
  }
  if (2 * potentials.size() < static_cast<unsigned>(trunc)) {
    throw std::invalid_argument("QuasiMiura: not enough potentials for the truncation");
  }
  const DiffPoly v = DiffPoly::jet(ctx, 0);
  forward_ = EpsSeries::from_poly(v, trunc_);
  for (unsigned g = 1; 2 * g <= static_cast<unsigned>(trunc_); ++g) {
    forward_ +=
        EpsSeries::from_poly(potentials[g - 1].dx().dx(), trunc_).shifted(2 * g);
  }
  inverse_ = invert_jet_series(forward_);
  subst_ = std::make_unique<JetSubstitution>(ctx, inverse_);
}

// ---------------------------------------------------------------------------
// DiffOperator

const EpsSeries& DiffOperator::coeff(unsigned k) const {
  auto it = c_.find(k);
  if (it != c_.end()) return it->second;
  static thread_local EpsSeries zero_value;
  zero_value = EpsSeries(ctx_, trunc_);
  return zero_value;
}

void DiffOperator::add_term(unsigned k, EpsSeries c) {
  if (c.is_zero()) return;
  auto it = c_.find(k);
  if (it == c_.end()) {
    c_.emplace(k, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

bool DiffOperator::is_zero() const { return c_.empty(); }

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

DiffOperator DiffOperator::compose(const DiffOperator& o) const {
  // (b_i d^i) . (c_j d^j) = sum_r C(i,r) b_i (dx^r c_j) d^{i+j-r}.
  DiffOperator out(ctx_, std::min(trunc_, o.trunc_));
  for (const auto& [j, cj] : o.c_) {
    std::vector<EpsSeries> derivs = {cj};
    for (const auto& [i, bi] : c_) {
      while (derivs.size() <= i) derivs.push_back(derivs.back().dx());
      for (unsigned r = 0; r <= i; ++r) {
        out.add_term(i - r + j, rat(binomial(i, r)) * (bi * derivs[r]));
      }
    }
  }
  return out;
}

DiffOperator DiffOperator::adjoint() const {
  // (c_k d^k)* = (-d)^k . (c_k .) = (-1)^k sum_r C(k,r) (dx^r c_k) d^{k-r}.
  DiffOperator out(ctx_, trunc_);
  for (const auto& [k, ck] : c_) {
    EpsSeries deriv = ck;
    for (unsigned r = 0; r <= k; ++r) {
      const rat sign = (k % 2 == 0) ? rat(1) : rat(-1);
      out.add_term(k - r, (sign * rat(binomial(k, r))) * deriv);
      if (r < k) deriv = deriv.dx();
    }
  }
  return out;
}

EpsSeries DiffOperator::apply(const EpsSeries& f) const {
  EpsSeries out(ctx_, std::min(trunc_, f.trunc()));
  EpsSeries deriv = f;
  unsigned at = 0;
  for (const auto& [k, ck] : c_) {
    while (at < k) {
      deriv = deriv.dx();
      ++at;
    }
    out += ck * deriv;
  }
  return out;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
  DiffOperator diff = *this;
  diff -= o;
  return diff.is_zero();
}

// ---------------------------------------------------------------------------
// Variational derivative

DiffPoly variational_derivative(const DiffPoly& f) {
  DiffPoly out = DiffPoly::zero(f.context());
  const int top = f.max_jet_order();
  for (int s = 0; s <= top; ++s) {
    DiffPoly piece = f.pdiff(static_cast<unsigned>(s));
    for (int r = 0; r < s; ++r) piece = piece.dx();
    if (s % 2 == 1) piece = -piece;
    out += piece;
  }
  return out;
}

EpsSeries variational_derivative(const EpsSeries& f) {
  EpsSeries out(f.context(), f.trunc());
  for (const auto& [n, poly] : f.coeffs()) {
    out.set_coeff(n, variational_derivative(poly));
  }
  return out;
}

bool is_total_x_derivative(const EpsSeries& f) {
  if (!variational_derivative(f).is_zero()) return false;
  for (const auto& [n, poly] : f.coeffs()) {
    if (!poly.jet_free_part().is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// HierarchyBuilder

HierarchyBuilder::HierarchyBuilder(HodgeRecursion& recursion, int trunc)
    : rec_(recursion), qm_(recursion, trunc) {}

const EpsSeries& HierarchyBuilder::flow(unsigned q) {
  auto it = flows_.find(q);
  if (it != flows_.end()) return it->second;
  // dw/dt_q, computed on the v-jet side coefficient by coefficient, then
  // pushed through the inverse substitution.
  EpsSeries dv(rec_.context(), trunc());
  for (const auto& [n, poly] : qm_.forward().coeffs()) {
    dv.set_coeff(n, rec_.flows().tderiv(poly, q));
  }
  return flows_.emplace(q, qm_.to_w(dv)).first->second;
}

const EpsSeries& HierarchyBuilder::density(int q) {
  auto it = densities_.find(q);
  if (it != densities_.end()) return it->second;
  if (q < -1) throw std::invalid_argument("HierarchyBuilder: density index < -1");
  const unsigned p = static_cast<unsigned>(q + 1);
  EpsSeries h = EpsSeries::from_poly(theta(rec_.context(), p), trunc());
  for (unsigned g = 1; 2 * g <= static_cast<unsigned>(trunc()); ++g) {
    h += EpsSeries::from_poly(rec_.potential_tderiv(g, p).dx(), trunc())
             .shifted(2 * g);
  }
  return densities_.emplace(q, qm_.to_w(h)).first->second;
}

EpsSeries HierarchyBuilder::tderiv_w(const EpsSeries& f, unsigned q) {
  const EpsSeries& rhs = flow(q);
  EpsSeries out(f.context(), std::min(f.trunc(), rhs.trunc()));
  EpsSeries rhs_deriv = rhs;
  const int top = f.max_jet_order();
  for (int l = 0; l <= top; ++l) {
    if (l > 0) rhs_deriv = rhs_deriv.dx();
    out += f.pdiff(static_cast<unsigned>(l)) * rhs_deriv;
  }
  return out;
}

const DiffOperator& HierarchyBuilder::hamiltonian_operator() {
  if (have_operator_) return op_;
  const context_ptr& ctx = rec_.context();
  // P~ = L* . d/dx . L with L = sum_s (-d/dx)^s (dw/dv^(s) .) and
  // L* = sum_s (dw/dv^(s) .) d^s, assembled in v-jets and then re-expressed
  // in w-jets.
  DiffOperator lstar(ctx, trunc());
  const int top = qm_.forward().max_jet_order();
  for (int s = 0; s <= top; ++s) {
    lstar.add_term(static_cast<unsigned>(s),
                   qm_.forward().pdiff(static_cast<unsigned>(s)));
  }
  DiffOperator dx_op(ctx, trunc());
  dx_op.add_term(1, EpsSeries::from_poly(DiffPoly::constant(ctx, 1), trunc()));
  const DiffOperator in_v = lstar.compose(dx_op.compose(lstar.adjoint()));
  op_ = DiffOperator(ctx, trunc());
  for (const auto& [k, c] : in_v.coeffs()) {
    op_.add_term(k, qm_.to_w(c));
  }
  have_operator_ = true;
  return op_;
}

bool HierarchyBuilder::check_flow_commute(unsigned p, unsigned q) {
  return tderiv_w(flow(p), q) == tderiv_w(flow(q), p);
}

bool HierarchyBuilder::check_tau_symmetry(unsigned p, unsigned q) {
  return tderiv_w(density(static_cast<int>(p) - 1), q) ==
         tderiv_w(density(static_cast<int>(q) - 1), p);
}

bool HierarchyBuilder::check_hamiltonian_form(unsigned q) {
  const DiffOperator& P = hamiltonian_operator();
  return P.apply(variational_derivative(density(static_cast<int>(q)))) == flow(q);
}

bool HierarchyBuilder::check_operator_skew() {
  DiffOperator sum = hamiltonian_operator().adjoint();
  sum += hamiltonian_operator();
  return sum.is_zero();
}

}  // namespace hodge
