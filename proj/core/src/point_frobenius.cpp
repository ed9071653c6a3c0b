#include "hodge/point_frobenius.hpp"

namespace hodge {

DiffPoly theta(const context_ptr& ctx, unsigned p) {
  return DiffPoly::jet(ctx, 0, static_cast<int>(p) + 1) * rat(bigint(1), factorial(p + 1));
}

DiffPoly omega(const context_ptr& ctx, unsigned p, unsigned q) {
  return DiffPoly::jet(ctx, 0, static_cast<int>(p + q) + 1) *
         rat(bigint(1), factorial(p) * factorial(q) * bigint(p + q + 1));
}

const DiffPoly& PointFlows::flow_rhs_dx(unsigned p, unsigned l) {
  const auto key = std::make_pair(p, l);
  auto it = flow_cache_.find(key);
  if (it != flow_cache_.end()) return it->second;
  DiffPoly value;
  if (l == 0) {
    value = DiffPoly::jet(ctx_, 0, static_cast<int>(p)) * DiffPoly::jet(ctx_, 1) *
            rat(bigint(1), factorial(p));
  } else {
    value = flow_rhs_dx(p, l - 1).dx();
  }
  return flow_cache_.emplace(key, std::move(value)).first->second;
}

const DiffPoly& PointFlows::theta_grad_dx(unsigned p, unsigned l) {
  const auto key = std::make_pair(p, l);
  auto it = theta_grad_cache_.find(key);
  if (it != theta_grad_cache_.end()) return it->second;
  DiffPoly value;
  if (l == 0) {
    value = DiffPoly::jet(ctx_, 0, static_cast<int>(p)) * rat(bigint(1), factorial(p));
  } else {
    value = theta_grad_dx(p, l - 1).dx();
  }
  return theta_grad_cache_.emplace(key, std::move(value)).first->second;
}

DiffPoly PointFlows::tderiv(const DiffPoly& f, unsigned q) {
  DiffPoly r(ctx_);
  const int top = f.max_jet_order();
  for (int l = 0; l <= top; ++l) {
    DiffPoly partial = f.pdiff(static_cast<unsigned>(l));
    if (partial.is_zero()) continue;
    r += partial * flow_rhs_dx(q, static_cast<unsigned>(l));
  }
  return r;
}

DiffPoly PointFlows::second_tderiv(const DiffPoly& f, unsigned p, unsigned q) {
  return tderiv(tderiv(f, q), p);
}

DiffPoly PointFlows::alt_sum(unsigned l, unsigned m, unsigned N) {
  DiffPoly r(ctx_);
  for (unsigned p = 0; p <= N; ++p) {
    DiffPoly term = theta_grad_dx(p, l) * theta_grad_dx(N - p, m);
    if (p % 2 == 0)
      r += term;
    else
      r -= term;
  }
  return r;
}

DiffPoly PointFlows::pair_tderiv_altsum(const DiffPoly& f1, const DiffPoly& f2, unsigned N) {
  DiffPoly r(ctx_);
  for (unsigned p = 0; p <= N; ++p) {
    DiffPoly term = tderiv(f1, p) * tderiv(f2, N - p);
    if (p % 2 == 0)
      r += term;
    else
      r -= term;
  }
  return r;
}

DiffPoly PointFlows::second_tderiv_altsum(const DiffPoly& f, unsigned N) {
  DiffPoly r(ctx_);
  for (unsigned p = 0; p <= N; ++p) {
    DiffPoly term = second_tderiv(f, p, N - p);
    if (p % 2 == 0)
      r += term;
    else
      r -= term;
  }
  return r;
}

const DiffPoly& PointFlows::dk_on_jet(unsigned k, unsigned m) {
  const auto key = std::make_pair(k, m);
  auto it = dk_cache_.find(key);
  if (it != dk_cache_.end()) return it->second;
  DiffPoly value(ctx_);
  if (m > 0) {
    value = dk_on_jet(k, m - 1).dx() - alt_sum(0, m, 2 * k);
  }
  return dk_cache_.emplace(key, std::move(value)).first->second;
}

DiffPoly PointFlows::dk_apply(unsigned k, const DiffPoly& f) {
  DiffPoly r(ctx_);
  const int top = f.max_jet_order();
  for (int m = 0; m <= top; ++m) {
    DiffPoly partial = f.pdiff(static_cast<unsigned>(m));
    if (partial.is_zero()) continue;
    const DiffPoly& dk = dk_on_jet(k, static_cast<unsigned>(m));
    if (dk.is_zero()) continue;
    r += partial * dk;
  }
  return r;
}

}  // namespace hodge
