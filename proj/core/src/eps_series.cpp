#include "hodge/eps_series.hpp"

#include <stdexcept>

namespace hodge {

namespace {
void check_even(int n) {
  if (n % 2 != 0 || n < 0)
    throw std::invalid_argument("EpsSeries: eps powers must be even and nonnegative");
}
}  // namespace

EpsSeries::EpsSeries(context_ptr ctx, int trunc) : ctx_(std::move(ctx)), trunc_(trunc) {
  check_even(trunc);
}

EpsSeries EpsSeries::from_poly(const DiffPoly& p, int trunc) {
  EpsSeries s(p.context(), trunc);
  if (!p.is_zero()) s.c_.emplace(0, p);
  return s;
}

bool EpsSeries::is_zero() const { return c_.empty(); }

const DiffPoly& EpsSeries::coeff(int n) const {
  check_even(n);
  static const DiffPoly kZero;
  auto it = c_.find(n);
  if (it == c_.end()) {
    // Return a zero polynomial in the right context when available.
    thread_local DiffPoly zero_in_ctx;
    zero_in_ctx = DiffPoly(ctx_);
    return n <= trunc_ ? zero_in_ctx : kZero;
  }
  return it->second;
}

void EpsSeries::set_coeff(int n, DiffPoly p) {
  check_even(n);
  if (n > trunc_) return;
  if (p.is_zero())
    c_.erase(n);
  else
    c_[n] = std::move(p);
}

EpsSeries EpsSeries::truncated(int new_trunc) const {
  check_even(new_trunc);
  EpsSeries r(ctx_, new_trunc);
  for (const auto& [n, p] : c_)
    if (n <= new_trunc) r.c_.emplace(n, p);
  return r;
}

void EpsSeries::prune() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero() || it->first > trunc_)
      it = c_.erase(it);
    else
      ++it;
  }
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
  if (!ctx_) ctx_ = o.ctx_;
  trunc_ = c_.empty() && o.c_.empty() ? std::min(trunc_, o.trunc_)
                                      : std::min(trunc_, o.trunc_);
  for (const auto& [n, p] : o.c_) {
    if (n > trunc_) continue;
    auto it = c_.find(n);
    if (it == c_.end())
      c_.emplace(n, p);
    else
      it->second += p;
  }
  prune();
  return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& o) {
  if (!ctx_) ctx_ = o.ctx_;
  trunc_ = std::min(trunc_, o.trunc_);
  for (const auto& [n, p] : o.c_) {
    if (n > trunc_) continue;
    auto it = c_.find(n);
    if (it == c_.end())
      c_.emplace(n, -p);
    else
      it->second -= p;
  }
  prune();
  return *this;
}

EpsSeries EpsSeries::operator-() const {
  EpsSeries r(ctx_, trunc_);
  for (const auto& [n, p] : c_) r.c_.emplace(n, -p);
  return r;
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  EpsSeries r(a.ctx_ ? a.ctx_ : b.ctx_, std::min(a.trunc_, b.trunc_));
  for (const auto& [n, p] : a.c_) {
    for (const auto& [m, q] : b.c_) {
      if (n + m > r.trunc_) continue;
      DiffPoly prod = p * q;
      if (prod.is_zero()) continue;
      auto it = r.c_.find(n + m);
      if (it == r.c_.end())
        r.c_.emplace(n + m, std::move(prod));
      else
        it->second += prod;
    }
  }
  r.prune();
  return r;
}

EpsSeries& EpsSeries::operator*=(const rat& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [n, p] : c_) p *= c;
  return *this;
}

EpsSeries& EpsSeries::operator+=(const DiffPoly& p) {
  if (!ctx_) ctx_ = p.context();
  if (p.is_zero()) return *this;
  auto it = c_.find(0);
  if (it == c_.end())
    c_.emplace(0, p);
  else
    it->second += p;
  prune();
  return *this;
}

EpsSeries& EpsSeries::operator-=(const DiffPoly& p) {
  if (!ctx_) ctx_ = p.context();
  if (p.is_zero()) return *this;
  auto it = c_.find(0);
  if (it == c_.end())
    c_.emplace(0, -p);
  else
    it->second -= p;
  prune();
  return *this;
}

EpsSeries operator*(const DiffPoly& p, EpsSeries a) {
  for (auto& [n, q] : a.c_) q = p * q;
  a.prune();
  return a;
}

EpsSeries EpsSeries::dx() const {
  EpsSeries r(ctx_, trunc_);
  for (const auto& [n, p] : c_) r.set_coeff(n, p.dx());
  return r;
}

EpsSeries EpsSeries::pdiff(unsigned m) const {
  EpsSeries r(ctx_, trunc_);
  for (const auto& [n, p] : c_) r.set_coeff(n, p.pdiff(m));
  return r;
}

EpsSeries EpsSeries::shifted(int n) const {
  check_even(n);
  EpsSeries r(ctx_, trunc_);
  for (const auto& [m, p] : c_)
    if (m + n <= trunc_) r.c_.emplace(m + n, p);
  return r;
}

bool EpsSeries::operator==(const EpsSeries& o) const {
  if (trunc_ != o.trunc_) return false;
  return c_ == o.c_;
}

int EpsSeries::max_jet_order() const {
  int order = -1;
  for (const auto& [n, p] : c_) order = std::max(order, p.max_jet_order());
  return order;
}

}  // namespace hodge
