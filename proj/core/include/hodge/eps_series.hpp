#ifndef HODGE_EPS_SERIES_HPP
#define HODGE_EPS_SERIES_HPP

// Finite even-power eps-expansions with differential-polynomial coefficients:
//     A = sum_{n even, 0 <= n <= trunc} eps^n A_n,   A_n a DiffPoly.
// All operations truncate at the smaller of the operands' truncation orders.
// The deformation parameter eps only ever appears in even powers in this
// engine, and the truncation order is carried explicitly so that products
// never silently pretend to more accuracy than their inputs have.

#include <map>

#include "hodge/jet_ring.hpp"

namespace hodge {

class EpsSeries {
 public:
  EpsSeries() = default;
  EpsSeries(context_ptr ctx, int trunc);
  static EpsSeries zero(context_ptr ctx, int trunc) { return EpsSeries(std::move(ctx), trunc); }
  static EpsSeries from_poly(const DiffPoly& p, int trunc);  // order-eps^0 part

  const context_ptr& context() const { return ctx_; }
  int trunc() const { return trunc_; }
  bool is_zero() const;

  // Coefficient of eps^n (zero polynomial if absent).  n must be even.
  const DiffPoly& coeff(int n) const;
  void set_coeff(int n, DiffPoly p);
  const std::map<int, DiffPoly>& coeffs() const { return c_; }

  EpsSeries truncated(int new_trunc) const;

  EpsSeries& operator+=(const EpsSeries& o);
  EpsSeries& operator-=(const EpsSeries& o);
  EpsSeries operator-() const;
  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  EpsSeries& operator*=(const rat& c);
  friend EpsSeries operator*(EpsSeries a, const rat& c) { return a *= c; }
  friend EpsSeries operator*(const rat& c, EpsSeries a) { return a *= c; }
  EpsSeries& operator+=(const DiffPoly& p);
  EpsSeries& operator-=(const DiffPoly& p);
  friend EpsSeries operator*(const DiffPoly& p, EpsSeries a);

  EpsSeries dx() const;
  EpsSeries pdiff(unsigned m) const;

  // Multiplies by eps^n (n even, >= 0), dropping overflowed orders.
  EpsSeries shifted(int n) const;

  bool operator==(const EpsSeries& o) const;
  bool operator!=(const EpsSeries& o) const { return !(*this == o); }

  int max_jet_order() const;

 private:
  void prune();
  context_ptr ctx_;
  int trunc_ = 0;
  std::map<int, DiffPoly> c_;
};

}  // namespace hodge

#endif  // HODGE_EPS_SERIES_HPP
