#ifndef HODGE_TSERIES_HPP
#define HODGE_TSERIES_HPP

// Truncated multivariate power series in the time variables t_0 .. t_P with
// exact rational coefficients, cut off at a fixed total degree.  These are
// used to evaluate differential polynomials on the topological solution of
// the dispersionless hierarchy (whose jets have closed-form coefficient
// expansions), which turns genus fitting and PDE checks into finite exact
// linear algebra.

#include <map>
#include <vector>

#include "hodge/jet_ring.hpp"
#include "hodge/rational.hpp"

namespace hodge {

class TSeries {
 public:
  using key = std::vector<int32_t>;  // exponents of t_0..t_P, trailing zeros kept

  TSeries() = default;
  TSeries(unsigned nvars, unsigned maxdeg) : nvars_(nvars), maxdeg_(maxdeg) {}
  static TSeries constant(unsigned nvars, unsigned maxdeg, const rat& c);

  unsigned nvars() const { return nvars_; }
  unsigned maxdeg() const { return maxdeg_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<key, rat>& terms() const { return terms_; }

  rat coeff(const key& k) const;
  void add(const key& k, const rat& c);  // drops overflowed degrees and zeros

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  TSeries& operator*=(const rat& c);
  friend TSeries operator*(TSeries a, const rat& c) { return a *= c; }
  friend TSeries operator*(const rat& c, TSeries a) { return a *= c; }
  TSeries pow(unsigned e) const;
  bool operator==(const TSeries& o) const { return terms_ == o.terms_; }

  TSeries deriv(unsigned p) const;  // ∂/∂t_p

  // Copy with all terms of total degree > new_maxdeg dropped.  Needed when
  // comparing series of different provenance: d/dt of a degree-D truncation
  // is only complete through degree D-1.
  TSeries truncated(unsigned new_maxdeg) const;

  // For series with zero constant term h: binomial expansion (1+h)^a for
  // integer a (negative allowed), log(1+h), exp(h).  All exact because h is
  // nilpotent at the truncation degree.
  TSeries one_plus_pow(long a) const;
  TSeries log_one_plus() const;
  TSeries exp() const;

  // Constant term and the series minus it.
  rat constant_term() const;
  TSeries positive_part() const;

 private:
  unsigned nvars_ = 0;
  unsigned maxdeg_ = 0;
  std::map<key, rat> terms_;
};

// Jets of the topological solution of the dispersionless hierarchy of the
// point, ∂v/∂t_q = (v^q/q!) v_x, selected by the string equation:
//   v(t)      = sum_{k>=1} (1/k)   sum_{p_1+..+p_k=k-1}   prod t_{p_i}/p_i!
//   v^(m)(t)  = sum_{k>=0} (k+1)_{m-1} sum_{p_1+..+p_k=k+m-1} prod t_{p_i}/p_i!
// (ordered tuples; (k+1)_{m-1} the rising factorial; m >= 1; v_x(0) = 1).
// These closed forms are equivalent to v^(m) = ∂^m v / ∂t_0^m, which is what
// the unit tests check them against.
class TopologicalJets {
 public:
  TopologicalJets(unsigned nvars, unsigned maxdeg);

  unsigned nvars() const { return nvars_; }
  unsigned maxdeg() const { return maxdeg_; }

  const TSeries& jet(unsigned m) const;  // v^(m); m = 0 gives v itself

  // Evaluates a parameter-free differential polynomial on the topological
  // jets (supports Laurent powers of v1 and the log generator L = log v_x;
  // the exp generator is rejected).
  TSeries eval(const DiffPoly& f) const;

 private:
  const TSeries& jet_power(unsigned m, long e) const;
  unsigned nvars_;
  unsigned maxdeg_;
  mutable std::map<unsigned, TSeries> jets_;
  mutable std::map<std::pair<unsigned, long>, TSeries> powers_;
  mutable std::map<int32_t, TSeries> log_powers_;
};

}  // namespace hodge

#endif  // HODGE_TSERIES_HPP
