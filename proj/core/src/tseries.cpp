#include "hodge/tseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodge {

namespace {

long key_degree(const TSeries::key& k) {
  long d = 0;
  for (int32_t e : k) d += e;
  return d;
}

}  // namespace

TSeries TSeries::constant(unsigned nvars, unsigned maxdeg, const rat& c) {
  TSeries s(nvars, maxdeg);
  s.add(key(nvars, 0), c);
  return s;
}

rat TSeries::coeff(const key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? rat(0) : it->second;
}

void TSeries::add(const key& k, const rat& c) {
  if (c == 0) return;
  if (key_degree(k) > static_cast<long>(maxdeg_)) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TSeries& TSeries::operator+=(const TSeries& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  TSeries r(std::max(a.nvars_, b.nvars_), std::min(a.maxdeg_, b.maxdeg_));
  for (const auto& [ka, ca] : a.terms_) {
    const long da = key_degree(ka);
    for (const auto& [kb, cb] : b.terms_) {
      if (da + key_degree(kb) > static_cast<long>(r.maxdeg_)) continue;
      TSeries::key k(r.nvars_, 0);
      for (std::size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
      for (std::size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
      r.add(k, ca * cb);
    }
  }
  return r;
}

TSeries& TSeries::operator*=(const rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coef] : terms_) coef *= c;
  return *this;
}

TSeries TSeries::pow(unsigned e) const {
  TSeries r = constant(nvars_, maxdeg_, 1);
  TSeries base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

TSeries TSeries::deriv(unsigned p) const {
  TSeries r(nvars_, maxdeg_);
  for (const auto& [k, c] : terms_) {
    if (p >= k.size() || k[p] == 0) continue;
    key n = k;
    n[p] -= 1;
    r.add(n, c * rat(k[p]));
  }
  return r;
}

TSeries TSeries::truncated(unsigned new_maxdeg) const {
  TSeries r(nvars_, new_maxdeg);
  for (const auto& [k, c] : terms_) r.add(k, c);
  return r;
}

rat TSeries::constant_term() const { return coeff(key(nvars_, 0)); }

TSeries TSeries::positive_part() const {
  TSeries r(nvars_, maxdeg_);
  for (const auto& [k, c] : terms_)
    if (key_degree(k) > 0) r.terms_.emplace(k, c);
  return r;
}

TSeries TSeries::one_plus_pow(long a) const {
  if (constant_term() != 0)
    throw std::invalid_argument("one_plus_pow: series must have zero constant term");
  // (1+h)^a = sum_k C(a,k) h^k, finite because h^(maxdeg+1) = 0.
  TSeries r = constant(nvars_, maxdeg_, 1);
  TSeries hk = constant(nvars_, maxdeg_, 1);
  for (unsigned k = 1; k <= maxdeg_; ++k) {
    hk = hk * *this;
    if (hk.is_zero()) break;
    r += binomial_general(a, k) * hk;
  }
  return r;
}

TSeries TSeries::log_one_plus() const {
  if (constant_term() != 0)
    throw std::invalid_argument("log_one_plus: series must have zero constant term");
  TSeries r(nvars_, maxdeg_);
  TSeries hk = constant(nvars_, maxdeg_, 1);
  for (unsigned k = 1; k <= maxdeg_; ++k) {
    hk = hk * *this;
    if (hk.is_zero()) break;
    r += (k % 2 == 1 ? rational(1, k) : rational(-1, k)) * hk;
  }
  return r;
}

TSeries TSeries::exp() const {
  if (constant_term() != 0)
    throw std::invalid_argument("exp: series must have zero constant term");
  TSeries r = constant(nvars_, maxdeg_, 1);
  TSeries hk = constant(nvars_, maxdeg_, 1);
  for (unsigned k = 1; k <= maxdeg_; ++k) {
    hk = hk * *this;
    if (hk.is_zero()) break;
    r += rat(1, factorial(k)) * hk;
  }
  return r;
}

// --- topological jets --------------------------------------------------------

TopologicalJets::TopologicalJets(unsigned nvars, unsigned maxdeg)
    : nvars_(nvars), maxdeg_(maxdeg) {}

namespace {

// Enumerates exponent keys of total degree <= maxdeg and calls fn(key, deg, weight)
// where weight = sum p * e_p.
template <typename Fn>
void for_each_monomial(unsigned nvars, unsigned maxdeg, Fn&& fn) {
  TSeries::key k(nvars, 0);
  // Depth-first over variable slots.
  auto rec = [&](auto&& self, unsigned var, long deg, long weight) -> void {
    if (var == nvars) {
      fn(k, deg, weight);
      return;
    }
    for (int32_t e = 0;; ++e) {
      k[var] = e;
      const long d = deg + e;
      if (d > static_cast<long>(maxdeg)) break;
      self(self, var + 1, d, weight + static_cast<long>(var) * e);
    }
    k[var] = 0;
  };
  rec(rec, 0, 0, 0);
}

// prod_p 1/p!^{e_p} * deg! / prod_p e_p!   (the number of ordered tuples
// realizing the multiset, divided by the factorials of the part values).
rat tuple_weight(const TSeries::key& k, long deg) {
  rat c(factorial(static_cast<unsigned long>(deg)));
  for (std::size_t p = 0; p < k.size(); ++p) {
    if (k[p] == 0) continue;
    c /= rat(factorial(k[p]));
    if (p >= 2) {
      const rat pf(factorial(static_cast<unsigned long>(p)));
      for (int32_t i = 0; i < k[p]; ++i) c /= pf;
    }
  }
  return c;
}

}  // namespace

const TSeries& TopologicalJets::jet(unsigned m) const {
  auto it = jets_.find(m);
  if (it != jets_.end()) return it->second;
  TSeries s(nvars_, maxdeg_);
  if (m == 0) {
    for_each_monomial(nvars_, maxdeg_, [&](const TSeries::key& k, long deg, long weight) {
      if (deg >= 1 && weight == deg - 1) s.add(k, tuple_weight(k, deg) / rat(deg));
    });
  } else {
    for_each_monomial(nvars_, maxdeg_, [&](const TSeries::key& k, long deg, long weight) {
      if (weight != deg + static_cast<long>(m) - 1) return;
      if (deg == 0 && m != 1) return;
      rat rising = 1;
      for (unsigned i = 1; i < m; ++i) rising *= rat(deg + static_cast<long>(i));
      s.add(k, rising * tuple_weight(k, deg));
    });
  }
  return jets_.emplace(m, std::move(s)).first->second;
}

const TSeries& TopologicalJets::jet_power(unsigned m, long e) const {
  auto it = powers_.find({m, e});
  if (it != powers_.end()) return it->second;
  TSeries s(nvars_, maxdeg_);
  if (e >= 0) {
    s = jet(m).pow(static_cast<unsigned>(e));
  } else {
    if (m != 1) throw std::invalid_argument("TopologicalJets: negative power on v^(m), m != 1");
    // v_x = 1 + h with h(0) = 0, so v_x^e is a binomial series.
    s = jet(1).positive_part().one_plus_pow(e);
  }
  return powers_.emplace(std::make_pair(m, e), std::move(s)).first->second;
}

TSeries TopologicalJets::eval(const DiffPoly& f) const {
  if (f.depends_on_params())
    throw std::invalid_argument("TopologicalJets::eval: parameter-free input required");
  if (f.has_exp_factor())
    throw std::invalid_argument("TopologicalJets::eval: exp generator unsupported");
  TSeries r(nvars_, maxdeg_);
  for (const auto& [mono, c] : f.terms()) {
    TSeries term = TSeries::constant(nvars_, maxdeg_, c);
    for (std::size_t j = 0; j < mono.jet.size(); ++j)
      if (mono.jet[j] != 0) term = term * jet_power(static_cast<unsigned>(j), mono.jet[j]);
    if (mono.lg != 0) {
      auto it = log_powers_.find(mono.lg);
      if (it == log_powers_.end()) {
        const TSeries lg = jet(1).positive_part().log_one_plus();
        it = log_powers_.emplace(mono.lg, lg.pow(mono.lg)).first;
      }
      term = term * it->second;
    }
    r += term;
  }
  return r;
}

}  // namespace hodge
