#include "hodge/lambda_extract.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hodge/linalg.hpp"
#include "hodge/tseries.hpp"

namespace hodge {

// ---------------------------------------------------------------------------
// LambdaCalculus

const LambdaCombo& LambdaCalculus::reduce(std::vector<unsigned> multiset) {
  // lambda_0 = 1 contributes nothing to a product.
  std::erase(multiset, 0u);
  std::sort(multiset.begin(), multiset.end());
  auto it = reduce_memo_.find(multiset);
  if (it != reduce_memo_.end()) return it->second;

  LambdaCombo result;
  bool vanishes = false;
  for (unsigned m : multiset)
    if (m > g_) vanishes = true;
  std::size_t rep = multiset.size();
  for (std::size_t i = 0; i + 1 < multiset.size() && rep == multiset.size(); ++i)
    if (multiset[i] == multiset[i + 1]) rep = i;

  if (vanishes) {
    // lambda beyond the bundle rank is zero; the combination is empty.
  } else if (rep == multiset.size()) {
    result.emplace(multiset, rat(1));  // already square-free
  } else {
    const unsigned k = multiset[rep];
    std::vector<unsigned> rest = multiset;
    rest.erase(rest.begin() + static_cast<long>(rep),
               rest.begin() + static_cast<long>(rep) + 2);
    // lambda_k^2 = 2 sum_{i=0}^{k-1} (-1)^{k-i+1} lambda_i lambda_{2k-i}
    for (unsigned i = 0; i < k; ++i) {
      if (2 * k - i > g_) continue;  // lambda beyond the rank vanishes
      std::vector<unsigned> next = rest;
      if (i > 0) next.push_back(i);
      next.push_back(2 * k - i);
      const rat factor = ((k - i + 1) % 2 == 0) ? rat(2) : rat(-2);
      for (const auto& [mask, c] : reduce(std::move(next))) {
        rat& slot = result[mask];
        slot += factor * c;
        if (slot == 0) result.erase(mask);
      }
    }
  }
  return reduce_memo_.emplace(std::move(multiset), std::move(result)).first->second;
}

const LambdaCombo& LambdaCalculus::power_sum(unsigned k) {
  auto it = psum_memo_.find(k);
  if (it != psum_memo_.end()) return it->second;
  // Newton: p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^k (-(k)) e_k
  //             = sum_{i=1}^{k-1} (-1)^{i+1} e_i p_{k-i} + (-1)^{k+1} k e_k.
  LambdaCombo result;
  if (k == 0) {
    result.emplace(LambdaMask{}, rat(g_));  // p_0 = rank
  } else {
    for (unsigned i = 1; i < k && i <= g_; ++i) {
      const rat sign = (i % 2 == 1) ? rat(1) : rat(-1);
      for (const auto& [mask, c] : power_sum(k - i)) {
        std::vector<unsigned> multiset(mask.begin(), mask.end());
        multiset.push_back(i);
        for (const auto& [rmask, rc] : reduce(std::move(multiset))) {
          rat& slot = result[rmask];
          slot += sign * c * rc;
          if (slot == 0) result.erase(rmask);
        }
      }
    }
    if (k <= g_) {
      const LambdaMask ek{k};
      const rat sign = (k % 2 == 1) ? rat(k) : rat(-static_cast<long>(k));
      rat& slot = result[ek];
      slot += sign;
      if (slot == 0) result.erase(ek);
    }
  }
  return psum_memo_.emplace(k, std::move(result)).first->second;
}

const LambdaCombo& LambdaCalculus::chern(unsigned m) {
  auto it = chern_memo_.find(m);
  if (it != chern_memo_.end()) return it->second;
  LambdaCombo result = power_sum(m);
  const rat inv = rat(bigint(1), factorial(m));
  for (auto& [mask, c] : result) c *= inv;
  return chern_memo_.emplace(m, std::move(result)).first->second;
}

LambdaCombo LambdaCalculus::multiply(const LambdaCombo& a, const LambdaCombo& b) {
  LambdaCombo result;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<unsigned> multiset(ma.begin(), ma.end());
      multiset.insert(multiset.end(), mb.begin(), mb.end());
      const rat c = ca * cb;
      for (const auto& [mask, rc] : reduce(std::move(multiset))) {
        rat& slot = result[mask];
        slot += c * rc;
        if (slot == 0) result.erase(mask);
      }
    }
  return result;
}

LambdaCombo LambdaCalculus::power(const LambdaCombo& a, unsigned e) {
  LambdaCombo result;
  result.emplace(LambdaMask{}, rat(1));
  for (unsigned i = 0; i < e; ++i) result = multiply(result, a);
  return result;
}

// ---------------------------------------------------------------------------
// LambdaExtractor

LambdaExtractor::LambdaExtractor(HodgeRecursion& recursion) : rec_(recursion) {
  const auto& params = rec_.context()->params;
  std::vector<std::string> names;
  std::vector<long> weights;
  for (std::size_t k = 0; k < params.size(); ++k) {
    names.push_back("a" + std::to_string(k + 1));
    weights.push_back(2 * static_cast<long>(k) + 1);
  }
  actx_ = make_context(std::move(names), std::move(weights));
}

DiffPoly LambdaExtractor::sigma_form(unsigned g) {
  std::vector<DiffPoly> images;
  for (std::size_t k = 0; k < actx_->params.size(); ++k) {
    const rat coef = -bernoulli(2 * (unsigned(k) + 1)) / rat(factorial(2 * (unsigned(k) + 1)));
    images.push_back(DiffPoly::param(actx_, static_cast<unsigned>(k)) * coef);
  }
  return rec_.potential(g).subst_params(actx_, images);
}

const GfExtraction& LambdaExtractor::extraction(unsigned g) {
  auto cached = extractions_.find(g);
  if (cached != extractions_.end()) return cached->second;

  LambdaCalculus& lc = calculi_.try_emplace(g, g).first->second;
  const DiffPoly sigma = sigma_form(g);

  GfExtraction out;
  out.genus = g;
  out.consistent = true;

  // Masks and exponent vectors alpha grouped by cohomological weight.
  const unsigned max_mask_weight = g * (g + 1) / 2;
  const unsigned max_alpha_weight = 3 * g - 3;  // degbar bound on H_g
  const unsigned wmax = std::max(max_mask_weight, max_alpha_weight);

  for (unsigned w = 1; w <= wmax; ++w) {
    // masks of weight w
    std::vector<LambdaMask> masks;
    {
      LambdaMask cur;
      struct Walker {
        unsigned g, w;
        std::vector<LambdaMask>* out;
        void walk(LambdaMask& cur, unsigned from, unsigned sum) {
          if (sum == w) {
            out->push_back(cur);
            return;
          }
          for (unsigned i = from; i <= g && sum + i <= w; ++i) {
            cur.push_back(i);
            walk(cur, i + 1, sum + i);
            cur.pop_back();
          }
        }
      } walker{g, w, &masks};
      walker.walk(cur, 1, 0);
    }

    // alpha with sum (2k-1) alpha_k = w
    std::vector<std::vector<unsigned>> alphas;
    {
      std::vector<unsigned> cur(g, 0);
      struct Walker {
        unsigned g, w;
        std::vector<std::vector<unsigned>>* out;
        void walk(std::vector<unsigned>& cur, unsigned k, unsigned sum) {
          if (k == g) {
            if (sum == w) out->push_back(cur);
            return;
          }
          const unsigned step = 2 * k + 1;
          for (unsigned e = 0; sum + e * step <= w; ++e) {
            cur[k] = e;
            walk(cur, k + 1, sum + e * step);
          }
          cur[k] = 0;
        }
      } walker{g, w, &alphas};
      walker.walk(cur, 0, 0);
    }
    out.n_equations += alphas.size();

    // Row alpha: alpha! [sigma^alpha] H_g = sum_M d_{alpha,M} GF_M with
    // d from expanding prod_k ch_{2k-1}^{alpha_k}.
    std::vector<std::vector<rat>> A;
    std::vector<DiffPoly> b;
    for (const auto& alpha : alphas) {
      LambdaCombo combo;
      combo.emplace(LambdaMask{}, rat(1));
      rat alpha_factorial(1);
      for (unsigned k = 0; k < g; ++k) {
        if (alpha[k] == 0) continue;
        combo = lc.multiply(combo, lc.power(lc.chern(2 * k + 1), alpha[k]));
        alpha_factorial *= rat(factorial(alpha[k]));
      }
      std::vector<rat> row(masks.size(), rat(0));
      for (const auto& [mask, c] : combo) {
        auto pos = std::find(masks.begin(), masks.end(), mask);
        if (pos == masks.end())
          throw std::runtime_error("lambda extraction: weight bookkeeping is broken");
        row[static_cast<std::size_t>(pos - masks.begin())] = c;
      }
      DiffPoly lhs = sigma;
      for (unsigned k = 0; k < g; ++k) lhs = lhs.coeff_of_param_power(k, alpha[k]);
      // strip exponents of any surplus ring parameters beyond a_g
      for (unsigned k = g; k < actx_->params.size(); ++k)
        lhs = lhs.coeff_of_param_power(k, 0);
      if (lhs.depends_on_params())
        throw std::runtime_error("lambda extraction: sigma coefficient still has parameters");
      A.push_back(std::move(row));
      b.push_back(lhs * alpha_factorial);
    }

    if (masks.empty()) {
      for (const DiffPoly& rhs : b)
        if (!rhs.is_zero()) out.consistent = false;
      continue;
    }

    LinearSolution<DiffPoly> sol = solve_linear(std::move(A), std::move(b), DiffPoly::zero(actx_));
    if (!sol.unique || !sol.consistent) out.consistent = false;
    // The solved functions are parameter-free; re-home them in the ring of
    // the recursion so callers can mix them with potentials and jets.
    for (std::size_t j = 0; j < masks.size(); ++j)
      out.gf.emplace(masks[j], DiffPoly::parse(rec_.context(), sol.x[j].to_text()));
  }

  out.n_masks = out.gf.size();
  if (!out.consistent)
    throw std::runtime_error("lambda extraction: genus " + std::to_string(g) +
                             " blocks failed to close");
  return extractions_.emplace(g, std::move(out)).first->second;
}

const DiffPoly& LambdaExtractor::gf(unsigned g, const LambdaMask& mask) {
  if (mask.empty()) return rec_.free_energy(g);
  const GfExtraction& ex = extraction(g);
  auto it = ex.gf.find(mask);
  if (it == ex.gf.end())
    throw std::invalid_argument("LambdaExtractor::gf: mask exceeds the genus");
  return it->second;
}

rat LambdaExtractor::hodge_number(unsigned g, std::vector<unsigned> lambda_multiset,
                                  const std::vector<unsigned>& psi_exponents) {
  LambdaCalculus& lc = calculi_.try_emplace(g, g).first->second;
  const LambdaCombo& combo = lc.reduce(std::move(lambda_multiset));
  if (psi_exponents.empty()) {
    rat value(0);
    for (const auto& [mask, c] : combo) value += c * gf(g, mask).eval_t0();
    return value;
  }

  // psi insertions: coefficient extraction from the generating function on
  // the topological solution.  Truncating the t-series at the total degree
  // of the target monomial (and at its variable range) is exact for that
  // one coefficient.
  unsigned nvars = 1;
  for (unsigned p : psi_exponents) nvars = std::max(nvars, p + 1);
  const unsigned deg = static_cast<unsigned>(psi_exponents.size());
  TSeries::key target(nvars, 0);
  for (unsigned p : psi_exponents) ++target[p];
  rat mult_factorial(1);
  for (int32_t e : target) mult_factorial *= rat(factorial(static_cast<unsigned>(e)));

  TopologicalJets jets(nvars, deg);
  rat value(0);
  for (const auto& [mask, c] : combo) value += c * jets.eval(gf(g, mask)).coeff(target);
  return value * mult_factorial;
}

rat LambdaExtractor::triple_top_constant(unsigned g) {
  if (g < 2) throw std::invalid_argument("triple_top_constant: needs g >= 2");
  rat b1 = bernoulli(2 * g - 2);
  rat b2 = bernoulli(2 * g);
  if (b1 < 0) b1 = -b1;
  if (b2 < 0) b2 = -b2;
  return b1 * b2 / (rat(2) * rat(factorial(2 * g - 2)) * rat(2 * g - 2) * rat(2 * g));
}

}  // namespace hodge
