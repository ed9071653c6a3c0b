#include "hodge/hodge_recursion.hpp"

#include <stdexcept>
#include <string>

namespace hodge {

const DiffPoly& HodgeRecursion::potential(unsigned g) {
  auto it = potentials_.find(g);
  if (it != potentials_.end()) return it->second;
  if (g == 0) throw std::invalid_argument("HodgeRecursion::potential: needs g >= 1");
  if (ctx_->params.size() < g)
    throw std::invalid_argument("HodgeRecursion::potential: ring has " +
                                std::to_string(ctx_->params.size()) +
                                " parameters, genus " + std::to_string(g) + " needs s_1..s_" +
                                std::to_string(g));

  const std::string key = "g=" + std::to_string(g) + ";algo=1";
  if (cache_ && cache_->enabled()) {
    if (auto text = cache_->get("hodge-potential", key))
      return potentials_.emplace(g, DiffPoly::parse(ctx_, *text)).first->second;
  }

  DiffPoly h = free_energy(g);
  for (unsigned stage = 1; stage <= g; ++stage) h = run_stage(h, g, stage);

  if (cache_ && cache_->enabled()) cache_->put("hodge-potential", key, h.to_text());
  return potentials_.emplace(g, std::move(h)).first->second;
}

const DiffPoly& HodgeRecursion::potential_tderiv(unsigned g, unsigned p) {
  const auto key = std::make_pair(g, p);
  auto it = tderiv_memo_.find(key);
  if (it != tderiv_memo_.end()) return it->second;
  DiffPoly d = flows_.tderiv(potential(g), p);
  return tderiv_memo_.emplace(key, std::move(d)).first->second;
}

DiffPoly HodgeRecursion::e_term(unsigned k, unsigned g) {
  if (k == 0 || g == 0) throw std::invalid_argument("HodgeRecursion::e_term: needs k, g >= 1");
  const unsigned N = 2 * k - 2;
  DiffPoly acc(ctx_);
  for (unsigned p = 0; p <= N; ++p) {
    DiffPoly bracket(ctx_);
    if (g == 1) {
      // The genus-0 "potential" is not a differential polynomial, but its
      // second t-derivatives along the topological flows are: they are the
      // two-point functions Omega.
      bracket = omega(ctx_, p, N - p);
    } else {
      bracket = flows_.tderiv(potential_tderiv(g - 1, N - p), p);
      for (unsigned l = 1; l < g; ++l)
        bracket += potential_tderiv(l, p) * potential_tderiv(g - l, N - p);
    }
    if (p % 2 == 0)
      acc += bracket;
    else
      acc -= bracket;
  }
  return acc * rational(-1, 2);
}

DiffPoly HodgeRecursion::run_stage(const DiffPoly& prev, unsigned g, unsigned h) {
  const DiffPoly source = e_term(h, g).restrict_params(h);
  const unsigned source_deg = static_cast<unsigned>(source.deg_param(h - 1));
  const long aux_budget = 3l * g - 3;

  DiffPoly total = prev;
  DiffPoly coeff = prev;  // coefficient of s_h^{j-1} in the solution
  DiffPoly s_h = DiffPoly::param(ctx_, h - 1);
  DiffPoly s_h_power = s_h;

  for (unsigned j = 1;; ++j) {
    if (j > 3 * g + 2)
      throw std::runtime_error("HodgeRecursion: stage " + std::to_string(h) + " of genus " +
                               std::to_string(g) + " failed to terminate");
    DiffPoly next =
        (flows_.dk_apply(h, coeff) + source.coeff_of_param_power(h - 1, j - 1)) * rational(1, j);

    if (next.is_zero() && j - 1 >= source_deg) break;

    if (!next.is_zero() && g >= 2) {
      const long bound = aux_budget - (2l * h - 1) * j;
      const auto aux = next.degbar_max();
      if (bound < 0 || (aux && *aux > bound))
        throw std::runtime_error("HodgeRecursion: auxiliary-degree bound violated at genus " +
                                 std::to_string(g) + ", stage " + std::to_string(h) +
                                 ", power " + std::to_string(j));
    }

    total += s_h_power * next;
    s_h_power = s_h_power * s_h;
    coeff = std::move(next);
  }
  return total;
}

bool HodgeRecursion::verify_extra_stage(unsigned g) {
  DiffPoly residual = flows_.dk_apply(g + 1, potential(g)) + e_term(g + 1, g);
  return residual.is_zero();
}

}  // namespace hodge
