#ifndef HODGE_INTERSECTION_HPP
#define HODGE_INTERSECTION_HPP

// Exact psi-class intersection numbers <tau_{k_1} ... tau_{k_n}>_g on the
// moduli of stable curves, computed by the Dijkgraaf--Verlinde--Verlinde
// (Virasoro) recursion from the two seeds <tau_0^3>_0 = 1 and
// <tau_1>_1 = 1/24.  This module is the engine's independent oracle: the
// genus-g free energies produced elsewhere are fitted against, and tested
// against, these numbers, never the other way round.

#include <map>
#include <string>
#include <vector>

#include "hodge/rational.hpp"
#include "hodge/tseries.hpp"

namespace hodge {

class IntersectionOracle {
 public:
  // <tau_{ks[0]} ... tau_{ks[n-1]}>_g.  Returns 0 whenever the dimension
  // constraint sum(ks) = 3g-3+n fails or the moduli space is unstable
  // (g = 0 with n < 3; g = 1 with n = 0).  Memoized.
  const rat& correlator(unsigned g, std::vector<unsigned> ks);

  // Closed form for genus 0: <tau_{k_1}...tau_{k_n}>_0 = (n-3)! / prod k_i!
  // when sum k_i = n-3; used as a cross-check of the recursion.
  static rat genus0_closed_form(const std::vector<unsigned>& ks);

  // Free-energy series F_g(t_0..t_{nvars-1}) through total degree maxdeg:
  //   F_g = sum_n (1/n!) sum_{p_1..p_n} <tau_{p_1}...tau_{p_n}>_g prod t_{p_i}.
  TSeries free_energy_series(unsigned g, unsigned nvars, unsigned maxdeg);

  // JSON disk cache ("g:[k1,k2,...]" -> "p/q").  load merges; save rewrites.
  void load_cache(const std::string& path);
  void save_cache(const std::string& path) const;

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<std::pair<unsigned, std::vector<unsigned>>, rat> memo_;
};

}  // namespace hodge

#endif  // HODGE_INTERSECTION_HPP
