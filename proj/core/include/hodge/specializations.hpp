#ifndef HODGE_SPECIALIZATIONS_HPP
#define HODGE_SPECIALIZATIONS_HPP

// Specializations of the deformed hierarchy under particular parameter
// substitutions, each verified against independently coded target equations:
//
//   * ILW:      s_k = -B_{2k}/(2k(2k-1)) s^{2k-1}.  A linear Miura map takes
//               the t_1-flow to the Intermediate Long Wave equation, and the
//               Hamiltonian operator becomes constant-coefficient.
//   * Volterra: s_k = (4^k-1) B_{2k}/(2k(2k-1)) s^{2k-1}.  The resummed
//               combination 2 sum_k (2s)^k d/dt_k of the flows, rescaled and
//               evaluated at s = 1, is the Volterra lattice equation; a
//               further Miura map produces the discrete KdV equation.
//   * cubic:    s_k = -B_{2k}/(2k(2k-1)) (p^{2k-1}+q^{2k-1}-(pq/(p+q))^{2k-1}).
//               The Hamiltonian operator becomes jet-free with coefficients
//               matching a closed x/sin(x) product formula.  Verified on
//               rational (p,q) samples.
//
// Also here: the normal form of the first Hamiltonian density.  A normal
// Miura transformation w~ = w + eps^2 dx^2(B) changes the density h_1 by a
// total x-derivative plus the re-expression in w~-jets, so reducing h_1 to
// the standard monomial basis (highest-derivative factor nonlinear, no w_x
// factors, from eps^4 on) is a linear problem for B and the standard
// coefficients, solved order by order.

#include <string>
#include <utility>
#include <vector>

#include "hodge/hierarchy.hpp"

namespace hodge {

// Parameter substitution rules.  The ILW and Volterra rules give the
// coefficient of s^{2k-1}; the cubic rule evaluates at rational (p, q).
rat ilw_s_coefficient(unsigned k);
rat volterra_s_coefficient(unsigned k);
rat cubic_s_value(unsigned k, const rat& p, const rat& q);

// Taylor coefficient of x^{2n} in x/sin(x) (1, 1/6, 7/360, 31/15120, ...).
rat x_over_sin_coefficient(unsigned n);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;
  void pass(const std::string& what);
  void fail(const std::string& what, const std::string& got, const std::string& expected);
  void merge(const CheckReport& o);
};

// The three specialization checks.  `rec` must live on the standard parameter
// ring with at least trunc/2 parameters; each check builds the hierarchy at
// the given truncation and compares exactly against its target equations.
CheckReport ilw_check(HodgeRecursion& rec, int trunc);
CheckReport volterra_check(HodgeRecursion& rec, int trunc);
CheckReport cubic_check(HodgeRecursion& rec, int trunc,
                        const std::vector<std::pair<rat, rat>>& samples);

// Standard-form monomial basis at order eps^n (n >= 2 even): for n = 2 the
// single monomial w_1^2; from n = 4 on, products of jets w_2, w_3, ... of
// total spatial degree n whose highest-derivative factor appears at least
// twice and which contain no w_1 factor.
std::vector<DiffPoly> standard_form_monomials(const context_ptr& ctx, int n);

struct NormalFormResult {
  bool ok = true;
  std::vector<std::string> lines;
  // Solved standard-form coefficients (jet-free polynomials in s):
  // h_standard = w^3/6 - (eps^2/24) a0 w_1^2 + eps^4 a1 w_2^2
  //              + eps^6 (a2 w_2^3 + b1 w_3^2) + ...
  DiffPoly a0, a1, a2, b1;
  // The normal Miura transformation found: w~ = w + eps^2 dx^2(B).
  EpsSeries B;
  // The full reduced density, in the standard basis.
  EpsSeries standard;
};

// Reduces the density of the first deformed Hamiltonian to standard form.
NormalFormResult normal_form_h1(HodgeRecursion& rec, int trunc);

// Runs normal_form_h1 and verifies the solved coefficients against the
// expected values, the b_1 = -240 a_1^2/(7 a_0) relation and the parameter
// correspondence s_1 = -120 a_1, s_2 = 8294400 a_1^3 - 1728 a_2.
CheckReport normal_form_check(HodgeRecursion& rec, int trunc);

}  // namespace hodge

#endif  // HODGE_SPECIALIZATIONS_HPP
