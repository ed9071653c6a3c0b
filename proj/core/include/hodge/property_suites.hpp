#ifndef HODGE_PROPERTY_SUITES_HPP
#define HODGE_PROPERTY_SUITES_HPP

// Enumerated and randomized property suites over the engine's invariants:
// ring axioms, the structure-function identities of the point Frobenius
// manifold, recursion invariances, gradation laws, hierarchy structure and
// extraction consistency.  The suites are shared between the test binaries
// and the command-line verifier; randomized ones take an explicit seed so
// every reported run is reproducible.

#include <cstdint>
#include <string>
#include <vector>

#include "hodge/hierarchy.hpp"
#include "hodge/hodge_recursion.hpp"

namespace hodge {

struct SuiteResult {
  std::string name;
  bool ok = true;
  long cases = 0;
  std::vector<std::string> failures;  // capped at a few entries, both sides included
  void fail(std::string line);
};

// Ring axioms on random triples — associativity, commutativity,
// distributivity, additive inverse, the Leibniz rule for d_x — plus
// text and JSON round trips.  Runs on both the plain and the exp-extended
// ring.  `cases` is the number of random triples (>= 1000 in the core run).
SuiteResult ring_axioms_suite(std::uint64_t seed, long cases);

// Shift identity of the structure functions, as exact identities in v:
// Omega_{p+s,q} + (-1)^{s-1} Omega_{p,q+s}
//   = sum_{l=0}^{s-1} (-1)^l Omega_{p,l} Omega_{s-1-l,q},  0 <= p,q <= pq_max,
// 1 <= s <= s_max.
SuiteResult omega_shift_suite(int pq_max, int s_max);

// Alternating pairing: sum_{p=0}^{N} (-1)^p Omega_{p,N-p} = v delta_{N,0}
// for N <= n_max.
SuiteResult omega_pairing_suite(int n_max);

// Vanishing of the alternating theta-gradient sums whenever N > l + m,
// for all l, m <= lm_max and N <= n_max.
SuiteResult theta_vanishing_suite(int lm_max, int n_max);

// Commutativity of the t_p-flows on random differential polynomials:
// d/dt_q d/dt_p f = d/dt_p d/dt_q f for p, q <= pq_max.
SuiteResult flow_commutativity_suite(std::uint64_t seed, long cases, unsigned pq_max);

// Degree laws of the D_k operators: for every nonzero D_k(v^{(m)}) with
// m <= m_max, k <= k_max: degbar <= m - 2k and deg = m.
SuiteResult dk_degree_suite(int m_max, int k_max);

// Running one stage beyond genus g leaves the potential unchanged, g <= g_max.
SuiteResult extra_stage_suite(HodgeRecursion& rec, unsigned g_max);

// Gradation laws of the computed potentials: deg H_g = 2g - 2 homogeneously,
// degbar H_g <= 3g - 3, and (g >= 2) no bare-v dependence.
SuiteResult potential_grading_suite(HodgeRecursion& rec, unsigned g_max);

// Deformed-hierarchy structure at the given truncation: flow commutativity,
// tau-symmetry of the densities, and skew-adjointness of the Hamiltonian
// operator.
SuiteResult hierarchy_structure_suite(HodgeRecursion& rec, int trunc);

// The overdetermined lambda-extraction systems close exactly for g <= g_max,
// with strictly more equations than unknowns.
SuiteResult extraction_consistency_suite(HodgeRecursion& rec, unsigned g_max);

// The full core collection at its mandated sizes.  `rec` must live on the
// standard parameter ring with at least four parameters (the gradation suite
// inspects the genus-4 potential).
std::vector<SuiteResult> core_property_suites(HodgeRecursion& rec, std::uint64_t seed);

}  // namespace hodge

#endif  // HODGE_PROPERTY_SUITES_HPP
