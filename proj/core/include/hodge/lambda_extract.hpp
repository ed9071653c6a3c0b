#ifndef HODGE_LAMBDA_EXTRACT_HPP
#define HODGE_LAMBDA_EXTRACT_HPP

// Splitting the Hodge potential into lambda-class generating functions.
//
// The parameters s_k of H_g repackage the Chern-character insertions: with
// s_k = -B_{2k}/(2k)! * sigma_{2k-1}, the potential becomes the generating
// function of integrals against exp(sum_k sigma_{2k-1} ch_{2k-1}(E)), E the
// rank-g Hodge bundle.  Since ch_{2k-1} is a polynomial in the classes
// lambda_i = c_i(E), and since products of lambdas reduce to SQUARE-FREE
// monomials by the relations ch_{even} = 0 (Mumford), every coefficient
//     alpha! * [sigma^alpha] H_g = GF[ prod_k ch_{2k-1}^{alpha_k} ]
// is a fixed rational combination of the square-free generating functions
// GF[lambda_M], M a subset of {1..g}.  Cohomological degree blocks these
// equations: alpha contributes to the block of weight sum (2k-1) alpha_k,
// and M to the block of weight sum(M).  Each block is an overdetermined
// exact linear system for its GF[lambda_M]; solvability is part of what the
// engine checks, and the solved functions feed the Hodge-number evaluations.

#include <map>
#include <vector>

#include "hodge/hodge_recursion.hpp"
#include "hodge/jet_ring.hpp"

namespace hodge {

// A square-free lambda monomial as a strictly increasing index set; {} is 1.
using LambdaMask = std::vector<unsigned>;
// A rational combination of square-free lambda monomials.
using LambdaCombo = std::map<LambdaMask, rat>;

// The lambda-ring of a fixed genus: Mumford reduction and Chern characters.
class LambdaCalculus {
 public:
  explicit LambdaCalculus(unsigned g) : g_(g) {}
  unsigned genus() const { return g_; }

  // Reduces an arbitrary multiset product prod lambda_{m_i} to square-free
  // form via lambda_k^2 = 2 sum_{i<k} (-1)^{k-i+1} lambda_i lambda_{2k-i}
  // (with lambda_0 = 1 and lambda_{>g} = 0).  Memoized.
  const LambdaCombo& reduce(std::vector<unsigned> multiset);

  // ch_m(E) as a reduced lambda combination (Newton's identities on the
  // elementary symmetric functions e_i = lambda_i).  ch_0 = g.  The even
  // characters must reduce to zero; chern(2j) returning nonzero is a bug.
  const LambdaCombo& chern(unsigned m);

  LambdaCombo multiply(const LambdaCombo& a, const LambdaCombo& b);
  LambdaCombo power(const LambdaCombo& a, unsigned e);

 private:
  const LambdaCombo& power_sum(unsigned k);  // Newton p_k, reduced
  unsigned g_;
  std::map<std::vector<unsigned>, LambdaCombo> reduce_memo_;
  std::map<unsigned, LambdaCombo> chern_memo_;
  std::map<unsigned, LambdaCombo> psum_memo_;
};

struct GfExtraction {
  unsigned genus = 0;
  std::size_t n_equations = 0;  // sigma-coefficients consumed over all blocks
  std::size_t n_masks = 0;      // square-free monomials solved for
  bool consistent = false;      // every overdetermined block closed exactly
  // GF[lambda_M] per mask, including masks whose function turns out to be 0.
  std::map<LambdaMask, DiffPoly> gf;
};

class LambdaExtractor {
 public:
  explicit LambdaExtractor(HodgeRecursion& recursion);

  // H_g with s_k replaced by -B_{2k}/(2k)! a_k, in the ring Q[a_1..a_K];
  // a_k stands for sigma_{2k-1}.
  DiffPoly sigma_form(unsigned g);

  // Solves all weight blocks of genus g.  Cached per genus.
  const GfExtraction& extraction(unsigned g);

  // GF[lambda_M]; the empty mask gives F_g.
  const DiffPoly& gf(unsigned g, const LambdaMask& mask);

  // Exact Hodge integral for an arbitrary multiset product of lambda
  // classes (Mumford-reduced first) decorated with psi-classes of the given
  // exponents: the generating function is evaluated on the topological
  // t-series and the coefficient of prod t_{p_i} is read off, times the
  // factorial of each repeated exponent.  Empty psi list = value at t = 0.
  // A violated dimension constraint simply yields 0 (the series is graded).
  rat hodge_number(unsigned g, std::vector<unsigned> lambda_multiset,
                   const std::vector<unsigned>& psi_exponents = {});

  // Closed-form constant c_g with GF[lambda_{g-2} lambda_{g-1} lambda_g]
  // = c_g v1^{2g-2}:  c_g = |B_{2g-2}| |B_{2g}| / (2 (2g-2)! (2g-2) (2g)).
  static rat triple_top_constant(unsigned g);

  HodgeRecursion& recursion() { return rec_; }
  const context_ptr& sigma_context() const { return actx_; }

 private:
  HodgeRecursion& rec_;
  context_ptr actx_;
  std::map<unsigned, GfExtraction> extractions_;
  std::map<unsigned, LambdaCalculus> calculi_;
};

}  // namespace hodge

#endif  // HODGE_LAMBDA_EXTRACT_HPP
