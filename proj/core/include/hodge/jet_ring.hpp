#ifndef HODGE_JET_RING_HPP
#define HODGE_JET_RING_HPP

// Exact-arithmetic ring of differential polynomials.
//
// Generators:
//   * jet variables v = v^(0), v1 = v_x, v2 = v_xx, ..., where all exponents
//     are nonnegative except the v1 slot, which is allowed to be negative
//     (the ring is Laurent in v_x);
//   * an optional transcendental generator L = log(v_x), characterized by
//     d/dx L = v2/v1 and ∂L/∂v1 = 1/v1;
//   * an optional transcendental generator X = exp(mu*v) for a fixed
//     coefficient-ring monomial mu, characterized by d/dx X = mu*v1*X and
//     ∂X/∂v = mu*X.
// Coefficients live in Q[parameters]; parameter names and the exp-generator
// coefficient mu are fixed per ring context.
//
// Gradations:
//   * deg  (spatial):  deg v^(m) = m (signed for the Laurent slot),
//                      deg v = deg L = deg X = deg s_k = 0;
//   * degbar (auxiliary): degbar v^(j) = j-1 for j >= 2, degbar s_k as
//     declared by the context (2k-1 for the standard parameter ring), and
//     degbar v = degbar v1 = degbar L = degbar X = 0.
//
// Canonical form: terms are kept in a std::map under a documented strict
// total order (graded-lex on jets, then the remaining generators, then
// parameters; see JetMonomial::compare).  Container order, printing order and
// serialization order coincide, so equal polynomials always print
// byte-identically.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

struct JetContext;
using context_ptr = std::shared_ptr<const JetContext>;

struct JetContext {
  // Parameter names, e.g. {"s1","s2"}.  Restricted to the serializable
  // alphabet: "s<k>", "a<k>", "p", "q" (see canonical text grammar).
  std::vector<std::string> params;
  // degbar weight of each parameter (2k-1 for the standard ring).
  std::vector<long> param_degbar;
  // exp-generator X = exp(mu_coef * s^mu_par * v); enabled iff mu_coef != 0.
  rat mu_coef = 0;
  std::vector<int32_t> mu_par;

  bool has_exp() const { return mu_coef != 0; }
  bool same_ring(const JetContext& o) const;
};

// Standard parameter ring Q[s1..sK] with degbar s_k = 2k-1; no X generator.
context_ptr make_context(unsigned nparams);
// Custom parameter ring; degbar weights default to zero.
context_ptr make_context(std::vector<std::string> params,
                         std::vector<long> param_degbar = {});
// Same ring with the exp-generator X = exp(mu_coef * prod params^mu_par * v).
context_ptr with_exp(const context_ptr& base, const rat& mu_coef,
                     std::vector<int32_t> mu_par);

struct JetMonomial {
  std::vector<int32_t> par;  // parameter exponents (>= 0), trailing zeros trimmed
  std::vector<int32_t> jet;  // jet[m] = exponent of v^(m); jet[1] may be negative
  int32_t lg = 0;            // exponent of L (>= 0)
  int32_t ex = 0;            // exponent of X (>= 0)

  void normalize();  // trims trailing zeros
  bool operator==(const JetMonomial&) const = default;

  // Strict total order defining the canonical form:
  //  1. total jet exponent sum (signed) ascending;
  //  2. jet exponent vector lexicographically (v, v1, v2, ...): first
  //     differing slot, smaller exponent first;
  //  3. L exponent, then X exponent ascending;
  //  4. parameter exponent vector lexicographically ascending.
  static int compare(const JetMonomial& a, const JetMonomial& b);
  bool operator<(const JetMonomial& b) const { return compare(*this, b) < 0; }

  long deg() const;     // sum of m*jet[m], m >= 1
  long degbar(const JetContext& ctx) const;
  long total_param_degree() const;
};

class DiffPoly {
 public:
  using term_map = std::map<JetMonomial, rat>;

  DiffPoly() = default;  // zero in a null context; usable only as a target of assignment
  explicit DiffPoly(context_ptr ctx) : ctx_(std::move(ctx)) {}

  static DiffPoly zero(context_ptr ctx) { return DiffPoly(std::move(ctx)); }
  static DiffPoly constant(context_ptr ctx, const rat& c);
  // v^(m) to the given power (power may be negative only for m == 1).
  static DiffPoly jet(context_ptr ctx, unsigned m, int power = 1);
  // parameter k (0-based index into ctx->params) to the given power (>= 0).
  static DiffPoly param(context_ptr ctx, unsigned k, int power = 1);
  static DiffPoly log_v1(context_ptr ctx);
  static DiffPoly exp_v(context_ptr ctx, int power = 1);
  static DiffPoly monomial(context_ptr ctx, JetMonomial m, const rat& c);

  const context_ptr& context() const { return ctx_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const DiffPoly& o) const;
  bool operator!=(const DiffPoly& o) const { return !(*this == o); }

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly operator-() const;
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }
  DiffPoly& operator*=(const rat& c);
  friend DiffPoly operator*(DiffPoly a, const rat& c) { return a *= c; }
  friend DiffPoly operator*(const rat& c, DiffPoly a) { return a *= c; }
  DiffPoly pow(unsigned e) const;

  // Total x-derivative d/dx (acts on jets by v^(m) -> v^(m+1), on L by
  // v2/v1, on X by mu*v1*X; parameters are x-independent constants).
  DiffPoly dx() const;
  // Partial derivative with respect to v^(m); the L and X conventions are
  // baked in so chain rules through log v_x and exp(mu v) are automatic.
  DiffPoly pdiff(unsigned m) const;
  // Partial derivative with respect to parameter k.
  DiffPoly pdiff_param(unsigned k) const;

  // Gradation queries (nullopt for the zero polynomial).
  std::optional<long> deg_min() const;
  std::optional<long> deg_max() const;
  bool is_deg_homogeneous(long d) const;
  std::optional<long> degbar_max() const;

  // Highest m with some v^(m) present (L counts as order >= 1, X as >= 0);
  // returns -1 for jet-free polynomials.
  int max_jet_order() const;
  bool has_log() const;
  bool has_exp_factor() const;
  bool depends_on_params() const;
  // Sub-sum of terms with no jet variables, no L, no X (pure coefficient part).
  DiffPoly jet_free_part() const;

  // Coefficient of params[k]^j, with that power stripped from the result.
  DiffPoly coeff_of_param_power(unsigned k, unsigned j) const;
  // Largest exponent of params[k] (0 if absent or zero polynomial).
  int deg_param(unsigned k) const;
  // Drops every term containing params[k] with k >= keep (0-based): i.e.
  // sets s_{keep+1} = s_{keep+2} = ... = 0.
  DiffPoly restrict_params(unsigned keep) const;

  // Ring homomorphism sending params[k] -> images[k] (jet-free polynomials
  // over the new context); jets, L pass through unchanged.  Requires no X.
  DiffPoly subst_params(const context_ptr& new_ctx,
                        const std::vector<DiffPoly>& images) const;

  // Substitution v^(m) -> c * v^(m) for every m (including m = 0).  L must
  // be absent (log(c*v1) leaves the ring); X is preserved verbatim, so the
  // caller must pass a new context whose mu equals c * (old mu) for the
  // result to mean exp(mu_old * v_old) = exp(mu_new * v_new).
  DiffPoly rescale_field(const rat& c, const context_ptr& new_ctx) const;

  // Evaluation at the topological point t = 0: v = 0, v1 = 1, v^(m>=2) = 0,
  // L = 0, X = 1.  Requires a parameter-free polynomial.
  rat eval_t0() const;

  // --- canonical serialization ---------------------------------------------
  // Canonical text: terms in container order joined by " + " / " - ", each
  // "(|coef|)" followed by "*factor" pieces (params in context order, then
  // v, v1, v2, ..., then L, then X); "^e" omitted when e = 1; the zero
  // polynomial prints as "0".  Examples: "(1)*s1*v1^2", "(11/480)*v1^-2*v2^2".
  std::string to_text() const;
  // Whitespace-insensitive inverse of to_text (accepts any term order and
  // signed coefficients inside the parentheses).
  static DiffPoly parse(const context_ptr& ctx, const std::string& text);

  std::string to_json() const;  // mirrors the term list; schema in docs/
  static DiffPoly from_json(const context_ptr& ctx, const std::string& json_text);

  std::string to_latex() const;

 private:
  void add_term(JetMonomial m, const rat& c);  // accumulates, drops zeros
  context_ptr ctx_;
  term_map terms_;

  friend class EpsSeries;
};

// Throws std::invalid_argument unless both polynomials share a ring.
void require_same_context(const DiffPoly& a, const DiffPoly& b);

}  // namespace hodge

#endif  // HODGE_JET_RING_HPP
