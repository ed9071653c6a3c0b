#include "hodge/property_suites.hpp"

#include <random>
#include <utility>

#include "hodge/lambda_extract.hpp"
#include "hodge/point_frobenius.hpp"

namespace hodge {

namespace {

constexpr std::size_t kMaxFailures = 8;

// Small random polynomial: a handful of terms over v..v3 (Laurent v_1),
// two parameters, an optional log factor and — in exp rings — an X power.
DiffPoly random_poly(std::mt19937_64& rng, const context_ptr& ctx) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<int> laurent(-2, 2);
  std::uniform_int_distribution<int> logexp(0, 1);
  DiffPoly out = DiffPoly::zero(ctx);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    JetMonomial m;
    m.par = {static_cast<int32_t>(small(rng)), static_cast<int32_t>(small(rng))};
    m.jet = {static_cast<int32_t>(small(rng)), static_cast<int32_t>(laurent(rng)),
             static_cast<int32_t>(small(rng)), static_cast<int32_t>(small(rng))};
    m.lg = static_cast<int32_t>(logexp(rng));
    if (ctx->has_exp()) m.ex = static_cast<int32_t>(small(rng));
    m.normalize();
    int c = num(rng);
    if (c == 0) c = 7;
    out += DiffPoly::monomial(ctx, std::move(m), rational(c, den(rng)));
  }
  return out;
}

std::string both(const DiffPoly& a, const DiffPoly& b) {
  return "\n      left:  " + a.to_text() + "\n      right: " + b.to_text();
}

}  // namespace

void SuiteResult::fail(std::string line) {
  ok = false;
  if (failures.size() < kMaxFailures) failures.push_back(std::move(line));
}

SuiteResult ring_axioms_suite(std::uint64_t seed, long cases) {
  SuiteResult res;
  res.name = "ring-axioms";
  std::mt19937_64 rng(seed);
  const context_ptr plain = make_context(2);
  // exp ring with X = e^{3 s1 v}: exercises the parameter-dependent exponent
  const context_ptr expr = with_exp(make_context(2), rat(3), {1, 0});
  for (long i = 0; i < cases; ++i) {
    const context_ptr& ctx = (i % 4 == 3) ? expr : plain;
    const DiffPoly a = random_poly(rng, ctx);
    const DiffPoly b = random_poly(rng, ctx);
    const DiffPoly c = random_poly(rng, ctx);
    ++res.cases;
    if (!((a + b) + c == a + (b + c))) res.fail("addition associativity" + both(a, b));
    if (!((a * b) * c == a * (b * c))) res.fail("multiplication associativity" + both(a, b));
    if (!(a * b == b * a)) res.fail("multiplication commutativity" + both(a, b));
    if (!(a * (b + c) == a * b + a * c)) res.fail("distributivity" + both(a, b));
    if (!((a - a).is_zero())) res.fail("additive inverse: " + a.to_text());
    if (!(a.dx() * b + a * b.dx() == (a * b).dx()))
      res.fail("Leibniz rule for d_x" + both(a, b));
    if (!(DiffPoly::parse(ctx, a.to_text()) == a))
      res.fail("text round trip: " + a.to_text());
    if (!(DiffPoly::from_json(ctx, a.to_json()) == a))
      res.fail("JSON round trip: " + a.to_text());
  }
  return res;
}

SuiteResult omega_shift_suite(int pq_max, int s_max) {
  SuiteResult res;
  res.name = "omega-shift-identity";
  const context_ptr ctx = make_context(0);
  for (int p = 0; p <= pq_max; ++p)
    for (int q = 0; q <= pq_max; ++q)
      for (int s = 1; s <= s_max; ++s) {
        ++res.cases;
        DiffPoly lhs = omega(ctx, static_cast<unsigned>(p + s), static_cast<unsigned>(q));
        const DiffPoly swap = omega(ctx, static_cast<unsigned>(p), static_cast<unsigned>(q + s));
        lhs = (s % 2 == 1) ? lhs + swap : lhs - swap;
        DiffPoly rhs = DiffPoly::zero(ctx);
        for (int l = 0; l <= s - 1; ++l) {
          const DiffPoly term = omega(ctx, static_cast<unsigned>(p), static_cast<unsigned>(l)) *
                                omega(ctx, static_cast<unsigned>(s - 1 - l), static_cast<unsigned>(q));
          rhs = (l % 2 == 0) ? rhs + term : rhs - term;
        }
        if (!(lhs == rhs))
          res.fail("p=" + std::to_string(p) + " q=" + std::to_string(q) +
                   " s=" + std::to_string(s) + both(lhs, rhs));
      }
  return res;
}

SuiteResult omega_pairing_suite(int n_max) {
  SuiteResult res;
  res.name = "omega-alternating-pairing";
  const context_ptr ctx = make_context(0);
  for (int n = 0; n <= n_max; ++n) {
    ++res.cases;
    DiffPoly sum = DiffPoly::zero(ctx);
    for (int p = 0; p <= n; ++p) {
      const DiffPoly term = omega(ctx, static_cast<unsigned>(p), static_cast<unsigned>(n - p));
      sum = (p % 2 == 0) ? sum + term : sum - term;
    }
    const DiffPoly want = (n == 0) ? DiffPoly::jet(ctx, 0) : DiffPoly::zero(ctx);
    if (!(sum == want)) res.fail("N=" + std::to_string(n) + both(sum, want));
  }
  return res;
}

SuiteResult theta_vanishing_suite(int lm_max, int n_max) {
  SuiteResult res;
  res.name = "theta-altsum-vanishing";
  const context_ptr ctx = make_context(0);
  PointFlows flows(ctx);
  for (int l = 0; l <= lm_max; ++l)
    for (int m = 0; m <= lm_max; ++m)
      for (int n = l + m + 1; n <= n_max; ++n) {
        ++res.cases;
        const DiffPoly sum =
            flows.alt_sum(static_cast<unsigned>(l), static_cast<unsigned>(m), static_cast<unsigned>(n));
        if (!sum.is_zero())
          res.fail("l=" + std::to_string(l) + " m=" + std::to_string(m) +
                   " N=" + std::to_string(n) + ": " + sum.to_text());
      }
  return res;
}

SuiteResult flow_commutativity_suite(std::uint64_t seed, long cases, unsigned pq_max) {
  SuiteResult res;
  res.name = "flow-commutativity";
  std::mt19937_64 rng(seed);
  const context_ptr ctx = make_context(2);
  PointFlows flows(ctx);
  std::uniform_int_distribution<unsigned> pq(0, pq_max);
  for (long i = 0; i < cases; ++i) {
    ++res.cases;
    const DiffPoly f = random_poly(rng, ctx);
    const unsigned p = pq(rng), q = pq(rng);
    const DiffPoly a = flows.tderiv(flows.tderiv(f, p), q);
    const DiffPoly b = flows.tderiv(flows.tderiv(f, q), p);
    if (!(a == b))
      res.fail("p=" + std::to_string(p) + " q=" + std::to_string(q) + " on f=" + f.to_text() +
               both(a, b));
  }
  return res;
}

SuiteResult dk_degree_suite(int m_max, int k_max) {
  SuiteResult res;
  res.name = "dk-degree-laws";
  const context_ptr ctx = make_context(0);
  PointFlows flows(ctx);
  for (int k = 1; k <= k_max; ++k)
    for (int m = 0; m <= m_max; ++m) {
      ++res.cases;
      const DiffPoly d = flows.dk_on_jet(static_cast<unsigned>(k), static_cast<unsigned>(m));
      if (d.is_zero()) continue;
      const long db = d.degbar_max().value();
      if (db > m - 2 * k)
        res.fail("degbar(D_" + std::to_string(k) + " v^(" + std::to_string(m) +
                 ")) = " + std::to_string(db) + " exceeds " + std::to_string(m - 2 * k));
      if (!d.is_deg_homogeneous(m))
        res.fail("deg(D_" + std::to_string(k) + " v^(" + std::to_string(m) +
                 ")) != " + std::to_string(m) + ": " + d.to_text());
    }
  return res;
}

SuiteResult extra_stage_suite(HodgeRecursion& rec, unsigned g_max) {
  SuiteResult res;
  res.name = "extra-stage-invariance";
  for (unsigned g = 1; g <= g_max; ++g) {
    ++res.cases;
    if (!rec.verify_extra_stage(g))
      res.fail("stage " + std::to_string(g + 1) + " changed the genus-" + std::to_string(g) +
               " potential");
  }
  return res;
}

SuiteResult potential_grading_suite(HodgeRecursion& rec, unsigned g_max) {
  SuiteResult res;
  res.name = "potential-gradation";
  {
    // genus 1 is the lone exception to both laws (a bare-v term of weight
    // one); pin it to its closed form instead
    ++res.cases;
    const context_ptr& ctx = rec.context();
    const DiffPoly h1 = DiffPoly::log_v1(ctx) * rat(1, 24) -
                        DiffPoly::jet(ctx, 0) * DiffPoly::param(ctx, 0) * rat(1, 2);
    if (!(rec.potential(1) == h1))
      res.fail("H_1 != log(v_x)/24 - s_1 v/2: " + rec.potential(1).to_text());
  }
  for (unsigned g = 2; g <= g_max; ++g) {
    ++res.cases;
    const DiffPoly& h = rec.potential(g);
    if (!h.is_deg_homogeneous(2 * static_cast<long>(g) - 2))
      res.fail("deg H_" + std::to_string(g) + " != " + std::to_string(2 * g - 2));
    const long db = h.degbar_max().value();
    if (db > 3 * static_cast<long>(g) - 3)
      res.fail("degbar H_" + std::to_string(g) + " = " + std::to_string(db) + " exceeds " +
               std::to_string(3 * g - 3));
    if (!h.pdiff(0).is_zero())
      res.fail("H_" + std::to_string(g) + " depends on bare v: d/dv = " + h.pdiff(0).to_text());
  }
  return res;
}

SuiteResult hierarchy_structure_suite(HodgeRecursion& rec, int trunc) {
  SuiteResult res;
  res.name = "hierarchy-structure";
  HierarchyBuilder hb(rec, trunc);
  for (unsigned p = 0; p <= 3; ++p)
    for (unsigned q = p + 1; q <= 3; ++q) {
      if (p >= 1) {
        ++res.cases;
        if (!hb.check_flow_commute(p, q))
          res.fail("flows " + std::to_string(p) + " and " + std::to_string(q) +
                   " do not commute");
      }
      ++res.cases;
      if (!hb.check_tau_symmetry(p, q))
        res.fail("tau-symmetry fails for (p, q) = (" + std::to_string(p) + ", " +
                 std::to_string(q) + ")");
    }
  ++res.cases;
  if (!hb.check_operator_skew()) res.fail("Hamiltonian operator is not skew-adjoint");
  return res;
}

SuiteResult extraction_consistency_suite(HodgeRecursion& rec, unsigned g_max) {
  SuiteResult res;
  res.name = "extraction-overdetermination";
  LambdaExtractor ext(rec);
  for (unsigned g = 2; g <= g_max; ++g) {
    ++res.cases;
    const GfExtraction& e = ext.extraction(g);
    if (!e.consistent)
      res.fail("genus-" + std::to_string(g) + " extraction system is inconsistent");
    if (e.n_equations <= e.n_masks)
      res.fail("genus-" + std::to_string(g) + " system is not overdetermined: " +
               std::to_string(e.n_equations) + " equations for " + std::to_string(e.n_masks) +
               " unknowns");
  }
  return res;
}

std::vector<SuiteResult> core_property_suites(HodgeRecursion& rec, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  out.push_back(ring_axioms_suite(seed, 1200));
  out.push_back(omega_shift_suite(6, 6));
  out.push_back(omega_pairing_suite(12));
  out.push_back(theta_vanishing_suite(8, 8));
  out.push_back(flow_commutativity_suite(seed ^ 0x9e3779b97f4a7c15ULL, 200, 4));
  out.push_back(dk_degree_suite(10, 3));
  out.push_back(extra_stage_suite(rec, 3));
  out.push_back(potential_grading_suite(rec, 4));
  out.push_back(hierarchy_structure_suite(rec, 4));
  out.push_back(extraction_consistency_suite(rec, 3));
  return out;
}

}  // namespace hodge
