// The shared property suites at reduced sizes (the command-line verifier and
// the acceptance run exercise the full mandated sizes).
#include "hodge/property_suites.hpp"
#include "test_util.hpp"

using namespace hodge;
using testfx::rec3;

namespace {

void expect_clean(const SuiteResult& r) {
  INFO(r.name);
  for (const std::string& f : r.failures) INFO(f);
  CHECK(r.ok);
  CHECK(r.failures.empty());
  CHECK(r.cases > 0);
}

}  // namespace

TEST_SUITE("property suites") {
  TEST_CASE("ring axioms on random triples") {
    const SuiteResult r = ring_axioms_suite(20260819u, 50);
    expect_clean(r);
    CHECK(r.cases >= 50);
  }

  TEST_CASE("structure-function identities") {
    expect_clean(omega_shift_suite(3, 3));
    expect_clean(omega_pairing_suite(6));
    expect_clean(theta_vanishing_suite(4, 6));
  }

  TEST_CASE("flow commutativity on random polynomials") {
    expect_clean(flow_commutativity_suite(7u, 10, 3));
  }

  TEST_CASE("degree laws of the recursion operators") {
    expect_clean(dk_degree_suite(6, 2));
  }

  TEST_CASE("recursion invariances") {
    expect_clean(extra_stage_suite(rec3(), 2));
    expect_clean(potential_grading_suite(rec3(), 3));
  }

  TEST_CASE("hierarchy structure") {
    expect_clean(hierarchy_structure_suite(rec3(), 2));
  }

  TEST_CASE("extraction consistency") {
    expect_clean(extraction_consistency_suite(rec3(), 2));
  }

  TEST_CASE("seeds are reproducible, failures are reported") {
    const SuiteResult a = ring_axioms_suite(5u, 10);
    const SuiteResult b = ring_axioms_suite(5u, 10);
    CHECK(a.ok == b.ok);
    CHECK(a.cases == b.cases);
    SuiteResult r;
    r.name = "synthetic";
    r.fail("first");
    r.fail("second");
    CHECK(!r.ok);
    CHECK(r.failures.size() == 2);
  }
}
