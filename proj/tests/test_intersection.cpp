// The psi-class intersection-number oracle: pinned values, the genus-0
// closed form, the string and dilaton equations on random brackets, and the
// generating-series packaging.
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <random>

#include "hodge/intersection.hpp"
#include "test_util.hpp"

using namespace hodge;

TEST_SUITE("intersection numbers") {
  TEST_CASE("pinned correlators") {
    IntersectionOracle oracle;
    CHECK(oracle.correlator(0, {0, 0, 0}) == rat(1));
    CHECK(oracle.correlator(0, {0, 0, 0, 1}) == rat(1));
    CHECK(oracle.correlator(0, {0, 0, 1, 1}) == rat(1));
    CHECK(oracle.correlator(0, {0, 0, 0, 0, 2}) == rat(1));
    CHECK(oracle.correlator(1, {1}) == rational(1, 24));
    CHECK(oracle.correlator(1, {0, 2}) == rational(1, 24));
    CHECK(oracle.correlator(1, {1, 1}) == rational(1, 24));
    CHECK(oracle.correlator(2, {4}) == rational(1, 1152));
    CHECK(oracle.correlator(2, {2, 3}) == rational(29, 5760));
    CHECK(oracle.correlator(2, {0, 5}) == rational(1, 1152));
    // <tau_{3g-2}>_g = 1/(24^g g!)
    rat expected(1);
    for (unsigned g = 1; g <= 4; ++g) {
      expected /= rat(24) * rat(g);
      CHECK(oracle.correlator(g, {3 * g - 2}) == expected);
    }
    // dimension mismatch and unstable ranges give zero
    CHECK(oracle.correlator(0, {0, 0}) == 0);
    CHECK(oracle.correlator(0, {1, 1, 1}) == 0);
    CHECK(oracle.correlator(1, {}) == 0);
    CHECK(oracle.correlator(2, {3}) == 0);
  }

  TEST_CASE("genus-0 closed form matches the recursion") {
    IntersectionOracle oracle;
    std::mt19937_64 rng(7);
    for (int c = 0; c < 100; ++c) {
      const unsigned n = 3 + rng() % 4;  // 3..6 insertions
      std::vector<unsigned> ks(n, 0);
      for (unsigned i = 0; i + 3 < n; ++i) ++ks[rng() % n];  // composition of n-3
      CHECK(oracle.correlator(0, ks) == IntersectionOracle::genus0_closed_form(ks));
    }
  }

  TEST_CASE("string and dilaton equations on random brackets") {
    IntersectionOracle oracle;
    std::mt19937_64 rng(20260819);
    long nontrivial = 0;
    for (int c = 0; c < 200; ++c) {
      const unsigned g = rng() % 4;
      const unsigned n = 1 + rng() % 4;
      const long dim = 3 * static_cast<long>(g) - 2 + static_cast<long>(n);
      if (dim < 0) continue;
      // random composition of dim = 3g-3+(n+1) into n parts: the bracket
      // <tau_0 tau_{k_1}..tau_{k_n}> is then dimensionally nontrivial
      std::vector<unsigned> ks(n, 0);
      for (long i = 0; i < dim; ++i) ++ks[rng() % n];
      // string equation: <tau_0 prod tau_{k_i}> = sum_i <.. tau_{k_i - 1} ..>,
      // valid whenever the undecorated bracket is itself stable (the lone
      // exception <tau_0^3>_0 = 1 has 2g-2+n = 0)
      if (2 * static_cast<long>(g) - 2 + static_cast<long>(n) > 0) {
        std::vector<unsigned> with0 = ks;
        with0.insert(with0.begin(), 0);
        rat rhs(0);
        for (unsigned i = 0; i < n; ++i) {
          if (ks[i] == 0) continue;
          std::vector<unsigned> lowered = ks;
          --lowered[i];
          rhs += oracle.correlator(g, lowered);
        }
        CHECK(oracle.correlator(g, with0) == rhs);
        if (rhs != 0) ++nontrivial;
      }

      // dilaton equation: <tau_1 prod tau_{k_i}> = (2g-2+n) <prod tau_{k_i}>
      // on brackets with sum k_i = 3g-3+n
      if (dim >= 1) {
        std::vector<unsigned> ks2(n, 0);
        for (long i = 0; i < dim - 1; ++i) ++ks2[rng() % n];
        std::vector<unsigned> with1 = ks2;
        with1.insert(with1.begin(), 1);
        CHECK(oracle.correlator(g, with1) ==
              rat(2 * static_cast<long>(g) - 2 + static_cast<long>(n)) *
                  oracle.correlator(g, ks2));
      }
    }
    // the sample must exercise genuinely nonzero brackets
    CHECK(nontrivial > 50);
  }

  TEST_CASE("free-energy series coefficients") {
    IntersectionOracle oracle;
    // F_g packs <tau_{p_1}..tau_{p_n}>_g / (multiplicity factorials)
    const TSeries f0 = oracle.free_energy_series(0, 2, 4);
    CHECK(f0.coeff({3, 0}) == rational(1, 6));    // <tau_0^3>/3!
    CHECK(f0.coeff({3, 1}) == rational(1, 6));    // <tau_0^3 tau_1>/3!
    const TSeries f1 = oracle.free_energy_series(1, 2, 3);
    CHECK(f1.coeff({0, 1}) == rational(1, 24));   // <tau_1>
    CHECK(f1.coeff({0, 2}) == rational(1, 48));   // <tau_1^2>/2!
    const TSeries f2 = oracle.free_energy_series(2, 1, 1);
    CHECK(f2.is_zero());  // no genus-2 bracket in tau_0 alone at degree 1
  }

  TEST_CASE("disk cache round trip") {
    char tmpl[] = "/tmp/hodge-oracle-XXXXXX";
    REQUIRE(mkdtemp(tmpl) != nullptr);
    const std::string path = std::string(tmpl) + "/correlators.json";
    IntersectionOracle a;
    const rat v = a.correlator(2, {2, 3});
    a.save_cache(path);
    IntersectionOracle b;
    b.load_cache(path);
    CHECK(b.memo_size() == a.memo_size());
    CHECK(b.correlator(2, {2, 3}) == v);
    std::remove(path.c_str());
    rmdir(tmpl);
  }
}
