// Scratch: psi-decorated Hodge numbers against the lambda_g closed form
//   <tau_{k_1}..tau_{k_n} lambda_g>_g = multinomial(2g-3+n; k) * b_g,
//   b_g = (2^{2g-1}-1)/2^{2g-1} * |B_{2g}|/(2g)!,
// and pure-psi numbers against the DVV oracle.
#include <cstdio>
#include <string>
#include <vector>

#include "hodge/free_energy.hpp"
#include "hodge/hodge_recursion.hpp"
#include "hodge/intersection.hpp"
#include "hodge/lambda_extract.hpp"

using namespace hodge;

static int failures = 0;
static void check(const std::string& what, const rat& got, const rat& expected) {
  if (got == expected) {
    std::printf("ok   %-40s %s\n", what.c_str(), got.get_str().c_str());
  } else {
    std::printf("FAIL %-40s got %s expected %s\n", what.c_str(), got.get_str().c_str(),
                expected.get_str().c_str());
    ++failures;
  }
}

static rat bg(unsigned g) {
  rat b = bernoulli(2 * g);
  if (b < 0) b = -b;
  const rat pw(bigint(1) << (2 * g - 1));
  return (pw - 1) / pw * b / rat(factorial(2 * g));
}

int main() {
  context_ptr ctx = make_context(3);
  HodgeRecursion rec(ctx);
  LambdaExtractor ex(rec);
  IntersectionOracle oracle;

  check("<tau_0 lambda_1>_1", ex.hodge_number(1, {1}, {0}), rat(1, 24));
  check("<tau_0 tau_1 lambda_1>_1", ex.hodge_number(1, {1}, {0, 1}), rat(1, 24));
  check("<tau_2 lambda_2>_2", ex.hodge_number(2, {2}, {2}), bg(2));
  check("<tau_0 tau_3 lambda_2>_2", ex.hodge_number(2, {2}, {0, 3}), bg(2));
  check("<tau_1 tau_2 lambda_2>_2", ex.hodge_number(2, {2}, {1, 2}), rat(3) * bg(2));
  check("<tau_4 lambda_3>_3", ex.hodge_number(3, {3}, {4}), bg(3));
  check("<tau_1 lambda_2>_2 (dim mismatch)", ex.hodge_number(2, {2}, {1}), rat(0));
  check("<tau_4>_2 vs oracle", ex.hodge_number(2, {}, {4}), oracle.correlator(2, {4}));
  check("<tau_2 tau_3>_2 vs oracle", ex.hodge_number(2, {}, {2, 3}),
        oracle.correlator(2, {2, 3}));
  check("<tau_0 tau_1 tau_1 lambda_1 psi>_1", ex.hodge_number(1, {1}, {0, 1, 1}),
        ex.hodge_number(1, {1}, {1, 0, 1}));
  return failures;
}
