#ifndef HODGE_TESTS_TEST_UTIL_HPP
#define HODGE_TESTS_TEST_UTIL_HPP

// Shared helpers for the unit-test binary: doctest stringification of the
// engine's value types, and lazily constructed shared fixtures so the
// expensive objects (fitted free energies, Hodge potentials) are computed
// once per test run instead of once per test case.

#include "doctest.h"
#include "hodge/hodge_recursion.hpp"
#include "hodge/jet_ring.hpp"
#include "hodge/tseries.hpp"

namespace doctest {

template <>
struct StringMaker<mpq_class> {
  static String convert(const mpq_class& x) { return hodge::to_string(x).c_str(); }
};

template <>
struct StringMaker<mpz_class> {
  static String convert(const mpz_class& x) { return x.get_str().c_str(); }
};

template <>
struct StringMaker<hodge::DiffPoly> {
  static String convert(const hodge::DiffPoly& p) { return p.to_text().c_str(); }
};

template <>
struct StringMaker<hodge::TSeries> {
  static String convert(const hodge::TSeries& s) {
    std::string out = "tseries[" + std::to_string(s.terms().size()) + " terms:";
    std::size_t shown = 0;
    for (const auto& [k, c] : s.terms()) {
      if (++shown > 6) {
        out += " ...";
        break;
      }
      out += " (";
      for (std::size_t i = 0; i < k.size(); ++i)
        out += (i ? "," : "") + std::to_string(k[i]);
      out += ")*" + hodge::to_string(c);
    }
    return (out + "]").c_str();
  }
};

}  // namespace doctest

namespace testfx {

// Standard-ring recursion with three parameters, shared across test files.
// Free energies and potentials accumulate in its memo tables, so the genus-3
// objects are fitted at most once per run of the binary.
hodge::HodgeRecursion& rec3();
const hodge::context_ptr& ctx3();

}  // namespace testfx

#endif  // HODGE_TESTS_TEST_UTIL_HPP
