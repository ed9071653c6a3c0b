// Throwaway driver for the lambda extraction (deleted before final build).
#include <chrono>
#include <iostream>

#include "hodge/lambda_extract.hpp"

using namespace hodge;
using clk = std::chrono::steady_clock;

static std::string mask_name(const LambdaMask& m) {
  std::string s;
  for (unsigned i : m) s += "l" + std::to_string(i);
  return s.empty() ? "1" : s;
}

int main(int argc, char** argv) {
  unsigned maxg = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 3;
  auto ctx = make_context(maxg);
  HodgeRecursion rec(ctx);
  LambdaExtractor ex(rec);

  // lambda-ring sanity at g = 2
  {
    LambdaCalculus lc(2);
    std::cout << "ch_2 (must be empty): " << lc.chern(2).size() << " terms\n";
    std::cout << "ch_4 (must be empty): " << lc.chern(4).size() << " terms\n";
    std::cout << "ch_3 terms:";
    for (const auto& [m, c] : lc.chern(3))
      std::cout << "  " << to_string(c) << "*" << mask_name(m);
    std::cout << "\n";
    std::cout << "lambda_1^3 reduction:";
    for (const auto& [m, c] : lc.reduce({1, 1, 1}))
      std::cout << "  " << to_string(c) << "*" << mask_name(m);
    std::cout << "\n";
  }

  for (unsigned g = 2; g <= maxg; ++g) {
    auto t0 = clk::now();
    const GfExtraction& e = ex.extraction(g);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clk::now() - t0).count();
    std::size_t nonzero = 0;
    for (const auto& [m, f] : e.gf)
      if (!f.is_zero()) ++nonzero;
    std::cout << "== genus " << g << ": " << e.n_equations << " equations, " << e.n_masks
              << " masks (" << nonzero << " nonzero), consistent="
              << (e.consistent ? "yes" : "NO") << "  [" << ms << " ms]\n";
    for (const auto& [m, f] : e.gf) {
      std::cout << "   GF[" << mask_name(m) << "] = "
                << (f.size() <= 4 ? f.to_text() : std::to_string(f.size()) + " terms")
                << "\n";
    }
    // triple-lambda closed form
    DiffPoly expected = DiffPoly::jet(ctx, 1, 2 * static_cast<int>(g) - 2) *
                        LambdaExtractor::triple_top_constant(g);
    LambdaMask triple;
    for (unsigned i = g - 2; i <= g; ++i)
      if (i >= 1) triple.push_back(i);
    std::cout << "   triple " << mask_name(triple) << " closed form: "
              << (ex.gf(g, triple) == expected ? "MATCH" : "MISMATCH") << "\n";
  }

  std::cout << "hodge_number(2, l1^3)   = " << to_string(ex.hodge_number(2, {1, 1, 1}))
            << "  (expect 1/2880)\n";
  if (maxg >= 3) {
    std::cout << "hodge_number(3, l1l2l3) = " << to_string(ex.hodge_number(3, {1, 2, 3}))
              << "  (expect 1/1451520)\n";
    std::cout << "hodge_number(3, l1^6)   = " << to_string(ex.hodge_number(3, {1, 1, 1, 1, 1, 1}))
              << "  (expect 1/90720)\n";
  }
  if (maxg >= 4) {
    std::cout << "hodge_number(4, l2l3l4) = " << to_string(ex.hodge_number(4, {2, 3, 4}))
              << "  (expect 1/87091200)\n";
    std::cout << "hodge_number(4, l1^9)   = "
              << to_string(ex.hodge_number(4, {1, 1, 1, 1, 1, 1, 1, 1, 1}))
              << "  (expect 1/113400)\n";
  }
  return 0;
}
