// Throwaway driver for the Hodge recursion (deleted before final build).
#include <chrono>
#include <iostream>

#include "hodge/hodge_recursion.hpp"

using namespace hodge;
using clk = std::chrono::steady_clock;

int main(int argc, char** argv) {
  unsigned maxg = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 2;
  auto ctx = make_context(maxg < 2 ? 2 : maxg);
  HodgeRecursion rec(ctx);

  for (unsigned g = 1; g <= maxg; ++g) {
    auto t0 = clk::now();
    const DiffPoly& h = rec.potential(g);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clk::now() - t0).count();
    std::cout << "== H_" << g << "  (" << h.size() << " terms, " << ms << " ms)\n";
    if (g <= 2) std::cout << h.to_text() << "\n";
    auto db = h.degbar_max();
    std::cout << "   degbar_max = " << (db ? std::to_string(*db) : "none")
              << "  (budget " << 3 * static_cast<long>(g) - 3 << ")\n";
    if (g >= 2) {
      DiffPoly dv = h.pdiff(0);
      std::cout << "   dH/dv == 0: " << (dv.is_zero() ? "yes" : "NO") << "\n";
      const DiffPoly& f = rec.free_energy(g);
      std::cout << "   F_" << g << " deg-homog 2g-2: "
                << (f.is_deg_homogeneous(2 * static_cast<long>(g) - 2) ? "yes" : "NO") << "\n";
      if (g == 2) std::cout << "   F_2 = " << f.to_text() << "\n";
    }
  }
  return 0;
}
