// Scratch driver for the property suites; deleted before final assembly.
#include <chrono>
#include <cstdio>

#include "hodge/property_suites.hpp"

using namespace hodge;

int main() {
  auto t0 = std::chrono::steady_clock::now();
  context_ptr ctx = make_context(4);
  HodgeRecursion rec(ctx);
  int failures = 0;
  for (const auto& s : core_property_suites(rec, 20260819ULL)) {
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::printf("%-32s %s  (%ld cases, %ld ms elapsed)\n", s.name.c_str(),
                s.ok ? "ok" : "FAILED", s.cases, ms);
    if (!s.ok) {
      ++failures;
      for (const auto& f : s.failures) std::printf("    %s\n", f.c_str());
    }
  }
  return failures ? 1 : 0;
}
