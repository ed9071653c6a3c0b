// Scratch driver for the specialization checks; deleted before final assembly.
#include <chrono>
#include <cstdio>

#include "hodge/specializations.hpp"

using namespace hodge;

static int failures = 0;
static std::chrono::steady_clock::time_point t0;

static long ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

static void report(const char* name, const CheckReport& rep, bool verbose) {
  if (!rep.ok) ++failures;
  std::printf("%s: %s (%ld ms)\n", name, rep.ok ? "ok" : "FAILED", ms());
  if (verbose || !rep.ok)
    for (const auto& l : rep.lines) std::printf("%s\n", l.c_str());
}

int main() {
  t0 = std::chrono::steady_clock::now();
  context_ptr ctx = make_context(3);
  HodgeRecursion rec(ctx);

  report("ilw", ilw_check(rec, 4), true);
  report("volterra", volterra_check(rec, 4), true);
  report("cubic", cubic_check(rec, 6, {{rat(1), rat(1)}, {rat(-2), rat(1)}, {rat(0), rat(1)}, {rat(1), rat(2)}}), false);
  report("normal form", normal_form_check(rec, 6), true);

  std::printf("total %ld ms, failures %d\n", ms(), failures);
  return failures ? 1 : 0;
}
