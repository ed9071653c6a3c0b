#include "hodge/free_energy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hodge/linalg.hpp"

namespace hodge {

namespace {

// Multisets {j_1 >= j_2 >= ... >= 2} with sum (j_i - 1) <= budget, emitted
// auxiliary-degree ascending and, within a degree, lexicographically.
void enumerate_partitions(unsigned budget, std::vector<unsigned>& parts,
                          std::vector<std::vector<unsigned>>& out) {
  out.push_back(parts);
  const unsigned max_next = parts.empty() ? budget + 1 : parts.back();
  for (unsigned j = 2; j <= max_next && j - 1 <= budget; ++j) {
    parts.push_back(j);
    enumerate_partitions(budget - (j - 1), parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<DiffPoly> free_energy_candidates(const context_ptr& ctx, unsigned g) {
  if (g < 2) throw std::invalid_argument("free_energy_candidates: needs g >= 2");
  const unsigned budget = 3 * g - 3;

  std::vector<std::vector<unsigned>> partitions;
  std::vector<unsigned> scratch;
  enumerate_partitions(budget, scratch, partitions);
  std::stable_sort(partitions.begin(), partitions.end(),
                   [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
                     auto aux = [](const std::vector<unsigned>& p) {
                       unsigned w = 0;
                       for (unsigned j : p) w += j - 1;
                       return w;
                     };
                     const unsigned wa = aux(a), wb = aux(b);
                     if (wa != wb) return wa < wb;
                     return a < b;
                   });

  std::vector<DiffPoly> candidates;
  candidates.reserve(partitions.size());
  for (const auto& parts : partitions) {
    JetMonomial m;
    long jet_total = 0;
    unsigned top = 1;
    for (unsigned j : parts) top = std::max(top, j);
    m.jet.assign(top + 1, 0);
    for (unsigned j : parts) {
      m.jet[j] += 1;
      jet_total += j;
    }
    m.jet[1] = static_cast<int32_t>(2 * static_cast<long>(g) - 2 - jet_total);
    m.normalize();
    candidates.push_back(DiffPoly::monomial(ctx, std::move(m), rat(1)));
  }
  return candidates;
}

namespace {

// Number of time monomials in t_0..t_{nvars-1} of total degree <= maxdeg in
// the stratum sum (p-1) e_p = target; those are the rows able to carry
// information about F_g, whose correlator support sits at target = 3g-3.
std::size_t stratum_row_count(unsigned nvars, unsigned maxdeg, long target) {
  std::size_t count = 0;
  struct Walker {
    unsigned nvars, maxdeg;
    long target;
    std::size_t* count;
    void walk(unsigned from, unsigned deg, long weight) {
      if (weight == target && deg > 0) ++*count;
      if (deg == maxdeg) return;
      for (unsigned p = from; p < nvars; ++p)
        walk(p, deg + 1, weight + (static_cast<long>(p) - 1));
    }
  } walker{nvars, maxdeg, target, &count};
  walker.walk(0, 0, 0);
  return count;
}

}  // namespace

FreeEnergyFit fit_free_energy(const context_ptr& ctx, unsigned g,
                              IntersectionOracle& oracle) {
  FreeEnergyFit fit;
  fit.genus = g;

  const std::vector<DiffPoly> candidates = free_energy_candidates(ctx, g);
  fit.n_candidates = candidates.size();

  // Wide source: the candidate with the single part {3g-2} is linear in the
  // deepest jet, so this evaluation must see t_{3g-2}.  Its truncation is
  // the smallest giving a comfortable 50% row overdetermination.
  fit.wide_nvars = 3 * g - 1;
  const std::size_t want = fit.n_candidates + fit.n_candidates / 2;
  for (fit.wide_maxdeg = 2; fit.wide_maxdeg < 12; ++fit.wide_maxdeg)
    if (stratum_row_count(fit.wide_nvars, fit.wide_maxdeg, 3l * g - 3) >= want) break;

  // Deep source: products of k jet factors only enter at series degree k, and
  // the ansatz goes up to 3g-3 factors, so one evaluation must be truncated
  // at degree >= 3g-3.  Few variables keep it cheap.
  fit.deep_nvars = 5;
  fit.deep_maxdeg = 3 * g - 3;

  for (unsigned attempt = 0;; ++attempt) {
    struct Source {
      TopologicalJets jets;
      TSeries target;
    };
    std::vector<Source> sources;
    sources.push_back({TopologicalJets(fit.wide_nvars, fit.wide_maxdeg),
                       oracle.free_energy_series(g, fit.wide_nvars, fit.wide_maxdeg)});
    const bool deep_subsumed =
        fit.deep_nvars == fit.wide_nvars && fit.deep_maxdeg <= fit.wide_maxdeg;
    if (!deep_subsumed)
      sources.push_back({TopologicalJets(fit.deep_nvars, fit.deep_maxdeg),
                         oracle.free_energy_series(g, fit.deep_nvars, fit.deep_maxdeg)});

    // Assemble rows over all sources; keys are tagged by source index.
    std::map<std::pair<std::size_t, TSeries::key>, std::size_t> row_of;
    std::vector<std::vector<TSeries>> columns(sources.size());
    for (std::size_t si = 0; si < sources.size(); ++si) {
      for (const DiffPoly& c : candidates) {
        columns[si].push_back(sources[si].jets.eval(c));
        for (const auto& [k, coef] : columns[si].back().terms())
          row_of.emplace(std::make_pair(si, k), row_of.size());
      }
      for (const auto& [k, coef] : sources[si].target.terms())
        row_of.emplace(std::make_pair(si, k), row_of.size());
    }
    fit.n_rows = row_of.size();

    std::vector<std::vector<rat>> A(fit.n_rows, std::vector<rat>(candidates.size(), rat(0)));
    std::vector<rat> b(fit.n_rows, rat(0));
    for (std::size_t si = 0; si < sources.size(); ++si) {
      for (std::size_t j = 0; j < candidates.size(); ++j)
        for (const auto& [k, coef] : columns[si][j].terms())
          A[row_of[{si, k}]][j] = coef;
      for (const auto& [k, coef] : sources[si].target.terms()) b[row_of[{si, k}]] = coef;
    }

    LinearSolution<rat> sol = solve_linear(std::move(A), std::move(b), rat(0));
    fit.unique = sol.unique;
    fit.consistent = sol.consistent;
    if (!sol.unique) {
      if (attempt >= 2)
        throw std::runtime_error("fit_free_energy: genus " + std::to_string(g) +
                                 " system is not uniquely solvable (rank " +
                                 std::to_string(sol.rank) + " of " +
                                 std::to_string(candidates.size()) + ")");
      ++fit.wide_maxdeg;
      ++fit.deep_maxdeg;
      continue;
    }

    DiffPoly value(ctx);
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (sol.x[j] != 0) value += candidates[j] * sol.x[j];

    fit.series_match = true;
    for (std::size_t si = 0; si < sources.size(); ++si)
      if (sources[si].jets.eval(value) != sources[si].target) fit.series_match = false;
    if (!fit.series_match)
      throw std::runtime_error("fit_free_energy: fitted genus " + std::to_string(g) +
                               " polynomial fails to reproduce the oracle series");
    fit.value = std::move(value);
    return fit;
  }
}

const DiffPoly& FreeEnergies::value(unsigned g) {
  auto it = values_.find(g);
  if (it != values_.end()) return it->second;
  if (g == 0)
    throw std::invalid_argument("FreeEnergies::value: genus 0 is not a differential polynomial");

  if (g == 1) {
    DiffPoly f1 = DiffPoly::log_v1(ctx_) * rational(1, 24);
    return values_.emplace(1, std::move(f1)).first->second;
  }

  const std::string key = "g=" + std::to_string(g) + ";algo=1";
  if (cache_ && cache_->enabled()) {
    if (auto text = cache_->get("free-energy", key))
      return values_.emplace(g, DiffPoly::parse(ctx_, *text)).first->second;
  }
  FreeEnergyFit fit = fit_free_energy(ctx_, g, oracle_);
  if (cache_ && cache_->enabled()) cache_->put("free-energy", key, fit.value.to_text());
  return values_.emplace(g, std::move(fit.value)).first->second;
}

FreeEnergyFit FreeEnergies::fit_report(unsigned g) { return fit_free_energy(ctx_, g, oracle_); }

}  // namespace hodge
