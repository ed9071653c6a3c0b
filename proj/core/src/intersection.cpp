#include "hodge/intersection.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hodge {

namespace {

long dimension(unsigned g, std::size_t n) { return 3L * g - 3 + static_cast<long>(n); }

bool unstable(unsigned g, std::size_t n) { return (g == 0 && n < 3) || (g == 1 && n == 0); }

}  // namespace

const rat& IntersectionOracle::correlator(unsigned g, std::vector<unsigned> ks) {
  std::sort(ks.begin(), ks.end());
  const auto key = std::make_pair(g, ks);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  rat value = 0;
  const std::size_t n = ks.size();
  const long total = std::accumulate(ks.begin(), ks.end(), 0L);

  if (unstable(g, n) || total != dimension(g, n)) {
    value = 0;
  } else if (g == 0 && n == 3) {
    value = 1;  // <tau_0^3>_0; dimension filter forces all indices zero
  } else if (g == 1 && n == 1) {
    value = rational(1, 24);  // <tau_1>_1
  } else {
    // DVV recursion on the largest insertion tau_{k+1} (k >= 0 since the
    // dimension filter rules out n-fold tau_0 products beyond the seeds):
    //   (2k+3)!! <tau_{k+1} prod_j tau_{k_j}>_g
    //     = sum_j (2k+2k_j+1)!!/(2k_j-1)!! <tau_{k+k_j} prod_{i!=j}>_g
    //     + 1/2 sum_{a+b=k-1} (2a+1)!!(2b+1)!!
    //         ( <tau_a tau_b prod>_{g-1}
    //           + sum_{g1+g2=g, I disjoint-union J} <tau_a I>_{g1} <tau_b J>_{g2} ).
    const unsigned k = ks.back() - 1;  // largest index is k+1 >= 1
    std::vector<unsigned> rest(ks.begin(), ks.end() - 1);
    const std::size_t m = rest.size();
    rat acc = 0;

    for (std::size_t j = 0; j < m; ++j) {
      std::vector<unsigned> sub;
      sub.reserve(m);
      for (std::size_t i = 0; i < m; ++i)
        if (i != j) sub.push_back(rest[i]);
      sub.push_back(k + rest[j]);
      acc += rat(double_factorial_odd(2L * (k + rest[j]) + 1)) /
             rat(double_factorial_odd(2L * rest[j] - 1)) * correlator(g, sub);
    }

    if (k >= 1) {
      for (unsigned a = 0; a + 1 <= k; ++a) {
        const unsigned b = k - 1 - a;
        const rat w = rat(double_factorial_odd(2L * a + 1) * double_factorial_odd(2L * b + 1));
        if (g >= 1) {
          std::vector<unsigned> sub = rest;
          sub.push_back(a);
          sub.push_back(b);
          acc += w / 2 * correlator(g - 1, sub);
        }
        // Ordered splittings (g1, I), (g2, J): iterate over subsets of rest.
        for (unsigned g1 = 0; g1 <= g; ++g1) {
          const unsigned g2 = g - g1;
          for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
            std::vector<unsigned> left{a}, right{b};
            for (std::size_t i = 0; i < m; ++i)
              ((mask >> i) & 1u ? left : right).push_back(rest[i]);
            const rat lhs = correlator(g1, left);
            if (lhs == 0) continue;
            acc += w / 2 * lhs * correlator(g2, right);
          }
        }
      }
    }
    value = acc / rat(double_factorial_odd(2L * k + 3));
  }

  return memo_.emplace(key, value).first->second;
}

rat IntersectionOracle::genus0_closed_form(const std::vector<unsigned>& ks) {
  const long total = std::accumulate(ks.begin(), ks.end(), 0L);
  if (ks.size() < 3 || total != static_cast<long>(ks.size()) - 3) return 0;
  rat r(factorial(ks.size() - 3));
  for (unsigned k : ks) r /= rat(factorial(k));
  return r;
}

TSeries IntersectionOracle::free_energy_series(unsigned g, unsigned nvars, unsigned maxdeg) {
  TSeries s(nvars, maxdeg);
  // Iterate over exponent keys (multisets of insertions); the coefficient of
  // prod t_p^{e_p} is <prod tau_p^{e_p}>_g / prod e_p!.
  TSeries::key k(nvars, 0);
  auto rec = [&](auto&& self, unsigned var, long deg, long weight) -> void {
    if (var == nvars) {
      if (deg == 0) return;
      if (weight != dimension(g, deg)) return;
      std::vector<unsigned> ks;
      for (std::size_t p = 0; p < k.size(); ++p)
        for (int32_t i = 0; i < k[p]; ++i) ks.push_back(static_cast<unsigned>(p));
      rat c = correlator(g, ks);
      if (c == 0) return;
      for (int32_t e : k)
        if (e > 1) c /= rat(factorial(e));
      s.add(k, c);
      return;
    }
    for (int32_t e = 0;; ++e) {
      k[var] = e;
      const long d = deg + e;
      if (d > static_cast<long>(maxdeg)) break;
      self(self, var + 1, d, weight + static_cast<long>(var) * e);
    }
    k[var] = 0;
  };
  rec(rec, 0, 0, 0);
  return s;
}

void IntersectionOracle::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  nlohmann::json j;
  in >> j;
  for (const auto& [key, val] : j.items()) {
    const auto colon = key.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("oracle cache: bad key " + key);
    const unsigned g = std::stoul(key.substr(0, colon));
    const auto arr = nlohmann::json::parse(key.substr(colon + 1));
    std::vector<unsigned> ks = arr.get<std::vector<unsigned>>();
    std::sort(ks.begin(), ks.end());
    memo_[{g, ks}] = rational_from_string(val.get<std::string>());
  }
}

void IntersectionOracle::save_cache(const std::string& path) const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, val] : memo_) {
    std::ostringstream name;
    name << key.first << ":" << nlohmann::json(key.second).dump();
    j[name.str()] = to_string(val);
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << "\n";
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace hodge
