#include "hodge/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace hodge {

rat rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  rat r(num, den);
  r.canonicalize();
  return r;
}

rat rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational_from_string: empty");
  const auto slash = text.find('/');
  mpq_class r;
  // mpq_class::set_str accepts "p/q" directly, but we validate the pieces so
  // that garbage like "1/2/3" or "1.5" is rejected rather than truncated.
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (den.find('/') != std::string::npos)
    throw std::invalid_argument("rational_from_string: multiple '/'");
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("rational_from_string: not an integer ratio: " + text);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational_from_string: zero denominator");
  rat q(n);
  q /= rat(d);
  return q;
}

std::string to_string(const rat& x) { return x.get_str(); }

bigint factorial(unsigned long n) {
  bigint r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bigint binomial(unsigned long n, unsigned long k) {
  bigint r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

rat binomial_general(long a, unsigned long k) {
  rat r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= rat(a - static_cast<long>(i));
    r /= rat(static_cast<long>(i) + 1);
  }
  return r;
}

bigint double_factorial_odd(long n) {
  if (n < -1 || n % 2 == 0) throw std::invalid_argument("double_factorial_odd: need odd n >= -1");
  bigint r = 1;
  for (long m = n; m >= 1; m -= 2) r *= m;
  return r;
}

rat bernoulli(unsigned n) {
  // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k, from sum_{k<=m} C(m+1,k) B_k = 0.
  static std::vector<rat> table{rat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    const unsigned long m = table.size();
    rat acc = 0;
    for (unsigned long k = 0; k < m; ++k) acc += rat(binomial(m + 1, k)) * table[k];
    acc /= rat(bigint(m + 1));
    table.push_back(-acc);
  }
  return table[n];
}

}  // namespace hodge
