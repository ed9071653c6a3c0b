#include "hodge/jet_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hodge {

namespace {

void trim_trailing_zeros(std::vector<int32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int32_t at_or_zero(const std::vector<int32_t>& v, std::size_t i) {
  return i < v.size() ? v[i] : 0;
}

int lex_compare(const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int32_t x = at_or_zero(a, i), y = at_or_zero(b, i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool JetContext::same_ring(const JetContext& o) const {
  return params == o.params && param_degbar == o.param_degbar &&
         mu_coef == o.mu_coef && mu_par == o.mu_par;
}

context_ptr make_context(unsigned nparams) {
  auto ctx = std::make_shared<JetContext>();
  for (unsigned k = 1; k <= nparams; ++k) {
    ctx->params.push_back("s" + std::to_string(k));
    ctx->param_degbar.push_back(2L * k - 1);
  }
  return ctx;
}

context_ptr make_context(std::vector<std::string> params, std::vector<long> param_degbar) {
  auto ctx = std::make_shared<JetContext>();
  ctx->params = std::move(params);
  if (param_degbar.empty()) param_degbar.assign(ctx->params.size(), 0);
  if (param_degbar.size() != ctx->params.size())
    throw std::invalid_argument("make_context: degbar weight count mismatch");
  ctx->param_degbar = std::move(param_degbar);
  return ctx;
}

context_ptr with_exp(const context_ptr& base, const rat& mu_coef, std::vector<int32_t> mu_par) {
  auto ctx = std::make_shared<JetContext>(*base);
  ctx->mu_coef = mu_coef;
  trim_trailing_zeros(mu_par);
  if (mu_par.size() > ctx->params.size())
    throw std::invalid_argument("with_exp: mu parameter monomial out of range");
  ctx->mu_par = std::move(mu_par);
  return ctx;
}

void JetMonomial::normalize() {
  trim_trailing_zeros(par);
  trim_trailing_zeros(jet);
}

int JetMonomial::compare(const JetMonomial& a, const JetMonomial& b) {
  long ta = 0, tb = 0;
  for (int32_t e : a.jet) ta += e;
  for (int32_t e : b.jet) tb += e;
  if (ta != tb) return ta < tb ? -1 : 1;
  if (int c = lex_compare(a.jet, b.jet)) return c;
  if (a.lg != b.lg) return a.lg < b.lg ? -1 : 1;
  if (a.ex != b.ex) return a.ex < b.ex ? -1 : 1;
  return lex_compare(a.par, b.par);
}

long JetMonomial::deg() const {
  long d = 0;
  for (std::size_t m = 1; m < jet.size(); ++m) d += static_cast<long>(m) * jet[m];
  return d;
}

long JetMonomial::degbar(const JetContext& ctx) const {
  long d = 0;
  for (std::size_t k = 0; k < par.size(); ++k) d += ctx.param_degbar[k] * par[k];
  for (std::size_t m = 2; m < jet.size(); ++m) d += (static_cast<long>(m) - 1) * jet[m];
  return d;
}

long JetMonomial::total_param_degree() const {
  long d = 0;
  for (int32_t e : par) d += e;
  return d;
}

DiffPoly DiffPoly::constant(context_ptr ctx, const rat& c) {
  DiffPoly p(std::move(ctx));
  if (c != 0) p.terms_.emplace(JetMonomial{}, c);
  return p;
}

DiffPoly DiffPoly::jet(context_ptr ctx, unsigned m, int power) {
  if (power < 0 && m != 1)
    throw std::invalid_argument("DiffPoly::jet: only v1 may carry negative powers");
  DiffPoly p(std::move(ctx));
  if (power == 0) return constant(p.ctx_, 1);
  JetMonomial mono;
  mono.jet.assign(m + 1, 0);
  mono.jet[m] = power;
  mono.normalize();
  p.terms_.emplace(std::move(mono), rat(1));
  return p;
}

DiffPoly DiffPoly::param(context_ptr ctx, unsigned k, int power) {
  if (k >= ctx->params.size()) throw std::invalid_argument("DiffPoly::param: index out of range");
  if (power < 0) throw std::invalid_argument("DiffPoly::param: negative power");
  DiffPoly p(std::move(ctx));
  JetMonomial mono;
  mono.par.assign(k + 1, 0);
  mono.par[k] = power;
  mono.normalize();
  p.terms_.emplace(std::move(mono), rat(1));
  return p;
}

DiffPoly DiffPoly::log_v1(context_ptr ctx) {
  DiffPoly p(std::move(ctx));
  JetMonomial mono;
  mono.lg = 1;
  p.terms_.emplace(std::move(mono), rat(1));
  return p;
}

DiffPoly DiffPoly::exp_v(context_ptr ctx, int power) {
  if (!ctx->has_exp())
    throw std::invalid_argument("DiffPoly::exp_v: context has no exp generator");
  DiffPoly p(std::move(ctx));
  if (power == 0) return constant(p.ctx_, 1);
  JetMonomial mono;
  mono.ex = power;
  p.terms_.emplace(std::move(mono), rat(1));
  return p;
}

DiffPoly DiffPoly::monomial(context_ptr ctx, JetMonomial m, const rat& c) {
  DiffPoly p(std::move(ctx));
  m.normalize();
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool DiffPoly::operator==(const DiffPoly& o) const {
  if (ctx_ && o.ctx_ && !ctx_->same_ring(*o.ctx_)) return false;
  return terms_ == o.terms_;
}

void require_same_context(const DiffPoly& a, const DiffPoly& b) {
  if (a.context() && b.context() && !a.context()->same_ring(*b.context()))
    throw std::invalid_argument("DiffPoly: ring context mismatch");
}

void DiffPoly::add_term(JetMonomial m, const rat& c) {
  if (c == 0) return;
  m.normalize();
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  require_same_context(*this, o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  require_same_context(*this, o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

DiffPoly& DiffPoly::operator*=(const rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  require_same_context(a, b);
  DiffPoly r(a.ctx_ ? a.ctx_ : b.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      JetMonomial m;
      m.par.resize(std::max(ma.par.size(), mb.par.size()));
      for (std::size_t i = 0; i < m.par.size(); ++i)
        m.par[i] = at_or_zero(ma.par, i) + at_or_zero(mb.par, i);
      m.jet.resize(std::max(ma.jet.size(), mb.jet.size()));
      for (std::size_t i = 0; i < m.jet.size(); ++i)
        m.jet[i] = at_or_zero(ma.jet, i) + at_or_zero(mb.jet, i);
      m.lg = ma.lg + mb.lg;
      m.ex = ma.ex + mb.ex;
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

DiffPoly DiffPoly::pow(unsigned e) const {
  DiffPoly r = constant(ctx_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

DiffPoly DiffPoly::dx() const {
  DiffPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    for (std::size_t j = 0; j < m.jet.size(); ++j) {
      if (m.jet[j] == 0) continue;
      JetMonomial n = m;
      n.jet.resize(std::max(n.jet.size(), j + 2), 0);
      n.jet[j] -= 1;
      n.jet[j + 1] += 1;
      r.add_term(std::move(n), c * rat(m.jet[j]));
    }
    if (m.lg != 0) {
      // d/dx L^l = l * L^(l-1) * v2 / v1
      JetMonomial n = m;
      n.lg -= 1;
      n.jet.resize(std::max<std::size_t>(n.jet.size(), 3), 0);
      n.jet[1] -= 1;
      n.jet[2] += 1;
      r.add_term(std::move(n), c * rat(m.lg));
    }
    if (m.ex != 0) {
      // d/dx X^e = e * mu * v1 * X^e
      JetMonomial n = m;
      n.jet.resize(std::max<std::size_t>(n.jet.size(), 2), 0);
      n.jet[1] += 1;
      n.par.resize(std::max(n.par.size(), ctx_->mu_par.size()), 0);
      for (std::size_t i = 0; i < ctx_->mu_par.size(); ++i) n.par[i] += ctx_->mu_par[i];
      r.add_term(std::move(n), c * rat(m.ex) * ctx_->mu_coef);
    }
  }
  return r;
}

DiffPoly DiffPoly::pdiff(unsigned j) const {
  DiffPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    if (j < m.jet.size() && m.jet[j] != 0) {
      JetMonomial n = m;
      n.jet[j] -= 1;
      r.add_term(std::move(n), c * rat(m.jet[j]));
    }
    if (j == 1 && m.lg != 0) {
      // ∂/∂v1 L^l = l * L^(l-1) / v1
      JetMonomial n = m;
      n.lg -= 1;
      n.jet.resize(std::max<std::size_t>(n.jet.size(), 2), 0);
      n.jet[1] -= 1;
      r.add_term(std::move(n), c * rat(m.lg));
    }
    if (j == 0 && m.ex != 0) {
      // ∂/∂v X^e = e * mu * X^e
      JetMonomial n = m;
      n.par.resize(std::max(n.par.size(), ctx_->mu_par.size()), 0);
      for (std::size_t i = 0; i < ctx_->mu_par.size(); ++i) n.par[i] += ctx_->mu_par[i];
      r.add_term(std::move(n), c * rat(m.ex) * ctx_->mu_coef);
    }
  }
  return r;
}

DiffPoly DiffPoly::pdiff_param(unsigned k) const {
  DiffPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    if (k < m.par.size() && m.par[k] != 0) {
      JetMonomial n = m;
      n.par[k] -= 1;
      r.add_term(std::move(n), c * rat(m.par[k]));
    }
  }
  return r;
}

std::optional<long> DiffPoly::deg_min() const {
  std::optional<long> d;
  for (const auto& [m, c] : terms_) {
    const long x = m.deg();
    if (!d || x < *d) d = x;
  }
  return d;
}

std::optional<long> DiffPoly::deg_max() const {
  std::optional<long> d;
  for (const auto& [m, c] : terms_) {
    const long x = m.deg();
    if (!d || x > *d) d = x;
  }
  return d;
}

bool DiffPoly::is_deg_homogeneous(long d) const {
  for (const auto& [m, c] : terms_)
    if (m.deg() != d) return false;
  return true;
}

std::optional<long> DiffPoly::degbar_max() const {
  std::optional<long> d;
  for (const auto& [m, c] : terms_) {
    const long x = m.degbar(*ctx_);
    if (!d || x > *d) d = x;
  }
  return d;
}

int DiffPoly::max_jet_order() const {
  int order = -1;
  for (const auto& [m, c] : terms_) {
    for (std::size_t j = 0; j < m.jet.size(); ++j)
      if (m.jet[j] != 0) order = std::max(order, static_cast<int>(j));
    if (m.lg != 0) order = std::max(order, 1);
    if (m.ex != 0) order = std::max(order, 0);
  }
  return order;
}

bool DiffPoly::has_log() const {
  for (const auto& [m, c] : terms_)
    if (m.lg != 0) return true;
  return false;
}

bool DiffPoly::has_exp_factor() const {
  for (const auto& [m, c] : terms_)
    if (m.ex != 0) return true;
  return false;
}

bool DiffPoly::depends_on_params() const {
  for (const auto& [m, c] : terms_)
    if (!m.par.empty()) return true;
  return false;
}

DiffPoly DiffPoly::jet_free_part() const {
  DiffPoly r(ctx_);
  for (const auto& [m, c] : terms_)
    if (m.jet.empty() && m.lg == 0 && m.ex == 0) r.terms_.emplace(m, c);
  return r;
}

DiffPoly DiffPoly::coeff_of_param_power(unsigned k, unsigned j) const {
  DiffPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<unsigned>(at_or_zero(m.par, k)) != j) continue;
    JetMonomial n = m;
    if (j > 0) {
      n.par[k] = 0;
      n.normalize();
    }
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

int DiffPoly::deg_param(unsigned k) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(at_or_zero(m.par, k)));
  return d;
}

DiffPoly DiffPoly::restrict_params(unsigned keep) const {
  DiffPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    bool drop = false;
    for (std::size_t k = keep; k < m.par.size(); ++k)
      if (m.par[k] != 0) {
        drop = true;
        break;
      }
    if (!drop) r.terms_.emplace(m, c);
  }
  return r;
}

DiffPoly DiffPoly::subst_params(const context_ptr& new_ctx,
                                const std::vector<DiffPoly>& images) const {
  if (images.size() != ctx_->params.size())
    throw std::invalid_argument("subst_params: need one image per parameter");
  if (has_exp_factor())
    throw std::invalid_argument("subst_params: exp generator not supported");
  for (const auto& img : images)
    if (img.max_jet_order() >= 0 || img.has_log())
      throw std::invalid_argument("subst_params: images must be jet-free");
  DiffPoly r(new_ctx);
  for (const auto& [m, c] : terms_) {
    DiffPoly factor = constant(new_ctx, c);
    for (std::size_t k = 0; k < m.par.size(); ++k)
      if (m.par[k] != 0) factor = factor * images[k].pow(m.par[k]);
    JetMonomial bare;
    bare.jet = m.jet;
    bare.lg = m.lg;
    for (const auto& [pm, pc] : factor.terms_) {
      JetMonomial n = bare;
      n.par = pm.par;
      r.add_term(std::move(n), pc);
    }
  }
  return r;
}

DiffPoly DiffPoly::rescale_field(const rat& c, const context_ptr& new_ctx) const {
  if (has_log())
    throw std::invalid_argument("rescale_field: log generator would leave the ring");
  if (has_exp_factor() && new_ctx->mu_coef != ctx_->mu_coef * c)
    throw std::invalid_argument("rescale_field: new context mu must equal c * old mu");
  DiffPoly r(new_ctx);
  for (const auto& [m, coef] : terms_) {
    long total = 0;
    for (int32_t e : m.jet) total += e;
    rat scale = 1;
    if (total >= 0)
      for (long i = 0; i < total; ++i) scale *= c;
    else
      for (long i = 0; i < -total; ++i) scale /= c;
    r.add_term(m, coef * scale);
  }
  return r;
}

rat DiffPoly::eval_t0() const {
  if (depends_on_params())
    throw std::invalid_argument("eval_t0: polynomial still depends on parameters");
  rat v = 0;
  for (const auto& [m, c] : terms_) {
    // v = 0, v1 = 1, v^(m>=2) = 0, L = 0, X = 1
    bool vanished = m.lg != 0 || at_or_zero(m.jet, 0) != 0;
    for (std::size_t j = 2; !vanished && j < m.jet.size(); ++j)
      if (m.jet[j] != 0) vanished = true;
    if (!vanished) v += c;
  }
  return v;
}

// --- serialization ----------------------------------------------------------

namespace {

void append_factor(std::string& out, const std::string& name, int32_t e) {
  if (e == 0) return;
  out += '*';
  out += name;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

std::string monomial_factors(const JetContext& ctx, const JetMonomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.par.size(); ++k) append_factor(out, ctx.params[k], m.par[k]);
  for (std::size_t j = 0; j < m.jet.size(); ++j)
    append_factor(out, j == 0 ? "v" : "v" + std::to_string(j), m.jet[j]);
  append_factor(out, "L", m.lg);
  append_factor(out, "X", m.ex);
  return out;
}

}  // namespace

std::string DiffPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    out += '(' + to_string(neg ? rat(-c) : c) + ')';
    out += monomial_factors(*ctx_, m);
  }
  return out;
}

namespace {

struct Parser {
  const JetContext& ctx;
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      throw std::invalid_argument("DiffPoly::parse: expected '" + std::string(1, c) +
                                  "' at offset " + std::to_string(i));
  }

  std::string read_integer() {
    skip_ws();
    std::string out;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) out += s[i++];
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
    if (out.empty() || out == "-" || out == "+")
      throw std::invalid_argument("DiffPoly::parse: expected integer at offset " +
                                  std::to_string(i));
    return out;
  }

  rat read_rational_parens() {
    expect('(');
    std::string num = read_integer();
    std::string text = num;
    skip_ws();
    if (accept('/')) text += "/" + read_integer();
    expect(')');
    return rational_from_string(text);
  }

  std::string read_name() {
    skip_ws();
    std::string out;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) out += s[i++];
    if (out.empty())
      throw std::invalid_argument("DiffPoly::parse: expected factor name at offset " +
                                  std::to_string(i));
    return out;
  }

  int read_exponent() {
    skip_ws();
    if (!accept('^')) return 1;
    return std::stoi(read_integer());
  }

  void apply_factor(JetMonomial& m, const std::string& name, int e) {
    if (name == "L") {
      m.lg += e;
      return;
    }
    if (name == "X") {
      if (!ctx.has_exp())
        throw std::invalid_argument("DiffPoly::parse: X not available in this ring");
      m.ex += e;
      return;
    }
    if (name[0] == 'v') {
      unsigned long j = 0;
      if (name.size() > 1) {
        for (std::size_t t = 1; t < name.size(); ++t)
          if (!std::isdigit(static_cast<unsigned char>(name[t])))
            throw std::invalid_argument("DiffPoly::parse: bad jet factor " + name);
        j = std::stoul(name.substr(1));
      }
      if (e < 0 && j != 1)
        throw std::invalid_argument("DiffPoly::parse: negative power on " + name);
      m.jet.resize(std::max<std::size_t>(m.jet.size(), j + 1), 0);
      m.jet[j] += e;
      return;
    }
    for (std::size_t k = 0; k < ctx.params.size(); ++k) {
      if (ctx.params[k] == name) {
        if (e < 0)
          throw std::invalid_argument("DiffPoly::parse: negative power on parameter " + name);
        m.par.resize(std::max<std::size_t>(m.par.size(), k + 1), 0);
        m.par[k] += e;
        return;
      }
    }
    throw std::invalid_argument("DiffPoly::parse: unknown factor " + name);
  }
};

}  // namespace

DiffPoly DiffPoly::parse(const context_ptr& ctx, const std::string& text) {
  Parser p{*ctx, text};
  DiffPoly out(ctx);
  p.skip_ws();
  if (p.i < text.size() && text[p.i] == '0') {
    std::size_t save = p.i;
    ++p.i;
    p.skip_ws();
    if (p.i == text.size()) return out;
    p.i = save;
  }
  bool first = true;
  while (true) {
    p.skip_ws();
    if (p.i >= text.size()) {
      if (first) throw std::invalid_argument("DiffPoly::parse: empty input");
      break;
    }
    int sign = 1;
    if (p.accept('-'))
      sign = -1;
    else if (p.accept('+'))
      sign = 1;
    else if (!first)
      throw std::invalid_argument("DiffPoly::parse: expected '+' or '-' at offset " +
                                  std::to_string(p.i));
    first = false;
    rat c = p.read_rational_parens() * sign;
    JetMonomial m;
    while (p.peek('*')) {
      p.expect('*');
      const std::string name = p.read_name();
      const int e = p.read_exponent();
      p.apply_factor(m, name, e);
    }
    out.add_term(std::move(m), c);
  }
  return out;
}

std::string DiffPoly::to_json() const {
  nlohmann::json j;
  j["params"] = ctx_->params;
  if (ctx_->has_exp()) {
    j["mu"] = {{"coef", to_string(ctx_->mu_coef)}, {"par", ctx_->mu_par}};
  }
  j["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json t;
    t["coef"] = to_string(c);
    t["par"] = m.par;
    t["jet"] = m.jet;
    t["lg"] = m.lg;
    t["ex"] = m.ex;
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

DiffPoly DiffPoly::from_json(const context_ptr& ctx, const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  if (j.at("params").get<std::vector<std::string>>() != ctx->params)
    throw std::invalid_argument("DiffPoly::from_json: parameter list mismatch");
  DiffPoly out(ctx);
  for (const auto& t : j.at("terms")) {
    JetMonomial m;
    m.par = t.at("par").get<std::vector<int32_t>>();
    m.jet = t.at("jet").get<std::vector<int32_t>>();
    m.lg = t.at("lg").get<int32_t>();
    m.ex = t.at("ex").get<int32_t>();
    out.add_term(std::move(m), rational_from_string(t.at("coef").get<std::string>()));
  }
  return out;
}

namespace {

std::string latex_rat(const rat& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  const bool neg = c < 0;
  const rat a = neg ? rat(-c) : c;
  return std::string(neg ? "-" : "") + "\\frac{" + a.get_num().get_str() + "}{" +
         a.get_den().get_str() + "}";
}

std::string latex_param(const std::string& name) {
  // s1 -> s_{1}, a2 -> a_{2}, p -> p
  std::size_t split = 0;
  while (split < name.size() && !std::isdigit(static_cast<unsigned char>(name[split]))) ++split;
  if (split == name.size()) return name;
  return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::string latex_jet(std::size_t j) {
  switch (j) {
    case 0: return "v";
    case 1: return "v_{x}";
    case 2: return "v_{xx}";
    case 3: return "v_{xxx}";
    default: return "v^{(" + std::to_string(j) + ")}";
  }
}

void latex_power(std::string& out, const std::string& base, int32_t e, bool needs_parens) {
  if (e == 0) return;
  out += ' ';
  if (e == 1) {
    out += base;
    return;
  }
  if (needs_parens)
    out += "\\left(" + base + "\\right)^{" + std::to_string(e) + "}";
  else
    out += base + "^{" + std::to_string(e) + "}";
}

}  // namespace

std::string DiffPoly::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const rat a = neg ? rat(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const bool bare = m.par.empty() && m.jet.empty() && m.lg == 0 && m.ex == 0;
    if (a != 1 || bare) out += latex_rat(a);
    for (std::size_t k = 0; k < m.par.size(); ++k)
      latex_power(out, latex_param(ctx_->params[k]), m.par[k], false);
    for (std::size_t j = 0; j < m.jet.size(); ++j)
      latex_power(out, latex_jet(j), m.jet[j], j >= 4);
    latex_power(out, "\\log v_{x}", m.lg, true);
    if (m.ex != 0) {
      std::string mu = to_string(ctx_->mu_coef * m.ex);
      std::string expo = mu == "1" ? "" : (mu == "-1" ? "-" : mu + " ");
      for (std::size_t k = 0; k < ctx_->mu_par.size(); ++k)
        if (ctx_->mu_par[k] != 0) {
          expo += latex_param(ctx_->params[k]);
          if (ctx_->mu_par[k] != 1) expo += "^{" + std::to_string(ctx_->mu_par[k]) + "}";
        }
      out += " \\mathrm{e}^{" + expo + " v}";
    }
  }
  return out;
}

}  // namespace hodge
