// Command-line front end for the exact Hodge-potential engine.
//
// Subcommands: bernoulli, free-energy, hodge-potential, hodge-gf,
// hodge-number, hierarchy, ham-operator, specialize, normal-form, verify.
// Every result is exact; output formats are canonical text (round-trips
// through the parser), a JSON envelope (schema in docs/schema.json), and
// standalone LaTeX.  Expensive computations can be cached on disk with
// --cache-dir (default from $HODGE_CACHE_DIR); a cache hit reproduces the
// cold output byte for byte.
//
// Exit codes: 0 success, 1 verification failure (or internal error),
// 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hodge/cache.hpp"
#include "hodge/eps_series.hpp"
#include "hodge/free_energy.hpp"
#include "hodge/hierarchy.hpp"
#include "hodge/hodge_recursion.hpp"
#include "hodge/jet_ring.hpp"
#include "hodge/lambda_extract.hpp"
#include "hodge/property_suites.hpp"
#include "hodge/rational.hpp"
#include "hodge/specializations.hpp"

namespace {

using hodge::context_ptr;
using hodge::DiffOperator;
using hodge::DiffPoly;
using hodge::EpsSeries;
using hodge::rat;
using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Output formats

enum class Format { text, json_fmt, latex };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json_fmt;
  return Format::latex;
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '_':
      case '^':
      case '#':
      case '%':
      case '&':
      case '{':
      case '}':
      case '$':
        out += '\\';
        out += ch;
        break;
      case '\\':
        out += "\\textbackslash{}";
        break;
      case '~':
        out += "\\textasciitilde{}";
        break;
      case '\n':
        out += "\\\\ ";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

// A standalone document: every math line becomes its own display block.
std::string latex_document(const std::vector<std::string>& body_lines) {
  std::string out =
      "\\documentclass{article}\n"
      "\\usepackage{amsmath}\n"
      "\\allowdisplaybreaks\n"
      "\\begin{document}\n";
  for (const std::string& line : body_lines) out += line + "\n";
  out += "\\end{document}\n";
  return out;
}

std::string latex_math(const std::string& body) {
  return "\\begin{equation*}\n" + body + "\n\\end{equation*}";
}

std::string latex_item_list(const std::vector<std::string>& lines) {
  std::string out = "\\begin{itemize}\n";
  for (const std::string& line : lines) out += "  \\item \\texttt{" + latex_escape(line) + "}\n";
  out += "\\end{itemize}";
  return out;
}

// ---------------------------------------------------------------------------
// JSON payload builders (shapes documented in docs/schema.json)

json rational_json(const rat& v) {
  return json{{"kind", "rational"}, {"value", v.get_str()}};
}

json poly_json(const DiffPoly& f) {
  json j = json::parse(f.to_json());
  j["kind"] = "polynomial";
  return j;
}

json series_json(const EpsSeries& s) {
  json orders = json::object();
  for (int n = 0; n <= s.trunc(); n += 2) orders[std::to_string(n)] = poly_json(s.coeff(n));
  return json{{"kind", "eps-series"}, {"trunc", s.trunc()}, {"orders", std::move(orders)}};
}

json operator_json(const DiffOperator& op) {
  json powers = json::object();
  for (const auto& [k, c] : op.coeffs()) powers[std::to_string(k)] = series_json(c);
  return json{{"kind", "diff-operator"}, {"trunc", op.trunc()}, {"powers", std::move(powers)}};
}

json report_json(bool ok, const std::vector<std::string>& lines) {
  return json{{"kind", "report"}, {"ok", ok}, {"lines", lines}};
}

// ---------------------------------------------------------------------------
// Text / LaTeX renderings of series and operators

std::vector<std::string> series_text_lines(const EpsSeries& s, const std::string& indent = "") {
  std::vector<std::string> lines;
  for (int n = 0; n <= s.trunc(); n += 2)
    lines.push_back(indent + "eps^" + std::to_string(n) + ": " + s.coeff(n).to_text());
  return lines;
}

std::string series_latex(const EpsSeries& s) {
  std::string out;
  bool first = true;
  for (int n = 0; n <= s.trunc(); n += 2) {
    const DiffPoly& c = s.coeff(n);
    if (c.is_zero() && !(first && n == s.trunc())) continue;
    if (!first) out += " + ";
    first = false;
    if (n == 0)
      out += c.to_latex();
    else
      out += "\\epsilon^{" + std::to_string(n) + "}\\left(" + c.to_latex() + "\\right)";
  }
  if (first) out = "0";
  return out;
}

std::vector<std::string> operator_text_lines(const DiffOperator& op) {
  std::vector<std::string> lines;
  for (const auto& [k, c] : op.coeffs()) {
    lines.push_back("dx^" + std::to_string(k) + ":");
    for (std::string& l : series_text_lines(c, "  ")) lines.push_back(std::move(l));
  }
  if (lines.empty()) lines.push_back("0");
  return lines;
}

std::string operator_latex(const DiffOperator& op) {
  std::string out;
  bool first = true;
  for (const auto& [k, c] : op.coeffs()) {
    if (!first) out += "\n  + ";
    first = false;
    out += "\\left(" + series_latex(c) + "\\right)";
    if (k == 1)
      out += "\\,\\partial_x";
    else if (k > 1)
      out += "\\,\\partial_x^{" + std::to_string(k) + "}";
  }
  if (first) out = "0";
  return out;
}

// ---------------------------------------------------------------------------
// Common flags and the output envelope

struct CommonOpts {
  std::string format = "text";
  std::string cache_dir;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  sub->add_option("--cache-dir", opts.cache_dir,
                  "Disk cache directory (default: $HODGE_CACHE_DIR)");
}

hodge::DiskCache open_cache(const CommonOpts& opts) {
  if (!opts.cache_dir.empty()) return hodge::DiskCache(opts.cache_dir);
  if (const char* env = std::getenv("HODGE_CACHE_DIR"); env && *env)
    return hodge::DiskCache(env);
  return hodge::DiskCache();
}

// Prints the result in the chosen format.  `text_lines` / `latex_lines` are
// the text-mode stdout lines and the LaTeX document body; the JSON envelope
// carries the command name, its inputs and the typed result payload.
void emit(const CommonOpts& opts, const std::string& command, json inputs, json result,
          const std::vector<std::string>& text_lines,
          const std::vector<std::string>& latex_lines) {
  switch (parse_format(opts.format)) {
    case Format::text:
      for (const std::string& line : text_lines) std::cout << line << "\n";
      break;
    case Format::json_fmt: {
      json envelope{
          {"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
      std::cout << envelope.dump(2) << "\n";
      break;
    }
    case Format::latex:
      std::cout << latex_document(latex_lines);
      break;
  }
}

// ---------------------------------------------------------------------------
// Small parsers

std::vector<unsigned> parse_index_list(const std::vector<std::string>& items) {
  std::vector<unsigned> out;
  for (const std::string& it : items) {
    std::size_t pos = 0;
    const long v = std::stol(it, &pos);
    if (pos != it.size() || v < 0) throw CLI::ValidationError("index list", "bad index: " + it);
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

// "p,q;p,q;..." with rational entries, e.g. "1,1;-2,1;5/2,3".
std::vector<std::pair<rat, rat>> parse_samples(const std::string& text) {
  std::vector<std::pair<rat, rat>> out;
  std::stringstream ss(text);
  std::string pair_text;
  while (std::getline(ss, pair_text, ';')) {
    if (pair_text.empty()) continue;
    const std::size_t comma = pair_text.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--samples", "expected p,q pairs separated by ';'");
    out.emplace_back(hodge::rational_from_string(pair_text.substr(0, comma)),
                     hodge::rational_from_string(pair_text.substr(comma + 1)));
  }
  if (out.empty()) throw CLI::ValidationError("--samples", "no samples given");
  return out;
}

// Substitutes parameters coefficient-wise through an eps-series.
EpsSeries substituted_series(const EpsSeries& src, const context_ptr& dst,
                             const std::vector<DiffPoly>& images) {
  EpsSeries out(dst, src.trunc());
  for (const auto& [n, c] : src.coeffs()) out.set_coeff(n, c.subst_params(dst, images));
  return out;
}

DiffOperator substituted_operator(const DiffOperator& src, const context_ptr& dst,
                                  const std::vector<DiffPoly>& images) {
  DiffOperator out(dst, src.trunc());
  for (const auto& [k, c] : src.coeffs()) out.add_term(k, substituted_series(c, dst, images));
  return out;
}

std::string lambda_label_latex(unsigned g, const std::vector<unsigned>& lambda) {
  std::string label = "H_{" + std::to_string(g) + "}\\left(";
  bool any = false;
  for (unsigned i : lambda)
    if (i > 0) {
      label += "\\lambda_{" + std::to_string(i) + "}";
      any = true;
    }
  if (!any) label += "1";
  label += ";t\\right)";
  return label;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hodge-potential engine for the one-dimensional Frobenius manifold"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::function<int()> action;

  // --- bernoulli -----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("bernoulli", "Print the exact Bernoulli number B_n");
    auto opts = std::make_shared<CommonOpts>();
    auto n = std::make_shared<unsigned>(0);
    sub->add_option("n", *n, "Index n >= 0")->required();
    add_common(sub, *opts);
    sub->callback([&action, opts, n] {
      action = [opts, n]() -> int {
        const rat b = hodge::bernoulli(*n);
        emit(*opts, "bernoulli", json{{"n", *n}}, rational_json(b), {b.get_str()},
             {latex_math("B_{" + std::to_string(*n) + "} = " + b.get_str())});
        return 0;
      };
    });
  }

  // --- free-energy ---------------------------------------------------------
  {
    auto* sub = app.add_subcommand(
        "free-energy", "Print the genus-g free energy of the point as a jet polynomial");
    auto opts = std::make_shared<CommonOpts>();
    auto genus = std::make_shared<unsigned>(1);
    auto refit = std::make_shared<bool>(false);
    sub->add_option("--genus", *genus, "Genus g >= 1")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--refit", *refit, "Redo the defining fit even on a disk-cache hit");
    add_common(sub, *opts);
    sub->callback([&action, opts, genus, refit] {
      action = [opts, genus, refit]() -> int {
        hodge::DiskCache cache = open_cache(*opts);
        hodge::FreeEnergies fe(hodge::make_context(0), cache.enabled() ? &cache : nullptr);
        if (*refit && *genus >= 2) fe.fit_report(*genus);
        const DiffPoly& f = fe.value(*genus);
        emit(*opts, "free-energy", json{{"genus", *genus}, {"refit", *refit}}, poly_json(f),
             {f.to_text()},
             {latex_math("F_{" + std::to_string(*genus) + "} = " + f.to_latex())});
        return 0;
      };
    });
  }

  // --- hodge-potential -----------------------------------------------------
  {
    auto* sub = app.add_subcommand("hodge-potential",
                                   "Print the genus-g Hodge potential H_g(v, v_x, ...; s)");
    auto opts = std::make_shared<CommonOpts>();
    auto genus = std::make_shared<unsigned>(1);
    auto verify_extra = std::make_shared<bool>(false);
    sub->add_option("--genus", *genus, "Genus g >= 1")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--verify-extra-stage", *verify_extra,
                  "Also check invariance under one extra recursion stage");
    add_common(sub, *opts);
    sub->callback([&action, opts, genus, verify_extra] {
      action = [opts, genus, verify_extra]() -> int {
        hodge::DiskCache cache = open_cache(*opts);
        hodge::HodgeRecursion rec(hodge::make_context(*genus),
                                  cache.enabled() ? &cache : nullptr);
        const DiffPoly& h = rec.potential(*genus);
        if (*verify_extra) {
          if (!rec.verify_extra_stage(*genus)) {
            std::cerr << "extra-stage invariance FAILED at genus " << *genus << "\n";
            return 1;
          }
          std::cerr << "extra-stage invariance: ok\n";
        }
        emit(*opts, "hodge-potential",
             json{{"genus", *genus}, {"verify-extra-stage", *verify_extra}}, poly_json(h),
             {h.to_text()},
             {latex_math("H_{" + std::to_string(*genus) + "} = " + h.to_latex())});
        return 0;
      };
    });
  }

  // --- hodge-gf ------------------------------------------------------------
  {
    auto* sub = app.add_subcommand(
        "hodge-gf", "Print the generating function of a lambda-class monomial at genus g");
    auto opts = std::make_shared<CommonOpts>();
    auto genus = std::make_shared<unsigned>(1);
    auto lambda_items = std::make_shared<std::vector<std::string>>();
    sub->add_option("--genus", *genus, "Genus g >= 1")->required()->check(CLI::PositiveNumber);
    sub->add_option("--lambda", *lambda_items,
                    "Comma-separated lambda indices; repeats allowed (reduced internally)")
        ->required()
        ->delimiter(',');
    add_common(sub, *opts);
    sub->callback([&action, opts, genus, lambda_items] {
      action = [opts, genus, lambda_items]() -> int {
        const std::vector<unsigned> lambda = parse_index_list(*lambda_items);
        hodge::DiskCache cache = open_cache(*opts);
        hodge::HodgeRecursion rec(hodge::make_context(*genus),
                                  cache.enabled() ? &cache : nullptr);
        hodge::LambdaExtractor ex(rec);
        hodge::LambdaCalculus lc(*genus);
        DiffPoly gf = DiffPoly::zero(rec.context());
        for (const auto& [mask, c] : lc.reduce(lambda)) gf += ex.gf(*genus, mask) * c;
        emit(*opts, "hodge-gf", json{{"genus", *genus}, {"lambda", lambda}}, poly_json(gf),
             {gf.to_text()},
             {latex_math(lambda_label_latex(*genus, lambda) + " = " + gf.to_latex())});
        return 0;
      };
    });
  }

  // --- hodge-number --------------------------------------------------------
  {
    auto* sub = app.add_subcommand(
        "hodge-number", "Print an exact Hodge integral (lambda classes, optional psi powers)");
    auto opts = std::make_shared<CommonOpts>();
    auto genus = std::make_shared<unsigned>(1);
    auto lambda_items = std::make_shared<std::vector<std::string>>();
    auto psi_items = std::make_shared<std::vector<std::string>>();
    sub->add_option("--genus", *genus, "Genus g >= 1")->required()->check(CLI::PositiveNumber);
    sub->add_option("--lambda", *lambda_items,
                    "Comma-separated lambda indices; repeats allowed (reduced internally)")
        ->required()
        ->delimiter(',');
    sub->add_option("--psi", *psi_items, "Comma-separated psi exponents, one per marked point")
        ->delimiter(',');
    add_common(sub, *opts);
    sub->callback([&action, opts, genus, lambda_items, psi_items] {
      action = [opts, genus, lambda_items, psi_items]() -> int {
        const std::vector<unsigned> lambda = parse_index_list(*lambda_items);
        const std::vector<unsigned> psi = parse_index_list(*psi_items);
        long weight = 0;
        for (unsigned i : lambda) weight += i;
        for (unsigned p : psi) weight += p;
        if (weight != 3 * static_cast<long>(*genus) - 3 + static_cast<long>(psi.size()))
          std::cerr << "note: dimension constraint fails (weight " << weight << " != "
                    << 3 * static_cast<long>(*genus) - 3 + static_cast<long>(psi.size())
                    << "); the integral vanishes\n";
        hodge::DiskCache cache = open_cache(*opts);
        hodge::HodgeRecursion rec(hodge::make_context(*genus),
                                  cache.enabled() ? &cache : nullptr);
        hodge::LambdaExtractor ex(rec);
        const rat value = ex.hodge_number(*genus, lambda, psi);
        emit(*opts, "hodge-number",
             json{{"genus", *genus}, {"lambda", lambda}, {"psi", psi}}, rational_json(value),
             {value.get_str()}, {latex_math(value.get_str())});
        return 0;
      };
    });
  }

  // --- hierarchy -----------------------------------------------------------
  {
    auto* sub = app.add_subcommand(
        "hierarchy", "Print a flow of the deformed hierarchy, truncated at eps^K");
    auto opts = std::make_shared<CommonOpts>();
    auto order = std::make_shared<unsigned>(4);
    auto flow_q = std::make_shared<unsigned>(1);
    sub->add_option("--order", *order, "Even truncation order K of eps")
        ->capture_default_str();
    sub->add_option("--flow", *flow_q, "Time index q of the flow d w/d t_q")
        ->capture_default_str();
    add_common(sub, *opts);
    sub->callback([&action, opts, order, flow_q] {
      action = [opts, order, flow_q]() -> int {
        if (*order % 2) throw CLI::ValidationError("--order", "must be even");
        hodge::DiskCache cache = open_cache(*opts);
        hodge::HodgeRecursion rec(hodge::make_context(*order / 2),
                                  cache.enabled() ? &cache : nullptr);
        hodge::HierarchyBuilder hb(rec, static_cast<int>(*order));
        const EpsSeries& f = hb.flow(*flow_q);
        emit(*opts, "hierarchy", json{{"order", *order}, {"flow", *flow_q}}, series_json(f),
             series_text_lines(f),
             {latex_math("\\frac{\\partial w}{\\partial t_{" + std::to_string(*flow_q) +
                         "}} = " + series_latex(f))});
        return 0;
      };
    });
  }

  // --- ham-operator --------------------------------------------------------
  {
    auto* sub = app.add_subcommand(
        "ham-operator", "Print the deformed Hamiltonian operator, truncated at eps^K");
    auto opts = std::make_shared<CommonOpts>();
    auto order = std::make_shared<unsigned>(4);
    sub->add_option("--order", *order, "Even truncation order K of eps")
        ->capture_default_str();
    add_common(sub, *opts);
    sub->callback([&action, opts, order] {
      action = [opts, order]() -> int {
        if (*order % 2) throw CLI::ValidationError("--order", "must be even");
        hodge::DiskCache cache = open_cache(*opts);
        hodge::HodgeRecursion rec(hodge::make_context(*order / 2),
                                  cache.enabled() ? &cache : nullptr);
        hodge::HierarchyBuilder hb(rec, static_cast<int>(*order));
        const DiffOperator& op = hb.hamiltonian_operator();
        emit(*opts, "ham-operator", json{{"order", *order}}, operator_json(op),
             operator_text_lines(op),
             {latex_math("\\widetilde P = " + operator_latex(op))});
        return 0;
      };
    });
  }

  // --- specialize ----------------------------------------------------------
  {
    auto* sub = app.add_subcommand(
        "specialize", "Specialize the hierarchy (ilw | volterra | cubic), optionally verified");
    auto opts = std::make_shared<CommonOpts>();
    auto which = std::make_shared<std::string>();
    auto order = std::make_shared<unsigned>(4);
    auto samples_text = std::make_shared<std::string>();
    auto check = std::make_shared<bool>(false);
    sub->add_option("which", *which, "Specialization name")
        ->required()
        ->check(CLI::IsMember({"ilw", "volterra", "cubic"}));
    sub->add_option("--order", *order, "Even truncation order K of eps")
        ->capture_default_str();
    sub->add_option("--samples", *samples_text,
                    "cubic only: rational (p,q) samples, e.g. \"1,1;-2,1;2,3\"");
    sub->add_flag("--check", *check, "Verify against the closed-form target equations");
    add_common(sub, *opts);
    sub->callback([&action, opts, which, order, samples_text, check] {
      action = [opts, which, order, samples_text, check]() -> int {
        if (*order % 2) throw CLI::ValidationError("--order", "must be even");
        const unsigned npar = std::max(1u, *order / 2);
        hodge::DiskCache cache = open_cache(*opts);
        hodge::HodgeRecursion rec(hodge::make_context(npar),
                                  cache.enabled() ? &cache : nullptr);
        std::vector<std::pair<rat, rat>> samples = {
            {rat(1), rat(1)}, {rat(0), rat(1)}, {rat(-2), rat(1)}, {rat(2), rat(3)}};
        if (!samples_text->empty()) samples = parse_samples(*samples_text);

        json inputs{{"which", *which}, {"order", *order}, {"check", *check}};
        if (*which == "cubic") {
          json js = json::array();
          for (const auto& [p, q] : samples)
            js.push_back(json{{"p", p.get_str()}, {"q", q.get_str()}});
          inputs["samples"] = std::move(js);
        }

        if (*check) {
          hodge::CheckReport report;
          if (*which == "ilw")
            report = hodge::ilw_check(rec, static_cast<int>(*order));
          else if (*which == "volterra")
            report = hodge::volterra_check(rec, static_cast<int>(*order));
          else
            report = hodge::cubic_check(rec, static_cast<int>(*order), samples);
          std::vector<std::string> text = report.lines;
          text.push_back(report.ok ? "all checks passed" : "CHECKS FAILED");
          emit(*opts, "specialize", std::move(inputs), report_json(report.ok, report.lines),
               text, {latex_item_list(text)});
          return report.ok ? 0 : 1;
        }

        // No --check: print the substituted flow and operator.
        hodge::HierarchyBuilder hb(rec, static_cast<int>(*order));
        if (*which == "ilw") {
          const context_ptr sctx = hodge::make_context({"s1"}, {1});
          std::vector<DiffPoly> images;
          for (unsigned k = 1; k <= npar; ++k)
            images.push_back(DiffPoly::param(sctx, 0, static_cast<int>(2 * k - 1)) *
                             hodge::ilw_s_coefficient(k));
          const EpsSeries flow = substituted_series(hb.flow(1), sctx, images);
          const DiffOperator op =
              substituted_operator(hb.hamiltonian_operator(), sctx, images);
          std::vector<std::string> text{"flow d w/d t_1 (depth parameter prints as s1):"};
          for (std::string& l : series_text_lines(flow, "  ")) text.push_back(std::move(l));
          text.push_back("operator:");
          for (std::string& l : operator_text_lines(op)) text.push_back("  " + l);
          json result{{"kind", "specialization"},
                      {"flow", series_json(flow)},
                      {"operator", operator_json(op)}};
          emit(*opts, "specialize", std::move(inputs), std::move(result), text,
               {latex_math("\\frac{\\partial w}{\\partial t_{1}} = " + series_latex(flow)),
                latex_math("\\widetilde P = " + operator_latex(op))});
          return 0;
        }
        if (*which == "volterra") {
          const context_ptr zctx = hodge::make_context(0);
          std::vector<DiffPoly> images;
          for (unsigned k = 1; k <= npar; ++k)
            images.push_back(
                DiffPoly::constant(zctx, hodge::volterra_s_coefficient(k)));
          const EpsSeries flow = substituted_series(hb.flow(1), zctx, images);
          const DiffOperator op =
              substituted_operator(hb.hamiltonian_operator(), zctx, images);
          std::vector<std::string> text{"flow d w/d t_1 at the lattice point s = 1:"};
          for (std::string& l : series_text_lines(flow, "  ")) text.push_back(std::move(l));
          text.push_back("operator:");
          for (std::string& l : operator_text_lines(op)) text.push_back("  " + l);
          json result{{"kind", "specialization"},
                      {"flow", series_json(flow)},
                      {"operator", operator_json(op)}};
          emit(*opts, "specialize", std::move(inputs), std::move(result), text,
               {latex_math("\\frac{\\partial w}{\\partial t_{1}} = " + series_latex(flow)),
                latex_math("\\widetilde P = " + operator_latex(op))});
          return 0;
        }
        // cubic: operator at each sample.
        const context_ptr zctx = hodge::make_context(0);
        std::vector<std::string> text;
        std::vector<std::string> latex_lines;
        json per_sample = json::array();
        for (const auto& [p, q] : samples) {
          std::vector<DiffPoly> images;
          for (unsigned k = 1; k <= npar; ++k)
            images.push_back(DiffPoly::constant(zctx, hodge::cubic_s_value(k, p, q)));
          const DiffOperator op =
              substituted_operator(hb.hamiltonian_operator(), zctx, images);
          text.push_back("operator at (p,q) = (" + p.get_str() + "," + q.get_str() + "):");
          for (std::string& l : operator_text_lines(op)) text.push_back("  " + l);
          per_sample.push_back(json{{"p", p.get_str()},
                                    {"q", q.get_str()},
                                    {"operator", operator_json(op)}});
          latex_lines.push_back(
              latex_math("\\widetilde P\\big|_{(p,q)=(" + p.get_str() + "," + q.get_str() +
                         ")} = " + operator_latex(op)));
        }
        emit(*opts, "specialize", std::move(inputs),
             json{{"kind", "specialization"}, {"samples", std::move(per_sample)}}, text,
             latex_lines);
        return 0;
      };
    });
  }

  // --- normal-form ---------------------------------------------------------
  {
    auto* sub = app.add_subcommand(
        "normal-form",
        "Reduce the first Hamiltonian density to standard form, truncated at eps^K");
    auto opts = std::make_shared<CommonOpts>();
    auto order = std::make_shared<unsigned>(6);
    auto check = std::make_shared<bool>(false);
    sub->add_option("--order", *order, "Even truncation order K of eps")
        ->capture_default_str();
    sub->add_flag("--check", *check, "Verify coefficients, the b_1 relation and the s-maps");
    add_common(sub, *opts);
    sub->callback([&action, opts, order, check] {
      action = [opts, order, check]() -> int {
        if (*order % 2) throw CLI::ValidationError("--order", "must be even");
        const unsigned npar = std::max(1u, *order / 2);
        hodge::DiskCache cache = open_cache(*opts);
        hodge::HodgeRecursion rec(hodge::make_context(npar),
                                  cache.enabled() ? &cache : nullptr);
        json inputs{{"order", *order}, {"check", *check}};
        if (*check) {
          const hodge::CheckReport report =
              hodge::normal_form_check(rec, static_cast<int>(*order));
          std::vector<std::string> text = report.lines;
          text.push_back(report.ok ? "all checks passed" : "CHECKS FAILED");
          emit(*opts, "normal-form", std::move(inputs),
               report_json(report.ok, report.lines), text, {latex_item_list(text)});
          return report.ok ? 0 : 1;
        }
        const hodge::NormalFormResult nf =
            hodge::normal_form_h1(rec, static_cast<int>(*order));
        std::vector<std::string> text{"standard form of the density:"};
        for (std::string& l : series_text_lines(nf.standard, "  ")) text.push_back(std::move(l));
        text.push_back("normal Miura shift B (w~ = w + eps^2 dx^2 B):");
        for (std::string& l : series_text_lines(nf.B, "  ")) text.push_back(std::move(l));
        text.push_back("a0: " + nf.a0.to_text());
        text.push_back("a1: " + nf.a1.to_text());
        text.push_back("a2: " + nf.a2.to_text());
        text.push_back("b1: " + nf.b1.to_text());
        json result{{"kind", "normal-form"},
                    {"ok", nf.ok},
                    {"standard", series_json(nf.standard)},
                    {"B", series_json(nf.B)},
                    {"a0", poly_json(nf.a0)},
                    {"a1", poly_json(nf.a1)},
                    {"a2", poly_json(nf.a2)},
                    {"b1", poly_json(nf.b1)}};
        emit(*opts, "normal-form", std::move(inputs), std::move(result), text,
             {latex_math("\\hat h_1 = " + series_latex(nf.standard)),
              latex_math("B = " + series_latex(nf.B)),
              latex_math("a_0 = " + nf.a0.to_latex()), latex_math("a_1 = " + nf.a1.to_latex()),
              latex_math("a_2 = " + nf.a2.to_latex()),
              latex_math("b_1 = " + nf.b1.to_latex())});
        return nf.ok ? 0 : 1;
      };
    });
  }

  // --- verify --------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("verify", "Run the structural property suites");
    auto opts = std::make_shared<CommonOpts>();
    auto suite = std::make_shared<std::string>("core");
    auto seed = std::make_shared<std::uint64_t>(20260819ULL);
    sub->add_option("--suite", *suite, "Suite collection name")
        ->check(CLI::IsMember({"core"}))
        ->capture_default_str();
    sub->add_option("--seed", *seed, "Seed for the randomized suites")->capture_default_str();
    add_common(sub, *opts);
    sub->callback([&action, opts, suite, seed] {
      action = [opts, suite, seed]() -> int {
        hodge::DiskCache cache = open_cache(*opts);
        hodge::HodgeRecursion rec(hodge::make_context(4),
                                  cache.enabled() ? &cache : nullptr);
        const std::vector<hodge::SuiteResult> results =
            hodge::core_property_suites(rec, *seed);
        bool all_ok = true;
        std::vector<std::string> text;
        json suites = json::array();
        for (const hodge::SuiteResult& r : results) {
          all_ok = all_ok && r.ok;
          std::string line = r.name;
          line.resize(std::max<std::size_t>(line.size() + 2, 34), ' ');
          line += (r.ok ? "ok      " : "FAILED  ") + std::to_string(r.cases) + " cases";
          text.push_back(std::move(line));
          for (const std::string& f : r.failures) text.push_back("    " + f);
          suites.push_back(json{{"name", r.name},
                                {"ok", r.ok},
                                {"cases", r.cases},
                                {"failures", r.failures}});
        }
        text.push_back(all_ok ? "all suites passed" : "SUITES FAILED");
        emit(*opts, "verify", json{{"suite", *suite}, {"seed", *seed}},
             json{{"kind", "suites"}, {"ok", all_ok}, {"suites", std::move(suites)}}, text,
             {latex_item_list(text)});
        return all_ok ? 0 : 1;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
