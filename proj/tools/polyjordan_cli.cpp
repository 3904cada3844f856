// Command-line front end. Every subcommand prints either plain text or one
// JSON object {"command", "input", "result", "diagnostics"}.
//
// Exit codes: 0 success, 1 domain error, 2 parse/usage error,
// 3 contour failure (no convergence or root on the contour).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyjordan/polyjordan.hpp"

namespace pj = polyjordan;
using nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitContour = 3;

struct PolyOptions {
  std::string text;
  std::string file;
  std::uint64_t degree_cap = pj::kDefaultDegreeCap;
};

struct Report {
  std::string command;
  json input = json::object();
  json result = json::object();
  json diagnostics = json::object();
};

std::string count_str(std::size_t n) { return std::to_string(n); }

void add_poly_options(CLI::App* cmd, PolyOptions& opts) {
  auto* inline_opt = cmd->add_option("-f,--poly", opts.text, "Polynomial in x, e.g. \"x^5 - 7*x^2 + 6\"");
  auto* file_opt = cmd->add_option("--poly-file", opts.file, "File containing the polynomial");
  inline_opt->excludes(file_opt);
  cmd->add_option("--degree-cap", opts.degree_cap, "Largest exponent allowed when densifying sparse input")
      ->capture_default_str();
}

pj::PolyExpr read_poly(const PolyOptions& opts) {
  std::string text = opts.text;
  if (!opts.file.empty()) {
    std::ifstream in(opts.file);
    if (!in) throw pj::Error(pj::ErrorKind::InvalidArgument, "cannot read " + opts.file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (opts.text.empty()) {
    throw pj::Error(pj::ErrorKind::InvalidArgument, "a polynomial is required (-f or --poly-file)");
  }
  return pj::parse_poly(text);
}

json describe_input(const pj::PolyExpr& expr) {
  return {{"poly", pj::format_poly(expr.value)}, {"representation", expr.is_sparse() ? "sparse" : "dense"}};
}

pj::Rational parse_rational(const std::string& text) {
  auto expr = pj::parse_poly(text);
  const pj::Poly p = expr.dense();
  if (!p.is_constant()) throw pj::Error(pj::ErrorKind::InvalidArgument, "expected a rational number, got " + text);
  return p.coefficient(0);
}

pj::ExtendedBound parse_bound(std::string text) {
  std::erase_if(text, [](unsigned char c) { return std::isspace(c); });
  if (text == "inf" || text == "+inf") return pj::ExtendedBound::positive_infinity();
  if (text == "-inf") return pj::ExtendedBound::negative_infinity();
  return pj::ExtendedBound(parse_rational(text));
}

json structures_json(const pj::StructureEnumeration& e) {
  json list = json::array();
  for (const auto& s : e.structures) {
    json blocks = json::array();
    std::string notation;
    for (const auto& a : s.assignments) {
      blocks.push_back({{"label", a.label}, {"partition", a.partition.parts}});
      for (std::size_t size : a.partition.parts) {
        if (!notation.empty()) notation += " + ";
        notation += "J" + std::to_string(size) + "(l" + std::to_string(a.label) + ")";
      }
    }
    list.push_back({{"notation", notation}, {"blocks", blocks}});
  }
  return list;
}

json count_report_json(const pj::CountReport& r) {
  json per_k = json::array();
  for (const auto& [k, count] : r.per_k) per_k.push_back({{"k", count_str(k)}, {"count", count.get_str()}});
  return {{"problem", pj::to_string(r.problem)},
          {"n_d", count_str(r.n_d)},
          {"m", count_str(r.m)},
          {"per_k", per_k},
          {"total", r.total.get_str()},
          {"exists", r.exists}};
}

std::string render_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_text(const Report& r) {
  for (auto it = r.input.begin(); it != r.input.end(); ++it) {
    std::cout << it.key() << ": " << render_value(it.value()) << "\n";
  }
  for (auto it = r.result.begin(); it != r.result.end(); ++it) {
    std::cout << it.key() << ": " << render_value(it.value()) << "\n";
  }
}

int exit_code_for(pj::ErrorKind kind) {
  switch (kind) {
    case pj::ErrorKind::Parse:
    case pj::ErrorKind::ExponentOverflow:
      return kExitParse;
    case pj::ErrorKind::NoConvergence:
    case pj::ErrorKind::RootNearContour:
      return kExitContour;
    default:
      return kExitDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root counting and Jordan-structure counting for polynomial matrix functions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON report")->configurable(false);

  auto subcommand = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_flag("--json", as_json, "Emit one JSON report");
    return cmd;
  };

  PolyOptions descartes_opts;
  auto* descartes = subcommand("descartes", "Descartes sign-variation bounds on positive/negative roots");
  add_poly_options(descartes, descartes_opts);

  PolyOptions sturm_opts;
  std::string interval = "-inf,inf";
  auto* sturm = subcommand("sturm", "Exact count of distinct real roots in an open interval");
  add_poly_options(sturm, sturm_opts);
  sturm->add_option("--interval", interval, "Endpoints a,b (rationals, inf, -inf)")->capture_default_str();

  PolyOptions distinct_opts;
  auto* distinct = subcommand("distinct", "Distinct complex roots via gcd(f, f') and square-free decomposition");
  add_poly_options(distinct, distinct_opts);

  PolyOptions annulus_opts;
  double inner = 0.0;
  double outer = 1.0;
  std::size_t samples = pj::ContourConfig{}.initial_samples;
  auto* annulus = subcommand("annulus", "Zeros with multiplicity in inner < |z| < outer (argument principle)");
  add_poly_options(annulus, annulus_opts);
  annulus->add_option("--inner", inner, "Inner radius (0 for a disk)")->capture_default_str();
  annulus->add_option("--outer", outer, "Outer radius")->required();
  annulus->add_option("--samples", samples, "Initial number of contour samples")->capture_default_str();

  PolyOptions rouche_opts;
  std::string radius;
  auto* rouche = subcommand("rouche", "Exact dominant-term Rouche test on |z| < r");
  add_poly_options(rouche, rouche_opts);
  rouche->add_option("--radius", radius, "Rational radius")->required();

  PolyOptions flat_opts;
  std::size_t flat_mhat = 2;
  std::optional<std::size_t> at_least;
  auto* flat = subcommand("flat", "Points with f != 0 and f' = ... = f^(M-1) = 0");
  add_poly_options(flat, flat_opts);
  flat->add_option("--mhat", flat_mhat, "Derivative order bound M >= 2")->required();
  flat->add_option("--at-least", at_least, "Check for at least K distinct flat points");

  PolyOptions nil_opts;
  std::size_t nil_m = 1;
  bool nil_enumerate = false;
  std::size_t nil_limit = 100;
  auto* nilpotent = subcommand("nilpotent", "Count Jordan structures of X with f(X) nilpotent");
  add_poly_options(nilpotent, nil_opts);
  nilpotent->add_option("-m,--dim", nil_m, "Matrix dimension")->required();
  nilpotent->add_flag("--enumerate", nil_enumerate, "List explicit structures");
  nilpotent->add_option("--limit", nil_limit, "Maximum structures to list")->capture_default_str();

  PolyOptions diag_opts;
  std::size_t diag_m = 1;
  std::size_t diag_mhat = 2;
  bool diag_enumerate = false;
  std::size_t diag_limit = 100;
  auto* diagonalizable = subcommand("diagonalizable", "Count Jordan structures of X with f(X) diagonalizable");
  add_poly_options(diagonalizable, diag_opts);
  diagonalizable->add_option("-m,--dim", diag_m, "Matrix dimension")->required();
  diagonalizable->add_option("--mhat", diag_mhat, "Derivative order bound M >= 2")->required();
  diagonalizable->add_flag("--enumerate", diag_enumerate, "List explicit structures");
  diagonalizable->add_option("--limit", diag_limit, "Maximum structures to list")->capture_default_str();

  std::size_t jc_nd = 1;
  std::size_t jc_k = 1;
  std::size_t jc_m = 1;
  auto* jordan_count = subcommand("jordan-count", "C(n_d, K) times the composition-weighted partition sum");
  jordan_count->add_option("--nd", jc_nd, "Number of distinct eigenvalues available")->required();
  jordan_count->add_option("--k", jc_k, "Number of eigenvalues used")->required();
  jordan_count->add_option("-m,--dim", jc_m, "Matrix dimension")->required();

  PolyOptions block_opts;
  std::string lambda;
  std::size_t block_n = 1;
  auto* apply_block = subcommand("apply-block", "First row of f(J_n(lambda))");
  add_poly_options(apply_block, block_opts);
  apply_block->add_option("--lambda", lambda, "Rational eigenvalue a/b")->required();
  apply_block->add_option("-n,--size", block_n, "Block size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  Report report;
  report.command = app.get_subcommands().front()->get_name();

  try {
    if (descartes->parsed()) {
      auto expr = read_poly(descartes_opts);
      report.input = describe_input(expr);
      // Sparse input is handled term by term, without densifying.
      auto bounds = expr.is_sparse() ? pj::descartes_bounds(std::get<pj::SparsePoly>(expr.value))
                                     : pj::descartes_bounds(expr.dense());
      report.result = {{"positive_bound", count_str(bounds.positive)},
                       {"negative_bound", count_str(bounds.negative)}};
    } else if (sturm->parsed()) {
      auto expr = read_poly(sturm_opts);
      report.input = describe_input(expr);
      const auto comma = interval.find(',');
      if (comma == std::string::npos) {
        throw pj::Error(pj::ErrorKind::InvalidArgument, "--interval expects a,b");
      }
      const auto a = parse_bound(interval.substr(0, comma));
      const auto b = parse_bound(interval.substr(comma + 1));
      report.input["interval"] = {a.to_string(), b.to_string()};
      const pj::SturmSequence seq(expr.dense(sturm_opts.degree_cap));
      report.result = {{"count", count_str(pj::sturm_count(seq, a, b))}};
      json chain = json::array();
      for (const auto& p : seq.chain()) chain.push_back(pj::format_poly(p));
      report.diagnostics["sturm_chain"] = chain;
    } else if (distinct->parsed()) {
      auto expr = read_poly(distinct_opts);
      report.input = describe_input(expr);
      const pj::Poly f = expr.dense(distinct_opts.degree_cap);
      const std::size_t n_d = pj::distinct_root_count(f);
      const pj::Poly g = pj::gcd(f, pj::derivative(f));
      const auto sfd = pj::squarefree_decomposition(f);
      json factors = json::array();
      std::size_t degree_sum = 0;
      for (const auto& [factor, k] : sfd.factors) {
        factors.push_back({{"factor", pj::format_poly(factor)}, {"multiplicity", count_str(k)}});
        degree_sum += *factor.degree();
      }
      report.result = {{"n_d", count_str(n_d)},
                       {"degree", count_str(*f.degree())},
                       {"gcd_with_derivative", pj::format_poly(g)},
                       {"gcd_degree", count_str(*g.degree())},
                       {"squarefree", g.is_constant()},
                       {"squarefree_factors", factors},
                       {"unit", pj::to_string(sfd.unit)}};
      report.diagnostics = {{"factor_degree_sum", count_str(degree_sum)}, {"cross_check", degree_sum == n_d}};
    } else if (annulus->parsed()) {
      auto expr = read_poly(annulus_opts);
      report.input = describe_input(expr);
      report.input["inner"] = inner;
      report.input["outer"] = outer;
      pj::ContourConfig cfg;
      cfg.initial_samples = samples;
      if (cfg.max_samples < samples) cfg.max_samples = samples;
      const std::size_t count = pj::annulus_count(expr.dense(annulus_opts.degree_cap), {inner, outer}, cfg);
      report.result = {{"count", count_str(count)}};
      report.diagnostics = {{"multiplicity", "counted"}, {"initial_samples", samples}};
    } else if (rouche->parsed()) {
      auto expr = read_poly(rouche_opts);
      report.input = describe_input(expr);
      const pj::Rational r = parse_rational(radius);
      report.input["radius"] = pj::to_string(r);
      const auto k = pj::rouche_dominant_check(expr.dense(rouche_opts.degree_cap), r);
      if (k) {
        report.result = {{"status", "AllConfirmed"}, {"k", count_str(*k)}};
      } else {
        report.result = {{"status", "Unknown"}};
      }
    } else if (flat->parsed()) {
      auto expr = read_poly(flat_opts);
      report.input = describe_input(expr);
      report.input["m_hat"] = flat_mhat;
      const pj::Poly f = expr.dense(flat_opts.degree_cap);
      const auto loc = pj::locus(f, flat_mhat);
      report.result = {{"g", pj::format_poly(loc.g)},    {"d", pj::format_poly(loc.d)},
                       {"h", pj::format_poly(loc.h)},    {"h_sf", pj::format_poly(loc.h_sf)},
                       {"count", count_str(loc.count)}, {"exists", pj::flat_point_exists(f, flat_mhat)}};
      if (at_least) report.result["at_least"] = pj::has_at_least_k_flat_points(f, flat_mhat, *at_least);
      if (!loc.h_sf.is_constant()) {
        report.diagnostics["real_count"] = count_str(pj::sturm_count(
            loc.h_sf, pj::ExtendedBound::negative_infinity(), pj::ExtendedBound::positive_infinity()));
      }
    } else if (nilpotent->parsed() || diagonalizable->parsed()) {
      const bool nil = nilpotent->parsed();
      auto expr = read_poly(nil ? nil_opts : diag_opts);
      report.input = describe_input(expr);
      const pj::Poly f = expr.dense((nil ? nil_opts : diag_opts).degree_cap);
      const std::size_t m = nil ? nil_m : diag_m;
      report.input["m"] = m;
      if (!nil) report.input["m_hat"] = diag_mhat;
      const auto r = nil ? pj::nilpotency_report(f, m) : pj::diagonalizability_report(f, m, diag_mhat);
      report.result = count_report_json(r);
      if (nil ? nil_enumerate : diag_enumerate) {
        const auto e = pj::enumerate_structures(r.n_d, m, std::nullopt, nil ? nil_limit : diag_limit);
        report.result["structures"] = structures_json(e);
        report.result["truncated"] = e.truncated;
      }
    } else if (jordan_count->parsed()) {
      report.input = {{"n_d", jc_nd}, {"k", jc_k}, {"m", jc_m}};
      const auto count = pj::jordan_count(jc_nd, jc_k, jc_m);
      report.result = {{"count", count.get_str()},
                       {"binomial", pj::binomial(jc_nd, jc_k).get_str()},
                       {"composition_weight", pj::composition_weight(jc_m, jc_k).get_str()}};
    } else if (apply_block->parsed()) {
      auto expr = read_poly(block_opts);
      report.input = describe_input(expr);
      const pj::Rational l = parse_rational(lambda);
      report.input["lambda"] = pj::to_string(l);
      report.input["n"] = block_n;
      const auto t = pj::f_of_jordan_block(expr.dense(block_opts.degree_cap), l, block_n);
      json row = json::array();
      for (const auto& c : t.first_row) row.push_back(pj::to_string(c));
      report.result = {{"first_row", row}};
    }
  } catch (const pj::Error& e) {
    const int code = exit_code_for(e.kind());
    if (as_json) {
      json diag = {{"error", pj::to_string(e.kind())}, {"message", e.what()}};
      if (const auto* pe = dynamic_cast<const pj::ParseError*>(&e)) diag["position"] = pe->position();
      std::cout << json{{"command", report.command},
                        {"input", report.input},
                        {"result", nullptr},
                        {"diagnostics", diag}}
                       .dump(2)
                << "\n";
    } else {
      std::cerr << "error: " << pj::to_string(e.kind()) << ": " << e.what() << "\n";
    }
    return code;
  }

  if (as_json) {
    std::cout << json{{"command", report.command},
                      {"input", report.input},
                      {"result", report.result},
                      {"diagnostics", report.diagnostics}}
                     .dump(2)
              << "\n";
  } else {
    print_text(report);
  }
  return 0;
}
