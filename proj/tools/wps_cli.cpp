// wps: command-line front end for weighted projective spaces over F_q.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wps/wps.hpp"

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string field = "2";
  std::string weights;
  long degree = -1;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
  std::uint64_t max_tuples = wps::kDefaultEnumerationBudget;
  std::uint64_t max_candidates = wps::kDefaultCandidateBudget;
  std::uint64_t max_codewords = wps::kDefaultCodewordBudget;
};

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kOverBudget = 3 };

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw wps::InvalidArgument("cannot write '" + cfg.out + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json point_json(const wps::WeightedPoint& pt) {
  json a = json::array();
  for (auto x : pt.coords) a.push_back(x.index());
  return a;
}

std::vector<std::uint32_t> parse_q_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(wps::parse_field(item).order());
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty())
      throw wps::InvalidArgument("malformed integer list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

void require_degree(const RunConfig& cfg) {
  if (cfg.degree < 0) throw wps::InvalidArgument("--d is required");
}

wps::WeightSystem require_weights(const RunConfig& cfg) {
  if (cfg.weights.empty()) throw wps::InvalidArgument("--weights is required");
  return wps::WeightSystem::parse(cfg.weights);
}

int cmd_points(const RunConfig& cfg, bool singular) {
  const auto ws = require_weights(cfg);
  const auto ctx = wps::parse_field(cfg.field);
  const auto pts = wps::enumerate_points(ws, ctx, cfg.max_tuples);
  const auto expected = wps::projective_count(ctx.order(), ws.dim());
  std::optional<wps::SingularLocusReport> sing;
  if (singular) sing = wps::singular_locus(ws);

  if (cfg.format == "csv") {
    emit(cfg, wps::points_csv(pts));
  } else if (cfg.format == "json") {
    json j{{"weights", ws.weights()}, {"q", ctx.order()}, {"seed", cfg.seed},
           {"count", pts.size()}, {"expected", expected}, {"matches", pts.size() == expected},
           {"char_divides_weight", pts.char_divides_weight()}};
    json rows = json::array();
    for (const auto& pt : pts) rows.push_back(point_json(pt));
    j["points"] = rows;
    if (sing) {
      json comps = json::array();
      for (const auto& c : sing->components)
        comps.push_back({{"prime", c.prime}, {"indices", c.indices}, {"dimension", c.dimension}});
      j["singular"] = {{"sigma", sing->sigma}, {"components", comps}};
    }
    emit(cfg, dump(j));
  } else {
    std::ostringstream o;
    o << "P(" << ws.to_string() << ") over F_" << ctx.to_string() << ": " << pts.size()
      << " points, p_" << ws.dim() << " = " << expected
      << (pts.size() == expected ? " (match)" : " (MISMATCH)") << "\n";
    if (pts.char_divides_weight()) o << "note: the characteristic divides a weight\n";
    o << "seed " << cfg.seed << "\n";
    for (const auto& pt : pts) o << pt.to_string() << "\n";
    if (sing) {
      if (sing->smooth()) {
        o << "singular locus: empty\n";
      } else {
        o << "singular primes: {";
        for (std::size_t i = 0; i < sing->sigma.size(); ++i) o << (i ? "," : "") << sing->sigma[i];
        o << "}\n";
      }
      for (const auto& c : sing->components) {
        o << "singular component p = " << c.prime << ": I = {";
        for (std::size_t i = 0; i < c.indices.size(); ++i) o << (i ? "," : "") << c.indices[i];
        o << "}, dimension " << c.dimension << "\n";
      }
    }
    emit(cfg, o.str());
  }
  return pts.size() == expected ? kOk : kCheckFailed;
}

json bounds_json(const std::vector<wps::BoundReport>& bounds) {
  json a = json::array();
  for (const auto& b : bounds)
    a.push_back({{"name", b.name}, {"value", b.value}, {"bound", b.bound},
                 {"satisfied", b.satisfied}, {"sharp", wps::to_string(b.sharp)},
                 {"attained", b.attained}});
  return a;
}

int cmd_count_zeros(const RunConfig& cfg, const std::string& poly, bool check) {
  const auto ws = require_weights(cfg);
  const auto ctx = wps::parse_field(cfg.field);
  const auto f = wps::parse_polynomial(poly, ws, ctx);
  const auto pts = wps::enumerate_points(ws, ctx, cfg.max_tuples);
  const auto value = wps::count_zeros(ctx, f, pts);
  std::vector<wps::BoundReport> bounds;
  if (check) bounds = wps::check_bounds(ctx, f, pts, std::min<std::uint64_t>(cfg.max_candidates, wps::kDefaultSharpnessBudget));
  bool ok = true;
  for (const auto& b : bounds) ok = ok && b.satisfied;
  if (cfg.format == "json") {
    json j{{"weights", ws.weights()}, {"d", f.degree()}, {"q", ctx.order()}, {"seed", cfg.seed},
           {"polynomial", wps::to_string(f)}, {"value", value}};
    if (check) j["bounds"] = bounds_json(bounds);
    emit(cfg, dump(j));
  } else if (cfg.format == "csv") {
    std::ostringstream o;
    o << "weights,d,q,value,bound_name,bound,satisfied,sharp\n";
    if (bounds.empty()) o << ws.to_string(';') << ',' << f.degree() << ',' << ctx.order() << ',' << value << ",,,,\n";
    for (const auto& b : bounds)
      o << ws.to_string(';') << ',' << f.degree() << ',' << ctx.order() << ',' << value << ','
        << b.name << ',' << b.bound << ',' << (b.satisfied ? "yes" : "no") << ','
        << wps::to_string(b.sharp) << '\n';
    emit(cfg, o.str());
  } else {
    std::ostringstream o;
    o << "F = " << wps::to_string(f) << " (degree " << f.degree() << ") on P(" << ws.to_string()
      << ") over F_" << ctx.to_string() << "\n|V(F)| = " << value << "\n";
    for (const auto& b : bounds)
      o << b.name << ": " << b.value << " <= " << b.bound << (b.satisfied ? " ok" : " VIOLATED")
        << ", sharp " << wps::to_string(b.sharp) << (b.attained ? ", attained" : "") << "\n";
    emit(cfg, o.str());
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_eq_search(const RunConfig& cfg) {
  const auto ws = require_weights(cfg);
  require_degree(cfg);
  const auto ctx = wps::parse_field(cfg.field);
  const auto pts = wps::enumerate_points(ws, ctx, cfg.max_tuples);
  const auto r = wps::eq_oracle(ctx, pts, cfg.degree, cfg.max_candidates);
  const auto lower = wps::serre_lower_bound(ws, cfg.degree, ctx.order());
  if (cfg.format == "json") {
    json j{{"weights", ws.weights()}, {"d", cfg.degree}, {"q", ctx.order()}, {"seed", cfg.seed},
           {"defined", r.defined}};
    j["value"] = r.defined ? json(r.value) : json(nullptr);
    j["bound"] = lower ? json(*lower) : json(nullptr);
    j["witness_polynomial"] = r.witness ? json(wps::to_string(*r.witness)) : json(nullptr);
    j["candidates"] = r.candidates;
    emit(cfg, dump(j));
  } else if (cfg.format == "csv") {
    std::ostringstream o;
    o << "weights,d,q,value,bound,witness_polynomial,candidates\n"
      << ws.to_string(';') << ',' << cfg.degree << ',' << ctx.order() << ','
      << (r.defined ? std::to_string(r.value) : "undefined") << ','
      << (lower ? std::to_string(*lower) : "") << ','
      << (r.witness ? wps::to_string(*r.witness) : "") << ',' << r.candidates << '\n';
    emit(cfg, o.str());
  } else {
    std::ostringstream o;
    o << "e_" << ctx.order() << "(" << cfg.degree << "; " << ws.to_string() << ") = ";
    if (!r.defined) {
      o << "undefined (S_" << cfg.degree << " = 0)\n";
    } else {
      o << r.value << "\nwitness: " << wps::to_string(*r.witness) << "\ncandidates: "
        << r.candidates << "\n";
      if (lower) o << "lower bound: " << *lower << "\n";
    }
    emit(cfg, o.str());
  }
  return kOk;
}

int cmd_family(const RunConfig& cfg, const std::string& m0, const std::string& m1,
               const std::string& t, int ell, const std::string& mu0, const std::string& mu1) {
  const auto ws = require_weights(cfg);
  const auto ctx = wps::parse_field(cfg.field);
  wps::FamilySpec spec{wps::PrimitivePair::make(ws, parse_int_list(m0), parse_int_list(m1)),
                       {},
                       mu0.empty() ? wps::Exponents(ws.size(), 0) : parse_int_list(mu0),
                       mu1.empty() ? wps::Exponents(ws.size(), 0) : parse_int_list(mu1)};
  if (!t.empty()) {
    for (int x : parse_int_list(t)) {
      if (x < 0) throw wps::InvalidArgument("t values must be field indices");
      spec.t.push_back(ctx.element(static_cast<std::uint32_t>(x)));
    }
  } else {
    if (ell < 0 || static_cast<std::uint32_t>(ell) >= ctx.order())
      throw wps::InvalidArgument("--ell must lie in [0, q-1]");
    for (int i = 1; i <= ell; ++i) spec.t.push_back(ctx.element(static_cast<std::uint32_t>(i)));
  }
  const auto f = wps::build_family(ctx, ws, spec);
  const auto pts = wps::enumerate_points(ws, ctx, cfg.max_tuples);
  const auto brute = wps::count_zeros(ctx, f, pts);
  const auto closed = wps::family_count_closed_form(spec, ctx.order(), ws.dim());
  if (cfg.format == "json") {
    json j{{"weights", ws.weights()}, {"d", f.degree()}, {"q", ctx.order()}, {"seed", cfg.seed},
           {"ell", spec.ell()}, {"s0", spec.pair.s0}, {"s1", spec.pair.s1},
           {"sigma0", spec.sigma0()}, {"sigma1", spec.sigma1()},
           {"value", brute}, {"bound", closed}, {"matches", brute == closed},
           {"witness_polynomial", wps::to_string(f)}};
    emit(cfg, dump(j));
  } else if (cfg.format == "csv") {
    std::ostringstream o;
    o << "weights,d,q,ell,s0,s1,sigma0,sigma1,value,closed_form\n"
      << ws.to_string(';') << ',' << f.degree() << ',' << ctx.order() << ',' << spec.ell() << ','
      << spec.pair.s0 << ',' << spec.pair.s1 << ',' << spec.sigma0() << ',' << spec.sigma1()
      << ',' << brute << ',' << closed << '\n';
    emit(cfg, o.str());
  } else {
    std::ostringstream o;
    o << "F = " << wps::to_string(f) << "\ndegree " << f.degree() << ", (ell, s0, s1, sigma0, sigma1) = ("
      << spec.ell() << ", " << spec.pair.s0 << ", " << spec.pair.s1 << ", " << spec.sigma0() << ", "
      << spec.sigma1() << ")\nbrute force: " << brute << "\nclosed form: " << closed
      << (brute == closed ? " (match)" : " (MISMATCH)") << "\n";
    emit(cfg, o.str());
  }
  return brute == closed ? kOk : kCheckFailed;
}

int cmd_lines(const RunConfig& cfg, bool check) {
  const auto ws = require_weights(cfg);
  const auto ctx = wps::parse_field(cfg.field);
  const wps::LineSystem sys(ws, ctx);
  const auto lines = sys.catalog();
  std::ostringstream o;
  json rows = json::array();
  if (cfg.format == "csv") o << "line,points\n";
  for (const auto& l : lines) {
    const auto pts = sys.line_points(l);
    if (cfg.format == "csv") {
      o << l.to_string() << ',';
      for (std::size_t i = 0; i < pts.size(); ++i) o << (i ? " " : "") << pts[i].to_string();
      o << '\n';
    } else if (cfg.format == "json") {
      json p = json::array();
      for (const auto& pt : pts) p.push_back(point_json(pt));
      rows.push_back({{"line", l.to_string()}, {"points", p}});
    }
  }
  wps::SuiteReport rep{"lines", cfg.seed};
  if (check) {
    std::mt19937_64 rng(cfg.seed);
    wps::check_line_incidences(ws, ctx, rng, rep);
  }
  if (cfg.format == "json") {
    json j{{"weights", ws.weights()}, {"q", ctx.order()}, {"seed", cfg.seed},
           {"line_count", lines.size()}, {"lines", rows}};
    if (check)
      j["check"] = {{"checks", rep.checks}, {"failed", rep.failed}, {"failures", rep.failures}};
    emit(cfg, dump(j));
  } else if (cfg.format == "text") {
    o << "P(" << ws.to_string() << ") over F_" << ctx.to_string() << ": " << lines.size()
      << " lines\ntype   count  points per line\n";
    for (auto kind : {wps::LineKind::Type0, wps::LineKind::Type1, wps::LineKind::Type2}) {
      std::size_t count = 0;
      std::set<std::size_t> sizes;
      for (const auto& l : lines)
        if (l.kind == kind) {
          ++count;
          sizes.insert(sys.line_points(l).size());
        }
      std::string sz;
      for (auto v : sizes) sz += (sz.empty() ? "" : ",") + std::to_string(v);
      const std::string c = std::to_string(count);
      o << "type" << static_cast<int>(kind) << "  " << c << std::string(c.size() < 7 ? 7 - c.size() : 1, ' ')
        << sz << "\n";
    }
    if (check) {
      o << "incidence checks: " << rep.checks << ", failed: " << rep.failed << "\n";
      for (const auto& f : rep.failures) o << "  " << f << "\n";
    }
    emit(cfg, o.str());
  } else {
    emit(cfg, o.str());
  }
  return rep.failed == 0 ? kOk : kCheckFailed;
}

json params_json(const wps::CodeParameters& p) {
  json j{{"code", wps::to_string(p.kind)}, {"q", p.q}, {"m", p.m}, {"d", p.d},
         {"weights", p.ws.weights()}, {"n", p.n}, {"k", p.k}, {"d_min", p.d_min},
         {"d_min_source", wps::to_string(p.source)}, {"exact", p.exact},
         {"cross_checked", p.cross_checked}};
  j["witness_weight"] = p.witness_weight ? json(*p.witness_weight) : json(nullptr);
  j["lambda_exact"] = wps::rational_string(p.lambda);
  j["lambda"] = wps::truncate_decimal(p.lambda);
  j["rate"] = wps::rational_string(p.rate);
  j["delta"] = wps::rational_string(p.delta);
  return j;
}

int cmd_code(const RunConfig& cfg, const std::string& kind_s, int m, const std::string& method_s,
             const std::string& matrix_path) {
  require_degree(cfg);
  const auto ctx = wps::parse_field(cfg.field);
  const auto kind = wps::parse_code_kind(kind_s);
  std::optional<wps::WeightSystem> ws;
  if (!cfg.weights.empty()) ws = wps::WeightSystem::parse(cfg.weights);
  if (kind == wps::CodeKind::WPRM && !ws) throw wps::InvalidArgument("WPRM codes need --weights");
  if (ws && kind == wps::CodeKind::WPRM) m = ws->dim();
  const auto code = wps::build_code(ctx, kind, m, cfg.degree, ws);
  const auto p = wps::code_parameters(ctx, code, wps::parse_dmin_method(method_s), cfg.max_codewords);
  if (!matrix_path.empty()) {
    std::ofstream f(matrix_path, std::ios::binary);
    if (!f) throw wps::InvalidArgument("cannot write '" + matrix_path + "'");
    f << wps::matrix_text(code);
  }
  if (cfg.format == "json") {
    auto j = params_json(p);
    j["seed"] = cfg.seed;
    emit(cfg, dump(j));
  } else if (cfg.format == "csv") {
    emit(cfg, std::string(wps::kTableCsvHeader) + "\n" + wps::table_csv_row(p) + "\n");
  } else {
    std::ostringstream o;
    o << wps::to_string(p.kind) << "_" << p.q << "(" << p.d << "," << p.m;
    if (p.kind == wps::CodeKind::WPRM) o << "; (" << p.ws.to_string() << ")";
    o << "): [" << p.n << ", " << p.k << ", " << p.d_min << "]\n"
      << "d_min source: " << wps::to_string(p.source) << (p.exact ? "" : " (upper bound only)")
      << (p.cross_checked ? ", confirmed exhaustively" : "") << "\n";
    if (p.witness_weight) o << "witness codeword weight: " << *p.witness_weight << "\n";
    o << "lambda = " << wps::rational_string(p.lambda) << " = " << wps::truncate_decimal(p.lambda)
      << "...\n";
    emit(cfg, o.str());
  }
  return kOk;
}

int cmd_table(RunConfig cfg, bool f19) {
  if (f19) {
    cfg.field = "19";
    cfg.degree = 16;
  }
  require_degree(cfg);
  if (cfg.format == "text") cfg.format = "csv";
  const auto ctx = wps::parse_field(cfg.field);
  const auto rows = wps::comparison_table(ctx, cfg.degree, wps::plane_table_entries(),
                                          wps::DminMethod::Auto, cfg.max_codewords);
  if (cfg.format == "json") {
    json j{{"q", ctx.order()}, {"d", cfg.degree}, {"seed", cfg.seed}};
    json a = json::array();
    for (const auto& r : rows) a.push_back(params_json(r));
    j["codes"] = a;
    const auto cmp = wps::lambda_compare(rows);
    json checks = json::array();
    for (const auto& c : cmp.checks)
      checks.push_back({{"name", c.name}, {"weights", c.ws.weights()}, {"k", c.k},
                        {"threshold", wps::rational_string(c.threshold)}, {"applies", c.applies},
                        {"holds", c.holds}});
    j["lambda_checks"] = checks;
    emit(cfg, dump(j));
  } else {
    emit(cfg, wps::table_csv(rows));
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, const std::string& qs,
               int max_weight, std::uint64_t samples) {
  wps::VerifyOptions opt;
  if (!qs.empty()) opt.qs = parse_q_list(qs);
  opt.max_weight = max_weight;
  opt.samples = samples;
  opt.seed = cfg.seed;
  opt.budget = cfg.max_candidates;
  std::vector<std::string> names;
  if (suite == "all")
    names = wps::suite_names();
  else
    names.push_back(suite);
  std::vector<wps::SuiteReport> reports;
  for (const auto& n : names) reports.push_back(wps::run_suite(n, opt));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (cfg.format == "json") {
    json a = json::array();
    for (const auto& r : reports)
      a.push_back({{"suite", r.suite}, {"seed", r.seed}, {"checks", r.checks},
                   {"failed", r.failed}, {"skipped", r.skipped}, {"passed", r.passed()},
                   {"failures", r.failures}});
    emit(cfg, dump(json{{"seed", cfg.seed}, {"passed", ok}, {"suites", a}}));
  } else if (cfg.format == "csv") {
    std::ostringstream o;
    o << "suite,seed,checks,failed,skipped,status\n";
    for (const auto& r : reports)
      o << r.suite << ',' << r.seed << ',' << r.checks << ',' << r.failed << ',' << r.skipped << ','
        << (r.passed() ? "pass" : "fail") << '\n';
    emit(cfg, o.str());
  } else {
    std::ostringstream o;
    o << "seed " << cfg.seed << "\n";
    for (const auto& r : reports) {
      o << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.checks << " checks, "
        << r.failed << " failed, " << r.skipped << " skipped\n";
      for (const auto& f : r.failures) o << "  " << f << "\n";
    }
    emit(cfg, o.str());
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted projective spaces over finite fields and WPRM codes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool weights, bool degree, bool field = true) {
    if (field) sub->add_option("--q", cfg.field, "Field order q or p^e");
    if (weights) sub->add_option("--weights", cfg.weights, "Weights a0,...,am");
    if (degree) sub->add_option("--d", cfg.degree, "Weighted degree");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out, "Write the report to this file");
    sub->add_option("--seed", cfg.seed, "Seed for randomized suites");
    sub->add_option("--max-tuples", cfg.max_tuples, "Point enumeration budget");
    sub->add_option("--max-candidates", cfg.max_candidates, "Candidate polynomial budget");
    sub->add_option("--max-codewords", cfg.max_codewords, "Codeword class budget");
  };

  bool singular = false, check = false, f19 = false;
  std::string poly, m0, m1, t, mu0, mu1, kind = "wprm", method = "auto", matrix, suite = "all",
                                           qs;
  int ell = 0, m = 2, max_weight = 0;
  std::uint64_t samples = 10'000;

  auto* points = app.add_subcommand("points", "Enumerate rational points");
  common(points, true, false);
  points->add_flag("--singular", singular, "Append the singular locus");

  auto* count = app.add_subcommand("count-zeros", "Count the rational zeros of a polynomial");
  common(count, true, false);
  count->add_option("--poly", poly, "Polynomial such as '1*X0^2*X1 + 2*X2'")->required();
  count->add_flag("--check", check, "Check every applicable upper bound");

  auto* eq = app.add_subcommand("eq-search", "Exhaustive maximum number of zeros in S_d");
  common(eq, true, true);

  auto* family = app.add_subcommand("family", "Product family of a primitive pair");
  common(family, true, false);
  family->add_option("--m0", m0, "Exponents of M0")->required();
  family->add_option("--m1", m1, "Exponents of M1")->required();
  family->add_option("--t", t, "Field indices of the distinct nonzero t_i");
  family->add_option("--ell", ell, "Use t_i = 1..ell when --t is absent");
  family->add_option("--mu0", mu0, "Exponents of mu0");
  family->add_option("--mu1", mu1, "Exponents of mu1");

  auto* lines = app.add_subcommand("lines", "Line catalog of P(1,a1,a2)");
  common(lines, true, false);
  lines->add_flag("--check", check, "Run the incidence checks");

  auto* code = app.add_subcommand("code", "Parameters of an RM, PRM or WPRM code");
  common(code, true, true);
  code->add_option("--kind", kind, "rm, prm or wprm");
  code->add_option("--m", m, "Dimension for RM and PRM");
  code->add_option("--method", method, "auto, formula or exhaustive");
  code->add_option("--matrix", matrix, "Export the generator matrix to this file");

  auto* table = app.add_subcommand("table", "RM/PRM/WPRM comparison table on the plane");
  common(table, false, true);
  table->add_flag("--paper-f19", f19, "q = 19, d = 16");

  auto* verify = app.add_subcommand("verify", "Oracle-versus-formula suites");
  common(verify, false, false, false);
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--q", qs, "Comma separated field orders")->expected(1);
  verify->add_option("--max-weight", max_weight, "Largest weight in the grid");
  verify->add_option("--samples", samples, "Random polynomials per bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*points) return cmd_points(cfg, singular);
    if (*count) return cmd_count_zeros(cfg, poly, check);
    if (*eq) return cmd_eq_search(cfg);
    if (*family) return cmd_family(cfg, m0, m1, t, ell, mu0, mu1);
    if (*lines) return cmd_lines(cfg, check);
    if (*code) return cmd_code(cfg, kind, m, method, matrix);
    if (*table) return cmd_table(cfg, f19);
    if (*verify) return cmd_verify(cfg, suite, qs, max_weight, samples);
  } catch (const wps::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOverBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
