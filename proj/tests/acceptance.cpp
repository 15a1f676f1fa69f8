// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "wps/wps.hpp"

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

Outcome from_report(const wps::SuiteReport& r, std::uint64_t min_checks = 1) {
  std::ostringstream o;
  o << r.checks << " checks, " << r.failed << " failed, " << r.skipped << " skipped";
  if (!r.failures.empty()) o << "; first: " << r.failures.front();
  return {r.failed == 0 && r.checks >= min_checks, o.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome f19_table() {
  struct Row {
    std::uint64_t n, k, d;
    const char* lambda;
  };
  static constexpr std::array<Row, 7> expected{{{361, 153, 57, "0.581"},
                                                {381, 153, 76, "0.601"},
                                                {381, 45, 228, "0.716"},
                                                {381, 25, 228, "0.664"},
                                                {381, 15, 228, "0.637"},
                                                {381, 15, 304, "0.837"},
                                                {381, 3, 361, "0.955"}}};
  const auto ctx = wps::parse_field("19");
  const auto rows = wps::comparison_table(ctx, 16, wps::plane_table_entries());
  if (rows.size() != expected.size()) return {false, "expected 7 rows"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& e = expected[i];
    const std::string tag = "row " + std::to_string(i + 1) + ": ";
    if (r.n != e.n || r.k != e.k || r.d_min != e.d)
      return {false, tag + "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                         std::to_string(r.d_min) + "]"};
    if (r.source != wps::DminSource::Formula) return {false, tag + "d_min not from a formula"};
    if (!r.witness_weight || *r.witness_weight != r.d_min)
      return {false, tag + "no witness codeword of weight d_min"};
    if (wps::truncate_decimal(r.lambda) != e.lambda)
      return {false, tag + "lambda " + wps::truncate_decimal(r.lambda)};
  }
  const std::string golden = read_file(std::string(WPS_GOLDEN_DIR) + "/f19_table.csv");
  if (golden.empty()) return {false, "golden file missing"};
  if (wps::table_csv(rows) != golden) return {false, "CSV differs from the golden file"};
  return {true, "7 rows, witnesses match, golden file byte-identical"};
}

Outcome bound_suites() {
  wps::VerifyOptions opt;
  opt.samples = 10'000;
  std::map<std::string, wps::BoundTally> tally;
  const auto rep = wps::verify_bounds(opt, &tally);
  std::ostringstream o;
  bool ok = rep.failed == 0;
  for (const char* name :
       {"serre", "lower-bound-witness", "plane", "weighted-ore", "weighted-dalembert"}) {
    const auto it = tally.find(name);
    const auto t = it == tally.end() ? wps::BoundTally{} : it->second;
    ok = ok && t.samples >= 10'000 && t.violations == 0;
    o << name << " " << t.samples << "/" << t.violations << " ";
  }
  o << "(samples/violations)";
  if (!rep.failures.empty()) o << "; first: " << rep.failures.front();
  return {ok, o.str()};
}

}  // namespace

int main() {
  const wps::VerifyOptions defaults;
  const std::vector<Criterion> criteria{
      {1, "point counts match p_m", 30, [&] { return from_report(wps::verify_points(defaults)); }},
      {2, "family closed form matches brute force", 120,
       [&] { return from_report(wps::verify_families(defaults), 200); }},
      {3, "torus solution counts", 60, [&] { return from_report(wps::verify_torus(defaults)); }},
      {4, "maximum zero counts on extremal cases", 600,
       [&] { return from_report(wps::verify_extremal(defaults)); }},
      {5, "F_19 comparison table", 60, f19_table},
      {6, "WPRM minimum distance, exhaustive vs formula", 300,
       [&] { return from_report(wps::verify_codes(defaults)); }},
      {7, "Delorme reduction invariance", 0,
       [&] { return from_report(wps::verify_delorme(defaults)); }},
      {8, "upper and lower bounds never violated", 0, bound_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0 || secs <= c.limit_s;
    const bool pass = out.ok && in_time;
    if (!pass) ++failed;
    char timing[64];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << out.detail
              << " (" << timing << (in_time ? "" : ", over time") << ")\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
