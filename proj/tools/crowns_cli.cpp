// crowns: planar central configurations of twisted two-ring crowns.
//
// Subcommands: zeros, table, admissible, solve, count, bifurcation, sweep,
// delta, validate.  Exit codes: 0 success/pass, 1 validation or check fail,
// 2 usage error, 3 conjecture violation.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crowns/analysis.hpp"
#include "crowns/crown_json.hpp"
#include "crowns/curve.hpp"
#include "crowns/errors.hpp"
#include "crowns/oracle.hpp"
#include "crowns/sweep.hpp"

namespace {

using nlohmann::json;
using namespace crowns;

constexpr double kPi = std::numbers::pi;
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConjecture = 3;

// Reference zero pairs for the self-check mode (--check), 1e-9 per cell.
struct ZeroRef {
  int n;
  double z1;
  double z2;
};
const ZeroRef kZeroRefs[] = {
    {3, 0.413887932417, 1.619789608802},    {4, 0.697380509876, 1.602408486212},
    {5, 0.822182869908, 1.597921728909},    {6, 0.884321138125, 1.592235355387},
    {7, 0.918990363772, 1.584120901279},    {8, 0.940138179122, 1.574515176634},
    {9, 0.953949939513, 1.564321826382},    {10, 0.963459881269, 1.554123467683},
    {100, 0.999674025507, 1.352557858581},  {500, 0.999986989988, 1.279569044474},
    {1000, 0.999996754292, 1.256683821749}, {5000, 0.999999869916, 1.215703126473},
};

// Central admissible intervals and cos(pi/n) references.
struct CentralRef {
  int n;
  double lo;
  double hi;
  double cosv;
};
const CentralRef kCentralRefs[] = {
    {3, 0.617364128382, 1.619789608802, 0.5},
    {4, 0.697380509876, 1.433937406966, 0.707106781187},
    {5, 0.822182869908, 1.216274428233, 0.809016994375},
    {6, 0.884321138125, 1.130810920250, 0.866025403784},
    {7, 0.918990363772, 1.088150691695, 0.900968867902},
    {8, 0.940138179122, 1.063673428234, 0.923879532511},
    {9, 0.953949939513, 1.048273036749, 0.939692620786},
    {10, 0.963459881269, 1.037925936971, 0.951056516295},
    {100, 0.999674025507, 1.00032608079, 0.999506560366},
    {500, 0.999986989988, 1.00001301018, 0.999980339576},
    {1000, 0.999996754292, 1.00000324572, 0.999995075057},
    {5000, 0.999999869916, 1.00000013008, 0.999999802608},
};

constexpr double kMStarRef = 1.0007682;
constexpr double kMStarStarRef = 35.70017694;
constexpr double kCheckTol = 1e-9;
constexpr double kMassCheckTol = 1e-6;

const ZeroRef* zero_ref(int n) {
  for (const auto& r : kZeroRefs) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

const CentralRef* central_ref(int n) {
  for (const auto& r : kCentralRefs) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

struct CheckState {
  bool enabled = false;
  int failures = 0;

  void cell(const std::string& what, double got, double want, double tol) {
    const bool ok = std::fabs(got - want) <= tol;
    if (!ok) ++failures;
    std::printf("  %s %s: got %s, reference %s (|diff| = %s)\n", ok ? "PASS" : "FAIL",
                what.c_str(), fmt12(got).c_str(), fmt12(want).c_str(),
                fmt12(std::fabs(got - want)).c_str());
  }
};

// "3..10,100,500" -> {3, ..., 10, 100, 500}
std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dots = tok.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(tok.substr(0, dots));
      const int hi = std::stoi(tok.substr(dots + 2));
      if (hi < lo || hi - lo > 100000) throw DomainError("bad --n-list range " + tok);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else if (!tok.empty()) {
      out.push_back(std::stoi(tok));
    }
  }
  if (out.empty()) throw DomainError("empty --n-list");
  return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw Error("cannot write to " + path);
  return file;
}

AnalysisOptions options_with_tol(double tol) {
  AnalysisOptions opt;
  if (tol > 0.0) opt.refine_tol = std::clamp(tol, 1e-15, 1e-6);
  return opt;
}

json zero_row_json(const ZeroPair& zp) {
  return json{{"n", zp.n},
              {"z1", zp.z1},
              {"z2", zp.z2},
              {"inv_z2", 1.0 / zp.z2},
              {"inv_z1", 1.0 / zp.z1},
              {"conjecture_verified", zp.conjecture_verified},
              {"analytic", zp.analytic}};
}

int run_table(const std::vector<int>& ns, const std::string& format, bool check,
              const AnalysisOptions& opt) {
  CheckState cs;
  cs.enabled = check;
  bool conjecture_violated = false;

  json jrows = json::array();
  if (format == "csv") {
    std::cout << "n,z1,z2,inv_z2,inv_z1,method\r\n";
  } else if (format == "text") {
    std::printf("%-6s %-16s %-16s %-16s %-16s %s\n", "n", "z1", "z2", "1/z2", "1/z1", "method");
  }
  for (int n : ns) {
    ZeroPair zp;
    try {
      zp = zeros_of_f(n, opt);
    } catch (const ConjectureViolation& e) {
      // Report per row; keep producing the remaining rows.
      conjecture_violated = true;
      if (format == "json") {
        jrows.push_back(json{{"n", n}, {"error", e.what()}});
      } else {
        std::printf("%-6d conjecture violation: %s\n", n, e.what());
      }
      continue;
    }
    const char* method =
        zp.analytic ? "analytic" : (zp.conjecture_verified ? "scan" : "unverified");
    if (format == "json") {
      jrows.push_back(zero_row_json(zp));
    } else if (format == "csv") {
      std::cout << n << ',' << fmt12(zp.z1) << ',' << fmt12(zp.z2) << ',' << fmt12(1.0 / zp.z2)
                << ',' << fmt12(1.0 / zp.z1) << ',' << method << "\r\n";
    } else {
      std::printf("%-6d %-16s %-16s %-16s %-16s %s\n", n, fmt12(zp.z1).c_str(),
                  fmt12(zp.z2).c_str(), fmt12(1.0 / zp.z2).c_str(), fmt12(1.0 / zp.z1).c_str(),
                  method);
    }
    if (cs.enabled) {
      if (const ZeroRef* ref = zero_ref(n)) {
        cs.cell("n=" + std::to_string(n) + " z1", zp.z1, ref->z1, kCheckTol);
        cs.cell("n=" + std::to_string(n) + " z2", zp.z2, ref->z2, kCheckTol);
      } else {
        std::printf("  SKIP n=%d: no reference row\n", n);
      }
    }
  }
  if (format == "json") std::cout << json{{"rows", jrows}}.dump(2) << "\n";
  if (conjecture_violated) return kExitConjecture;
  return cs.failures ? kExitFail : kExitPass;
}

int run_admissible(int n, const std::string& format, bool check, const AnalysisOptions& opt) {
  const IntervalUnion adm = admissible_set(n, opt);
  const Interval central = central_admissible_interval(n, opt);
  const double cosv = std::cos(kPi / n);

  if (format == "json") {
    json parts = json::array();
    for (const Interval& iv : adm.parts()) {
      parts.push_back(json{{"lo", iv.lo}, {"hi", iv.unbounded() ? json() : json(iv.hi)}});
    }
    json out{{"n", n},
             {"admissible", parts},
             {"central", {{"lo", central.lo}, {"hi", central.hi}}},
             {"cos_pi_over_n", cosv}};
    if (n >= 3) {
      const Interval win = convexity_window(n);
      out["convexity_window"] = {{"lo", win.lo}, {"hi", win.hi}};
    }
    if (n >= 5) out["delta_n"] = delta_n(n, opt);
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("n = %d\n", n);
    std::printf("admissible set   : %s\n", adm.to_string().c_str());
    std::printf("central interval : (%s, %s)\n", fmt12(central.lo).c_str(),
                fmt12(central.hi).c_str());
    if (n >= 3) {
      const Interval win = convexity_window(n);
      std::printf("convexity window : (%s, %s)\n", fmt12(win.lo).c_str(), fmt12(win.hi).c_str());
    }
    std::printf("cos(pi/n)        : %s\n", fmt12(cosv).c_str());
    if (n >= 5) std::printf("delta_n          : %s\n", fmt12(delta_n(n, opt)).c_str());
  }

  CheckState cs;
  cs.enabled = check;
  if (check) {
    if (const CentralRef* ref = central_ref(n)) {
      cs.cell("central lo", central.lo, ref->lo, kCheckTol);
      cs.cell("central hi", central.hi, ref->hi, kCheckTol);
      cs.cell("cos(pi/n)", cosv, ref->cosv, kCheckTol);
    } else {
      std::printf("  SKIP n=%d: no reference row\n", n);
    }
  }
  return cs.failures ? kExitFail : kExitPass;
}

json report_json(const ResidualReport& r) {
  return json{{"lambda", r.lambda},
              {"lambda_per_ring", r.lambda_per_ring},
              {"lambda_spread", r.lambda_spread},
              {"max_gradient_residual", r.max_gradient_residual},
              {"max_imag_residual", r.max_imag_residual},
              {"passes", r.passes}};
}

int run_solve(int n, double m, const std::string& format, const AnalysisOptions& opt) {
  const SolutionSet set = solve_for_mass(n, m, opt);
  if (format == "json") {
    json sols = json::array();
    for (const Solution& s : set.solutions) {
      const ResidualReport rep = full_gradient_residual(CrownConfiguration{
          {RingSpec(n, 1.0, 1.0, Phase::nested()), RingSpec(n, s.a, m, Phase::twisted())}});
      sols.push_back(json{{"a", s.a},
                          {"interval", s.interval_label},
                          {"convex", s.convex},
                          {"residual", s.residual},
                          {"report", report_json(rep)}});
    }
    std::cout << json{{"n", set.n},
                      {"mass_ratio", set.mass_ratio},
                      {"conjecture_verified", set.conjecture_verified},
                      {"count_deduplicated", set.count_deduplicated},
                      {"solutions", sols}}
                     .dump(2)
              << "\n";
  } else if (format == "csv") {
    std::cout << "a,interval,convex,residual\r\n";
    for (const Solution& s : set.solutions) {
      std::cout << fmt12(s.a) << ',' << s.interval_label << ',' << (s.convex ? "true" : "false")
                << ',' << fmt12(s.residual) << "\r\n";
    }
  } else {
    std::printf("n = %d, m = %s: %zu solution(s), %d after a <-> 1/a identification\n", n,
                fmt12(m).c_str(), set.solutions.size(), set.count_deduplicated);
    std::printf("%-18s %-9s %-7s %s\n", "a", "interval", "convex", "residual");
    for (const Solution& s : set.solutions) {
      std::printf("%-18s %-9s %-7s %s\n", fmt12(s.a).c_str(), s.interval_label.c_str(),
                  s.convex ? "yes" : "no", fmt12(s.residual).c_str());
    }
    if (!set.conjecture_verified) std::printf("(zero-pair scan not verified)\n");
  }
  return kExitPass;
}

int run_count(int n, double m, const std::string& format, const AnalysisOptions& opt) {
  const CountResult r = count_configurations(n, m, opt);
  if (format == "json") {
    std::cout << json{{"n", n},
                      {"mass_ratio", m},
                      {"count", r.count},
                      {"clause", r.clause},
                      {"boundary", r.boundary}}
                     .dump(2)
              << "\n";
  } else {
    std::printf("count  = %d\nclause = %s\n", r.count, r.clause.c_str());
  }
  return kExitPass;
}

int run_bifurcation(int n, const std::string& format, bool check, const AnalysisOptions& opt) {
  if (n != 3) throw DomainError("bifurcation data is defined for --n 3");
  const BifurcationData bif = bifurcation_n3(opt);
  if (format == "json") {
    std::cout << json{{"a_star", bif.a_star},
                      {"a_star_star", bif.a_star_star},
                      {"m_star", bif.m_star},
                      {"m_star_star", bif.m_star_star}}
                     .dump(2)
              << "\n";
  } else {
    std::printf("a*  = %s\n", fmt12(bif.a_star).c_str());
    std::printf("a** = %s\n", fmt12(bif.a_star_star).c_str());
    std::printf("m*  = %s\n", fmt12(bif.m_star).c_str());
    std::printf("m** = %s\n", fmt12(bif.m_star_star).c_str());
  }
  CheckState cs;
  cs.enabled = check;
  if (check) {
    cs.cell("m*", bif.m_star, kMStarRef, kMassCheckTol);
    cs.cell("m**", bif.m_star_star, kMStarStarRef, kMassCheckTol);
  }
  return cs.failures ? kExitFail : kExitPass;
}

int run_sweep(int n, double a_min, double a_max, int steps, const std::string& out_path,
              const AnalysisOptions& opt) {
  const auto rows = sweep_curve(n, a_min, a_max, steps, opt);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  write_sweep_csv(out, rows);
  return kExitPass;
}

int run_delta(int n_min, int n_max, const std::string& format, const std::string& out_path,
              const AnalysisOptions& opt) {
  const auto rows = delta_table(n_min, n_max, opt);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  if (format == "json") {
    json jrows = json::array();
    for (const auto& [n, d] : rows) jrows.push_back(json{{"n", n}, {"delta", d}});
    out << json{{"rows", jrows}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "n,delta\r\n";
    for (const auto& [n, d] : rows) out << n << ',' << fmt12(d) << "\r\n";
  } else {
    for (const auto& [n, d] : rows) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%-6d %s\n", n, fmt12(d).c_str());
      out << buf;
    }
  }
  return kExitPass;
}

int run_validate(const std::string& path, const std::string& format) {
  const CrownConfiguration crown = crown_from_file(path);
  const TwistReport twist = twist_offsets(crown);
  const ResidualReport rep = full_gradient_residual(crown);
  if (format == "json") {
    json out = report_json(rep);
    out["classification"] = to_string(twist.classification);
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("classification        : %s\n", to_string(twist.classification));
    std::printf("lambda (least squares): %s\n", fmt12(rep.lambda).c_str());
    std::printf("lambda per ring       :");
    for (double l : rep.lambda_per_ring) std::printf(" %s", fmt12(l).c_str());
    std::printf("\n");
    std::printf("lambda spread         : %s\n", fmt12(rep.lambda_spread).c_str());
    std::printf("max gradient residual : %s\n", fmt12(rep.max_gradient_residual).c_str());
    std::printf("max imag residual     : %s\n", fmt12(rep.max_imag_residual).c_str());
    std::printf("verdict               : %s\n", rep.passes ? "PASS" : "FAIL");
  }
  return rep.passes ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"central configurations of twisted two-ring crowns"};
  app.require_subcommand(1);

  int n = 3;
  double mass = 1.0;
  double tol = 0.0;
  std::string n_list = "3..10";
  std::string format = "text";
  std::string out_path;
  std::string crown_path;
  bool check = false;
  double a_min = 0.1, a_max = 10.0;
  int steps = 1001;
  int n_min = 5, n_max = 100;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol,
                    "Refinement tolerance (relative bracket width, default 1e-14)");
  };

  CLI::App* zeros = app.add_subcommand("zeros", "Zero pair (z1, z2) of F for one n");
  zeros->add_option("--n", n, "Bodies per ring")->required();
  zeros->add_flag("--check", check, "Compare against built-in reference values");
  add_format(zeros);
  add_tol(zeros);

  CLI::App* table = app.add_subcommand("table", "Zero pairs for a list of n");
  table->add_option("--n-list", n_list, "Comma list, ranges as lo..hi (e.g. 3..10,100)");
  table->add_flag("--check", check, "Compare against built-in reference values");
  add_format(table);
  add_tol(table);

  CLI::App* adm = app.add_subcommand("admissible", "Admissible set, central interval, window");
  adm->add_option("--n", n, "Bodies per ring")->required();
  adm->add_flag("--check", check, "Compare against built-in reference values");
  add_format(adm);
  add_tol(adm);

  CLI::App* solve = app.add_subcommand("solve", "All radii with H(a) = m");
  solve->add_option("--n", n, "Bodies per ring")->required();
  solve->add_option("--mass", mass, "Mass ratio m")->required();
  add_format(solve);
  add_tol(solve);

  CLI::App* count = app.add_subcommand("count", "Number of distinct crowns for m");
  count->add_option("--n", n, "Bodies per ring")->required();
  count->add_option("--mass", mass, "Mass ratio m")->required();
  add_format(count);
  add_tol(count);

  CLI::App* bif = app.add_subcommand("bifurcation", "n = 3 bifurcation masses m*, m**");
  bif->add_option("--n", n, "Bodies per ring (must be 3)");
  bif->add_flag("--check", check, "Compare against built-in reference values");
  add_format(bif);
  add_tol(bif);

  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate F, G, H over a radius range (CSV)");
  sweep->add_option("--n", n, "Bodies per ring")->required();
  sweep->add_option("--a-min", a_min, "Lower radius")->required();
  sweep->add_option("--a-max", a_max, "Upper radius")->required();
  sweep->add_option("--steps", steps, "Grid points (geometric spacing)");
  sweep->add_option("--out", out_path, "Output file (default stdout)");
  add_tol(sweep);

  CLI::App* delta = app.add_subcommand("delta", "delta_n = z1 - cos(pi/n) over an n range");
  delta->add_option("--n-min", n_min, "Lowest n (>= 5)");
  delta->add_option("--n-max", n_max, "Highest n (log-sampled when the range is wide)");
  delta->add_option("--out", out_path, "Output file (default stdout)");
  add_format(delta);
  add_tol(delta);

  CLI::App* validate = app.add_subcommand("validate", "Verify a crown JSON document");
  validate->add_option("path", crown_path, "Crown document")->required();
  add_format(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  const AnalysisOptions opt = options_with_tol(tol);
  try {
    if (zeros->parsed()) return run_table({n}, format, check, opt);
    if (table->parsed()) return run_table(parse_n_list(n_list), format, check, opt);
    if (adm->parsed()) return run_admissible(n, format, check, opt);
    if (solve->parsed()) return run_solve(n, mass, format, opt);
    if (count->parsed()) return run_count(n, mass, format, opt);
    if (bif->parsed()) return run_bifurcation(bif->count("--n") ? n : 3, format, check, opt);
    if (sweep->parsed()) return run_sweep(n, a_min, a_max, steps, out_path, opt);
    if (delta->parsed()) return run_delta(n_min, n_max, format, out_path, opt);
    if (validate->parsed()) return run_validate(crown_path, format);
  } catch (const ConjectureViolation& e) {
    std::cerr << "conjecture violation: " << e.what() << "\n";
    return kExitConjecture;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
