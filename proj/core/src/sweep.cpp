#include "crowns/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "crowns/curve.hpp"
#include "crowns/errors.hpp"

namespace crowns {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<SweepRecord> sweep_curve(int n, double a_min, double a_max, int steps,
                                     const AnalysisOptions& opt) {
  if (!(a_min > 0.0) || !(a_max > a_min)) throw DomainError("sweep requires 0 < a_min < a_max");
  if (steps < 2) throw DomainError("sweep requires at least 2 steps");
  const TwistedCurve& cv = curve_for(n);
  const IntervalUnion adm = admissible_set(n, opt);
  const double ratio = std::log(a_max / a_min) / (steps - 1);

  std::vector<SweepRecord> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double a = (i == steps - 1) ? a_max : a_min * std::exp(ratio * i);
    SweepRecord row;
    row.a = a;
    row.f = cv.f(a);
    row.g = cv.g(a);
    if (!cv.near_pole(a)) row.h = a * a * row.f / row.g;
    row.admissible = row.h.has_value() && adm.contains(a);
    const double c = std::cos(std::acos(-1.0) / n);
    row.convex = (c == 0.0) || (a > c && a < 1.0 / c);
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
  out << "a,F,G,H,admissible,convex\r\n";
  for (const SweepRecord& r : rows) {
    out << fmt12(r.a) << ',' << fmt12(r.f) << ',' << fmt12(r.g) << ',';
    if (r.h) out << fmt12(*r.h);
    out << ',' << (r.admissible ? "true" : "false") << ',' << (r.convex ? "true" : "false")
        << "\r\n";
  }
}

std::vector<std::pair<int, double>> delta_table(int n_min, int n_max,
                                                const AnalysisOptions& opt) {
  if (n_min < 5) throw DomainError("delta table requires n_min >= 5");
  if (n_max < n_min) throw DomainError("delta table requires n_max >= n_min");

  std::set<int> ns;
  if (n_max - n_min <= 63) {
    for (int n = n_min; n <= n_max; ++n) ns.insert(n);
  } else {
    const double step = std::log(double(n_max) / n_min) / 63.0;
    for (int i = 0; i <= 63; ++i) {
      ns.insert(static_cast<int>(std::lround(n_min * std::exp(step * i))));
    }
    ns.insert(n_min);
    ns.insert(n_max);
  }
  std::vector<std::pair<int, double>> out;
  for (int n : ns) out.emplace_back(n, delta_n(n, opt));
  return out;
}

}  // namespace crowns
