#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "crowns/analysis.hpp"

namespace crowns {

/// One row of the curve tabulation: H carries no value at poles of H.
struct SweepRecord {
  double a;
  double f;
  double g;
  std::optional<double> h;
  bool admissible;
  bool convex;
};

/// Tabulates F, G, H on a geometric grid over [a_min, a_max].
std::vector<SweepRecord> sweep_curve(int n, double a_min, double a_max, int steps,
                                     const AnalysisOptions& opt = {});

/// Writes sweep rows as CSV (CRLF line endings, header row, empty H cell at
/// poles, 12 significant digits).
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows);

/// (n, z1 - cos(pi/n)) pairs over [n_min, n_max].  All integers when the
/// range is small; otherwise about 64 log-spaced samples.
std::vector<std::pair<int, double>> delta_table(int n_min, int n_max,
                                                const AnalysisOptions& opt = {});

/// Formats v with 12 significant digits (the table column width).
std::string fmt12(double v);

}  // namespace crowns
