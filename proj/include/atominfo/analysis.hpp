#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "atominfo/configuration.hpp"

namespace atominfo {

struct SeriesPoint {
  int z = 0;
  double value = 0;

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// (Z, value) pairs with strictly increasing Z.
class Series {
 public:
  Series() = default;

  /// Sorts by Z; duplicate Z is an error.
  explicit Series(std::vector<SeriesPoint> points);

  /// Reads "Z,value" CSV. Blank lines are skipped, gaps in Z are fine.
  static Series from_csv(std::istream& in);
  static Series from_csv_file(const std::string& path);

  void append(int z, double value);
  const std::vector<SeriesPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<SeriesPoint> points_;
};

struct LinearFit {
  double intercept = 0;
  double slope = 0;
  double r_squared = 0;
};

/// Ordinary least squares of the values against ln Z. Needs >= 3 points,
/// Z >= 1, non-constant response.
LinearFit linear_fit_lnz(const Series& series);

inline constexpr double kQGridStep = 1e-3;
inline constexpr double kPodiGridStep = 5e-3;

struct QScanSample {
  double q = 0;
  double r_squared = 0;
};

struct QSearchResult {
  double q_star = 0;
  LinearFit fit;                  // T_{q*} against ln Z
  std::vector<QScanSample> scan;  // every evaluated (q, R^2), ascending in q
};

/// Maximizes the R^2 of the T_q vs ln Z fit: coarse scan at kQGridStep, then
/// golden-section refinement around the best sample. Deterministic; ties go
/// to the smallest q.
QSearchResult optimize_q(const std::vector<OccupationDistribution>& dists,
                         double q_lo, double q_hi, double tol);

struct PodiInput {
  double delta = 0;
  double omega = 0;
  double lmc = 0;
};

std::vector<PodiInput> podi_inputs(const std::vector<OccupationDistribution>& dists);

/// Sum over rows of (delta^alpha * omega^beta - lmc)^2, 0^0 := 1.
double podi_objective(std::span<const PodiInput> rows, double alpha, double beta);

struct PodiBox {
  double alpha_lo = 0;
  double alpha_hi = 2;
  double beta_lo = 0;
  double beta_hi = 4;
};

struct PodiSolution {
  double alpha = 0;
  double beta = 0;
  double residual = 0;
};

/// Minimizes podi_objective over the box: coarse grid at kPodiGridStep, then
/// a clamped Nelder-Mead simplex descent from the best grid node. The grid
/// argmin ties go to the lexicographically smallest (alpha, beta).
PodiSolution optimize_podi(std::span<const PodiInput> rows, const PodiBox& box, double tol);
PodiSolution optimize_podi(const std::vector<OccupationDistribution>& dists,
                           const PodiBox& box, double tol);

struct Extrema {
  std::vector<int> maxima;
  std::vector<int> minima;
};

/// Strict local extrema. Endpoints qualify against their single neighbour;
/// plateau points never qualify.
Extrema find_extrema(const Series& series);

/// Pearson correlation over the Z values both series share (inner join,
/// >= 3 shared points required).
double pearson(const Series& a, const Series& b);

/// Pointwise 1/value; a zero value is an error naming the offending Z.
Series reciprocal_series(const Series& series);

}  // namespace atominfo
