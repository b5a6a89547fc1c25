#include "atominfo/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "atominfo/kernels.hpp"
#include "atominfo/measures.hpp"

namespace atominfo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

struct LnzStats {
  std::vector<double> lnz;
  double mean = 0;
  double sxx = 0;

  void finalize() {
    mean = 0;
    for (double v : lnz) mean += v;
    mean /= static_cast<double>(lnz.size());
    sxx = 0;
    for (double v : lnz) {
      const double dx = v - mean;
      sxx += dx * dx;
    }
  }
};

// OLS core shared by linear_fit_lnz and the q scan, so both report R^2
// through identical arithmetic. Returns false when the response is constant.
bool fit_core(const LnzStats& stats, const std::vector<double>& y, LinearFit& out) {
  const std::size_t n = y.size();
  double mean_y = 0;
  for (double v : y) mean_y += v;
  mean_y /= static_cast<double>(n);
  double sxy = 0;
  double syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = stats.lnz[i] - stats.mean;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (syy == 0.0 || stats.sxx == 0.0) return false;
  out.slope = sxy / stats.sxx;
  out.intercept = mean_y - out.slope * stats.mean;
  double ss_res = syy - sxy * sxy / stats.sxx;
  if (ss_res < 0.0) ss_res = 0.0;  // rounding on exact fits
  out.r_squared = 1.0 - ss_res / syy;
  return true;
}

}  // namespace

Series::Series(std::vector<SeriesPoint> points) : points_(std::move(points)) {
  std::stable_sort(points_.begin(), points_.end(),
                   [](const SeriesPoint& a, const SeriesPoint& b) { return a.z < b.z; });
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].z == points_[i - 1].z) {
      throw std::invalid_argument("duplicate Z=" + std::to_string(points_[i].z) + " in series");
    }
  }
}

void Series::append(int z, double value) {
  if (!points_.empty() && z <= points_.back().z) {
    throw std::invalid_argument("series Z values must be strictly increasing");
  }
  points_.push_back({z, value});
}

Series Series::from_csv(std::istream& in) {
  std::vector<SeriesPoint> points;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    if (!header_seen) {
      if (!iequals(row, "Z,value")) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected header 'Z,value'");
      }
      header_seen = true;
      continue;
    }
    const std::size_t comma = row.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'Z,value'");
    }
    const std::string_view z_text = trim(row.substr(0, comma));
    const std::string_view v_text = trim(row.substr(comma + 1));
    SeriesPoint point;
    {
      auto [ptr, ec] = std::from_chars(z_text.data(), z_text.data() + z_text.size(), point.z);
      if (ec != std::errc{} || ptr != z_text.data() + z_text.size()) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad Z '" +
                                    std::string(z_text) + "'");
      }
    }
    {
      auto [ptr, ec] =
          std::from_chars(v_text.data(), v_text.data() + v_text.size(), point.value);
      if (ec != std::errc{} || ptr != v_text.data() + v_text.size()) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad value '" +
                                    std::string(v_text) + "'");
      }
    }
    points.push_back(point);
  }
  if (!header_seen) {
    throw std::invalid_argument("missing 'Z,value' header");
  }
  return Series(std::move(points));
}

Series Series::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open data file: " + path);
  }
  try {
    return from_csv(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

LinearFit linear_fit_lnz(const Series& series) {
  const auto& pts = series.points();
  if (pts.size() < 3) {
    throw std::invalid_argument("linear fit needs at least 3 points");
  }
  LnzStats stats;
  std::vector<double> y;
  stats.lnz.reserve(pts.size());
  y.reserve(pts.size());
  for (const auto& p : pts) {
    if (p.z < 1) {
      throw std::invalid_argument("linear fit requires Z >= 1, got Z=" + std::to_string(p.z));
    }
    stats.lnz.push_back(std::log(static_cast<double>(p.z)));
    y.push_back(p.value);
  }
  stats.finalize();
  LinearFit fit;
  if (!fit_core(stats, y, fit)) {
    throw std::invalid_argument("constant response: R^2 undefined");
  }
  return fit;
}

QSearchResult optimize_q(const std::vector<OccupationDistribution>& dists,
                         double q_lo, double q_hi, double tol) {
  if (dists.size() < 3) {
    throw std::invalid_argument("q search needs at least 3 distributions");
  }
  if (!(q_lo > 0.0) || !(q_hi > q_lo)) {
    throw std::invalid_argument("q range must satisfy 0 < q_lo < q_hi");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }

  std::vector<double> lnp;
  std::vector<std::size_t> offset{0};
  std::vector<double> s_limit;
  LnzStats stats;
  for (const auto& d : dists) {
    if (d.p.empty()) throw std::invalid_argument("empty distribution in q search");
    if (d.z < 1) throw std::invalid_argument("q search requires Z >= 1");
    for (double v : d.p) lnp.push_back(std::log(v));
    offset.push_back(lnp.size());
    stats.lnz.push_back(std::log(static_cast<double>(d.z)));
    s_limit.push_back(shannon(d));
  }
  stats.finalize();

  const auto& backend = kernels::active();
  std::vector<double> buf(lnp.size());
  std::vector<double> tq(dists.size());

  const auto t_values = [&](double q) -> const std::vector<double>& {
    if (std::abs(q - 1.0) < 1e-9) {
      tq = s_limit;
      return tq;
    }
    backend.exp_scaled(lnp.data(), buf.data(), lnp.size(), q);
    for (std::size_t i = 0; i < tq.size(); ++i) {
      double sum = 0;
      for (std::size_t j = offset[i]; j < offset[i + 1]; ++j) sum += buf[j];
      tq[i] = (1.0 - sum) / (q - 1.0);
    }
    return tq;
  };

  QSearchResult result;
  double best_q = q_lo;
  double best_r2 = -std::numeric_limits<double>::infinity();
  const auto evaluate = [&](double q) {
    LinearFit fit;
    const double r2 = fit_core(stats, t_values(q), fit) ? fit.r_squared : -1.0;
    result.scan.push_back({q, r2});
    if (r2 > best_r2) {
      best_r2 = r2;
      best_q = q;
    }
    return r2;
  };

  const long count = static_cast<long>(std::floor((q_hi - q_lo) / kQGridStep + 1e-9));
  for (long i = 0; i <= count; ++i) evaluate(q_lo + static_cast<double>(i) * kQGridStep);
  if (q_lo + static_cast<double>(count) * kQGridStep < q_hi - 1e-12) evaluate(q_hi);

  // golden-section pass inside the winning grid cell
  double a = std::max(q_lo, best_q - kQGridStep);
  double b = std::min(q_hi, best_q + kQGridStep);
  const double invphi = 0.61803398874989484820;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = evaluate(c);
  double fd = evaluate(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = evaluate(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = evaluate(d);
    }
  }

  if (best_r2 < 0.0) {
    throw std::invalid_argument("constant response: R^2 undefined across the q range");
  }
  result.q_star = best_q;
  fit_core(stats, t_values(best_q), result.fit);  // same path the scan used
  std::stable_sort(result.scan.begin(), result.scan.end(),
                   [](const QScanSample& x, const QScanSample& y) { return x.q < y.q; });
  return result;
}

namespace {

struct PodiObjective {
  std::vector<double> ln_delta;
  std::vector<double> ln_omega;
  std::vector<double> target;
  std::vector<PodiInput> edge;  // delta == 0 or omega == 0: power laws degenerate

  explicit PodiObjective(std::span<const PodiInput> rows) {
    for (const auto& r : rows) {
      if (!(r.delta >= 0.0 && r.delta <= 1.0 && r.omega >= 0.0 && r.omega <= 1.0)) {
        throw std::invalid_argument("podi rows need delta and omega in [0, 1]");
      }
      if (r.delta > 0.0 && r.omega > 0.0) {
        ln_delta.push_back(std::log(r.delta));
        ln_omega.push_back(std::log(r.omega));
        target.push_back(r.lmc);
      } else {
        edge.push_back(r);
      }
    }
  }

  double operator()(double alpha, double beta) const {
    double f = kernels::active().sdl_sq_err_sum(ln_delta.data(), ln_omega.data(),
                                                target.data(), ln_delta.size(), alpha, beta);
    for (const auto& r : edge) {
      const double e = sdl(r.delta, r.omega, alpha, beta) - r.lmc;
      f += e * e;
    }
    return f;
  }
};

struct SimplexPoint {
  double a = 0;
  double b = 0;
  double f = 0;
};

// clamped Nelder-Mead descent; only ever improves on the supplied incumbent
void refine_simplex(const PodiObjective& objective, const PodiBox& box,
                    double& best_a, double& best_b, double& best_f, double tol) {
  const auto eval = [&](double a, double b) -> SimplexPoint {
    a = std::clamp(a, box.alpha_lo, box.alpha_hi);
    b = std::clamp(b, box.beta_lo, box.beta_hi);
    return {a, b, objective(a, b)};
  };

  const double step = kPodiGridStep;
  const double da = best_a + step <= box.alpha_hi ? step : -step;
  const double db = best_b + step <= box.beta_hi ? step : -step;
  SimplexPoint s[3] = {
      {best_a, best_b, best_f},
      eval(best_a + da, best_b),
      eval(best_a, best_b + db),
  };
  const auto order = [&s] {
    std::stable_sort(std::begin(s), std::end(s),
                     [](const SimplexPoint& x, const SimplexPoint& y) { return x.f < y.f; });
  };
  order();

  for (int iter = 0; iter < 500; ++iter) {
    const double diam =
        std::max(std::max(std::abs(s[1].a - s[0].a), std::abs(s[1].b - s[0].b)),
                 std::max(std::abs(s[2].a - s[0].a), std::abs(s[2].b - s[0].b)));
    if (diam < tol) break;

    const double ca = 0.5 * (s[0].a + s[1].a);
    const double cb = 0.5 * (s[0].b + s[1].b);
    const SimplexPoint refl = eval(ca + (ca - s[2].a), cb + (cb - s[2].b));
    if (refl.f < s[0].f) {
      const SimplexPoint expd = eval(ca + 2.0 * (ca - s[2].a), cb + 2.0 * (cb - s[2].b));
      s[2] = expd.f < refl.f ? expd : refl;
    } else if (refl.f < s[1].f) {
      s[2] = refl;
    } else {
      const SimplexPoint contr =
          refl.f < s[2].f ? eval(ca + 0.5 * (refl.a - ca), cb + 0.5 * (refl.b - cb))
                          : eval(ca + 0.5 * (s[2].a - ca), cb + 0.5 * (s[2].b - cb));
      if (contr.f < std::min(refl.f, s[2].f)) {
        s[2] = contr;
      } else {
        s[1] = eval(s[0].a + 0.5 * (s[1].a - s[0].a), s[0].b + 0.5 * (s[1].b - s[0].b));
        s[2] = eval(s[0].a + 0.5 * (s[2].a - s[0].a), s[0].b + 0.5 * (s[2].b - s[0].b));
      }
    }
    order();
  }

  if (s[0].f < best_f) {
    best_a = s[0].a;
    best_b = s[0].b;
    best_f = s[0].f;
  }
}

std::vector<double> grid_axis(double lo, double hi) {
  std::vector<double> values;
  const long count = static_cast<long>(std::floor((hi - lo) / kPodiGridStep + 1e-9));
  for (long i = 0; i <= count; ++i) values.push_back(lo + static_cast<double>(i) * kPodiGridStep);
  if (values.back() < hi - 1e-12) values.push_back(hi);
  return values;
}

}  // namespace

std::vector<PodiInput> podi_inputs(const std::vector<OccupationDistribution>& dists) {
  std::vector<PodiInput> rows;
  rows.reserve(dists.size());
  for (const auto& d : dists) {
    const double s = shannon(d);
    const OrderDisorder od = order_disorder(s, shannon_max(d));
    rows.push_back({od.delta, od.omega, lmc(s, disequilibrium(d))});
  }
  return rows;
}

double podi_objective(std::span<const PodiInput> rows, double alpha, double beta) {
  return PodiObjective(rows)(alpha, beta);
}

PodiSolution optimize_podi(std::span<const PodiInput> rows, const PodiBox& box, double tol) {
  if (rows.empty()) {
    throw std::invalid_argument("podi search needs at least one row");
  }
  if (!(box.alpha_lo >= 0.0) || !(box.beta_lo >= 0.0)) {
    throw std::invalid_argument("podi exponents must be nonnegative");
  }
  if (box.alpha_hi < box.alpha_lo || box.beta_hi < box.beta_lo) {
    throw std::invalid_argument("empty podi search range");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }

  const PodiObjective objective(rows);

  double best_a = box.alpha_lo;
  double best_b = box.beta_lo;
  double best_f = std::numeric_limits<double>::infinity();
  for (const double a : grid_axis(box.alpha_lo, box.alpha_hi)) {
    for (const double b : grid_axis(box.beta_lo, box.beta_hi)) {
      const double f = objective(a, b);
      if (f < best_f) {
        best_f = f;
        best_a = a;
        best_b = b;
      }
    }
  }

  refine_simplex(objective, box, best_a, best_b, best_f, tol);
  return {best_a, best_b, best_f};
}

PodiSolution optimize_podi(const std::vector<OccupationDistribution>& dists,
                           const PodiBox& box, double tol) {
  const auto rows = podi_inputs(dists);
  return optimize_podi(std::span<const PodiInput>(rows), box, tol);
}

Extrema find_extrema(const Series& series) {
  const auto& pts = series.points();
  if (pts.size() < 3) {
    throw std::invalid_argument("extrema detection needs at least 3 points");
  }
  Extrema out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double v = pts[i].value;
    const bool first = i == 0;
    const bool last = i + 1 == pts.size();
    const bool rises_left = first || v > pts[i - 1].value;
    const bool rises_right = last || v > pts[i + 1].value;
    const bool falls_left = first || v < pts[i - 1].value;
    const bool falls_right = last || v < pts[i + 1].value;
    if (rises_left && rises_right) out.maxima.push_back(pts[i].z);
    if (falls_left && falls_right) out.minima.push_back(pts[i].z);
  }
  return out;
}

double pearson(const Series& a, const Series& b) {
  const auto& pa = a.points();
  const auto& pb = b.points();
  std::vector<std::pair<double, double>> joined;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].z < pb[j].z) {
      ++i;
    } else if (pa[i].z > pb[j].z) {
      ++j;
    } else {
      joined.emplace_back(pa[i].value, pb[j].value);
      ++i;
      ++j;
    }
  }
  if (joined.size() < 3) {
    throw std::invalid_argument("pearson needs at least 3 shared Z values");
  }
  double mean_a = 0;
  double mean_b = 0;
  for (const auto& [va, vb] : joined) {
    mean_a += va;
    mean_b += vb;
  }
  mean_a /= static_cast<double>(joined.size());
  mean_b /= static_cast<double>(joined.size());
  double saa = 0;
  double sbb = 0;
  double sab = 0;
  for (const auto& [va, vb] : joined) {
    const double da = va - mean_a;
    const double db = vb - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw std::invalid_argument("pearson undefined for a zero-variance series");
  }
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

Series reciprocal_series(const Series& series) {
  Series out;
  for (const auto& p : series.points()) {
    if (p.value == 0.0) {
      throw std::domain_error("cannot invert zero value at Z=" + std::to_string(p.z));
    }
    out.append(p.z, 1.0 / p.value);
  }
  return out;
}

}  // namespace atominfo
