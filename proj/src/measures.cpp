#include "atominfo/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "atominfo/kernels.hpp"

namespace atominfo {

namespace {

// |q - 1| below this uses the analytic Shannon limit
constexpr double kShannonWindow = 1e-9;
// allowed numerical excess of S over ln(nu)
constexpr double kOrderTol = 1e-9;

double pow_or_one(double x, double e) {
  return e == 0.0 ? 1.0 : std::pow(x, e);
}

}  // namespace

double shannon(const OccupationDistribution& d) {
  // + 0.0 normalizes the -0.0 that a single fully occupied orbital produces
  return -kernels::active().plogp_sum(d.p.data(), d.p.size()) + 0.0;
}

double shannon_max(const OccupationDistribution& d) {
  return std::log(static_cast<double>(d.nu()));
}

double fisher(const OccupationDistribution& d) {
  return kernels::active().fisher_sum(d.p.data(), d.p.size());
}

double onicescu(const OccupationDistribution& d) {
  return kernels::active().sum_squares(d.p.data(), d.p.size());
}

double disequilibrium(const OccupationDistribution& d) {
  const double uniform = 1.0 / static_cast<double>(d.nu());
  return kernels::active().dev_sq_sum(d.p.data(), d.p.size(), uniform);
}

double tsallis(const OccupationDistribution& d, double q) {
  if (!(q > 0.0)) {
    throw std::domain_error("tsallis index q must be positive");
  }
  if (std::abs(q - 1.0) < kShannonWindow) {
    return shannon(d);
  }
  return (1.0 - kernels::active().pow_sum(d.p.data(), d.p.size(), q)) / (q - 1.0) + 0.0;
}

OrderDisorder order_disorder(double s, double s_max) {
  if (s_max == 0.0) {
    if (s > kOrderTol) {
      throw std::invalid_argument("entropy exceeds its maximum of 0");
    }
    return {0.0, 1.0};
  }
  if (s > s_max + kOrderTol) {
    throw std::invalid_argument("entropy exceeds ln(nu)");
  }
  double delta = s / s_max;
  delta = delta < 0.0 ? 0.0 : (delta > 1.0 ? 1.0 : delta);
  return {delta, 1.0 - delta};
}

double sdl(double delta, double omega, double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    throw std::domain_error("sdl exponents must be nonnegative");
  }
  if (delta < 0.0 || delta > 1.0 || omega < 0.0 || omega > 1.0) {
    throw std::invalid_argument("delta and omega must lie in [0, 1]");
  }
  return pow_or_one(delta, alpha) * pow_or_one(omega, beta);
}

double lmc(double s, double diseq) {
  return s * diseq + 0.0;
}

MeasureRow measure_row(const OccupationDistribution& d, double q, double alpha, double beta) {
  MeasureRow row;
  row.z = d.z;
  row.nu = d.nu();
  row.shannon = shannon(d);
  row.shannon_max = shannon_max(d);
  row.fisher = fisher(d);
  row.onicescu = onicescu(d);
  row.diseq = disequilibrium(d);
  const OrderDisorder od = order_disorder(row.shannon, row.shannon_max);
  row.delta = od.delta;
  row.omega = od.omega;
  row.tsallis = tsallis(d, q);
  row.gamma = sdl(od.delta, od.omega, alpha, beta);
  row.lmc = lmc(row.shannon, row.diseq);
  row.q = q;
  row.alpha = alpha;
  row.beta = beta;
  return row;
}

MeasureTerms measure_terms(const OccupationDistribution& d) {
  const auto& p = d.p;
  const std::size_t n = p.size();
  MeasureTerms terms;
  terms.p = p;
  terms.shannon.resize(n);
  terms.diseq.resize(n);
  terms.onicescu.resize(n);
  terms.fisher.resize(n);
  const double uniform = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    terms.shannon[i] = -p[i] * std::log(p[i]) + 0.0;
    const double dev = p[i] - uniform;
    terms.diseq[i] = dev * dev;
    terms.onicescu[i] = p[i] * p[i];
    const double next = i + 1 < n ? p[i + 1] : 0.0;
    terms.fisher[i] = (next - p[i]) * (next - p[i]) / p[i];
  }
  return terms;
}

}  // namespace atominfo
