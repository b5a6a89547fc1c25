#include <cmath>

#include "atominfo/kernels.hpp"

namespace atominfo::kernels::detail {

namespace {

double sum_squares(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double dev_sq_sum(const double* x, std::size_t n, double c) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - c;
    acc += d * d;
  }
  return acc;
}

double plogp_sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * std::log(x[i]);
  return acc;
}

double pow_sum(const double* x, std::size_t n, double q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::pow(x[i], q);
  return acc;
}

double fisher_sum(const double* x, std::size_t n) {
  if (n == 0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = x[i + 1] - x[i];
    acc += d * d / x[i];
  }
  // trailing term with x_n := 0 reduces to x_{n-1}
  return acc + x[n - 1];
}

void exp_scaled(const double* x, double* out, std::size_t n, double t) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(t * x[i]);
}

double sdl_sq_err_sum(const double* ln_d, const double* ln_o, const double* c,
                      std::size_t n, double a, double b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = std::exp(a * ln_d[i] + b * ln_o[i]) - c[i];
    acc += e * e;
  }
  return acc;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{
      "scalar", sum_squares, dev_sq_sum, plogp_sum, pow_sum,
      fisher_sum, exp_scaled, sdl_sq_err_sum,
  };
  return backend;
}

}  // namespace atominfo::kernels::detail
