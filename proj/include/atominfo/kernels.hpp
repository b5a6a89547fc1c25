#pragma once

#include <cstddef>
#include <vector>

namespace atominfo::kernels {

/// Inner-loop sums shared by the measures and the fit searches. Every entry
/// has a scalar reference implementation; on x86-64 an AVX2 variant is
/// compiled in and used when the CPU supports it. Set ATOMINFO_KERNEL=scalar
/// (or =avx2) to pin the choice.
///
/// Contracts: plogp_sum and pow_sum need positive normal inputs; exp_scaled
/// and sdl_sq_err_sum expect the exponent t*x (resp. a*ln_d + b*ln_o) to stay
/// within roughly [-708, 708].
struct Backend {
  const char* name;

  double (*sum_squares)(const double* x, std::size_t n);           // sum x_i^2
  double (*dev_sq_sum)(const double* x, std::size_t n, double c);  // sum (x_i - c)^2
  double (*plogp_sum)(const double* x, std::size_t n);             // sum x_i ln x_i
  double (*pow_sum)(const double* x, std::size_t n, double q);     // sum x_i^q
  // sum of (x_{i+1} - x_i)^2 / x_i with x_n := 0
  double (*fisher_sum)(const double* x, std::size_t n);
  // out_i = exp(t * x_i)
  void (*exp_scaled)(const double* x, double* out, std::size_t n, double t);
  // sum of (exp(a*ln_d_i + b*ln_o_i) - c_i)^2
  double (*sdl_sq_err_sum)(const double* ln_d, const double* ln_o, const double* c,
                           std::size_t n, double a, double b);
};

const Backend& scalar();

/// AVX2 backend, or nullptr when the build or the CPU lacks it.
const Backend* avx2();

/// Backends usable on this machine, scalar first.
std::vector<const Backend*> available();

/// The backend every measure runs on. Chosen once: ATOMINFO_KERNEL if set
/// (unknown or unsupported names are an error), otherwise the widest one.
const Backend& active();

}  // namespace atominfo::kernels
