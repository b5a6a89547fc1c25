#include "atominfo/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <cmath>

#include "avx2_math.hpp"

namespace atominfo::kernels::detail {

namespace {

// tails shorter than one vector fall back to libm; the wide and scalar paths
// agree to a few ulp, which is inside the backend equivalence tolerance

double sum_squares(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum4(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double dev_sq_sum(const double* x, std::size_t n, double c) {
  const __m256d vc = _mm256_set1_pd(c);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), vc);
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double s = hsum4(acc);
  for (; i < n; ++i) {
    const double d = x[i] - c;
    s += d * d;
  }
  return s;
}

double plogp_sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, log4(v), acc);
  }
  double s = hsum4(acc);
  for (; i < n; ++i) s += x[i] * std::log(x[i]);
  return s;
}

double pow_sum(const double* x, std::size_t n, double q) {
  const __m256d vq = _mm256_set1_pd(q);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, exp4(_mm256_mul_pd(vq, log4(v))));
  }
  double s = hsum4(acc);
  for (; i < n; ++i) s += std::pow(x[i], q);
  return s;
}

double fisher_sum(const double* x, std::size_t n) {
  if (n == 0) return 0.0;
  const std::size_t pairs = n - 1;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= pairs; i += 4) {
    const __m256d a = _mm256_loadu_pd(x + i);
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), a);
    acc = _mm256_add_pd(acc, _mm256_div_pd(_mm256_mul_pd(d, d), a));
  }
  double s = hsum4(acc);
  for (; i < pairs; ++i) {
    const double d = x[i + 1] - x[i];
    s += d * d / x[i];
  }
  return s + x[n - 1];
}

void exp_scaled(const double* x, double* out, std::size_t n, double t) {
  const __m256d vt = _mm256_set1_pd(t);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, exp4(_mm256_mul_pd(vt, _mm256_loadu_pd(x + i))));
  }
  for (; i < n; ++i) out[i] = std::exp(t * x[i]);
}

double sdl_sq_err_sum(const double* ln_d, const double* ln_o, const double* c,
                      std::size_t n, double a, double b) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d arg = _mm256_fmadd_pd(vb, _mm256_loadu_pd(ln_o + i),
                                        _mm256_mul_pd(va, _mm256_loadu_pd(ln_d + i)));
    const __m256d e = _mm256_sub_pd(exp4(arg), _mm256_loadu_pd(c + i));
    acc = _mm256_fmadd_pd(e, e, acc);
  }
  double s = hsum4(acc);
  for (; i < n; ++i) {
    const double e = std::exp(a * ln_d[i] + b * ln_o[i]) - c[i];
    s += e * e;
  }
  return s;
}

}  // namespace

const Backend& avx2_backend() {
  static const Backend backend{
      "avx2", sum_squares, dev_sq_sum, plogp_sum, pow_sum,
      fisher_sum, exp_scaled, sdl_sq_err_sum,
  };
  return backend;
}

}  // namespace atominfo::kernels::detail

#endif  // __AVX2__ && __FMA__
