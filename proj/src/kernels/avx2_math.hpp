#pragma once

#include <immintrin.h>

// Four-lane double-precision exp and log for the AVX2 kernels. Both use the
// classic fdlibm reductions, so they track libm to a few ulp; the backend
// equivalence tests pin the achieved agreement. log4 requires positive
// normal inputs. exp4 saturates to 0 / inf outside the double range.

namespace atominfo::kernels::detail {

inline double hsum4(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// signed 64-bit lanes (|v| < 2^51) to double
inline __m256d small_i64_to_pd(__m256i v) {
  const __m256i magic = _mm256_set1_epi64x(0x4338000000000000LL);  // 1.5 * 2^52
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(v, magic)),
                       _mm256_set1_pd(6755399441055744.0));
}

// 2^k per lane, k in [-1022, 1023]
inline __m256d pow2_i32(__m128i k) {
  const __m256i wide = _mm256_cvtepi32_epi64(k);
  const __m256i bits =
      _mm256_slli_epi64(_mm256_add_epi64(wide, _mm256_set1_epi64x(1023)), 52);
  return _mm256_castsi256_pd(bits);
}

inline __m256d exp4(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.44269504088896338700e+00);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d p1 = _mm256_set1_pd(1.66666666666666019037e-01);
  const __m256d p2 = _mm256_set1_pd(-2.77777777770155933842e-03);
  const __m256d p3 = _mm256_set1_pd(6.61375632143793436117e-05);
  const __m256d p4 = _mm256_set1_pd(-1.65339022054652515390e-06);
  const __m256d p5 = _mm256_set1_pd(4.13813679705723846039e-08);
  const __m256d one = _mm256_set1_pd(1.0);

  // saturating clamp keeps n inside the exponent construction below
  x = _mm256_max_pd(_mm256_set1_pd(-746.0), _mm256_min_pd(x, _mm256_set1_pd(710.0)));

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  // Cody-Waite: r = x - n ln2 in two pieces
  const __m256d hi = _mm256_fnmadd_pd(n, ln2_hi, x);
  const __m256d lo = _mm256_mul_pd(n, ln2_lo);
  const __m256d r = _mm256_sub_pd(hi, lo);

  const __m256d t = _mm256_mul_pd(r, r);
  __m256d c = _mm256_fmadd_pd(t, p5, p4);
  c = _mm256_fmadd_pd(t, c, p3);
  c = _mm256_fmadd_pd(t, c, p2);
  c = _mm256_fmadd_pd(t, c, p1);
  c = _mm256_fnmadd_pd(t, c, r);  // r - t * poly(t)

  const __m256d rc = _mm256_mul_pd(r, c);
  __m256d y = _mm256_div_pd(rc, _mm256_sub_pd(_mm256_set1_pd(2.0), c));
  y = _mm256_sub_pd(one, _mm256_sub_pd(_mm256_sub_pd(lo, y), hi));

  // scale by 2^n in two steps so the whole saturation range stays in bounds
  const __m128i n32 = _mm256_cvtpd_epi32(n);
  const __m128i n_half = _mm_srai_epi32(n32, 1);
  const __m128i n_rest = _mm_sub_epi32(n32, n_half);
  return _mm256_mul_pd(_mm256_mul_pd(y, pow2_i32(n_half)), pow2_i32(n_rest));
}

inline __m256d log4(__m256d x) {
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d lg1 = _mm256_set1_pd(6.666666666666735130e-01);
  const __m256d lg2 = _mm256_set1_pd(3.999999999940941908e-01);
  const __m256d lg3 = _mm256_set1_pd(2.857142874366239149e-01);
  const __m256d lg4 = _mm256_set1_pd(2.222219843214978396e-01);
  const __m256d lg5 = _mm256_set1_pd(1.818357216161805012e-01);
  const __m256d lg6 = _mm256_set1_pd(1.531383769920937332e-01);
  const __m256d lg7 = _mm256_set1_pd(1.479819860511658591e-01);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d sqrt2 = _mm256_set1_pd(1.41421356237309514547);

  // split x = m * 2^k with m in (sqrt2/2, sqrt2]
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i exp_raw = _mm256_srli_epi64(bits, 52);
  const __m256i mant = _mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FF0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant);
  __m256d k = small_i64_to_pd(_mm256_sub_epi64(exp_raw, _mm256_set1_epi64x(1023)));

  const __m256d fold = _mm256_cmp_pd(m, sqrt2, _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, half), fold);
  k = _mm256_add_pd(k, _mm256_and_pd(fold, one));

  const __m256d f = _mm256_sub_pd(m, one);
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(_mm256_set1_pd(2.0), f));
  const __m256d z = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z, z);
  const __m256d t1 =
      _mm256_mul_pd(w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, lg6, lg4), lg2));
  const __m256d t2 = _mm256_mul_pd(
      z, _mm256_fmadd_pd(
             w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, lg7, lg5), lg3), lg1));
  const __m256d rr = _mm256_add_pd(t2, t1);
  const __m256d hfsq = _mm256_mul_pd(_mm256_mul_pd(half, f), f);

  // k*ln2_hi - ((hfsq - (s*(hfsq + R) + k*ln2_lo)) - f)
  const __m256d tail = _mm256_fmadd_pd(s, _mm256_add_pd(hfsq, rr), _mm256_mul_pd(k, ln2_lo));
  return _mm256_sub_pd(_mm256_mul_pd(k, ln2_hi),
                       _mm256_sub_pd(_mm256_sub_pd(hfsq, tail), f));
}

}  // namespace atominfo::kernels::detail
