// AVX2 variant of the gamma grid kernel. Compiled with -mavx2 -mfma; only
// reached through the runtime dispatcher.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "psos/kernels/gamma_grid.hpp"

namespace psos::kernels {

namespace {

// num/den where den > 0, else 0 (kills the inf/NaN lanes from degenerate
// corners in one blend).
inline __m256d guarded_div(__m256d num, __m256d den) {
  __m256d q = _mm256_div_pd(num, den);
  __m256d mask = _mm256_cmp_pd(den, _mm256_setzero_pd(), _CMP_GT_OQ);
  return _mm256_and_pd(q, mask);
}

inline __m256d abs_pd(__m256d v) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(signmask, v);
}

inline double hmax_pd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

}  // namespace

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

void gamma_max_avx2(const GammaCoeffs& c, const double* t, const double* u,
                    std::size_t n, double mx[4]) {
  __m256d m_f = _mm256_setzero_pd();
  __m256d m_ph = _mm256_setzero_pd();
  __m256d m_ps = _mm256_setzero_pd();
  __m256d m_g = _mm256_setzero_pd();

  const __m256d a0 = _mm256_set1_pd(c.a[0]), b0 = _mm256_set1_pd(c.b[0]),
                c0 = _mm256_set1_pd(c.c[0]);
  const __m256d a1 = _mm256_set1_pd(c.a[1]), b1 = _mm256_set1_pd(c.b[1]),
                c1 = _mm256_set1_pd(c.c[1]);
  const __m256d a2 = _mm256_set1_pd(c.a[2]), b2 = _mm256_set1_pd(c.b[2]),
                c2 = _mm256_set1_pd(c.c[2]);
  const __m256d a3 = _mm256_set1_pd(c.a[3]), b3 = _mm256_set1_pd(c.b[3]),
                c3 = _mm256_set1_pd(c.c[3]);
  const __m256d a4 = _mm256_set1_pd(c.a[4]), b4 = _mm256_set1_pd(c.b[4]),
                c4 = _mm256_set1_pd(c.c[4]);
  const __m256d x2 = _mm256_set1_pd(c.x2), Tx2 = _mm256_set1_pd(c.Tx2),
                thx2 = _mm256_set1_pd(c.thx2), y2 = _mm256_set1_pd(c.y2),
                thy2 = _mm256_set1_pd(c.thy2), Tv = _mm256_set1_pd(c.T);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ti = _mm256_loadu_pd(t + i);
    __m256d ui = _mm256_loadu_pd(u + i);
    __m256d d1 = _mm256_fmadd_pd(a0, ti, _mm256_fmadd_pd(b0, ui, c0));
    __m256d d2 = _mm256_fmadd_pd(a1, ti, _mm256_fmadd_pd(b1, ui, c1));
    __m256d d3 = _mm256_fmadd_pd(a2, ti, _mm256_fmadd_pd(b2, ui, c2));
    __m256d d4 = _mm256_fmadd_pd(a3, ti, _mm256_fmadd_pd(b3, ui, c3));
    __m256d d5 = _mm256_fmadd_pd(a4, ti, _mm256_fmadd_pd(b4, ui, c4));
    __m256d t1 = guarded_div(_mm256_mul_pd(x2, ti), d1);
    __m256d f = _mm256_sub_pd(t1, guarded_div(_mm256_mul_pd(Tx2, ti), d2));
    __m256d ph = _mm256_sub_pd(t1, guarded_div(_mm256_mul_pd(thx2, ti), d3));
    __m256d ps = _mm256_sub_pd(guarded_div(_mm256_mul_pd(y2, ui), d4),
                               guarded_div(_mm256_mul_pd(thy2, ui), d5));
    __m256d g = _mm256_sub_pd(guarded_div(ui, d2),
                              guarded_div(_mm256_mul_pd(Tv, ui), d1));
    m_f = _mm256_max_pd(m_f, abs_pd(f));
    m_ph = _mm256_max_pd(m_ph, abs_pd(ph));
    m_ps = _mm256_max_pd(m_ps, abs_pd(ps));
    m_g = _mm256_max_pd(m_g, abs_pd(g));
  }

  mx[0] = std::max(mx[0], hmax_pd(m_f));
  mx[1] = std::max(mx[1], hmax_pd(m_ph));
  mx[2] = std::max(mx[2], hmax_pd(m_ps));
  mx[3] = std::max(mx[3], hmax_pd(m_g));

  if (i < n) gamma_max_scalar(c, t + i, u + i, n - i, mx);
}

}  // namespace psos::kernels

#endif  // x86_64
