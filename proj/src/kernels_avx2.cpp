#include "cornu/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <limits>

namespace cornu::simd::detail {

void mdot_avx2(const PointBatch& pts, const Vec3& v, double* out) {
  const std::size_t n = pts.size();
  const __m256d n0 = _mm256_set1_pd(-v.x0);
  const __m256d c1 = _mm256_set1_pd(v.x1);
  const __m256d c2 = _mm256_set1_pd(v.x2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_mul_pd(_mm256_loadu_pd(&pts.x0[i]), n0);
    s = _mm256_add_pd(s, _mm256_mul_pd(_mm256_loadu_pd(&pts.x1[i]), c1));
    s = _mm256_add_pd(s, _mm256_mul_pd(_mm256_loadu_pd(&pts.x2[i]), c2));
    _mm256_storeu_pd(out + i, s);
  }
  for (; i < n; ++i) out[i] = pts.x0[i] * -v.x0 + pts.x1[i] * v.x1 + pts.x2[i] * v.x2;
}

void min_side_avx2(const PointBatch& pts, std::span<const Vec3> poles, double* out) {
  const std::size_t n = pts.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a0 = _mm256_loadu_pd(&pts.x0[i]);
    const __m256d a1 = _mm256_loadu_pd(&pts.x1[i]);
    const __m256d a2 = _mm256_loadu_pd(&pts.x2[i]);
    __m256d m = _mm256_set1_pd(inf);
    for (const Vec3& p : poles) {
      __m256d s = _mm256_mul_pd(a0, _mm256_set1_pd(-p.x0));
      s = _mm256_add_pd(s, _mm256_mul_pd(a1, _mm256_set1_pd(p.x1)));
      s = _mm256_add_pd(s, _mm256_mul_pd(a2, _mm256_set1_pd(p.x2)));
      m = _mm256_min_pd(s, m);  // (s < m) ? s : m
    }
    _mm256_storeu_pd(out + i, m);
  }
  for (; i < n; ++i) {
    double m = inf;
    for (const Vec3& p : poles) {
      const double s = pts.x0[i] * -p.x0 + pts.x1[i] * p.x1 + pts.x2[i] * p.x2;
      m = s < m ? s : m;
    }
    out[i] = m;
  }
}

}  // namespace cornu::simd::detail

#else

namespace cornu::simd::detail {
void mdot_avx2(const PointBatch& pts, const Vec3& v, double* out) { mdot_scalar(pts, v, out); }
void min_side_avx2(const PointBatch& pts, std::span<const Vec3> poles, double* out) {
  min_side_scalar(pts, poles, out);
}
}  // namespace cornu::simd::detail

#endif
