#include "cornu/kernels.hpp"

#if defined(__ARM_NEON) && defined(__aarch64__)
#include <arm_neon.h>

#include <limits>

namespace cornu::simd::detail {

void mdot_neon(const PointBatch& pts, const Vec3& v, double* out) {
  const std::size_t n = pts.size();
  const float64x2_t n0 = vdupq_n_f64(-v.x0);
  const float64x2_t c1 = vdupq_n_f64(v.x1);
  const float64x2_t c2 = vdupq_n_f64(v.x2);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t s = vmulq_f64(vld1q_f64(&pts.x0[i]), n0);
    s = vaddq_f64(s, vmulq_f64(vld1q_f64(&pts.x1[i]), c1));
    s = vaddq_f64(s, vmulq_f64(vld1q_f64(&pts.x2[i]), c2));
    vst1q_f64(out + i, s);
  }
  for (; i < n; ++i) out[i] = pts.x0[i] * -v.x0 + pts.x1[i] * v.x1 + pts.x2[i] * v.x2;
}

void min_side_neon(const PointBatch& pts, std::span<const Vec3> poles, double* out) {
  const std::size_t n = pts.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a0 = vld1q_f64(&pts.x0[i]);
    const float64x2_t a1 = vld1q_f64(&pts.x1[i]);
    const float64x2_t a2 = vld1q_f64(&pts.x2[i]);
    float64x2_t m = vdupq_n_f64(inf);
    for (const Vec3& p : poles) {
      float64x2_t s = vmulq_f64(a0, vdupq_n_f64(-p.x0));
      s = vaddq_f64(s, vmulq_f64(a1, vdupq_n_f64(p.x1)));
      s = vaddq_f64(s, vmulq_f64(a2, vdupq_n_f64(p.x2)));
      m = vbslq_f64(vcltq_f64(s, m), s, m);
    }
    vst1q_f64(out + i, m);
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
void mdot_neon(const PointBatch& pts, const Vec3& v, double* out) { mdot_scalar(pts, v, out); }
void min_side_neon(const PointBatch& pts, std::span<const Vec3> poles, double* out) {
  min_side_scalar(pts, poles, out);
}
}  // namespace cornu::simd::detail

#endif
