#include <limits>

#include "cornu/kernels.hpp"

namespace cornu::simd::detail {

void mdot_scalar(const PointBatch& pts, const Vec3& v, double* out) {
  const double n0 = -v.x0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out[i] = pts.x0[i] * n0 + pts.x1[i] * v.x1 + pts.x2[i] * v.x2;
  }
}

void min_side_scalar(const PointBatch& pts, std::span<const Vec3> poles, double* out) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double m = std::numeric_limits<double>::infinity();
    for (const Vec3& p : poles) {
      const double s = pts.x0[i] * -p.x0 + pts.x1[i] * p.x1 + pts.x2[i] * p.x2;
      m = s < m ? s : m;
    }
    out[i] = m;
  }
}

}  // namespace cornu::simd::detail
