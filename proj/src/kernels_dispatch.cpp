#include <algorithm>
#include <limits>

#include "cornu/kernels.hpp"

namespace cornu::simd {

namespace {

std::optional<Backend> g_forced;

Backend detect() {
#if defined(__aarch64__) && defined(__ARM_NEON)
  return Backend::Neon;
#elif defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") ? Backend::Avx2 : Backend::Scalar;
#else
  return Backend::Scalar;
#endif
}

}  // namespace

const char* to_string(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "?";
}

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
  return detect() == b;
}

Backend active_backend() {
  static const Backend detected = detect();
  return g_forced.value_or(detected);
}

void force_backend(std::optional<Backend> b) {
  if (b && !backend_available(*b)) b = Backend::Scalar;
  g_forced = b;
}

void mdot_batch(const PointBatch& pts, const Vec3& v, double* out) {
  switch (active_backend()) {
    case Backend::Avx2: return detail::mdot_avx2(pts, v, out);
    case Backend::Neon: return detail::mdot_neon(pts, v, out);
    case Backend::Scalar: break;
  }
  detail::mdot_scalar(pts, v, out);
}

void min_side_batch(const PointBatch& pts, std::span<const Vec3> poles, double* out) {
  switch (active_backend()) {
    case Backend::Avx2: return detail::min_side_avx2(pts, poles, out);
    case Backend::Neon: return detail::min_side_neon(pts, poles, out);
    case Backend::Scalar: break;
  }
  detail::min_side_scalar(pts, poles, out);
}

double min_side(const PointBatch& pts, std::span<const Vec3> poles) {
  std::vector<double> out(pts.size());
  min_side_batch(pts, poles, out.data());
  double m = std::numeric_limits<double>::infinity();
  for (double v : out) m = std::min(m, v);
  return m;
}

}  // namespace cornu::simd
