#pragma once

// Batched sign kernels over many points at once. Each routine has a scalar
// reference and vector variants; the vector code performs the same
// operations in the same order, so all backends agree bit for bit.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cornu/hyperbolic.hpp"

namespace cornu::simd {

enum class Backend { Scalar, Avx2, Neon };

const char* to_string(Backend b);
bool backend_available(Backend b);
/// Backend used by the dispatching entry points.
Backend active_backend();
/// Pin a backend (tests); nullopt restores automatic selection.
void force_backend(std::optional<Backend> b);

/// Structure-of-arrays point batch.
struct PointBatch {
  std::vector<double> x0, x1, x2;

  std::size_t size() const { return x0.size(); }
  void push(const Vec3& v) {
    x0.push_back(v.x0);
    x1.push_back(v.x1);
    x2.push_back(v.x2);
  }
  void clear() {
    x0.clear();
    x1.clear();
    x2.clear();
  }
};

/// out[i] = <p_i, v>. `out` must hold pts.size() values.
void mdot_batch(const PointBatch& pts, const Vec3& v, double* out);
/// out[i] = min_j <p_i, poles_j>; +inf when poles is empty.
void min_side_batch(const PointBatch& pts, std::span<const Vec3> poles, double* out);

/// Smallest value of min_side_batch over the whole batch.
double min_side(const PointBatch& pts, std::span<const Vec3> poles);

namespace detail {
void mdot_scalar(const PointBatch& pts, const Vec3& v, double* out);
void min_side_scalar(const PointBatch& pts, std::span<const Vec3> poles, double* out);
void mdot_avx2(const PointBatch& pts, const Vec3& v, double* out);
void min_side_avx2(const PointBatch& pts, std::span<const Vec3> poles, double* out);
void mdot_neon(const PointBatch& pts, const Vec3& v, double* out);
void min_side_neon(const PointBatch& pts, std::span<const Vec3> poles, double* out);
}  // namespace detail

}  // namespace cornu::simd
