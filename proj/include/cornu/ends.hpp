#pragma once

// Ends of the plane: half-plane neighbourhoods, pentagrid lines cutting off
// an end, limits of quarter sequences and separation of two limits.

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "cornu/quarters.hpp"

namespace cornu {

struct End {
  IdealPoint ideal;
};

/// Open half-plane beyond the line perpendicular to O-alpha whose two ends
/// are seen from O at angle pi/(2n) on each side of alpha.
HalfPlane neighborhood(const End& alpha, int n);
/// Distance from O of the boundary of neighborhood(alpha, n).
double neighborhood_distance(int n);
/// Smallest n whose neighbourhood of alpha misses beta. Throws DegenerateInput when alpha = beta.
int separating_order(const End& alpha, const End& beta);

/// inner is contained in outer: both ends of inner's boundary and a witness
/// point of inner lie in outer, and outer's boundary stays outside inner.
bool half_plane_within(const HalfPlane& inner, const HalfPlane& outer, double tol = kEpsGeo);
/// Closures are disjoint: ultraparallel boundaries, each outside the other half-plane.
bool half_planes_apart(const HalfPlane& h1, const HalfPlane& h2, double tol = kEpsGeo);

/// A pentagrid line of decompose(base_quarter(), budget) lying in the side
/// of l that touches alpha, ultraparallel to l. The result is oriented so
/// that its positive side is the part away from l; that side touches alpha.
/// Throws BudgetExhausted, or DegenerateInput when alpha is an end of l.
MLine pentagrid_line_beyond(const MLine& l, const End& alpha, int budget);

struct ChainLink {
  HalfPlane half_plane;
  std::size_t from_index = 0;  // every S_n with n >= from_index lies in half_plane
};

struct NeighborhoodChain {
  std::vector<ChainLink> links;
  int restarts = 0;
  std::vector<std::size_t> restart_at;  // vertex indices that forced a restart

  bool nested(double tol = kEpsGeo) const;
};

/// Nested pentagrid half-planes around the vertices S_0 .. S_{horizon-1}.
/// Every link is the complement of a border half-plane of some F_n and is
/// checked against all later vertices in the frame of F_n. A vertex outside
/// a link, or a candidate that is not nested in the last link, truncates the
/// chain. Throws NotStepwise or AlternationPresent.
NeighborhoodChain track_limit(const QuarterSeq& seq, std::size_t horizon);

struct Separation {
  HalfPlane h1, h2;
  std::size_t i = 0, j = 0;  // link indices in the two chains
};
/// Disjoint witnesses, or nullopt when none exists among the links (unknown at this horizon).
std::optional<Separation> ends_separated(const NeighborhoodChain& c1, const NeighborhoodChain& c2);

nlohmann::json to_json(const NeighborhoodChain& c);

}  // namespace cornu
