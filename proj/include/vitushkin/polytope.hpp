#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vitushkin/rational.hpp"

namespace vitushkin {

inline constexpr std::size_t kMaxDimension = 8;

/// An exponent vector in Z^n. Negative entries are Laurent exponents.
struct LatticePoint {
  std::vector<std::int64_t> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::string to_string(const LatticePoint& p);

/// Convex hull of finitely many lattice points, stored by its extreme points in
/// lexicographic order. Two polytopes compare equal iff they are the same set.
class LatticePolytope {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  friend LatticePolytope convex_hull(std::span<const LatticePoint> points);
  LatticePolytope(std::size_t dim, std::vector<LatticePoint> v) : ambient_dim_(dim), vertices_(std::move(v)) {}

  std::size_t ambient_dim_ = 0;
  std::vector<LatticePoint> vertices_;
};

/// Exact volume of a polytope measured in its own affine hull.
///
/// `dim` is the affine dimension. For a full-dimensional polytope this is
/// ordinary Lebesgue volume. For a lower-dimensional one the volume is taken
/// relative to the lattice of integer points in the affine hull (a unimodular
/// simplex has volume 1/dim!), which agrees with Euclidean measure whenever
/// the hull is parallel to a coordinate subspace. A single point has dim 0 and
/// value 1.
struct Volume {
  Rational value;
  std::size_t dim = 0;
};

LatticePolytope convex_hull(std::span<const LatticePoint> points);
inline LatticePolytope convex_hull(std::initializer_list<LatticePoint> points) {
  return convex_hull(std::span<const LatticePoint>(points.begin(), points.size()));
}

LatticePolytope translate(const LatticePolytope& p, const LatticePoint& shift);

/// Coordinate projection onto `axes` (0-based, distinct, in the given order).
LatticePolytope project(const LatticePolytope& p, std::span<const std::size_t> axes);
inline LatticePolytope project(const LatticePolytope& p, std::initializer_list<std::size_t> axes) {
  return project(p, std::span<const std::size_t>(axes.begin(), axes.size()));
}

Volume volume(const LatticePolytope& p);

/// Volume in the ambient dimension: zero unless the polytope is full-dimensional.
Rational ambient_volume(const LatticePolytope& p);

/// Largest shifted-projection volume over all s-element coordinate subspaces.
///
/// For each s-subset S of axes the polytope is projected onto S, copies are
/// shifted by -e_i for every i in S, and the hull of the union is measured in
/// dimension s. With `orthant_clip` the hull is first intersected with the
/// nonnegative orthant. `axes` is the first maximizing subset in
/// lexicographic order.
struct ShiftedProfile {
  Rational value;
  std::vector<std::size_t> axes;
};

ShiftedProfile c_s_profile(const LatticePolytope& n, std::size_t s, bool orthant_clip);

/// The hull of the union of shifted projections for a single axis subset, and
/// its volume with the optional orthant clip.
LatticePolytope shifted_projection_hull(const LatticePolytope& n, std::span<const std::size_t> axes);
Rational shifted_projection_volume(const LatticePolytope& n, std::span<const std::size_t> axes, bool orthant_clip);

}  // namespace vitushkin
