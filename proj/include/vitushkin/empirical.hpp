#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vitushkin/bounds.hpp"
#include "vitushkin/funceval.hpp"
#include "vitushkin/rational.hpp"

namespace vitushkin {

inline constexpr std::uint64_t kMaxCubes = 100'000'000;
inline constexpr std::uint64_t kMaxSamples = 100'000'000;

/// An eps-grid over the unit cube with eps = 1/cells.
struct GridSpec {
  std::size_t n = 2;
  std::size_t cells = 4;
  std::size_t samples_per_axis = 4;
  std::size_t threads = 1;

  Rational epsilon() const { return Rational(1, static_cast<unsigned long>(cells)); }
};

/// Number of cells per axis for eps; throws unless 1/eps is a positive integer.
std::size_t cells_for_epsilon(const Rational& epsilon);

/// A coordinate-parallel affine plane: the listed axes are fixed to values
/// in [0, 1] (relative to the sampled cube), the rest are free.
struct SectionSpec {
  std::size_t n = 2;
  std::vector<std::pair<std::size_t, Rational>> fixed;

  std::vector<std::size_t> free_axes() const;
  std::size_t s() const { return n - fixed.size(); }
  std::string label() const;
};

void validate(const SectionSpec& section);

struct CoverCounts {
  std::uint64_t interior = 0;
  std::uint64_t boundary = 0;
  std::uint64_t occupied = 0;
};

struct CoverReport {
  Rational epsilon;
  CoverCounts counts;
  Rational paper_bound;
  Rational safe_bound;
  bool violation = false;
};

enum class SectionMode { Sublevel, Boundary };

struct ComponentReport {
  SectionSpec section;
  SectionMode mode = SectionMode::Boundary;
  std::size_t resolution = 0;
  std::uint64_t components = 0;
  Rational chat_paper;
  Rational chat_safe;
  bool violation = false;
};

/// Sub-level mask of f on the global lattice origin + i/R, i = 0..R-1 per axis.
/// Axis 0 varies fastest.
class SampleLattice {
 public:
  SampleLattice(const RealFunction& f, std::size_t resolution, std::size_t threads = 1);

  std::size_t n() const { return n_; }
  std::size_t resolution() const { return resolution_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }

  /// Cube classification for a grid with `cells` per axis (must divide R).
  CoverCounts classify(std::size_t cells) const;

 private:
  std::size_t n_;
  std::size_t resolution_;
  std::vector<std::uint8_t> mask_;
};

/// A cube is occupied if one of its samples lies in the sub-level set and
/// interior if all of them do.
CoverReport classify_cover(const RealFunction& f, const GridSpec& grid);

/// Classifies every eps on one shared sample lattice (R = lcm of the cell
/// counts times samples_per_axis) and compares with the assembled bound.
std::vector<CoverReport> verify(const RealFunction& f, const BoundProfile& profile,
                                std::span<const Rational> epsilons, std::size_t samples_per_axis,
                                std::size_t threads = 1);

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t size);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t classes() const { return classes_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t classes_;
};

/// Face-adjacent components of the marked cells of a grid (axis 0 fastest).
/// Unmarked cells do not count.
std::uint64_t count_components(std::span<const std::uint8_t> mask, std::span<const std::size_t> shape);

/// Marked cells of a section grid (axis 0 fastest) as used by the component
/// counts: cell-centre samples of W in sub-level mode, corner sign changes in
/// boundary mode.
struct SectionMask {
  std::vector<std::uint8_t> mask;
  std::vector<std::size_t> shape;
};

SectionMask section_mask(const RealFunction& f, const SectionSpec& section, std::size_t resolution, SectionMode mode,
                         std::size_t threads = 1);

/// Components of W(f, rho) within the section, sampled at cell centres.
ComponentReport count_components_sublevel(const RealFunction& f, const SectionSpec& section, std::size_t resolution,
                                          const BoundPair& chat, std::size_t threads = 1);

/// Components of the cells whose corners straddle rho (an approximation of the
/// boundary of W within the section).
ComponentReport count_components_boundary(const RealFunction& f, const SectionSpec& section, std::size_t resolution,
                                          const BoundPair& chat, std::size_t threads = 1);

}  // namespace vitushkin
