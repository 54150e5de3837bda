#include "vitushkin/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "vitushkin/errors.hpp"

namespace vitushkin {

namespace {

using IVec = std::vector<BigInt>;
using QVec = std::vector<Rational>;
using IMatrix = std::vector<IVec>;

IVec to_ivec(const LatticePoint& p) { return IVec(p.coords.begin(), p.coords.end()); }

LatticePoint to_point(const IVec& v) {
  LatticePoint p;
  p.coords.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw InputError("lattice coordinate overflows 64 bits");
    p.coords.push_back(x.get_si());
  }
  return p;
}

BigInt dot(const IVec& a, const IVec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(IVec& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Fraction-free Bareiss elimination.
BigInt determinant(IMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Affine hull description: `pivots` are coordinate axes onto which the
// projection is injective on the affine hull, `independent` indexes
// dim+1 affinely independent points starting with point 0.
struct AffineFrame {
  std::size_t dim = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> independent;
};

AffineFrame affine_frame(const IMatrix& pts) {
  AffineFrame frame;
  frame.independent.push_back(0);
  std::vector<QVec> rows;
  const std::size_t m = pts[0].size();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec d(m);
    for (std::size_t c = 0; c < m; ++c) d[c] = pts[i][c] - pts[0][c];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t c = frame.pivots[r];
      if (d[c] == 0) continue;
      Rational f = d[c] / rows[r][c];
      for (std::size_t j = 0; j < m; ++j) d[j] -= f * rows[r][j];
    }
    auto it = std::find_if(d.begin(), d.end(), [](const Rational& x) { return x != 0; });
    if (it == d.end()) continue;
    frame.pivots.push_back(static_cast<std::size_t>(it - d.begin()));
    frame.independent.push_back(i);
    rows.push_back(std::move(d));
    if (rows.size() == m) break;
  }
  frame.dim = rows.size();
  return frame;
}

IMatrix project_points(const IMatrix& pts, const std::vector<std::size_t>& axes) {
  IMatrix out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    IVec q;
    q.reserve(axes.size());
    for (auto a : axes) q.push_back(p[a]);
    out.push_back(std::move(q));
  }
  return out;
}

void sort_unique(IMatrix& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Double description: extreme rays of the pointed cone { y : row . y >= 0 }.
// `rows` must have full column rank. Each ray carries the set of rows that
// vanish on it.
struct Ray {
  IVec v;
  boost::dynamic_bitset<> zero;
};

std::vector<Ray> extreme_rays(const IMatrix& rows) {
  const std::size_t dim = rows.at(0).size();
  const std::size_t count = rows.size();

  // Pick `dim` linearly independent rows.
  std::vector<std::size_t> basis;
  {
    std::vector<QVec> echelon;
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < count && basis.size() < dim; ++i) {
      QVec d(rows[i].begin(), rows[i].end());
      for (std::size_t r = 0; r < echelon.size(); ++r) {
        if (d[piv[r]] == 0) continue;
        Rational f = d[piv[r]] / echelon[r][piv[r]];
        for (std::size_t j = 0; j < dim; ++j) d[j] -= f * echelon[r][j];
      }
      auto it = std::find_if(d.begin(), d.end(), [](const Rational& x) { return x != 0; });
      if (it == d.end()) continue;
      piv.push_back(static_cast<std::size_t>(it - d.begin()));
      echelon.push_back(std::move(d));
      basis.push_back(i);
    }
  }
  if (basis.size() != dim) throw std::logic_error("extreme_rays: constraint matrix is rank deficient");

  // Initial simplicial cone: the columns of the inverse of the basis block.
  std::vector<QVec> aug(dim, QVec(2 * dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) aug[r][c] = rows[basis[r]][c];
    aug[r][dim + r] = 1;
  }
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t j = 0; j < 2 * dim; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    BigInt lcm_den = 1;
    for (std::size_t r = 0; r < dim; ++r) lcm_den = lcm(lcm_den, aug[r][dim + j].get_den());
    Ray ray;
    ray.v.resize(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      Rational scaled = aug[r][dim + j] * lcm_den;
      ray.v[r] = scaled.get_num();
    }
    make_primitive(ray.v);
    ray.zero.resize(count);
    for (std::size_t b = 0; b < dim; ++b) {
      if (b != j) ray.zero.set(basis[b]);
    }
    rays.push_back(std::move(ray));
  }

  boost::dynamic_bitset<> in_basis(count);
  for (auto b : basis) in_basis.set(b);

  for (std::size_t r = 0; r < count; ++r) {
    if (in_basis.test(r)) continue;
    const IVec& a = rows[r];
    std::vector<BigInt> value(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      int sg = sgn(value[i]);
      (sg > 0 ? pos : sg < 0 ? neg : zer).push_back(i);
    }
    if (neg.empty()) {
      for (auto i : zer) rays[i].zero.set(r);
      continue;
    }
    std::vector<Ray> next;
    next.reserve(pos.size() + zer.size());
    for (auto i : pos) next.push_back(rays[i]);
    for (auto i : zer) {
      next.push_back(rays[i]);
      next.back().zero.set(r);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        boost::dynamic_bitset<> common = rays[p].zero & rays[n].zero;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == n) continue;
          if (common.is_subset_of(rays[t].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.v.resize(dim);
        for (std::size_t c = 0; c < dim; ++c) {
          fresh.v[c] = value[p] * rays[n].v[c] - value[n] * rays[p].v[c];
        }
        make_primitive(fresh.v);
        fresh.zero = std::move(common);
        fresh.zero.set(r);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }
  return rays;
}

// Facet b + a.x >= 0 of a full-dimensional point set, with a primitive.
struct Facet {
  IVec normal;
  BigInt offset;
  boost::dynamic_bitset<> incident;
};

std::vector<Facet> facets_full_dim(const IMatrix& pts) {
  IMatrix rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    IVec row;
    row.reserve(p.size() + 1);
    row.push_back(1);
    row.insert(row.end(), p.begin(), p.end());
    rows.push_back(std::move(row));
  }
  std::vector<Facet> facets;
  for (auto& ray : extreme_rays(rows)) {
    Facet f;
    f.offset = ray.v[0];
    f.normal.assign(ray.v.begin() + 1, ray.v.end());
    BigInt g = 0;
    for (const auto& x : f.normal) g = gcd(g, x);
    for (auto& x : f.normal) x /= g;
    f.offset /= g;
    f.incident = std::move(ray.zero);
    facets.push_back(std::move(f));
  }
  return facets;
}

std::size_t rank_of(const std::vector<const IVec*>& vecs, std::size_t dim) {
  std::vector<QVec> echelon;
  std::vector<std::size_t> piv;
  for (const IVec* v : vecs) {
    QVec d(v->begin(), v->end());
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (d[piv[r]] == 0) continue;
      Rational f = d[piv[r]] / echelon[r][piv[r]];
      for (std::size_t j = 0; j < dim; ++j) d[j] -= f * echelon[r][j];
    }
    auto it = std::find_if(d.begin(), d.end(), [](const Rational& x) { return x != 0; });
    if (it == d.end()) continue;
    piv.push_back(static_cast<std::size_t>(it - d.begin()));
    echelon.push_back(std::move(d));
    if (echelon.size() == dim) break;
  }
  return echelon.size();
}

class VolumeCalculator {
 public:
  // Lattice-relative volume of conv(pts) in its affine hull.
  Rational relative(IMatrix pts) {
    sort_unique(pts);
    if (pts.size() == 1) return 1;
    AffineFrame frame = affine_frame(pts);
    const std::size_t k = frame.dim;
    const std::size_t m = pts[0].size();
    IMatrix proj = project_points(pts, frame.pivots);
    Rational full = full_dimensional(std::move(proj));
    if (k == m) return full;

    // Index of the projected lattice in Z^k: |det of the pivot minor| divided
    // by the gcd of all maximal minors of the edge matrix.
    IMatrix edges;
    for (std::size_t j = 1; j <= k; ++j) {
      IVec e(m);
      for (std::size_t c = 0; c < m; ++c) e[c] = pts[frame.independent[j]][c] - pts[0][c];
      edges.push_back(std::move(e));
    }
    auto minor = [&](const std::vector<std::size_t>& cols) {
      IMatrix sub(k, IVec(k));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) sub[r][c] = edges[r][cols[c]];
      return determinant(std::move(sub));
    };
    BigInt g = 0;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < m; ++c)
        if (pick[c]) cols.push_back(c);
      g = gcd(g, minor(cols));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    BigInt pivot_minor = abs(minor(frame.pivots));
    Rational index(pivot_minor, g);
    index.canonicalize();
    return full / index;
  }

  // Volume of a full-dimensional set of distinct points in Z^k.
  Rational full_dimensional(IMatrix pts) {
    sort_unique(pts);
    if (auto it = memo_.find(pts); it != memo_.end()) return it->second;
    const std::size_t k = pts[0].size();
    Rational result;
    if (k == 1) {
      result = pts.back()[0] - pts.front()[0];
    } else {
      // Pyramids over the facets not containing the apex pts[0].
      const IVec& apex = pts[0];
      Rational sum = 0;
      for (const auto& facet : facets_full_dim(pts)) {
        BigInt height = facet.offset + dot(facet.normal, apex);
        if (height == 0) continue;
        IMatrix face;
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (facet.incident.test(i)) face.push_back(pts[i]);
        sum += Rational(height) * relative(std::move(face));
      }
      result = sum / static_cast<unsigned long>(k);
    }
    memo_.emplace(std::move(pts), result);
    return result;
  }

 private:
  std::map<IMatrix, Rational> memo_;
};

IMatrix vertex_coordinates(const LatticePolytope& p) {
  IMatrix pts;
  for (const auto& v : p.vertices()) pts.push_back(to_ivec(v));
  return pts;
}

void check_axes(std::span<const std::size_t> axes, std::size_t ambient) {
  if (axes.empty()) throw InputError("projection needs at least one axis");
  std::vector<bool> seen(ambient, false);
  for (auto a : axes) {
    if (a >= ambient) throw InputError("axis index " + std::to_string(a) + " out of range");
    if (seen[a]) throw InputError("repeated axis index " + std::to_string(a));
    seen[a] = true;
  }
}

// Volume in R^s of (hull of pts) intersected with the nonnegative orthant.
Rational clipped_volume(const IMatrix& pts) {
  const std::size_t s = pts[0].size();
  IMatrix rows;
  for (const auto& f : facets_full_dim(pts)) {
    IVec row;
    row.push_back(f.offset);
    row.insert(row.end(), f.normal.begin(), f.normal.end());
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i <= s; ++i) {
    IVec row(s + 1);
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  std::vector<QVec> verts;
  for (const auto& ray : extreme_rays(rows)) {
    if (ray.v[0] <= 0) continue;
    QVec x(s);
    for (std::size_t c = 0; c < s; ++c) {
      x[c] = Rational(ray.v[c + 1], ray.v[0]);
      x[c].canonicalize();
    }
    verts.push_back(std::move(x));
  }
  if (verts.size() < s + 1) return 0;
  BigInt scale = 1;
  for (const auto& x : verts)
    for (const auto& c : x) scale = lcm(scale, c.get_den());
  IMatrix lattice;
  for (const auto& x : verts) {
    IVec v(s);
    for (std::size_t c = 0; c < s; ++c) v[c] = Rational(x[c] * scale).get_num();
    lattice.push_back(std::move(v));
  }
  sort_unique(lattice);
  if (affine_frame(lattice).dim < s) return 0;
  VolumeCalculator calc;
  return calc.full_dimensional(std::move(lattice)) / Rational(pow(scale, static_cast<unsigned>(s)));
}

}  // namespace

std::string to_string(const LatticePoint& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? "," : "") << p.coords[i];
  os << ')';
  return os.str();
}

LatticePolytope convex_hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw InputError("empty point set");
  const std::size_t dim = points[0].dim();
  if (dim == 0 || dim > kMaxDimension) {
    throw InputError("ambient dimension must be between 1 and " + std::to_string(kMaxDimension));
  }
  IMatrix pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != dim) throw InputError("points have mixed dimensions");
    pts.push_back(to_ivec(p));
  }
  sort_unique(pts);

  std::vector<LatticePoint> verts;
  AffineFrame frame = affine_frame(pts);
  if (frame.dim == 0) {
    verts.push_back(to_point(pts[0]));
  } else if (frame.dim == 1) {
    const std::size_t axis = frame.pivots[0];
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                        [axis](const IVec& a, const IVec& b) { return a[axis] < b[axis]; });
    verts.push_back(to_point(*lo));
    verts.push_back(to_point(*hi));
  } else {
    IMatrix proj = project_points(pts, frame.pivots);
    auto facets = facets_full_dim(proj);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<const IVec*> normals;
      for (const auto& f : facets)
        if (f.incident.test(i)) normals.push_back(&f.normal);
      if (normals.size() >= frame.dim && rank_of(normals, frame.dim) == frame.dim) verts.push_back(to_point(pts[i]));
    }
  }
  std::sort(verts.begin(), verts.end());
  return LatticePolytope(dim, std::move(verts));
}

LatticePolytope translate(const LatticePolytope& p, const LatticePoint& shift) {
  if (shift.dim() != p.ambient_dim()) throw InputError("translation vector has the wrong dimension");
  std::vector<LatticePoint> moved;
  moved.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    LatticePoint w = v;
    for (std::size_t i = 0; i < w.coords.size(); ++i) w.coords[i] += shift.coords[i];
    moved.push_back(std::move(w));
  }
  return convex_hull(moved);
}

LatticePolytope project(const LatticePolytope& p, std::span<const std::size_t> axes) {
  check_axes(axes, p.ambient_dim());
  std::vector<LatticePoint> projected;
  for (const auto& v : p.vertices()) {
    LatticePoint q;
    for (auto a : axes) q.coords.push_back(v.coords[a]);
    projected.push_back(std::move(q));
  }
  return convex_hull(projected);
}

Volume volume(const LatticePolytope& p) {
  IMatrix pts = vertex_coordinates(p);
  Volume v;
  v.dim = affine_frame(pts).dim;
  VolumeCalculator calc;
  v.value = calc.relative(std::move(pts));
  return v;
}

Rational ambient_volume(const LatticePolytope& p) {
  Volume v = volume(p);
  return v.dim == p.ambient_dim() ? v.value : Rational(0);
}

LatticePolytope shifted_projection_hull(const LatticePolytope& n, std::span<const std::size_t> axes) {
  check_axes(axes, n.ambient_dim());
  std::vector<LatticePoint> pts;
  for (const auto& v : n.vertices()) {
    LatticePoint q;
    for (auto a : axes) q.coords.push_back(v.coords[a]);
    for (std::size_t j = 0; j < axes.size(); ++j) {
      LatticePoint shifted = q;
      shifted.coords[j] -= 1;
      pts.push_back(std::move(shifted));
    }
  }
  return convex_hull(pts);
}

Rational shifted_projection_volume(const LatticePolytope& n, std::span<const std::size_t> axes, bool orthant_clip) {
  LatticePolytope hull = shifted_projection_hull(n, axes);
  IMatrix pts = vertex_coordinates(hull);
  const std::size_t s = axes.size();
  if (affine_frame(pts).dim < s) return 0;
  if (orthant_clip) return clipped_volume(pts);
  VolumeCalculator calc;
  return calc.full_dimensional(std::move(pts));
}

ShiftedProfile c_s_profile(const LatticePolytope& n, std::size_t s, bool orthant_clip) {
  const std::size_t dim = n.ambient_dim();
  if (s < 1 || s > dim) {
    throw InputError("section dimension s=" + std::to_string(s) + " outside 1.." + std::to_string(dim));
  }
  ShiftedProfile best;
  bool first = true;
  std::vector<bool> pick(dim, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
  do {
    std::vector<std::size_t> axes;
    for (std::size_t c = 0; c < dim; ++c)
      if (pick[c]) axes.push_back(c);
    Rational v = shifted_projection_volume(n, axes, orthant_clip);
    if (first || v > best.value) {
      best.value = v;
      best.axes = axes;
      first = false;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace vitushkin
