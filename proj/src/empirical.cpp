#include "vitushkin/empirical.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "vitushkin/errors.hpp"
#include "vitushkin/kernels/kernels.hpp"

namespace vitushkin {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit, const char* what) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && total > limit / base) {
      throw InputError(std::string(what) + " exceeds the limit of " + std::to_string(limit));
    }
    total *= base;
  }
  return total;
}

// Evaluates f on the tensor product of per-axis coordinate lists and
// thresholds against rho. Axis 0 varies fastest in the result. Rows run
// along the first axis with more than one coordinate and are split
// between threads in contiguous blocks; every entry depends only on its own
// point, so the result does not depend on the thread count.
std::vector<std::uint8_t> sublevel_mask(const RealFunction& f, const std::vector<std::vector<double>>& axes,
                                        std::size_t threads) {
  const std::size_t n = axes.size();
  std::vector<std::size_t> shape(n);
  std::size_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    shape[v] = axes[v].size();
    total *= shape[v];
  }
  std::size_t row_axis = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (shape[v] > 1) {
      row_axis = v;
      break;
    }
  }
  const std::size_t row_len = shape[row_axis];
  const std::size_t rows = total / row_len;
  std::size_t stride = 1;
  for (std::size_t v = 0; v < row_axis; ++v) stride *= shape[v];

  std::vector<std::uint8_t> mask(total);
  const auto& kern = kernels::active_kernels();
  const double rho = f.rho();

  auto work = [&](std::size_t row_begin, std::size_t row_end) {
    std::vector<std::vector<double>> buf(n, std::vector<double>(row_len));
    std::vector<const double*> coords(n);
    std::vector<double> values(row_len);
    std::vector<std::uint8_t> row_mask(row_len);
    for (std::size_t r = row_begin; r < row_end; ++r) {
      // Decode the multi-index of the row over the non-row axes.
      std::size_t rem = r;
      std::size_t base = 0;
      std::size_t place = 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == row_axis) {
          place *= shape[v];
          continue;
        }
        const std::size_t idx = rem % shape[v];
        rem /= shape[v];
        base += idx * place;
        place *= shape[v];
        std::fill(buf[v].begin(), buf[v].end(), axes[v][idx]);
        coords[v] = buf[v].data();
      }
      coords[row_axis] = axes[row_axis].data();
      f.eval_batch(coords.data(), row_len, values.data());
      kern.threshold(values.data(), row_len, rho, row_mask.data());
      for (std::size_t i = 0; i < row_len; ++i) mask[base + i * stride] = row_mask[i];
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, rows));
  if (workers == 1) {
    work(0, rows);
    return mask;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::size_t chunk = (rows + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(rows, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return mask;
}

// Collapses `axis` in blocks of `factor` entries with OR (any) and AND (all).
void reduce_axis(std::vector<std::uint8_t>& any, std::vector<std::uint8_t>& all, std::vector<std::size_t>& shape,
                 std::size_t axis, std::size_t factor) {
  std::size_t inner = 1;
  for (std::size_t v = 0; v < axis; ++v) inner *= shape[v];
  const std::size_t len = shape[axis];
  const std::size_t outer = any.size() / (inner * len);
  const std::size_t reduced = len / factor;
  std::vector<std::uint8_t> any_out(inner * reduced * outer, 0);
  std::vector<std::uint8_t> all_out(inner * reduced * outer, 1);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t src = (o * len + k) * inner;
      const std::size_t dst = (o * reduced + k / factor) * inner;
      for (std::size_t i = 0; i < inner; ++i) {
        any_out[dst + i] |= any[src + i];
        all_out[dst + i] &= all[src + i];
      }
    }
  }
  any = std::move(any_out);
  all = std::move(all_out);
  shape[axis] = reduced;
}

std::vector<double> lattice_coordinates(double origin, std::size_t count, std::size_t denominator, double offset) {
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = origin + (static_cast<double>(i) + offset) / static_cast<double>(denominator);
  }
  return xs;
}

std::vector<std::vector<double>> section_axes(const RealFunction& f, const SectionSpec& section, std::size_t points,
                                              std::size_t denominator, double offset) {
  std::vector<std::vector<double>> axes(section.n);
  for (auto axis : section.free_axes()) axes[axis] = lattice_coordinates(f.origin(), points, denominator, offset);
  for (const auto& [axis, value] : section.fixed) axes[axis] = {f.origin() + to_double(value)};
  return axes;
}

void check_section_for(const RealFunction& f, const SectionSpec& section, std::size_t resolution) {
  validate(section);
  if (section.n != f.n()) throw InputError("section dimension differs from the function's");
  if (resolution < 4) throw InputError("section resolution must be at least 4");
  checked_power(resolution + 1, section.s(), kMaxSamples, "section sample count");
}

}  // namespace

std::size_t cells_for_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > 1) throw InputError("epsilon must lie in (0, 1], got " + to_string(epsilon));
  if (epsilon.get_num() != 1) throw InputError("epsilon must be the reciprocal of an integer, got " + to_string(epsilon));
  const BigInt& den = epsilon.get_den();
  if (!den.fits_ulong_p()) throw InputError("epsilon too small");
  return den.get_ui();
}

std::vector<std::size_t> SectionSpec::free_axes() const {
  std::vector<bool> fixed_axis(n, false);
  for (const auto& [axis, value] : fixed)
    if (axis < n) fixed_axis[axis] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (!fixed_axis[v]) out.push_back(v);
  return out;
}

std::string SectionSpec::label() const {
  if (fixed.empty()) return "full";
  std::vector<std::pair<std::size_t, Rational>> sorted = fixed;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [axis, value] : sorted) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(axis + 1) + '=' + to_string(value);
  }
  return out;
}

void validate(const SectionSpec& section) {
  if (section.n < 1 || section.n > kMaxDimension) throw InputError("section dimension must be between 1 and 8");
  std::vector<bool> seen(section.n, false);
  for (const auto& [axis, value] : section.fixed) {
    if (axis >= section.n) throw InputError("fixed axis " + std::to_string(axis + 1) + " out of range");
    if (seen[axis]) throw InputError("axis " + std::to_string(axis + 1) + " fixed twice");
    seen[axis] = true;
    if (value < 0 || value > 1) throw InputError("section offsets must lie in [0, 1]");
  }
  if (section.s() < 1) throw InputError("a section needs at least one free axis");
}

SampleLattice::SampleLattice(const RealFunction& f, std::size_t resolution, std::size_t threads)
    : n_(f.n()), resolution_(resolution) {
  if (resolution < 1) throw InputError("sample resolution must be positive");
  checked_power(resolution, n_, kMaxSamples, "sample count");
  std::vector<std::vector<double>> axes(n_, lattice_coordinates(f.origin(), resolution, resolution, 0.0));
  mask_ = sublevel_mask(f, axes, threads);
}

CoverCounts SampleLattice::classify(std::size_t cells) const {
  if (cells < 1 || resolution_ % cells != 0) {
    throw InputError("grid of " + std::to_string(cells) + " cells does not divide the sample lattice");
  }
  checked_power(cells, n_, kMaxCubes, "cube count");
  std::vector<std::uint8_t> any = mask_;
  std::vector<std::uint8_t> all = mask_;
  std::vector<std::size_t> shape(n_, resolution_);
  const std::size_t factor = resolution_ / cells;
  for (std::size_t v = 0; v < n_; ++v) reduce_axis(any, all, shape, v, factor);
  CoverCounts c;
  for (std::size_t i = 0; i < any.size(); ++i) {
    c.occupied += any[i];
    c.interior += all[i];
  }
  c.boundary = c.occupied - c.interior;
  return c;
}

CoverReport classify_cover(const RealFunction& f, const GridSpec& grid) {
  if (grid.n != f.n()) throw InputError("grid dimension differs from the function's");
  if (grid.cells < 1) throw InputError("grid needs at least one cell per axis");
  if (grid.samples_per_axis < 1) throw InputError("samples_per_axis must be positive");
  checked_power(grid.cells, grid.n, kMaxCubes, "cube count");
  SampleLattice lattice(f, grid.cells * grid.samples_per_axis, grid.threads);
  CoverReport r;
  r.epsilon = grid.epsilon();
  r.counts = lattice.classify(grid.cells);
  return r;
}

std::vector<CoverReport> verify(const RealFunction& f, const BoundProfile& profile,
                                std::span<const Rational> epsilons, std::size_t samples_per_axis,
                                std::size_t threads) {
  if (profile.n != f.n()) throw InputError("profile dimension differs from the function's");
  if (samples_per_axis < 1) throw InputError("samples_per_axis must be positive");
  AssembledBound bound = assemble(profile);
  if (epsilons.empty()) return {};
  std::vector<std::size_t> cells;
  std::size_t common = 1;
  for (const auto& eps : epsilons) {
    cells.push_back(cells_for_epsilon(eps));
    checked_power(cells.back(), f.n(), kMaxCubes, "cube count");
    common = std::lcm(common, cells.back());
    if (common > kMaxSamples) throw InputError("epsilons have no common lattice within the sample limit");
  }
  SampleLattice lattice(f, common * samples_per_axis, threads);
  std::vector<CoverReport> reports;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    CoverReport r;
    r.epsilon = epsilons[i];
    r.counts = lattice.classify(cells[i]);
    BoundPair b = evaluate(bound, epsilons[i]);
    r.paper_bound = b.paper_bound;
    r.safe_bound = b.safe_bound;
    r.violation = Rational(static_cast<unsigned long>(r.counts.occupied)) > r.safe_bound;
    reports.push_back(std::move(r));
  }
  return reports;
}

UnionFind::UnionFind(std::size_t size) : parent_(size), size_(size, 1), classes_(size) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --classes_;
  return true;
}

std::uint64_t count_components(std::span<const std::uint8_t> mask, std::span<const std::size_t> shape) {
  std::size_t total = 1;
  for (auto s : shape) total *= s;
  if (total != mask.size()) throw InputError("mask size does not match its shape");
  UnionFind uf(total);
  std::size_t stride = 1;
  for (std::size_t v = 0; v < shape.size(); ++v) {
    const std::size_t len = shape[v];
    for (std::size_t i = 0; i < total; ++i) {
      if (!mask[i]) continue;
      if ((i / stride) % len + 1 < len && mask[i + stride]) uf.unite(i, i + stride);
    }
    stride *= len;
  }
  const auto marked = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
  // Unmarked cells stay singletons.
  return uf.classes() - (total - marked);
}

SectionMask section_mask(const RealFunction& f, const SectionSpec& section, std::size_t resolution, SectionMode mode,
                         std::size_t threads) {
  check_section_for(f, section, resolution);
  if (mode == SectionMode::Sublevel) {
    auto axes = section_axes(f, section, resolution, resolution, 0.5);
    return {sublevel_mask(f, axes, threads), std::vector<std::size_t>(section.s(), resolution)};
  }
  const std::size_t s = section.s();
  auto axes = section_axes(f, section, resolution + 1, resolution, 0.0);
  std::vector<std::uint8_t> corners = sublevel_mask(f, axes, threads);

  // A cell is marked when its 2^s corners are neither all inside nor all outside.
  std::vector<std::uint8_t> any = corners;
  std::vector<std::uint8_t> all = corners;
  std::vector<std::size_t> shape(s, resolution + 1);
  for (std::size_t v = 0; v < s; ++v) {
    std::size_t inner = 1;
    for (std::size_t u = 0; u < v; ++u) inner *= shape[u];
    const std::size_t len = shape[v];
    const std::size_t outer = any.size() / (inner * len);
    std::vector<std::uint8_t> any_out(inner * (len - 1) * outer);
    std::vector<std::uint8_t> all_out(any_out.size());
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t k = 0; k + 1 < len; ++k) {
        for (std::size_t i = 0; i < inner; ++i) {
          const std::size_t a = (o * len + k) * inner + i;
          const std::size_t b = a + inner;
          const std::size_t d = (o * (len - 1) + k) * inner + i;
          any_out[d] = any[a] | any[b];
          all_out[d] = all[a] & all[b];
        }
      }
    }
    any = std::move(any_out);
    all = std::move(all_out);
    shape[v] = len - 1;
  }
  std::vector<std::uint8_t> mixed(any.size());
  for (std::size_t i = 0; i < any.size(); ++i) mixed[i] = any[i] && !all[i] ? 1 : 0;
  return {std::move(mixed), std::move(shape)};
}

namespace {

ComponentReport component_report(const RealFunction& f, const SectionSpec& section, std::size_t resolution,
                                 SectionMode mode, const BoundPair& chat, std::size_t threads) {
  const SectionMask m = section_mask(f, section, resolution, mode, threads);
  ComponentReport r;
  r.section = section;
  r.mode = mode;
  r.resolution = resolution;
  r.components = count_components(m.mask, m.shape);
  r.chat_paper = chat.paper_bound;
  r.chat_safe = chat.safe_bound;
  r.violation = Rational(static_cast<unsigned long>(r.components)) > chat.safe_bound;
  return r;
}

}  // namespace

ComponentReport count_components_sublevel(const RealFunction& f, const SectionSpec& section, std::size_t resolution,
                                          const BoundPair& chat, std::size_t threads) {
  return component_report(f, section, resolution, SectionMode::Sublevel, chat, threads);
}

ComponentReport count_components_boundary(const RealFunction& f, const SectionSpec& section, std::size_t resolution,
                                          const BoundPair& chat, std::size_t threads) {
  return component_report(f, section, resolution, SectionMode::Boundary, chat, threads);
}

}  // namespace vitushkin
