#include "polyshell/constructions.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace polyshell {

namespace {

// mixed-radix vertex id for a grid point, first coordinate most significant
VertexId grid_id(const std::vector<int>& radix, const std::vector<int>& x) {
  long long id = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    assert(0 <= x[i] && x[i] < radix[i]);
    id = id * radix[i] + x[i];
  }
  return static_cast<VertexId>(id) + 1;
}

// axis-aligned box with corners in binary-counter order, the first free
// coordinate most significant; coordinates with lo == hi are fixed
Cell box_cell(const std::vector<int>& radix, const std::vector<int>& lo,
              const std::vector<int>& hi) {
  std::vector<int> free_dirs;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    assert(lo[i] <= hi[i]);
    if (lo[i] < hi[i]) free_dirs.push_back(static_cast<int>(i));
  }
  const int nfree = static_cast<int>(free_dirs.size());
  Cell cell;
  for (int m = 0; m < (1 << nfree); ++m) {
    std::vector<int> x = lo;
    for (int f = 0; f < nfree; ++f)
      if ((m >> (nfree - 1 - f)) & 1) x[free_dirs[f]] = hi[free_dirs[f]];
    cell.verts.push_back(grid_id(radix, x));
  }
  return cell;
}

std::vector<int> identity_order(std::size_t n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

Complex cube_boundary(int d) {
  if (d < 1) throw std::invalid_argument("cube_boundary: dimension must be at least 1");
  const std::vector<int> radix(d, 2);
  std::vector<Cell> cells;
  for (int side : {0, 1})
    for (int dir = 0; dir < d; ++dir) {
      std::vector<int> lo(d, 0), hi(d, 1);
      lo[dir] = hi[dir] = side;
      cells.push_back(box_cell(radix, lo, hi));
    }
  return Complex(CellKind::cube, d - 1, std::move(cells));
}

Complex pile_of_cubes(const std::vector<int>& sides) {
  const int d = static_cast<int>(sides.size());
  if (d < 1) throw std::invalid_argument("pile_of_cubes: need at least one side length");
  for (int s : sides)
    if (s < 1) throw std::invalid_argument("pile_of_cubes: side lengths must be positive");
  std::vector<int> radix(d);
  for (int i = 0; i < d; ++i) radix[i] = sides[i] + 1;
  std::vector<Cell> cells;
  std::vector<int> base(d, 0);
  for (;;) {
    std::vector<int> hi(d);
    for (int i = 0; i < d; ++i) hi[i] = base[i] + 1;
    cells.push_back(box_cell(radix, base, hi));
    int i = d - 1;
    while (i >= 0 && base[i] + 1 == sides[i]) base[i--] = 0;
    if (i < 0) break;
    ++base[i];
  }
  return Complex(CellKind::cube, d, std::move(cells));
}

OrderedScenario nonstable_pile_order() {
  return {pile_of_cubes({1, 3, 2}), {0, 2, 4, 1, 5, 3}};
}

Complex cuboid_boundary(int d, int l) {
  if (d < 1) throw std::invalid_argument("cuboid_boundary: dimension must be at least 1");
  if (l < 0 || l > d)
    throw std::invalid_argument("cuboid_boundary: cut count must lie in [0, d]");
  const std::vector<int> radix(d, 3);
  // per coordinate, the segments a box may span
  std::vector<std::vector<std::pair<int, int>>> segs(d);
  for (int i = 0; i < d; ++i)
    segs[i] = i < l ? std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}
                    : std::vector<std::pair<int, int>>{{0, 2}};
  std::vector<Cell> cells;
  for (int side : {0, 2})
    for (int dir = 0; dir < d; ++dir) {
      std::vector<int> free_dirs;
      for (int i = 0; i < d; ++i)
        if (i != dir) free_dirs.push_back(i);
      // odometer over segment choices, first free coordinate most significant,
      // giving lexicographic order by box start
      std::vector<std::size_t> pick(free_dirs.size(), 0);
      for (;;) {
        std::vector<int> lo(d), hi(d);
        lo[dir] = hi[dir] = side;
        for (std::size_t f = 0; f < free_dirs.size(); ++f) {
          const auto& seg = segs[free_dirs[f]][pick[f]];
          lo[free_dirs[f]] = seg.first;
          hi[free_dirs[f]] = seg.second;
        }
        cells.push_back(box_cell(radix, lo, hi));
        int f = static_cast<int>(free_dirs.size()) - 1;
        while (f >= 0 && pick[f] + 1 == segs[free_dirs[f]].size()) pick[f--] = 0;
        if (f < 0) break;
        ++pick[f];
      }
    }
  return Complex(CellKind::cube, d - 1, std::move(cells));
}

OrderedScenario capped_cube(int folds) {
  if (folds != 1 && folds != 2)
    throw std::invalid_argument("capped_cube: folds must be 1 or 2");
  // grid x coordinate 0..3; the core cube occupies x in [1,2], caps sit at
  // [0,1] and (folds=2) [2,3]
  const std::vector<int> radix = {4, 2, 2};
  std::vector<Cell> cells;
  auto wall = [&](int dir, int fix, int xlo, int xhi) {
    std::vector<int> lo = {xlo, 0, 0}, hi = {xhi, 1, 1};
    lo[dir] = hi[dir] = fix;
    cells.push_back(box_cell(radix, lo, hi));
  };
  // cap over the low wall: far square first, then its sides low-before-high
  wall(0, 0, 0, 0);
  wall(1, 0, 0, 1);
  wall(2, 0, 0, 1);
  wall(1, 1, 0, 1);
  wall(2, 1, 0, 1);
  // core side walls at the low ends
  wall(1, 0, 1, 2);
  wall(2, 0, 1, 2);
  if (folds == 1) {
    wall(0, 2, 1, 2);  // untouched core wall at x=2
  } else {
    // cap over the high wall: the low sides meet the core, the far square joins
    // them, and the high sides then lean on both
    wall(1, 0, 2, 3);
    wall(2, 0, 2, 3);
    wall(0, 3, 3, 3);
    wall(1, 1, 2, 3);
    wall(2, 1, 2, 3);
  }
  // core side walls at the high ends
  wall(1, 1, 1, 2);
  wall(2, 1, 1, 2);
  Complex complex(CellKind::cube, 2, std::move(cells));
  std::vector<int> order = identity_order(complex.cells().size());
  return {std::move(complex), std::move(order)};
}

RelativeComplex simplex_relative(int d, int l) {
  if (d < 0) throw std::invalid_argument("simplex_relative: dimension must be nonnegative");
  if (l < 0 || l > d + 1)
    throw std::invalid_argument("simplex_relative: removed-core size must lie in [0, d+1]");
  Cell top;
  for (int v = 1; v <= d + 1; ++v) top.verts.push_back(v);
  Complex complex(CellKind::simplex, d, {top});
  FaceKey core;
  for (int v = 1; v <= l; ++v) core.push_back(v);
  std::set<FaceKey> removed;
  for (const auto& [key, fdim] : complex.face_dims()) {
    (void)fdim;
    if (!key_subset(core, key)) removed.insert(key);
  }
  if (l > 0) removed.insert(FaceKey{});
  return RelativeComplex(std::move(complex), std::move(removed));
}

OrderedScenario stacked_simplicial(int d, int k) {
  if (d < 2) throw std::invalid_argument("stacked_simplicial: dimension must be at least 2");
  if (k < 0) throw std::invalid_argument("stacked_simplicial: stacking count must be nonnegative");
  std::vector<Cell> cells;
  // d-subsets of {1..d+1} in lexicographic order drop the largest element first
  for (int drop = d + 1; drop >= 1; --drop) {
    Cell c;
    for (int v = 1; v <= d + 1; ++v)
      if (v != drop) c.verts.push_back(v);
    cells.push_back(std::move(c));
  }
  for (int s = 1; s <= k; ++s) {
    const VertexId w = d + 1 + s;
    const std::vector<VertexId> base = cells.back().verts;
    cells.pop_back();
    for (VertexId v : base) {
      Cell c;
      for (VertexId u : base)
        if (u != v) c.verts.push_back(u);
      c.verts.push_back(w);
      cells.push_back(std::move(c));
    }
  }
  Complex complex(CellKind::simplex, d - 1, std::move(cells));
  std::vector<int> order = identity_order(complex.cells().size());
  return {std::move(complex), std::move(order)};
}

std::vector<NamedScenario> standard_scenarios() {
  std::vector<NamedScenario> out;
  auto add = [&out](std::string name, Complex complex, bool stable) {
    std::vector<int> order = identity_order(complex.cells().size());
    out.push_back({std::move(name), std::move(complex), std::move(order), stable});
  };
  auto add_ordered = [&out](std::string name, OrderedScenario sc, bool stable) {
    out.push_back({std::move(name), std::move(sc.complex), std::move(sc.order), stable});
  };
  add("interval-boundary", cube_boundary(1), true);
  add("square-boundary", cube_boundary(2), true);
  add("cube-boundary", cube_boundary(3), true);
  add("tesseract-boundary", cube_boundary(4), true);
  add("pile-31", pile_of_cubes({3, 1}), true);
  add("pile-132", pile_of_cubes({1, 3, 2}), true);
  add("pile-222", pile_of_cubes({2, 2, 2}), true);
  add_ordered("table-top", nonstable_pile_order(), false);
  add("cuboid-2-2", cuboid_boundary(2, 2), true);
  add("cuboid-3-0", cuboid_boundary(3, 0), true);
  add("cuboid-3-1", cuboid_boundary(3, 1), true);
  add("cuboid-3-2", cuboid_boundary(3, 2), true);
  add("cuboid-3-3", cuboid_boundary(3, 3), true);
  add_ordered("capped-1", capped_cube(1), true);
  add_ordered("capped-2", capped_cube(2), true);
  add_ordered("simplex-boundary-3", stacked_simplicial(3, 0), true);
  add_ordered("stacked-3-2", stacked_simplicial(3, 2), true);
  add_ordered("stacked-4-1", stacked_simplicial(4, 1), true);
  add("triangle-fan",
      Complex(CellKind::simplex, 2,
              {Cell{{1, 2, 3}}, Cell{{1, 3, 4}}, Cell{{1, 4, 5}}, Cell{{1, 2, 5}}}),
      true);
  return out;
}

}  // namespace polyshell
