#include "polyshell/lineshell.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>

#include "polyshell/shelling.hpp"

namespace polyshell {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& x) {
  assert(a.size() == x.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

int matrix_rank(std::vector<std::vector<Rat>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rat f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// affine dimension of the listed vertices; -1 for an empty list
int affine_dim(const std::vector<std::vector<Rat>>& verts, const std::vector<int>& ids) {
  if (ids.empty()) return -1;
  std::vector<std::vector<Rat>> rows;
  const auto& base = verts[ids[0]];
  for (std::size_t k = 1; k < ids.size(); ++k) {
    std::vector<Rat> row = verts[ids[k]];
    for (std::size_t i = 0; i < row.size(); ++i) row[i] -= base[i];
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// one inequality <c, x> <= rhs
struct FMRow {
  std::vector<Rat> c;
  Rat rhs;

  bool operator<(const FMRow& o) const {
    if (c != o.c) return c < o.c;
    return rhs < o.rhs;
  }
};

constexpr std::size_t kFMRowBudget = 100000;

void fm_normalize(FMRow& row) {
  for (const Rat& x : row.c) {
    if (x == 0) continue;
    const Rat f = x < 0 ? Rat(-1) / x : Rat(1) / x;
    for (Rat& y : row.c) y *= f;
    row.rhs *= f;
    return;
  }
}

// exact feasibility of a system of <= rows over the reals
bool fm_feasible(std::vector<FMRow> rows, int d) {
  for (int var = 0; var < d; ++var) {
    std::set<FMRow> next;
    std::vector<FMRow> pos, neg;
    for (auto& row : rows) {
      if (row.c[var] > 0) {
        pos.push_back(std::move(row));
      } else if (row.c[var] < 0) {
        neg.push_back(std::move(row));
      } else {
        bool all_zero = true;
        for (const Rat& x : row.c)
          if (x != 0) {
            all_zero = false;
            break;
          }
        if (all_zero) {
          if (row.rhs < 0) return false;
        } else {
          next.insert(std::move(row));
        }
      }
    }
    if (pos.size() * neg.size() + next.size() > kFMRowBudget)
      throw budget_exceeded("region feasibility elimination exceeded its row budget");
    for (const FMRow& p : pos)
      for (const FMRow& n : neg) {
        FMRow combo;
        combo.c.resize(d);
        const Rat fp = -n.c[var];  // positive
        const Rat fn = p.c[var];   // positive
        for (int k = 0; k < d; ++k) combo.c[k] = fp * p.c[k] + fn * n.c[k];
        combo.rhs = fp * p.rhs + fn * n.rhs;
        assert(combo.c[var] == 0);
        bool all_zero = true;
        for (const Rat& x : combo.c)
          if (x != 0) {
            all_zero = false;
            break;
          }
        if (all_zero) {
          if (combo.rhs < 0) return false;
          continue;
        }
        fm_normalize(combo);
        next.insert(std::move(combo));
        if (next.size() > kFMRowBudget)
          throw budget_exceeded("region feasibility elimination exceeded its row budget");
      }
    rows.assign(next.begin(), next.end());
  }
  for (const FMRow& row : rows)
    if (row.rhs < 0) return false;
  return true;
}

}  // namespace

PolytopeHV::PolytopeHV(std::vector<std::vector<Rat>> vertices,
                       std::vector<RationalHyperplane> facets,
                       std::vector<std::vector<int>> incidence)
    : vertices_(std::move(vertices)), facets_(std::move(facets)), incidence_(std::move(incidence)) {
  if (vertices_.empty()) throw invalid_complex("polytope: no vertices");
  dim_ = static_cast<int>(vertices_[0].size());
  if (dim_ < 1) throw invalid_complex("polytope: dimension must be at least 1");
  for (const auto& v : vertices_)
    if (static_cast<int>(v.size()) != dim_)
      throw invalid_complex("polytope: vertex coordinate counts differ");
  {
    std::set<std::vector<Rat>> distinct(vertices_.begin(), vertices_.end());
    if (distinct.size() != vertices_.size())
      throw invalid_complex("polytope: duplicate vertices");
  }
  if (facets_.empty()) throw invalid_complex("polytope: no facets");
  if (incidence_.size() != facets_.size())
    throw invalid_complex("polytope: incidence list count differs from facet count");
  for (auto& hp : facets_) {
    if (static_cast<int>(hp.a.size()) != dim_)
      throw invalid_complex("polytope: facet normal length differs from dimension");
    bool all_zero = true;
    for (const Rat& x : hp.a)
      if (x != 0) all_zero = false;
    if (all_zero) throw invalid_complex("polytope: facet normal is zero");
  }
  for (auto& inc : incidence_) {
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    for (int id : inc)
      if (id < 0 || id >= vertex_count())
        throw invalid_complex("polytope: incidence lists an unknown vertex");
  }
  for (int i = 0; i < facet_count(); ++i) {
    std::set<int> on(incidence_[i].begin(), incidence_[i].end());
    for (int k = 0; k < vertex_count(); ++k) {
      const Rat s = dot(facets_[i].a, vertices_[k]);
      if (s > facets_[i].b)
        throw invalid_complex("polytope: a vertex violates a facet inequality");
      if ((s == facets_[i].b) != (on.count(k) > 0))
        throw invalid_complex("polytope: incidence disagrees with the facet hyperplane");
    }
    if (affine_dim(vertices_, incidence_[i]) != dim_ - 1)
      throw invalid_complex("polytope: a facet's vertices do not span its hyperplane");
  }
  {
    std::vector<int> all(vertex_count());
    for (int k = 0; k < vertex_count(); ++k) all[k] = k;
    if (affine_dim(vertices_, all) != dim_)
      throw invalid_complex("polytope: vertices are not full-dimensional");
  }
  neighbors_.resize(facets_.size());
  for (int i = 0; i < facet_count(); ++i)
    for (int j = i + 1; j < facet_count(); ++j) {
      const std::vector<int> shared = sorted_intersection(incidence_[i], incidence_[j]);
      if (shared.empty()) continue;
      if (affine_dim(vertices_, shared) == dim_ - 2) {
        neighbors_[i].insert(j);
        neighbors_[j].insert(i);
      }
    }
}

std::vector<int> PolytopeHV::ridge_vertices(int i, int j) const {
  return sorted_intersection(incidence_.at(i), incidence_.at(j));
}

std::vector<Rat> PolytopeHV::centroid() const {
  std::vector<Rat> c(dim_, 0);
  for (const auto& v : vertices_)
    for (int i = 0; i < dim_; ++i) c[i] += v[i];
  for (int i = 0; i < dim_; ++i) c[i] /= vertex_count();
  return c;
}

std::vector<std::pair<int, Rat>> line_intersections(const PolytopeHV& P, const LineQuery& L) {
  if (static_cast<int>(L.p.size()) != P.dim() || static_cast<int>(L.v.size()) != P.dim())
    throw std::invalid_argument("line query size differs from the polytope dimension");
  bool v_zero = true;
  for (const Rat& x : L.v)
    if (x != 0) v_zero = false;
  if (v_zero) throw std::invalid_argument("line direction is zero");

  std::vector<std::pair<int, Rat>> out;
  bool have_lo = false, have_hi = false;
  Rat lo = 0, hi = 0;
  std::set<Rat> seen;
  for (int i = 0; i < P.facet_count(); ++i) {
    const Rat den = dot(P.facets()[i].a, L.v);
    if (den == 0)
      throw genericity_error("line parallel to the hyperplane of facet " + std::to_string(i));
    const Rat t = (P.facets()[i].b - dot(P.facets()[i].a, L.p)) / den;
    if (!seen.insert(t).second)
      throw genericity_error("two crossing parameters coincide at facet " + std::to_string(i));
    if (den > 0) {
      if (!have_hi || t < hi) hi = t;
      have_hi = true;
    } else {
      if (!have_lo || t > lo) lo = t;
      have_lo = true;
    }
    out.emplace_back(i, t);
  }
  if (!have_lo || !have_hi)
    throw genericity_error("direction never leaves the polytope on one side");
  if (!(lo < hi)) throw genericity_error("line does not pass through the interior");
  return out;
}

LineShellingResult line_shelling_order(const PolytopeHV& P, const LineQuery& L) {
  const auto crossings = line_intersections(P, L);
  std::vector<std::pair<Rat, int>> exits, entries;
  for (const auto& [i, t] : crossings) {
    if (dot(P.facets()[i].a, L.v) > 0)
      exits.emplace_back(t, i);
    else
      entries.emplace_back(t, i);
  }
  std::sort(exits.begin(), exits.end());
  std::sort(entries.begin(), entries.end());

  LineShellingResult res;
  res.exit_count = static_cast<int>(exits.size());
  auto push = [&](const std::pair<Rat, int>& c) {
    res.order.push_back(c.second);
    res.params.push_back(c.first);
    std::vector<Rat> q(P.dim());
    for (int i = 0; i < P.dim(); ++i) q[i] = L.p[i] + c.first * L.v[i];
    res.points.push_back(std::move(q));
  };
  for (const auto& c : exits) push(c);
  for (const auto& c : entries) push(c);

  const int s = static_cast<int>(res.order.size());
  for (int k = 0; k < s; ++k) {
    const int fi = res.order[k];
    std::set<int> vis, covis;
    for (int j : P.neighbors(fi)) {
      const Rat val = dot(P.facets()[j].a, res.points[k]);
      assert(val != P.facets()[j].b);
      if (val > P.facets()[j].b)
        vis.insert(j);
      else
        covis.insert(j);
    }
    res.removed.push_back(k < res.exit_count ? vis : covis);
    res.visible.push_back(std::move(vis));
    res.covisible.push_back(std::move(covis));
  }
  // the line touches the polytope exactly at the first exit and the last entry
  assert(res.visible.front().empty());
  assert(res.visible.back().empty());
  return res;
}

Complex boundary_complex(const PolytopeHV& P) {
  const int d = P.dim();
  bool all_simplex = true, all_cube = true;
  for (const auto& inc : P.incidence()) {
    if (static_cast<int>(inc.size()) != d) all_simplex = false;
    if (inc.size() != (std::size_t{1} << (d - 1))) all_cube = false;
  }
  std::vector<Cell> cells;
  if (all_simplex) {
    for (const auto& inc : P.incidence()) {
      Cell c;
      for (int id : inc) c.verts.push_back(id + 1);
      cells.push_back(std::move(c));
    }
    return Complex(CellKind::simplex, d - 1, std::move(cells));
  }
  if (!all_cube)
    throw unsupported_input("facets are neither all simplices nor all combinatorial cubes");

  const int k = d - 1;
  for (int i = 0; i < P.facet_count(); ++i) {
    const auto& inc = P.incidence()[i];
    std::vector<std::vector<int>> ridges;
    for (int j : P.neighbors(i)) ridges.push_back(P.ridge_vertices(i, j));
    if (static_cast<int>(ridges.size()) != 2 * k)
      throw unsupported_input("a facet does not have the ridge count of a cube");
    // opposing ridge pairs partition the facet's vertices direction by direction
    std::vector<int> mate(ridges.size(), -1);
    for (std::size_t a = 0; a < ridges.size(); ++a)
      for (std::size_t b = a + 1; b < ridges.size(); ++b)
        if (sorted_intersection(ridges[a], ridges[b]).empty()) {
          if (mate[a] != -1 || mate[b] != -1)
            throw unsupported_input("a facet's ridges do not pair into opposite walls");
          mate[a] = static_cast<int>(b);
          mate[b] = static_cast<int>(a);
        }
    std::vector<std::pair<std::set<int>, std::set<int>>> dirs;
    for (std::size_t a = 0; a < ridges.size(); ++a) {
      if (mate[a] == -1)
        throw unsupported_input("a facet's ridges do not pair into opposite walls");
      if (static_cast<int>(a) < mate[a]) {
        std::set<int> lo(ridges[a].begin(), ridges[a].end());
        std::set<int> hi(ridges[mate[a]].begin(), ridges[mate[a]].end());
        // side 0 holds the smallest incident vertex
        if (hi.count(inc[0])) std::swap(lo, hi);
        if (!lo.count(inc[0]))
          throw unsupported_input("a facet's ridge pairing misses its base corner");
        dirs.emplace_back(std::move(lo), std::move(hi));
      }
    }
    Cell cell;
    cell.verts.assign(std::size_t{1} << k, 0);
    for (int u : inc) {
      int m = 0;
      for (int t = 0; t < k; ++t) {
        const bool in_lo = dirs[t].first.count(u) > 0;
        const bool in_hi = dirs[t].second.count(u) > 0;
        if (in_lo == in_hi)
          throw unsupported_input("a facet vertex is not split by an opposing wall pair");
        if (in_hi) m |= 1 << (k - 1 - t);
      }
      if (cell.verts[m] != 0)
        throw unsupported_input("two facet vertices land on the same cube corner");
      cell.verts[m] = u + 1;
    }
    cells.push_back(std::move(cell));
  }
  return Complex(CellKind::cube, k, std::move(cells));
}

LineCheck is_stable_line_shelling(const PolytopeHV& P, const LineQuery& L) {
  const LineShellingResult res = line_shelling_order(P, L);
  const Complex bc = boundary_complex(P);
  const ShellingCheck sh = is_shelling(bc, res.order);
  if (!sh.ok) return {false, sh.failing_step, "not a shelling: " + sh.reason};
  const std::vector<ShellingStep> steps = shelling_steps(bc, res.order);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const int fi = res.order[k];
    const CellLattice lat = bc.lattice(fi);
    std::set<FaceKey> from_shelling;
    for (int f : steps[k].shared_facets) from_shelling.insert(lat.facet_key(f));
    std::set<FaceKey> from_visibility;
    std::set<int> local;
    for (int j : res.removed[k]) {
      FaceKey key;
      for (int u : P.ridge_vertices(fi, j)) key.push_back(u + 1);
      from_visibility.insert(key);
      for (int f = 0; f < lat.facet_count(); ++f)
        if (lat.facet_key(f) == key) local.insert(f);
    }
    if (from_shelling != from_visibility)
      return {false, static_cast<int>(k) + 1,
              "visibility disagrees with the shelling's shared ridges"};
    if (!is_stable_removed_set(bc.kind(), bc.cell(fi), bc.dim(), local))
      return {false, static_cast<int>(k) + 1, "removed ridge set is not stable"};
  }
  return {true, 0, ""};
}

namespace {

RegionCheck region_check_impl(const PolytopeHV& P, const LineQuery& L, bool full_arrangement) {
  if (P.dim() > 4)
    throw unsupported_input("region feasibility is supported up to dimension 4");
  const LineShellingResult res = line_shelling_order(P, L);
  const int d = P.dim();
  RegionCheck out;
  out.all = true;
  for (std::size_t k = 0; k < res.order.size(); ++k) {
    const int fi = res.order[k];
    std::vector<FMRow> rows;
    auto add_le = [&](const std::vector<Rat>& a, const Rat& b) {
      FMRow row{a, b};
      fm_normalize(row);
      rows.push_back(std::move(row));
    };
    auto add_ge = [&](const std::vector<Rat>& a, const Rat& b) {
      std::vector<Rat> na(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) na[i] = -a[i];
      add_le(na, -b);
    };
    // the facet itself: every polytope inequality plus equality on its hyperplane
    for (int j = 0; j < P.facet_count(); ++j) add_le(P.facets()[j].a, P.facets()[j].b);
    add_ge(P.facets()[fi].a, P.facets()[fi].b);
    // closure of the crossing point's region in the chosen arrangement
    std::vector<int> arrangement;
    if (full_arrangement) {
      for (int j = 0; j < P.facet_count(); ++j)
        if (j != fi) arrangement.push_back(j);
    } else {
      arrangement.assign(P.neighbors(fi).begin(), P.neighbors(fi).end());
    }
    for (int j : arrangement) {
      const Rat val = dot(P.facets()[j].a, res.points[k]);
      assert(val != P.facets()[j].b);
      if (val > P.facets()[j].b)
        add_ge(P.facets()[j].a, P.facets()[j].b);
      else
        add_le(P.facets()[j].a, P.facets()[j].b);
    }
    const bool feasible = fm_feasible(std::move(rows), d);
    out.per_step.push_back(feasible);
    if (!feasible) out.all = false;
  }
  return out;
}

}  // namespace

RegionCheck strong_region_check(const PolytopeHV& P, const LineQuery& L) {
  return region_check_impl(P, L, true);
}

bool is_strongly_stable(const PolytopeHV& P, const LineQuery& L) {
  return strong_region_check(P, L).all;
}

RegionCheck facet_region_check(const PolytopeHV& P, const LineQuery& L) {
  return region_check_impl(P, L, false);
}

LineQuery suggest_generic_query(const PolytopeHV& P, const LineQuery& L) {
  const std::vector<Rat> c = P.centroid();
  for (int attempt = 0; attempt < 64; ++attempt) {
    LineQuery cand = L;
    if (attempt > 0 && attempt <= 32) {
      for (int i = 0; i < P.dim(); ++i)
        cand.v[i] += Rat(1, 101 + 37 * attempt + 11 * i);
    } else if (attempt > 32) {
      for (int i = 0; i < P.dim(); ++i)
        cand.v[i] = c[i] - L.p[i] + Rat(1, 101 + 37 * attempt + 11 * i);
    }
    bool v_zero = true;
    for (const Rat& x : cand.v)
      if (x != 0) v_zero = false;
    if (v_zero) continue;
    try {
      line_intersections(P, cand);
      return cand;
    } catch (const genericity_error&) {
    }
  }
  throw genericity_error("no generic direction found near the query");
}

LineSearchStats random_line_search(const PolytopeHV& P, int trials, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  // explicit modulo keeps the stream identical across standard libraries
  auto pick = [&gen](int lo, int hi) {
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const Complex bc = boundary_complex(P);
  LineSearchStats stats;
  stats.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rat> p(P.dim(), 0);
    Rat total = 0;
    for (int k = 0; k < P.vertex_count(); ++k) {
      const int w = pick(1, 20);
      total += w;
      for (int i = 0; i < P.dim(); ++i) p[i] += w * P.vertices()[k][i];
    }
    for (int i = 0; i < P.dim(); ++i) p[i] /= total;
    std::vector<Rat> v(P.dim());
    for (;;) {
      bool nonzero = false;
      for (int i = 0; i < P.dim(); ++i) {
        v[i] = pick(-9, 9);
        if (v[i] != 0) nonzero = true;
      }
      if (nonzero) break;
    }
    const LineQuery L{p, v};
    LineShellingResult res;
    try {
      res = line_shelling_order(P, L);
    } catch (const genericity_error&) {
      ++stats.genericity_failures;
      continue;
    }
    const bool shelling = is_shelling(bc, res.order).ok;
    if (shelling) ++stats.shellings;
    const bool stable = is_stable_line_shelling(P, L).ok;
    if (stable) ++stats.stable;
    const bool facet_region = facet_region_check(P, L).all;
    const bool strong = is_strongly_stable(P, L);
    if (strong) ++stats.strongly_stable;
    if (strong && !facet_region)
      throw std::logic_error("strongly stable sample without the facet region condition");
    if (facet_region && !stable)
      throw std::logic_error("facet region condition held on a sample that is not stable");
  }
  return stats;
}

}  // namespace polyshell
