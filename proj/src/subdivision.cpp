#include "polyshell/subdivision.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>

#include "polyshell/eulerian.hpp"
#include "polyshell/realroot.hpp"
#include "polyshell/shelling.hpp"

namespace polyshell {

namespace {

// formal convex combination of source vertices; points on a shared face get the
// same label from every incident cell
using WeightLabel = std::vector<std::pair<VertexId, Rat>>;

bool one_sided_unit_diff(const std::vector<int>& a, const std::vector<int>& b) {
  bool up = true, down = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int d = a[i] - b[i];
    if (d < 0 || d > 1) up = false;
    if (d > 0 || d < -1) down = false;
  }
  return up || down;
}

std::vector<std::vector<int>> max_cliques(const std::vector<std::vector<bool>>& adj) {
  std::vector<std::vector<int>> out;
  std::vector<int> R;
  std::function<void(std::vector<int>, std::vector<int>)> go = [&](std::vector<int> P,
                                                                   std::vector<int> X) {
    if (P.empty() && X.empty()) {
      out.push_back(R);
      return;
    }
    while (!P.empty()) {
      int v = P.front();
      R.push_back(v);
      std::vector<int> P2, X2;
      for (int u : P)
        if (adj[v][u]) P2.push_back(u);
      for (int u : X)
        if (adj[v][u]) X2.push_back(u);
      go(std::move(P2), std::move(X2));
      R.pop_back();
      P.erase(P.begin());
      X.push_back(v);
    }
  };
  std::vector<int> P(adj.size());
  std::iota(P.begin(), P.end(), 0);
  go(std::move(P), {});
  return out;
}

std::vector<std::vector<int>> compositions(int r, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> go = [&](int pos, int left) {
    if (pos == parts - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      go(pos + 1, left - v);
    }
  };
  go(0, r);
  return out;
}

std::vector<std::vector<int>> grid_points(int r, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(d, 0);
  while (true) {
    out.push_back(p);
    int i = 0;
    while (i < d && p[i] == r) p[i++] = 0;
    if (i == d) break;
    ++p[i];
  }
  return out;
}

Int expected_clique_count(CellKind kind, int r, int d) {
  Int n = int_pow(Int(r), d);
  if (kind == CellKind::cube)
    for (int k = 2; k <= d; ++k) n *= k;
  return n;
}

// one reflection bit per cell coordinate, chosen so that the staircase rules of
// all cells cut every shared face of dimension >= 2 the same way. preference:
// reflect the odd (0-based) coordinates, the single-cell rule. two cells may
// also disagree by a whole-face complement, which leaves the cut unchanged, so
// each (face, cell pair) carries a slack unknown. the constraints are linear
// over GF(2); when they are infeasible no coherent refinement exists.
std::vector<std::vector<char>> coherent_cube_reflections(const Complex& c) {
  const int d = c.dim();
  const int n = c.cell_count();
  std::vector<std::vector<char>> flips(n, std::vector<char>(d, 0));
  for (auto& f : flips)
    for (int i = 0; i < d; ++i) f[i] = static_cast<char>(i % 2);
  if (d < 2 || n < 2) return flips;

  std::vector<std::map<VertexId, int>> corner_of(n);
  for (int ci = 0; ci < n; ++ci)
    for (int idx = 0; idx < (1 << d); ++idx) corner_of[ci].emplace(c.cell(ci).verts[idx], idx);
  auto bit = [d](int idx, int i) { return (idx >> (d - 1 - i)) & 1; };

  std::map<FaceKey, std::vector<int>> incident;
  for (int ci = 0; ci < n; ++ci) {
    CellLattice lat = c.lattice(ci);
    for (const auto& f : lat.faces())
      if (f.dim >= 2 && f.dim < d) incident[f.key].push_back(ci);
  }

  int slack_count = 0;
  for (const auto& kv : incident)
    if (kv.second.size() > 1) slack_count += static_cast<int>(kv.second.size()) - 1;
  if (slack_count == 0) return flips;
  const int cols = slack_count + n * d;
  auto var_g = [&](int ci, int i) { return slack_count + ci * d + i; };

  std::vector<std::vector<char>> rows;
  std::vector<char> rhs;
  int slack = 0;
  for (const auto& [key, cs] : incident) {
    if (cs.size() < 2) continue;
    const int A = cs.front();
    // the face in A's chart: fixed directions with their sides, free directions
    std::vector<int> free_dirs;
    int idx0 = 0;
    for (int i = 0; i < d; ++i) {
      bool lo = false, hi = false;
      for (VertexId v : key) {
        if (bit(corner_of[A].at(v), i))
          hi = true;
        else
          lo = true;
      }
      if (lo && hi)
        free_dirs.push_back(i);
      else if (hi)
        idx0 |= 1 << (d - 1 - i);
    }
    for (std::size_t t = 1; t < cs.size(); ++t, ++slack) {
      const int B = cs[t];
      for (int u : free_dirs) {
        VertexId v0 = c.cell(A).verts[idx0];
        VertexId v1 = c.cell(A).verts[idx0 | (1 << (d - 1 - u))];
        int b0 = corner_of[B].at(v0), b1 = corner_of[B].at(v1);
        int diff = b0 ^ b1;
        assert(diff != 0 && (diff & (diff - 1)) == 0);
        int ub = 0;
        while (diff != (1 << (d - 1 - ub))) ++ub;
        int rev = bit(b0, ub);  // B runs this direction backwards
        std::vector<char> row(cols, 0);
        row[slack] = 1;
        row[var_g(A, u)] ^= 1;
        row[var_g(B, ub)] ^= 1;
        rows.push_back(std::move(row));
        rhs.push_back(static_cast<char>(rev ^ (u % 2) ^ (ub % 2)));
      }
    }
  }

  // reduced row echelon form, slack columns first so that mismatches are
  // absorbed by whole-face complements before any cell deviates from the
  // preferred pattern; free unknowns stay zero
  int pivot_rows = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < cols && pivot_rows < static_cast<int>(rows.size()); ++col) {
    int pr = -1;
    for (int ri = pivot_rows; ri < static_cast<int>(rows.size()); ++ri)
      if (rows[ri][col]) {
        pr = ri;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[pr], rows[pivot_rows]);
    std::swap(rhs[pr], rhs[pivot_rows]);
    for (int ri = 0; ri < static_cast<int>(rows.size()); ++ri)
      if (ri != pivot_rows && rows[ri][col]) {
        for (int cc = col; cc < cols; ++cc) rows[ri][cc] ^= rows[pivot_rows][cc];
        rhs[ri] ^= rhs[pivot_rows];
      }
    pivot_col.push_back(col);
    ++pivot_rows;
  }
  for (int ri = pivot_rows; ri < static_cast<int>(rows.size()); ++ri)
    if (rhs[ri]) throw invalid_complex("cells induce different refinements on a shared face");
  for (int ri = 0; ri < pivot_rows; ++ri)
    if (pivot_col[ri] >= slack_count && rhs[ri]) {
      int g = pivot_col[ri] - slack_count;
      flips[g / d][g % d] ^= 1;
    }
  return flips;
}

}  // namespace

SubdividedComplex barycentric_subdivision(const Complex& c) {
  std::map<FaceKey, VertexId> vid;
  std::vector<FaceKey> source;
  for (const auto& [key, fd] : c.face_dims()) {
    (void)fd;
    vid[key] = static_cast<VertexId>(source.size());
    source.push_back(key);
  }
  std::vector<Cell> cells;
  for (int ci = 0; ci < c.cell_count(); ++ci) {
    CellLattice lat = c.lattice(ci);
    std::vector<std::vector<const Face*>> by_dim(c.dim() + 1);
    for (const auto& f : lat.faces())
      if (f.dim >= 0) by_dim[f.dim].push_back(&f);
    assert(by_dim[c.dim()].size() == 1);
    std::vector<VertexId> chain;
    std::function<void(const Face*)> grow = [&](const Face* f) {
      chain.push_back(vid.at(f->key));
      if (f->dim == 0) {
        cells.push_back({chain});
      } else {
        for (const Face* g : by_dim[f->dim - 1])
          if (key_subset(g->key, f->key)) grow(g);
      }
      chain.pop_back();
    };
    grow(by_dim[c.dim()][0]);
  }
  SubdividedComplex out{Complex(CellKind::simplex, c.dim(), std::move(cells)), {}};
  // a face of the refinement is a chain of source faces; its carrier is the top
  for (const auto& [key, fd] : out.complex.face_dims()) {
    (void)fd;
    const FaceKey* top = nullptr;
    for (VertexId v : key) {
      const FaceKey& f = source.at(v);
      if (!top || f.size() > top->size()) top = &f;
    }
    for (VertexId v : key) assert(key_subset(source.at(v), *top));
    out.carrier[key] = *top;
  }
  return out;
}

SubdividedComplex edgewise_subdivision(const Complex& c, int r) {
  if (r < 1) throw std::invalid_argument("refinement order must be positive");
  const int d = c.dim();
  struct LocalData {
    std::vector<std::vector<int>> points;
    std::vector<WeightLabel> labels;
    std::vector<std::vector<int>> cliques;
  };
  std::vector<LocalData> local(c.cell_count());
  std::set<WeightLabel> all_labels;
  std::vector<std::vector<char>> flips;
  if (c.kind() == CellKind::cube) flips = coherent_cube_reflections(c);
  for (int ci = 0; ci < c.cell_count(); ++ci) {
    LocalData& L = local[ci];
    const Cell& cell = c.cell(ci);
    std::vector<std::vector<int>> iotas;
    if (c.kind() == CellKind::simplex) {
      L.points = compositions(r, d + 1);
      for (const auto& a : L.points) {
        WeightLabel lab;
        std::vector<int> s(d + 1, 0);
        int run = 0;
        for (int i = 0; i <= d; ++i) {
          run += a[i];
          s[i] = run;
          if (a[i] > 0) lab.emplace_back(cell.verts[i], Rat(a[i], r));
        }
        L.labels.push_back(std::move(lab));
        iotas.push_back(std::move(s));
      }
    } else {
      L.points = grid_points(r, d);
      for (const auto& p : L.points) {
        WeightLabel lab;
        for (int idx = 0; idx < (1 << d); ++idx) {
          Rat w(1);
          for (int i = 0; i < d; ++i) {
            bool hi = (idx >> (d - 1 - i)) & 1;
            w *= hi ? Rat(p[i], r) : Rat(r - p[i], r);
            if (w == 0) break;
          }
          if (w != 0) lab.emplace_back(cell.verts[idx], w);
        }
        std::sort(lab.begin(), lab.end());
        L.labels.push_back(std::move(lab));
        // reflect the coordinates chosen for this cell, then one-sided unit
        // differences define the staircase triangulation of the grid
        std::vector<int> q(d);
        for (int i = 0; i < d; ++i) q[i] = flips[ci][i] ? r - p[i] : p[i];
        iotas.push_back(std::move(q));
      }
    }
    const int n = static_cast<int>(L.points.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (one_sided_unit_diff(iotas[i], iotas[j])) adj[i][j] = adj[j][i] = true;
    L.cliques = max_cliques(adj);
    assert(Int(static_cast<int>(L.cliques.size())) == expected_clique_count(c.kind(), r, d));
    for (const auto& q : L.cliques) assert(static_cast<int>(q.size()) == d + 1);
    for (const auto& lab : L.labels) all_labels.insert(lab);
  }
  std::map<WeightLabel, VertexId> ids;
  for (const auto& lab : all_labels) ids.emplace(lab, static_cast<VertexId>(ids.size()));

  std::vector<Cell> cells;
  std::map<FaceKey, FaceKey> carrier;
  // source face -> incident cell -> top-dimensional refined faces it induces there
  std::map<FaceKey, std::map<int, std::set<FaceKey>>> induced;
  for (int ci = 0; ci < c.cell_count(); ++ci) {
    const LocalData& L = local[ci];
    const Cell& cell = c.cell(ci);
    auto carrier_of_points = [&](const std::vector<int>& pts, int* out_dim) -> FaceKey {
      if (c.kind() == CellKind::simplex) {
        std::set<VertexId> sup;
        for (int pi : pts)
          for (const auto& [v, w] : L.labels[pi]) {
            (void)w;
            sup.insert(v);
          }
        if (out_dim) *out_dim = static_cast<int>(sup.size()) - 1;
        return FaceKey(sup.begin(), sup.end());
      }
      std::vector<std::pair<int, int>> fixed;
      for (int i = 0; i < d; ++i) {
        bool all_lo = true, all_hi = true;
        for (int pi : pts) {
          if (L.points[pi][i] != 0) all_lo = false;
          if (L.points[pi][i] != r) all_hi = false;
        }
        if (all_lo)
          fixed.emplace_back(i, 0);
        else if (all_hi)
          fixed.emplace_back(i, 1);
      }
      if (out_dim) *out_dim = d - static_cast<int>(fixed.size());
      return cube_chart_face(cell, d, fixed);
    };
    for (const auto& q : L.cliques) {
      std::vector<VertexId> top;
      for (int pi : q) top.push_back(ids.at(L.labels[pi]));
      cells.push_back({top});
      for (unsigned mask = 1; mask < (1u << q.size()); ++mask) {
        std::vector<int> pts;
        std::vector<VertexId> verts;
        for (std::size_t b = 0; b < q.size(); ++b)
          if (mask & (1u << b)) {
            pts.push_back(q[b]);
            verts.push_back(ids.at(L.labels[q[b]]));
          }
        FaceKey key = make_key(std::move(verts));
        int fdim = 0;
        FaceKey fk = carrier_of_points(pts, &fdim);
        auto it = carrier.find(key);
        if (it == carrier.end())
          carrier.emplace(key, fk);
        else
          assert(it->second == fk);
        if (c.kind() == CellKind::cube && fdim >= 2 && fdim < d &&
            static_cast<int>(pts.size()) == fdim + 1)
          induced[fk][ci].insert(key);
      }
    }
  }
  for (const auto& [fk, per_cell] : induced) {
    (void)fk;
    if (per_cell.size() < 2) continue;
    const std::set<FaceKey>& ref = per_cell.begin()->second;
    for (const auto& [ci, faces] : per_cell) {
      (void)ci;
      (void)ref;
      (void)faces;
      assert(faces == ref);
    }
  }
  SubdividedComplex out{Complex(CellKind::simplex, d, std::move(cells)), std::move(carrier)};
  assert(out.carrier.size() == out.complex.face_dims().size());
  return out;
}

SubdividedComplex subdivide(const Complex& c, SubdivOp op, int r) {
  return op == SubdivOp::barycentric ? barycentric_subdivision(c) : edgewise_subdivision(c, r);
}

RelativeComplex subdivide_relative(const RelativeComplex& rc, SubdivOp op, int r) {
  SubdividedComplex sub = subdivide(rc.base(), op, r);
  std::set<FaceKey> removed;
  for (const auto& [key, fd] : sub.complex.face_dims()) {
    (void)fd;
    if (rc.removed().count(sub.carrier.at(key))) removed.insert(key);
  }
  if (rc.empty_face_removed()) removed.insert(FaceKey{});
  return RelativeComplex(std::move(sub.complex), std::move(removed));
}

IntPolynomial h_sd_from_h(const IntPolynomial& h, int m) {
  if (h.degree() > m) throw std::invalid_argument("h degree exceeds the face count bound");
  IntPolynomial out;
  for (int l = 0; l <= h.degree(); ++l)
    if (h.coeff(l) != 0) out = out + colored_eulerian(m, l, 1).scaled(h.coeff(l));
  return out;
}

IntPolynomial h_edgewise_from_h(const IntPolynomial& h, int m, int r) {
  if (r < 1) throw std::invalid_argument("refinement order must be positive");
  if (h.degree() > m) throw std::invalid_argument("h degree exceeds the face count bound");
  return veronese_section(convolution_power(r, m) * h, r, 0);
}

RealizedComplex barycentric_cube_realization(int d) {
  if (d < 0) throw std::invalid_argument("negative dimension");
  // faces of [-1,1]^d are the sign vectors in {-1,0,1}^d; 0 marks a free coordinate
  std::map<std::vector<int>, VertexId> id_of;
  std::vector<std::vector<Rat>> points;
  std::vector<int> sv(d, -1);
  while (true) {
    id_of.emplace(sv, static_cast<VertexId>(points.size()));
    std::vector<Rat> p;
    for (int v : sv) p.emplace_back(v);
    points.push_back(std::move(p));
    int i = 0;
    while (i < d && sv[i] == 1) sv[i++] = -1;
    if (i == d) break;
    ++sv[i];
  }
  std::vector<Cell> cells;
  std::vector<VertexId> chain;
  std::vector<int> cur(d, 0);
  std::function<void()> grow = [&]() {
    chain.push_back(id_of.at(cur));
    bool leaf = true;
    for (int i = 0; i < d; ++i)
      if (cur[i] == 0) {
        leaf = false;
        for (int s : {-1, 1}) {
          cur[i] = s;
          grow();
          cur[i] = 0;
        }
      }
    if (leaf) cells.push_back({chain});
    chain.pop_back();
  };
  grow();
  return RealizedComplex{std::move(points), Complex(CellKind::simplex, d, std::move(cells))};
}

InterlacingReport check_step_interlacing(const Complex& c, const std::vector<int>& order,
                                         SubdivOp op, int r) {
  InterlacingReport rep;
  ShellingCheck sc = is_shelling(c, order);
  if (!sc.ok) {
    rep.note = "not a shelling: " + sc.reason;
    return rep;
  }
  rep.shelling = true;
  IntPolynomial total;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    RelativeComplex si = subdivide_relative(step_relative_complex(c, order, i), op, r);
    rep.step_h.push_back(si.h_polynomial());
    total = total + rep.step_h.back();
  }
  // the refined step complexes partition the refinement of the whole complex
  IntPolynomial whole = RelativeComplex(subdivide(c, op, r).complex, {}).h_polynomial();
  assert(total == whole);
  rep.nonnegative = std::none_of(rep.step_h.begin(), rep.step_h.end(),
                                 [](const IntPolynomial& p) { return p.has_negative_coeff(); });
  if (!rep.nonnegative) {
    rep.note = "a refined step polynomial has a negative coefficient";
    return rep;
  }
  rep.real_rooted = std::all_of(rep.step_h.begin(), rep.step_h.end(),
                                [](const IntPolynomial& p) { return is_real_rooted(p); });
  if (!rep.real_rooted) {
    rep.note = "a refined step polynomial is not real-rooted";
    return rep;
  }
  rep.sorted_order.resize(rep.step_h.size());
  std::iota(rep.sorted_order.begin(), rep.sorted_order.end(), 0);
  std::stable_sort(rep.sorted_order.begin(), rep.sorted_order.end(), [&](int a, int b) {
    return compare_root_lists(rep.step_h[a], rep.step_h[b]) < 0;
  });
  std::vector<IntPolynomial> sorted;
  for (int i : rep.sorted_order) sorted.push_back(rep.step_h[i]);
  rep.interlacing = is_interlacing_sequence(sorted);
  if (!rep.interlacing) rep.note = "sorted refined step polynomials do not interlace";
  return rep;
}

}  // namespace polyshell
