#include "polyshell/cellcomplex.hpp"

#include <algorithm>
#include <cassert>

namespace polyshell {

FaceKey make_key(std::vector<VertexId> verts) {
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw invalid_complex("face with repeated vertex");
  return verts;
}

bool key_subset(const FaceKey& a, const FaceKey& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FaceKey key_intersection(const FaceKey& a, const FaceKey& b) {
  FaceKey out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

int checked_dim_for_size(CellKind kind, int dim, std::size_t n) {
  if (kind == CellKind::simplex) {
    if (n != static_cast<std::size_t>(dim) + 1)
      throw invalid_complex("simplex cell with wrong vertex count");
  } else {
    if (n != (std::size_t{1} << dim)) throw invalid_complex("cube cell with wrong corner count");
  }
  return dim;
}

// corners of the chart face fixing the coordinates listed in 'fixed' (0-based
// direction, side); remaining coordinates run in binary-counter order
std::vector<int> cube_face_corner_indices(int dim, const std::vector<std::pair<int, int>>& fixed) {
  std::vector<int> free_dirs;
  std::vector<int> base(dim, -1);
  for (const auto& [dir, side] : fixed) base[dir] = side;
  for (int i = 0; i < dim; ++i)
    if (base[i] < 0) free_dirs.push_back(i);
  std::vector<int> out;
  for (int m = 0; m < (1 << free_dirs.size()); ++m) {
    int idx = 0;
    int shift = static_cast<int>(free_dirs.size());
    for (int i = 0; i < dim; ++i) {
      int bitpos = dim - 1 - i;  // coordinate i lives at this bit
      int v;
      if (base[i] >= 0) {
        v = base[i];
      } else {
        --shift;
        v = (m >> shift) & 1;
      }
      idx |= v << bitpos;
    }
    out.push_back(idx);
  }
  return out;
}

}  // namespace

FaceKey cube_chart_face(const Cell& cell, int dim,
                        const std::vector<std::pair<int, int>>& fixed) {
  std::vector<VertexId> v;
  for (int idx : cube_face_corner_indices(dim, fixed)) v.push_back(cell.verts.at(idx));
  return make_key(std::move(v));
}

CellLattice::CellLattice(CellKind kind, const Cell& cell, int dim)
    : kind_(kind), dim_(dim), cell_(cell) {
  checked_dim_for_size(kind, dim, cell.verts.size());
  faces_.push_back({FaceKey{}, -1});
  if (kind == CellKind::simplex) {
    int n = dim + 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> v;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) v.push_back(cell.verts[i]);
      faces_.push_back({make_key(std::move(v)), static_cast<int>(__builtin_popcount(mask)) - 1});
    }
  } else {
    // assignments over {side 0, side 1, free} per direction
    std::vector<int> a(dim, 0);
    while (true) {
      std::vector<std::pair<int, int>> fixed;
      for (int i = 0; i < dim; ++i)
        if (a[i] < 2) fixed.emplace_back(i, a[i]);
      std::vector<VertexId> v;
      for (int idx : cube_face_corner_indices(dim, fixed)) v.push_back(cell_.verts[idx]);
      faces_.push_back({make_key(std::move(v)), dim - static_cast<int>(fixed.size())});
      int i = 0;
      while (i < dim && a[i] == 2) a[i++] = 0;
      if (i == dim) break;
      ++a[i];
    }
  }
}

int CellLattice::facet_count() const {
  if (dim_ == 0) return kind_ == CellKind::simplex ? 1 : 0;
  return kind_ == CellKind::simplex ? dim_ + 1 : 2 * dim_;
}

FaceKey CellLattice::facet_key(int j) const {
  if (j < 0 || j >= facet_count()) throw std::out_of_range("facet index");
  if (kind_ == CellKind::simplex) {
    std::vector<VertexId> v;
    for (int i = 0; i <= dim_; ++i)
      if (i != j) v.push_back(cell_.verts[i]);
    return make_key(std::move(v));
  }
  std::vector<VertexId> v;
  for (int idx : cube_face_corner_indices(dim_, {{j >> 1, j & 1}})) v.push_back(cell_.verts[idx]);
  return make_key(std::move(v));
}

std::vector<int> CellLattice::facets_containing(const FaceKey& f) const {
  std::vector<int> out;
  for (int j = 0; j < facet_count(); ++j)
    if (key_subset(f, facet_key(j))) out.push_back(j);
  return out;
}

bool is_stable_removed_set(CellKind kind, const Cell& cell, int dim,
                           const std::set<int>& removed_facets) {
  CellLattice lat(kind, cell, dim);
  int n = lat.facet_count();
  for (const auto& face : lat.faces()) {
    auto up = lat.facets_containing(face.key);
    std::set<int> ups(up.begin(), up.end());
    if (ups == removed_facets) return true;
    std::set<int> comp;
    for (int j = 0; j < n; ++j)
      if (!ups.count(j)) comp.insert(j);
    if (comp == removed_facets) return true;
  }
  return false;
}

bool cube_stable_by_opposing_pairs(int dim, const std::set<int>& removed_facets) {
  auto has_pair = [&](bool inside) {
    for (int i = 0; i < dim; ++i) {
      bool a = removed_facets.count(2 * i) > 0;
      bool b = removed_facets.count(2 * i + 1) > 0;
      if (inside ? (a && b) : (!a && !b)) return true;
    }
    return false;
  };
  return !has_pair(true) || !has_pair(false);
}

Complex::Complex(CellKind kind, int dim, std::vector<Cell> cells)
    : kind_(kind), dim_(dim), cells_(std::move(cells)) {
  if (dim < 0) throw invalid_complex("negative dimension");
  if (cells_.empty()) throw invalid_complex("complex without cells");
  std::set<FaceKey> seen;
  for (auto& c : cells_) {
    checked_dim_for_size(kind_, dim_, c.verts.size());
    FaceKey k = make_key(c.verts);  // also rejects repeated corners
    if (kind_ == CellKind::simplex) c.verts = k;
    if (!seen.insert(k).second) throw invalid_complex("two cells on the same vertex set");
  }
  for (int ci = 0; ci < cell_count(); ++ci) {
    CellLattice lat = lattice(ci);
    for (const auto& face : lat.faces())
      if (face.dim >= 0) face_dims_[face.key] = face.dim;
  }
  if (kind_ == CellKind::cube) {
    // cells must meet in a whole face of each
    for (int a = 0; a < cell_count(); ++a)
      for (int b = a + 1; b < cell_count(); ++b) {
        FaceKey ka = make_key(cells_[a].verts), kb = make_key(cells_[b].verts);
        FaceKey inter = key_intersection(ka, kb);
        if (inter.empty()) continue;
        for (int ci : {a, b}) {
          CellLattice lat = lattice(ci);
          bool found = false;
          for (const auto& face : lat.faces())
            if (face.key == inter) {
              found = true;
              break;
            }
          if (!found) throw invalid_complex("cells meet outside a common face");
        }
      }
  }
}

std::vector<FaceKey> Complex::cell_facets(int ci) const {
  CellLattice lat = lattice(ci);
  std::vector<FaceKey> out;
  for (int j = 0; j < lat.facet_count(); ++j) out.push_back(lat.facet_key(j));
  return out;
}

bool Complex::has_face(const FaceKey& k) const { return face_dims_.count(k) > 0; }

std::set<FaceKey> face_closure(const Complex& base, const std::vector<FaceKey>& generators) {
  std::set<FaceKey> out;
  if (generators.empty()) return out;
  for (const auto& g : generators)
    if (!base.has_face(g)) throw invalid_complex("closure generator is not a face");
  for (const auto& [key, d] : base.face_dims()) {
    (void)d;
    for (const auto& g : generators)
      if (key_subset(key, g)) {
        out.insert(key);
        break;
      }
  }
  out.insert(FaceKey{});
  return out;
}

RelativeComplex::RelativeComplex(Complex base, std::set<FaceKey> removed)
    : base_(std::move(base)), removed_(std::move(removed)) {
  for (const auto& k : removed_)
    if (!k.empty() && !base_.has_face(k)) throw invalid_complex("removed key is not a face");
  if (!removed_.empty()) removed_.insert(FaceKey{});
  // subset closure: anything under a removed face is removed as well
  for (const auto& [key, d] : base_.face_dims()) {
    (void)d;
    if (removed_.count(key)) continue;
    for (const auto& r : removed_)
      if (key_subset(key, r)) throw invalid_complex("removed set is not subset-closed");
  }
}

IntPolynomial RelativeComplex::f_polynomial() const {
  std::vector<Int> f(base_.dim() + 2, Int(0));
  if (!empty_face_removed()) f[0] = 1;
  for (const auto& [key, d] : base_.face_dims())
    if (!removed_.count(key)) f[d + 1] += 1;
  return IntPolynomial(f);
}

IntPolynomial RelativeComplex::h_polynomial() const { return h_from_f(f_polynomial(), m()); }

}  // namespace polyshell
