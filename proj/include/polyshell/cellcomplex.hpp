#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "polyshell/polynomial.hpp"

namespace polyshell {

using VertexId = int;
// sorted distinct vertex ids; {} is the empty face
using FaceKey = std::vector<VertexId>;

FaceKey make_key(std::vector<VertexId> verts);
bool key_subset(const FaceKey& a, const FaceKey& b);
FaceKey key_intersection(const FaceKey& a, const FaceKey& b);

enum class CellKind { cube, simplex };

// one top cell. simplex: vertices kept sorted. cube of dimension d: 2^d corners in
// binary-counter chart order, coordinate i (1-based) read from bit (d - i), so the
// first coordinate is the most significant bit of the corner index.
struct Cell {
  std::vector<VertexId> verts;
};

struct Face {
  FaceKey key;
  int dim;  // -1 for the empty face
};

// vertex set of the cube face fixing the listed (0-based direction, side) pairs
FaceKey cube_chart_face(const Cell& cell, int dim,
                        const std::vector<std::pair<int, int>>& fixed);

// face lattice of a single cell.
// facet order: cube facet j fixes coordinate (j >> 1) (0-based) to side (j & 1),
// so facets 2i and 2i+1 are the opposing pair in direction i; simplex facet j
// drops the j-th vertex in sorted order.
class CellLattice {
public:
  CellLattice(CellKind kind, const Cell& cell, int dim);

  int dim() const { return dim_; }
  int facet_count() const;
  FaceKey facet_key(int j) const;
  // every face including the empty one and the cell itself
  const std::vector<Face>& faces() const { return faces_; }
  // indices of facets whose vertex set contains f
  std::vector<int> facets_containing(const FaceKey& f) const;

private:
  CellKind kind_;
  int dim_;
  Cell cell_;
  std::vector<Face> faces_;
};

// removed facet set obtained from one face by containment, or the complement of one
bool is_stable_removed_set(CellKind kind, const Cell& cell, int dim,
                           const std::set<int>& removed_facets);
// cube shortcut: neither the set nor its complement holds an opposing facet pair
bool cube_stable_by_opposing_pairs(int dim, const std::set<int>& removed_facets);

// pure polytopal complex with all top cells of one kind and dimension.
// validation: cell sizes match the dimension, corners distinct, no two cells on the
// same vertex set, and (cubes) any two cells meet in a whole face of each.
class Complex {
public:
  Complex(CellKind kind, int dim, std::vector<Cell> cells);

  CellKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int ci) const { return cells_.at(ci); }

  CellLattice lattice(int ci) const { return CellLattice(kind_, cells_.at(ci), dim_); }
  std::vector<FaceKey> cell_facets(int ci) const;

  // every nonempty face of the complex with its dimension
  const std::map<FaceKey, int>& face_dims() const { return face_dims_; }
  bool has_face(const FaceKey& k) const;

private:
  CellKind kind_;
  int dim_;
  std::vector<Cell> cells_;
  std::map<FaceKey, int> face_dims_;
};

// all faces of base lying under some generator (vertex-set inclusion), plus the
// empty face when the generator list is nonempty
std::set<FaceKey> face_closure(const Complex& base, const std::vector<FaceKey>& generators);

// pair (base, removed): removed is a subset-closed family of faces of base.
// the empty face is added to removed automatically as soon as removed is nonempty.
class RelativeComplex {
public:
  RelativeComplex(Complex base, std::set<FaceKey> removed);

  const Complex& base() const { return base_; }
  const std::set<FaceKey>& removed() const { return removed_; }
  bool empty_face_removed() const { return removed_.count(FaceKey{}) > 0; }
  int m() const { return base_.dim() + 1; }

  // coefficient k counts surviving faces with k vertices; constant term 1 exactly
  // when the empty face survives
  IntPolynomial f_polynomial() const;
  IntPolynomial h_polynomial() const;

private:
  Complex base_;
  std::set<FaceKey> removed_;
};

}  // namespace polyshell
