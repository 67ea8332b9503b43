#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyshell/cellcomplex.hpp"
#include "polyshell/numeric.hpp"

namespace polyshell {

// inequality <a, x> <= b; the hyperplane is its boundary
struct RationalHyperplane {
  std::vector<Rat> a;
  Rat b;
};

// convex polytope as vertices plus facet inequalities plus facet-vertex incidence.
// validated on construction: every vertex satisfies every inequality with equality
// exactly where the incidence says, every facet's vertex set affinely spans its
// hyperplane, and the vertex set is full-dimensional.
class PolytopeHV {
public:
  PolytopeHV(std::vector<std::vector<Rat>> vertices, std::vector<RationalHyperplane> facets,
             std::vector<std::vector<int>> incidence);

  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  const std::vector<std::vector<Rat>>& vertices() const { return vertices_; }
  const std::vector<RationalHyperplane>& facets() const { return facets_; }
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }

  // facets meeting facet i in a ridge (shared vertices of affine dimension d-2)
  const std::set<int>& neighbors(int i) const { return neighbors_.at(i); }
  // sorted vertex indices on the ridge between adjacent facets
  std::vector<int> ridge_vertices(int i, int j) const;
  std::vector<Rat> centroid() const;

private:
  int dim_;
  std::vector<std::vector<Rat>> vertices_;
  std::vector<RationalHyperplane> facets_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::set<int>> neighbors_;
};

// point p and direction v describing the line p + t v
struct LineQuery {
  std::vector<Rat> p;
  std::vector<Rat> v;
};

// crossing parameter of the line with every facet hyperplane, by facet index.
// throws genericity_error when the line is parallel to a hyperplane, two crossing
// parameters coincide, or the line misses the polytope's interior.
std::vector<std::pair<int, Rat>> line_intersections(const PolytopeHV& P, const LineQuery& L);

struct LineShellingResult {
  // facet indices: exit crossings by ascending parameter, then entry crossings by
  // ascending parameter (the pass through infinity sits between the two blocks)
  std::vector<int> order;
  int exit_count = 0;  // order positions before the pass through infinity
  std::vector<Rat> params;               // crossing parameter per order position
  std::vector<std::vector<Rat>> points;  // crossing point per order position
  // neighbors across ridges visible from the crossing point, per order position;
  // a ridge is visible when the neighbor's inequality is violated at the point
  std::vector<std::set<int>> visible;
  std::vector<std::set<int>> covisible;
  // ridge neighbors removed at each step: visible before infinity, covisible after
  std::vector<std::set<int>> removed;
};

LineShellingResult line_shelling_order(const PolytopeHV& P, const LineQuery& L);

// the facets as cells over vertex ids (polytope index + 1): all simplices, or all
// combinatorial cubes with charts recovered from the ridge pairing; anything else
// is unsupported
Complex boundary_complex(const PolytopeHV& P);

struct LineCheck {
  bool ok = false;
  int failing_step = 0;  // 1-based position in the order, 0 when ok
  std::string reason;
};

// the order must be a shelling whose removed ridge sets (from visibility) match
// the shared facets of each step and are stable on every facet's lattice
LineCheck is_stable_line_shelling(const PolytopeHV& P, const LineQuery& L);

struct RegionCheck {
  std::vector<bool> per_step;
  bool all = false;
};

// per step, whether the closure of the crossing point's region in the arrangement
// of all facet hyperplanes contains a point of the facet (exact feasibility by
// Fourier-Motzkin elimination; dimension at most 4)
RegionCheck strong_region_check(const PolytopeHV& P, const LineQuery& L);
bool is_strongly_stable(const PolytopeHV& P, const LineQuery& L);

// weaker regional condition using only the hyperplanes of the facet's own ridges
RegionCheck facet_region_check(const PolytopeHV& P, const LineQuery& L);

// deterministic jitter of the direction, then re-aiming through the centroid,
// until the query satisfies every genericity requirement
LineQuery suggest_generic_query(const PolytopeHV& P, const LineQuery& L);

struct LineSearchStats {
  int trials = 0;
  int shellings = 0;
  int stable = 0;
  int strongly_stable = 0;
  int genericity_failures = 0;

  bool operator==(const LineSearchStats&) const = default;
};

// samples `trials` lines through the interior, deterministically from the seed.
// the chain (strongly stable => facet region condition => stable) is re-verified
// on every sample; a violation throws instead of being counted.
LineSearchStats random_line_search(const PolytopeHV& P, int trials, std::uint64_t seed);

}  // namespace polyshell
