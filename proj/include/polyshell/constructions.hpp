#pragma once

#include <string>
#include <vector>

#include "polyshell/cellcomplex.hpp"

namespace polyshell {

// boundary of the unit d-cube; walls listed as x_1=0,...,x_d=0,x_1=1,...,x_d=1.
// the identity order on that listing is a stable shelling.
Complex cube_boundary(int d);

// axis-aligned unit cubes filling the box sides[0] x ... x sides[d-1], listed in
// lexicographic order of their base corners (a stable shelling order)
Complex pile_of_cubes(const std::vector<int>& sides);

struct OrderedScenario {
  Complex complex;
  std::vector<int> order;
};

// the 1x3x2 pile walked bottom layer first, then the two far columns, so that the
// final box meets the earlier ones in three walls including an opposing pair: a
// shelling whose last step is not stable
OrderedScenario nonstable_pile_order();

// boundary of [0,2]^d with the first l coordinates cut at 1; cells grouped by wall
// in cube_boundary order, lexicographic by box start within a wall
Complex cuboid_boundary(int d, int l);

// boundary of the 3-cube with one wall (folds=1) or two opposite walls (folds=2)
// replaced by the five outward walls of a cube stacked onto them, together with a
// stable shelling order
OrderedScenario capped_cube(int folds);

// single d-simplex on vertices 1..d+1 with every face not containing {1..l}
// removed; the h-polynomial is x^l
RelativeComplex simplex_relative(int d, int l);

// boundary of the d-simplex in lexicographic order, then k stackings, each
// replacing the most recently added cell by the d cells joining its facets to a
// new vertex; the returned order is a (stable) shelling
OrderedScenario stacked_simplicial(int d, int k);

struct NamedScenario {
  std::string name;
  Complex complex;
  std::vector<int> order;
  bool expect_stable;  // whether the bundled order should be a stable shelling
};

std::vector<NamedScenario> standard_scenarios();

}  // namespace polyshell
