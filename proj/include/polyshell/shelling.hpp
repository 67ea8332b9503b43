#pragma once

#include "polyshell/cellcomplex.hpp"

namespace polyshell {

// one step of a cell order: the cell and the facets it shares with earlier cells
struct ShellingStep {
  int cell;
  std::vector<int> shared_facets;  // facet indices into the cell's lattice
};

struct ShellingCheck {
  bool ok = true;
  int failing_step = 0;  // 1-based, 0 when ok
  std::string reason;
};

// order must list every cell exactly once
std::vector<ShellingStep> shelling_steps(const Complex& c, const std::vector<int>& order);

// shelling: from the second cell on, the intersection with the union of earlier
// cells is a nonempty union of facets that can start a shelling of the cell's
// boundary (simplices: any nonempty facet set; cubes: the whole boundary or a set
// with some facet whose opposite wall is missing). dimension 0: every order.
ShellingCheck is_shelling(const Complex& c, const std::vector<int>& order);

// shelling whose every step removes a stable facet set (one face's containment
// set or the complement of one)
ShellingCheck is_stable_shelling(const Complex& c, const std::vector<int>& order);

// the step's cell relative to the subcomplex generated by its shared facets
RelativeComplex step_relative_complex(const Complex& c, const std::vector<int>& order, int i);

// h-polynomials of every step; for a shelling they add up to the h-polynomial
// of the whole complex
std::vector<IntPolynomial> step_h_polynomials(const Complex& c, const std::vector<int>& order);

}  // namespace polyshell
