#pragma once

#include "polyshell/polynomial.hpp"

namespace polyshell {

inline constexpr unsigned long long kDefaultBudget = 20'000'000ULL;

// descent-count polynomial over r-colored permutations of {1..d} with the first
// l values marked; closed alternating-sum form, 0 <= l <= d, r >= 1
IntPolynomial colored_eulerian(int d, int l, int r);

// same polynomial by direct enumeration: entries i^c ordered by color first
// (higher color is smaller), a leading virtual 0 with color 0, and position 0
// additionally counted as a descent when the first value is marked
IntPolynomial colored_eulerian_by_descents(int d, int l, int r,
                                           unsigned long long budget = kDefaultBudget);

// same polynomial recovered from lattice-point counts of half-open boxes
IntPolynomial colored_eulerian_by_counts(int d, int l, int r,
                                         unsigned long long budget = kDefaultBudget);

// descent-count polynomial over signed permutations of {1..d} whose last entry
// is pinned to d+1-l (plain descents against a leading 0). l == 0 pins the last
// entry to d+1, which no signed permutation attains: the sum is empty.
struct TypeBResult {
  IntPolynomial poly;
  bool empty_restriction;
};
TypeBResult type_b_l_eulerian(int d, int l, unsigned long long budget = kDefaultBudget);

// points of Z^d in the box [0, r*t]^d with the lower wall removed in the first
// min(l, d) directions and the upper wall also removed in the first l - d
// directions when l > d; brute enumeration, 0 <= l <= 2d
Int lattice_count_halfopen(int d, int l, int r, int t,
                           unsigned long long budget = kDefaultBudget);

// numerator of sum_t counts[t] x^t over (1-x)^(d+1), needs counts for t = 0..d+1;
// result degree <= d+1
IntPolynomial hstar_from_counts(const std::vector<Int>& counts, int d);

// h* of the half-open unit cube (first l walls removed as above) dilated by r
IntPolynomial hstar_halfopen_cube(int d, int l, int r);

// degree of colored_eulerian(d, l, r): d-1 exactly when r == 1 and l < d, else d
int eulerian_degree(int d, int l, int r);

}  // namespace polyshell
