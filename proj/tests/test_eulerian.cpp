#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyshell/eulerian.hpp"

using namespace polyshell;

namespace {

Int coeff_sum(const IntPolynomial& p) {
  Int s = 0;
  for (const auto& c : p.coeffs()) s += c;
  return s;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("three independent routes agree") {
  for (int r = 1; r <= 3; ++r)
    for (int d = 0; d <= 4; ++d)
      for (int l = 0; l <= d; ++l) {
        CAPTURE(d);
        CAPTURE(l);
        CAPTURE(r);
        IntPolynomial a = colored_eulerian(d, l, r);
        CHECK(a == colored_eulerian_by_descents(d, l, r));
        CHECK(a == colored_eulerian_by_counts(d, l, r));
      }
}

TEST_CASE("fixed descent polynomials") {
  CHECK(colored_eulerian(0, 0, 2) == IntPolynomial({1}));
  CHECK(colored_eulerian(1, 0, 2) == IntPolynomial({1, 1}));
  CHECK(colored_eulerian(1, 1, 2) == IntPolynomial({0, 2}));
  CHECK(colored_eulerian(2, 0, 2) == IntPolynomial({1, 6, 1}));
  CHECK(colored_eulerian(2, 1, 2) == IntPolynomial({0, 6, 2}));
  CHECK(colored_eulerian(2, 2, 2) == IntPolynomial({0, 4, 4}));
  CHECK(colored_eulerian(3, 0, 2) == IntPolynomial({1, 23, 23, 1}));
  CHECK(colored_eulerian(3, 1, 2) == IntPolynomial({0, 18, 28, 2}));
  CHECK(colored_eulerian(3, 2, 2) == IntPolynomial({0, 12, 32, 4}));
  CHECK(colored_eulerian(3, 3, 2) == IntPolynomial({0, 8, 32, 8}));
  CHECK(colored_eulerian(2, 0, 1) == IntPolynomial({1, 1}));
  CHECK(colored_eulerian(2, 1, 1) == IntPolynomial({0, 2}));
  CHECK(colored_eulerian(2, 2, 1) == IntPolynomial({0, 1, 1}));
  CHECK(colored_eulerian(3, 0, 1) == IntPolynomial({1, 4, 1}));
}

TEST_CASE("coefficient sum counts all colored permutations") {
  for (int r = 1; r <= 3; ++r)
    for (int d = 0; d <= 4; ++d)
      for (int l = 0; l <= d; ++l)
        CHECK(coeff_sum(colored_eulerian(d, l, r)) == factorial(d) * int_pow(r, d));
}

TEST_CASE("degree rule") {
  for (int r = 1; r <= 3; ++r)
    for (int d = 0; d <= 4; ++d)
      for (int l = 0; l <= d; ++l) {
        CAPTURE(d);
        CAPTURE(l);
        CAPTURE(r);
        CHECK(colored_eulerian(d, l, r).degree() == eulerian_degree(d, l, r));
      }
  CHECK(eulerian_degree(3, 1, 1) == 2);
  CHECK(eulerian_degree(3, 3, 1) == 3);
  CHECK(eulerian_degree(3, 1, 2) == 3);
}

TEST_CASE("marked-zero polynomials are symmetric") {
  for (int d = 1; d <= 4; ++d) {
    CHECK(is_symmetric(colored_eulerian(d, 0, 1), d - 1));
    CHECK(is_symmetric(colored_eulerian(d, 0, 2), d));
  }
}

TEST_CASE("signed descent polynomials with a pinned last entry") {
  CHECK(type_b_l_eulerian(1, 1).poly == IntPolynomial({1}));
  CHECK(type_b_l_eulerian(2, 1).poly == IntPolynomial({1, 1}));
  CHECK(type_b_l_eulerian(2, 2).poly == IntPolynomial({0, 2}));
  CHECK(type_b_l_eulerian(3, 1).poly == IntPolynomial({1, 6, 1}));
  CHECK(type_b_l_eulerian(3, 2).poly == IntPolynomial({0, 6, 2}));
  CHECK(type_b_l_eulerian(3, 3).poly == IntPolynomial({0, 4, 4}));
  CHECK_FALSE(type_b_l_eulerian(3, 1).empty_restriction);

  auto empty = type_b_l_eulerian(3, 0);
  CHECK(empty.poly.is_zero());
  CHECK(empty.empty_restriction);
}

TEST_CASE("pinned signed descents match two-colored descents one rank down") {
  for (int d = 0; d <= 3; ++d)
    for (int l = 0; l <= d; ++l) {
      CAPTURE(d);
      CAPTURE(l);
      CHECK(type_b_l_eulerian(d + 1, l + 1).poly == colored_eulerian(d, l, 2));
    }
}

TEST_CASE("half-open cube h-star") {
  for (int r = 1; r <= 3; ++r)
    for (int d = 0; d <= 3; ++d)
      for (int l = 0; l <= d; ++l)
        CHECK(hstar_halfopen_cube(d, l, r) == colored_eulerian(d, l, r));

  CHECK(hstar_halfopen_cube(1, 2, 1) == IntPolynomial({0, 0, 1}));
  CHECK(hstar_halfopen_cube(2, 3, 2) == IntPolynomial({0, 2, 6}));
  CHECK(hstar_halfopen_cube(2, 4, 2) == IntPolynomial({0, 1, 6, 1}));

  // fully open walls agree with brute lattice counts
  for (int r = 1; r <= 2; ++r)
    for (int d = 1; d <= 3; ++d)
      for (int l = d + 1; l <= 2 * d; ++l) {
        CAPTURE(d);
        CAPTURE(l);
        CAPTURE(r);
        std::vector<Int> counts;
        for (int t = 0; t <= d + 1; ++t) counts.push_back(lattice_count_halfopen(d, l, r, t));
        CHECK(hstar_halfopen_cube(d, l, r) == hstar_from_counts(counts, d));
      }
}

TEST_CASE("lattice counts of half-open boxes") {
  CHECK(lattice_count_halfopen(2, 0, 1, 2) == 9);
  CHECK(lattice_count_halfopen(2, 1, 1, 2) == 6);
  CHECK(lattice_count_halfopen(2, 2, 1, 2) == 4);
  CHECK(lattice_count_halfopen(2, 3, 1, 2) == 2);
  CHECK(lattice_count_halfopen(2, 4, 1, 2) == 1);
  CHECK(lattice_count_halfopen(2, 4, 1, 1) == 0);
  CHECK(lattice_count_halfopen(3, 0, 2, 0) == 1);
  CHECK(lattice_count_halfopen(3, 1, 2, 0) == 0);
  CHECK(lattice_count_halfopen(0, 0, 1, 5) == 1);
}

TEST_CASE("count vector to h-star conversion") {
  // unit segment [0,1]: counts t+1
  CHECK(hstar_from_counts({Int(1), Int(2), Int(3)}, 1) == IntPolynomial({1}));
  // unit square: counts (t+1)^2, normalized volume 2
  CHECK(hstar_from_counts({Int(1), Int(4), Int(9), Int(16)}, 2) == IntPolynomial({1, 1}));
  // unit cube: counts (t+1)^3
  CHECK(hstar_from_counts({Int(1), Int(8), Int(27), Int(64), Int(125)}, 3) ==
        IntPolynomial({1, 4, 1}));
  // open unit segment: counts max(t-1, 0)
  CHECK(hstar_from_counts({Int(0), Int(0), Int(1)}, 1) == IntPolynomial({0, 0, 1}));
  CHECK_THROWS_AS(hstar_from_counts({Int(1), Int(2)}, 1), std::invalid_argument);
}

TEST_CASE("parameter validation and budgets") {
  CHECK_THROWS_AS(colored_eulerian(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(colored_eulerian(2, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(colored_eulerian(2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(colored_eulerian(-1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(type_b_l_eulerian(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(type_b_l_eulerian(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(hstar_halfopen_cube(1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(lattice_count_halfopen(2, 5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(colored_eulerian_by_descents(10, 0, 3, 1000), budget_exceeded);
  CHECK_THROWS_AS(lattice_count_halfopen(5, 0, 3, 4, 100), budget_exceeded);
  CHECK_THROWS_AS(type_b_l_eulerian(12, 3, 1000), budget_exceeded);
}
