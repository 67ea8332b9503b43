#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "polyshell/constructions.hpp"
#include "polyshell/eulerian.hpp"
#include "polyshell/shelling.hpp"
#include "polyshell/subdivision.hpp"

using namespace polyshell;

namespace {

IntPolynomial whole_h(const Complex& c) {
  return RelativeComplex(c, {}).h_polynomial();
}

std::vector<int> identity(int n) {
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) o[i] = i;
  return o;
}

IntPolynomial poly(std::vector<Int> cs) { return IntPolynomial(std::move(cs)); }

}  // namespace

TEST_CASE("cube boundaries") {
  const Complex b1 = cube_boundary(1);
  CHECK(b1.kind() == CellKind::cube);
  CHECK(b1.dim() == 0);
  CHECK(b1.cell_count() == 2);
  CHECK(whole_h(b1) == poly({1, 1}));

  const Complex b2 = cube_boundary(2);
  REQUIRE(b2.cell_count() == 4);
  // wall listing: x1=0, x2=0, x1=1, x2=1 with binary-counter corners
  CHECK(b2.cell(0).verts == std::vector<VertexId>{1, 2});
  CHECK(b2.cell(1).verts == std::vector<VertexId>{1, 3});
  CHECK(b2.cell(2).verts == std::vector<VertexId>{3, 4});
  CHECK(b2.cell(3).verts == std::vector<VertexId>{2, 4});
  CHECK(whole_h(b2) == poly({1, 2, 1}));

  const Complex b3 = cube_boundary(3);
  REQUIRE(b3.cell_count() == 6);
  CHECK(b3.cell(0).verts == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(b3.cell(5).verts == std::vector<VertexId>{2, 4, 6, 8});
  CHECK(whole_h(b3) == poly({1, 5, -1, 1}));

  const Complex b4 = cube_boundary(4);
  CHECK(b4.cell_count() == 8);
  CHECK(whole_h(b4) == poly({1, 12, -10, 4, 1}));

  for (int d = 1; d <= 4; ++d) {
    const Complex b = cube_boundary(d);
    const auto st = is_stable_shelling(b, identity(b.cell_count()));
    CHECK(st.ok);
  }
  CHECK_THROWS_AS(cube_boundary(0), std::invalid_argument);
}

TEST_CASE("piles of cubes shell lexicographically") {
  const std::vector<std::vector<int>> shapes = {{4}, {3, 1}, {2, 2}, {1, 3, 2},
                                                {2, 2, 2}, {3, 2, 1}};
  for (const auto& sides : shapes) {
    CAPTURE(sides.size());
    const Complex p = pile_of_cubes(sides);
    int boxes = 1;
    for (int s : sides) boxes *= s;
    CHECK(p.cell_count() == boxes);
    const auto order = identity(p.cell_count());
    CHECK(is_stable_shelling(p, order).ok);
    IntPolynomial total;
    std::vector<IntPolynomial> steps = step_h_polynomials(p, order);
    for (const auto& h : steps) total = total + h;
    CHECK(total == whole_h(p));
  }
  CHECK(whole_h(pile_of_cubes({1, 3, 2})) == poly({1, 20, -20, 5}));
  CHECK(whole_h(pile_of_cubes({2, 2, 2})) == poly({1, 23, -21, 5}));
  CHECK(whole_h(pile_of_cubes({3, 1})) == poly({1, 5, -3}));
  CHECK_THROWS_AS(pile_of_cubes({}), std::invalid_argument);
  CHECK_THROWS_AS(pile_of_cubes({2, 0}), std::invalid_argument);
}

TEST_CASE("nonstable pile order is a shelling that fails stability at the last box") {
  const auto sc = nonstable_pile_order();
  CHECK(sc.order == std::vector<int>{0, 2, 4, 1, 5, 3});
  CHECK(is_shelling(sc.complex, sc.order).ok);
  const auto st = is_stable_shelling(sc.complex, sc.order);
  CHECK_FALSE(st.ok);
  CHECK(st.failing_step == 6);
  const auto steps = step_h_polynomials(sc.complex, sc.order);
  REQUIRE(steps.size() == 6);
  CHECK(steps[0] == poly({1, 4, -6, 2}));
  for (int i = 1; i <= 4; ++i) CHECK(steps[i] == poly({0, 4, -4, 1}));
  CHECK(steps[5] == poly({0, 0, 2, -1}));
}

TEST_CASE("cuboid boundaries") {
  const int expected_cells_d3[] = {6, 10, 16, 24};
  for (int l = 0; l <= 3; ++l) {
    const Complex c = cuboid_boundary(3, l);
    CHECK(c.cell_count() == expected_cells_d3[l]);
    CHECK(is_stable_shelling(c, identity(c.cell_count())).ok);
  }
  CHECK(whole_h(cuboid_boundary(3, 0)) == poly({1, 5, -1, 1}));
  CHECK(whole_h(cuboid_boundary(3, 1)) == poly({1, 9, -1, 1}));
  CHECK(whole_h(cuboid_boundary(3, 2)) == poly({1, 15, -1, 1}));
  CHECK(whole_h(cuboid_boundary(3, 3)) == poly({1, 23, -1, 1}));
  for (int l = 0; l <= 2; ++l) {
    const Complex c = cuboid_boundary(2, l);
    CHECK(c.cell_count() == 4 + 2 * l);
    CHECK(is_stable_shelling(c, identity(c.cell_count())).ok);
    CHECK(whole_h(c) == poly({1, 2 * (1 + l), 1}));
  }
  CHECK(whole_h(cuboid_boundary(1, 1)) == poly({1, 1}));
  CHECK_THROWS_AS(cuboid_boundary(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(cuboid_boundary(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(cuboid_boundary(0, 0), std::invalid_argument);
}

TEST_CASE("capped cubes come with stable shellings and interlacing refinements") {
  const auto one = capped_cube(1);
  CHECK(one.complex.cell_count() == 10);
  CHECK(is_stable_shelling(one.complex, one.order).ok);
  CHECK(whole_h(one.complex) == poly({1, 9, -1, 1}));

  const auto rep1 = check_step_interlacing(one.complex, one.order, SubdivOp::barycentric);
  CHECK(rep1.interlacing);
  REQUIRE(rep1.step_h.size() == 10);
  CHECK(rep1.step_h[0] == poly({1, 6, 1}));
  CHECK(rep1.step_h[1] == poly({0, 6, 2}));
  CHECK(rep1.step_h[4] == poly({0, 2, 6}));
  CHECK(rep1.step_h[9] == poly({0, 1, 6, 1}));

  const auto two = capped_cube(2);
  CHECK(two.complex.cell_count() == 14);
  CHECK(is_stable_shelling(two.complex, two.order).ok);
  CHECK(whole_h(two.complex) == poly({1, 13, -1, 1}));

  const auto rep2 = check_step_interlacing(two.complex, two.order, SubdivOp::barycentric);
  CHECK(rep2.interlacing);
  REQUIRE(rep2.step_h.size() == 14);
  CHECK(rep2.step_h[13] == poly({0, 1, 6, 1}));
  IntPolynomial total;
  std::vector<IntPolynomial> hs = rep2.step_h;
  for (const auto& h : hs) total = total + h;
  CHECK(total == whole_h(subdivide(two.complex, SubdivOp::barycentric).complex));

  CHECK(check_step_interlacing(one.complex, one.order, SubdivOp::edgewise, 2).interlacing);
  CHECK(check_step_interlacing(two.complex, two.order, SubdivOp::edgewise, 2).interlacing);

  CHECK_THROWS_AS(capped_cube(0), std::invalid_argument);
  CHECK_THROWS_AS(capped_cube(3), std::invalid_argument);
}

TEST_CASE("relative simplex concentrates h in one degree") {
  for (int d = 0; d <= 4; ++d)
    for (int l = 0; l <= d + 1; ++l) {
      CAPTURE(d);
      CAPTURE(l);
      const RelativeComplex rc = simplex_relative(d, l);
      CHECK(rc.h_polynomial() == IntPolynomial::monomial(1, l));
      CHECK(rc.empty_face_removed() == (l > 0));
    }
  CHECK_THROWS_AS(simplex_relative(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(simplex_relative(-1, 0), std::invalid_argument);
}

TEST_CASE("stacked spheres") {
  const auto base = stacked_simplicial(3, 0);
  CHECK(base.complex.cell_count() == 4);
  CHECK(whole_h(base.complex) == poly({1, 1, 1, 1}));

  const auto one = stacked_simplicial(3, 1);
  CHECK(one.complex.cell_count() == 6);
  CHECK(whole_h(one.complex) == poly({1, 2, 2, 1}));

  const auto two = stacked_simplicial(3, 2);
  CHECK(two.complex.cell_count() == 8);
  CHECK(whole_h(two.complex) == poly({1, 3, 3, 1}));

  const auto four_d = stacked_simplicial(4, 1);
  CHECK(four_d.complex.cell_count() == 8);
  CHECK(whole_h(four_d.complex) == poly({1, 2, 2, 2, 1}));

  const auto polygon = stacked_simplicial(2, 3);
  CHECK(polygon.complex.cell_count() == 6);
  CHECK(whole_h(polygon.complex) == poly({1, 4, 1}));

  for (const auto* sc : {&base, &one, &two, &four_d, &polygon})
    CHECK(is_stable_shelling(sc->complex, sc->order).ok);

  // refining the whole complex matches the coefficientwise transform of h
  const IntPolynomial direct = whole_h(subdivide(two.complex, SubdivOp::barycentric).complex);
  IntPolynomial mapped;
  const IntPolynomial h = whole_h(two.complex);
  for (int l = 0; l <= h.degree(); ++l)
    mapped = mapped + colored_eulerian(3, l, 1).scaled(h.coeff(l));
  CHECK(direct == mapped);
  CHECK(direct == h_sd_from_h(h, 3));

  CHECK_THROWS_AS(stacked_simplicial(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(stacked_simplicial(3, -1), std::invalid_argument);
}

TEST_CASE("scenario gallery expectations hold") {
  const auto gallery = standard_scenarios();
  CHECK(gallery.size() >= 19);
  std::set<std::string> names;
  for (const auto& sc : gallery) {
    CAPTURE(sc.name);
    CHECK(names.insert(sc.name).second);
    REQUIRE(static_cast<int>(sc.order.size()) == sc.complex.cell_count());
    std::set<int> seen(sc.order.begin(), sc.order.end());
    CHECK(static_cast<int>(seen.size()) == sc.complex.cell_count());
    CHECK(is_shelling(sc.complex, sc.order).ok);
    CHECK(is_stable_shelling(sc.complex, sc.order).ok == sc.expect_stable);
  }
  int unstable = 0;
  for (const auto& sc : gallery)
    if (!sc.expect_stable) ++unstable;
  CHECK(unstable == 1);
}
