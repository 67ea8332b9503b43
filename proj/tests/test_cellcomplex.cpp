#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyshell/cellcomplex.hpp"

using namespace polyshell;

namespace {

Complex one_square() { return Complex(CellKind::cube, 2, {Cell{{1, 2, 3, 4}}}); }

std::set<int> iset(std::initializer_list<int> v) { return std::set<int>(v); }

}  // namespace

TEST_CASE("face keys") {
  CHECK(make_key({3, 1, 2}) == FaceKey({1, 2, 3}));
  CHECK(make_key({}) == FaceKey{});
  CHECK_THROWS_AS(make_key({1, 1, 2}), invalid_complex);
  CHECK(key_subset({1, 3}, {1, 2, 3}));
  CHECK(key_subset({}, {1}));
  CHECK_FALSE(key_subset({1, 4}, {1, 2, 3}));
  CHECK(key_intersection({1, 2, 3}, {2, 3, 4}) == FaceKey({2, 3}));
  CHECK(key_intersection({1}, {2}).empty());
}

TEST_CASE("square lattice follows the binary-counter chart") {
  // corners: 10=(0,0) 11=(0,1) 12=(1,0) 13=(1,1), first coordinate most significant
  CellLattice lat(CellKind::cube, Cell{{10, 11, 12, 13}}, 2);
  CHECK(lat.facet_count() == 4);
  CHECK(lat.facet_key(0) == FaceKey({10, 11}));  // x1 = 0
  CHECK(lat.facet_key(1) == FaceKey({12, 13}));  // x1 = 1
  CHECK(lat.facet_key(2) == FaceKey({10, 12}));  // x2 = 0
  CHECK(lat.facet_key(3) == FaceKey({11, 13}));  // x2 = 1
  CHECK(lat.faces().size() == 10);  // 4 + 4 + 1 + empty
  CHECK(lat.facets_containing({10}) == std::vector<int>({0, 2}));
  CHECK(lat.facets_containing({}) == std::vector<int>({0, 1, 2, 3}));
  CHECK(lat.facets_containing({10, 11, 12, 13}).empty());
  CHECK_THROWS_AS(lat.facet_key(4), std::out_of_range);
}

TEST_CASE("three-cube facet order pairs opposing walls") {
  std::vector<VertexId> v{0, 1, 2, 3, 4, 5, 6, 7};
  CellLattice lat(CellKind::cube, Cell{v}, 3);
  CHECK(lat.facet_count() == 6);
  CHECK(lat.facet_key(0) == FaceKey({0, 1, 2, 3}));
  CHECK(lat.facet_key(1) == FaceKey({4, 5, 6, 7}));
  CHECK(lat.facet_key(2) == FaceKey({0, 1, 4, 5}));
  CHECK(lat.facet_key(3) == FaceKey({2, 3, 6, 7}));
  CHECK(lat.facet_key(4) == FaceKey({0, 2, 4, 6}));
  CHECK(lat.facet_key(5) == FaceKey({1, 3, 5, 7}));
  CHECK(lat.faces().size() == 28);  // 3^3 nonempty faces plus the empty one
  for (int i = 0; i < 3; ++i)
    CHECK(key_intersection(lat.facet_key(2 * i), lat.facet_key(2 * i + 1)).empty());
}

TEST_CASE("simplex lattice") {
  CellLattice lat(CellKind::simplex, Cell{{3, 5, 7}}, 2);
  CHECK(lat.facet_count() == 3);
  CHECK(lat.facet_key(0) == FaceKey({5, 7}));
  CHECK(lat.facet_key(1) == FaceKey({3, 7}));
  CHECK(lat.facet_key(2) == FaceKey({3, 5}));
  CHECK(lat.faces().size() == 8);
  CHECK(lat.facets_containing({3}) == std::vector<int>({1, 2}));

  CellLattice point(CellKind::simplex, Cell{{9}}, 0);
  CHECK(point.facet_count() == 1);
  CHECK(point.facet_key(0) == FaceKey{});
  CellLattice cpoint(CellKind::cube, Cell{{9}}, 0);
  CHECK(cpoint.facet_count() == 0);
}

TEST_CASE("stable removed facet sets of a square") {
  Cell sq{{1, 2, 3, 4}};
  CHECK(is_stable_removed_set(CellKind::cube, sq, 2, {}));
  CHECK(is_stable_removed_set(CellKind::cube, sq, 2, iset({0})));
  CHECK(is_stable_removed_set(CellKind::cube, sq, 2, iset({0, 2})));
  CHECK(is_stable_removed_set(CellKind::cube, sq, 2, iset({0, 1, 2})));
  CHECK(is_stable_removed_set(CellKind::cube, sq, 2, iset({0, 1, 2, 3})));
  CHECK_FALSE(is_stable_removed_set(CellKind::cube, sq, 2, iset({0, 1})));
  CHECK_FALSE(is_stable_removed_set(CellKind::cube, sq, 2, iset({2, 3})));
}

TEST_CASE("cube stability shortcut agrees with the face-search route") {
  for (int d = 1; d <= 3; ++d) {
    std::vector<VertexId> v(std::size_t{1} << d);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    Cell c{v};
    for (unsigned mask = 0; mask < (1u << (2 * d)); ++mask) {
      std::set<int> s;
      for (int j = 0; j < 2 * d; ++j)
        if (mask & (1u << j)) s.insert(j);
      CAPTURE(d);
      CAPTURE(mask);
      CHECK(is_stable_removed_set(CellKind::cube, c, d, s) ==
            cube_stable_by_opposing_pairs(d, s));
    }
  }
}

TEST_CASE("every simplex facet set is stable") {
  for (int d = 0; d <= 3; ++d) {
    std::vector<VertexId> v(d + 1);
    for (int i = 0; i <= d; ++i) v[i] = i;
    Cell c{v};
    int n = d == 0 ? 1 : d + 1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::set<int> s;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) s.insert(j);
      CHECK(is_stable_removed_set(CellKind::simplex, c, d, s));
    }
  }
}

TEST_CASE("complex validation") {
  CHECK_NOTHROW(Complex(CellKind::cube, 2, {Cell{{1, 2, 3, 4}}, Cell{{3, 4, 5, 6}}}));
  CHECK_NOTHROW(Complex(CellKind::simplex, 2, {Cell{{1, 2, 3}}, Cell{{2, 3, 4}}}));
  CHECK_THROWS_AS(Complex(CellKind::cube, 2, {}), invalid_complex);
  CHECK_THROWS_AS(Complex(CellKind::cube, 2, {Cell{{1, 2, 3}}}), invalid_complex);
  CHECK_THROWS_AS(Complex(CellKind::cube, 2, {Cell{{1, 1, 2, 3}}}), invalid_complex);
  CHECK_THROWS_AS(Complex(CellKind::simplex, 2, {Cell{{1, 2}}}), invalid_complex);
  // same vertex set twice
  CHECK_THROWS_AS(Complex(CellKind::cube, 2, {Cell{{1, 2, 3, 4}}, Cell{{1, 3, 2, 4}}}),
                  invalid_complex);
  // squares meeting in three vertices
  CHECK_THROWS_AS(Complex(CellKind::cube, 2, {Cell{{1, 2, 3, 4}}, Cell{{3, 4, 2, 6}}}),
                  invalid_complex);
}

TEST_CASE("complex face table") {
  Complex c(CellKind::cube, 2, {Cell{{1, 2, 3, 4}}, Cell{{3, 4, 5, 6}}});
  CHECK(c.face_dims().size() == 15);  // 6 vertices, 7 edges, 2 squares
  CHECK(c.has_face({3, 4}));
  CHECK(c.has_face({3, 4, 5, 6}));
  CHECK_FALSE(c.has_face({2, 3}));
  CHECK(c.face_dims().at({1, 2, 3, 4}) == 2);
  CHECK(c.face_dims().at({5}) == 0);
  CHECK(c.cell_facets(1) == std::vector<FaceKey>({{3, 4}, {5, 6}, {3, 5}, {4, 6}}));
}

TEST_CASE("face closure") {
  Complex c = one_square();
  auto cl = face_closure(c, {FaceKey{1, 2}});
  CHECK(cl == std::set<FaceKey>({{}, {1}, {2}, {1, 2}}));
  CHECK(face_closure(c, {}).empty());
  auto all = face_closure(c, {FaceKey{1, 2, 3, 4}});
  CHECK(all.size() == 10);
  CHECK_THROWS_AS(face_closure(c, {FaceKey{1, 5}}), invalid_complex);
}

TEST_CASE("relative complex f and h") {
  Complex sq = one_square();
  RelativeComplex whole(sq, {});
  CHECK_FALSE(whole.empty_face_removed());
  CHECK(whole.f_polynomial() == IntPolynomial({1, 4, 4, 1}));
  CHECK(whole.m() == 3);
  CHECK(whole.h_polynomial() == h_from_f(IntPolynomial({1, 4, 4, 1}), 3));

  RelativeComplex halfopen(sq, face_closure(sq, {FaceKey{1, 2}}));
  CHECK(halfopen.empty_face_removed());
  CHECK(halfopen.f_polynomial() == IntPolynomial({0, 2, 3, 1}));

  // one-dimensional: half-open interval has h = x
  Complex seg(CellKind::cube, 1, {Cell{{1, 2}}});
  RelativeComplex ho(seg, {{1}});  // the empty face joins automatically
  CHECK(ho.empty_face_removed());
  CHECK(ho.f_polynomial() == IntPolynomial({0, 1, 1}));
  CHECK(ho.h_polynomial() == IntPolynomial({0, 1}));
  CHECK(RelativeComplex(seg, {}).h_polynomial() == IntPolynomial({1}));

  // triangle minus the faces missing vertex 1 has h = x
  Complex tri(CellKind::simplex, 2, {Cell{{1, 2, 3}}});
  RelativeComplex rel(tri, {{2}, {3}, {2, 3}});
  CHECK(rel.f_polynomial() == IntPolynomial({0, 1, 2, 1}));
  CHECK(rel.h_polynomial() == IntPolynomial({0, 1}));
}

TEST_CASE("relative complex validation") {
  Complex sq = one_square();
  CHECK_THROWS_AS(RelativeComplex(sq, {{1, 5}}), invalid_complex);
  // not subset-closed: edge removed, endpoints kept
  CHECK_THROWS_AS(RelativeComplex(sq, {{1, 2}}), invalid_complex);
  CHECK_NOTHROW(RelativeComplex(sq, {{1}, {2}, {1, 2}}));
}

TEST_CASE("zero-dimensional complexes") {
  Complex pts(CellKind::simplex, 0, {Cell{{1}}, Cell{{2}}, Cell{{3}}});
  CHECK(pts.face_dims().size() == 3);
  RelativeComplex r(pts, {});
  CHECK(r.f_polynomial() == IntPolynomial({1, 3}));
  CHECK(r.h_polynomial() == IntPolynomial({1, 2}));  // (1-x) + 3x
}
