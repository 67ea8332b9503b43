#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "polyshell/constructions.hpp"
#include "polyshell/json_io.hpp"

using namespace polyshell;

TEST_CASE("polynomial serialization") {
  const IntPolynomial p({1, 5, -1, 1});
  const Json j = poly_to_json(p);
  CHECK(j.dump() == R"(["1","5","-1","1"])");
  CHECK(poly_from_json(j) == p);

  // coefficients beyond 64 bits survive the round trip
  const Int big("123456789012345678901234567890");
  const IntPolynomial q({1, big});
  CHECK(poly_from_json(poly_to_json(q)) == q);

  CHECK(poly_to_json(IntPolynomial()).dump() == "[]");
  CHECK(poly_from_json(json_from_text("[]")).is_zero());
  // plain integers are accepted on input
  CHECK(poly_from_json(json_from_text("[1,2,1]")) == IntPolynomial({1, 2, 1}));

  CHECK_THROWS_AS(poly_from_json(json_from_text(R"(["abc"])")), parse_error);
  CHECK_THROWS_AS(poly_from_json(json_from_text("[1.5]")), parse_error);
  CHECK_THROWS_AS(poly_from_json(json_from_text(R"({"a":1})")), parse_error);
}

TEST_CASE("complex round trip") {
  const Complex sq = cube_boundary(2);
  const Json j = complex_to_json(sq);
  CHECK(j["kind"] == "cubical");
  CHECK(j["dim"] == 1);
  REQUIRE(j["cells"].size() == 4);
  CHECK(j["cells"][0]["corners"].size() == 2);

  const Complex back = complex_from_json(j);
  CHECK(back.kind() == CellKind::cube);
  CHECK(back.dim() == sq.dim());
  REQUIRE(back.cell_count() == sq.cell_count());
  for (int i = 0; i < sq.cell_count(); ++i) CHECK(back.cell(i).verts == sq.cell(i).verts);

  const Complex tri(CellKind::simplex, 2, {{{1, 2, 3}}, {{1, 3, 4}}});
  const Json jt = complex_to_json(tri);
  CHECK(jt["cells"][0].contains("vertices"));
  const Complex backt = complex_from_json(jt);
  CHECK(RelativeComplex(backt, {}).h_polynomial() ==
        RelativeComplex(tri, {}).h_polynomial());

  CHECK_THROWS_AS(complex_from_json(json_from_text(R"({"kind":"cube","dim":1,"cells":[]})")),
                  parse_error);
  CHECK_THROWS_AS(complex_from_json(json_from_text(R"({"kind":"cubical","cells":[]})")),
                  parse_error);
  CHECK_THROWS_AS(
      complex_from_json(json_from_text(
          R"({"kind":"cubical","dim":1,"cells":[{"vertices":[1,2]}]})")),
      parse_error);
  // structurally impossible cells surface as invalid_complex, not parse_error
  CHECK_THROWS_AS(
      complex_from_json(json_from_text(
          R"({"kind":"cubical","dim":2,"cells":[{"corners":[1,2,3]}]})")),
      invalid_complex);
}

TEST_CASE("subdivision provenance") {
  const Complex tri(CellKind::simplex, 2, {{{1, 2, 3}}});
  const Json j = subdivided_to_json(barycentric_subdivision(tri));
  CHECK(j["kind"] == "simplicial");
  CHECK(j["cells"].size() == 6);
  REQUIRE(j["provenance"]["vertices"].size() == 7);
  int by_size[4] = {0, 0, 0, 0};
  for (const auto& e : j["provenance"]["vertices"])
    ++by_size[e["source_face"].size()];
  CHECK(by_size[1] == 3);
  CHECK(by_size[2] == 3);
  CHECK(by_size[3] == 1);
  for (const auto& src : j["provenance"]["cells"])
    CHECK(src == Json::array({1, 2, 3}));
}

TEST_CASE("polytope round trip drives the line machinery") {
  const std::string text = R"({
    "vertices": [["-4","0"],["4","0"],["2","2"],["-1","2"]],
    "facets": [
      {"a":["0","-1"], "b":"0", "vertices":[0,1]},
      {"a":["1","1"],  "b":"4", "vertices":[1,2]},
      {"a":["0","1"],  "b":"2", "vertices":[2,3]},
      {"a":["-2","3"], "b":"8", "vertices":[0,3]}
    ]})";
  const PolytopeHV quad = polytope_from_json(json_from_text(text));
  CHECK(quad.dim() == 2);
  CHECK(quad.facet_count() == 4);
  const auto res = line_shelling_order(quad, {{-2, -4}, {1, 2}});
  CHECK(res.order == std::vector<int>{2, 1, 3, 0});

  const PolytopeHV back = polytope_from_json(polytope_to_json(quad));
  CHECK(back.vertices() == quad.vertices());
  CHECK(back.incidence() == quad.incidence());

  // rationals may also arrive as bare integers
  const PolytopeHV tri = polytope_from_json(json_from_text(
      R"({"vertices":[[0,0],[1,0],[0,1]],
          "facets":[{"a":[0,-1],"b":0,"vertices":[0,1]},
                    {"a":[1,1],"b":1,"vertices":[1,2]},
                    {"a":[-1,0],"b":0,"vertices":[0,2]}]})"));
  CHECK(tri.vertex_count() == 3);

  CHECK_THROWS_AS(polytope_from_json(json_from_text(R"({"vertices":[]})")), parse_error);
  CHECK_THROWS_AS(polytope_from_json(json_from_text(
                      R"({"vertices":[["1/0"]],"facets":[]})")),
                  parse_error);
}

TEST_CASE("document loading") {
  CHECK(json_from_text("[1,2]").is_array());
  CHECK_THROWS_AS(json_from_text("{"), parse_error);
  CHECK_THROWS_AS(json_from_text(""), parse_error);

  CHECK(json_from_arg(R"(  {"dim": 3})")["dim"] == 3);

  const std::string path = "test_json_io_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"kind":"simplicial","dim":1,"cells":[{"vertices":[1,2]}]})";
  }
  const Complex c = complex_from_json(json_from_arg(path));
  CHECK(c.cell_count() == 1);
  std::remove(path.c_str());

  CHECK_THROWS_AS(json_from_arg("no_such_file_here.json"), parse_error);
}
