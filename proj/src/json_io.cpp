#include "polyshell/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace polyshell {

namespace {

const Json& need(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw parse_error(std::string("missing field: ") + field);
  return j.at(field);
}

int need_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string need_string(const Json& j, const char* what) {
  if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(need_int(e, what));
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw parse_error("rationals must be \"p/q\" strings or integers");
}

std::vector<Rat> rat_array(const Json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

}  // namespace

Json poly_to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const Int& c : p.coeffs()) a.push_back(c.str());
  return a;
}

IntPolynomial poly_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("polynomial must be an array of coefficients");
  std::vector<Int> c;
  for (const auto& e : j) {
    if (e.is_string())
      c.push_back(int_from_decimal(e.get<std::string>()));
    else if (e.is_number_integer())
      c.push_back(Int(e.get<long long>()));
    else
      throw parse_error("polynomial coefficients must be decimal strings or integers");
  }
  return IntPolynomial(std::move(c));
}

Json complex_to_json(const Complex& c) {
  Json j;
  j["kind"] = c.kind() == CellKind::cube ? "cubical" : "simplicial";
  j["dim"] = c.dim();
  const char* field = c.kind() == CellKind::cube ? "corners" : "vertices";
  Json cells = Json::array();
  for (const Cell& cell : c.cells()) {
    Json jc;
    jc[field] = cell.verts;
    cells.push_back(std::move(jc));
  }
  j["cells"] = std::move(cells);
  return j;
}

Complex complex_from_json(const Json& j) {
  const std::string kind = need_string(need(j, "kind"), "kind");
  CellKind k;
  if (kind == "cubical")
    k = CellKind::cube;
  else if (kind == "simplicial")
    k = CellKind::simplex;
  else
    throw parse_error("kind must be \"cubical\" or \"simplicial\"");
  const int dim = need_int(need(j, "dim"), "dim");
  const Json& jcells = need(j, "cells");
  if (!jcells.is_array()) throw parse_error("cells must be an array");
  const char* field = k == CellKind::cube ? "corners" : "vertices";
  std::vector<Cell> cells;
  for (const auto& e : jcells) cells.push_back(Cell{int_array(need(e, field), field)});
  return Complex(k, dim, std::move(cells));
}

Json subdivided_to_json(const SubdividedComplex& sc) {
  Json j = complex_to_json(sc.complex);
  Json verts = Json::array();
  for (const auto& [key, d] : sc.complex.face_dims()) {
    if (d != 0) continue;
    Json e;
    e["id"] = key[0];
    e["source_face"] = sc.carrier_of(key);
    verts.push_back(std::move(e));
  }
  Json cells = Json::array();
  for (const Cell& cell : sc.complex.cells())
    cells.push_back(sc.carrier_of(make_key(cell.verts)));
  j["provenance"] = Json{{"vertices", std::move(verts)}, {"cells", std::move(cells)}};
  return j;
}

Json polytope_to_json(const PolytopeHV& p) {
  Json j;
  Json vs = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const Rat& x : v) row.push_back(rat_to_string(x));
    vs.push_back(std::move(row));
  }
  j["vertices"] = std::move(vs);
  Json fs = Json::array();
  for (int i = 0; i < p.facet_count(); ++i) {
    Json f;
    Json a = Json::array();
    for (const Rat& x : p.facets()[i].a) a.push_back(rat_to_string(x));
    f["a"] = std::move(a);
    f["b"] = rat_to_string(p.facets()[i].b);
    f["vertices"] = p.incidence()[i];
    fs.push_back(std::move(f));
  }
  j["facets"] = std::move(fs);
  return j;
}

PolytopeHV polytope_from_json(const Json& j) {
  const Json& jv = need(j, "vertices");
  if (!jv.is_array()) throw parse_error("vertices must be an array");
  std::vector<std::vector<Rat>> verts;
  for (const auto& row : jv) verts.push_back(rat_array(row, "vertex"));
  const Json& jf = need(j, "facets");
  if (!jf.is_array()) throw parse_error("facets must be an array");
  std::vector<RationalHyperplane> facets;
  std::vector<std::vector<int>> inc;
  for (const auto& e : jf) {
    RationalHyperplane h;
    h.a = rat_array(need(e, "a"), "facet normal");
    h.b = rat_from_json(need(e, "b"));
    facets.push_back(std::move(h));
    inc.push_back(int_array(need(e, "vertices"), "facet vertices"));
  }
  return PolytopeHV(std::move(verts), std::move(facets), std::move(inc));
}

Json json_from_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Json json_from_arg(const std::string& arg) {
  std::size_t i = 0;
  while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
  if (i < arg.size() && (arg[i] == '{' || arg[i] == '[')) return json_from_text(arg);
  std::ifstream in(arg);
  if (!in) throw parse_error("cannot read file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return json_from_text(buf.str());
}

}  // namespace polyshell
