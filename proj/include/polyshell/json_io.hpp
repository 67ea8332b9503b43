#pragma once

#include <string>

#include <json.hpp>

#include "polyshell/cellcomplex.hpp"
#include "polyshell/lineshell.hpp"
#include "polyshell/polynomial.hpp"
#include "polyshell/subdivision.hpp"

namespace polyshell {

using Json = nlohmann::json;

// coefficients as decimal strings, lowest degree first; big integers never pass
// through native floating point
Json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const Json& j);

// {"kind": "cubical"|"simplicial", "dim": d, "cells": [{"corners": [...]} |
// {"vertices": [...]}]}; cube corners in binary-counter order with coordinate 1
// the most significant bit
Json complex_to_json(const Complex& c);
Complex complex_from_json(const Json& j);

// complex format plus a "provenance" block recording, for each refined vertex and
// each refined cell, the source face it came from
Json subdivided_to_json(const SubdividedComplex& sc);

// {"vertices": [["p/q", ...]], "facets": [{"a": ["p/q", ...], "b": "p/q",
// "vertices": [ids]}]}
Json polytope_to_json(const PolytopeHV& p);
PolytopeHV polytope_from_json(const Json& j);

// strict document parse; malformed text -> parse_error
Json json_from_text(const std::string& text);
// inline JSON when the argument starts with '{' or '[', otherwise a file path
Json json_from_arg(const std::string& arg);

}  // namespace polyshell
