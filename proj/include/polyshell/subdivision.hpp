#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyshell/cellcomplex.hpp"
#include "polyshell/numeric.hpp"
#include "polyshell/polynomial.hpp"

namespace polyshell {

// simplicial refinement of a source complex plus the carrier map sending each face
// of the refinement to the smallest source face containing it
struct SubdividedComplex {
  Complex complex;
  std::map<FaceKey, FaceKey> carrier;

  const FaceKey& carrier_of(const FaceKey& face) const { return carrier.at(face); }
};

// order complex of the face poset: one vertex per source face, one top simplex per
// maximal chain
SubdividedComplex barycentric_subdivision(const Complex& c);

// r-fold edgewise refinement, r >= 1. a simplex cell splits into r^d simplices, a
// cube cell into r^d * d!. per-cell chart reflections are solved for so that all
// cells cut every shared face the same way; complexes admitting no coherent
// choice are rejected.
SubdividedComplex edgewise_subdivision(const Complex& c, int r);

enum class SubdivOp { barycentric, edgewise };

SubdividedComplex subdivide(const Complex& c, SubdivOp op, int r = 2);

// transports the removed family along the carrier map
RelativeComplex subdivide_relative(const RelativeComplex& rc, SubdivOp op, int r = 2);

// image of the h-polynomial of an (m-1)-dimensional relative simplicial complex
// under barycentric refinement
IntPolynomial h_sd_from_h(const IntPolynomial& h, int m);
// same for the r-fold edgewise refinement
IntPolynomial h_edgewise_from_h(const IntPolynomial& h, int m, int r);

// barycentric refinement of the solid cube [-1,1]^d realized on face barycenters;
// vertex i of the complex sits at points[i]
struct RealizedComplex {
  std::vector<std::vector<Rat>> points;
  Complex complex;
};
RealizedComplex barycentric_cube_realization(int d);

// refine each step complex of a shelling, then test whether the refined step
// h-polynomials, sorted by their root lists, form an interlacing sequence
struct InterlacingReport {
  bool shelling = false;
  bool nonnegative = false;   // every refined step polynomial is coefficientwise >= 0
  bool real_rooted = false;   // every refined step polynomial is real-rooted
  bool interlacing = false;
  std::vector<IntPolynomial> step_h;  // refined step h's in shelling order
  std::vector<int> sorted_order;      // candidate order fed to the interlacing test
  std::string note;
};
InterlacingReport check_step_interlacing(const Complex& c, const std::vector<int>& order,
                                         SubdivOp op, int r = 2);

}  // namespace polyshell
