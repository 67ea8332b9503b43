#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polyshell/numeric.hpp"

namespace polyshell {

// dense univariate polynomial over Z, coefficient k = coefficient of x^k.
// invariant: coefficient vector carries no trailing zeros (zero poly = empty vector).
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Int> coeffs);
  explicit IntPolynomial(std::vector<Int> coeffs);

  static IntPolynomial monomial(Int coeff, int k);
  static IntPolynomial constant(Int c);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return c_; }
  Int leading() const;

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial scaled(const Int& a) const;

  Rat eval(const Rat& x) const;
  Int eval(const Int& x) const;
  int sign_at(const Rat& x) const;

  IntPolynomial derivative() const;

  // gcd of all coefficients, sign of the leading one; content of 0 is 0
  Int content() const;
  IntPolynomial primitive_part() const;

  bool has_negative_coeff() const;

  // "0", "1+6x+x^2", "22x+4x^2+22x^3", negative terms joined with '-'
  std::string str() const;

private:
  void normalize();
  std::vector<Int> c_;
};

// f-polynomial of a relative complex -> h-polynomial:
// h(x) = (1-x)^m f(x/(1-x)); requires deg f <= m. Integer result by construction.
IntPolynomial h_from_f(const IntPolynomial& f, int m);
// inverse transform: f(x) = (1+x)^m h(x/(1+x))
IntPolynomial f_from_h(const IntPolynomial& h, int m);

// x^d p(1/x) on polynomials of degree <= d
IntPolynomial reverse(const IntPolynomial& p, int d);
bool is_symmetric(const IntPolynomial& p, int d);

// section l of the r-fold coefficient comb: sum_k coeff(k*r + l) x^k, 0 <= l < r
IntPolynomial veronese_section(const IntPolynomial& p, int r, int l);

// (1 + x + ... + x^{r-1})^d
IntPolynomial convolution_power(int r, int d);

// exact polynomial algebra over Z (rational arithmetic inside, primitive results)
// gcd: primitive with positive leading coefficient; gcd(0,0) = 0
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);
// exact quotient; throws std::invalid_argument when the division is not exact
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
// Yun decomposition: p = c * prod_i out[i]^(i+1), out[i] squarefree, pairwise coprime.
// out[i] is the primitive factor collecting roots of multiplicity i+1 (may be 1).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);
IntPolynomial squarefree_part(const IntPolynomial& p);

}  // namespace polyshell
