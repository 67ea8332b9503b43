#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyshell {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// input is well-formed but outside what the toolkit supports
// (mixed-sign polynomial handed to the interlacing test, non-generic line, ...)
class unsupported_input : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// an enumeration would exceed the configured operation budget
class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// a cell complex (or relative complex) fails validation
class invalid_complex : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// malformed serialized input
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// a line query violates a genericity requirement (parallel to a hyperplane,
// coincident crossing parameters, missing the interior)
class genericity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Int binomial(int n, int k);
Int int_pow(const Int& base, int exp);

// -1, 0, +1
int sign_of(const Rat& x);
int sign_of(const Int& x);

// "p" or "p/q", q > 0, canonical form
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

// strict decimal integer (optional leading '-')
Int int_from_decimal(const std::string& s);

}  // namespace polyshell
