#pragma once

#include <utility>
#include <vector>

#include "polyshell/polynomial.hpp"

namespace polyshell {

// isolating intervals for the distinct real roots of a polynomial, left to right.
// each interval (lo, hi) has a sign change of the defining squarefree factor and
// contains exactly one real root of the input; intervals are pairwise disjoint.
struct RootIsolation {
  struct Interval {
    Rat lo, hi;
  };
  std::vector<Interval> intervals;
  std::vector<int> multiplicities;  // aligned with intervals, multiplicity in the input
  int squarefree_degree = 0;        // degree of the squarefree part
};

// p must be nonzero
RootIsolation real_root_isolation(const IntPolynomial& p);

// true when every complex root is real (counted with multiplicity); zero counts as true
bool is_real_rooted(const IntPolynomial& p);

// p << q: both real-rooted with weakly interleaved roots, q's largest root on top
// (... <= b2 <= a2 <= b1 <= a1 with b = roots of p, a = roots of q).
// conventions: 0 << p and p << 0 for every p. throws unsupported_input if either
// polynomial has a negative coefficient.
bool interlaces(const IntPolynomial& p, const IntPolynomial& q);

// ps[i] << ps[j] for all i <= j (i == j forces every entry real-rooted)
bool is_interlacing_sequence(const std::vector<IntPolynomial>& ps);

// exact ordering of algebraic numbers shared across several polynomials.
// entries are inserted as (squarefree primitive poly, isolating sign-change interval);
// equal roots coming from different polynomials are identified via gcd.
class RootRegistry {
public:
  // returns a stable id; ids of distinct entries denote distinct reals
  int insert(const IntPolynomial& squarefree, Rat lo, Rat hi);
  int size() const { return static_cast<int>(entries_.size()); }
  // total order: value of root id a vs value of root id b
  int compare(int a, int b) const;
  // roots of p as (id, multiplicity), largest root first
  std::vector<std::pair<int, int>> roots_of(const IntPolynomial& p);

private:
  struct Entry {
    IntPolynomial poly;
    mutable Rat lo, hi;
  };
  bool same_root(const Entry& a, const Entry& b) const;
  std::vector<Entry> entries_;
};

// exact comparison of two nonzero real-rooted polynomials by their descending root
// lists (lexicographic; a missing entry sorts below any root, so prefixes come first).
// used to build root-sorted candidate orderings. requires both real-rooted.
int compare_root_lists(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace polyshell
