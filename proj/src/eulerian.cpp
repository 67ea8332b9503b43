#include "polyshell/eulerian.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace polyshell {

namespace {

void check_dlr(int d, int l, int r, int l_max) {
  if (d < 0 || r < 1 || l < 0 || l > l_max)
    throw std::invalid_argument("descent polynomial parameters out of range");
}

// factorial * r^d enumeration size against the budget
void check_enum_budget(int d, int r, unsigned long long budget) {
  unsigned long long n = 1;
  for (int i = 2; i <= d; ++i) {
    if (n > budget / static_cast<unsigned long long>(i))
      throw budget_exceeded("enumeration over colored permutations too large");
    n *= static_cast<unsigned long long>(i);
  }
  for (int i = 0; i < d; ++i) {
    if (n > budget / static_cast<unsigned long long>(r))
      throw budget_exceeded("enumeration over colored permutations too large");
    n *= static_cast<unsigned long long>(r);
  }
}

Int box_count(int d, int l, int r, int t) {
  // closed form of the half-open box count, used only for the main route
  Int rt = Int(r) * t;
  Int c = 1;
  int open_both = std::max(l - d, 0);
  int open_lower = std::min(l, d) - open_both;
  int closed = d - std::min(l, d);
  for (int i = 0; i < open_both; ++i) c *= rt - 1;
  for (int i = 0; i < open_lower; ++i) c *= rt;
  for (int i = 0; i < closed; ++i) c *= rt + 1;
  if (t == 0 && open_both > 0) return 0;  // empty box, not the polynomial value
  return c;
}

}  // namespace

IntPolynomial colored_eulerian(int d, int l, int r) {
  check_dlr(d, l, r, d);
  std::vector<Int> g(d + 1);
  for (int t = 0; t <= d; ++t) g[t] = box_count(d, l, r, t);
  std::vector<Int> a(d + 1, Int(0));
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= k; ++j) {
      Int term = binomial(d + 1, j) * g[k - j];
      a[k] += (j % 2 == 0) ? term : -term;
    }
  return IntPolynomial(a);
}

IntPolynomial colored_eulerian_by_descents(int d, int l, int r, unsigned long long budget) {
  check_dlr(d, l, r, d);
  check_enum_budget(d, r, budget);
  if (d == 0) return IntPolynomial({1});  // the empty word has no descent
  std::vector<Int> acc(d + 1, Int(0));
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> color(d + 1, 0);  // color[v] for value v, 1-based
    while (true) {
      int des = 0;
      if (color[perm[0]] > 0 || perm[0] <= l) ++des;
      for (int i = 0; i + 1 < d; ++i) {
        int a = perm[i], b = perm[i + 1];
        int ca = color[a], cb = color[b];
        // a^ca > b^cb in the color-major order
        if (cb > ca || (cb == ca && b < a)) ++des;
      }
      acc[des] += 1;
      int v = 1;
      while (v <= d && color[v] == r - 1) color[v++] = 0;
      if (v > d) break;
      ++color[v];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return IntPolynomial(acc);
}

IntPolynomial colored_eulerian_by_counts(int d, int l, int r, unsigned long long budget) {
  check_dlr(d, l, r, d);
  std::vector<Int> counts(d + 2);
  for (int t = 0; t <= d + 1; ++t) counts[t] = lattice_count_halfopen(d, l, r, t, budget);
  IntPolynomial h = hstar_from_counts(counts, d);
  assert(h.coeff(d + 1) == 0 && "half-open box counts must fit degree d");
  return h;
}

TypeBResult type_b_l_eulerian(int d, int l, unsigned long long budget) {
  if (d < 1 || l < 0 || l > d)
    throw std::invalid_argument("signed descent polynomial parameters out of range");
  if (l == 0) return {IntPolynomial(), true};
  check_enum_budget(d, 2, budget);
  int pin = d + 1 - l;
  std::vector<Int> acc(d + 1, Int(0));
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (perm[d - 1] != pin) continue;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (mask & (1u << (d - 1))) continue;  // the pinned last entry stays positive
      int des = 0, prev = 0;
      for (int i = 0; i < d; ++i) {
        int v = (mask & (1u << i)) ? -perm[i] : perm[i];
        if (prev > v) ++des;
        prev = v;
      }
      acc[des] += 1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {IntPolynomial(acc), false};
}

Int lattice_count_halfopen(int d, int l, int r, int t, unsigned long long budget) {
  check_dlr(d, l, r, 2 * d);
  if (t < 0) throw std::invalid_argument("negative dilation");
  if (d == 0) return 1;
  unsigned long long side = static_cast<unsigned long long>(r) * t + 1;
  unsigned long long grid = 1;
  for (int i = 0; i < d; ++i) {
    if (grid > budget / side) throw budget_exceeded("lattice grid too large");
    grid *= side;
  }
  int rt = r * t;
  int open_both = std::max(l - d, 0);
  int open_lower = std::min(l, d);
  Int count = 0;
  std::vector<int> z(d, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      if (i < open_lower && z[i] < 1) ok = false;
      if (i < open_both && z[i] > rt - 1) ok = false;
    }
    if (ok) count += 1;
    int i = 0;
    while (i < d && z[i] == rt) z[i++] = 0;
    if (i == d) break;
    ++z[i];
  }
  return count;
}

IntPolynomial hstar_from_counts(const std::vector<Int>& counts, int d) {
  if (d < 0 || counts.size() < static_cast<std::size_t>(d) + 2)
    throw std::invalid_argument("need counts for dilations 0..d+1");
  std::vector<Int> h(d + 2, Int(0));
  for (int k = 0; k <= d + 1; ++k)
    for (int j = 0; j <= k; ++j) {
      Int term = binomial(d + 1, j) * counts[k - j];
      h[k] += (j % 2 == 0) ? term : -term;
    }
  return IntPolynomial(h);
}

IntPolynomial hstar_halfopen_cube(int d, int l, int r) {
  check_dlr(d, l, r, 2 * d);
  if (l <= d) return colored_eulerian(d, l, r);
  return IntPolynomial({0, 1}) * reverse(colored_eulerian(d, 2 * d - l, r), d);
}

int eulerian_degree(int d, int l, int r) {
  check_dlr(d, l, r, d);
  return (r == 1 && l < d) ? d - 1 : d;
}

}  // namespace polyshell
