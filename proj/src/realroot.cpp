#include "polyshell/realroot.hpp"

#include <algorithm>
#include <cassert>

namespace polyshell {

namespace {

// Sturm chains over Z with sign-preserving primitive reduction: scaling any chain
// member by a positive constant leaves sign variations unchanged.
IntPolynomial shrink_positive(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Int g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  if (g < 0) g = -g;
  std::vector<Int> r = p.coeffs();
  for (auto& x : r) x /= g;
  return IntPolynomial(std::move(r));
}

// rational remainder, then cleared to a sign-matching integer polynomial
IntPolynomial signed_rem(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Rat> r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = Rat(a.coeffs()[i]);
  auto trim = [&] {
    while (!r.empty() && r.back() == 0) r.pop_back();
  };
  trim();
  while (r.size() >= b.coeffs().size() && !r.empty()) {
    Rat f = r.back() / Rat(b.leading());
    std::size_t shift = r.size() - b.coeffs().size();
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) r[shift + i] -= f * Rat(b.coeffs()[i]);
    trim();
  }
  Int l = 1;
  for (const auto& x : r) l = lcm(l, denominator(x));
  std::vector<Int> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = numerator(r[i] * Rat(l));
  return shrink_positive(IntPolynomial(std::move(out)));
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& u) {
  std::vector<IntPolynomial> chain{u, u.derivative()};
  while (!chain.back().is_zero()) {
    const IntPolynomial& s2 = chain[chain.size() - 2];
    const IntPolynomial& s1 = chain.back();
    chain.push_back(-signed_rem(s2, s1));
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<IntPolynomial>& chain, const Rat& x) {
  int v = 0, prev = 0;
  for (const auto& s : chain) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++v;
    prev = sg;
  }
  return v;
}

Rat cauchy_bound(const IntPolynomial& u) {
  Rat m = 0;
  Rat lead = Rat(abs(u.leading()));
  for (int k = 0; k < u.degree(); ++k) {
    Rat c = Rat(abs(u.coeff(k))) / lead;
    if (c > m) m = c;
  }
  return m + 1;
}

// a split point inside (lo, hi) that is not a root of u
Rat nonroot_split(const IntPolynomial& u, const Rat& lo, const Rat& hi) {
  Rat m = (lo + hi) / 2;
  if (u.sign_at(m) != 0) return m;
  int d = u.degree();
  for (int k = 1; k <= d + 1; ++k) {
    Rat c = lo + (hi - lo) * Rat(k, d + 3);
    if (u.sign_at(c) != 0) return c;
  }
  assert(false && "polynomial vanished at more points than its degree");
  return m;
}

struct IsolatedRoot {
  Rat lo, hi;  // open sign-change interval, endpoints are non-roots
};

// u squarefree with nonzero degree
std::vector<IsolatedRoot> isolate_squarefree(const IntPolynomial& u) {
  std::vector<IsolatedRoot> out;
  auto chain = sturm_chain(u);
  Rat b = cauchy_bound(u);
  struct Span {
    Rat lo, hi;
    int vlo, vhi;
  };
  std::vector<Span> stack{{-b, b, sign_variations(chain, -b), sign_variations(chain, b)}};
  while (!stack.empty()) {
    Span s = stack.back();
    stack.pop_back();
    int count = s.vlo - s.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({s.lo, s.hi});
      continue;
    }
    Rat m = nonroot_split(u, s.lo, s.hi);
    int vm = sign_variations(chain, m);
    stack.push_back({m, s.hi, vm, s.vhi});
    stack.push_back({s.lo, m, s.vlo, vm});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b2) {
    return a.lo < b2.lo;
  });
  return out;
}

// halve the interval around the single root of u inside it
void refine_once(const IntPolynomial& u, Rat& lo, Rat& hi) {
  Rat m = (lo + hi) / 2;
  int sm = u.sign_at(m);
  if (sm == 0) {
    // the root is exactly m; keep a sign-change interval around it
    Rat w = (hi - lo) / 8;
    lo = m - w;
    hi = m + w;
    return;
  }
  if (u.sign_at(lo) == sm)
    lo = m;
  else
    hi = m;
}

bool disjoint(const Rat& alo, const Rat& ahi, const Rat& blo, const Rat& bhi) {
  return ahi <= blo || bhi <= alo;
}

struct FactorRoot {
  const IntPolynomial* poly;
  Rat lo, hi;
  int mult;
};

// isolate all roots of p with multiplicities, intervals pairwise disjoint
std::vector<FactorRoot> isolate_all(const IntPolynomial& p,
                                    std::vector<IntPolynomial>& factors_out) {
  factors_out = squarefree_decomposition(p);
  std::vector<FactorRoot> roots;
  for (std::size_t i = 0; i < factors_out.size(); ++i) {
    if (factors_out[i].degree() <= 0) continue;
    for (const auto& r : isolate_squarefree(factors_out[i]))
      roots.push_back({&factors_out[i], r.lo, r.hi, static_cast<int>(i) + 1});
  }
  // factors are pairwise coprime: distinct roots, refinement separates intervals
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[i].poly == roots[j].poly) continue;
      while (!disjoint(roots[i].lo, roots[i].hi, roots[j].lo, roots[j].hi)) {
        if (roots[i].hi - roots[i].lo >= roots[j].hi - roots[j].lo)
          refine_once(*roots[i].poly, roots[i].lo, roots[i].hi);
        else
          refine_once(*roots[j].poly, roots[j].lo, roots[j].hi);
      }
    }
  std::sort(roots.begin(), roots.end(),
            [](const FactorRoot& a, const FactorRoot& b) { return a.lo < b.lo; });
  return roots;
}

}  // namespace

RootIsolation real_root_isolation(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_isolation: zero polynomial");
  RootIsolation out;
  std::vector<IntPolynomial> factors;
  auto roots = isolate_all(p, factors);
  for (const auto& f : factors)
    if (f.degree() > 0) out.squarefree_degree += f.degree();
  for (const auto& r : roots) {
    out.intervals.push_back({r.lo, r.hi});
    out.multiplicities.push_back(r.mult);
  }
  return out;
}

bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() == 0) return true;
  auto iso = real_root_isolation(p);
  long total = 0;
  for (int m : iso.multiplicities) total += m;
  return total == p.degree();
}

int RootRegistry::insert(const IntPolynomial& squarefree, Rat lo, Rat hi) {
  Entry cand{squarefree, lo, hi};
  for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
    if (same_root(entries_[i], cand)) return i;
    // distinct reals: separate the intervals to keep ordering by interval sound
    while (!disjoint(entries_[i].lo, entries_[i].hi, cand.lo, cand.hi)) {
      if (entries_[i].hi - entries_[i].lo >= cand.hi - cand.lo)
        refine_once(entries_[i].poly, entries_[i].lo, entries_[i].hi);
      else
        refine_once(cand.poly, cand.lo, cand.hi);
    }
  }
  entries_.push_back(std::move(cand));
  return static_cast<int>(entries_.size()) - 1;
}

bool RootRegistry::same_root(const Entry& a, const Entry& b) const {
  IntPolynomial g = poly_gcd(a.poly, b.poly);
  if (g.degree() < 1) return false;
  // a's endpoints are non-roots of a.poly, hence of g; same for b
  for (const auto& gr : isolate_squarefree(g)) {
    Rat glo = gr.lo, ghi = gr.hi;
    auto settles_in = [&](const Entry& e) {
      while (true) {
        if (e.lo <= glo && ghi <= e.hi) return true;
        if (ghi <= e.lo || e.hi <= glo) return false;
        refine_once(g, glo, ghi);
      }
    };
    Rat glo2 = gr.lo, ghi2 = gr.hi;
    bool in_a = settles_in(a);
    glo = glo2;
    ghi = ghi2;
    if (in_a && settles_in(b)) return true;
  }
  return false;
}

int RootRegistry::compare(int a, int b) const {
  if (a == b) return 0;
  const Entry& ea = entries_[a];
  const Entry& eb = entries_[b];
  // intervals are pairwise disjoint once inserted
  if (ea.hi <= eb.lo) return -1;
  if (eb.hi <= ea.lo) return 1;
  assert(false && "registry intervals overlap");
  return 0;
}

std::vector<std::pair<int, int>> RootRegistry::roots_of(const IntPolynomial& p) {
  std::vector<IntPolynomial> factors;
  auto roots = isolate_all(p, factors);
  std::vector<std::pair<int, int>> out;
  for (const auto& r : roots) out.emplace_back(insert(*r.poly, r.lo, r.hi), r.mult);
  std::sort(out.begin(), out.end(), [this](const auto& x, const auto& y) {
    return compare(x.first, y.first) > 0;  // largest root first
  });
  return out;
}

namespace {

std::vector<int> flat_desc(const std::vector<std::pair<int, int>>& roots) {
  std::vector<int> out;
  for (const auto& [id, mult] : roots)
    for (int i = 0; i < mult; ++i) out.push_back(id);
  return out;
}

bool interlaces_with_registry(const IntPolynomial& p, const IntPolynomial& q,
                              RootRegistry& reg) {
  if (p.is_zero() || q.is_zero()) return true;
  if (!is_real_rooted(p) || !is_real_rooted(q)) return false;
  std::vector<int> b = flat_desc(reg.roots_of(p));
  std::vector<int> a = flat_desc(reg.roots_of(q));
  int m = static_cast<int>(b.size()), n = static_cast<int>(a.size());
  if (n != m && n != m + 1) return false;
  for (int i = 0; i < m; ++i) {
    if (reg.compare(b[i], a[i]) > 0) return false;       // need b_i <= a_i
    if (i + 1 < n && reg.compare(a[i + 1], b[i]) > 0) return false;  // need a_{i+1} <= b_i
  }
  return true;
}

void require_onesign(const IntPolynomial& p, const char* who) {
  if (p.has_negative_coeff())
    throw unsupported_input(std::string(who) + ": polynomial has a negative coefficient");
}

}  // namespace

bool interlaces(const IntPolynomial& p, const IntPolynomial& q) {
  require_onesign(p, "interlaces");
  require_onesign(q, "interlaces");
  RootRegistry reg;
  return interlaces_with_registry(p, q, reg);
}

bool is_interlacing_sequence(const std::vector<IntPolynomial>& ps) {
  for (const auto& p : ps) require_onesign(p, "is_interlacing_sequence");
  RootRegistry reg;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i; j < ps.size(); ++j)
      if (!interlaces_with_registry(ps[i], ps[j], reg)) return false;
  return true;
}

int compare_root_lists(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("compare_root_lists: zero polynomial");
  if (!is_real_rooted(p) || !is_real_rooted(q))
    throw std::invalid_argument("compare_root_lists: input not real-rooted");
  RootRegistry reg;
  std::vector<int> b = flat_desc(reg.roots_of(p));
  std::vector<int> a = flat_desc(reg.roots_of(q));
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    if (k >= b.size()) return -1;  // p ran out: p sorts first
    if (k >= a.size()) return 1;
    int c = reg.compare(b[k], a[k]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace polyshell
