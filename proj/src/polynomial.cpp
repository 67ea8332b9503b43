#include "polyshell/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace polyshell {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Int int_pow(const Int& base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int r = 1, b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

int sign_of(const Rat& x) { return x.sign(); }
int sign_of(const Int& x) { return x.sign(); }

std::string rat_to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Int int_from_decimal(const std::string& s) {
  if (s.empty()) throw parse_error("empty integer literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw parse_error("bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw parse_error("bad integer literal: " + s);
  return Int(s);
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_decimal(s));
  Int num = int_from_decimal(s.substr(0, slash));
  Int den = int_from_decimal(s.substr(slash + 1));
  if (den <= 0) throw parse_error("bad rational literal: " + s);
  return Rat(num, den);
}

IntPolynomial::IntPolynomial(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }
IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(Int coeff, int k) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Int> c(k + 1, Int(0));
  c[k] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(Int c) { return monomial(std::move(c), 0); }

Int IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Int IntPolynomial::leading() const { return c_.empty() ? Int(0) : c_.back(); }

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> r = c_;
  for (auto& x : r) x = -x;
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const Int& a) const {
  std::vector<Int> r = c_;
  for (auto& x : r) x *= a;
  return IntPolynomial(std::move(r));
}

Rat IntPolynomial::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

Int IntPolynomial::eval(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

int IntPolynomial::sign_at(const Rat& x) const { return eval(x).sign(); }

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int>(i);
  return IntPolynomial(std::move(r));
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& x : c_) g = gcd(g, x);
  if (!c_.empty() && c_.back() < 0) g = -g;
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  std::vector<Int> r = c_;
  for (auto& x : r) x /= g;
  return IntPolynomial(std::move(r));
}

bool IntPolynomial::has_negative_coeff() const {
  return std::any_of(c_.begin(), c_.end(), [](const Int& x) { return x < 0; });
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Int a = c_[k];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? "-" : "+");
    }
    first = false;
    Int mag = abs(a);
    if (k == 0 || mag != 1) out << mag.str();
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

IntPolynomial h_from_f(const IntPolynomial& f, int m) {
  if (m < 0) throw std::invalid_argument("h_from_f: negative exponent");
  if (f.degree() > m) throw std::invalid_argument("h_from_f: deg f exceeds m");
  // sum_k f_k x^k (1-x)^{m-k}
  IntPolynomial one_minus_x{1, -1};
  std::vector<IntPolynomial> pw(m + 1);
  pw[0] = IntPolynomial::constant(1);
  for (int i = 1; i <= m; ++i) pw[i] = pw[i - 1] * one_minus_x;
  IntPolynomial h;
  for (int k = 0; k <= f.degree(); ++k)
    h = h + (IntPolynomial::monomial(f.coeff(k), k) * pw[m - k]);
  return h;
}

IntPolynomial f_from_h(const IntPolynomial& h, int m) {
  if (m < 0) throw std::invalid_argument("f_from_h: negative exponent");
  if (h.degree() > m) throw std::invalid_argument("f_from_h: deg h exceeds m");
  IntPolynomial one_plus_x{1, 1};
  std::vector<IntPolynomial> pw(m + 1);
  pw[0] = IntPolynomial::constant(1);
  for (int i = 1; i <= m; ++i) pw[i] = pw[i - 1] * one_plus_x;
  IntPolynomial f;
  for (int k = 0; k <= h.degree(); ++k)
    f = f + (IntPolynomial::monomial(h.coeff(k), k) * pw[m - k]);
  return f;
}

IntPolynomial reverse(const IntPolynomial& p, int d) {
  if (d < 0 || p.degree() > d) throw std::invalid_argument("reverse: degree out of range");
  std::vector<Int> r(d + 1, Int(0));
  for (int k = 0; k <= d; ++k) r[k] = p.coeff(d - k);
  return IntPolynomial(std::move(r));
}

bool is_symmetric(const IntPolynomial& p, int d) {
  if (p.is_zero()) return true;
  if (p.degree() > d) throw std::invalid_argument("is_symmetric: degree out of range");
  return p == reverse(p, d);
}

IntPolynomial veronese_section(const IntPolynomial& p, int r, int l) {
  if (r < 1) throw std::invalid_argument("veronese_section: r must be positive");
  if (l < 0 || l >= r) throw std::invalid_argument("veronese_section: section out of range");
  std::vector<Int> out;
  for (int k = 0; k * r + l <= p.degree(); ++k) out.push_back(p.coeff(k * r + l));
  return IntPolynomial(std::move(out));
}

IntPolynomial convolution_power(int r, int d) {
  if (r < 1 || d < 0) throw std::invalid_argument("convolution_power: bad parameters");
  IntPolynomial base(std::vector<Int>(r, Int(1)));
  IntPolynomial out = IntPolynomial::constant(1);
  for (int i = 0; i < d; ++i) out = out * base;
  return out;
}

namespace {

// rational-coefficient scratch polynomials for Euclidean steps
using QPoly = std::vector<Rat>;

QPoly to_q(const IntPolynomial& p) {
  QPoly q(p.coeffs().size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = Rat(p.coeffs()[i]);
  return q;
}

void q_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// remainder of a by b (b nonzero); a is consumed
QPoly q_rem(QPoly a, const QPoly& b) {
  q_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    q_trim(a);
  }
  return a;
}

QPoly q_div_exact(QPoly a, const QPoly& b) {
  q_trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::invalid_argument("divide_exact: not divisible");
  QPoly q(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    q_trim(a);
  }
  if (!a.empty()) throw std::invalid_argument("divide_exact: not divisible");
  return q;
}

IntPolynomial from_q_primitive(const QPoly& q) {
  if (q.empty()) return {};
  Int l = 1;
  for (const auto& x : q) l = lcm(l, denominator(x));
  std::vector<Int> c(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) c[i] = numerator(q[i] * Rat(l));
  return IntPolynomial(std::move(c)).primitive_part();
}

// exact integer-coefficient quotient (inputs with integral quotient only)
IntPolynomial from_q_int(const QPoly& q) {
  if (q.empty()) return {};
  std::vector<Int> c(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (denominator(q[i]) != 1) throw std::invalid_argument("divide_exact: non-integer quotient");
    c[i] = numerator(q[i]);
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.is_zero() ? IntPolynomial{} : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  QPoly x = to_q(a), y = to_q(b);
  while (!y.empty()) {
    QPoly r = q_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return from_q_primitive(x);
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  if (a.is_zero()) return {};
  return from_q_int(q_div_exact(to_q(a), to_q(b)));
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<IntPolynomial> out;
  if (p.degree() == 0) return out;
  IntPolynomial pp = p.primitive_part();
  IntPolynomial g = poly_gcd(pp, pp.derivative());
  if (g.degree() == 0) {
    out.push_back(pp);
    return out;
  }
  // Yun's algorithm
  IntPolynomial w = divide_exact(pp, g);
  IntPolynomial y = divide_exact(pp.derivative(), g);
  IntPolynomial z = y - w.derivative();
  while (w.degree() > 0) {
    IntPolynomial gi = poly_gcd(w, z);
    out.push_back(gi);
    w = divide_exact(w, gi);
    z = divide_exact(z, gi) - w.derivative();
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (const auto& f : squarefree_decomposition(p))
    if (f.degree() > 0) out = out * f;
  return out;
}

}  // namespace polyshell
