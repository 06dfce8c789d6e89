#include "picgal/poly.hpp"

#include <algorithm>
#include <sstream>

namespace picgal {

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const Rat& x) const {
  if (is_zero()) return 0;
  // den^deg * p(num/den) is an integer with the same sign as p(x).
  const Int num = x.get_num();
  const Int den = x.get_den();
  Int acc = 0;
  Int dpow = 1;
  for (int i = degree(); i >= 0; --i) {
    acc = acc * num + coeffs[i] * dpow;
    if (i > 0) dpow *= den;
  }
  return sgn(acc);
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Int a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs.size()) c[i] += a.coeffs[i];
    if (i < b.coeffs.size()) c[i] += b.coeffs[i];
  }
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator-(const IntPoly& a) {
  std::vector<Int> c = a.coeffs;
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const Int& c, const IntPoly& a) {
  std::vector<Int> v = a.coeffs;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() <= 0) return IntPoly();
  std::vector<Int> c(p.coeffs.size() - 1);
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) c[i - 1] = Int(i) * p.coeffs[i];
  return IntPoly(std::move(c));
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw InternalError("divide_exact: zero divisor");
  if (num.is_zero()) return IntPoly();
  if (num.degree() < den.degree()) throw InternalError("divide_exact: not divisible");
  std::vector<Int> rem = num.coeffs;
  std::vector<Int> q(num.degree() - den.degree() + 1);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Int& lead = rem[k + den.degree()];
    if (lead % den.leading() != 0) throw InternalError("divide_exact: not divisible");
    q[k] = lead / den.leading();
    for (int j = 0; j <= den.degree(); ++j) rem[k + j] -= q[k] * den.coeffs[j];
  }
  for (const Int& r : rem)
    if (r != 0) throw InternalError("divide_exact: nonzero remainder");
  return IntPoly(std::move(q));
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const Int& c : p.coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // 0 for the zero polynomial
}

IntPoly primitive_part(const IntPoly& p) {
  Int g = content(p);
  if (g == 0 || g == 1) return p;
  std::vector<Int> c = p.coeffs;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

namespace {

// Pseudo-remainder: r = lc(b)^(deg a - deg b + 1) * a  mod b  (exact in Z[x]).
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    Int lead = r.leading();
    std::vector<Int> nr(r.coeffs.size());
    for (std::size_t i = 0; i + 1 < r.coeffs.size(); ++i) nr[i] = b.leading() * r.coeffs[i];
    for (int j = 0; j < db; ++j) nr[shift + j] -= lead * b.coeffs[j];
    nr.pop_back();
    r = IntPoly(std::move(nr));
  }
  return r;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 1) return primitive_part(p);
  IntPoly g = poly_gcd(p, derivative(p));
  if (g.degree() == 0) return primitive_part(p);
  return primitive_part(divide_exact(primitive_part(p), g));
}

int strip_linear_factor(IntPoly* p, const Int& root) {
  int mult = 0;
  while (!p->is_zero() && p->degree() >= 1 && p->eval(root) == 0) {
    // synthetic division by (x - root)
    std::vector<Int> q(p->coeffs.size() - 1);
    Int carry = 0;
    for (int i = p->degree(); i >= 1; --i) {
      carry = p->coeffs[i] + carry * root;
      q[i - 1] = carry;
    }
    *p = IntPoly(std::move(q));
    ++mult;
  }
  return mult;
}

bool is_palindromic(const IntPoly& p) {
  if (p.is_zero()) return false;
  const int d = p.degree();
  for (int i = 0; 2 * i <= d; ++i)
    if (p.coeffs[i] != p.coeffs[d - i]) return false;
  return true;
}

IntPoly trace_polynomial(const IntPoly& p) {
  if (!is_palindromic(p) || p.degree() % 2 != 0)
    throw InternalError("trace_polynomial: polynomial is not palindromic of even degree");
  const int s = p.degree() / 2;
  IntPoly acc(std::vector<Int>{p.coeffs[s]});
  IntPoly tprev(std::vector<Int>{2});     // x^0 + x^0
  IntPoly tcur(std::vector<Int>{0, 1});   // x + 1/x
  const IntPoly y = tcur;
  for (int k = 1; k <= s; ++k) {
    acc = acc + p.coeffs[s + k] * tcur;
    if (k < s) {
      IntPoly tnext = y * tcur - tprev;
      tprev = std::move(tcur);
      tcur = std::move(tnext);
    }
  }
  return acc;
}

Rat root_bound(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("root_bound: zero polynomial");
  Int maxabs = 0;
  for (int i = 0; i < p.degree(); ++i) maxabs = std::max(maxabs, Int(abs(p.coeffs[i])));
  Rat b = Rat(maxabs) / Rat(abs(p.leading()));
  b += 1;
  mpq_canonicalize(b.get_mpq_t());
  return b;
}

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("SturmChain: zero polynomial");
  IntPoly s0 = squarefree_part(p);
  seq_.push_back(s0);
  if (s0.degree() >= 1) {
    seq_.push_back(primitive_part(derivative(s0)));
    while (seq_.back().degree() >= 1) {
      const IntPoly& a = seq_[seq_.size() - 2];
      const IntPoly& b = seq_.back();
      IntPoly r = pseudo_rem(a, b);
      if (r.is_zero()) break;  // cannot happen for squarefree input
      // pseudo_rem scales by lc(b)^(delta+1); flip so the element is a
      // positive multiple of the true negated remainder.
      const int delta = a.degree() - b.degree();
      bool multiplier_negative = (b.leading() < 0) && ((delta + 1) % 2 == 1);
      r = primitive_part(r);
      seq_.push_back(multiplier_negative ? r : -r);
    }
  }
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}
}  // namespace

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& q : seq_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_plus_inf() const {
  std::vector<int> signs;
  for (const auto& q : seq_) signs.push_back(q.is_zero() ? 0 : sgn(q.leading()));
  return count_variations(signs);
}

int SturmChain::variations_at_minus_inf() const {
  std::vector<int> signs;
  for (const auto& q : seq_) {
    if (q.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sgn(q.leading());
    if (q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::count_in(const Rat& a, const Rat& b) const {
  if (seq_.front().sign_at(a) == 0 || seq_.front().sign_at(b) == 0)
    throw InternalError("Sturm count: endpoint is a root");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_greater(const Rat& a) const {
  if (seq_.front().sign_at(a) == 0) throw InternalError("Sturm count: endpoint is a root");
  return variations_at(a) - variations_at_plus_inf();
}

int SturmChain::count_real_roots() const {
  return variations_at_minus_inf() - variations_at_plus_inf();
}

std::optional<RootInterval> isolate_largest_root(const IntPoly& p, const Rat& eps,
                                                 const std::optional<Rat>& floor_above) {
  if (p.is_zero()) throw DomainError("isolate_largest_root: zero polynomial");
  if (p.degree() == 0) return std::nullopt;
  SturmChain chain(p);
  const Rat bound = root_bound(p);
  Rat lo = -bound, hi = bound;
  if (chain.count_greater(lo) == 0) return std::nullopt;

  int guard = 0;
  while (hi - lo > eps || (floor_above && lo < *floor_above)) {
    if (++guard > 100000) throw InternalError("isolate_largest_root: no convergence");
    Rat mid = (lo + hi) / 2;
    // Never evaluate the chain exactly at a root.
    while (chain.squarefree().sign_at(mid) == 0) mid = lo + (mid - lo) * Rat(3, 4);
    if (chain.count_greater(mid) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return RootInterval{lo, hi};
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int n = f.degree(), m = g.degree();
  if (n == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), f.coeffs[0].get_mpz_t(), m);
    return r;
  }
  if (m == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), g.coeffs[0].get_mpz_t(), n);
    return r;
  }
  IMat syl(n + m, n + m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) syl(i, i + j) = f.coeffs[n - j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) syl(m + i, i + j) = g.coeffs[m - j];
  return det(std::move(syl));
}

IntPoly root_product_transform(const IntPoly& p) {
  if (p.is_zero() || p.coeffs[0] == 0)
    throw DomainError("root_product_transform: requires p(0) != 0");
  const int n = p.degree();
  const int dq = n * n;
  // Evaluate q(t) = Res_x(p(x), x^n p(t/x)) at t = 0..n^2, then interpolate.
  std::vector<Int> values(dq + 1);
  for (int t = 0; t <= dq; ++t) {
    std::vector<Int> g(n + 1);
    Int tp = 1;
    for (int k = 0; k <= n; ++k) {  // coefficient of x^(n-k) is p_k t^k
      g[n - k] = p.coeffs[k] * tp;
      if (k < n) tp *= t;
    }
    values[t] = resultant(p, IntPoly(std::move(g)));
  }
  // Lagrange interpolation over Q at the integer nodes 0..dq.
  std::vector<Rat> acc(dq + 1, Rat(0));
  std::vector<Rat> master(dq + 2, Rat(0));  // prod (x - t)
  master[0] = 1;
  int mdeg = 0;
  for (int t = 0; t <= dq; ++t) {
    for (int i = mdeg + 1; i >= 1; --i) master[i] = master[i - 1] - Rat(t) * master[i];
    master[0] = -Rat(t) * master[0];
    ++mdeg;
  }
  for (int t = 0; t <= dq; ++t) {
    if (values[t] == 0) continue;
    // basis_t = master / (x - t), by synthetic division
    std::vector<Rat> basis(dq + 1);
    Rat carry = 0;
    for (int i = dq + 1; i >= 1; --i) {
      carry = master[i] + Rat(t) * carry;
      basis[i - 1] = carry;
    }
    Rat denom = 0;  // basis_t(t)
    for (int i = dq; i >= 0; --i) denom = denom * Rat(t) + basis[i];
    Rat scale = Rat(values[t]) / denom;
    for (int i = 0; i <= dq; ++i) acc[i] += scale * basis[i];
  }
  std::vector<Int> out(dq + 1);
  for (int i = 0; i <= dq; ++i) {
    Rat c = acc[i];
    mpq_canonicalize(c.get_mpq_t());
    if (c.get_den() != 1) throw InternalError("root_product_transform: non-integer coefficient");
    out[i] = c.get_num();
  }
  return IntPoly(std::move(out));
}

void sqrt_interval(const Rat& q, const Rat& eps, Rat* lo, Rat* hi) {
  if (q < 0) throw DomainError("sqrt_interval: negative input");
  if (eps <= 0) throw DomainError("sqrt_interval: eps must be positive");
  const Int num = q.get_num();
  const Int den = q.get_den();
  // sqrt(num/den) = sqrt(num*den)/den; scale by 2^k so the width 1/(den*2^k) <= eps.
  unsigned long k = 0;
  while (Rat(Int(1), den << k) > eps) ++k;
  Int t = num * den;
  t <<= 2 * k;
  Int r;
  mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
  Int scale = den << k;
  *lo = Rat(r, scale);
  *hi = Rat(r + 1, scale);
  mpq_canonicalize(lo->get_mpq_t());
  mpq_canonicalize(hi->get_mpq_t());
  if (r * r == t) *hi = *lo;  // exact square
}

}  // namespace picgal
