#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picgal/common.hpp"
#include "picgal/intmat.hpp"

namespace picgal {

/// Integer polynomial, constant term first. Zero polynomial = empty coeffs.
struct IntPoly {
  std::vector<Int> coeffs;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c) : coeffs(std::move(c)) { normalize(); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const Int& leading() const { return coeffs.back(); }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  Int eval(const Int& x) const;
  /// Sign of p(num/den), den > 0, computed as sign of den^deg * p(num/den).
  int sign_at(const Rat& x) const;

  bool operator==(const IntPoly& o) const { return coeffs == o.coeffs; }

  std::string to_string(const std::string& var = "x") const;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Int& c, const IntPoly& a);
IntPoly operator-(const IntPoly& a);

IntPoly derivative(const IntPoly& p);

/// Exact division; throws InternalError if the division is not exact in Z[x].
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

/// content > 0; primitive_part = p / content (sign of leading preserved).
Int content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// gcd of two integer polynomials, primitive with positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b);

IntPoly squarefree_part(const IntPoly& p);

/// Divide out (x - root) as often as it divides; returns multiplicity.
int strip_linear_factor(IntPoly* p, const Int& root);

/// True when coeffs[i] == coeffs[deg - i] for all i.
bool is_palindromic(const IntPoly& p);

/// For palindromic p of even degree 2s with p(±1) != 0, the unique P with
/// p(x) = x^s * P(x + 1/x); deg P = s, integer coefficients.
IntPoly trace_polynomial(const IntPoly& p);

/// Strictly exceeds the absolute value of every complex root (Cauchy bound).
Rat root_bound(const IntPoly& p);

/// Sturm chain of the squarefree part; counts distinct real roots exactly.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  /// Number of distinct real roots in (a, b], requires p(a) != 0 and p(b) != 0.
  int count_in(const Rat& a, const Rat& b) const;
  /// Number of distinct real roots > a, requires p(a) != 0.
  int count_greater(const Rat& a) const;
  int count_real_roots() const;

  const IntPoly& squarefree() const { return seq_.front(); }

 private:
  int variations_at(const Rat& x) const;
  int variations_at_plus_inf() const;
  int variations_at_minus_inf() const;
  std::vector<IntPoly> seq_;
};

/// Certified isolation of the largest real root: returns rational lo < hi with
/// the largest real root in (lo, hi] and hi - lo <= eps; nullopt when p has no
/// real root. `floor_above`: additionally refine until lo >= floor_above (the
/// caller must know the root exceeds it); pass nullopt to skip.
struct RootInterval {
  Rat lo, hi;
};
std::optional<RootInterval> isolate_largest_root(const IntPoly& p, const Rat& eps,
                                                 const std::optional<Rat>& floor_above = std::nullopt);

/// Resultant of two integer polynomials (Sylvester determinant, exact).
Int resultant(const IntPoly& f, const IntPoly& g);

/// The polynomial whose roots are all pairwise products of roots of p
/// (degree n^2, up to a constant). Requires p(0) != 0. The largest real root
/// equals the squared spectral radius of p when p has real coefficients.
IntPoly root_product_transform(const IntPoly& p);

/// Rational interval [lo, hi] with lo <= sqrt(q) <= hi and hi - lo <= eps.
/// Requires q >= 0.
void sqrt_interval(const Rat& q, const Rat& eps, Rat* lo, Rat* hi);

}  // namespace picgal
