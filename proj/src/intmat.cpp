#include "picgal/intmat.hpp"

#include <algorithm>
#include <utility>

namespace picgal {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IMat IMat::diagonal(const std::vector<Int>& d) {
  IMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
  return m;
}

IMat IMat::operator*(const IMat& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product: dimension mismatch");
  IMat out(rows_, o.cols_);
  Int t;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        t = aik * o(k, j);
        out(i, j) += t;
      }
    }
  return out;
}

IMat IMat::operator+(const IMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum: dimension mismatch");
  IMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

IMat IMat::operator-(const IMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix difference: dimension mismatch");
  IMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

std::vector<Int> IMat::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DomainError("matrix apply: dimension mismatch");
  std::vector<Int> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

IMat IMat::transposed() const {
  IMat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IMat IMat::pow(unsigned long e) const {
  if (rows_ != cols_) throw DomainError("matrix power: not square");
  IMat acc = identity(rows_);
  IMat base = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return acc;
}

Int IMat::trace() const {
  Int t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool IMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

void IMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IMat::negate_row(int i) {
  for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IMat::negate_col(int i) {
  for (int k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
}

void IMat::add_row(int i, int j, const Int& f) {
  for (int k = 0; k < cols_; ++k) (*this)(i, k) += f * (*this)(j, k);
}

void IMat::add_col(int i, int j, const Int& f) {
  for (int k = 0; k < rows_; ++k) (*this)(k, i) += f * (*this)(k, j);
}

namespace {

// Smallest nonzero |entry| in the trailing block starting at (s, s).
bool locate_pivot(const IMat& d, int s, int* pi, int* pj) {
  bool found = false;
  Int best;
  for (int i = s; i < d.rows(); ++i)
    for (int j = s; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int v = abs(d(i, j));
      if (!found || v < best) {
        best = v;
        *pi = i;
        *pj = j;
        found = true;
      }
    }
  return found;
}

bool is_lone(const IMat& d, int s) {
  for (int i = s + 1; i < d.rows(); ++i)
    if (d(i, s) != 0) return false;
  for (int j = s + 1; j < d.cols(); ++j)
    if (d(s, j) != 0) return false;
  return true;
}

}  // namespace

SmithForm smith_form(IMat a) {
  SmithForm out;
  out.m = a.rows();
  out.n = a.cols();
  out.left = IMat::identity(out.m);
  out.right = IMat::identity(out.n);
  IMat& d = a;
  const int nmin = std::min(out.m, out.n);

  for (int s = 0; s < nmin; ++s) {
    int pi = s, pj = s;
    if (!locate_pivot(d, s, &pi, &pj)) break;  // trailing block all zero
    d.swap_rows(s, pi);
    out.left.swap_rows(s, pi);
    d.swap_cols(s, pj);
    out.right.swap_cols(s, pj);

    while (!is_lone(d, s)) {
      for (int i = s + 1; i < out.m; ++i) {
        if (d(i, s) == 0) continue;
        Int q = d(i, s) / d(s, s);
        if (q != 0) {
          d.add_row(i, s, -q);
          out.left.add_row(i, s, -q);
        }
        if (d(i, s) != 0) {
          d.swap_rows(s, i);
          out.left.swap_rows(s, i);
        }
      }
      for (int j = s + 1; j < out.n; ++j) {
        if (d(s, j) == 0) continue;
        Int q = d(s, j) / d(s, s);
        if (q != 0) {
          d.add_col(j, s, -q);
          out.right.add_col(j, s, -q);
        }
        if (d(s, j) != 0) {
          d.swap_cols(s, j);
          out.right.swap_cols(s, j);
        }
      }
    }

    // Enforce the divisibility chain: pull a non-divisible entry into row s.
    bool redo = true;
    while (redo) {
      redo = false;
      for (int i = s + 1; i < out.m && !redo; ++i)
        for (int j = s + 1; j < out.n && !redo; ++j)
          if (d(i, j) % d(s, s) != 0) {
            d.add_row(s, i, 1);
            out.left.add_row(s, i, 1);
            while (!is_lone(d, s)) {
              for (int k = s + 1; k < out.n; ++k) {
                if (d(s, k) == 0) continue;
                Int q = d(s, k) / d(s, s);
                if (q != 0) {
                  d.add_col(k, s, -q);
                  out.right.add_col(k, s, -q);
                }
                if (d(s, k) != 0) {
                  d.swap_cols(s, k);
                  out.right.swap_cols(s, k);
                }
              }
              for (int k = s + 1; k < out.m; ++k) {
                if (d(k, s) == 0) continue;
                Int q = d(k, s) / d(s, s);
                if (q != 0) {
                  d.add_row(k, s, -q);
                  out.left.add_row(k, s, -q);
                }
                if (d(k, s) != 0) {
                  d.swap_rows(s, k);
                  out.left.swap_rows(s, k);
                }
              }
            }
            redo = true;
          }
    }

    if (d(s, s) < 0) {
      d.negate_row(s);
      out.left.negate_row(s);
    }
  }

  out.diagonal.resize(nmin);
  out.rank = 0;
  for (int i = 0; i < nmin; ++i) {
    out.diagonal[i] = d(i, i);
    if (out.diagonal[i] != 0) ++out.rank;
  }
  return out;
}

Int det(IMat a) {
  if (a.rows() != a.cols()) throw DomainError("det: not square");
  const int n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::vector<std::vector<Int>> integer_kernel(const IMat& a) {
  SmithForm s = smith_form(a);
  std::vector<std::vector<Int>> basis;
  for (int j = 0; j < s.n; ++j) {
    bool in_kernel = j >= static_cast<int>(s.diagonal.size()) || s.diagonal[j] == 0;
    if (!in_kernel) continue;
    std::vector<Int> col(s.n);
    for (int i = 0; i < s.n; ++i) col[i] = s.right(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<std::vector<Int>> solve_in_lattice(const SmithForm& s, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != s.m) throw DomainError("solve_in_lattice: dimension mismatch");
  std::vector<Int> lb = s.left.apply(b);
  std::vector<Int> z(s.n, Int(0));
  const int nmin = static_cast<int>(s.diagonal.size());
  for (int i = 0; i < s.m; ++i) {
    if (i < nmin && s.diagonal[i] != 0) {
      if (lb[i] % s.diagonal[i] != 0) return std::nullopt;
      z[i] = lb[i] / s.diagonal[i];
    } else if (lb[i] != 0) {
      return std::nullopt;
    }
  }
  return s.right.apply(z);
}

Inertia symmetric_inertia(const IMat& sym) {
  if (sym.rows() != sym.cols()) throw DomainError("inertia: not square");
  const int n = sym.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(sym(i, j));

  Inertia out;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    // Prefer a nonzero diagonal pivot among the active rows.
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      // All active diagonal entries vanish; congruence-add a row to expose one.
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i)
        if (!done[i])
          for (int j = i + 1; j < n; ++j)
            if (!done[j] && a[i][j] != 0) {
              bi = i;
              bj = j;
              break;
            }
      if (bi < 0) {
        for (int i = 0; i < n; ++i)
          if (!done[i]) ++out.zero;
        return out;
      }
      for (int k = 0; k < n; ++k) a[bi][k] += a[bj][k];
      for (int k = 0; k < n; ++k) a[k][bi] += a[k][bj];
      p = bi;
    }
    if (a[p][p] > 0)
      ++out.positive;
    else
      ++out.negative;
    done[p] = true;
    Rat piv = a[p][p];
    for (int i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      Rat f = a[i][p] / piv;
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[p][j];
      for (int j = 0; j < n; ++j) a[j][i] -= f * a[j][p];
    }
  }
  return out;
}

}  // namespace picgal
