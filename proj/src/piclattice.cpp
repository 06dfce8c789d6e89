#include "picgal/piclattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace picgal::piclattice {

DivisorClass operator-(const DivisorClass& a) {
  std::vector<Int> c = a.coords;
  for (auto& x : c) x = -x;
  return DivisorClass(std::move(c));
}

PicardLattice make_lattice(int r) {
  if (r < 0) throw DomainError("make_lattice: r must be >= 0");
  PicardLattice lat;
  lat.r = r;
  lat.gram = IMat(r + 1, r + 1);
  lat.gram(0, 0) = 1;
  for (int i = 1; i <= r; ++i) lat.gram(i, i) = -1;

  std::vector<Int> k(r + 1, Int(1));
  k[0] = -3;
  lat.canonical = DivisorClass(std::move(k));

  if (r >= 3) {
    std::vector<Int> a0(r + 1, Int(0));
    a0[0] = 1;
    a0[1] = a0[2] = a0[3] = -1;
    lat.simple_roots.push_back(DivisorClass(std::move(a0)));
  }
  for (int i = 1; i <= r - 1; ++i) {
    std::vector<Int> ai(r + 1, Int(0));
    ai[i] = 1;
    ai[i + 1] = -1;
    lat.simple_roots.push_back(DivisorClass(std::move(ai)));
  }
  return lat;
}

Int pair(const PicardLattice& lat, const DivisorClass& x, const DivisorClass& y) {
  const std::size_t n = static_cast<std::size_t>(lat.r) + 1;
  if (x.rank() != n || y.rank() != n) throw DomainError("pair: coordinate length does not match lattice rank");
  // gram is diagonal (1, -1, ..., -1)
  Int acc = x.coords[0] * y.coords[0];
  for (std::size_t i = 1; i < n; ++i) acc -= x.coords[i] * y.coords[i];
  return acc;
}

SublatticeInvariants kperp_invariants(const PicardLattice& lat) {
  if (lat.r < 3) throw DomainError("kperp_invariants: requires r >= 3 (alpha_0 undefined below)");
  const int n = static_cast<int>(lat.simple_roots.size());
  IMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = pair(lat, lat.simple_roots[i], lat.simple_roots[j]);

  SublatticeInvariants out;
  out.rank = n;
  out.gram_det = det(g);
  out.is_even = true;
  for (int i = 0; i < n; ++i)
    if (g(i, i) % 2 != 0) out.is_even = false;
  Inertia in = symmetric_inertia(g);
  out.signature = {in.positive, in.negative};
  out.radical_rank = in.zero;
  return out;
}

namespace {

// Backtracking over m in Z^r with sum(m) = s and sum(m^2) = q, pruned by the
// Cauchy-Schwarz bound s_rem^2 <= q_rem * coords_rem.
void search_coords(int idx, int r, long long s_rem, long long q_rem, std::vector<long long>& m,
                   const std::function<void(const std::vector<long long>&)>& emit) {
  if (q_rem < 0) return;
  int remaining = r - idx;
  if (remaining == 0) {
    if (s_rem == 0 && q_rem == 0) emit(m);
    return;
  }
  if (s_rem * s_rem > q_rem * remaining) return;
  long long mmax = static_cast<long long>(std::sqrt(static_cast<double>(q_rem))) + 1;
  while (mmax * mmax > q_rem) --mmax;
  for (long long v = -mmax; v <= mmax; ++v) {
    m[idx] = v;
    search_coords(idx + 1, r, s_rem - v, q_rem - v * v, m, emit);
  }
  m[idx] = 0;
}

// Classes d e_0 - sum m_i e_i with  sum m_i = 3d + k_offset  and
// sum m_i^2 = d^2 - self  (self = alpha^2, so -2 for roots, -1 for exceptional).
//
// For r <= 8 the quadratic (9-r) d^2 - 2 |k_offset| ... is definite and d is
// bounded; the bound below is derived from Cauchy-Schwarz:
//   (3d + k_offset)^2 <= r (d^2 - self).
// We enumerate over twice that bound plus a margin and assert nothing shows up
// outside the derived range.
ClassList enumerate_classes(const PicardLattice& lat, std::size_t cap, long long self, long long k_offset) {
  const int r = lat.r;
  ClassList out;

  auto emit_d = [&](long long d, std::vector<DivisorClass>* sink) {
    long long s = 3 * d + k_offset;
    long long q = d * d - self;
    if (q < 0) return;
    std::vector<long long> m(static_cast<std::size_t>(r), 0);
    search_coords(0, r, s, q, m, [&](const std::vector<long long>& mm) {
      std::vector<Int> c(static_cast<std::size_t>(r) + 1);
      c[0] = d;
      for (int i = 0; i < r; ++i) c[i + 1] = -mm[i];
      sink->push_back(DivisorClass(std::move(c)));
    });
  };

  if (r <= 8) {
    // Derived bound: (3d + k_offset)^2 <= r (d^2 - self)  =>
    // (9 - r) d^2 + 6 k_offset d + (k_offset^2 + r*self) <= 0.
    const double a = 9.0 - r;
    const double b = 6.0 * k_offset;
    const double c = static_cast<double>(k_offset) * k_offset + static_cast<double>(r) * self;
    const double disc = b * b - 4.0 * a * c;
    long long derived = 0;
    if (disc >= 0) {
      double hi = (-b + std::sqrt(disc)) / (2.0 * a);
      double lo = (-b - std::sqrt(disc)) / (2.0 * a);
      derived = static_cast<long long>(std::max(std::abs(hi), std::abs(lo))) + 1;
    }
    const long long margin = 2 * derived + 3;  // over-generous safety margin
    for (long long d = -margin; d <= margin; ++d) {
      std::vector<DivisorClass> found;
      emit_d(d, &found);
      if (!found.empty() && (d < -derived || d > derived))
        throw InternalError("enumerate: class found outside the derived degree bound");
      for (auto& cl : found) {
        out.classes.push_back(std::move(cl));
        if (out.classes.size() > cap)
          throw InternalError("enumerate: cap exceeded for a definite lattice (bound bug)");
      }
    }
  } else {
    // Infinite family: walk degrees outward until the cap is reached.
    const long long backstop = 100000;
    for (long long level = 0; level <= backstop && !out.truncated; ++level) {
      for (long long d : {level, -level}) {
        if (d == 0 && level != 0) continue;
        std::vector<DivisorClass> found;
        emit_d(d, &found);
        std::sort(found.begin(), found.end());
        for (auto& cl : found) {
          if (out.classes.size() >= cap) {
            out.truncated = true;
            break;
          }
          out.classes.push_back(std::move(cl));
        }
        if (out.truncated) break;
      }
      if (level == backstop) throw InternalError("enumerate: degree backstop reached before cap");
    }
  }

  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

}  // namespace

ClassList enumerate_roots(const PicardLattice& lat, std::size_t cap) {
  if (lat.r < 3) throw DomainError("enumerate_roots: requires r >= 3");
  if (cap == 0) throw DomainError("enumerate_roots: cap must be positive");
  return enumerate_classes(lat, cap, -2, 0);
}

ClassList enumerate_exceptional(const PicardLattice& lat, std::size_t cap) {
  if (lat.r < 1) throw DomainError("enumerate_exceptional: requires r >= 1");
  if (cap == 0) throw DomainError("enumerate_exceptional: cap must be positive");
  return enumerate_classes(lat, cap, -1, -1);
}

}  // namespace picgal::piclattice
