#pragma once

#include <cstddef>
#include <vector>

#include "picgal/common.hpp"
#include "picgal/intmat.hpp"

namespace picgal::piclattice {

/// Element of Z^{1,r} on the basis (e_0, e_1, ..., e_r): e_0 the pull-back of
/// a line, e_i the exceptional classes.
struct DivisorClass {
  std::vector<Int> coords;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<Int> c) : coords(std::move(c)) {}

  std::size_t rank() const { return coords.size(); }
  bool operator==(const DivisorClass& o) const { return coords == o.coords; }
  bool operator<(const DivisorClass& o) const { return coords < o.coords; }
};

DivisorClass operator-(const DivisorClass& a);

/// The Picard lattice of the blow-up of the plane at r points.
struct PicardLattice {
  int r = 0;
  IMat gram;                               // diag(1, -1, ..., -1), size r+1
  DivisorClass canonical;                  // K = -3 e_0 + e_1 + ... + e_r
  std::vector<DivisorClass> simple_roots;  // alpha_0 (r >= 3), alpha_1..alpha_{r-1}
};

PicardLattice make_lattice(int r);

/// Intersection pairing x^T gram y.
Int pair(const PicardLattice& lat, const DivisorClass& x, const DivisorClass& y);

/// Invariants of the orthogonal complement K^perp on the simple-root basis.
struct SublatticeInvariants {
  int rank = 0;       // number of basis vectors (= r)
  Int gram_det;       // exact determinant of the root Gram matrix
  bool is_even = false;
  std::pair<int, int> signature;  // (positive, negative) inertia
  int radical_rank = 0;           // dimension of the kernel of the form
};

SublatticeInvariants kperp_invariants(const PicardLattice& lat);

/// Result of a class enumeration; `truncated` is set when the search stopped
/// at `cap` classes (only possible for r >= 9, where the sets are infinite).
struct ClassList {
  std::vector<DivisorClass> classes;  // sorted lexicographically
  bool truncated = false;
};

/// All alpha with alpha^2 = -2 and alpha.K = 0 (requires r >= 3).
ClassList enumerate_roots(const PicardLattice& lat, std::size_t cap);

/// All E with E^2 = -1 and E.K = -1 (requires r >= 1).
ClassList enumerate_exceptional(const PicardLattice& lat, std::size_t cap);

}  // namespace picgal::piclattice
