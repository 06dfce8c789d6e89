#pragma once

#include <vector>

#include "picgal/common.hpp"

namespace picgal {

/// Permutation of {0, ..., n-1} stored as its image table.
using Perm = std::vector<int>;

Perm perm_identity(int n);
/// Apply g first, then f: (f*g)[x] = f[g[x]].
Perm perm_compose(const Perm& f, const Perm& g);
Perm perm_inverse(const Perm& p);
bool perm_is_identity(const Perm& p);

/// Base and strong generating set via deterministic Schreier-Sims.
/// Base points are chosen greedily: at each new level the point lying in the
/// largest orbit of the incoming generator (smallest index on ties).
class StabilizerChain {
 public:
  StabilizerChain(int n_points, const std::vector<Perm>& generators);

  Int order() const;
  bool contains(Perm g) const;
  std::vector<int> base() const;
  /// Orbit size at each level; their product is the group order.
  std::vector<std::size_t> transversal_sizes() const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> gens;
    std::vector<int> tr_slot;        // point -> index into transversal, -1 if outside orbit
    std::vector<Perm> transversal;   // transversal[tr_slot[p]] maps base_point to p
    std::vector<int> orbit;          // insertion order
  };

  void insert(std::size_t level, const Perm& g);
  void rebuild_orbit(Level& lv) const;
  bool sifts_to_identity(std::size_t level, Perm g) const;

  int n_ = 0;
  std::vector<Level> levels_;
};

}  // namespace picgal
