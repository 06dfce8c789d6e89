#include "picgal/permgroup.hpp"

#include <algorithm>

namespace picgal {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

StabilizerChain::StabilizerChain(int n_points, const std::vector<Perm>& generators) : n_(n_points) {
  for (const Perm& g : generators) {
    if (static_cast<int>(g.size()) != n_) throw DomainError("StabilizerChain: generator degree mismatch");
    insert(0, g);
  }
}

void StabilizerChain::rebuild_orbit(Level& lv) const {
  lv.tr_slot.assign(n_, -1);
  lv.transversal.clear();
  lv.orbit.clear();
  lv.orbit.push_back(lv.base_point);
  lv.transversal.push_back(perm_identity(n_));
  lv.tr_slot[lv.base_point] = 0;
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    int p = lv.orbit[head];
    for (const Perm& s : lv.gens) {
      int q = s[p];
      if (lv.tr_slot[q] < 0) {
        lv.tr_slot[q] = static_cast<int>(lv.transversal.size());
        lv.transversal.push_back(perm_compose(s, lv.transversal[lv.tr_slot[p]]));
        lv.orbit.push_back(q);
      }
    }
  }
}

bool StabilizerChain::sifts_to_identity(std::size_t level, Perm g) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    int q = g[lv.base_point];
    if (q == lv.base_point) continue;
    if (lv.tr_slot[q] < 0) return false;
    g = perm_compose(perm_inverse(lv.transversal[lv.tr_slot[q]]), g);
  }
  return perm_is_identity(g);
}

void StabilizerChain::insert(std::size_t level, const Perm& g) {
  if (perm_is_identity(g)) return;
  if (sifts_to_identity(level, g)) return;
  if (level == levels_.size()) {
    // New level: greedy base choice, the point on the longest cycle of g.
    Level lv;
    std::vector<bool> seen(n_, false);
    int best_len = 0;
    for (int p = 0; p < n_; ++p) {
      if (seen[p] || g[p] == p) continue;
      int len = 0, q = p;
      while (!seen[q]) {
        seen[q] = true;
        q = g[q];
        ++len;
      }
      if (len > best_len) {
        best_len = len;
        lv.base_point = p;
      }
    }
    levels_.push_back(std::move(lv));
  }
  Level& lv = levels_[level];
  lv.gens.push_back(g);
  rebuild_orbit(lv);
  // Process all Schreier generators of this level; residues go one level down.
  for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    int p = lv.orbit[oi];
    const Perm& up = lv.transversal[lv.tr_slot[p]];
    for (const Perm& s : lv.gens) {
      int q = s[p];
      Perm schreier = perm_compose(perm_inverse(lv.transversal[lv.tr_slot[q]]), perm_compose(s, up));
      insert(level + 1, schreier);
    }
  }
}

Int StabilizerChain::order() const {
  Int o = 1;
  for (const Level& lv : levels_) o *= static_cast<unsigned long>(lv.transversal.size());
  return o;
}

bool StabilizerChain::contains(Perm g) const {
  if (static_cast<int>(g.size()) != n_) return false;
  return sifts_to_identity(0, g);
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  for (const Level& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<std::size_t> StabilizerChain::transversal_sizes() const {
  std::vector<std::size_t> s;
  for (const Level& lv : levels_) s.push_back(lv.transversal.size());
  return s;
}

}  // namespace picgal
