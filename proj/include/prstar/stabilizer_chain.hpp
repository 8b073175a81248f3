#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "prstar/permutation.hpp"
#include "prstar/rational.hpp"

namespace prstar {

/// Deterministic Schreier-Sims.  Exact order and membership for permutation
/// groups given by generators; build cost is polynomial in the degree,
/// independent of the group order.
///
/// Level l holds the orbit/transversal of base[l] under the strong
/// generators fixing base[0..l-1]; the Schreier condition is established
/// bottom-up, restarting at the level where a sifted Schreier generator
/// stalls.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Permutation>& gens)
      : degree_(degree) {
    for (const Permutation& g : gens) {
      if (g.degree() != degree)
        throw DegreeMismatch("stabilizer chain: generator degree mismatch");
      if (!g.is_identity()) {
        strong_.push_back(g);
        ensure_base_covers(g);
      }
    }
    rebuild_orbits();
    std::size_t i = base_.size();
    while (i >= 1) {
      auto [ok, stall_level, residue] = verify_level(i - 1);
      if (ok) {
        --i;
        continue;
      }
      strong_.push_back(residue);
      ensure_base_covers(residue);
      rebuild_orbits();
      i = std::min(stall_level + 1, base_.size());
    }
  }

  int degree() const { return degree_; }

  BigInt order() const {
    BigInt o = 1;
    for (const Level& lv : levels_) o *= static_cast<unsigned>(lv.orbit.size());
    return o;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    Permutation r = g;
    for (const Level& lv : levels_) {
      if (r.is_identity()) return true;
      int beta = r[lv.base_point];
      if (!lv.transversal[beta]) return false;
      r = r * lv.transversal[beta]->inverse();
    }
    return r.is_identity();
  }

  std::size_t depth() const { return levels_.size(); }
  int base_point(std::size_t level) const { return levels_[level].base_point; }
  std::size_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }

 private:
  struct Level {
    int base_point;
    std::vector<Permutation> gens;  // strong generators fixing earlier base points
    std::vector<int> orbit;         // BFS discovery order, orbit[0] == base_point
    std::vector<std::optional<Permutation>> transversal;  // point -> u, base^u = point
  };

  void ensure_base_covers(const Permutation& g) {
    for (int b : base_)
      if (g[b] != b) return;
    int p = 0;
    while (g[p] == p) ++p;
    base_.push_back(p);
  }

  void rebuild_orbits() {
    levels_.clear();
    levels_.reserve(base_.size());
    for (std::size_t l = 0; l < base_.size(); ++l) {
      Level lv;
      lv.base_point = base_[l];
      for (const Permutation& s : strong_) {
        bool fixes_prefix = true;
        for (std::size_t m = 0; m < l; ++m)
          if (s[base_[m]] != base_[m]) {
            fixes_prefix = false;
            break;
          }
        if (fixes_prefix) lv.gens.push_back(s);
      }
      lv.transversal.assign(degree_, std::nullopt);
      lv.orbit.push_back(lv.base_point);
      lv.transversal[lv.base_point] = Permutation(degree_);
      for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        int pt = lv.orbit[head];
        for (const Permutation& s : lv.gens) {
          int img = s[pt];
          if (!lv.transversal[img]) {
            lv.transversal[img] = *lv.transversal[pt] * s;
            lv.orbit.push_back(img);
          }
        }
      }
      levels_.push_back(std::move(lv));
    }
  }

  // Check every Schreier generator of level i against the chain below.
  // Returns {true,..} when all sift to identity; otherwise the stall level
  // and the residue to be adopted as a new strong generator.
  std::tuple<bool, std::size_t, Permutation> verify_level(std::size_t i) const {
    const Level& lv = levels_[i];
    for (int beta : lv.orbit) {
      for (const Permutation& s : lv.gens) {
        const Permutation& u = *lv.transversal[beta];
        Permutation r = u * s * lv.transversal[s[beta]]->inverse();
        std::size_t l = i + 1;
        for (; l < levels_.size(); ++l) {
          if (r.is_identity()) break;
          int b = r[levels_[l].base_point];
          if (!levels_[l].transversal[b]) return {false, l, r};
          r = r * levels_[l].transversal[b]->inverse();
        }
        if (!r.is_identity()) return {false, levels_.size(), r};
      }
    }
    return {true, 0, Permutation(degree_)};
  }

  int degree_;
  std::vector<int> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

}  // namespace prstar
