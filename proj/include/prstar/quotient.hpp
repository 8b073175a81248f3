#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prstar/group_ops.hpp"

namespace prstar {

/// G -> G/N realized as the (regular, faithful) action of G on the cosets of
/// a normal subgroup N.  Supplies projection, subgroup projection and exact
/// preimages; every preimage is a SubgroupRef of the original G.
class QuotientMap {
 public:
  static QuotientMap build(const GroupHandle& G, const SubgroupRef& N,
                           const Caps& caps = default_caps()) {
    if (!is_normal_in(N, G)) throw NotNormal("quotient: kernel is not normal in " + G->label());
    BigInt index = G->order() / N.order();
    if (index > BigInt(static_cast<std::uint64_t>(caps.coset_degree_cap)))
      throw EnumerationCapExceeded("quotient: index " + index.str() +
                                   " exceeds the coset degree cap");
    QuotientMap qm;
    qm.source_ = G;
    qm.kernel_ = N;
    qm.orbits_ = point_orbits(G->degree(), N.generators());

    // BFS over cosets N*rep*gen; identification by orbit signature bucket,
    // then a membership sift against the kernel chain.
    std::size_t m = index.convert_to<std::size_t>();
    qm.reps_.reserve(m);
    qm.push_coset(G->identity_perm());
    for (std::size_t head = 0; head < qm.reps_.size(); ++head) {
      Permutation rep = qm.reps_[head];  // copy: reps_ may grow
      for (const Permutation& g : G->generators()) {
        Permutation t = rep * g;
        if (qm.find_coset(t) < 0) qm.push_coset(std::move(t));
      }
    }
    if (qm.reps_.size() != m) throw Error("quotient: coset count mismatch");  // unreachable

    int deg = static_cast<int>(std::max<std::size_t>(m, 1));
    std::vector<Permutation> image_gens;
    for (const Permutation& g : G->generators()) image_gens.push_back(qm.induced(g, deg));
    qm.image_ = Group::create(deg, std::move(image_gens),
                              G->label() + "/" + N.label(), caps);
    if (qm.image_->order() * N.order() != G->order())
      throw Error("quotient: order mismatch");  // unreachable
    return qm;
  }

  const GroupHandle& source() const { return source_; }
  const SubgroupRef& kernel() const { return kernel_; }
  const GroupHandle& image() const { return image_; }
  const std::vector<Permutation>& transversal() const { return reps_; }

  Permutation project(const Permutation& g) const {
    if (!source_->contains(g)) throw NotAMember("quotient: element outside the source");
    return induced(g, image_->degree());
  }

  SubgroupRef project_subgroup(const SubgroupRef& H,
                               const Caps& caps = default_caps()) const {
    std::vector<Permutation> gens;
    for (const Permutation& h : H.generators()) gens.push_back(project(h));
    return subgroup_generated(image_, gens, caps,
                              H.label().empty() ? "" : H.label() + "N/N");
  }

  /// Full preimage of a subgroup of the image.  The action is regular, so the
  /// transversal element of the coset h(0) is a lift of h.
  SubgroupRef preimage(const SubgroupRef& Hbar, const Caps& caps = default_caps()) const {
    std::vector<Permutation> gens = kernel_.generators();
    for (const Permutation& h : Hbar.generators()) gens.push_back(reps_[h[0]]);
    return subgroup_of(source_, std::move(gens), caps);
  }

 private:
  QuotientMap() = default;

  static std::vector<std::vector<int>> point_orbits(int degree,
                                                    const std::vector<Permutation>& gens) {
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(degree, 0);
    for (int p = 0; p < degree; ++p) {
      if (seen[p]) continue;
      std::vector<int> orb{p};
      seen[p] = 1;
      for (std::size_t head = 0; head < orb.size(); ++head)
        for (const Permutation& g : gens) {
          int q = g[orb[head]];
          if (!seen[q]) {
            seen[q] = 1;
            orb.push_back(q);
          }
        }
      std::sort(orb.begin(), orb.end());
      orbits.push_back(std::move(orb));
    }
    return orbits;
  }

  // Kernel-orbit signature: for each N-orbit the sorted set of g-images.
  // Constant across a coset N*g, so distinct signatures mean distinct cosets.
  std::uint64_t signature(const Permutation& g) const {
    std::uint64_t h = 1469598103934665603ull;
    std::vector<int> buf;
    for (const std::vector<int>& orb : orbits_) {
      buf.clear();
      for (int p : orb) buf.push_back(g[p]);
      std::sort(buf.begin(), buf.end());
      for (int v : buf) {
        h ^= static_cast<std::uint64_t>(v) + 1;
        h *= 1099511628211ull;
      }
      h ^= 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }

  int find_coset(const Permutation& g) const {
    auto it = buckets_.find(signature(g));
    if (it == buckets_.end()) return -1;
    for (int idx : it->second)
      if (kernel_.contains(g * reps_[idx].inverse())) return idx;
    return -1;
  }

  void push_coset(Permutation rep) {
    buckets_[signature(rep)].push_back(static_cast<int>(reps_.size()));
    reps_.push_back(std::move(rep));
  }

  Permutation induced(const Permutation& g, int deg) const {
    std::vector<int> img(deg, 0);
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      int j = find_coset(reps_[i] * g);
      if (j < 0) throw Error("quotient: coset lookup failed");  // unreachable
      img[i] = j;
    }
    return Permutation(std::move(img));
  }

  GroupHandle source_;
  SubgroupRef kernel_;
  GroupHandle image_;
  std::vector<Permutation> reps_;
  std::vector<std::vector<int>> orbits_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

}  // namespace prstar
