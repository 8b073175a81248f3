#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "prstar/group.hpp"

namespace prstar {

/// Small generating set for the subgroup generated by elems, found by
/// incremental sifting; output generating-set order is deterministic.
inline std::vector<Permutation> reduce_generators(int degree,
                                                  const std::vector<Permutation>& elems) {
  std::vector<Permutation> gens;
  StabilizerChain chain(degree, {});
  for (const Permutation& x : elems) {
    if (!x.is_identity() && !chain.contains(x)) {
      gens.push_back(x);
      chain = StabilizerChain(degree, gens);
    }
  }
  return gens;
}

inline SubgroupRef subgroup_generated(const GroupHandle& parent,
                                      const std::vector<Permutation>& elems,
                                      const Caps& caps = default_caps(),
                                      std::string label = "") {
  return subgroup_of(parent, reduce_generators(parent->degree(), elems), caps,
                     std::move(label));
}

/// C_X(y) = {x in X : xy = yx}.
inline SubgroupRef centralizer(const SubgroupRef& X, const Permutation& y,
                               const Caps& caps = default_caps()) {
  if (y.degree() != X.degree())
    throw DegreeMismatch("centralizer: element degree mismatch");
  std::vector<Permutation> found;
  for (const Permutation& x : X.elements())
    if (commutes(x, y)) found.push_back(x);
  return subgroup_generated(X.parent() ? X.parent() : X.group(), found, caps);
}

/// C_X(H) = {x in X : x commutes with every element of H}; it is enough to
/// test against generators of H.
inline SubgroupRef centralizer_subgroup(const SubgroupRef& X, const SubgroupRef& H,
                                        const Caps& caps = default_caps()) {
  std::vector<Permutation> found;
  for (const Permutation& x : X.elements()) {
    bool ok = true;
    for (const Permutation& h : H.generators())
      if (!commutes(x, h)) {
        ok = false;
        break;
      }
    if (ok) found.push_back(x);
  }
  return subgroup_generated(X.parent() ? X.parent() : X.group(), found, caps);
}

inline SubgroupRef center(const GroupHandle& G, const Caps& caps = default_caps()) {
  return centralizer_subgroup(full_subgroup(G), full_subgroup(G), caps);
}

struct ConjClass {
  Permutation rep;  // lexicographically least member
  std::vector<Permutation> elems;
};

/// Conjugacy classes, sorted by (size, representative); sizes sum to |G|.
inline std::vector<ConjClass> conjugacy_classes(const GroupHandle& G,
                                                const Caps& caps = default_caps()) {
  (void)caps;
  std::vector<ConjClass> classes;
  std::set<Permutation> unassigned(G->elements().begin(), G->elements().end());
  while (!unassigned.empty()) {
    Permutation x = *unassigned.begin();
    std::set<Permutation> orbit{x};
    std::vector<Permutation> frontier{x};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const Permutation& f : frontier)
        for (const Permutation& g : G->generators()) {
          Permutation h = f.conjugated_by(g);
          if (orbit.insert(h).second) next.push_back(h);
        }
      frontier = std::move(next);
    }
    ConjClass c{*orbit.begin(), {orbit.begin(), orbit.end()}};
    for (const Permutation& e : c.elems) unassigned.erase(e);
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.rep < b.rep;
  });
  return classes;
}

/// Conjugation orbit of a single element under a group given by generators.
inline std::vector<Permutation> element_class(const GroupHandle& G, const Permutation& y) {
  std::set<Permutation> orbit{y};
  std::vector<Permutation> frontier{y};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& f : frontier)
      for (const Permutation& g : G->generators()) {
        Permutation h = f.conjugated_by(g);
        if (orbit.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {orbit.begin(), orbit.end()};
}

/// Smallest normal subgroup of ambient containing S: close the generating set
/// under conjugation by the ambient generators until the chain stabilizes.
/// Needs only membership, not enumeration, so it works above the element cap.
inline SubgroupRef normal_closure_in(const GroupHandle& ambient,
                                     const std::vector<Permutation>& S,
                                     const Caps& caps = default_caps(),
                                     std::string label = "") {
  std::vector<Permutation> gens = reduce_generators(ambient->degree(), S);
  StabilizerChain chain(ambient->degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Permutation> snapshot = gens;
    for (const Permutation& g : ambient->generators())
      for (const Permutation& s : snapshot) {
        Permutation c = s.conjugated_by(g);
        if (!chain.contains(c)) {
          gens.push_back(c);
          chain = StabilizerChain(ambient->degree(), gens);
          changed = true;
        }
      }
  }
  return subgroup_of(ambient, std::move(gens), caps, std::move(label));
}

inline SubgroupRef normal_closure(const GroupHandle& G, const std::vector<Permutation>& S,
                                  const Caps& caps = default_caps()) {
  for (const Permutation& s : S)
    if (!G->contains(s)) throw NotAMember("normal_closure: element outside the group");
  return normal_closure_in(G, S, caps);
}

/// [H,K]: the normal closure in <H,K> of the generator commutators.  The
/// closure step is what guarantees the full subgroup generated by all
/// commutators, not just the generator ones.
inline SubgroupRef commutator_subgroup(const SubgroupRef& H, const SubgroupRef& K,
                                       const Caps& caps = default_caps(),
                                       std::string label = "") {
  if (H.degree() != K.degree())
    throw DegreeMismatch("commutator_subgroup: degree mismatch");
  std::vector<Permutation> joint = H.generators();
  joint.insert(joint.end(), K.generators().begin(), K.generators().end());
  GroupHandle ambient =
      Group::create(H.degree(), reduce_generators(H.degree(), joint), "<H,K>", caps);
  std::vector<Permutation> comms;
  for (const Permutation& h : H.generators())
    for (const Permutation& k : K.generators()) comms.push_back(commutator(h, k));
  SubgroupRef c = normal_closure_in(ambient, comms, caps, std::move(label));
  const GroupHandle& par = H.parent() ? H.parent() : H.group();
  return SubgroupRef(par, c.group());
}

/// lcm of the element orders.
inline std::uint64_t exponent_of(const SubgroupRef& X) {
  std::uint64_t e = 1;
  for (const Permutation& x : X.elements()) e = std::lcm(e, x.order());
  return e;
}

inline std::uint64_t exponent_of(const GroupHandle& G) {
  return exponent_of(full_subgroup(G));
}

/// N_X(H) = {x in X : H^x = H}.
inline SubgroupRef normalizer(const SubgroupRef& X, const SubgroupRef& H,
                              const Caps& caps = default_caps()) {
  std::vector<Permutation> found;
  for (const Permutation& x : X.elements()) {
    bool ok = true;
    for (const Permutation& h : H.generators())
      if (!H.contains(h.conjugated_by(x))) {
        ok = false;
        break;
      }
    if (ok) found.push_back(x);
  }
  return subgroup_generated(X.parent() ? X.parent() : X.group(), found, caps);
}

inline SubgroupRef conjugate_subgroup(const SubgroupRef& H, const Permutation& g,
                                      const Caps& caps = default_caps()) {
  std::vector<Permutation> gens;
  for (const Permutation& h : H.generators()) gens.push_back(h.conjugated_by(g));
  const GroupHandle& par = H.parent() ? H.parent() : H.group();
  return subgroup_of(par, std::move(gens), caps);
}

inline SubgroupRef intersection(const SubgroupRef& A, const SubgroupRef& B,
                                const Caps& caps = default_caps()) {
  const SubgroupRef& small = A.order() <= B.order() ? A : B;
  const SubgroupRef& big = A.order() <= B.order() ? B : A;
  std::vector<Permutation> found;
  for (const Permutation& x : small.elements())
    if (big.contains(x)) found.push_back(x);
  const GroupHandle& par = A.parent() ? A.parent() : A.group();
  return subgroup_generated(par, found, caps);
}

inline bool is_normal_in(const SubgroupRef& N, const GroupHandle& G) {
  for (const Permutation& g : G->generators())
    for (const Permutation& x : N.generators())
      if (!N.contains(x.conjugated_by(g))) return false;
  return true;
}

/// Derived chain G >= [G,G] >= ... down to stabilization.
inline std::vector<SubgroupRef> derived_chain(const GroupHandle& G,
                                              const Caps& caps = default_caps()) {
  std::vector<SubgroupRef> chain{full_subgroup(G)};
  for (;;) {
    SubgroupRef next = commutator_subgroup(chain.back(), chain.back(), caps);
    next = SubgroupRef(G, next.group());
    if (next.order() == chain.back().order()) return chain;
    chain.push_back(next);
  }
}

inline bool is_soluble_group(const GroupHandle& G, const Caps& caps = default_caps()) {
  return derived_chain(G, caps).back().order() == 1;
}

}  // namespace prstar
