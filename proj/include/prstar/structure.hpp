#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "prstar/quotient.hpp"
#include "prstar/sylow.hpp"

namespace prstar {

struct SeriesRecord {
  enum class Kind { lower_central, derived, upper_fitting, generalized_fitting };
  Kind kind;
  std::vector<SubgroupRef> terms;
  bool stabilized = false;
};

// ---------------------------------------------------------------------------
// lower central / derived series
// ---------------------------------------------------------------------------

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], until stabilization or k_max terms.
inline SeriesRecord lower_central_series(const GroupHandle& G, int k_max = 64,
                                         const Caps& caps = default_caps()) {
  SeriesRecord rec{SeriesRecord::Kind::lower_central, {full_subgroup(G)}, false};
  while (static_cast<int>(rec.terms.size()) < k_max) {
    SubgroupRef next =
        reparent(G, commutator_subgroup(rec.terms.back(), full_subgroup(G), caps), false);
    if (next.order() == rec.terms.back().order()) {
      rec.stabilized = true;
      break;
    }
    rec.terms.push_back(next);
  }
  return rec;
}

/// k-th term of the lower central series (k >= 1).
inline SubgroupRef gamma_k(const GroupHandle& G, int k, const Caps& caps = default_caps()) {
  if (k < 1) throw Error("gamma_k: k must be >= 1");
  SeriesRecord rec = lower_central_series(G, k, caps);
  return k <= static_cast<int>(rec.terms.size()) ? rec.terms[k - 1] : rec.terms.back();
}

inline SubgroupRef gamma_infinity(const GroupHandle& G, const Caps& caps = default_caps()) {
  SeriesRecord rec = lower_central_series(G, 64, caps);
  if (!rec.stabilized) throw Error("gamma_infinity: series did not stabilize");
  return rec.terms.back();
}

inline SeriesRecord derived_series(const GroupHandle& G, const Caps& caps = default_caps()) {
  std::vector<SubgroupRef> chain = derived_chain(G, caps);
  return SeriesRecord{SeriesRecord::Kind::derived, std::move(chain), true};
}

inline bool is_soluble(const GroupHandle& G, const Caps& caps = default_caps()) {
  return is_soluble_group(G, caps);
}

struct NilpotencyInfo {
  bool nilpotent = false;
  int cls = 0;  // nilpotency class when nilpotent
};

/// Nilpotent iff gamma_inf(G) = 1; class = series length - 1.
inline NilpotencyInfo nilpotency(const GroupHandle& G, const Caps& caps = default_caps()) {
  SeriesRecord rec = lower_central_series(G, 64, caps);
  if (!rec.stabilized || rec.terms.back().order() != 1) return {false, 0};
  return {true, static_cast<int>(rec.terms.size()) - 1};
}

inline bool is_nilpotent(const GroupHandle& G, const Caps& caps = default_caps()) {
  return nilpotency(G, caps).nilpotent;
}

// ---------------------------------------------------------------------------
// p-cores, Fitting subgroup, upper Fitting series, radical
// ---------------------------------------------------------------------------

/// O_p(G): intersection of all G-conjugates of one Sylow p-subgroup.
inline SubgroupRef p_core(const GroupHandle& G, std::uint64_t p,
                          const Caps& caps = default_caps()) {
  std::vector<SubgroupRef> syl = sylow_all(G, p, caps);
  std::set<Permutation> core(syl[0].elements().begin(), syl[0].elements().end());
  for (std::size_t i = 1; i < syl.size() && core.size() > 1; ++i) {
    std::set<Permutation> next;
    for (const Permutation& x : syl[i].elements())
      if (core.count(x)) next.insert(x);
    core = std::move(next);
  }
  return subgroup_generated(G, {core.begin(), core.end()}, caps,
                            "O" + std::to_string(p) + "(" + G->label() + ")");
}

/// F(G) = product of the p-cores over the primes dividing |G|.
inline SubgroupRef fitting(const GroupHandle& G, const Caps& caps = default_caps()) {
  std::vector<Permutation> gens;
  for (std::uint64_t p : pi(G).primes) {
    SubgroupRef op = p_core(G, p, caps);
    gens.insert(gens.end(), op.generators().begin(), op.generators().end());
  }
  return subgroup_generated(G, gens, caps, "F(" + G->label() + ")");
}

/// F_1 = F(G), F_{i+1} = preimage of F(G/F_i) under the coset-action
/// quotient; ascends until stabilization (at the soluble radical).
inline SeriesRecord upper_fitting_series(const GroupHandle& G,
                                         const Caps& caps = default_caps()) {
  SeriesRecord rec{SeriesRecord::Kind::upper_fitting, {fitting(G, caps)}, false};
  for (;;) {
    const SubgroupRef& cur = rec.terms.back();
    if (cur.order() == G->order()) {
      rec.stabilized = true;
      break;
    }
    QuotientMap q = QuotientMap::build(G, cur, caps);
    SubgroupRef fbar = fitting(q.image(), caps);
    SubgroupRef next = q.preimage(fbar, caps);
    if (next.order() == cur.order()) {
      rec.stabilized = true;
      break;
    }
    rec.terms.push_back(next);
  }
  return rec;
}

inline SubgroupRef fitting_k(const GroupHandle& G, int k, const Caps& caps = default_caps()) {
  if (k < 1) throw Error("fitting_k: k must be >= 1");
  SeriesRecord rec = upper_fitting_series(G, caps);
  return k <= static_cast<int>(rec.terms.size()) ? rec.terms[k - 1] : rec.terms.back();
}

/// Largest normal soluble subgroup: the stable term of the upper Fitting
/// series.
inline SubgroupRef soluble_radical(const GroupHandle& G, const Caps& caps = default_caps()) {
  return upper_fitting_series(G, caps).terms.back();
}

// ---------------------------------------------------------------------------
// normal subgroups
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Permutation> sorted_elements(const SubgroupRef& s) {
  std::vector<Permutation> v = s.elements();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

/// Every normal subgroup: join-closure of the subgroups generated by single
/// conjugacy classes (any normal subgroup is the join of the class closures
/// it contains).  Sorted by (order, element list).
inline std::vector<SubgroupRef> normal_subgroups(const GroupHandle& G,
                                                 const Caps& caps = default_caps()) {
  std::map<std::vector<Permutation>, SubgroupRef> pool;
  SubgroupRef triv = subgroup_of(G, {}, caps, "1");
  pool.emplace(detail::sorted_elements(triv), triv);
  for (const ConjClass& c : conjugacy_classes(G, caps)) {
    SubgroupRef s = subgroup_generated(G, c.elems, caps);
    pool.emplace(detail::sorted_elements(s), s);
  }
  std::vector<SubgroupRef> worklist;
  for (auto& [k, v] : pool) worklist.push_back(v);
  while (!worklist.empty()) {
    std::vector<SubgroupRef> added;
    std::vector<SubgroupRef> current;
    for (auto& [k, v] : pool) current.push_back(v);
    for (const SubgroupRef& a : worklist)
      for (const SubgroupRef& b : current) {
        if (a.order() % b.order() == 0 && a.contains_subgroup(b)) continue;
        if (b.order() % a.order() == 0 && b.contains_subgroup(a)) continue;
        std::vector<Permutation> gens = a.generators();
        gens.insert(gens.end(), b.generators().begin(), b.generators().end());
        SubgroupRef j = subgroup_of(G, reduce_generators(G->degree(), gens), caps);
        auto key = detail::sorted_elements(j);
        if (!pool.count(key)) {
          pool.emplace(std::move(key), j);
          added.push_back(j);
        }
      }
    worklist = std::move(added);
  }
  std::vector<SubgroupRef> out;
  for (auto& [k, v] : pool) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const SubgroupRef& x, const SubgroupRef& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return detail::sorted_elements(x) < detail::sorted_elements(y);
  });
  return out;
}

// ---------------------------------------------------------------------------
// components, layer, generalized Fitting subgroups
// ---------------------------------------------------------------------------

/// Perfect, and simple modulo the centre.  Simplicity is tested by counting
/// normal subgroups over the centre: exactly two.
inline bool is_quasisimple(const GroupHandle& H, const Caps& caps = default_caps()) {
  if (H->order() == 1) return false;
  SubgroupRef derived = commutator_subgroup(full_subgroup(H), full_subgroup(H), caps);
  if (derived.order() != H->order()) return false;
  SubgroupRef Z = center(H, caps);
  int over_centre = 0;
  for (const SubgroupRef& N : normal_subgroups(H, caps))
    if (N.contains_subgroup(Z)) ++over_centre;
  return over_centre == 2;
}

inline bool is_quasisimple(const SubgroupRef& H, const Caps& caps = default_caps()) {
  return is_quasisimple(H.group(), caps);
}

/// Subnormal quasisimple subgroups, found by recursive descent through
/// proper normal subgroups; memoized by element set.
inline std::vector<SubgroupRef> components(const GroupHandle& G,
                                           const Caps& caps = default_caps()) {
  std::map<std::vector<Permutation>, bool> seen;  // element set -> quasisimple
  std::vector<SubgroupRef> comps;

  auto rec = [&](auto&& self, const GroupHandle& N) -> void {
    for (const SubgroupRef& M : normal_subgroups(N, caps)) {
      if (M.order() == 1) continue;
      auto key = detail::sorted_elements(M);
      auto [it, fresh] = seen.emplace(std::move(key), false);
      if (!fresh) continue;
      if (is_quasisimple(M.group(), caps)) {
        it->second = true;
        comps.push_back(reparent(G, M, false));
      }
      if (M.order() < N->order()) self(self, M.group());
    }
  };
  rec(rec, G);
  std::sort(comps.begin(), comps.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return detail::sorted_elements(a) < detail::sorted_elements(b);
  });
  return comps;
}

/// E(G): subgroup generated by all components.
inline SubgroupRef layer(const GroupHandle& G, const Caps& caps = default_caps()) {
  std::vector<Permutation> gens;
  for (const SubgroupRef& c : components(G, caps))
    gens.insert(gens.end(), c.generators().begin(), c.generators().end());
  return subgroup_generated(G, gens, caps, "E(" + G->label() + ")");
}

/// F*(G) = <F(G), E(G)>.
inline SubgroupRef generalized_fitting(const GroupHandle& G,
                                       const Caps& caps = default_caps()) {
  std::vector<Permutation> gens = fitting(G, caps).generators();
  SubgroupRef E = layer(G, caps);
  gens.insert(gens.end(), E.generators().begin(), E.generators().end());
  return subgroup_generated(G, gens, caps, "F*(" + G->label() + ")");
}

/// F2*(G): preimage of F*(G/F*(G)) under the coset-action quotient.
inline SubgroupRef fstar_2(const GroupHandle& G, const Caps& caps = default_caps()) {
  SubgroupRef fs = generalized_fitting(G, caps);
  if (fs.order() == G->order()) return fs;
  QuotientMap q = QuotientMap::build(G, fs, caps);
  SubgroupRef fsbar = generalized_fitting(q.image(), caps);
  SubgroupRef pre = q.preimage(fsbar, caps);
  return subgroup_of(G, pre.generators(), caps, "F2*(" + G->label() + ")");
}

/// Subnormality by iterated normal closure: N_0 = G, N_{i+1} = <H^{N_i}>;
/// H is subnormal iff the chain stabilizes at H itself.
inline bool is_subnormal(const SubgroupRef& H, const GroupHandle& G,
                         const Caps& caps = default_caps()) {
  GroupHandle level = G;
  for (;;) {
    SubgroupRef clo = normal_closure_in(level, H.generators(), caps);
    if (clo.order() == H.order()) return true;
    if (clo.order() == level->order()) return false;
    level = clo.group();
  }
}

// ---------------------------------------------------------------------------
// aggregate report
// ---------------------------------------------------------------------------

struct StructureReport {
  std::string label;
  BigInt order;
  PrimeSet primes;
  SubgroupRef gamma_inf;
  SubgroupRef fitting1;
  SubgroupRef fitting2;
  SubgroupRef fstar;
  SubgroupRef fstar2;
  SubgroupRef radical;
  bool nilpotent = false;
  bool soluble = false;
  std::uint64_t exp_mod_fitting = 1;
};

inline StructureReport structure_report(const GroupHandle& G,
                                        const Caps& caps = default_caps()) {
  StructureReport r;
  r.label = G->label();
  r.order = G->order();
  r.primes = pi(G);
  r.gamma_inf = gamma_infinity(G, caps);
  r.fitting1 = fitting(G, caps);
  r.fitting2 = fitting_k(G, 2, caps);
  r.fstar = generalized_fitting(G, caps);
  r.fstar2 = fstar_2(G, caps);
  r.radical = soluble_radical(G, caps);
  r.nilpotent = nilpotency(G, caps).nilpotent;
  r.soluble = is_soluble(G, caps);
  QuotientMap q = QuotientMap::build(G, r.fitting1, caps);
  r.exp_mod_fitting = exponent_of(q.image());
  return r;
}

}  // namespace prstar
