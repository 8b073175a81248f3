#pragma once

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "prstar/group_ops.hpp"

namespace prstar {

/// Sorted set of distinct primes (pi(G), pi(F(G)), ...).
struct PrimeSet {
  std::vector<std::uint64_t> primes;

  PrimeSet without(std::uint64_t p) const {
    PrimeSet out;
    for (std::uint64_t q : primes)
      if (q != p) out.primes.push_back(q);
    return out;
  }
  bool empty() const { return primes.empty(); }
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(primes[i]);
    }
    return s + "}";
  }
};

/// Prime factorization of a group order: trial division by small primes,
/// Miller-Rabin for any large remainder (orders in scope never leave a large
/// composite tail).
inline std::map<std::uint64_t, unsigned> factor_order(BigInt n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t d = 2; d <= 1000003 && BigInt(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) {
    if (!boost::multiprecision::miller_rabin_test(n, 32))
      throw Error("factor_order: composite tail " + n.str());
    if (n > BigInt(UINT64_MAX)) throw Error("factor_order: prime tail too large");
    ++out[n.convert_to<std::uint64_t>()];
  }
  return out;
}

inline PrimeSet pi(const BigInt& order) {
  PrimeSet ps;
  for (const auto& [p, e] : factor_order(order)) ps.primes.push_back(p);
  return ps;
}

inline PrimeSet pi(const GroupHandle& G) { return pi(G->order()); }
inline PrimeSet pi(const SubgroupRef& X) { return pi(X.order()); }

/// Exact p-part of n.
inline BigInt p_part(const BigInt& n, std::uint64_t p) {
  BigInt part = 1, m = n;
  while (m % p == 0) {
    part *= p;
    m /= p;
  }
  return part;
}

inline BigInt pi_part(const BigInt& n, const PrimeSet& ps) {
  BigInt part = 1;
  for (std::uint64_t p : ps.primes) part *= p_part(n, p);
  return part;
}

/// A Sylow p-subgroup of X, by normalizer ascent: start from a p-element of
/// maximal order, then repeatedly extend by p-elements of the normalizer
/// until the full p-part is reached.  Returns the trivial subgroup when
/// p does not divide |X|.
inline SubgroupRef sylow(const SubgroupRef& X, std::uint64_t p,
                         const Caps& caps = default_caps()) {
  BigInt target = p_part(X.order(), p);
  const GroupHandle& par = X.parent() ? X.parent() : X.group();
  if (target == 1)
    return subgroup_of(par, {}, caps, "syl" + std::to_string(p));
  if (target == X.order())  // X itself is a p-group
    return subgroup_of(par, X.generators(), caps,
                       "syl" + std::to_string(p) + "(" + X.label() + ")");
  const std::vector<Permutation>& elems = X.elements();

  auto is_p_element = [&](const Permutation& x) {
    std::uint64_t o = x.order();
    while (o % p == 0) o /= p;
    return o == 1;
  };

  const Permutation* seed = nullptr;
  std::uint64_t best_order = 1;
  for (const Permutation& x : elems) {
    if (x.is_identity() || !is_p_element(x)) continue;
    std::uint64_t o = x.order();
    if (o > best_order) {
      best_order = o;
      seed = &x;
    }
  }
  if (!seed) throw Error("sylow: no p-element found");  // unreachable when p | |X|

  SubgroupRef P = subgroup_of(par, {*seed}, caps);
  while (P.order() < target) {
    bool extended = false;
    for (const Permutation& y : elems) {
      if (P.contains(y) || !is_p_element(y)) continue;
      bool in_normalizer = true;
      for (const Permutation& h : P.generators())
        if (!P.contains(h.conjugated_by(y))) {
          in_normalizer = false;
          break;
        }
      if (!in_normalizer) continue;
      std::vector<Permutation> gens = P.generators();
      gens.push_back(y);
      SubgroupRef cand = subgroup_of(par, gens, caps);
      if (cand.order() > P.order() && target % cand.order() == 0) {
        P = cand;
        extended = true;
        break;
      }
    }
    if (!extended) throw Error("sylow: ascent stalled");  // unreachable
  }
  return subgroup_of(par, P.generators(), caps,
                     "syl" + std::to_string(p) + "(" + X.label() + ")");
}

inline SubgroupRef sylow(const GroupHandle& G, std::uint64_t p,
                         const Caps& caps = default_caps()) {
  return sylow(full_subgroup(G), p, caps);
}

namespace detail {

/// X-conjugates of H, deduplicated by sorted element list.
inline std::vector<SubgroupRef> conjugate_orbit(const SubgroupRef& X, const SubgroupRef& H,
                                                const Caps& caps, std::size_t cap) {
  auto key_of = [](const SubgroupRef& s) {
    std::vector<Permutation> k = s.elements();
    std::sort(k.begin(), k.end());
    return k;
  };
  std::map<std::vector<Permutation>, SubgroupRef> seen;
  std::vector<SubgroupRef> frontier{H};
  seen.emplace(key_of(H), H);
  while (!frontier.empty()) {
    std::vector<SubgroupRef> next;
    for (const SubgroupRef& S : frontier)
      for (const Permutation& g : X.generators()) {
        SubgroupRef T = conjugate_subgroup(S, g, caps);
        auto key = key_of(T);
        if (!seen.count(key)) {
          if (seen.size() >= cap)
            throw EnumerationCapExceeded("conjugate orbit exceeds the sylow cap");
          seen.emplace(std::move(key), T);
          next.push_back(T);
        }
      }
    frontier = std::move(next);
  }
  std::vector<SubgroupRef> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

}  // namespace detail

/// All Sylow p-subgroups of X (the X-conjugates of one of them).
inline std::vector<SubgroupRef> sylow_all(const SubgroupRef& X, std::uint64_t p,
                                          const Caps& caps = default_caps()) {
  SubgroupRef P = sylow(X, p, caps);
  if (P.is_trivial()) return {P};
  return detail::conjugate_orbit(X, P, caps, caps.sylow_enum_cap);
}

inline std::vector<SubgroupRef> sylow_all(const GroupHandle& G, std::uint64_t p,
                                          const Caps& caps = default_caps()) {
  return sylow_all(full_subgroup(G), p, caps);
}

/// Hall pi-subgroup of a soluble X: backtracking over pi-elements of the
/// normalizer.  Complete because any Hall subgroup has a subnormal chain with
/// prime quotients, each step of which the search can take.
inline SubgroupRef hall(const SubgroupRef& X, const PrimeSet& ps,
                        const Caps& caps = default_caps()) {
  if (!is_soluble_group(X.group(), caps))
    throw NotSoluble("hall: " + X.label() + " is not soluble");
  BigInt target = pi_part(X.order(), ps);
  const GroupHandle& par = X.parent() ? X.parent() : X.group();
  if (target == 1) return subgroup_of(par, {}, caps, "hall" + ps.str());
  if (target == X.order())
    return subgroup_of(par, X.generators(), caps, "hall" + ps.str());
  if (ps.primes.size() == 1) {
    SubgroupRef P = sylow(X, ps.primes[0], caps);
    return subgroup_of(par, P.generators(), caps, "hall" + ps.str() + "(" + X.label() + ")");
  }

  auto is_pi_number = [&](BigInt n) {
    for (std::uint64_t p : ps.primes)
      while (n % p == 0) n /= p;
    return n == 1;
  };
  const std::vector<Permutation>& elems = X.elements();

  std::set<std::uint64_t> visited;
  std::vector<Permutation> empty;

  // DFS over pi-subgroups H, extending by pi-elements of N_X(H).
  auto dfs = [&](auto&& self, const SubgroupRef& H) -> SubgroupRef {
    if (H.order() == target) return H;
    if (!visited.insert(H.group()->element_set_hash()).second) return SubgroupRef();
    if (visited.size() > caps.search_budget)
      throw EnumerationCapExceeded("hall: search budget exhausted");
    std::set<Permutation> Hset(H.elements().begin(), H.elements().end());
    for (const Permutation& y : elems) {
      if (Hset.count(y) || y.is_identity()) continue;
      if (!is_pi_number(BigInt(y.order()))) continue;
      bool in_normalizer = true;
      for (const Permutation& h : H.generators())
        if (!Hset.count(h.conjugated_by(y))) {
          in_normalizer = false;
          break;
        }
      if (!in_normalizer) continue;
      std::vector<Permutation> gens = H.generators();
      gens.push_back(y);
      SubgroupRef cand = subgroup_of(par, gens, caps);
      if (cand.order() <= H.order() || !is_pi_number(cand.order())) continue;
      SubgroupRef found = self(self, cand);
      if (found.valid()) return found;
    }
    return SubgroupRef();
  };

  SubgroupRef start = subgroup_of(par, {}, caps);
  SubgroupRef found = dfs(dfs, start);
  if (!found.valid())
    throw HallSearchFailed("hall: no subgroup of order " + target.str() + " found in " +
                           X.label());
  return subgroup_of(par, found.generators(), caps, "hall" + ps.str() + "(" + X.label() + ")");
}

inline SubgroupRef hall(const GroupHandle& G, const PrimeSet& ps,
                        const Caps& caps = default_caps()) {
  return hall(full_subgroup(G), ps, caps);
}

/// All X-conjugates of hall(X, ps); Hall subgroups of soluble groups are
/// conjugate, so this is the complete set.
inline std::vector<SubgroupRef> hall_all(const SubgroupRef& X, const PrimeSet& ps,
                                         const Caps& caps = default_caps()) {
  SubgroupRef H = hall(X, ps, caps);
  if (H.is_trivial()) return {H};
  return detail::conjugate_orbit(X, H, caps, caps.sylow_enum_cap);
}

inline std::vector<SubgroupRef> hall_all(const GroupHandle& G, const PrimeSet& ps,
                                         const Caps& caps = default_caps()) {
  return hall_all(full_subgroup(G), ps, caps);
}

}  // namespace prstar
