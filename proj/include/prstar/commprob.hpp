#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "prstar/quotient.hpp"
#include "prstar/rational.hpp"
#include "prstar/sylow.hpp"

namespace prstar {

/// Number of Pr computations whose two formula routes were cross-checked in
/// this process.  Test-suite instrumentation.
inline std::atomic<std::uint64_t>& pr_crosscheck_count() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

/// Pr(X,Y) by the definition: commuting pairs / (|X||Y|).
inline Ratio pr_pair_count(const SubgroupRef& X, const SubgroupRef& Y) {
  if (X.degree() != Y.degree()) throw DegreeMismatch("pr: operand degrees differ");
  std::uint64_t count = 0;
  for (const Permutation& x : X.elements())
    for (const Permutation& y : Y.elements())
      if (commutes(x, y)) ++count;
  return Ratio(BigInt(count), X.order() * Y.order());
}

/// Pr(X,Y) via centralizer sums: (1/|Y|) sum_y |C_X(y)| / |X|.
inline Ratio pr_centralizer(const SubgroupRef& X, const SubgroupRef& Y) {
  if (X.degree() != Y.degree()) throw DegreeMismatch("pr: operand degrees differ");
  std::uint64_t total = 0;
  for (const Permutation& y : Y.elements()) {
    std::uint64_t cx = 0;
    for (const Permutation& x : X.elements())
      if (commutes(x, y)) ++cx;
    total += cx;
  }
  return Ratio(BigInt(total), X.order() * Y.order());
}

/// Exact Pr(X,Y).  Always computed by both routes; a disagreement is an
/// internal logic error and throws.
inline Ratio pr(const SubgroupRef& X, const SubgroupRef& Y) {
  Ratio a = pr_pair_count(X, Y);
  Ratio b = pr_centralizer(X, Y);
  if (a != b) throw Error("pr: formula routes disagree: " + a.str() + " vs " + b.str());
  ++pr_crosscheck_count();
  return a;
}

/// Pr(X,Y) = 1 certificate without enumeration: all generator pairs commute
/// iff [X,Y] = 1 iff Pr(X,Y) = 1.  nullopt when the certificate fails.
inline std::optional<Ratio> pr_if_commuting(const SubgroupRef& X, const SubgroupRef& Y) {
  for (const Permutation& x : X.generators())
    for (const Permutation& y : Y.generators())
      if (!commutes(x, y)) return std::nullopt;
  return Ratio(1);
}

/// Pr over a direct product, factor by factor (the product equals Pr of the
/// embedded product subgroups).
inline Ratio pr_product(const std::vector<SubgroupRef>& Xs,
                        const std::vector<SubgroupRef>& Ys) {
  if (Xs.size() != Ys.size()) throw DegreeMismatch("pr_product: factor count mismatch");
  Ratio out(1);
  for (std::size_t i = 0; i < Xs.size(); ++i) out = out * pr(Xs[i], Ys[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Pr*
// ---------------------------------------------------------------------------

struct PrStarPair {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  Ratio best;
  SubgroupRef witness_p;
  SubgroupRef witness_q;
  bool exhaustive = false;
};

struct PrStarReport {
  Ratio value = Ratio(1);
  bool lower_bound_only = false;
  std::vector<PrStarPair> pairs;
};

namespace detail {

inline Ratio pr_memo(const SubgroupRef& P, const SubgroupRef& Q,
                     std::map<std::pair<std::uint64_t, std::uint64_t>, Ratio>& memo) {
  std::uint64_t hp = P.group()->element_set_hash();
  std::uint64_t hq = Q.group()->element_set_hash();
  std::pair<std::uint64_t, std::uint64_t> key = std::minmax(hp, hq);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Ratio v = pr(P, Q);
  memo.emplace(key, v);
  return v;
}

}  // namespace detail

/// Exhaustive Pr*(X,Y): min over ordered prime pairs (p in pi(X), q in
/// pi(Y), p != q) of the best Pr(P,Q) over all Sylow pairs.  An empty pair
/// set yields exactly 1.
inline PrStarReport pr_star(const SubgroupRef& X, const SubgroupRef& Y,
                            const Caps& caps = default_caps()) {
  PrStarReport rep;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Ratio> memo;
  PrimeSet px = pi(X), py = pi(Y);
  for (std::uint64_t p : px.primes) {
    std::vector<SubgroupRef> Ps = sylow_all(X, p, caps);
    for (std::uint64_t q : py.primes) {
      if (p == q) continue;
      std::vector<SubgroupRef> Qs = sylow_all(Y, q, caps);
      PrStarPair pairrec{p, q, Ratio(0), Ps[0], Qs[0], true};
      bool first = true;
      for (const SubgroupRef& P : Ps)
        for (const SubgroupRef& Q : Qs) {
          Ratio v = detail::pr_memo(P, Q, memo);
          if (first || v > pairrec.best) {
            pairrec.best = v;
            pairrec.witness_p = P;
            pairrec.witness_q = Q;
            first = false;
          }
        }
      rep.pairs.push_back(std::move(pairrec));
    }
  }
  if (!rep.pairs.empty()) {
    rep.value = rep.pairs[0].best;
    for (const PrStarPair& pr_ : rep.pairs)
      if (pr_.best < rep.value) rep.value = pr_.best;
  }
  return rep;
}

inline PrStarReport pr_star(const GroupHandle& G, const Caps& caps = default_caps()) {
  return pr_star(full_subgroup(G), full_subgroup(G), caps);
}

/// Witness-mode Pr*: the supplied (p,q,P,Q,value) table certifies a lower
/// bound; the value is the min over the witnessed pairs.
inline PrStarReport pr_star_witness(std::vector<PrStarPair> pairs) {
  PrStarReport rep;
  rep.pairs = std::move(pairs);
  rep.lower_bound_only = !rep.pairs.empty();
  if (!rep.pairs.empty()) {
    rep.value = rep.pairs[0].best;
    for (const PrStarPair& p : rep.pairs)
      if (p.best < rep.value) rep.value = p.best;
  }
  return rep;
}

/// One-representative witness sweep: for each ordered prime pair use the
/// single constructed Sylow pair.  Certified lower bound for Pr*(X,Y).
inline PrStarReport pr_star_single_witness(const SubgroupRef& X, const SubgroupRef& Y,
                                           const Caps& caps = default_caps()) {
  std::vector<PrStarPair> pairs;
  PrimeSet px = pi(X), py = pi(Y);
  for (std::uint64_t p : px.primes) {
    SubgroupRef P = sylow(X, p, caps);
    for (std::uint64_t q : py.primes) {
      if (p == q) continue;
      SubgroupRef Q = sylow(Y, q, caps);
      pairs.push_back(PrStarPair{p, q, pr(P, Q), P, Q, false});
    }
  }
  return pr_star_witness(std::move(pairs));
}

// ---------------------------------------------------------------------------
// hypothesis sweeps
// ---------------------------------------------------------------------------

/// min over p in pi(T) and all P in Syl_p(T) of Pr(P, G): the largest eps
/// such that Pr(P,G) >= eps for every Sylow subgroup P of T.
inline Ratio pr_all_sylows(const SubgroupRef& T, const SubgroupRef& G,
                           const Caps& caps = default_caps()) {
  Ratio value(1);
  for (std::uint64_t p : pi(T).primes)
    for (const SubgroupRef& P : sylow_all(T, p, caps)) {
      Ratio v = pr(P, G);
      if (v < value) value = v;
    }
  return value;
}

inline Ratio pr_all_sylows(const SubgroupRef& T, const GroupHandle& G,
                           const Caps& caps = default_caps()) {
  return pr_all_sylows(T, full_subgroup(G), caps);
}

enum class HallOrientation {
  sylG_hallT,  // pairs Syl_p(G) with Hall_{p'}(T), sweeping p over pi(G)
  sylT_hallG,  // pairs Syl_p(T) with Hall_{p'}(G), sweeping p over pi(T)
};

/// Composite Hall-vs-Sylow hypothesis: min over the swept prime of the max
/// over (Sylow, Hall) pairs of Pr.  The group carrying the Hall quantifier
/// must be soluble.
inline Ratio pr_hall_hypothesis(const SubgroupRef& T, const SubgroupRef& G,
                                HallOrientation orient,
                                const Caps& caps = default_caps()) {
  const SubgroupRef& syl_side = (orient == HallOrientation::sylG_hallT) ? G : T;
  const SubgroupRef& hall_side = (orient == HallOrientation::sylG_hallT) ? T : G;
  if (!is_soluble_group(hall_side.group(), caps))
    throw NotSoluble("pr_hall_hypothesis: Hall quantifier over an insoluble group");

  Ratio value(1);
  bool any = false;
  PrimeSet hall_primes = pi(hall_side);
  for (std::uint64_t p : pi(syl_side).primes) {
    std::vector<SubgroupRef> Ps = sylow_all(syl_side, p, caps);
    std::vector<SubgroupRef> Hs = hall_all(hall_side, hall_primes.without(p), caps);
    Ratio best(0);
    bool first = true;
    for (const SubgroupRef& P : Ps)
      for (const SubgroupRef& H : Hs) {
        Ratio v = pr(H, P);
        if (first || v > best) {
          best = v;
          first = false;
        }
      }
    if (!any || best < value) {
      value = best;
      any = true;
    }
  }
  return value;
}

}  // namespace prstar
