#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

#include "prstar/report.hpp"
#include "prstar/rng.hpp"
#include "prstar/selector.hpp"

namespace prstar {

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

/// Built-in corpus: >= 25 groups of order <= 2000 mixing nilpotent, soluble,
/// insoluble and layered structure.  Catalog files add SL(2,5) and friends.
inline std::vector<GroupHandle> builtin_corpus(const Caps& caps = default_caps()) {
  std::vector<GroupHandle> out;
  for (int n : {1, 2, 3, 4, 6, 12, 15, 30}) out.push_back(builtin_cyclic(n, caps));
  for (int o : {8, 10, 12, 14, 16, 20, 30}) out.push_back(builtin_dihedral(o, caps));
  for (int n : {3, 4, 5, 6}) out.push_back(builtin_symmetric(n, caps));
  for (int n : {4, 5, 6}) out.push_back(builtin_alternating(n, caps));
  out.push_back(direct_product({builtin_symmetric(3), builtin_symmetric(3)}, caps).group);
  out.push_back(direct_product({builtin_symmetric(4), builtin_symmetric(3)}, caps).group);
  out.push_back(direct_product({builtin_dihedral(10), builtin_dihedral(14)}, caps).group);
  out.push_back(direct_product({builtin_dihedral(6), builtin_dihedral(10)}, caps).group);
  out.push_back(direct_product({builtin_cyclic(2), builtin_alternating(5)}, caps).group);
  out.push_back(direct_product({builtin_alternating(4), builtin_alternating(4)}, caps).group);
  out.push_back(wreath_product(3, builtin_symmetric(3), caps).group);
  out.push_back(wreath_product(3, builtin_cyclic(3), caps).group);
  return out;
}

namespace detail {

inline SubgroupRef random_subgroup(const GroupHandle& G, Rng& rng, const Caps& caps,
                                   int max_gens = 2) {
  std::vector<Permutation> gens;
  int n = 1 + static_cast<int>(rng.below(max_gens));
  for (int i = 0; i < n; ++i) gens.push_back(rng.pick(G->elements()));
  return subgroup_of(G, gens, caps);
}

inline SubgroupRef random_normal(const GroupHandle& G, Rng& rng, const Caps& caps) {
  return normal_closure(G, {rng.pick(G->elements())}, caps);
}

inline nlohmann::json fail_pair(const SubgroupRef& a, const SubgroupRef& b) {
  return {{"left", subgroup_json(a)}, {"right", subgroup_json(b)}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// individual checks
// ---------------------------------------------------------------------------

/// Coprime action of A on a normal subgroup N of G:
///   (1) fixed points pass to quotients: C_{N/M}(A) = image of C_N(A),
///   (2) [N,A,A] = [N,A],
///   (3) N abelian: N = [N,A] x C_N(A).
inline CheckResult check_coprime_action(const GroupHandle& G, const SubgroupRef& A,
                                        const SubgroupRef& N,
                                        const Caps& caps = default_caps()) {
  CheckResult res{"coprime-action", G->label(), CheckStatus::pass, "", {}, 0};
  if (boost::multiprecision::gcd(A.order(), N.order()) != 1) {
    res.status = CheckStatus::skipped;
    res.reason = "orders not coprime";
    return res;
  }
  res.details["A"] = subgroup_json(A);
  res.details["N"] = subgroup_json(N);

  // (2) [N,A,A] = [N,A]
  SubgroupRef na = commutator_subgroup(N, A, caps);
  SubgroupRef naa = commutator_subgroup(na, A, caps);
  if (naa.order() != na.order() || !na.contains_subgroup(naa)) {
    res.status = CheckStatus::fail;
    res.reason = "[N,A,A] != [N,A]";
    res.details["NA"] = subgroup_json(na);
    res.details["NAA"] = subgroup_json(naa);
    return res;
  }

  // (3) for abelian N
  bool abelian = true;
  for (const Permutation& x : N.generators())
    for (const Permutation& y : N.generators())
      if (!commutes(x, y)) abelian = false;
  if (abelian) {
    SubgroupRef cna = centralizer_subgroup(N, A, caps);
    SubgroupRef inter = intersection(na, cna, caps);
    if (na.order() * cna.order() != N.order() || inter.order() != 1) {
      res.status = CheckStatus::fail;
      res.reason = "N != [N,A] x C_N(A)";
      res.details["NA"] = subgroup_json(na);
      res.details["CNA"] = subgroup_json(cna);
      return res;
    }
    res.details["item3"] = "verified";
  } else {
    res.details["item3"] = "not applicable (N nonabelian)";
  }

  // (1) over the A-invariant normal subgroups M of N
  int quotients_checked = 0;
  for (const SubgroupRef& M : normal_subgroups(N.group(), caps)) {
    bool invariant = true;
    for (const Permutation& a : A.generators())
      for (const Permutation& m : M.generators())
        if (!M.contains(m.conjugated_by(a))) invariant = false;
    if (!invariant) continue;
    QuotientMap q = QuotientMap::build(N.group(), M, caps);
    // fixed points of the induced action
    std::vector<Permutation> fixed;
    for (const Permutation& xbar : q.image()->elements()) {
      const Permutation& lift = q.transversal()[xbar[0]];
      bool fix = true;
      for (const Permutation& a : A.generators())
        if (q.project(lift.conjugated_by(a)) != xbar) {
          fix = false;
          break;
        }
      if (fix) fixed.push_back(xbar);
    }
    SubgroupRef cn = centralizer_subgroup(N, A, caps);
    SubgroupRef cn_image = q.project_subgroup(reparent(N.group(), cn), caps);
    bool ok = cn_image.order() == BigInt(static_cast<std::uint64_t>(fixed.size()));
    for (const Permutation& f : fixed)
      if (!cn_image.contains(f)) ok = false;
    if (!ok) {
      res.status = CheckStatus::fail;
      res.reason = "C_{N/M}(A) != image of C_N(A)";
      res.details["M"] = subgroup_json(M);
      return res;
    }
    ++quotients_checked;
  }
  res.details["item1QuotientsChecked"] = quotients_checked;
  return res;
}

/// Witness subgroup with bounded index: X* = {x in H : |K:C_K(x)| <= 2/eps},
/// H0 = <X*>.  Items (1)-(2) are asserted; item (3) for the whole of H0 is
/// reported, not asserted.
inline CheckResult check_lemma28_witness(const SubgroupRef& H, const SubgroupRef& K,
                                         const Caps& caps = default_caps()) {
  CheckResult res{"lemma28-witness", H.parent() ? H.parent()->label() : H.label(),
                  CheckStatus::pass, "", {}, 0};
  Ratio eps = pr(H, K);
  Ratio bound = Ratio(2) / eps;  // |K:C_K(x)| threshold
  res.details["eps"] = ratio_json(eps);

  std::vector<Permutation> star;
  for (const Permutation& x : H.elements()) {
    std::uint64_t cx = 0;
    for (const Permutation& k : K.elements())
      if (commutes(x, k)) ++cx;
    Ratio index(K.order(), BigInt(cx));
    if (index <= bound) star.push_back(x);
  }
  const GroupHandle& par = H.parent() ? H.parent() : H.group();
  SubgroupRef h0 = subgroup_generated(par, star, caps);

  // (2) holds by construction of X*; re-assert on the collected set
  for (const Permutation& x : star) {
    std::uint64_t cx = 0;
    for (const Permutation& k : K.elements())
      if (commutes(x, k)) ++cx;
    if (Ratio(K.order(), BigInt(cx)) > bound) {
      res.status = CheckStatus::fail;
      res.reason = "element of X* violates the centralizer-index bound";
      return res;
    }
  }

  // (1) |H:H0| <= 2/eps - 1
  Ratio h_index(H.order(), h0.order());
  res.details["indexHH0"] = ratio_json(h_index);
  res.details["indexBound"] = ratio_json(bound - Ratio(1));
  if (h_index > bound - Ratio(1)) {
    res.status = CheckStatus::fail;
    res.reason = "|H:H0| exceeds 2/eps - 1";
    res.details["H"] = subgroup_json(H);
    res.details["K"] = subgroup_json(K);
    return res;
  }

  // (3) report-only: |K:C_K(x)| <= (2/eps)^(6/eps) over all of H0
  bool item3 = true;
  BigInt worst = 1;
  for (const Permutation& x : h0.elements()) {
    std::uint64_t cx = 0;
    for (const Permutation& k : K.elements())
      if (commutes(x, k)) ++cx;
    BigInt index = K.order() / BigInt(cx);
    if (index > worst) worst = index;
    if (detail::threshold_compare(index, eps.num(), eps.den())) item3 = false;
  }
  res.details["item3AllOfH0"] = item3;
  res.details["item3WorstIndex"] = worst.str();
  return res;
}

/// Large-prime commuting: when Pr(P,Q) = eps and p > (2/eps)^(6/eps),
/// (1) P normalizing Q forces [P,Q] = 1 and (2) Q has a normal Q0 of index
/// <= floor(2/eps)! centralized by P.  Hypothesis not met -> skipped.
inline CheckResult check_lemma210(const SubgroupRef& P, const SubgroupRef& Q,
                                  std::uint64_t p, std::uint64_t q,
                                  const Caps& caps = default_caps()) {
  CheckResult res{"lemma210", P.parent() ? P.parent()->label() : P.label(),
                  CheckStatus::pass, "", {}, 0};
  if (p == q) throw PreconditionNotMet("lemma210: p and q must differ");
  if (P.order() != p_part(P.order(), p) || Q.order() != p_part(Q.order(), q))
    throw PreconditionNotMet("lemma210: operands must be a p-subgroup and a q-subgroup");
  Ratio eps = pr(P, Q);
  res.details["eps"] = ratio_json(eps);
  res.details["p"] = p;
  res.details["q"] = q;
  if (!prime_exceeds_threshold(BigInt(p), eps)) {
    res.status = CheckStatus::skipped;
    res.reason = "hypothesis not met: p <= (2/eps)^(6/eps)";
    return res;
  }

  bool normalizes = true;
  for (const Permutation& x : P.generators())
    for (const Permutation& y : Q.generators())
      if (!Q.contains(y.conjugated_by(x))) normalizes = false;
  if (normalizes) {
    SubgroupRef c = commutator_subgroup(P, Q, caps);
    res.details["item1"] = c.order() == 1 ? "pass" : "fail";
    if (c.order() != 1) {
      res.status = CheckStatus::fail;
      res.reason = "[P,Q] != 1 under the large-prime hypothesis";
      return res;
    }
  } else {
    res.details["item1"] = "not applicable (P does not normalize Q)";
  }

  // (2) normal Q0 <= Q with |Q:Q0| <= floor(2/eps)! and [P,Q0] = 1
  BigInt floor2eps = (2 * eps.den()) / eps.num();
  BigInt bound = 1;
  for (BigInt i = 2; i <= floor2eps; ++i) bound *= i;
  bool found = false;
  for (const SubgroupRef& q0 : normal_subgroups(Q.group(), caps)) {
    if (Q.order() / q0.order() > bound) continue;
    bool central = true;
    for (const Permutation& a : P.generators())
      for (const Permutation& b : q0.generators())
        if (!commutes(a, b)) central = false;
    if (central) {
      found = true;
      res.details["item2Q0"] = subgroup_json(q0);
      break;
    }
  }
  if (!found) {
    res.status = CheckStatus::fail;
    res.reason = "no normal Q0 of bounded index with [P,Q0] = 1";
  }
  return res;
}

/// is_nilpotent(G) <=> Pr*(G,G) = 1 <=> Pr*(gammaInf(G),G) = 1.
inline CheckResult check_nilpotency_equivalences(const GroupHandle& G,
                                                 const Caps& caps = default_caps()) {
  CheckResult res{"nilpotency-equivalence", G->label(), CheckStatus::pass, "", {}, 0};
  bool nil = is_nilpotent(G, caps);
  Ratio full = pr_star(full_subgroup(G), full_subgroup(G), caps).value;
  Ratio ginf = pr_star(gamma_infinity(G, caps), full_subgroup(G), caps).value;
  res.details["nilpotent"] = nil;
  res.details["prStarGG"] = ratio_json(full);
  res.details["prStarGinfG"] = ratio_json(ginf);
  bool ok = (nil == (full == Ratio(1))) && (nil == (ginf == Ratio(1)));
  if (!ok) {
    res.status = CheckStatus::fail;
    res.reason = "nilpotency equivalence violated";
  }
  return res;
}

/// Soluble G: C_G(F) <= F.  Every G: C_G(F*) <= F*.
inline CheckResult check_centralizer_facts(const GroupHandle& G,
                                           const Caps& caps = default_caps()) {
  CheckResult res{"centralizer-facts", G->label(), CheckStatus::pass, "", {}, 0};
  SubgroupRef fs = generalized_fitting(G, caps);
  SubgroupRef cfs = centralizer_subgroup(full_subgroup(G), fs, caps);
  res.details["orderFstar"] = fs.order().str();
  res.details["orderCentralizerFstar"] = cfs.order().str();
  if (!fs.contains_subgroup(cfs)) {
    res.status = CheckStatus::fail;
    res.reason = "C_G(F*) not contained in F*";
    return res;
  }
  if (is_soluble(G, caps)) {
    SubgroupRef f = fitting(G, caps);
    SubgroupRef cf = centralizer_subgroup(full_subgroup(G), f, caps);
    if (!f.contains_subgroup(cf)) {
      res.status = CheckStatus::fail;
      res.reason = "C_G(F) not contained in F (soluble case)";
      return res;
    }
    res.details["solubleCase"] = "verified";
  }
  return res;
}

// ---------------------------------------------------------------------------
// the two worked families
// ---------------------------------------------------------------------------

/// Product of dihedral groups D_{2p} over distinct odd primes.
/// Checks gamma_2 = gamma_inf cyclic of order prod(p); Pr(P,G) = (p+1)/(2p)
/// >= 1/2 for the unique Sylow subgroups of T by both Pr formulas and by the
/// per-factor product route; class sizes <= 2; F(G) = T; |G:F| = 2^s; and
/// the Hall-variant hypothesis >= 1/2 for every Hall conjugate.
inline CheckResult example31(const std::vector<std::uint64_t>& primes,
                             const Caps& caps = default_caps()) {
  CheckResult res{"example31", "", CheckStatus::pass, "", {}, 0};
  for (std::uint64_t p : primes)
    if (p < 3 || p % 2 == 0)
      throw PreconditionNotMet("example31: primes must be odd and >= 3");

  std::vector<GroupHandle> factors;
  for (std::uint64_t p : primes)
    factors.push_back(builtin_dihedral(static_cast<int>(2 * p), caps));
  DirectProduct dp = direct_product(factors, caps);
  const GroupHandle& G = dp.group;
  res.group_label = G->label();
  int s = static_cast<int>(primes.size());

  auto fail = [&](const std::string& why) {
    res.status = CheckStatus::fail;
    res.reason = why;
    return res;
  };

  SubgroupRef T = gamma_k(G, 2, caps);
  BigInt prod_p = 1;
  for (std::uint64_t p : primes) prod_p *= p;
  if (T.order() != prod_p) return fail("gamma_2 order != product of primes");
  if (exponent_of(T) != T.order().convert_to<std::uint64_t>())
    return fail("gamma_2 is not cyclic");
  if (gamma_infinity(G, caps).order() != T.order())
    return fail("gamma_2 != gamma_inf");
  res.details["orderT"] = T.order().str();

  SubgroupRef F = fitting(G, caps);
  if (F.order() != T.order() || !F.same_elements_as(T)) return fail("F(G) != T");
  BigInt index_f = G->order() / F.order();
  if (index_f != bigint_pow(BigInt(2), static_cast<unsigned>(s)))
    return fail("|G:F(G)| != 2^s");
  res.details["indexF"] = index_f.str();

  nlohmann::json per_prime = nlohmann::json::array();
  Ratio lemma_hall_value(1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::uint64_t p = primes[i];
    SubgroupRef P = sylow(T, p, caps);
    if (P.order() != p) return fail("Sylow of T has wrong order");

    // exact value by pair count + centralizer (within pr) on the full group
    Ratio direct = pr(P, full_subgroup(G));
    // independent per-factor route: Pr(C_p, D_2p) x 1 x ... x 1
    GroupHandle Dfac = factors[i];
    SubgroupRef cp = sylow(Dfac, p, caps);
    Ratio factorwise = pr(cp, full_subgroup(Dfac));
    if (direct != factorwise) return fail("factor route disagrees with pair count");
    if (direct != Ratio(BigInt(p + 1), BigInt(2 * p)))
      return fail("Pr(P,G) != (p+1)/(2p)");
    if (direct < Ratio(1, 2)) return fail("Pr(P,G) < 1/2");

    // class sizes |y^G| <= 2 on P
    for (const Permutation& y : P.elements())
      if (element_class(G, y).size() > 2) return fail("class size above 2 in Syl(T)");

    // family Hall p'-subgroup: reflections in factor i, everything elsewhere
    std::vector<std::vector<Permutation>> parts(primes.size());
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (j == i) {
        parts[j] = {factors[j]->generators()[1]};  // the reflection
      } else {
        parts[j] = factors[j]->generators();
      }
    }
    SubgroupRef Hfam = dp.product_subgroup(parts, caps);
    if (Hfam.order() * p != G->order()) return fail("family Hall subgroup has wrong order");
    Ratio best(0);
    bool all_ge_half = true;
    for (const SubgroupRef& H : detail::conjugate_orbit(full_subgroup(G), Hfam, caps,
                                                        caps.sylow_enum_cap)) {
      Ratio v = pr(P, H);
      if (v < Ratio(1, 2)) all_ge_half = false;
      if (v > best) best = v;
    }
    if (!all_ge_half) return fail("some Hall p'-conjugate has Pr(P,H) < 1/2");
    if (best < lemma_hall_value) lemma_hall_value = best;

    per_prime.push_back({{"p", p},
                         {"prPG", ratio_json(direct)},
                         {"prHall", ratio_json(best)}});
  }
  res.details["perPrime"] = per_prime;
  res.details["lemmaHallOrientationValue"] = ratio_json(lemma_hall_value);
  if (lemma_hall_value < Ratio(1, 2)) return fail("Hall-variant hypothesis below 1/2");

  // swapped orientation for the dashboards: Syl_2(G) against Hall_{2'}(T) = T
  std::vector<std::vector<Permutation>> refl(primes.size());
  for (std::size_t j = 0; j < primes.size(); ++j)
    refl[j] = {factors[j]->generators()[1]};
  SubgroupRef P2 = dp.product_subgroup(refl, caps);
  if (P2.order() != bigint_pow(BigInt(2), static_cast<unsigned>(s)))
    return fail("family Sylow 2-subgroup has wrong order");
  Ratio swapped = pr(T, P2);
  res.details["thm12OrientationValueAtP2"] = ratio_json(swapped);
  return res;
}

/// Wreath factors C_p wr S5 over distinct primes >= 7.
/// Per factor and q in {2,3,5}: exact Pr(base, Syl_q(top copy)) by pair
/// count AND by the fixed-point count sum p^{c(sigma)} / (|Q| p^5), both
/// >= 1/8; q in pi gives exactly 1.  F* = F = product of bases (validated),
/// witnessed Pr*(F*(G),G) >= 1/8, F2* factor = C_p wr A5 (index 2; by the
/// generic quotient machinery at model scale) and |G:F2*| = 2^s.
inline CheckResult example52(const std::vector<std::uint64_t>& primes, bool full_witness,
                             const Caps& caps = default_caps()) {
  CheckResult res{"example52", "", CheckStatus::pass, "", {}, 0};
  for (std::uint64_t p : primes)
    if (p < 7) throw PreconditionNotMet("example52: primes must be >= 7");

  auto fail = [&](const std::string& why) {
    res.status = CheckStatus::fail;
    res.reason = why;
    return res;
  };

  GroupHandle s5 = builtin_symmetric(5, caps);
  GroupHandle a5 = builtin_alternating(5, caps);

  std::vector<WreathProduct> ws;
  for (std::uint64_t p : primes) ws.push_back(wreath_product(static_cast<int>(p), s5, caps));
  res.group_label = full_witness ? "prod(CpwrS5)" : ws[0].group->label();

  std::vector<PrStarPair> witness_pairs;
  nlohmann::json per_factor = nlohmann::json::array();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::uint64_t p = primes[i];
    const WreathProduct& w = ws[i];
    SubgroupRef base = w.base(caps);
    if (base.order() != bigint_pow(BigInt(p), 5)) return fail("base order != p^5");
    if (!is_normal_in(base, w.group)) return fail("base not normal");
    if (p_part(w.group->order(), p) != base.order())
      return fail("base is not the full p-part");
    // base abelian -> nilpotent
    for (const Permutation& x : base.generators())
      for (const Permutation& y : base.generators())
        if (!commutes(x, y)) return fail("base not abelian");

    // quotient by the base has trivial p-cores: validates F(W) = base
    QuotientMap q = QuotientMap::build(w.group, base, caps);
    if (q.image()->order() != 120) return fail("W/base is not S5-sized");
    for (std::uint64_t r : pi(q.image()).primes)
      if (p_core(q.image(), r, caps).order() != 1)
        return fail("W/base has a nontrivial core: F(W) != base");

    SubgroupRef top = w.top_copy(caps);
    nlohmann::json qvals = nlohmann::json::array();
    for (std::uint64_t qq : {2ull, 3ull, 5ull}) {
      SubgroupRef Q = sylow(top, qq, caps);
      if (Q.order() != p_part(w.group->order(), qq))
        return fail("top Sylow is not a Sylow of the wreath factor");

      // fixed-point route: sum over sigma of p^{cycles(sigma)}
      BigInt num = 0;
      for (const Permutation& y : Q.elements()) {
        std::vector<int> sigma(w.n);
        for (int b = 0; b < w.n; ++b) sigma[b] = y[b * w.m] / w.m;
        Permutation s(std::move(sigma));
        if (w.lift_top(s) != y) return fail("top-copy element is not a pure lift");
        num += bigint_pow(BigInt(p), static_cast<unsigned>(s.cycle_count()));
      }
      Ratio fixed_point(num, Q.order() * base.order());

      // pair-count route (with the built-in centralizer cross-check);
      // above the enumeration cap the fixed-point count stands alone
      bool counted_too = base.enumerable();
      if (counted_too) {
        Ratio counted = pr(base, Q);
        if (counted != fixed_point)
          return fail("pair count disagrees with fixed-point count");
      }
      if (fixed_point < Ratio(1, 8)) return fail("Pr(P,Q) < 1/8");
      qvals.push_back(
          {{"q", qq}, {"pr", ratio_json(fixed_point)}, {"pairCountChecked", counted_too}});
      witness_pairs.push_back(PrStarPair{p, qq, fixed_point, base, Q, false});
    }

    // F2* of the factor: explicit C_p wr A5, cross-checked by the generic
    // quotient machinery (F* of the image, then preimage)
    SubgroupRef cwa = w.base_extension(a5->generators(), caps,
                                       "C" + std::to_string(p) + "wrA5");
    if (cwa.order() * 2 != w.group->order()) return fail("C_p wr A5 does not have index 2");
    SubgroupRef fsbar = generalized_fitting(q.image(), caps);
    SubgroupRef pre = q.preimage(fsbar, caps);
    if (pre.order() != cwa.order()) return fail("generic F2* disagrees with C_p wr A5");
    for (const Permutation& g : cwa.generators())
      if (!pre.contains(g)) return fail("generic F2* disagrees with C_p wr A5");

    per_factor.push_back({{"p", p},
                          {"baseOrder", base.order().str()},
                          {"prValues", qvals},
                          {"indexF2starFactor", 2}});
  }
  res.details["perFactor"] = per_factor;

  if (full_witness) {
    std::vector<GroupHandle> handles;
    for (const WreathProduct& w : ws) handles.push_back(w.group);
    DirectProduct dp = direct_product(handles, caps);

    // F*(G) = F(G) = product of the bases: normal, abelian
    std::vector<std::vector<Permutation>> base_parts;
    for (const WreathProduct& w : ws) base_parts.push_back(w.base_gens());
    SubgroupRef fstar = dp.product_subgroup(base_parts, caps, "F*(G)");
    BigInt expect = 1;
    for (std::uint64_t p : primes) expect *= bigint_pow(BigInt(p), 5);
    if (fstar.order() != expect) return fail("product of bases has wrong order");
    if (!is_normal_in(fstar, dp.group)) return fail("F* candidate not normal in G");

    // q in pi pairs: Pr = 1 exactly (commuting certificate)
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = 0; j < primes.size(); ++j) {
        if (primes[i] == primes[j] && i != j) continue;
        std::vector<std::vector<Permutation>> pi_part(primes.size()),
            pj_part(primes.size());
        pi_part[i] = ws[i].base_gens();
        pj_part[j] = ws[j].base_gens();
        SubgroupRef Pi = dp.product_subgroup(pi_part, caps);
        SubgroupRef Pj = dp.product_subgroup(pj_part, caps);
        std::optional<Ratio> one = pr_if_commuting(Pi, Pj);
        if (!one || *one != Ratio(1)) return fail("q in pi pair is not exactly 1");
        if (i != j)
          witness_pairs.push_back(PrStarPair{primes[i], primes[j], Ratio(1), Pi, Pj, false});
      }

    PrStarReport star = pr_star_witness(witness_pairs);
    res.details["prStarWitness"] = prstar_json(star);
    if (star.value < Ratio(1, 8)) return fail("witnessed Pr*(F*(G),G) < 1/8");

    // |G:F2*(G)| = 2^s by order arithmetic over the explicit factor subgroups
    BigInt f2star_order = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      f2star_order *= ws[i].group->order() / 2;
    BigInt index = dp.group->order() / f2star_order;
    if (index != bigint_pow(BigInt(2), static_cast<unsigned>(primes.size())))
      return fail("|G:F2*(G)| != 2^s");
    res.details["indexF2star"] = index.str();
  }
  return res;
}

// ---------------------------------------------------------------------------
// dashboards
// ---------------------------------------------------------------------------

/// Hypothesis epsilon and conclusion quantities for one theorem-style
/// statement.  Asymptotic conclusions are numbers here, never pass/fail.
/// Theorems: T1.1, T1.2, T1.3 (uses k), T1.4, T1.5, L3.1, P3.2, L3.4.
inline Dashboard make_dashboard(const GroupHandle& G, const std::string& theorem,
                                int k = 1, const Caps& caps = default_caps()) {
  Dashboard d;
  d.group_label = G->label();
  d.theorem_id = theorem == "T1.3" ? "T1.3(" + std::to_string(k) + ")" : theorem;

  SubgroupRef F = fitting(G, caps);
  SubgroupRef F2 = fitting_k(G, 2, caps);
  d.index_f2 = G->order() / F2.order();
  d.index_f = G->order() / F.order();
  d.s = static_cast<int>(pi(F.order()).primes.size());
  QuotientMap qf = QuotientMap::build(G, F, caps);
  d.exp_g_mod_f = exponent_of(qf.image());

  bool soluble = is_soluble(G, caps);
  try {
    if (theorem == "T1.1") {
      d.hypothesis_eps = pr_star(gamma_infinity(G, caps), full_subgroup(G), caps).value;
    } else if (theorem == "P3.2") {
      if (!soluble) throw NotSoluble("P3.2 requires a soluble group");
      d.hypothesis_eps = pr_star(gamma_infinity(G, caps), full_subgroup(G), caps).value;
    } else if (theorem == "T1.2") {
      if (!soluble) throw NotSoluble("T1.2 requires a soluble group");
      d.hypothesis_eps = pr_hall_hypothesis(gamma_infinity(G, caps), full_subgroup(G),
                                            HallOrientation::sylG_hallT, caps);
    } else if (theorem == "L3.4") {
      if (!soluble) throw NotSoluble("L3.4 requires a soluble group");
      d.hypothesis_eps = pr_hall_hypothesis(gamma_infinity(G, caps), full_subgroup(G),
                                            HallOrientation::sylT_hallG, caps);
    } else if (theorem == "T1.3") {
      d.hypothesis_eps = pr_all_sylows(gamma_k(G, k, caps), full_subgroup(G), caps);
    } else if (theorem == "T1.4") {
      d.hypothesis_eps = pr_star(generalized_fitting(G, caps), full_subgroup(G), caps).value;
    } else if (theorem == "T1.5") {
      d.hypothesis_eps = pr_star(fstar_2(G, caps), full_subgroup(G), caps).value;
    } else if (theorem == "L3.1") {
      if (!soluble) throw NotSoluble("L3.1 requires a soluble group");
      Ratio eps = pr_star(gamma_infinity(G, caps), full_subgroup(G), caps).value;
      d.hypothesis_eps = eps;
      // p > (2/eps)^(6/eps)  =>  Syl_p(G) <= F(G)
      nlohmann::json checked = nlohmann::json::array();
      bool violated = false;
      for (std::uint64_t p : pi(G).primes) {
        if (!prime_exceeds_threshold(BigInt(p), eps)) continue;
        bool inside = true;
        for (const SubgroupRef& P : sylow_all(G, p, caps))
          if (!F.contains_subgroup(P)) inside = false;
        checked.push_back({{"p", p}, {"sylowInFitting", inside}});
        if (!inside) violated = true;
      }
      d.extra["largePrimeSylowChecks"] = checked;
      d.extra["violated"] = violated;
    } else {
      throw Error("unknown theorem id '" + theorem + "'");
    }
  } catch (const NotSoluble& e) {
    d.eps_skipped = true;
    d.eps_skip_reason = e.what();
  }

  if (theorem == "T1.3") {
    // bounded witness search: nilpotent normal R of class <= k+1 inside F(G),
    // minimizing (exp(G/R), |gamma_{k+1}(R)|)
    std::optional<DashboardWitness> best;
    std::size_t budget = caps.search_budget;
    for (const SubgroupRef& R : normal_subgroups(G, caps)) {
      if (budget-- == 0) break;
      if (!F.contains_subgroup(R)) continue;
      NilpotencyInfo nil = nilpotency(R.group(), caps);
      if (!nil.nilpotent || nil.cls > k + 1) continue;
      QuotientMap qr = QuotientMap::build(G, R, caps);
      DashboardWitness w;
      w.order = R.order();
      w.cls = nil.cls;
      w.exp_quotient = exponent_of(qr.image());
      SeriesRecord lc = lower_central_series(R.group(), k + 1, caps);
      w.order_gamma_k1 = (k + 1 <= static_cast<int>(lc.terms.size()))
                             ? lc.terms[k].order()
                             : lc.terms.back().order();
      if (!best || w.exp_quotient < best->exp_quotient ||
          (w.exp_quotient == best->exp_quotient &&
           w.order_gamma_k1 < best->order_gamma_k1))
        best = w;
    }
    d.witness_r = best;
  }
  return d;
}

// ---------------------------------------------------------------------------
// the corpus battery
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::uint64_t seed = 1;
  int samples = 40;
  Caps caps;
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

inline CheckResult run_sylow_invariants(const GroupHandle& G, const Caps& caps) {
  CheckResult res{"sylow-invariants", G->label(), CheckStatus::pass, "", {}, 0};
  for (std::uint64_t p : pi(G).primes) {
    SubgroupRef P = sylow(G, p, caps);
    if (P.order() != p_part(G->order(), p)) {
      res.status = CheckStatus::fail;
      res.reason = "Sylow order is not the exact p-part (p=" + std::to_string(p) + ")";
      return res;
    }
    std::vector<SubgroupRef> all = sylow_all(G, p, caps);
    if (all.size() % p != 1) {
      res.status = CheckStatus::fail;
      res.reason = "Sylow count != 1 mod p (p=" + std::to_string(p) + ")";
      return res;
    }
    BigInt index = G->order() / P.order();
    if (index % BigInt(static_cast<std::uint64_t>(all.size())) != 0) {
      res.status = CheckStatus::fail;
      res.reason = "Sylow count does not divide |G:P| (p=" + std::to_string(p) + ")";
      return res;
    }
  }
  return res;
}

inline CheckResult run_hall_invariants(const GroupHandle& G, const Caps& caps) {
  CheckResult res{"hall-invariants", G->label(), CheckStatus::pass, "", {}, 0};
  if (!is_soluble(G, caps)) {
    res.status = CheckStatus::skipped;
    res.reason = "not soluble";
    return res;
  }
  PrimeSet all = pi(G);
  if (hall(G, all, caps).order() != G->order()) {
    res.status = CheckStatus::fail;
    res.reason = "hall(G, pi(G)) != G";
    return res;
  }
  if (hall(G, PrimeSet{}, caps).order() != 1) {
    res.status = CheckStatus::fail;
    res.reason = "hall(G, {}) != 1";
    return res;
  }
  for (std::uint64_t p : all.primes) {
    PrimeSet ps = all.without(p);
    if (hall(G, ps, caps).order() != pi_part(G->order(), ps)) {
      res.status = CheckStatus::fail;
      res.reason = "Hall p'-subgroup has wrong order (p=" + std::to_string(p) + ")";
      return res;
    }
  }
  return res;
}

inline CheckResult run_radical_oracle(const GroupHandle& G, const Caps& caps) {
  CheckResult res{"radical-oracle", G->label(), CheckStatus::pass, "", {}, 0};
  if (G->order() > 500) {
    res.status = CheckStatus::skipped;
    res.reason = "order above the 500 cross-check bound";
    return res;
  }
  SubgroupRef rad = soluble_radical(G, caps);
  BigInt best = 1;
  for (const SubgroupRef& n : normal_subgroups(G, caps))
    if (is_soluble(n.group(), caps) && n.order() > best) best = n.order();
  res.details["radicalOrder"] = rad.order().str();
  res.details["bruteMaxSolubleNormal"] = best.str();
  if (rad.order() != best || !is_soluble(rad.group(), caps) || !is_normal_in(rad, G)) {
    res.status = CheckStatus::fail;
    res.reason = "radical disagrees with brute-force maximum soluble normal subgroup";
  }
  return res;
}

inline CheckResult run_fstar_soluble(const GroupHandle& G, const Caps& caps) {
  CheckResult res{"fstar-soluble", G->label(), CheckStatus::pass, "", {}, 0};
  SubgroupRef f = fitting(G, caps);
  SubgroupRef fs = generalized_fitting(G, caps);
  if (!fs.contains_subgroup(f)) {
    res.status = CheckStatus::fail;
    res.reason = "F(G) not contained in F*(G)";
    return res;
  }
  if (is_soluble(G, caps) && fs.order() != f.order()) {
    res.status = CheckStatus::fail;
    res.reason = "F*(G) != F(G) for a soluble group";
  }
  return res;
}

inline CheckResult run_coprime_samples(const GroupHandle& G, const Caps& caps, Rng rng,
                                       int samples) {
  CheckResult res{"coprime-action", G->label(), CheckStatus::pass, "", {}, 0};
  int attempted = 0, executed = 0;
  for (int t = 0; t < samples && attempted < 12 * samples; ++t) {
    ++attempted;
    SubgroupRef N = random_normal(G, rng, caps);
    SubgroupRef A = random_subgroup(G, rng, caps);
    if (boost::multiprecision::gcd(A.order(), N.order()) != 1 || N.order() == 1) {
      --t;
      continue;
    }
    CheckResult one = check_coprime_action(G, A, N, caps);
    ++executed;
    if (one.status == CheckStatus::fail) return one;
  }
  if (executed == 0) {
    res.status = CheckStatus::skipped;
    res.reason = "no coprime (A, N) pair found";
  }
  res.details["samples"] = executed;
  return res;
}

inline CheckResult run_lemma22_quotient(const GroupHandle& G, const Caps& caps, Rng rng,
                                        int samples) {
  CheckResult res{"lemma22-quotient", G->label(), CheckStatus::pass, "", {}, 0};
  int done = 0;
  for (int t = 0; t < samples; ++t) {
    SubgroupRef H = random_subgroup(G, rng, caps);
    SubgroupRef K = random_subgroup(G, rng, caps);
    SubgroupRef N = random_normal(G, rng, caps);
    QuotientMap q = QuotientMap::build(G, N, caps);
    if (pr(q.project_subgroup(H, caps), q.project_subgroup(K, caps)) < pr(H, K)) {
      res.status = CheckStatus::fail;
      res.reason = "quotient monotonicity violated";
      res.details = fail_pair(H, K);
      res.details["N"] = subgroup_json(N);
      return res;
    }
    ++done;
  }
  res.details["samples"] = done;
  return res;
}

inline CheckResult run_lemma22_subgroup(const GroupHandle& G, const Caps& caps, Rng rng,
                                        int samples) {
  CheckResult res{"lemma22-subgroup", G->label(), CheckStatus::pass, "", {}, 0};
  int done = 0;
  for (int t = 0; t < samples; ++t) {
    SubgroupRef H = random_subgroup(G, rng, caps);
    SubgroupRef K = random_subgroup(G, rng, caps);
    std::vector<Permutation> sub;
    for (const Permutation& g : H.generators())
      if (rng.below(2) == 0) sub.push_back(g);
    SubgroupRef H0 = subgroup_of(G, sub, caps);
    if (pr(H0, K) < pr(H, K)) {
      res.status = CheckStatus::fail;
      res.reason = "subgroup monotonicity violated";
      res.details = fail_pair(H, K);
      return res;
    }
    ++done;
  }
  res.details["samples"] = done;
  return res;
}

inline CheckResult run_lemma25_star(const GroupHandle& G, const Caps& caps, Rng rng,
                                    int samples) {
  CheckResult res{"lemma25-star", G->label(), CheckStatus::pass, "", {}, 0};
  int done = 0;
  for (int t = 0; t < samples; ++t) {
    SubgroupRef H = random_subgroup(G, rng, caps);
    SubgroupRef L = random_subgroup(G, rng, caps);
    // K normal in H
    SubgroupRef K = normal_closure_in(H.group(), {rng.pick(H.elements())}, caps);
    K = SubgroupRef(G, K.group());
    if (pr_star(K, L, caps).value < pr_star(H, L, caps).value) {
      res.status = CheckStatus::fail;
      res.reason = "Pr* monotonicity violated (normal subgroup)";
      res.details = fail_pair(K, H);
      return res;
    }
    // projection variant
    SubgroupRef N = random_normal(G, rng, caps);
    QuotientMap q = QuotientMap::build(G, N, caps);
    if (pr_star(q.project_subgroup(H, caps), full_subgroup(q.image()), caps).value <
        pr_star(H, full_subgroup(G), caps).value) {
      res.status = CheckStatus::fail;
      res.reason = "Pr* monotonicity violated (projection)";
      res.details = fail_pair(H, N);
      return res;
    }
    ++done;
  }
  res.details["samples"] = done;
  return res;
}

inline CheckResult run_lemma28_samples(const GroupHandle& G, const Caps& caps, Rng rng,
                                       int samples) {
  CheckResult res{"lemma28-witness", G->label(), CheckStatus::pass, "", {}, 0};
  int done = 0;
  bool item3_all = true;
  for (int t = 0; t < samples; ++t) {
    SubgroupRef H = random_subgroup(G, rng, caps);
    SubgroupRef K = random_subgroup(G, rng, caps);
    CheckResult one = check_lemma28_witness(H, K, caps);
    if (one.status == CheckStatus::fail) return one;
    if (one.details.contains("item3AllOfH0") && !one.details["item3AllOfH0"].get<bool>())
      item3_all = false;
    ++done;
  }
  res.details["samples"] = done;
  res.details["item3HeldOnAllSamples"] = item3_all;
  return res;
}

inline CheckResult run_lemma210_sweep(const GroupHandle& G, const Caps& caps) {
  CheckResult res{"lemma210", G->label(), CheckStatus::pass, "", {}, 0};
  PrimeSet ps = pi(G);
  int met = 0, skipped = 0;
  for (std::uint64_t p : ps.primes)
    for (std::uint64_t q : ps.primes) {
      if (p == q) continue;
      CheckResult one =
          check_lemma210(sylow(G, p, caps), sylow(G, q, caps), p, q, caps);
      if (one.status == CheckStatus::fail) return one;
      if (one.status == CheckStatus::skipped)
        ++skipped;
      else
        ++met;
    }
  res.details["hypothesisMet"] = met;
  res.details["hypothesisSkipped"] = skipped;
  if (met == 0 && skipped > 0) {
    res.status = CheckStatus::skipped;
    res.reason = "hypothesis not met for any Sylow pair";
  }
  return res;
}

inline CheckResult run_lemma22_product(const std::vector<GroupHandle>& corpus,
                                       const Caps& caps, Rng rng, int samples) {
  CheckResult res{"lemma22-product", "corpus", CheckStatus::pass, "", {}, 0};
  std::vector<GroupHandle> small;
  for (const GroupHandle& g : corpus)
    if (g->order() <= 200 && g->order() > 1) small.push_back(g);
  int done = 0;
  for (int t = 0; t < samples; ++t) {
    const GroupHandle& g1 = rng.pick(small);
    const GroupHandle& g2 = rng.pick(small);
    DirectProduct dp = direct_product({g1, g2}, caps);
    SubgroupRef h1 = random_subgroup(g1, rng, caps);
    SubgroupRef k1 = random_subgroup(g1, rng, caps);
    SubgroupRef h2 = random_subgroup(g2, rng, caps);
    SubgroupRef k2 = random_subgroup(g2, rng, caps);
    Ratio factorwise = pr_product({h1, h2}, {k1, k2});
    SubgroupRef H = dp.product_subgroup({h1.generators(), h2.generators()}, caps);
    SubgroupRef K = dp.product_subgroup({k1.generators(), k2.generators()}, caps);
    if (pr(H, K) != factorwise) {
      res.status = CheckStatus::fail;
      res.reason = "product multiplicativity violated";
      res.details["factors"] = {g1->label(), g2->label()};
      return res;
    }
    ++done;
  }
  res.details["samples"] = done;
  return res;
}

inline CheckResult run_lemma210_large_prime(const Caps& caps) {
  // constructed pass case: C67 x C2, eps = 1, p = 67 > 64
  DirectProduct dp = direct_product({builtin_cyclic(67, caps), builtin_cyclic(2, caps)}, caps);
  SubgroupRef P = dp.product_subgroup({dp.factors[0]->generators(), {}}, caps);
  SubgroupRef Q = dp.product_subgroup({{}, dp.factors[1]->generators()}, caps);
  CheckResult res = check_lemma210(P, Q, 67, 2, caps);
  res.check_id = "lemma210-large-prime";
  res.group_label = dp.group->label();
  if (res.status == CheckStatus::skipped) {
    res.status = CheckStatus::fail;
    res.reason = "constructed case unexpectedly skipped";
  }
  return res;
}

}  // namespace detail

/// Full corpus battery.  Tasks run data-parallel with per-task derived
/// seeds; results are merged in (group label, check id) order, so output is
/// independent of scheduling.
inline ReportDocument verify_lemmas(const std::vector<GroupHandle>& corpus,
                                    const VerifyOptions& opt) {
  const Caps& caps = opt.caps;
  struct Task {
    std::string group;
    std::string check;
    std::function<CheckResult()> run;
  };
  std::vector<Task> tasks;
  auto add = [&](const std::string& group, const std::string& check,
                 std::function<CheckResult()> fn) {
    tasks.push_back(Task{group, check, std::move(fn)});
  };

  for (const GroupHandle& G : corpus) {
    const std::string& lbl = G->label();
    auto seeded = [&](const char* tag) {
      return Rng(derive_seed(opt.seed, G->label() + "/" + tag));
    };
    add(lbl, "nilpotency-equivalence",
        [G, caps] { return check_nilpotency_equivalences(G, caps); });
    add(lbl, "centralizer-facts", [G, caps] { return check_centralizer_facts(G, caps); });
    add(lbl, "sylow-invariants", [G, caps] { return detail::run_sylow_invariants(G, caps); });
    add(lbl, "hall-invariants", [G, caps] { return detail::run_hall_invariants(G, caps); });
    add(lbl, "radical-oracle", [G, caps] { return detail::run_radical_oracle(G, caps); });
    add(lbl, "fstar-soluble", [G, caps] { return detail::run_fstar_soluble(G, caps); });
    int s = std::max(1, opt.samples / 8);
    add(lbl, "coprime-action", [G, caps, r = seeded("coprime"), s] {
      return detail::run_coprime_samples(G, caps, r, s);
    });
    add(lbl, "lemma22-quotient", [G, caps, r = seeded("l22q"), s] {
      return detail::run_lemma22_quotient(G, caps, r, s);
    });
    add(lbl, "lemma22-subgroup", [G, caps, r = seeded("l22s"), s] {
      return detail::run_lemma22_subgroup(G, caps, r, s);
    });
    add(lbl, "lemma25-star", [G, caps, r = seeded("l25"), s = std::max(1, opt.samples / 16)] {
      return detail::run_lemma25_star(G, caps, r, s);
    });
    add(lbl, "lemma28-witness", [G, caps, r = seeded("l28"), s] {
      return detail::run_lemma28_samples(G, caps, r, s);
    });
    add(lbl, "lemma210", [G, caps] { return detail::run_lemma210_sweep(G, caps); });
  }
  add("corpus", "lemma22-product",
      [&corpus, caps, r = Rng(derive_seed(opt.seed, "corpus/product")), s = opt.samples] {
        return detail::run_lemma22_product(corpus, caps, r, s);
      });
  add("corpus", "lemma210-large-prime",
      [caps] { return detail::run_lemma210_large_prime(caps); });

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  unsigned nthreads = opt.threads ? opt.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, tasks.size());
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      auto t0 = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = tasks[i].run();
      } catch (const EnumerationCapExceeded& e) {
        r = CheckResult{tasks[i].check, tasks[i].group, CheckStatus::skipped, e.what(), {}, 0};
      } catch (const PreconditionNotMet& e) {
        r = CheckResult{tasks[i].check, tasks[i].group, CheckStatus::skipped, e.what(), {}, 0};
      } catch (const Error& e) {
        r = CheckResult{tasks[i].check, tasks[i].group, CheckStatus::fail, e.what(), {}, 0};
      }
      r.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
      results[i] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();

  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.group_label != b.group_label) return a.group_label < b.group_label;
    return a.check_id < b.check_id;
  });

  ReportDocument doc;
  for (const GroupHandle& g : corpus) doc.group_descriptors.push_back(group_descriptor(g));
  doc.checks = std::move(results);
  return doc;
}

}  // namespace prstar
