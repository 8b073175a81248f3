#!/usr/bin/env python3
"""Reference-value generator for the C++ test suites.

Values frozen into the C++ tests are computed here with straightforward
set-closure algorithms that share no code with the library.

Run:  python3 tests/oracle/expected_values.py
"""

from fractions import Fraction
from math import gcd

# ---------------------------------------------------------------------------
# permutations as 0-based image tuples; compose(a, b) applies a first, then b
# ---------------------------------------------------------------------------


def compose(a, b):
    return tuple(b[a[i]] for i in range(len(a)))


def inverse(a):
    inv = [0] * len(a)
    for i, img in enumerate(a):
        inv[img] = i
    return tuple(inv)


def identity(n):
    return tuple(range(n))


def conj(x, g):  # g^-1 x g
    return compose(compose(inverse(g), x), g)


def comm(x, y):  # x^-1 y^-1 x y
    return compose(compose(inverse(x), inverse(y)), compose(x, y))


def closure(gens, degree):
    if not gens:
        return [identity(degree)]
    seen = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        new = []
        for f in frontier:
            for g in gens:
                h = compose(f, g)
                if h not in seen:
                    seen.add(h)
                    new.append(h)
        frontier = new
    return sorted(seen)


def reduce_gens(elems, degree):
    """Small generating set for the subgroup generated by elems."""
    gens, sub = [], {identity(degree)}
    for x in elems:
        if x not in sub:
            gens.append(x)
            sub = set(closure(gens, degree))
    return gens


def perm_order(p):
    n, k, q = len(p), 1, p
    while q != identity(n):
        q = compose(q, p)
        k += 1
    return k


def cycle_string(p):
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


# ---------------------------------------------------------------------------
# group constructions
# ---------------------------------------------------------------------------


def cyclic(n):
    return ([tuple((i + 1) % n for i in range(n))] if n > 1 else [], max(n, 1))


def dihedral(order):  # order = 2n, acting on n points
    n = order // 2
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    return [rot, ref], n


def symmetric(n):
    if n == 1:
        return [], 1
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return gens, n


def alternating(n):
    gens = []
    for i in range(n - 2):
        img = list(range(n))
        img[i], img[i + 1], img[i + 2] = i + 1, i + 2, i
        gens.append(tuple(img))
    return gens, n


def direct_product(parts):
    offsets, total = [], 0
    for _, d in parts:
        offsets.append(total)
        total += d
    gens = []
    for idx, (gs, d) in enumerate(parts):
        off = offsets[idx]
        for g in gs:
            img = list(range(total))
            for i in range(d):
                img[off + i] = off + g[i]
            gens.append(tuple(img))
    return gens, total, offsets


def wreath_cyclic(m, top_gens, n):
    """C_m wr T, T on n points; imprimitive action, block i = [i*m,(i+1)*m)."""
    deg = m * n
    base = []
    for blk in range(n):
        img = list(range(deg))
        for j in range(m):
            img[blk * m + j] = blk * m + (j + 1) % m
        base.append(tuple(img))
    tops = []
    for s in top_gens:
        img = list(range(deg))
        for i in range(n):
            for j in range(m):
                img[i * m + j] = s[i] * m + j
        tops.append(tuple(img))
    return base + tops, deg, base, tops


# ---------------------------------------------------------------------------
# structure computations (set closures; orbits always via generators)
# ---------------------------------------------------------------------------


class Grp:
    def __init__(self, gens, degree, elems=None):
        self.degree = degree
        self.gens = reduce_gens(gens, degree) if gens else []
        self.elems = elems if elems is not None else closure(self.gens, degree)

    @property
    def order(self):
        return len(self.elems)


def commuting_pairs(X, Y):
    return sum(1 for x in X for y in Y if compose(x, y) == compose(y, x))


def pr(X, Y):
    return Fraction(commuting_pairs(X, Y), len(X) * len(Y))


def conj_classes(G):
    left = set(G.elems)
    classes = []
    while left:
        x = min(left)
        orb = {x}
        frontier = [x]
        while frontier:
            new = []
            for f in frontier:
                for g in G.gens:
                    h = conj(f, g)
                    if h not in orb:
                        orb.add(h)
                        new.append(h)
            frontier = new
        classes.append(sorted(orb))
        left -= orb
    classes.sort(key=lambda c: (len(c), c[0]))
    return classes


def subgroup(G, elems):
    return Grp(reduce_gens(list(elems), G.degree), G.degree)


def normal_closure(G, S):
    gens = reduce_gens(list(S), G.degree)
    while True:
        sub = set(closure(gens, G.degree))
        added = False
        for g in G.gens:
            for s in list(gens):
                c = conj(s, g)
                if c not in sub:
                    gens.append(c)
                    added = True
        if not added:
            return Grp(gens, G.degree, sorted(sub))


def commutator_subgroup(amb, H, K):
    hg = reduce_gens(H.elems, amb.degree)
    kg = reduce_gens(K.elems, amb.degree)
    comms = [comm(h, k) for h in hg for k in kg]
    joint = Grp(hg + kg, amb.degree)
    return normal_closure(joint, comms)


def lower_central(G):
    series = [G]
    while True:
        nxt = commutator_subgroup(G, series[-1], G)
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def derived_series(G):
    series = [G]
    while True:
        nxt = commutator_subgroup(G, series[-1], series[-1])
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def sylow(G, p):
    pk = 1
    while G.order % (pk * p) == 0:
        pk *= p
    if pk == 1:
        return Grp([], G.degree)
    best, besto = None, 0
    for x in G.elems:
        o = perm_order(x)
        if o != 1 and pk % o == 0 and o > besto:
            best, besto = x, o
    P = Grp([best], G.degree)
    while P.order < pk:
        Pset = set(P.elems)
        found = False
        for y in G.elems:
            if y in Pset:
                continue
            o = perm_order(y)
            if pk % o != 0:
                continue
            if not all(conj(h, y) in Pset for h in P.gens):
                continue  # not in normalizer
            cand = Grp(P.gens + [y], G.degree)
            if cand.order > P.order and pk % cand.order == 0:
                P = cand
                found = True
                break
        assert found, "sylow ascent stuck"
    return P


def conjugate_subgroups(G, P):
    seen = {tuple(P.elems)}
    frontier = [P]
    out = [P]
    while frontier:
        new = []
        for Q in frontier:
            for g in G.gens:
                R = sorted(conj(x, g) for x in Q.elems)
                t = tuple(R)
                if t not in seen:
                    seen.add(t)
                    S = Grp(reduce_gens(R, G.degree), G.degree, R)
                    new.append(S)
                    out.append(S)
        frontier = new
    return out


def p_core(G, p):
    syl = conjugate_subgroups(G, sylow(G, p))
    core = set(syl[0].elems)
    for S in syl[1:]:
        core &= set(S.elems)
    return subgroup(G, sorted(core))


def primes_of(n):
    ps, d = [], 2
    while d * d <= n:
        if n % d == 0:
            ps.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        ps.append(n)
    return ps


def fitting(G):
    gens = []
    for p in primes_of(G.order):
        gens += p_core(G, p).gens
    return Grp(gens, G.degree)


def normal_subgroups(G):
    classes = conj_classes(G)
    pool = {}
    for c in classes:
        s = subgroup(G, c)
        pool[tuple(s.elems)] = s
    pool[tuple([identity(G.degree)])] = Grp([], G.degree)
    while True:
        added = False
        cur = list(pool.values())
        for a in cur:
            for b in cur:
                j = Grp(a.gens + b.gens, G.degree)
                t = tuple(j.elems)
                if t not in pool:
                    pool[t] = j
                    added = True
        if not added:
            break
    return sorted(pool.values(), key=lambda s: (s.order, s.elems))


def center(G):
    return [x for x in G.elems if all(compose(x, g) == compose(g, x) for g in G.gens)]


def is_soluble(G):
    return derived_series(G)[-1].order == 1


def exponent(G):
    e = 1
    for x in G.elems:
        o = perm_order(x)
        e = e * o // gcd(e, o)
    return e


def quasisimple(G):
    if commutator_subgroup(G, G, G).order != G.order:
        return False
    Z = center(G)
    if len(Z) == G.order:
        return False
    props = [N for N in normal_subgroups(G) if set(Z) <= set(N.elems)]
    return len(props) == 2


def all_subnormal(G, memo=None):
    if memo is None:
        memo = {}
    key = tuple(G.elems)
    if key in memo:
        return memo[key]
    memo[key] = set()
    result = {}
    for N in normal_subgroups(G):
        result[tuple(N.elems)] = N
        if N.order < G.order and N.order > 1:
            for t, S in all_subnormal(N, memo).items():
                result[t] = S
    memo[key] = result
    return result


def components(G):
    out = []
    for t, S in all_subnormal(G).items():
        if S.order > 1 and quasisimple(S):
            out.append(S)
    return sorted(out, key=lambda s: (s.order, s.elems))


def fstar(G):
    gens = fitting(G).gens[:]
    for c in components(G):
        gens += c.gens
    return Grp(gens, G.degree)


def pr_star(X, Y):
    px, py = primes_of(X.order), primes_of(Y.order)
    best = Fraction(1)
    vals = {}
    for p in px:
        for q in py:
            if p == q:
                continue
            b = max(
                pr(P.elems, Q.elems)
                for P in conjugate_subgroups(X, sylow(X, p))
                for Q in conjugate_subgroups(Y, sylow(Y, q)))
            vals[(p, q)] = b
            best = min(best, b)
    return best, vals


def cycles_count(p):
    n = len(p)
    seen = [False] * n
    c = 0
    for i in range(n):
        if seen[i]:
            continue
        c += 1
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
    return c


def show(name, val):
    print(f"{name:58s} = {val}")


# ---------------------------------------------------------------------------


def main():
    S3 = Grp(*symmetric(3))
    S4 = Grp(*symmetric(4))
    S5 = Grp(*symmetric(5))
    A4 = Grp(*alternating(4))
    A5 = Grp(*alternating(5))
    D6 = Grp(*dihedral(6))
    D8 = Grp(*dihedral(8))
    D10 = Grp(*dihedral(10))
    D30 = Grp(*dihedral(30))

    print("== commuting probabilities ==")
    show("pr(S3,S3)", pr(S3.elems, S3.elems))
    show("pr(S4,S4)", pr(S4.elems, S4.elems))
    show("pr(D8,D8)", pr(D8.elems, D8.elems))
    C3inD6 = subgroup(D6, [(1, 2, 0)])
    show("pr(C3<=D6, D6)", pr(C3inD6.elems, D6.elems))
    V4 = p_core(S4, 2)
    show("|O_2(S4)|, |O_3(S4)|", (V4.order, p_core(S4, 3).order))
    C3s4 = subgroup(S4, [(1, 2, 0, 3)])
    show("pr(V4, C3) in S4", pr(V4.elems, C3s4.elems))
    show("pr(C3, Syl2(S4))", pr(C3s4.elems, sylow(S4, 2).elems))
    show("pr_star(S3,S3)", pr_star(S3, S3)[0])
    show("pr_star(S4,S4)", pr_star(S4, S4)[0])
    gsr = lower_central(S4)
    show("gamma series orders S4", [t.order for t in gsr])
    show("pr_star(gammaInf(S4), S4)", pr_star(gsr[-1], S4)[0])
    dp, dpd, _ = direct_product([(dihedral(6)[0], 3), (dihedral(10)[0], 5)])
    D6xD10 = Grp(dp, dpd)
    gI = lower_central(D6xD10)[-1]
    show("gammaInf(D6xD10) order / cyclic", (gI.order, exponent(gI) == gI.order))
    show("pr_star(gammaInf, D6xD10)", pr_star(gI, D6xD10)[0])
    show("pr_star(D6xD10, D6xD10)", pr_star(D6xD10, D6xD10)[0])

    print("== structure ==")
    show("F(S4) order", fitting(S4).order)
    show("normal subgroup orders S4", [N.order for N in normal_subgroups(S4)])
    show("normal subgroup orders D8", [N.order for N in normal_subgroups(D8)])
    show("derived series orders S4", [t.order for t in derived_series(S4)])
    show("derived series orders D8", [t.order for t in derived_series(D8)])
    show("exponent S3, D8", (exponent(S3), exponent(D8)))
    show("classes S3 sizes", [len(c) for c in conj_classes(S3)])
    show("classes S4 sizes", [len(c) for c in conj_classes(S4)])
    show("classes D10 sizes", [len(c) for c in conj_classes(D10)])
    show("ncl(S4,(12)(34)) order", normal_closure(S4, [(1, 0, 3, 2)]).order)
    show("ncl(S4,(12)) order", normal_closure(S4, [(1, 0, 2, 3)]).order)
    show("<(12)(34),(13)(24)> order",
         subgroup(S4, [(1, 0, 3, 2), (2, 3, 0, 1)]).order)
    show("[S4,S4] order", commutator_subgroup(S4, S4, S4).order)
    C3d6 = subgroup(D6, [(1, 2, 0)])
    show("[D6,C3<=D6] order", commutator_subgroup(D6, D6, C3d6).order)
    show("fstar(S4) order", fstar(S4).order)
    show("fstar(A5) order", fstar(A5).order)
    show("fstar(S5) order", fstar(S5).order)
    show("components(S5) orders", [c.order for c in components(S5)])
    show("F(D6xD10) order", fitting(D6xD10).order)

    pAS, dAS, _ = direct_product([(alternating(5)[0], 5), (symmetric(4)[0], 4)])
    GAS = Grp(pAS, dAS)
    rad = max((N for N in normal_subgroups(GAS) if is_soluble(N)),
              key=lambda n: n.order)
    show("radical(A5xS4) order", rad.order)
    pAC, dAC, _ = direct_product([(alternating(5)[0], 5), (cyclic(6)[0], 6)])
    GAC = Grp(pAC, dAC)
    show("components(A5xC6) orders", [c.order for c in components(GAC)])
    show("fstar(A5xC6) order", fstar(GAC).order)

    print("== sylow / hall ==")
    show("#syl(S3,2), #syl(S3,3)",
         (len(conjugate_subgroups(S3, sylow(S3, 2))),
          len(conjugate_subgroups(S3, sylow(S3, 3)))))
    show("#syl(S4,2), #syl(S4,3)",
         (len(conjugate_subgroups(S4, sylow(S4, 2))),
          len(conjugate_subgroups(S4, sylow(S4, 3)))))
    C15 = subgroup(D30, [tuple((i + 1) % 15 for i in range(15))])
    show("hall(D30,{3,5}) order", C15.order)
    show("exp(D8 elements orders)", sorted({perm_order(x) for x in D8.elems}))

    print("== dihedral-product family ==")
    for ps in [(3, 5), (3, 5, 7, 11)]:
        parts = [(dihedral(2 * p)[0], p) for p in ps]
        gens, deg, offs = direct_product(parts)
        G = Grp(gens, deg)
        T = lower_central(G)[-1]
        show(f"primes {ps}: |G|", G.order)
        show(f"primes {ps}: |gamma_inf| / cyclic",
             (T.order, exponent(T) == T.order))
        F = fitting(G)
        show(f"primes {ps}: |G:F|", G.order // F.order)
        for p in ps:
            P = sylow(T, p)
            v = pr(P.elems, G.elems)
            show(f"primes {ps}: pr(Syl_{p}(T), G)", v)
            assert v == Fraction(p + 1, 2 * p)
            mx = 0
            for y in P.elems:
                orb = {y}
                fr = [y]
                while fr:
                    nf = []
                    for f in fr:
                        for g in G.gens:
                            h = conj(f, g)
                            if h not in orb:
                                orb.add(h)
                                nf.append(h)
                    fr = nf
                mx = max(mx, len(orb))
            show(f"primes {ps}: max |y^G| on Syl_{p}(T)", mx)
        vals = []
        for pi, p in enumerate(ps):
            P = sylow(T, p)
            hgens = []
            for idx, q in enumerate(ps):
                off = offs[idx]
                rot = tuple((i + 1) % q for i in range(q))
                ref = tuple((q - i) % q for i in range(q))

                def emb(s, off=off, dq=q):
                    img = list(range(deg))
                    for i in range(dq):
                        img[off + i] = off + s[i]
                    return tuple(img)

                if q == p:
                    hgens.append(emb(ref))
                else:
                    hgens.append(emb(rot))
                    hgens.append(emb(ref))
            H = Grp(hgens, deg)
            assert H.order == G.order // p
            vals.append(pr(P.elems, H.elems))
        show(f"primes {ps}: Hall p' values", vals)
        show(f"primes {ps}: min Hall value", min(vals))
        P2 = sylow(G, 2)
        show(f"primes {ps}: pr(T, Syl_2(G))", pr(T.elems, P2.elems))

    print("== wreath models ==")
    for m, (tg, tn), label in [(3, symmetric(3), "C3wrS3"),
                               (3, cyclic(3), "C3wrC3")]:
        gens, deg, base_gens, top_lifts = wreath_cyclic(m, tg, tn)
        G = Grp(gens, deg)
        show(f"{label}: |G|", G.order)
        F = fitting(G)
        show(f"{label}: |F|", F.order)
        Fs = fstar(G)
        show(f"{label}: |F*|", Fs.order)
        show(f"{label}: |base|", Grp(base_gens, deg).order)
        show(f"{label}: soluble", is_soluble(G))
        if label == "C3wrS3":
            a3 = closure(alternating(3)[0], 3)
            lifts = []
            for s in a3:
                img = list(range(deg))
                for i in range(tn):
                    for j in range(m):
                        img[i * m + j] = s[i] * m + j
                lifts.append(tuple(img))
            cwa = Grp(base_gens + lifts, deg)
            show(f"{label}: |C3wrA3|", cwa.order)
            show(f"{label}: F == C3wrA3", sorted(F.elems) == cwa.elems)

    print("== wreath C_p wr S5 fixed-point values ==")
    s5 = Grp(*symmetric(5))
    for p in (7, 11):
        for q in (2, 3, 5):
            Q = sylow(s5, q)
            num = sum(p ** cycles_count(y) for y in Q.elems)
            val = Fraction(num, Q.order * p ** 5)
            show(f"p={p} q={q}: sum p^c(s) / (|Q| p^5)", val)
            assert val >= Fraction(1, 8)

    print("== pair-count confirmation p=7, q=2 (naive, in wreath) ==")
    gens, deg, base_gens, top_lifts = wreath_cyclic(7, symmetric(5)[0], 5)
    base = closure(base_gens, deg)
    q2 = sylow(s5, 2)
    lifts = []
    for s in q2.elems:
        img = list(range(deg))
        for i in range(5):
            for j in range(7):
                img[i * 7 + j] = s[i] * 7 + j
        lifts.append(tuple(img))
    cnt = commuting_pairs(base, lifts)
    show("pairs/(|P||Q|)", Fraction(cnt, len(base) * len(lifts)))

    print("== threshold comparisons p > (2/eps)^(6/eps) ==")
    for p, a, b in [(67, 1, 1), (61, 1, 1), (64, 1, 1), (70607, 5, 8),
                    (70573, 5, 8), (19697, 2, 3), (19681, 2, 3)]:
        lhs = p ** a * a ** (6 * b)
        rhs = (2 * b) ** (6 * b)
        show(f"p={p} eps={a}/{b}: p^a*a^6b > (2b)^6b", lhs > rhs)

    print("== catalog generators ==")
    emit_catalog()


def sl2_perms(q):
    vecs = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(M):
        img = [0] * len(vecs)
        for v, i in idx.items():
            w = ((v[0] * M[0][0] + v[1] * M[1][0]) % q,
                 (v[0] * M[0][1] + v[1] * M[1][1]) % q)
            img[i] = idx[w]
        return tuple(img)

    T = act([[1, 1], [0, 1]])
    S = act([[0, 1], [q - 1, 0]])
    return [T, S], len(vecs)


def quaternion_perms():
    def mul(x, y):
        sx, vx = (1 if x % 2 == 0 else -1), x // 2  # v: 0=1,1=i,2=j,3=k
        sy, vy = (1 if y % 2 == 0 else -1), y // 2
        table = {
            (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
            (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
            (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
            (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
        }
        s, v = table[(vx, vy)]
        s *= sx * sy
        return 2 * v + (0 if s == 1 else 1)

    def rho(g):
        return tuple(mul(x, g) for x in range(8))

    gi, gj = rho(2), rho(4)
    G = Grp([gi, gj], 8)
    assert G.order == 8 and exponent(G) == 4
    return [gi, gj]


def emit_catalog():
    gens, deg = sl2_perms(5)
    G = Grp(gens, deg)
    print(f"SL25 degree {deg} order {G.order}")
    for g in gens:
        print("  gen " + cycle_string(g))
    print(f"  |Z| = {len(center(G))}, "
          f"perfect = {commutator_subgroup(G, G, G).order == G.order}")
    print(f"  quasisimple = {quasisimple(G)}")
    print(f"  normal subgroup orders = {[N.order for N in normal_subgroups(G)]}")

    gens3, deg3 = sl2_perms(3)
    G3 = Grp(gens3, deg3)
    print(f"SL23 degree {deg3} order {G3.order}")
    for g in gens3:
        print("  gen " + cycle_string(g))
    print(f"  |F(SL23)| = {fitting(G3).order}, soluble = {is_soluble(G3)}")

    qg = quaternion_perms()
    print("Q8 degree 8 order 8")
    for g in qg:
        print("  gen " + cycle_string(g))

    s3q8, degq, _ = direct_product([(symmetric(3)[0], 3), (qg, 8)])
    Gq = Grp(s3q8, degq)
    print(f"S3xQ8 degree {degq} order {Gq.order}")
    for g in s3q8:
        print("  gen " + cycle_string(g))
    print(f"  |F(S3xQ8)| = {fitting(Gq).order}")

    a5c6, dega, _ = direct_product([(alternating(5)[0], 5), (cyclic(6)[0], 6)])
    Ga = Grp(a5c6, dega)
    print(f"A5xC6 degree {dega} order {Ga.order}")
    for g in a5c6:
        print("  gen " + cycle_string(g))


if __name__ == "__main__":
    main()
