"""Brute-force reference values for the C++ test suites.

Independent of the C++ engine: closure enumeration for groups, networkx
maximal-clique enumeration for intersecting sets, numpy for spectra.
Points are 0-based; composition (p*q)(x) = p(q(x)).
"""
import itertools
import networkx as nx


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def closure(gens):
    n = len(gens[0])
    e = tuple(range(n))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def cyc(n, *cycles):
    p = list(range(n))
    for c in cycles:
        for i, a in enumerate(c):
            p[a - 1] = c[(i + 1) % len(c)] - 1
    return tuple(p)


def coset_action(G, H):
    Hs = set(H)
    index = {}
    reps = []
    for x in G:
        if x in index:
            continue
        k = len(reps)
        reps.append(x)
        for h in H:
            index[compose(x, h)] = k
    return index, reps


def fixes_point(g, index, reps):
    return any(index[compose(g, r)] == k for k, r in enumerate(reps))


def image(g, index, reps):
    return tuple(index[compose(g, r)] for r in reps)


def analyze(G, H):
    index, reps = coset_action(G, H)
    imgs = sorted({image(g, index, reps) for g in G})
    n = len(reps)
    fix = [g for g in imgs if any(g[i] == i for i in range(n))]
    fixset = set(fix)
    e = tuple(range(n))
    verts = [g for g in fix if g != e]
    graph = nx.Graph()
    graph.add_nodes_from(range(len(verts)))
    for i, j in itertools.combinations(range(len(verts)), 2):
        if compose(verts[i], inverse(verts[j])) in fixset:
            graph.add_edge(i, j)
    cliques = [c for c in nx.find_cliques(graph)]
    best = max((len(c) for c in cliques), default=0)
    maxsets = [frozenset([e] + [verts[i] for i in c]) for c in cliques if len(c) == best]
    if not verts:
        maxsets = [frozenset([e])]
    kernel = len(G) // len(imgs)
    return dict(degree=n, quotient_order=len(imgs), kernel=kernel,
                fixers=len(fix), max_size=(best + 1) * kernel,
                num_max_sets=len(maxsets))


def subgroups_up_to_conjugacy(G):
    Gset = set(G)
    cyclic = {frozenset(closure([g])) for g in G}
    subs = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for A in frontier:
            for B in cyclic:
                if B <= A:
                    continue
                C = frozenset(closure(sorted(A | B)))
                if C not in subs:
                    new.add(C)
        subs |= new
        frontier = new
    classes = []
    seen = set()
    for S in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if S in seen:
            continue
        conj = {frozenset(compose(compose(g, s), inverse(g)) for s in S) for g in G}
        seen |= conj
        classes.append(sorted(S))
    return classes


if __name__ == "__main__":
    S4 = closure([cyc(4, (1, 2)), cyc(4, (1, 2, 3, 4))])
    S5 = closure([cyc(5, (1, 2)), cyc(5, (1, 2, 3, 4, 5))])
    A4 = closure([cyc(4, (1, 2, 3)), cyc(4, (1, 2), (3, 4))])
    A5 = closure([cyc(5, (1, 2, 3, 4, 5)), cyc(5, (1, 2, 3))])
    print("orders S4 A5", len(S4), len(A5))
    D12 = closure([cyc(5, (1, 2, 3)), cyc(5, (1, 2)), cyc(5, (4, 5))])
    Z2 = closure([cyc(4, (1, 2), (3, 4))])
    print("A4/Z2", analyze(A4, Z2))
    print("S5/D12", analyze(S5, D12))
    stab4 = [g for g in S4 if g[3] == 3]
    print("S4 natural", analyze(S4, stab4))
    stab5 = [g for g in S5 if g[4] == 4]
    print("S5 natural", analyze(S5, stab5))
    for H in subgroups_up_to_conjugacy(A5):
        print("A5 subgroup order", len(H), analyze(A5, H))
    # S3 wr S2 on 9 points, product action; (a,b) -> 3a+b
    def wr(t1, t2):
        return tuple(3 * t1[a] + t2[b] for a in range(3) for b in range(3))
    e3 = (0, 1, 2)
    gens = [wr(cyc(3, (1, 2)), e3), wr(cyc(3, (1, 2, 3)), e3), wr(e3, cyc(3, (1, 2))),
            wr(e3, cyc(3, (1, 2, 3))), tuple(3 * b + a for a in range(3) for b in range(3))]
    W = closure(gens)
    stabW = [g for g in W if g[0] == 0]
    print("S3wrS2", len(W), analyze(W, stabW))
    # F20 = AGL(1,5)
    F20 = closure([tuple((x + 1) % 5 for x in range(5)), tuple((2 * x) % 5 for x in range(5))])
    print("F20", len(F20), analyze(F20, [g for g in F20 if g[0] == 0]))
    # Q8 regular
    # quaternion units as (sign, unit) unit in {1,i,j,k}
    mult = {('1', u): (1, u) for u in '1ijk'}
    mult.update({(u, '1'): (1, u) for u in '1ijk'})
    mult.update({('i', 'i'): (-1, '1'), ('j', 'j'): (-1, '1'), ('k', 'k'): (-1, '1'),
                 ('i', 'j'): (1, 'k'), ('j', 'k'): (1, 'i'), ('k', 'i'): (1, 'j'),
                 ('j', 'i'): (-1, 'k'), ('k', 'j'): (-1, 'i'), ('i', 'k'): (-1, 'j')})
    elems = [(s, u) for s in (1, -1) for u in '1ijk']
    def qmul(a, b):
        s, u = mult[(a[1], b[1])]
        return (a[0] * b[0] * s, u)
    def left(x):
        return tuple(elems.index(qmul(x, y)) for y in elems)
    Q8 = closure([left((1, 'i')), left((1, 'j'))])
    D4 = closure([cyc(4, (1, 2, 3, 4)), cyc(4, (1, 3))])
    # Heisenberg mod 3 acting on F_3^2: (u,v) -> (u + a v + c, v + b)
    def heis(a, b, c):
        return tuple(((u + a * v + c) % 3) * 3 + (v + b) % 3 for u in range(3) for v in range(3))
    He = closure([heis(1, 0, 0), heis(0, 1, 0), heis(0, 0, 1)])
    for name, grp in (("Q8", Q8), ("D4", D4), ("He27", He)):
        subs = subgroups_up_to_conjugacy(grp)
        print(name, len(grp), "subgroups up to conj", len(subs))
        for H in subs:
            print("  ", len(H), analyze(grp, H))
