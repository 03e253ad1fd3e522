#!/usr/bin/env python3
"""Regenerate doro.edges and conway_smith.edges.

Doro graph: PSL(2,25) acts on the 130 Baer sublines PG(1,5) of PG(1,25) in two
orbits of 65. Take the orbit of GF(5) u {inf}, split its pairs into orbitals and
keep the union of orbitals whose graph has intersection array {10,6,4;1,2,5}.

Conway-Smith graph: a 3-fold cover of the Kneser graph K(7,2). Voltages in Z_3 are
a 1-cocycle of the clique complex (every triangle sums to zero, so local graphs
lift to Petersen graphs) that is not a coboundary (so the cover is connected).

Both outputs are re-verified by the Rust test suite; nothing here is trusted.
Usage: python3 generate.py  (writes next to this script)
"""
import itertools
import os
from collections import deque

HERE = os.path.dirname(os.path.abspath(__file__))


# ---------------------------------------------------------------- GF(25)
# elements (a, b) = a + b t with t^2 = 2 over GF(5)
P = 5


def add(x, y):
    return ((x[0] + y[0]) % P, (x[1] + y[1]) % P)


def neg(x):
    return ((-x[0]) % P, (-x[1]) % P)


def mul(x, y):
    a, b = x
    c, d = y
    return ((a * c + 2 * b * d) % P, (a * d + b * c) % P)


ELEMS = [(a, b) for b in range(P) for a in range(P)]
ZERO, ONE = (0, 0), (1, 0)


def inv(x):
    for y in ELEMS:
        if mul(x, y) == ONE:
            return y
    raise ZeroDivisionError


INF = "inf"


def mobius(m, x):
    a, b, c, d = m
    if x == INF:
        return INF if c == ZERO else mul(a, inv(c))
    num = add(mul(a, x), b)
    den = add(mul(c, x), d)
    if den == ZERO:
        return INF
    return mul(num, inv(den))


def primitive():
    for g in ELEMS:
        if g == ZERO:
            continue
        seen, y = set(), ONE
        for _ in range(24):
            y = mul(y, g)
            seen.add(y)
        if len(seen) == 24:
            return g
    raise RuntimeError


def doro():
    w = primitive()
    w2 = mul(w, w)
    gens = [
        (ONE, ONE, ZERO, ONE),          # x + 1
        (ONE, (0, 1), ZERO, ONE),       # x + t
        (w2, ZERO, ZERO, ONE),          # w^2 x
        (ZERO, neg(ONE), ONE, ZERO),    # -1/x
    ]
    base = frozenset([INF] + [(a, 0) for a in range(P)])
    index = {base: 0}
    order = [base]
    queue = deque([base])
    while queue:
        s = queue.popleft()
        for g in gens:
            img = frozenset(mobius(g, x) for x in s)
            if img not in index:
                index[img] = len(order)
                order.append(img)
                queue.append(img)
    n = len(order)
    assert n == 65, n
    perms = [[index[frozenset(mobius(g, x) for x in s)] for s in order] for g in gens]

    # orbitals on unordered pairs
    parent = {}

    def find(p):
        while parent.setdefault(p, p) != p:
            parent[p] = parent.setdefault(parent[p], parent[p])
            p = parent[p]
        return p

    for u, v in itertools.combinations(range(n), 2):
        for pm in perms:
            a, b = sorted((pm[u], pm[v]))
            ru, rv = find((u, v)), find((a, b))
            if ru != rv:
                parent[ru] = rv
    classes = {}
    for u, v in itertools.combinations(range(n), 2):
        classes.setdefault(find((u, v)), []).append((u, v))
    orbitals = list(classes.values())
    valency = [2 * len(o) // n for o in orbitals]
    for size in range(1, len(orbitals) + 1):
        for combo in itertools.combinations(range(len(orbitals)), size):
            if sum(valency[i] for i in combo) != 10:
                continue
            edges = sorted(e for i in combo for e in orbitals[i])
            if intersection_array(n, edges) == ([10, 6, 4], [1, 2, 5]):
                return n, edges
    raise RuntimeError("no orbital union with the Doro array")


# ---------------------------------------------------------------- GF(3) cocycle
def conway_smith():
    pairs = list(itertools.combinations(range(7), 2))
    n0 = len(pairs)
    adj = [(i, j) for i, j in itertools.combinations(range(n0), 2)
           if not set(pairs[i]) & set(pairs[j])]
    eidx = {e: k for k, e in enumerate(adj)}
    tris = [(a, b, c) for a, b, c in itertools.combinations(range(n0), 3)
            if (a, b) in eidx and (b, c) in eidx and (a, c) in eidx]
    m = len(adj)
    # cocycle condition x_ab + x_bc - x_ac = 0 (mod 3)
    rows = []
    for a, b, c in tris:
        row = [0] * m
        row[eidx[(a, b)]] = 1
        row[eidx[(b, c)]] = 1
        row[eidx[(a, c)]] = 2
        rows.append(row)
    basis = nullspace_mod3(rows, m)
    coboundaries = []
    for v in range(n0):
        row = [0] * m
        for (a, b), k in eidx.items():
            if a == v:
                row[k] = 2
            elif b == v:
                row[k] = 1
        coboundaries.append(row)
    rank_cob = rank_mod3(coboundaries)
    volt = None
    for z in basis:
        if rank_mod3(coboundaries + [z]) > rank_cob:
            volt = z
            break
    assert volt is not None, "cocycles are all coboundaries"
    edges = []
    for (a, b), k in eidx.items():
        for g in range(3):
            u, w = 3 * a + g, 3 * b + (g + volt[k]) % 3
            edges.append((min(u, w), max(u, w)))
    n = 3 * n0
    edges.sort()
    assert intersection_array(n, edges) == ([10, 6, 4, 1], [1, 2, 6, 10])
    return n, edges


def rref_mod3(rows, m):
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        f = 1 if rows[r][col] == 1 else 2
        rows[r] = [(x * f) % 3 for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                g = rows[i][col]
                rows[i] = [(x - g * y) % 3 for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def rank_mod3(rows):
    return len(rref_mod3(rows, len(rows[0]))[1])


def nullspace_mod3(rows, m):
    red, pivots = rref_mod3(rows, m)
    free = [c for c in range(m) if c not in pivots]
    out = []
    for f in free:
        v = [0] * m
        v[f] = 1
        for row, p in zip(red, pivots):
            v[p] = (-row[f]) % 3
        out.append(v)
    return out


# ---------------------------------------------------------------- checks
def intersection_array(n, edges):
    nb = [set() for _ in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    b, c = None, None
    for s in range(n):
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in nb[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        if len(dist) != n:
            return None
        d = max(dist.values())
        bs, cs = [None] * (d + 1), [None] * (d + 1)
        for w, i in dist.items():
            bi = sum(1 for y in nb[w] if dist[y] == i + 1)
            ci = sum(1 for y in nb[w] if dist[y] == i - 1)
            if bs[i] is None:
                bs[i], cs[i] = bi, ci
            elif (bs[i], cs[i]) != (bi, ci):
                return None
        arr = (bs[:d], cs[1:])
        if b is None:
            b, c = arr
        elif (b, c) != arr:
            return None
    return list(b), list(c)


def write(name, n, edges, header):
    path = os.path.join(HERE, name)
    with open(path, "w") as f:
        for line in header:
            f.write(f"# {line}\n")
        f.write(f"{n} {len(edges)}\n")
        for u, v in edges:
            f.write(f"{u} {v}\n")


if __name__ == "__main__":
    n, e = doro()
    write("doro.edges", n, e, [
        "Doro graph, intersection array {10,6,4;1,2,5}",
        "vertices: PSL(2,25)-orbit of Baer sublines of PG(1,25), BFS order from GF(5)+inf",
        "generated by generate.py",
    ])
    n, e = conway_smith()
    write("conway_smith.edges", n, e, [
        "Conway-Smith graph, intersection array {10,6,4,1;1,2,6,10}",
        "vertex 3*i+g: sheet g over the i-th 2-subset of {0..6} in lexicographic order",
        "generated by generate.py",
    ])
