"""Slow, obviously-correct reference enumerations used to freeze golden values.

Nothing here imports the search code in ncsieve.ncgraph: chord sets are
grown one chord at a time with a pairwise crossing test, connectivity is a
plain union-find, and rotations are applied edge by edge.
"""

from __future__ import annotations

from itertools import combinations


def all_chords(n):
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def cross(e, f):
    (a, b), (c, d) = e, f
    return a < c < b < d or c < a < d < b


def noncrossing_sets(n, pool=None):
    """Every set of pairwise non-crossing chords from ``pool``, as sorted tuples."""
    pool = all_chords(n) if pool is None else pool
    out = []

    def grow(i, chosen):
        if i == len(pool):
            out.append(tuple(chosen))
            return
        grow(i + 1, chosen)
        e = pool[i]
        if all(not cross(e, f) for f in chosen):
            chosen.append(e)
            grow(i + 1, chosen)
            chosen.pop()

    grow(0, [])
    return out


def n_components(n, edges):
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in range(1, n + 1)})


def rotate_edges(n, edges, s):
    out = []
    for a, b in edges:
        a2, b2 = (a - 1 + s) % n + 1, (b - 1 + s) % n + 1
        out.append((min(a2, b2), max(a2, b2)))
    return tuple(sorted(out))


def is_fixed(n, edges, d):
    return rotate_edges(n, edges, n // d) == tuple(sorted(edges))


def connected_graphs(n, k=None):
    if n == 1:
        return [()] if k in (None, 0) else []
    return [
        g for g in noncrossing_sets(n)
        if n_components(n, g) == 1 and (k is None or len(g) == k)
    ]


def fixed_connected(n, k, d):
    return sum(1 for g in connected_graphs(n, k) if is_fixed(n, g, d))


def with_edge_1n(n, k):
    return sum(1 for g in connected_graphs(n, k) if (1, n) in g)


def two_components_separated(n, k):
    total = 0
    for g in noncrossing_sets(n):
        if len(g) != k or n_components(n, g) != 2:
            continue
        # 1 and n in different components: adding chord {1,n} connects them
        if n_components(n, g + ((1, n),)) == 1:
            total += 1
    return total


def antipodal_pairs(n, k):
    """Half-turn symmetric connected graphs on 2n points with k edge orbits."""
    total = 0
    for g in connected_graphs(2 * n):
        if not is_fixed(2 * n, g, 2):
            continue
        diameters = sum(1 for a, b in g if b - a == n)
        if (len(g) + diameters) // 2 == k:
            total += 1
    return total


def trees(n):
    return [g for g in connected_graphs(n) if len(g) == n - 1]


def dissections(n, k):
    pool = [(a, b) for a, b in all_chords(n) if b - a not in (1, n - 1)]
    return [g for g in noncrossing_sets(n, pool) if len(g) == k]


def forests(n, comps):
    return [g for g in noncrossing_sets(n) if len(g) == n - comps and n_components(n, g) == comps]


def any_graphs(n, k):
    return [g for g in noncrossing_sets(n) if len(g) == k]


def set_partitions(elems):
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for p in set_partitions(rest):
        yield [(first,)] + p
        for i in range(len(p)):
            yield p[:i] + [(first,) + p[i]] + p[i + 1:]


def nc_partitions(n, blocks):
    out = []
    for p in set_partitions(list(range(1, n + 1))):
        if len(p) != blocks:
            continue
        label = {v: i for i, b in enumerate(p) for v in b}
        bad = any(
            label[a] == label[c] != label[b] == label[d]
            for a, b, c, d in combinations(range(1, n + 1), 4)
        )
        if not bad:
            out.append(tuple(sorted(tuple(sorted(b)) for b in p)))
    return out


def rotate_partition(n, p, s):
    return tuple(sorted(tuple(sorted((v - 1 + s) % n + 1 for v in b)) for b in p))


def quadrangulation_count(n2):
    """Number of dissections of the n2-gon into quadrilaterals, via face sizes."""
    pool = [(a, b) for a, b in all_chords(n2) if b - a not in (1, n2 - 1)]
    total = 0
    for g in noncrossing_sets(n2, pool):
        if len(g) == n2 // 2 - 2 and all((b - a) % 2 for a, b in g):
            total += 1
    return total
