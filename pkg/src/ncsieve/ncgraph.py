"""Non-crossing graphs on labelled points of a circle, and the rotation action.

Vertices are 1..n in cyclic order.  A chord is a pair ``(a, b)`` with
``a < b``; two chords cross iff their endpoints strictly interleave.

Enumeration is a depth-first search over *units* taken in a fixed order: the
C(n, 2) chords for plain enumeration, or the orbits of chords under a
rotation subgroup when only rotation-fixed graphs are wanted.  Crossing
conflicts are precomputed as bitmasks, and the family predicate is applied
at each visited node, with early pruning for the component-counting families.
Nodes are visited in preorder, so the plain search emits graphs in
lexicographic order of their sorted edge lists.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

__all__ = [
    "Chord",
    "NcGraph",
    "NcPartition",
    "Family",
    "InvalidOrder",
    "crosses",
    "normalize",
    "is_noncrossing",
    "components",
    "enumerate_family",
    "enumerate_fixed",
    "enumerate_partitions",
    "rotate",
    "count",
    "count_by_k",
    "count_fixed",
    "fixed_by_k",
    "count_with_edge_1n",
    "count_two_components_separated",
    "count_antipodal_pairs",
    "format_graph",
    "parse_graph",
    "format_partition",
    "parse_partition",
]

Chord = tuple  # (a, b) with 1 <= a < b <= n


class InvalidOrder(ValueError):
    """The rotation order does not divide the number of vertices."""


def normalize(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def crosses(e1: Chord, e2: Chord) -> bool:
    """True iff the two chords strictly interleave.

    >>> crosses((1, 3), (2, 4)), crosses((1, 3), (3, 5)), crosses((1, 2), (3, 4))
    (True, False, False)
    """
    a, b = normalize(*e1)
    c, d = normalize(*e2)
    return a < c < b < d or c < a < d < b


def is_noncrossing(edges) -> bool:
    edges = list(edges)
    return not any(
        crosses(edges[i], edges[j])
        for i in range(len(edges))
        for j in range(i + 1, len(edges))
    )


@dataclass(frozen=True)
class NcGraph:
    """A non-crossing graph on vertices 1..n; ``edges`` is sorted and duplicate-free."""

    n: int
    edges: tuple

    def __post_init__(self):
        edges = tuple(sorted({normalize(*e) for e in self.edges}))
        for a, b in edges:
            if not 1 <= a < b <= self.n:
                raise ValueError(f"chord {(a, b)} invalid for n={self.n}")
        object.__setattr__(self, "edges", edges)

    def validate(self) -> None:
        if not is_noncrossing(self.edges):
            raise ValueError("edges cross")

    @property
    def k(self) -> int:
        return len(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return normalize(a, b) in self.edges

    def __str__(self):
        return format_graph(self)


@dataclass(frozen=True)
class NcPartition:
    """A non-crossing set partition of 1..n; blocks sorted by their minimum."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        seen = sorted(v for b in blocks for v in b)
        if seen != list(range(1, self.n + 1)) or any(not b for b in blocks):
            raise ValueError("blocks must partition 1..n into nonempty sets")
        object.__setattr__(self, "blocks", blocks)

    def is_noncrossing(self) -> bool:
        where = {v: i for i, b in enumerate(self.blocks) for v in b}
        n = self.n
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                for c in range(b + 1, n + 1):
                    if where[a] != where[c]:
                        continue
                    for d in range(c + 1, n + 1):
                        if where[b] == where[d] and where[a] != where[b]:
                            return False
        return True

    def __str__(self):
        return format_partition(self)


@dataclass(frozen=True)
class Family:
    """Which non-crossing objects to count.

    ``tag`` is one of connected, tree, forest, dissection, partition, graph;
    ``param`` holds the component count for forest and the block count for
    partition.  The internal tag ``split`` is used for two-component graphs
    separating vertices 1 and n.
    """

    tag: str
    param: int | None = None

    TAGS = ("connected", "tree", "forest", "dissection", "partition", "graph", "split")

    def __post_init__(self):
        if self.tag not in self.TAGS:
            raise ValueError(f"unknown family {self.tag!r}")
        if self.tag in ("forest", "partition") and self.param is None:
            raise ValueError(f"family {self.tag} needs a parameter")

    @classmethod
    def connected(cls):
        return cls("connected")

    @classmethod
    def tree(cls):
        return cls("tree")

    @classmethod
    def forest(cls, c: int):
        return cls("forest", c)

    @classmethod
    def dissection(cls):
        return cls("dissection")

    @classmethod
    def partition(cls, b: int):
        return cls("partition", b)

    @classmethod
    def any_graph(cls):
        return cls("graph")

    def __str__(self):
        return self.tag if self.param is None else f"{self.tag}({self.param})"


CONNECTED = Family.connected()


# -- rotation --------------------------------------------------------------

def _rot(v: int, steps: int, n: int) -> int:
    return (v - 1 + steps) % n + 1


def rotate(g, steps: int):
    """Rotate an NcGraph or NcPartition: label i goes to i + steps (mod n).

    >>> rotate(NcGraph(3, ((1, 2), (2, 3))), 1).edges
    ((1, 3), (2, 3))
    """
    n = g.n
    if isinstance(g, NcPartition):
        return NcPartition(n, tuple(tuple(_rot(v, steps, n) for v in b) for b in g.blocks))
    return NcGraph(n, tuple(normalize(_rot(a, steps, n), _rot(b, steps, n)) for a, b in g.edges))


# -- connectivity ----------------------------------------------------------

def components(n: int, edges) -> list[set]:
    """Connected components; an isolated vertex is its own component."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    comps: dict[int, set] = {}
    for v in range(1, n + 1):
        comps.setdefault(find(v), set()).add(v)
    return list(comps.values())


# -- search engine -----------------------------------------------------------

@lru_cache(maxsize=None)
def _chords(n: int, diagonals_only: bool) -> tuple:
    out = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if diagonals_only and (b - a == 1 or (a == 1 and b == n)):
                continue
            out.append((a, b))
    return tuple(out)


@lru_cache(maxsize=None)
def _units(n: int, step: int, diagonals_only: bool):
    """Search units: orbits of chords under rotation by ``step``.

    Returns (chord list, unit chord-index tuples, unit masks, unit conflict
    masks).  Orbits whose own chords cross are dropped, since no fixed graph
    can contain them.
    """
    chords = _chords(n, diagonals_only)
    index = {c: i for i, c in enumerate(chords)}
    conflict = []
    for c in chords:
        m = 0
        for j, e in enumerate(chords):
            if crosses(c, e):
                m |= 1 << j
        conflict.append(m)
    seen = set()
    units, masks, confs = [], [], []
    for i, c in enumerate(chords):
        if i in seen:
            continue
        orbit = []
        a, b = c
        while True:
            j = index[normalize(a, b)]
            if j in orbit:
                break
            orbit.append(j)
            a, b = _rot(a, step, n), _rot(b, step, n)
        seen.update(orbit)
        mask = 0
        for j in orbit:
            mask |= 1 << j
        conf = 0
        for j in orbit:
            conf |= conflict[j]
        if conf & mask:
            continue
        units.append(tuple(sorted(orbit)))
        masks.append(mask)
        confs.append(conf)
    return chords, tuple(units), tuple(masks), tuple(confs)


def _targets(family: Family, n: int):
    """(component target, acyclic?) for component-counting families."""
    tag = family.tag
    if tag in ("connected", "tree"):
        return 1, tag == "tree"
    if tag == "forest":
        return family.param, True
    if tag == "split":
        return 2, False
    return None, False


def _search(n: int, family: Family, k: int | None = None, step: int = 0) -> Iterator[tuple]:
    """Yield ``(chord_mask, edge_count)`` for every accepted node.

    ``step = 0`` searches all graphs; otherwise only graphs fixed under
    rotation by ``step`` are reached.  With ``k`` given, only graphs with
    exactly k edges are yielded.
    """
    if family.tag == "partition":
        raise ValueError("partitions are not graphs; use enumerate_partitions")
    chords, units, umasks, uconfs = _units(n, step or n, family.tag == "dissection")
    sizes = [len(u) for u in units]
    first = [chords[u[0]][0] for u in units]
    target, acyclic = _targets(family, n)
    # vertex-boundary pruning needs units sorted by single chords
    boundary = target is not None and (step == 0 or step % n == 0)
    nu = len(units)
    kmax = k
    if target is not None and acyclic:
        kmax = n - target if k is None else min(k, n - target)
        if k is not None and k != n - target:
            return
    split = family.tag == "split"

    # each vertex starts as its own component labelled by itself (0-based labels)
    stack = [(0, 0, 0, tuple(range(n)), tuple(range(n)), n, 0)]
    while stack:
        start, chosen, blocked, comp, cmax, ncomp, edges = stack.pop()
        if (k is None or edges == k) and (target is None or ncomp == target):
            if not split or comp[0] != comp[n - 1]:
                yield chosen, edges
        if kmax is not None and edges >= kmax:
            continue
        children = []
        for j in range(start, nu):
            m = umasks[j]
            if blocked & m:
                continue
            ne = edges + sizes[j]
            if kmax is not None and ne > kmax:
                continue
            if boundary and target == 1:
                a = first[j] - 1
                dead = False
                for v in range(a):
                    if cmax[comp[v]] < a:
                        dead = True
                        break
                if dead:
                    break
            elif boundary:
                a = first[j] - 1
                closed = 0
                labels = set()
                for v in range(a):
                    lab = comp[v]
                    if cmax[lab] < a and lab not in labels:
                        labels.add(lab)
                        closed += 1
                if closed > target - 1:
                    break
                if split and closed and comp[0] not in labels:
                    break
            c2, m2, nc2 = comp, cmax, ncomp
            cyclic = False
            for ci in units[j]:
                a, b = chords[ci]
                la, lb = c2[a - 1], c2[b - 1]
                if la == lb:
                    cyclic = True
                    continue
                lo, hi = (la, lb) if la < lb else (lb, la)
                c2 = tuple(lo if x == hi else x for x in c2)
                top = m2[la] if m2[la] > m2[lb] else m2[lb]
                m2 = m2[:lo] + (top,) + m2[lo + 1:]
                nc2 -= 1
            if acyclic and cyclic:
                continue
            if target is not None and k is not None and nc2 - target > k - ne:
                continue
            children.append((j + 1, chosen | m, blocked | uconfs[j], c2, m2, nc2, ne))
        children.reverse()
        stack.extend(children)


def _mask_to_graph(n: int, mask: int, chords) -> NcGraph:
    edges = []
    j = 0
    while mask:
        if mask & 1:
            edges.append(chords[j])
        mask >>= 1
        j += 1
    return NcGraph(n, tuple(edges))


def enumerate_family(n: int, k: int | None, family: Family) -> Iterator:
    """Stream every member of ``family`` on n vertices with k edges, in lexicographic order.

    For the partition family ``k`` is ignored and NcPartitions are produced;
    for tree and forest, ``k`` may be None (it is forced by n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if family.tag == "partition":
        yield from enumerate_partitions(n, family.param)
        return
    chords = _chords(n, family.tag == "dissection")
    for mask, _ in _search(n, family, k):
        yield _mask_to_graph(n, mask, chords)


def enumerate_fixed(n: int, k: int | None, d: int, family: Family) -> Iterator:
    """Members of ``family`` fixed under rotation by n/d steps (order d)."""
    _check_order(n, d)
    if family.tag == "partition":
        for p in enumerate_partitions(n, family.param):
            if rotate(p, n // d) == p:
                yield p
        return
    if d == 1:
        yield from enumerate_family(n, k, family)
        return
    chords = _chords(n, family.tag == "dissection")
    graphs = [_mask_to_graph(n, mask, chords) for mask, _ in _search(n, family, k, n // d)]
    yield from sorted(graphs, key=lambda g: g.edges)


def _check_order(n: int, d: int) -> None:
    if d < 1 or n % d:
        raise InvalidOrder(f"d={d} does not divide n={n}")


def enumerate_partitions(n: int, blocks: int | None = None) -> Iterator[NcPartition]:
    """Non-crossing partitions of 1..n (optionally with a given block count), sorted."""
    out = [NcPartition(n, p) for p in _nc_partitions(1, n) if blocks is None or len(p) == blocks]
    yield from sorted(out, key=lambda p: p.blocks)


@lru_cache(maxsize=None)
def _nc_partitions(lo: int, hi: int) -> tuple:
    # the block holding lo is {lo = b0 < b1 < ... }; gaps between consecutive
    # block elements (and after the last) are filled independently
    if lo > hi:
        return ((),)
    out = []
    rest = list(range(lo + 1, hi + 1))
    for r in range(len(rest) + 1):
        for pick in combinations(rest, r):
            block = (lo,) + pick
            bounds = list(block) + [hi + 1]
            parts = [()]
            for x, y in zip(bounds, bounds[1:]):
                parts = [p + q for p in parts for q in _nc_partitions(x + 1, y - 1)]
            out.extend((block,) + p for p in parts)
    return tuple(out)


# -- counters --------------------------------------------------------------

@lru_cache(maxsize=None)
def count_by_k(n: int, family: Family) -> dict:
    """Counts of family members on n vertices keyed by edge count, in one search pass.

    For the partition family the key is the block count.
    """
    if family.tag == "partition":
        return dict(Counter(len(p) for p in _nc_partitions(1, n) if len(p) == family.param))
    return dict(Counter(e for _, e in _search(n, family)))


@lru_cache(maxsize=None)
def fixed_by_k(n: int, d: int, family: Family) -> dict:
    """Rotation-fixed counts (order d) keyed by edge count."""
    _check_order(n, d)
    if family.tag == "partition":
        c = sum(1 for _ in enumerate_fixed(n, None, d, family))
        return {family.param: c} if c else {}
    if d == 1:
        return count_by_k(n, family)
    return dict(Counter(e for _, e in _search(n, family, None, n // d)))


def count(n: int, k: int | None, family: Family) -> int:
    """Number of family members with k edges (k ignored for partitions)."""
    if family.tag == "partition":
        return count_by_k(n, family).get(family.param, 0)
    if k is None:
        k = _forced_k(n, family)
    return count_by_k(n, family).get(k, 0)


def count_fixed(n: int, k: int | None, d: int, family: Family = CONNECTED) -> int:
    """Number of members with k edges fixed under rotation by 2*pi/d."""
    _check_order(n, d)
    if family.tag == "partition":
        return fixed_by_k(n, d, family).get(family.param, 0)
    if k is None:
        k = _forced_k(n, family)
    return fixed_by_k(n, d, family).get(k, 0)


def _forced_k(n: int, family: Family) -> int:
    if family.tag == "tree":
        return n - 1
    if family.tag == "forest":
        return n - family.param
    raise ValueError(f"family {family} needs an explicit edge count")


@lru_cache(maxsize=None)
def _edge_1n_by_k(n: int) -> dict:
    chords = _chords(n, False)
    bit = 1 << chords.index((1, n))
    return dict(Counter(e for mask, e in _search(n, CONNECTED) if mask & bit))


def count_with_edge_1n(n: int, k: int) -> int:
    """Connected non-crossing graphs on n vertices with k edges containing chord {1, n}."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return _edge_1n_by_k(n).get(k, 0)


def count_two_components_separated(n: int, k: int) -> int:
    """Non-crossing graphs with k edges, exactly two components, 1 and n apart."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return count(n, k, Family("split"))


@lru_cache(maxsize=None)
def _antipodal_by_orbits(n: int) -> dict:
    chords = _chords(2 * n, False)
    out: Counter = Counter()
    for mask, e in _search(2 * n, CONNECTED, None, n):
        g = _mask_to_graph(2 * n, mask, chords)
        diam = sum(1 for a, b in g.edges if b - a == n)
        out[(e + diam) // 2] += 1
    return dict(out)


def count_antipodal_pairs(n: int, k: int) -> int:
    """Half-turn symmetric connected graphs on 2n vertices with k edge orbits."""
    if n < 1:
        raise ValueError("n must be positive")
    return _antipodal_by_orbits(n).get(k, 0)


# -- text formats ----------------------------------------------------------

def format_graph(g: NcGraph) -> str:
    """``n=6; 1-2 2-3 ...``"""
    return " ".join([f"n={g.n};"] + [f"{a}-{b}" for a, b in g.edges])


def parse_graph(text: str) -> NcGraph:
    m = re.fullmatch(r"\s*n=(\d+);\s*(.*?)\s*", text)
    if not m:
        raise ValueError(f"bad graph line: {text!r}")
    edges = [tuple(int(x) for x in tok.split("-")) for tok in m.group(2).split()]
    g = NcGraph(int(m.group(1)), tuple(edges))
    g.validate()
    return g


def format_partition(p: NcPartition) -> str:
    """``n=4; {1,4}{2,3}``"""
    return f"n={p.n}; " + "".join("{" + ",".join(map(str, b)) + "}" for b in p.blocks)


def parse_partition(text: str) -> NcPartition:
    m = re.fullmatch(r"\s*n=(\d+);\s*((?:\{[\d,]*\})*)\s*", text)
    if not m:
        raise ValueError(f"bad partition line: {text!r}")
    blocks = [tuple(int(x) for x in b.split(",")) for b in re.findall(r"\{([\d,]*)\}", m.group(2))]
    return NcPartition(int(m.group(1)), tuple(blocks))
