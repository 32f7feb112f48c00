"""Bijections between non-crossing structures.

* spanning trees on n points  <->  quadrangulations of a 2n-gon
* half-turn symmetric graphs with a diameter  <->  graphs on n/2 + 1 points
  containing the chord {1, n/2 + 1}  (and the analogous map for a central
  d-gon under rotation of order d)
* rotation-fixed graphs of order d >= 3 without a central d-gon  <->
  half-turn symmetric graphs on 2n/d points

Faces of a polygon cut by non-crossing chords are computed by successive
splitting of vertex cycles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ncgraph import NcGraph, components, enumerate_family, Family, is_noncrossing, normalize, rotate

__all__ = [
    "Quadrangulation",
    "MalformedQuadrangulation",
    "NotSpanningTree",
    "PreconditionViolated",
    "CentralPolygonPresent",
    "polygon_faces",
    "quad_to_tree",
    "tree_to_quad",
    "enumerate_quadrangulations",
    "central_face",
    "has_central_polygon",
    "fold_diameter",
    "unfold_diameter",
    "fold_central",
    "unfold_central",
    "fold_d",
    "unfold_d",
    "format_quadrangulation",
    "parse_quadrangulation",
]


class MalformedQuadrangulation(ValueError):
    """A face is not a quadrilateral with one odd-odd diagonal."""


class NotSpanningTree(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class CentralPolygonPresent(PreconditionViolated):
    """The rotation-fixed graph has a central d-gon; use the central-polygon fold."""


def _is_side(a: int, b: int, n: int) -> bool:
    a, b = normalize(a, b)
    return b - a == 1 or (a == 1 and b == n)


def polygon_faces(n: int, chords) -> list[tuple]:
    """Faces of the n-gon cut by non-crossing chords, as vertex cycles.

    Chords that are polygon sides are ignored.

    >>> sorted(polygon_faces(6, [(3, 6)]))
    [(3, 4, 5, 6), (6, 1, 2, 3)]
    """
    faces = [tuple(range(1, n + 1))]
    for a, b in chords:
        if _is_side(a, b, n):
            continue
        for idx, f in enumerate(faces):
            if a in f and b in f:
                i, j = f.index(a), f.index(b)
                if i > j:
                    i, j = j, i
                if j - i in (1, len(f) - 1):
                    continue
                faces[idx] = f[i:j + 1]
                faces.append(f[j:] + f[:i + 1])
                break
        else:
            raise ValueError(f"chord {(a, b)} does not split any face")
    return faces


def _face_sides(f: tuple):
    return [normalize(f[i], f[(i + 1) % len(f)]) for i in range(len(f))]


# -- quadrangulations --------------------------------------------------------

@dataclass(frozen=True)
class Quadrangulation:
    """Quadrangulation of an ``n2``-gon given by its sorted diagonals."""

    n2: int
    diagonals: tuple

    def __post_init__(self):
        object.__setattr__(self, "diagonals", tuple(sorted(normalize(*e) for e in self.diagonals)))

    def faces(self) -> list[tuple]:
        return polygon_faces(self.n2, self.diagonals)

    def validate(self) -> None:
        n2 = self.n2
        if n2 < 4 or n2 % 2:
            raise MalformedQuadrangulation("polygon must have an even number >= 4 of vertices")
        if any(_is_side(a, b, n2) or not 1 <= a < b <= n2 for a, b in self.diagonals):
            raise MalformedQuadrangulation("diagonal is a side or out of range")
        if len(set(self.diagonals)) != len(self.diagonals) or not is_noncrossing(self.diagonals):
            raise MalformedQuadrangulation("diagonals repeat or cross")
        if len(self.diagonals) != n2 // 2 - 2:
            raise MalformedQuadrangulation(f"need {n2 // 2 - 2} diagonals")
        if any(len(f) != 4 for f in self.faces()):
            raise MalformedQuadrangulation("a face is not a quadrilateral")

    def __str__(self):
        return format_quadrangulation(self)


def quad_to_tree(q: Quadrangulation) -> NcGraph:
    """Each face's odd-odd diagonal (2i-1, 2j-1) becomes tree edge {i, j}.

    >>> quad_to_tree(Quadrangulation(6, ((3, 6),))).edges
    ((1, 2), (2, 3))
    """
    q.validate()
    edges = []
    for f in q.faces():
        odd = [i for i, v in enumerate(f) if v % 2]
        if len(odd) != 2 or odd[1] - odd[0] != 2:
            raise MalformedQuadrangulation(f"face {f} has no odd-odd diagonal")
        a, b = f[odd[0]], f[odd[1]]
        edges.append(normalize((a + 1) // 2, (b + 1) // 2))
    return NcGraph(q.n2 // 2, tuple(edges))


def _check_spanning_tree(t: NcGraph) -> None:
    if t.n < 2:
        raise NotSpanningTree("need at least 2 vertices")
    if t.k != t.n - 1 or len(components(t.n, t.edges)) != 1:
        raise NotSpanningTree(f"{t} is not a spanning tree")
    if not is_noncrossing(t.edges):
        raise NotSpanningTree(f"{t} has crossing edges")


def tree_to_quad(t: NcGraph) -> Quadrangulation:
    """Inverse of :func:`quad_to_tree`.

    Tree edge {i, j} is drawn as the chord (2i-1, 2j-1) of the 2n-gon.  Each
    such chord borders two faces of the resulting subdivision, and each of
    those faces holds exactly one even vertex; the chord's endpoints together
    with those two even vertices are the corners of its quadrilateral.
    """
    _check_spanning_tree(t)
    n2 = 2 * t.n
    dotted = [(2 * a - 1, 2 * b - 1) for a, b in t.edges]
    faces = polygon_faces(n2, dotted)
    diagonals = set()
    for a, b in dotted:
        corners = []
        for f in faces:
            if (a, b) not in _face_sides(f):
                continue
            evens = [v for v in f if v % 2 == 0]
            if len(evens) != 1:
                raise AssertionError(f"face {f} next to chord {(a, b)} has {len(evens)} even vertices")
            corners.append(evens[0])
        if len(corners) != 2:
            raise AssertionError(f"chord {(a, b)} borders {len(corners)} faces")
        for e in corners:
            for v in (a, b):
                if not _is_side(v, e, n2):
                    diagonals.add(normalize(v, e))
    q = Quadrangulation(n2, tuple(diagonals))
    q.validate()
    return q


def enumerate_quadrangulations(n2: int):
    """All quadrangulations of the n2-gon, found among its dissections."""
    for g in enumerate_family(n2, n2 // 2 - 2, Family.dissection()):
        if all(len(f) == 4 for f in polygon_faces(n2, g.edges)):
            yield Quadrangulation(n2, g.edges)


def format_quadrangulation(q: Quadrangulation) -> str:
    """``n2=10; diag 1-4 4-7 7-10``"""
    return " ".join([f"n2={q.n2}; diag"] + [f"{a}-{b}" for a, b in q.diagonals])


def parse_quadrangulation(text: str) -> Quadrangulation:
    m = re.fullmatch(r"\s*n2=(\d+);\s*diag\s*(.*?)\s*", text)
    if not m:
        raise ValueError(f"bad quadrangulation line: {text!r}")
    diags = [tuple(int(x) for x in tok.split("-")) for tok in m.group(2).split()]
    q = Quadrangulation(int(m.group(1)), tuple(diags))
    q.validate()
    return q


# -- the centre of the polygon -------------------------------------------------

def central_face(g: NcGraph):
    """The face of the polygon subdivision by g's chords that contains the centre.

    A chord with arcs of b - a and n - (b - a) edges leaves the centre on the
    side of the longer arc; the central face is the face lying on that side
    of every chord.  Returns None when the centre lies on a diameter.
    """
    n = g.n
    chords = [e for e in g.edges if not _is_side(*e, n)]
    sides = []
    for a, b in chords:
        inner = b - a
        if 2 * inner == n:
            return None
        if 2 * inner > n:
            sides.append(set(range(a, b + 1)))
        else:
            sides.append(set(range(b, n + 1)) | set(range(1, a + 1)))
    for f in polygon_faces(n, chords):
        if all(set(f) <= s for s in sides):
            return f
    raise AssertionError("no face contains the centre")


def has_central_polygon(g: NcGraph, d: int) -> bool:
    """True iff the centre lies inside a d-gon whose sides are all edges of g."""
    f = central_face(g)
    if f is None or len(f) != d:
        return False
    return all(s in g.edges for s in _face_sides(f))


def _check_fixed(g: NcGraph, d: int) -> None:
    if d < 2 or g.n % d:
        raise PreconditionViolated(f"order d={d} must be >= 2 and divide n={g.n}")
    if rotate(g, g.n // d) != g:
        raise PreconditionViolated(f"graph is not fixed under rotation by {g.n // d}")
    if len(components(g.n, g.edges)) != 1:
        raise PreconditionViolated("graph is not connected")


def fold_central(g: NcGraph, d: int) -> NcGraph:
    """Restrict a fixed graph whose central d-gon passes through vertex 1 to 1..n/d + 1.

    For d = 2 the central "2-gon" is the diameter {1, n/2 + 1}.
    """
    _check_fixed(g, d)
    m = g.n // d
    if not g.has_edge(1, m + 1):
        raise PreconditionViolated(f"edge {{1, {m + 1}}} missing")
    if d > 2 and not has_central_polygon(g, d):
        raise PreconditionViolated("no central d-gon")
    return NcGraph(m + 1, tuple(e for e in g.edges if e[1] <= m + 1))


def unfold_central(h: NcGraph, d: int) -> NcGraph:
    """Inverse of :func:`fold_central`: replicate h around the circle."""
    m = h.n - 1
    if m < 1 or not h.has_edge(1, m + 1):
        raise PreconditionViolated(f"edge {{1, {h.n}}} missing")
    n = d * m
    base = NcGraph(n, h.edges)
    edges = set()
    for t in range(d):
        edges.update(rotate(base, t * m).edges)
    return NcGraph(n, tuple(edges))


def fold_diameter(g: NcGraph) -> NcGraph:
    """Half-turn symmetric graph with diameter {1, n/2 + 1} and odd edge count -> its half.

    >>> fold_diameter(NcGraph(4, ((1, 3), (1, 2), (3, 4)))).edges
    ((1, 2), (1, 3))
    """
    if g.n % 2:
        raise PreconditionViolated("n must be even")
    if g.k % 2 == 0:
        raise PreconditionViolated("edge count must be odd")
    return fold_central(g, 2)


def unfold_diameter(h: NcGraph) -> NcGraph:
    return unfold_central(h, 2)


def fold_d(g: NcGraph, d: int) -> NcGraph:
    """Fold a graph fixed under rotation of order d >= 3 onto 2n/d points.

    With blocks of n/d consecutive vertices, edges inside the first two
    blocks are kept and an edge from block 2 to block 3 (i_2 to j_3) becomes
    the edge i_2 to j_1.

    >>> fold_d(NcGraph(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6))), 3).edges
    ((1, 2), (1, 4), (2, 3), (3, 4))
    """
    if d < 3:
        raise PreconditionViolated("fold_d needs d >= 3")
    _check_fixed(g, d)
    if has_central_polygon(g, d):
        raise CentralPolygonPresent("centre lies in a d-gon of edges")
    m = g.n // d
    edges = []
    for a, b in g.edges:
        if b <= 2 * m:
            edges.append((a, b))
        elif m < a <= 2 * m < b <= 3 * m:
            edges.append((b - 2 * m, a))
    return NcGraph(2 * m, tuple(edges))


def unfold_d(h: NcGraph, d: int) -> NcGraph:
    """Inverse of :func:`fold_d`."""
    if h.n % 2 or d < 3:
        raise PreconditionViolated("need an even vertex count and d >= 3")
    m = h.n // 2
    reps = []
    for x, y in h.edges:
        if y <= m or x > m:
            reps.append((x, y))
            continue
        j, i = x, y - m
        if i < j:
            reps.append((x, y))
        elif i > j:
            reps.append((y, 2 * m + x))
        else:
            raise PreconditionViolated(f"diameter {(x, y)} cannot come from a fold")
    base = NcGraph(d * m, tuple(reps))
    edges = set()
    for t in range(d):
        edges.update(rotate(base, t * m).edges)
    return NcGraph(d * m, tuple(edges))
