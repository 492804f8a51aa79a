"""Triangulated and dissected polygons.

Vertices are labelled ``1..n`` cyclically (``v_{i+n} = v_i``).  A diagonal is
stored as a sorted pair ``(a, b)`` with ``a < b``.  The entries of the
Conway-Coxeter frieze attached to a triangulation are recovered three ways
(vertex tags, admissible paths, Ptolemy lengths), and the same path counts
fill the symmetric matrices whose determinants are computed at the end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import InvalidDissection, InvalidTriangulation, NotAQuiddity, OutOfRange
from .exact import Matrix, determinant, to_rational

Edge = Tuple[int, int]


def _norm(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def crosses(d1: Edge, d2: Edge) -> bool:
    """Two chords of a convex polygon cross iff their endpoints interleave."""
    a, b = d1
    c, d = d2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _is_side(n: int, a: int, b: int) -> bool:
    return (b - a) % n in (1, n - 1)


def _check_diagonals(n: int, diagonals: Iterable[Edge], exc) -> Tuple[Edge, ...]:
    if n < 3:
        raise exc("a polygon needs at least three vertices")
    out = set()
    for a, b in diagonals:
        a, b = int(a), int(b)
        if not (1 <= a <= n and 1 <= b <= n) or a == b:
            raise exc(f"bad diagonal ({a}, {b})")
        if _is_side(n, a, b):
            raise exc(f"({a}, {b}) joins adjacent vertices")
        out.add(_norm(a, b))
    diags = tuple(sorted(out))
    for d1, d2 in combinations(diags, 2):
        if crosses(d1, d2):
            raise exc(f"diagonals {d1} and {d2} cross")
    return diags


def _cells(n: int, diagonals: Sequence[Edge]) -> Tuple[Tuple[int, ...], ...]:
    """Faces of the dissection, each as a sorted vertex tuple."""
    cells = [tuple(range(1, n + 1))]
    for a, b in diagonals:
        for idx, cell in enumerate(cells):
            if a in cell and b in cell:
                inner = tuple(v for v in cell if a <= v <= b)
                outer = tuple(v for v in cell if v <= a or v >= b)
                cells[idx:idx + 1] = [inner, outer]
                break
    return tuple(sorted(cells))


@dataclass(frozen=True)
class Dissection:
    n: int
    diagonals: Tuple[Edge, ...]
    cells: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False)

    @classmethod
    def make(cls, n: int, diagonals: Iterable[Edge] = ()) -> "Dissection":
        diags = _check_diagonals(n, diagonals, InvalidDissection)
        cells = _cells(n, diags)
        if sum(len(c) - 2 for c in cells) != n - 2:
            raise InvalidDissection("cell sizes are inconsistent")
        return cls(n, diags, cells)

    @classmethod
    def from_cells(cls, n: int, cells: Iterable[Sequence[int]]) -> "Dissection":
        """Rebuild from a list of cells (each a cyclic list of vertices)."""
        diags = set()
        for cell in cells:
            vs = sorted(int(v) for v in cell)
            if len(vs) < 3:
                raise InvalidDissection(f"cell {cell} has fewer than three vertices")
            for a, b in zip(vs, vs[1:] + vs[:1]):
                if not _is_side(n, a, b):
                    diags.add(_norm(a, b))
        D = cls.make(n, diags)
        if sorted(tuple(sorted(int(v) for v in c)) for c in cells) != list(D.cells):
            raise InvalidDissection("cells do not tile the polygon")
        return D

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def to_json(self) -> dict:
        return {"kind": "dissection", "n": self.n,
                "diagonals": [list(d) for d in self.diagonals],
                "cells": [list(c) for c in self.cells]}


@dataclass(frozen=True)
class Triangulation:
    n: int
    diagonals: Tuple[Edge, ...]

    @classmethod
    def make(cls, n: int, diagonals: Iterable[Edge] = ()) -> "Triangulation":
        diags = _check_diagonals(n, diagonals, InvalidTriangulation)
        if len(diags) != n - 3:
            raise InvalidTriangulation(f"a triangulation of an {n}-gon has {n - 3} diagonals, got {len(diags)}")
        return cls(n, diags)

    @property
    def triangles(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple(c for c in _cells(self.n, self.diagonals))

    def edges(self) -> FrozenSet[Edge]:
        sides = {_norm(i, i % self.n + 1) for i in range(1, self.n + 1)}
        return frozenset(sides | set(self.diagonals))

    def as_dissection(self) -> Dissection:
        return Dissection.make(self.n, self.diagonals)

    def to_json(self) -> dict:
        return {"kind": "triangulation", "n": self.n, "diagonals": [list(d) for d in self.diagonals]}

    @classmethod
    def from_json(cls, data: dict) -> "Triangulation":
        return cls.make(int(data["n"]), [tuple(d) for d in data.get("diagonals", [])])


# ----------------------------------------------------------------- enumeration

def _triangulate(verts: Tuple[int, ...]) -> List[Tuple[Edge, ...]]:
    """All triangulations of the convex polygon on ``verts`` (in cyclic order)."""
    return list(_triangulate_cached(verts))


@lru_cache(maxsize=None)
def _triangulate_cached(verts: Tuple[int, ...]) -> Tuple[Tuple[Edge, ...], ...]:
    if len(verts) < 4:
        return ((),)
    first, last = verts[0], verts[-1]
    out = []
    for k in range(1, len(verts) - 1):
        apex = verts[k]
        extra = []
        if k > 1:
            extra.append(_norm(first, apex))
        if k < len(verts) - 2:
            extra.append(_norm(apex, last))
        for left in _triangulate_cached(verts[:k + 1]):
            for right in _triangulate_cached(verts[k:]):
                out.append(tuple(sorted(set(left) | set(right) | set(extra))))
    return tuple(out)


def enumerate_triangulations(n: int) -> List[Triangulation]:
    if not 3 <= n <= 12:
        raise OutOfRange("enumerate_triangulations supports 3 <= n <= 12")
    found = sorted(set(_triangulate_cached(tuple(range(1, n + 1)))))
    return [Triangulation(n, d) for d in found]


def enumerate_dissections(n: int) -> List[Dissection]:
    """Every set of pairwise non-crossing diagonals (including the empty one)."""
    if not 3 <= n <= 12:
        raise OutOfRange("enumerate_dissections supports 3 <= n <= 12")
    diags = [(a, b) for a in range(1, n + 1) for b in range(a + 2, n + 1) if not _is_side(n, a, b)]
    out = []

    def rec(start: int, chosen: List[Edge]):
        out.append(tuple(chosen))
        for idx in range(start, len(diags)):
            d = diags[idx]
            if all(not crosses(d, c) for c in chosen):
                chosen.append(d)
                rec(idx + 1, chosen)
                chosen.pop()

    rec(0, [])
    return [Dissection(n, d, _cells(n, d)) for d in sorted(out)]


def catalan(k: int) -> int:
    from math import comb

    return comb(2 * k, k) // (k + 1)


# ------------------------------------------------------------ Conway-Coxeter map

def quiddity_of_triangulation(T: Triangulation) -> Tuple[int, ...]:
    """a_i = number of triangles at v_i, listed for i = 1..n."""
    counts = [1] * T.n
    for a, b in T.diagonals:
        counts[a - 1] += 1
        counts[b - 1] += 1
    return tuple(counts)


def triangulation_of_quiddity(q: Sequence) -> Triangulation:
    """Inverse map by repeated removal of the lowest-index ear."""
    vals = [to_rational(x) for x in q]
    n = len(vals)
    if n < 3 or any(x.denominator != 1 or x <= 0 for x in vals):
        raise NotAQuiddity("a quiddity is a sequence of at least three positive integers")
    count = {i + 1: int(x) for i, x in enumerate(vals)}
    poly = list(range(1, n + 1))
    diagonals = []
    while len(poly) > 3:
        ear_pos = next((p for p, v in enumerate(poly) if count[v] == 1), None)
        if ear_pos is None:
            raise NotAQuiddity("no ear available")
        left = poly[ear_pos - 1]
        right = poly[(ear_pos + 1) % len(poly)]
        count[left] -= 1
        count[right] -= 1
        if count[left] < 1 or count[right] < 1:
            raise NotAQuiddity("triangle counts become non-positive")
        diagonals.append(_norm(left, right))
        del poly[ear_pos]
    if any(count[v] != 1 for v in poly):
        raise NotAQuiddity("the last triangle does not close up")
    T = Triangulation.make(n, diagonals)
    if quiddity_of_triangulation(T) != tuple(int(x) for x in vals):
        raise NotAQuiddity("counts are inconsistent")
    return T


def fan(n: int, apex: int = 1) -> Triangulation:
    others = [((apex - 1 + s) % n) + 1 for s in range(2, n - 1)]
    return Triangulation.make(n, [_norm(apex, v) for v in others])


# -------------------------------------------------------- entry interpretations

def vertex_tags(T: Triangulation, i: int) -> Tuple[int, ...]:
    """Counting procedure started at v_i; returns tags of v_1..v_n.

    The tag at v_j equals the frieze entry e(i+1, j-1).
    """
    n = T.n
    i = (i - 1) % n + 1
    tags: Dict[int, int] = {i: 0}
    edges = T.edges()
    for v in range(1, n + 1):
        if v != i and _norm(i, v) in edges:
            tags[v] = 1
    tris = T.triangles
    changed = True
    while changed and len(tags) < n:
        changed = False
        for tri in tris:
            known = [v for v in tri if v in tags]
            if len(known) == 2:
                (u,) = [v for v in tri if v not in tags]
                tags[u] = tags[known[0]] + tags[known[1]]
                changed = True
    return tuple(tags[v] for v in range(1, n + 1))


def _count_sdr(slots: Sequence[Sequence[int]], capacity: Dict[int, int]) -> int:
    """Ordered choices, one cell per slot, each cell used at most capacity times."""
    used = {c: 0 for c in capacity}

    def rec(k: int) -> int:
        if k == len(slots):
            return 1
        total = 0
        for c in slots[k]:
            if used[c] < capacity[c]:
                used[c] += 1
                total += rec(k + 1)
                used[c] -= 1
        return total

    return rec(0)


def admissible_paths(T: Triangulation, i: int, j: int) -> int:
    """Number of sequences (tau_i, ..., tau_j) of distinct triangles with
    tau_l incident to v_l; this equals e(i, j)."""
    length = j - i + 1
    if length < 0:
        return 0
    n = T.n
    tris = T.triangles
    slots = [[idx for idx, t in enumerate(tris) if ((l - 1) % n) + 1 in t] for l in range(i, j + 1)]
    return _count_sdr(slots, {idx: 1 for idx in range(len(tris))})


def ptolemy_lengths(T: Triangulation) -> Dict[Edge, Fraction]:
    """Lengths of all chords; sides and diagonals of T have length 1."""
    n = T.n
    length: Dict[Edge, Fraction] = {e: Fraction(1) for e in T.edges()}
    quads = list(combinations(range(1, n + 1), 4))
    pairs_total = n * (n - 1) // 2
    while len(length) < pairs_total:
        progress = False
        for a, b, c, d in quads:
            ac, bd = (a, c), (b, d)
            sides = [(a, b), (b, c), (c, d), (a, d)]
            if not all(s in length for s in sides):
                continue
            ab, bc, cd, ad = (length[s] for s in sides)
            if ac in length and bd not in length:
                length[bd] = (ab * cd + ad * bc) / length[ac]
                progress = True
            elif bd in length and ac not in length:
                length[ac] = (ab * cd + ad * bc) / length[bd]
                progress = True
        if not progress:
            raise InvalidTriangulation("Ptolemy recursion stalled")
    return length


def chord_length(lengths: Dict[Edge, Fraction], a: int, b: int, n: int) -> Fraction:
    a, b = (a - 1) % n + 1, (b - 1) % n + 1
    if a == b:
        return Fraction(0)
    return lengths[_norm(a, b)]


def bci_matrix(T: Triangulation) -> Matrix:
    """M[a][b] (1-based) = number of admissible paths from v_{a-1} to v_{b-1}.

    Row 1 is the diagonal e(1, -1), e(1, 0), ..., e(1, n-2) of the frieze.
    """
    n = T.n
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            gap = (b - a) % n
            row.append(admissible_paths(T, a, a + gap - 2) if gap else 0)
        rows.append(row)
    return Matrix.of(rows)


def bci_determinant_formula(n: int) -> int:
    return -((-2) ** (n - 2))


def admissible_dpaths(D: Dissection, i: int, j: int) -> int:
    """Cell sequences (p_i, ..., p_{j-2}) with p_l incident to v_l, each d-gon
    used at most d - 2 times; counts paths from v_{i-1} to v_{j-1}."""
    length = j - 1 - i
    if length < 0:
        return 0
    n = D.n
    cells = D.cells
    slots = [[idx for idx, c in enumerate(cells) if ((l - 1) % n) + 1 in c] for l in range(i, j - 1)]
    return _count_sdr(slots, {idx: len(c) - 2 for idx, c in enumerate(cells)})


def dissection_matrix(D: Dissection) -> Matrix:
    n = D.n
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            gap = (b - a) % n
            row.append(admissible_dpaths(D, a, a + gap) if gap else 0)
        rows.append(row)
    return Matrix.of(rows)


def dissection_determinant_formula(D: Dissection) -> int:
    out = (-1) ** (D.n - 1)
    for d in D.sizes:
        out *= d - 1
    return out


def matrix_determinant(M: Matrix) -> Fraction:
    return determinant(M)
