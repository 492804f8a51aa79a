"""Friezes on repetition quivers, Cartan/Coxeter matrices and seed mutation.

Vertices of a quiver are ``1..n``.  The repetition quiver ZQ has vertices
``(m, i)`` with arrows ``(m, i) -> (m, j)`` and ``(m, j) -> (m+1, i)`` for each
arrow ``i -> j`` of Q, and translation ``tau(m, i) = (m-1, i)``.  The arrows
into ``(m, j)`` therefore come from ``(m, i)`` for ``i -> j`` and from
``(m-1, k)`` for ``j -> k``; the mesh rule at ``(m, j)`` ties ``f(m-1, j)``,
``f(m, j)`` and those values together.
"""

from __future__ import annotations

import os
import re
import threading
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (Cyclic, InvalidInput, InvalidQuiver, InvalidRank, ZeroClusterVariable,
                     ZeroDivisionAtVertex)
from .exact import Matrix, matrix_order, rational_to_json, to_rational

RULES = ("additive", "multiplicative", "tropical", "cluster_additive")


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: Tuple[Tuple[int, int], ...]

    @classmethod
    def make(cls, n: int, arrows: Iterable[Sequence[int]] = ()) -> "Quiver":
        arr = []
        for a in arrows:
            i, j = int(a[0]), int(a[1])
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidQuiver(f"arrow {i}->{j} leaves the vertex range 1..{n}")
            if i == j:
                raise InvalidQuiver(f"loop at vertex {i}")
            arr.append((i, j))
        return cls(n, tuple(sorted(arr)))

    def opposite(self) -> "Quiver":
        return Quiver.make(self.n, [(j, i) for i, j in self.arrows])

    def multiplicity(self, i: int, j: int) -> int:
        return sum(1 for a in self.arrows if a == (i, j))

    def has_two_cycles(self) -> bool:
        s = set(self.arrows)
        return any((j, i) in s for i, j in s)

    def topological_order(self) -> Tuple[int, ...]:
        indeg = Counter(j for _, j in self.arrows)
        ready = sorted(v for v in range(1, self.n + 1) if indeg[v] == 0)
        out = []
        while ready:
            v = ready.pop(0)
            out.append(v)
            for i, j in self.arrows:
                if i == v:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        ready.append(j)
                        ready.sort()
        if len(out) != self.n:
            raise Cyclic("quiver has an oriented cycle")
        return tuple(out)

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except Cyclic:
            return False
        return True

    def to_json(self) -> dict:
        return {"n": self.n, "arrows": [list(a) for a in self.arrows]}


def kronecker(multiplicity: int = 2) -> Quiver:
    return Quiver.make(2, [(1, 2)] * multiplicity)


# -------------------------------------------------------------------- Dynkin

@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise InvalidRank(f"unknown family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise InvalidRank("A_n needs n >= 1")
        if self.family == "D" and self.rank < 4:
            raise InvalidRank("D_n needs n >= 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise InvalidRank("E_n needs n in {6, 7, 8}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if not m:
            raise InvalidRank(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def coxeter_number(self) -> int:
        n = self.rank
        if self.family == "A":
            return n + 1
        if self.family == "D":
            return 2 * (n - 1)
        return {6: 12, 7: 18, 8: 30}[n]

    @property
    def nu_squared_shift(self) -> int:
        """N with nu^2 = tau^{-N}."""
        n = self.rank
        if self.family == "A":
            return n - 1
        if self.family == "D":
            return 2 * (n - 2)
        return {6: 10, 7: 16, 8: 28}[n]


def dynkin_quiver(t: DynkinType) -> Quiver:
    n = t.rank
    if t.family == "A":
        return Quiver.make(n, [(i, i + 1) for i in range(1, n)])
    chain = [(i, i + 1) for i in range(1, n - 1)]
    if t.family == "D":
        return Quiver.make(n, chain + [(n - 2, n)])
    return Quiver.make(n, chain + [(3, n)])


# ------------------------------------------------------------ Cartan / Coxeter

def cartan_matrix(Q: Quiver) -> Matrix:
    """c_ij = number of paths from j to i (the trivial path included)."""
    order = Q.topological_order()
    n = Q.n
    paths = [[0] * (n + 1) for _ in range(n + 1)]  # paths[j][i]: j -> i
    for j in range(1, n + 1):
        paths[j][j] = 1
        start = order.index(j)
        for v in order[start:]:
            for a, b in Q.arrows:
                if a == v:
                    paths[j][b] += paths[j][v]
    return Matrix.of([[paths[j][i] for j in range(1, n + 1)] for i in range(1, n + 1)])


def cartan_inverse(Q: Quiver) -> Matrix:
    """Inverse of C_Q from the arrows: identity minus the arrow counts j -> i."""
    Q.topological_order()
    n = Q.n
    return Matrix.of([[int(i == j) - Q.multiplicity(j, i) for j in range(1, n + 1)]
                      for i in range(1, n + 1)])


def coxeter_transformation(Q: Quiver) -> Tuple[Matrix, Matrix]:
    """(Phi, Phi^{-1}) with Phi = -C^t C^{-1}."""
    C = cartan_matrix(Q)
    Cinv = cartan_inverse(Q)
    phi = -(C.T @ Cinv)
    phi_inv = -(C @ Cinv.T)
    return phi, phi_inv


# ------------------------------------------------------------------ friezes

@dataclass(frozen=True)
class RepVertex:
    m: int
    i: int

    def tau(self, k: int = 1) -> "RepVertex":
        return RepVertex(self.m - k, self.i)


def _mesh_combine(rule: str, values: Sequence[Fraction]):
    if rule == "additive":
        return sum(values, Fraction(0))
    if rule == "multiplicative":
        return 1 + prod(values, start=Fraction(1))
    if rule == "tropical":
        return max(sum(values, Fraction(0)), Fraction(0))
    if rule == "cluster_additive":
        return sum((max(v, Fraction(0)) for v in values), Fraction(0))
    raise InvalidInput(f"unknown rule {rule!r}")


@dataclass
class QFrieze:
    """A frieze on ZQ determined by its values on the slice m = 0.

    Slices are memoised; a lock makes concurrent evaluation safe.
    """

    quiver: Quiver
    rule: str
    slice0: Tuple[Fraction, ...]
    _slices: Dict[int, Tuple[Fraction, ...]] = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        if self.rule not in RULES:
            raise InvalidInput(f"rule must be one of {RULES}")
        self.slice0 = tuple(to_rational(x) for x in self.slice0)
        if len(self.slice0) != self.quiver.n:
            raise InvalidInput("slice0 length must equal the number of vertices")
        self._order = self.quiver.topological_order()
        self._in = {j: [i for i, jj in self.quiver.arrows if jj == j] for j in range(1, self.quiver.n + 1)}
        self._out = {j: [k for jj, k in self.quiver.arrows if jj == j] for j in range(1, self.quiver.n + 1)}
        self._slices[0] = self.slice0

    def _step_forward(self, prev: Tuple[Fraction, ...], m: int) -> Tuple[Fraction, ...]:
        cur: Dict[int, Fraction] = {}
        for j in self._order:
            vals = [cur[i] for i in self._in[j]] + [prev[k - 1] for k in self._out[j]]
            rhs = _mesh_combine(self.rule, vals)
            if self.rule == "multiplicative":
                if prev[j - 1] == 0:
                    raise ZeroDivisionAtVertex(RepVertex(m, j))
                cur[j] = rhs / prev[j - 1]
            else:
                cur[j] = rhs - prev[j - 1]
        return tuple(cur[j] for j in range(1, self.quiver.n + 1))

    def _step_backward(self, nxt: Tuple[Fraction, ...], m: int) -> Tuple[Fraction, ...]:
        cur: Dict[int, Fraction] = {}
        for j in reversed(self._order):
            vals = [nxt[i - 1] for i in self._in[j]] + [cur[k] for k in self._out[j]]
            rhs = _mesh_combine(self.rule, vals)
            if self.rule == "multiplicative":
                if nxt[j - 1] == 0:
                    raise ZeroDivisionAtVertex(RepVertex(m, j))
                cur[j] = rhs / nxt[j - 1]
            else:
                cur[j] = rhs - nxt[j - 1]
        return tuple(cur[j] for j in range(1, self.quiver.n + 1))

    def slice(self, m: int) -> Tuple[Fraction, ...]:
        with self._lock:
            if m in self._slices:
                return self._slices[m]
            if m > 0:
                top = max(k for k in self._slices if k <= m)
                for k in range(top + 1, m + 1):
                    self._slices[k] = self._step_forward(self._slices[k - 1], k)
            else:
                low = min(k for k in self._slices if k >= m)
                for k in range(low - 1, m - 1, -1):
                    self._slices[k] = self._step_backward(self._slices[k + 1], k)
            return self._slices[m]

    def __call__(self, v: RepVertex) -> Fraction:
        return self.slice(v.m)[v.i - 1]

    def to_json(self) -> dict:
        return {"kind": "qfrieze", "quiver": self.quiver.to_json(), "rule": self.rule,
                "slice0": [rational_to_json(x) for x in self.slice0]}

    @classmethod
    def from_json(cls, data: dict) -> "QFrieze":
        q = data["quiver"]
        return cls(Quiver.make(int(q["n"]), q["arrows"]), data["rule"], tuple(data["slice0"]))


def evaluate(f: QFrieze, v: RepVertex) -> Fraction:
    return f(v)


def additive_slice(f: QFrieze, m: int) -> Tuple[Fraction, ...]:
    """slice_m = Phi^{-m} slice_0, computed with matrices (no mesh walk)."""
    if f.rule != "additive":
        raise InvalidInput("additive_slice needs an additive frieze")
    phi, phi_inv = coxeter_transformation(f.quiver)
    step = phi_inv if m >= 0 else phi
    vec = f.slice0
    for _ in range(abs(m)):
        vec = step @ vec
    return tuple(vec)


def basis_frieze(Q: Quiver, i: int) -> QFrieze:
    C = cartan_matrix(Q)
    return QFrieze(Q, "additive", C.column(i - 1))


def decompose_additive(f: QFrieze) -> Tuple[Fraction, ...]:
    """Coefficients a with f = sum a_i d^i, i.e. a = C^{-1} slice_0."""
    if f.rule != "additive":
        raise InvalidInput("decompose_additive needs an additive frieze")
    return tuple(cartan_inverse(f.quiver) @ f.slice0)


# ------------------------------------------------------------- symmetries

def nakayama(t: DynkinType, v: RepVertex) -> RepVertex:
    n, m, i = t.rank, v.m, v.i
    if t.family == "A":
        return RepVertex(m + i - 1, n + 1 - i)
    if t.family == "D":
        j = i
        if n % 2 == 1 and i in (n - 1, n):
            j = 2 * n - 1 - i
        return RepVertex(m + n - 2, j)
    if n == 6:
        # the chain 1 -> ... -> 5 is linearly oriented, so the shift grows with i
        # exactly as in type A; vertex 3 and the branch vertex 6 move by 5
        return RepVertex(m + i + 2, 6 - i) if i <= 5 else RepVertex(m + 5, 6)
    return RepVertex(m + (8 if n == 7 else 14), i)


def sigma(t: DynkinType, v: RepVertex) -> RepVertex:
    w = nakayama(t, v)
    return RepVertex(w.m + 1, w.i)


def frobenius(t: DynkinType, v: RepVertex) -> RepVertex:
    w = nakayama(t, v)
    return RepVertex(w.m + 2, w.i)


def dynkin_type_of(Q: Quiver) -> Optional[DynkinType]:
    """Recognise the standard orientations produced by dynkin_quiver."""
    for fam in ("A", "D", "E"):
        try:
            t = DynkinType(fam, Q.n)
        except InvalidRank:
            continue
        if dynkin_quiver(t) == Q:
            return t
    return None


def period(f: QFrieze, cap: int = 64) -> Optional[int]:
    """Smallest p <= cap with slice_p == slice_0 (then every slice repeats)."""
    for p in range(1, cap + 1):
        try:
            if f.slice(p) == f.slice0:
                return p
        except ZeroDivisionAtVertex:
            return None
    return None


@dataclass(frozen=True)
class SymmetryReport:
    sigma_antisym: Optional[bool]
    frobenius_inv: Optional[bool]

    def as_dict(self) -> dict:
        return {"sigma_antisym": self.sigma_antisym, "frobenius_inv": self.frobenius_inv}


def check_symmetries(f: QFrieze, t: Optional[DynkinType] = None) -> SymmetryReport:
    """f o Sigma == -f for additive friezes, f o F == f for multiplicative ones,
    checked on every vertex of a full period window."""
    t = t or dynkin_type_of(f.quiver)
    if t is None:
        raise InvalidQuiver("symmetry checks need a Dynkin quiver in standard orientation")
    h = t.coxeter_number
    window = range(0, h + 2)
    n = f.quiver.n
    sig = fro = None
    if f.rule == "additive":
        sig = all(f(sigma(t, RepVertex(m, i))) == -f(RepVertex(m, i)) for m in window for i in range(1, n + 1))
    if f.rule == "multiplicative":
        fro = all(f(frobenius(t, RepVertex(m, i))) == f(RepVertex(m, i)) for m in window for i in range(1, n + 1))
    return SymmetryReport(sig, fro)


# ------------------------------------------------------------------ mutation

@dataclass(frozen=True)
class Seed:
    values: Tuple[Fraction, ...]
    quiver: Quiver

    def __post_init__(self):
        if len(self.values) != self.quiver.n:
            raise InvalidInput("seed values must match the vertex count")


def mutate_quiver(Q: Quiver, k: int) -> Quiver:
    if not 1 <= k <= Q.n:
        raise InvalidInput(f"vertex {k} out of range")
    if Q.has_two_cycles():
        raise InvalidQuiver("mutation needs a quiver without 2-cycles")
    arrows = Counter(Q.arrows)
    new = Counter()
    ins = [(i, c) for (i, j), c in arrows.items() if j == k]
    outs = [(j, c) for (i, j), c in arrows.items() if i == k]
    # (a) add i -> j for each path i -> k -> j
    for i, ci in ins:
        for j, cj in outs:
            new[(i, j)] += ci * cj
    # (b) reverse arrows at k, keep the others
    for (i, j), c in arrows.items():
        if i == k or j == k:
            new[(j, i)] += c
        else:
            new[(i, j)] += c
    # (c) cancel 2-cycles
    for (i, j) in list(new):
        if i < j:
            c = min(new[(i, j)], new[(j, i)])
            new[(i, j)] -= c
            new[(j, i)] -= c
    arr = [a for a, c in sorted(new.items()) for _ in range(c)]
    return Quiver.make(Q.n, arr)


def mutate_seed(S: Seed, k: int) -> Seed:
    u = S.values
    if u[k - 1] == 0:
        raise ZeroClusterVariable(f"u_{k} = 0")
    ins = prod((u[i - 1] for i, j in S.quiver.arrows if j == k), start=Fraction(1))
    outs = prod((u[j - 1] for i, j in S.quiver.arrows if i == k), start=Fraction(1))
    new = list(u)
    new[k - 1] = (ins + outs) / u[k - 1]
    return Seed(tuple(new), mutate_quiver(S.quiver, k))


# ----------------------------------------------------------- enumeration

def _int_step(order, ins, outs, prev: List[int]) -> Optional[List[int]]:
    cur = [0] * len(prev)
    for j in order:
        p = 1
        for i in ins[j]:
            p *= cur[i]
        for k in outs[j]:
            p *= prev[k]
        num = 1 + p
        d = prev[j]
        if num % d:
            return None
        cur[j] = num // d
    return cur


def _check_candidate(args) -> Optional[Tuple[int, ...]]:
    order, ins, outs, slice0, steps = args
    cur = list(slice0)
    for _ in range(steps):
        cur = _int_step(order, ins, outs, cur)
        if cur is None:
            return None
    return tuple(slice0)


def _search_chunk(args) -> List[Tuple[int, ...]]:
    order, ins, outs, n, bound, steps, first = args
    from itertools import product as iproduct

    found = []
    for rest in iproduct(range(1, bound + 1), repeat=n - 1):
        cand = (first,) + rest
        if _check_candidate((order, ins, outs, cand, steps)) is not None:
            found.append(cand)
    return found


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("FRIEZEKIT_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class Census:
    family: str
    bound: int
    friezes: Tuple[Tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.friezes)

    @property
    def note(self) -> str:
        return (f"complete relative to bound {self.bound}: every positive integer frieze whose "
                f"initial slice has entries <= {self.bound} is listed")


def enumerate_integer_friezes(t: DynkinType, bound: int, workers: Optional[int] = None) -> Census:
    """All slice_0 in [1, bound]^n whose multiplicative frieze is positive integral.

    Integrality is checked over one full period (h + 2 slices); periodicity
    of Dynkin friezes then covers the whole of ZQ.
    """
    if bound < 1:
        raise InvalidInput("bound must be positive")
    Q = dynkin_quiver(t)
    order = [v - 1 for v in Q.topological_order()]
    ins = {j - 1: [i - 1 for i, jj in Q.arrows if jj == j] for j in range(1, Q.n + 1)}
    outs = {j - 1: [k - 1 for jj, k in Q.arrows if jj == j] for j in range(1, Q.n + 1)}
    steps = t.coxeter_number + 2
    jobs = [(order, ins, outs, Q.n, bound, steps, first) for first in range(1, bound + 1)]
    workers = worker_count() if workers is None else workers
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_search_chunk, jobs))
    else:
        parts = [_search_chunk(j) for j in jobs]
    found = tuple(sorted(c for part in parts for c in part))
    return Census(str(t), bound, found)


def number_of_divisors(m: int) -> int:
    return sum(1 for d in range(1, m + 1) if m % d == 0)


def dn_frieze_count(n: int) -> int:
    if n < 4:
        raise InvalidRank("the D_n count needs n >= 4")
    return sum(number_of_divisors(m) * comb(2 * n - m - 1, n - m) for m in range(1, n + 1))
