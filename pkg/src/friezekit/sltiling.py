"""SL_{k+1} friezes, their difference equations and dualities.

Index conventions
-----------------
An SL_{k+1} frieze of width ``w`` has order ``n = k + w + 2`` and entries
``f(i, j)``.  The stored band is ``band[i][t] = f(i, i + t)`` for
``0 <= i < n`` and ``0 <= t < w``.  Around the band sit one row of 1's on
each side (``f(i, i-1) = f(i, i+w) = 1``) and k rows of 0's; beyond that the
array continues with ``f(i, j + n) = (-1)^k f(i, j)`` and
``f(i + n, j + n) = f(i, j)``.  Every other view (derived arrays, the dual
friezes, the T-system box) is a function of the band and never materialises
the bi-infinite tiling.

The difference equation of a frieze is

    V_i = a_i^1 V_{i-1} - a_i^2 V_{i-2} + ... + (-1)^{k-1} a_i^k V_{i-k} + (-1)^k V_{i-k-1}

with coefficients stored as ``coefficients[i % n][j - 1] = a_i^j``.
"""

from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidInput, NotCoprime, NotSuperperiodic, PreconditionFailed, RankOutOfRange
from .exact import Scalar, adjacent_minor, det_rows, rational_to_json, to_rational

Vector = Tuple[Fraction, ...]


def _sign(k: int, q: int) -> int:
    return -1 if (k * q) % 2 else 1


@dataclass(frozen=True)
class SLFrieze:
    k: int
    w: int
    band: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.k < 1 or self.w < 1:
            raise InvalidInput("need k >= 1 and w >= 1")
        if len(self.band) != self.n or any(len(r) != self.w for r in self.band):
            raise InvalidInput(f"band must be {self.n} rows of length {self.w}")

    @classmethod
    def make(cls, k: int, band: Sequence[Sequence[Scalar]]) -> "SLFrieze":
        rows = tuple(tuple(to_rational(x) for x in r) for r in band)
        if not rows:
            raise InvalidInput("empty band")
        return cls(k, len(rows[0]), rows)

    @property
    def n(self) -> int:
        return self.k + self.w + 2

    def entry(self, i: int, j: int) -> Fraction:
        k, n = self.k, self.n
        q, i0 = divmod(i, n)
        j -= q * n
        q2, r = divmod(j - (i0 - k - 1), n)
        s = _sign(k, q2)
        if r < k:
            return Fraction(0)
        if r == k or r == n - 1:
            return Fraction(s)
        return s * self.band[i0][r - k - 1]

    __call__ = entry

    def minor(self, i: int, j: int, r: int) -> Fraction:
        return adjacent_minor(self.entry, i, j, r)

    def to_json(self) -> dict:
        return {"kind": "sl_frieze", "k": self.k, "w": self.w,
                "band": [[rational_to_json(x) for x in r] for r in self.band]}

    @classmethod
    def from_json(cls, data: dict) -> "SLFrieze":
        if data.get("kind") != "sl_frieze":
            raise InvalidInput("expected kind 'sl_frieze'")
        F = cls.make(int(data["k"]), data["band"])
        if F.w != int(data["w"]):
            raise InvalidInput("band width disagrees with w")
        return F


def from_coxeter(F) -> SLFrieze:
    """The k = 1 reading of a Coxeter frieze (same band, same extension)."""
    return SLFrieze(1, F.width, F.band)


def entry(F: SLFrieze, i: int, j: int) -> Fraction:
    return F.entry(i, j)


@dataclass(frozen=True)
class SLReport:
    unimodular: bool
    tame: bool

    @property
    def ok(self) -> bool:
        return self.unimodular and self.tame

    def as_dict(self) -> dict:
        return {"unit_minors": self.unimodular, "tame": self.tame}


def _window(F: SLFrieze) -> Iterator[Tuple[int, int]]:
    n = F.n
    for i in range(-n, n):
        for j in range(-n, n):
            yield i, j


def validate(F: SLFrieze) -> SLReport:
    """Adjacent (k+1)-minors equal 1 and (k+2)-minors vanish on a two-period window."""
    k = F.k
    um = all(F.minor(i, j, k + 1) == 1 for i, j in _window(F))
    tame = all(F.minor(i, j, k + 2) == 0 for i, j in _window(F))
    return SLReport(um, tame)


def is_periodic(F: SLFrieze) -> bool:
    """f(i+n, j) == (-1)^k f(i, j) and f(i, j+n) == (-1)^k f(i, j) on a window."""
    n, s = F.n, (-1) ** F.k
    pts = [(i, j) for i in range(-n, n) for j in range(-n, n)]
    return all(F(i + n, j) == s * F(i, j) and F(i, j + n) == s * F(i, j) for i, j in pts)


# ------------------------------------------------------------ derived arrays

def derived_array(F: SLFrieze, r: int) -> Callable[[int, int], Fraction]:
    """The view (i, j) -> adjacent r-minor with top-left corner (i, j)."""
    if not 1 <= r <= F.k + 1:
        raise RankOutOfRange(f"r must lie in 1..{F.k + 1}")
    return lambda i, j: F.minor(i, j, r)


def projective_dual(F: SLFrieze) -> SLFrieze:
    """The k-derived array, read on the same band positions."""
    k = F.k
    return SLFrieze(k, F.w, tuple(tuple(F.minor(i, i + t, k) for t in range(F.w))
                                  for i in range(F.n)))


def duality_offset(F: SLFrieze, r: int) -> int:
    """Offset s with (d_r F)(i, j) == (d_{k+1-r} F*)(i+s, j+s)."""
    return r - F.k


def check_duality(F: SLFrieze) -> bool:
    Fs = projective_dual(F)
    k, n = F.k, F.n
    for r in range(1, k + 1):
        s = duality_offset(F, r)
        a, b = derived_array(F, r), derived_array(Fs, k + 1 - r)
        if any(a(i, j) != b(i + s, j + s) for i in range(n) for j in range(i - k - 1, i + n)):
            return False
    return True


DOUBLE_DUAL_SHIFT = "k - 1"


def check_double_dual(F: SLFrieze) -> bool:
    """(F*)*(i, j) == F(i + k - 1, j + k - 1)."""
    G = projective_dual(projective_dual(F))
    k, n = F.k, F.n
    return all(G(i, j) == F(i + k - 1, j + k - 1) for i in range(n) for j in range(i - k - 1, i + n))


# -------------------------------------------------------- difference equations

@dataclass(frozen=True)
class DifferenceEqK:
    k: int
    coefficients: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise InvalidInput("order must be at least 2")
        if not self.coefficients or any(len(r) != self.k for r in self.coefficients):
            raise InvalidInput("each coefficient row needs k entries")

    @classmethod
    def make(cls, k: int, rows: Sequence[Sequence[Scalar]]) -> "DifferenceEqK":
        return cls(k, tuple(tuple(to_rational(x) for x in r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def a(self, i: int, j: int) -> Fraction:
        return self.coefficients[i % self.n][j - 1]

    def step(self, i: int, prev: Sequence) -> Fraction:
        """Right-hand side for V_i given prev = (V_{i-1}, ..., V_{i-k-1}) as scalars."""
        k = self.k
        total = sum(((-1) ** (j - 1) * self.a(i, j) * prev[j - 1] for j in range(1, k + 1)), Fraction(0))
        return total + (-1) ** k * prev[k]

    def fundamental(self, start: int, stop: int) -> Dict[int, Vector]:
        """Vector solution with V_{-k}, ..., V_0 the standard basis e_1, ..., e_{k+1}."""
        k = self.k
        V: Dict[int, Vector] = {}
        for t in range(k + 1):
            V[-k + t] = tuple(Fraction(int(c == t)) for c in range(k + 1))
        for i in range(1, stop):
            V[i] = tuple(self.step(i, [V[i - 1 - s][c] for s in range(k + 1)]) for c in range(k + 1))
        sign = (-1) ** k
        for i in range(-k - 1, start - 1, -1):
            # solve the relation at index i + k + 1 for V_i
            top = i + k + 1
            rest = tuple(V[top][c] - sum(((-1) ** (j - 1) * self.a(top, j) * V[top - j][c]
                                          for j in range(1, k + 1)), Fraction(0))
                         for c in range(k + 1))
            V[i] = tuple(sign * x for x in rest)
        return {i: V[i] for i in range(start, stop)}

    def to_json(self) -> dict:
        return {"kind": "sl_equation", "k": self.k,
                "coefficients": [[rational_to_json(x) for x in r] for r in self.coefficients]}


def equation_of(F: SLFrieze) -> DifferenceEqK:
    """a_i^j = adjacent j-minor with top-left corner (i - j + 1, i - j + 1)."""
    k = F.k
    return DifferenceEqK(k, tuple(tuple(F.minor(i - j + 1, i - j + 1, j) for j in range(1, k + 1))
                                  for i in range(F.n)))


def coefficient_identity(F: SLFrieze) -> bool:
    """a_i^j also equals the (k-j+1)-minor at (i+2, i+1+w)."""
    E = equation_of(F)
    k, w = F.k, F.w
    return all(E.a(i, j) == F.minor(i + 2, i + 1 + w, k - j + 1)
               for i in range(F.n) for j in range(1, k + 1))


def is_superperiodic(E: DifferenceEqK) -> bool:
    k, n = E.k, E.n
    V = E.fundamental(-k, n + 1)
    s = (-1) ** k
    return all(V[i + n] == tuple(s * x for x in V[i]) for i in range(-k, 1))


def frieze_of_equation(E: DifferenceEqK) -> SLFrieze:
    """f(i, j) = det(V_{i-k-1}, ..., V_{i-2}, V_j) for the fundamental solution."""
    if not is_superperiodic(E):
        raise NotSuperperiodic("some solution is not (-1)^k-antiperiodic")
    k, n = E.k, E.n
    w = n - k - 2
    if w < 1:
        raise InvalidInput("period too small for a frieze")
    V = E.fundamental(-k - 1, 2 * n)
    band = []
    for i in range(n):
        head = [V[i - k - 1 + s] for s in range(k)]
        band.append(tuple(det_rows(head + [V[j]]) for j in range(i, i + w)))
    return SLFrieze(k, w, tuple(band))


def equation_residual_ok(F: SLFrieze) -> bool:
    """Every diagonal j -> f(i0, j) solves the frieze's own equation."""
    E = equation_of(F)
    k, n = F.k, F.n
    for i0 in range(n):
        for i in range(-n, 2 * n):
            prev = [F(i0, i - s) for s in range(1, k + 2)]
            if E.step(i, prev) != F(i0, i):
                return False
    return True


def dual_equation_ok(F: SLFrieze) -> bool:
    """The dual frieze's equation is the adjoint one: a*_i^j == a_{i+k-j}^{k-j+1}."""
    E, Es = equation_of(F), equation_of(projective_dual(F))
    k = F.k
    return all(Es.a(i, j) == E.a(i + k - j, k - j + 1) for i in range(F.n) for j in range(1, k + 1))


# -------------------------------------------------------------- Gale duality

def gale_dual(F: SLFrieze) -> SLFrieze:
    """SL_{w+1} frieze of width k with band[i][t] = a_{i-1}^{k-t}."""
    E = equation_of(F)
    k = F.k
    return SLFrieze(F.w, k, tuple(tuple(E.a(i - 1, k - t) for t in range(k)) for i in range(F.n)))


def gale_coefficients(E: DifferenceEqK) -> DifferenceEqK:
    """Coefficients of the Gale-dual equation, straight from those of E.

    alpha_i^{w-j} is the determinant of a (j+1) x (j+1) lower Hessenberg
    matrix whose entries are a_{i+r+1}^{r+1-c} below the superdiagonal of 1's,
    with a^0 = a^{k+1} = 1 and every other out-of-range coefficient 0.
    """
    k, n = E.k, E.n
    w = n - k - 2
    if w < 1:
        raise InvalidInput("period too small for a Gale dual")

    def A(i: int, l: int) -> Fraction:
        if l == 0 or l == k + 1:
            return Fraction(1)
        if 1 <= l <= k:
            return E.a(i, l)
        return Fraction(0)

    rows = []
    for i in range(n):
        alpha = [Fraction(0)] * w
        for j in range(w):
            size = j + 1
            H = [[A(i + r + 1, r + 1 - c) if c <= r else (Fraction(1) if c == r + 1 else Fraction(0))
                  for c in range(size)] for r in range(size)]
            alpha[w - j - 1] = det_rows(H)
        rows.append(tuple(alpha))
    return DifferenceEqK(w, tuple(rows))


def gale_triangle_ok(F: SLFrieze) -> bool:
    return equation_of(gale_dual(F)) == gale_coefficients(equation_of(F))


# ---------------------------------------------------------------- T-system

@dataclass(frozen=True)
class TBox:
    k: int
    window: Tuple[int, int, int, int]
    values: Dict[Tuple[int, int, int], Fraction]

    def __call__(self, alpha: int, u: int, v: int) -> Fraction:
        return self.values[(alpha, u, v)]

    def residuals(self) -> Iterator[Tuple[Tuple[int, int, int], Fraction]]:
        u0, u1, v0, v1 = self.window
        T = self.values
        for a in range(1, self.k + 1):
            for u in range(u0 + 1, u1):
                for v in range(v0 + 1, v1):
                    if (u + v + a) % 2 == 1:
                        res = (T[(a, u, v + 1)] * T[(a, u, v - 1)] - T[(a, u + 1, v)] * T[(a, u - 1, v)]
                               - T[(a + 1, u, v)] * T[(a - 1, u, v)])
                        yield (a, u, v), res

    def max_abs_residual(self) -> Fraction:
        return max((abs(r) for _, r in self.residuals()), default=Fraction(0))

    def boundary_ok(self) -> bool:
        return all(x == 1 for (a, _, _), x in self.values.items() if a in (0, self.k + 1))


def tsystem_box(F: SLFrieze, window: Optional[Tuple[int, int, int, int]] = None) -> TBox:
    """T_{a,u,v} = (d_a F)(i, j) with u = j - i and v = i + j + a.

    The default window covers one period in each direction around the band.
    """
    k, n = F.k, F.n
    if window is None:
        window = (-k - 2, n + 1, -2, 2 * n + k + 2)
    u0, u1, v0, v1 = window
    vals: Dict[Tuple[int, int, int], Fraction] = {}
    for a in range(0, k + 2):
        for u in range(u0, u1 + 1):
            for v in range(v0, v1 + 1):
                if (u + v + a) % 2:
                    continue
                if a == 0 or a == k + 1:
                    vals[(a, u, v)] = Fraction(1)
                else:
                    s = v - a
                    vals[(a, u, v)] = F.minor((s - u) // 2, (s + u) // 2, a)
    return TBox(k, window, vals)


def gale_plane_ok(F: SLFrieze) -> bool:
    """On the plane u = 0 the box carries the Gale dual: (d_a F)(i, i) == F^G(i + a, i + k)."""
    G = gale_dual(F)
    k = F.k
    return all(F.minor(i, i, a) == G(i + a, i + k) for i in range(F.n) for a in range(1, k + 1))


# ------------------------------------------------------------- Grassmannian

def grassmann_matrix(F: SLFrieze) -> List[List[Fraction]]:
    """Rows r = 1..k+1 of the frieze on columns 0..n-1."""
    return [[F(r, c) for c in range(F.n)] for r in range(1, F.k + 2)]


def grassmann_minors(F: SLFrieze) -> List[Fraction]:
    """Cyclically adjacent maximal minors, continuing columns with the sign (-1)^k."""
    G = grassmann_matrix(F)
    k, n = F.k, F.n

    def col(c: int) -> List[Fraction]:
        s = _sign(k, c // n)
        return [s * G[r][c % n] for r in range(k + 1)]

    return [det_rows([col(c + t) for t in range(k + 1)]) for c in range(n)]


# ------------------------------------------------------ operator commutation

Banded = Dict[int, Callable[[int], Fraction]]


def _operator_from(E: DifferenceEqK, signs: str, shift: int) -> Banded:
    k, n = E.k, E.n
    ops: Banded = {}
    for p in range(1, k + 1):
        c = (-1) ** (p - 1) if signs == "alternating" else 1
        ops[p] = (lambda i, p=p, c=c: c * E.a(i + shift, p))
    last = (-1) ** k if signs == "alternating" else 1
    ops[k + 1] = lambda i, last=last: Fraction(last)
    return ops


def difference_operator(E: DifferenceEqK) -> Banded:
    """L = a^1 T - a^2 T^2 + ... + (-1)^k T^{k+1}, as offset -> coefficient of V_{i-offset}."""
    return _operator_from(E, "alternating", 0)


def partner_operator(E: DifferenceEqK) -> Banded:
    """The operator attached to the projective dual followed by the Gale dual.

    Under our indexing its coefficients enter with all signs +1 and the
    coefficient index advanced by one.
    """
    F = frieze_of_equation(E)
    H = equation_of(gale_dual(projective_dual(F)))
    return _operator_from(H, "plus", 1)


def _compose(A: Banded, B: Banded, rows: range) -> Dict[Tuple[int, int], Fraction]:
    out: Dict[Tuple[int, int], Fraction] = {}
    for i in rows:
        for p, fa in A.items():
            x = fa(i)
            if not x:
                continue
            for q, fb in B.items():
                key = (i, i - p - q)
                out[key] = out.get(key, Fraction(0)) + x * fb(i - p)
    return out


def operators_commute(E: DifferenceEqK, window: Optional[int] = None) -> bool:
    """[L, L^{*G}] == 0 on the interior rows of a finite window (4n by default)."""
    k, n = E.k, E.n
    if math.gcd(k + 1, n) != 1:
        raise NotCoprime(f"gcd(k+1, n) = gcd({k + 1}, {n}) != 1")
    window = 4 * n if window is None else window
    L, M = difference_operator(E), partner_operator(E)
    reach = (k + 1) + (n - k - 1)
    rows = range(reach, window)
    LM, ML = _compose(L, M, rows), _compose(M, L, rows)
    keys = set(LM) | set(ML)
    return all(LM.get(key, 0) == ML.get(key, 0) for key in keys)


# ------------------------------------------------------- antiperiodic block

@dataclass(frozen=True)
class TilingBlock:
    q: Tuple[int, ...]
    qp: Tuple[int, ...]
    M: Tuple[Tuple[int, int], Tuple[int, int]]

    def _W(self, i: int) -> Tuple[int, int]:
        return _lift(self.qp, (0, -1), (1, 0), i)

    def _V(self, j: int) -> Tuple[int, int]:
        (a, b), (c, d) = self.M
        return _lift(self.q, (a, c), (b, d), j)

    def entry(self, i: int, j: int) -> int:
        w, v = self._W(i), self._V(j)
        return w[0] * v[1] - v[0] * w[1]

    __call__ = entry

    @property
    def rows(self) -> int:
        return len(self.qp)

    @property
    def cols(self) -> int:
        return len(self.q)

    @property
    def block(self) -> List[List[int]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def minors_ok(self, periods: int = 3) -> bool:
        r, c = self.rows, self.cols
        pts = [(i, j) for i in range(-periods * r, periods * r) for j in range(-periods * c, periods * c)]
        return all(self(i, j) * self(i + 1, j + 1) - self(i, j + 1) * self(i + 1, j) == 1 for i, j in pts)

    def to_json(self) -> dict:
        return {"kind": "sl2_block", "rows": self.rows, "cols": self.cols, "block": self.block}


def _lift(q: Sequence[int], v0, v1, i: int) -> Tuple[int, int]:
    """Solution of X_{j+1} = q_j X_j - X_{j-1} (q read cyclically) with X_0, X_1 given."""
    return _lift_cached(tuple(q), tuple(v0), tuple(v1), i)


@lru_cache(maxsize=4096)
def _lift_cached(q, v0, v1, i):
    n = len(q)
    prev, cur = v0, v1
    if i >= 0:
        if i == 0:
            return v0
        for j in range(1, i):
            prev, cur = cur, (q[j % n] * cur[0] - prev[0], q[j % n] * cur[1] - prev[1])
        return cur
    # walk backwards: X_{j-1} = q_j X_j - X_{j+1}
    nxt, cur = v1, v0
    for j in range(0, i, -1):
        nxt, cur = cur, (q[j % n] * cur[0] - nxt[0], q[j % n] * cur[1] - nxt[1])
    return cur


def antiperiodic_sl2_block(q: Sequence[int], qp: Sequence[int], M: Sequence[Sequence[int]]) -> TilingBlock:
    """Block m_{i,j} = det(W_i, V_j), from two quiddities and a unimodular matrix.

    W is the lift of qp with (W_0, W_1) = ((0, -1), (1, 0)); the sign of W_0 is
    the one that makes the block positive.  V is the lift of q starting with
    the columns of M.
    """
    (a, b), (c, d) = (int(M[0][0]), int(M[0][1])), (int(M[1][0]), int(M[1][1]))
    if a * d - b * c != 1:
        raise PreconditionFailed("det M must be 1")
    if min(a, b, c, d) <= 0:
        raise PreconditionFailed("entries of M must be positive")
    q, qp = tuple(int(x) for x in q), tuple(int(x) for x in qp)
    if len(q) < 3 or len(qp) < 3:
        raise PreconditionFailed("quiddities need length at least 3")
    if Fraction(q[0]) >= Fraction(b, a):
        raise PreconditionFailed("need q_0 < b/a")
    if Fraction(qp[0]) >= Fraction(c, a):
        raise PreconditionFailed("need q'_0 < c/a")
    return TilingBlock(q, qp, ((a, b), (c, d)))


# ------------------------------------------------------------------ census

def _boundary(k: int, w: int, i: int, j: int) -> Optional[int]:
    t = j - i
    if t == -1 or t == w:
        return 1
    if -k - 1 <= t < -1 or w < t <= w + k:
        return 0
    return None


def _affine_solutions(f0: Fraction, f1: Fraction, lo: int, hi: int, bound: int) -> List[int]:
    """y in [lo, hi] with f0 + (f1 - f0) y an integer in [1, bound]."""
    c1 = f1 - f0
    if c1 == 0:
        return list(range(lo, hi + 1)) if f0.denominator == 1 and 1 <= f0 <= bound else []
    den = math.lcm(f0.denominator, c1.denominator)
    N0, N1 = int(f0 * den), int(c1 * den)
    # need N0 + N1 y == 0 mod den and 1 <= (N0 + N1 y) / den <= bound
    g = math.gcd(N1, den)
    if N0 % g:
        return []
    step = den // g
    y0 = ((-N0 // g) * pow(N1 // g, -1, step)) % step if step > 1 else 0
    a, b = Fraction(den - N0, N1), Fraction(bound * den - N0, N1)
    if a > b:
        a, b = b, a
    lo2, hi2 = max(lo, math.ceil(a)), min(hi, math.floor(b))
    if lo2 > hi2:
        return []
    first = lo2 + ((y0 - lo2) % step)
    return list(range(first, hi2 + 1, step))


def census(k: int, w: int, bound: int) -> List[SLFrieze]:
    """All SL_{k+1} friezes of width w with band entries in 1..bound.

    Cells of the strip are visited column by column.  Cells in rows 0..k-1 are
    free; a cell (i, j) in a later row is forced by the unit (k+1)-minor with
    bottom-right corner (i, j), which is affine in that cell.  When a free
    cell is immediately followed by a forced cell, the affine dependence lets
    us jump straight to the admissible values.  Rows n..n+k-1 must reproduce
    rows 0..k-1, and every survivor is validated.
    """
    if bound < 1:
        raise InvalidInput("bound must be positive")
    n = k + w + 2
    rows = n + k
    cells = sorted(((i, j) for i in range(rows) for j in range(i, i + w)), key=lambda c: (c[1], c[0]))
    vals: Dict[Tuple[int, int], int] = {}
    found: List[SLFrieze] = []

    def get(i: int, j: int) -> int:
        b = _boundary(k, w, i, j)
        return b if b is not None else vals[(i, j)]

    def forced(i: int, j: int) -> Tuple[Optional[Fraction], Fraction]:
        """(value, pivot); value is None if the pivot vanishes."""
        top, left = i - k, j - k
        piv = det_rows([[get(top + r, left + c) for c in range(k)] for r in range(k)])
        vals[(i, j)] = 0
        rest = det_rows([[get(top + r, left + c) for c in range(k + 1)] for r in range(k + 1)])
        del vals[(i, j)]
        if piv == 0:
            return None, rest
        return (1 - rest) / piv, piv

    def ok(x) -> bool:
        return x.denominator == 1 and 1 <= x <= bound

    def rec(pos: int) -> None:
        if pos == len(cells):
            band = tuple(tuple(Fraction(vals[(i, i + t)]) for t in range(w)) for i in range(n))
            if any(vals[(n + r, n + r + t)] != vals[(r, r + t)] for r in range(k) for t in range(w)):
                return
            F = SLFrieze(k, w, band)
            if validate(F).ok:
                found.append(F)
            return
        i, j = cells[pos]
        if i >= k:
            val, piv = forced(i, j)
            if val is None:
                if piv != 1:
                    return
                for y in range(1, bound + 1):
                    vals[(i, j)] = y
                    rec(pos + 1)
                del vals[(i, j)]
                return
            if not ok(val):
                return
            vals[(i, j)] = int(val)
            rec(pos + 1)
            del vals[(i, j)]
            return
        candidates: Sequence[int] = range(1, bound + 1)
        if pos + 1 < len(cells) and cells[pos + 1][0] >= k:
            ni, nj = cells[pos + 1]
            vals[(i, j)] = 0
            f0, p0 = forced(ni, nj)
            vals[(i, j)] = 1
            f1, p1 = forced(ni, nj)
            vals[(i, j)] = 2
            f2, p2 = forced(ni, nj)
            del vals[(i, j)]
            if f0 is not None and p0 == p1 == p2 and f2 - f1 == f1 - f0:
                candidates = _affine_solutions(f0, f1, 1, bound, bound)
        for y in candidates:
            vals[(i, j)] = y
            rec(pos + 1)
        vals.pop((i, j), None)

    import sys

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10 * len(cells) + 100))
    try:
        rec(0)
    finally:
        sys.setrecursionlimit(old)
    return sorted(found, key=lambda F: F.band)


def sl3_width2_census(bound: int = 60) -> List[SLFrieze]:
    """Positive integer SL_3 friezes of width 2 with entries at most ``bound``.

    60 comfortably exceeds the largest entry occurring in any of them.
    """
    return census(2, 2, bound)


# ------------------------------------------------------------------ random

def random_polygon(k: int, n: int, rng: random.Random, spread: int = 5) -> List[List[Fraction]]:
    """A random (-1)^k-antiperiodic sequence V_0..V_{n-1} in Q^{k+1} with all
    consecutive (k+1)-determinants equal to 1.

    Start from random vectors, shear so the products of consecutive
    determinants agree on each residue class mod gcd(k+1, n), then rescale.
    """
    g = math.gcd(k + 1, n)
    sgn = (-1) ** k
    while True:
        V = [[Fraction(rng.randint(-spread, spread)) for _ in range(k + 1)] for _ in range(n)]

        def ext(i: int) -> List[Fraction]:
            q, r = divmod(i, n)
            return [x * sgn for x in V[r]] if q % 2 else list(V[r])

        def D(i: int) -> Fraction:
            return det_rows([ext(i + t) for t in range(k + 1)])

        def classes(Ds):
            return [math.prod(Ds[i] for i in range(n) if i % g == r) for r in range(g)]

        Ds = [D(i) for i in range(n)]
        if any(d == 0 for d in Ds):
            continue
        P = classes(Ds)
        good = True
        for r in range(1, g):
            t = (r + k) % n
            C = det_rows([ext(r + s) for s in range(k)] + [ext(r + k + 1)])
            if C == 0:
                good = False
                break
            c = (Ds[r] * P[0] / P[r] - Ds[r]) / C
            nxt = ext(t + 1)
            V[t] = [a + c * b for a, b in zip(V[t], nxt)]
            Ds = [D(i) for i in range(n)]
            P = classes(Ds)
        if not good or any(d == 0 for d in Ds):
            continue
        lam: List[Optional[Fraction]] = [None] * n
        for r in range(g):
            lam[r] = Fraction(1)
            i = r
            for _ in range(n // g - 1):
                lam[(i + k + 1) % n] = lam[i] * Ds[i] / Ds[(i + 1) % n]
                i = (i + k + 1) % n
        R = math.prod(lam[t] for t in range(k + 1))
        s = 1 / (R * Ds[0])
        V2 = [[lam[i] * x for x in V[i]] for i in range(n)]
        return [[v[0] * s] + v[1:] for v in V2]


def frieze_of_polygon(V: Sequence[Sequence[Fraction]], k: int) -> SLFrieze:
    n = len(V)
    w = n - k - 2
    sgn = (-1) ** k

    def ext(i: int):
        q, r = divmod(i, n)
        return [x * sgn for x in V[r]] if q % 2 else list(V[r])

    band = tuple(tuple(det_rows([ext(i - k - 1 + s) for s in range(k)] + [ext(j)]) for j in range(i, i + w))
                 for i in range(n))
    return SLFrieze(k, w, band)


def random_frieze(k: int, w: int, rng: random.Random, spread: int = 5) -> SLFrieze:
    """A random tame SL_{k+1} frieze of width w over the rationals."""
    return frieze_of_polygon(random_polygon(k, k + w + 2, rng, spread), k)


# --------------------------------------------------------------------- csv

def to_csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for r in rows:
        writer.writerow(["" if x is None else x if isinstance(x, str) else rational_to_json(x) for x in r])
    return buf.getvalue()
