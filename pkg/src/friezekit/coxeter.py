"""Classical Coxeter frieze patterns.

Index conventions
-----------------
A frieze of width ``m`` has order ``n = m + 3``.  Entries are ``e(i, j)``
with the first row ``e(i, i) = a_i``.  The quiddity is given as the tuple
``(a_1, ..., a_n)`` and indices are read modulo ``n`` (so ``a_0 = a_n``).
Storage is the band ``band[i % n][t] = e(i, i + t)`` for ``0 <= t < m``.

Outside the band the array is extended by the border rows
``e(i, i-1) = e(i, i+m) = 1``, ``e(i, i-2) = e(i, i+m+1) = 0`` and by
antiperiodicity along diagonals, ``e(i, j+n) = -e(i, j)``.  With this
extension every adjacent 2x2 minor is 1 and every adjacent 3x3 minor is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from .errors import (ConsecutiveCoincidence, DegenerateQuadruple, EvenN, InvalidInput,
                     NotClosed, NotSuperperiodic, ZeroSeedEntry)
from .exact import (Scalar, adjacent_minor, continuant, exact_sqrt, rational_to_json,
                    to_rational)

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class CoxeterFrieze:
    width: int
    band: Tuple[Tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return self.width + 3

    n = order

    @property
    def first_row(self) -> Tuple[Fraction, ...]:
        """The quiddity ``(a_1, ..., a_n)``."""
        n = self.order
        return tuple(self.entry(i, i) for i in range(1, n + 1))

    def entry(self, i: int, j: int) -> Fraction:
        n, m = self.order, self.width
        q, r = divmod(j - i + 2, n)
        d = r - 2
        if d == -2 or d == m + 1:
            val = Fraction(0)
        elif d == -1 or d == m:
            val = Fraction(1)
        else:
            val = self.band[i % n][d]
        return -val if q % 2 else val

    __call__ = entry

    def row(self, r: int) -> Tuple[Fraction, ...]:
        """Row ``r`` of the pattern (row 1 is the quiddity), read from i = 1."""
        return tuple(self.entry(i, i + r - 1) for i in range(1, self.order + 1))

    def diagonal(self, i: int, start: int, stop: int) -> Tuple[Fraction, ...]:
        return tuple(self.entry(i, j) for j in range(start, stop))

    def glide_index(self, i: int, j: int) -> Tuple[int, int]:
        """Image of an in-band index under the glide, second index kept in band."""
        return j + 2, i - 2 + self.order

    def to_json(self) -> dict:
        return {
            "kind": "coxeter",
            "width": self.width,
            "order": self.order,
            "first_row": [rational_to_json(x) for x in self.first_row],
            "entries": [[rational_to_json(x) for x in self.row(r)] for r in range(1, self.width + 1)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CoxeterFrieze":
        if data.get("kind") != "coxeter":
            raise InvalidInput("expected kind 'coxeter'")
        m = int(data["width"])
        n = m + 3
        rows = [[to_rational(x) for x in r] for r in data.get("entries", [])]
        if m == 0:
            return cls(0, tuple(() for _ in range(n)))
        if len(rows) != m or any(len(r) != n for r in rows):
            raise InvalidInput("entries must have width rows of length order")
        # row r lists e(i, i+r-1) for i = 1..n
        band = [[None] * m for _ in range(n)]
        for r in range(m):
            for idx, x in enumerate(rows[r]):
                band[(idx + 1) % n][r] = x
        return cls(m, tuple(tuple(b) for b in band))


@dataclass(frozen=True)
class ValidationReport:
    unimodular: bool
    tame: bool
    glide: bool
    positive_integral: bool

    @property
    def ok(self) -> bool:
        return self.unimodular and self.tame and self.glide

    def as_dict(self) -> dict:
        return {"unimodular": self.unimodular, "tame": self.tame, "glide": self.glide,
                "positive_integral": self.positive_integral}


@dataclass(frozen=True)
class DifferenceEq2:
    """V_i = a_i V_{i-1} - V_{i-2}; ``coefficients`` lists (a_1, ..., a_n)."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) < 3:
            raise InvalidInput("period must be at least 3")

    @property
    def period(self) -> int:
        return len(self.coefficients)

    def a(self, i: int) -> Fraction:
        return self.coefficients[(i - 1) % self.period]

    def solve(self, v_prev: Point, v0: Point, start: int, stop: int) -> dict:
        """Solution with V_{-1} = v_prev and V_0 = v0, on indices [start, stop)."""
        vals = {-1: tuple(map(Fraction, v_prev)), 0: tuple(map(Fraction, v0))}
        for i in range(1, stop):
            a = self.a(i)
            vals[i] = tuple(a * x - y for x, y in zip(vals[i - 1], vals[i - 2]))
        for i in range(-2, start - 1, -1):
            a = self.a(i + 2)
            # V_{i+2} = a V_{i+1} - V_i
            vals[i] = tuple(a * x - y for x, y in zip(vals[i + 1], vals[i + 2]))
        return {i: vals[i] for i in range(start, stop)}


def _quiddity(q: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    return tuple(to_rational(x) for x in q)


def closure_continuants(q: Sequence[Scalar]) -> Tuple[Fraction, Fraction, Fraction]:
    """The three determinants whose values (0, 0, 1) characterise closure."""
    a = _quiddity(q)
    n = len(a)
    m = n - 3
    seq = lambda lo, hi: [a[(i - 1) % n] for i in range(lo, hi + 1)]
    return (continuant(seq(1, m + 2)), continuant(seq(2, m + 3)), continuant(seq(2, m + 2)))


def frieze_from_first_row(q: Sequence[Scalar], m: Optional[int] = None) -> CoxeterFrieze:
    a = _quiddity(q)
    n = len(a)
    if m is None:
        m = n - 3
    if n < 3 or n != m + 3:
        raise InvalidInput(f"quiddity of length {n} cannot have width {m}")
    k1, k2, k3 = closure_continuants(a)
    if k1 != 0:
        raise NotClosed(1, k1)
    if k2 != 0:
        raise NotClosed(2, k2)
    if k3 != 1:
        raise NotClosed(3, k3)
    band = []
    for i in range(n):
        row = []
        for t in range(m):
            row.append(continuant([a[(i + s - 1) % n] for s in range(t + 1)]))
        band.append(tuple(row))
    return CoxeterFrieze(m, tuple(band))


def laurent_entry(x: Sequence[Fraction], i: int, j: int) -> Fraction:
    """Closed formula x_{i-1} x_{j+1} * sum_{k=i-1}^{j} 1/(x_k x_{k+1})."""
    return x[i - 1] * x[j + 1] * sum((Fraction(1) / (x[k] * x[k + 1]) for k in range(i - 1, j + 1)),
                                     Fraction(0))


def frieze_from_diagonal(seed: Sequence[Scalar]) -> CoxeterFrieze:
    """Frieze whose diagonal e(0, -1), e(0, 0), ..., e(0, m) reads 1, x_1, ..., x_m, 1.

    Entries e(i, j) with 1 <= i <= j <= m come from the Laurent formula.  The
    first row is a_0 = x_1, a_i (1 <= i <= m) from the formula, and by the
    glide a_{m+1} = e(0, m-1) = x_m and a_{m+2} = e(1, m).  No interior
    entry is ever used as a divisor.
    """
    xs = [to_rational(v) for v in seed]
    if any(v == 0 for v in xs):
        raise ZeroSeedEntry("diagonal seed entries must be nonzero")
    m = len(xs)
    x = [Fraction(1)] + xs + [Fraction(1)]
    q = [laurent_entry(x, i, i) for i in range(1, m + 1)]
    q.append(x[m])
    q.append(laurent_entry(x, 1, m))
    q.append(x[1])
    return frieze_from_first_row(q, m)


def diamond_propagation(seed: Sequence[Scalar]) -> dict:
    """Entries e(i, j), 1 <= i <= j+1 <= m+1, from the diagonal via ad - bc = 1.

    Independent of the Laurent formula: walks the diamonds one diagonal at a
    time, dividing by the previously computed entry.
    """
    xs = [to_rational(v) for v in seed]
    m = len(xs)
    e = {}
    for j in range(-1, m + 1):
        e[(0, j)] = Fraction(1) if j in (-1, m) else xs[j]
    for i in range(1, m + 2):
        e[(i, i - 1)] = Fraction(1)
        for j in range(i, m + 1):
            # e(i-1, j-1) e(i, j) - e(i-1, j) e(i, j-1) = 1
            e[(i, j)] = (1 + e[(i - 1, j)] * e[(i, j - 1)]) / e[(i - 1, j - 1)]
    return e


def validate(F: CoxeterFrieze) -> ValidationReport:
    n, m = F.order, F.width
    window = [(i, j) for i in range(n) for j in range(i - n, i + n)]
    unimodular = all(adjacent_minor(F.entry, i, j, 2) == 1 for i, j in window)
    tame = all(adjacent_minor(F.entry, i, j, 3) == 0 for i, j in window)
    inband = [(i, i + t) for i in range(n) for t in range(m)]
    glide = all(F.entry(i, j) == F.entry(*F.glide_index(i, j)) for i, j in inband)
    positive_integral = all(x > 0 and x.denominator == 1 for row in F.band for x in row)
    return ValidationReport(unimodular, tame, glide, positive_integral)


def period(F: CoxeterFrieze) -> int:
    n = F.order
    for p in range(1, n + 1):
        if n % p == 0 and all(F.band[i] == F.band[(i + p) % n] for i in range(n)):
            return p
    return n


def equation_of(F: CoxeterFrieze) -> DifferenceEq2:
    return DifferenceEq2(F.first_row)


def monodromy(E: DifferenceEq2):
    """Images of the basis solutions after one period, as (V_{n-1}, V_n) pairs."""
    n = E.period
    out = []
    for init in (((1, 0), (0, 1)), ((0, 1), (1, 0))):
        # init = (V_{-1}, V_0) written coordinatewise per basis solution
        vprev, v0 = Fraction(init[0][0]), Fraction(init[1][0])
        seq = [vprev, v0]
        for i in range(1, n + 1):
            seq.append(E.a(i) * seq[-1] - seq[-2])
        out.append((seq[n], seq[n + 1]))  # V_{n-1}, V_n
    return out


def is_superperiodic(E: DifferenceEq2) -> bool:
    """True iff every solution satisfies V_{i+n} = -V_i."""
    n = E.period
    for vm1, v0 in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))):
        seq = [vm1, v0]
        for i in range(1, n + 1):
            seq.append(E.a(i) * seq[-1] - seq[-2])
        if seq[n] != -vm1 or seq[n + 1] != -v0:
            return False
    return True


def _det2(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def frieze_from_equation(E: DifferenceEq2) -> CoxeterFrieze:
    """e(i, j) = det(V_j, V_{i-2}) for the solution with V_{-1} = (-1, 0), V_0 = (0, 1).

    Superperiodicity makes V_{n-1} = (1, 0), the normalisation used when the
    frieze is read off a configuration of points.
    """
    if not is_superperiodic(E):
        raise NotSuperperiodic("some solution is not n-antiperiodic")
    n = E.period
    m = n - 3
    V = E.solve((-1, 0), (0, 1), -2, 2 * n + 2)
    band = tuple(tuple(_det2(V[i + t], V[i - 2]) for t in range(m)) for i in range(n))
    F = CoxeterFrieze(m, band)
    return F


# ---------------------------------------------------------------- points on P^1

def as_point(p) -> Point:
    """Accept a rational, the string 'inf', or a homogeneous pair (x, y)."""
    if isinstance(p, (tuple, list)):
        if len(p) != 2:
            raise InvalidInput(f"projective point needs two coordinates: {p!r}")
        x, y = to_rational(p[0]), to_rational(p[1])
        if x == 0 and y == 0:
            raise InvalidInput("(0:0) is not a projective point")
        return (x, y)
    if isinstance(p, str) and p.strip().lower() in ("inf", "infinity", "oo", "∞"):
        return (Fraction(1), Fraction(0))
    return (to_rational(p), Fraction(1))


def same_point(p, q) -> bool:
    return _det2(as_point(p), as_point(q)) == 0


def cross_ratio(p, q, r, s) -> Fraction:
    """(s - p)(r - q) / ((s - r)(q - p)) with homogeneous coordinates."""
    p, q, r, s = map(as_point, (p, q, r, s))
    den = _det2(s, r) * _det2(q, p)
    if den == 0:
        raise DegenerateQuadruple("s = r or q = p")
    return _det2(s, p) * _det2(r, q) / den


def cross_ratios(points: Sequence) -> Tuple[Fraction, ...]:
    """c_i = [p_{i-3}, p_{i-2}, p_{i-1}, p_i] for i = 1..n (points are p_1..p_n)."""
    P = [as_point(p) for p in points]
    n = len(P)
    pt = lambda i: P[(i - 1) % n]
    return tuple(cross_ratio(pt(i - 3), pt(i - 2), pt(i - 1), pt(i)) for i in range(1, n + 1))


def _check_points(points) -> list:
    P = [as_point(p) for p in points]
    n = len(P)
    if n < 3:
        raise InvalidInput("need at least three points")
    for i in range(n):
        if _det2(P[i], P[(i + 1) % n]) == 0:
            raise ConsecutiveCoincidence(f"p_{i + 1} = p_{(i + 1) % n + 1}")
    if n % 2 == 0:
        raise EvenN("the normalised lift exists only for an odd number of points")
    return P


def lift_first_row(points: Sequence) -> Tuple[Fraction, ...]:
    """First row via the rescaled lift V_i = l_i P_i with det(V_{i+1}, V_i) = 1.

    With n odd, l_i is r_i * l_0 for even i and r_i / l_0 for odd i, where
    l_0^2 is rational.  The entries a_i = det(V_i, V_{i-2}) only involve
    products of equal-parity scalings, so they are rational.
    """
    P = _check_points(points)
    n = len(P)
    pt = lambda i: P[(i - 1) % n]  # p_1 .. p_n
    # r_i and parity exponent e_i (l_i = r_i * l0^e_i), starting from i = 0 (= p_n)
    r = {0: Fraction(1)}
    e = {0: 1}
    for i in range(0, n):
        D = _det2(pt(i + 1), pt(i))
        # l_{i+1} l_i D = 1
        r[i + 1] = 1 / (r[i] * D)
        e[i + 1] = -e[i]
    # V_n = -V_0 (antiperiodic lift): l_n = -l_0, i.e. r_n l0^{-1} = -l0
    l0_sq = -r[n]
    if l0_sq == 0:
        raise ConsecutiveCoincidence("degenerate configuration")

    def scale(i):
        # returns (rational, exponent) for l_i, i in 0..n
        return r[i], e[i]

    first = []
    for i in range(1, n + 1):
        a_idx, b_idx = i, i - 2
        ra, ea = scale(a_idx)
        sign = 1
        if b_idx < 0:
            b_idx += n
            sign = -1  # V_{b-n} = -V_b
        rb, eb = scale(b_idx)
        prod = ra * rb * (l0_sq ** ((ea + eb) // 2))
        first.append(sign * prod * _det2(pt(a_idx), pt(b_idx)))
    return tuple(first)


def first_row_from_cross_ratios(c: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    """Solve a_i a_{i+1} = 1 + c_i (n odd); pick the sign that closes.

    Here ``c`` lists the second-row entries e(i, i+1) for i = 1..n.  Two
    square roots are possible and exactly one gives a frieze; it is chosen
    by testing closure.
    """
    c = [to_rational(x) for x in c]
    n = len(c)
    if n % 2 == 0:
        raise EvenN("first row is determined by the second only for odd n")
    b = [1 + x for x in c]  # b[i-1] = a_i a_{i+1}
    if any(x == 0 for x in b):
        raise InvalidInput("some a_i a_{i+1} vanishes; use the lift construction")
    # a_1^2 = b_1 b_3 ... b_n / (b_2 b_4 ... b_{n-1})
    sq = Fraction(1)
    for idx, x in enumerate(b):
        sq = sq * x if idx % 2 == 0 else sq / x
    root = exact_sqrt(sq)
    if root is None:
        raise InvalidInput("no rational first row for these cross-ratios")
    for a1 in (root, -root):
        a = [a1]
        for i in range(n - 1):
            a.append(b[i] / a[-1])
        try:
            frieze_from_first_row(a)
        except NotClosed:
            continue
        return tuple(a)
    raise InvalidInput("neither sign gives a closed frieze")


def frieze_from_points(points: Sequence) -> CoxeterFrieze:
    """Tame frieze attached to n (odd) points p_1..p_n on the projective line.

    The second row is e(i-1, i) = [p_{i-3}, p_{i-2}, p_{i-1}, p_i].
    """
    P = _check_points(points)
    c = cross_ratios(P)
    # second row e(i, i+1) = c_{i+1}
    second = [c[i % len(c)] for i in range(1, len(c) + 1)]
    try:
        first = first_row_from_cross_ratios(second)
    except InvalidInput:
        first = lift_first_row(P)
    return frieze_from_first_row(first)


def pentagon_check(first_row: Sequence[Scalar]) -> bool:
    """Width-2 relation a_i a_{i+1} = 1 + a_{i+3}, indices mod 5.

    Relabelling x_k = a_{3k} turns it into x_{k-1} x_{k+1} = 1 + x_k.
    """
    a = _quiddity(first_row)
    n = len(a)
    if n != 5:
        return False
    return all(a[i] * a[(i + 1) % n] == 1 + a[(i + 3) % n] for i in range(n))


def render_pretty(F: CoxeterFrieze, periods: int = 2) -> str:
    """Staggered diamond layout: border rows of 1, the m interior rows, border rows."""
    n, m = F.order, F.width
    cols = periods * n
    from .exact import format_rational

    cells = {}
    for r in range(0, m + 2):
        for i in range(1, cols + 1):
            col = 2 * i + r
            if col < 2 * cols + 2:
                cells[(r, col)] = format_rational(F.entry(i, i + r - 1)) if 0 < r <= m else "1"
    wid = max(len(s) for s in cells.values())
    lines = []
    for r in range(0, m + 2):
        chars = []
        for col in range(1, 2 * cols + 2):
            chars.append(cells.get((r, col), "").rjust(wid))
        lines.append(" ".join(chars).rstrip())
    return "\n".join(lines)
