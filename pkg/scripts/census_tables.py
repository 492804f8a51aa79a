"""Count positive integer friezes in several families and compare with the closed formulas.

    python3 scripts/census_tables.py              # quick tables
    python3 scripts/census_tables.py --long       # adds the SL3 width-3 and E6 searches (slow)
"""

import argparse
import time
from dataclasses import dataclass

from friezekit import polygon as P
from friezekit import quiverfrieze as qf
from friezekit import sltiling as sl


@dataclass
class CensusConfig:
    max_width: int = 5
    a_bound: int = 13
    d_bound: int = 20
    d_ranks: tuple = (4,)
    sl3_bound: int = 60
    long: bool = False
    long_bound: int = 30


def timed(label, fn):
    t0 = time.perf_counter()
    value = fn()
    print(f"  {label:<38} {value!s:>8}   ({time.perf_counter() - t0:.1f}s)")
    return value


def main(cfg: CensusConfig) -> None:
    print("Conway-Coxeter friezes by width")
    for m in range(0, cfg.max_width + 1):
        cat = P.catalan(m + 1)
        n_tri = len(P.enumerate_triangulations(m + 3))
        n_srch = qf.enumerate_integer_friezes(qf.DynkinType("A", m), cfg.a_bound).count if m else 1
        print(f"  width {m}: Catalan {cat:>4}  triangulations {n_tri:>4}  A_{m} search {n_srch:>4}")

    print(f"D_n friezes (search bound {cfg.d_bound}) against the divisor formula")
    for n in cfg.d_ranks:
        timed(f"D{n} search", lambda: qf.enumerate_integer_friezes(qf.DynkinType("D", n), cfg.d_bound).count)
        print(f"  {'formula':<38} {qf.dn_frieze_count(n):>8}")

    print("SL_{k+1} friezes")
    timed("SL4 width 1 (bound 20)", lambda: len(sl.census(3, 1, 20)))
    timed(f"SL3 width 2 (bound {cfg.sl3_bound})", lambda: len(sl.sl3_width2_census(cfg.sl3_bound)))

    if cfg.long:
        print(f"long runs (bound {cfg.long_bound}; completeness is relative to it)")
        timed("SL3 width 3", lambda: len(sl.census(2, 3, cfg.long_bound)))
        timed("E6 search", lambda: qf.enumerate_integer_friezes(qf.DynkinType("E", 6), cfg.long_bound).count)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-width", type=int, default=5)
    ap.add_argument("--d-ranks", type=int, nargs="+", default=[4])
    ap.add_argument("--long", action="store_true")
    ap.add_argument("--long-bound", type=int, default=30)
    a = ap.parse_args()
    main(CensusConfig(max_width=a.max_width, d_ranks=tuple(a.d_ranks), long=a.long, long_bound=a.long_bound))
