"""Sweep every triangulation and dissection up to a size and check the determinant formulas."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from friezekit import polygon as P


@dataclass
class SweepConfig:
    max_tri: int = 10
    max_dis: int = 9


def main(cfg: SweepConfig) -> None:
    for n in range(3, cfg.max_tri + 1):
        t0 = time.perf_counter()
        dets = Counter(int(P.matrix_determinant(P.bci_matrix(T))) for T in P.enumerate_triangulations(n))
        print(f"BCI n={n:>2}: {sum(dets.values()):>5} triangulations, determinants {dict(dets)}, "
              f"formula {P.bci_determinant_formula(n)}  ({time.perf_counter() - t0:.1f}s)")
    for n in range(3, cfg.max_dis + 1):
        bad = 0
        Ds = P.enumerate_dissections(n)
        for D in Ds:
            bad += P.matrix_determinant(P.dissection_matrix(D)) != P.dissection_determinant_formula(D)
        print(f"dissections n={n}: {len(Ds):>5} checked, {bad} off the product formula")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-tri", type=int, default=10)
    ap.add_argument("--max-dis", type=int, default=9)
    a = ap.parse_args()
    main(SweepConfig(a.max_tri, a.max_dis))
