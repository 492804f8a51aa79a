"""Random SL_{k+1} friezes: duality shifts, Gale transform, T-system and operator commutation."""

import argparse
import math
import random
from dataclasses import dataclass

from friezekit import sltiling as sl


@dataclass
class DualityConfig:
    trials: int = 20
    max_k: int = 3
    max_w: int = 4
    seed: int = 1


def main(cfg: DualityConfig) -> None:
    rng = random.Random(cfg.seed)
    print(f"{'k':>2}{'w':>3}{'n':>3}  valid  dual  double  gale  tbox  commute")
    for k in range(1, cfg.max_k + 1):
        for w in range(1, cfg.max_w + 1):
            n = k + w + 2
            tally = [0] * 6
            for _ in range(cfg.trials):
                F = sl.random_frieze(k, w, rng)
                tally[0] += sl.validate(F).ok
                tally[1] += sl.check_duality(F)
                tally[2] += sl.check_double_dual(F)
                tally[3] += sl.gale_triangle_ok(F) and sl.validate(sl.gale_dual(F)).ok
                tally[4] += sl.tsystem_box(F).max_abs_residual() == 0
                tally[5] += sl.operators_commute(sl.equation_of(F)) if math.gcd(k + 1, n) == 1 else 0
            com = f"{tally[5]:>7}" if math.gcd(k + 1, n) == 1 else "      -"
            print(f"{k:>2}{w:>3}{n:>3}  " + "  ".join(f"{x:>4}" for x in tally[:5]) + com)
    print(f"(counts out of {cfg.trials} per row)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    a = ap.parse_args()
    main(DualityConfig(trials=a.trials, seed=a.seed))
