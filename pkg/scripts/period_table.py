"""Additive and multiplicative periods of friezes on Dynkin repetition quivers.

For each type, a random rational slice is propagated and the minimal period
is compared with the Coxeter number h and with h + 2.
"""

import argparse
import random
from dataclasses import dataclass
from fractions import Fraction

from friezekit import quiverfrieze as qf
from friezekit.exact import matrix_order


@dataclass
class PeriodConfig:
    max_a: int = 8
    max_d: int = 8
    seed: int = 0


def types(cfg):
    yield from (qf.DynkinType("A", n) for n in range(1, cfg.max_a + 1))
    yield from (qf.DynkinType("D", n) for n in range(4, cfg.max_d + 1))
    yield from (qf.DynkinType("E", n) for n in (6, 7, 8))


def main(cfg: PeriodConfig) -> None:
    rng = random.Random(cfg.seed)
    print(f"{'type':<5}{'h':>4}{'ord Phi':>9}{'additive':>10}{'mult':>6}{'h+2':>5}  nu fixes all")
    for t in types(cfg):
        Q = qf.dynkin_quiver(t)
        add = qf.QFrieze(Q, "additive", [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(t.rank)])
        mul = qf.QFrieze(Q, "multiplicative", [Fraction(rng.randint(1, 9), rng.randint(1, 5)) for _ in range(t.rank)])
        fixes = all(qf.nakayama(t, qf.RepVertex(0, i)).i == i for i in range(1, t.rank + 1))
        h = t.coxeter_number
        order = matrix_order(qf.coxeter_transformation(Q)[0])
        print(f"{str(t):<5}{h:>4}{order:>9}{qf.period(add):>10}{qf.period(mul):>6}{h + 2:>5}  {fixes}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-a", type=int, default=8)
    ap.add_argument("--max-d", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    main(PeriodConfig(a.max_a, a.max_d, a.seed))
