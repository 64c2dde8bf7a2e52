"""Lift the root of H^m(-2) bit by bit and print the lifting trace.

    python3 scripts/lift_roots.py --m 0 2 4 6 8 --bits 24
"""

import argparse
from dataclasses import dataclass, field

from dyadic_cone.lifting import dyadic_root


@dataclass
class Config:
    orders: list[int] = field(default_factory=lambda: [0, 2, 4, 6, 8, 10, 12])
    bits: int = 16
    show_trace: bool = False


def main(cfg: Config) -> None:
    print(f"{'m':>3} {'N':>3} {'root mod 2^N':>14}  corrections")
    for m in cfg.orders:
        root = dyadic_root(m, cfg.bits)
        flips = [s.mod_exp for s in root.trace if s.q == 1]
        print(f"{m:>3} {cfg.bits:>3} {root.residue:>14}  {flips or '-'}")
        if cfg.show_trace:
            for s in root.trace:
                print(f"      N={s.mod_exp:<3} r={s.residue:<10} l={s.witness_l:<10} "
                      f"q={s.q} H={s.h_value}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, nargs="+", default=Config().orders)
    ap.add_argument("--bits", type=int, default=Config.bits)
    ap.add_argument("--trace", action="store_true")
    a = ap.parse_args()
    main(Config(orders=a.m, bits=a.bits, show_trace=a.trace))
