"""Tabulate H_l^m(-2) mod 8 by the class of l mod 8.

For each even m the zero column should be l = 2 (4 | m) or l = 5 (m = 2 mod 4);
odd m never vanish mod 2.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from dyadic_cone.holt_ille import h_mod


@dataclass
class Config:
    m_max: int = 14
    l_max: int = 512


def table(m: int, l_max: int) -> dict[int, Counter]:
    rows: dict[int, Counter] = {c: Counter() for c in range(8)}
    for l in range(m, l_max + 1):
        rows[l % 8][h_mod(l, m, 3).value] += 1
    return rows


def main(cfg: Config) -> None:
    for m in range(cfg.m_max + 1):
        rows = table(m, cfg.l_max)
        zero = [c for c, cnt in rows.items() if cnt and set(cnt) == {0}]
        mixed = [c for c, cnt in rows.items() if cnt[0] and len(cnt) > 1]
        print(f"m={m:<3} zero classes mod 8: {zero or '-'}"
              + (f"  mixed: {mixed}" if mixed else ""))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m-max", type=int, default=Config.m_max)
    ap.add_argument("--l-max", type=int, default=Config.l_max)
    a = ap.parse_args()
    main(Config(a.m_max, a.l_max))
