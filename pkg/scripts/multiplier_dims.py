"""Per-degree dimension of {harmonic f : p_b f harmonic} for a few cones."""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from dyadic_cone.exact import format_rational, parse_rational
from dyadic_cone.harmonic import format_poly, harmonic_multiplier_space, multiplier_dimensions


@dataclass
class Config:
    cones: list[Fraction] = field(default_factory=lambda: [Fraction(1), Fraction(2), Fraction(3),
                                                           Fraction(5, 2)])
    d_max: int = 12
    show_basis: bool = False


def main(cfg: Config) -> None:
    for b in cfg.cones:
        dims = multiplier_dimensions(b, cfg.d_max)
        nonzero = {d: n for d, n in dims.items() if n}
        print(f"b={format_rational(b):<5} total={sum(dims.values())}  by degree {nonzero}")
        if cfg.show_basis:
            for f in harmonic_multiplier_space(b, cfg.d_max):
                print("    ", format_poly(f))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--b", type=parse_rational, nargs="+", default=Config().cones)
    ap.add_argument("--dmax", type=int, default=Config.d_max)
    ap.add_argument("--basis", action="store_true")
    a = ap.parse_args()
    main(Config(cones=a.b, d_max=a.dmax, show_basis=a.basis))
