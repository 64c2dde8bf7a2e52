"""Exact polynomials in x, y, z: Laplacians, harmonic multipliers, solid
harmonics and division by the quadric cone x^2 + b y^2 - (b+1) z^2.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Optional

from .errors import BadRange
from .exact import NEG_INFINITY, Rational, as_fraction, format_rational, parse_rational
from .legendre import assoc_legendre
from .linalg import nullspace

Exp = tuple[int, int, int]


class TriPoly:
    """Polynomial in x, y, z with Fraction coefficients keyed by exponent triple."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, Rational] | None = None):
        self.terms: dict[Exp, Fraction] = {
            e: as_fraction(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c: Rational) -> TriPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, k: int, c: Rational = 1) -> TriPoly:
        return cls({(i, j, k): c})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        return max((sum(e) for e in self.terms), default=NEG_INFINITY)

    def homogeneous_degree(self) -> Optional[int]:
        """d when every term has total degree d; None for mixed degrees or zero."""
        degs = {sum(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TriPoly.const(other)
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TriPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TriPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TriPoly({e: c * other for e, c in self.terms.items()})
        out: dict[Exp, Fraction] = {}
        for (a1, b1, c1), u in self.terms.items():
            for (a2, b2, c2), v in other.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + u * v
        return TriPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = TriPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def diff(self, var: int) -> TriPoly:
        """Partial derivative; var is 0, 1, 2 for x, y, z."""
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                ne = list(e)
                ne[var] -= 1
                out[tuple(ne)] = c * e[var]
        return TriPoly(out)

    def __call__(self, x: Rational, y: Rational, z: Rational) -> Fraction:
        return sum((c * Fraction(x) ** i * Fraction(y) ** j * Fraction(z) ** k
                    for (i, j, k), c in self.terms.items()), Fraction(0))

    def coefficient(self, e: Exp) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"TriPoly({format_poly(self)!r})"


X = TriPoly.monomial(1, 0, 0)
Y = TriPoly.monomial(0, 1, 0)
Z = TriPoly.monomial(0, 0, 1)


def format_poly(f: TriPoly) -> str:
    """Terms "coeff x^i y^j z^k", lex order x > y > z, largest first, joined by " + "."""
    if f.is_zero():
        return "0"
    return " + ".join(f"{format_rational(c)} x^{i} y^{j} z^{k}"
                      for (i, j, k), c in sorted(f.terms.items(), reverse=True))


_TERM = re.compile(r"^(-?\d+(?:/\d+)?) x\^(\d+) y\^(\d+) z\^(\d+)$")


def parse_poly(text: str) -> TriPoly:
    if text.strip() == "0":
        return TriPoly()
    terms = {}
    for part in text.split(" + "):
        mt = _TERM.match(part.strip())
        if not mt:
            raise ValueError(f"bad polynomial term {part!r}")
        e = (int(mt[2]), int(mt[3]), int(mt[4]))
        terms[e] = terms.get(e, 0) + parse_rational(mt[1])
    return TriPoly(terms)


def laplacian(f: TriPoly) -> TriPoly:
    return f.diff(0).diff(0) + f.diff(1).diff(1) + f.diff(2).diff(2)


def gradient_pairing(p: TriPoly, f: TriPoly) -> TriPoly:
    """sum over x, y, z of d_a p * d_a f."""
    return sum((p.diff(a) * f.diff(a) for a in range(3)), TriPoly())


@dataclass(frozen=True)
class ConeQuadric:
    """x^2 + b y^2 - (b+1) z^2; b = 1 is the right circular cone."""

    b: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "b", as_fraction(self.b))
        if self.b < 1:
            raise BadRange(f"b = {format_rational(self.b)} is outside the validated range b >= 1")

    @property
    def poly(self) -> TriPoly:
        return TriPoly({(2, 0, 0): 1, (0, 2, 0): self.b, (0, 0, 2): -(self.b + 1)})


def monomials(d: int) -> list[Exp]:
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def _coeff_matrix(polys: list[TriPoly], basis: list[Exp]) -> list[list[Fraction]]:
    """Matrix whose columns are the coefficient vectors of ``polys``."""
    return [[p.coefficient(e) for p in polys] for e in basis]


def _combine(vec, polys: list[TriPoly]) -> TriPoly:
    return sum((p * c for c, p in zip(vec, polys) if c), TriPoly())


@functools.lru_cache(maxsize=64)
def harmonic_basis(d: int) -> tuple[TriPoly, ...]:
    """Basis of the homogeneous harmonic polynomials of degree d (2d+1 of them)."""
    if d < 0:
        raise BadRange(f"degree must be non-negative, got {d}")
    mons = monomials(d)
    forms = [TriPoly.monomial(*e) for e in mons]
    if d < 2:
        return tuple(forms)
    images = [laplacian(f) for f in forms]
    kernel = nullspace(_coeff_matrix(images, monomials(d - 2)), len(forms))
    return tuple(_combine(v, forms) for v in kernel)


def multiplier_basis_at_degree(b: Rational, d: int) -> list[TriPoly]:
    """Homogeneous harmonic f of degree d with p_b * f harmonic."""
    p = ConeQuadric(b).poly
    hs = list(harmonic_basis(d))
    images = [gradient_pairing(p, h) for h in hs]
    kernel = nullspace(_coeff_matrix(images, monomials(d)), len(hs))
    return [_combine(v, hs) for v in kernel]


def harmonic_multiplier_space(b: Rational, d_max: int) -> list[TriPoly]:
    """Basis of {f : deg f <= d_max, f and p_b f harmonic}, built degree by degree."""
    if d_max < 0:
        raise BadRange(f"d_max must be non-negative, got {d_max}")
    out: list[TriPoly] = []
    for d in range(d_max + 1):
        out.extend(multiplier_basis_at_degree(b, d))
    return out


def multiplier_dimensions(b: Rational, d_max: int) -> dict[int, int]:
    return {d: len(multiplier_basis_at_degree(b, d)) for d in range(d_max + 1)}


def solid_harmonic(l: int, m: int) -> tuple[TriPoly, TriPoly]:
    """Real and imaginary parts of r^l P_l^m(cos theta) e^{i m phi} in x, y, z.

    With D the m-th derivative of P_l this is (x + iy)^m * sum_j D_j z^j r^(l-m-j),
    and only even powers of r occur.
    """
    if not (0 <= m <= l):
        raise BadRange(f"need 0 <= m <= l, got l={l}, m={m}")
    core = assoc_legendre(l, m).core
    r2 = X * X + Y * Y + Z * Z
    radial = TriPoly()
    for j, c in enumerate(core.coeffs):
        if c:
            radial = radial + TriPoly.monomial(0, 0, j, c) * r2 ** ((l - m - j) // 2)
    re_part: dict[Exp, Fraction] = {}
    im_part: dict[Exp, Fraction] = {}
    for t in range(m + 1):
        # (iy)^t contributes i^t
        coeff = comb(m, t) * (-1 if (t // 2) % 2 else 1)
        target = im_part if t % 2 else re_part
        target[(m - t, t, 0)] = coeff
    return TriPoly(re_part) * radial, TriPoly(im_part) * radial


def divides_cone(h: TriPoly, b: Rational = 1) -> Optional[TriPoly]:
    """Exact quotient h / p_b, or None when p_b does not divide h.

    p_b is monic of degree 2 in x, so reducing every term with x-degree >= 2
    (highest x-degree first) leaves a unique remainder of x-degree <= 1.
    """
    p = ConeQuadric(b).poly
    tail = p - TriPoly.monomial(2, 0, 0)
    rem = dict(h.terms)
    quot: dict[Exp, Fraction] = {}
    while True:
        big = [e for e in rem if e[0] >= 2]
        if not big:
            break
        e = max(big)
        c = rem.pop(e)
        qe = (e[0] - 2, e[1], e[2])
        quot[qe] = quot.get(qe, 0) + c
        for (i, j, k), t in tail.terms.items():
            ne = (qe[0] + i, qe[1] + j, qe[2] + k)
            v = rem.get(ne, 0) - c * t
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    if rem:
        return None
    return TriPoly(quot)


def cone_divides_solid_harmonic(l: int, m: int, b: Rational = 1) -> bool:
    """Whether p_b divides every nonzero part of solid_harmonic(l, m)."""
    parts = [part for part in solid_harmonic(l, m) if not part.is_zero()]
    return all(divides_cone(part, b) is not None for part in parts)
