"""Bit-by-bit recovery of the dyadic root l of H^m(l) = H_l^m(-2) = 0, m even.

The three lowest bits are fixed by m mod 4 (l = 2 mod 8 when 4 | m, l = 5 mod 8
when m = 2 mod 4). Above that, for N >= 3,

    H_{l + 2^N}^m(-2) = H_l^m(-2) + 2^N   (mod 2^{N+1})

on the admissible class, so a root mod 2^N has exactly one lift mod 2^{N+1}.
H^m is evaluated at the smallest representative l >= m of a residue class.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import BadModulus, BadRange, NotARoot, OddM
from .exact import DyadicResidue, format_rational, reduce_mod
from .holt_ille import h_at_minus2

MIN_LIFT_BITS = 3


def _check_even(m: int) -> None:
    if m < 0:
        raise BadRange(f"m must be non-negative, got {m}")
    if m % 2:
        raise OddM(f"m={m} is odd: P_2 never divides P_l^m, there is no root to lift")


def low_bits(m: int) -> DyadicResidue:
    """The root's residue mod 8."""
    _check_even(m)
    return DyadicResidue(3, 2 if m % 4 == 0 else 5)


def representative(residue: int, mod_exp: int, m: int) -> int:
    """Smallest l >= m with l = residue (mod 2^mod_exp)."""
    step = 1 << mod_exp
    residue %= step
    if residue >= m:
        return residue
    return residue + step * (-(-(m - residue) // step))


def _h(l: int, m: int) -> Fraction:
    return h_at_minus2(l, m).exact


@dataclass(frozen=True)
class TraceStep:
    """One determined level of the root.

    ``witness_l`` is the smallest representative of ``residue`` (>= m) and
    ``h_value`` the exact H at that witness, which vanishes mod 2^mod_exp.
    ``q`` is the bit added on entering this level (None for the initial level).
    """

    mod_exp: int
    residue: int
    witness_l: int
    h_value: str
    q: Optional[int] = None


@dataclass(frozen=True)
class DyadicRootApprox:
    m: int
    mod_exp: int
    residue: int
    trace: tuple[TraceStep, ...] = ()

    def as_residue(self) -> DyadicResidue:
        return DyadicResidue(self.mod_exp, self.residue)


def _lift(m: int, r: int, mod_exp: int) -> tuple[int, int]:
    """Return (new residue mod 2^(mod_exp+1), q)."""
    rep = representative(r, mod_exp, m)
    h = reduce_mod(_h(rep, m), mod_exp + 1).value
    if h & ((1 << mod_exp) - 1):
        raise NotARoot(
            f"H_{rep}^{m}(-2) = {h} (mod 2^{mod_exp + 1}) does not vanish mod 2^{mod_exp}")
    q = (h >> mod_exp) & 1
    # Lifting from rep, not from r: rep may already carry bit mod_exp.
    return (rep + (q << mod_exp)) % (1 << (mod_exp + 1)), q


def lift_step(m: int, r: int, mod_exp: int) -> DyadicResidue:
    """Lift a root of H^m mod 2^mod_exp to the unique root mod 2^(mod_exp+1)."""
    _check_even(m)
    if mod_exp < MIN_LIFT_BITS:
        raise BadModulus(f"lifting needs N >= {MIN_LIFT_BITS}, got {mod_exp}")
    new, _ = _lift(m, r, mod_exp)
    return DyadicResidue(mod_exp + 1, new)


def _witness_step(m: int, residue: int, mod_exp: int, q: Optional[int]) -> TraceStep:
    w = representative(residue, mod_exp, m)
    h = _h(w, m)
    if reduce_mod(h, mod_exp).value:
        raise AssertionError(f"lifted residue {residue} mod 2^{mod_exp} is not a root")
    return TraceStep(mod_exp, residue, w, format_rational(h), q)


def dyadic_root(m: int, bits: int) -> DyadicRootApprox:
    _check_even(m)
    if bits < MIN_LIFT_BITS:
        raise BadModulus(f"need at least {MIN_LIFT_BITS} bits, got {bits}")
    r = low_bits(m).value
    trace = [_witness_step(m, r, MIN_LIFT_BITS, None)]
    for n in range(MIN_LIFT_BITS, bits):
        r, q = _lift(m, r, n)
        trace.append(_witness_step(m, r, n + 1, q))
    return DyadicRootApprox(m, bits, r, tuple(trace))


def _h_many(m: int, ls: Sequence[int], jobs: int) -> dict[int, Fraction]:
    if jobs > 1 and len(ls) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            vals = list(pool.map(_h, ls, [m] * len(ls), chunksize=16))
    else:
        vals = [_h(l, m) for l in ls]
    return dict(zip(ls, vals))


def scan_values(m: int, window_start: int, window_length: int,
                jobs: int = 1) -> dict[int, Fraction]:
    """Exact H_l^m(-2) for every l >= m in the window, keyed by l."""
    ls = [l for l in range(window_start, window_start + window_length) if l >= m]
    return _h_many(m, ls, jobs)


def _single_class(ls: Sequence[int], mod_exp: int, window: Iterable[int]) -> Optional[int]:
    """The residue c if ``ls`` is exactly {l in window : l = c mod 2^mod_exp}, else None."""
    if not ls:
        return None
    c = ls[0] % (1 << mod_exp)
    full = [l for l in window if l % (1 << mod_exp) == c]
    return c if list(ls) == full else None


@dataclass(frozen=True)
class ScanReport:
    m: int
    mod_exp: int
    window_start: int
    window_length: int
    # l in the window with H = 0 mod 2^(N+1); all of them also vanish mod 2^N
    solutions: tuple[int, ...]
    # l in the window with H = 0 mod 2^N
    base_solutions: tuple[int, ...]
    solution_class: Optional[int]
    claim_verified: bool


def exhaustive_verify(m: int, mod_exp: int, window_length: int,
                      window_start: Optional[int] = None, jobs: int = 1,
                      values: Optional[dict[int, Fraction]] = None) -> ScanReport:
    """Check by brute force that roots mod 2^N lift to exactly one class mod 2^(N+1).

    Verified means: the roots mod 2^N in the window are one full residue class
    mod 2^N, the roots mod 2^(N+1) are one full class mod 2^(N+1) inside it, and
    every root l mod 2^N has exactly one root in [l, l + 2^(N+1)) when that
    range fits in the window.
    """
    _check_even(m)
    if mod_exp < 1:
        raise BadModulus(f"need N >= 1, got {mod_exp}")
    if window_length < 1 << (mod_exp + 1):
        raise BadRange(f"window must have length >= 2^{mod_exp + 1}")
    start = m if window_start is None else window_start
    if values is None:
        values = scan_values(m, start, window_length, jobs)
    window = [l for l in range(start, start + window_length) if l >= m]
    base = [l for l in window if reduce_mod(values[l], mod_exp).value == 0]
    sols = [l for l in base if reduce_mod(values[l], mod_exp + 1).value == 0]

    c_base = _single_class(base, mod_exp, window)
    c_sol = _single_class(sols, mod_exp + 1, window)
    ok = c_base is not None and c_sol is not None and c_sol % (1 << mod_exp) == c_base
    if ok:
        sol_set = set(sols)
        end = start + window_length
        span = 1 << (mod_exp + 1)
        for l in base:
            if l + span <= end:
                hits = sum(1 for t in range(l, l + span) if t in sol_set)
                if hits != 1:
                    ok = False
                    break
    return ScanReport(m, mod_exp, start, window_length, tuple(sols), tuple(base),
                      c_sol, ok)


@dataclass(frozen=True)
class StabilityReport:
    m: int
    mod_exp: int
    pairs_checked: int
    failures: tuple[tuple[int, int], ...] = field(default=())

    @property
    def vacuous(self) -> bool:
        return self.pairs_checked == 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed


def sample_pairs(m: int, mod_exp: int, count: int, seed: int = 0,
                 span: Optional[int] = None, max_shift: int = 4) -> list[tuple[int, int]]:
    """Random pairs (l, l + j 2^N), j in [1, max_shift], with l >= m admissible mod 8."""
    low = low_bits(m).value
    span = span if span is not None else 1 << (mod_exp + 3)
    first = representative(low, 3, m)
    n_slots = max(span // 8, 1)
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        l = first + 8 * rng.randrange(n_slots)
        pairs.append((l, l + (rng.randint(1, max_shift) << mod_exp)))
    return pairs


def stability_check(m: int, mod_exp: int, sample_count: int = 0, seed: int = 0,
                    pairs: Optional[Iterable[tuple[int, int]]] = None,
                    jobs: int = 1) -> StabilityReport:
    """Test that l = l' (mod 2^N) implies H_l = H_l' (mod 2^N) on admissible l.

    Uses ``pairs`` when given, otherwise ``sample_count`` random pairs.
    """
    _check_even(m)
    if mod_exp < MIN_LIFT_BITS:
        raise BadModulus(f"stability is only claimed for N >= {MIN_LIFT_BITS}")
    low = low_bits(m).value
    if pairs is None:
        pairs = sample_pairs(m, mod_exp, sample_count, seed)
    pairs = list(pairs)
    for l, lt in pairs:
        if min(l, lt) < m or l % 8 != low or lt % 8 != low:
            raise BadRange(f"pair ({l}, {lt}) is not admissible for m={m}")
        if (l - lt) % (1 << mod_exp):
            raise BadRange(f"pair ({l}, {lt}) is not congruent mod 2^{mod_exp}")
    needed = sorted({l for pair in pairs for l in pair})
    values = _h_many(m, needed, jobs)
    failures = tuple(
        (l, lt) for l, lt in pairs
        if reduce_mod(values[l], mod_exp) != reduce_mod(values[lt], mod_exp))
    return StabilityReport(m, mod_exp, len(pairs), failures)
