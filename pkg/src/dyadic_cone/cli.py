"""Command-line front end. Every result is one JSON line on stdout.

Exit codes: 0 success, 1 usage error, 2 domain error (OddM, BadRange, ...),
3 when ``selftest`` finds a failing invariant.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
from typing import Iterator, Optional, Sequence

from . import selftest
from .errors import DyadicConeError
from .exact import format_rational, parse_rational, reduce_mod, v2
from .harmonic import divides_cone, harmonic_multiplier_space, multiplier_dimensions, solid_harmonic
from .holt_ille import h_at_minus2, h_mod, sigma
from .legendre import divides_P2
from .lifting import (dyadic_root, exhaustive_verify, lift_step, low_bits, scan_values,
                      stability_check)
from .report import (ReportRecord, encode_poly, encode_residue, encode_root, encode_scan,
                     encode_stability, encode_valuation)

log = logging.getLogger("dyadic_cone")

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_SELFTEST = 0, 1, 2, 3
MAX_BITS_ENV = "DYADIC_CONE_MAX_BITS"
DEFAULT_MAX_BITS = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return v


def _int_list(text: str) -> list[int]:
    return [_nonneg(t) for t in text.split(",") if t]


def max_bits() -> int:
    raw = os.environ.get(MAX_BITS_ENV)
    if raw is None:
        return DEFAULT_MAX_BITS
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_BITS_ENV} must be a decimal integer, got {raw!r}") from None


def _check_bits(bits: int, flag: str = "--bits", extra: int = 0) -> None:
    cap = max_bits()
    if bits + extra > cap:
        raise UsageError(f"argument {flag}: {bits} exceeds {MAX_BITS_ENV}={cap}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dyadic-cone",
                description="Exact and 2-adic tests of P_2 | P_l^m and harmonic cone divisibility.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sigma", help="coefficient sigma_l^m(k)")
    s.add_argument("--l", type=_nonneg, required=True)
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--k", type=_nonneg, required=True)

    s = sub.add_parser("hval", help="exact H_l^m(-2)")
    s.add_argument("--l", type=_nonneg, required=True)
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--table", action="store_true", help="include every sigma value")

    s = sub.add_parser("hmod", help="H_l^m(-2) mod 2^N")
    s.add_argument("--l", type=_nonneg, required=True)
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--bits", type=_nonneg, required=True)

    s = sub.add_parser("divides", help="P_2 | P_l^m by the Legendre oracle and by H_l^m(-2)")
    s.add_argument("--l", type=_nonneg, required=True)
    s.add_argument("--m", type=_nonneg, required=True)

    s = sub.add_parser("root", help="dyadic root of H^m mod 2^N with its lifting trace")
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--bits", type=_nonneg, required=True)

    s = sub.add_parser("lift", help="one lifting step from mod 2^N to mod 2^(N+1)")
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--r", type=_nonneg, required=True)
    s.add_argument("--bits", type=_nonneg, required=True)

    s = sub.add_parser("scan", help="exhaustive uniqueness check of lifting over a window of l")
    s.add_argument("--m", type=_int_list, required=True, help="comma-separated even orders")
    s.add_argument("--bits", type=_nonneg, required=True)
    s.add_argument("--window", type=_nonneg, default=None, help="default 2^(N+2)")
    s.add_argument("--start", type=_nonneg, default=None, help="default m")
    s.add_argument("--jobs", type=_nonneg, default=1)
    s.add_argument("--csv", action="store_true", help="emit l,m,N,residue,exact_value rows")

    s = sub.add_parser("stability", help="random test of H_l = H_l' mod 2^N when l = l' mod 2^N")
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--bits", type=_nonneg, required=True)
    s.add_argument("--samples", type=_nonneg, default=200)
    s.add_argument("--seed", type=_nonneg, default=0)
    s.add_argument("--jobs", type=_nonneg, default=1)

    s = sub.add_parser("multipliers", help="harmonic f with p_b f harmonic, deg f <= dmax")
    s.add_argument("--b", type=_rational, default=parse_rational("1"))
    s.add_argument("--dmax", type=_nonneg, required=True)

    s = sub.add_parser("solid", help="Cartesian solid harmonic and its quotient by p_b")
    s.add_argument("--l", type=_nonneg, required=True)
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--b", type=_rational, default=parse_rational("1"))

    s = sub.add_parser("selftest", help="run the invariant suite")
    s.add_argument("--quick", action="store_true")
    return p


def _params(args: argparse.Namespace) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in ("command", "verbose"):
            continue
        if hasattr(v, "denominator") and not isinstance(v, int):
            v = format_rational(v)
        out[k] = v
    return out


def _run(args: argparse.Namespace, out) -> Iterator[ReportRecord]:
    cmd = args.command
    params = _params(args)

    def rec(result) -> ReportRecord:
        return ReportRecord(cmd, params, result)

    if cmd == "sigma":
        yield rec(format_rational(sigma(args.l, args.m, args.k)))
    elif cmd == "hval":
        h = h_at_minus2(args.l, args.m)
        result = {"exact": format_rational(h.exact), "v2": encode_valuation(v2(h.exact)),
                  "zero": h.is_zero}
        if args.table:
            result["sigma"] = [format_rational(s) for s in h.table.entries]
        yield rec(result)
    elif cmd == "hmod":
        _check_bits(args.bits)
        yield rec(encode_residue(h_mod(args.l, args.m, args.bits)))
    elif cmd == "divides":
        oracle = divides_P2(args.l, args.m)
        via_h = h_at_minus2(args.l, args.m).is_zero
        yield rec({"oracle": oracle, "holt_ille": via_h, "agree": oracle == via_h})
    elif cmd == "root":
        _check_bits(args.bits)
        yield rec(encode_root(dyadic_root(args.m, args.bits)))
    elif cmd == "lift":
        _check_bits(args.bits, extra=1)
        yield rec(encode_residue(lift_step(args.m, args.r, args.bits)))
    elif cmd == "scan":
        _check_bits(args.bits, extra=1)
        window = args.window if args.window is not None else 1 << (args.bits + 2)
        writer = csv.writer(out, lineterminator="\n") if args.csv else None
        if writer:
            writer.writerow(["l", "m", "N", "residue", "exact_value"])
        for m in sorted(set(args.m)):
            low_bits(m)  # OddM before any scanning
            start = m if args.start is None else args.start
            log.info("scan m=%d over [%d, %d)", m, start, start + window)
            values = scan_values(m, start, window, jobs=max(args.jobs, 1))
            rep = exhaustive_verify(m, args.bits, window, start, values=values)
            if writer:
                for l in sorted(values):
                    writer.writerow([l, m, args.bits, reduce_mod(values[l], args.bits).value,
                                     format_rational(values[l])])
            else:
                yield ReportRecord(cmd, {**params, "m": m}, encode_scan(rep))
    elif cmd == "stability":
        _check_bits(args.bits)
        rep = stability_check(args.m, args.bits, args.samples, seed=args.seed,
                              jobs=max(args.jobs, 1))
        yield rec(encode_stability(rep))
    elif cmd == "multipliers":
        basis = harmonic_multiplier_space(args.b, args.dmax)
        dims = multiplier_dimensions(args.b, args.dmax)
        yield rec({"dimension": len(basis), "basis": [encode_poly(f) for f in basis],
                   "by_degree": {str(d): n for d, n in dims.items()}})
    elif cmd == "solid":
        re_part, im_part = solid_harmonic(args.l, args.m)
        result = {"real": encode_poly(re_part), "imag": encode_poly(im_part)}
        for key, part in (("real", re_part), ("imag", im_part)):
            q = divides_cone(part, args.b)
            result[f"{key}_quotient"] = None if q is None else encode_poly(q)
        yield rec(result)
    elif cmd == "selftest":
        failed = False
        for name, ok, detail in selftest.run(quick=args.quick):
            failed |= not ok
            yield rec({"check": name, "passed": ok, "detail": detail})
        if failed:
            raise _SelftestFailed()


class _SelftestFailed(Exception):
    pass


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"dyadic-cone: usage error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    logging.basicConfig(stream=err, level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    code = EXIT_OK
    try:
        for record in _run(args, out):
            print(record.to_json(), file=out)
    except UsageError as exc:
        print(f"dyadic-cone: usage error: {exc}", file=err)
        return EXIT_USAGE
    except DyadicConeError as exc:
        record = ReportRecord(args.command, _params(args), status="error",
                              error=type(exc).__name__, message=str(exc))
        print(record.to_json(), file=out)
        print(f"dyadic-cone: {type(exc).__name__}: {exc}", file=err)
        code = EXIT_DOMAIN
    except _SelftestFailed:
        code = EXIT_SELFTEST
    out.flush()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
