"""Command-line front end.

Subcommands:

    compute p N | compute pk K N | compute pnk N K
    table N [--format csv|json|markdown]
    verify CLAIM [NMIN NMAX]
    peak N
    product QNUM QDEN TOL
    mu N K [--filiform]

Exit codes: 0 success/verified, 1 violation found, 2 usage error,
3 inconclusive (precision or depth cap hit).  All big integers are
emitted as decimal strings; output is deterministic for a given command
line (stable key order, no timestamps).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import sweeps
from .binomial_sums import build_triangle, peak_k, verify_unimodal_profile
from .checks import INCONCLUSIVE, VERIFIED, VIOLATED
from .intervals import BoundReal, mpf_to_fraction
from .lie import MuBoundReport, NilpotentProfile, best_bound
from .partitions import build_partition_table, build_restricted_table
from .qseries import EnclosureWidthError, enclose_euler_product

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


class UsageError(Exception):
    pass


def _emit(document) -> None:
    print(json.dumps(document, indent=2))


def _decimal_str(fr: Fraction, digits: int, round_up: bool) -> str:
    """Directed decimal rendering of a nonnegative rational."""
    scaled = fr * 10**digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    if round_up and r:
        q += 1
    text = str(q).rjust(digits + 1, "0")
    return f"{text[:-digits]}.{text[-digits:]}"


def bound_to_strings(b: BoundReal, digits: int = 24) -> dict:
    """Endpoints of an enclosure, rounded outward in decimal."""
    return {
        "lower": _decimal_str(mpf_to_fraction(b.lower), digits, round_up=False),
        "upper": _decimal_str(mpf_to_fraction(b.upper), digits, round_up=True),
    }


# -- compute ------------------------------------------------------------


def cmd_compute(args) -> int:
    kind = args.kind
    values = args.values
    if kind == "p":
        if len(values) != 1:
            raise UsageError("compute p takes exactly one argument: N")
        (n,) = values
        result = build_partition_table(n)[n]
        arglist = [n]
    elif kind == "pk":
        if len(values) != 2:
            raise UsageError("compute pk takes exactly two arguments: K N")
        k, n = values
        if k < 1:
            raise UsageError("pk needs K >= 1")
        result = build_restricted_table(k, n)[n]
        arglist = [k, n]
    elif kind == "pnk":
        if len(values) != 2:
            raise UsageError("compute pnk takes exactly two arguments: N K")
        n, k = values
        if not 0 <= k <= n:
            raise UsageError(f"pnk needs 0 <= K <= N, got N={n}, K={k}")
        triangle = build_triangle(n)
        result = triangle.value(n, k)
        arglist = [n, k]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown kind {kind!r}")
    _emit({"kind": kind, "args": arglist, "value": str(result)})
    return EXIT_OK


# -- table --------------------------------------------------------------


def _table_rows(n: int) -> list[tuple[int, int, int]]:
    table = build_partition_table(n)
    triangle = build_triangle(n, table)
    row = triangle.row(n)
    return [(k, table[k], row[k]) for k in range(1, n + 1)]


def cmd_table(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("table needs N >= 1")
    rows = _table_rows(n)
    if args.format == "csv":
        out = ["k,p_k,p_n_k"]
        out += [f"{k},{pk},{pnk}" for k, pk, pnk in rows]
        sys.stdout.write("\n".join(out) + "\n")
    elif args.format == "markdown":
        out = ["| k | p_k | p_n_k |", "| --- | --- | --- |"]
        out += [f"| {k} | {pk} | {pnk} |" for k, pk, pnk in rows]
        sys.stdout.write("\n".join(out) + "\n")
    else:
        _emit({
            "n": n,
            "rows": [
                {"k": k, "p_k": str(pk), "p_n_k": str(pnk)} for k, pk, pnk in rows
            ],
        })
    return EXIT_OK


# -- verify -------------------------------------------------------------


def _summary_doc(s: sweeps.ClaimSummary) -> dict:
    doc = {
        "claim": s.claim,
        "range": [s.n_min, s.n_max],
        "checked": s.checked,
        "outcome": s.outcome,
    }
    if s.counterexample is not None:
        doc["counterexample"] = list(s.counterexample)
    if s.min_margin is not None:
        doc["min_margin"] = s.min_margin
    if s.max_precision_bits is not None:
        doc["precision_bits"] = s.max_precision_bits
    if s.notes:
        doc["notes"] = s.notes
    return doc


def _verify_exit(summaries: list[sweeps.ClaimSummary]) -> int:
    if any(s.outcome == VIOLATED for s in summaries):
        return EXIT_VIOLATION
    if any(s.outcome == INCONCLUSIVE for s in summaries):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify(args) -> int:
    claim = args.claim
    if claim != "all" and claim not in sweeps.CLAIMS:
        raise UsageError(
            f"unknown claim {claim!r}; choose from: all, " + ", ".join(sweeps.CLAIMS)
        )
    if (args.n_min is None) != (args.n_max is None):
        raise UsageError("give both NMIN and NMAX, or neither")
    if args.n_min is not None and args.n_min > args.n_max:
        raise UsageError("NMIN must not exceed NMAX")
    if claim == "all":
        summaries = sweeps.run_all(args.n_min, args.n_max)
    else:
        summaries = [sweeps.run_claim(claim, args.n_min, args.n_max)]
    code = _verify_exit(summaries)
    _emit({
        "command": "verify",
        "claims": [_summary_doc(s) for s in summaries],
        "overall": {EXIT_OK: VERIFIED, EXIT_VIOLATION: VIOLATED,
                    EXIT_INCONCLUSIVE: INCONCLUSIVE}[code],
    })
    return code


# -- peak ---------------------------------------------------------------


def cmd_peak(args) -> int:
    n = args.n
    if n < 4:
        raise UsageError("peak is only unique for N >= 4")
    triangle = build_triangle(n)
    profile = verify_unimodal_profile(n, triangle)
    row = triangle.row(n)
    scan_max = max(range(1, n + 1), key=lambda k: row[k])
    _emit({
        "n": n,
        "peak_k": profile.peak_k,
        "scan_argmax": scan_max,
        "strict_up": profile.strict_up,
        "strict_down": profile.strict_down,
        "peak_value": str(row[profile.peak_k]),
    })
    return EXIT_OK if profile.ok and scan_max == profile.peak_k else EXIT_VIOLATION


# -- product ------------------------------------------------------------


def cmd_product(args) -> int:
    if args.q_den <= 0 or not 0 < args.q_num < args.q_den:
        raise UsageError("need 0 < QNUM/QDEN < 1")
    if args.tol <= 0:
        raise UsageError("TOL must be positive")
    q = Fraction(args.q_num, args.q_den)
    try:
        enclosure, ell = enclose_euler_product(q, args.tol)
    except EnclosureWidthError as exc:
        _emit({
            "q": f"{args.q_num}/{args.q_den}",
            "outcome": INCONCLUSIVE,
            "detail": str(exc),
        })
        return EXIT_INCONCLUSIVE
    # enough digits that the printed enclosure stays meaningful at tol
    digits = max(6, math.ceil(-math.log10(args.tol)) + 2)
    doc = {"q": f"{args.q_num}/{args.q_den}", "ell": ell}
    doc.update(bound_to_strings(enclosure, digits))
    doc["width"] = float(enclosure.width)
    _emit(doc)
    return EXIT_OK


# -- mu -----------------------------------------------------------------


def _mu_doc(report: MuBoundReport, filiform_requested: bool) -> dict:
    doc = {
        "n": report.n,
        "k": report.k,
        "filiform": filiform_requested,
        "bounds": {
            "birkhoff": str(report.birkhoff),
            "reed": str(report.reed),
            "pnk": str(report.pnk),
        },
        "corollary": bound_to_strings(report.corollary_numeric, 6),
        "best": report.best,
        "pnk_beats_reed": report.pnk_beats_reed,
    }
    if report.filiform_bound is not None:
        doc["bounds"]["filiform"] = str(report.filiform_bound)
    return doc


def cmd_mu(args) -> int:
    n, k = args.n, args.k
    if not 1 <= k <= n - 1:
        raise UsageError(f"mu needs 1 <= K <= N-1, got N={n}, K={k}")
    if args.filiform and k != n - 1:
        raise UsageError("--filiform requires K = N-1")
    profile = NilpotentProfile(dim_n=n, class_k=k, filiform=args.filiform)
    triangle = build_triangle(n)
    report = best_bound(profile, triangle)
    _emit(_mu_doc(report, args.filiform))
    return EXIT_OK


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binpart",
        description="Exact binomial partition sums and certified bound verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print one exact value")
    p_compute.add_argument("kind", choices=["p", "pk", "pnk"])
    p_compute.add_argument("values", nargs="+", type=int)
    p_compute.set_defaults(func=cmd_compute)

    p_table = sub.add_parser("table", help="rows (k, p(k), p(n,k)) for k=1..N")
    p_table.add_argument("n", type=int)
    p_table.add_argument("--format", choices=["csv", "json", "markdown"],
                         default="csv")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run verification sweeps")
    p_verify.add_argument("claim")
    p_verify.add_argument("n_min", nargs="?", type=int, default=None)
    p_verify.add_argument("n_max", nargs="?", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_peak = sub.add_parser("peak", help="peak index of row N, checked by scan")
    p_peak.add_argument("n", type=int)
    p_peak.set_defaults(func=cmd_peak)

    p_product = sub.add_parser(
        "product", help="enclose prod 1/(1-q^j) for rational q"
    )
    p_product.add_argument("q_num", type=int)
    p_product.add_argument("q_den", type=int)
    p_product.add_argument("tol", type=float)
    p_product.set_defaults(func=cmd_product)

    p_mu = sub.add_parser("mu", help="Ado-type dimension bounds for (N,K)")
    p_mu.add_argument("n", type=int)
    p_mu.add_argument("k", type=int)
    p_mu.add_argument("--filiform", action="store_true")
    p_mu.set_defaults(func=cmd_mu)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        sys.set_int_max_str_digits(2_000_000)
    except AttributeError:
        pass
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())
