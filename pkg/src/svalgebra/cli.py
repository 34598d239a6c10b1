"""Command-line frontend.

Exit codes: 0 = all checks agree with the expected classification,
1 = usage/parse error, 2 = a computed dimension or verification disagrees.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import Params, classify_mu, degree, enumerate_window, jacobi_defect
from .cocycles import (
    KnownCocycleId,
    cocycle_defect,
    expected_h2,
    known_cocycle_value,
    regime_valid,
)
from .linalg import in_span
from .solver import (
    H2Report,
    coboundary_basis,
    degree_zero_pairs,
    solve_h2,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"invalid rational {text!r}: {exc}") from exc


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _build_parser() -> _Parser:
    parser = _Parser(prog="svalgebra", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_params(p):
        p.add_argument("--lambda", dest="lam", type=_rational, required=True)
        p.add_argument("--mu", type=_rational, required=True)

    solve = sub.add_parser("solve", help="compute the truncated cohomology at one parameter point")
    add_params(solve)
    solve.add_argument("--window", type=int, default=10)
    solve.add_argument("--inner", type=int, default=6)
    solve.add_argument("--format", choices=("table", "json", "csv"), default="table")

    sw = sub.add_parser("sweep", help="run solve over a grid file of 'lambda mu' lines")
    sw.add_argument("--grid", required=True)
    sw.add_argument("--window", type=int, default=10)
    sw.add_argument("--inner", type=int, default=6)
    sw.add_argument("--format", choices=("table", "json", "csv"), default="table")

    vk = sub.add_parser("verify-known", help="check the explicit generators at one parameter point")
    add_params(vk)
    vk.add_argument("--window", type=int, default=20)

    jc = sub.add_parser("jacobi-check", help="exhaustive Jacobi identity check on a window")
    add_params(jc)
    jc.add_argument("--window", type=int, default=6)

    return parser


def report_dict(report: H2Report) -> dict:
    params = report.params
    expected_dim, _ = expected_h2(params)
    return {
        "lambda": frac_str(params.lam),
        "mu": frac_str(params.mu),
        "mu_class": classify_mu(params).value,
        "N": report.N,
        "M": report.M_inner,
        "cocycle_dim": report.cocycle_dim,
        "coboundary_dim": report.coboundary_dim,
        "h2_dim": report.h2_dim,
        "expected_dim": expected_dim,
        "stabilized": report.stabilized,
        "generators": [{"id": cid.value, "matched": ok} for cid, ok in report.matched],
    }


CSV_HEADER = "lambda,mu,N,M,h2_dim,expected_dim,agree"


def _csv_row(d: dict) -> str:
    agree = d["h2_dim"] == d["expected_dim"]
    return ",".join(
        str(x) for x in (d["lambda"], d["mu"], d["N"], d["M"], d["h2_dim"], d["expected_dim"], agree)
    )


def _table(dicts) -> str:
    header = ("lambda", "mu", "N", "M", "cocycle", "cobound", "h2", "expected", "stable", "agree")
    rows = [header]
    for d in dicts:
        agree = "✓" if d["h2_dim"] == d["expected_dim"] else "✗"
        rows.append(
            tuple(
                str(x)
                for x in (
                    d["lambda"], d["mu"], d["N"], d["M"], d["cocycle_dim"],
                    d["coboundary_dim"], d["h2_dim"], d["expected_dim"],
                    d["stabilized"], agree,
                )
            )
        )
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    for d in dicts:
        for g in d["generators"]:
            mark = "✓" if g["matched"] else "✗"
            lines.append(f"  generator {g['id']} ({d['lambda']}, {d['mu']}): {mark}")
    return "\n".join(lines)


def emit(reports, fmt: str) -> str:
    dicts = [report_dict(r) for r in reports]
    if fmt == "json":
        payload = dicts[0] if len(dicts) == 1 else dicts
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        return "\n".join([CSV_HEADER] + [_csv_row(d) for d in dicts])
    return _table(dicts)


def _agrees(report: H2Report) -> bool:
    expected_dim, _ = expected_h2(report.params)
    return report.h2_dim == expected_dim and all(ok for _, ok in report.matched)


def _cmd_solve(args) -> int:
    report = solve_h2(Params(args.lam, args.mu), args.window, args.inner)
    print(emit([report], args.format))
    return 0 if _agrees(report) else 2


def _parse_grid(path):
    grid = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise _UsageError(f"{path}:{lineno}: expected 'lambda mu', got {raw!r}")
            grid.append(Params(_rational(parts[0]), _rational(parts[1])))
    return grid


def _cmd_sweep(args) -> int:
    grid = _parse_grid(args.grid)
    reports = [solve_h2(p, args.window, args.inner) for p in grid]
    print(emit(reports, args.format))
    return 0 if all(_agrees(r) for r in reports) else 2


def _cmd_verify_known(args) -> int:
    params = Params(args.lam, args.mu)
    window = sorted(enumerate_window(args.window))
    registry = degree_zero_pairs(window, params)
    cob = coboundary_basis(registry, window, params)
    buckets = {}
    for b in window:
        buckets.setdefault(degree(b, params), []).append(b)

    ok_all = True
    checked = 0
    for cid in KnownCocycleId:
        if not regime_valid(cid, params):
            continue
        checked += 1
        ev = lambda a, b, cid=cid: known_cocycle_value(cid, params, a, b)
        defects_ok = True
        for i, a in enumerate(window):
            da = degree(a, params)
            for b in window[i + 1:]:
                need = -(da + degree(b, params))
                for c in buckets.get(need, ()):
                    if c <= b:
                        continue
                    if cocycle_defect(ev, a, b, c, params) != 0:
                        defects_ok = False
        vec = {}
        for col, (a, b) in enumerate(registry.pairs):
            v = known_cocycle_value(cid, params, a, b)
            if v:
                vec[col] = v
        nontrivial = bool(vec) and not in_span(vec, cob)
        status = "ok" if defects_ok and nontrivial else "FAIL"
        print(f"{cid.value}: defects_zero={defects_ok} nontrivial={nontrivial} {status}")
        ok_all = ok_all and defects_ok and nontrivial
    if checked == 0:
        print("no known generators are defined at these parameters")
    return 0 if ok_all else 2


def _cmd_jacobi_check(args) -> int:
    params = Params(args.lam, args.mu)
    window = enumerate_window(args.window)
    count = 0
    for i, a in enumerate(window):
        for j in range(i + 1, len(window)):
            for k in range(j + 1, len(window)):
                if jacobi_defect(a, window[j], window[k], params):
                    print(f"jacobi failure at ({a}, {window[j]}, {window[k]})")
                    return 2
                count += 1
    print(f"jacobi identity holds on all {count} triples of window N={args.window}")
    return 0


def _fold_rational_flags(argv):
    # argparse mistakes values like "-2/3" for option names; glue the value
    # onto its flag so negative rationals parse
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--lambda", "--mu"):
            val = next(it, None)
            if val is None:
                out.append(tok)
            else:
                out.append(f"{tok}={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_fold_rational_flags(argv))
        handler = {
            "solve": _cmd_solve,
            "sweep": _cmd_sweep,
            "verify-known": _cmd_verify_known,
            "jacobi-check": _cmd_jacobi_check,
        }[args.subcommand]
        return handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
