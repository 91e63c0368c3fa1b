"""``dualhahn`` command-line front end.

Every subcommand prints one table, as CSV with a header row or as a JSON
object with ``params``, ``rows`` and ``residuals`` keys. Exit codes: 0 ok,
1 failed identity or math-domain error, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import m1hahn, operators, qhahn, verify
from .arith import isclose
from .errors import DenominatorPole, DualHahnError
from .limits import (
    EpsilonSchedule,
    eigenvalue_limit_series,
    limit_operator_check,
    limit_recurrence_check,
    q_to_1_check,
)

FAMILIES = ("m1-hahn", "q-hahn", "classical")


class UsageError(Exception):
    pass


class IdentityFailure(Exception):
    pass


# parsing


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"N must be at least 1, got {value}")
    return value


def _float_list(text: str) -> tuple:
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES, default="m1-hahn")
    common.add_argument("--alpha", type=_rational)
    common.add_argument("--beta", type=_rational)
    common.add_argument("--N", type=_positive_int, dest="N")
    common.add_argument("--a", type=_rational)
    common.add_argument("--b", type=_rational)
    common.add_argument("--q", type=_rational)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--mode", choices=("exact", "float"), default="exact")

    parser = argparse.ArgumentParser(prog="dualhahn", description="Dual Hahn polynomial toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("grid", parents=[common], help="spectral grid points")
    sub.add_parser("coeffs", parents=[common], help="recurrence coefficients")
    sub.add_parser("weights", parents=[common], help="orthogonality weights")
    ev = sub.add_parser("eval", parents=[common], help="evaluate polynomials")
    ev.add_argument("--n", type=int, help="single degree (default: all 0..N)")
    ev.add_argument("--x", type=_rational, action="append", help="evaluation point (repeatable; default: grid)")
    ver = sub.add_parser("verify", parents=[common], help="run identity suites")
    ver.add_argument("--tol", type=float, default=1e-9, help="float-mode tolerance")
    sub.add_parser("operator", parents=[common], help="operator matrices and bandwidths")
    lim = sub.add_parser("limits", parents=[common], help="q -> -1 / q -> 1 convergence")
    lim.add_argument("--eps", type=_float_list, help="comma-separated decreasing epsilons")
    lim.add_argument("--rtol-factor", type=float, default=10.0)
    lim.add_argument("--order-tol", type=float, default=0.2)
    return parser


def _scalar(value, mode):
    return float(value) if mode == "float" else value


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family} requires {', '.join(missing)}")


def family_params(args):
    """Validated parameter object for ``args.family``."""
    if args.family == "m1-hahn":
        _require(args, "alpha", "beta", "N")
        return m1hahn.M1HahnParams(_scalar(args.alpha, args.mode), _scalar(args.beta, args.mode), args.N)
    if args.family == "q-hahn":
        _require(args, "a", "b", "q", "N")
        return qhahn.QHahnParams(*(_scalar(getattr(args, k), args.mode) for k in "abq"), args.N)
    _require(args, "alpha", "beta", "N")
    params = (_scalar(args.alpha, args.mode), _scalar(args.beta, args.mode), args.N)
    qhahn.classical_grid(*params)
    return params


# rendering


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _json_value(v):
    if isinstance(v, Fraction):
        return {"num": v.numerator, "den": v.denominator}
    if isinstance(v, dict):
        return {str(k): _json_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    return v


def _params_record(args) -> dict:
    keys = ("alpha", "beta", "N") if args.family != "q-hahn" else ("a", "b", "q", "N")
    record = {"family": args.family, "mode": args.mode}
    record.update({k: _scalar(getattr(args, k), args.mode) if k != "N" else args.N for k in keys})
    return record


def emit(args, rows: list, residuals: dict | None = None, summary: dict | None = None, out=None) -> None:
    out = out or sys.stdout
    if args.format == "json":
        payload = {
            "command": args.command,
            "params": _params_record(args),
            "rows": rows,
            "residuals": residuals or {},
        }
        if summary:
            payload["summary"] = summary
        out.write(json.dumps(_json_value(payload), indent=2) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    if rows:
        header = list(rows[0])
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(row.get(k)) for k in header])


# commands


def _grid(args, params):
    if args.family == "m1-hahn":
        return m1hahn.m1_grid(params)
    if args.family == "q-hahn":
        return qhahn.q_grid(params)
    return qhahn.classical_grid(*params)


def cmd_grid(args, params):
    label = "y" if args.family == "m1-hahn" else "x"
    emit(args, [{"s": s, label: p} for s, p in enumerate(_grid(args, params))])


def _agree(x, y, mode) -> bool:
    if mode == "float":
        return isclose(x, y, rtol=1e-12, atol=1e-12)
    return x == y


def cmd_coeffs(args, params):
    rows = []
    if args.family == "m1-hahn":
        for n in range(params.N + 1):
            A, C, u, b = m1hahn.m1_recurrence_branch(params, n)
            uc, bc = m1hahn.m1_recurrence_compact(params, n)
            rows.append({
                "n": n, "u_n": u, "b_n": b, "A_n": A, "C_n": C,
                "u_n_compact": uc, "b_n_compact": bc,
                "agree": _agree(u, uc, args.mode) and _agree(b, bc, args.mode),
            })
    elif args.family == "q-hahn":
        for n in range(params.N + 1):
            A, C = qhahn.q_recurrence(params, n)
            b, u = qhahn.q_monic_coeffs(params, n)
            rows.append({"n": n, "A_n": A, "C_n": C, "b_n": b, "u_n": u})
    else:
        for n in range(params[2] + 1):
            A, C, b, u = qhahn.classical_recurrence(*params, n)
            rows.append({"n": n, "A_n": A, "C_n": C, "b_n": b, "u_n": u})
    emit(args, rows)
    bad = [r["n"] for r in rows if r.get("agree") is False]
    if bad:
        raise IdentityFailure(f"branch and compact recurrence coefficients disagree at n={bad}")


def cmd_weights(args, params):
    if args.family == "classical":
        raise UsageError("weights are available for the m1-hahn and q-hahn families")
    measure = m1hahn.m1_weights(params) if args.family == "m1-hahn" else qhahn.q_weights(params)
    grid = _grid(args, params)
    rows = [{"s": s, "point": p, "weight": w} for s, (p, w) in enumerate(zip(grid, measure.weights))]
    emit(args, rows, summary={"kappa0": measure.kappa0, "positive": measure.positive})


def cmd_eval(args, params):
    N = params[2] if args.family == "classical" else params.N
    degrees = range(N + 1) if args.n is None else [args.n]
    if args.n is not None and not 0 <= args.n <= N:
        raise UsageError(f"--n must lie in 0..{N}")
    if args.x and args.family != "m1-hahn":
        raise UsageError("--x is only supported for the m1-hahn family")
    rows = []
    if args.family == "m1-hahn":
        points = [_scalar(x, args.mode) for x in args.x] if args.x else list(m1hahn.m1_grid(params))
        for n in degrees:
            for x in points:
                value = m1hahn.m1_evaluate_recurrence(params, n, x)
                closed = m1hahn.m1_evaluate_closed(params, n, x)
                rows.append({"n": n, "x": x, "value": value, "closed": closed,
                             "agree": _agree(value, closed, args.mode)})
    elif args.family == "q-hahn":
        grid = qhahn.q_grid(params)
        for n in degrees:
            for s, x in enumerate(grid):
                rows.append({"n": n, "s": s, "x": x, "value": qhahn.q_evaluate(params, n, s),
                             "recurrence": qhahn.q_evaluate_recurrence(params, n, x)})
    else:
        grid = qhahn.classical_grid(*params)
        for n in degrees:
            for s, x in enumerate(grid):
                rows.append({"n": n, "s": s, "x": x, "value": qhahn.classical_evaluate(*params, n, s)})
    emit(args, rows)
    bad = [(r["n"], r["x"]) for r in rows if r.get("agree") is False]
    if bad:
        raise IdentityFailure(f"recurrence and closed form disagree at (n, x)={bad[0]}")


def cmd_verify(args, params):
    tol = args.tol if args.mode == "float" else None
    if args.family == "m1-hahn":
        results = verify.verify_m1(params, tol)
    elif args.family == "q-hahn":
        results = verify.verify_qhahn(params, tol)
    else:
        results = verify.verify_classical(*params, tol=tol)
    rows = []
    for r in results:
        status = "pass" if r.ok else "fail"
        if r.residual is None and r.ok:
            status = "skipped"
        rows.append({"suite": r.name, "residual": r.residual, "status": status, "note": r.note})
    if args.family == "m1-hahn":
        positive = m1hahn.m1_weights(params).positive
        rows.append({"suite": "positivity", "residual": None,
                     "status": "positive" if positive else "measure not positive", "note": ""})
    emit(args, rows, residuals={r.name: r.residual for r in results})
    failed = [r for r in results if not r.ok]
    if failed:
        first = failed[0]
        raise IdentityFailure(f"identity failed: {first.name}" + (f" ({first.note})" if first.note else ""))


def _matrix_rows(name, matrix):
    return [{"matrix": name, "row": i, "col": j, "value": v}
            for i, row in enumerate(matrix) for j, v in enumerate(row)]


def cmd_operator(args, params):
    rows, summary = [], {}
    if args.family == "m1-hahn":
        if args.mode == "exact":
            rep = operators.leonard_pair(params)
            for name in ("A", "B", "a_poly", "b_poly"):
                label = {"A": "A_grid", "B": "B_grid", "a_poly": "A_poly", "b_poly": "B_poly"}[name]
                rows += _matrix_rows(label, getattr(rep, name))
            summary["bandwidth"] = rep.bandwidths
        else:
            A = operators.m1_stencil(params).matrix()
            rows += _matrix_rows("A_grid", A)
            summary["bandwidth"] = {"A_grid": operators.bandwidth(A)}
    elif args.family == "q-hahn":
        L = qhahn.q_diff_op(params).matrix()
        rows += _matrix_rows("L", L)
        summary["bandwidth"] = {"L": operators.bandwidth(L)}
    else:
        L1 = operators.classical_L1_stencil(*params).matrix()
        rows += _matrix_rows("L1", L1)
        summary["bandwidth"] = {"L1": operators.bandwidth(L1)}
    emit(args, rows, summary=summary)


def cmd_limits(args, params):
    if args.family == "q-hahn":
        raise UsageError("limits take --family m1-hahn (q -> -1) or classical (q -> 1)")
    kw = {"rtol_factor": args.rtol_factor, "order_tol": args.order_tol}
    try:
        schedule = EpsilonSchedule(args.eps, **kw) if args.eps else EpsilonSchedule.geometric(**kw)
    except ValueError as exc:
        raise UsageError(f"bad epsilon schedule: {exc}") from None
    if args.family == "m1-hahn":
        a, b, N = params.alpha, params.beta, params.N
        rec = limit_recurrence_check(a, b, N, schedule, raise_on_fail=False)
        op = limit_operator_check(a, b, N, schedule, raise_on_fail=False)
        reports = [rec, op, op.extras["eigenvalue"]]
        summary = {"eigenvalue_series": {n: eigenvalue_limit_series(n, 1) for n in range(N + 1)}}
    else:
        reports = [q_to_1_check(*params, schedule, raise_on_fail=False)]
        summary = {}
    rows = [
        {"check": c, "index": i, "epsilon": e, "error": float(r), "order": o}
        for rep in reports
        for c, i, e, r, o in rep.rows()
    ]
    summary["orders"] = {rep.name: rep.order for rep in reports}
    summary["passed"] = {rep.name: rep.passed for rep in reports}
    emit(args, rows, residuals={rep.name: rep.errors[-1] for rep in reports}, summary=summary)
    failed = [rep for rep in reports if not rep.passed]
    if failed:
        rep = failed[0]
        raise IdentityFailure(f"limit check failed: {rep.name} (order {rep.order}, worst {rep.worst})")


COMMANDS = {
    "grid": cmd_grid,
    "coeffs": cmd_coeffs,
    "weights": cmd_weights,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "operator": cmd_operator,
    "limits": cmd_limits,
}


def _describe(exc: DualHahnError) -> str:
    text = f"{type(exc).__name__}: {exc}"
    if isinstance(exc, DenominatorPole) and exc.factor is not None:
        text += f" [factor {exc.factor}]"
    return text


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        params = family_params(args)
        COMMANDS[args.command](args, params)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"dualhahn: error: {exc}", file=sys.stderr)
        return 2
    except IdentityFailure as exc:
        print(f"dualhahn: {exc}", file=sys.stderr)
        return 1
    except DualHahnError as exc:
        print(f"dualhahn: {_describe(exc)}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"dualhahn: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
