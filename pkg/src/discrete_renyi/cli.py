"""Command-line front end.

Exit codes: 0 when everything ran and every check passed, 1 when any
check failed, 2 on usage errors.  Results go to standard output as JSON
(default) or CSV; diagnostics go to standard error.

Distribution specs::

    bernoulli:p  uniform:a:b  poisson:lam[:tail_eps]  pmf:@file.json
    pb:p1,p2,...  sgeo:p

Scan tables (``scan`` verb) have fixed CSV headers::

    shannon    theta,n,ratio
    tightness  family,param,alpha,lhs,rhs,slack
    erdos      n,q_exact,erdos,bound,ratio
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .extremal import MAX_TUPLES, GuardError, extreme_point_specs, min_entropy_over_extremes
from .pmf import (
    Pmf,
    WeightVector,
    bernoulli,
    convolve_all,
    poisson_binomial,
    poisson_truncated,
    symmetric_geometric_half,
    uniform,
)
from .renyi import RenyiOrder, delta, renyi_entropy
from .report import IneqReport, Table, format_value
from .spectral import char_lq_norm
from .verify.littlewood_offord import lo_erdos_comparison, lo_q_bound, lo_reduce, lo_renyi_bound
from .verify.scans import FAMILIES, shannon_counterexample_scan, tightness_scan
from .verify.suites import SUITES, run_suite

DEFAULT_TUPLE_GUARD = 10**6


class UsageError(Exception):
    """Bad arguments; reported on one line with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


# -- distribution specs -------------------------------------------------------


def parse_dist(spec: str) -> Pmf:
    """Build a Pmf from a one-line spec such as ``bernoulli:0.3``."""
    kind, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    try:
        if kind == "bernoulli" and len(args) == 1:
            return bernoulli(float(args[0]))
        if kind == "uniform" and len(args) == 2:
            return uniform(int(args[0]), int(args[1]))
        if kind == "poisson" and len(args) in (1, 2):
            return poisson_truncated(float(args[0]), *(float(a) for a in args[1:]))
        if kind == "pmf" and len(args) == 1 and args[0].startswith("@"):
            return Pmf.from_json(Path(args[0][1:]).read_text())
        if kind == "pb" and len(args) == 1:
            return poisson_binomial([float(p) for p in args[0].split(",")])
        if kind == "sgeo" and len(args) == 1:
            return symmetric_geometric_half(float(args[0]))
    except (ValueError, KeyError, OSError) as exc:
        raise UsageError(f"bad distribution {spec!r}: {exc}") from None
    raise UsageError(f"bad distribution {spec!r}")


def _order(text: str) -> RenyiOrder:
    try:
        return RenyiOrder.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad number list {text!r}") from None


def _rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad number list {text!r}") from None


# -- output -------------------------------------------------------------------

_FLOAT_MARK = "\u0000f"


def _mark_floats(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isfinite(obj):
            return _FLOAT_MARK + format(obj, ".17g")
        return format_value(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _mark_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_mark_floats(v) for v in obj]
    if hasattr(obj, "tolist"):
        return _mark_floats(obj.tolist())
    return str(obj)


def to_json(obj: Any) -> str:
    """JSON with every finite float written to 17 significant digits."""
    text = json.dumps(_mark_floats(obj), indent=2)
    return re.sub(r'"\\u0000f([^"]*)"', r"\1", text)


def _records_table(records: list[dict]) -> Table:
    columns = tuple(records[0]) if records else ()
    table = Table(columns)
    for r in records:
        table.append(*(json.dumps(_plain(v)) if isinstance(v, (dict, list)) else v for v in r.values()))
    return table


def _plain(obj: Any) -> Any:
    return json.loads(to_json(obj))


def emit_plot_data(table: Table, path: str | Path) -> None:
    """Write ``table`` as CSV, one row per grid point."""
    Path(path).write_text(table.to_csv(), encoding="utf-8", newline="")


def _emit(result: Table | list[dict] | dict, fmt: str, out: str | None) -> None:
    if fmt == "csv":
        if isinstance(result, Table):
            text = result.to_csv()
        else:
            text = _records_table(result if isinstance(result, list) else [result]).to_csv()
    else:
        payload = result.to_records() if isinstance(result, Table) else result
        text = to_json(payload) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)


# -- verbs --------------------------------------------------------------------


def _reports_result(reports: Sequence[IneqReport]) -> tuple[list[dict], int]:
    return [r.to_dict() for r in reports], 0 if all(r.passed for r in reports) else 1


def _cmd_entropy(ns) -> tuple[Any, int]:
    f = parse_dist(ns.dist[0])
    a = _order(ns.alpha)
    fn = renyi_entropy if ns.verb == "entropy" else delta
    return {"dist": ns.dist[0], "alpha": str(a), ns.verb: fn(f, a)}, 0


def _cmd_convolve(ns) -> tuple[Any, int]:
    return convolve_all([parse_dist(d) for d in ns.dist]).to_dict(), 0


def _cmd_charnorm(ns) -> tuple[Any, int]:
    f = parse_dist(ns.dist[0])
    try:
        value = char_lq_norm(f, ns.q, ns.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"dist": ns.dist[0], "q": ns.q, "tol": ns.tol, "norm_q_power": value}, 0


def _guard(ns) -> int:
    if ns.guard_override is None:
        return DEFAULT_TUPLE_GUARD
    if not 1 <= ns.guard_override <= MAX_TUPLES:
        raise UsageError(f"--guard-override must lie in [1, {MAX_TUPLES}]")
    return ns.guard_override


def _cmd_extremes(ns) -> tuple[Any, int]:
    if not ns.C:
        raise UsageError("at least one --C is required")
    try:
        Cs = [Fraction(c) for c in ns.C]
        if ns.action == "list":
            return [s.to_dict() for s in extreme_point_specs(Cs[0], ns.m, guard=_guard(ns))], 0
        value, specs = min_entropy_over_extremes(Cs, ns.m, _order(ns.alpha), guard=_guard(ns))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    return {"alpha": ns.alpha, "m": ns.m, "min_entropy": value, "argmin": [s.to_dict() for s in specs]}, 0


def _cmd_verify(ns) -> tuple[Any, int]:
    try:
        reports = run_suite(ns.suite_name, ns.suite, count=ns.count, n=ns.n, seed=ns.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for r in reports:
        if not r.passed:
            print(f"failed: {r}", file=sys.stderr)
    return _reports_result(reports)


def _cmd_scan(ns) -> tuple[Any, int]:
    try:
        if ns.kind == "shannon":
            grid = _floats(ns.grid) if ns.grid else [1e-3, 1e-2, 0.1, 0.25, 0.5]
            table = shannon_counterexample_scan(grid, ns.nmax)
        elif ns.kind == "tightness":
            grid = _floats(ns.grid) if ns.grid else [1e-4, 1e-3, 1e-2, 0.1]
            table = tightness_scan(ns.family, grid, _order(ns.alpha))
        else:
            table = lo_erdos_comparison(ns.nmax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return table, 0


def _cmd_lo(ns) -> tuple[Any, int]:
    if ns.action == "erdos":
        return _cmd_scan(argparse.Namespace(kind="erdos", nmax=ns.nmax))
    if not ns.weights:
        raise UsageError("--weights is required")
    try:
        v = WeightVector(tuple(_rationals(ns.weights)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if ns.action == "reduce":
        return {"weights": [str(w) for w in v], "signs": list(lo_reduce(v))}, 0
    ps = _rationals(ns.p) if ns.p else [Fraction(1, 2)]
    if len(ps) == 1:
        ps = ps * len(v)
    if len(ps) != len(v):
        raise UsageError("--p needs one value or one per weight")
    try:
        if ns.action == "bound":
            report = lo_q_bound(v, ps)
        else:
            report = lo_renyi_bound(v, ps, _order(ns.alpha))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _reports_result([report])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="discrete-renyi",
        description=__doc__.split("\n")[0],
        epilog=__doc__.split("\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        allow_abbrev=False,
    )
    common = _Parser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    for verb in ("entropy", "delta"):
        p = sub.add_parser(verb, parents=[common], allow_abbrev=False, help=f"Rényi {verb} of one law")
        p.add_argument("--dist", action="append", required=True)
        p.add_argument("--alpha", default="inf")

    p = sub.add_parser("convolve", parents=[common], allow_abbrev=False, help="law of an independent sum")
    p.add_argument("--dist", action="append", required=True)

    p = sub.add_parser("charnorm", parents=[common], allow_abbrev=False, help="L^q norm of the characteristic function")
    p.add_argument("--dist", action="append", required=True)
    p.add_argument("--q", type=float, default=2.0)
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("extremes", parents=[common], allow_abbrev=False, help="extreme points of density-bounded laws")
    p.add_argument("action", choices=("list", "min"))
    p.add_argument("--C", action="append", help="density bound, e.g. 3/2; repeat for several factors")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", default="2")
    p.add_argument("--guard-override", type=int)

    p = sub.add_parser("verify", parents=[common], allow_abbrev=False, help="run an inequality suite")
    p.add_argument("suite_name", choices=SUITES)
    p.add_argument("--suite", choices=("random", "fixed"), default="random")
    p.add_argument("--count", type=int, default=100, help="number of random instances")
    p.add_argument("--n", type=int, default=8, help="maximum number of factors")
    p.add_argument("--seed", type=int)

    p = sub.add_parser("scan", parents=[common], allow_abbrev=False, help="scan tables")
    p.add_argument("kind", choices=("shannon", "tightness", "erdos"))
    p.add_argument("--family", choices=FAMILIES, default="bernoulli_p")
    p.add_argument("--grid", help="comma separated parameters")
    p.add_argument("--alpha", default="inf")
    p.add_argument("--nmax", type=int, default=50)

    p = sub.add_parser("lo", parents=[common], allow_abbrev=False, help="Littlewood-Offord point probabilities")
    p.add_argument("action", choices=("bound", "renyi", "reduce", "erdos"))
    p.add_argument("--weights")
    p.add_argument("--p", help="one probability or one per weight")
    p.add_argument("--alpha", default="2")
    p.add_argument("--nmax", type=int, default=60)
    return parser


_COMMANDS = {
    "entropy": _cmd_entropy,
    "delta": _cmd_entropy,
    "convolve": _cmd_convolve,
    "charnorm": _cmd_charnorm,
    "extremes": _cmd_extremes,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "lo": _cmd_lo,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        if getattr(ns, "dist", None) and ns.verb in ("entropy", "delta", "charnorm") and len(ns.dist) != 1:
            raise UsageError(f"{ns.verb} takes exactly one --dist")
        result, code = _COMMANDS[ns.verb](ns)
        _emit(result, ns.format, ns.out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
