"""Command-line front end: ``python -m qchanghee <command> ...``.

Every command writes a stream of records, as an aligned table (default),
JSON lines (``--json``) or CSV (``--csv``). Exit status is 0 on success,
1 on a domain or tolerance error, 2 when a verification suite fails and
64 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from .changhee import h_multiple_closed, h_poly_closed, h_series_values, h_single_closed
from .exactcheck import exact_h_multiple
from .lattice import MAX_TERMS_ENV
from .mellin import mellin_zeta_quadrature
from .powerseries import gf_barnes_bernoulli, gf_changhee_coeffs
from .qcore import ChangheeError, QParams
from .verify import SUITES, run_all, run_suite
from .zeta import euler_barnes_zeta, zeta_neg_int, zeta_values

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64

CONFIG_KEYS = {"tol", "quad_tol", "max_terms", "n_max", "samples", "seed"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_number(token: str):
    """``3``, ``1/2``, ``0.25`` or ``1.5-2j`` into int, Fraction, float or complex."""
    t = token.strip().replace(" ", "")
    convs = (Fraction,) if "/" in t else (int, float)
    for conv in convs:
        try:
            return conv(t)
        except (ValueError, ZeroDivisionError):
            pass
    try:
        return complex(t.replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {token!r}") from None


def read_config(path: str) -> Dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if not sep or key not in CONFIG_KEYS:
                raise UsageError(f"{path}:{lineno}: expected one of {sorted(CONFIG_KEYS)} as key=value")
            out[key] = value.strip()
    return out


def fmt(x: float) -> str:
    return format(x, ".17g")


def _value_fields(value) -> dict:
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    z = complex(value)
    return {"re": z.real, "im": z.imag}


def make_record(command: str, params: dict, value, error_bound: float = 0.0, terms: int = 0,
                route: str = "closed_form", **extra) -> dict:
    rec = {"command": command, **extra, "params": params, "value": _value_fields(value),
           "error_bound": float(error_bound), "terms": int(terms), "route": route}
    return rec


def _label(rec: dict) -> str:
    for key in ("n", "s", "suite"):
        if key in rec:
            return f"{key}={rec[key]}"
    return rec["command"]


def render(records: List[dict], style: str) -> str:
    if style == "json":
        return "".join(json.dumps(r) + "\n" for r in records)
    if style == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "re", "im", "error_bound"])
        for r in records:
            v = r["value"]
            if "num" in v:
                re, im = str(Fraction(v["num"], v["den"])), "0"
            else:
                re, im = fmt(v["re"]), fmt(v["im"])
            writer.writerow([r.get("n", r.get("s", "")), re, im, fmt(r["error_bound"])])
        return buf.getvalue()
    rows = [("point", "re", "im", "error_bound", "terms", "route")]
    for r in records:
        v = r["value"]
        if "num" in v:
            re, im = str(Fraction(v["num"], v["den"])), "0"
        else:
            re, im = fmt(v["re"]), fmt(v["im"])
        rows.append((_label(r), re, im, fmt(r["error_bound"]), str(r["terms"]), r["route"]))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(c.ljust(wd) for c, wd in zip(row, widths)).rstrip() + "\n" for row in rows)


def _add_params(sp: argparse.ArgumentParser, w_default: str = "0") -> None:
    sp.add_argument("--q", type=parse_number, required=True)
    sp.add_argument("--u", type=parse_number, required=True)
    sp.add_argument("--w", type=parse_number, default=parse_number(w_default))
    sp.add_argument("--weights", type=parse_number, nargs="+", default=[1])
    sp.add_argument("--dampings", type=parse_number, nargs="+", default=[1])


def _add_output(sp: argparse.ArgumentParser) -> None:
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--json", dest="style", action="store_const", const="json")
    g.add_argument("--csv", dest="style", action="store_const", const="csv")
    sp.add_argument("--config", help="key=value file of defaults (tol, quad_tol, max_terms, n_max, samples, seed)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qchanghee", description="Changhee-type q-Euler numbers and damped q-zeta series.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("qeuler", help="q-Euler numbers and polynomials H_{n,q}^{(r)}")
    sp.add_argument("--n", type=int, nargs="+", required=True)
    _add_params(sp)
    sp.add_argument("--route", choices=["closed_form", "series", "gf", "exact"], default="closed_form")
    sp.add_argument("--tol", type=float)
    _add_output(sp)

    sp = sub.add_parser("zeta", help="Changhee q-zeta function at complex s")
    sp.add_argument("--s", type=parse_number, nargs="+", required=True)
    _add_params(sp, w_default="1")
    sp.add_argument("--tol", type=float)
    _add_output(sp)

    sp = sub.add_parser("negint", help="closed-form zeta values at s = -n")
    sp.add_argument("--n", type=int, nargs="+", required=True)
    _add_params(sp, w_default="1")
    sp.add_argument("--check", action="store_true", help="also sum the series at s = -n")
    sp.add_argument("--tol", type=float)
    _add_output(sp)

    sp = sub.add_parser("barnes", help="Euler-Barnes zeta (|u| > 1) or Barnes-Bernoulli table")
    sp.add_argument("--kind", choices=["zeta", "bernoulli"], default="zeta")
    sp.add_argument("--s", type=parse_number, nargs="+")
    sp.add_argument("--u", type=parse_number)
    sp.add_argument("--w", type=parse_number, default=1)
    sp.add_argument("--x", type=parse_number, default=0)
    sp.add_argument("--a", type=parse_number, nargs="+", default=[1])
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--tol", type=float)
    _add_output(sp)

    sp = sub.add_parser("mellin", help="Mellin quadrature against the zeta series")
    sp.add_argument("--s", type=parse_number, nargs="+", required=True)
    _add_params(sp, w_default="1")
    sp.add_argument("--quad-tol", type=float, help="quadrature tolerance (default 1e-9)")
    sp.add_argument("--tol", type=float, help="series tail tolerance")
    _add_output(sp)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int)
    _add_output(sp)

    sp = sub.add_parser("table", help="sweep n = 0..N (CSV by default)")
    sp.add_argument("--n-max", type=int)
    _add_params(sp)
    sp.add_argument("--route", choices=["closed_form", "series", "gf", "exact"], default="closed_form")
    sp.add_argument("--tol", type=float)
    _add_output(sp)
    return parser


def _setting(args, config: dict, key: str, conv, default):
    val = getattr(args, key, None)
    if val is not None:
        return val
    if key in config:
        try:
            return conv(config[key])
        except ValueError:
            raise UsageError(f"config value for {key!r} is not valid: {config[key]!r}") from None
    return default


def _qparams(args) -> QParams:
    return QParams(complex(args.q), complex(args.u), complex(args.w),
                   tuple(map(complex, args.weights)), tuple(map(complex, args.dampings)))


def _exact_args(args):
    for name in ("q", "u"):
        if isinstance(getattr(args, name), (complex, float)):
            raise UsageError(f"--route exact needs rational --{name} (e.g. 1/2), got {getattr(args, name)}")
    for name in ("w", "weights", "dampings"):
        vals = getattr(args, name)
        if any(not isinstance(v, int) for v in (vals if isinstance(vals, list) else [vals])):
            raise UsageError(f"--route exact needs integer --{name}")
    return Fraction(args.q), Fraction(args.u), args.w, tuple(args.weights), tuple(args.dampings)


def _qeuler_records(command: str, ns: Sequence[int], args, tol: float) -> List[dict]:
    route = args.route
    if route == "exact":
        q, u, w, a, v = _exact_args(args)
        params = {"q": str(q), "u": str(u), "w": w, "weights": list(a), "dampings": list(v)}
        return [make_record(command, params, exact_h_multiple(n, q, u, w, a, v), route="exact", n=n)
                for n in ns]
    p = _qparams(args)
    params = p.as_dict()
    if route == "closed_form":
        if p.rank == 1 and p.w == 0:
            fn = h_single_closed
        elif p.rank == 1:
            fn = h_poly_closed
        else:
            fn = h_multiple_closed
        return [make_record(command, params, fn(n, p), n=n) for n in ns]
    if route == "series":
        evs = h_series_values(list(ns), p, tol)
        return [make_record(command, params, ev.value, ev.tail_bound, ev.terms_used, "series", n=n)
                for n, ev in zip(ns, evs)]
    values, bound = gf_changhee_coeffs(max(ns), p, tol=tol, with_bound=True)
    return [make_record(command, params, values[n], bound, 0, "gf", n=n) for n in ns]


def _dispatch(args, config: dict, out) -> int:
    cmd = args.command
    tol = _setting(args, config, "tol", float, 1e-12)
    if cmd == "verify":
        samples = _setting(args, config, "samples", int, None)
        seed = _setting(args, config, "seed", int, 7)
        reports = (run_all(samples, seed) if args.suite == "all"
                   else [run_suite(args.suite, samples, seed)])
        if args.style == "json":
            for r in reports:
                out.write(json.dumps({"suite": r.name, "passed": r.passed, "max_residual": r.max_residual,
                                      "tolerance": r.tolerance, "checks": r.checks, "notes": r.notes}) + "\n")
        else:
            for r in reports:
                out.write(r.render() + "\n")
            ok = sum(r.passed for r in reports)
            out.write(f"summary: {ok}/{len(reports)} suites passed (seed={seed})\n")
        return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY

    if cmd == "qeuler":
        records = _qeuler_records(cmd, args.n, args, tol)
    elif cmd == "table":
        n_max = _setting(args, config, "n_max", int, 16)
        records = _qeuler_records(cmd, range(n_max + 1), args, tol)
        args.style = args.style or "csv"
    elif cmd == "zeta":
        p = _qparams(args)
        evs = zeta_values(args.s, p, tol)
        records = [make_record(cmd, p.as_dict(), ev.value, ev.tail_bound, ev.terms_used, "series", s=str(s))
                   for s, ev in zip(args.s, evs)]
    elif cmd == "negint":
        p = _qparams(args)
        records = [make_record(cmd, p.as_dict(), zeta_neg_int(n, p), n=n) for n in args.n]
        if args.check:
            evs = zeta_values([-n for n in args.n], p, tol)
            records += [make_record(cmd, p.as_dict(), ev.value, ev.tail_bound, ev.terms_used, "series", n=n)
                        for n, ev in zip(args.n, evs)]
    elif cmd == "barnes":
        records = _barnes_records(args, config, tol)
    elif cmd == "mellin":
        p = _qparams(args)
        qtol = _setting(args, config, "quad_tol", float, 1e-9)
        records = []
        for s, ev in zip(args.s, zeta_values(args.s, p, tol)):
            quad = mellin_zeta_quadrature(s, p, qtol)
            records.append(make_record(cmd, p.as_dict(), quad.value, quad.abs_error_estimate,
                                       quad.panels, "quadrature", s=str(s)))
            records.append(make_record(cmd, p.as_dict(), ev.value, ev.tail_bound, ev.terms_used,
                                       "series", s=str(s)))
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown command {cmd}")
    out.write(render(records, args.style or "table"))
    return EXIT_OK


def _barnes_records(args, config: dict, tol: float) -> List[dict]:
    if args.kind == "bernoulli":
        n_max = _setting(args, config, "n_max", int, 16)
        values = gf_barnes_bernoulli(n_max, args.x, args.a)
        params = {"x": str(args.x), "a": [str(a) for a in args.a]}
        route = "exact" if isinstance(values[0], Fraction) else "gf"
        return [make_record("barnes", params, v, route=route, n=n) for n, v in enumerate(values)]
    if args.s is None or args.u is None:
        raise UsageError("barnes --kind zeta needs --s and --u")
    params = {"u": _value_fields(args.u), "w": _value_fields(args.w),
              "a": [_value_fields(a) for a in args.a]}
    records = []
    for s in args.s:
        ev = euler_barnes_zeta(s, args.w, args.u, args.a, tol)
        records.append(make_record("barnes", params, ev.value, ev.tail_bound, ev.terms_used, "series", s=str(s)))
    return records


@contextmanager
def _max_terms(value: Optional[str]):
    if value is None:
        yield
        return
    old = os.environ.get(MAX_TERMS_ENV)
    os.environ[MAX_TERMS_ENV] = value
    try:
        yield
    finally:
        if old is None:
            del os.environ[MAX_TERMS_ENV]
        else:
            os.environ[MAX_TERMS_ENV] = old


def run(argv: Optional[Iterable[str]] = None, out=None, err=None) -> int:
    """Parse *argv*, run the command, write records to *out*; return the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(None if argv is None else list(argv))
        config = read_config(args.config) if args.config else {}
        with _max_terms(config.get("max_terms")):
            return _dispatch(args, config, out)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (ChangheeError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
