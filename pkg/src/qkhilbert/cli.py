"""Command-line front end.

    qkhilbert wolf    --algebra G2 --r-max 5 --format json
    qkhilbert wolf    --family HPn --n 3
    qkhilbert expand  --algebra F4
    qkhilbert prolong --n 2 --r 2
    qkhilbert verify  --scope all

Exit status: 0 when every check passed, 1 when some check failed, 2 on a
usage error.  Rationals are written as "p/q" strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .exactcore import binomial_basis_coeffs, format_rational
from .hilbert import (
    FAMILIES,
    Check,
    HilbertReport,
    closed_form,
    family_algebra,
    hilbert_poly,
    verify_report,
)
from .prolong.symbols import TwistorSymbolSpec, twistor_symbol
from .prolong.tower import (
    lemma_level_dim,
    polynomial_solution_space,
    prolongation_tower,
    spencer_exactness,
)
from .rootsys import RootSystem, RootSystemError, build_root_system, parse_algebra
from . import suite

SCHEMA_VERSION = 1

log = logging.getLogger("qkhilbert")


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _header(kind: str) -> dict:
    return {"schema": f"qkhilbert.{kind}", "schema_version": SCHEMA_VERSION,
            "generator": f"qkhilbert {__version__}"}


def load_root_table(path: str) -> RootSystem:
    """Root table file: ``{"type": "B", "rank": 3, "roots": [["1", "0", "0"], ...]}``."""
    try:
        data = json.loads(Path(path).read_text())
        return RootSystem.from_roots(data["type"], int(data["rank"]), data["roots"],
                                     data.get("normalization", 1))
    except (OSError, KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot load root table {path}: {exc}") from exc


# -- wolf / expand --------------------------------------------------------------

def _select(args) -> tuple[RootSystem, dict]:
    extra: dict = {}
    if args.root_table:
        return load_root_table(args.root_table), extra
    if args.algebra and args.family:
        raise UsageError("give either --algebra or --family, not both")
    if args.algebra:
        try:
            return build_root_system(*parse_algebra(args.algebra)), extra
        except RootSystemError as exc:
            raise UsageError(str(exc)) from exc
    if args.family:
        if args.n is None:
            raise UsageError("--family requires --n")
        try:
            expected = closed_form(args.family, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        extra = {"family": args.family, "closed_form": expected}
        return build_root_system(*family_algebra(args.family, args.n)), extra
    raise UsageError("one of --algebra, --family or --root-table is required")


def wolf_payload(rep: HilbertReport, r_max: int, extra: dict) -> dict:
    P = rep.P
    out = _header("wolf")
    out.update({
        "algebra": rep.name,
        "n": rep.n,
        "degenerate": rep.degenerate,
        "coefficients": [format_rational(c) for c in P.coeffs],
        "polynomial": str(P),
        "values": [format_rational(P.evaluate(r)) for r in range(r_max + 1)],
        "P1": format_rational(P.evaluate(1)),
        "volume": format_rational(rep.volume),
        "twistor_degree": format_rational(rep.twistor_degree),
        "char_coeffs": [format_rational(c) for c in rep.char_coeffs],
        "binomial_coeffs": [format_rational(c) for c in binomial_basis_coeffs(P)],
        "checks": [c.as_dict() for c in rep.checks],
    })
    if rep.degenerate:
        out["warning"] = "n = 0: the Wolf grading has no half-level roots"
    if "family" in extra:
        out["family"] = extra["family"]
    return out


def _wolf_report(args) -> tuple[dict, bool]:
    rs, extra = _select(args)
    try:
        rep = hilbert_poly(rs)
    except Exception as exc:
        payload = _header("wolf")
        payload.update({"algebra": rs.name,
                        "checks": [Check("hilbert_poly", False, {"error": str(exc)}).as_dict()]})
        return payload, False
    verify_report(rep, args.r_max)
    if "closed_form" in extra:
        rep.checks.append(Check("closed_form", rep.P == extra["closed_form"]))
    return wolf_payload(rep, args.r_max, extra), rep.all_passed()


def _render_wolf(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(payload)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "P(r)"])
        for r, v in enumerate(payload.get("values", [])):
            w.writerow([r, v])
        return buf.getvalue()
    lines = [f"algebra      {payload['algebra']}"]
    if "polynomial" in payload:
        lines += [
            f"n            {payload['n']}" + ("  (degenerate)" if payload["degenerate"] else ""),
            f"P(r)         {payload['polynomial']}",
            f"volume v(M)  {payload['volume']}",
            f"deg Z        {payload['twistor_degree']}",
            "char coeffs  " + ", ".join(payload["char_coeffs"]),
            "",
        ]
        width = max(len(v) for v in payload["values"])
        lines.append(f"{'r':>4}  {'P(r)':>{width}}")
        for r, v in enumerate(payload["values"]):
            lines.append(f"{r:>4}  {v:>{width}}")
        lines.append("")
    lines += _check_lines(payload["checks"])
    return "\n".join(lines) + "\n"


def _check_lines(checks) -> list[str]:
    width = max((len(c["name"]) for c in checks), default=0)
    return [f"{c['name']:<{width}}  {c['status'].upper()}" for c in checks]


def cmd_wolf(args) -> tuple[str, int]:
    payload, ok = _wolf_report(args)
    return _render_wolf(payload, args.format), 0 if ok else 1


def cmd_expand(args) -> tuple[str, int]:
    rs, _ = _select(args)
    rep = hilbert_poly(rs)
    payload = _header("expand")
    payload.update({
        "algebra": rep.name,
        "n": rep.n,
        "bernoulli_shift": format_rational(Fraction(rep.n + 2, 2)),
        "char_coeffs": [format_rational(c) for c in rep.char_coeffs],
        "binomial_coeffs": [format_rational(c) for c in binomial_basis_coeffs(rep.P)],
    })
    ok = all(format_rational(c).lstrip("-").isdigit() for c in binomial_basis_coeffs(rep.P))
    if args.format == "json":
        return dumps(payload), 0 if ok else 1
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["basis", "index", "coefficient"])
        for i, c in enumerate(payload["char_coeffs"]):
            w.writerow(["bernoulli", i, c])
        for i, c in enumerate(payload["binomial_coeffs"]):
            w.writerow(["binomial", i, c])
        return buf.getvalue(), 0 if ok else 1
    lines = [f"algebra {rep.name}, n = {rep.n}",
             "P(r) = sum_l c_l * 2/(2l+1)! * B_{2l+1}(r + n/2 + 1)"]
    lines += [f"  c_{l} = {c}" for l, c in enumerate(payload["char_coeffs"])]
    lines.append("P(r) = sum_i n_i * C(r, i)")
    lines += [f"  n_{i} = {c}" for i, c in enumerate(payload["binomial_coeffs"])]
    return "\n".join(lines) + "\n", 0 if ok else 1


# -- prolong --------------------------------------------------------------------

def prolong_payload(n: int, r: int, cap: int | None, degree_bound: int | None) -> tuple[dict, bool]:
    spec = TwistorSymbolSpec(n, r)
    sym = twistor_symbol(spec)
    cap = 2 * r + 1 if cap is None else cap
    tower = prolongation_tower(sym, cap)
    dims = tower.level_dims()
    formula = [lemma_level_dim(n, r, l) for l in range(len(dims))]
    spencer = [spencer_exactness(tower, l) for l in range(len(dims) - 1)]
    binom = math.comb(2 * n + 1 + 2 * r, 2 * n + 1)
    payload = _header("prolong")
    payload.update({
        "n": n, "r": r, "cap": cap,
        "V_dim": spec.V_dim, "E0_dim": spec.E0_dim, "F_dim": spec.F_dim,
        "levels": dims,
        "formula_levels": formula,
        "terminated": tower.terminated,
        "termination_degree": tower.termination_degree,
        "A_dim": tower.A_total.dim,
        "spencer": [{"l": s.l, "kernel_dim": s.kernel_dim, "next_level_dim": s.next_level_dim,
                     "exact": s.exact} for s in spencer],
        "binomial_total": binom,
    })
    ok = dims == formula and all(s.exact for s in spencer)
    if tower.terminated:
        total = tower.total_dim()
        d = tower.termination_degree
        bound = sym.order + d + 1 if degree_bound is None else degree_bound
        sols = polynomial_solution_space(sym, bound).dim
        payload.update({"total_dim": total, "solution_degree_bound": bound,
                        "solution_dim": sols})
        ok = ok and total == binom and sols <= total
    else:
        payload.update({"total_dim": None, "solution_dim": None})
        ok = False
    return payload, ok


def cmd_prolong(args) -> tuple[str, int]:
    if args.n < 1 or args.r < 1:
        raise UsageError("prolong requires --n >= 1 and --r >= 1")
    if args.cap is not None and args.cap < 1:
        raise UsageError("--cap must be >= 1")
    payload, ok = prolong_payload(args.n, args.r, args.cap, args.degree_bound)
    if args.format == "json":
        return dumps(payload), 0 if ok else 1
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["l", "computed", "formula"])
        for l, (a, b) in enumerate(zip(payload["levels"], payload["formula_levels"])):
            w.writerow([l, a, b])
        return buf.getvalue(), 0 if ok else 1
    lines = [f"twistor symbol n={args.n} r={args.r}  (V={payload['V_dim']}, "
             f"E0={payload['E0_dim']}, F={payload['F_dim']})",
             f"{'l':>3}  {'dim A^(l)':>10}  {'formula':>8}"]
    for l, (a, b) in enumerate(zip(payload["levels"], payload["formula_levels"])):
        lines.append(f"{l:>3}  {a:>10}  {b:>8}")
    if payload["terminated"]:
        lines += [f"termination degree  {payload['termination_degree']}",
                  f"dim A^(<=d)         {payload['total_dim']}",
                  f"C(2n+1+2r, 2n+1)    {payload['binomial_total']}",
                  f"polynomial solutions (deg <= {payload['solution_degree_bound']})  "
                  f"{payload['solution_dim']}"]
    else:
        lines.append(f"not terminated at cap {payload['cap']}")
    lines.append("spencer exact       " + ("yes" if all(s["exact"] for s in payload["spencer"]) else "NO"))
    return "\n".join(lines) + "\n", 0 if ok else 1


# -- verify ---------------------------------------------------------------------

def cmd_verify(args) -> tuple[str, int]:
    overrides = {}
    if args.root_table:
        rs = load_root_table(args.root_table)
        overrides[(rs.type_label, rs.rank)] = rs
    checks = suite.run(args.scope, args.r_max, overrides, args.jobs)
    failed = [c.name for c in checks if not c.passed]
    payload = _header("verify")
    payload.update({
        "scope": args.scope,
        "total": len(checks),
        "passed": len(checks) - len(failed),
        "failed": failed,
        "checks": [c.as_dict() for c in checks],
    })
    code = 1 if failed else 0
    if args.format == "json":
        return dumps(payload), code
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "status"])
        for c in payload["checks"]:
            w.writerow([c["name"], c["status"]])
        return buf.getvalue(), code
    lines = _check_lines(payload["checks"])
    lines.append(f"{payload['passed']}/{payload['total']} checks passed")
    return "\n".join(lines) + "\n", code


# -- argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qkhilbert", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"qkhilbert {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
        sp.add_argument("--output", "-o", help="write the report here instead of stdout")

    def selector(sp):
        sp.add_argument("--algebra", help="simple Lie algebra, e.g. G2, E8, A3")
        sp.add_argument("--family", choices=FAMILIES)
        sp.add_argument("--n", type=int, help="quaternionic dimension for --family")
        sp.add_argument("--root-table", help="JSON root table replacing the built-in model")

    w = sub.add_parser("wolf", help="Hilbert polynomial of a Wolf space")
    selector(w)
    w.add_argument("--r-max", type=int, default=20)
    common(w)

    e = sub.add_parser("expand", help="Bernoulli- and binomial-basis coefficients")
    selector(e)
    common(e)

    pr = sub.add_parser("prolong", help="prolongation tower of the twistor symbol")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--r", type=int, required=True)
    pr.add_argument("--cap", type=int)
    pr.add_argument("--degree-bound", type=int)
    common(pr)

    v = sub.add_parser("verify", help="run the verification grid")
    v.add_argument("--scope", choices=("all", "hilbert", "prolong"), default="all")
    v.add_argument("--r-max", type=int, default=20)
    v.add_argument("--root-table", help="JSON root table replacing one built-in algebra")
    v.add_argument("--jobs", type=int, default=1)
    common(v)
    return p


COMMANDS = {"wolf": cmd_wolf, "expand": cmd_expand, "prolong": cmd_prolong, "verify": cmd_verify}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "r_max", 0) < 0:
        parser.error("--r-max must be non-negative")
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"qkhilbert: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
