"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 precondition violation,
3 level cap reached or indeterminate gin.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core.classical import display_order
from .core.fields import FieldError, parse_field
from .core.parsing import ParseError, parse_polynomial
from .gin import IndeterminateGin, gin_random
from .invariant import (
    Representation,
    RepresentationError,
    expand,
    parse_representation,
    remainder,
    representation_from_body,
)
from .stillman.enumerate import stillman_enumerate
from .stillman.params import param_str
from .symmetric import LevelCapExceeded, default_level_cap, symmetric_buchberger

__all__ = ["main", "build_parser"]

EXIT_PARSE, EXIT_PRECONDITION, EXIT_LIMIT = 1, 2, 3


class _Precondition(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symgb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, field=True):
        if field:
            sp.add_argument("--field", default="QQ", help="QQ or F<p> (default QQ)")
        sp.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--input", metavar="FILE", help="read inputs from FILE, one per line")

    gb = sub.add_parser("gb", help="Groebner basis of eventually invariant series")
    common(gb)
    gb.add_argument("--level", type=int, default=0, help="base level n of the inputs")
    gb.add_argument("--cap", type=int, default=None, help="level cap (default $SYMGB_LEVEL_CAP or 12)")
    gb.add_argument("inputs", nargs="*", help="representation bodies or rep(n=..., d=...) forms")

    gin = sub.add_parser("gin", help="generic initial ideal by random coordinates")
    common(gin)
    gin.add_argument("--n", type=int, required=True, help="number of variables")
    gin.add_argument("--trials", type=int, default=5)
    gin.add_argument("inputs", nargs="*", help="homogeneous polynomials in x1..xn")

    st = sub.add_parser("stillman", help="enumerate generic initial ideals of k forms")
    common(st, field=False)
    st.add_argument("--k", type=int, required=True)
    st.add_argument("--degrees", required=True, help="comma-separated degrees")
    st.add_argument("--cap", type=int, default=None, help="level cap (default $SYMGB_LEVEL_CAP or 12)")

    ex = sub.add_parser("expand", help="m-expansion of a representation")
    common(ex)
    ex.add_argument("--level", type=int, default=0, help="level n of the input")
    ex.add_argument("--to", type=int, required=True, help="target level m >= n")
    ex.add_argument("inputs", nargs="*", help="one representation body")

    rd = sub.add_parser("reduce", help="remainder of a representation modulo monic divisors")
    common(rd)
    rd.add_argument("--level", type=int, default=0, help="common level n")
    rd.add_argument("inputs", nargs="*", help="the dividend followed by the divisors")
    return p


def _read_inputs(args):
    """Return [(text, line number)]."""
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise _Precondition(f"cannot read {args.input}: {exc.strerror}") from None
        out = []
        for no, line in enumerate(lines, start=1):
            text = line.split("#", 1)[0].strip()
            if text:
                out.append((text, no))
        return out + [(t, 1) for t in getattr(args, "inputs", [])]
    return [(t, no) for no, t in enumerate(getattr(args, "inputs", []), start=1)]


def _field(args):
    try:
        return parse_field(args.field)
    except FieldError as exc:
        raise _Precondition(str(exc)) from None


def _representation(text, line, field, n) -> Representation:
    if text.lstrip().startswith("rep("):
        r = parse_representation(text, field, line)
        if r.n > n:
            raise RepresentationError(f"input at level {r.n} exceeds --level {n}")
        return expand(r, n)
    body = parse_polynomial(text, field, line)
    return representation_from_body(body, n)


def _braces(monos) -> str:
    return "{" + ", ".join(str(m) for m in display_order(monos)) + "}"


def _cmd_gb(args, out):
    field = _field(args)
    F = [_representation(t, no, field, args.level) for t, no in _read_inputs(args)]
    res = symmetric_buchberger(args.level, F, level_cap=args.cap)
    lead = res.lead_set
    if args.format == "json":
        return {
            "command": "gb", "field": field.name, "seed": args.seed, "level": res.m,
            "basis": [str(b) for b in res.basis], "lead_set": [str(m) for m in display_order(lead)],
        }
    out.append(f"seed: {args.seed}")
    out.append(f"field: {field.name}")
    out.append(f"level: {res.m}")
    out.append("basis:")
    out.extend(f"  {b}" for b in res.basis)
    out.append(f"lead set: {_braces(lead)}")


def _cmd_gin(args, out):
    field = _field(args)
    F = [parse_polynomial(t, field, no) for t, no in _read_inputs(args)]
    res = gin_random(F, args.n, trials=args.trials, seed=args.seed, field=field)
    if args.format == "json":
        return {
            "command": "gin", "field": field.name, "seed": args.seed, "n": args.n,
            "trials": args.trials, "draw_field": res.draw_field.name,
            "gin": [str(m) for m in display_order(res.monomials)],
            "tally": [{"outcome": [str(m) for m in display_order(o)], "count": c} for o, c in res.tally],
        }
    out.append(f"seed: {args.seed}")
    out.append(f"field: {field.name} (matrices over {res.draw_field.name})")
    out.append(f"gin: {_braces(res.monomials)}")
    out.append(f"tally ({args.trials} trials, {res.disagreements} disagreeing):")
    out.extend(f"  {c} x {_braces(o)}" for o, c in res.tally)


def _cmd_stillman(args, out):
    try:
        degrees = [int(d) for d in args.degrees.split(",") if d.strip()]
    except ValueError:
        raise _Precondition(f"cannot parse degrees {args.degrees!r}") from None
    if len(degrees) != args.k:
        raise _Precondition(f"--k {args.k} needs exactly {args.k} degrees")
    cap = default_level_cap() if args.cap is None else args.cap
    res = stillman_enumerate(args.k, degrees, level_cap=cap, seed=args.seed)
    distinct = len({tuple(s.S) for s in res.strata})
    if args.format == "json":
        return {
            "command": "stillman", "seed": args.seed, "k": args.k, "degrees": degrees,
            "cap": cap,
            "strata": [
                {
                    "S": [str(m) for m in display_order(s.S)], "Y": str(s.Y),
                    "Z": [param_str(z) for z in s.Z], "N": [param_str(n) for n in s.N],
                    "m": s.m, "line": str(s),
                }
                for s in res.strata
            ],
            "leaves": res.leaves, "strata_count": len(res.strata),
            "distinct_S": distinct, "nodes": len(res.nodes),
        }
    out.append(f"seed: {args.seed}")
    out.extend(str(s) for s in res.strata)
    out.append(
        f"summary: {res.leaves} leaves, {len(res.strata)} strata, "
        f"{distinct} distinct S, {len(res.nodes)} nodes"
    )


def _cmd_expand(args, out):
    field = _field(args)
    inputs = _read_inputs(args)
    if len(inputs) != 1:
        raise _Precondition("expand takes exactly one representation")
    r = _representation(inputs[0][0], inputs[0][1], field, args.level)
    e = expand(r, args.to)
    if args.format == "json":
        return {"command": "expand", "field": field.name, "seed": args.seed,
                "input": str(r), "level": args.to, "result": str(e)}
    out.append(f"seed: {args.seed}")
    out.append(str(e))


def _cmd_reduce(args, out):
    field = _field(args)
    inputs = _read_inputs(args)
    if not inputs:
        raise _Precondition("reduce needs a dividend")
    reps = [_representation(t, no, field, args.level) for t, no in inputs]
    h, F = reps[0], reps[1:]
    r = remainder(args.level, h, F)
    if args.format == "json":
        return {"command": "reduce", "field": field.name, "seed": args.seed,
                "level": args.level, "dividend": str(h),
                "divisors": [str(f) for f in F], "remainder": str(r)}
    out.append(f"seed: {args.seed}")
    out.append(str(r))


_COMMANDS = {
    "gb": _cmd_gb, "gin": _cmd_gin, "stillman": _cmd_stillman,
    "expand": _cmd_expand, "reduce": _cmd_reduce,
}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    out: list = []
    try:
        payload = _COMMANDS[args.command](args, out)
    except ParseError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except LevelCapExceeded as exc:
        stderr.write(f"level cap: {exc}\n")
        for key, value in exc.details.items():
            stderr.write(f"  {key}: {value}\n")
        return EXIT_LIMIT
    except IndeterminateGin as exc:
        stderr.write(f"indeterminate gin: {exc}\n")
        for outcome, count in exc.tally:
            stderr.write(f"  {count} x {_braces(outcome)}\n")
        return EXIT_LIMIT
    except (_Precondition, RepresentationError, ValueError, TypeError, ZeroDivisionError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    if payload is not None:
        stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        stdout.write("\n".join(out) + "\n")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
