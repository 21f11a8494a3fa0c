"""Command-line surface and the JSON wire formats.

Instance files look like ``{"n": 3, "points": [{"x": "-3", "y": "8"}, ...]}``
with rationals in the strict text grammar; solution files are
``{"solutions": [{"coeffs": ["-2", "-4", "1", "1"]}], "count": 1}`` with
coefficient index equal to the power of x.

Exit codes: 0 success / solutions found; 1 no solution or comparison
mismatch; 2 invalid input; 3 internal diagnostic (non-zero-dimensional
system, escalated completeness warning).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

from .adaptive import counterexample_pair, select_next_point
from .errors import CompletenessWarning, NonZeroDimensional, PhaselessError
from .groebner import buchberger
from .hardness import ReductionInstance, decode_solution, reduce_partition
from .oracle import oracle_enumerate
from .rational import format_rat, parse_rat
from .solver import Instance, SolutionSet, solve
from .upoly import UPoly

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_INVALID = 2
EXIT_DIAGNOSTIC = 3


# ---------------------------------------------------------------- formats

def instance_to_json(instance: Instance) -> dict:
    return {"n": instance.n,
            "points": [{"x": format_rat(x), "y": format_rat(y)}
                       for x, y in instance.points]}

def instance_from_json(data: dict) -> Instance:
    return Instance(n=int(data["n"]),
                    points=tuple((parse_rat(p["x"]), parse_rat(p["y"]))
                                 for p in data["points"]))

def solutions_to_json(solutions: SolutionSet) -> dict:
    return {"solutions": [{"coeffs": [format_rat(c) for c in q.coeffs]}
                          for q in solutions],
            "count": len(solutions)}

def reduction_to_json(inst: ReductionInstance) -> dict:
    return {"n": inst.n, "k": inst.k,
            "exact_points": [{"x": format_rat(x), "y": format_rat(y)}
                             for x, y in inst.exact_points],
            "phaseless_points": [{"x": format_rat(x), "y": format_rat(y)}
                                 for x, y in inst.phaseless_points],
            "weights": [format_rat(w) for w in inst.weights],
            "decode_signs": list(inst.decode_signs),
            "alphas": [format_rat(a) for a in inst.alphas],
            "scale": format_rat(inst.scale)}

def reduction_from_json(data: dict) -> ReductionInstance:
    return ReductionInstance(
        n=int(data["n"]), k=int(data["k"]),
        exact_points=tuple((parse_rat(p["x"]), parse_rat(p["y"]))
                           for p in data["exact_points"]),
        phaseless_points=tuple((parse_rat(p["x"]), parse_rat(p["y"]))
                               for p in data["phaseless_points"]),
        weights=tuple(parse_rat(w) for w in data["weights"]),
        decode_signs=tuple(int(s) for s in data["decode_signs"]),
        alphas=tuple(parse_rat(a) for a in data["alphas"]),
        scale=parse_rat(data["scale"]))


# ------------------------------------------------------------------ io

def _read_json(path: str | None) -> dict:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return json.loads(text)

def _write_text(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")

def _emit_json(data: dict, path: str | None):
    _write_text(json.dumps(data, indent=2), path)

def _parse_rat_list(text: str) -> list[Fraction]:
    return [parse_rat(part) for part in text.split(",") if part.strip()]

def _parse_signs(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if part in ("+", "+1", "1"):
            out.append(1)
        elif part in ("-", "-1"):
            out.append(-1)
        else:
            raise ValueError(f"bad sign {part!r}; use + or -")
    return out


# ------------------------------------------------------------ subcommands

def _cmd_solve(args) -> int:
    instance = instance_from_json(_read_json(args.input))
    if args.k is not None and args.k != instance.k:
        raise ValueError(
            f"--k {args.k} conflicts with the point count (k={instance.k})")
    result = solve(instance)
    _emit_json(solutions_to_json(result), args.output)
    return EXIT_OK if len(result) else EXIT_NO_SOLUTION

def _cmd_oracle(args) -> int:
    instance = instance_from_json(_read_json(args.input))
    result = oracle_enumerate(instance)
    _emit_json(solutions_to_json(result), args.output)
    if args.compare:
        if solve(instance) != result:
            print("error[compare]: solver and oracle disagree", file=sys.stderr)
            return EXIT_NO_SOLUTION
        return EXIT_OK
    return EXIT_OK if len(result) else EXIT_NO_SOLUTION

def _cmd_adapt(args) -> int:
    instance = instance_from_json(_read_json(args.input))
    point = select_next_point(instance.points, instance.n)
    _emit_json({"x": format_rat(point)}, args.output)
    return EXIT_OK

def _cmd_counterexample(args) -> int:
    nodes = _parse_rat_list(args.nodes)
    p, q = counterexample_pair(nodes)
    n = len(nodes) // 2
    def padded(poly: UPoly) -> list[str]:
        cs = list(poly.coeffs) + [Fraction(0)] * (n + 1 - len(poly.coeffs))
        return [format_rat(c) for c in cs]
    instance = {"n": n,
                "points": [{"x": format_rat(x), "y": format_rat(abs(p(x)))}
                           for x in nodes]}
    _emit_json({"p": {"coeffs": padded(p)}, "q": {"coeffs": padded(q)},
                "instance": instance}, args.output)
    return EXIT_OK

def _cmd_reduce_partition(args) -> int:
    weights = [int(w) for w in args.weights.split(",") if w.strip()]
    nodes = _parse_rat_list(args.nodes) if args.nodes else None
    values = _parse_rat_list(args.exact_values) if args.exact_values else None
    inst = reduce_partition(weights, args.n, args.k, nodes, values)
    _emit_json(reduction_to_json(inst), args.output)
    return EXIT_OK

def _cmd_decode(args) -> int:
    inst = reduction_from_json(_read_json(args.instance))
    signs = _parse_signs(args.signs)
    signing = decode_solution(inst, signs)
    if signing is None:
        _emit_json({"signing": None}, args.output)
        return EXIT_NO_SOLUTION
    _emit_json({"signing": list(signing)}, args.output)
    return EXIT_OK

def _cmd_groebner(args) -> int:
    instance = instance_from_json(_read_json(args.input))
    instance.validate()
    from .elimination import a_recursion, build_system, fix_anchor
    from .interpolation import affine_family, shift_origin
    shift, shifted, anchor = shift_origin(instance.points)
    squared = [(x, y * y) for x, y in shifted]
    family = affine_family(squared, instance.k, 2 * instance.n)
    a_terms = a_recursion(family, fix_anchor(anchor, -1), 2 * instance.n)
    basis = buchberger(build_system(family, a_terms))
    _write_text("\n".join(str(g) for g in basis.elements), args.output)
    return EXIT_OK

def _cmd_sample(args) -> int:
    coeffs = _parse_rat_list(args.coeffs)
    poly = UPoly(coeffs)
    lo_s, hi_s, steps_s = args.grid.split(":")
    lo, hi, steps = parse_rat(lo_s), parse_rat(hi_s), int(steps_s)
    if steps < 1:
        raise ValueError("grid needs at least one step")
    rows = ["x,abs_value"]
    for i in range(steps + 1):
        x = lo + (hi - lo) * i / steps
        rows.append(f"{format_rat(x)},{format_rat(abs(poly(x)))}")
    _write_text("\n".join(rows), args.output)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="phaseless",
        description="Reconstruct rational polynomials from absolute-value "
                    "evaluations, exactly.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", "-o", default=None,
                       help="output file (default: stdout)")

    p = sub.add_parser("solve", help="solve a phaseless instance")
    p.add_argument("--input", "-i", default=None, help="instance JSON (default: stdin)")
    p.add_argument("--k", type=int, default=None,
                   help="expected freedom; must match the point count")
    common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="brute-force enumeration")
    p.add_argument("--input", "-i", default=None)
    p.add_argument("--compare", action="store_true",
                   help="also run the solver and fail on mismatch")
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("adapt", help="choose the next evaluation point")
    p.add_argument("--input", "-i", default=None,
                   help="instance JSON with n and n+1 points")
    common(p)
    p.set_defaults(func=_cmd_adapt)

    p = sub.add_parser("counterexample",
                       help="ambiguous pair on the given 2n nodes")
    p.add_argument("--nodes", required=True, help="comma-separated nodes")
    common(p)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("reduce-partition",
                       help="compile a Partition instance")
    p.add_argument("--weights", required=True, help="comma-separated integers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nodes", default=None)
    p.add_argument("--exact-values", dest="exact_values", default=None)
    common(p)
    p.set_defaults(func=_cmd_reduce_partition)

    p = sub.add_parser("decode", help="decode a sign vector")
    p.add_argument("--instance", required=True, help="reduction JSON file")
    p.add_argument("--signs", required=True, help="e.g. +,-,+")
    common(p)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("groebner", help="dump the basis for an instance")
    p.add_argument("--input", "-i", default=None)
    common(p)
    p.set_defaults(func=_cmd_groebner)

    p = sub.add_parser("sample", help="emit |q| samples on a grid as CSV")
    p.add_argument("--coeffs", required=True,
                   help="comma-separated coefficients, index = power")
    p.add_argument("--grid", required=True, help="lo:hi:steps")
    common(p)
    p.set_defaults(func=_cmd_sample)
    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", CompletenessWarning)
            code = args.func(args)
        escalate = [w for w in caught if issubclass(w.category, CompletenessWarning)]
        if escalate:
            for w in escalate:
                print(f"error[completeness]: {w.message}", file=sys.stderr)
            return EXIT_DIAGNOSTIC
        return code
    except NonZeroDimensional as exc:
        print(f"error[non-zero-dimensional]: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTIC
    except (PhaselessError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error[invalid-input]: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
