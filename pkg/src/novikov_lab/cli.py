"""Command-line interface: ``novikov-lab <command> problem.json``.

Exit codes: 0 success (a report was produced, whatever its verdict),
1 schema error, 2 validation error, 3 resource limit.
"""

import argparse
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .complexes import euler_characteristic, twisted_complex
from .equivariant import borel_complex, join_resolution, stability_check
from .errors import NovikovLabError, ResourceLimit, SchemaError, StabilityViolation, ValidationError
from .exactalg import CountingSeries
from .morse import morse_series, verify_inequalities
from .novikov import equivariant_novikov
from .schema import load_problem
from .symplectic import fixed_point_counts, kahler_report, perfectness_check

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_SCHEMA, EXIT_VALIDATION, EXIT_LIMIT = 0, 1, 2, 3


def _q(x):
    return str(Fraction(x))


def _tuple(xs):
    return "(" + ", ".join(_q(x) for x in xs) + ")"


def _num(x):
    """Fixed-precision float for report text (deterministic)."""
    s = f"{x:.6f}"
    return "0" if s in ("0.000000", "-0.000000") else s


def _describe_jump(point, scale):
    r = point.root
    if r.exact is not None:
        t = scale * math.log(r.exact)
        where = f"t = {_num(t)} (s = {_q(r.exact)})"
    else:
        lo, hi = point.t_interval
        where = f"t in [{_num(lo)}, {_num(hi)}] (s in [{_q(r.low)}, {_q(r.high)}])"
    return where


def _jump_json(point, scale):
    r = point.root
    out = {"s_low": _q(r.low), "s_high": _q(r.high), "dimension": point.dimension}
    if r.exact is not None:
        out["s_exact"] = _q(r.exact)
        out["t"] = _num(scale * math.log(r.exact))
    else:
        out["t_low"], out["t_high"] = (_num(t) for t in point.t_interval)
    return out


def _jump_lines(jumps, scale):
    lines = []
    for js in jumps:
        for p in js.points:
            lines.append(
                f"jump: degree {js.degree} at {_describe_jump(p, scale)}, "
                f"dim {js.background} -> {p.dimension}"
            )
        if js.other_roots:
            lines.append(
                f"note: degree {js.degree} locus has {js.other_roots} "
                f"non-positive or complex root(s), not on the deformation line"
            )
    if not any(js.points for js in jumps):
        lines.append("jumps: none")
    return lines


def _require(P, *keys):
    for k in keys:
        if getattr(P, k) is None:
            raise SchemaError(f"$: this command needs the field {k!r}")


def cmd_novikov(P, args):
    _require(P, "complex")
    K = P.complex
    if P.group is not None:
        deg = args.degree if args.degree is not None else (P.degree if P.degree is not None else K.dimension)
        r = equivariant_novikov(K, P.group, P.action, P.equivariant_system, P.cocycle, deg,
                                jumps=args.jumps, limit=args.limit)
        numbers, jumps, scale = r.numbers, r.jumps, P.cocycle.scale
        header = f"equivariant Novikov numbers (|G| = {P.group.order}, acyclicity {r.acyclicity})"
        euler_line = None
    else:
        tc = twisted_complex(K, P.local_system, P.cocycle)
        top = K.dimension
        deg = args.degree if args.degree is not None else (P.degree if P.degree is not None else top)
        degrees = range(min(deg, top) + 1)
        numbers = tc.generic_dims(degrees) + [0] * max(0, deg - top)
        jumps = [tc.jump_set(i) for i in degrees] if args.jumps else []
        scale = tc.scale
        header = "Novikov numbers"
        euler_line = None
        if deg >= top:
            alt = sum((-1) ** i * b for i, b in enumerate(numbers))
            target = P.local_system.rank * euler_characteristic(K)
            mark = "ok" if alt == target else "MISMATCH"
            euler_line = f"euler check: alternating sum {alt} = d * chi = {target} [{mark}]"
    text = [header, ", ".join(f"β_{i} = {b}" for i, b in enumerate(numbers))]
    if args.jumps:
        text += _jump_lines(jumps, scale)
    if euler_line:
        text.append(euler_line)
    data = {
        "command": "novikov",
        "numbers": numbers,
        "equivariant": P.group is not None,
    }
    if args.jumps:
        data["jumps"] = [
            {
                "degree": js.degree,
                "background": js.background,
                "points": [_jump_json(p, scale) for p in js.points],
                "other_roots": js.other_roots,
            }
            for js in jumps
        ]
    return text, data


def cmd_equivariant(P, args):
    _require(P, "complex", "group")
    K = P.complex
    deg = args.degree if args.degree is not None else (P.degree if P.degree is not None else K.dimension)
    n = deg + 1
    B = borel_complex(join_resolution(P.group, n), K, P.equivariant_system, P.cocycle,
                      top_degree=deg, limit=args.limit)
    dims = B.generic_dims(deg)
    text = [f"equivariant dims, degrees 0..{deg} (acyclicity {n}): {_tuple(dims)}"]
    data = {"command": "equivariant", "dims": dims, "acyclicity": n}
    if args.stability_check:
        try:
            stability_check(K, P.group, P.action, P.equivariant_system, P.cocycle, deg, n, n + 1,
                            limit=args.limit)
            text.append(f"stable ✓ (acyclicity {n} and {n + 1} agree)")
            data["stable"] = True
        except StabilityViolation as exc:
            text.append(f"UNSTABLE: {exc}")
            data["stable"] = False
    return text, data


def cmd_verify(P, args):
    pmax = args.pmax if args.pmax is not None else P.pmax
    if pmax is None:
        raise SchemaError("$: verify needs pmax (field or --pmax)")
    if P.morse_series is not None:
        M = P.morse_series.truncate(pmax) if P.morse_series.p_max >= pmax else None
        if M is None:
            raise SchemaError(f"$.morse_series: fewer than {pmax + 1} coefficients")
    else:
        M = morse_series(P.components or [], P.group, pmax, limit=args.limit)
    if P.novikov_series is not None:
        if P.novikov_series.p_max < pmax:
            raise SchemaError(f"$.novikov_series: fewer than {pmax + 1} coefficients")
        N = P.novikov_series.truncate(pmax)
    elif P.complex is not None:
        if P.group is not None:
            N = equivariant_novikov(P.complex, P.group, P.action, P.equivariant_system, P.cocycle,
                                    pmax, jumps=False, limit=args.limit).series
        else:
            tc = twisted_complex(P.complex, P.local_system, P.cocycle)
            N = CountingSeries(tc.generic_dims(), pmax)
    else:
        raise SchemaError("$: verify needs novikov_series or a complex to compute it from")
    rep = verify_inequalities(M, N, pmax)
    text = [
        f"morse series:   {rep.morse}",
        f"novikov series: {rep.novikov}",
        f"Q = {rep.Q}",
        "Q_p: " + ", ".join(_q(x) for x in rep.alternating),
        rep.summary(),
    ]
    data = {
        "command": "verify",
        "pmax": pmax,
        "morse": [_q(x) for x in rep.morse],
        "novikov": [_q(x) for x in rep.novikov],
        "Q": [_q(x) for x in rep.Q],
        "verdict": rep.verdict,
        "failed_at": rep.failed_at,
    }
    return text, data


def _report_lines(rep, euler, d=1):
    lines = [f"m = {_tuple(rep.m)}; total = {_q(rep.total)}" + (
        " = χ" if euler is not None and rep.total == euler else "")]
    if rep.stable is not None:
        tail = " = d·χ" if euler is not None and rep.stable == d * euler else ""
        lines.append(f"stable value {_q(rep.stable)}{tail}")
    for v in rep.violations:
        lines.append(f"violation: {type(v).__name__}: {v}")
    for n in rep.notices:
        lines.append(f"notice: {n}")
    return lines


def _report_json(rep):
    return {
        "m": [_q(x) for x in rep.m],
        "total": _q(rep.total),
        "stable": None if rep.stable is None else _q(rep.stable),
        "violations": [f"{type(v).__name__}: {v}" for v in rep.violations],
        "notices": list(rep.notices),
    }


def cmd_symplectic(P, args):
    pmax = args.pmax if args.pmax is not None else P.pmax
    if pmax is None:
        raise SchemaError("$: symplectic needs pmax (field or --pmax)")
    data = {"command": "symplectic", "pmax": pmax}
    text = []
    if P.equivariant_dims is not None:
        n = P.fixed_points.n if P.fixed_points is not None else P.degree
        if n is None:
            raise SchemaError("$: give fixed_points.n or degree for the manifold dimension")
        euler = P.fixed_points.euler if P.fixed_points is not None else None
        rep = kahler_report(P.equivariant_dims, n, pmax, euler)
        text += ["untwisted equivariant dims: " + _tuple(P.equivariant_dims[: pmax + 1])]
        text += _report_lines(rep, euler)
        data["kahler"] = _report_json(rep)
        return text, data
    _require(P, "fixed_points", "novikov_series")
    fp, N = P.fixed_points, P.novikov_series
    if N.p_max < pmax:
        raise SchemaError(f"$.novikov_series: fewer than {pmax + 1} coefficients")
    perf = perfectness_check(fp, N, pmax)
    text.append(perf.summary())
    data["perfectness"] = {
        "holds": perf.holds,
        "first_discrepancy": perf.first_discrepancy,
        "fixed_point_side": [_q(x) for x in perf.lhs],
    }
    if not fp.components and N.truncate(pmax).is_zero():
        text.append("consistent: no fixed points (all equivariant Novikov numbers vanish)")
        data["no_fixed_points"] = True
        return text, data
    rep = fixed_point_counts(N, fp.d, fp.n, pmax, fp.euler)
    text += _report_lines(rep, fp.euler, fp.d)
    data["counts"] = _report_json(rep)
    return text, data


COMMANDS = {
    "novikov": cmd_novikov,
    "equivariant": cmd_equivariant,
    "verify": cmd_verify,
    "symplectic": cmd_symplectic,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="novikov-lab",
        description="Exact Novikov numbers, equivariant twisted cohomology and Morse counting checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="problem descriptor (JSON)")
        p.add_argument("--json", action="store_true", help="emit a machine-readable report")
        p.add_argument("--limit", type=int, default=None,
                       help="cap on the Hom-complex size (entries); env NOVIKOV_LAB_LIMIT")
        return p

    p = common(sub.add_parser("novikov", help="Novikov numbers and jump loci"))
    p.add_argument("--degree", type=int, default=None, help="highest degree to report")
    p.add_argument("--jumps", action="store_true", help="report jump loci")
    p = common(sub.add_parser("equivariant", help="Borel-construction twisted cohomology"))
    p.add_argument("--degree", type=int, default=None, help="highest degree to report")
    p.add_argument("--stability-check", action="store_true",
                   help="recompute with a larger resolution and compare")
    p = common(sub.add_parser("verify", help="check the Morse-Novikov inequalities"))
    p.add_argument("--pmax", type=int, default=None, help="truncation degree")
    p = common(sub.add_parser("symplectic", help="circle-action identities and fixed-point counts"))
    p.add_argument("--pmax", type=int, default=None, help="truncation degree")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    for flag in ("degree", "pmax"):
        if getattr(args, flag, None) is not None and getattr(args, flag) < 0:
            print(f"error: --{flag} must be non-negative", file=stderr)
            return EXIT_SCHEMA
    try:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SchemaError(f"cannot read {args.input}: {exc.strerror}") from None
        P = load_problem(text)
        if args.limit is None:
            args.limit = P.limit
        lines, data = COMMANDS[args.command](P, args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=stderr)
        return EXIT_SCHEMA
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=stderr)
        return EXIT_LIMIT
    except ValidationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return EXIT_VALIDATION
    except NovikovLabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return EXIT_VALIDATION
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
