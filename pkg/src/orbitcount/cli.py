"""Command-line front end.

Every subcommand writes its result (CSV or JSON) to --out or standard output
and a run manifest (JSON) to standard error or --manifest. Results are
deterministic for fixed flags and seed; the manifest carries the timing.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import platform
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output helpers


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    return x


def dumps_json(obj: Any) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def dumps_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(_jsonable(v)) for v in row])
    return buf.getvalue()


def _versions() -> dict:
    out = {"orbitcount": __version__, "python": platform.python_version()}
    for mod in ("numpy", "mpmath"):
        try:
            out[mod] = __import__(mod).__version__
        except ImportError:  # pragma: no cover - both are hard dependencies
            out[mod] = None
    return out


# ---------------------------------------------------------------------------
# argument parsing helpers


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _weights(text: str) -> tuple[int, ...]:
    try:
        ws = tuple(int(w) for w in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers: {text!r}") from None
    if not ws or any(w < 1 for w in ws):
        raise argparse.ArgumentTypeError("weights must be positive")
    return ws


def _height(text: str) -> tuple[str, Any]:
    """An integer or rational height over Q, or 'q^k' over F_q(t)."""
    if "^" in text:
        q, _, k = text.partition("^")
        try:
            return "fq", (int(q), int(k))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad function-field height {text!r}") from None
    if "." in text or "e" in text.lower():
        raise argparse.ArgumentTypeError("heights are exact: use an integer, p/q, or q^k")
    return "q", _fraction(text)


# ---------------------------------------------------------------------------
# subcommands; each returns the text to emit


def cmd_enumerate(args) -> str:
    from .wps import enumerate_minimal, enumerate_minimal_fq, height

    kind, value = args.height
    rows = []
    if kind == "q":
        for pt in enumerate_minimal(value, args.weights):
            rows.append([*pt.coords, str(height(pt))])
    else:
        q, d = value
        for pt in enumerate_minimal_fq(q, d, args.weights):
            rows.append([*(str(c) for c in pt.coords), str(height(pt))])
    header = [f"A{i + 1}" for i in range(len(args.weights))] + ["height"]
    if args.json:
        return dumps_json({"weights": list(args.weights), "count": len(rows), "points": [dict(zip(header, r)) for r in rows]})
    return dumps_csv(header, rows)


def cmd_selmer2(args) -> str:
    from .invariants import EllipticCurveAB
    from .selmer import selmer2_size

    report = selmer2_size(EllipticCurveAB(args.A, args.B))
    if args.json:
        return dumps_json(report.to_json())
    lines = [f"A = {args.A}, B = {args.B}", f"selmer_size = {report.selmer_size}", f"classes = {len(report.classes)}"]
    for cls in report.classes:
        lines.append(f"  {list(cls.representative.coeffs)}")
    if report.audit_flags:
        lines.append("audit_flags = " + ";".join(report.audit_flags))
    return "\n".join(lines) + "\n"


SELMER_COLUMNS = ["A", "B", "height", "selmer_size", "class_count", "audit_flags"]


def cmd_selmer_average(args) -> str:
    from .selmer import selmer2_average

    kind, X = args.height
    if kind != "q":
        raise UsageError("selmer-average needs a height over Q")
    result = selmer2_average(X, jobs=args.jobs)
    if args.format == "json" or args.json:
        return dumps_json(
            {
                "height": str(X),
                "curve_count": result.curve_count,
                "average": result.average,
                "generic_class_average": result.generic_class_average,
                "rows": result.rows,
            }
        )
    return dumps_csv(SELMER_COLUMNS, [[r[c] for c in SELMER_COLUMNS] for r in result.rows])


def cmd_cusp_check(args) -> str:
    from .cusp import RepDatum, builtin_rep, check_condition2, check_condition3

    builtins = {"binary-quartic", "ternary-cubic", "so-even"}
    if args.rep in builtins:
        rep = builtin_rep(args.rep, args.n)
    elif Path(args.rep).is_file():
        rep = RepDatum.load(args.rep)
    else:
        raise UsageError(f"--rep must be one of {sorted(builtins)} or a JSON file")
    c2 = check_condition2(rep)
    c3 = check_condition3(rep)
    if args.report == "json" or args.json:
        return dumps_json({"rep": rep.name, "rep_datum": rep.to_json(), "condition2": c2.to_json(), "condition3": c3.to_json()})
    lines = [f"representation: {rep.name}", f"saturated sets: {c2.saturated_count}", f"admissible saturated sets: {len(c2.cases)}"]
    for case in c2.cases:
        shown = "{" + ", ".join(case.subject) + "}"
        lines.append(f"  {shown}: {'feasible' if case.feasible else 'INFEASIBLE'} margin {case.margin}")
    lines.append(f"condition 2: {'pass' if c2.passed else 'FAIL'}")
    for case in c3.cases:
        lines.append(f"  simple root {case.subject + 1}: {'feasible' if case.feasible else 'INFEASIBLE'}")
    lines.append(f"condition 3: {'pass' if c3.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _density_rows(result) -> str:
    payload = result.to_json()
    return dumps_csv(sorted(payload), [[payload[k] for k in sorted(payload)]])


def cmd_sieve(args) -> str:
    from . import sieve

    if args.sieve_command == "disc-density":
        result = sieve.disc_p2_density_exact(args.p)
        return dumps_json(result.to_json()) if args.json else _density_rows(result)
    if args.sieve_command == "tail":
        rec = sieve.tail_count(args.height, args.cutoff)
        payload = {
            "X": rec.X,
            "M": rec.M,
            "count": rec.count,
            "bound_value": rec.bound_value,
            "curves": rec.curves,
            "singular_skipped": rec.singular_skipped,
        }
        if args.json:
            return dumps_json(payload)
        return dumps_csv(list(payload), [list(payload.values())])
    if args.sieve_command == "fq-squarefree":
        result = sieve.fq_squarefree_disc_density(args.q, args.d, seed=args.seed)
        return dumps_json(result.to_json()) if args.json else _density_rows(result)
    raise UsageError("sieve needs a subcommand")


def cmd_mass(args) -> str:
    from .masses import local_mass, product_check
    from .rings import INFINITY, primes_up_to

    E = (args.A, args.B)
    factors = [local_mass(E, INFINITY)] + [local_mass(E, p) for p in primes_up_to(args.pmax)]
    product = product_check(E, args.pmax)
    if args.json:
        return dumps_json(
            {
                "A": args.A,
                "B": args.B,
                "pmax": args.pmax,
                "product": product,
                "factors": [{"place": str(f.place), "value": f.value, "torsion2_count": f.torsion2_count} for f in factors],
            }
        )
    rows = [[str(f.place), str(f.value), f.torsion2_count] for f in factors]
    rows.append(["product", str(product), ""])
    return dumps_csv(["place", "value", "torsion2_count"], rows)


def cmd_davenport(args) -> str:
    from .wps import davenport_experiment

    rec = davenport_experiment(shear=args.shear, t1=args.t1, t2=args.t2)
    payload = {"shear": args.shear, "t1": args.t1, "t2": args.t2, "count": rec.count, "volume": rec.volume, "projection_bound": rec.projection_bound}
    if args.json:
        return dumps_json(payload)
    return dumps_csv(list(payload), [list(payload.values())])


# ---------------------------------------------------------------------------
# parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitcount", description="Exact orbit-counting experiments.")
    parser.add_argument("--out", help="write the result here instead of standard output")
    parser.add_argument("--manifest", help="write the run manifest here instead of standard error")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled computations")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unaffected)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="minimal points of a weighted projective space up to a height")
    p.add_argument("--weights", type=_weights, required=True)
    p.add_argument("--height", type=_height, required=True, help="integer, p/q, or q^k for F_q(t)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("selmer2", help="2-Selmer size of y^2 = x^3 + Ax + B")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selmer2)

    p = sub.add_parser("selmer-average", help="average 2-Selmer size over curves up to a height")
    p.add_argument("--height", type=_height, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--json", action="store_true", help="same as --format json")
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes")
    p.set_defaults(func=cmd_selmer_average)

    p = sub.add_parser("cusp-check", help="cusp conditions for a representation")
    p.add_argument("--rep", required=True, help="binary-quartic, ternary-cubic, so-even, or a JSON file")
    p.add_argument("--n", type=int)
    p.add_argument("--report", choices=["json", "text"], default="text")
    p.add_argument("--json", action="store_true", help="same as --report json")
    p.set_defaults(func=cmd_cusp_check)

    p = sub.add_parser("sieve", help="local densities and tail counts")
    ssub = p.add_subparsers(dest="sieve_command", required=True)
    s = ssub.add_parser("disc-density")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s = ssub.add_parser("tail")
    s.add_argument("--height", type=int, required=True)
    s.add_argument("--cutoff", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s = ssub.add_parser("fq-squarefree")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("mass", help="local mass factors and their product")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--pmax", type=int, default=100)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mass)

    p = sub.add_parser("davenport", help="lattice points in a sheared, stretched unit square")
    p.add_argument("--shear", type=_fraction, default=Fraction(0))
    p.add_argument("--t1", type=int, required=True)
    p.add_argument("--t2", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_davenport)
    return parser


def _undecided_types() -> tuple[type, ...]:
    from .masses import PrecisionExhausted
    from .selmer import Undecided

    return (Undecided, PrecisionExhausted)


def _usage_types() -> tuple[type, ...]:
    from .cusp import CuspError
    from .masses import UnsupportedDegree

    return (UsageError, CuspError, UnsupportedDegree, ValueError)


def dispatch(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_USAGE if exc.code else EXIT_OK
    start = time.monotonic()
    try:
        text = args.func(args)
    except _undecided_types() as exc:
        print(f"undecided: {exc!r}", file=stderr)
        return EXIT_UNDECIDED
    except _usage_types() as exc:
        print(f"error: {exc}", file=stderr)
        parser.print_usage(stderr)
        return EXIT_USAGE
    data = text.encode("utf-8")
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        stdout.write(text)
    manifest = {
        "argv": argv,
        "seed": args.seed,
        "versions": _versions(),
        "wall_seconds": round(time.monotonic() - start, 3),
        "output_sha256": hashlib.sha256(data).hexdigest(),
    }
    if args.manifest:
        Path(args.manifest).write_text(dumps_json(manifest), encoding="utf-8")
    else:
        stderr.write(dumps_json(manifest))
    return EXIT_OK


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
