"""Command-line interface.

Exit codes: 0 when the command succeeds (every verdict, NonRobust
included), 2 for unreadable or malformed input, 3 for internal failures
such as an unmet simulation tolerance.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from .algebra import AlgebraicReal, RootBox
from .classify import Verdict, classify
from .emitter import Parametric, emit_robust_no, emit_robust_yes
from .errors import InstanceParseError
from .lds import Instance, Mode, characteristic_poly, simulate_continuous, simulate_discrete
from .oracle import EmpiricalUP, empirical_up, sample_perturbations
from .serialize import format_rational, instance_to_dict, parse_instance, parse_rational
from .transform import numerator, series_expand

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INTERNAL = 3


def _interval(lo: Fraction, hi: Fraction) -> list[str]:
    return [format_rational(lo), format_rational(hi)]


def _root_json(a: Optional[AlgebraicReal]):
    if a is None:
        return None
    return {"poly": [format_rational(x) for x in a.poly.coeffs], "interval": _interval(a.lo, a.hi)}


def _box_json(b: Optional[RootBox]):
    if b is None:
        return None
    return {
        "factor": [format_rational(x) for x in b.factor.coeffs],
        "re": _interval(*b.re),
        "im": _interval(*b.im),
        "multiplicity": b.multiplicity,
    }


def verdict_report(inst: Instance, verdict: Verdict) -> dict:
    w = verdict.witness
    return {
        "verdict": verdict.kind.value,
        "condition": verdict.condition.value,
        "witness": {
            "dominant_root": _root_json(w.dominant_root),
            "numerator_sign": w.numerator_sign_at_rho,
            "support_quotient_coeffs": (
                None if w.support_quotient is None else [format_rational(x) for x in w.support_quotient.coeffs]
            ),
            "oscillating_root_box": _box_json(w.oscillating_root),
        },
        "instance_echo": instance_to_dict(inst),
    }


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_instance(path: str) -> Instance:
    try:
        text = _read(path)
    except OSError as exc:
        raise InstanceParseError("$", f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def _classify_one(inst: Instance) -> dict:
    return verdict_report(inst, classify(inst))


def cmd_classify(args, out: TextIO) -> int:
    instances = [load_instance(p) for p in args.files]
    if args.jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_classify_one, instances))
    else:
        reports = [_classify_one(i) for i in instances]
    payload = reports[0] if len(reports) == 1 else reports
    json.dump(payload, out, indent=2)
    out.write("\n")
    return EXIT_OK


def _times(args, inst: Instance) -> list[Fraction]:
    if args.times:
        return [parse_rational(t, f"--times[{i}]") for i, t in enumerate(args.times.split(","))]
    step = parse_rational(args.dt, "--dt")
    if step <= 0:
        raise InstanceParseError("--dt", "must be positive")
    return [step * i for i in range(args.steps)]


def _simulated(inst: Instance, args) -> list[tuple[Fraction, Fraction]]:
    if inst.mode is Mode.DISCRETE:
        if args.steps < 1:
            raise InstanceParseError("--steps", "must be at least 1")
        return list(simulate_discrete(inst, args.steps - 1).samples)
    tol = parse_rational(args.tol, "--tol")
    return list(simulate_continuous(inst, _times(args, inst), tol).samples)


def _fmt_value(x: Fraction, exact: bool) -> str:
    return format_rational(x) if exact else repr(float(x))


def cmd_simulate(args, out: TextIO) -> int:
    inst = load_instance(args.file)
    exact = args.exact or inst.mode is Mode.DISCRETE
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n" if inst.mode is Mode.DISCRETE else "t", "value"])
    for t, v in _simulated(inst, args):
        w.writerow([format_rational(t), _fmt_value(v, exact)])
    return EXIT_OK


def cmd_series(args, out: TextIO) -> int:
    """Discrete: coefficients of ``psi/chi`` at infinity next to the simulated terms.

    Continuous: the same expansion of ``phi/chi`` gives the Taylor data
    ``u^(n)(0)``, listed next to the derivatives obtained from the ODE.
    """
    inst = load_instance(args.file)
    if args.steps < 1:
        raise InstanceParseError("--steps", "must be at least 1")
    expansion = series_expand(numerator(inst), characteristic_poly(inst), args.steps + 1)
    if inst.mode is Mode.DISCRETE:
        coeffs = expansion[: args.steps]
        sim = simulate_discrete(inst, args.steps - 1).values
    else:
        # phi/chi = sum u^(n)(0) z**-(n+1)
        coeffs = expansion[1:]
        sim = _derivatives(inst, args.steps)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "series", "simulated", "match"])
    for n, (a, b) in enumerate(zip(coeffs, sim)):
        w.writerow([n, format_rational(a), format_rational(b), "1" if a == b else "0"])
    return EXIT_OK


def _derivatives(inst: Instance, count: int) -> list[Fraction]:
    """``u^(n)(0)`` from the ODE: the derivative sequence obeys the same recurrence."""
    ders = list(inst.v)
    k = inst.order
    while len(ders) < count:
        ders.append(-sum(inst.c[i] * ders[len(ders) - k + i] for i in range(k)))
    return ders[:count]


def cmd_emit(args, out: TextIO) -> int:
    if args.parametric:
        if args.file is not None:
            inst = load_instance(args.file)
            target = Parametric(inst.mode, inst.order)
        else:
            if args.order is None or args.mode is None:
                raise InstanceParseError("--parametric", "needs an instance file or --mode and --order")
            target = Parametric(Mode(args.mode), args.order)
    else:
        if args.file is None:
            raise InstanceParseError("file", "an instance file is required")
        target = load_instance(args.file)
    emit = emit_robust_yes if args.formula == "yes" else emit_robust_no
    out.write(emit(target))
    return EXIT_OK


def cmd_sample(args, out: TextIO) -> int:
    inst = load_instance(args.file)
    eps = parse_rational(args.epsilon, "--epsilon")
    if eps <= 0:
        raise InstanceParseError("--epsilon", "must be positive")
    sample = sample_perturbations(inst, eps, args.count, args.seed)
    verdicts = []
    tally: dict[str, int] = {}
    for p in sample.instances:
        kind = classify(p).kind.value
        emp = empirical_up(p, args.horizon, args.window).value if args.empirical else None
        verdicts.append({"instance": instance_to_dict(p), "verdict": kind, "empirical_up": emp})
        tally[kind] = tally.get(kind, 0) + 1
    report = {
        "base": instance_to_dict(inst),
        "base_verdict": classify(inst).kind.value,
        "epsilon": format_rational(eps),
        "seed": args.seed,
        "corners": 4 * inst.order,
        "tally": tally,
        "samples": verdicts,
    }
    if args.empirical:
        report["empirical_tally"] = {
            e.value: sum(1 for v in verdicts if v["empirical_up"] == e.value) for e in EmpiricalUP
        }
    json.dump(report, out, indent=2)
    out.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="robustup", description="Robust ultimate positivity of linear recurrences and C-finite functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide RobustYes / RobustNo / NonRobust")
    p.add_argument("files", nargs="+", help="instance JSON files ('-' for stdin)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for batches")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", help="CSV trajectory")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=20, help="number of samples")
    p.add_argument("--dt", default="1/10", help="continuous sample spacing")
    p.add_argument("--times", help="comma-separated continuous sample times, overrides --steps/--dt")
    p.add_argument("--tol", default="1/1000000000", help="continuous absolute error bound")
    p.add_argument("--exact", action="store_true", help="print continuous values as exact dyadic rationals")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("series", help="CSV of transform series coefficients vs simulated values")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=20)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("emit-smt", help="SMT-LIB script for the robust YES or NO sentence")
    p.add_argument("file", nargs="?")
    p.add_argument("--formula", choices=("yes", "no"), default="yes")
    p.add_argument("--parametric", action="store_true", help="leave c and v as free constants")
    p.add_argument("--mode", choices=[m.value for m in Mode], help="with --parametric and no file")
    p.add_argument("--order", type=int, help="with --parametric and no file")
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("sample", help="JSON report on random perturbations")
    p.add_argument("file")
    p.add_argument("--epsilon", default="1/100000000")
    p.add_argument("--count", type=int, default=20, help="random samples besides the 4k corners")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--empirical", action="store_true", help="also run the finite-horizon positivity check")
    p.add_argument("--horizon", type=int, default=2000)
    p.add_argument("--window", type=int, default=100)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InstanceParseError as exc:
        print(f"robustup: parse error at {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # noqa: BLE001 - every other failure is internal by contract
        print(f"robustup: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
