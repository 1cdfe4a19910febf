"""Acceptance criteria, one test per criterion.

Each test prints a single ``[criterion N] PASS|FAIL`` line (visible without
``-s``) and then asserts. Run directly with ``python tests/test_acceptance.py``
for the summary alone.
"""

import random
import time
from collections import Counter
from fractions import Fraction

import pytest

from conftest import rational_root_multiset
from robustup.algebra import AlgebraicReal, Polynomial, composed_product, composed_sum, poly, sign_at
from robustup.classify import Condition, VerdictKind, classify, evaluate_conditions
from robustup.emitter import emit_robust_no, emit_robust_yes, run_solver, solver_command, validate_script
from robustup.lds import Instance, Mode, characteristic_poly, simulate_discrete
from robustup.oracle import EmpiricalUP, ExponentialPolynomial, axis_corners, construct_from_spectrum, empirical_up
from robustup.transform import numerator, series_expand, z_numerator

YES, NO, NON = VerdictKind.ROBUST_YES, VerdictKind.ROBUST_NO, VerdictKind.NON_ROBUST

SUITE = [
    ("fibonacci", Instance.discrete([-1, -1], [0, 1]), YES, Condition.YES),
    ("order-1 c0=-2 v0=3", Instance.discrete([-2], [3]), YES, Condition.YES),
    ("order-1 c0=2 v0=1", Instance.discrete([2], [1]), NO, Condition.NO1),
    ("1+cos(n pi/2)", Instance.discrete([-1, 1, -1], [2, 1, 0]), NON, Condition.NONE),
    ("roots {1,-2}, u=1", Instance.discrete([-2, 1], [1, 1]), NON, Condition.NONE),
    ("continuous cos", Instance.continuous([1, 0], [1, 0]), NO, Condition.NO1),
    ("continuous exp", Instance.continuous([-1], [1]), YES, Condition.YES),
    ("continuous u''-u, v=(1,1)", Instance.continuous([-1, 0], [1, 1]), YES, Condition.YES),
]
ZERO_INIT = [
    Instance(mode, tuple(c), (0,) * len(c))
    for mode in Mode
    for c in ([5], [-1, -1], [1, 0], [-1, 1, -1], [2, 0, -3, 1])
]


def report(capsys, number: int, ok: bool, detail: str) -> None:
    line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


def rand_rational(rng: random.Random, lo: int, hi: int, max_den: int) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_instance(rng, mode, max_order, lo, hi, max_den=4) -> Instance:
    k = rng.randint(1, max_order)
    c = [rand_rational(rng, lo, hi, max_den) for _ in range(k)]
    v = [rand_rational(rng, lo, hi, max_den) for _ in range(k)]
    return Instance(mode, tuple(c), tuple(v))


def test_criterion_1_transform_round_trip(capsys):
    rng = random.Random(1)
    start = time.perf_counter()
    bad = 0
    for _ in range(500):
        inst = random_instance(rng, Mode.DISCRETE, 6, -8, 8)
        got = series_expand(z_numerator(inst), characteristic_poly(inst), 50)
        bad += got != simulate_discrete(inst, 49).values
    elapsed = time.perf_counter() - start
    report(capsys, 1, bad == 0 and elapsed < 30, f"{500 - bad}/500 exact matches in {elapsed:.1f}s")


def random_spectrum(rng: random.Random) -> ExponentialPolynomial:
    """Distinct rational roots, total multiplicity <= 5, positive top root with nonzero leading coefficient."""
    top = Fraction(rng.randint(1, 12), rng.randint(1, 3))
    roots = {top}
    while len(roots) < rng.randint(1, 3):
        r = rand_rational(rng, -12, 12, 3)
        if r < top:
            roots.add(r)
    budget = 5
    spec = {}
    for r in sorted(roots, reverse=True):
        if budget == 0:
            break
        m = rng.randint(1, min(3, budget))
        budget -= m
        coeffs = [rand_rational(rng, -5, 5, 3) for _ in range(m)]
        if r == top:
            while coeffs[-1] == 0:
                coeffs[-1] = rand_rational(rng, -5, 5, 3)
        spec[r] = coeffs
    return ExponentialPolynomial.of(spec)


def test_criterion_2_sign_lemma(capsys):
    rng = random.Random(2)
    agree = 0
    for _ in range(200):
        spec = random_spectrum(rng)
        top = max(spec.terms, key=lambda t: t.root)
        lead = 1 if top.coeffs[-1] > 0 else -1
        rho = AlgebraicReal.from_rational(top.root)
        ok = all(sign_at(numerator(construct_from_spectrum(spec, m)), rho) == lead for m in Mode)
        agree += ok
    report(capsys, 2, agree == 200, f"{agree}/200 spectra agree in both modes")


def test_criterion_3_curated_suite(capsys):
    failures = []
    for name, inst, kind, cond in SUITE:
        v = classify(inst)
        if (v.kind, v.condition) != (kind, cond):
            failures.append(f"{name}: got {v.kind.value}/{v.condition.value}")
    zero_ok = all(classify(i).kind is NON for i in ZERO_INIT)
    if not zero_ok:
        failures.append("v=0 not NonRobust")
    passed = len(SUITE) + zero_ok - (len(failures) - (not zero_ok))
    report(capsys, 3, not failures, f"{passed}/9 verdicts as expected" + (f" ({'; '.join(failures)})" if failures else ""))


def test_criterion_4_exclusion_and_totality(capsys):
    rng = random.Random(4)
    start = time.perf_counter()
    both = 0
    verdicts = Counter()
    for i in range(1000):
        inst = random_instance(rng, rng.choice(list(Mode)), 5, -3, 3)
        rep = evaluate_conditions(inst)
        both += rep.yes is not None and (rep.no1 is not None or rep.no2 is not None)
        verdicts[classify(inst).kind.value] += 1
    elapsed = time.perf_counter() - start
    ok = both == 0 and sum(verdicts.values()) == 1000 and elapsed < 300
    report(capsys, 4, ok, f"1000 verdicts {dict(verdicts)}, {both} overlaps, {elapsed:.1f}s")


def test_criterion_5_dominant_root_witness(capsys):
    rho = classify(SUITE[0][1]).witness.dominant_root.refine_to(Fraction(1, 100))
    inside = Fraction(161, 100) <= rho.lo and rho.hi <= Fraction(162, 100)
    divides = rho.poly.divides(poly(-1, -1, 1))
    report(capsys, 5, inside and divides, f"interval [{float(rho.lo):.5f}, {float(rho.hi):.5f}], defining poly {rho.poly}")


def test_criterion_6_perturbation_consistency(capsys):
    eps = Fraction(1, 10**8)
    checked, bad = 0, []
    start = time.perf_counter()
    for name, inst, kind, _ in SUITE:
        if kind is NON:
            continue
        want = EmpiricalUP.YES if kind is YES else EmpiricalUP.NO
        for corner in axis_corners(inst, eps):
            checked += 1
            got = empirical_up(corner, 2000, 100)
            if got is not want:
                bad.append(f"{name}: {got.value}")
    elapsed = time.perf_counter() - start
    report(capsys, 6, not bad, f"{checked - len(bad)}/{checked} corners consistent in {elapsed:.1f}s" + (f" ({bad[:3]})" if bad else ""))


def test_criterion_7_composed_oracle(capsys):
    rng = random.Random(7)
    agree = 0
    for _ in range(100):
        roots = [rand_rational(rng, -6, 6, 3) for _ in range(rng.randint(1, 5))]
        p = Polynomial.from_roots(roots)
        prod_ok = rational_root_multiset(composed_product(p)) == Counter(a * b for a in roots for b in roots)
        sum_ok = rational_root_multiset(composed_sum(p)) == Counter(a + b for a in roots for b in roots)
        agree += prod_ok and sum_ok
    report(capsys, 7, agree == 100, f"{agree}/100 polynomials match brute force")


def test_criterion_8_emitter_validity(capsys):
    instances = [(n, i, k) for n, i, k, _ in SUITE] + [("v=0", i, NON) for i in ZERO_INIT[:1] + ZERO_INIT[5:6]]
    invalid = []
    scripts = []
    for name, inst, kind in instances:
        for label, emit in (("yes", emit_robust_yes), ("no", emit_robust_no)):
            text = emit(inst)
            try:
                validate_script(text)
            except ValueError as exc:
                invalid.append(f"{name}/{label}: {exc}")
            scripts.append((name, label, text, kind))
    detail = f"{len(scripts) - len(invalid)}/{len(scripts)} scripts valid"
    mismatches = []
    if solver_command() is not None:
        for name, label, text, kind in scripts:
            want_sat = kind is (YES if label == "yes" else NO)
            got = run_solver(text)
            if got != ("sat" if want_sat else "unsat"):
                mismatches.append(f"{name}/{label}: {got}")
        detail += f"; solver agrees on {len(scripts) - len(mismatches)}/{len(scripts)}"
    else:
        detail += "; solver cross-check skipped (SOLVER_CMD not set)"
    report(capsys, 8, not invalid and not mismatches, detail + (f" ({invalid + mismatches})" if invalid or mismatches else ""))


def test_criterion_9_scale_invariance(capsys):
    rng = random.Random(9)
    same = 0
    for _ in range(100):
        inst = random_instance(rng, rng.choice(list(Mode)), 5, -3, 3)
        s = Fraction(rng.randint(1, 50), rng.randint(1, 50))
        same += classify(inst).kind is classify(inst.with_initial([s * x for x in inst.v])).kind
    report(capsys, 9, same == 100, f"{same}/100 verdicts unchanged under positive scaling")


if __name__ == "__main__":
    for fn in [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]:
        try:
            fn(None)
        except AssertionError:
            pass
