from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import instances, spectra
from robustup.errors import DegenerateInputError
from robustup.lds import Instance, Mode, simulate_continuous, simulate_discrete
from robustup.oracle import (
    Basis,
    EmpiricalUP,
    ExponentialPolynomial,
    Term,
    axis_corners,
    binomial_basis_poly,
    construct_from_spectrum,
    empirical_up,
    eval_exp_poly,
    sample_perturbations,
)


def test_construct_examples():
    spec = ExponentialPolynomial.of({2: [1], -1: [1]})
    assert construct_from_spectrum(spec, Mode.DISCRETE) == Instance.discrete([-2, -1], [2, 1])
    b0, b1 = Fraction(3), Fraction(5)
    inst = construct_from_spectrum(ExponentialPolynomial.of({1: [b0, b1]}, Basis.MONOMIAL), Mode.CONTINUOUS)
    assert inst == Instance.continuous([1, -2], [b0, b0 + b1])
    a = Fraction(-7, 3)
    assert construct_from_spectrum(ExponentialPolynomial.of({a: [1]}), Mode.DISCRETE) == Instance.discrete([-a], [1])


def test_duplicate_roots_rejected():
    with pytest.raises(DegenerateInputError):
        ExponentialPolynomial((Term(Fraction(1), (Fraction(1),)), Term(Fraction(1), (Fraction(2),))))


def test_eval_examples():
    assert eval_exp_poly(ExponentialPolynomial.of({2: [1], -1: [1]}), 3) == 7
    assert eval_exp_poly(ExponentialPolynomial.of({2: [0, 0]}), 9) == 0
    assert eval_exp_poly(ExponentialPolynomial.of({1: [0, 1]}), 4) == 5


def test_eval_continuous():
    val = eval_exp_poly(ExponentialPolynomial.of({1: [1]}, Basis.MONOMIAL), 1, Mode.CONTINUOUS, dps=50)
    with mpmath.workdps(50):
        assert abs(val - mpmath.e) < mpmath.mpf(10) ** -45


def test_binomial_basis():
    assert [binomial_basis_poly(2)(n) for n in range(4)] == [1, 3, 6, 10]


@given(spectra())
def test_round_trip_discrete(spec):
    inst = construct_from_spectrum(spec, Mode.DISCRETE)
    assert simulate_discrete(inst, 50).values == [eval_exp_poly(spec, n) for n in range(51)]


@given(spectra(max_total=3))
def test_round_trip_continuous(spec):
    inst = construct_from_spectrum(spec, Mode.CONTINUOUS)
    times = [Fraction(1, 3), Fraction(3, 2)]
    tol = Fraction(1, 10**12)
    for t, val in zip(times, simulate_continuous(inst, times, tol).values):
        ref = eval_exp_poly(spec, t, Mode.CONTINUOUS)
        with mpmath.workdps(50):
            assert abs(mpmath.mpf(val.numerator) / val.denominator - ref) < mpmath.mpf(2) / 10**12


def test_epsilon_must_be_positive():
    with pytest.raises(ValueError):
        sample_perturbations(Instance.discrete([1], [1]), 0, 5)
    with pytest.raises(ValueError):
        sample_perturbations(Instance.discrete([1], [1]), Fraction(1, 10), 0)


@given(instances(max_order=3), st.integers(0, 1000))
def test_samples_in_box_and_deterministic(inst, seed):
    eps = Fraction(1, 10**8)
    a = sample_perturbations(inst, eps, 10, seed)
    b = sample_perturbations(inst, eps, 10, seed)
    assert a == b
    assert len(a.instances) == 4 * inst.order + 10
    for p in a.instances:
        assert p.mode is inst.mode
        for x, y in zip(p.c + p.v, inst.c + inst.v):
            assert abs(x - y) <= eps


def test_axis_corners_move_one_entry():
    inst = Instance.discrete([-1, -1], [0, 1])
    eps = Fraction(1, 100)
    corners = axis_corners(inst, eps)
    assert len(corners) == 8
    for p in corners:
        diffs = [x - y for x, y in zip(p.c + p.v, inst.c + inst.v) if x != y]
        assert len(diffs) == 1 and abs(diffs[0]) == eps


def test_empirical_examples():
    assert empirical_up(Instance.discrete([-1, -1], [0, 1]), 200, 50) is EmpiricalUP.YES
    assert empirical_up(Instance.discrete([2], [1]), 200, 50) is EmpiricalUP.NO
    assert empirical_up(Instance.discrete([-1, 1, -1], [2, 1, 0]), 200, 50) is EmpiricalUP.YES


def test_empirical_continuous():
    assert empirical_up(Instance.continuous([1, 0], [1, 0]), 40, 10) is EmpiricalUP.NO
    assert empirical_up(Instance.continuous([-1, 0], [1, 1]), 40, 10) is EmpiricalUP.YES


def test_empirical_inconclusive_band():
    # u(t) = -10^-12 e^{-t}: tiny negative values inside the tolerance band
    inst = Instance.continuous([1], [Fraction(-1, 10**12)])
    assert empirical_up(inst, 4, 2, tol=Fraction(1, 10**9)) is EmpiricalUP.INCONCLUSIVE


def test_empirical_preconditions():
    with pytest.raises(ValueError):
        empirical_up(Instance.discrete([1], [1]), 10, 10)
