"""Brute-force ground truth: closed forms, perturbations, empirical positivity.

Nothing here is used by the classifier. These routines build instances from
a chosen rational spectrum, evaluate the closed form directly, and check
the sign of long trajectories, which gives tests an independent route to
every claim the decision procedure makes.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence, Union

import mpmath

from .algebra import Polynomial, as_fraction
from .errors import DegenerateInputError
from .lds import DEFAULT_TOL, Instance, Mode, scaled_integer_terms, simulate_continuous


class Basis(str, enum.Enum):
    BINOMIAL = "binomial"  # b_j * C(n + j, j)
    MONOMIAL = "monomial"  # a_j * n**j  (or t**j)


@dataclass(frozen=True)
class Term:
    root: Fraction
    coeffs: tuple[Fraction, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class ExponentialPolynomial:
    """``sum_i P_i(x) * root_i**x`` (discrete) or ``sum_i P_i(t) * exp(root_i t)``.

    ``P_i`` is given by its coefficients in ``basis``. Roots are rational
    and pairwise distinct.
    """

    terms: tuple[Term, ...]
    basis: Basis = Basis.BINOMIAL

    def __post_init__(self):
        roots = [t.root for t in self.terms]
        if len(set(roots)) != len(roots):
            raise DegenerateInputError("duplicate roots in spectrum")
        if any(t.multiplicity < 1 for t in self.terms):
            raise DegenerateInputError("every root needs at least one coefficient")

    @classmethod
    def of(cls, spectrum: dict, basis: Basis = Basis.BINOMIAL) -> ExponentialPolynomial:
        """``ExponentialPolynomial.of({2: [1], -1: [1]})`` for ``2**n + (-1)**n``."""
        terms = tuple(
            Term(as_fraction(r), tuple(as_fraction(c) for c in cs)) for r, cs in spectrum.items()
        )
        return cls(terms, Basis(basis))

    @property
    def order(self) -> int:
        return sum(t.multiplicity for t in self.terms)

    def char_poly(self) -> Polynomial:
        p = Polynomial([1])
        for t in self.terms:
            p = p * Polynomial([-t.root, 1]) ** t.multiplicity
        return p

    def coefficient_poly(self, term: Term) -> Polynomial:
        """The multiplier of ``root**x`` as a polynomial in ``x`` (monomial coefficients)."""
        if self.basis is Basis.MONOMIAL:
            return Polynomial(term.coeffs)
        out = Polynomial()
        for j, b in enumerate(term.coeffs):
            out = out + binomial_basis_poly(j).scale(b)
        return out

    def to_monomial(self) -> ExponentialPolynomial:
        terms = []
        for t in self.terms:
            cs = self.coefficient_poly(t).coeffs
            cs = cs + (Fraction(0),) * (t.multiplicity - len(cs))
            terms.append(Term(t.root, cs))
        return ExponentialPolynomial(tuple(terms), Basis.MONOMIAL)


def binomial_basis_poly(j: int) -> Polynomial:
    """``C(x + j, j) = (x + 1)(x + 2)...(x + j) / j!`` as a polynomial in ``x``."""
    p = Polynomial([1])
    for i in range(1, j + 1):
        p = p * Polynomial([i, 1])
    return p.scale(Fraction(1, factorial(j)))


def eval_exp_poly(spec: ExponentialPolynomial, at, mode: Union[Mode, str] = Mode.DISCRETE, dps: int = 50):
    """Closed-form value at index ``n`` (exact) or time ``t`` (mpmath, ``dps`` digits)."""
    mode = Mode(mode)
    if mode is Mode.DISCRETE:
        n = int(at)
        total = Fraction(0)
        for t in spec.terms:
            if spec.basis is Basis.BINOMIAL:
                poly_val = sum(b * comb(n + j, j) for j, b in enumerate(t.coeffs))
            else:
                poly_val = sum(a * Fraction(n) ** j for j, a in enumerate(t.coeffs))
            total += poly_val * t.root**n
        return total
    with mpmath.workdps(dps):
        x = mpmath.mpf(as_fraction(at).numerator) / as_fraction(at).denominator
        total = mpmath.mpf(0)
        for t in spec.terms:
            pv = spec.coefficient_poly(t)
            poly_val = sum(
                (mpmath.mpf(c.numerator) / c.denominator) * x**i for i, c in enumerate(pv.coeffs)
            )
            lam = mpmath.mpf(t.root.numerator) / t.root.denominator
            total += poly_val * mpmath.exp(lam * x)
        return +total


def construct_from_spectrum(spec: ExponentialPolynomial, mode: Union[Mode, str]) -> Instance:
    """The instance whose solution is ``spec``.

    ``c`` comes from expanding ``prod (z - root)**m``; ``v`` from the first
    ``k`` values (discrete) or the first ``k`` derivatives at 0 (continuous):
    ``d/dt**d [t**j e**(l t)]`` at 0 is ``C(d, j) j! l**(d-j)``.
    """
    mode = Mode(mode)
    chi = spec.char_poly()
    k = spec.order
    c = chi.coeffs[:k]
    if mode is Mode.DISCRETE:
        v = [eval_exp_poly(spec, n, mode) for n in range(k)]
    else:
        mono = spec.to_monomial()
        v = []
        for d in range(k):
            acc = Fraction(0)
            for t in mono.terms:
                for j, a in enumerate(t.coeffs):
                    if j <= d:
                        acc += a * comb(d, j) * factorial(j) * t.root ** (d - j)
            v.append(acc)
    return Instance(mode, tuple(c), tuple(v))


@dataclass(frozen=True)
class PerturbationSample:
    base: Instance
    epsilon: Fraction
    seed: int
    instances: tuple[Instance, ...]


GRID_BITS = 16


def sample_perturbations(inst: Instance, epsilon, count: int, seed: int = 0) -> PerturbationSample:
    """The ``4k`` axis corners of the ``epsilon`` box, then ``count`` grid samples.

    Each entry of ``(c, v)`` moves by ``epsilon * r / 2**16`` with ``r``
    uniform in ``[-2**16, 2**16]``.
    """
    epsilon = as_fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if count < 1:
        raise ValueError("count must be at least 1")
    k = inst.order
    flat = list(inst.c) + list(inst.v)

    def build(vals):
        return Instance(inst.mode, tuple(vals[:k]), tuple(vals[k:]))

    out = []
    for i in range(2 * k):
        for sgn in (1, -1):
            vals = flat[:]
            vals[i] += sgn * epsilon
            out.append(build(vals))
    rng = random.Random(seed)
    step = epsilon / 2**GRID_BITS
    for _ in range(count):
        out.append(build([x + step * rng.randint(-(2**GRID_BITS), 2**GRID_BITS) for x in flat]))
    return PerturbationSample(inst, epsilon, seed, tuple(out))


def axis_corners(inst: Instance, epsilon) -> list[Instance]:
    """Only the ``4k`` single-coordinate moves by ``+-epsilon``."""
    return list(sample_perturbations(inst, epsilon, 1).instances[: 4 * inst.order])


class EmpiricalUP(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    INCONCLUSIVE = "Inconclusive"


def empirical_up(
    inst: Instance, horizon: int, window: int, tol: Fraction = DEFAULT_TOL
) -> EmpiricalUP:
    """Finite-horizon proxy for ultimate positivity.

    Discrete: the exact signs of ``u[horizon-window+1 .. horizon]``.
    Continuous: ``u`` sampled every half unit on ``(horizon-window, horizon]``;
    a value within ``tol`` below zero is inconclusive.
    """
    if not horizon > window > 0:
        raise ValueError("need horizon > window > 0")
    if inst.mode is Mode.DISCRETE:
        start = horizon - window + 1
        for n, val in enumerate(scaled_integer_terms(inst)):
            if n > horizon:
                break
            if n >= start and val < 0:
                return EmpiricalUP.NO
        return EmpiricalUP.YES
    times = [Fraction(horizon - window) + Fraction(i, 2) for i in range(1, 2 * window + 1)]
    values = simulate_continuous(inst, times, tol).values
    if any(val < -tol for val in values):
        return EmpiricalUP.NO
    if any(val < 0 for val in values):
        return EmpiricalUP.INCONCLUSIVE
    return EmpiricalUP.YES
