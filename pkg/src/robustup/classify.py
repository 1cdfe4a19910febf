"""Robust Ultimate Positivity classification.

Every test here is exact: roots are isolated with certified enclosures,
dominance is decided by comparing algebraic numbers (``|l|**2`` through
composed products, ``2 Re l`` through composed sums) and ties are detected
symbolically, so boundary instances come out as ``NonRobust`` instead of
looping.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .algebra import (
    AlgebraicReal,
    Ordering,
    Polynomial,
    RootBox,
    box_contains_root_of,
    compare_algebraic,
    isolate_complex_roots,
    modulus_squared,
    poly_gcd,
    real_part_doubled,
    sign_at,
)
from .lds import Instance, Mode, _require, characteristic_poly
from .transform import numerator


class VerdictKind(str, enum.Enum):
    ROBUST_YES = "RobustYes"
    ROBUST_NO = "RobustNo"
    NON_ROBUST = "NonRobust"


class Condition(str, enum.Enum):
    YES = "Yes"
    NO1 = "No1"
    NO2 = "No2"
    NONE = "None"


@dataclass(frozen=True)
class Witness:
    triggered_condition: Condition = Condition.NONE
    dominant_root: Optional[AlgebraicReal] = None
    oscillating_root: Optional[RootBox] = None
    numerator_sign_at_rho: Optional[int] = None
    support_quotient: Optional[Polynomial] = None


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness: Witness

    @property
    def condition(self) -> Condition:
        return self.witness.triggered_condition


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of each condition evaluated independently (``None`` = not met)."""

    yes: Optional[Witness]
    no1: Optional[Witness]
    no2: Optional[Witness]


def support_quotient(chi: Polynomial, num: Polynomial) -> Polynomial:
    """``chi / gcd(chi, num)``, monic.

    A root of ``chi`` carries a nonzero coefficient in the closed-form
    solution exactly when it is still a root of this quotient.
    """
    return chi.exact_div(poly_gcd(chi, num)).monic()


class _Spectrum:
    """Lazily computed root data of one instance."""

    def __init__(self, inst: Instance):
        self.inst = inst
        self.chi = characteristic_poly(inst)
        self.num = numerator(inst)
        self._measure = {}

    @cached_property
    def boxes(self) -> list[RootBox]:
        return isolate_complex_roots(self.chi)

    @cached_property
    def real_boxes(self) -> list[RootBox]:
        return [b for b in self.boxes if b.is_real]

    @cached_property
    def max_real(self) -> Optional[RootBox]:
        return self.real_boxes[-1] if self.real_boxes else None

    @cached_property
    def h2(self) -> Polynomial:
        return support_quotient(self.chi, self.num)

    def measure(self, box: RootBox) -> AlgebraicReal:
        """``|l|**2`` (discrete) or ``2 Re l`` (continuous): the dominance order."""
        key = id(box)
        if key not in self._measure:
            fn = modulus_squared if self.inst.mode is Mode.DISCRETE else real_part_doubled
            self._measure[key] = fn(box, self.chi)
        return self._measure[key]

    def cmp(self, a: RootBox, b: RootBox) -> Ordering:
        return compare_algebraic(self.measure(a), self.measure(b))

    def sign_at_rho(self) -> int:
        return sign_at(self.num, self.max_real.real)


def _yes(sp: _Spectrum) -> Optional[Witness]:
    rho = sp.max_real
    if rho is None or rho.multiplicity != 1:
        return None
    if sp.inst.mode is Mode.DISCRETE and rho.real.sign() <= 0:
        return None
    for b in sp.boxes:
        if b is not rho and sp.cmp(b, rho) is not Ordering.LESS:
            return None
    if sp.sign_at_rho() != 1:
        return None
    return Witness(Condition.YES, dominant_root=rho.real, numerator_sign_at_rho=1)


def _no1(sp: _Spectrum) -> Optional[Witness]:
    discrete = sp.inst.mode is Mode.DISCRETE
    if discrete:
        rivals = [b for b in sp.real_boxes if b.real.sign() > 0]
        candidates = [b for b in sp.boxes if not b.is_real or b.real.sign() < 0]
    else:
        # dominance is by real part, so negative real roots are rivals too
        rivals = list(sp.real_boxes)
        candidates = [b for b in sp.boxes if not b.is_real]
    top = rivals[-1] if rivals else None
    for lam in candidates:
        if top is not None and sp.cmp(lam, top) is not Ordering.GREATER:
            continue
        if box_contains_root_of(lam, sp.h2):
            return Witness(Condition.NO1, oscillating_root=lam, support_quotient=sp.h2)
    return None


def _no2(sp: _Spectrum) -> Optional[Witness]:
    rho = sp.max_real
    if rho is None:
        return None
    if sp.inst.mode is Mode.DISCRETE and rho.real.sign() <= 0:
        return None
    if sp.sign_at_rho() != -1:
        return None
    return Witness(Condition.NO2, dominant_root=rho.real, numerator_sign_at_rho=-1)


def evaluate_conditions(inst: Instance) -> ConditionReport:
    """Evaluate the YES, NO-oscillating and NO-negative conditions separately."""
    sp = _Spectrum(inst)
    return ConditionReport(_yes(sp), _no1(sp), _no2(sp))


def _decide(inst: Instance) -> Verdict:
    report = evaluate_conditions(inst)
    is_no = report.no1 is not None or report.no2 is not None
    assert not (report.yes is not None and is_no), f"YES and NO both hold for {inst}"
    if report.yes is not None:
        return Verdict(VerdictKind.ROBUST_YES, report.yes)
    if report.no1 is not None:
        return Verdict(VerdictKind.ROBUST_NO, report.no1)
    if report.no2 is not None:
        return Verdict(VerdictKind.ROBUST_NO, report.no2)
    return Verdict(VerdictKind.NON_ROBUST, Witness())


def classify_discrete(inst: Instance) -> Verdict:
    _require(inst, Mode.DISCRETE)
    return _decide(inst)


def classify_continuous(inst: Instance) -> Verdict:
    _require(inst, Mode.CONTINUOUS)
    return _decide(inst)


def classify(inst: Instance) -> Verdict:
    """Dispatch on the instance's mode."""
    return _decide(inst)
