"""Exact robust ultimate-positivity decisions for linear recurrences and C-finite functions."""

from .classify import Condition, Verdict, VerdictKind, Witness, classify, classify_continuous, classify_discrete
from .errors import (
    DegenerateInputError,
    InstanceParseError,
    ModeMismatchError,
    RobustUPError,
    ToleranceNotMetError,
)
from .lds import Instance, Mode, Trajectory, characteristic_poly, simulate_continuous, simulate_discrete
from .serialize import format_instance, parse_instance
from .transform import laplace_numerator, numerator, series_expand, z_numerator

__all__ = [
    "Condition",
    "DegenerateInputError",
    "Instance",
    "InstanceParseError",
    "Mode",
    "ModeMismatchError",
    "RobustUPError",
    "ToleranceNotMetError",
    "Trajectory",
    "Verdict",
    "VerdictKind",
    "Witness",
    "characteristic_poly",
    "classify",
    "classify_continuous",
    "classify_discrete",
    "format_instance",
    "laplace_numerator",
    "numerator",
    "parse_instance",
    "series_expand",
    "simulate_continuous",
    "simulate_discrete",
    "z_numerator",
]
