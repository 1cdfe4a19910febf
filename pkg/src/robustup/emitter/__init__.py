"""SMT-LIB emission of the Robust YES / Robust NO sentences."""

from .formula import ComplexExpansion, Expr, Formula, expand_complex_eval
from .smtlib import (
    Parametric,
    emit_robust_no,
    emit_robust_yes,
    instantiate,
    render_script,
    robust_no_formula,
    robust_yes_formula,
)
from .solver import run_solver, solver_command
from .validate import ScriptError, validate_script

__all__ = [
    "ComplexExpansion",
    "Expr",
    "Formula",
    "Parametric",
    "ScriptError",
    "emit_robust_no",
    "emit_robust_yes",
    "expand_complex_eval",
    "instantiate",
    "render_script",
    "robust_no_formula",
    "robust_yes_formula",
    "run_solver",
    "solver_command",
    "validate_script",
]
