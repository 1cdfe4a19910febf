"""Robust YES / Robust NO as quantified sentences over the reals, printed as SMT-LIB 2.

A target is either a concrete :class:`~robustup.lds.Instance` (coefficients
inlined as exact rationals) or a :class:`Parametric` order and mode, in
which case ``c_0..c_{k-1}`` and ``v_0..v_{k-1}`` are free constants and the
transform numerator is a polynomial expression in them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..lds import Instance, Mode
from ..serialize import format_instance
from ..transform import laplace_numerator_coeffs, z_numerator_coeffs
from .formula import (
    Expr,
    Formula,
    cmp,
    conj,
    convolve,
    disj,
    exists,
    expand_complex_eval,
    forall,
    implies,
    poly_expr,
)

LOGIC = "NRA"


@dataclass(frozen=True)
class Parametric:
    """Order-``k`` system with symbolic coefficients and initial values."""

    mode: Mode
    order: int

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.order < 1:
            raise ValueError("order must be at least 1")


Target = Union[Instance, Parametric]


def coefficient_names(k: int) -> list[str]:
    return [f"c_{i}" for i in range(k)]


def initial_names(k: int) -> list[str]:
    return [f"v_{i}" for i in range(k)]


def _order(target: Target) -> int:
    return target.order


def _cv(target: Target) -> tuple[list[Expr], list[Expr]]:
    if isinstance(target, Parametric):
        k = target.order
        return [Expr.var(n) for n in coefficient_names(k)], [Expr.var(n) for n in initial_names(k)]
    return [Expr.const(x) for x in target.c], [Expr.const(x) for x in target.v]


def chi_coeffs(target: Target) -> list[Expr]:
    c, _ = _cv(target)
    return c + [Expr.const(1)]


def numerator_coeffs(target: Target) -> list[Expr]:
    """``psi`` (discrete) or ``phi`` (continuous), padded to ``k + 1`` entries."""
    c, v = _cv(target)
    fn = z_numerator_coeffs if target.mode is Mode.DISCRETE else laplace_numerator_coeffs
    out = [Expr.lift(e) for e in fn(c, v)]
    return out + [Expr()] * (_order(target) + 1 - len(out))


def _derivative(coeffs: list[Expr]) -> list[Expr]:
    return [coeffs[i] * i for i in range(1, len(coeffs))]


def _vector(prefix: str, n: int) -> list[str]:
    return [f"{prefix}_{i}" for i in range(n)]


def _pad(v: list, n: int) -> list:
    return list(v) + [Expr()] * (n - len(v))


def _vec_eq(a: list, b: list) -> Formula:
    n = max(len(a), len(b))
    return conj(*(cmp(x, "=", y) for x, y in zip(_pad(a, n), _pad(b, n))))


def _is_root_complex(coeffs: list, x: str = "x", y: str = "y") -> Formula:
    ce = expand_complex_eval(coeffs, x, y)
    return conj(cmp(ce.re_poly, "="), cmp(ce.im_poly, "="))


# -- YES ------------------------------------------------------------------------


def robust_yes_formula(target: Target) -> Formula:
    """``exists rho. spectral(rho) and num(rho) > 0``."""
    chi = chi_coeffs(target)
    num = numerator_coeffs(target)
    rho, x, y = Expr.var("rho"), Expr.var("x"), Expr.var("y")
    discrete = target.mode is Mode.DISCRETE
    if discrete:
        beaten = cmp(x * x + y * y - rho * rho, "<")
    else:
        beaten = cmp(x, "<", rho)
    itself = conj(cmp(x, "=", rho), cmp(y, "="))
    spectral = conj(
        cmp(poly_expr(chi, rho), "="),
        cmp(rho, ">") if discrete else conj(),
        cmp(poly_expr(_derivative(chi), rho), "!="),
        forall(["x", "y"], implies(_is_root_complex(chi), disj(beaten, itself))),
    )
    return exists(["rho"], conj(spectral, cmp(poly_expr(num, rho), ">")))


# -- NO -------------------------------------------------------------------------


def _initial_one_branches(target: Target) -> list[tuple[list[str], Formula]]:
    """``x + iy`` is a root of ``chi / gcd(chi, num)``: one branch per gcd degree ``d``.

    Each branch is ``(bound names, body)``; ``g`` is monic of degree ``d``.
    """
    k = _order(target)
    chi = chi_coeffs(target)
    num = numerator_coeffs(target)
    f = [Expr.var(n) for n in _vector("f", k + 1)]
    f1 = [Expr.var(n) for n in _vector("f1", k + 1)]
    f2 = [Expr.var(n) for n in _vector("f2", k + 1)]
    ell = [Expr.var(n) for n in _vector("l", k + 1)]
    wide = 2 * k + 1
    branches = []
    for d in range(k + 1):
        g_names = _vector("g", d)
        g = [Expr.var(n) for n in g_names] + [Expr.const(1)]
        h1_names, h2_names = _vector("h1", k - d + 1), _vector("h2", k - d + 1)
        h1 = [Expr.var(n) for n in h1_names]
        h2 = [Expr.var(n) for n in h2_names]
        common_divisor = conj(_vec_eq(_pad(num, wide), convolve(f, f1)), _vec_eq(_pad(chi, wide), convolve(f, f2)))
        maximal = forall(
            _vector("f", k + 1) + _vector("f1", k + 1) + _vector("f2", k + 1),
            implies(common_divisor, exists(_vector("l", k + 1), _vec_eq(_pad(g, wide), convolve(f, ell)))),
        )
        body = conj(
            _vec_eq(num, convolve(g, h1)),
            _vec_eq(chi, convolve(g, h2)),
            _is_root_complex(h2),
            maximal,
        )
        branches.append((g_names + h1_names + h2_names, body))
    return branches


def robust_no_formula(target: Target) -> Formula:
    """``(exists x, y. spectral1 and initial1) or (exists rho. spectral2 and initial2)``."""
    chi = chi_coeffs(target)
    num = numerator_coeffs(target)
    x, y, r = Expr.var("x"), Expr.var("y"), Expr.var("r")
    rho, lam = Expr.var("rho"), Expr.var("lam")
    discrete = target.mode is Mode.DISCRETE
    is_real_root_r = cmp(poly_expr(chi, r), "=")
    if discrete:
        spectral1 = conj(
            disj(cmp(x, "<"), cmp(y, "!=")),
            _is_root_complex(chi),
            forall(["r"], implies(conj(cmp(r, ">"), is_real_root_r), cmp(x * x + y * y - r * r, ">"))),
        )
    else:
        spectral1 = conj(
            cmp(y, "!="),
            _is_root_complex(chi),
            forall(["r"], implies(is_real_root_r, cmp(x, ">", r))),
        )
    initial1 = disj(*(exists(names, body) for names, body in _initial_one_branches(target)))
    first = exists(["x", "y"], conj(spectral1, initial1))
    spectral2 = conj(
        cmp(rho, ">") if discrete else conj(),
        cmp(poly_expr(chi, rho), "="),
        forall(["lam"], implies(cmp(poly_expr(chi, lam), "="), cmp(lam, "<=", rho))),
    )
    second = exists(["rho"], conj(spectral2, cmp(poly_expr(num, rho), "<")))
    return disj(first, second)


# -- scripts --------------------------------------------------------------------


def free_constants(target: Target) -> list[str]:
    if isinstance(target, Parametric):
        return coefficient_names(target.order) + initial_names(target.order)
    return []


def render_script(formula: Formula, target: Target, title: str) -> str:
    lines = [f"; {title} ({target.mode.value}, order {_order(target)})"]
    if isinstance(target, Instance):
        lines.append(f"; instance: {format_instance(target)}")
    else:
        lines.append("; parametric: free constants " + " ".join(free_constants(target)))
    lines.append(f"(set-logic {LOGIC})")
    lines.extend(f"(declare-const {n} Real)" for n in free_constants(target))
    lines.append(f"(assert {formula.to_smt()})")
    lines.append("(check-sat)")
    lines.append("(exit)")
    return "\n".join(lines) + "\n"


def emit_robust_yes(target: Target) -> str:
    return render_script(robust_yes_formula(target), target, "robust YES")


def emit_robust_no(target: Target) -> str:
    return render_script(robust_no_formula(target), target, "robust NO")


def instantiate(formula: Formula, inst: Instance) -> Formula:
    """Substitute the instance's rationals for the free constants of a parametric formula."""
    env = dict(zip(coefficient_names(inst.order), inst.c))
    env.update(zip(initial_names(inst.order), inst.v))
    return formula.subs(env)


__all__ = [
    "LOGIC",
    "Parametric",
    "Target",
    "chi_coeffs",
    "emit_robust_no",
    "emit_robust_yes",
    "free_constants",
    "instantiate",
    "numerator_coeffs",
    "render_script",
    "robust_no_formula",
    "robust_yes_formula",
]
