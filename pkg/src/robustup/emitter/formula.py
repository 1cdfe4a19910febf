"""First-order formulas over the reals with polynomial atoms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence, Union

from ..algebra import Polynomial, as_fraction

Monomial = tuple[tuple[str, int], ...]


class Expr:
    """Sparse multivariate polynomial with rational coefficients.

    Canonical form: a dict from sorted ``((var, exp), ...)`` tuples to
    nonzero coefficients, so equal polynomials compare equal.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def var(cls, name: str) -> Expr:
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> Expr:
        return cls({(): as_fraction(c)})

    @staticmethod
    def lift(x) -> Expr:
        if isinstance(x, Expr):
            return x
        return Expr.const(x)

    def __add__(self, other) -> Expr:
        o = Expr.lift(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return Expr(out)

    __radd__ = __add__

    def __neg__(self) -> Expr:
        return Expr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Expr:
        return self + (-Expr.lift(other))

    def __rsub__(self, other) -> Expr:
        return Expr.lift(other) - self

    def __mul__(self, other) -> Expr:
        o = Expr.lift(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Expr(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Expr:
        out = Expr.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Expr.const(other)
        if not isinstance(other, Expr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Expr({self.to_smt()})"

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def free_vars(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def subs(self, env: Mapping[str, Union[Expr, Fraction, int]]) -> Expr:
        out = Expr()
        for m, c in self.terms.items():
            term = Expr.const(c)
            for v, e in m:
                term = term * (Expr.lift(env[v]) ** e if v in env else Expr({((v, e),): Fraction(1)}))
            out = out + term
        return out

    def evaluate(self, env: Mapping[str, Fraction]) -> Fraction:
        val = self.subs(env)
        if not val.is_constant():
            raise ValueError(f"unbound variables {sorted(val.free_vars())}")
        return val.constant_value()

    def to_smt(self) -> str:
        if not self.terms:
            return render_number(Fraction(0))
        parts = [_mono_smt(m, c) for m, c in sorted(self.terms.items(), key=_term_order)]
        return parts[0] if len(parts) == 1 else "(+ " + " ".join(parts) + ")"


def _term_order(item):
    m, _ = item
    return (-sum(e for _, e in m), m)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def render_number(q: Fraction) -> str:
    mag = abs(q)
    if mag.denominator == 1:
        body = f"{mag.numerator}.0"
    else:
        body = f"(/ {mag.numerator}.0 {mag.denominator}.0)"
    return f"(- {body})" if q < 0 else body


def _mono_smt(m: Monomial, c: Fraction) -> str:
    factors = [v for v, e in m for _ in range(e)]
    if not factors:
        return render_number(c)
    if c == 1:
        return factors[0] if len(factors) == 1 else "(* " + " ".join(factors) + ")"
    return "(* " + " ".join([render_number(c)] + factors) + ")"


def poly_expr(coeffs: Sequence, at: Expr) -> Expr:
    """``sum_i coeffs[i] * at**i`` for coefficients that may themselves be expressions."""
    acc = Expr()
    for c in reversed(list(coeffs)):
        acc = acc * at + Expr.lift(c)
    return acc


def convolve(a: Sequence, b: Sequence) -> list[Expr]:
    """Coefficient vector of the product of two coefficient vectors."""
    out = [Expr() for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + Expr.lift(x) * Expr.lift(y)
    return out


@dataclass(frozen=True)
class ComplexExpansion:
    """Real and imaginary parts of ``p(x + i y)`` as polynomials in ``x, y``."""

    re_poly: Expr
    im_poly: Expr


def expand_complex_eval(p: Union[Polynomial, Sequence], x: str = "x", y: str = "y") -> ComplexExpansion:
    """Binomial expansion of ``sum_j c_j (x + i y)**j``.

    ``Re = sum_j c_j sum_l (-1)**l C(j, 2l) x**(j-2l) y**(2l)`` and
    ``Im = sum_j c_j sum_l (-1)**l C(j, 2l+1) x**(j-2l-1) y**(2l+1)``.
    Coefficients may be rationals or :class:`Expr` (parametric form).
    """
    coeffs = list(p.coeffs) if isinstance(p, Polynomial) else list(p)
    X, Y = Expr.var(x), Expr.var(y)
    re, im = Expr(), Expr()
    for j, cj in enumerate(coeffs):
        cj = Expr.lift(cj)
        for ell in range(j // 2 + 1):
            re = re + cj * ((-1) ** ell * comb(j, 2 * ell)) * X ** (j - 2 * ell) * Y ** (2 * ell)
        for ell in range((j - 1) // 2 + 1):
            im = im + cj * ((-1) ** ell * comb(j, 2 * ell + 1)) * X ** (j - 2 * ell - 1) * Y ** (2 * ell + 1)
    return ComplexExpansion(re, im)


# -- formula tree ---------------------------------------------------------------

COMPARATORS = (">", ">=", "=", "!=", "<", "<=")


class Formula:
    def to_smt(self) -> str:
        raise NotImplementedError

    def subs(self, env) -> Formula:
        raise NotImplementedError

    def __and__(self, other) -> Formula:
        return conj(self, other)

    def __or__(self, other) -> Formula:
        return disj(self, other)


@dataclass(frozen=True)
class Const(Formula):
    value: bool

    def to_smt(self) -> str:
        return "true" if self.value else "false"

    def subs(self, env) -> Formula:
        return self


TRUE, FALSE = Const(True), Const(False)


def _decide(value: Fraction, op: str) -> bool:
    return {
        ">": value > 0,
        ">=": value >= 0,
        "=": value == 0,
        "!=": value != 0,
        "<": value < 0,
        "<=": value <= 0,
    }[op]


@dataclass(frozen=True, eq=False)
class Atom(Formula):
    """``expr <op> 0``."""

    expr: Expr
    op: str

    def __post_init__(self):
        if self.op not in COMPARATORS:
            raise ValueError(f"bad comparator {self.op!r}")

    def to_smt(self) -> str:
        if self.op == "!=":
            return f"(not (= {self.expr.to_smt()} 0.0))"
        return f"({self.op} {self.expr.to_smt()} 0.0)"

    def subs(self, env) -> Formula:
        return atom(self.expr.subs(env), self.op)

    def __eq__(self, other):
        return isinstance(other, Atom) and self.op == other.op and self.expr == other.expr

    def __hash__(self):
        return hash((self.op, self.expr))


def atom(expr, op: str) -> Formula:
    """Atom with constant folding."""
    expr = Expr.lift(expr)
    if expr.is_constant():
        return Const(_decide(expr.constant_value(), op))
    return Atom(expr, op)


def cmp(lhs, op: str, rhs=0) -> Formula:
    return atom(Expr.lift(lhs) - Expr.lift(rhs), op)


@dataclass(frozen=True)
class And(Formula):
    args: tuple[Formula, ...]

    def to_smt(self) -> str:
        return "(and " + " ".join(a.to_smt() for a in self.args) + ")"

    def subs(self, env) -> Formula:
        return conj(*(a.subs(env) for a in self.args))


@dataclass(frozen=True)
class Or(Formula):
    args: tuple[Formula, ...]

    def to_smt(self) -> str:
        return "(or " + " ".join(a.to_smt() for a in self.args) + ")"

    def subs(self, env) -> Formula:
        return disj(*(a.subs(env) for a in self.args))


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula

    def to_smt(self) -> str:
        return f"(not {self.arg.to_smt()})"

    def subs(self, env) -> Formula:
        return neg(self.arg.subs(env))


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula

    def to_smt(self) -> str:
        return f"(=> {self.lhs.to_smt()} {self.rhs.to_smt()})"

    def subs(self, env) -> Formula:
        return implies(self.lhs.subs(env), self.rhs.subs(env))


@dataclass(frozen=True)
class Quantified(Formula):
    kind: str  # "exists" | "forall"
    variables: tuple[str, ...]
    body: Formula

    def to_smt(self) -> str:
        decls = " ".join(f"({v} Real)" for v in self.variables)
        return f"({self.kind} ({decls}) {self.body.to_smt()})"

    def subs(self, env) -> Formula:
        inner = {k: v for k, v in env.items() if k not in self.variables}
        return quantify(self.kind, self.variables, self.body.subs(inner))


def conj(*args: Formula) -> Formula:
    flat: list[Formula] = []
    for a in args:
        if a == FALSE:
            return FALSE
        if a == TRUE:
            continue
        flat.extend(a.args if isinstance(a, And) else (a,))
    if not flat:
        return TRUE
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def disj(*args: Formula) -> Formula:
    flat: list[Formula] = []
    for a in args:
        if a == TRUE:
            return TRUE
        if a == FALSE:
            continue
        flat.extend(a.args if isinstance(a, Or) else (a,))
    if not flat:
        return FALSE
    return flat[0] if len(flat) == 1 else Or(tuple(flat))


def neg(a: Formula) -> Formula:
    if isinstance(a, Const):
        return Const(not a.value)
    return Not(a)


def implies(lhs: Formula, rhs: Formula) -> Formula:
    if lhs == FALSE or rhs == TRUE:
        return TRUE
    if lhs == TRUE:
        return rhs
    return Implies(lhs, rhs)


def quantify(kind: str, variables: Iterable[str], body: Formula) -> Formula:
    variables = tuple(variables)
    if isinstance(body, Const) or not variables:
        return body
    return Quantified(kind, variables, body)


def exists(variables: Iterable[str], body: Formula) -> Formula:
    return quantify("exists", variables, body)


def forall(variables: Iterable[str], body: Formula) -> Formula:
    return quantify("forall", variables, body)
