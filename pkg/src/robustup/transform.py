"""Generating-function numerators and series expansion at infinity.

For an instance ``(c, v)`` with characteristic polynomial ``chi``,

* ``sum_n u[n] z**-n = z_numerator(inst) / chi(z)``       (discrete)
* ``int_0^oo exp(-z t) u(t) dt = laplace_numerator(inst) / chi(z)``  (continuous)

Both numerators follow from the shift / derivative rules of the two
transforms with ``c_k = 1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import Polynomial
from .errors import DegenerateInputError
from .lds import Instance, Mode, _require


def z_numerator_coeffs(c: Sequence, v: Sequence) -> list:
    """Coefficients of ``psi(z) = sum_{i=1..k} c_i sum_{j=0..i-1} v_j z**(i-j)``, ``c_k = 1``.

    Works over any ring whose elements add and multiply with ``Fraction``,
    so symbolic ``c, v`` give the parametric numerator.
    """
    k = len(c)
    cc = list(c) + [Fraction(1)]
    out = [Fraction(0)] * (k + 1)
    for i in range(1, k + 1):
        for j in range(i):
            out[i - j] = out[i - j] + cc[i] * v[j]
    return out


def laplace_numerator_coeffs(c: Sequence, v: Sequence) -> list:
    """Coefficients of ``phi(z) = sum_{i=1..k} c_i sum_{j=1..i} v_{j-1} z**(i-j)``, ``c_k = 1``."""
    k = len(c)
    cc = list(c) + [Fraction(1)]
    out = [Fraction(0)] * k
    for i in range(1, k + 1):
        for j in range(1, i + 1):
            out[i - j] = out[i - j] + cc[i] * v[j - 1]
    return out


def z_numerator(inst: Instance) -> Polynomial:
    """``psi`` of a discrete instance; ``sum u[n] z**-n = psi / chi``."""
    _require(inst, Mode.DISCRETE)
    return Polynomial(z_numerator_coeffs(inst.c, inst.v))


def laplace_numerator(inst: Instance) -> Polynomial:
    """``phi`` of a continuous instance; the Laplace transform of ``u`` is ``phi / chi``."""
    _require(inst, Mode.CONTINUOUS)
    return Polynomial(laplace_numerator_coeffs(inst.c, inst.v))


def numerator(inst: Instance) -> Polynomial:
    """The transform numerator matching the instance's mode."""
    if inst.mode is Mode.DISCRETE:
        return z_numerator(inst)
    return laplace_numerator(inst)


def series_expand(num: Polynomial, den: Polynomial, n_terms: int) -> list[Fraction]:
    """First ``n_terms`` coefficients of ``num/den`` in powers of ``1/z``.

    With ``w = 1/z`` both polynomials are reversed at the degree of ``den``;
    the reversed denominator has constant term 1, so the quotient is a plain
    power-series division.
    """
    if den.is_zero() or den.lc != 1:
        raise DegenerateInputError("denominator must be monic")
    d = den.degree
    if num.degree > d:
        raise DegenerateInputError("numerator degree exceeds denominator degree")
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    a = num.reversed(d).coeffs
    b = den.reversed(d).coeffs
    b = b + (Fraction(0),) * (d + 1 - len(b))
    out: list[Fraction] = []
    for n in range(n_terms):
        acc = a[n] if n < len(a) else Fraction(0)
        for j in range(1, min(n, d) + 1):
            acc -= b[j] * out[n - j]
        out.append(acc)
    return out
