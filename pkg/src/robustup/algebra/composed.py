"""Composed products and sums of a polynomial with itself.

Both are computed as resultants in an auxiliary variable, evaluated at
integer nodes and interpolated. The results are neither square-free nor
minimal; isolating intervals say which root is meant.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import DegenerateInputError
from .complex import RootBox, refine_box
from .polynomial import Polynomial, interpolate, resultant, squarefree_part
from .real import AlgebraicReal, count_roots


def _interpolated_resultant(p: Polynomial, make_q, degree: int) -> Polynomial:
    xs = [Fraction(i) for i in range(degree + 1)]
    ys = [resultant(p, make_q(x)) for x in xs]
    return interpolate(xs, ys).monic()


@lru_cache(maxsize=512)
def composed_product(p: Polynomial) -> Polynomial:
    """Monic polynomial whose roots are all ``l_i * l_j`` over ordered root pairs.

    ``Res_y(p(y), y**m p(x/y))``. Zero roots make that resultant vanish
    identically, so they are split off first and contribute ``x**k`` for the
    ``m**2 - (m - z)**2`` products that involve them.
    """
    if p.is_zero() or p.degree < 1:
        raise DegenerateInputError("composed_product needs degree >= 1")
    m = p.degree
    z = p.trailing_zeros()
    core = Polynomial(p.coeffs[z:])
    mc = core.degree
    zero_part = Polynomial.monomial(m * m - mc * mc)
    if mc == 0:
        return zero_part
    a = core.coeffs

    def q_at(x: Fraction) -> Polynomial:
        # y**mc * core(x/y) = sum_k a_k x**k y**(mc-k)
        return Polynomial(a[mc - j] * x ** (mc - j) for j in range(mc + 1))

    return zero_part * _interpolated_resultant(core, q_at, mc * mc)


@lru_cache(maxsize=512)
def composed_sum(p: Polynomial) -> Polynomial:
    """Monic polynomial whose roots are all ``l_i + l_j``: ``Res_y(p(y), p(x - y))``."""
    if p.is_zero() or p.degree < 1:
        raise DegenerateInputError("composed_sum needs degree >= 1")
    m = p.degree
    reflected = p.compose_scale(-1)

    def q_at(x: Fraction) -> Polynomial:
        return reflected.shift(-x)

    return _interpolated_resultant(p, q_at, m * m)


def _isolate_in(q: Polynomial, lo: Fraction, hi: Fraction):
    """AlgebraicReal for the unique root of square-free ``q`` in ``[lo, hi]``, or None."""
    if count_roots(q, lo, hi) != 1:
        return None
    guess = ((lo + hi) / 2).limit_denominator(1 << 20)
    if lo <= guess <= hi and q(guess) == 0:
        return AlgebraicReal(q, guess, guess)
    if q(lo) == 0:
        return AlgebraicReal(q, lo, lo)
    if q(hi) == 0:
        return AlgebraicReal(q, hi, hi)
    return AlgebraicReal(q, lo, hi)


def _square_interval(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    if lo >= 0:
        return lo * lo, hi * hi
    if hi <= 0:
        return hi * hi, lo * lo
    return Fraction(0), max(lo * lo, hi * hi)


@lru_cache(maxsize=512)
def _defining(op, p: Polynomial) -> Polynomial:
    return squarefree_part(op(squarefree_part(p)))


def modulus_squared(box: RootBox, p: Polynomial) -> AlgebraicReal:
    """``|l|**2 = l * conj(l)`` for the root ``l`` isolated by ``box``."""
    q = _defining(composed_product, p)
    while True:
        rl, rh = _square_interval(*box.re)
        il, ih = _square_interval(*box.im)
        a = _isolate_in(q, rl + il, rh + ih)
        if a is not None:
            return a
        box = refine_box(box)


def real_part_doubled(box: RootBox, p: Polynomial) -> AlgebraicReal:
    """``l + conj(l) = 2 Re(l)`` for the root ``l`` isolated by ``box``."""
    q = _defining(composed_sum, p)
    while True:
        a = _isolate_in(q, 2 * box.re[0], 2 * box.re[1])
        if a is not None:
            return a
        box = refine_box(box)
