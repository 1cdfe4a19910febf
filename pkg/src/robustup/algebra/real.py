"""Real algebraic numbers and Sturm-sequence real root isolation."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor

from ..errors import DegenerateInputError
from .polynomial import Polynomial, as_fraction, poly_gcd, squarefree_decomposition, squarefree_part


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=4096)
def sturm_sequence(p: Polynomial) -> tuple[Polynomial, ...]:
    """Sturm chain ``p, p', -rem(p, p'), ...`` of a square-free polynomial."""
    seq = [p, p.derivative()]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        # positive rescaling keeps signs and tames coefficient growth
        seq.append(-r.content_free() if r else r)
    return tuple(seq[:-1])


def sign_variations(seq, x: Fraction) -> int:
    prev = 0
    count = 0
    for f in seq:
        s = _sign(f(x))
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def count_roots(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of square-free ``p`` in the closed ``[lo, hi]``."""
    if p.degree <= 0:
        return 0
    if lo > hi:
        return 0
    seq = sturm_sequence(p)
    n = sign_variations(seq, lo) - sign_variations(seq, hi)
    return n + (1 if p(lo) == 0 else 0)


def root_bound(p: Polynomial) -> Fraction:
    """A power of two strictly exceeding every root modulus (Cauchy bound)."""
    lc = abs(p.lc)
    cauchy = 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))
    b = Fraction(1)
    while b <= cauchy:
        b *= 2
    return b


@dataclass(frozen=True)
class AlgebraicReal:
    """A real root of the square-free ``poly`` isolated in ``[lo, hi]``.

    Either ``lo == hi`` (the root is that rational) or ``poly`` is nonzero
    at both endpoints with opposite signs and has exactly one root between.
    """

    poly: Polynomial
    lo: Fraction
    hi: Fraction

    @classmethod
    def from_rational(cls, r) -> AlgebraicReal:
        r = Fraction(r)
        return cls(Polynomial([-r, 1]), r, r)

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self) -> AlgebraicReal:
        """Halve the isolating interval (no-op on exact rationals)."""
        if self.is_rational:
            return self
        mid = (self.lo + self.hi) / 2
        fm = self.poly(mid)
        if fm == 0:
            return AlgebraicReal(self.poly, mid, mid)
        if _sign(fm) == _sign(self.poly(self.lo)):
            return AlgebraicReal(self.poly, mid, self.hi)
        return AlgebraicReal(self.poly, self.lo, mid)

    def refine_to(self, width) -> AlgebraicReal:
        """Shrink to at most ``width``, inside one cell of the grid ``width * Z``.

        Bisection alone can leave a dyadic interval straddling a grid point
        (for the golden ratio at width 1/100 it stops at [1.617, 1.625]); one
        extra split at that grid point fixes it.
        """
        width = as_fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        a = self
        while a.width > width:
            a = a.refine()
        if a.is_rational:
            return a
        cut = (floor(a.lo / width) + 1) * width
        if not a.lo < cut < a.hi:
            return a
        fc = a.poly(cut)
        if fc == 0:
            return AlgebraicReal(a.poly, cut, cut)
        if _sign(fc) == _sign(a.poly(a.lo)):
            return AlgebraicReal(a.poly, cut, a.hi)
        return AlgebraicReal(a.poly, a.lo, cut)

    def approx(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.refine_to(Fraction(1, 2**60)).approx())

    def sign(self) -> int:
        return sign_at(Polynomial([0, 1]), self)

    def __repr__(self) -> str:
        return f"AlgebraicReal({self.poly}, [{self.lo}, {self.hi}])"


def compare_algebraic(a: AlgebraicReal, b: AlgebraicReal) -> Ordering:
    """Exact comparison.

    Equality is decided by a common root of the two defining polynomials in
    the overlap of the intervals; otherwise intervals are refined until they
    separate, which terminates because the numbers then differ.
    """
    if a.hi < b.lo:
        return Ordering.LESS
    if b.hi < a.lo:
        return Ordering.GREATER
    g = poly_gcd(a.poly, b.poly)
    if g.degree >= 1 and count_roots(g, max(a.lo, b.lo), min(a.hi, b.hi)) > 0:
        return Ordering.EQUAL
    while a.hi >= b.lo and b.hi >= a.lo:
        if b.is_rational or (not a.is_rational and a.width >= b.width):
            a = a.refine()
        else:
            b = b.refine()
    return Ordering.LESS if a.hi < b.lo else Ordering.GREATER


def sign_at(p: Polynomial, a: AlgebraicReal) -> int:
    """Exact sign of ``p`` at the algebraic number ``a``."""
    if p.is_zero():
        return 0
    if a.is_rational:
        return _sign(p(a.lo))
    g = poly_gcd(p, a.poly)
    if g.degree >= 1 and count_roots(g, a.lo, a.hi) > 0:
        return 0
    q = squarefree_part(p)
    while not a.is_rational and count_roots(q, a.lo, a.hi) > 0:
        a = a.refine()
    return _sign(p(a.lo))


def _isolate_squarefree(f: Polynomial) -> list[AlgebraicReal]:
    if f.degree < 1:
        return []
    if f.degree == 1:
        r = -f[0] / f[1]
        return [AlgebraicReal(f, r, r)]
    seq = sturm_sequence(f)
    b = root_bound(f)
    out: list[AlgebraicReal] = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        n = sign_variations(seq, lo) - sign_variations(seq, hi)
        if f(hi) == 0:
            n -= 1
        if n == 0:
            continue
        if n == 1 and f(lo) != 0 and f(hi) != 0:
            out.append(AlgebraicReal(f, lo, hi))
            continue
        mid = (lo + hi) / 2
        if f(mid) == 0:
            out.append(AlgebraicReal(f, mid, mid))
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda r: r.lo)
    return out


def separate(items: list[tuple[AlgebraicReal, int]]) -> list[tuple[AlgebraicReal, int]]:
    """Refine distinct algebraic reals (with attached tags) until intervals are disjoint."""
    items = sorted(items, key=lambda t: t[0].lo)
    while True:
        clash = False
        for i in range(len(items) - 1):
            (a, ta), (b, tb) = items[i], items[i + 1]
            if a.hi >= b.lo:
                items[i], items[i + 1] = (a.refine(), ta), (b.refine(), tb)
                clash = True
        if not clash:
            return items
        items.sort(key=lambda t: t[0].lo)


def isolate_real_roots(p: Polynomial) -> list[tuple[AlgebraicReal, int]]:
    """Distinct real roots of ``p`` with multiplicities, ascending, disjoint intervals."""
    if p.is_zero():
        raise DegenerateInputError("the zero polynomial has every real number as a root")
    return separate(
        [(r, m) for f, m in squarefree_decomposition(p) for r in _isolate_squarefree(f)]
    )
