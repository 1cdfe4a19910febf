"""Certified isolation of complex roots in axis-aligned boxes.

Approximate roots come from :func:`mpmath.polyroots`; they are only ever
used as candidate centres. Certification is exact: for a monic
square-free ``f`` of degree ``n`` and pairwise distinct points ``z_i``, the
Weierstrass corrections ``W_i = f(z_i) / prod_{j != i} (z_i - z_j)`` are the
Gerschgorin row data of a matrix whose eigenvalues are the roots of ``f``,
so every root lies in the union of the disks ``|z - z_i| <= n |W_i|`` and a
disk disjoint from the others holds exactly one root. We enclose each disk
in a square and require the squares to be pairwise disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

import mpmath

from ..errors import DegenerateInputError
from .polynomial import Polynomial, poly_gcd, squarefree_decomposition
from .real import AlgebraicReal, _isolate_squarefree, count_roots, root_bound, separate, sign_at

_MAX_DPS = 4000


@dataclass(frozen=True)
class QC:
    """Complex number with exact rational parts."""

    re: Fraction
    im: Fraction

    def __add__(self, o):
        o = _qc(o)
        return QC(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = _qc(o)
        return QC(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        o = _qc(o)
        return QC(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _qc(o)
        d = o.abs2()
        return QC((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def conj(self) -> QC:
        return QC(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im


def _qc(x) -> QC:
    if isinstance(x, QC):
        return x
    return QC(Fraction(x), Fraction(0))


def sqrt_upper(q: Fraction, bits: int = 64) -> Fraction:
    """A rational ``s >= sqrt(q)`` within ``2**-bits`` of it."""
    scale = 4**bits
    n = q.numerator * scale
    return Fraction(isqrt(n // q.denominator) + 1, 2**bits)


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if not man:
        return Fraction(0)
    v = Fraction(int(man) << exp) if exp >= 0 else Fraction(int(man), 1 << -exp)
    return -v if sign else v


def _dyadic(x, bits: int) -> Fraction:
    f = _mpf_to_fraction(x)
    return Fraction(round(f * 2**bits), 2**bits)


@dataclass(frozen=True)
class Square:
    cx: Fraction
    cy: Fraction
    r: Fraction

    @property
    def re(self) -> tuple[Fraction, Fraction]:
        return (self.cx - self.r, self.cx + self.r)

    @property
    def im(self) -> tuple[Fraction, Fraction]:
        return (self.cy - self.r, self.cy + self.r)


def _boxes_meet(re1, im1, re2, im2) -> bool:
    return not (re1[1] < re2[0] or re2[1] < re1[0] or im1[1] < im2[0] or im2[1] < im1[0])


def _approximate_roots(f: Polynomial, dps: int):
    coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(f.coeffs)]
    with mpmath.workdps(dps):
        try:
            return mpmath.polyroots(coeffs, maxsteps=50 + dps, extraprec=2 * dps)
        except mpmath.libmp.NoConvergence:
            return None


def _nonreal_squares(f: Polynomial, dps: int) -> Optional[list[Square]]:
    """Certified squares around the nonreal roots of the monic square-free ``f``.

    Returns ``None`` when the approximations at this precision do not
    certify; the caller retries with more digits.
    """
    n = f.degree
    n_real = count_roots(f, -root_bound(f), root_bound(f))
    if n_real == n:
        return []
    approx = _approximate_roots(f, dps)
    if approx is None:
        return None
    approx = sorted((mpmath.mpc(z) for z in approx), key=lambda z: abs(z.imag))
    bits = int(dps * 3.33) + 8
    reals = [QC(_dyadic(z.real, bits), Fraction(0)) for z in approx[:n_real]]
    upper = [QC(_dyadic(z.real, bits), _dyadic(z.imag, bits)) for z in approx[n_real:] if z.imag > 0]
    if 2 * len(upper) != n - n_real or any(z.im <= 0 for z in upper):
        return None
    points = reals + upper + [z.conj() for z in upper]
    if len(set(points)) != n:
        return None
    squares = []
    for i, zi in enumerate(points):
        den = QC(Fraction(1), Fraction(0))
        for j, zj in enumerate(points):
            if j != i:
                den = den * (zi - zj)
        w = f(zi) / den
        squares.append(Square(zi.re, zi.im, sqrt_upper(n * n * w.abs2(), bits)))
    for i in range(n):
        for j in range(i + 1, n):
            if _boxes_meet(squares[i].re, squares[i].im, squares[j].re, squares[j].im):
                return None
    nonreal = squares[n_real:]
    if any(abs(s.cy) <= s.r for s in nonreal):
        return None
    return nonreal


def _squares_for(f: Polynomial, dps: int) -> tuple[list[Square], int]:
    """Certify at ``dps`` or higher; returns squares and the precision used."""
    while dps <= _MAX_DPS:
        sq = _nonreal_squares(f, dps)
        if sq is not None:
            return sq, dps
        dps *= 2
    raise ArithmeticError(f"could not certify complex roots of {f}")


@dataclass(frozen=True)
class RootBox:
    """Closed box ``re x im`` holding exactly one distinct root.

    ``factor`` is the monic square-free factor of the input polynomial
    vanishing at the root; ``multiplicity`` is the root's multiplicity in
    the input. Real roots carry their :class:`AlgebraicReal` in ``real`` and
    a degenerate imaginary interval ``(0, 0)``.
    """

    re: tuple[Fraction, Fraction]
    im: tuple[Fraction, Fraction]
    multiplicity: int
    factor: Polynomial
    real: Optional[AlgebraicReal] = None
    dps: int = 30

    @property
    def is_real(self) -> bool:
        return self.real is not None

    @property
    def width(self) -> Fraction:
        return max(self.re[1] - self.re[0], self.im[1] - self.im[0])

    def conjugate(self) -> RootBox:
        if self.is_real:
            return self
        return RootBox(self.re, (-self.im[1], -self.im[0]), self.multiplicity, self.factor, None, self.dps)

    def center(self) -> complex:
        return complex(float(sum(self.re) / 2), float(sum(self.im) / 2))

    def __repr__(self) -> str:
        c = self.center()
        kind = "real" if self.is_real else "nonreal"
        return f"RootBox({kind}, ~{c:.6g}, mult={self.multiplicity})"


def _intersect(box: RootBox, sq: Square, dps: int) -> RootBox:
    re = (max(box.re[0], sq.re[0]), min(box.re[1], sq.re[1]))
    im = (max(box.im[0], sq.im[0]), min(box.im[1], sq.im[1]))
    return RootBox(re, im, box.multiplicity, box.factor, None, dps)


def refine_box(box: RootBox) -> RootBox:
    """A box for the same root with at most half the width."""
    if box.is_real:
        a = box.real.refine()
        return RootBox((a.lo, a.hi), (Fraction(0), Fraction(0)), box.multiplicity, box.factor, a, box.dps)
    target = box.width / 2
    dps = box.dps
    while True:
        dps *= 2
        squares, dps = _squares_for(box.factor, dps)
        hits = [s for s in squares if _boxes_meet(box.re, box.im, s.re, s.im)]
        if len(hits) == 1:
            new = _intersect(box, hits[0], dps)
            if new.width <= target:
                return new


def isolate_complex_roots(p: Polynomial) -> list[RootBox]:
    """Pairwise-disjoint boxes, one per distinct root of ``p``, conjugate-closed."""
    if p.is_zero() or p.degree < 1:
        raise DegenerateInputError("need a polynomial of degree >= 1")
    factors = squarefree_decomposition(p)
    reals = separate([(r, (f, m)) for f, m in factors for r in _isolate_squarefree(f)])
    boxes = [
        RootBox((a.lo, a.hi), (Fraction(0), Fraction(0)), m, f, a) for a, (f, m) in reals
    ]
    dps = 30
    while True:
        nonreal: list[RootBox] = []
        for f, m in factors:
            squares, used = _squares_for(f, dps)
            nonreal.extend(RootBox(s.re, s.im, m, f, None, used) for s in squares)
        clash = any(
            _boxes_meet(a.re, a.im, b.re, b.im)
            for i, a in enumerate(nonreal)
            for b in nonreal[i + 1 :]
        )
        if not clash:
            break
        dps *= 2
    nonreal.sort(key=lambda b: (b.re[0], b.im[0]))
    return boxes + nonreal


def box_contains_root_of(box: RootBox, q: Polynomial) -> bool:
    """Exact test whether the root isolated by ``box`` is a root of ``q``."""
    if q.is_zero():
        return True
    if box.is_real:
        return sign_at(q, box.real) == 0
    g = poly_gcd(q, box.factor)
    if g.degree == 0:
        return False
    if g.degree == box.factor.degree:
        return True
    h = box.factor.exact_div(g)
    dps = box.dps
    while True:
        g_sq, _ = _squares_for(g, dps)
        h_sq, _ = _squares_for(h, dps)
        g_hits = [s for s in g_sq if _boxes_meet(box.re, box.im, s.re, s.im)]
        h_hits = [s for s in h_sq if _boxes_meet(box.re, box.im, s.re, s.im)]
        if len(g_hits) + len(h_hits) == 1:
            return bool(g_hits)
        dps *= 2
