"""Dense univariate polynomials over the rationals.

Coefficients are stored as a tuple of :class:`fractions.Fraction` in
ascending degree order. The zero polynomial is the empty tuple, so the
leading coefficient of every other polynomial is nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from ..errors import DegenerateInputError

Scalar = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact Fraction.

    Floats are refused: they would silently import binary rounding error.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Polynomial:
    """Immutable dense polynomial with rational coefficients.

    >>> p = Polynomial([-2, 1, 1])          # z**2 + z - 2
    >>> p.degree, p(1)
    (2, Fraction(0, 1))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> Polynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Polynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = str(abs(c)) + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial([as_fraction(other)])

    def __add__(self, other) -> Polynomial:
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Polynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple[Polynomial, Polynomial]:
        d = self._coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = d.degree
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        inv_lc = 1 / d.lc
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] * inv_lc
            quot[k] = q
            if q:
                for j in range(dd + 1):
                    rem[k + j] -= q * d.coeffs[j]
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]

    def exact_div(self, other) -> Polynomial:
        """Quotient, asserting the division leaves no remainder."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Polynomial) -> bool:
        """True if ``self`` divides ``other`` exactly."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    # -- evaluation and transforms --------------------------------------

    def __call__(self, x):
        """Horner evaluation; works for any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> Polynomial:
        if self.is_zero():
            raise DegenerateInputError("zero polynomial has no monic form")
        inv = 1 / self.lc
        return Polynomial(c * inv for c in self.coeffs)

    def scale(self, c: Scalar) -> Polynomial:
        c = as_fraction(c)
        return Polynomial(x * c for x in self.coeffs)

    def reversed(self, n: int | None = None) -> Polynomial:
        """``z**n * p(1/z)`` with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        if n < self.degree:
            raise ValueError("reversal length below degree")
        padded = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return Polynomial(reversed(padded))

    def shift(self, a: Scalar) -> Polynomial:
        """``p(z + a)`` via the binomial theorem."""
        a = as_fraction(a)
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            apow = Fraction(1)
            for j in range(i, -1, -1):
                out[j] += c * comb(i, j) * apow
                apow *= a
        return Polynomial(out)

    def compose_scale(self, s: Scalar) -> Polynomial:
        """``p(s*z)``."""
        s = as_fraction(s)
        return Polynomial(c * s**i for i, c in enumerate(self.coeffs))

    def trailing_zeros(self) -> int:
        """Multiplicity of 0 as a root."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise DegenerateInputError("zero polynomial")

    def content_free(self) -> Polynomial:
        """Primitive integer-coefficient multiple by a *positive* constant.

        Used to keep coefficient growth in check where signs matter (Sturm
        chains), so the sign of every value is preserved.
        """
        if self.is_zero():
            return self
        from math import gcd, lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return Polynomial(Fraction(v // g) for v in ints)


def poly(*coeffs: Scalar) -> Polynomial:
    """Shorthand: ``poly(-2, 1, 1)`` is ``z**2 + z - 2`` (ascending order)."""
    return Polynomial(coeffs)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm.

    Raises :class:`DegenerateInputError` when both inputs are zero.
    """
    if p.is_zero() and q.is_zero():
        raise DegenerateInputError("gcd(0, 0) is undefined")
    a, b = p, q
    while b:
        r = a % b
        a, b = b, (r.monic() if r else r)
    return a.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic product of the distinct irreducible factors of ``p``."""
    if p.is_zero():
        raise DegenerateInputError("zero polynomial has no square-free part")
    if p.degree == 0:
        return Polynomial([1])
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm.

    Returns ``[(f_i, m_i)]`` with monic, pairwise coprime, square-free
    non-constant ``f_i`` such that ``prod f_i**m_i == p.monic()``.
    Sorted by multiplicity.
    """
    if p.is_zero():
        raise DegenerateInputError("zero polynomial has no square-free decomposition")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a0 = poly_gcd(p, dp)
    b = p.exact_div(a0)
    c = dp.exact_div(a0)
    d = c - b.derivative()
    out = []
    m = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, m))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        m += 1
    return out


def resultant(p: Polynomial, q: Polynomial) -> Fraction:
    """Resultant over Q via the Euclidean remainder sequence.

    Uses ``res(a, b) = (-1)**(deg a * deg b) * lc(b)**(deg a - deg r) * res(b, r)``
    with ``r = a mod b``.
    """
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    a, b = p, q
    acc = Fraction(1)
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return acc * b.lc**da
        r = a % b
        if r.is_zero():
            return Fraction(0)
        if (da * db) % 2:
            acc = -acc
        acc *= b.lc ** (da - r.degree)
        a, b = b, r


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Polynomial:
    """Newton divided-difference interpolation through distinct nodes."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Polynomial([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * Polynomial([-xs[i], 1]) + coef[i]
    return p
