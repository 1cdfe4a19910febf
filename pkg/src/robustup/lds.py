"""Linear recurrence / C-finite instances and their trajectories.

Discrete trajectories are exact. Continuous ones come from the
companion-matrix system ``x' = A x`` and are computed in fixed-point ball
arithmetic (midpoint plus rigorous radius on a ``2**-prec`` grid), so the
reported error bound is guaranteed; precision is raised until the bound
meets the requested tolerance. Continuous values are a test oracle only;
no decision in :mod:`robustup.classify` consumes them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Iterator, Optional, Sequence

from .algebra import Polynomial, as_fraction
from .errors import DegenerateInputError, ModeMismatchError, ToleranceNotMetError

DEFAULT_TOL = Fraction(1, 10**9)
_MAX_PREC = 1 << 16


class Mode(str, enum.Enum):
    DISCRETE = "discrete"
    CONTINUOUS = "continuous"


@dataclass(frozen=True)
class Instance:
    """An order-``k`` system given by coefficients ``c_0..c_{k-1}`` and initial data ``v``.

    Discrete: ``u[n+k] + c_{k-1} u[n+k-1] + ... + c_0 u[n] = 0`` with
    ``v = (u[0], ..., u[k-1])``. Continuous: the same with derivatives and
    ``v = (u(0), u'(0), ..., u^(k-1)(0))``.
    """

    mode: Mode
    c: tuple[Fraction, ...]
    v: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "c", tuple(as_fraction(x) for x in self.c))
        object.__setattr__(self, "v", tuple(as_fraction(x) for x in self.v))
        if len(self.c) != len(self.v):
            raise DegenerateInputError(
                f"coefficients and initial values differ in length ({len(self.c)} vs {len(self.v)})"
            )
        if not self.c:
            raise DegenerateInputError("order must be at least 1")

    @property
    def order(self) -> int:
        return len(self.c)

    @classmethod
    def discrete(cls, c: Sequence, v: Sequence) -> Instance:
        return cls(Mode.DISCRETE, tuple(c), tuple(v))

    @classmethod
    def continuous(cls, c: Sequence, v: Sequence) -> Instance:
        return cls(Mode.CONTINUOUS, tuple(c), tuple(v))

    def with_initial(self, v: Sequence) -> Instance:
        return Instance(self.mode, self.c, tuple(v))


@dataclass(frozen=True)
class Trajectory:
    """Samples ``(n or t, value)``; ``error_bound`` is 0 for exact discrete data."""

    mode: Mode
    samples: tuple[tuple[Fraction, Fraction], ...]
    error_bound: Fraction = Fraction(0)

    @property
    def values(self) -> list[Fraction]:
        return [v for _, v in self.samples]


def characteristic_poly(inst: Instance) -> Polynomial:
    """``z**k + c_{k-1} z**(k-1) + ... + c_0``."""
    return Polynomial(list(inst.c) + [1])


def _require(inst: Instance, mode: Mode) -> None:
    if inst.mode is not mode:
        raise ModeMismatchError(f"expected a {mode.value} instance, got {inst.mode.value}")


def scaled_integer_terms(inst: Instance) -> Iterator[int]:
    """Yield integers ``U[n]`` with ``U[n] = L * D**n * u[n]`` for fixed ``L, D > 0``.

    Same signs as ``u[n]`` and no gcd work per step, which is what makes
    long exact horizons cheap.
    """
    k = inst.order
    d = lcm(*(x.denominator for x in inst.c))
    ell = lcm(*(x.denominator for x in inst.v))
    cc = [int(x * d) for x in inst.c]
    # coefficient of U[n+i] in U[n+k] = -sum_i C_i D**(k-1-i) U[n+i]
    w = [cc[i] * d ** (k - 1 - i) for i in range(k)]
    window = [int(inst.v[i] * ell) * d**i for i in range(k)]
    yield from window
    while True:
        nxt = -sum(wi * ui for wi, ui in zip(w, window))
        yield nxt
        window = window[1:] + [nxt]


def simulate_discrete(inst: Instance, n_max: int) -> Trajectory:
    """Exact ``u[0..n_max]``."""
    _require(inst, Mode.DISCRETE)
    d = lcm(*(x.denominator for x in inst.c))
    ell = lcm(*(x.denominator for x in inst.v))
    out = []
    scale = ell
    for n, big in zip(range(n_max + 1), scaled_integer_terms(inst)):
        out.append((Fraction(n), Fraction(big, scale)))
        scale *= d
    return Trajectory(Mode.DISCRETE, tuple(out))


# -- continuous: ball arithmetic on a 2**-prec fixed-point grid ----------------
# A ball is (mid, rad) of ints denoting [(mid - rad) / 2**p, (mid + rad) / 2**p].


def _to_ball(x: Fraction, p: int) -> tuple[int, int]:
    num = x.numerator << p
    q, r = divmod(num, x.denominator)
    return q, (1 if r else 0)


def _matmul(a, b, p: int):
    n, m, l = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for k in range(l):
            mid = 0
            rad = 0
            for j in range(m):
                am, ar = a[i][j]
                bm, br = b[j][k]
                mid += am * bm
                rad += abs(am) * br + abs(bm) * ar + ar * br
            # rescale by 2**-p; flooring the midpoint costs at most one ulp
            row.append((mid >> p, -((-rad) >> p) + 1))
        out.append(row)
    return out


def _expm_ball(a: list[list[Fraction]], t: Fraction, p: int):
    """Ball enclosure of ``exp(t A)`` at fixed-point precision ``p``."""
    k = len(a)
    m = [[t * e for e in row] for row in a]
    norm = max(sum(abs(e) for e in row) for row in m)
    s = 0
    beta = norm
    while beta > Fraction(1, 1024):
        beta /= 2
        s += 1
    b = [[_to_ball(e / 2**s, p) for e in row] for row in m]
    one = 1 << p
    ident = [[(one if i == j else 0, 0) for j in range(k)] for i in range(k)]
    total = [row[:] for row in ident]
    term = ident
    j = 0
    # tail bound: beta**(K+1)/(K+1)! / (1 - beta/(K+2)) with beta <= 2**-10
    while True:
        j += 1
        term = _matmul(term, b, p)
        term = [[(mid // j, -(-rad // j) + 1) for mid, rad in row] for row in term]
        total = [
            [(tm + um, tr + ur) for (tm, tr), (um, ur) in zip(trow, urow)]
            for trow, urow in zip(total, term)
        ]
        tail = beta ** (j + 1) / factorial(j + 1) / (1 - beta / (j + 2))
        if tail * one < 1:
            break
    total = [[(mid, rad + 1) for mid, rad in row] for row in total]
    for _ in range(s):
        total = _matmul(total, total, p)
    return total


def _trajectory_balls(a, times: list[Fraction], x0: list[Fraction], p: int):
    """Balls for ``u(t)`` at sorted ``times``, stepping the state between them."""
    steps: dict[Fraction, list] = {}
    x = [[_to_ball(v, p)] for v in x0]
    prev = Fraction(0)
    out = []
    for t in times:
        dt = t - prev
        if dt:
            if dt not in steps:
                steps[dt] = _expm_ball(a, dt, p)
            x = _matmul(steps[dt], x, p)
        out.append(x[0][0])
        prev = t
    return out


def companion_matrix(inst: Instance) -> list[list[Fraction]]:
    k = inst.order
    a = [[Fraction(1) if j == i + 1 else Fraction(0) for j in range(k)] for i in range(k - 1)]
    a.append([-c for c in inst.c])
    return a


def simulate_continuous(
    inst: Instance, times: Sequence, tol: Optional[Fraction] = None
) -> Trajectory:
    """``u(t)`` at each requested time with absolute error at most ``tol``.

    Raises :class:`ToleranceNotMetError` if the precision cap is reached.
    """
    _require(inst, Mode.CONTINUOUS)
    tol = DEFAULT_TOL if tol is None else as_fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    ts = [as_fraction(t) for t in times]
    if any(t < 0 for t in ts):
        raise ValueError("times must be nonnegative")
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise ValueError("times must be strictly increasing")
    a = companion_matrix(inst)
    if not any(inst.v):
        return Trajectory(Mode.CONTINUOUS, tuple((t, Fraction(0)) for t in ts), tol)
    p = 96
    while True:
        balls = _trajectory_balls(a, ts, list(inst.v), p)
        worst = max(rad for _, rad in balls)
        if Fraction(worst, 1 << p) <= tol:
            break
        # the radius scales like 2**-p, so jump straight to the needed precision
        need = worst.bit_length() + tol.denominator.bit_length() - tol.numerator.bit_length() + 8
        p = max(2 * p, need)
        if p > _MAX_PREC:
            raise ToleranceNotMetError(f"trajectory not resolved to {tol} within {_MAX_PREC} bits")
    return Trajectory(Mode.CONTINUOUS, tuple((t, Fraction(mid, 1 << p)) for t, (mid, _) in zip(ts, balls)), tol)
