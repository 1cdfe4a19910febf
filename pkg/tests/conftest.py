from collections import Counter
from fractions import Fraction
from math import floor

import pytest
from hypothesis import HealthCheck, settings

from robustup.algebra import Polynomial, isolate_real_roots, squarefree_decomposition
from robustup.classify import Condition, VerdictKind
from robustup.lds import Instance

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

YES, NO, NON = VerdictKind.ROBUST_YES, VerdictKind.ROBUST_NO, VerdictKind.NON_ROBUST

# (name, instance, expected verdict, expected condition)
CURATED = [
    ("fibonacci", Instance.discrete([-1, -1], [0, 1]), YES, Condition.YES),
    ("geometric_2", Instance.discrete([-2], [3]), YES, Condition.YES),
    ("oscillator_-2", Instance.discrete([2], [1]), NO, Condition.NO1),
    ("one_plus_cos", Instance.discrete([-1, 1, -1], [2, 1, 0]), NON, Condition.NONE),
    ("hidden_-2", Instance.discrete([-2, 1], [1, 1]), NON, Condition.NONE),
    ("cos", Instance.continuous([1, 0], [1, 0]), NO, Condition.NO1),
    ("exp", Instance.continuous([-1], [1]), YES, Condition.YES),
    ("cosh_plus_sinh", Instance.continuous([-1, 0], [1, 1]), YES, Condition.YES),
    ("zero_discrete", Instance.discrete([-1, -1], [0, 0]), NON, Condition.NONE),
    ("zero_continuous", Instance.continuous([1, 0], [0, 0]), NON, Condition.NONE),
    ("zero_order3", Instance.discrete([1, 2, 3], [0, 0, 0]), NON, Condition.NONE),
]


def fr(*xs):
    return [Fraction(x) for x in xs]


@pytest.fixture(params=CURATED, ids=[c[0] for c in CURATED])
def curated(request):
    return request.param


from hypothesis import strategies as st  # noqa: E402

from robustup.lds import Mode  # noqa: E402

small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def instances(draw, modes=(Mode.DISCRETE, Mode.CONTINUOUS), max_order=4, values=small_rationals):
    mode = draw(st.sampled_from(modes))
    k = draw(st.integers(1, max_order))
    c = draw(st.lists(values, min_size=k, max_size=k))
    v = draw(st.lists(values, min_size=k, max_size=k))
    return Instance(mode, tuple(c), tuple(v))


@st.composite
def spectra(draw, max_total=5, positive_top=False):
    """Rational spectra for :class:`robustup.oracle.ExponentialPolynomial`."""
    from robustup.oracle import ExponentialPolynomial

    roots = draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=1, max_size=3, unique=True))
    if positive_top:
        # the largest root comes first so the multiplicity budget always covers it
        roots.sort(reverse=True)
        if roots[0] <= 0:
            roots.insert(0, draw(st.fractions(min_value=Fraction(1, 2), max_value=3, max_denominator=2)))
    budget = max_total
    spec = {}
    for r in roots:
        if budget <= 0:
            break
        m = draw(st.integers(1, min(2, budget)))
        budget -= m
        spec[r] = draw(st.lists(small_rationals, min_size=m, max_size=m))
    return ExponentialPolynomial.of(spec)


def rational_root_multiset(p: Polynomial) -> Counter:
    """Rational roots with multiplicity.

    A rational root of the primitive integer form has a denominator dividing
    its leading coefficient ``L``, so once an isolating interval is narrower
    than ``1/L`` only the grid points ``j/L`` inside it need testing.
    """
    out = Counter()
    for f, m in squarefree_decomposition(p):
        prim = f.content_free()
        lead = abs(prim.lc.numerator)
        for r, _ in isolate_real_roots(f):
            r = r.refine_to(Fraction(1, 2 * lead))
            j = floor(r.lo * lead)
            for cand in (Fraction(j, lead), Fraction(j + 1, lead)):
                if r.lo <= cand <= r.hi and f(cand) == 0:
                    out[cand] += m
    return out
