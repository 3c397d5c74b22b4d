"""Shared oracles and generators for the test suite.

The sign oracle and the point-in-triangle oracle are written directly
against the definitions, independently of the library internals, so the
exact-arithmetic code has something external to agree with.
"""

import random
from fractions import Fraction

from hypothesis import strategies as st
from mpmath import iv

from sechain.geometry import Chain, Point, pt
from sechain.numbers import QSqrt3

iv.prec = 128


def interval_sign(value: QSqrt3):
    """Sign of p + q*sqrt(3) by 128-bit interval arithmetic.

    Returns +1/-1 when the interval excludes zero, None when it is
    inconclusive (which for exact zero it always is).
    """
    p, q = value.p, value.q
    box = (
        iv.mpf(p.numerator) / p.denominator
        + iv.mpf(q.numerator) / q.denominator * iv.sqrt(3)
    )
    if box.a > 0:
        return 1
    if box.b < 0:
        return -1
    return None


def _orient(a: Point, b: Point, c: Point) -> int:
    return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign()


def in_closed_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Membership in the closed triangle abc, degenerate triangles allowed."""
    d1 = _orient(a, b, p)
    d2 = _orient(b, c, p)
    d3 = _orient(c, a, p)
    has_neg = -1 in (d1, d2, d3)
    has_pos = 1 in (d1, d2, d3)
    return not (has_neg and has_pos)


def convex_position_oracle(points) -> bool:
    """Quartic-time check: no point inside the triangle of three others."""
    pts = list(points)
    n = len(pts)
    if n <= 2:
        return len(set(pts)) == n
    if len(set(pts)) != n:
        return False
    if n == 3:
        return _orient(*pts) != 0
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    if i in (j, k, l):
                        continue
                    if in_closed_triangle(pts[i], pts[j], pts[k], pts[l]):
                        return False
    return True


def rand_fraction(rng: random.Random, span: int = 30, den: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_value(rng: random.Random, irrational: bool) -> QSqrt3:
    q = rand_fraction(rng, span=6, den=6) if irrational and rng.random() < 0.5 else 0
    return QSqrt3(rand_fraction(rng), q)


def rand_point(rng: random.Random, irrational: bool = False) -> Point:
    return Point(rand_value(rng, irrational), rand_value(rng, irrational))


def rand_chain(
    rng: random.Random,
    length: int,
    irrational: bool = False,
    max_slope: Fraction | None = None,
) -> Chain:
    """Random chain built from increasing x and strictly increasing slopes."""
    slopes: list[QSqrt3] = []
    s = QSqrt3(Fraction(rng.randint(1, 4), rng.randint(5, 40)))
    while len(slopes) < length - 1:
        slopes.append(s)
        bump = Fraction(rng.randint(1, 5), rng.randint(1, 9))
        if irrational and rng.random() < 0.3:
            s = s + QSqrt3(0, bump / 4)
        else:
            s = s + QSqrt3(bump)
    if max_slope is not None and slopes and slopes[-1] >= QSqrt3(max_slope):
        scale = QSqrt3(max_slope) / (slopes[-1] * 2)
        slopes = [t * scale for t in slopes]
    cur = rand_point(rng, irrational)
    points = [cur]
    for s in slopes:
        dx = QSqrt3(Fraction(rng.randint(1, 8), rng.randint(1, 4)))
        cur = Point(cur.x + dx, cur.y + s * dx)
        points.append(cur)
    return Chain(tuple(points))


def rand_dyadic(rng: random.Random, lo: int = 1, hi: int = 10) -> Fraction:
    return Fraction(1, 2 ** rng.randint(lo, hi))


fractions_st = st.fractions(min_value=-40, max_value=40, max_denominator=16)
qsqrt3_st = st.builds(
    QSqrt3,
    fractions_st,
    st.fractions(min_value=-8, max_value=8, max_denominator=8),
)
nonzero_qsqrt3_st = qsqrt3_st.filter(bool)
points_st = st.builds(Point, qsqrt3_st, qsqrt3_st)
dyadic_st = st.integers(min_value=1, max_value=12).map(lambda m: Fraction(1, 2**m))


@st.composite
def chains_st(draw, min_len: int = 2, max_len: int = 7):
    length = draw(st.integers(min_value=min_len, max_value=max_len))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    irrational = draw(st.booleans())
    return rand_chain(random.Random(seed), length, irrational=irrational)


def assert_points_equal(got, expected) -> None:
    got = list(got)
    expected = [p if isinstance(p, Point) else pt(*p) for p in expected]
    assert got == expected, f"{got} != {expected}"
