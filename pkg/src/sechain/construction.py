"""Doubling construction of chain pairs with large midpoint witnesses.

A `Level` holds two south-east chains `a` and `b` of equal length
together with a witness: a list of index pairs (i, j) whose midpoints
(a[i] + b[j]) / 2, taken in witness order, again form a south-east
chain.  Since a south-east chain is convexly independent, the witness
exhibits that many points in convex position inside the midpoint set of
the two chains.

The step from one level to the next glues a flattened copy and a
rotated flattened copy of each chain:

    new_a = flat(a)            ++ shift + rot(flat(b))
    new_b = shift' + flat(b)   ++ shift'' + rot(flat(a))

Chain lengths double, while the witness grows by the old witness (taken
in the flat copies), one midpoint per index i pairing flat(a)[i] with
its rotated twin, and the old witness again in the rotated copies.
Counts follow len(witness_k) = (k + 2) * 2**(k - 1).

Every candidate flattening factor is accepted or rejected by running the
exact chain predicate on all three glued sequences; nothing is assumed
about "sufficiently small" beyond what is verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import (
    Chain,
    Point,
    is_south_east_chain,
    midpoint,
    pt,
    transform_chains,
)

IndexPair = tuple[int, int]


@dataclass(frozen=True, slots=True)
class StepOffsets:
    """Translations that place the six blocks of a doubled level.

    The first three anchor the chain copies; the witness-block anchors
    are forced by linearity to be their half sums, which `validate`
    checks.
    """

    rotated_b_in_a: Point  # added to rot(flat(b)) inside new_a
    flat_b_in_b: Point  # added to flat(b) inside new_b
    rotated_a_in_b: Point  # added to rot(flat(a)) inside new_b
    old_witness_block: Point  # anchor of the flat-copy witness midpoints
    matching_block: Point  # anchor of the flat/rotated pairing midpoints
    rotated_witness_block: Point  # anchor of the rotated-copy witness midpoints

    def validate(self) -> None:
        assert self.old_witness_block == midpoint(self.flat_b_in_b, pt(0, 0))
        assert self.matching_block == midpoint(self.rotated_a_in_b, pt(0, 0))
        assert self.rotated_witness_block == midpoint(
            self.rotated_a_in_b, self.rotated_b_in_a
        )


STEP_OFFSETS = StepOffsets(
    rotated_b_in_a=pt(1, 1),
    flat_b_in_b=pt(0, 2),
    rotated_a_in_b=pt(1, Fraction(5, 2)),
    old_witness_block=pt(0, 1),
    matching_block=pt(Fraction(1, 2), Fraction(5, 4)),
    rotated_witness_block=pt(1, Fraction(7, 4)),
)


@dataclass(frozen=True, slots=True)
class Level:
    """A verified stage of the construction."""

    k: int
    a: Chain
    b: Chain
    witness: tuple[IndexPair, ...]
    eps_history: tuple[Fraction, ...]

    def witness_midpoints(self) -> tuple[Point, ...]:
        """Midpoints of the witness pairs, in witness order."""
        apts, bpts = self.a.points, self.b.points
        return tuple(midpoint(apts[i], bpts[j]) for i, j in self.witness)

    def validate(self) -> None:
        """Re-check every level invariant; raises ValueError on failure."""
        n = 2**self.k
        if len(self.a) != n or len(self.b) != n:
            raise ValueError(f"level {self.k}: chain lengths must be {n}")
        if len(self.witness) != expected_witness_size(self.k):
            raise ValueError(f"level {self.k}: wrong witness size")
        if len(self.eps_history) != self.k - 1:
            raise ValueError(f"level {self.k}: wrong eps history length")
        if any(e <= 0 for e in self.eps_history):
            raise ValueError("eps history entries must be positive")
        if len(set(self.witness)) != len(self.witness):
            raise ValueError("witness pairs must be distinct")
        for i, j in self.witness:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"witness pair ({i}, {j}) out of range")
        # Chain objects are validated on construction; the witness
        # midpoint sequence is the remaining chain condition.
        if not is_south_east_chain(self.witness_midpoints()):
            raise ValueError("witness midpoints are not a south-east chain")


def expected_witness_size(k: int) -> int:
    """Closed form (k + 2) * 2**(k - 1) of the witness recurrence."""
    return (k + 2) * 2 ** (k - 1)


def base_case() -> Level:
    """Level 1: two 2-point chains and a 3-midpoint witness."""
    level = Level(
        k=1,
        a=Chain((pt(0, 0), pt(2, 1))),
        b=Chain((pt(0, 2), pt(2, 4))),
        witness=((0, 0), (1, 0), (1, 1)),
        eps_history=(),
    )
    level.validate()
    return level


def step(level: Level, eps: Fraction) -> Optional[Level]:
    """One doubling with flattening factor eps.

    Returns the next level, or None when any of the three glued
    sequences fails the exact chain predicate (the factor was not small
    enough).  An eps <= 0 is a usage error, not a rejection.
    """
    if not isinstance(eps, Fraction):
        eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("flattening factor must be positive")
    off = STEP_OFFSETS
    n = len(level.a)

    a_flat, a_rot, _ = transform_chains(level.a.points, eps)
    b_flat, b_rot, _ = transform_chains(level.b.points, eps)

    new_a = a_flat + [p + off.rotated_b_in_a for p in b_rot]
    new_b = [p + off.flat_b_in_b for p in b_flat]
    new_b += [p + off.rotated_a_in_b for p in a_rot]

    new_witness: list[IndexPair] = list(level.witness)
    new_witness += [(i, n + i) for i in range(n)]
    new_witness += [(n + j, n + i) for i, j in level.witness]

    mids = [midpoint(new_a[i], new_b[j]) for i, j in new_witness]
    if not (
        is_south_east_chain(new_a)
        and is_south_east_chain(new_b)
        and is_south_east_chain(mids)
    ):
        return None
    return Level(
        k=level.k + 1,
        a=Chain(tuple(new_a)),
        b=Chain(tuple(new_b)),
        witness=tuple(new_witness),
        eps_history=level.eps_history + (eps,),
    )


class EpsilonSearchError(RuntimeError):
    """No acceptable power of two found below the exponent cap."""


def find_epsilon(level: Level, max_exponent: int = 256) -> Fraction:
    """Largest accepted flattening factor of the form 2**-m, m >= 1.

    Doubles the exponent until some power is accepted, then binary
    searches for the smallest accepted exponent.  Every candidate is
    decided by actually running `step`, so the returned value is always
    a verified one; the refinement only relies on "smaller keeps
    working" to claim largeness, never to skip verification.
    """

    def accepts(m: int) -> bool:
        return step(level, Fraction(1, 2**m)) is not None

    if accepts(1):
        return Fraction(1, 2)
    lo = 1  # largest known rejected exponent
    hi = min(2, max_exponent)
    while lo >= hi or not accepts(hi):
        if hi >= max_exponent:
            raise EpsilonSearchError(
                f"no flattening factor down to 2**-{max_exponent} was "
                f"accepted at level {level.k}"
            )
        lo = hi
        hi = min(hi * 2, max_exponent)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if accepts(mid):
            hi = mid
        else:
            lo = mid
    return Fraction(1, 2**hi)


def build(k: int, max_eps_exponent: int = 256) -> Level:
    """Construct level k from the base case, verifying every stage."""
    if k < 1:
        raise ValueError("level index must be at least 1")
    level = base_case()
    while level.k < k:
        eps = find_epsilon(level, max_exponent=max_eps_exponent)
        nxt = step(level, eps)
        assert nxt is not None  # find_epsilon returned a verified factor
        level = nxt
    return level
