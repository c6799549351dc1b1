"""Exact finite unions of rational intervals with open/closed endpoints.

This is the set algebra behind fixed sets, supports, and the containment
checks: every operation is a decision on rational endpoint data, never an
approximation.  Degenerate closed intervals represent isolated points.
Circle subsets are kept in the fundamental domain [0, 1); the helpers at the
bottom implement wrapping, closure, and complement with the 0 ~ 1 gluing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

Part = tuple[Fraction, bool, Fraction, bool]  # (a, a_closed, b, b_closed)


def _end_leq(b1: Fraction, bc1: bool, b2: Fraction, bc2: bool) -> bool:
    # right-endpoint order: closed reaches further than open at the same point
    return b1 < b2 or (b1 == b2 and (bc2 or not bc1))


def _normalize(parts: Iterable[Part]) -> tuple[Part, ...]:
    kept = []
    for a, ac, b, bc in parts:
        if a > b:
            continue
        if a == b and not (ac and bc):
            continue
        kept.append((a, ac, b, bc))
    kept.sort(key=lambda p: (p[0], not p[1]))
    merged: list[Part] = []
    for a, ac, b, bc in kept:
        if merged:
            pa, pac, pb, pbc = merged[-1]
            if a < pb or (a == pb and (ac or pbc)):
                if pb < b or (pb == b and bc and not pbc):
                    merged[-1] = (pa, pac, b, bc)
                continue
        merged.append((a, ac, b, bc))
    return tuple(merged)


@dataclass(frozen=True)
class IntervalSet:
    parts: tuple[Part, ...]

    @staticmethod
    def of(parts: Iterable[Part]) -> "IntervalSet":
        return IntervalSet(_normalize(parts))

    @staticmethod
    def empty() -> "IntervalSet":
        return IntervalSet(())

    @staticmethod
    def open(a, b) -> "IntervalSet":
        return IntervalSet.of([(Fraction(a), False, Fraction(b), False)])

    @staticmethod
    def closed(a, b) -> "IntervalSet":
        return IntervalSet.of([(Fraction(a), True, Fraction(b), True)])

    @staticmethod
    def point(x) -> "IntervalSet":
        return IntervalSet.closed(x, x)

    def is_empty(self) -> bool:
        return not self.parts

    def __bool__(self) -> bool:
        return bool(self.parts)

    def contains(self, x) -> bool:
        x = Fraction(x)
        for a, ac, b, bc in self.parts:
            if (a < x or (a == x and ac)) and (x < b or (x == b and bc)):
                return True
        return False

    def hull(self) -> Optional[tuple[Fraction, Fraction]]:
        if not self.parts:
            return None
        return (self.parts[0][0], self.parts[-1][2])

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet.of(self.parts + other.parts)

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a, ac, b, bc in self.parts:
            for a2, ac2, b2, bc2 in other.parts:
                if a2 > b or a > b2:
                    continue
                if a > a2:
                    na, nac = a, ac
                elif a2 > a:
                    na, nac = a2, ac2
                else:
                    na, nac = a, ac and ac2
                if b < b2:
                    nb, nbc = b, bc
                elif b2 < b:
                    nb, nbc = b2, bc2
                else:
                    nb, nbc = b, bc and bc2
                out.append((na, nac, nb, nbc))
        return IntervalSet.of(out)

    def complement(self, lo, hi) -> "IntervalSet":
        """Complement within the ambient closed interval [lo, hi]."""
        lo, hi = Fraction(lo), Fraction(hi)
        inner = self.intersection(IntervalSet.closed(lo, hi))
        gaps = []
        cur, cur_closed = lo, True
        for a, ac, b, bc in inner.parts:
            gaps.append((cur, cur_closed, a, not ac))
            cur, cur_closed = b, not bc
        gaps.append((cur, cur_closed, hi, True))
        return IntervalSet.of(gaps)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        if not self.parts:
            return self
        lo = min(self.parts[0][0], other.parts[0][0]) if other.parts else self.parts[0][0]
        hi = max(self.parts[-1][2], other.parts[-1][2]) if other.parts else self.parts[-1][2]
        return self.intersection(other.complement(lo - 1, hi + 1))

    def is_subset_of(self, other: "IntervalSet") -> bool:
        return self.difference(other).is_empty()

    def closure(self) -> "IntervalSet":
        return IntervalSet.of([(a, True, b, True) for a, ac, b, bc in self.parts])

    def shift(self, k) -> "IntervalSet":
        k = Fraction(k)
        return IntervalSet(tuple((a + k, ac, b + k, bc) for a, ac, b, bc in self.parts))

    def map_endpoints(self, f: Callable[[Fraction], Fraction]) -> "IntervalSet":
        """Image under a strictly increasing map given by its endpoint action."""
        return IntervalSet.of([(f(a), ac, f(b), bc) for a, ac, b, bc in self.parts])


# ---------------------------------------------------------------------------
# Circle subsets: canonical representatives inside [0, 1).

FULL_CIRCLE = IntervalSet((
    (Fraction(0), True, Fraction(1), False),
))


def unit_canon(s: IntervalSet) -> IntervalSet:
    """Reduce an arbitrary line set modulo 1 into the fundamental domain."""
    out: list[Part] = []
    for a, ac, b, bc in s.parts:
        if b - a >= 1:
            return FULL_CIRCLE
        k = math.floor(a)
        a, b = a - k, b - k
        if b < 1 or (b == 1 and not bc):
            out.append((a, ac, b, bc))
        elif b == 1:  # right end hits the seam: 1 is the point 0
            out.append((a, ac, Fraction(1), False))
            out.append((Fraction(0), True, Fraction(0), True))
        else:
            out.append((a, ac, Fraction(1), False))
            out.append((Fraction(0), True, b - 1, bc))
    return IntervalSet.of(out)


def circle_closure(s: IntervalSet) -> IntervalSet:
    spread = s.shift(-1).union(s).union(s.shift(1)).closure()
    return unit_canon(spread.intersection(IntervalSet.closed(0, 1)))


def circle_complement(s: IntervalSet) -> IntervalSet:
    comp = s.complement(0, 1)
    out = []
    for a, ac, b, bc in comp.parts:
        if a == 1:
            continue  # the lone point 1 is the circle point 0, handled by [0,..)
        if b == 1 and bc:
            out.append((a, ac, b, False))
        else:
            out.append((a, ac, b, bc))
    return IntervalSet.of(out)


def wrapped_components(s: IntervalSet) -> list[tuple[Fraction, Fraction, bool, bool]]:
    """Components of a circle set with the seam glued.

    A component crossing 0 is reported once as (a, b + 1, ...).  Endpoint
    flags are returned for completeness; open supports use open ones.
    """
    parts = list(s.parts)
    if len(parts) >= 2:
        first, last = parts[0], parts[-1]
        if first[0] == 0 and first[1] and last[2] == 1 and not last[3]:
            parts = parts[1:-1] + [(last[0], last[1], first[2] + 1, first[3])]
    return [(a, b, ac, bc) for a, ac, b, bc in parts]
