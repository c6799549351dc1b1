"""Exact piecewise-linear orientation-preserving homeomorphisms of I and S1.

Interval maps are breakpoint graphs pinned at (0,0) and (1,1).  Circle maps
are stored as one period of a lift: breakpoints on [0,1] with F(1) = F(0)+1,
normalized so F(0) lies in [0,1).  All arithmetic is rational; equality of
maps is equality of canonical breakpoint lists.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .intervals import IntervalSet, circle_complement, unit_canon


class DomainMismatchError(ValueError):
    pass


Points = tuple[tuple[Fraction, Fraction], ...]


def _canonical(points: list[tuple[Fraction, Fraction]]) -> Points:
    # drop interior breakpoints where consecutive slopes agree
    out = [points[0]]
    for i in range(1, len(points) - 1):
        x0, y0 = out[-1]
        x1, y1 = points[i]
        x2, y2 = points[i + 1]
        if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
            continue
        out.append(points[i])
    out.append(points[-1])
    return tuple(out)


def _check_strictly_increasing(points):
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if x1 <= x0:
            raise ValueError(f"breakpoint abscissae not increasing at x={x1}")
        if y1 <= y0:
            raise ValueError(f"breakpoint values not increasing at x={x1}")


def _eval_pl(xs, ys, x: Fraction) -> Fraction:
    i = bisect_right(xs, x) - 1
    if i < 0 or x > xs[-1]:
        raise ValueError(f"point {x} outside [{xs[0]}, {xs[-1]}]")
    if i >= len(xs) - 1:
        i = len(xs) - 2
    x0, x1 = xs[i], xs[i + 1]
    y0, y1 = ys[i], ys[i + 1]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


# Raw lift helpers: `pts` is one period of a lift over abscissae [0, 1] with
# F(1) = F(0) + 1, not necessarily normalized.  Used where integer shifts of
# the lift must be preserved (rotation number iteration).


def _lift_eval(pts, x: Fraction) -> Fraction:
    k = math.floor(x)
    return _eval_pl([p[0] for p in pts], [p[1] for p in pts], x - k) + k


def _lift_eval_inverse(pts, y: Fraction) -> Fraction:
    k = math.floor(y - pts[0][1])
    return _eval_pl([p[1] for p in pts], [p[0] for p in pts], y - k) + k


def _lift_compose(fpts, gpts) -> list[tuple[Fraction, Fraction]]:
    """Breakpoints of the lift x -> F(G(x)) on [0, 1], unnormalized."""
    g0 = gpts[0][1]
    cuts = {p[0] for p in gpts}
    for bx, _ in fpts[:-1]:
        k = math.ceil(g0 - bx)
        while bx + k <= g0 + 1:
            if bx + k >= g0:
                cuts.add(_lift_eval_inverse(gpts, bx + k))
            k += 1
    xs = sorted(c for c in cuts if 0 <= c <= 1)
    return [(x, _lift_eval(fpts, _lift_eval(gpts, x))) for x in xs]


@dataclass(frozen=True)
class PLMapInterval:
    points: Points

    @staticmethod
    def from_points(points: Iterable) -> "PLMapInterval":
        pts = [(Fraction(x), Fraction(y)) for x, y in points]
        if len(pts) < 2 or pts[0] != (0, 0) or pts[-1] != (1, 1):
            raise ValueError("interval map must run from (0,0) to (1,1)")
        _check_strictly_increasing(pts)
        return PLMapInterval(_canonical(pts))

    @staticmethod
    def identity() -> "PLMapInterval":
        return PLMapInterval(((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))))

    @property
    def xs(self):
        return [p[0] for p in self.points]

    @property
    def ys(self):
        return [p[1] for p in self.points]

    def evaluate(self, x) -> Fraction:
        return _eval_pl(self.xs, self.ys, Fraction(x))

    def evaluate_inverse(self, y) -> Fraction:
        return _eval_pl(self.ys, self.xs, Fraction(y))

    def is_identity(self) -> bool:
        return len(self.points) == 2

    def fixed_set(self) -> IntervalSet:
        """Exact solution set of f(x) = x: sub-intervals and isolated points."""
        parts = []
        pts = self.points
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            d0, d1 = y0 - x0, y1 - x1
            if d0 == 0 and d1 == 0:
                parts.append((x0, True, x1, True))
            elif d0 == 0:
                parts.append((x0, True, x0, True))
            elif d1 == 0:
                parts.append((x1, True, x1, True))
            elif (d0 < 0) != (d1 < 0):
                s = (y1 - y0) / (x1 - x0)
                root = (y0 - s * x0) / (1 - s)
                parts.append((root, True, root, True))
        return IntervalSet.of(parts)

    def support(self) -> IntervalSet:
        return self.fixed_set().complement(0, 1)

    def derivative_variation(self) -> Fraction:
        """Total variation of the slope step function over interior breakpoints."""
        slopes = _slopes(self.points)
        return sum(
            (abs(s1 - s0) for s0, s1 in zip(slopes, slopes[1:])), Fraction(0)
        )


def _slopes(points) -> list[Fraction]:
    return [
        (y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in zip(points, points[1:])
    ]


@dataclass(frozen=True)
class PLMapCircle:
    points: Points  # one period of the lift, abscissae spanning [0, 1]

    @staticmethod
    def from_points(points: Iterable) -> "PLMapCircle":
        pts = [(Fraction(x), Fraction(y)) for x, y in points]
        if len(pts) < 2 or pts[0][0] != 0 or pts[-1][0] != 1:
            raise ValueError("circle lift must cover abscissae [0, 1]")
        if pts[-1][1] != pts[0][1] + 1:
            raise ValueError("circle lift must satisfy F(1) = F(0) + 1")
        _check_strictly_increasing(pts)
        shift = math.floor(pts[0][1])
        if shift:
            pts = [(x, y - shift) for x, y in pts]
        return PLMapCircle(_canonical(pts))

    @staticmethod
    def identity() -> "PLMapCircle":
        return PLMapCircle(((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))))

    @staticmethod
    def rotation(angle) -> "PLMapCircle":
        a = Fraction(angle)
        return PLMapCircle.from_points([(0, a), (1, a + 1)])

    @property
    def xs(self):
        return [p[0] for p in self.points]

    @property
    def ys(self):
        return [p[1] for p in self.points]

    def evaluate_lift(self, x) -> Fraction:
        x = Fraction(x)
        k = math.floor(x)
        return _eval_pl(self.xs, self.ys, x - k) + k

    def evaluate_lift_inverse(self, y) -> Fraction:
        y = Fraction(y)
        k = math.floor(y - self.points[0][1])
        return _eval_pl(self.ys, self.xs, y - k) + k

    def evaluate_circle(self, x) -> Fraction:
        v = self.evaluate_lift(Fraction(x))
        return v - math.floor(v)

    def is_identity(self) -> bool:
        return self.points == PLMapCircle.identity().points

    def fixed_set(self) -> IntervalSet:
        """Circle points with F(x) - x integral, in the fundamental domain."""
        pts = self.points
        diffs = [y - x for x, y in pts]
        parts = []
        for m in range(math.ceil(min(diffs)), math.floor(max(diffs)) + 1):
            for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
                d0, d1 = y0 - x0 - m, y1 - x1 - m
                if d0 == 0 and d1 == 0:
                    parts.append((x0, True, x1, True))
                elif d0 == 0:
                    parts.append((x0, True, x0, True))
                elif d1 == 0:
                    parts.append((x1, True, x1, True))
                elif (d0 < 0) != (d1 < 0):
                    s = (y1 - y0) / (x1 - x0)
                    root = (y0 - m - s * x0) / (1 - s)
                    parts.append((root, True, root, True))
        return unit_canon(IntervalSet.of(parts))

    def support(self) -> IntervalSet:
        return circle_complement(self.fixed_set())

    def derivative_variation(self) -> Fraction:
        """Cyclic slope variation: interior jumps plus the seam jump."""
        slopes = _slopes(self.points)
        total = sum(
            (abs(s1 - s0) for s0, s1 in zip(slopes, slopes[1:])), Fraction(0)
        )
        return total + abs(slopes[0] - slopes[-1])


PLMap = Union[PLMapInterval, PLMapCircle]


def _require_same_domain(f: PLMap, g: PLMap):
    if type(f) is not type(g):
        raise DomainMismatchError(
            f"cannot mix {type(f).__name__} with {type(g).__name__}"
        )


def compose(f: PLMap, g: PLMap) -> PLMap:
    """Exact composition f after g on merged, refined breakpoints."""
    _require_same_domain(f, g)
    if isinstance(f, PLMapInterval):
        cuts = set(g.xs)
        cuts.update(g.evaluate_inverse(bx) for bx in f.xs)
        xs = sorted(cuts)
        return PLMapInterval.from_points(
            [(x, f.evaluate(g.evaluate(x))) for x in xs]
        )
    return PLMapCircle.from_points(_lift_compose(f.points, g.points))


def invert(f: PLMap) -> PLMap:
    if isinstance(f, PLMapInterval):
        return PLMapInterval.from_points([(y, x) for x, y in f.points])
    # swapped pairs define the inverse lift on [F(0), F(0)+1]; rewindow to [0,1]
    cuts = {Fraction(0), Fraction(1)}
    for _, y in f.points[:-1]:
        k = math.floor(y)
        for shift in (k, k + 1):
            c = y - shift
            if 0 <= c <= 1:
                cuts.add(c)
    xs = sorted(cuts)
    return PLMapCircle.from_points([(x, f.evaluate_lift_inverse(x)) for x in xs])


def identity_like(f: PLMap) -> PLMap:
    return type(f).identity()


def power(f: PLMap, n: int) -> PLMap:
    if n < 0:
        return power(invert(f), -n)
    out = identity_like(f)
    for _ in range(n):
        out = compose(out, f)
    return out


def commutator(f: PLMap, g: PLMap) -> PLMap:
    """[f, g] = f g f^-1 g^-1."""
    _require_same_domain(f, g)
    return compose(compose(f, g), compose(invert(f), invert(g)))


def is_grounded(f: PLMap) -> bool:
    """Whether f has a fixed point; trivially true on the interval."""
    if isinstance(f, PLMapInterval):
        return True
    return not f.fixed_set().is_empty()


@dataclass(frozen=True)
class RotationResult:
    kind: str  # "exact" | "bounds"
    value: Optional[Fraction] = None
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    def is_exact(self) -> bool:
        return self.kind == "exact"


def rotation_number(f: PLMapCircle, q_max: int = 64) -> RotationResult:
    """Exact rotation number when some f^q has a periodic lift, else bounds.

    For each q up to q_max the lift F^q is computed exactly and the equation
    F^q(x) = x + p is decided by sign analysis over the breakpoints; a hit
    yields rot f = p/q.  Otherwise the interval
    [(F^n(0) - 1)/n, (F^n(0) + 1)/n] at n = q_max encloses the true value.
    """
    if q_max < 1:
        raise ValueError("q_max must be at least 1")
    pts = list(f.points)
    for q in range(1, q_max + 1):
        if q > 1:
            pts = _lift_compose(f.points, pts)
        diffs = [y - x for x, y in pts]
        lo, hi = min(diffs), max(diffs)
        hits = list(range(math.ceil(lo), math.floor(hi) + 1))
        if hits:
            assert len(hits) == 1, "lift displacement spans two integers"
            v = Fraction(hits[0], q)
            return RotationResult("exact", value=v - math.floor(v))
    f0 = pts[0][1]
    n = q_max
    return RotationResult("bounds", lo=(f0 - 1) / n, hi=(f0 + 1) / n)
