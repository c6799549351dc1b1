"""Lamplighter certificates and recursive commutator chains on the interval.

A pair (g, u) is certified when the closed hull K of supp g sits inside
(0,1), u throws inf K past sup K, and u never moves points left of themselves
from inf K on.  These conditions force u^j K to stay pairwise disjoint and
disjoint from K for every j >= 1, so g and all its u-conjugates commute and
the pair generates a copy of the wreath product of Z by Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .intervals import IntervalSet
from .plmaps import PLMapInterval, commutator, compose, invert, power


class IdentityInputError(ValueError):
    pass


@dataclass(frozen=True)
class LamplighterCertificate:
    g: PLMapInterval
    u: PLMapInterval
    hull: tuple[Fraction, Fraction]  # closed convex hull K of supp g
    j_checked: int


def _never_moves_left_from(u: PLMapInterval, x0: Fraction) -> bool:
    # u(x) >= x on [x0, 1]; linear pieces make endpoint checks sufficient
    if u.evaluate(x0) < x0:
        return False
    return all(y >= x for x, y in u.points if x >= x0)


def lamplighter_certificate(
    g: PLMapInterval, u: PLMapInterval, j_checked: int = 20
) -> Optional[LamplighterCertificate]:
    """Certificate that <g, u> is a lamplighter group, or None.

    The sufficient conditions are checked exactly on the PL data; when they
    hold, the commutation relations [g, u^j g u^-j] = 1 and the disjointness
    u^j(K) against K are additionally verified for j up to j_checked.
    """
    if g.is_identity():
        raise IdentityInputError("g must not be the identity")
    hull = g.support().hull()
    lo, hi = hull
    if not (0 < lo and hi < 1):
        return None
    if u.evaluate(lo) <= hi:
        return None
    if not _never_moves_left_from(u, lo):
        return None

    uj = PLMapInterval.identity()
    for j in range(1, j_checked + 1):
        uj = compose(uj, u)
        image_lo = uj.evaluate(lo)
        if image_lo <= hi:
            raise AssertionError(f"certificate conditions violated at j={j}")
        conj = compose(compose(uj, g), invert(uj))
        if not commutator(g, conj).is_identity():
            raise AssertionError(f"commutation [g, u^{j} g u^-{j}] failed")
    return LamplighterCertificate(g, u, hull, j_checked)


@dataclass(frozen=True)
class ChainStep:
    support: IntervalSet  # open support of the current iterate
    next_is_identity: bool


@dataclass(frozen=True)
class ChainReport:
    steps: tuple[ChainStep, ...]
    reached_identity: bool
    final: PLMapInterval


def recursive_commutator_chain(
    g1: PLMapInterval, picks: Iterable[PLMapInterval]
) -> ChainReport:
    """Iterate g_{i+1} = [g_i, u_i g_i u_i^-1] along the given picks.

    Stops at the first identity iterate or when picks run out; each step
    records the support of g_i and whether the next iterate vanished.
    """
    if g1.is_identity():
        raise IdentityInputError("g1 must not be the identity")
    g = g1
    steps = []
    reached = False
    for u in picks:
        nxt = commutator(g, compose(compose(u, g), invert(u)))
        done = nxt.is_identity()
        steps.append(ChainStep(g.support(), done))
        g = nxt
        if done:
            reached = True
            break
    return ChainReport(tuple(steps), reached, g)


def certified_pair_disjointness(cert: LamplighterCertificate, j: int) -> bool:
    """Exact check that u^j maps the hull K of supp g off of K."""
    lo, hi = cert.hull
    return power(cert.u, j).evaluate(lo) > hi
