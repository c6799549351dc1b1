from fractions import Fraction
from random import Random

import pytest

from raagdyn.lamplighter import (
    IdentityInputError,
    certified_pair_disjointness,
    lamplighter_certificate,
    recursive_commutator_chain,
)
from raagdyn.plmaps import PLMapInterval, commutator, compose, invert, power
from raagdyn.randmaps import random_bump

F = Fraction


def bump_on_eighth_quarter():
    return PLMapInterval.from_points(
        [(0, 0), (F(1, 8), F(1, 8)), (F(3, 16), F(15, 64)), (F(1, 4), F(1, 4)), (1, 1)]
    )


def throwing_map():
    # u(1/8) = 1/2 and u(x) >= x beyond 1/8
    return PLMapInterval.from_points([(0, 0), (F(1, 8), F(1, 2)), (1, 1)])


class TestCertificate:
    def test_documented_example_certifies(self):
        cert = lamplighter_certificate(bump_on_eighth_quarter(), throwing_map())
        assert cert is not None
        assert cert.hull == (F(1, 8), F(1, 4))
        assert cert.j_checked == 20

    def test_identity_g_rejected(self):
        with pytest.raises(IdentityInputError):
            lamplighter_certificate(PLMapInterval.identity(), throwing_map())

    def test_identity_u_yields_none(self):
        assert lamplighter_certificate(bump_on_eighth_quarter(), PLMapInterval.identity()) is None

    def test_insufficient_throw_yields_none(self):
        u = PLMapInterval.from_points([(0, 0), (F(1, 8), F(3, 16)), (1, 1)])
        assert lamplighter_certificate(bump_on_eighth_quarter(), u) is None

    def test_backslide_yields_none(self):
        # u throws inf K far enough but dips below the diagonal later
        u = PLMapInterval.from_points(
            [(0, 0), (F(1, 8), F(1, 2)), (F(3, 4), F(5, 8)), (1, 1)]
        )
        assert lamplighter_certificate(bump_on_eighth_quarter(), u) is None

    def test_hull_touching_boundary_yields_none(self):
        g = PLMapInterval.from_points([(0, 0), (F(1, 4), F(3, 8)), (F(1, 2), F(1, 2)), (1, 1)])
        assert g.support().hull()[0] == 0
        assert lamplighter_certificate(g, throwing_map()) is None

    def test_certified_relations_hold_exactly(self):
        cert = lamplighter_certificate(bump_on_eighth_quarter(), throwing_map(), j_checked=8)
        g, u = cert.g, cert.u
        for j in (1, 3, 8, 12):
            conj = compose(compose(power(u, j), g), invert(power(u, j)))
            assert commutator(g, conj).is_identity()
            assert certified_pair_disjointness(cert, j)


class TestChain:
    def test_identity_pick_terminates_immediately(self):
        g = bump_on_eighth_quarter()
        report = recursive_commutator_chain(g, [PLMapInterval.identity()])
        assert report.reached_identity
        assert report.steps[0].next_is_identity
        assert report.final.is_identity()

    def test_certified_pick_terminates(self):
        report = recursive_commutator_chain(bump_on_eighth_quarter(), [throwing_map()])
        assert report.reached_identity and len(report.steps) == 1

    def test_identity_start_rejected(self):
        with pytest.raises(IdentityInputError):
            recursive_commutator_chain(PLMapInterval.identity(), [])

    def test_generic_pick_reports_support(self):
        rng = Random(3)
        g = random_bump(rng, F(1, 4), F(3, 4))
        u = PLMapInterval.from_points([(0, 0), (F(1, 2), F(5, 8)), (1, 1)])
        report = recursive_commutator_chain(g, [u, u])
        assert not report.steps[0].support.is_empty()
        if not report.reached_identity:
            assert len(report.steps) == 2

    def test_exhaustion_without_identity(self):
        rng = Random(5)
        for _ in range(10):
            g = random_bump(rng, F(1, 8), F(7, 8), max_breaks=2)
            if g.is_identity():
                continue
            u = random_bump(rng, F(1, 16), F(15, 16), max_breaks=2)
            report = recursive_commutator_chain(g, [u])
            # either the commutator vanished or the report says it did not
            assert report.reached_identity == report.final.is_identity()
