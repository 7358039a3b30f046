import random
from fractions import Fraction

import pytest
from conftest import canonical_algebras

from cubictrace.algebra import ZpCubicAlgebra
from cubictrace.stats import (
    average_singular,
    cube_class_tally,
    generator_count,
    generator_count_exhaustive,
    jet_family_statistics,
)

GEN_TABLE = {
    ("split", 5): 60,
    ("mixed", 5): 100,
    ("inert", 5): 120,
}


def test_generator_counts_closed_forms():
    for p in (5, 7, 11, 13):
        for name, B in canonical_algebras(p).items():
            closed = generator_count(B)
            assert closed == generator_count_exhaustive(B)
    for (name, p), want in GEN_TABLE.items():
        assert generator_count(canonical_algebras(p)[name]) == want


def test_cube_class_single_class_q2_mod3():
    for p in (5, 11):
        for name, B in canonical_algebras(p).items():
            t = cube_class_tally(B, 1)
            assert t.counts == {0: generator_count(B)}
            assert t.class_bound_ok and t.character_bound_ok


def test_cube_class_tally_q1_mod3():
    for p in (7, 13):
        for name, B in canonical_algebras(p).items():
            for A in (1, 2):
                t = cube_class_tally(B, A)
                assert sum(t.counts.values()) == generator_count(B)
                assert t.class_bound_ok
                assert t.character_bound_ok


def test_cube_class_tally_direct_q7():
    # independent: direct exponent tally over the 210 split generators
    B = canonical_algebras(7)["split"]
    t = cube_class_tally(B, 1)
    direct = {0: 0, 1: 0, 2: 0}
    e3 = 2
    zeta = next(pow(g, e3, 7) for g in range(2, 7) if pow(g, e3, 7) != 1)
    for x in B.elements():
        d = B.disc_charpoly(x)
        if d:
            v = pow(d, e3, 7)
            direct[0 if v == 1 else (1 if v == zeta else 2)] += 1
    assert t.counts == direct


def test_average_singular():
    rng = random.Random(0)
    for p in (5, 11):
        B = canonical_algebras(p)["inert"]
        rep = average_singular(B, (1, 0, 0), 1)
        assert rep.exact_one and rep.average == 1
    for p in (7, 13):
        for name, B in canonical_algebras(p).items():
            units = [x for x in B.elements() if B.is_unit(x)]
            gamma = rng.choice(units)
            rep = average_singular(B, gamma, rng.randrange(1, p))
            assert rep.within_bound
            assert set(rep.values_seen) <= {0, 1, 3}


def singular_class_input(B, u=1, s=2):
    """x = s z0 + u z2 for a unit generator omega; returns (omega, x, s)."""
    w = next(
        x for x in B.elements() if B.is_generator(x) and B.is_unit(x)
    )
    z0, _, z2 = B.trace_dual_basis(w)
    x = B.add(B.scalar_mul(s, z0), B.scalar_mul(u, z2))
    return w, x, s


def test_jet_frequencies_exact():
    for p in (5, 7):
        B = canonical_algebras(p)["inert"]
        w, x, s = singular_class_input(B)
        if B.norm(x) == 0:
            w, x, s = singular_class_input(B, u=2)
        t = jet_family_statistics(B, w, x, s)
        assert t.freq_nonsquare == Fraction(p - 1, 2 * p)
        assert t.freq_square == Fraction(p - 1, 2 * p)
        assert t.freq_zero == Fraction(1, p)
        assert t.uniform
        assert t.surviving == p**5


def test_jet_uniformity_counts():
    p = 5
    B = canonical_algebras(p)["mixed"]
    w, x, s = singular_class_input(B)
    if B.norm(x) == 0:
        w, x, s = singular_class_input(B, u=2)
    t = jet_family_statistics(B, w, x, s)
    for a in range(p):
        for b in range(p):
            assert t.pair_counts.get((a, b), 0) == t.surviving // p**2


def test_jet_lift_shift_invariance():
    # replacing U by U + pV translates the B_y column and keeps frequencies
    p = 5
    B = canonical_algebras(p)["inert"]
    w, x, s = singular_class_input(B)
    if B.norm(x) == 0:
        w, x, s = singular_class_input(B, u=2)
    A = ZpCubicAlgebra(p, 3, B.f)
    rng = random.Random(1)
    V = tuple(rng.randrange(p) for _ in range(3))
    U2 = A.add(A.reduce(w), A.scalar_mul(p, V))
    t1 = jet_family_statistics(B, w, x, s)
    t2 = jet_family_statistics(B, w, x, s, U_lift=U2)
    shift = B.trace(B.mul(B.reduce(x), V))
    moved = {(a, (b + shift) % p): c for (a, b), c in t1.pair_counts.items()}
    assert moved == t2.pair_counts
    assert (t1.freq_nonsquare, t1.freq_square, t1.freq_zero) == (
        t2.freq_nonsquare,
        t2.freq_square,
        t2.freq_zero,
    )


def test_jet_rejects_degenerate():
    B = canonical_algebras(5)["inert"]
    w = next(x for x in B.elements() if B.is_generator(x) and B.is_unit(x))
    z0, _, _ = B.trace_dual_basis(w)
    x = B.scalar_mul(2, z0)  # u = 0: Delta = 0
    with pytest.raises(ValueError):
        jet_family_statistics(B, w, x, 2)


def test_jet_statistics_census_input_agrees():
    # inputs produced through the census singular line match direct inputs
    from cubictrace.census import CensusQuery, singular_census

    B = canonical_algebras(5)["inert"]
    w = next(x for x in B.elements() if B.is_generator(x) and B.is_unit(x))
    z0, _, z2 = B.trace_dual_basis(w)
    s = 1
    rep = singular_census(CensusQuery(B, (1, 0, 0), w, s, tuple(range(1, 5))))
    done = 0
    for delta, us in rep.u_values.items():
        for u in us:
            if u == 0:
                continue
            x = B.add(B.scalar_mul(s, z0), B.scalar_mul(u, z2))
            if B.norm(x) == 0:
                continue
            t = jet_family_statistics(B, w, x, s)
            assert t.freq_zero == Fraction(1, 5)
            done += 1
    assert done > 0
