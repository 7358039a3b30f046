import pytest

from cubictrace.wieferich import (
    CubicOrderSpec,
    higher_tangent,
    is_inert,
    norm_int,
    scan,
    wieferich_test,
)

SPEC = CubicOrderSpec((-1, -1, 0), (0, 1, 0))  # g = t^3 - t - 1, eta = t


def test_norm_validation():
    assert norm_int(SPEC.g, (0, 1, 0)) == 1
    with pytest.raises(ValueError):
        CubicOrderSpec((-1, -1, 0), (2, 0, 0))  # norm 8


def test_is_inert():
    assert not is_inert(SPEC.g, 5)  # root at 2
    assert (2**3 - 2 - 1) % 5 == 0
    assert is_inert(SPEC.g, 13)
    # reducible over Z is never inert: g = (t-1)(t^2+1) = t^3 - t^2 + t - 1
    g_red = (-1, 1, -1)
    for p in (5, 7, 11, 13):
        assert not is_inert(g_red, p)
    with pytest.raises(ValueError):
        is_inert(SPEC.g, 23)  # ramified: disc = -23


def test_wieferich_report_p13():
    rep = wieferich_test(SPEC, 13)
    assert rep.inert and rep.P == 183
    assert (13**3 - 1) % rep.P == 0
    assert rep.scalar_checks_agree
    assert not rep.wieferich  # omega nonzero here
    assert rep.omega != (0, 0, 0)


def test_higher_tangent_non_wieferich():
    r, omega_r, nonscalar = higher_tangent(SPEC, 13)
    assert r == 1 and nonscalar
    assert omega_r == wieferich_test(SPEC, 13).omega


def test_scan_range():
    reports = scan(SPEC, 5, 200)
    inert = [r for r in reports if r.inert]
    assert inert, "some inert primes must appear"
    for rep in inert:
        assert rep.scalar_checks_agree
        assert rep.P is not None and (rep.p**3 - 1) % rep.P == 0 and rep.P % rep.p != 0
        if not rep.indeterminate:
            assert rep.nonscalar_check
            assert (rep.r >= 2) == rep.wieferich
    ramified = [r for r in reports if r.reason == "ramified"]
    assert [r.p for r in ramified] == [23]
    non_inert = [r for r in reports if r.reason == "not inert"]
    assert 5 in {r.p for r in non_inert}


def test_constructed_wieferich_like_unit():
    # eta = (1 + p*t)^adjust has no reason to be norm-one; instead take a unit
    # eta with eta^P = 1 mod p^2 built from a norm-one element of the completed
    # order: use eta = u^(p^2) type construction inside a scan of small units.
    # Here we simply check the three-way agreement on every inert prime for a
    # second order and unit.
    g = (1, -3, 0)  # t^3 - 3t + 1, disc = 81 (ramified only at 3)
    eta = (0, 1, 0)  # norm(t) = -g0 = -1 -> not norm one; use t^2 instead?
    assert norm_int(g, eta) == -1
    eta2 = (-1, 1, 0)  # t - 1; norm = -g(1) = 1
    spec = CubicOrderSpec(g, eta2)
    for rep in scan(spec, 5, 100):
        if rep.inert and not rep.indeterminate:
            assert rep.scalar_checks_agree and rep.nonscalar_check
