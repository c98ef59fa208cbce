#!/usr/bin/env python
# coding=utf-8

import random
import time

from fractions import Fraction

import pytest

from .bundles import (
    AffineScheme,
    BrieskornParameterError,
    CompleteIntersectionCenter,
    IsomorphismCertificate,
    RegularMap,
    ResolutionChangeRejected,
    UnverifiedCenter,
    Verification,
    affine_space,
    brieskorn,
    build_total_space,
    gm_weight_check,
    lift_pair_isomorphism,
    make_resolution_change,
    monomial_center,
    resolution_change,
    verify_ga_action,
    verify_pair_isomorphism,
    verify_support,
)
from .groebner import Budget
from .ideals import Ideal, ideal_equality


def _plane():
    plane = affine_space(("x", "y"), name="A2")
    return (plane,) + plane.ring.gens()


def _center(scheme, f, g, point=None):
    point = point if point is not None else (0,) * scheme.ring.ngens
    return CompleteIntersectionCenter(scheme, f, g, point)


def _verified(scheme, f, g, point=None):
    report = verify_support(_center(scheme, f, g, point))
    assert report.passed, report.detail
    return report.center


def _swap(plane):
    x, y = plane.ring.gens()
    return IsomorphismCertificate(
        RegularMap(plane, plane, (y, x), name="swap"),
        RegularMap(plane, plane, (y, x), name="swap"),
    )


def _identity(plane):
    return IsomorphismCertificate(
        RegularMap.identity(plane), RegularMap.identity(plane)
    )


def test_verification_verdicts():

    ok = Verification("passed", (("a", True), ("b", True)))
    assert ok.passed and not ok.failed_checks()
    bad = Verification("failed", (("a", True), ("b", False), ("c", None)))
    assert not bad.passed
    assert bad.failed_checks() == ["b"]
    assert Verification("pairs-isomorphic").passed
    assert not Verification("center-mismatch").passed


def test_support():

    plane, x, y = _plane()
    report = verify_support(_center(plane, x, y))
    assert report.verdict == "verified"
    assert report.center.verified
    assert not report.failed_check

    for m in range(1, 4):
        for n in range(1, 4):
            assert verify_support(monomial_center(plane, m, n)).passed

    report = verify_support(_center(plane, x, x + 1))
    assert report.verdict == "failed"
    assert report.failed_check == "nonempty"
    assert not report.center.verified

    report = verify_support(_center(plane, x, plane.ring.zero()))
    assert report.failed_check == "zero-dimensional"

    report = verify_support(_center(plane, x - 1, y))
    assert report.failed_check == "support-point"
    assert verify_support(_center(plane, x - 1, y, (1, 0))).passed


def test_support_budget():

    plane, x, y = _plane()
    center = _center(plane, x ** 2 + y ** 3 - x * y, x * y ** 2 - y + x ** 2)
    budget = Budget(timeout=0.0)
    time.sleep(0.001)
    report = verify_support(center, budget=budget)
    assert report.verdict == "indeterminate"
    assert not report.center.verified


def test_center_validation():

    plane, x, y = _plane()
    with pytest.raises(ValueError):
        _center(plane, x, y, (0, 0, 0))
    other = affine_space(("x", "z"))
    with pytest.raises(ValueError):
        _center(plane, other.ring.gen("z"), y)


def test_build_total_space():

    plane, x, y = _plane()

    with pytest.raises(UnverifiedCenter):
        build_total_space(plane, _center(plane, x, y))

    space = build_total_space(plane, _verified(plane, x, y))
    ring = space.total.ring
    assert ring.variables == ("x", "y", "U", "V")
    X, Y, U, V = ring.gens()
    assert space.total.ideal.generators == (X * V - Y * U - 1,)
    assert space.equation == X * V - Y * U - 1
    assert space.total.contains_point((1, 0, 0, 1))
    assert not space.total.contains_point((0, 0, 0, 0))

    # exploratory builds over unverified centers are allowed on request
    loose = build_total_space(plane, _center(plane, x, x + 1), override=True)
    assert not loose.center.verified
    assert not loose.total.is_empty()

    space = build_total_space(plane, monomial_center(plane, 2, 3), override=True)
    X, Y, U, V = space.total.ring.gens()
    assert space.total.ideal.generators == (X ** 2 * V - Y ** 3 * U - 1,)

    with pytest.raises(ValueError):
        build_total_space(affine_space(("x", "U")), _center(plane, x, y), override=True)


def test_build_over_brieskorn():

    surface = brieskorn(2, 3, 7)
    x, y, z = surface.ring.gens()
    center = _verified(surface, x ** 2, y ** 3)
    space = build_total_space(surface, center)
    X, Y, Z, U, V = space.total.ring.gens()
    assert space.total.ideal.generators == (
        X ** 2 + Y ** 3 + Z ** 7,
        X ** 2 * V - Y ** 3 * U - 1,
    )
    assert space.total.dimension() == 3


def test_ga_action():

    plane, x, y = _plane()
    for f, g in ((x, y), (x ** 2, y ** 3)):
        space = build_total_space(plane, _verified(plane, f, g))
        report = verify_ga_action(space)
        assert report.verdict == "passed"
        assert dict(report.checks) == {
            "invariance": True,
            "action-law": True,
            "fixed-point-free": True,
        }

    surface = brieskorn(2, 3, 7)
    x, y, z = surface.ring.gens()
    space = build_total_space(surface, _verified(surface, x, y))
    assert verify_ga_action(space).passed


def test_ga_invariance_is_an_identity():

    rng = random.Random(99)
    plane, x, y = _plane()
    ring = plane.ring

    def random_poly():
        p = ring.zero()
        for _ in range(rng.randint(1, 4)):
            i = rng.randint(0, 3)
            j = rng.randint(0, 3 - i)
            p = p + ring.monomial((i, j), rng.randint(-3, 3))
        return p

    for _ in range(15):
        space = build_total_space(
            plane, _center(plane, random_poly(), random_poly()), override=True
        )
        checks = dict(verify_ga_action(space, budget=Budget(steps=200)).checks)
        assert checks["invariance"] is True
        assert checks["action-law"] is True


def test_total_spaces_are_smooth():

    plane, x, y = _plane()
    for f, g in ((x, y), (x ** 2, y ** 3)):
        space = build_total_space(plane, _verified(plane, f, g))
        assert space.total.smoothness().status == "smooth"

    surface = brieskorn(2, 3, 7)
    x, y, z = surface.ring.gens()
    for f, g in ((x, y), (x, y ** 2)):
        space = build_total_space(surface, _verified(surface, f, g))
        verdict = space.total.smoothness()
        assert verdict.status == "smooth"
        assert verdict.dimension == 3


def test_regular_maps():

    plane, x, y = _plane()
    line = AffineScheme(plane.ring, Ideal(plane.ring, [x]), name="line")

    with pytest.raises(ValueError):
        RegularMap(plane, plane, (x,))

    shift = RegularMap(plane, plane, (x + 1, y))
    assert shift.apply((1, 2)) == (2, 2)
    assert shift.pullback(x * y) == (x + 1) * y
    back = RegularMap(plane, plane, (x - 1, y))
    assert back.compose(shift).is_identity()
    assert not shift.is_identity()

    # into the line: only maps with first component in the ideal are fine
    assert RegularMap(plane, line, (plane.ring.zero(), y)).is_well_defined()
    assert not RegularMap(plane, line, (x, y)).is_well_defined()
    # on the line, x = 0 modulo its ideal
    assert RegularMap(line, line, (2 * x, y)).is_identity()
    assert str(shift) == "(x, y) -> (x + 1, y)"


def test_resolution_change_examples():

    plane, x, y = _plane()
    center = _verified(plane, x, y)

    result = resolution_change(plane, center, ((1, 0), (0, 1)))
    assert result.report.verdict == "passed"
    assert (result.center.f, result.center.g) == (x, y)
    assert result.center.verified
    fwd = result.automorphism.forward
    assert fwd.components == fwd.source.ring.gens()

    result = resolution_change(plane, center, ((0, 1), (1, 0)))
    assert result.report.passed
    assert (result.center.f, result.center.g) == (y, x)
    X, Y, U, V = result.automorphism.forward.source.ring.gens()
    assert result.automorphism.forward.components == (X, Y, -V, -U)

    result = resolution_change(plane, center, ((1, y), (0, 1)))
    assert result.report.passed
    assert (result.center.f, result.center.g) == (x + y ** 2, y)
    X, Y, U, V = result.automorphism.forward.source.ring.gens()
    assert result.automorphism.forward.components == (X, Y, U - Y * V, V)
    checks = dict(result.report.checks)
    assert checks["equation"] and checks["center-ideal"]
    assert checks["inverse-after-forward"] and checks["forward-after-inverse"]


def test_resolution_change_rejections():

    plane, x, y = _plane()
    center = _verified(plane, x, y)

    with pytest.raises(ResolutionChangeRejected) as e:
        resolution_change(plane, center, ((x, 0), (0, 1)))
    assert "not a nonzero constant" in str(e.value)
    with pytest.raises(ResolutionChangeRejected) as e:
        resolution_change(plane, center, ((1, y), (1, y)))
    assert "vanishes" in str(e.value)

    # a determinant that is a unit only modulo the base ideal is accepted
    surface = AffineScheme(plane.ring, Ideal(plane.ring, [x * y - 1]), name="C*")
    change = make_resolution_change(surface, ((x * y, 0), (0, 1)))
    assert change.delta == 1


def _matmul(m1, m2):
    (a, b), (c, d) = m1
    (e, f), (g, h) = m2
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _random_unimodular(rng, ring):
    # a constant diagonal matrix times one shear, optionally swapped
    p = ring.zero()
    for _ in range(rng.randint(1, 3)):
        i = rng.randint(0, 2)
        j = rng.randint(0, 2 - i)
        p = p + ring.monomial((i, j), Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
    one, zero = ring.one(), ring.zero()
    shear = ((one, p), (zero, one)) if rng.random() < 0.5 else ((one, zero), (p, one))
    c1, c2 = (
        Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)) for _ in "ab"
    )
    diagonal = ((one * c1, zero), (zero, one * c2))
    m = _matmul(diagonal, shear)
    if rng.random() < 0.3:
        m = _matmul(((zero, one), (one, zero)), m)
    return m


def test_random_resolution_changes():

    rng = random.Random(4242)
    plane, x, y = _plane()
    center = _verified(plane, x, y)
    for _ in range(50):
        matrix = _random_unimodular(rng, plane.ring)
        result = resolution_change(plane, center, matrix)
        assert result.report.verdict == "passed", result.report.failed_checks()
        assert result.center.verified


def test_resolution_change_composes():

    rng = random.Random(7)
    plane, x, y = _plane()
    center = _verified(plane, x, y)
    for _ in range(5):
        m1 = _random_unimodular(rng, plane.ring)
        m2 = _random_unimodular(rng, plane.ring)
        twice = resolution_change(
            plane, resolution_change(plane, center, m1).center, m2
        ).center
        once = resolution_change(plane, center, _matmul(m2, m1)).center
        assert ideal_equality(
            Ideal(plane.ring, [twice.f, twice.g]), Ideal(plane.ring, [once.f, once.g])
        )


def test_pair_isomorphism():

    plane, x, y = _plane()

    left = (plane, _verified(plane, x, y ** 2))
    right = (plane, _verified(plane, x ** 2, y))
    report = verify_pair_isomorphism(left, right, _swap(plane))
    assert report.verdict == "pairs-isomorphic"
    assert dict(report.witness)["f''"] == "y^2"

    same = (plane, _verified(plane, x, y))
    assert verify_pair_isomorphism(same, same, _identity(plane)).passed

    left = (plane, _verified(plane, x ** 2, y ** 3))
    right = (plane, _verified(plane, x ** 3, y ** 2))
    report = verify_pair_isomorphism(left, right, _identity(plane))
    assert report.verdict == "center-mismatch"
    assert not report.passed


def test_identity_certificate_is_ideal_equality():

    plane, x, y = _plane()
    centers = [monomial_center(plane, m, n) for m in (1, 2) for n in (1, 2)]
    centers.append(_center(plane, x + y, x - y))
    for c1 in centers:
        for c2 in centers:
            report = verify_pair_isomorphism((plane, c1), (plane, c2), _identity(plane))
            expected = ideal_equality(c1.ideal(), c2.ideal())
            assert (report.verdict == "pairs-isomorphic") == expected


def test_invalid_certificates():

    plane, x, y = _plane()
    center = (plane, _verified(plane, x, y))
    broken = IsomorphismCertificate(
        RegularMap.identity(plane), RegularMap(plane, plane, (2 * x, y))
    )
    report = verify_pair_isomorphism(center, center, broken)
    assert report.verdict == "certificate-invalid"
    assert "inverse-after-forward" in report.failed_checks()

    with pytest.raises(ValueError):
        IsomorphismCertificate(
            RegularMap(plane, brieskorn(2, 3, 7), (x, y, 0)), RegularMap.identity(plane)
        )


def test_certificate_between_other_schemes():

    space = affine_space(("x", "y", "z"))
    x, y, z = space.ring.gens()
    identity = IsomorphismCertificate(
        RegularMap.identity(space), RegularMap.identity(space)
    )
    assert identity.verify().passed

    s237, s2311 = brieskorn(2, 3, 7), brieskorn(2, 3, 11)
    left = (s237, _center(s237, x, y))
    right = (s2311, _center(s2311, x, y))
    report = verify_pair_isomorphism(left, right, identity)
    assert report.verdict == "certificate-invalid"
    assert not report.passed
    assert dict(report.checks) == {"source-base": False, "target-base": False}

    lifted = lift_pair_isomorphism(left, right, identity)
    assert lifted.report.verdict == "certificate-invalid"
    assert lifted.certificate is None

    # the same surface presented by another generating set is accepted
    F = x ** 2 + y ** 3 + z ** 7
    scaled = AffineScheme(space.ring, Ideal(space.ring, [2 * F]), "2S")
    maps = (RegularMap.identity(scaled), RegularMap.identity(scaled))
    report = verify_pair_isomorphism(
        (scaled, _center(scaled, x, y)), left, IsomorphismCertificate(*maps)
    )
    assert dict(report.checks)["target-base"] is True

    # a center on another surface is a contract violation
    with pytest.raises(ValueError):
        verify_pair_isomorphism((s2311, left[1]), right, identity)


def test_lifted_isomorphism():

    plane, x, y = _plane()
    left = (plane, _verified(plane, x, y ** 2))
    right = (plane, _verified(plane, x ** 2, y))
    lifted = lift_pair_isomorphism(left, right, _swap(plane))
    assert lifted.report.verdict == "isomorphic"
    assert lifted.certificate is not None
    assert lifted.certificate.source.variables == ("x", "y", "U", "V")
    assert lifted.certificate.verify().passed

    # a center mismatch never turns into a claim either way
    left = (plane, _verified(plane, x ** 2, y ** 3))
    right = (plane, _verified(plane, x ** 3, y ** 2))
    lifted = lift_pair_isomorphism(left, right, _identity(plane))
    assert lifted.report.verdict == "indeterminate"
    assert lifted.report.reason == "center-mismatch"
    assert lifted.certificate is None


def test_brieskorn():

    surface = brieskorn(2, 3, 7)
    assert surface.name == "S(2,3,7)"
    assert surface.singular_points == ((0, 0, 0),)
    x, y, z = surface.ring.gens()
    assert surface.ideal.generators == (x ** 2 + y ** 3 + z ** 7,)
    assert surface.smoothness().status == "singular"

    with pytest.raises(BrieskornParameterError) as e:
        brieskorn(2, 4, 5)
    assert "gcd(p, q) = gcd(2, 4) = 2" in str(e.value)
    with pytest.raises(BrieskornParameterError) as e:
        brieskorn(2, 3, 5)
    assert "31/30" in str(e.value)
    with pytest.raises(BrieskornParameterError):
        brieskorn(1, 3, 7)


@pytest.mark.parametrize("p,q,r", [(2, 3, 7), (2, 3, 11), (3, 4, 5)])
def test_gm_weights(p, q, r):

    report = gm_weight_check(p, q, r, m=2, n=3)
    assert report.verdict == "passed"
    assert dict(report.checks) == {
        "equation": True,
        "center": True,
        "unit-weight": True,
    }
    witness = dict(report.witness)
    assert witness["degree"] == str(p * q * r)
    assert witness["weights"] == "(%d, %d, %d)" % (q * r, p * r, p * q)
    assert "does not preserve" in witness["printed z-weight"]


def test_gm_weights_reject():

    with pytest.raises(BrieskornParameterError):
        gm_weight_check(2, 4, 5)
    with pytest.raises(ValueError):
        gm_weight_check(2, 3, 7, m=0)
