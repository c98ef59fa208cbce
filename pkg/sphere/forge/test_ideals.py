#!/usr/bin/env python
# coding=utf-8

import itertools
import random

import pytest

from .groebner import Budget, BudgetExhausted, clear_cache, normal_form
from .ideals import (
    Ideal,
    MembershipCertificate,
    determinant,
    dimension,
    eliminate,
    ideal_equality,
    ideal_membership,
    jacobian_matrix,
    minors,
    radical_membership,
    smoothness_check,
    variety_is_empty,
    verify_membership_certificate,
)
from .polyring import PolynomialRing, RingMismatch


def _ring(*names):
    R = PolynomialRing(names)
    return (R,) + R.gens()


def test_ideal_drops_zero_generators():

    R, x, y = _ring("x", "y")
    I = Ideal(R, [x, R.zero(), 0, y])
    assert I.generators == (x, y)
    assert len(Ideal(R, [0])) == 0
    assert str(I) == "(x, y)"
    assert (I + [x * y]).generators == (x, y, x * y)

    S = PolynomialRing(("x", "z"))
    with pytest.raises(RingMismatch):
        Ideal(R, [S.gen("z")])


def test_membership():

    R, x, y = _ring("x", "y")
    assert ideal_membership(y, Ideal(R, [x, y]))[0] is True
    assert ideal_membership(x + 1, Ideal(R, [x]))[0] is False
    assert ideal_membership(x, Ideal(R, [x ** 2]))[0] is False
    assert ideal_membership(R.zero(), Ideal(R, []))[0] is True
    assert ideal_membership(x, Ideal(R, []))[0] is False


def test_membership_certificates():

    R, x, y = _ring("x", "y")
    I = Ideal(R, [x ** 2 - y, x * y - 1])
    h = x ** 3 - 1
    member, cert = ideal_membership(h, I, certificate=True)
    assert member
    assert cert.target == h
    assert cert.generators == I.generators
    assert cert.expand() == h
    assert verify_membership_certificate(cert, I)

    # a tampered certificate no longer expands to the target
    bad = MembershipCertificate(
        h, (cert.cofactors[0] + 1, cert.cofactors[1]), cert.generators
    )
    assert not verify_membership_certificate(bad)
    # nor does a certificate over another generating set
    assert not verify_membership_certificate(cert, Ideal(R, [x * y - 1, x ** 2 - y]))

    member, cert = ideal_membership(x + 1, I, certificate=True)
    assert not member and cert is None


def test_membership_agrees_with_normal_form():

    R, x, y, z = _ring("x", "y", "z")
    I = Ideal(R, [x * y - z, y * z - x])
    gb = I.groebner()
    candidates = [
        x * y - z,
        x ** 2 * y - x * z,
        x - y,
        z * (y * z - x) + 3 * (x * y - z),
    ]
    for h in candidates:
        member, cert = ideal_membership(h, I, certificate=True)
        assert member == normal_form(h, gb.elements).is_zero()
        if member:
            assert cert.verify()


def test_radical_membership():

    R, x = _ring("x")
    assert radical_membership(x, Ideal(R, [x ** 2]))

    R, x, y, z = _ring("x", "y", "z")
    assert not radical_membership(z, Ideal(R, [x, y]))
    assert radical_membership(x + y, Ideal(R, [(x + y) ** 3]))

    # the fresh variable avoids clashes with a ring that already has t
    R, t, u = _ring("t", "u")
    assert radical_membership(t, Ideal(R, [t ** 3, u]))
    assert not radical_membership(t + 1, Ideal(R, [t ** 3, u]))


def test_radical_membership_is_monotone():

    rng = random.Random(11)
    R, x, y = _ring("x", "y")
    for _ in range(10):
        f = x ** rng.randint(1, 3) - rng.randint(-2, 2) * y
        g = y ** rng.randint(1, 2) + rng.randint(-2, 2) * x
        I = Ideal(R, [f, g])
        for h in (f * x, g * y + f, f * g):
            assert ideal_membership(h, I)[0]
            assert radical_membership(h, I)


def test_equality():

    R, x, y = _ring("x", "y")
    assert ideal_equality(Ideal(R, [x, y]), Ideal(R, [y, x + y]))
    assert not ideal_equality(Ideal(R, [x ** 2, y]), Ideal(R, [x, y]))

    with pytest.raises(RingMismatch):
        ideal_equality(Ideal(R, [x]), Ideal(PolynomialRing(("x", "z")), []))


def test_monomial_ideal_equality_table():

    R, x, y = _ring("x", "y")
    exponents = list(itertools.product(range(1, 5), repeat=2))
    ideals = {(m, n): Ideal(R, [x ** m, y ** n]) for m, n in exponents}
    for a, b in itertools.product(exponents, repeat=2):
        assert ideal_equality(ideals[a], ideals[b]) == (a == b)


def test_equality_is_an_equivalence():

    R, x, y = _ring("x", "y")
    pool = [
        Ideal(R, [x, y]),
        Ideal(R, [x + y, x - y]),
        Ideal(R, [x ** 2, y]),
        Ideal(R, [x ** 2 + y, y]),
        Ideal(R, [x * y]),
        Ideal(R, [x * y, x * y + x * y ** 2]),
    ]
    for a in pool:
        assert ideal_equality(a, a)
        for b in pool:
            assert ideal_equality(a, b) == ideal_equality(b, a)
            for c in pool:
                if ideal_equality(a, b) and ideal_equality(b, c):
                    assert ideal_equality(a, c)


def test_eliminate():

    R, t, x, y = _ring("t", "x", "y")
    out = eliminate(Ideal(R, [x - t, y - t ** 2]), ["t"])
    assert out.ring.variables == ("x", "y")
    X, Y = out.ring.gens()
    assert ideal_equality(out, Ideal(out.ring, [Y - X ** 2]))
    # the result lies in the input ideal
    gb = Ideal(R, [x - t, y - t ** 2]).groebner()
    for g in out:
        assert gb.contains(g.to_ring(R))

    I = Ideal(R, [x - t, y])
    assert ideal_equality(eliminate(I, []), I)

    R, x, y = _ring("x", "y")
    assert len(eliminate(Ideal(R, [x]), ["x"])) == 0
    with pytest.raises(RingMismatch):
        eliminate(Ideal(R, [x]), ["z"])


def test_dimension():

    R, x, y = _ring("x", "y")
    assert dimension(Ideal(R, [x, y])) == 0
    assert dimension(Ideal(R, [x, x - 1])) == -1
    assert dimension(Ideal(R, [])) == 2

    R, x, y, z = _ring("x", "y", "z")
    assert dimension(Ideal(R, [x ** 2 + y ** 3 + z ** 7])) == 2
    assert dimension(Ideal(R, [x * y, x * z])) == 2


def test_hypersurface_dimension():

    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 4)
        R = PolynomialRing(["x%d" % i for i in range(n)])
        p = R.zero()
        while p.is_constant():
            p = R.constant(rng.randint(-3, 3))
            for _ in range(rng.randint(1, 3)):
                exps = [rng.randint(0, 2) for _ in range(n)]
                p = p + R.monomial(exps, rng.randint(-3, 3))
        assert dimension(Ideal(R, [p])) == n - 1


def test_variety_is_empty():

    R, x, y, U, V = _ring("x", "y", "U", "V")
    assert variety_is_empty(Ideal(R, [x, x - 1]))
    assert not variety_is_empty(Ideal(R, [x]))
    assert variety_is_empty(Ideal(R, [x * V - y * U - 1, x, y]))


def test_jacobian_helpers():

    R, x, y = _ring("x", "y")
    J = jacobian_matrix([x ** 2 * y, x + y], ("x", "y"))
    assert J == [[2 * x * y, x ** 2], [R.one(), R.one()]]
    assert determinant(J) == 2 * x * y - x ** 2
    assert determinant([[R.zero(), R.zero()], [x, y]]) == 0
    assert minors(J, 1) == [2 * x * y, x ** 2, R.one(), R.one()]
    assert minors([], 2) == []


def test_smoothness():

    R, x, y, U, V = _ring("x", "y", "U", "V")
    verdict = smoothness_check(Ideal(R, [x * V - y * U - 1]), 4)
    assert verdict.status == "smooth"
    assert verdict.passed
    assert (verdict.dimension, verdict.codimension) == (3, 1)

    R, x = _ring("x")
    verdict = smoothness_check(Ideal(R, [x ** 2]))
    assert verdict.status == "singular"
    assert ideal_equality(verdict.witness, Ideal(R, [x]))


def test_brieskorn_singular_locus():

    R, x, y, z = _ring("x", "y", "z")
    verdict = smoothness_check(Ideal(R, [x ** 2 + y ** 3 + z ** 7]), 3)
    assert verdict.status == "singular"
    witness = verdict.witness
    for v in (x, y, z):
        assert radical_membership(v, witness)
    for g in witness:
        assert g.value((0, 0, 0)) == 0


@pytest.mark.parametrize("k", [2, 3, 4])
def test_spheres_are_smooth(k):

    R = PolynomialRing(["x%d" % i for i in range(1, k + 1)])
    sphere = sum((g ** 2 for g in R.gens()), R.zero()) - 1
    verdict = smoothness_check(Ideal(R, [sphere]), k)
    assert verdict.status == "smooth"
    assert verdict.dimension == k - 1


def test_smoothness_edge_cases():

    R, x, y, z = _ring("x", "y", "z")
    # three generators for a codimension-two curve
    verdict = smoothness_check(Ideal(R, [x, y, x + y]))
    assert verdict.status == "indeterminate"
    assert verdict.reason == "non-complete-intersection"

    with pytest.raises(ValueError):
        smoothness_check(Ideal(R, [x, x - 1]))
    with pytest.raises(ValueError):
        smoothness_check(Ideal(R, [x]), 4)

    clear_cache()
    verdict = smoothness_check(
        Ideal(R, [x ** 2 + y ** 3 + z ** 7]), budget=Budget(steps=0)
    )
    assert verdict.status == "indeterminate"
    assert verdict.reason == "budget"


def test_budget_propagates():

    clear_cache()
    R, x, y = _ring("x", "y")
    with pytest.raises(BudgetExhausted):
        ideal_equality(
            Ideal(R, [x ** 2 - y, x * y - 1]),
            Ideal(R, [x ** 3 - 1, y - x ** 2]),
            budget=Budget(steps=0),
        )
