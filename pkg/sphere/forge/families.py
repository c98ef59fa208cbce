#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The diagonal family over the affine plane.

The family is the hypersurface ``(x2 - x1) V - (y2 - y1) U = 1`` of
``A^6``, fibered over the plane of ``(x1, y1)``.  Its fiber over a point
``p`` is the threefold built over the plane with the center ``(x - p1,
y - p2)``, and the whole family is trivial: it is isomorphic to the product
of the plane and ``SL(2)``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .bundles import (
    AffineScheme,
    CompleteIntersectionCenter,
    IsomorphismCertificate,
    RegularMap,
    Verification,
    _guarded,
    _verdict,
    affine_space,
    build_total_space,
    verify_support,
)
from .groebner import BudgetExhausted
from .ideals import (
    Ideal,
    SmoothnessVerdict,
    ideal_equality,
    smoothness_check,
    variety_is_empty,
)
from .log import get_logger
from .polyring import PolynomialRing

logger = get_logger(__name__)


VARIABLES = ("x1", "y1", "x2", "y2", "U", "V")
"""Coordinates of the family's ambient space"""

PRODUCT_VARIABLES = ("s1", "s2", "a", "b", "U", "V")
"""Coordinates of the plane times ``SL(2)``"""


@dataclass(frozen=True)
class DiagonalFamily:
    """The family ``W`` with its base projection to ``(x1, y1)``"""

    total: AffineScheme
    base_projection: tuple = ("x1", "y1")
    smoothness: SmoothnessVerdict = field(default=None, compare=False)

    @property
    def generator(self):
        return self.total.ideal.generators[0]


def build_diagonal_family(budget=None, check=True):
    """Builds the family and (optionally) checks it is smooth of dimension 5"""

    ring = PolynomialRing(VARIABLES)
    x1, y1, x2, y2, U, V = ring.gens()
    F = (x2 - x1) * V - (y2 - y1) * U - 1
    total = AffineScheme(ring, Ideal(ring, [F]), name="W")
    verdict = None
    if check:
        verdict = smoothness_check(total.ideal, budget=budget)
        logger.info(
            "diagonal family: %s, dimension %s", verdict.status, verdict.dimension
        )
    return DiagonalFamily(total, smoothness=verdict)


def product_with_sl2():
    """The plane times ``SL(2) = {aV - bU = 1}``"""

    ring = PolynomialRing(PRODUCT_VARIABLES)
    s1, s2, a, b, U, V = ring.gens()
    return AffineScheme(ring, Ideal(ring, [a * V - b * U - 1]), name="A2 x SL2")


def trivialization(family):
    """The isomorphism ``W -> A2 x SL2`` and its inverse"""

    W = family.total
    x1, y1, x2, y2, U, V = W.ring.gens()
    target = product_with_sl2()
    s1, s2, a, b, U2, V2 = target.ring.gens()
    phi = RegularMap(W, target, (x1, y1, x2 - x1, y2 - y1, U, V), name="Phi")
    psi = RegularMap(target, W, (s1, s2, a + s1, b + s2, U2, V2), name="Psi")
    return IsomorphismCertificate(phi, psi, name="trivialization")


def verify_trivialization(family=None):
    """Checks the trivialization with exact polynomial identities

    Checks: ``pullback`` (the product equation pulls back to the family's
    generator), ``inverse-pullback``, both composites being coordinate-wise
    identities, ``base-projection`` (the plane coordinates are untouched) and
    ``sample-point`` (a point of ``W`` lands on ``A2 x SL2``).
    """

    family = family or build_diagonal_family(check=False)
    cert = trivialization(family)
    phi, psi = cert.forward, cert.inverse
    W, target = phi.source, phi.target
    F = family.generator
    G = target.ideal.generators[0]

    checks = [
        ("pullback", phi.pullback(G) == F),
        ("inverse-pullback", psi.pullback(F) == G),
        (
            "inverse-after-forward",
            psi.compose(phi).components == W.ring.gens(),
        ),
        (
            "forward-after-inverse",
            phi.compose(psi).components == target.ring.gens(),
        ),
        (
            "base-projection",
            phi.components[:2] == W.ring.gens()[:2]
            and psi.components[:2] == target.ring.gens()[:2],
        ),
    ]
    sample = (0, 0, 1, 0, 0, 1)
    image = phi.apply(sample)
    checks.append(
        ("sample-point", W.contains_point(sample) and target.contains_point(image))
    )
    verdict = _verdict(checks)
    logger.info("trivialization: %s", verdict)
    return Verification(
        verdict,
        tuple(checks),
        (
            ("Phi", str(phi)),
            ("Psi", str(psi)),
            (
                "sample",
                "(%s) -> (%s)"
                % (
                    ", ".join(str(c) for c in sample),
                    ", ".join(str(c) for c in image),
                ),
            ),
        ),
    )


@dataclass(frozen=True)
class FiberRestriction:
    """Fiber of the family over ``point`` compared with a direct build

    ``renaming`` records how the direct construction's coordinates were
    renamed into the fiber coordinates.
    """

    family: DiagonalFamily
    point: tuple
    fiber: AffineScheme
    direct: AffineScheme
    renaming: tuple
    equal: bool

    @property
    def passed(self):
        return self.equal is True


def _fiber(family, point):
    p1, p2 = point
    F = family.generator.evaluate({"x1": p1, "y1": p2})
    ring = F.ring
    return AffineScheme(
        ring, Ideal(ring, [F]), name="W(%s, %s)" % (p1, p2)
    )


def restrict_fiber(family, point, budget=None):
    """Restricts the family to ``(x1, y1) = point`` and compares the result
    with the threefold built over the plane with center ``(x - p1, y - p2)``
    """

    point = tuple(Fraction(c) for c in point)
    if len(point) != 2:
        raise ValueError("A point of the plane has two coordinates")
    p1, p2 = point
    fiber = _fiber(family, point)

    plane = affine_space(("x", "y"), name="A2")
    x, y = plane.ring.gens()
    center = CompleteIntersectionCenter(plane, x - p1, y - p2, point)
    support = verify_support(center, budget)
    space = build_total_space(
        plane, support.center, override=not support.passed
    )
    renaming = (("x", "x2"), ("y", "y2"), ("U", "U"), ("V", "V"))
    images = {old: fiber.ring.gen(new) for old, new in renaming}
    renamed = Ideal(
        fiber.ring,
        [g.substitute(images, ring=fiber.ring) for g in space.total.ideal],
    )
    direct = AffineScheme(fiber.ring, renamed, name="V(%s, %s)" % (x - p1, y - p2))
    try:
        equal = ideal_equality(fiber.ideal, direct.ideal, budget)
    except BudgetExhausted as e:
        logger.warning("fiber comparison abandoned: %s", e)
        equal = None
    logger.info("fiber over (%s, %s): equal=%s", p1, p2, equal)
    return FiberRestriction(family, point, fiber, direct, renaming, equal)


def fiber_translation_check(family, point, budget=None):
    """Checks the fiber over ``point`` against ``SL(2)`` through translation

    The trivialization with the base frozen at ``point`` sends the fiber to
    ``SL(2)``; translating ``x2, y2`` by ``point`` goes back.
    """

    point = tuple(Fraction(c) for c in point)
    p1, p2 = point
    fiber = _fiber(family, point)
    ring = fiber.ring
    x2, y2, U, V = ring.gens()
    sl2 = AffineScheme(ring, Ideal(ring, [x2 * V - y2 * U - 1]), name="SL2")

    frozen = RegularMap(fiber, sl2, (x2 - p1, y2 - p2, U, V))
    translation = RegularMap(sl2, fiber, (x2 + p1, y2 + p2, U, V))
    restricted = frozen.pullback(sl2.ideal.generators[0])
    checks = [("restricted-trivialization", restricted == fiber.ideal.generators[0])]
    checks.append(
        (
            "translation-inverse",
            frozen.compose(translation).components == ring.gens()
            and translation.compose(frozen).components == ring.gens(),
        )
    )
    _guarded(
        checks,
        "ideal-equality",
        lambda: ideal_equality(
            Ideal(ring, [translation.pullback(g) for g in fiber.ideal]),
            sl2.ideal,
            budget,
        ),
    )
    verdict = _verdict(checks)
    return Verification(
        verdict,
        tuple(checks),
        (("fiber", str(fiber.ideal)), ("translation", str(translation))),
        reason="budget" if verdict == "indeterminate" else None,
    )


def verify_projection(family, budget=None):
    """Checks the projection to ``(x1, y1)`` is smooth and has a section

    ``smooth``: the relative Jacobian system has no solution.  ``section``:
    ``(x1, y1) -> (x1, y1, x1 + 1, y1, 0, 1)`` lands in the family and is
    split by the projection.
    """

    W = family.total
    F = family.generator
    fiber_coords = [v for v in W.variables if v not in family.base_projection]
    relative = Ideal(W.ring, [F] + [F.derivative(v) for v in fiber_coords])

    checks = []
    _guarded(checks, "smooth", lambda: variety_is_empty(relative, budget))

    plane = affine_space(family.base_projection, name="A2")
    s1, s2 = plane.ring.gens()
    section = RegularMap(plane, W, (s1, s2, s1 + 1, s2, 0, 1), name="section")
    projection = RegularMap(
        W, plane, tuple(W.ring.gen(v) for v in family.base_projection)
    )
    checks.append(("section", section.pullback(F).is_zero()))
    checks.append(
        ("splits", projection.compose(section).components == plane.ring.gens())
    )
    verdict = _verdict(checks)
    return Verification(
        verdict,
        tuple(checks),
        (
            ("relative jacobian", str(relative)),
            ("section", str(section)),
        ),
        reason="budget" if verdict == "indeterminate" else None,
    )
