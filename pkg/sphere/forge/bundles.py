#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Affine schemes, two-generator centers and the threefolds ``fV - gU = 1``.

This module builds total spaces of affine-line bundles over surfaces and
verifies their properties exactly: support of the center, the additive group
action, automorphisms induced by a change of the two generators, and
isomorphism certificates between pairs (surface, center).

Verification functions never raise on a failed check.  They return a
:py:class:`Verification` carrying a verdict and one entry per exact check.
Running out of budget turns a check into ``None`` and the verdict into
``indeterminate``.
"""

import dataclasses
import math

from dataclasses import dataclass, field
from fractions import Fraction

from .groebner import BudgetExhausted
from .ideals import (
    Ideal,
    dimension,
    ideal_equality,
    ideal_membership,
    radical_membership,
    smoothness_check,
    variety_is_empty,
)
from .log import get_logger
from .polyring import Polynomial, PolynomialRing, RingMismatch

logger = get_logger(__name__)


class UnverifiedCenter(ValueError):
    """Raised when building over a center whose support was not verified"""


class ResolutionChangeRejected(ValueError):
    """Raised when a matrix is not invertible over the base"""


class BrieskornParameterError(ValueError):
    """Raised when exponents violate the Brieskorn surface hypotheses"""


PASSING = ("passed", "verified", "pairs-isomorphic", "isomorphic", "smooth")
"""Verdicts that count as a successful verification"""


@dataclass(frozen=True)
class Verification:
    """Outcome of a verification

    Attributes:

      verdict (str): overall verdict, see :py:data:`PASSING`
      checks (tuple): ``(name, outcome)`` pairs, outcome is ``True``,
        ``False`` or ``None`` (not decided)
      witness (tuple): ``(name, text)`` pairs of supporting data
      reason (str): why the verdict is not decisive, if it is not
    """

    verdict: str
    checks: tuple = ()
    witness: tuple = ()
    reason: str = None

    @property
    def passed(self):
        return self.verdict in PASSING

    def failed_checks(self):
        return [name for name, ok in self.checks if ok is False]


def _verdict(checks, success="passed"):
    if any(ok is False for _, ok in checks):
        return "failed"
    if any(ok is None for _, ok in checks):
        return "indeterminate"
    return success


def _guarded(checks, name, func):
    """Appends ``(name, func())``, recording ``None`` on budget exhaustion"""

    try:
        ok = bool(func())
    except BudgetExhausted as e:
        logger.warning("check %s abandoned: %s", name, e)
        ok = None
    checks.append((name, ok))
    return ok


def _point(values):
    return tuple(Fraction(v) for v in values)


class AffineScheme(object):
    """A closed subscheme of affine space given by an ideal

    Parameters:

      ring (PolynomialRing): coordinates of the ambient affine space
      ideal (Ideal, Optional): defining ideal, the zero ideal when omitted
      name (str, Optional): label used in reports
      singular_points (tuple, Optional): known singular points (for display)
    """

    def __init__(self, ring, ideal=None, name=None, singular_points=()):
        ideal = Ideal(ring) if ideal is None else ideal
        if ideal.ring.variables != ring.variables:
            raise RingMismatch(
                "Ideal of %r cannot define a scheme in %r" % (ideal.ring, ring)
            )
        self.ring = ring
        self.ideal = ideal.to_ring(ring)
        self.name = name
        self.singular_points = tuple(_point(p) for p in singular_points)
        self._dimension = None
        self._smoothness = None

    @property
    def variables(self):
        return self.ring.variables

    def __str__(self):
        label = self.name or "scheme"
        return "%s = V%s in A^%d[%s]" % (
            label,
            self.ideal,
            self.ring.ngens,
            ", ".join(self.variables),
        )

    def __repr__(self):
        return "AffineScheme(%s)" % self

    def same_presentation(self, other):
        return (
            self.variables == other.variables
            and self.ideal.generators == other.ideal.to_ring(self.ring).generators
        )

    def groebner(self, budget=None):
        return self.ideal.groebner(budget=budget)

    def reduce(self, p, budget=None):
        """Normal form of ``p`` modulo the defining ideal"""

        return self.groebner(budget).reduce(p, budget)

    def dimension(self, budget=None):
        if self._dimension is None:
            self._dimension = dimension(self.ideal, budget)
        return self._dimension

    def is_empty(self, budget=None):
        return variety_is_empty(self.ideal, budget)

    def smoothness(self, budget=None):
        if self._smoothness is None:
            verdict = smoothness_check(self.ideal, budget=budget)
            if verdict.status == "indeterminate" and verdict.reason == "budget":
                return verdict
            self._smoothness = verdict
        return self._smoothness

    def contains_point(self, point):
        point = dict(zip(self.variables, _point(point)))
        return all(not g.value(point) for g in self.ideal.generators)


def affine_space(variables, name=None):
    """The affine space on ``variables`` (zero ideal)"""

    ring = PolynomialRing(variables)
    return AffineScheme(ring, Ideal(ring), name=name or "A%d" % ring.ngens)


@dataclass(frozen=True)
class CompleteIntersectionCenter:
    """Two functions ``f, g`` on a scheme, claimed to vanish at one point"""

    ambient: AffineScheme
    f: Polynomial
    g: Polynomial
    support_point: tuple
    verified: bool = False
    name: str = None

    def __post_init__(self):
        ring = self.ambient.ring
        for p in (self.f, self.g):
            if p.ring.variables != ring.variables:
                raise RingMismatch("%s does not live on %s" % (p, self.ambient))
        object.__setattr__(self, "f", self.f.to_ring(ring))
        object.__setattr__(self, "g", self.g.to_ring(ring))
        point = _point(self.support_point)
        if len(point) != ring.ngens:
            raise ValueError(
                "Support point %s needs %d coordinates"
                % (self.support_point, ring.ngens)
            )
        object.__setattr__(self, "support_point", point)

    def ideal(self):
        """``I_S + (f, g)``"""

        return self.ambient.ideal + [self.f, self.g]

    def __str__(self):
        return "(%s, %s) at (%s)" % (
            self.f,
            self.g,
            ", ".join(str(c) for c in self.support_point),
        )


def monomial_center(ambient, m, n, x="x", y="y"):
    """The center ``(x^m, y^n)`` supported at the origin"""

    ring = ambient.ring
    return CompleteIntersectionCenter(
        ambient,
        ring.gen(x) ** m,
        ring.gen(y) ** n,
        (0,) * ring.ngens,
        name="(%s^%d, %s^%d)" % (x, m, y, n),
    )


@dataclass(frozen=True)
class SupportReport:
    """Result of :py:func:`verify_support`

    ``failed_check`` is one of ``nonempty``, ``zero-dimensional`` or
    ``support-point`` and names the first failing check.
    """

    center: CompleteIntersectionCenter
    verdict: str
    failed_check: str = None
    detail: str = None

    @property
    def passed(self):
        return self.verdict == "verified"


def verify_support(center, budget=None):
    """Checks that ``V(f, g)`` on the ambient scheme is the support point only

    Returns a :py:class:`SupportReport`; on success its ``center`` is a copy
    of the input marked as verified.
    """

    J = center.ideal()
    ring = center.ambient.ring
    try:
        if variety_is_empty(J, budget):
            return SupportReport(
                center,
                "failed",
                "nonempty",
                "1 lies in %s: the support is empty" % J,
            )
        d = dimension(J, budget)
        if d != 0:
            return SupportReport(
                center,
                "failed",
                "zero-dimensional",
                "V(f, g) has dimension %d" % d,
            )
        for v, p in zip(ring.variables, center.support_point):
            h = ring.gen(v) - p
            if not radical_membership(h, J, budget):
                return SupportReport(
                    center,
                    "failed",
                    "support-point",
                    "%s does not vanish on V(f, g)" % h,
                )
    except BudgetExhausted as e:
        logger.warning("support verification abandoned: %s", e)
        return SupportReport(center, "indeterminate", detail=str(e))

    logger.info("center %s verified", center)
    return SupportReport(dataclasses.replace(center, verified=True), "verified")


@dataclass(frozen=True)
class BundleTotalSpace:
    """The threefold ``{fV - gU = 1}`` over a base scheme"""

    base: AffineScheme
    center: CompleteIntersectionCenter
    total: AffineScheme
    fiber_variables: tuple = ("U", "V")

    @property
    def equation(self):
        ring = self.total.ring
        U, V = (ring.gen(v) for v in self.fiber_variables)
        return self.center.f.to_ring(ring) * V - self.center.g.to_ring(ring) * U - 1


def _total_ring(base, fiber_variables):
    for v in fiber_variables:
        if v in base.ring:
            raise ValueError(
                "Fiber coordinate %s clashes with a variable of %s" % (v, base)
            )
    return base.ring.extend(fiber_variables)


def _total_scheme(base, f, g, fiber_variables=("U", "V"), name=None):
    ring = _total_ring(base, fiber_variables)
    U, V = (ring.gen(v) for v in fiber_variables)
    equation = f.to_ring(ring) * V - g.to_ring(ring) * U - 1
    ideal = Ideal(ring, [p.to_ring(ring) for p in base.ideal.generators])
    return AffineScheme(ring, ideal + [equation], name=name)


def build_total_space(
    base, center, override=False, fiber_variables=("U", "V"), name=None
):
    """Builds ``I_S + (fV - gU - 1)`` in the base variables extended by U, V

    Raises:

      UnverifiedCenter: if the center is not verified and ``override`` is not
        set
    """

    if not center.ambient.same_presentation(base):
        raise ValueError("Center %s does not live on %s" % (center, base))
    if not center.verified:
        if not override:
            raise UnverifiedCenter(
                "Center %s has no verified support, verify it or override"
                % center
            )
        logger.warning("building over unverified center %s", center)
    total = _total_scheme(base, center.f, center.g, fiber_variables, name)
    logger.info("built %s", total)
    return BundleTotalSpace(base, center, total, tuple(fiber_variables))


def verify_ga_action(space, budget=None):
    """Checks the additive group action ``t.(s, U, V) = (s, U + ft, V + gt)``

    Checks are ``invariance`` (the equation is preserved, as a polynomial
    identity), ``action-law`` (``(t + s).x == t.(s.x)``) and
    ``fixed-point-free`` (``f = g = 0`` has no point on the total space).
    """

    ring = space.total.ring
    u, v = space.fiber_variables
    t_name = ring.fresh_variable("t")
    ext = ring.extend([t_name])
    s_name = ext.fresh_variable("s")
    ext = ext.extend([s_name])
    t, s = ext.gen(t_name), ext.gen(s_name)
    U, V = ext.gen(u), ext.gen(v)
    f, g = space.center.f.to_ring(ext), space.center.g.to_ring(ext)

    checks = []
    moved = f * (V + g * t) - g * (U + f * t)
    checks.append(("invariance", (moved - (f * V - g * U)).is_zero()))

    def act(by):
        return {u: U + f * by, v: V + g * by}

    inner = act(s)
    law = all(
        image.substitute(inner) == direct
        for image, direct in zip(
            (U + f * t, V + g * t), (U + f * (t + s), V + g * (t + s))
        )
    )
    checks.append(("action-law", law))

    _guarded(
        checks,
        "fixed-point-free",
        lambda: variety_is_empty(
            space.total.ideal
            + [space.center.f.to_ring(ring), space.center.g.to_ring(ring)],
            budget,
        ),
    )
    verdict = _verdict(checks)
    logger.info("Ga-action on %s: %s", space.total.name or "total space", verdict)
    return Verification(
        verdict,
        tuple(checks),
        (("action", "%s.(%s, %s) = (%s, %s)" % (
            t_name, u, v, U + f * t, V + g * t)),),
        reason="budget" if verdict == "indeterminate" else None,
    )


@dataclass(frozen=True)
class RegularMap:
    """A morphism of affine schemes given by coordinate polynomials

    ``components`` holds one polynomial in the source variables per target
    variable.
    """

    source: AffineScheme
    target: AffineScheme
    components: tuple
    name: str = None

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) != self.target.ring.ngens:
            raise ValueError(
                "Map into %s needs %d components, got %d"
                % (self.target, self.target.ring.ngens, len(comps))
            )
        ring = self.source.ring
        moved = []
        for c in comps:
            if not isinstance(c, Polynomial):
                c = ring.constant(c)
            if c.ring.variables != ring.variables:
                raise RingMismatch(
                    "Component %s is not a function on %s" % (c, self.source)
                )
            moved.append(c.to_ring(ring))
        object.__setattr__(self, "components", tuple(moved))

    @classmethod
    def identity(cls, scheme):
        return cls(scheme, scheme, scheme.ring.gens(), name="id")

    def images(self):
        return dict(zip(self.target.variables, self.components))

    def pullback(self, p):
        """``p o self``, for ``p`` a function on the target"""

        if p.ring.variables != self.target.variables:
            raise RingMismatch("%s is not a function on %s" % (p, self.target))
        return p.substitute(self.images(), ring=self.source.ring)

    def compose(self, other):
        """``self o other``"""

        if other.target.variables != self.source.variables:
            raise RingMismatch("Cannot compose maps through different schemes")
        return RegularMap(
            other.source,
            self.target,
            tuple(other.pullback(c) for c in self.components),
        )

    def apply(self, point):
        point = dict(zip(self.source.variables, _point(point)))
        return tuple(c.value(point) for c in self.components)

    def is_well_defined(self, budget=None):
        """Every target equation pulls back into the source ideal"""

        pulled = [self.pullback(g) for g in self.target.ideal.generators]
        if all(p.is_zero() for p in pulled):
            return True
        gb = self.source.groebner(budget)
        return all(gb.contains(p, budget) for p in pulled)

    def is_identity(self, budget=None):
        """Every component agrees with its coordinate modulo the source ideal"""

        if self.source.variables != self.target.variables:
            return False
        diffs = [c - x for c, x in zip(self.components, self.source.ring.gens())]
        if all(d.is_zero() for d in diffs):
            return True
        gb = self.source.groebner(budget)
        return all(gb.contains(d, budget) for d in diffs)

    def __str__(self):
        return "(%s) -> (%s)" % (
            ", ".join(self.source.variables),
            ", ".join(str(c) for c in self.components),
        )


@dataclass(frozen=True)
class IsomorphismCertificate:
    """A pair of mutually inverse regular maps"""

    forward: RegularMap
    inverse: RegularMap
    name: str = None

    def __post_init__(self):
        if (
            self.forward.source.variables != self.inverse.target.variables
            or self.forward.target.variables != self.inverse.source.variables
        ):
            raise ValueError("Inverse map does not run between the same schemes")

    @property
    def source(self):
        return self.forward.source

    @property
    def target(self):
        return self.forward.target

    def verify(self, budget=None):
        """Checks well-definedness of both maps and both composites"""

        checks = []
        _guarded(
            checks,
            "forward-well-defined",
            lambda: self.forward.is_well_defined(budget),
        )
        _guarded(
            checks,
            "inverse-well-defined",
            lambda: self.inverse.is_well_defined(budget),
        )
        _guarded(
            checks,
            "inverse-after-forward",
            lambda: self.inverse.compose(self.forward).is_identity(budget),
        )
        _guarded(
            checks,
            "forward-after-inverse",
            lambda: self.forward.compose(self.inverse).is_identity(budget),
        )
        verdict = _verdict(checks, "isomorphic")
        return Verification(
            verdict,
            tuple(checks),
            (("forward", str(self.forward)), ("inverse", str(self.inverse))),
            reason="budget" if verdict == "indeterminate" else None,
        )


@dataclass(frozen=True)
class ResolutionChange:
    """A 2x2 matrix over the base, invertible through a constant determinant"""

    a: Polynomial
    b: Polynomial
    c: Polynomial
    d: Polynomial
    determinant_normal_form: Polynomial

    @property
    def delta(self):
        return self.determinant_normal_form.constant_value()


def make_resolution_change(base, matrix, budget=None):
    """Validates ``((a, b), (c, d))`` over ``base``

    Raises:

      ResolutionChangeRejected: if ``ad - bc`` does not reduce to a nonzero
        constant modulo the base ideal
    """

    (a, b), (c, d) = matrix
    entries = []
    for e in (a, b, c, d):
        if not isinstance(e, Polynomial):
            e = base.ring.constant(e)
        if e.ring.variables != base.variables:
            raise RingMismatch("Matrix entry %s is not a function on %s" % (e, base))
        entries.append(e.to_ring(base.ring))
    a, b, c, d = entries
    det = a * d - b * c
    nf = base.reduce(det, budget) if base.ideal.generators else det
    if nf.is_zero():
        raise ResolutionChangeRejected(
            "Determinant %s vanishes modulo the base ideal" % det
        )
    if not nf.is_constant():
        raise ResolutionChangeRejected(
            "Determinant %s reduces to %s, which is not a nonzero constant"
            % (det, nf)
        )
    return ResolutionChange(a, b, c, d, nf)


@dataclass(frozen=True)
class ResolutionChangeResult:
    """New center, the isomorphism of total spaces and its verification"""

    center: CompleteIntersectionCenter
    automorphism: IsomorphismCertificate
    report: Verification


def _fiber_map(source, target, images, fiber_variables):
    # identity on base coordinates, given images for the fiber coordinates
    ring = source.ring
    comps = []
    for v in target.variables:
        if v in images:
            comps.append(images[v])
        else:
            comps.append(ring.gen(v))
    return RegularMap(source, target, tuple(comps))


def resolution_change(base, center, change, budget=None, fiber_variables=("U", "V")):
    """Replaces ``(f, g)`` by ``(af + bg, cf + dg)``

    The total space of the new pair maps onto the old one by
    ``(U, V) -> (dU - bV, -cU + aV)``, with inverse
    ``(U, V) -> ((aU + bV)/delta, (cU + dV)/delta)``.
    """

    if not isinstance(change, ResolutionChange):
        change = make_resolution_change(base, change, budget)
    a, b, c, d = change.a, change.b, change.c, change.d
    f, g = center.f, center.g
    f2, g2 = a * f + b * g, c * f + d * g

    old = _total_scheme(base, f, g, fiber_variables, name="V(f, g)")
    new = _total_scheme(base, f2, g2, fiber_variables, name="V(f', g')")
    ring = old.ring
    u, v = fiber_variables
    U, V = ring.gen(u), ring.gen(v)
    A, B, C, D = (e.to_ring(ring) for e in (a, b, c, d))
    F, G = f.to_ring(ring), g.to_ring(ring)
    F2, G2 = f2.to_ring(ring), g2.to_ring(ring)
    delta = change.delta

    forward = _fiber_map(
        new, old, {u: D * U - B * V, v: -C * U + A * V}, fiber_variables
    )
    inverse = _fiber_map(
        old,
        new,
        {u: (A * U + B * V) / delta, v: (C * U + D * V) / delta},
        fiber_variables,
    )
    certificate = IsomorphismCertificate(forward, inverse, name="resolution change")

    checks = []
    base_gb_ideal = Ideal(ring, [p.to_ring(ring) for p in base.ideal.generators])

    def equation():
        diff = (F * (-C * U + A * V) - G * (D * U - B * V) - 1) - (F2 * V - G2 * U - 1)
        if diff.is_zero():
            return True
        return base_gb_ideal.groebner(budget=budget).contains(diff, budget)

    _guarded(checks, "equation", equation)
    _guarded(
        checks,
        "center-ideal",
        lambda: ideal_equality(
            base.ideal + [f2, g2], base.ideal + [f, g], budget
        ),
    )
    iso = certificate.verify(budget)
    checks.extend(iso.checks)

    new_center = dataclasses.replace(
        center,
        f=f2,
        g=g2,
        verified=center.verified and dict(checks).get("center-ideal") is True,
        name=None,
    )
    verdict = _verdict(checks)
    logger.info("resolution change to (%s, %s): %s", f2, g2, verdict)
    report = Verification(
        verdict,
        tuple(checks),
        (
            ("f'", str(f2)),
            ("g'", str(g2)),
            ("determinant", str(change.determinant_normal_form)),
            ("map", "(%s, %s) -> (%s, %s)" % (u, v, D * U - B * V, -C * U + A * V)),
            ("inverse", "(%s, %s) -> (%s, %s)" % (
                u, v, (A * U + B * V) / delta, (C * U + D * V) / delta)),
        ),
        reason="budget" if verdict == "indeterminate" else None,
    )
    return ResolutionChangeResult(new_center, certificate, report)


def _check_pair_certificate(left, right, cert):
    (base, center), (base2, center2) = left, right
    if (
        cert.source.variables != base.variables
        or cert.target.variables != base2.variables
    ):
        raise ValueError(
            "Certificate does not map %s to %s" % (base.name, base2.name)
        )
    for scheme, c in ((base, center), (base2, center2)):
        if not c.ambient.same_presentation(scheme):
            raise ValueError("Center %s does not live on %s" % (c, scheme))


def _same_scheme(scheme, other, budget):
    # same ambient variables, so equal ideals mean the same subscheme
    if scheme.same_presentation(other):
        return True
    return ideal_equality(scheme.ideal, other.ideal.to_ring(scheme.ring), budget)


def _certificate_bases(left, right, cert, budget):
    """Checks that ``cert`` maps the left base onto the right one"""

    checks = []
    _guarded(checks, "source-base", lambda: _same_scheme(cert.source, left[0], budget))
    _guarded(checks, "target-base", lambda: _same_scheme(cert.target, right[0], budget))
    return checks


def verify_pair_isomorphism(left, right, cert, budget=None):
    """Checks that a base isomorphism carries one center onto the other

    Parameters:

      left (tuple): ``(AffineScheme, CompleteIntersectionCenter)``
      right (tuple): ``(AffineScheme, CompleteIntersectionCenter)``
      cert (IsomorphismCertificate): from the left base to the right one

    Returns:

      Verification: verdict ``pairs-isomorphic``, ``center-mismatch``,
      ``certificate-invalid`` or ``indeterminate``.  Non-isomorphism is never
      claimed.  A certificate between other schemes than the two bases is
      ``certificate-invalid``.

    Raises:

      ValueError: if the variables of the certificate differ from those of
        the bases, or a center does not live on its base
    """

    _check_pair_certificate(left, right, cert)
    (base, center), (base2, center2) = left, right

    checks = _certificate_bases(left, right, cert, budget)
    bases = _verdict(checks)
    if bases == "failed":
        logger.info("certificate does not map %s onto %s", base.name, base2.name)
        return Verification("certificate-invalid", tuple(checks))
    if bases == "indeterminate":
        return Verification("indeterminate", tuple(checks), reason="budget")

    iso = cert.verify(budget)
    checks.extend(iso.checks)
    if iso.verdict == "failed":
        return Verification("certificate-invalid", tuple(checks), iso.witness)
    if iso.verdict == "indeterminate":
        return Verification("indeterminate", tuple(checks), iso.witness, "budget")

    f2 = cert.forward.pullback(center2.f.to_ring(base2.ring))
    g2 = cert.forward.pullback(center2.g.to_ring(base2.ring))
    witness = iso.witness + (("f''", str(f2)), ("g''", str(g2)))
    ok = _guarded(
        checks,
        "centers-match",
        lambda: ideal_equality(base.ideal + [f2, g2], center.ideal(), budget),
    )
    if ok is None:
        return Verification("indeterminate", tuple(checks), witness, "budget")
    verdict = "pairs-isomorphic" if ok else "center-mismatch"
    logger.info("pair isomorphism: %s", verdict)
    return Verification(verdict, tuple(checks), witness)


@dataclass(frozen=True)
class LiftedIsomorphism:
    """Outcome of :py:func:`lift_pair_isomorphism`"""

    report: Verification
    certificate: IsomorphismCertificate = field(default=None, compare=False)


def lift_pair_isomorphism(left, right, cert, budget=None, fiber_variables=("U", "V")):
    """Extends a verified pair isomorphism to the total spaces

    Writes ``f'' = af + bg`` and ``g'' = cf + dg`` modulo the base ideal from
    membership certificates.  When ``ad - bc`` reduces to a nonzero constant,
    the total spaces are isomorphic through an explicit certificate, which is
    verified.  Any other case is reported as ``indeterminate``.
    """

    pair = verify_pair_isomorphism(left, right, cert, budget)
    if pair.verdict != "pairs-isomorphic":
        verdict = pair.verdict if pair.verdict != "center-mismatch" else "indeterminate"
        return LiftedIsomorphism(
            Verification(verdict, pair.checks, pair.witness, reason=pair.verdict)
        )

    (base, center), (base2, center2) = left, right
    ring = base.ring
    f2 = cert.forward.pullback(center2.f.to_ring(base2.ring))
    g2 = cert.forward.pullback(center2.g.to_ring(base2.ring))
    presentation = Ideal(ring, [center.f, center.g] + list(base.ideal.generators))
    if presentation.generators[:2] != (center.f, center.g):
        return LiftedIsomorphism(
            Verification("indeterminate", pair.checks, pair.witness, "zero-generator")
        )

    try:
        _, cf = ideal_membership(f2, presentation, certificate=True, budget=budget)
        _, cg = ideal_membership(g2, presentation, certificate=True, budget=budget)
        a, b = cf.cofactors[:2]
        c, d = cg.cofactors[:2]
        change = make_resolution_change(base, ((a, b), (c, d)), budget)
    except BudgetExhausted as e:
        logger.warning("lifting abandoned: %s", e)
        return LiftedIsomorphism(
            Verification("indeterminate", pair.checks, pair.witness, "budget")
        )
    except ResolutionChangeRejected as e:
        logger.info("cannot lift: %s", e)
        return LiftedIsomorphism(
            Verification("indeterminate", pair.checks, pair.witness, "determinant")
        )

    u, v = fiber_variables
    src = _total_scheme(base, center.f, center.g, fiber_variables, name="V_Z")
    dst = _total_scheme(base2, center2.f, center2.g, fiber_variables, name="V_Z'")
    delta = change.delta

    S = src.ring
    U, V = S.gen(u), S.gen(v)
    A, B, C, D = (e.to_ring(S) for e in (a, b, c, d))
    fwd = [p.to_ring(S) for p in cert.forward.components]
    fwd += [(A * U + B * V) / delta, (C * U + D * V) / delta]

    T = dst.ring
    U2, V2 = T.gen(u), T.gen(v)
    psi = cert.inverse

    def back(p):
        return psi.pullback(p).to_ring(T)

    inv = [p.to_ring(T) for p in psi.components]
    inv += [back(d) * U2 - back(b) * V2, -back(c) * U2 + back(a) * V2]

    lifted = IsomorphismCertificate(
        RegularMap(src, dst, tuple(fwd)),
        RegularMap(dst, src, tuple(inv)),
        name="lifted",
    )
    report = lifted.verify(budget)
    checks = pair.checks + report.checks
    witness = pair.witness + (
        ("matrix", "[[%s, %s], [%s, %s]]" % (a, b, c, d)),
        ("determinant", str(change.determinant_normal_form)),
        ("total forward", str(lifted.forward)),
        ("total inverse", str(lifted.inverse)),
    )
    return LiftedIsomorphism(
        Verification(report.verdict, checks, witness, report.reason),
        lifted if report.passed else None,
    )


def brieskorn(p, q, r):
    """The surface ``x^p + y^q + z^r = 0``

    Raises:

      BrieskornParameterError: unless ``p, q, r >= 2`` are pairwise coprime
        and ``1/p + 1/q + 1/r < 1``
    """

    for name, e in (("p", p), ("q", q), ("r", r)):
        if not isinstance(e, int) or e < 2:
            raise BrieskornParameterError("%s = %r must be an integer >= 2" % (name, e))
    for (n1, e1), (n2, e2) in (
        (("p", p), ("q", q)),
        (("p", p), ("r", r)),
        (("q", q), ("r", r)),
    ):
        common = math.gcd(e1, e2)
        if common != 1:
            raise BrieskornParameterError(
                "gcd(%s, %s) = gcd(%d, %d) = %d, exponents must be pairwise "
                "coprime" % (n1, n2, e1, e2, common)
            )
    total = Fraction(1, p) + Fraction(1, q) + Fraction(1, r)
    if total >= 1:
        raise BrieskornParameterError(
            "1/%d + 1/%d + 1/%d = %s is not < 1" % (p, q, r, total)
        )
    ring = PolynomialRing(("x", "y", "z"))
    x, y, z = ring.gens()
    return AffineScheme(
        ring,
        Ideal(ring, [x ** p + y ** q + z ** r]),
        name="S(%d,%d,%d)" % (p, q, r),
        singular_points=((0, 0, 0),),
    )


def gm_weight_check(p, q, r, m=1, n=1, weight="lam"):
    """Checks the multiplicative group action on ``x^p + y^q + z^r``

    The weights are ``(qr, pr, pq)``.  Reported checks:

    ``equation``
      the substitution multiplies the equation by ``weight^(pqr)``
    ``center``
      ``x^m`` and ``y^n`` are sent to power-of-weight multiples of themselves
    ``unit-weight``
      substituting ``weight = 1`` gives back the identity

    The witness also records whether the weight ``qr`` on ``z`` (instead of
    ``pq``) would preserve the equation.
    """

    surface = brieskorn(p, q, r)
    if m < 1 or n < 1:
        raise ValueError("Center exponents must be positive (got %d, %d)" % (m, n))
    ring = PolynomialRing(("x", "y", "z", weight))
    x, y, z, lam = ring.gens()
    F = surface.ideal.generators[0].to_ring(ring)

    def scaled(wx, wy, wz):
        return {"x": lam ** wx * x, "y": lam ** wy * y, "z": lam ** wz * z}

    sub = scaled(q * r, p * r, p * q)
    checks = [("equation", F.substitute(sub) == lam ** (p * q * r) * F)]
    xm, yn = x ** m, y ** n
    checks.append(
        (
            "center",
            xm.substitute(sub) == lam ** (q * r * m) * xm
            and yn.substitute(sub) == lam ** (p * r * n) * yn,
        )
    )
    unit = {k: v.evaluate({weight: 1}).to_ring(ring) for k, v in sub.items()}
    checks.append(("unit-weight", F.substitute(unit) == F))

    printed = F.substitute(scaled(q * r, p * r, q * r)) == lam ** (p * q * r) * F
    if not printed:
        logger.info(
            "weight qr = %d on z does not preserve %s, using pq = %d",
            q * r,
            F,
            p * q,
        )
    return Verification(
        _verdict(checks),
        tuple(checks),
        (
            ("weights", "(%d, %d, %d)" % (q * r, p * r, p * q)),
            ("degree", str(p * q * r)),
            ("z-weight used", "pq = %d" % (p * q)),
            (
                "printed z-weight",
                "qr = %d %s the equation"
                % (q * r, "preserves" if printed else "does not preserve"),
            ),
        ),
    )
