#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Decision procedures on polynomial ideals.

Membership, radical membership, equality, elimination, Krull dimension,
emptiness of the complex variety and the Jacobian smoothness criterion.  All
procedures reduce to reduced Gröbner bases over the rationals, which stay
Gröbner bases after extending scalars to the complex numbers.
"""

import itertools

from dataclasses import dataclass, field

from .groebner import BudgetExhausted, divide, reduced_groebner_basis
from .log import get_logger
from .polyring import MonomialOrder, Polynomial, RingMismatch

logger = get_logger(__name__)


class Ideal(object):
    """A finitely generated ideal

    Zero generators are dropped, so the zero ideal has no generators at all.
    Generators given in another order of the same variables are moved to
    ``ring``.
    """

    def __init__(self, ring, generators=()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring.variables != ring.variables:
                raise RingMismatch(
                    "Generator %s lives in %r, not in %r" % (g, g.ring, ring)
                )
            g = g.to_ring(ring)
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)

    def __add__(self, other):
        if isinstance(other, Ideal):
            if other.ring.variables != self.ring.variables:
                raise RingMismatch(
                    "Cannot add ideals of %r and %r" % (self.ring, other.ring)
                )
            other = other.generators
        return Ideal(self.ring, self.generators + tuple(other))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        return "(%s)" % ", ".join(str(g) for g in self.generators)

    def __repr__(self):
        return "Ideal(%r, %s)" % (self.ring, self)

    def to_ring(self, ring):
        """Moves the generators into ``ring``, matching variables by name"""

        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def groebner(self, order=None, budget=None, track_cofactors=False):
        return reduced_groebner_basis(
            self.generators or (self.ring.zero(),),
            order=order,
            budget=budget,
            track_cofactors=track_cofactors,
        )


def _check_ring(h, ideal):
    if h.ring.variables != ideal.ring.variables:
        raise RingMismatch("%s does not live in %r" % (h, ideal.ring))
    return h.to_ring(ideal.ring)


@dataclass(frozen=True)
class MembershipCertificate:
    """Explicit proof that ``target`` lies in the ideal of ``generators``"""

    target: Polynomial
    cofactors: tuple
    generators: tuple

    def expand(self):
        total = self.target.ring.zero()
        for h, g in zip(self.cofactors, self.generators):
            total = total + h.to_ring(total.ring) * g.to_ring(total.ring)
        return total

    def verify(self):
        if len(self.cofactors) != len(self.generators):
            return False
        return self.expand() == self.target


def verify_membership_certificate(cert, ideal=None):
    """Re-checks a certificate by direct expansion

    When ``ideal`` is given, the certificate must also be expressed over its
    generators (in the same sequence).
    """

    if ideal is not None:
        mine = tuple(g.to_ring(ideal.ring) for g in cert.generators)
        if mine != ideal.generators:
            return False
    return cert.verify()


def ideal_membership(h, ideal, certificate=False, budget=None):
    """Decides ``h in ideal``

    Returns:

      tuple: ``(member, certificate)``; the certificate is ``None`` unless
      requested and ``h`` is a member
    """

    h = _check_ring(h, ideal)
    if not certificate:
        gb = ideal.groebner(budget=budget)
        return gb.contains(h, budget), None

    if not ideal.generators:
        found = h.is_zero()
        return found, (MembershipCertificate(h, (), ()) if found else None)

    gb = ideal.groebner(budget=budget, track_cofactors=True)
    quotients, remainder = divide(h, gb.elements, budget=budget)
    if remainder:
        return False, None

    cofactors = [ideal.ring.zero() for _ in ideal.generators]
    for q, row in zip(quotients, gb.cofactors):
        if q:
            q = q.to_ring(ideal.ring)
            cofactors = [c + q * r.to_ring(ideal.ring) for c, r in zip(cofactors, row)]
    cert = MembershipCertificate(h, tuple(cofactors), ideal.generators)
    if not cert.verify():
        raise RuntimeError(
            "Cofactor expansion of %s does not match, Gröbner engine is "
            "inconsistent" % h
        )
    return True, cert


def radical_membership(h, ideal, budget=None):
    """Decides whether ``h`` vanishes on the complex variety of ``ideal``

    Uses ``1 in ideal + (1 - t*h)`` in the ring extended by a fresh ``t``.
    """

    h = _check_ring(h, ideal)
    t = ideal.ring.fresh_variable("t")
    ring = ideal.ring.extend([t])
    gens = [g.to_ring(ring) for g in ideal.generators]
    gens.append(ring.one() - ring.gen(t) * h.to_ring(ring))
    return reduced_groebner_basis(gens, budget=budget).is_unit()


def ideal_equality(left, right, budget=None):
    """``True`` iff both ideals have the same reduced basis in ``left``'s order"""

    if left.ring.variables != right.ring.variables:
        raise RingMismatch(
            "Cannot compare ideals of %r and %r" % (left.ring, right.ring)
        )
    a = left.groebner(budget=budget)
    b = right.to_ring(left.ring).groebner(budget=budget)
    return a.elements == b.elements


def eliminate(ideal, names, budget=None):
    """Intersection of ``ideal`` with the ring of the remaining variables

    Parameters:

      ideal (Ideal): input ideal
      names (list): variables to eliminate

    Returns:

      Ideal: in a grevlex (or lex, when ``ideal`` is lex) ring of the
      remaining variables, in their original sequence
    """

    names = list(names)
    for n in names:
        ideal.ring.index(n)
    if not names:
        return Ideal(ideal.ring, ideal.generators)

    rest = ideal.ring.subring([v for v in ideal.ring.variables if v not in names])
    if not ideal.generators:
        return Ideal(rest, ())
    block = ideal.ring.eliminating(names)
    gb = ideal.groebner(order=block.order, budget=budget)
    kept = [e for e in gb.elements if not (e.variables_used() & set(names))]
    logger.debug(
        "eliminating %s kept %d of %d basis element(s)",
        ", ".join(names),
        len(kept),
        len(gb.elements),
    )
    return Ideal(rest, [e.to_ring(rest) for e in kept])


def dimension(ideal, budget=None):
    """Krull dimension of the quotient ring, -1 for the unit ideal

    Largest set of variables containing the support of no leading monomial of
    a grevlex basis.
    """

    n = ideal.ring.ngens
    gb = ideal.groebner(order=MonomialOrder("grevlex"), budget=budget)
    if gb.is_unit():
        return -1
    supports = [
        frozenset(i for i, e in enumerate(m) if e) for m in gb.leading_monomials()
    ]
    for size in range(n, -1, -1):
        for chosen in itertools.combinations(range(n), size):
            chosen = frozenset(chosen)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def variety_is_empty(ideal, budget=None):
    """Weak Nullstellensatz: empty iff the reduced basis is ``{1}``"""

    return ideal.groebner(budget=budget).is_unit()


def jacobian_matrix(generators, variables):
    """Matrix (list of rows) of partial derivatives, one row per generator"""

    return [[g.derivative(v) for v in variables] for g in generators]


def determinant(matrix):
    """Laplace expansion along the first row"""

    n = len(matrix)
    if n == 0:
        return None
    if n == 1:
        return matrix[0][0]
    total = None
    for j, entry in enumerate(matrix[0]):
        if not entry:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else matrix[0][0] - matrix[0][0]


def minors(matrix, size):
    """All ``size x size`` minors of ``matrix``, zero ones omitted"""

    if not matrix:
        return []
    rows, cols = len(matrix), len(matrix[0])
    out = []
    for r in itertools.combinations(range(rows), size):
        for c in itertools.combinations(range(cols), size):
            d = determinant([[matrix[i][j] for j in c] for i in r])
            if d:
                out.append(d)
    return out


@dataclass(frozen=True)
class SmoothnessVerdict:
    """Outcome of :py:func:`smoothness_check`

    Attributes:

      status (str): ``smooth``, ``singular`` or ``indeterminate``
      dimension (int): Krull dimension, when computed
      codimension (int): ambient dimension minus ``dimension``
      witness (Ideal): for ``singular``, the singular-locus ideal (as its
        reduced basis)
      reason (str): for ``indeterminate``, ``budget`` or
        ``non-complete-intersection``
    """

    status: str
    dimension: int = None
    codimension: int = None
    witness: Ideal = field(default=None, compare=False)
    reason: str = None

    @property
    def passed(self):
        return self.status == "smooth"


def smoothness_check(ideal, ambient_dim=None, budget=None):
    """Jacobian criterion for a complete-intersection presentation

    Raises:

      ValueError: if the ideal is the unit ideal or ``ambient_dim`` does not
        match the ring
    """

    n = ideal.ring.ngens
    if ambient_dim is not None and ambient_dim != n:
        raise ValueError(
            "Ambient dimension %d does not match the %d ring variables"
            % (ambient_dim, n)
        )
    try:
        d = dimension(ideal, budget)
    except BudgetExhausted as e:
        logger.warning("smoothness check abandoned: %s", e)
        return SmoothnessVerdict("indeterminate", reason="budget")
    if d < 0:
        raise ValueError("The unit ideal defines the empty scheme")

    c = n - d
    if len(ideal.generators) > c:
        logger.info(
            "%d generators for codimension %d, not a complete intersection "
            "presentation",
            len(ideal.generators),
            c,
        )
        return SmoothnessVerdict(
            "indeterminate", d, c, reason="non-complete-intersection"
        )

    if c == 0:
        jacobian = [ideal.ring.one()]
    else:
        jacobian = minors(
            jacobian_matrix(ideal.generators, ideal.ring.variables), c
        )
    locus = ideal + jacobian
    try:
        gb = locus.groebner(budget=budget)
    except BudgetExhausted as e:
        logger.warning("smoothness check abandoned: %s", e)
        return SmoothnessVerdict("indeterminate", d, c, reason="budget")

    if gb.is_unit():
        logger.info("smooth of dimension %d (codimension %d)", d, c)
        return SmoothnessVerdict("smooth", d, c)
    logger.info("singular locus %s", gb)
    return SmoothnessVerdict(
        "singular", d, c, witness=Ideal(ideal.ring, gb.elements)
    )
