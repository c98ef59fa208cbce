#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Exact multivariate polynomial arithmetic over the rationals.

Polynomials are sparse maps from exponent tuples (monomials) to
:py:class:`fractions.Fraction` coefficients.  Every polynomial belongs to a
:py:class:`PolynomialRing`, which fixes the ordered variable list and the
monomial order used to iterate terms.  All objects in this module are
immutable after construction.
"""

import operator
import re

from dataclasses import dataclass
from fractions import Fraction

from .log import get_logger

logger = get_logger(__name__)


_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class RingMismatch(ValueError):
    """Raised when operands do not live in the same polynomial ring"""


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """A total, multiplicative monomial order

    Attributes:

      kind (str): one of ``grevlex``, ``lex`` or ``block``
      eliminate (tuple): for ``block`` orders, the (sorted) indices of the
        variables to eliminate.  Any monomial containing one of them exceeds
        every monomial free of them; ties inside each block are broken by
        grevlex.
    """

    kind: str = "grevlex"
    eliminate: tuple = ()

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError("Unknown monomial order %r" % (self.kind,))
        indices = tuple(sorted(set(int(k) for k in self.eliminate)))
        if self.kind == "block" and not indices:
            raise ValueError("A block order needs at least one variable")
        if self.kind != "block" and indices:
            raise ValueError("Only block orders take an elimination set")
        if indices and indices[0] < 0:
            raise ValueError("Variable indices must be non-negative")
        object.__setattr__(self, "eliminate", indices)

    def key(self, m):
        """Sort key: ``key(a) < key(b)`` iff ``a < b`` in this order"""

        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return _grevlex_key(m)
        head = tuple(m[i] for i in self.eliminate)
        tail = tuple(e for i, e in enumerate(m) if i not in self.eliminate)
        return (_grevlex_key(head), _grevlex_key(tail))

    def describe(self, variables):
        """Textual form, as accepted by the script grammar"""

        if self.kind != "block":
            return self.kind
        return "block(%s)" % ", ".join(variables[i] for i in self.eliminate)


def compare_monomials(m1, m2, order):
    """Compares two monomials, returns -1 (less), 0 (equal) or 1 (greater)

    Raises :py:class:`RingMismatch` if the exponent vectors do not have the
    same length (or are too short for the elimination set of a block order).
    """

    if len(m1) != len(m2):
        raise RingMismatch(
            "Monomials %r and %r come from different rings" % (m1, m2)
        )
    if order.eliminate and order.eliminate[-1] >= len(m1):
        raise RingMismatch(
            "Block order eliminates variable #%d but monomials only have %d"
            % (order.eliminate[-1], len(m1))
        )
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


def monomial_mul(a, b):
    return tuple(map(operator.add, a, b))


def monomial_div(a, b):
    """Returns ``a / b`` or ``None`` if ``b`` does not divide ``a``"""

    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def monomial_lcm(a, b):
    return tuple(map(max, a, b))


class PolynomialRing(object):
    """The ring of polynomials with rational coefficients in ``variables``

    Two rings are equal when they have the same ordered variables *and* the
    same monomial order.  Use :py:meth:`with_order` or
    :py:meth:`Polynomial.reorder` to move polynomials between orders.
    """

    def __init__(self, variables, order=None):
        variables = tuple(variables)
        for v in variables:
            if not isinstance(v, str) or not _IDENTIFIER.match(v):
                raise ValueError("Invalid variable name %r" % (v,))
        seen = set()
        for v in variables:
            if v in seen:
                raise ValueError("Duplicate variable %r in ring" % v)
            seen.add(v)
        order = order if order is not None else MonomialOrder()
        if order.eliminate and order.eliminate[-1] >= len(variables):
            raise ValueError(
                "Block order refers to variable #%d of a %d-variable ring"
                % (order.eliminate[-1], len(variables))
            )
        self.variables = variables
        self.order = order
        self.key = order.key
        self._index = {v: i for i, v in enumerate(variables)}

    def __eq__(self, other):
        if not isinstance(other, PolynomialRing):
            return NotImplemented
        return self.variables == other.variables and self.order == other.order

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return "Q[%s] (%s)" % (
            ", ".join(self.variables),
            self.order.describe(self.variables),
        )

    @property
    def ngens(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise RingMismatch(
                "Variable %r does not belong to %r" % (name, self)
            ) from None

    def __contains__(self, name):
        return name in self._index

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        return Polynomial(self, {(0,) * self.ngens: value})

    def monomial(self, exponents, coefficient=1):
        return Polynomial(self, {tuple(exponents): coefficient})

    def gen(self, name):
        exps = [0] * self.ngens
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self):
        return tuple(self.gen(v) for v in self.variables)

    def with_order(self, order):
        if order == self.order:
            return self
        return PolynomialRing(self.variables, order)

    def eliminating(self, names):
        """The same variables under a block order eliminating ``names``"""

        return self.with_order(
            MonomialOrder("block", tuple(self.index(n) for n in names))
        )

    def extend(self, names):
        """Appends new variables, keeping the kind of monomial order"""

        return PolynomialRing(self.variables + tuple(names), self.order)

    def subring(self, names):
        """A ring on the listed variables (in ring order), grevlex unless lex"""

        kept = tuple(v for v in self.variables if v in set(names))
        kind = "lex" if self.order.kind == "lex" else "grevlex"
        return PolynomialRing(kept, MonomialOrder(kind))

    def fresh_variable(self, stem="t"):
        """Returns a variable name not yet used in this ring"""

        candidate, k = stem, 0
        while candidate in self._index:
            k += 1
            candidate = "%s%d" % (stem, k)
        return candidate

    def parse(self, text):
        """Parses ``text`` in the script polynomial syntax into this ring"""

        from .script import parse_expression

        return parse_expression(text, self.variables).to_polynomial(self)


class Polynomial(object):
    """A sparse polynomial with exact rational coefficients

    Parameters:

      ring (PolynomialRing): the ring this polynomial lives in
      terms (dict): map from exponent tuples to coefficients; zero
        coefficients are dropped
    """

    __slots__ = ("ring", "_terms", "_sorted")

    def __init__(self, ring, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != ring.ngens or any(e < 0 for e in m):
                raise RingMismatch(
                    "Exponent vector %r does not fit %r" % (m, ring)
                )
            c = Fraction(c)
            if c:
                clean[m] = c
        self.ring = ring
        self._terms = clean
        self._sorted = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted construction: tuples of the right size, no zero coefficient
        self = cls.__new__(cls)
        self.ring = ring
        self._terms = terms
        self._sorted = None
        return self

    def terms(self):
        """Terms as ``(monomial, coefficient)`` pairs in descending order"""

        if self._sorted is None:
            key = self.ring.key
            self._sorted = tuple(
                sorted(
                    self._terms.items(),
                    key=lambda t: key(t[0]),
                    reverse=True,
                )
            )
        return self._sorted

    def as_dict(self):
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(m) for m in self._terms)

    def constant_value(self):
        """Returns the coefficient of ``1`` (which is everything if constant)"""

        return self._terms.get((0,) * self.ring.ngens, Fraction(0))

    def leading_term(self):
        if not self._terms:
            raise ValueError("The zero polynomial has no leading term")
        return self.terms()[0]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def total_degree(self):
        """Maximal total degree of a term, -1 for the zero polynomial"""

        return max((sum(m) for m in self._terms), default=-1)

    def variables_used(self):
        used = set()
        for m in self._terms:
            used.update(v for v, e in zip(self.ring.variables, m) if e)
        return used

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(
                    "Cannot combine polynomials from %r and %r"
                    % (self.ring, other.ring)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(
            self.ring, {m: -c for m, c in self._terms.items()}
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError(
                    "Polynomials may only be divided by nonzero constants"
                )
            other = other.constant_value()
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("Division of a polynomial by zero")
        return Polynomial._raw(
            self.ring, {m: c / other for m, c in self._terms.items()}
        )

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Exponents must be non-negative integers")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def mul_term(self, monomial, coefficient):
        """Multiplies by the single term ``coefficient * monomial``"""

        coefficient = Fraction(coefficient)
        if not coefficient:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            {
                monomial_mul(m, monomial): c * coefficient
                for m, c in self._terms.items()
            },
        )

    def monic(self):
        if not self._terms:
            return self
        return self / self.leading_coefficient()

    def derivative(self, name):
        i = self.ring.index(name)
        out = {}
        for m, c in self._terms.items():
            if m[i]:
                d = list(m)
                d[i] -= 1
                out[tuple(d)] = c * m[i]
        return Polynomial._raw(self.ring, out)

    def substitute(self, images, ring=None):
        """Replaces variables by polynomials (a pullback along a map)

        Parameters:

          images (dict): variable name to image; images are polynomials of a
            common ring or numbers
          ring (PolynomialRing, Optional): ring of the result, needed when all
            images are numbers; defaults to the ring of the images, then to
            this polynomial's ring.  Variables without an image must exist in
            the result ring and are mapped to themselves.
        """

        if ring is None:
            rings = {p.ring for p in images.values() if isinstance(p, Polynomial)}
            if len(rings) > 1:
                raise RingMismatch("Substitution images live in several rings")
            ring = rings.pop() if rings else self.ring

        columns = []
        for v in self.ring.variables:
            if v in images:
                image = images[v]
                if isinstance(image, Polynomial):
                    if image.ring != ring:
                        raise RingMismatch(
                            "Image of %s lives in %r, not %r"
                            % (v, image.ring, ring)
                        )
                else:
                    image = ring.constant(image)
            else:
                image = ring.gen(v)
            columns.append(image)

        powers = [{0: ring.one(), 1: img} for img in columns]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = columns[i] ** e
            return cache[e]

        result = ring.zero()
        for m, c in self._terms.items():
            term = ring.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def evaluate(self, point):
        """Substitutes numbers for some variables, keeping the others

        The result lives in the ring of the remaining variables (same kind of
        order); pass all variables to obtain a constant polynomial of the
        empty ring, or use :py:meth:`value`.
        """

        point = {k: Fraction(v) for k, v in point.items()}
        for k in point:
            self.ring.index(k)
        rest = self.ring.subring(
            [v for v in self.ring.variables if v not in point]
        )
        return self.substitute(point, ring=rest)

    def value(self, point):
        """Evaluates at a full point (a mapping or a sequence), returns a number"""

        if not isinstance(point, dict):
            point = dict(zip(self.ring.variables, point))
        missing = [v for v in self.ring.variables if v not in point]
        if missing:
            raise ValueError("No value given for %s" % ", ".join(missing))
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for v, e in zip(self.ring.variables, m):
                if e:
                    t *= Fraction(point[v]) ** e
            total += t
        return total

    def to_ring(self, ring):
        """Embeds this polynomial into ``ring`` matching variables by name"""

        if ring == self.ring:
            return self
        positions = [ring.index(v) if v in ring else None for v in self.ring.variables]
        out = {}
        for m, c in self._terms.items():
            target = [0] * ring.ngens
            for v, pos, e in zip(self.ring.variables, positions, m):
                if e:
                    if pos is None:
                        raise RingMismatch(
                            "Variable %s is not available in %r" % (v, ring)
                        )
                    target[pos] = e
            out[tuple(target)] = c
        return Polynomial._raw(ring, out)

    def reorder(self, order):
        return self.to_ring(self.ring.with_order(order))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.terms():
            factors = []
            for v, e in zip(self.ring.variables, m):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append("%s^%d" % (v, e))
            mono = "*".join(factors)
            magnitude = abs(c)
            if not mono:
                text = str(magnitude)
            elif magnitude == 1:
                text = mono
            else:
                text = "%s*%s" % (magnitude, mono)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + text)
            else:
                pieces.append(("- " if c < 0 else "+ ") + text)
        return " ".join(pieces)

    def __repr__(self):
        return "Polynomial(%r, %s)" % (self.ring, self)


def add(p, q):
    """Exact sum of two polynomials of the same ring"""

    if p.ring != q.ring:
        raise RingMismatch("Cannot add polynomials from %r and %r" % (p.ring, q.ring))
    return p + q


def multiply(p, q):
    """Exact product of two polynomials of the same ring"""

    if p.ring != q.ring:
        raise RingMismatch(
            "Cannot multiply polynomials from %r and %r" % (p.ring, q.ring)
        )
    return p * q
