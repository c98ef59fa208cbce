#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Multivariate division and reduced Gröbner bases.

The completion is Buchberger's algorithm with the Gebauer-Möller pair
update (Becker & Weispfenning, Gröbner Bases, page 230) and normal pair
selection refined by sugar degree.  Every computation may be bounded by a
:py:class:`Budget`; running out of it raises :py:class:`BudgetExhausted`,
never a partial answer.
"""

import threading
import time

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction

from .log import get_logger
from .polyring import (
    Polynomial,
    RingMismatch,
    monomial_div,
    monomial_lcm,
    monomial_mul,
)

logger = get_logger(__name__)


class BudgetExhausted(RuntimeError):
    """Raised when a computation exceeds its step or wall-clock allowance

    Attributes:

      kind (str): ``steps`` or ``time``
      used: amount consumed when the limit was hit
      limit: the configured limit
    """

    def __init__(self, kind, used, limit):
        self.kind = kind
        self.used = used
        self.limit = limit
        unit = "S-pair reductions" if kind == "steps" else "seconds"
        super().__init__(
            "Budget exhausted: %s %s used, limit is %s" % (used, unit, limit)
        )


class Budget(object):
    """Step and wall-clock allowance shared by the computations of a command

    The clock starts at construction.  ``None`` disables the corresponding
    limit.
    """

    def __init__(self, steps=None, timeout=None):
        self.steps = steps
        self.timeout = timeout
        self.used = 0
        self.started = time.monotonic()

    @property
    def elapsed(self):
        return time.monotonic() - self.started

    def charge(self, n=1):
        self.used += n
        if self.steps is not None and self.used > self.steps:
            raise BudgetExhausted("steps", self.used, self.steps)
        self.check_clock()

    def check_clock(self):
        if self.timeout is not None:
            elapsed = self.elapsed
            if elapsed > self.timeout:
                raise BudgetExhausted("time", round(elapsed, 3), self.timeout)

    def as_dict(self):
        return dict(steps_used=self.used, steps_limit=self.steps)


def _budget(budget):
    return budget if budget is not None else Budget()


def _keycache(key):
    cache = {}

    def k(m):
        try:
            return cache[m]
        except KeyError:
            v = cache[m] = key(m)
            return v

    return k


def _reduce(p, basis, key, budget=None, quotients=None):
    """Fully reduces the term dictionary ``p`` by monic ``basis``

    ``basis`` is a list of ``(tag, leading monomial, term dictionary)``.
    When ``quotients`` is a dictionary, the quotient of every division step
    is accumulated under the tag of the divisor.
    """

    p = dict(p)
    remainder = {}
    k = _keycache(key)
    steps = 0
    while p:
        m = max(p, key=k)
        c = p[m]
        for tag, lm, g in basis:
            q = monomial_div(m, lm)
            if q is None:
                continue
            for gm, gc in g.items():
                mm = monomial_mul(gm, q)
                v = p.get(mm, 0) - c * gc
                if v:
                    p[mm] = v
                else:
                    p.pop(mm, None)
            if quotients is not None:
                qd = quotients.setdefault(tag, {})
                v = qd.get(q, 0) + c
                if v:
                    qd[q] = v
                else:
                    qd.pop(q, None)
            break
        else:
            remainder[m] = c
            del p[m]
        steps += 1
        if budget is not None and not steps % 256:
            budget.check_clock()
    return remainder


def _dict_axpy(acc, a, b):
    # acc += a * b, in place
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = monomial_mul(m1, m2)
            v = acc.get(m, 0) + c1 * c2
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
    return acc


def _dict_term(d, mono, coeff):
    return {monomial_mul(m, mono): c * coeff for m, c in d.items()}


def _common_ring(polys, order=None):
    if not polys:
        raise ValueError("At least one generator is required")
    variables = polys[0].ring.variables
    for p in polys[1:]:
        if p.ring.variables != variables:
            raise RingMismatch(
                "Generators live in different rings: %r and %r"
                % (polys[0].ring, p.ring)
            )
    ring = polys[0].ring if order is None else polys[0].ring.with_order(order)
    return ring, [p.to_ring(ring) for p in polys]


def normal_form(p, basis, order=None, budget=None):
    """Remainder of the multivariate division of ``p`` by ``basis``

    Parameters:

      p (Polynomial): the dividend
      basis (list): nonzero polynomials of the same ring
      order (MonomialOrder, Optional): order used for division, defaults to
        the ring's own order; the remainder lives in the ring under this order
      budget (Budget, Optional): clock checked during the division

    Returns:

      Polynomial: remainder without any term divisible by a leading monomial
      of ``basis``
    """

    ring, (p, *basis) = _common_ring([p] + list(basis), order)
    divisors = []
    for i, b in enumerate(basis):
        if b.is_zero():
            raise ValueError("Division by the zero polynomial")
        lm, lc = b.leading_term()
        divisors.append((i, lm, {m: c / lc for m, c in b.as_dict().items()}))
    return Polynomial._raw(
        ring, _reduce(p.as_dict(), divisors, ring.key, budget)
    )


def divide(p, basis, order=None, budget=None):
    """Division with quotients: returns ``(quotients, remainder)`` such that
    ``p == sum(q * b for q, b in zip(quotients, basis)) + remainder``"""

    ring, (p, *basis) = _common_ring([p] + list(basis), order)
    divisors = []
    scale = []
    for i, b in enumerate(basis):
        if b.is_zero():
            raise ValueError("Division by the zero polynomial")
        lm, lc = b.leading_term()
        scale.append(lc)
        divisors.append((i, lm, {m: c / lc for m, c in b.as_dict().items()}))
    quotients = {}
    remainder = _reduce(p.as_dict(), divisors, ring.key, budget, quotients)
    return (
        tuple(
            Polynomial._raw(
                ring, {m: c / lc for m, c in quotients.get(i, {}).items()}
            )
            for i, lc in enumerate(scale)
        ),
        Polynomial._raw(ring, remainder),
    )


def s_polynomial(p, q):
    """The S-polynomial of two nonzero polynomials of the same ring"""

    if p.ring != q.ring:
        raise RingMismatch("S-polynomial of %r and %r" % (p.ring, q.ring))
    (mp, cp), (mq, cq) = p.leading_term(), q.leading_term()
    lcm = monomial_lcm(mp, mq)
    return p.mul_term(monomial_div(lcm, mp), 1 / cp) - q.mul_term(
        monomial_div(lcm, mq), 1 / cq
    )


def satisfies_buchberger_criterion(basis):
    """Checks every S-polynomial of ``basis`` reduces to zero against it"""

    basis = [b for b in basis if b]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(s_polynomial(basis[i], basis[j]), basis):
                return False
    return True


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis

    Attributes:

      ring (PolynomialRing): ring (and hence monomial order) of the basis
      elements (tuple): monic elements, sorted by descending leading monomial
      generators (tuple): the generators the basis was computed from
      cofactors (tuple): when tracked, for every element the tuple of
        polynomials ``h`` with ``element = sum(h[i] * generators[i])``
      steps (int): S-pair reductions spent
    """

    ring: object
    elements: tuple
    generators: tuple
    cofactors: tuple = None
    steps: int = 0

    @property
    def order(self):
        return self.ring.order

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_unit(self):
        """``True`` iff the basis is ``{1}`` (the ideal is the whole ring)"""

        return len(self.elements) == 1 and self.elements[0].is_constant()

    def is_zero(self):
        return not self.elements

    def leading_monomials(self):
        return tuple(e.leading_monomial() for e in self.elements)

    def reduce(self, p, budget=None):
        p = p.to_ring(self.ring)
        if not self.elements:
            return p
        return normal_form(p, self.elements, budget=budget)

    def contains(self, p, budget=None):
        return self.reduce(p, budget).is_zero()

    def __str__(self):
        return "{%s}" % ", ".join(str(e) for e in self.elements)


class _Memo(object):
    """Process-wide store of computed bases, safe for concurrent use"""

    def __init__(self, size=512):
        self.size = size
        self._data = OrderedDict()
        self._lock = threading.Lock()

    @staticmethod
    def key(ring, polys):
        return (
            ring,
            frozenset(frozenset(p.monic().as_dict().items()) for p in polys),
        )

    def get(self, key):
        with self._lock:
            value = self._data.get(key)
            if value is not None:
                self._data.move_to_end(key)
            return value

    def put(self, key, value):
        with self._lock:
            self._data.setdefault(key, value)
            self._data.move_to_end(key)
            while len(self._data) > self.size:
                self._data.popitem(last=False)

    def clear(self):
        with self._lock:
            self._data.clear()


_memo = _Memo()


def clear_cache():
    """Forgets every memoized basis"""

    _memo.clear()


def _buchberger(gens, ring, budget, track):
    key = _keycache(ring.key)
    zero = (0,) * ring.ngens
    n_in = len(gens)

    f = []  # monic term dictionaries, indexed by position
    lms = []
    sugar = []
    cof = []  # per element: list of cofactor dictionaries, one per input

    def append(poly, lm, s, cofactors):
        f.append(poly)
        lms.append(lm)
        sugar.append(s)
        cof.append(cofactors)
        return len(f) - 1

    def update(G, B, ih):
        # Gebauer-Möller installation of element ih
        mh = lms[ih]
        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = lms[ig]
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                return monomial_div(lcm_hg, monomial_lcm(mh, lms[ip])) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))

        E = set()
        for ih_, ig in D:
            if monomial_mul(mh, lms[ig]) != monomial_lcm(mh, lms[ig]):
                E.add((ih_, ig))

        B_new = set()
        for ig1, ig2 in B:
            lcm12 = monomial_lcm(lms[ig1], lms[ig2])
            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(lms[ig1], mh) == lcm12
                or monomial_lcm(lms[ig2], mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if monomial_div(lms[ig], mh) is None}
        G_new.add(ih)
        return G_new, B_new

    def pair_sugar(pair):
        i, j = pair
        lcm = monomial_lcm(lms[i], lms[j])
        d = sum(lcm)
        return max(sugar[i] + d - sum(lms[i]), sugar[j] + d - sum(lms[j]))

    def select(B):
        return min(
            B,
            key=lambda pr: (
                pair_sugar(pr),
                key(monomial_lcm(lms[pr[0]], lms[pr[1]])),
                pr,
            ),
        )

    def cofactor_combination(pieces):
        # pieces: iterable of (multiplier dictionary, element index)
        out = [{} for _ in range(n_in)]
        for mult, idx in pieces:
            for k, h in enumerate(cof[idx]):
                if h:
                    _dict_axpy(out[k], mult, h)
        return out

    order_in = []
    for i, g in enumerate(gens):
        d = g.as_dict()
        lm = max(d, key=key)
        lc = d[lm]
        cofactors = None
        if track:
            cofactors = [{} for _ in range(n_in)]
            cofactors[i] = {zero: 1 / lc}
        idx = append(
            {m: c / lc for m, c in d.items()},
            lm,
            max(sum(m) for m in d),
            cofactors,
        )
        order_in.append(idx)

    G, B = set(), set()
    for idx in sorted(order_in, key=lambda i: key(lms[i])):
        G, B = update(G, B, idx)

    reductions = 0
    while B:
        pair = select(B)
        B.discard(pair)
        budget.charge()
        reductions += 1
        i, j = pair
        lcm = monomial_lcm(lms[i], lms[j])
        ti, tj = monomial_div(lcm, lms[i]), monomial_div(lcm, lms[j])
        s = _dict_term(f[i], ti, 1)
        for m, c in f[j].items():
            mm = monomial_mul(m, tj)
            v = s.get(mm, 0) - c
            if v:
                s[mm] = v
            else:
                s.pop(mm, None)

        quotients = {} if track else None
        divisors = [(k, lms[k], f[k]) for k in sorted(G)]
        h = _reduce(s, divisors, ring.key, budget, quotients)
        if not h:
            continue

        lm = max(h, key=key)
        lc = h[lm]
        cofactors = None
        if track:
            pieces = [({ti: Fraction(1)}, i), ({tj: Fraction(-1)}, j)]
            pieces += [
                ({m: -c for m, c in q.items()}, k)
                for k, q in quotients.items()
                if q
            ]
            cofactors = [
                {m: c / lc for m, c in h_.items()}
                for h_ in cofactor_combination(pieces)
            ]
        ih = append({m: c / lc for m, c in h.items()}, lm, pair_sugar(pair), cofactors)
        G, B = update(G, B, ih)

    # minimal basis: inputs installed early may have redundant leading terms
    G = {
        ig
        for ig in G
        if not any(
            k != ig and monomial_div(lms[ig], lms[k]) is not None for k in G
        )
    }

    # tail reduction towards the unique reduced basis
    result = []
    for ig in sorted(G, key=lambda k: key(lms[k]), reverse=True):
        others = [(k, lms[k], f[k]) for k in G if k != ig]
        quotients = {} if track else None
        r = _reduce(f[ig], others, ring.key, budget, quotients)
        cofactors = None
        if track:
            pieces = [({zero: Fraction(1)}, ig)]
            pieces += [
                ({m: -c for m, c in q.items()}, k)
                for k, q in quotients.items()
                if q
            ]
            cofactors = cofactor_combination(pieces)
        result.append((r, cofactors))

    logger.debug(
        "Buchberger on %d generator(s) in %r: %d pair reduction(s), "
        "basis of %d element(s)",
        n_in,
        ring,
        reductions,
        len(result),
    )
    return result, reductions


def reduced_groebner_basis(gens, order=None, budget=None, track_cofactors=False):
    """Computes the reduced Gröbner basis of the ideal generated by ``gens``

    Parameters:

      gens (list): at least one :py:class:`Polynomial`, all of the same ring
        (zero polynomials are allowed and ignored)
      order (MonomialOrder, Optional): order of the basis, defaults to the
        order of the generators' ring
      budget (Budget, Optional): step and time allowance
      track_cofactors (bool): if set, the returned basis carries, for each
        element, its expression as a combination of ``gens``

    Returns:

      GroebnerBasis: the unique reduced basis (empty for the zero ideal)

    Raises:

      BudgetExhausted: if the budget runs out before completion
      RingMismatch: if generators come from different rings
    """

    budget = _budget(budget)
    budget.check_clock()
    ring, gens = _common_ring(list(gens), order)
    nonzero = [(i, g) for i, g in enumerate(gens) if g]

    def expand(cofactor_dicts):
        # cofactors over the nonzero generators -> over all given generators
        full = [ring.zero() for _ in gens]
        for (i, _), d in zip(nonzero, cofactor_dicts):
            full[i] = Polynomial._raw(ring, d)
        return tuple(full)

    if not nonzero:
        return GroebnerBasis(
            ring, (), tuple(gens), () if track_cofactors else None, 0
        )

    memo_key = None
    if not track_cofactors:
        memo_key = _Memo.key(ring, [g for _, g in nonzero])
        hit = _memo.get(memo_key)
        if hit is not None:
            elements, steps = hit
            # a cached basis costs what computing it did
            if steps:
                budget.charge(steps)
            else:
                budget.check_clock()
            return GroebnerBasis(ring, elements, tuple(gens), None, steps)

    result, steps = _buchberger(
        [g for _, g in nonzero], ring, budget, track_cofactors
    )
    elements = tuple(Polynomial._raw(ring, r) for r, _ in result)
    cofactors = None
    if track_cofactors:
        cofactors = tuple(expand(c) for _, c in result)
    else:
        _memo.put(memo_key, (elements, steps))
    return GroebnerBasis(ring, elements, tuple(gens), cofactors, steps)
