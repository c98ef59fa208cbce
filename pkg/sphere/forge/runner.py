#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Executes parsed scripts and assembles their reports."""

import collections
import dataclasses
import json
import os
import time

from dataclasses import dataclass, field

import jinja2
import tabulate

from .bundles import (
    AffineScheme,
    BrieskornParameterError,
    CompleteIntersectionCenter,
    IsomorphismCertificate,
    RegularMap,
    ResolutionChangeRejected,
    UnverifiedCenter,
    brieskorn,
    build_total_space,
    gm_weight_check,
    lift_pair_isomorphism,
    make_resolution_change,
    resolution_change,
    verify_ga_action,
    verify_pair_isomorphism,
    verify_support,
)
from .config import default_budgets, default_order
from .constants import (
    EXIT_BUDGET,
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    REPORT_SCHEMA_VERSION,
    TEMPLATES,
)
from .families import (
    build_diagonal_family,
    fiber_translation_check,
    restrict_fiber,
    verify_projection,
    verify_trivialization,
)
from .groebner import Budget, BudgetExhausted
from .ideals import (
    Ideal,
    MembershipCertificate,
    dimension,
    ideal_equality,
    ideal_membership,
    radical_membership,
    smoothness_check,
)
from .log import get_logger
from .polyring import MonomialOrder, PolynomialRing, RingMismatch
from .script import (
    CenterDecl,
    CertificateDecl,
    Command,
    IdealDecl,
    MapDecl,
    MatrixDecl,
    RingDecl,
    SchemeDecl,
    ScriptRuntimeError,
    UseDecl,
    format_statement,
)

logger = get_logger(__name__)


STATUS_EXIT = collections.OrderedDict(
    [
        ("usage", EXIT_USAGE),
        ("budget", EXIT_BUDGET),
        ("failed", EXIT_FAILED),
        ("ok", EXIT_OK),
    ]
)
"""Entry status to exit code, in decreasing precedence"""


@dataclass
class Entry:
    """One executed command"""

    index: int
    command: str
    verb: str
    verdict: str
    status: str
    witness: dict = field(default_factory=collections.OrderedDict)
    expect: str = None
    budget: dict = field(default_factory=dict)
    elapsed: float = 0.0
    certificate: str = None

    def as_dict(self):
        data = collections.OrderedDict(
            index=self.index,
            command=self.command,
            verb=self.verb,
            verdict=self.verdict,
            status=self.status,
            witness=self.witness,
            budget=self.budget,
        )
        if self.expect is not None:
            data["expect"] = self.expect
        if self.certificate is not None:
            data["certificate"] = self.certificate
        return data


@dataclass
class Report:
    """Entries of a run and the resulting exit code"""

    entries: list = field(default_factory=list)
    exit_code: int = EXIT_OK
    elapsed: float = 0.0

    def summary(self):
        counts = collections.OrderedDict((k, 0) for k in reversed(STATUS_EXIT))
        for e in self.entries:
            counts[e.status] += 1
        return counts

    def as_dict(self):
        """Deterministic part of the report"""

        return collections.OrderedDict(
            schema=REPORT_SCHEMA_VERSION,
            exit_code=self.exit_code,
            summary=self.summary(),
            entries=[e.as_dict() for e in self.entries],
        )

    def to_json(self):
        data = self.as_dict()
        data["timing"] = collections.OrderedDict(
            total=round(self.elapsed, 6),
            entries=[round(e.elapsed, 6) for e in self.entries],
        )
        return json.dumps(data, sort_keys=True, indent=2)

    def to_text(self):
        rows = [
            (e.index, e.command, e.verdict, e.status, "%.3f" % e.elapsed)
            for e in self.entries
        ]
        table = tabulate.tabulate(
            rows, headers=["#", "command", "verdict", "status", "seconds"]
        )
        summary = ", ".join("%d %s" % (v, k) for k, v in self.summary().items())
        return "%s\n\n%s (exit code %d)" % (table, summary, self.exit_code)


class _Outcome(Exception):
    """Internal: short-circuits a command with a verdict"""

    def __init__(self, verdict, status, witness=None):
        self.verdict = verdict
        self.status = status
        self.witness = witness or collections.OrderedDict()


def _strs(items):
    return [str(i) for i in items]


def _verification_witness(result):
    witness = collections.OrderedDict()
    witness["checks"] = collections.OrderedDict(
        (name, ok) for name, ok in result.checks
    )
    for name, text in result.witness:
        witness[name] = text
    if result.reason:
        witness["reason"] = result.reason
    return witness


def _checked(verification, witness=None):
    """Verdict triple of a verification, raising when its budget ran out"""

    witness = _verification_witness(verification) if witness is None else witness
    if verification.verdict == "indeterminate" and verification.reason == "budget":
        raise _Outcome("indeterminate", "budget", witness)
    return verification.verdict, verification.passed, witness


class _Session(object):
    def __init__(self, order_name, steps, timeout, cert_out):
        self.order_name = order_name
        self.steps = steps
        self.timeout = timeout
        self.cert_out = cert_out
        self.rings = {}
        self.ideals = {}
        self.schemes = {}
        self.centers = {}
        self.matrices = {}
        self.maps = {}
        self.certificates = {}
        self.totals = {}
        self.families = {}
        self.pending = None
        self.jenv = jinja2.Environment(
            loader=jinja2.FileSystemLoader(TEMPLATES),
            keep_trailing_newline=True,
        )

    # lookups

    def _get(self, table, name, what):
        try:
            return table[name]
        except KeyError:
            raise ScriptRuntimeError(
                "%s %s is not available (an earlier command did not produce it)"
                % (what, name)
            ) from None

    def scheme(self, name):
        if name in self.totals:
            return self.totals[name].total
        if name in self.families:
            return self.families[name].total
        return self._get(self.schemes, name, "scheme")

    def expr(self, node, ring):
        return node.to_polynomial(ring)

    # declarations

    def declare(self, node):
        if isinstance(node, RingDecl):
            order = node.order
            if order is None:
                mono = MonomialOrder(self.order_name)
            elif order.kind == "block":
                mono = MonomialOrder(
                    "block", tuple(node.variables.index(v) for v in order.variables)
                )
            else:
                mono = MonomialOrder(order.kind)
            self.rings[node.name] = PolynomialRing(node.variables, mono)
        elif isinstance(node, UseDecl):
            pass
        elif isinstance(node, IdealDecl):
            ring = self.rings[node.ring]
            gens = tuple(self.expr(g, ring) for g in node.generators)
            self.ideals[node.name] = (Ideal(ring, gens), gens)
        elif isinstance(node, SchemeDecl):
            if node.source in self.rings:
                ring = self.rings[node.source]
                self.schemes[node.name] = AffineScheme(ring, Ideal(ring), node.name)
            else:
                ideal, _ = self.ideals[node.source]
                self.schemes[node.name] = AffineScheme(ideal.ring, ideal, node.name)
        elif isinstance(node, CenterDecl):
            scheme = self.scheme(node.scheme)
            f = self.expr(node.f, scheme.ring)
            g = self.expr(node.g, scheme.ring)
            point = tuple(c.constant() for c in node.point)
            self.centers[node.name] = CompleteIntersectionCenter(
                scheme, f, g, point, name=node.name
            )
        elif isinstance(node, MatrixDecl):
            ring = self.rings[node.ring]
            self.matrices[node.name] = tuple(
                tuple(self.expr(e, ring) for e in row) for row in node.entries
            )
        elif isinstance(node, MapDecl):
            source, target = self.scheme(node.source), self.scheme(node.target)
            comps = tuple(self.expr(c, source.ring) for c in node.components)
            self.maps[node.name] = RegularMap(source, target, comps, node.name)
        elif isinstance(node, CertificateDecl):
            self.certificates[node.name] = IsomorphismCertificate(
                self._get(self.maps, node.forward, "map"),
                self._get(self.maps, node.inverse, "map"),
                node.name,
            )

    # commands

    def budget(self, node):
        options = dict(node.options)

        def pick(name, pair):
            override, fallback = pair
            if override is not None:
                return override
            return options.get(name, fallback)

        return Budget(pick("steps", self.steps), pick("timeout", self.timeout))

    def run(self, node, budget):
        handler = getattr(self, "do_" + node.verb.replace("-", "_"))
        return handler(node, budget)

    def do_groebner(self, node, budget):
        ideal, _ = self.ideals[node.operands[0]]
        order = None
        if node.order is not None:
            spec = node.order
            if spec.kind == "block":
                order = MonomialOrder(
                    "block",
                    tuple(ideal.ring.variables.index(v) for v in spec.variables),
                )
            else:
                order = MonomialOrder(spec.kind)
        gb = ideal.groebner(order=order, budget=budget)
        witness = collections.OrderedDict(
            order=gb.order.describe(gb.ring.variables),
            basis=_strs(gb.elements),
            size=len(gb),
        )
        return "computed", True, witness

    def do_member(self, node, budget):
        h_node, name = node.operands
        ideal, _ = self.ideals[name]
        h = self.expr(h_node, ideal.ring)
        member, cert = ideal_membership(
            h, ideal, certificate=self.cert_out is not None, budget=budget
        )
        witness = collections.OrderedDict(element=str(h), ideal=str(ideal))
        if cert is not None and ideal.generators:
            witness["cofactors"] = _strs(cert.cofactors)
            self.pending = ("membership", dict(
                ring=ideal.ring,
                ideal=ideal,
                target=h,
                cofactors=cert.cofactors,
                origin=format_statement(node),
            ))
        return ("true" if member else "false"), member, witness

    def do_radical_member(self, node, budget):
        h_node, name = node.operands
        ideal, _ = self.ideals[name]
        h = self.expr(h_node, ideal.ring)
        member = radical_membership(h, ideal, budget)
        witness = collections.OrderedDict(element=str(h), ideal=str(ideal))
        return ("true" if member else "false"), member, witness

    def do_cofactors(self, node, budget):
        h_node, name, cof_nodes = node.operands
        ideal, gens = self.ideals[name]
        h = self.expr(h_node, ideal.ring)
        cofactors = tuple(self.expr(c, ideal.ring) for c in cof_nodes)
        cert = MembershipCertificate(h, cofactors, gens)
        ok = cert.verify()
        witness = collections.OrderedDict(
            element=str(h), expansion=str(cert.expand())
        )
        return ("verified" if ok else "failed"), ok, witness

    def do_dim(self, node, budget):
        ideal, _ = self.ideals[node.operands[0]]
        d = dimension(ideal, budget)
        return str(d), True, collections.OrderedDict(dimension=d, empty=d < 0)

    def do_equal(self, node, budget):
        (a, _), (b, _) = (self.ideals[n] for n in node.operands)
        same = ideal_equality(a, b, budget)
        witness = collections.OrderedDict(
            left=_strs(a.groebner(budget=budget).elements),
            right=_strs(b.to_ring(a.ring).groebner(budget=budget).elements),
        )
        return ("true" if same else "false"), same, witness

    def do_smooth(self, node, budget):
        scheme = self.scheme(node.operands[0])
        try:
            verdict = smoothness_check(scheme.ideal, budget=budget)
        except ValueError as e:
            return "empty", False, collections.OrderedDict(reason=str(e))
        witness = collections.OrderedDict(
            dimension=verdict.dimension, codimension=verdict.codimension
        )
        if verdict.witness is not None:
            witness["singular_locus"] = _strs(verdict.witness.generators)
        if verdict.reason:
            witness["reason"] = verdict.reason
        if verdict.reason == "budget":
            raise _Outcome("indeterminate", "budget", witness)
        return verdict.status, verdict.passed, witness

    def do_support(self, node, budget):
        name = node.operands[0]
        report = verify_support(self.centers[name], budget)
        if report.verdict == "indeterminate":
            raise _Outcome("indeterminate", "budget")
        self.centers[name] = report.center
        witness = collections.OrderedDict(center=str(report.center))
        if report.failed_check:
            witness["failed_check"] = report.failed_check
            witness["detail"] = report.detail
        return report.verdict, report.passed, witness

    def do_build(self, node, budget):
        center = self.centers[node.operands[0]]
        try:
            space = build_total_space(
                center.ambient, center, override=node.override, name=node.target
            )
        except UnverifiedCenter as e:
            return "rejected", False, collections.OrderedDict(reason=str(e))
        self.totals[node.target] = space
        witness = collections.OrderedDict(
            variables=list(space.total.variables),
            ideal=_strs(space.total.ideal.generators),
        )
        return "built", True, witness

    def do_ga_check(self, node, budget):
        space = self._get(self.totals, node.operands[0], "total space")
        result = verify_ga_action(space, budget)
        return _checked(result)

    def do_reschange(self, node, budget):
        center = self.centers[node.operands[0]]
        matrix = self.matrices[node.operands[1]]
        try:
            change = make_resolution_change(center.ambient, matrix, budget)
        except ResolutionChangeRejected as e:
            return "rejected", False, collections.OrderedDict(reason=str(e))
        result = resolution_change(center.ambient, center, change, budget)
        self.centers[node.target] = dataclasses.replace(result.center, name=node.target)
        if result.report.passed:
            self.pending = ("iso-check", dict(
                certificate=result.automorphism,
                origin=format_statement(node),
            ))
        return _checked(result.report)

    def do_pair_iso(self, node, budget):
        c1, c2 = (self.centers[n] for n in node.operands[:2])
        cert = self._get(self.certificates, node.operands[2], "certificate")
        left, right = (c1.ambient, c1), (c2.ambient, c2)
        result = verify_pair_isomorphism(left, right, cert, budget)
        witness = _verification_witness(result)
        if result.verdict == "indeterminate":
            raise _Outcome("indeterminate", "budget", witness)
        if result.verdict == "pairs-isomorphic":
            lifted = lift_pair_isomorphism(left, right, cert, budget)
            witness["total_spaces"] = lifted.report.verdict
            self.pending = ("pair-iso", dict(
                left=c1, right=c2, certificate=cert, origin=format_statement(node)
            ))
        return result.verdict, result.passed, witness

    def do_iso_check(self, node, budget):
        cert = self._get(self.certificates, node.operands[0], "certificate")
        result = cert.verify(budget)
        if result.passed:
            self.pending = ("iso-check", dict(
                certificate=cert, origin=format_statement(node)
            ))
        return _checked(result)

    def do_brieskorn(self, node, budget):
        p, q, r = node.operands
        try:
            surface = brieskorn(p, q, r)
        except BrieskornParameterError as e:
            return "rejected", False, collections.OrderedDict(reason=str(e))
        surface.name = node.target
        self.schemes[node.target] = surface
        witness = collections.OrderedDict(
            ideal=_strs(surface.ideal.generators),
            singular_points=[_strs(p) for p in surface.singular_points],
        )
        return "accepted", True, witness

    def do_gm_check(self, node, budget):
        try:
            result = gm_weight_check(*node.operands)
        except BrieskornParameterError as e:
            return "rejected", False, collections.OrderedDict(reason=str(e))
        return result.verdict, result.passed, _verification_witness(result)

    def do_diag_family(self, node, budget):
        family = build_diagonal_family(budget=budget)
        self.families[node.target] = family
        verdict = family.smoothness
        witness = collections.OrderedDict(
            ideal=_strs(family.total.ideal.generators),
            dimension=verdict.dimension,
        )
        if verdict.reason == "budget":
            raise _Outcome("indeterminate", "budget", witness)
        return verdict.status, verdict.passed and verdict.dimension == 5, witness

    def do_trivialize(self, node, budget):
        family = None
        if node.operands:
            family = self._get(self.families, node.operands[0], "family")
        result = verify_trivialization(family)
        return result.verdict, result.passed, _verification_witness(result)

    def do_fiber(self, node, budget):
        family = self._get(self.families, node.operands[0], "family")
        point = tuple(c.constant() for c in node.operands[1])
        restriction = restrict_fiber(family, point, budget)
        translation = fiber_translation_check(family, point, budget)
        witness = collections.OrderedDict(
            fiber=_strs(restriction.fiber.ideal.generators),
            direct=_strs(restriction.direct.ideal.generators),
            renaming=collections.OrderedDict(restriction.renaming),
            translation=_verification_witness(translation),
        )
        if restriction.equal is None or translation.verdict == "indeterminate":
            raise _Outcome("indeterminate", "budget", witness)
        ok = restriction.equal and translation.passed
        return ("equal" if restriction.equal else "different"), ok, witness

    def do_projection(self, node, budget):
        family = self._get(self.families, node.operands[0], "family")
        result = verify_projection(family, budget)
        return _checked(result)

    # certificate files

    def _scheme_lines(self, scheme, name, seen):
        ring_name = "R_%s" % name
        lines = []
        order = scheme.ring.order.describe(scheme.ring.variables)
        lines.append(
            "ring %s = Q[%s] order %s;"
            % (ring_name, ", ".join(scheme.variables), order)
        )
        if scheme.ideal.generators:
            lines.append(
                "ideal I_%s in %s = %s;"
                % (name, ring_name, ", ".join(_strs(scheme.ideal.generators)))
            )
            lines.append("scheme %s = I_%s;" % (name, name))
        else:
            lines.append("scheme %s = %s;" % (name, ring_name))
        seen[id(scheme)] = name
        return lines

    def _map_line(self, name, m, names):
        return "map %s : %s -> %s = (%s);" % (
            name,
            names[id(m.source)],
            names[id(m.target)],
            ", ".join(_strs(m.components)),
        )

    def _certificate_lines(self, cert, names, lines):
        for scheme, label in ((cert.source, "X"), (cert.target, "Y")):
            if id(scheme) not in names:
                lines.extend(self._scheme_lines(scheme, label, names))
        lines.append(self._map_line("F", cert.forward, names))
        lines.append(self._map_line("G", cert.inverse, names))
        lines.append("certificate K = F, G;")

    def render(self, kind, data):
        lines = []
        if kind == "membership":
            ring = data["ring"]
            lines.append(
                "ring R = Q[%s] order %s;"
                % (", ".join(ring.variables), ring.order.describe(ring.variables))
            )
            lines.append(
                "ideal I in R = %s;" % ", ".join(_strs(data["ideal"].generators))
            )
            check = "cofactors %s in I = (%s) expect verified;" % (
                data["target"],
                ", ".join(_strs(data["cofactors"])),
            )
        elif kind == "pair-iso":
            names = {}
            left, right = data["left"], data["right"]
            lines.extend(self._scheme_lines(left.ambient, "X", names))
            if id(right.ambient) not in names:
                lines.extend(self._scheme_lines(right.ambient, "Y", names))
            for label, c in (("C1", left), ("C2", right)):
                lines.append(
                    "center %s = %s : (%s, %s) at (%s);"
                    % (
                        label,
                        names[id(c.ambient)],
                        c.f,
                        c.g,
                        ", ".join(_strs(c.support_point)),
                    )
                )
            cert = data["certificate"]
            lines.append(self._map_line("F", cert.forward, names))
            lines.append(self._map_line("G", cert.inverse, names))
            lines.append("certificate K = F, G;")
            check = "pair-iso C1, C2 via K expect pairs-isomorphic;"
        else:
            self._certificate_lines(data["certificate"], {}, lines)
            check = "iso-check K expect isomorphic;"
        template = self.jenv.get_template("certificate.sfs")
        return template.render(
            kind=kind, origin=data["origin"], declarations=lines, check=check
        )

    def write_certificate(self, index, verb):
        kind, data = self.pending
        os.makedirs(self.cert_out, exist_ok=True)
        path = os.path.join(self.cert_out, "%03d-%s.sfs" % (index, verb))
        with open(path, "wt") as f:
            f.write(self.render(kind, data))
        logger.info("certificate written to %s", path)
        return path


_USAGE_ERRORS = (ScriptRuntimeError, RingMismatch, ValueError, ZeroDivisionError)
"""Errors that stop a run with a usage verdict"""


def _judge(verdict, passed, expect):
    if expect is not None:
        return "ok" if verdict == expect else "failed"
    return "ok" if passed else "failed"


def execute(script, steps=None, timeout=None, cert_out=None, order=None, config=None):
    """Runs every statement of ``script`` in sequence

    Parameters:

      script (Script): parsed script
      steps (int, Optional): step budget per command, overrides ``with``
        clauses and configuration
      timeout (float, Optional): wall-clock budget per command (seconds),
        same precedence as ``steps``
      cert_out (str, Optional): directory receiving certificate files
      order (str, Optional): default monomial order of rings declared
        without one, ``grevlex`` or ``lex``
      config (configparser.ConfigParser, Optional): configuration replacing
        the user's ``~/.sphereforgerc``

    Returns:

      Report: with one entry per command; its ``exit_code`` is 3 if a usage
      error stopped the run, else 2 if any budget ran out, else 1 if a check
      failed, else 0
    """

    rc_steps, rc_timeout = default_budgets(config)
    session = _Session(
        order or default_order(config),
        (steps, rc_steps),
        (timeout, rc_timeout),
        cert_out,
    )
    report = Report()
    started = time.monotonic()
    index = 0
    for node in script:
        if not isinstance(node, Command):
            try:
                session.declare(node)
            except _USAGE_ERRORS as e:
                text = format_statement(node)
                logger.error("%s: %s", text, e)
                index += 1
                witness = collections.OrderedDict(error=str(e))
                report.entries.append(
                    Entry(index, text, "declaration", "error", "usage", witness)
                )
                break
            continue

        index += 1
        text = format_statement(node)
        budget = session.budget(node)
        session.pending = None
        entry = Entry(index, text, node.verb, "error", "usage", expect=node.expect)
        t0 = time.monotonic()
        try:
            verdict, passed, witness = session.run(node, budget)
            entry.verdict, entry.witness = verdict, witness
            entry.status = _judge(verdict, passed, node.expect)
        except _Outcome as o:
            entry.verdict, entry.status, entry.witness = o.verdict, o.status, o.witness
        except BudgetExhausted as e:
            logger.warning("%s: %s", text, e)
            entry.verdict, entry.status = "indeterminate", "budget"
            entry.witness = collections.OrderedDict(
                reason="budget", kind=e.kind, limit=e.limit
            )
        except _USAGE_ERRORS as e:
            logger.error("%s: %s", text, e)
            entry.witness = collections.OrderedDict(error=str(e))
        entry.elapsed = time.monotonic() - t0
        entry.budget = budget.as_dict()
        if entry.status == "ok" and session.pending and cert_out is not None:
            entry.certificate = os.path.basename(
                session.write_certificate(index, node.verb)
            )
        logger.info("[%d] %s -> %s (%s)", index, text, entry.verdict, entry.status)
        report.entries.append(entry)
        if entry.status == "usage":
            break

    report.elapsed = time.monotonic() - started
    statuses = {e.status for e in report.entries}
    report.exit_code = next(
        (code for status, code in STATUS_EXIT.items() if status in statuses), EXIT_OK
    )
    return report
