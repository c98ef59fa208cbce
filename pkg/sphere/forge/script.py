#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The ``.sfs`` script language: tokenizer, parser, syntax tree and printer.

A script is a sequence of ``;``-terminated statements.  Declarations bind
names to rings, ideals, schemes, centers, matrices, maps and certificates;
commands run computations on them.  Every name must be declared before use
and the parser checks this (and every polynomial variable) before anything is
executed.  ``#`` starts a comment running to the end of the line.

Example::

    ring R = Q[x, y, U, V];
    ideal I = x*V - y*U - 1;
    scheme SL2 = I;
    smooth SL2 expect smooth;
"""

import collections
import decimal
import re

from dataclasses import dataclass, field
from fractions import Fraction

from .log import get_logger

logger = get_logger(__name__)


class ScriptError(Exception):
    """Base class of script errors, carrying the offending position"""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = "line %d, column %d: %s" % (line, column, message)
        super().__init__(message)


class ScriptSyntaxError(ScriptError):
    """Malformed input, ``expected`` lists what would have been accepted"""

    def __init__(self, message, line=None, column=None, expected=()):
        self.expected = tuple(sorted(set(expected)))
        if self.expected:
            message = "%s (expected %s)" % (
                message,
                ", ".join(repr(e) for e in self.expected),
            )
        super().__init__(message, line, column)


class DuplicateIdentifier(ScriptError):
    """A name (or ring variable) declared twice"""


class UndeclaredIdentifier(ScriptError):
    """A name (or polynomial variable) used before its declaration"""


class ScriptRuntimeError(ScriptError):
    """A well-formed statement that cannot be executed"""


TOKENS = collections.OrderedDict(
    [
        ("ignore", r"[ \t\r\n]+|\#[^\n]*"),
        ("number", r"\d+(?:\.\d+)?"),
        ("ident", r"[A-Za-z_][A-Za-z0-9_]*"),
        ("arrow", r"->"),
        ("punct", r"[-+*/^()\[\],;:=]"),
    ]
)

_TOKEN_RE = re.compile("|".join("(?P<%s>%s)" % kv for kv in TOKENS.items()))

Token = collections.namedtuple(
    "Token", ["kind", "text", "line", "column", "start", "end"]
)


def tokenize(text):
    """Splits ``text`` into tokens, the last one of kind ``end``"""

    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ScriptSyntaxError(
                "unexpected character %r" % text[pos], line, pos - line_start + 1
            )
        kind = m.lastgroup
        if kind != "ignore":
            tokens.append(
                Token(kind, m.group(0), line, pos - line_start + 1, pos, m.end())
            )
        for i, ch in enumerate(m.group(0)):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1, pos, pos))
    return tokens


# expressions


@dataclass(frozen=True)
class Num:
    value: int

    def variables(self):
        return set()

    def to_polynomial(self, ring):
        return ring.constant(self.value)

    def constant(self):
        return Fraction(self.value)


@dataclass(frozen=True)
class Var:
    name: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def variables(self):
        return {self}

    def to_polynomial(self, ring):
        return ring.gen(self.name)

    def constant(self):
        return None


@dataclass(frozen=True)
class Neg:
    operand: object

    def variables(self):
        return self.operand.variables()

    def to_polynomial(self, ring):
        return -self.operand.to_polynomial(ring)

    def constant(self):
        c = self.operand.constant()
        return None if c is None else -c


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object

    def variables(self):
        return self.left.variables() | self.right.variables()

    def to_polynomial(self, ring):
        a = self.left.to_polynomial(ring)
        if self.op == "/":
            return a / self.right.constant()
        b = self.right.to_polynomial(ring)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        return a * b

    def constant(self):
        a, b = self.left.constant(), self.right.constant()
        if a is None or b is None:
            return None
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        return a / b


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int

    def variables(self):
        return self.base.variables()

    def to_polynomial(self, ring):
        return self.base.to_polynomial(ring) ** self.exponent

    def constant(self):
        c = self.base.constant()
        return None if c is None else c ** self.exponent


# statements


def _pos():
    return field(default=0, compare=False)


@dataclass(frozen=True)
class OrderSpec:
    kind: str
    variables: tuple = ()


@dataclass(frozen=True)
class RingDecl:
    name: str
    variables: tuple
    order: OrderSpec = None
    line: int = _pos()


@dataclass(frozen=True)
class UseDecl:
    ring: str
    line: int = _pos()


@dataclass(frozen=True)
class IdealDecl:
    name: str
    ring: str
    generators: tuple
    line: int = _pos()


@dataclass(frozen=True)
class SchemeDecl:
    name: str
    source: str
    line: int = _pos()


@dataclass(frozen=True)
class CenterDecl:
    name: str
    scheme: str
    f: object
    g: object
    point: tuple
    line: int = _pos()


@dataclass(frozen=True)
class MatrixDecl:
    name: str
    ring: str
    entries: tuple
    line: int = _pos()


@dataclass(frozen=True)
class MapDecl:
    name: str
    source: str
    target: str
    components: tuple
    line: int = _pos()


@dataclass(frozen=True)
class CertificateDecl:
    name: str
    forward: str
    inverse: str
    line: int = _pos()


@dataclass(frozen=True)
class Command:
    """A command; the meaning of ``operands`` depends on ``verb``

    ``target`` is the name bound by ``build``, ``reschange``, ``brieskorn``
    and ``diag-family``.  ``options`` holds the ``with`` clause as
    ``(key, value)`` pairs.
    """

    verb: str
    operands: tuple = ()
    target: str = None
    order: OrderSpec = None
    override: bool = False
    options: tuple = ()
    expect: str = None
    line: int = _pos()


@dataclass(frozen=True)
class Script:
    statements: tuple

    def __len__(self):
        return len(self.statements)

    def __iter__(self):
        return iter(self.statements)

    def commands(self):
        return [s for s in self.statements if isinstance(s, Command)]


DECLARATIONS = (
    "ring",
    "use",
    "ideal",
    "scheme",
    "center",
    "matrix",
    "map",
    "certificate",
)

COMMANDS = (
    "groebner",
    "member",
    "radical-member",
    "cofactors",
    "dim",
    "equal",
    "smooth",
    "support",
    "build",
    "ga-check",
    "reschange",
    "pair-iso",
    "iso-check",
    "brieskorn",
    "gm-check",
    "diag-family",
    "trivialize",
    "fiber",
    "projection",
)

OPTIONS = ("steps", "timeout")

SCHEME_KINDS = ("scheme", "total", "family")

_Symbol = collections.namedtuple("_Symbol", ["kind", "variables", "extra"])


BRIESKORN_VARIABLES = ("x", "y", "z")
FAMILY_VARIABLES = ("x1", "y1", "x2", "y2", "U", "V")
FIBER_COORDINATES = ("U", "V")


class _Parser(object):
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0
        self.symbols = {}
        self.active = None

    # token helpers

    def peek(self, offset=0):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def at(self, text):
        tok = self.peek()
        return tok.kind in ("punct", "ident", "arrow") and tok.text == text

    def fail(self, message, tok=None, expected=()):
        tok = tok or self.peek()
        raise ScriptSyntaxError(message, tok.line, tok.column, expected)

    def expect(self, *texts):
        tok = self.peek()
        if tok.kind in ("punct", "ident", "arrow") and tok.text in texts:
            return self.advance()
        self.fail("unexpected %s" % _describe(tok), tok, texts)

    def accept(self, text):
        if self.at(text):
            return self.advance()
        return None

    def ident(self, what="identifier"):
        tok = self.peek()
        if tok.kind != "ident":
            self.fail("unexpected %s" % _describe(tok), tok, (what,))
        return self.advance()

    def word(self):
        """An identifier, possibly hyphenated without spaces (``ga-check``)"""

        first = self.ident()
        parts, end = [first.text], first.end
        while (
            self.peek().text == "-"
            and self.peek().start == end
            and self.peek(1).kind in ("ident", "number")
            and self.peek(1).start == end + 1
        ):
            self.advance()
            tok = self.advance()
            parts.append(tok.text)
            end = tok.end
        return first, "-".join(parts)

    def integer(self, what="integer"):
        tok = self.peek()
        if tok.kind != "number" or "." in tok.text:
            self.fail("unexpected %s" % _describe(tok), tok, (what,))
        self.advance()
        return int(tok.text)

    # symbol table

    def declare(self, tok, kind, variables=(), extra=None):
        if tok.text in self.symbols:
            raise DuplicateIdentifier(
                "%s is already declared as a %s"
                % (tok.text, self.symbols[tok.text].kind),
                tok.line,
                tok.column,
            )
        self.symbols[tok.text] = _Symbol(kind, tuple(variables), extra)

    def lookup(self, tok, kinds):
        sym = self.symbols.get(tok.text)
        if sym is None:
            raise UndeclaredIdentifier(
                "%s is used before its declaration" % tok.text,
                tok.line,
                tok.column,
            )
        if sym.kind not in kinds:
            raise ScriptSyntaxError(
                "%s is a %s, expected %s"
                % (tok.text, sym.kind, " or ".join(kinds)),
                tok.line,
                tok.column,
            )
        return sym

    def ring_for(self, tok_in):
        """Resolves ``in R`` or the active ring"""

        if tok_in is not None:
            self.lookup(tok_in, ("ring",))
            return tok_in.text
        if self.active is None:
            tok = self.peek()
            raise UndeclaredIdentifier(
                "no ring declared before this statement", tok.line, tok.column
            )
        return self.active

    # expressions

    def expression(self, variables):
        node = self._sum()
        for v in node.variables():
            if v.name not in variables:
                raise UndeclaredIdentifier(
                    "variable %s is not one of %s" % (v.name, ", ".join(variables)),
                    v.line,
                    v.column,
                )
        return node

    def constant(self):
        tok = self.peek()
        node = self._sum()
        if node.variables():
            self.fail("expected a rational constant", tok)
        return node

    def _sum(self):
        node = self._term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            node = BinOp(op, node, self._term())
        return node

    def _term(self):
        node = self._unary()
        while self.at("*") or self.at("/"):
            op_tok = self.advance()
            right = self._unary()
            if op_tok.text == "/":
                value = right.constant()
                if value is None:
                    self.fail("division by a non-constant", op_tok)
                if not value:
                    self.fail("division by zero", op_tok)
            node = BinOp(op_tok.text, node, right)
        return node

    def _unary(self):
        if self.accept("-"):
            return Neg(self._unary())
        return self._power()

    def _power(self):
        node = self._atom()
        if self.accept("^"):
            node = Pow(node, self.integer("exponent"))
        return node

    def _atom(self):
        tok = self.peek()
        if tok.kind == "number":
            if "." in tok.text:
                self.fail("decimal numbers are not allowed in polynomials", tok)
            self.advance()
            return Num(int(tok.text))
        if tok.kind == "ident":
            self.advance()
            return Var(tok.text, tok.line, tok.column)
        if self.accept("("):
            node = self._sum()
            self.expect(")")
            return node
        self.fail("unexpected %s" % _describe(tok), tok, ("number", "variable", "("))

    def expressions(self, variables, open_="(", close=")"):
        self.expect(open_)
        items = [self.expression(variables)]
        while self.accept(","):
            items.append(self.expression(variables))
        self.expect(close)
        return tuple(items)

    # statements

    def script(self):
        statements = []
        while self.peek().kind != "end":
            statements.append(self.statement())
        return Script(tuple(statements))

    def statement(self):
        tok, verb = self.word()
        if verb in DECLARATIONS:
            node = getattr(self, "decl_" + verb)(tok)
        elif verb in COMMANDS:
            node = self.command(tok, verb)
        else:
            self.fail(
                "unknown statement %r" % verb,
                tok,
                DECLARATIONS + COMMANDS,
            )
        self.expect(";")
        return node

    def order(self, variables):
        tok = self.ident("monomial order")
        if tok.text in ("grevlex", "lex"):
            return OrderSpec(tok.text)
        if tok.text != "block":
            self.fail(
                "unknown monomial order %r" % tok.text, tok, ("grevlex", "lex", "block")
            )
        self.expect("(")
        names = [self.ident("variable")]
        while self.accept(","):
            names.append(self.ident("variable"))
        self.expect(")")
        for n in names:
            if n.text not in variables:
                raise UndeclaredIdentifier(
                    "variable %s is not in the ring" % n.text, n.line, n.column
                )
        return OrderSpec("block", tuple(n.text for n in names))

    def decl_ring(self, start):
        name = self.ident()
        self.expect("=")
        field_ = self.ident("Q")
        if field_.text != "Q":
            self.fail("only rational coefficients (Q) are supported", field_)
        self.expect("[")
        variables = []
        seen = set()
        while True:
            v = self.ident("variable")
            if v.text in seen:
                raise DuplicateIdentifier(
                    "duplicate variable %s" % v.text, v.line, v.column
                )
            seen.add(v.text)
            variables.append(v.text)
            if not self.accept(","):
                break
        self.expect("]")
        order = None
        if self.accept("order"):
            order = self.order(variables)
        self.declare(name, "ring", variables)
        self.active = name.text
        return RingDecl(name.text, tuple(variables), order, start.line)

    def decl_use(self, start):
        tok = self.ident()
        self.lookup(tok, ("ring",))
        self.active = tok.text
        return UseDecl(tok.text, start.line)

    def _in_ring(self):
        if self.accept("in"):
            return self.ring_for(self.ident())
        return self.ring_for(None)

    def decl_ideal(self, start):
        name = self.ident()
        ring = self._in_ring()
        self.expect("=")
        variables = self.symbols[ring].variables
        gens = [self.expression(variables)]
        while self.accept(","):
            gens.append(self.expression(variables))
        self.declare(name, "ideal", variables, (ring, len(gens)))
        return IdealDecl(name.text, ring, tuple(gens), start.line)

    def decl_scheme(self, start):
        name = self.ident()
        self.expect("=")
        src = self.ident()
        sym = self.lookup(src, ("ideal", "ring"))
        self.declare(name, "scheme", sym.variables)
        return SchemeDecl(name.text, src.text, start.line)

    def decl_center(self, start):
        name = self.ident()
        self.expect("=")
        scheme = self.ident()
        sym = self.lookup(scheme, SCHEME_KINDS)
        self.expect(":")
        f, g = self._pair(sym.variables)
        self.expect("at")
        tok = self.peek()
        point = self._point()
        if len(point) != len(sym.variables):
            self.fail(
                "support point needs %d coordinates, got %d"
                % (len(sym.variables), len(point)),
                tok,
            )
        self.declare(name, "center", sym.variables, scheme.text)
        return CenterDecl(name.text, scheme.text, f, g, point, start.line)

    def _pair(self, variables):
        tok = self.peek()
        items = self.expressions(variables)
        if len(items) != 2:
            self.fail("a center has exactly two generators", tok)
        return items

    def _point(self):
        self.expect("(")
        items = [self.constant()]
        while self.accept(","):
            items.append(self.constant())
        self.expect(")")
        return tuple(items)

    def decl_matrix(self, start):
        name = self.ident()
        ring = self._in_ring()
        self.expect("=")
        variables = self.symbols[ring].variables
        self.expect("[")
        rows = [self.expressions(variables, "[", "]")]
        self.expect(",")
        rows.append(self.expressions(variables, "[", "]"))
        self.expect("]")
        if any(len(r) != 2 for r in rows):
            self.fail("a resolution change is a 2x2 matrix", start)
        self.declare(name, "matrix", variables, ring)
        return MatrixDecl(name.text, ring, tuple(rows), start.line)

    def decl_map(self, start):
        name = self.ident()
        self.expect(":")
        src = self.ident()
        src_sym = self.lookup(src, SCHEME_KINDS)
        self.expect("->")
        dst = self.ident()
        dst_sym = self.lookup(dst, SCHEME_KINDS)
        self.expect("=")
        tok = self.peek()
        comps = self.expressions(src_sym.variables)
        if len(comps) != len(dst_sym.variables):
            self.fail(
                "map into %s needs %d components, got %d"
                % (dst.text, len(dst_sym.variables), len(comps)),
                tok,
            )
        self.declare(name, "map", src_sym.variables, (src.text, dst.text))
        return MapDecl(name.text, src.text, dst.text, comps, start.line)

    def decl_certificate(self, start):
        name = self.ident()
        self.expect("=")
        fwd = self.ident()
        fwd_sym = self.lookup(fwd, ("map",))
        self.expect(",")
        inv = self.ident()
        inv_sym = self.lookup(inv, ("map",))
        if fwd_sym.extra != tuple(reversed(inv_sym.extra)):
            self.fail(
                "%s does not run backwards along %s" % (inv.text, fwd.text), inv
            )
        self.declare(name, "certificate", fwd_sym.variables, fwd_sym.extra)
        return CertificateDecl(name.text, fwd.text, inv.text, start.line)

    # commands

    def command(self, start, verb):
        kw = {}
        handler = getattr(self, "cmd_" + verb.replace("-", "_"))
        kw.update(handler())
        options = []
        if self.accept("with"):
            while True:
                key = self.ident("option")
                if key.text not in OPTIONS:
                    self.fail("unknown option %r" % key.text, key, OPTIONS)
                self.expect("=")
                value_tok = self.peek()
                if value_tok.kind != "number":
                    self.fail("option values are numbers", value_tok)
                self.advance()
                if key.text == "steps":
                    if "." in value_tok.text:
                        self.fail("steps must be an integer", value_tok)
                    value = int(value_tok.text)
                else:
                    value = float(value_tok.text)
                options.append((key.text, value))
                if not self.accept(","):
                    break
        expect = None
        if self.accept("expect"):
            if self.at("-") and self.peek(1).kind == "number":
                self.advance()
                expect = "-" + self.advance().text
            elif self.peek().kind == "number":
                expect = self.advance().text
            else:
                expect = self.word()[1]
        return Command(
            verb, options=tuple(options), expect=expect, line=start.line, **kw
        )

    def _ref(self, kinds):
        tok = self.ident()
        return tok, self.lookup(tok, kinds)

    def cmd_groebner(self):
        tok, sym = self._ref(("ideal",))
        order = self.order(sym.variables) if self.accept("order") else None
        return dict(operands=(tok.text,), order=order)

    def _membership(self):
        tok = self.peek()
        # the ideal comes after the expression, so variables are checked late
        expr = self._sum()
        self.expect("in")
        ideal, sym = self._ref(("ideal",))
        for v in expr.variables():
            if v.name not in sym.variables:
                raise UndeclaredIdentifier(
                    "variable %s is not in the ring of %s" % (v.name, ideal.text),
                    v.line,
                    v.column,
                )
        return expr, ideal, sym

    def cmd_member(self):
        expr, ideal, _ = self._membership()
        return dict(operands=(expr, ideal.text))

    def cmd_radical_member(self):
        return self.cmd_member()

    def cmd_cofactors(self):
        expr, ideal, sym = self._membership()
        self.expect("=")
        tok = self.peek()
        cofactors = self.expressions(sym.variables)
        if len(cofactors) != sym.extra[1]:
            self.fail(
                "%s has %d generators, got %d cofactors"
                % (ideal.text, sym.extra[1], len(cofactors)),
                tok,
            )
        return dict(operands=(expr, ideal.text, cofactors))

    def cmd_dim(self):
        tok, _ = self._ref(("ideal",))
        return dict(operands=(tok.text,))

    def cmd_equal(self):
        a, sa = self._ref(("ideal",))
        self.expect(",")
        b, sb = self._ref(("ideal",))
        if sa.variables != sb.variables:
            self.fail("%s and %s live in different rings" % (a.text, b.text), b)
        return dict(operands=(a.text, b.text))

    def cmd_smooth(self):
        tok, _ = self._ref(SCHEME_KINDS)
        return dict(operands=(tok.text,))

    def cmd_support(self):
        tok, _ = self._ref(("center",))
        return dict(operands=(tok.text,))

    def cmd_build(self):
        target = self.ident()
        self.expect("=")
        center, sym = self._ref(("center",))
        override = bool(self.accept("override"))
        for v in FIBER_COORDINATES:
            if v in sym.variables:
                self.fail("fiber coordinate %s is already a base variable" % v, center)
        self.declare(target, "total", sym.variables + FIBER_COORDINATES, center.text)
        return dict(target=target.text, operands=(center.text,), override=override)

    def cmd_ga_check(self):
        tok, _ = self._ref(("total",))
        return dict(operands=(tok.text,))

    def cmd_reschange(self):
        target = self.ident()
        self.expect("=")
        center, sym = self._ref(("center",))
        self.expect("by")
        matrix, msym = self._ref(("matrix",))
        if msym.variables != sym.variables:
            self.fail(
                "%s is not a matrix over the base of %s" % (matrix.text, center.text),
                matrix,
            )
        self.declare(target, "center", sym.variables, sym.extra)
        return dict(target=target.text, operands=(center.text, matrix.text))

    def cmd_pair_iso(self):
        left, lsym = self._ref(("center",))
        self.expect(",")
        right, rsym = self._ref(("center",))
        self.expect("via")
        cert, csym = self._ref(("certificate",))
        if csym.extra != (lsym.extra, rsym.extra):
            self.fail(
                "%s does not map %s to %s" % (cert.text, lsym.extra, rsym.extra), cert
            )
        return dict(operands=(left.text, right.text, cert.text))

    def cmd_iso_check(self):
        tok, _ = self._ref(("certificate",))
        return dict(operands=(tok.text,))

    def cmd_brieskorn(self):
        target = self.ident()
        self.expect("=")
        values = [self.integer()]
        for _ in range(2):
            self.expect(",")
            values.append(self.integer())
        self.declare(target, "scheme", BRIESKORN_VARIABLES)
        return dict(target=target.text, operands=tuple(values))

    def cmd_gm_check(self):
        values = [self.integer()]
        while self.accept(","):
            values.append(self.integer())
        if len(values) not in (3, 5):
            self.fail("gm-check takes p, q, r and optionally m, n")
        return dict(operands=tuple(values))

    def cmd_diag_family(self):
        target = self.ident()
        self.declare(target, "family", FAMILY_VARIABLES)
        return dict(target=target.text)

    def cmd_trivialize(self):
        if self.peek().kind == "ident" and self.peek().text not in ("with", "expect"):
            tok, _ = self._ref(("family",))
            return dict(operands=(tok.text,))
        return dict()

    def cmd_fiber(self):
        tok, _ = self._ref(("family",))
        self.expect("at")
        start = self.peek()
        point = self._point()
        if len(point) != 2:
            self.fail("a point of the plane has two coordinates", start)
        return dict(operands=(tok.text, point))

    def cmd_projection(self):
        tok, _ = self._ref(("family",))
        return dict(operands=(tok.text,))


def _describe(tok):
    if tok.kind == "end":
        return "end of input"
    return "%s %r" % ("number" if tok.kind == "number" else "token", tok.text)


def parse_script(text):
    """Parses a whole script

    Parameters:

      text (bytes, str): UTF-8 encoded (or already decoded) script

    Raises:

      ScriptError: on the first syntax error, duplicate or undeclared name
    """

    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ScriptSyntaxError("script is not valid UTF-8: %s" % e) from None
    script = _Parser(text).script()
    logger.debug("parsed %d statement(s)", len(script))
    return script


def parse_expression(text, variables):
    """Parses a single polynomial expression over ``variables``"""

    parser = _Parser(text)
    node = parser.expression(tuple(variables))
    if parser.peek().kind != "end":
        parser.fail("trailing input %s" % _describe(parser.peek()))
    return node


# printing

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(node):
    if isinstance(node, BinOp):
        return _PRECEDENCE[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def format_expression(node, minimum=0):
    """Prints an expression with the parentheses needed to re-parse it"""

    if isinstance(node, Num):
        text = str(node.value)
    elif isinstance(node, Var):
        text = node.name
    elif isinstance(node, Neg):
        text = "-" + format_expression(node.operand, 3)
    elif isinstance(node, Pow):
        text = "%s^%d" % (format_expression(node.base, 5), node.exponent)
    else:
        p = _PRECEDENCE[node.op]
        sep = " %s " % node.op if p == 1 else node.op
        text = format_expression(node.left, p) + sep + format_expression(
            node.right, p + 1 if p == 1 else 3
        )
    if _prec(node) < minimum:
        return "(%s)" % text
    return text


def _exprs(items):
    return ", ".join(format_expression(e) for e in items)


def _order(order):
    if order.kind == "block":
        return "block(%s)" % ", ".join(order.variables)
    return order.kind


def format_statement(node):
    if isinstance(node, RingDecl):
        text = "ring %s = Q[%s]" % (node.name, ", ".join(node.variables))
        if node.order is not None:
            text += " order " + _order(node.order)
    elif isinstance(node, UseDecl):
        text = "use %s" % node.ring
    elif isinstance(node, IdealDecl):
        text = "ideal %s in %s = %s" % (node.name, node.ring, _exprs(node.generators))
    elif isinstance(node, SchemeDecl):
        text = "scheme %s = %s" % (node.name, node.source)
    elif isinstance(node, CenterDecl):
        text = "center %s = %s : (%s) at (%s)" % (
            node.name,
            node.scheme,
            _exprs((node.f, node.g)),
            _exprs(node.point),
        )
    elif isinstance(node, MatrixDecl):
        text = "matrix %s in %s = [%s]" % (
            node.name,
            node.ring,
            ", ".join("[%s]" % _exprs(r) for r in node.entries),
        )
    elif isinstance(node, MapDecl):
        text = "map %s : %s -> %s = (%s)" % (
            node.name,
            node.source,
            node.target,
            _exprs(node.components),
        )
    elif isinstance(node, CertificateDecl):
        text = "certificate %s = %s, %s" % (node.name, node.forward, node.inverse)
    else:
        text = _format_command(node)
    return text + ";"


def _option_value(value):
    # the grammar has no exponent notation
    if isinstance(value, float):
        return format(decimal.Decimal(repr(value)), "f")
    return str(value)


def _format_command(node):
    verb, ops = node.verb, node.operands
    if verb in ("member", "radical-member"):
        body = "%s in %s" % (format_expression(ops[0]), ops[1])
    elif verb == "cofactors":
        body = "%s in %s = (%s)" % (format_expression(ops[0]), ops[1], _exprs(ops[2]))
    elif verb == "groebner":
        body = ops[0] + (" order " + _order(node.order) if node.order else "")
    elif verb == "build":
        body = "%s = %s" % (node.target, ops[0])
        if node.override:
            body += " override"
    elif verb == "reschange":
        body = "%s = %s by %s" % (node.target, ops[0], ops[1])
    elif verb == "pair-iso":
        body = "%s, %s via %s" % ops
    elif verb == "brieskorn":
        body = "%s = %d, %d, %d" % ((node.target,) + tuple(ops))
    elif verb == "gm-check":
        body = ", ".join(str(v) for v in ops)
    elif verb == "diag-family":
        body = node.target
    elif verb == "fiber":
        body = "%s at (%s)" % (ops[0], _exprs(ops[1]))
    else:
        body = ", ".join(ops)
    text = verb + (" " + body if body else "")
    if node.options:
        text += " with " + ", ".join(
            "%s=%s" % (k, _option_value(v)) for k, v in node.options
        )
    if node.expect is not None:
        text += " expect " + node.expect
    return text


def format_script(script):
    """Canonical text of a script, one statement per line"""

    return "".join(format_statement(s) + "\n" for s in script)
