"""Expression grammar for algebra elements and scalars.

::

    expr   := term (("+" | "-") term)*
    term   := factor (["*"] factor)*          juxtaposition multiplies
    factor := "-" factor | "+" factor | power
    power  := atom ("^" ["-"] INT)*
    atom   := NUMBER | "i" | "w(" [-]NUMBER ")" | generator
            | "d" INT "(" expr ")" | "(" expr ")"

Generators are ``U1..Un`` (NC torus), ``g1..gn`` (free group), ``S1..Sn``
(Cuntz) and ``k`` (formal backend).  A trailing ``'`` inverts a unitary or
group generator; a ``*`` written immediately after ``S<i>`` (no space) is the
adjoint, so ``S1*S2`` reads as ``S1^* S2`` while ``S1 * S2`` is a product.
``d<i>(...)`` applies the derivation ``d_i``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, UnknownGenerator
from .scalars import Scalar

__all__ = ["parse_expression", "parse_scalar", "tokenize"]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:\.\d+)?(?:[eE][-+]?\d+)?(?:/\d+)?)
  | (?P<gen>[USg])(?P<idx>\d+)(?P<suffix>\*|')?
  | (?P<deriv>d)(?P<didx>\d+)(?=\s*\()
  | (?P<kay>k)(?P<kprime>')?
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


class Token:
    __slots__ = ("kind", "text", "pos", "extra")

    def __init__(self, kind, text, pos, extra=None):
        self.kind, self.text, self.pos, self.extra = kind, text, pos, extra

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.pos})"


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos, src)
        if m.group("ws"):
            pass
        elif m.group("number"):
            tokens.append(Token("number", m.group("number"), pos))
        elif m.group("gen"):
            letter, suffix = m.group("gen"), m.group("suffix") or ""
            end = m.end()
            if suffix == "*" and letter != "S":
                # a star after U/g is the multiplication operator
                suffix, end = "", end - 1
            tokens.append(Token("gen", src[pos:end], pos, (letter, int(m.group("idx")), suffix)))
            pos = end
            continue
        elif m.group("deriv"):
            tokens.append(Token("deriv", m.group(0), pos, int(m.group("didx"))))
        elif m.group("kay"):
            tokens.append(Token("kay", m.group(0), pos, bool(m.group("kprime"))))
        elif m.group("name"):
            name = m.group("name")
            if name not in ("i", "w"):
                raise UnknownGenerator(f"unknown identifier {name!r}", pos, src)
            tokens.append(Token(name, name, pos))
        else:
            tokens.append(Token(m.group("op"), m.group("op"), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src, presentation):
        self.src = src
        self.P = presentation
        self.tokens = tokenize(src)
        self.i = 0

    # -- token helpers ------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind) -> Token:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {kind!r}, found {found!r}", self.tok.pos, self.src)
        return self.advance()

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.src)

    # -- value helpers ------------------------------------------------------

    def number(self, text, tok):
        float_mode = self.P is not None and self.P.float_mode
        try:
            if "/" in text:
                p, q = text.split("/")
                value = Fraction(p) / Fraction(q)
            else:
                value = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise self.error(f"bad number {text!r}", tok) from None
        return float(value) if float_mode else value

    def const(self, value):
        if self.P is None:
            return value if isinstance(value, Scalar) else Scalar(value)
        return self.P.scalar(value)

    # -- grammar ----------------------------------------------------------

    def parse(self):
        if self.tok.kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    _STARTS = ("number", "i", "w", "gen", "kay", "deriv", "(")

    def term(self):
        value = self.factor()
        while True:
            if self.tok.kind == "*":
                self.advance()
                value = value * self.factor()
            elif self.tok.kind in self._STARTS:
                value = value * self.factor()
            else:
                return value

    def factor(self):
        if self.tok.kind == "-":
            self.advance()
            return -self.factor()
        if self.tok.kind == "+":
            self.advance()
            return self.factor()
        return self.power()

    def power(self):
        value = self.atom()
        while self.tok.kind == "^":
            self.advance()
            sign = 1
            if self.tok.kind == "-":
                self.advance()
                sign = -1
            tok = self.expect("number")
            if not tok.text.isdigit():
                raise self.error("exponent must be an integer", tok)
            value = self._pow(value, sign * int(tok.text), tok)
        return value

    def _pow(self, value, k, tok):
        from .algebras import invert
        from .errors import NotInvertible
        if k >= 0:
            return value ** k
        try:
            base = value.inverse() if isinstance(value, Scalar) else invert(value)
        except (NotInvertible, ZeroDivisionError) as exc:
            raise self.error(f"negative power of a non-invertible element: {exc}", tok) from None
        return base ** (-k)

    def atom(self):
        tok = self.tok
        kind = tok.kind
        if kind == "number":
            self.advance()
            return self.const(self.number(tok.text, tok))
        if kind == "i":
            self.advance()
            if self.P is not None and self.P.float_mode:
                return self.const(1j)
            return self.const(Scalar.i())
        if kind == "w":
            self.advance()
            self.expect("(")
            sign = 1
            if self.tok.kind in ("-", "+"):
                sign = -1 if self.advance().kind == "-" else 1
            ntok = self.expect("number")
            value = sign * self.number(ntok.text, ntok)
            self.expect(")")
            if self.P is not None:
                return self.P.scalar(self.P.phase(value))
            return Scalar.root_of_unity(value)
        if kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if kind == "gen":
            self.advance()
            return self.generator(tok)
        if kind == "kay":
            self.advance()
            P = self.P
            if P is None or P.kind != "formal":
                raise UnknownGenerator("'k' exists only in the formal backend", tok.pos, self.src)
            return P.k_inv() if tok.extra else P.k()
        if kind == "deriv":
            self.advance()
            idx = tok.extra
            self.expect("(")
            value = self.expr()
            self.expect(")")
            if self.P is None:
                raise self.error("derivation applied outside an algebra", tok)
            if not 1 <= idx <= self.P.n:
                raise UnknownGenerator(f"no derivation d{idx} for n={self.P.n}", tok.pos, self.src)
            return value.derive(idx - 1)
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}")

    def generator(self, tok):
        letter, idx, suffix = tok.extra
        P = self.P
        family = {"U": "nc-torus", "g": "free-group", "S": "cuntz"}[letter]
        if P is None or P.kind != family:
            have = "a scalar expression" if P is None else P.kind
            raise UnknownGenerator(f"generator {tok.text!r} does not belong to {have}", tok.pos, self.src)
        if not 1 <= idx <= P.n:
            raise UnknownGenerator(f"generator {letter}{idx} out of range for n={P.n}", tok.pos, self.src)
        if suffix == "*" and letter != "S":
            raise self.error("'*' adjoint suffix is only for Cuntz generators", tok)
        if suffix == "'" and letter == "S":
            raise self.error("Cuntz isometries have no inverse", tok)
        if suffix:
            return P.gen_star(idx - 1)
        return P.gen(idx - 1)


def parse_expression(src: str, presentation):
    """Parse ``src`` into an element of ``presentation`` (normal form)."""
    return _Parser(src, presentation).parse()


def parse_scalar(src: str) -> Scalar:
    return _Parser(src, None).parse()
