"""Text grammar for algebra elements.

Atoms: `q`, integer literals, `E[i]`, `F[i]`, `K[i]`, `Kinv[i]`, `t[i,j]`,
`tb[i,j]`, `Ebeta[i,j]`, `Fbeta[i,j]`.  Operators: + - * ^ with integer
exponents, parentheses, insignificant whitespace.  Printing emits PBW normal
form with coefficients in the scalar grammar.
"""
from __future__ import annotations

import re

from qgt.scalar import ONE, QScalar

_TOKEN = re.compile(
    r"\s*(Ebeta|Fbeta|Kinv|tb|E|F|K|t|q|\d+|\[|\]|,|\+|\-|\*|/|\^|\(|\))"
)

_GEN_ARITY = {
    "E": 1,
    "F": 1,
    "K": 1,
    "Kinv": 1,
    "t": 2,
    "tb": 2,
    "Ebeta": 2,
    "Fbeta": 2,
}


class ParseError(ValueError):
    pass


def tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError("bad syntax at %r" % text[pos : pos + 20])
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, engine, tokens):
        self.engine = engine
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        if expect is not None and tok != expect:
            raise ParseError("expected %r, found %r" % (expect, tok))
        self.i += 1
        return tok

    def parse(self):
        e = self.expr()
        if self.peek() is not None:
            raise ParseError("trailing input from token %r" % self.peek())
        return e

    def expr(self):
        neg = False
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                neg = not neg
        e = self.term()
        if neg:
            e = -e
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            e = e + t if op == "+" else e - t
        return e

    def term(self):
        e = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                e = e * self.power()
            elif tok == "/":
                self.take()
                e = e * self._pow(self.power(), -1)
            elif tok is not None and (tok in _GEN_ARITY or tok == "q" or tok == "(" or tok.isdigit()):
                e = e * self.power()
            else:
                return e

    def power(self):
        e = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            while self.peek() in ("+", "-"):
                if self.take() == "-":
                    sign = -sign
            tok = self.take()
            if not tok.isdigit():
                raise ParseError("expected integer exponent, found %r" % tok)
            n = sign * int(tok)
            e = self._pow(e, n)
        return e

    def _pow(self, e, n):
        eng = self.engine
        if n >= 0:
            return e**n
        # negative powers only for invertible monomial elements:
        # a single internal monomial with no E/F part (a K-Laurent monomial
        # times a scalar), or the scalar q itself
        if len(e.terms) == 1:
            ((low, diag, up), c) = next(iter(e.terms.items()))
            if not any(low) and not any(up):
                mono = (low, tuple(n * x for x in diag), up)
                from qgt.engine import Element

                return Element(eng, {mono: c.inv() ** (-n)})
        raise ParseError("negative power of a non-invertible element")

    def atom(self):
        tok = self.take()
        eng = self.engine
        if tok == "q":
            return eng.scalar(QScalar.q_power(1))
        if tok.isdigit():
            return eng.scalar(int(tok))
        if tok == "(":
            e = self.expr()
            self.take(")")
            return e
        if tok in _GEN_ARITY:
            idx = self._indices(_GEN_ARITY[tok])
            if tok == "E":
                return eng.E(idx[0])
            if tok == "F":
                return eng.F(idx[0])
            if tok == "K":
                return eng.K(idx[0])
            if tok == "Kinv":
                return eng.K(idx[0], -1)
            if tok == "t":
                return eng.t(*idx)
            if tok == "tb":
                return eng.tb(*idx)
            if tok == "Ebeta":
                return eng.Ebeta(*idx)
            return eng.Fbeta(*idx)
        raise ParseError("unexpected token %r" % tok)

    def _indices(self, arity):
        self.take("[")
        idx = [int(self.take())]
        for _ in range(arity - 1):
            self.take(",")
            idx.append(int(self.take()))
        self.take("]")
        return idx


def parse_element(engine, text):
    return _Parser(engine, tokenize(text)).parse()


def render_element(a):
    """PBW normal form as text in the expression grammar."""
    if a.is_zero():
        return "0"
    eng = a.engine
    parts = []
    for (r, lam, k), c in a.pbw_terms():
        factors = []
        for p, (i, j) in enumerate(eng.roots):
            if r[p]:
                factors.append(_gen("Fbeta", (i, j), r[p]))
        for i, e in enumerate(lam, start=1):
            if e > 0:
                factors.append(_gen("K", (i,), e))
            elif e < 0:
                factors.append(_gen("Kinv", (i,), -e))
        for p, (i, j) in enumerate(eng.roots):
            if k[p]:
                factors.append(_gen("Ebeta", (i, j), k[p]))
        cs = c.render()
        if factors:
            body = "*".join(factors)
            if cs == "1":
                term = body
            elif cs == "-1":
                term = "-" + body
            else:
                term = "(%s)*%s" % (cs, body)
        else:
            term = cs if (cs.startswith("-") or "+" not in cs[1:]) else "(%s)" % cs
        if parts and not term.startswith("-"):
            parts.append("+")
        parts.append(term)
    return "".join(parts)


def _gen(name, idx, e):
    base = "%s[%s]" % (name, ",".join(str(i) for i in idx))
    return base if e == 1 else "%s^%d" % (base, e)
