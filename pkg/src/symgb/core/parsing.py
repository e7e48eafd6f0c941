"""Text grammar for polynomials.

    poly    := ['-'] term (('+'|'-') term)*
    term    := coeff ['*' factors] | factors
    coeff   := INT ['/' INT]
    factors := factor ('*' factor)*
    factor  := VAR ['^' INT]
    VAR     := 'x' INT | 'c' ('_' INT)+ | 't' | 'u'

``x<i>`` are the series variables, ``c_<i>_<a1>_<a2>...`` the universal
coefficient variables c_{i,alpha}.  Whitespace is ignored.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .monomial import Monomial
from .polynomial import Polynomial

__all__ = ["ParseError", "parse_terms", "parse_polynomial"]


class ParseError(ValueError):
    """Syntax error with a 1-based line and column."""

    def __init__(self, message: str, column: int, line: int = 1, text: str = ""):
        self.message = message
        self.column = column
        self.line = line
        self.text = text
        super().__init__(f"line {line}, column {column}: {message}")


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<xvar>x\d+)|(?P<cvar>c(?:_\d+)+)|(?P<ovar>[tu])(?![\w])|(?P<op>[-+*/^]))"
)


def _tokenize(text: str, line: int):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", col, line, text)
        kind = m.lastgroup
        start = m.start(kind) + 1
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text) + 1))
    return toks


def _var_key(kind: str, tok: str):
    if kind == "xvar":
        i = int(tok[1:])
        if i < 1:
            raise ValueError("variable indices start at 1")
        return ("x", i)
    if kind == "cvar":
        parts = [int(p) for p in tok.split("_")[1:]]
        if len(parts) < 2:
            raise ValueError("coefficient variables need a slot index and exponents")
        alpha = list(parts[1:])
        while alpha and alpha[-1] == 0:
            alpha.pop()
        return ("c", parts[0], tuple(alpha))
    return (tok,)


def parse_terms(text: str, line: int = 1):
    """Parse into a list of ``(Fraction, {var_key: exponent})``."""
    toks = _tokenize(text, line)
    k = 0

    def peek():
        return toks[k]

    def take(kind=None, value=None):
        nonlocal k
        t = toks[k]
        if (kind and t[0] != kind) or (value and t[1] != value):
            expected = value or kind
            got = t[1] or "end of input"
            raise ParseError(f"expected {expected}, got {got!r}", t[2], line, text)
        k += 1
        return t

    def factor(exps):
        t = peek()
        if t[0] not in ("xvar", "cvar", "ovar"):
            raise ParseError(f"expected a variable, got {t[1] or 'end of input'!r}", t[2], line, text)
        take()
        try:
            key = _var_key(t[0], t[1])
        except ValueError as exc:
            raise ParseError(str(exc), t[2], line, text) from None
        e = 1
        if peek()[1] == "^":
            take()
            e = int(take("int")[1])
        exps[key] = exps.get(key, 0) + e

    def term():
        coeff = Fraction(1)
        exps = {}
        t = peek()
        if t[0] == "int":
            take()
            coeff = Fraction(int(t[1]))
            if peek()[1] == "/":
                take()
                d = take("int")
                if int(d[1]) == 0:
                    raise ParseError("zero denominator", d[2], line, text)
                coeff /= int(d[1])
            if peek()[1] == "*":
                take()
                factor(exps)
            elif peek()[0] in ("xvar", "cvar", "ovar"):
                factor(exps)
        else:
            factor(exps)
        while peek()[1] == "*":
            take()
            factor(exps)
        return coeff, exps

    out = []
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take()[1] == "-" else 1
    while True:
        c, exps = term()
        out.append((sign * c, {v: e for v, e in exps.items() if e}))
        t = peek()
        if t[0] == "end":
            break
        if t[0] == "op" and t[1] in "+-":
            take()
            sign = -1 if t[1] == "-" else 1
            continue
        raise ParseError(f"unexpected {t[1]!r}", t[2], line, text)
    return out


def parse_polynomial(text: str, field=None, line: int = 1) -> Polynomial:
    """Parse a polynomial in the x-variables; coefficients coerced into ``field``."""
    text = text.strip()
    if text == "0":
        return Polynomial()
    terms = []
    for c, exps in parse_terms(text, line):
        mono = {}
        for key, e in exps.items():
            if key[0] != "x":
                raise ParseError(f"unexpected variable {key} in a series polynomial", 1, line, text)
            mono[key[1]] = e
        coeff = field.coerce(c) if field is not None else c
        terms.append((Monomial(mono), coeff))
    return Polynomial(terms)
