"""Plain-text rendering and parsing of time and image expressions.

Time expressions use a small atom grammar::

    expr  := term (("+" | "-") term)*
    term  := ["-"] [number ["*"]] atom
    atom  := "const" number | "pow" int | ("exp"|"sin"|"cos"|"sinh"|"cosh") ["-"] number
    number:= digits ["." digits] ["/" digits]

so ``2 sin 1 + 3 cosh 1`` and ``1/2 pow 3 - exp -2`` both parse.

Image expressions are written the way :func:`render_image` prints them,
for example ``2/c^(m+3)``, ``c/(c^m*(c-2))`` or ``3/(c^(m-1)*(c^2+9))``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from kaj.errors import MalformedImage
from kaj.transform import ImageAtom, ImageExpr, ImageKind, TimeAtom, TimeExpr, TimeKind


class ExpressionSyntaxError(ValueError):
    pass


def _num(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _numerator(q: Fraction) -> str:
    # parenthesize fractions so "(1/2)/c^(m+1)" cannot be misread
    return str(q.numerator) if q.denominator == 1 else f"({q.numerator}/{q.denominator})"


def _join(parts: list[tuple[Fraction, str]], render) -> str:
    if not parts:
        return "0"
    out = []
    for i, (coeff, atom) in enumerate(parts):
        text = render(abs(coeff), atom)
        if i == 0:
            out.append(("-" if coeff < 0 else "") + text)
        else:
            out.append((" - " if coeff < 0 else " + ") + text)
    return "".join(out)


_TIME_NAMES = {
    TimeKind.EXP: "exp",
    TimeKind.SIN: "sin",
    TimeKind.COS: "cos",
    TimeKind.SINH: "sinh",
    TimeKind.COSH: "cosh",
}


def _render_time_term(coeff: Fraction, atom: TimeAtom) -> str:
    if atom.kind is TimeKind.CONST:
        return _num(coeff)
    if atom.kind is TimeKind.POWER:
        body = "t" if atom.param == 1 else f"t^{atom.param}"
    else:
        a = atom.param
        arg = {1: "t", -1: "-t"}.get(a) or f"{_numerator(a)}*t"
        body = f"{_TIME_NAMES[atom.kind]}({arg})"
    return body if coeff == 1 else f"{_numerator(coeff)}*{body}"


def render_time(expr: TimeExpr) -> str:
    """Render a time expression, e.g. ``69*t^2 + 156*t^3``."""
    return _join(list(expr), _render_time_term)


def _offset(e: int) -> str:
    return "c^m" if e == 0 else f"c^(m{e:+d})"


def _shift(a: Fraction) -> str:
    # c - a
    return f"c-{_num(a)}" if a >= 0 else f"c+{_num(-a)}"


def _render_image_term(coeff: Fraction, atom: ImageAtom) -> str:
    kind, a = atom.kind, atom.param
    if kind is ImageKind.INV_POW:
        return f"{_numerator(coeff)}/{_offset(a)}"
    if kind is ImageKind.EXP:
        head = "c" if coeff == 1 else f"{_numerator(coeff)}*c"
        return f"{head}/(c^m*({_shift(a)}))"
    sign = "+" if kind in (ImageKind.SIN, ImageKind.COS) else "-"
    order = _offset(-1 if kind in (ImageKind.SIN, ImageKind.SINH) else -2)
    return f"{_numerator(coeff)}/({order}*(c^2{sign}{_num(a * a)}))"


def render_image(expr: ImageExpr) -> str:
    """Render an image expression with the order ``m`` left symbolic."""
    return _join(list(expr), _render_image_term)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d+)?(?:/\d+)?)|(?P<word>[A-Za-z]+)|(?P<op>[-+*]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise ExpressionSyntaxError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


class _TimeParser:
    _RATE_WORDS = {v: k for k, v in _TIME_NAMES.items()}

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        if tok[0] is None:
            raise ExpressionSyntaxError("unexpected end of expression")
        self.i += 1
        return tok

    def number(self, allow_sign=False) -> Fraction:
        sign = 1
        if allow_sign and self.peek() == ("op", "-"):
            self.take()
            sign = -1
        kind, value = self.take()
        if kind != "num":
            raise ExpressionSyntaxError(f"expected a number, got {value!r}")
        try:
            return sign * Fraction(value)
        except ZeroDivisionError:
            raise ExpressionSyntaxError(f"zero denominator in {value!r}") from None

    def atom(self) -> tuple[Fraction, TimeAtom]:
        kind, word = self.take()
        if kind != "word":
            raise ExpressionSyntaxError(f"expected an atom name, got {word!r}")
        word = word.lower()
        if word == "const":
            return self.number(allow_sign=True), TimeAtom.const()
        if word == "pow":
            p = self.number()
            if p.denominator != 1:
                raise ExpressionSyntaxError(f"pow needs an integer exponent, got {p}")
            return Fraction(1), TimeAtom.power(p.numerator)
        if word in self._RATE_WORDS:
            return Fraction(1), TimeAtom(self._RATE_WORDS[word], self.number(allow_sign=True))
        raise ExpressionSyntaxError(f"unknown atom {word!r}")

    def term(self) -> tuple[Fraction, TimeAtom]:
        scale = Fraction(1)
        if self.peek() == ("op", "-"):
            self.take()
            scale = -scale
        if self.peek()[0] == "num":
            scale *= self.number()
            if self.peek() == ("op", "*"):
                self.take()
        inner, atom = self.atom()
        return scale * inner, atom

    def parse(self) -> TimeExpr:
        if not self.tokens:
            raise ExpressionSyntaxError("empty expression")
        terms = [self.term()]
        while self.peek()[0] is not None:
            kind, op = self.take()
            if (kind, op) not in (("op", "+"), ("op", "-")):
                raise ExpressionSyntaxError(f"expected '+' or '-', got {op!r}")
            coeff, atom = self.term()
            terms.append((coeff if op == "+" else -coeff, atom))
        return TimeExpr(terms)


def parse_time(text: str) -> TimeExpr:
    """Parse the atom grammar into a :class:`TimeExpr`."""
    return _TimeParser(text).parse()


_Q = r"\d+(?:/\d+)?"
_COEFF = rf"(?:{_Q}|\({_Q}\))"
_IMAGE_FORMS = [
    ("inv_pow", re.compile(rf"(?P<k>{_COEFF})/c\^(?:m|\(m(?P<e>[-+]\d+)\))")),
    ("exp", re.compile(rf"(?:(?P<k>{_COEFF})\*)?c/\(c\^m\*\(c(?P<s>[-+])(?P<a>{_Q})\)\)")),
    ("trig", re.compile(rf"(?P<k>{_COEFF})/\(c\^\(m-(?P<o>[12])\)\*\(c\^2(?P<s>[-+])(?P<a2>{_Q})\)\)")),
]


def _split_terms(text: str) -> list[tuple[int, str]]:
    text = re.sub(r"\s+", "", text)
    if not text:
        raise ExpressionSyntaxError("empty expression")
    terms, depth, start, sign = [], 0, 0, 1
    if text[0] in "+-":
        sign, start = (-1 if text[0] == "-" else 1), 1
    for i in range(start, len(text)):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ExpressionSyntaxError("unbalanced ')'")
        elif ch in "+-" and depth == 0 and text[i - 1] not in "^(":
            terms.append((sign, text[start:i]))
            sign, start = (-1 if ch == "-" else 1), i + 1
    if depth != 0:
        raise ExpressionSyntaxError("unbalanced '('")
    terms.append((sign, text[start:]))
    return terms


def _coeff(text: str | None) -> Fraction:
    if text is None:
        return Fraction(1)
    try:
        return Fraction(text.strip("()"))
    except ZeroDivisionError:
        raise ExpressionSyntaxError(f"zero denominator in {text!r}") from None


def _rational_sqrt(q: Fraction) -> Fraction:
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n != q.numerator or d * d != q.denominator:
        raise MalformedImage(f"c^2 shift {q} is not the square of a rational rate")
    return Fraction(n, d)


def parse_image(text: str) -> ImageExpr:
    """Parse rendered image notation back into an :class:`ImageExpr`.

    Raises :class:`ExpressionSyntaxError` for text that matches none of the
    table shapes and :class:`MalformedImage` for a table shape whose
    parameters cannot come from a rational rate.
    """
    if text.strip() == "0":
        return ImageExpr.zero()
    terms = []
    for sign, chunk in _split_terms(text):
        for form, pattern in _IMAGE_FORMS:
            match = pattern.fullmatch(chunk)
            if match:
                break
        else:
            raise ExpressionSyntaxError(f"not a table image: {chunk!r}")
        k = sign * _coeff(match.group("k"))
        if form == "inv_pow":
            e = match.group("e")
            terms.append((k, ImageAtom.inv_pow(int(e) if e else 0)))
        elif form == "exp":
            a = Fraction(match.group("a"))
            terms.append((k, ImageAtom.exp(a if match.group("s") == "-" else -a)))
        else:
            a = _rational_sqrt(Fraction(match.group("a2")))
            circular = match.group("s") == "+"
            if match.group("o") == "1":
                atom = ImageAtom.sin(a) if circular else ImageAtom.sinh(a)
            else:
                atom = ImageAtom.cos(a) if circular else ImageAtom.cosh(a)
            terms.append((k, atom))
    return ImageExpr(terms)
