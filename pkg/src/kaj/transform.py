"""Table-driven KAJ transform over a fixed basis of time-domain functions.

Time-domain expressions are finite sums of rational multiples of the atoms
``1, t^p, e^{at}, sin(at), cos(at), sinh(at), cosh(at)``.  The transform maps
each atom to a canonical image atom in the variable ``c`` with the order ``m``
kept symbolic, and extends to sums by linearity::

    1         -> 1/c^(m+1)
    t^p       -> p!/c^(m+p+1)
    e^(at)    -> c/(c^m (c-a))
    sin(at)   -> a/(c^(m-1) (c^2+a^2))
    cos(at)   -> 1/(c^(m-2) (c^2+a^2))
    sinh(at)  -> a/(c^(m-1) (c^2-a^2))
    cosh(at)  -> 1/(c^(m-2) (c^2-a^2))

Nothing here integrates anything; both directions are table lookups with
exact rational coefficients.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from kaj.errors import EmptyMessage, InvalidParams, MalformedImage

__all__ = [
    "TimeKind",
    "ImageKind",
    "TimeAtom",
    "ImageAtom",
    "TimeExpr",
    "ImageExpr",
    "transform_atom",
    "transform_expr",
    "invert_atom",
    "invert_expr",
    "expand_carrier_series",
]


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class TimeKind(enum.Enum):
    CONST = 0
    POWER = 1
    EXP = 2
    SIN = 3
    COS = 4
    SINH = 5
    COSH = 6


class ImageKind(enum.Enum):
    INV_POW = 0
    EXP = 2
    SIN = 3
    COS = 4
    SINH = 5
    COSH = 6


_RATE_KINDS = (TimeKind.EXP, TimeKind.SIN, TimeKind.COS, TimeKind.SINH, TimeKind.COSH)


@dataclass(frozen=True)
class TimeAtom:
    """One basis function of ``t``.

    ``param`` is the exponent for ``POWER`` (a nonnegative int), the rate
    ``a`` for the exponential and trigonometric kinds, and ``0`` for
    ``CONST``.  ``POWER`` with exponent 0 becomes ``CONST`` on construction.
    """

    kind: TimeKind
    param: int | Fraction = 0

    def __post_init__(self):
        if self.kind is TimeKind.CONST:
            object.__setattr__(self, "param", 0)
        elif self.kind is TimeKind.POWER:
            p = self.param
            if isinstance(p, Fraction):
                if p.denominator != 1:
                    raise InvalidParams(f"power exponent must be an integer, got {p}")
                p = p.numerator
            if not isinstance(p, int) or isinstance(p, bool) or p < 0:
                raise InvalidParams(f"power exponent must be a nonnegative integer, got {p!r}")
            if p == 0:
                object.__setattr__(self, "kind", TimeKind.CONST)
            object.__setattr__(self, "param", p)
        else:
            object.__setattr__(self, "param", _rational(self.param))

    @classmethod
    def const(cls) -> TimeAtom:
        return cls(TimeKind.CONST)

    @classmethod
    def power(cls, p: int) -> TimeAtom:
        return cls(TimeKind.POWER, p)

    @classmethod
    def exp(cls, a) -> TimeAtom:
        return cls(TimeKind.EXP, a)

    @classmethod
    def sin(cls, a) -> TimeAtom:
        return cls(TimeKind.SIN, a)

    @classmethod
    def cos(cls, a) -> TimeAtom:
        return cls(TimeKind.COS, a)

    @classmethod
    def sinh(cls, a) -> TimeAtom:
        return cls(TimeKind.SINH, a)

    @classmethod
    def cosh(cls, a) -> TimeAtom:
        return cls(TimeKind.COSH, a)

    @property
    def is_zero_function(self) -> bool:
        # sin(0 t) and sinh(0 t) vanish identically
        return self.kind in (TimeKind.SIN, TimeKind.SINH) and self.param == 0

    def sort_key(self):
        return (self.kind.value, self.param)


@dataclass(frozen=True)
class ImageAtom:
    """One canonical image function of ``c`` with symbolic order ``m``.

    ``INV_POW`` with offset ``e`` stands for ``1/c^(m+e)``; the other kinds
    carry the rate ``a`` and stand for the denominators in the module table
    (the numerator lives in the term coefficient).  Construction does not
    validate; :func:`invert_atom` rejects atoms outside the table.
    """

    kind: ImageKind
    param: int | Fraction

    def __post_init__(self):
        if self.kind is ImageKind.INV_POW:
            if not isinstance(self.param, int) or isinstance(self.param, bool):
                raise TypeError("INV_POW offset must be an int")
        else:
            object.__setattr__(self, "param", _rational(self.param))

    @classmethod
    def inv_pow(cls, offset: int) -> ImageAtom:
        return cls(ImageKind.INV_POW, offset)

    @classmethod
    def exp(cls, a) -> ImageAtom:
        return cls(ImageKind.EXP, a)

    @classmethod
    def sin(cls, a) -> ImageAtom:
        return cls(ImageKind.SIN, a)

    @classmethod
    def cos(cls, a) -> ImageAtom:
        return cls(ImageKind.COS, a)

    @classmethod
    def sinh(cls, a) -> ImageAtom:
        return cls(ImageKind.SINH, a)

    @classmethod
    def cosh(cls, a) -> ImageAtom:
        return cls(ImageKind.COSH, a)

    def sort_key(self):
        return (self.kind.value, self.param)


class _LinearExpr:
    """Immutable finite linear combination of atoms with rational weights.

    Terms are kept in canonical form: no zero weights, one term per atom,
    sorted by atom.  Two expressions are equal iff their term tuples are.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple] = ()):
        merged: dict = {}
        for coeff, atom in terms:
            coeff = _rational(coeff)
            if self._drops(atom):
                continue
            merged[atom] = merged.get(atom, Fraction(0)) + coeff
        ordered = sorted(
            ((c, a) for a, c in merged.items() if c != 0),
            key=lambda term: term[1].sort_key(),
        )
        object.__setattr__(self, "_terms", tuple(ordered))

    @staticmethod
    def _drops(atom) -> bool:
        return False

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def terms(self) -> tuple:
        return self._terms

    @classmethod
    def atom(cls, atom, coeff=1):
        return cls([(coeff, atom)])

    @classmethod
    def zero(cls):
        return cls()

    def coefficient(self, atom) -> Fraction:
        for c, a in self._terms:
            if a == atom:
                return c
        return Fraction(0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, self._terms))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self._terms + other._terms)

    def __neg__(self):
        return type(self)((-c, a) for c, a in self._terms)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Rational)):
            return NotImplemented
        s = _rational(scalar)
        return type(self)((s * c, a) for c, a in self._terms)

    __rmul__ = __mul__

    def __repr__(self):
        body = ", ".join(f"({c}, {a})" for c, a in self._terms)
        return f"{type(self).__name__}([{body}])"


class TimeExpr(_LinearExpr):
    """A sum of rational multiples of :class:`TimeAtom`."""

    __slots__ = ()

    @staticmethod
    def _drops(atom) -> bool:
        if not isinstance(atom, TimeAtom):
            raise TypeError(f"TimeExpr terms need TimeAtom, got {type(atom).__name__}")
        return atom.is_zero_function


class ImageExpr(_LinearExpr):
    """A sum of rational multiples of :class:`ImageAtom`."""

    __slots__ = ()

    @staticmethod
    def _drops(atom) -> bool:
        if not isinstance(atom, ImageAtom):
            raise TypeError(f"ImageExpr terms need ImageAtom, got {type(atom).__name__}")
        return False


def transform_atom(atom: TimeAtom) -> tuple[Fraction, ImageAtom]:
    """Look up the image of a single basis function.

    >>> transform_atom(TimeAtom.power(2))
    (Fraction(2, 1), ImageAtom(kind=<ImageKind.INV_POW: 0>, param=3))
    """
    kind, a = atom.kind, atom.param
    if kind is TimeKind.CONST:
        return Fraction(1), ImageAtom.inv_pow(1)
    if kind is TimeKind.POWER:
        return Fraction(math.factorial(a)), ImageAtom.inv_pow(a + 1)
    if kind is TimeKind.EXP:
        return Fraction(1), ImageAtom.exp(a)
    if kind is TimeKind.SIN:
        return a, ImageAtom.sin(a)
    if kind is TimeKind.COS:
        return Fraction(1), ImageAtom.cos(a)
    if kind is TimeKind.SINH:
        return a, ImageAtom.sinh(a)
    if kind is TimeKind.COSH:
        return Fraction(1), ImageAtom.cosh(a)
    raise AssertionError(kind)


def transform_expr(expr: TimeExpr) -> ImageExpr:
    terms = []
    for coeff, atom in expr:
        scale, image = transform_atom(atom)
        terms.append((coeff * scale, image))
    return ImageExpr(terms)


_IMAGE_TO_TIME = {
    ImageKind.EXP: TimeKind.EXP,
    ImageKind.SIN: TimeKind.SIN,
    ImageKind.COS: TimeKind.COS,
    ImageKind.SINH: TimeKind.SINH,
    ImageKind.COSH: TimeKind.COSH,
}


def invert_atom(coeff, image: ImageAtom) -> tuple[Fraction, TimeAtom]:
    """Inverse table lookup: ``coeff * image`` as ``weight * time_atom``.

    Raises :class:`MalformedImage` for atoms outside the table, i.e. an
    ``INV_POW`` offset below 1 or a sine-type image with zero rate.
    """
    coeff = _rational(coeff)
    kind, a = image.kind, image.param
    if kind is ImageKind.INV_POW:
        if a < 1:
            raise MalformedImage(f"1/c^(m{a:+d}) is not in the table (offset must be >= 1)")
        p = a - 1
        return coeff / math.factorial(p), TimeAtom.power(p)
    if kind in (ImageKind.SIN, ImageKind.SINH):
        if a == 0:
            raise MalformedImage(f"{kind.name.lower()} image with zero rate has no preimage")
        return coeff / a, TimeAtom(_IMAGE_TO_TIME[kind], a)
    return coeff, TimeAtom(_IMAGE_TO_TIME[kind], a)


def invert_expr(image: ImageExpr) -> TimeExpr:
    return TimeExpr(invert_atom(coeff, atom) for coeff, atom in image)


def expand_carrier_series(message: Sequence[int] | bytes, beta: int) -> TimeExpr:
    """Truncated series of ``F t^2 e^{beta t}`` carrying one byte per term.

    The k-th byte (1-based) weights the k-th series term, giving
    ``F_k * beta^(k-1)/(k-1)! * t^(k+1)``.
    """
    data = bytes(message)
    if not data:
        raise EmptyMessage("message must contain at least one byte")
    if isinstance(beta, bool) or not isinstance(beta, int) or beta < 1:
        raise InvalidParams(f"beta must be a positive integer, got {beta!r}")
    terms = []
    weight = Fraction(1)
    for k, byte in enumerate(data, start=1):
        if k > 1:
            weight = weight * beta / (k - 1)
        terms.append((byte * weight, TimeAtom.power(k + 1)))
    return TimeExpr(terms)
