"""Boundary slopes on a torus: rationals r/s, the meridian (inf) and the closed symbol."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "CLOSED",
    "MERIDIAN",
    "Slope",
    "SlopeError",
    "SlopeKind",
    "check_torus_knot",
    "parse_slope",
    "torus_knot_delta",
]


class SlopeError(ValueError):
    pass


class SlopeKind(enum.Enum):
    RATIONAL = "rational"
    MERIDIAN = "meridian"
    CLOSED = "closed"


@dataclass(frozen=True)
class Slope:
    """An element of Q u {inf, closed}.

    Rational slopes are kept reduced with a positive denominator; build them
    through :meth:`rational` rather than the constructor.
    """

    kind: SlopeKind
    numerator: int = 0
    denominator: int = 1

    @classmethod
    def rational(cls, r: int, s: int) -> Slope:
        if s == 0:
            raise SlopeError(f"zero denominator in {r}/{s}; use 'inf' for the meridian")
        if s < 0:
            r, s = -r, -s
        g = gcd(r, s)
        return cls(SlopeKind.RATIONAL, r // g, s // g)

    @property
    def is_rational(self) -> bool:
        return self.kind is SlopeKind.RATIONAL

    @property
    def is_meridian(self) -> bool:
        return self.kind is SlopeKind.MERIDIAN

    @property
    def is_closed(self) -> bool:
        return self.kind is SlopeKind.CLOSED

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise SlopeError(f"{self} is not a rational slope")
        return Fraction(self.numerator, self.denominator)

    def sort_key(self) -> tuple:
        """Rationals by (numerator, denominator), then the meridian, then closed."""
        order = {SlopeKind.RATIONAL: 0, SlopeKind.MERIDIAN: 1, SlopeKind.CLOSED: 2}
        return (order[self.kind], self.numerator, self.denominator)

    def __str__(self) -> str:
        if self.kind is SlopeKind.MERIDIAN:
            return "inf"
        if self.kind is SlopeKind.CLOSED:
            return "closed"
        return f"{self.numerator}/{self.denominator}"


MERIDIAN = Slope(SlopeKind.MERIDIAN)
CLOSED = Slope(SlopeKind.CLOSED)

_RATIONAL = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


def parse_slope(text: str) -> Slope:
    """Parse ``r/s``, ``n``, ``inf`` or ``closed``.

    ``1/0`` and ``-1/0`` are accepted as the meridian; any other zero
    denominator is rejected.
    """
    if not isinstance(text, str):
        raise SlopeError(f"slope text must be a string, got {type(text).__name__}")
    text = text.strip()
    lowered = text.lower()
    if lowered == "inf":
        return MERIDIAN
    if lowered == "closed":
        return CLOSED
    m = _RATIONAL.match(text)
    if m is None:
        raise SlopeError(f"malformed slope {text!r}")
    r = int(m.group(1))
    s = int(m.group(2)) if m.group(2) is not None else 1
    if s == 0:
        if abs(r) == 1:
            return MERIDIAN
        raise SlopeError(f"zero denominator in {text!r}")
    return Slope.rational(r, s)


def check_torus_knot(p: int, q: int) -> None:
    """Raise unless (p, q) describes a nontrivial torus knot."""
    if abs(p) < 2 or abs(q) < 2:
        raise SlopeError(f"torus knot needs |p|, |q| >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise SlopeError(f"torus knot needs gcd(p, q) = 1, got ({p}, {q})")


def torus_knot_delta(p: int, q: int, slope: Slope) -> int:
    """|p*q*r + s| for the slope r/s on the (p, q) torus knot."""
    check_torus_knot(p, q)
    if not slope.is_rational:
        raise SlopeError(f"delta is undefined for slope {slope}")
    return abs(p * q * slope.numerator + slope.denominator)
