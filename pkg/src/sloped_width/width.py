"""Width multisets and their ordering.

A width is a multiset of non-negative integers held in non-increasing order.
Widths compare lexicographically on that order; when one is a proper prefix
of the other the shorter one is smaller, so ``{4} < {4,3} < {4,4}``.
"""
from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Width",
    "WidthError",
    "add_at",
    "add_pointwise",
    "ceil",
    "compare",
    "contains",
    "parse_width",
    "scale",
]


class WidthError(ValueError):
    pass


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class Width:
    entries: tuple[int, ...] = ()

    def __init__(self, entries: Iterable[int] = ()):
        values = tuple(entries)
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int):
                raise WidthError(f"width entries must be integers, got {v!r}")
            if v < 0:
                raise WidthError(f"width entries must be non-negative, got {v}")
        object.__setattr__(self, "entries", tuple(sorted(values, reverse=True)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __contains__(self, n) -> bool:
        return n in self.entries

    def __lt__(self, other: Width) -> bool:
        if not isinstance(other, Width):
            return NotImplemented
        return compare(self, other) < 0

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.entries)

    def __repr__(self) -> str:
        return "{" + str(self) + "}"


def compare(a: Width, b: Width) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    for x, y in zip(a.entries, b.entries):
        if x != y:
            return -1 if x < y else 1
    if len(a) == len(b):
        return 0
    return -1 if len(a) < len(b) else 1


def add_pointwise(a: Width, b: Width) -> Width:
    if len(a) != len(b):
        raise WidthError(f"cannot add widths of lengths {len(a)} and {len(b)}")
    return Width(x + y for x, y in zip(a.entries, b.entries))


def add_at(a: Width, i: int, m: int) -> Width:
    """Add ``m`` to the ``i``-th largest entry (1-based) and re-sort."""
    if not 1 <= i <= len(a):
        raise WidthError(f"index {i} out of range for width {a!r}")
    entries = list(a.entries)
    entries[i - 1] += m
    if entries[i - 1] < 0:
        raise WidthError(f"adding {m} at position {i} of {a!r} gives a negative entry")
    return Width(entries)


def scale(n, a: Width) -> tuple[Fraction, ...]:
    """Exact entrywise product; the result is a rational multiset, not a Width."""
    factor = Fraction(n)
    if factor < 0:
        raise WidthError(f"scale factor must be non-negative, got {n}")
    return tuple(sorted((factor * v for v in a.entries), reverse=True))


def ceil(values: Iterable) -> Width:
    # standard ceiling: least integer >= value
    return Width(math.ceil(Fraction(v)) for v in values)


def contains(a: Width, n: int) -> bool:
    return n in a.entries


_WIDTH = re.compile(r"^\{?\s*(\d+(?:\s*,\s*\d+)*)?\s*\}?$")


def parse_width(text: str) -> Width:
    """Parse ``4,4`` or ``{4,4}``; ``{}`` is the empty width."""
    m = _WIDTH.match(text.strip())
    if m is None or text.strip().startswith("{") != text.strip().endswith("}"):
        raise WidthError(f"malformed width {text!r}")
    body = m.group(1)
    if body is None:
        return Width()
    return Width(int(v) for v in body.split(","))
