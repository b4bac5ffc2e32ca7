"""Brute-force enumerators and independent recomputations for testing."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .decomposition import Decomposition, validate
from .slope import CLOSED, MERIDIAN, Slope
from .surface import Component, Surface, component_complexity
from .width import Width

__all__ = [
    "DEFAULT_BUDGET",
    "EnumerationBudget",
    "brute_compare",
    "complexity_from_euler",
    "enumerate_components",
    "enumerate_decompositions",
    "enumerate_widths",
    "iter_decompositions",
    "random_decomposition",
]


@dataclass(frozen=True)
class EnumerationBudget:
    max_genus: int = 5
    max_boundary: int = 8
    max_entry: int = 6
    max_length: int = 3
    max_thick: int = 3

    def __post_init__(self):
        for name in ("max_genus", "max_boundary", "max_entry", "max_length", "max_thick"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


DEFAULT_BUDGET = EnumerationBudget()


def complexity_from_euler(genus: int, boundary: int) -> int:
    """Complexity from first principles: 1 - chi + g, with the sphere set to 0."""
    chi = 2 - 2 * genus - boundary
    if genus == 0 and boundary == 0:
        return 0
    return 1 - chi + genus


def brute_compare(a, b) -> int:
    """Independent width comparator over plain sequences: sort, then walk."""
    xs = sorted(list(a), reverse=True)
    ys = sorted(list(b), reverse=True)
    i = 0
    while True:
        if i == len(xs) and i == len(ys):
            return 0
        if i == len(xs):
            return -1
        if i == len(ys):
            return 1
        if xs[i] < ys[i]:
            return -1
        if xs[i] > ys[i]:
            return 1
        i += 1


def enumerate_components(max_genus: int, max_boundary: int) -> list[Component]:
    return [Component(g, p) for g in range(max_genus + 1) for p in range(max_boundary + 1)]


def enumerate_widths(max_entry: int, max_length: int) -> list[Width]:
    """All widths with entries in [0, max_entry] and length in [1, max_length].

    Ordered by length, then by the non-increasing entry tuple.
    """
    out = []
    for k in range(1, max_length + 1):
        combos = {tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(max_entry + 1), k)}
        out.extend(Width(c) for c in sorted(combos))
    return out


def iter_decompositions(budget: EnumerationBudget, slope: Slope) -> Iterator[Decomposition]:
    """Yield every valid decomposition with single-component surfaces.

    Thin surfaces are pruned against the thick surface to their left as the
    sequence is built; the remaining rules are checked by :func:`validate`.
    """
    comps = enumerate_components(budget.max_genus, 0 if slope.is_closed else budget.max_boundary)
    surfaces = [Surface([c]) for c in comps]
    keyed = [(s, component_complexity(s.components[0])) for s in surfaces]

    def below(s: Surface, cs: int):
        return [t for t, ct in keyed if ct <= cs and t.boundary <= s.boundary and t.genus <= s.genus]

    def extend(thick: list[Surface], thin: list[Surface]):
        d = Decomposition(slope, tuple(thick), tuple(thin))
        if validate(d).ok:
            yield d
        if len(thick) == budget.max_thick:
            return
        last = thick[-1]
        for f in below(last, last.complexity):
            for s, cs in keyed:
                if f.complexity <= cs and f.boundary <= s.boundary and f.genus <= s.genus:
                    yield from extend(thick + [s], thin + [f])

    if budget.max_thick < 1:
        return
    for s in surfaces:
        yield from extend([s], [])


def enumerate_decompositions(budget: EnumerationBudget, slope: Slope) -> list[Decomposition]:
    return list(iter_decompositions(budget, slope))


def _random_surface(rng: random.Random, max_components: int = 3, max_genus: int = 3, max_boundary: int = 6) -> Surface:
    n = rng.randint(1, max_components)
    return Surface((rng.randint(0, max_genus), rng.randint(0, max_boundary)) for _ in range(n))


def random_decomposition(rng: random.Random, max_thick: int = 4) -> Decomposition:
    """Sample a valid decomposition; thin surfaces may be disconnected.

    Rejection sampling; thin surfaces are drawn and retried until they fit
    under both neighbours.
    """
    while True:
        kind = rng.random()
        if kind < 0.2:
            slope = CLOSED
        elif kind < 0.3:
            slope = MERIDIAN
        else:
            slope = Slope.rational(rng.randint(-30, 30), rng.randint(1, 30))
        k = rng.randint(1, max_thick)
        if slope.is_closed:
            thick = [Surface((c.genus, 0) for c in _random_surface(rng, 1)) for _ in range(k)]
        else:
            thick = [_random_surface(rng, 1) for _ in range(k)]
        thin = []
        for i in range(k - 1):
            left, right = thick[i], thick[i + 1]
            for _ in range(50):
                f = _random_surface(rng, max_components=2, max_genus=2, max_boundary=4)
                if slope.is_closed or (left.boundary == 0 or right.boundary == 0):
                    f = Surface((c.genus, 0) for c in f)
                if all(f.complexity <= s.complexity and f.boundary <= s.boundary and f.genus <= s.genus for s in (left, right)):
                    thin.append(f)
                    break
            else:
                break
        if len(thin) != k - 1:
            continue
        d = Decomposition(slope, tuple(thick), tuple(thin), stabilized=rng.random() < 0.3)
        if validate(d).ok:
            return d
