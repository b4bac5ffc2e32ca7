"""Surfaces as multisets of (genus, boundary-count) components.

Complexity of a connected component is ``1 - chi + g = 3g + p - 1``, except
that the sphere is assigned 0. A disconnected surface sums its components.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "Component",
    "Surface",
    "SurfaceError",
    "cap_off",
    "complexity",
    "component_complexity",
    "tube_merge",
    "tube_same_component",
]


class SurfaceError(ValueError):
    pass


class Component(NamedTuple):
    genus: int
    boundary: int

    @property
    def is_sphere(self) -> bool:
        return self.genus == 0 and self.boundary == 0

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary


def _component(c) -> Component:
    g, b = c
    if not (isinstance(g, int) and isinstance(b, int)) or isinstance(g, bool) or isinstance(b, bool):
        raise SurfaceError(f"genus and boundary must be integers, got {c!r}")
    if g < 0 or b < 0:
        raise SurfaceError(f"genus and boundary must be non-negative, got {c!r}")
    return Component(g, b)


@dataclass(frozen=True)
class Surface:
    """An unordered multiset of components.

    Components are stored largest first, so two surfaces with the same
    components compare equal regardless of construction order. Component
    selectors used by the tubing operations index this canonical order.
    """

    components: tuple[Component, ...] = ()

    def __init__(self, components: Iterable = ()):
        comps = tuple(sorted((_component(c) for c in components), reverse=True))
        object.__setattr__(self, "components", comps)

    @classmethod
    def single(cls, genus: int, boundary: int) -> Surface:
        return cls([(genus, boundary)])

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    @property
    def genus(self) -> int:
        return sum(c.genus for c in self.components)

    @property
    def boundary(self) -> int:
        return sum(c.boundary for c in self.components)

    @property
    def is_closed(self) -> bool:
        return self.boundary == 0

    @property
    def complexity(self) -> int:
        return complexity(self)

    def __repr__(self) -> str:
        inner = ", ".join(f"({c.genus},{c.boundary})" for c in self.components)
        return f"Surface({{{inner}}})"


def component_complexity(c: Component) -> int:
    if c.is_sphere:
        return 0
    return 3 * c.genus + c.boundary - 1


def complexity(s: Surface) -> int:
    return sum(component_complexity(c) for c in s.components)


def _check_index(s: Surface, index: int) -> None:
    if not 0 <= index < len(s.components):
        raise SurfaceError(f"component index {index} out of range for {s!r}")


def tube_same_component(s: Surface, index: int = 0) -> Surface:
    """Tube two boundary circles of one component together along the torus.

    ``(g, p)`` becomes ``(g + 1, p - 2)``; Euler characteristic is unchanged.
    """
    _check_index(s, index)
    g, p = s.components[index]
    if p < 2:
        raise SurfaceError(f"component ({g},{p}) needs at least 2 boundary circles to tube")
    rest = s.components[:index] + s.components[index + 1:]
    return Surface(rest + (Component(g + 1, p - 2),))


def tube_merge(s: Surface, index_a: int, index_b: int) -> Surface:
    """Join a boundary circle of one component to a circle of another by an annulus."""
    _check_index(s, index_a)
    _check_index(s, index_b)
    if index_a == index_b:
        raise SurfaceError("tube_merge needs two distinct components")
    a, b = s.components[index_a], s.components[index_b]
    if a.boundary < 1 or b.boundary < 1:
        raise SurfaceError(f"components {tuple(a)} and {tuple(b)} must both have boundary")
    rest = [c for i, c in enumerate(s.components) if i not in (index_a, index_b)]
    rest.append(Component(a.genus + b.genus, a.boundary + b.boundary - 2))
    return Surface(rest)


def cap_off(s: Surface) -> Surface:
    """Cap every boundary circle with a disk, keeping genus."""
    return Surface((c.genus, 0) for c in s.components)
