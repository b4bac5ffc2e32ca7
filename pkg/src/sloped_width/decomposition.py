"""Sloped generalized Heegaard splittings, reduced to their combinatorial shadow.

A decomposition is a slope plus interleaved thick surfaces ``S_1..S_k`` and
thin surfaces ``F_1..F_{k-1}``, ``F_i`` sitting between ``S_i`` and
``S_{i+1}``. Only complexities, genera, boundary counts and order are kept.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .slope import CLOSED, Slope, SlopeError, parse_slope
from .surface import Component, Surface, SurfaceError, cap_off, complexity
from .width import Width

__all__ = [
    "Decomposition",
    "DecompositionError",
    "ValidationReport",
    "Violation",
    "alpha_stabilize",
    "fill",
    "from_dict",
    "from_json",
    "is_planar_heegaard",
    "reversed_order",
    "to_dict",
    "to_json",
    "tube_to_closed",
    "validate",
    "width_of",
]


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class Decomposition:
    slope: Slope
    thick: tuple[Surface, ...]
    thin: tuple[Surface, ...] = ()
    stabilized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "thick", tuple(_surface(s) for s in self.thick))
        object.__setattr__(self, "thin", tuple(_surface(s) for s in self.thin))

    @property
    def k(self) -> int:
        return len(self.thick)

    def interleaved(self) -> list[Surface]:
        """``S_1, F_1, S_2, ..., S_k``."""
        out = []
        for i, s in enumerate(self.thick):
            if i:
                out.append(self.thin[i - 1])
            out.append(s)
        return out


def _surface(s) -> Surface:
    return s if isinstance(s, Surface) else Surface(s)


@dataclass(frozen=True)
class Violation:
    rule: str
    index: int | None
    detail: str

    def to_dict(self) -> dict:
        return {"rule": self.rule, "index": self.index, "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    strict: bool
    violations: tuple[Violation, ...] = ()
    strict_violations: tuple[Violation, ...] = ()
    warnings: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        if self.violations:
            return False
        return not (self.strict and self.strict_violations)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "strict": self.strict,
            "violations": [v.to_dict() for v in self.violations],
            "strict_violations": [v.to_dict() for v in self.strict_violations],
            "warnings": [v.to_dict() for v in self.warnings],
        }


def validate(d: Decomposition, strict: bool = False) -> ValidationReport:
    """Check the combinatorial conditions every sloped decomposition satisfies.

    Hard rules: shape (``k >= 1`` thick, ``k - 1`` thin), connected thick
    surfaces, slope consistency,
    the boundary-carrying surfaces forming one contiguous run, and each thin
    surface bounded above by both neighbours in complexity, boundary count
    and genus. Strict mode adds the thin-position conditions: thin surfaces
    strictly simpler than their neighbours, and a warning for sphere
    components of thin surfaces, whose essentiality cannot be checked here.

    Thin surfaces are indexed from 1 in the report, matching ``F_i``.
    """
    hard: list[Violation] = []
    soft: list[Violation] = []
    warn: list[Violation] = []

    if d.k < 1:
        hard.append(Violation("shape", None, "need at least one thick surface"))
    if len(d.thin) != max(d.k - 1, 0):
        hard.append(Violation("shape", None, f"{d.k} thick surfaces need {max(d.k - 1, 0)} thin, got {len(d.thin)}"))
    if hard:
        return ValidationReport(strict, tuple(hard))

    for i, s in enumerate(d.thick, start=1):
        if len(s) != 1:
            hard.append(Violation("thick-connected", i, f"S_{i} has {len(s)} components; thick surfaces are connected"))

    seq = d.interleaved()
    bounded = [j for j, s in enumerate(seq) if s.boundary > 0]
    if d.slope.is_closed and bounded:
        hard.append(Violation("slope-consistency", None, "closed decomposition has surfaces with boundary"))
    if not d.slope.is_closed and not bounded:
        hard.append(Violation("slope-consistency", None, f"slope {d.slope} needs a surface with boundary"))
    if bounded and bounded[-1] - bounded[0] + 1 != len(bounded):
        hard.append(Violation("interval", None, "surfaces with boundary are not contiguous in S_1, F_1, ..., S_k"))

    for i, f in enumerate(d.thin, start=1):
        left, right = d.thick[i - 1], d.thick[i]
        cf = complexity(f)
        for side, s in (("S_%d" % i, left), ("S_%d" % (i + 1), right)):
            cs = complexity(s)
            if cf > cs:
                hard.append(Violation("adjacency-complexity", i, f"c(F_{i}) = {cf} > c({side}) = {cs}"))
            elif strict and cf == cs:
                soft.append(Violation("thin-not-simpler", i, f"c(F_{i}) = {cf} = c({side})"))
            if f.boundary > s.boundary:
                hard.append(Violation("adjacency-boundary", i, f"|dF_{i}| = {f.boundary} > |d{side}| = {s.boundary}"))
            if f.genus > s.genus:
                hard.append(Violation("adjacency-genus", i, f"g(F_{i}) = {f.genus} > g({side}) = {s.genus}"))
        if strict and any(c.is_sphere for c in f):
            warn.append(Violation("thin-sphere", i, f"F_{i} has a sphere component; it must be essential"))

    return ValidationReport(strict, tuple(hard), tuple(soft), tuple(warn))


def _require_valid(d: Decomposition) -> None:
    report = validate(d)
    if not report.ok:
        raise DecompositionError("invalid decomposition: " + "; ".join(v.detail for v in report.violations))


def width_of(d: Decomposition) -> Width:
    _require_valid(d)
    return Width(complexity(s) for s in d.thick)


def reversed_order(d: Decomposition) -> Decomposition:
    """Read the decomposition from the other end: ``S_k`` becomes ``S_1``."""
    return replace(d, thick=tuple(reversed(d.thick)), thin=tuple(reversed(d.thin)))


def alpha_stabilize(d: Decomposition, alpha: Slope, index: int = 1, component: int = 0) -> Decomposition:
    """Add an alpha-sloped bead and tunnel to the thick surface ``S_index``.

    The chosen component of ``S_index`` (``index`` is 1-based) gains two
    boundary circles, raising its complexity by exactly 2; spheres are
    rejected since their complexity would only rise by 1. A closed decomposition may
    be stabilized at any thick surface; a sloped one only along its own slope,
    and only where the result keeps the boundary-carrying run contiguous.
    """
    if alpha.is_closed:
        raise DecompositionError("cannot stabilize along the closed slope")
    if not d.slope.is_closed and alpha != d.slope:
        raise DecompositionError(f"decomposition has slope {d.slope}; cannot stabilize along {alpha}")
    _require_valid(d)
    if not 1 <= index <= d.k:
        raise DecompositionError(f"thick index {index} out of range 1..{d.k}")
    target = d.thick[index - 1]
    if not 0 <= component < len(target):
        raise DecompositionError(f"component {component} out of range for {target!r}")
    comps = list(target.components)
    g, p = comps[component]
    if g == 0 and p == 0:
        raise DecompositionError(f"S_{index} is a sphere; the bead must attach to a surface of positive complexity")
    comps[component] = Component(g, p + 2)
    thick = list(d.thick)
    thick[index - 1] = Surface(comps)
    out = Decomposition(alpha, tuple(thick), d.thin, stabilized=True)
    report = validate(out)
    if not report.ok:
        raise DecompositionError("stabilization breaks validity: " + "; ".join(v.detail for v in report.violations))
    return out


def _tube_surface(s: Surface) -> Surface:
    for c in s:
        if c.boundary % 2:
            raise DecompositionError(
                f"component ({c.genus},{c.boundary}) has an odd number of boundary circles; "
                "merge components with tube_merge first"
            )
    return Surface((c.genus + c.boundary // 2, 0) for c in s)


def tube_to_closed(d: Decomposition) -> Decomposition:
    """Tube every surface along the boundary torus until all are closed.

    Circles are paired within each component, so ``(g, p)`` becomes
    ``(g + p/2, 0)`` and a thick complexity ``3g + p - 1`` becomes
    ``3g + 3p/2 - 1``.
    """
    if d.slope.is_closed:
        raise DecompositionError("decomposition is already closed")
    _require_valid(d)
    return Decomposition(
        CLOSED,
        tuple(_tube_surface(s) for s in d.thick),
        tuple(_tube_surface(s) for s in d.thin),
        d.stabilized,
    )


def fill(d: Decomposition) -> Decomposition:
    """The induced splitting of the Dehn filling: cap off every surface."""
    if d.slope.is_closed:
        return d
    return Decomposition(
        CLOSED,
        tuple(cap_off(s) for s in d.thick),
        tuple(cap_off(s) for s in d.thin),
        d.stabilized,
    )


def is_planar_heegaard(d: Decomposition) -> bool:
    return d.k == 1 and all(c.genus == 0 for c in d.thick[0])


def _surface_to_list(s: Surface) -> list[dict]:
    return [{"g": c.genus, "b": c.boundary} for c in s]


def to_dict(d: Decomposition) -> dict:
    return {
        "slope": str(d.slope),
        "thick": [_surface_to_list(s) for s in d.thick],
        "thin": [_surface_to_list(s) for s in d.thin],
        "stabilized": d.stabilized,
    }


def to_json(d: Decomposition) -> str:
    return json.dumps(to_dict(d))


def _surface_from_list(data, where: str) -> Surface:
    if not isinstance(data, list):
        raise DecompositionError(f"{where}: surface must be a list of components")
    comps = []
    for c in data:
        if not isinstance(c, dict) or set(c) != {"g", "b"}:
            raise DecompositionError(f"{where}: component must be an object with keys 'g' and 'b', got {c!r}")
        comps.append((c["g"], c["b"]))
    try:
        return Surface(comps)
    except SurfaceError as exc:
        raise DecompositionError(f"{where}: {exc}") from None


def from_dict(data: dict) -> Decomposition:
    if not isinstance(data, dict):
        raise DecompositionError("decomposition must be a JSON object")
    missing = {"slope", "thick"} - set(data)
    if missing:
        raise DecompositionError(f"missing keys: {sorted(missing)}")
    try:
        slope = parse_slope(data["slope"])
    except SlopeError as exc:
        raise DecompositionError(str(exc)) from None
    thick = data["thick"]
    thin = data.get("thin", [])
    if not isinstance(thick, list) or not isinstance(thin, list):
        raise DecompositionError("'thick' and 'thin' must be arrays")
    stabilized = data.get("stabilized", False)
    if not isinstance(stabilized, bool):
        raise DecompositionError("'stabilized' must be a boolean")
    return Decomposition(
        slope,
        tuple(_surface_from_list(s, f"thick[{i}]") for i, s in enumerate(thick)),
        tuple(_surface_from_list(s, f"thin[{i}]") for i, s in enumerate(thin)),
        stabilized,
    )


def from_json(text: str) -> Decomposition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecompositionError(f"malformed JSON: {exc}") from None
    return from_dict(data)
