"""Widths of torus-knot exteriors at every slope.

For the (p, q) torus knot and a rational slope r/s put ``delta = |pqr + s|``:

========  ==============  ======  ===========================  ============
delta     class           width   filling                      filled width
========  ==============  ======  ===========================  ============
1         Lens            {4}     L(|q|, p s^2)                {2}
0         Reducible       {4,4}   L(r,s) # L(s,r)              {2,2}
other     SeifertFibered  {7}     SFS over S^2, 3 exc. fibers  {5}
========  ==============  ======  ===========================  ============

The meridian has width {4} and the closed (unsloped) width is {5}.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .decomposition import Decomposition, fill, is_planar_heegaard, to_dict, validate, width_of
from .deduction import KnotFacts, check_width_bounds, deduce, genus_width_bound, refutes
from .slope import CLOSED, MERIDIAN, Slope, check_torus_knot, torus_knot_delta
from .surface import Surface, component_complexity
from .oracle import enumerate_components, enumerate_widths
from .width import Width, add_at, ceil, scale

__all__ = [
    "CLOSED_WIDTH",
    "Exclusion",
    "SharpnessReport",
    "SurgeryClass",
    "SurgeryClassification",
    "admissible_witness",
    "classify",
    "filled_width_for",
    "knot_facts",
    "lower_bound_exclusions",
    "slope_grid",
    "verify_bounds_sharpness",
    "witness_search",
]

CLOSED_WIDTH = Width([5])
TUNNEL_NUMBER_ONE_GENUS = 2


class SurgeryClass(str, enum.Enum):
    LENS = "Lens"
    REDUCIBLE = "Reducible"
    SEIFERT_FIBERED = "SeifertFibered"
    MERIDIAN = "Meridian"
    CLOSED = "Closed"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SurgeryClassification:
    p: int
    q: int
    slope: Slope
    kind: SurgeryClass
    delta: int | None
    width: Width
    filled_manifold: str | None
    filled_width: Width | None
    witness: Decomposition

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "slope": str(self.slope),
            "class": self.kind.value,
            "delta": self.delta,
            "width": str(self.width),
            "filled_manifold": self.filled_manifold,
            "filled_width": None if self.filled_width is None else str(self.filled_width),
            "witness": to_dict(self.witness),
        }


def _twice_punctured(genus: int) -> Surface:
    return Surface.single(genus, 2)


_FILLED_WIDTHS = {
    SurgeryClass.LENS: Width([2]),
    SurgeryClass.REDUCIBLE: Width([2, 2]),
    # genus-2 Heegaard surface, complexity 3*2 - 1
    SurgeryClass.SEIFERT_FIBERED: Width([5]),
}


def filled_width_for(kind: SurgeryClass) -> Width | None:
    return _FILLED_WIDTHS.get(kind)


def classify(p: int, q: int, slope: Slope) -> SurgeryClassification:
    check_torus_knot(p, q)
    if slope.is_closed:
        witness = Decomposition(CLOSED, (Surface.single(TUNNEL_NUMBER_ONE_GENUS, 0),))
        return SurgeryClassification(p, q, slope, SurgeryClass.CLOSED, None, CLOSED_WIDTH, None, None, witness)
    if slope.is_meridian:
        witness = Decomposition(MERIDIAN, (_twice_punctured(1),))
        return SurgeryClassification(p, q, slope, SurgeryClass.MERIDIAN, None, Width([4]), "S³", None, witness)

    delta = torus_knot_delta(p, q, slope)
    r, s = slope.numerator, slope.denominator
    if delta == 1:
        kind = SurgeryClass.LENS
        width = Width([4])
        manifold = f"L({abs(q)}, {p * s * s})"
        witness = Decomposition(slope, (_twice_punctured(1),))
    elif delta == 0:
        kind = SurgeryClass.REDUCIBLE
        width = Width([4, 4])
        manifold = f"L({r}, {s}) # L({s}, {r})"
        # two twice-punctured tori separated by the cabling annulus
        witness = Decomposition(
            slope,
            (_twice_punctured(1), _twice_punctured(1)),
            (Surface.single(0, 2),),
        )
    else:
        kind = SurgeryClass.SEIFERT_FIBERED
        width = Width([7])
        manifold = "SFS(S²; 3 exceptional fibers)"
        witness = Decomposition(slope, (_twice_punctured(2),))
    return SurgeryClassification(p, q, slope, kind, delta, width, manifold, _FILLED_WIDTHS[kind], witness)


def slope_grid(rmax: int, smax: int) -> list[Slope]:
    """Reduced slopes r/s with |r| <= rmax and 1 <= s <= smax, sorted by (r, s)."""
    out = [
        Slope.rational(r, s)
        for r in range(-rmax, rmax + 1)
        for s in range(1, smax + 1)
        if gcd(r, s) == 1
    ]
    return sorted(out, key=Slope.sort_key)


@dataclass(frozen=True)
class SharpnessReport:
    p: int
    q: int
    lower_witness: Slope
    upper_witness: Slope
    lower_bound: Width
    upper_bound: Width
    lower_attained: bool
    upper_attained: bool

    @property
    def sharp(self) -> bool:
        return self.lower_attained and self.upper_attained


def verify_bounds_sharpness(p: int, q: int) -> SharpnessReport:
    """Find slopes realizing both ends of the closed-to-sloped width bounds."""
    check_torus_knot(p, q)
    lower_bound = ceil(scale(Fraction(2, 3), CLOSED_WIDTH))
    upper_bound = add_at(CLOSED_WIDTH, 1, 2)
    bound = abs(p * q) + 1
    lower = upper = None
    for s in range(1, bound + 1):
        for r in sorted(range(-bound, bound + 1), key=lambda x: (abs(x), x)):
            if gcd(r, s) != 1:
                continue
            slope = Slope.rational(r, s)
            width = classify(p, q, slope).width
            if lower is None and width == lower_bound:
                lower = slope
            if upper is None and width == upper_bound:
                upper = slope
        if lower is not None and upper is not None:
            break
    if lower is None or upper is None:
        raise RuntimeError(f"no sharpness witnesses found for ({p}, {q})")
    return SharpnessReport(
        p, q, lower, upper, lower_bound, upper_bound,
        classify(p, q, lower).width == lower_bound and check_width_bounds(CLOSED_WIDTH, lower_bound)["lower_ok"],
        classify(p, q, upper).width == upper_bound and check_width_bounds(CLOSED_WIDTH, upper_bound)["upper_ok"],
    )


# --- lower-bound exclusion ---------------------------------------------------

def knot_facts(p: int, q: int, slope: Slope) -> KnotFacts:
    """Standard topology of a torus-knot exterior and its filling at ``slope``.

    Torus-knot exteriors are atoroidal, contain the cabling annulus and no
    closed essential surface. (2, q) torus knots are two-bridge. No filling
    in the table is Haken; only the reducible one is a sum of lens spaces.
    """
    kind = classify(p, q, slope).kind
    return KnotFacts(
        slope=slope,
        nontrivial=True,
        two_bridge=2 in (abs(p), abs(q)),
        atoroidal=True,
        essential_annulus=True,
        closed_essential_surface=False,
        filled_haken=False,
        filled_lens_sum=kind is SurgeryClass.REDUCIBLE,
    )


def admissible_witness(d: Decomposition, filled_width: Width | None) -> bool:
    """Can ``d`` be a thin decomposition of a torus-knot exterior?

    Necessary conditions only: valid with thin surfaces strictly simpler than
    their neighbours; every surface meets the boundary torus in an even number
    of curves (it separates); thin surfaces have no sphere, disk or closed
    component (no essential spheres, disks or closed surfaces) and at most one
    annulus (the cabling annulus is unique and a pair of copies does not
    separate); a single planar Heegaard surface only at the meridian; and the
    induced splitting of the filling is no thinner than the filling's width.
    """
    report = validate(d, strict=True)
    if not report.ok:
        return False
    seq = d.interleaved()
    if any(s.boundary % 2 for s in seq):
        return False
    for f in d.thin:
        if any(c.boundary == 0 or component_complexity(c) == 0 for c in f):
            return False
        if sum(1 for c in f if (c.genus, c.boundary) == (0, 2)) > 1:
            return False
    if is_planar_heegaard(d) and not d.slope.is_meridian:
        return False
    if filled_width is not None and width_of(fill(d)) < filled_width:
        return False
    return True


def witness_search(width: Width, slope: Slope, filled_width: Width | None, max_genus: int, max_boundary: int) -> Decomposition | None:
    """Search single-component decompositions of exactly ``width`` for an admissible one."""
    comps = enumerate_components(max_genus, 0 if slope.is_closed else max_boundary)
    by_c: dict[int, list[Surface]] = {}
    for c in comps:
        by_c.setdefault(component_complexity(c), []).append(Surface([c]))
    orders = sorted(set(itertools.permutations(width.entries)))
    for order in orders:
        if any(v not in by_c for v in order):
            continue
        for thick in itertools.product(*(by_c[v] for v in order)):
            candidates = []
            for left, right in zip(thick, thick[1:]):
                cap = min(left.complexity, right.complexity)
                candidates.append([Surface([c]) for c in comps if component_complexity(c) < cap])
            for thin in itertools.product(*candidates):
                d = Decomposition(slope, thick, thin)
                if admissible_witness(d, filled_width):
                    return d
    return None


@dataclass(frozen=True)
class Exclusion:
    width: Width
    excluded: bool
    reason: str
    detail: str


def lower_bound_exclusions(
    p: int,
    q: int,
    slope: Slope,
    max_entry: int | None = None,
    max_length: int = 3,
    max_genus: int | None = None,
    max_boundary: int | None = None,
) -> list[Exclusion]:
    """Try to rule out every width below the classified width of ``slope``.

    Each candidate from :func:`enumerate_widths` that is strictly smaller is
    first run through :func:`deduce`; if a conclusion contradicts the known
    topology the width is excluded by rule. Otherwise a witness decomposition
    is searched for; if none is admissible the width is excluded for lack of
    a witness. The default search budget covers every single-component
    surface whose complexity is at most ``max_entry``.
    """
    result = classify(p, q, slope)
    target = result.width
    if max_entry is None:
        max_entry = max(target.entries)
    if max_genus is None:
        max_genus = (max_entry + 1) // 3
    if max_boundary is None:
        max_boundary = max_entry + 1
    facts = knot_facts(p, q, slope)
    out = []
    for w in enumerate_widths(max_entry, max_length):
        if not w < target:
            continue
        conclusions = deduce(w, slope, single_planar=False)
        bad = refutes(facts, conclusions)
        if bad is not None:
            tags = " | ".join(t.value for t in bad.disjunction)
            out.append(Exclusion(w, True, "rules", f"{bad.rule}: {tags}"))
            continue
        found = witness_search(w, slope, result.filled_width, max_genus, max_boundary)
        if found is None:
            out.append(Exclusion(w, True, "no-witness", "no admissible decomposition"))
        else:
            out.append(Exclusion(w, False, "witness", str(to_dict(found))))
    return out


def genus_bound_holds(p: int, q: int, slope: Slope) -> bool:
    """Every torus-knot width sits under the genus-2 bound ``{7}``."""
    return classify(p, q, slope).width <= genus_width_bound(TUNNEL_NUMBER_ONE_GENUS)
