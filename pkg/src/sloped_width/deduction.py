"""Width-restriction rules for knot exteriors in S^3, and width bounds.

:func:`deduce` turns a width into topological conclusions. Each conclusion is
a disjunction of tags: at least one of the tags holds. Single facts are
one-element disjunctions. Alternatives are never flattened.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .slope import Slope
from .width import Width, add_at, ceil, scale

__all__ = [
    "Conclusion",
    "Honesty",
    "KnotFacts",
    "Tag",
    "check_width_bounds",
    "deduce",
    "genus_width_bound",
    "honest_by_genus_drop",
    "refutes",
]


class Tag(str, enum.Enum):
    UNKNOT = "Unknot"
    TWO_BRIDGE = "TwoBridge"
    SLOPE_MUST_BE_MERIDIAN = "SlopeMustBeMeridian"
    ESSENTIAL_TORUS = "EssentialTorusInExterior"
    ANNULUS_AND_LENS_SUM = "EssentialAnnulusAndFilledConnectSumOfLensSpaces"
    CLOSED_ESSENTIAL_SURFACE = "ClosedEssentialSurface"
    FILLED_HAKEN = "FilledHaken"
    FILLED_LENS_SUM = "FilledConnectSumTwoLensSpaces"
    INCONSISTENT = "InconsistentForKnotExterior"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Conclusion:
    rule: str
    disjunction: tuple[Tag, ...]

    def to_dict(self) -> dict:
        return {"rule": self.rule, "disjunction": [t.value for t in self.disjunction]}


def _one(rule: str, tag: Tag) -> Conclusion:
    return Conclusion(rule, (tag,))


def deduce(width: Width, slope: Slope, single_planar: bool = False) -> list[Conclusion]:
    """Apply the width rules in order.

    * a 1 in the width means the unknot, and nothing else is concluded;
    * a 0 means an essential sphere, impossible in a knot exterior;
    * ``{3}`` means a two-bridge knot, with the slope forced to be the meridian;
    * a 3 in a width other than ``{3}``, or a width below ``{3}``, means an
      essential torus, or an essential annulus with the filling a connected
      sum of two lens spaces;
    * a single planar Heegaard surface forces the meridian;
    * two or more thick surfaces at a rational slope mean a closed essential
      surface, a Haken filling, or a filling that is a sum of two lens spaces.
    """
    if 1 in width:
        return [_one("unknot-criterion", Tag.UNKNOT)]

    out: list[Conclusion] = []

    def add(c: Conclusion) -> None:
        if all(c.disjunction != prior.disjunction for prior in out):
            out.append(c)

    if 0 in width:
        add(_one("essential-sphere", Tag.INCONSISTENT))
    three = Width([3])
    if width == three:
        add(_one("two-bridge-criterion", Tag.TWO_BRIDGE))
        if not slope.is_meridian:
            add(_one("two-bridge-criterion", Tag.SLOPE_MUST_BE_MERIDIAN))
    elif 3 in width or (len(width) and width < three):
        add(Conclusion("torus-or-cabling-annulus", (Tag.ESSENTIAL_TORUS, Tag.ANNULUS_AND_LENS_SUM)))
    if single_planar and not slope.is_meridian:
        add(_one("planar-heegaard-surface", Tag.SLOPE_MUST_BE_MERIDIAN))
    if len(width) >= 2 and slope.is_rational:
        add(Conclusion("filling-trichotomy", (Tag.CLOSED_ESSENTIAL_SURFACE, Tag.FILLED_HAKEN, Tag.FILLED_LENS_SUM)))
    return out


@dataclass(frozen=True)
class KnotFacts:
    """Known topology of a knot exterior and one of its fillings.

    Used to decide whether a deduced conclusion contradicts what is known.
    """

    slope: Slope
    nontrivial: bool = True
    two_bridge: bool = False
    atoroidal: bool = True
    essential_annulus: bool = False
    closed_essential_surface: bool = False
    filled_haken: bool = False
    filled_lens_sum: bool = False


def _tag_holds(tag: Tag, facts: KnotFacts) -> bool:
    if tag is Tag.UNKNOT:
        return not facts.nontrivial
    if tag is Tag.TWO_BRIDGE:
        return facts.two_bridge
    if tag is Tag.SLOPE_MUST_BE_MERIDIAN:
        return facts.slope.is_meridian
    if tag is Tag.ESSENTIAL_TORUS:
        return not facts.atoroidal
    if tag is Tag.ANNULUS_AND_LENS_SUM:
        return facts.essential_annulus and facts.filled_lens_sum
    if tag is Tag.CLOSED_ESSENTIAL_SURFACE:
        return facts.closed_essential_surface
    if tag is Tag.FILLED_HAKEN:
        return facts.filled_haken
    if tag is Tag.FILLED_LENS_SUM:
        return facts.filled_lens_sum
    return False  # INCONSISTENT never holds


def refutes(facts: KnotFacts, conclusions: list[Conclusion]) -> Conclusion | None:
    """Return the first conclusion none of whose alternatives can hold, if any."""
    for c in conclusions:
        if not any(_tag_holds(t, facts) for t in c.disjunction):
            return c
    return None


def check_width_bounds(closed_width: Width, sloped_width: Width) -> dict[str, bool]:
    """Check ``ceil(2/3 * w_closed) <= w_sloped <= w_closed +_1 2``."""
    if not len(closed_width):
        raise ValueError("closed width must be non-empty")
    lower = ceil(scale(Fraction(2, 3), closed_width))
    upper = add_at(closed_width, 1, 2)
    return {"lower_ok": lower <= sloped_width, "upper_ok": sloped_width <= upper}


def genus_width_bound(g: int) -> Width:
    """Upper bound ``{3g+1}`` on sloped widths of a manifold of Heegaard genus g."""
    if g < 0:
        raise ValueError(f"genus must be non-negative, got {g}")
    return Width([3 * g + 1])


class Honesty(str, enum.Enum):
    HONEST = "Honest"
    UNKNOWN = "Unknown"


def honest_by_genus_drop(genus_m: int, genus_filled: int, slope: Slope, knot_in_s3: bool = True) -> Honesty:
    """A slope whose filling drops Heegaard genus is honest.

    The criterion only goes one way, so anything else is ``UNKNOWN``. For a
    knot in S^3 the meridian always fills to S^3 and is honest.
    """
    if genus_m < 0 or genus_filled < 0:
        raise ValueError("genera must be non-negative")
    if slope.is_closed:
        raise ValueError("honesty is not defined for the closed slope")
    if genus_filled < genus_m:
        return Honesty.HONEST
    if slope.is_meridian and knot_in_s3:
        return Honesty.HONEST
    return Honesty.UNKNOWN
