"""Exact-rational labelings of a poset and their piecewise-linear dynamics.

Three spaces of [0,1]-labelings generalize the combinatorial state sets:

* chain space: every maximal chain has label sum <= 1 (antichains are its
  0/1 points);
* order-reversing space: x <= y implies f(x) >= f(y) (ideals are its 0/1
  points);
* order-preserving space: x <= y implies f(x) <= f(y) (filters).

Monotone labelings are silently extended by a virtual bottom and top: an
order-reversing labeling has value 1 below everything and 0 above everything,
an order-preserving labeling the reverse.  Operations that take a max or min
over the covers of an element consult those virtual labels exactly when the
element is maximal or minimal, which is what makes the formulas below total.

All values are ``fractions.Fraction``; nothing in this module touches floats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from random import Random
from typing import Iterable, Mapping

from .errors import KindError, MembershipError, ParseError, UnknownElementError
from .poset import Poset
from .rationals import ONE, ZERO, format_rational, parse_rational
from .words import (
    ToggleSpace,
    apply_word,
    gyration_word,
    ideal_toggle_star_word,
    antichain_toggle_star_word,
    rank_toggle_word,
)

__all__ = [
    "Space",
    "RationalLabeling",
    "labeling",
    "indicator_labeling",
    "membership",
    "Violation",
    "to_order_reversing",
    "to_order_preserving",
    "from_order_reversing",
    "from_order_preserving",
    "complement_labeling",
    "pl_rowmotion",
    "maximal_chains",
    "maximal_chains_through",
    "pl_toggle_ideal",
    "pl_toggle_antichain",
    "pl_toggle_antichain_by_chains",
    "pl_toggle_ideal_star",
    "pl_toggle_antichain_star",
    "pl_rank_toggle",
    "pl_gyration",
    "random_order_reversing",
    "random_chain_point",
    "parse_labeling",
    "format_labeling",
]


class Space(enum.Enum):
    CHAIN = "chain-polytope"
    ORDER_REVERSING = "order-reversing"
    ORDER_PRESERVING = "order-preserving"
    FREE = "unconstrained"


_SPACE_TO_TOGGLE = {
    Space.CHAIN: ToggleSpace.CHAIN_POLYTOPE,
    Space.ORDER_REVERSING: ToggleSpace.ORDER_REVERSING,
}


@dataclass(frozen=True)
class Violation:
    """First constraint a labeling breaks: a range element, a chain, or a pair."""

    constraint: str
    where: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.constraint} at ({', '.join(self.where)})"


@dataclass(frozen=True)
class RationalLabeling:
    """An exact labeling of the poset elements, tagged with its space.

    Values are stored aligned with the poset's canonical element order.
    Construction validates membership in the tagged space (FREE checks only
    the [0,1] range).
    """

    poset: Poset
    space: Space
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.poset):
            raise MembershipError("one value per poset element is required")
        bad = membership(self.poset, self.values, self.space)
        if bad is not None:
            raise MembershipError(f"not in {self.space.value}: {bad}")

    def __getitem__(self, e: str) -> Fraction:
        return self.values[self.poset.index(e)]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.poset.elements, self.values))

    def with_value(self, e: str, value: Fraction) -> "RationalLabeling":
        vals = list(self.values)
        vals[self.poset.index(e)] = value
        return RationalLabeling(self.poset, self.space, tuple(vals))

    def retag(self, space: Space) -> "RationalLabeling":
        return RationalLabeling(self.poset, space, self.values)

    def is_binary(self) -> bool:
        return all(v == ZERO or v == ONE for v in self.values)


def labeling(
    p: Poset, space: Space, values: Mapping[str, Fraction | int | str]
) -> RationalLabeling:
    """Build a labeling from an element->rational mapping."""
    missing = [e for e in p.elements if e not in values]
    if missing:
        raise MembershipError(f"missing values for {missing}")
    for e in values:
        if e not in p:
            raise UnknownElementError(f"unknown element: {e!r}")
    vals = tuple(
        v if isinstance(v, Fraction) else Fraction(v) for v in (values[e] for e in p.elements)
    )
    return RationalLabeling(p, space, vals)


def indicator_labeling(p: Poset, members: Iterable[str], space: Space) -> RationalLabeling:
    """The 0/1 labeling of a subset, tagged with the given space."""
    mem = set(members)
    return labeling(p, space, {e: ONE if e in mem else ZERO for e in p.elements})


# -- membership ----------------------------------------------------------------


def membership(
    p: Poset, values: tuple[Fraction, ...], space: Space
) -> Violation | None:
    """The first violated constraint of ``space``, or None when inside.

    Constraints are scanned in canonical element order (and maximal chains in
    the deterministic order of :func:`maximal_chains`), so the witness is
    reproducible.
    """
    for e, v in zip(p.elements, values):
        if not ZERO <= v <= ONE:
            return Violation("value outside [0,1]", (e,))
    if space is Space.CHAIN:
        idx = {e: i for i, e in enumerate(p.elements)}
        for chain in maximal_chains(p):
            if sum(values[idx[e]] for e in chain) > ONE:
                return Violation("chain sum exceeds 1", chain)
    elif space is Space.ORDER_REVERSING:
        for x, y in p.covers:
            if values[p.index(x)] < values[p.index(y)]:
                return Violation("not order-reversing", (x, y))
    elif space is Space.ORDER_PRESERVING:
        for x, y in p.covers:
            if values[p.index(x)] > values[p.index(y)]:
                return Violation("not order-preserving", (x, y))
    return None


def _require_space(f: RationalLabeling, space: Space, op: str) -> None:
    if f.space is not space:
        raise MembershipError(f"{op} needs a {space.value} labeling, got {f.space.value}")


# -- maximal chains --------------------------------------------------------------


@lru_cache(maxsize=None)
def maximal_chains(p: Poset) -> tuple[tuple[str, ...], ...]:
    """Every inclusion-maximal cover path, bottom to top, each exactly once."""
    out: list[tuple[str, ...]] = []

    def extend(chain: list[str]) -> None:
        ups = p.covers_of(chain[-1])
        if not ups:
            out.append(tuple(chain))
            return
        for y in ups:
            chain.append(y)
            extend(chain)
            chain.pop()

    for start in p.minimal_elements():
        extend([start])
    return tuple(out)


@lru_cache(maxsize=None)
def maximal_chains_through(p: Poset, e: str) -> tuple[tuple[str, ...], ...]:
    """The maximal chains containing ``e`` (memoized per poset and element)."""
    p.index(e)
    return tuple(c for c in maximal_chains(p) if e in c)


# -- transfer maps ----------------------------------------------------------------


def to_order_reversing(g: RationalLabeling) -> RationalLabeling:
    """Transfer a chain-space point to its order-reversing labeling.

    Top-down recursion: the new value at x is g(x) plus the maximum new value
    over the covers of x (0 above a maximal element); equivalently the best
    chain sum from x upward.
    """
    _require_space(g, Space.CHAIN, "to_order_reversing")
    p = g.poset
    vals: dict[str, Fraction] = {}
    for x in reversed(p.canonical_linear_extension()):
        vals[x] = g[x] + max((vals[y] for y in p.covers_of(x)), default=ZERO)
    return labeling(p, Space.ORDER_REVERSING, vals)


def to_order_preserving(g: RationalLabeling) -> RationalLabeling:
    """Transfer a chain-space point to its order-preserving labeling."""
    _require_space(g, Space.CHAIN, "to_order_preserving")
    p = g.poset
    vals: dict[str, Fraction] = {}
    for x in p.canonical_linear_extension():
        vals[x] = g[x] + max((vals[y] for y in p.covered_by(x)), default=ZERO)
    return labeling(p, Space.ORDER_PRESERVING, vals)


def from_order_reversing(f: RationalLabeling) -> RationalLabeling:
    """Inverse transfer: subtract the best value just above each element.

    The value above a maximal element is the virtual top's 0.
    """
    _require_space(f, Space.ORDER_REVERSING, "from_order_reversing")
    p = f.poset
    vals = {
        x: f[x] - max((f[y] for y in p.covers_of(x)), default=ZERO) for x in p.elements
    }
    return labeling(p, Space.CHAIN, vals)


def from_order_preserving(f: RationalLabeling) -> RationalLabeling:
    """Inverse transfer: subtract the best value just below each element."""
    _require_space(f, Space.ORDER_PRESERVING, "from_order_preserving")
    p = f.poset
    vals = {
        x: f[x] - max((f[y] for y in p.covered_by(x)), default=ZERO) for x in p.elements
    }
    return labeling(p, Space.CHAIN, vals)


def complement_labeling(f: RationalLabeling) -> RationalLabeling:
    """Pointwise 1 - f; swaps the order-reversing and order-preserving tags."""
    swap = {
        Space.ORDER_REVERSING: Space.ORDER_PRESERVING,
        Space.ORDER_PRESERVING: Space.ORDER_REVERSING,
    }
    space = swap.get(f.space, Space.FREE)
    return RationalLabeling(f.poset, space, tuple(ONE - v for v in f.values))


def pl_rowmotion(f: RationalLabeling) -> RationalLabeling:
    """Rowmotion on any of the three polytope spaces (three-map composition)."""
    if f.space is Space.CHAIN:
        return from_order_preserving(complement_labeling(to_order_reversing(f)))
    if f.space is Space.ORDER_REVERSING:
        return to_order_reversing(from_order_preserving(complement_labeling(f)))
    if f.space is Space.ORDER_PRESERVING:
        return to_order_preserving(from_order_reversing(complement_labeling(f)))
    raise MembershipError("rowmotion needs a tagged polytope labeling")


# -- piecewise-linear toggles ---------------------------------------------------

#: When true, every chain-space toggle is recomputed from the maximal-chain
#: definition and compared against the production formula.
CROSS_CHECK_TOGGLES = False


def pl_toggle_ideal(f: RationalLabeling, e: str) -> RationalLabeling:
    """The order-reversing toggle: reflect f(e) within its allowed interval.

    New value: (max over covers of e) + (min over covered elements) - f(e),
    with the virtual labels 0 above a maximal and 1 below a minimal element.
    Restricted to 0/1 labelings this is exactly the ideal toggle.
    """
    _require_space(f, Space.ORDER_REVERSING, "pl_toggle_ideal")
    p = f.poset
    top = max((f[y] for y in p.covers_of(e)), default=ZERO)
    bottom = min((f[y] for y in p.covered_by(e)), default=ONE)
    return f.with_value(e, top + bottom - f[e])


def _best_sum_below(g: RationalLabeling, e: str) -> Fraction:
    """Max label sum over chains ending just below ``e`` (0 when e is minimal)."""
    p = g.poset
    memo: dict[str, Fraction] = {}

    def down(x: str) -> Fraction:
        if x not in memo:
            memo[x] = g[x] + max((down(y) for y in p.covered_by(x)), default=ZERO)
        return memo[x]

    return max((down(y) for y in p.covered_by(e)), default=ZERO)


def _best_sum_above(g: RationalLabeling, e: str) -> Fraction:
    """Max label sum over chains starting just above ``e`` (0 when maximal)."""
    p = g.poset
    memo: dict[str, Fraction] = {}

    def up(x: str) -> Fraction:
        if x not in memo:
            memo[x] = g[x] + max((up(y) for y in p.covers_of(x)), default=ZERO)
        return memo[x]

    return max((up(y) for y in p.covers_of(e)), default=ZERO)


def pl_toggle_antichain(g: RationalLabeling, e: str) -> RationalLabeling:
    """The chain-space toggle at ``e``.

    New value: 1 minus the best maximal-chain sum through ``e`` with the
    label of ``e`` removed, i.e. 1 - below - g(e) - above where below/above
    are the best partial sums strictly below/above ``e``.  Restricted to 0/1
    labelings this is exactly the antichain toggle.
    """
    _require_space(g, Space.CHAIN, "pl_toggle_antichain")
    g.poset.index(e)
    value = ONE - _best_sum_below(g, e) - g[e] - _best_sum_above(g, e)
    if CROSS_CHECK_TOGGLES:
        reference = pl_toggle_antichain_by_chains(g, e)
        if reference[e] != value:
            raise AssertionError(
                f"toggle mismatch at {e!r}: {value} vs chain formula {reference[e]}"
            )
    return g.with_value(e, value)


def pl_toggle_antichain_by_chains(g: RationalLabeling, e: str) -> RationalLabeling:
    """The chain-space toggle computed directly from the maximal chains.

    Kept as an independent route for cross-checking the production formula.
    """
    _require_space(g, Space.CHAIN, "pl_toggle_antichain_by_chains")
    best = max(
        (sum((g[y] for y in chain), ZERO) for chain in maximal_chains_through(g.poset, e)),
        default=ZERO,
    )
    return g.with_value(e, ONE - best)


def pl_toggle_ideal_star(g: RationalLabeling, e: str) -> RationalLabeling:
    """The order-reversing toggle at ``e`` transported to the chain space."""
    return apply_word(ideal_toggle_star_word(g.poset, e, ToggleSpace.CHAIN_POLYTOPE), g)


def pl_toggle_antichain_star(f: RationalLabeling, e: str) -> RationalLabeling:
    """The chain-space toggle at ``e`` transported to the order-reversing space."""
    return apply_word(
        antichain_toggle_star_word(f.poset, e, ToggleSpace.ORDER_REVERSING), f
    )


def pl_rank_toggle(f: RationalLabeling, i: int, starred: bool = False) -> RationalLabeling:
    """Toggle a whole rank at once on either polytope space."""
    space = _SPACE_TO_TOGGLE.get(f.space)
    if space is None:
        raise MembershipError("rank toggles act on chain or order-reversing labelings")
    return apply_word(rank_toggle_word(f.poset, i, space, starred), f)


def pl_gyration(f: RationalLabeling) -> RationalLabeling:
    """Gyration on either polytope space of a graded poset."""
    space = _SPACE_TO_TOGGLE.get(f.space)
    if space is None:
        raise MembershipError("gyration acts on chain or order-reversing labelings")
    return apply_word(gyration_word(f.poset, space), f)


# -- seeded rational sampling ------------------------------------------------------


def random_order_reversing(
    p: Poset, rng: Random, denominator: int = 64
) -> RationalLabeling:
    """A random order-reversing labeling on the 1/denominator grid."""
    vals: dict[str, Fraction] = {}
    for x in reversed(p.canonical_linear_extension()):
        low = max((vals[y] for y in p.covers_of(x)), default=ZERO)
        lo_num = -(-low.numerator * denominator // low.denominator)
        vals[x] = Fraction(rng.randint(lo_num, denominator), denominator)
    return labeling(p, Space.ORDER_REVERSING, vals)


def random_chain_point(p: Poset, rng: Random, denominator: int = 64) -> RationalLabeling:
    """A random chain-space point (inverse transfer of a random monotone labeling)."""
    return from_order_reversing(random_order_reversing(p, rng, denominator))


# -- labeling literals ---------------------------------------------------------------


def parse_labeling(p: Poset, space: Space, text: str) -> RationalLabeling:
    """Parse ``a=0.1,b=0,...`` (inline) or ``<element> <rational>`` lines."""
    values: dict[str, Fraction] = {}
    if "=" in text:
        entries = [chunk.strip() for chunk in text.split(",") if chunk.strip()]
        for entry in entries:
            if "=" not in entry:
                raise ParseError(f"bad labeling entry {entry!r}")
            name, _, raw = entry.partition("=")
            values[name.strip()] = parse_rational(raw)
    else:
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ParseError(f"line {lineno}: expected '<element> <rational>'")
            values[fields[0]] = parse_rational(fields[1])
    try:
        return labeling(p, space, values)
    except (MembershipError, UnknownElementError) as exc:
        raise ParseError(str(exc)) from exc


def format_labeling(f: RationalLabeling, decimal_ok: bool = False) -> str:
    return ", ".join(
        f"{e}={format_rational(v, decimal_ok)}" for e, v in zip(f.poset.elements, f.values)
    )
