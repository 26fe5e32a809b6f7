"""Antichains, order ideals, order filters, and their toggle dynamics."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import KindError, SizeCapError, UnknownElementError
from .poset import Poset
from .words import (
    ToggleSpace,
    ToggleWord,
    antichain_toggle_star_word,
    apply_word,
    coxeter_word,
    downset_word,
    gyration_word,
    ideal_toggle_star_word,
    rank_toggle_word,
    rowmotion_word,
)

__all__ = [
    "SubsetKind",
    "SubsetState",
    "antichain",
    "ideal",
    "order_filter",
    "ideal_of",
    "filter_of",
    "max_elements",
    "min_elements",
    "complement",
    "rowmotion",
    "toggle_ideal",
    "toggle_antichain",
    "toggle_ideal_star",
    "toggle_antichain_star",
    "rank_toggle",
    "gyration",
    "enumerate_states",
    "parse_subset",
    "format_subset",
]


class SubsetKind(enum.Enum):
    ANTICHAIN = "antichain"
    IDEAL = "ideal"
    FILTER = "filter"


_KIND_TO_SPACE = {
    SubsetKind.IDEAL: ToggleSpace.IDEAL,
    SubsetKind.ANTICHAIN: ToggleSpace.ANTICHAIN,
}


@dataclass(frozen=True)
class SubsetState:
    """A subset of a poset known to be an antichain, ideal, or filter.

    Kind is part of the identity: the empty ideal and the empty antichain
    are different states.  The kind invariant is checked at construction.
    """

    poset: Poset
    kind: SubsetKind
    members: frozenset[str]

    def __post_init__(self):
        p = self.poset
        for x in self.members:
            if x not in p:
                raise UnknownElementError(f"unknown element: {x!r}")
        if self.kind is SubsetKind.ANTICHAIN:
            pairs = [(x, y) for x in self.members for y in self.members if x < y]
            for x, y in pairs:
                if p.comparable(x, y):
                    raise KindError(f"{x!r} and {y!r} are comparable; not an antichain")
        elif self.kind is SubsetKind.IDEAL:
            for x in self.members:
                for y in p.covered_by(x):
                    if y not in self.members:
                        raise KindError(f"not downward closed at {y!r} < {x!r}")
        else:
            for x in self.members:
                for y in p.covers_of(x):
                    if y not in self.members:
                        raise KindError(f"not upward closed at {y!r} > {x!r}")

    def __contains__(self, x: str) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> tuple[str, ...]:
        """Members in canonical (poset element) order."""
        return tuple(e for e in self.poset.elements if e in self.members)


def antichain(p: Poset, members: Iterable[str] = ()) -> SubsetState:
    return SubsetState(p, SubsetKind.ANTICHAIN, frozenset(members))


def ideal(p: Poset, members: Iterable[str] = ()) -> SubsetState:
    return SubsetState(p, SubsetKind.IDEAL, frozenset(members))


def order_filter(p: Poset, members: Iterable[str] = ()) -> SubsetState:
    return SubsetState(p, SubsetKind.FILTER, frozenset(members))


def _require_kind(state: SubsetState, kind: SubsetKind, op: str) -> None:
    if state.kind is not kind:
        raise KindError(f"{op} needs a {kind.value}, got a {state.kind.value}")


# -- the basic bijections ----------------------------------------------------


def ideal_of(state: SubsetState) -> SubsetState:
    """The order ideal generated by an antichain."""
    _require_kind(state, SubsetKind.ANTICHAIN, "ideal_of")
    return SubsetState(state.poset, SubsetKind.IDEAL, state.poset.down_set(state.members))


def filter_of(state: SubsetState) -> SubsetState:
    """The order filter generated by an antichain."""
    _require_kind(state, SubsetKind.ANTICHAIN, "filter_of")
    return SubsetState(state.poset, SubsetKind.FILTER, state.poset.up_set(state.members))


def max_elements(state: SubsetState) -> SubsetState:
    """The antichain of maximal elements of the given subset."""
    p = state.poset
    members = frozenset(
        x
        for x in state.members
        if not any(y in state.members for y in p.covers_of(x))
    )
    return SubsetState(p, SubsetKind.ANTICHAIN, members)


def min_elements(state: SubsetState) -> SubsetState:
    """The antichain of minimal elements of the given subset."""
    p = state.poset
    members = frozenset(
        x
        for x in state.members
        if not any(y in state.members for y in p.covered_by(x))
    )
    return SubsetState(p, SubsetKind.ANTICHAIN, members)


def complement(state: SubsetState) -> SubsetState:
    """Set complement; swaps the ideal and filter kinds."""
    if state.kind is SubsetKind.IDEAL:
        out = SubsetKind.FILTER
    elif state.kind is SubsetKind.FILTER:
        out = SubsetKind.IDEAL
    else:
        raise KindError("complement of an antichain is not an antichain in general")
    members = frozenset(state.poset.elements) - state.members
    return SubsetState(state.poset, out, members)


def rowmotion(state: SubsetState) -> SubsetState:
    """Rowmotion on antichains, ideals, or filters (three-map composition).

    Antichains: minimal elements of the complement of the generated ideal.
    Ideals: the ideal generated by the minimal elements of the complement.
    Filters: the filter generated by the maximal elements of the complement.
    """
    if state.kind is SubsetKind.ANTICHAIN:
        return min_elements(complement(ideal_of(state)))
    if state.kind is SubsetKind.IDEAL:
        return ideal_of(min_elements(complement(state)))
    return filter_of(max_elements(complement(state)))


# -- single toggles ----------------------------------------------------------


def toggle_ideal(state: SubsetState, e: str) -> SubsetState:
    """Add or remove ``e`` when the result is still an order ideal."""
    _require_kind(state, SubsetKind.IDEAL, "toggle_ideal")
    p = state.poset
    p.index(e)
    members = state.members
    if e in members:
        if all(y not in members for y in p.covers_of(e)):
            members = members - {e}
    elif all(y in members for y in p.covered_by(e)):
        members = members | {e}
    return SubsetState(p, SubsetKind.IDEAL, members)


def toggle_antichain(state: SubsetState, e: str) -> SubsetState:
    """Remove ``e``, or insert it when incomparable to every member."""
    _require_kind(state, SubsetKind.ANTICHAIN, "toggle_antichain")
    p = state.poset
    p.index(e)
    members = state.members
    if e in members:
        members = members - {e}
    elif all(p.incomparable(e, y) for y in members):
        members = members | {e}
    return SubsetState(p, SubsetKind.ANTICHAIN, members)


def toggle_ideal_star(state: SubsetState, e: str) -> SubsetState:
    """The ideal toggle at ``e`` transported to antichains.

    Tracks what the ideal toggle does to the generated ideal: conjugate the
    antichain toggle at ``e`` by the toggles of the elements ``e`` covers.
    """
    return apply_word(ideal_toggle_star_word(state.poset, e), state)


def toggle_antichain_star(state: SubsetState, e: str) -> SubsetState:
    """The antichain toggle at ``e`` transported to ideals."""
    return apply_word(antichain_toggle_star_word(state.poset, e), state)


def rank_toggle(state: SubsetState, i: int, starred: bool = False) -> SubsetState:
    """Toggle every element of rank ``i`` at once.

    On ideals the plain flavor is the ideal toggle and the starred flavor the
    transported antichain toggle; on antichains, vice versa.
    """
    space = _KIND_TO_SPACE.get(state.kind)
    if space is None:
        raise KindError("rank toggles act on ideals or antichains")
    return apply_word(rank_toggle_word(state.poset, i, space, starred), state)


def gyration(state: SubsetState) -> SubsetState:
    """Gyration of a graded poset (see ``gyration_word`` for the rank order)."""
    space = _KIND_TO_SPACE.get(state.kind)
    if space is None:
        raise KindError("gyration acts on ideals or antichains")
    return apply_word(gyration_word(state.poset, space), state)


# -- state-space enumeration ---------------------------------------------------


def enumerate_states(p: Poset, kind: SubsetKind, cap: int = 20) -> list[SubsetState]:
    """Every state of the given kind, in a deterministic order.

    Subsets are filtered from the full power set, so the poset size is capped
    (default 20 elements).  The empty poset yields exactly the empty state.
    """
    n = len(p)
    if n > cap:
        raise SizeCapError(f"{n} elements exceeds the enumeration cap {cap}")
    out = []
    for mask in range(1 << n):
        members = frozenset(
            p.elements[j] for j in range(n) if mask >> j & 1
        )
        try:
            out.append(SubsetState(p, kind, members))
        except KindError:
            continue
    return out


# -- literals -------------------------------------------------------------------


def parse_subset(p: Poset, kind: SubsetKind, text: str) -> SubsetState:
    """Parse a ``{a,e}`` or ``{}`` literal into a state of the given kind."""
    from .errors import ParseError

    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"subset literal must be brace-delimited: {text!r}")
    inner = text[1:-1].strip()
    members = [f.strip() for f in inner.split(",") if f.strip()] if inner else []
    try:
        return SubsetState(p, kind, frozenset(members))
    except (KindError, UnknownElementError) as exc:
        raise ParseError(str(exc)) from exc


def format_subset(state: SubsetState) -> str:
    return "{" + ",".join(state.sorted_members()) + "}"
