"""Toggle words: finite compositions of single-element toggles.

A word stores its steps in written order and is applied right to left, i.e.
``ToggleWord(p, space, ("x", "y"))`` toggles ``y`` first.  Every step of a
word acts on one fixed space; the four spaces cover both the combinatorial
state sets and their polytope generalizations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import KindError, UnknownElementError
from .poset import Poset

__all__ = [
    "ToggleSpace",
    "ToggleWord",
    "toggle_word",
    "rowmotion_word",
    "coxeter_word",
    "downset_word",
    "ideal_toggle_star_word",
    "antichain_toggle_star_word",
    "rank_toggle_word",
    "gyration_word",
    "apply_word",
]


class ToggleSpace(enum.Enum):
    IDEAL = "ideal"
    ANTICHAIN = "antichain"
    ORDER_REVERSING = "order-reversing"
    CHAIN_POLYTOPE = "chain-polytope"


#: Spaces whose states are subsets rather than rational labelings.
COMBINATORIAL_SPACES = (ToggleSpace.IDEAL, ToggleSpace.ANTICHAIN)
#: Spaces where the single toggle follows the ideal-toggle rule.
IDEAL_LIKE = (ToggleSpace.IDEAL, ToggleSpace.ORDER_REVERSING)


@dataclass(frozen=True)
class ToggleWord:
    """A composition of toggles over one poset and one space."""

    poset: Poset
    space: ToggleSpace
    steps: tuple[str, ...]

    def __post_init__(self):
        for e in self.steps:
            if e not in self.poset:
                raise UnknownElementError(f"unknown element in word: {e!r}")

    def __len__(self) -> int:
        return len(self.steps)

    def __mul__(self, other: "ToggleWord") -> "ToggleWord":
        """Concatenation: ``(u * v)`` applies ``v`` first, then ``u``."""
        if self.poset != other.poset or self.space is not other.space:
            raise KindError("cannot compose words over different posets/spaces")
        return ToggleWord(self.poset, self.space, self.steps + other.steps)

    def inverse(self) -> "ToggleWord":
        # Each toggle is an involution, so reversing the steps inverts the word.
        return ToggleWord(self.poset, self.space, tuple(reversed(self.steps)))

    def application_order(self) -> tuple[str, ...]:
        """The elements in the order their toggles are actually applied."""
        return tuple(reversed(self.steps))

    def describe(self) -> str:
        kind = "t" if self.space in IDEAL_LIKE else "tau"
        if not self.steps:
            return "id"
        return " ".join(f"{kind}[{e}]" for e in self.steps)


def toggle_word(p: Poset, space: ToggleSpace, steps: Iterable[str]) -> ToggleWord:
    return ToggleWord(p, space, tuple(steps))


def rowmotion_word(
    p: Poset, space: ToggleSpace, extension: Sequence[str] | None = None
) -> ToggleWord:
    """Rowmotion as a product of every toggle exactly once.

    For the ideal-like spaces the word is the linear extension as written
    (so the last element of the extension is toggled first); for the
    antichain-like spaces it is the reversed composition (the first element
    of the extension is toggled first).
    """
    ext = tuple(extension) if extension is not None else p.canonical_linear_extension()
    if sorted(ext) != sorted(p.elements):
        raise UnknownElementError("extension must use every element exactly once")
    for i, x in enumerate(ext):
        for y in ext[i + 1 :]:
            if p.is_less(y, x):
                raise KindError(f"not a linear extension: {y!r} < {x!r} out of order")
    if space in IDEAL_LIKE:
        return ToggleWord(p, space, ext)
    return ToggleWord(p, space, tuple(reversed(ext)))


def coxeter_word(p: Poset, order: Sequence[str], space: ToggleSpace) -> ToggleWord:
    """Each element's toggle exactly once, applied in the given order.

    ``order`` need not be a linear extension; ``order[0]`` is toggled first.
    """
    if sorted(order) != sorted(p.elements):
        raise UnknownElementError("order must be a permutation of the elements")
    return ToggleWord(p, space, tuple(reversed(order)))


def downset_word(
    p: Poset, members: Iterable[str], space: ToggleSpace = ToggleSpace.IDEAL
) -> ToggleWord:
    """Ideal toggles along the strict down-set of ``members``, bottom first.

    The steps follow the canonical linear extension of the subposet of
    elements strictly below some member; any other extension induces the
    same map.  Empty when every member is minimal.
    """
    if space not in IDEAL_LIKE:
        raise KindError("down-set words consist of ideal-like toggles")
    below = p.strict_down_set(members)
    steps = tuple(x for x in p.canonical_linear_extension() if x in below)
    return ToggleWord(p, space, steps)


def ideal_toggle_star_word(
    p: Poset, e: str, space: ToggleSpace = ToggleSpace.ANTICHAIN
) -> ToggleWord:
    """The ideal toggle at ``e`` transported to the antichain-like space.

    Conjugates the antichain toggle at ``e`` by the (commuting) toggles of
    the elements covered by ``e``; for minimal ``e`` it is the plain toggle.
    """
    if space in IDEAL_LIKE:
        raise KindError("transported ideal toggles act on antichain-like states")
    block = p.covered_by(e)
    return ToggleWord(p, space, block + (e,) + block)


def antichain_toggle_star_word(
    p: Poset, e: str, space: ToggleSpace = ToggleSpace.IDEAL
) -> ToggleWord:
    """The antichain toggle at ``e`` transported to the ideal-like space.

    Conjugates the ideal toggle at ``e`` by the down-set word below ``e``;
    for minimal ``e`` it is the plain toggle.
    """
    if space not in IDEAL_LIKE:
        raise KindError("transported antichain toggles act on ideal-like states")
    eta = downset_word(p, (e,), space).steps
    return ToggleWord(p, space, eta + (e,) + tuple(reversed(eta)))


def rank_toggle_word(
    p: Poset, i: int, space: ToggleSpace, starred: bool = False
) -> ToggleWord:
    """All toggles of one rank at once (optionally the transported flavor).

    Plain rank toggles commute within a rank, so any order gives the same
    map; the canonical element order is used.  Starred rank toggles compose
    the per-element transported words in canonical element order.
    """
    members = p.rank_members(i)
    if not starred:
        return ToggleWord(p, space, members)
    word = ToggleWord(p, space, ())
    for e in members:
        if space in IDEAL_LIKE:
            word = word * antichain_toggle_star_word(p, e, space)
        else:
            word = word * ideal_toggle_star_word(p, e, space)
    return word


def gyration_word(p: Poset, space: ToggleSpace) -> ToggleWord:
    """Gyration of a graded poset as a toggle word.

    Ideal-like spaces: all even-rank toggles first, then all odd ranks
    (order within a parity class is immaterial).  Antichain-like spaces:
    odd ranks from the bottom up, then even ranks from the top down.
    """
    r = p.max_rank if len(p) else -1
    if space in IDEAL_LIKE:
        order = list(range(0, r + 1, 2)) + list(range(1, r + 1, 2))
    else:
        order = list(range(1, r + 1, 2)) + list(range(r - r % 2, -1, -2))
    word = ToggleWord(p, space, ())
    for i in reversed(order):
        word = word * rank_toggle_word(p, i, space)
    return word


def apply_word(word: ToggleWord, state):
    """Apply a toggle word to a matching state, rightmost step first."""
    from . import polytope, states

    if word.space in COMBINATORIAL_SPACES:
        if not isinstance(state, states.SubsetState):
            raise KindError("combinatorial word applied to a non-subset state")
        want = (
            states.SubsetKind.IDEAL
            if word.space is ToggleSpace.IDEAL
            else states.SubsetKind.ANTICHAIN
        )
        if state.kind is not want or state.poset != word.poset:
            raise KindError(
                f"word over {word.space.value} cannot act on {state.kind.value} state"
            )
        toggle = states.toggle_ideal if want is states.SubsetKind.IDEAL else states.toggle_antichain
    else:
        if not isinstance(state, polytope.RationalLabeling):
            raise KindError("polytope word applied to a non-labeling state")
        want = (
            polytope.Space.ORDER_REVERSING
            if word.space is ToggleSpace.ORDER_REVERSING
            else polytope.Space.CHAIN
        )
        if state.space is not want or state.poset != word.poset:
            raise KindError(
                f"word over {word.space.value} cannot act on {state.space.value} labeling"
            )
        toggle = (
            polytope.pl_toggle_ideal
            if want is polytope.Space.ORDER_REVERSING
            else polytope.pl_toggle_antichain
        )
    for e in reversed(word.steps):
        state = toggle(state, e)
    return state
