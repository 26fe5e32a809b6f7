"""Orbits under invertible actions, exact statistics, and homomesy verdicts."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (
    KindError,
    ParseError,
    SpaceMismatchError,
    TruncatedOrbitError,
)
from .polytope import RationalLabeling, Space, pl_gyration, pl_rowmotion
from .poset import Poset
from .rationals import ONE, ZERO, parse_rational
from .states import SubsetKind, SubsetState, enumerate_states, gyration, rowmotion
from .words import ToggleSpace, ToggleWord, apply_word, coxeter_word

__all__ = [
    "Action",
    "coxeter_word",
    "Orbit",
    "Statistic",
    "StatisticVerdict",
    "HomomesyReport",
    "word_action",
    "rowmotion_action",
    "gyration_action",
    "orbit",
    "orbit_decomposition",
    "orbit_average",
    "homomesy_check",
    "cesaro_average",
    "indicator",
    "value_at",
    "cardinality",
    "combine",
    "parse_statistic",
]

_SPACE_OF_TOGGLE = {
    ToggleSpace.IDEAL: SubsetKind.IDEAL,
    ToggleSpace.ANTICHAIN: SubsetKind.ANTICHAIN,
    ToggleSpace.ORDER_REVERSING: Space.ORDER_REVERSING,
    ToggleSpace.CHAIN_POLYTOPE: Space.CHAIN,
}

DEFAULT_ORBIT_CAP = 10**6


@dataclass(frozen=True)
class Action:
    """An invertible map on one state space, with enough metadata to check
    that starts and actions agree before iterating."""

    poset: Poset
    domain: SubsetKind | Space
    func: Callable
    name: str

    def __call__(self, state):
        return self.func(state)

    def matches(self, state) -> bool:
        if isinstance(state, SubsetState):
            return state.poset == self.poset and state.kind == self.domain
        if isinstance(state, RationalLabeling):
            return state.poset == self.poset and state.space == self.domain
        return False


def word_action(word: ToggleWord) -> Action:
    return Action(
        word.poset,
        _SPACE_OF_TOGGLE[word.space],
        lambda s: apply_word(word, s),
        word.describe(),
    )


def rowmotion_action(p: Poset, domain: SubsetKind | Space) -> Action:
    func = rowmotion if isinstance(domain, SubsetKind) else pl_rowmotion
    return Action(p, domain, func, "rowmotion")


def gyration_action(p: Poset, domain: SubsetKind | Space) -> Action:
    func = gyration if isinstance(domain, SubsetKind) else pl_gyration
    return Action(p, domain, func, "gyration")


@dataclass(frozen=True)
class Orbit:
    """A trajectory listed from the start to the step before recurrence.

    ``period`` is None exactly when the step cap was hit before the
    trajectory returned to its start.
    """

    states: tuple
    period: int | None
    truncated: bool


def orbit(action: Action, start, cap: int = DEFAULT_ORBIT_CAP) -> Orbit:
    """Iterate ``action`` from ``start`` until first recurrence or the cap.

    Recurrence detection is exact: states are hashed by value and confirmed
    by full comparison.  The action must be a bijection, so the first state
    to recur is the start itself; anything else is reported as an error.
    """
    if cap < 1:
        raise ValueError("orbit cap must be positive")
    if not action.matches(start):
        raise SpaceMismatchError(
            f"action over {action.domain} cannot start at the given state"
        )
    seen = {start: 0}
    states = [start]
    current = start
    while len(states) < cap:
        current = action(current)
        if current in seen:
            if seen[current] != 0:
                raise RuntimeError("action is not invertible: interior recurrence")
            return Orbit(tuple(states), len(states), False)
        seen[current] = len(states)
        states.append(current)
    current = action(current)
    if current == start:
        return Orbit(tuple(states), len(states), False)
    return Orbit(tuple(states), None, True)


def orbit_decomposition(
    action: Action, cap: int = 20, orbit_cap: int = DEFAULT_ORBIT_CAP
) -> list[Orbit]:
    """Partition the full (finite, combinatorial) state space into orbits.

    Orbits are listed smallest first, ties broken by the enumeration index of
    their earliest state, so the decomposition is deterministic.
    """
    if not isinstance(action.domain, SubsetKind):
        raise KindError("orbit decomposition needs an enumerable state space")
    all_states = enumerate_states(action.poset, action.domain, cap)
    position = {s: i for i, s in enumerate(all_states)}
    seen: set = set()
    orbits: list[tuple[int, Orbit]] = []
    for s in all_states:
        if s in seen:
            continue
        o = orbit(action, s, orbit_cap)
        seen.update(o.states)
        orbits.append((min(position[x] for x in o.states), o))
    orbits.sort(key=lambda pair: (len(pair[1].states), pair[0]))
    return [o for _, o in orbits]


# -- statistics ---------------------------------------------------------------


@dataclass(frozen=True)
class Statistic:
    """An exact-rational statistic on states."""

    name: str
    func: Callable

    def __call__(self, state) -> Fraction:
        return self.func(state)


def _state_value(state, e: str) -> Fraction:
    if isinstance(state, SubsetState):
        return ONE if e in state.members else ZERO
    return state[e]


def indicator(p: Poset, e: str, name: str | None = None) -> Statistic:
    """Membership of one element (its exact label, on polytope states)."""
    p.index(e)
    return Statistic(name or f"I[{e}]", lambda s: _state_value(s, e))


def value_at(p: Poset, e: str, name: str | None = None) -> Statistic:
    """The label of one element (membership, on subset states)."""
    p.index(e)
    return Statistic(name or f"h({e})", lambda s: _state_value(s, e))


def cardinality() -> Statistic:
    """Number of members (label sum, on polytope states)."""

    def total(state) -> Fraction:
        if isinstance(state, SubsetState):
            return Fraction(len(state.members))
        return sum(state.values, ZERO)

    return Statistic("cardinality", total)


def combine(terms: Sequence[tuple[Fraction, Statistic]], name: str | None = None) -> Statistic:
    """A rational linear combination of statistics."""
    frozen = tuple((Fraction(c), s) for c, s in terms)
    label = name or " + ".join(f"{c}*{s.name}" for c, s in frozen)
    return Statistic(label, lambda state: sum((c * s(state) for c, s in frozen), ZERO))


_TERM_RE = re.compile(
    r"""(?P<sign>[+-])?\s*
        (?P<coef>\d+(?:/\d+)?|\d*\.\d+)?\s*\*?\s*
        (?:I(?P<index>\d+)|h\((?P<elem>[^)\s]+)\))\s*""",
    re.VERBOSE,
)


def parse_statistic(p: Poset, text: str) -> Statistic:
    """Parse the statistic mini-language: ``2I1+I2``, ``h(a3)-h(a6)``, ...

    ``Ij`` is the indicator of the j-th element in canonical order (1-based);
    ``h(x)`` is the label of the element named ``x``.  Terms may carry
    integer or rational coefficients and are joined with ``+`` and ``-``.
    """
    text = text.strip()
    pos = 0
    terms: list[tuple[Fraction, Statistic]] = []
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m:
            raise ParseError(f"bad statistic term at {text[pos:]!r}")
        if pos > 0 and not m.group("sign"):
            raise ParseError(f"missing +/- before {text[pos:]!r}")
        coef = parse_rational(m.group("coef")) if m.group("coef") else ONE
        if m.group("sign") == "-":
            coef = -coef
        if m.group("index") is not None:
            j = int(m.group("index"))
            if not 1 <= j <= len(p):
                raise ParseError(f"index {j} outside 1..{len(p)}")
            stat = indicator(p, p.elements[j - 1], f"I{j}")
        else:
            e = m.group("elem")
            if e not in p:
                raise ParseError(f"unknown element {e!r} in statistic")
            stat = value_at(p, e)
        terms.append((coef, stat))
        pos = m.end()
    if not terms:
        raise ParseError("empty statistic")
    return combine(terms, name=text)


# -- averages and homomesy -----------------------------------------------------


def orbit_average(o: Orbit, stat: Statistic) -> Fraction:
    """The exact mean of a statistic over a finite orbit."""
    if o.truncated:
        raise TruncatedOrbitError("cannot average a truncated orbit exactly")
    return sum((stat(s) for s in o.states), ZERO) / len(o.states)


@dataclass(frozen=True)
class StatisticVerdict:
    statistic: str
    averages: tuple[Fraction, ...]
    homomesic: bool
    average: Fraction | None
    counterexample: tuple[int, int] | None


@dataclass(frozen=True)
class HomomesyReport:
    action: str
    orbit_sizes: tuple[int, ...]
    verdicts: tuple[StatisticVerdict, ...]

    @property
    def all_homomesic(self) -> bool:
        return all(v.homomesic for v in self.verdicts)


def homomesy_check(
    action: Action,
    statistics: Sequence[Statistic],
    cap: int = 20,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
) -> HomomesyReport:
    """Exact homomesy verdicts over the full orbit decomposition.

    A statistic is homomesic when its average is the same rational on every
    orbit; otherwise the verdict carries the first pair of orbits whose
    averages differ.  Verdicts are exact equalities, never toleranced.
    """
    orbits = orbit_decomposition(action, cap, orbit_cap)
    verdicts = []
    for stat in statistics:
        averages = tuple(orbit_average(o, stat) for o in orbits)
        witness = None
        for i, avg in enumerate(averages):
            if avg != averages[0]:
                witness = (0, i)
                break
        verdicts.append(
            StatisticVerdict(
                stat.name,
                averages,
                witness is None,
                averages[0] if witness is None and averages else None,
                witness,
            )
        )
    return HomomesyReport(
        action.name, tuple(len(o.states) for o in orbits), tuple(verdicts)
    )


def cesaro_average(action: Action, start, stat: Statistic, steps: int) -> Fraction:
    """The exact average of a statistic over the first ``steps`` iterates.

    Works on trajectories that never recur; this is the finite-N stand-in
    for asymptotic averages on the (infinite) polytope spaces.
    """
    if steps < 1:
        raise ValueError("cesaro_average needs at least one step")
    if not action.matches(start):
        raise SpaceMismatchError("action and start disagree")
    total = ZERO
    current = start
    for _ in range(steps):
        total += stat(current)
        current = action(current)
    return total / steps
