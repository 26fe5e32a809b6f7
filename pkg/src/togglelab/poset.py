"""Finite posets: construction, queries, builtin families, and text I/O.

Element identifiers are opaque strings.  Ties between incomparable elements
(canonical linear extensions, deterministic iteration) are always broken by
lexicographic identifier order, so runs are reproducible across platforms.
The order of the ``elements`` list as constructed is preserved and used as the
canonical display/column order.
"""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleError,
    NotGradedError,
    NotReducedError,
    ParseError,
    RankRangeError,
    SizeCapError,
    UnknownElementError,
)

__all__ = [
    "Poset",
    "poset_from_covers",
    "zigzag",
    "chain_product",
    "root_poset_A",
    "double_diamond",
    "parse_poset",
    "format_poset",
    "load_poset",
]


class Poset:
    """An immutable finite poset given by its Hasse diagram.

    Instances are built through :func:`poset_from_covers` (or a builtin
    factory), which validates the cover data, computes the reflexive
    transitive closure, and grades the poset when a rank function exists.
    All queries are pure; instances may be shared freely between tasks.
    """

    __slots__ = (
        "_elements",
        "_covers",
        "_index",
        "_up",
        "_down",
        "_leq",
        "_rank",
        "_hash",
    )

    def __init__(
        self,
        elements: tuple[str, ...],
        covers: frozenset[tuple[str, str]],
        up: dict[str, tuple[str, ...]],
        down: dict[str, tuple[str, ...]],
        leq: frozenset[tuple[str, str]],
        rank: dict[str, int] | None,
    ):
        self._elements = elements
        self._covers = covers
        self._index = {e: i for i, e in enumerate(elements)}
        self._up = up
        self._down = down
        self._leq = leq
        self._rank = rank
        self._hash = hash((elements, covers))

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self._elements == other._elements and self._covers == other._covers

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Poset({len(self._elements)} elements, {len(self._covers)} covers)"

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, x: str) -> bool:
        return x in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self._elements)

    # -- basic queries ----------------------------------------------------

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    @property
    def covers(self) -> frozenset[tuple[str, str]]:
        return self._covers

    def index(self, x: str) -> int:
        self._require(x)
        return self._index[x]

    def _require(self, x: str) -> None:
        if x not in self._index:
            raise UnknownElementError(f"unknown element: {x!r}")

    def is_leq(self, x: str, y: str) -> bool:
        """True iff x <= y in the reflexive-transitive closure."""
        self._require(x)
        self._require(y)
        return (x, y) in self._leq

    def is_less(self, x: str, y: str) -> bool:
        return x != y and self.is_leq(x, y)

    def comparable(self, x: str, y: str) -> bool:
        return self.is_leq(x, y) or self.is_leq(y, x)

    def incomparable(self, x: str, y: str) -> bool:
        return not self.comparable(x, y)

    def covers_of(self, x: str) -> tuple[str, ...]:
        """Elements covering x (never the virtual top)."""
        self._require(x)
        return self._up[x]

    def covered_by(self, x: str) -> tuple[str, ...]:
        """Elements covered by x (never the virtual bottom)."""
        self._require(x)
        return self._down[x]

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(e for e in self._elements if not self._down[e])

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(e for e in self._elements if not self._up[e])

    # -- order structure ---------------------------------------------------

    def down_set(self, members: Iterable[str]) -> frozenset[str]:
        """All elements <= some member."""
        targets = list(members)
        for t in targets:
            self._require(t)
        return frozenset(
            x for x in self._elements if any((x, t) in self._leq for t in targets)
        )

    def up_set(self, members: Iterable[str]) -> frozenset[str]:
        """All elements >= some member."""
        targets = list(members)
        for t in targets:
            self._require(t)
        return frozenset(
            x for x in self._elements if any((t, x) in self._leq for t in targets)
        )

    def strict_down_set(self, members: Iterable[str]) -> frozenset[str]:
        """All elements strictly below some member."""
        targets = list(members)
        for t in targets:
            self._require(t)
        return frozenset(
            x
            for x in self._elements
            if any(x != t and (x, t) in self._leq for t in targets)
        )

    def induced(self, members: Iterable[str]) -> "Poset":
        """The induced subposet on ``members`` (covers recomputed)."""
        keep = [e for e in self._elements if e in set(members)]
        for m in set(members):
            self._require(m)
        kept = set(keep)
        pairs = []
        for x in keep:
            for y in keep:
                if x != y and (x, y) in self._leq:
                    if not any(
                        z != x and z != y and (x, z) in self._leq and (z, y) in self._leq
                        for z in kept
                    ):
                        pairs.append((x, y))
        return poset_from_covers(keep, pairs)

    # -- linear extensions --------------------------------------------------

    def canonical_linear_extension(self) -> tuple[str, ...]:
        """Deterministic topological order; ties broken lexicographically."""
        indeg = {e: len(self._down[e]) for e in self._elements}
        ready = sorted(e for e in self._elements if indeg[e] == 0)
        out: list[str] = []
        while ready:
            x = ready.pop(0)
            out.append(x)
            changed = False
            for y in self._up[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
                    changed = True
            if changed:
                ready.sort()
        return tuple(out)

    def all_linear_extensions(self, max_size: int = 10) -> Iterator[tuple[str, ...]]:
        """Yield every linear extension once; capped by ``max_size`` elements."""
        if len(self._elements) > max_size:
            raise SizeCapError(
                f"{len(self._elements)} elements exceeds the extension cap {max_size}"
            )
        indeg = {e: len(self._down[e]) for e in self._elements}
        prefix: list[str] = []

        def emit() -> Iterator[tuple[str, ...]]:
            if len(prefix) == len(self._elements):
                yield tuple(prefix)
                return
            for x in sorted(e for e, d in indeg.items() if d == 0):
                indeg[x] = -1
                for y in self._up[x]:
                    indeg[y] -= 1
                prefix.append(x)
                yield from emit()
                prefix.pop()
                for y in self._up[x]:
                    indeg[y] += 1
                indeg[x] = 0

        return emit()

    # -- grading ------------------------------------------------------------

    @property
    def rank(self) -> dict[str, int] | None:
        """The rank function, or None when the poset is not graded."""
        return dict(self._rank) if self._rank is not None else None

    @property
    def is_graded(self) -> bool:
        return self._rank is not None

    def rank_of(self, x: str) -> int:
        self._require(x)
        if self._rank is None:
            raise NotGradedError("poset is not graded")
        return self._rank[x]

    @property
    def max_rank(self) -> int:
        if self._rank is None:
            raise NotGradedError("poset is not graded")
        return max(self._rank.values(), default=0)

    def rank_members(self, i: int) -> tuple[str, ...]:
        if self._rank is None:
            raise NotGradedError("poset is not graded")
        if self._elements and not 0 <= i <= self.max_rank:
            raise RankRangeError(f"rank {i} outside 0..{self.max_rank}")
        if not self._elements:
            raise RankRangeError("empty poset has no ranks")
        return tuple(e for e in self._elements if self._rank[e] == i)

    # -- connectivity ---------------------------------------------------------

    def is_connected(self) -> bool:
        """True iff the undirected Hasse graph is connected (empty: True)."""
        if not self._elements:
            return True
        seen = {self._elements[0]}
        queue = deque(seen)
        while queue:
            x = queue.popleft()
            for y in self._up[x] + self._down[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(self._elements)


def _closure(
    elements: Sequence[str], up: dict[str, tuple[str, ...]]
) -> frozenset[tuple[str, str]]:
    pairs = set()
    for x in elements:
        reach = {x}
        stack = [x]
        while stack:
            z = stack.pop()
            for y in up[z]:
                if y not in reach:
                    reach.add(y)
                    stack.append(y)
        pairs.update((x, y) for y in reach)
    return frozenset(pairs)


def _grade(
    elements: Sequence[str],
    up: dict[str, tuple[str, ...]],
    down: dict[str, tuple[str, ...]],
) -> dict[str, int] | None:
    # Longest-path rank from the minima; kept only if every cover raises the
    # rank by exactly one and all maximal elements end up level.
    rank: dict[str, int] = {}
    indeg = {e: len(down[e]) for e in elements}
    queue = deque(e for e in elements if indeg[e] == 0)
    while queue:
        x = queue.popleft()
        rank[x] = max((rank[d] + 1 for d in down[x]), default=0)
        for y in up[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    for x in elements:
        for y in up[x]:
            if rank[y] != rank[x] + 1:
                return None
    tops = {rank[e] for e in elements if not up[e]}
    if len(tops) > 1:
        return None
    return rank


def poset_from_covers(
    elements: Iterable[str], covers: Iterable[tuple[str, str]]
) -> Poset:
    """Build a poset from element ids and transitively reduced cover pairs.

    Raises CycleError if the covers contain a directed cycle,
    NotReducedError if a pair is implied by the others (or duplicated), and
    UnknownElementError if a pair references an unknown id.
    """
    elems = tuple(elements)
    if len(set(elems)) != len(elems):
        raise ValueError("element identifiers must be unique")
    known = set(elems)
    cover_list = [(str(x), str(y)) for x, y in covers]
    for x, y in cover_list:
        if x not in known:
            raise UnknownElementError(f"unknown element in cover: {x!r}")
        if y not in known:
            raise UnknownElementError(f"unknown element in cover: {y!r}")
        if x == y:
            raise CycleError(f"self-cover {x!r} < {x!r}")
    if len(set(cover_list)) != len(cover_list):
        raise NotReducedError("duplicate cover pair")
    cover_set = frozenset(cover_list)

    up: dict[str, list[str]] = {e: [] for e in elems}
    down: dict[str, list[str]] = {e: [] for e in elems}
    for x, y in cover_list:
        up[x].append(y)
        down[y].append(x)
    up_t = {e: tuple(sorted(up[e])) for e in elems}
    down_t = {e: tuple(sorted(down[e])) for e in elems}

    # Kahn's algorithm as the cycle check.
    indeg = {e: len(down_t[e]) for e in elems}
    queue = deque(e for e in elems if indeg[e] == 0)
    visited = 0
    while queue:
        x = queue.popleft()
        visited += 1
        for y in up_t[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    if visited != len(elems):
        raise CycleError("cover relation contains a directed cycle")

    leq = _closure(elems, up_t)
    for x, y in cover_list:
        if any(z != x and z != y and (x, z) in leq and (z, y) in leq for z in elems):
            raise NotReducedError(f"cover {x!r} < {y!r} is implied by other covers")

    return Poset(elems, cover_set, up_t, down_t, leq, _grade(elems, up_t, down_t))


# -- builtin families -------------------------------------------------------


def zigzag(n: int) -> Poset:
    """The fence poset on a1..an: a1 < a2 > a3 < a4 > ...

    Odd-index elements sit at rank 0, even-index ones at rank 1.
    """
    if n < 1:
        raise ValueError("zigzag needs n >= 1")
    elems = [f"a{i}" for i in range(1, n + 1)]
    covers = []
    for j in range(2, n + 1, 2):
        covers.append((f"a{j - 1}", f"a{j}"))
        if j + 1 <= n:
            covers.append((f"a{j + 1}", f"a{j}"))
    return poset_from_covers(elems, covers)


def chain_product(a: int, b: int) -> Poset:
    """The product of an a-chain and a b-chain; element (i,j) is named "i.j"."""
    if a < 1 or b < 1:
        raise ValueError("chain_product needs a, b >= 1")
    elems = [f"{i}.{j}" for i in range(1, a + 1) for j in range(1, b + 1)]
    covers = []
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            if i < a:
                covers.append((f"{i}.{j}", f"{i + 1}.{j}"))
            if j < b:
                covers.append((f"{i}.{j}", f"{i}.{j + 1}"))
    return poset_from_covers(elems, covers)


def root_poset_A(n: int) -> Poset:
    """The staircase poset of intervals [i,j], 1 <= i <= j <= n.

    [i,j] is covered by [i-1,j] and [i,j+1]; element [i,j] is named "i.j".
    This is the positive-root order of type A_n, with n(n+1)/2 elements.
    """
    if n < 1:
        raise ValueError("root_poset_A needs n >= 1")
    elems = [f"{i}.{j}" for j in range(1, n + 1) for i in range(1, j + 1)]
    covers = []
    for j in range(1, n + 1):
        for i in range(1, j + 1):
            if i > 1:
                covers.append((f"{i}.{j}", f"{i - 1}.{j}"))
            if j < n:
                covers.append((f"{i}.{j}", f"{i}.{j + 1}"))
    return poset_from_covers(elems, covers)


def double_diamond() -> Poset:
    """A 9-element rank-4 poset shaped like two fused diamonds.

    One bottom, two elements at rank 1, three at rank 2, two at rank 3,
    one top; the middle rank-2 element is reachable from both sides.
    """
    elems = ["bot", "l1", "r1", "l2", "m2", "r2", "l3", "r3", "top"]
    covers = [
        ("bot", "l1"),
        ("bot", "r1"),
        ("l1", "l2"),
        ("l1", "m2"),
        ("r1", "m2"),
        ("r1", "r2"),
        ("l2", "l3"),
        ("m2", "l3"),
        ("m2", "r3"),
        ("r2", "r3"),
        ("l3", "top"),
        ("r3", "top"),
    ]
    return poset_from_covers(elems, covers)


# -- text format and builtin URIs -------------------------------------------


def parse_poset(text: str) -> Poset:
    """Parse the line-oriented poset format.

    One ``elements <id>...`` line, then ``cover <x> <y>`` lines; ``#`` starts
    a comment; blank lines are ignored.
    """
    elements: list[str] | None = None
    covers: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "elements":
            if elements is not None:
                raise ParseError(f"line {lineno}: duplicate elements line")
            elements = fields[1:]
        elif fields[0] == "cover":
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: cover needs exactly two ids")
            covers.append((fields[1], fields[2]))
        else:
            raise ParseError(f"line {lineno}: unknown directive {fields[0]!r}")
    if elements is None:
        raise ParseError("missing elements line")
    try:
        return poset_from_covers(elements, covers)
    except (CycleError, NotReducedError, UnknownElementError, ValueError) as exc:
        raise ParseError(f"invalid poset data: {exc}") from exc


def format_poset(p: Poset) -> str:
    lines = ["elements " + " ".join(p.elements)]
    for x in p.elements:
        for y in sorted(p.covers_of(x)):
            lines.append(f"cover {x} {y}")
    return "\n".join(lines) + "\n"


_BUILTIN_RE = re.compile(r"^builtin:(?P<name>[a-zA-Z]+)(?::(?P<arg>[0-9x]+))?$")


def load_poset(source: str) -> Poset:
    """Load a poset from a ``builtin:`` URI or a file path."""
    m = _BUILTIN_RE.match(source)
    if m:
        name, arg = m.group("name"), m.group("arg")
        try:
            if name == "zigzag":
                return zigzag(int(arg))
            if name == "chainproduct":
                a, b = arg.split("x")
                return chain_product(int(a), int(b))
            if name == "rootA":
                return root_poset_A(int(arg))
            if name == "doublediamond" and arg is None:
                return double_diamond()
        except (TypeError, ValueError, AttributeError) as exc:
            raise ParseError(f"bad builtin URI {source!r}") from exc
        raise ParseError(f"unknown builtin {source!r}")
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return parse_poset(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read poset file {source!r}: {exc}") from exc
