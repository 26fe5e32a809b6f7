"""Named verification checks: machine-checkable identities and diagrams.

Each check takes a poset and either sweeps an exhaustively enumerated state
space or evaluates both sides of an identity at seeded random rational
points.  Checks return a :class:`CheckResult`; they raise ``NotGradedError``
or ``SizeCapError`` when the poset does not qualify (rank-based checks on
ungraded posets, exhaustive sweeps beyond their caps).
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Callable

from .errors import SizeCapError
from .grouplab import classify, realize, realize_map, verify_diagram, verify_identity
from .orbits import orbit_decomposition, rowmotion_action
from .polytope import (
    RationalLabeling,
    Space,
    complement_labeling,
    from_order_preserving,
    from_order_reversing,
    indicator_labeling,
    pl_gyration,
    pl_rank_toggle,
    pl_rowmotion,
    pl_toggle_antichain,
    pl_toggle_antichain_by_chains,
    pl_toggle_antichain_star,
    pl_toggle_ideal,
    pl_toggle_ideal_star,
    random_chain_point,
    random_order_reversing,
    to_order_preserving,
    to_order_reversing,
)
from .poset import Poset
from .states import (
    SubsetKind,
    complement,
    enumerate_states,
    filter_of,
    format_subset,
    gyration,
    ideal_of,
    rank_toggle,
    rowmotion,
    toggle_antichain,
    toggle_antichain_star,
    toggle_ideal,
    toggle_ideal_star,
)
from .words import (
    ToggleSpace,
    ToggleWord,
    antichain_toggle_star_word,
    apply_word,
    downset_word,
    ideal_toggle_star_word,
    rank_toggle_word,
    rowmotion_word,
)

__all__ = ["CheckResult", "CHECKS", "run_check", "available_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def __bool__(self) -> bool:
        return self.ok


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


def _ok(name: str, detail: str) -> CheckResult:
    return CheckResult(name, True, detail)


def _ideals(p):
    return enumerate_states(p, SubsetKind.IDEAL)


def _antichains(p):
    return enumerate_states(p, SubsetKind.ANTICHAIN)


# -- combinatorial toggle algebra ------------------------------------------------


def check_involution(p: Poset, **_) -> CheckResult:
    """Every single toggle squares to the identity on its full state space."""
    for e in p.elements:
        for ideal in _ideals(p):
            if toggle_ideal(toggle_ideal(ideal, e), e) != ideal:
                return _fail("involution", f"ideal toggle at {e} on {format_subset(ideal)}")
        for anti in _antichains(p):
            if toggle_antichain(toggle_antichain(anti, e), e) != anti:
                return _fail(
                    "involution", f"antichain toggle at {e} on {format_subset(anti)}"
                )
    return _ok("involution", f"{len(p)} elements, both toggle families")


def check_commutation(p: Poset, **_) -> CheckResult:
    """Toggle commutation matches the cover/comparability criteria exactly.

    Ideal toggles commute iff neither element covers the other; antichain
    toggles commute iff the elements are equal or incomparable.  For pairs
    that must not commute, a witness state has to exist.
    """
    ideals, antis = _ideals(p), _antichains(p)
    for x in p.elements:
        for y in p.elements:
            is_cover = (x, y) in p.covers or (y, x) in p.covers
            commutes = all(
                toggle_ideal(toggle_ideal(s, y), x) == toggle_ideal(toggle_ideal(s, x), y)
                for s in ideals
            )
            if commutes == is_cover:
                return _fail("commutation", f"ideal toggles at ({x}, {y})")
            should_commute = x == y or p.incomparable(x, y)
            commutes = all(
                toggle_antichain(toggle_antichain(s, y), x)
                == toggle_antichain(toggle_antichain(s, x), y)
                for s in antis
            )
            if commutes != should_commute:
                return _fail("commutation", f"antichain toggles at ({x}, {y})")
    return _ok("commutation", "criteria match with witnesses for every pair")


def check_row_toggles(p: Poset, all_extensions_cap: int = 7, **_) -> CheckResult:
    """Rowmotion on ideals equals the toggle word of any linear extension."""
    extensions = [p.canonical_linear_extension()]
    if len(p) <= all_extensions_cap:
        extensions = list(p.all_linear_extensions(all_extensions_cap))
    for ext in extensions:
        word = rowmotion_word(p, ToggleSpace.IDEAL, ext)
        for s in _ideals(p):
            if apply_word(word, s) != rowmotion(s):
                return _fail("row-toggles", f"extension {ext} at {format_subset(s)}")
    return _ok("row-toggles", f"{len(extensions)} extension(s) swept")


def check_row_toggles_anti(p: Poset, all_extensions_cap: int = 7, **_) -> CheckResult:
    """Rowmotion on antichains equals the reversed toggle word."""
    extensions = [p.canonical_linear_extension()]
    if len(p) <= all_extensions_cap:
        extensions = list(p.all_linear_extensions(all_extensions_cap))
    for ext in extensions:
        word = rowmotion_word(p, ToggleSpace.ANTICHAIN, ext)
        for s in _antichains(p):
            if apply_word(word, s) != rowmotion(s):
                return _fail("row-toggles-anti", f"extension {ext} at {format_subset(s)}")
    return _ok("row-toggles-anti", f"{len(extensions)} extension(s) swept")


def check_row_correspondence(p: Poset, **_) -> CheckResult:
    """Generating ideals intertwines antichain and ideal rowmotion."""
    res = verify_diagram(rowmotion, rowmotion, ideal_of, _antichains(p))
    if not res:
        return _fail("row-correspondence", format_subset(res.witness))
    return _ok("row-correspondence", f"{len(_antichains(p))} antichains")


def check_t_star(p: Poset, **_) -> CheckResult:
    """Transported ideal toggles track ideal toggles across generation."""
    antis = _antichains(p)
    for e in p.elements:
        res = verify_diagram(
            lambda s, e=e: toggle_ideal_star(s, e),
            lambda s, e=e: toggle_ideal(s, e),
            ideal_of,
            antis,
        )
        if not res:
            return _fail("t-star", f"element {e} at {format_subset(res.witness)}")
    return _ok("t-star", f"{len(antis)} antichains x {len(p)} elements")


def check_tau_star(p: Poset, **_) -> CheckResult:
    """Transported antichain toggles track antichain toggles on ideals."""
    antis = _antichains(p)
    for e in p.elements:
        res = verify_diagram(
            lambda s, e=e: toggle_antichain(s, e),
            lambda s, e=e: toggle_antichain_star(s, e),
            ideal_of,
            antis,
        )
        if not res:
            return _fail("tau-star", f"element {e} at {format_subset(res.witness)}")
    return _ok("tau-star", f"{len(antis)} antichains x {len(p)} elements")


def check_tau_star_lemma(p: Poset, **_) -> CheckResult:
    """Products of transported antichain toggles over incomparable families.

    For each antichain (e1..ek, canonical order) the product of the
    transported words equals the down-set word conjugate of the plain
    toggle block, extensionally on all ideals.
    """
    for anti in _antichains(p):
        family = anti.sorted_members()
        if not family:
            continue
        lhs = ToggleWord(p, ToggleSpace.IDEAL, ())
        for e in family:
            lhs = lhs * antichain_toggle_star_word(p, e)
        eta = downset_word(p, family)
        block = ToggleWord(p, ToggleSpace.IDEAL, tuple(family))
        rhs = eta * block * eta.inverse()
        res = verify_identity(lhs, rhs)
        if not res:
            return _fail(
                "tau-star-lemma", f"family {family} at {format_subset(res.witness)}"
            )
    return _ok("tau-star-lemma", "all pairwise-incomparable families")


def check_eta_well_defined(p: Poset, all_extensions_cap: int = 7, **_) -> CheckResult:
    """Down-set words do not depend on the chosen linear extension."""
    if len(p) > all_extensions_cap:
        raise SizeCapError(f"eta sweep capped at {all_extensions_cap} elements")
    seen: set[frozenset[str]] = set()
    for mask in range(1 << len(p)):
        members = [p.elements[i] for i in range(len(p)) if mask >> i & 1]
        below = p.strict_down_set(members)
        if below in seen:
            continue
        seen.add(below)
        sub = p.induced(below)
        reference = downset_word(p, members)
        for ext in sub.all_linear_extensions(all_extensions_cap):
            word = ToggleWord(p, ToggleSpace.IDEAL, ext)
            res = verify_identity(word, reference)
            if not res:
                return _fail(
                    "eta-well-defined",
                    f"down-set {sorted(below)} at {format_subset(res.witness)}",
                )
    return _ok("eta-well-defined", f"{len(seen)} distinct down-sets")


# -- graded posets ------------------------------------------------------------------


def check_row_rank(p: Poset, **_) -> CheckResult:
    """Rowmotion factors through rank toggles: top-down on ideals, bottom-up
    on antichains."""
    r = p.max_rank
    for s in _ideals(p):
        t = s
        for i in range(r, -1, -1):
            t = rank_toggle(t, i)
        if t != rowmotion(s):
            return _fail("row-rank", f"ideal {format_subset(s)}")
    for s in _antichains(p):
        t = s
        for i in range(r + 1):
            t = rank_toggle(t, i)
        if t != rowmotion(s):
            return _fail("row-rank", f"antichain {format_subset(s)}")
    return _ok("row-rank", f"ranks 0..{r}, both kinds")


def check_rank_conjugation(p: Poset, **_) -> CheckResult:
    """Transported toggles written through rank toggles.

    At rank i, the transported ideal toggle is the antichain rank toggle
    conjugate tau[rk=i-1] tau_e tau[rk=i-1]; the transported antichain
    toggle is t[rk=0..i-1] t_e t[rk=i-1..0]; likewise for whole ranks.
    """
    A, J = ToggleSpace.ANTICHAIN, ToggleSpace.IDEAL

    def tau_rank(i):
        return rank_toggle_word(p, i, A) if i >= 0 else ToggleWord(p, A, ())

    def t_stairs(i):
        # The written word t[rk=0] t[rk=1] ... t[rk=i-1].
        steps: tuple[str, ...] = ()
        for k in range(i):
            steps = steps + rank_toggle_word(p, k, J).steps
        return ToggleWord(p, J, steps)

    for e in p.elements:
        i = p.rank_of(e)
        lhs = ideal_toggle_star_word(p, e)
        rhs = tau_rank(i - 1) * ToggleWord(p, A, (e,)) * tau_rank(i - 1)
        res = verify_identity(lhs, rhs)
        if not res:
            return _fail("rank-conjugation", f"ideal-star at {e}: {format_subset(res.witness)}")
        lhs = antichain_toggle_star_word(p, e)
        stairs = t_stairs(i)
        rhs = stairs * ToggleWord(p, J, (e,)) * stairs.inverse()
        res = verify_identity(lhs, rhs)
        if not res:
            return _fail(
                "rank-conjugation", f"antichain-star at {e}: {format_subset(res.witness)}"
            )
    for i in range(p.max_rank + 1):
        lhs = rank_toggle_word(p, i, A, starred=True)
        rhs = tau_rank(i - 1) * rank_toggle_word(p, i, A) * tau_rank(i - 1)
        res = verify_identity(lhs, rhs)
        if not res:
            return _fail("rank-conjugation", f"ideal-star rank {i}")
        lhs = rank_toggle_word(p, i, J, starred=True)
        stairs = t_stairs(i)
        rhs = stairs * rank_toggle_word(p, i, J) * stairs.inverse()
        res = verify_identity(lhs, rhs)
        if not res:
            return _fail("rank-conjugation", f"antichain-star rank {i}")
    return _ok("rank-conjugation", f"{len(p)} elements, ranks 0..{p.max_rank}")


def check_toad_village(p: Poset, **_) -> CheckResult:
    """The palindromic-conjugates identity instantiated with rank toggles.

    With a_j the ideal rank toggle and b_j its palindromic conjugate
    a_0..a_{j-1} a_j a_{j-1}..a_0, the product b_0 b_2 .. b_{2i} equals
    a_1 a_3 .. a_{2i-1} a_{2i} a_{2i-1} .. a_1 a_0, extensionally on ideals.
    """
    J = ToggleSpace.IDEAL
    r = p.max_rank

    def a(j):
        return rank_toggle_word(p, j, J)

    def b(j):
        word = ToggleWord(p, J, ())
        for k in range(j):
            word = ToggleWord(p, J, word.steps + a(k).steps)
        return word * a(j) * word.inverse()

    for i in range(0, r // 2 + 1):
        lhs = ToggleWord(p, J, ())
        for j in range(0, 2 * i + 1, 2):
            lhs = ToggleWord(p, J, lhs.steps + b(j).steps)
        rhs = ToggleWord(p, J, ())
        for j in range(1, 2 * i, 2):
            rhs = ToggleWord(p, J, rhs.steps + a(j).steps)
        rhs = ToggleWord(p, J, rhs.steps + a(2 * i).steps)
        for j in range(2 * i - 1, -1, -1):
            rhs = ToggleWord(p, J, rhs.steps + a(j).steps)
        res = verify_identity(lhs, rhs)
        if not res:
            return _fail("toad-village", f"i={i} at {format_subset(res.witness)}")
    return _ok("toad-village", f"i = 0..{r // 2}")


def check_antichain_gyration(p: Poset, **_) -> CheckResult:
    """Gyration commutes with generating ideals from antichains."""
    res = verify_diagram(gyration, gyration, ideal_of, _antichains(p))
    if not res:
        return _fail("antichain-gyration", format_subset(res.witness))
    return _ok("antichain-gyration", f"{len(_antichains(p))} antichains")


def check_orbit_correspondence(p: Poset, **_) -> CheckResult:
    """Antichain rowmotion orbits map to ideal rowmotion orbits."""
    anti_orbits = orbit_decomposition(rowmotion_action(p, SubsetKind.ANTICHAIN))
    ideal_orbits = orbit_decomposition(rowmotion_action(p, SubsetKind.IDEAL))
    mapped = sorted(
        tuple(sorted(format_subset(ideal_of(s)) for s in o.states)) for o in anti_orbits
    )
    direct = sorted(
        tuple(sorted(format_subset(s) for s in o.states)) for o in ideal_orbits
    )
    if mapped != direct:
        return _fail("orbit-correspondence", "orbit partitions differ")
    return _ok("orbit-correspondence", f"{len(direct)} orbits")


def check_classification(p: Poset, **_) -> CheckResult:
    """Connected posets generate the full symmetric or alternating group."""
    if not p.is_connected():
        return _fail("classification", "poset is not connected")
    outcomes = {}
    for kind in (SubsetKind.IDEAL, SubsetKind.ANTICHAIN):
        if len(enumerate_states(p, kind)) > 8:
            raise SizeCapError("classification check capped at 8 states")
        outcome = classify(p, kind)
        outcomes[kind.value] = outcome
        if outcome not in ("symmetric", "alternating"):
            return _fail("classification", f"{kind.value}: {outcome}")
    return _ok("classification", str(outcomes))


# -- polytope checks ------------------------------------------------------------------


def _sample_points(p: Poset, samples: int, seed: int, denominator: int):
    rng = Random(seed)
    return [random_chain_point(p, rng, denominator) for _ in range(samples)]


def check_pl_involution(
    p: Poset, samples: int = 200, seed: int = 0, denominator: int = 64, **_
) -> CheckResult:
    """Both piecewise-linear toggles square to the identity at random points."""
    rng = Random(seed)
    for _ in range(samples):
        g = random_chain_point(p, rng, denominator)
        f = to_order_reversing(g)
        for e in p.elements:
            if pl_toggle_antichain(pl_toggle_antichain(g, e), e) != g:
                return _fail("pl-involution", f"chain toggle at {e}")
            if pl_toggle_ideal(pl_toggle_ideal(f, e), e) != f:
                return _fail("pl-involution", f"order-reversing toggle at {e}")
    return _ok("pl-involution", f"{samples} points x {len(p)} elements")


def check_pl_commutation(
    p: Poset, samples: int = 200, seed: int = 0, denominator: int = 64, **_
) -> CheckResult:
    """Commutation criteria carry over to the polytope toggles.

    Qualifying pairs are checked at random points; pairs that must fail are
    witnessed by explicit 0/1 states, which are also polytope points.
    """
    rng = Random(seed)
    pairs = [(x, y) for x in p.elements for y in p.elements]
    for k in range(samples):
        g = random_chain_point(p, rng, denominator)
        f = to_order_reversing(g)
        if not pairs:
            break
        x, y = pairs[k % len(pairs)]
        if not ((x, y) in p.covers or (y, x) in p.covers):
            if pl_toggle_ideal(pl_toggle_ideal(f, y), x) != pl_toggle_ideal(
                pl_toggle_ideal(f, x), y
            ):
                return _fail("pl-commutation", f"order-reversing pair ({x}, {y})")
        if x == y or p.incomparable(x, y):
            if pl_toggle_antichain(pl_toggle_antichain(g, y), x) != pl_toggle_antichain(
                pl_toggle_antichain(g, x), y
            ):
                return _fail("pl-commutation", f"chain pair ({x}, {y})")
    # Non-commuting pairs: find explicit 0/1 witnesses.
    ideals = [indicator_labeling(p, s.members, Space.ORDER_REVERSING) for s in _ideals(p)]
    antis = [indicator_labeling(p, s.members, Space.CHAIN) for s in _antichains(p)]
    for x in p.elements:
        for y in p.elements:
            if (x, y) in p.covers or (y, x) in p.covers:
                if all(
                    pl_toggle_ideal(pl_toggle_ideal(f, y), x)
                    == pl_toggle_ideal(pl_toggle_ideal(f, x), y)
                    for f in ideals
                ):
                    return _fail("pl-commutation", f"no witness for cover pair ({x}, {y})")
            if x != y and p.comparable(x, y):
                if all(
                    pl_toggle_antichain(pl_toggle_antichain(g, y), x)
                    == pl_toggle_antichain(pl_toggle_antichain(g, x), y)
                    for g in antis
                ):
                    return _fail(
                        "pl-commutation", f"no witness for comparable pair ({x}, {y})"
                    )
    return _ok("pl-commutation", f"{samples} points, witnesses for rigid pairs")


def check_transfer_roundtrip(
    p: Poset, samples: int = 500, seed: int = 0, denominator: int = 64, **_
) -> CheckResult:
    """The transfer maps are mutually inverse bijections at random points."""
    rng = Random(seed)
    for _ in range(samples):
        g = random_chain_point(p, rng, denominator)
        if from_order_reversing(to_order_reversing(g)) != g:
            return _fail("transfer-roundtrip", "chain -> order-reversing -> chain")
        if from_order_preserving(to_order_preserving(g)) != g:
            return _fail("transfer-roundtrip", "chain -> order-preserving -> chain")
        f = random_order_reversing(p, rng, denominator)
        if to_order_reversing(from_order_reversing(f)) != f:
            return _fail("transfer-roundtrip", "order-reversing -> chain -> back")
        h = complement_labeling(f)
        if to_order_preserving(from_order_preserving(h)) != h:
            return _fail("transfer-roundtrip", "order-preserving -> chain -> back")
    return _ok("transfer-roundtrip", f"{samples} random points")


def check_alt_tau(
    p: Poset, samples: int = 500, seed: int = 0, denominator: int = 64, **_
) -> CheckResult:
    """The two chain-toggle formulas agree at every sampled point."""
    rng = Random(seed)
    for _ in range(samples):
        g = random_chain_point(p, rng, denominator)
        for e in p.elements:
            if pl_toggle_antichain(g, e) != pl_toggle_antichain_by_chains(g, e):
                return _fail("alt-tau", f"element {e}")
    return _ok("alt-tau", f"{samples} points x {len(p)} elements")


def check_same_on_anti(p: Poset, **_) -> CheckResult:
    """On 0/1 antichain labelings the transfers generate ideal and filter."""
    for s in _antichains(p):
        g = indicator_labeling(p, s.members, Space.CHAIN)
        want_or = indicator_labeling(p, ideal_of(s).members, Space.ORDER_REVERSING)
        want_op = indicator_labeling(p, filter_of(s).members, Space.ORDER_PRESERVING)
        if to_order_reversing(g) != want_or:
            return _fail("same-on-anti", f"reversing transfer at {format_subset(s)}")
        if to_order_preserving(g) != want_op:
            return _fail("same-on-anti", f"preserving transfer at {format_subset(s)}")
    return _ok("same-on-anti", f"{len(_antichains(p))} antichains")


def check_restriction(p: Poset, **_) -> CheckResult:
    """Every polytope map restricted to 0/1 labelings is its combinatorial twin."""
    ideals, antis = _ideals(p), _antichains(p)
    for s in ideals:
        f = indicator_labeling(p, s.members, Space.ORDER_REVERSING)
        for e in p.elements:
            want = indicator_labeling(p, toggle_ideal(s, e).members, Space.ORDER_REVERSING)
            if pl_toggle_ideal(f, e) != want:
                return _fail("restriction", f"ideal toggle {e} at {format_subset(s)}")
            want = indicator_labeling(
                p, toggle_antichain_star(s, e).members, Space.ORDER_REVERSING
            )
            if pl_toggle_antichain_star(f, e) != want:
                return _fail("restriction", f"transported toggle {e} at {format_subset(s)}")
        want = indicator_labeling(p, rowmotion(s).members, Space.ORDER_REVERSING)
        if pl_rowmotion(f) != want:
            return _fail("restriction", f"rowmotion at {format_subset(s)}")
        want = indicator_labeling(p, complement(s).members, Space.ORDER_PRESERVING)
        if complement_labeling(f) != want:
            return _fail("restriction", f"complement at {format_subset(s)}")
    for s in antis:
        g = indicator_labeling(p, s.members, Space.CHAIN)
        for e in p.elements:
            want = indicator_labeling(p, toggle_antichain(s, e).members, Space.CHAIN)
            if pl_toggle_antichain(g, e) != want:
                return _fail("restriction", f"antichain toggle {e} at {format_subset(s)}")
            want = indicator_labeling(p, toggle_ideal_star(s, e).members, Space.CHAIN)
            if pl_toggle_ideal_star(g, e) != want:
                return _fail("restriction", f"transported toggle {e} at {format_subset(s)}")
        want = indicator_labeling(p, rowmotion(s).members, Space.CHAIN)
        if pl_rowmotion(g) != want:
            return _fail("restriction", f"rowmotion at {format_subset(s)}")
    if p.is_graded:
        for s in ideals:
            f = indicator_labeling(p, s.members, Space.ORDER_REVERSING)
            want = indicator_labeling(p, gyration(s).members, Space.ORDER_REVERSING)
            if pl_gyration(f) != want:
                return _fail("restriction", f"gyration at {format_subset(s)}")
            for i in range(p.max_rank + 1):
                want = indicator_labeling(
                    p, rank_toggle(s, i).members, Space.ORDER_REVERSING
                )
                if pl_rank_toggle(f, i) != want:
                    return _fail("restriction", f"rank toggle {i} at {format_subset(s)}")
        for s in antis:
            g = indicator_labeling(p, s.members, Space.CHAIN)
            want = indicator_labeling(p, gyration(s).members, Space.CHAIN)
            if pl_gyration(g) != want:
                return _fail("restriction", f"chain gyration at {format_subset(s)}")
            for i in range(p.max_rank + 1):
                want = indicator_labeling(p, rank_toggle(s, i).members, Space.CHAIN)
                if pl_rank_toggle(g, i) != want:
                    return _fail(
                        "restriction", f"chain rank toggle {i} at {format_subset(s)}"
                    )
    return _ok("restriction", "toggles, rowmotion, complement, rank maps")


def check_iso_cpl(
    p: Poset, samples: int = 500, seed: int = 0, denominator: int = 64, **_
) -> CheckResult:
    """Transported polytope toggles commute with the reversing transfer."""
    points = _sample_points(p, samples, seed, denominator)
    for e in p.elements:
        res = verify_diagram(
            lambda g, e=e: pl_toggle_ideal_star(g, e),
            lambda f, e=e: pl_toggle_ideal(f, e),
            to_order_reversing,
            points,
        )
        if not res:
            return _fail("iso-cpl", f"ideal-star diagram at {e}")
        res = verify_diagram(
            lambda g, e=e: pl_toggle_antichain(g, e),
            lambda f, e=e: pl_toggle_antichain_star(f, e),
            to_order_reversing,
            points,
        )
        if not res:
            return _fail("iso-cpl", f"antichain-star diagram at {e}")
    return _ok("iso-cpl", f"{samples} points x {len(p)} elements, both diagrams")


def check_row_polytope(
    p: Poset, samples: int = 300, seed: int = 0, denominator: int = 64, **_
) -> CheckResult:
    """Polytope rowmotion equals its toggle word at random points."""
    rng = Random(seed)
    word_c = rowmotion_word(p, ToggleSpace.CHAIN_POLYTOPE)
    word_or = rowmotion_word(p, ToggleSpace.ORDER_REVERSING)
    for _ in range(samples):
        g = random_chain_point(p, rng, denominator)
        if apply_word(word_c, g) != pl_rowmotion(g):
            return _fail("row-polytope", "chain-space word mismatch")
        f = to_order_reversing(g)
        if apply_word(word_or, f) != pl_rowmotion(f):
            return _fail("row-polytope", "order-reversing word mismatch")
        # The two rowmotions intertwine along the transfer map.
        if to_order_reversing(pl_rowmotion(g)) != pl_rowmotion(f):
            return _fail("row-polytope", "transfer diagram mismatch")
    return _ok("row-polytope", f"{samples} random points")


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "involution": check_involution,
    "commutation": check_commutation,
    "row-toggles": check_row_toggles,
    "row-toggles-anti": check_row_toggles_anti,
    "row-correspondence": check_row_correspondence,
    "t-star": check_t_star,
    "tau-star": check_tau_star,
    "tau-star-lemma": check_tau_star_lemma,
    "eta-well-defined": check_eta_well_defined,
    "row-rank": check_row_rank,
    "rank-conjugation": check_rank_conjugation,
    "toad-village": check_toad_village,
    "antichain-gyration": check_antichain_gyration,
    "orbit-correspondence": check_orbit_correspondence,
    "classification": check_classification,
    "pl-involution": check_pl_involution,
    "pl-commutation": check_pl_commutation,
    "transfer-roundtrip": check_transfer_roundtrip,
    "alt-tau": check_alt_tau,
    "same-on-anti": check_same_on_anti,
    "restriction": check_restriction,
    "iso-cpl": check_iso_cpl,
    "row-polytope": check_row_polytope,
}


def available_checks() -> list[str]:
    return sorted(CHECKS)


def run_check(name: str, p: Poset, **config) -> CheckResult:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(available_checks())}")
    return CHECKS[name](p, **config)
