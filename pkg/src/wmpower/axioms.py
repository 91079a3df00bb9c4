"""Machine checks for power-index axioms, plus the independence witnesses.

Each check takes an index function (any deterministic callable from a game
to a :class:`PowerIndexVector`) and concrete games, and returns a verdict
with an exact counterexample when the axiom fails. All comparisons are
exact rational equality; a verdict is evidence about the supplied games,
never a universal proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .errors import NotMergeable, NotUnanimityLike, NotWMMergeable, UnknownKind
from .games import (
    Game,
    SimpleGame,
    WeightedMajorityGame,
    are_symmetric,
    is_null_player,
    minimal_winning_coalitions,
    simple_intersection,
    simple_mergeable,
    simple_union,
)
from .indices import PowerIndexVector, colomer_martinez, hcm
from .merging import check_wm_mergeability, wm_union

IndexFunction = Callable[[Game], PowerIndexVector]


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of one axiom check; carries a counterexample iff it failed."""

    axiom: str
    holds: bool
    witness: Mapping[str, object] | None = field(default=None)


def _verdict(axiom: str, holds: bool, witness: dict | None = None) -> AxiomVerdict:
    return AxiomVerdict(axiom, holds, None if holds else witness)


def check_eff(f: IndexFunction, game: Game) -> AxiomVerdict:
    """Efficiency: the power values sum to exactly 1."""
    vector = f(game)
    total = vector.total
    return _verdict("EFF", total == 1, {"game": game, "total": total})


def check_np(f: IndexFunction, game: Game) -> AxiomVerdict:
    """Null player: every player outside all minimal winning coalitions gets 0."""
    vector = f(game)
    for i in range(game.n_players):
        if is_null_player(game, i) and vector[i] != 0:
            return _verdict(
                "NP", False, {"game": game, "player": i, "value": vector[i]}
            )
    return _verdict("NP", True)


def check_sym(f: IndexFunction, game: Game) -> AxiomVerdict:
    """Symmetry: interchangeable players receive equal power."""
    vector = f(game)
    n = game.n_players
    for i in range(n):
        for j in range(i + 1, n):
            if are_symmetric(game, i, j) and vector[i] != vector[j]:
                return _verdict(
                    "SYM",
                    False,
                    {"game": game, "players": (i, j), "values": (vector[i], vector[j])},
                )
    return _verdict("SYM", True)


def _vectors_equal(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    return all(x == y for x, y in zip(a, b, strict=True))


def check_tra(f: IndexFunction, v: SimpleGame, v_prime: SimpleGame) -> AxiomVerdict:
    """Transfer: f(meet) + f(join) equals f(v) + f(v'), componentwise."""
    join = simple_union(v, v_prime)
    meet = simple_intersection(v, v_prime)
    left = [a + b for a, b in zip(f(meet).values, f(join).values, strict=True)]
    right = [a + b for a, b in zip(f(v).values, f(v_prime).values, strict=True)]
    return _verdict(
        "TRA",
        _vectors_equal(left, right),
        {"games": (v, v_prime), "left": tuple(left), "right": tuple(right)},
    )


def _require_simple_mergeable(v: SimpleGame, v_prime: SimpleGame) -> None:
    if not simple_mergeable(v, v_prime):
        raise NotMergeable(
            "the axiom is stated for mergeable simple games; "
            "some minimal winning coalition of one game contains one of the other"
        )


def check_dpm(f: IndexFunction, v: SimpleGame, v_prime: SimpleGame) -> AxiomVerdict:
    """Mergeability with mwc-count weights: f(join) is the |M|-weighted average."""
    _require_simple_mergeable(v, v_prime)
    join = simple_union(v, v_prime)
    m_v = len(v.mwc)
    m_vp = len(v_prime.mwc)
    m_join = len(join.mwc)
    left = f(join).values
    right = [
        (m_v * a + m_vp * b) / m_join
        for a, b in zip(f(v).values, f(v_prime).values, strict=True)
    ]
    return _verdict(
        "DPM",
        _vectors_equal(left, right),
        {"games": (v, v_prime), "left": tuple(left), "right": tuple(right)},
    )


def _membership_total(game: SimpleGame) -> int:
    # sum over players of |M_i|, i.e. the total size of all mwcs
    return sum(len(c) for c in game.mwc)


def check_pgm(f: IndexFunction, v: SimpleGame, v_prime: SimpleGame) -> AxiomVerdict:
    """Mergeability with membership-count weights: f(join) is the sum-|M_i| average."""
    _require_simple_mergeable(v, v_prime)
    join = simple_union(v, v_prime)
    t_v = _membership_total(v)
    t_vp = _membership_total(v_prime)
    t_join = _membership_total(join)
    left = f(join).values
    right = [
        (t_v * a + t_vp * b) / t_join
        for a, b in zip(f(v).values, f(v_prime).values, strict=True)
    ]
    return _verdict(
        "PGM",
        _vectors_equal(left, right),
        {"games": (v, v_prime), "left": tuple(left), "right": tuple(right)},
    )


def check_symw(f: IndexFunction, game: WeightedMajorityGame) -> AxiomVerdict:
    """Weighted symmetry on single-mwc games: power ratios match weight ratios.

    Checked by cross-multiplication (f_i * w_j == f_j * w_i) over ordered
    member pairs with f_j != 0, so no division is needed; pairs whose
    reference value and weight are both zero are vacuous.
    """
    induced = minimal_winning_coalitions(game)
    if len(induced.mwc) != 1:
        raise NotUnanimityLike(
            f"weighted symmetry needs exactly one minimal winning coalition, "
            f"got {len(induced.mwc)}"
        )
    members = induced.mwc[0].members
    vector = f(game)
    for j in members:
        if vector[j] == 0:
            continue
        for i in members:
            if i == j:
                continue
            if vector[i] * game.weights[j] != vector[j] * game.weights[i]:
                return _verdict(
                    "SYMw",
                    False,
                    {
                        "game": game,
                        "players": (i, j),
                        "values": (vector[i], vector[j]),
                        "weights": (game.weights[i], game.weights[j]),
                    },
                )
    return _verdict("SYMw", True)


def _require_wm_mergeable(games: Sequence[WeightedMajorityGame]) -> None:
    report = check_wm_mergeability(games)
    if not report.overall:
        raise NotWMMergeable("the axiom is stated for WM-mergeable families", report)


def check_dpmw(
    f: IndexFunction, games: Sequence[WeightedMajorityGame]
) -> AxiomVerdict:
    """Weighted DP-mergeability: f(union) is the mwc-count weighted average."""
    _require_wm_mergeable(games)
    union = wm_union(games)
    union_count = len(minimal_winning_coalitions(union).mwc)
    left = f(union).values
    parts = [
        (len(minimal_winning_coalitions(g).mwc), f(g).values) for g in games
    ]
    right = [
        sum((count * values[i] for count, values in parts), Fraction(0)) / union_count
        for i in range(union.n_players)
    ]
    return _verdict(
        "DPMw",
        _vectors_equal(left, right),
        {"games": tuple(games), "left": tuple(left), "right": tuple(right)},
    )


def _weighted_membership_total(game: WeightedMajorityGame) -> Fraction:
    # sum over players of |M_i| * w_i
    induced = minimal_winning_coalitions(game)
    return sum(
        (
            len(induced.mwc_containing(i)) * game.weights[i]
            for i in range(game.n_players)
        ),
        Fraction(0),
    )


def check_hcmw(
    f: IndexFunction, games: Sequence[WeightedMajorityGame]
) -> AxiomVerdict:
    """Weighted HCM-mergeability: f(union) is the sum-|M_i|w_i weighted average."""
    _require_wm_mergeable(games)
    union = wm_union(games)
    union_total = _weighted_membership_total(union)
    left = f(union).values
    parts = [(_weighted_membership_total(g), f(g).values) for g in games]
    right = [
        sum((t * values[i] for t, values in parts), Fraction(0)) / union_total
        for i in range(union.n_players)
    ]
    return _verdict(
        "HCMw",
        _vectors_equal(left, right),
        {"games": tuple(games), "left": tuple(left), "right": tuple(right)},
    )


_PATCH_FIXTURE = WeightedMajorityGame(Fraction(4), (Fraction(2), Fraction(2), Fraction(1)))


def _scaled(base: IndexFunction, kind: str) -> IndexFunction:
    def index(game: Game) -> PowerIndexVector:
        return PowerIndexVector(kind, tuple(2 * v for v in base(game).values))

    return index


def _patched(
    base: IndexFunction, kind: str, patch_values: tuple[Fraction, ...]
) -> IndexFunction:
    def index(game: Game) -> PowerIndexVector:
        if game == _PATCH_FIXTURE:
            return PowerIndexVector(kind, patch_values)
        return base(game)

    return index


def witness_index(kind: str) -> IndexFunction:
    """The independence witnesses: deliberately broken variants of CM and HCM.

    ``scaled_cm`` / ``scaled_hcm`` double every value (efficiency fails);
    ``np_patch_cm`` / ``np_patch_hcm`` return the equal split on the one
    fixture game where it gives a null player positive power; and
    ``symw_patch_hcm`` concentrates all power on the first player of that
    fixture. Fixture matching is exact equality of (quota, weights).
    """
    third = Fraction(1, 3)
    if kind == "scaled_cm":
        return _scaled(colomer_martinez, kind)
    if kind == "scaled_hcm":
        return _scaled(hcm, kind)
    if kind == "np_patch_cm":
        return _patched(colomer_martinez, kind, (third, third, third))
    if kind == "np_patch_hcm":
        return _patched(hcm, kind, (third, third, third))
    if kind == "symw_patch_hcm":
        return _patched(hcm, kind, (Fraction(1), Fraction(0), Fraction(0)))
    raise UnknownKind(f"unknown witness kind {kind!r}")
