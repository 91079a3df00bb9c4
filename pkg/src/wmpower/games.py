"""Simple games and weighted majority games, with their structural predicates.

A simple game is stored canonically as the antichain of its minimal winning
coalitions, so games built by different routes compare equal exactly when
they have the same winning structure. A weighted majority game keeps its
quota and weight vector as exact rationals; the induced simple game is
computed on demand and cached.

No floating point is used anywhere: weights, quotas, and all derived
quantities are ``fractions.Fraction`` values compared exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Union

from .coalitions import MAX_PLAYERS, Coalition, as_coalition, minimal_antichain
from .errors import (
    EmptyCoalition,
    GameError,
    GrandCoalitionLoses,
    NegativeWeight,
    NonPositiveQuota,
    PlayerCountMismatch,
    PlayerOutOfRange,
    SamePlayer,
    TooManyPlayers,
)


def exact(value: "Fraction | int | str") -> Fraction:
    """Coerce to an exact rational; floats are rejected to keep arithmetic exact."""
    if isinstance(value, float):
        raise GameError(
            f"refusing float {value!r}; pass an int, Fraction, or 'p/q' string"
        )
    return value if isinstance(value, Fraction) else Fraction(value)


def _checked_mask(coalition, n_players: int) -> int:
    mask = as_coalition(coalition).mask
    if mask >> n_players:
        raise PlayerOutOfRange(
            f"coalition {Coalition.from_mask(mask)} not within 0..{n_players - 1}"
        )
    return mask


def _check_player(player: int, n_players: int) -> None:
    if not 0 <= player < n_players:
        raise PlayerOutOfRange(f"player index {player} not within 0..{n_players - 1}")


@dataclass(frozen=True)
class SimpleGame:
    """A monotone 0/1 game given by its antichain of minimal winning coalitions.

    The stored ``mwc`` tuple is canonical: duplicates removed, sorted by
    (cardinality, mask). Construction rejects families that are not
    antichains, contain the empty coalition, or reach outside 0..n-1.
    """

    n_players: int
    mwc: tuple[Coalition, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n_players <= MAX_PLAYERS:
            raise TooManyPlayers(
                f"player count {self.n_players} outside 1..{MAX_PLAYERS}"
            )
        coalitions = sorted(
            {as_coalition(c) for c in self.mwc}, key=lambda c: (len(c), c.mask)
        )
        if not coalitions:
            raise GameError("a simple game needs at least one minimal winning coalition")
        for c in coalitions:
            if not c:
                raise EmptyCoalition("the empty coalition cannot be minimal winning")
            _checked_mask(c, self.n_players)
        for a, b in itertools.combinations(coalitions, 2):
            if a.issubset(b) or b.issubset(a):
                raise GameError(
                    f"minimal winning coalitions must form an antichain; {a} vs {b}"
                )
        object.__setattr__(self, "mwc", tuple(coalitions))

    def is_winning(self, coalition) -> bool:
        """True iff the coalition contains some minimal winning coalition."""
        mask = _checked_mask(coalition, self.n_players)
        return any(m.mask & mask == m.mask for m in self.mwc)

    def mwc_containing(self, player: int) -> tuple[Coalition, ...]:
        """The minimal winning coalitions the player belongs to."""
        _check_player(player, self.n_players)
        return tuple(c for c in self.mwc if player in c)


@dataclass(frozen=True)
class WeightedMajorityGame:
    """Quota plus non-negative weights; a coalition wins iff its weight reaches the quota.

    Quota and weights are exact rationals. Construction enforces quota > 0,
    weights >= 0, and that the grand coalition wins.
    """

    quota: Fraction
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        quota = exact(self.quota)
        weights = tuple(exact(w) for w in self.weights)
        object.__setattr__(self, "quota", quota)
        object.__setattr__(self, "weights", weights)
        if quota <= 0:
            raise NonPositiveQuota(f"quota {quota} must be positive")
        if not weights:
            raise GameError("a game needs at least one player")
        if len(weights) > MAX_PLAYERS:
            raise TooManyPlayers(f"{len(weights)} players exceed the cap of {MAX_PLAYERS}")
        for i, w in enumerate(weights):
            if w < 0:
                raise NegativeWeight(f"weight of player {i} is negative ({w})")
        if sum(weights) < quota:
            raise GrandCoalitionLoses(
                f"total weight {sum(weights)} is below the quota {quota}"
            )

    @property
    def n_players(self) -> int:
        return len(self.weights)

    def coalition_weight(self, coalition) -> Fraction:
        """Sum of the members' weights; the empty coalition weighs 0."""
        mask = _checked_mask(coalition, self.n_players)
        total = Fraction(0)
        while mask:
            low = mask & -mask
            total += self.weights[low.bit_length() - 1]
            mask ^= low
        return total

    def is_winning(self, coalition) -> bool:
        """True iff the coalition's weight is at least the quota (exact comparison)."""
        return self.coalition_weight(coalition) >= self.quota

    @cached_property
    def induced_simple_game(self) -> SimpleGame:
        """The simple game of this weighted game: its minimal winning coalitions."""
        masks = _enumerate_mwc_masks(self.weights, self.quota)
        return SimpleGame(self.n_players, tuple(Coalition.from_mask(m) for m in masks))

    def __str__(self) -> str:
        return f"[{self.quota}; " + ", ".join(str(w) for w in self.weights) + "]"


Game = Union[SimpleGame, WeightedMajorityGame]


@dataclass(frozen=True)
class SwingSet:
    """All swings of one player: losing coalitions he turns winning by joining."""

    player: int
    swings: tuple[Coalition, ...]

    def __len__(self) -> int:
        return len(self.swings)

    def __iter__(self):
        return iter(self.swings)


def _enumerate_mwc_masks(weights: tuple[Fraction, ...], quota: Fraction) -> list[int]:
    # Increasing cardinality with monotone pruning: a winning coalition that
    # contains no previously found (smaller) minimal coalition is itself minimal.
    n = len(weights)
    found: list[int] = []
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(f & mask == f for f in found):
                continue
            total = Fraction(0)
            for i in combo:
                total += weights[i]
            if total >= quota:
                found.append(mask)
    return found


def mask_winning_test(game: Game) -> Callable[[int], bool]:
    """A fast mask-level winning predicate for inner enumeration loops."""
    if isinstance(game, WeightedMajorityGame):
        weights = game.weights
        quota = game.quota

        def win(mask: int) -> bool:
            total = Fraction(0)
            while mask:
                low = mask & -mask
                total += weights[low.bit_length() - 1]
                mask ^= low
            return total >= quota

    else:
        mwc_masks = [c.mask for c in game.mwc]

        def win(mask: int) -> bool:
            return any(mask & m == m for m in mwc_masks)

    return win


def minimal_winning_coalitions(game: Game) -> SimpleGame:
    """The induced simple game (the antichain M of minimal winning coalitions)."""
    if isinstance(game, SimpleGame):
        return game
    return game.induced_simple_game


def swings(game: Game, player: int) -> SwingSet:
    """Losing coalitions S (excluding the player) such that S plus the player wins."""
    _check_player(player, game.n_players)
    win = mask_winning_test(game)
    bit = 1 << player
    rest = ((1 << game.n_players) - 1) ^ bit
    out = []
    sub = rest
    while True:
        if not win(sub) and win(sub | bit):
            out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & rest
    coalitions = sorted(
        (Coalition.from_mask(m) for m in out), key=lambda c: (len(c), c.mask)
    )
    return SwingSet(player, tuple(coalitions))


def is_null_player(game: Game, player: int) -> bool:
    """True iff the player belongs to no minimal winning coalition."""
    _check_player(player, game.n_players)
    return not minimal_winning_coalitions(game).mwc_containing(player)


def are_symmetric(game: Game, i: int, j: int) -> bool:
    """True iff i and j are interchangeable on every losing coalition excluding both."""
    _check_player(i, game.n_players)
    _check_player(j, game.n_players)
    if i == j:
        raise SamePlayer(f"symmetry needs two distinct players, got {i} twice")
    win = mask_winning_test(game)
    bi, bj = 1 << i, 1 << j
    rest = ((1 << game.n_players) - 1) ^ bi ^ bj
    sub = rest
    while True:
        if not win(sub) and win(sub | bi) != win(sub | bj):
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & rest


def unanimity_game(n_players: int, coalition) -> SimpleGame:
    """The simple game whose only minimal winning coalition is the given one."""
    c = as_coalition(coalition)
    if not c:
        raise EmptyCoalition("a unanimity game needs a non-empty coalition")
    return SimpleGame(n_players, (c,))


def _check_same_players(v: SimpleGame, v_prime: SimpleGame) -> None:
    if v.n_players != v_prime.n_players:
        raise PlayerCountMismatch(
            f"player counts differ: {v.n_players} vs {v_prime.n_players}"
        )


def simple_union(v: SimpleGame, v_prime: SimpleGame) -> SimpleGame:
    """Game winning where either game wins; mwc = minimal elements of both antichains."""
    _check_same_players(v, v_prime)
    return SimpleGame(v.n_players, minimal_antichain(v.mwc + v_prime.mwc))


def simple_intersection(v: SimpleGame, v_prime: SimpleGame) -> SimpleGame:
    """Game winning where both games win; mwc = minimal pairwise unions of their mwcs."""
    _check_same_players(v, v_prime)
    candidates = {a | b for a in v.mwc for b in v_prime.mwc}
    return SimpleGame(v.n_players, minimal_antichain(candidates))


def simple_mergeable(v: SimpleGame, v_prime: SimpleGame) -> bool:
    """True iff no minimal winning coalition of one game contains one of the other."""
    _check_same_players(v, v_prime)
    return all(
        not a.issubset(b) and not b.issubset(a)
        for a in v.mwc
        for b in v_prime.mwc
    )
