"""Exact power indices for simple and weighted majority games.

Six indices are provided. Shapley-Shubik, Banzhaf, Deegan-Packel, and
Public Good depend only on the winning structure and accept either game
kind. Colomer-Martinez and HCM are defined on the weighted representation
itself (different weight vectors inducing the same simple game give
different values), so they insist on a ``WeightedMajorityGame``.

Every returned vector is exact rational; every vector except the raw
Banzhaf form sums to exactly 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import AllZeroSwings, WeightsRequired
from .games import (
    Game,
    SimpleGame,
    WeightedMajorityGame,
    mask_winning_test,
    minimal_winning_coalitions,
)


@dataclass(frozen=True)
class PowerIndexVector:
    """One exact rational power value per player, tagged with the index kind."""

    kind: str
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, player: int) -> Fraction:
        return self.values[player]

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))


def _efficient(kind: str, values) -> PowerIndexVector:
    vector = PowerIndexVector(kind, tuple(values))
    assert vector.total == 1, f"{kind} vector must sum to 1, got {vector.total}"
    return vector


def _swing_size_tallies(game: Game, player: int) -> list[int]:
    # tallies[s] = number of swings S of the player with |S| = s
    n = game.n_players
    win = mask_winning_test(game)
    bit = 1 << player
    rest = ((1 << n) - 1) ^ bit
    tallies = [0] * n
    sub = rest
    while True:
        if not win(sub) and win(sub | bit):
            tallies[sub.bit_count()] += 1
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return tallies


def _shapley_from_swings(game: Game) -> list[Fraction]:
    n = game.n_players
    fact = [math.factorial(k) for k in range(n + 1)]
    values = []
    for i in range(n):
        numerator = 0
        for size, count in enumerate(_swing_size_tallies(game, i)):
            if count:
                numerator += count * fact[size] * fact[n - size - 1]
        values.append(Fraction(numerator, fact[n]))
    return values


def _scaled_integer_form(game: WeightedMajorityGame) -> tuple[list[int], int]:
    # Scale weights and quota by the common denominator; the induced game is
    # unchanged, and all comparisons become integer comparisons.
    scale = math.lcm(
        game.quota.denominator, *(w.denominator for w in game.weights)
    )
    weights = [int(w * scale) for w in game.weights]
    quota = int(game.quota * scale)
    return weights, quota


def _shapley_by_counting(game: WeightedMajorityGame) -> list[Fraction]:
    # For each player, tally the other players' coalitions by (size, weight),
    # saturating weights at the quota; swings are the tallies whose weight
    # lies in [quota - own weight, quota).
    weights, quota = _scaled_integer_form(game)
    n = len(weights)
    fact = [math.factorial(k) for k in range(n + 1)]
    values = []
    for i in range(n):
        own = weights[i]
        if own == 0:
            values.append(Fraction(0))
            continue
        tallies: list[dict[int, int]] = [{} for _ in range(n)]
        tallies[0][0] = 1
        filled = 0
        for j in range(n):
            if j == i:
                continue
            w = weights[j]
            for size in range(filled, -1, -1):
                row = tallies[size]
                nxt = tallies[size + 1]
                for total, count in row.items():
                    key = min(total + w, quota)
                    nxt[key] = nxt.get(key, 0) + count
            filled += 1
        lo = quota - own
        numerator = 0
        for size in range(n):
            swings_at_size = sum(
                count
                for total, count in tallies[size].items()
                if lo <= total < quota
            )
            if swings_at_size:
                numerator += swings_at_size * fact[size] * fact[n - size - 1]
        values.append(Fraction(numerator, fact[n]))
    return values


def shapley_shubik(game: Game, method: str = "auto") -> PowerIndexVector:
    """Shapley-Shubik index: each swing S of player i contributes |S|!(n-|S|-1)!/n!.

    Two exact backends are available: ``swings`` enumerates the 2**(n-1)
    coalitions per player and works for any game; ``counting`` tallies
    coalitions by size and weight and needs a weighted game, but scales to
    larger player counts. ``auto`` picks ``counting`` for weighted games.
    """
    if method == "auto":
        method = "counting" if isinstance(game, WeightedMajorityGame) else "swings"
    if method == "swings":
        values = _shapley_from_swings(game)
    elif method == "counting":
        if not isinstance(game, WeightedMajorityGame):
            raise WeightsRequired("the counting backend needs a weighted game")
        values = _shapley_by_counting(game)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _efficient("SS", values)


def banzhaf(game: Game, normalized: bool = True) -> PowerIndexVector:
    """Banzhaf index: swing counts over 2**(n-1), or normalized to sum 1."""
    n = game.n_players
    counts = [sum(_swing_size_tallies(game, i)) for i in range(n)]
    if normalized:
        total = sum(counts)
        if total == 0:
            raise AllZeroSwings("no player has a swing")
        return _efficient("BZ", (Fraction(c, total) for c in counts))
    denominator = 1 << (n - 1)
    return PowerIndexVector("BZ", tuple(Fraction(c, denominator) for c in counts))


def deegan_packel(game: Game) -> PowerIndexVector:
    """Deegan-Packel index: average over a player's mwcs of the equal split 1/|S|."""
    induced = minimal_winning_coalitions(game)
    m = len(induced.mwc)
    values = []
    for i in range(induced.n_players):
        share = sum(
            (Fraction(1, len(c)) for c in induced.mwc if i in c), Fraction(0)
        )
        values.append(share / m)
    return _efficient("DP", values)


def public_good(game: Game) -> PowerIndexVector:
    """Public Good index: a player's mwc count over the total of all players' counts."""
    induced = minimal_winning_coalitions(game)
    counts = [len(induced.mwc_containing(i)) for i in range(induced.n_players)]
    total = sum(counts)
    return _efficient("PG", (Fraction(c, total) for c in counts))


def _require_weights(game: Game, index_name: str) -> WeightedMajorityGame:
    if not isinstance(game, WeightedMajorityGame):
        raise WeightsRequired(
            f"{index_name} is defined on the weighted representation; "
            "got a bare simple game"
        )
    return game


def colomer_martinez(game: Game) -> PowerIndexVector:
    """Colomer-Martinez index: average over a player's mwcs of his weight share w_i/w_S."""
    weighted = _require_weights(game, "colomer_martinez")
    induced = weighted.induced_simple_game
    m = len(induced.mwc)
    coalition_weights = {c: weighted.coalition_weight(c) for c in induced.mwc}
    values = []
    for i in range(weighted.n_players):
        w_i = weighted.weights[i]
        share = sum(
            (w_i / coalition_weights[c] for c in induced.mwc if i in c),
            Fraction(0),
        )
        values.append(share / m)
    return _efficient("CM", values)


def hcm(game: Game) -> PowerIndexVector:
    """HCM index: power proportional to (own mwc count) times (own weight)."""
    weighted = _require_weights(game, "hcm")
    induced = weighted.induced_simple_game
    numerators = [
        len(induced.mwc_containing(i)) * weighted.weights[i]
        for i in range(weighted.n_players)
    ]
    total = sum(numerators, Fraction(0))
    return _efficient("HCM", (v / total for v in numerators))


INDEX_FUNCTIONS = {
    "ss": shapley_shubik,
    "bz": banzhaf,
    "dp": deegan_packel,
    "pg": public_good,
    "cm": colomer_martinez,
    "hcm": hcm,
}

INDEX_LABELS = {
    "ss": "SS",
    "bz": "BZ",
    "dp": "DP",
    "pg": "PG",
    "cm": "CM",
    "hcm": "HCM",
}
