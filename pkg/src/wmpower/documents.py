"""Game documents: a small JSON wire format with string-encoded rationals.

A document carries player display names, the quota, and the weights. Quota
and weights travel as strings (or plain JSON integers) so no binary float
can sneak into the exact arithmetic; ``"1/2"`` and ``"0.5"`` both parse to
the exact rational one half, while JSON floats are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .games import WeightedMajorityGame


def parse_rational(value: "int | str") -> Fraction:
    """Parse an exact rational from an int or a string like ``'3'`` or ``'2/5'``."""
    if isinstance(value, bool):
        raise ParseError(f"expected a rational, got boolean {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(
            f"floats are not accepted ({value!r}); write the value as a string"
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise ParseError(f"malformed rational {value!r}") from err
    raise ParseError(f"expected a rational, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Render a rational compactly: ``'3'`` for integers, else ``'p/q'``."""
    return str(value)


@dataclass(frozen=True)
class GameDocument:
    """A named weighted majority game as it appears on disk."""

    quota: Fraction
    weights: tuple[Fraction, ...]
    players: tuple[str, ...]
    label: str | None = None
    date: str | None = None

    def __post_init__(self) -> None:
        if len(self.players) != len(self.weights):
            raise ParseError(
                f"{len(self.players)} player names for {len(self.weights)} weights"
            )
        # Surface construction errors (bad quota, negative weight, ...) now.
        self.game()

    def game(self) -> WeightedMajorityGame:
        """The validated game this document describes."""
        return WeightedMajorityGame(self.quota, self.weights)

    def to_json_obj(self) -> dict:
        obj: dict = {
            "players": list(self.players),
            "quota": format_rational(self.quota),
            "weights": [format_rational(w) for w in self.weights],
        }
        metadata = {}
        if self.label is not None:
            metadata["label"] = self.label
        if self.date is not None:
            metadata["date"] = self.date
        if metadata:
            obj["metadata"] = metadata
        return obj

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GameDocument":
        if not isinstance(obj, dict):
            raise ParseError(f"expected an object, got {type(obj).__name__}")
        if "quota" not in obj:
            raise ParseError("document is missing 'quota'")
        if "weights" not in obj or not isinstance(obj["weights"], list):
            raise ParseError("document needs a 'weights' list")
        quota = parse_rational(obj["quota"])
        weights = tuple(parse_rational(w) for w in obj["weights"])
        players = obj.get("players")
        if players is None:
            players = tuple(f"P{k + 1}" for k in range(len(weights)))
        elif isinstance(players, list) and all(isinstance(p, str) for p in players):
            players = tuple(players)
        else:
            raise ParseError("'players' must be a list of strings")
        metadata = obj.get("metadata") or {}
        if not isinstance(metadata, dict):
            raise ParseError("'metadata' must be an object")
        return cls(
            quota=quota,
            weights=weights,
            players=players,
            label=metadata.get("label"),
            date=metadata.get("date"),
        )

    @classmethod
    def from_json(cls, text: str) -> "GameDocument":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as err:
            raise ParseError(f"invalid JSON: {err}") from err
        return cls.from_json_obj(obj)


def parse_game(text: str) -> GameDocument:
    """Parse a document from JSON text."""
    return GameDocument.from_json(text)


def load_game(path: "str | Path") -> GameDocument:
    """Load a document from a JSON file."""
    return parse_game(Path(path).read_text())
