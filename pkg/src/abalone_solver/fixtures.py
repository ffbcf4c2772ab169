"""Named reference boards and patterns, with self-checks.

The shipped fixture file transcribes the reference figures; verify()
re-checks the properties those figures are known to have (marble counts,
self-negativity, option counts) so a transcription slip surfaces
immediately instead of poisoning downstream tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .canonical import (
    Pattern,
    is_self_negative,
    match_pattern,
    negate,
    options_up_to_isomorphism,
    parse_pattern,
)
from .geometry import BoardShape
from .rules import Color, Constellation, GameConfig, parse_constellation

# Default game configs per shape: (win threshold, starting board name).
STANDARD_GAMES = {
    BoardShape(2, 2, 2): (1, "B1"),
    BoardShape(2, 2, 3): (1, "C0"),
    BoardShape(2, 3, 3): (2, "D0"),
    BoardShape(3, 3, 3): (2, "E0"),
}

# Shapes whose solution the source material only conjectures.
CONJECTURE_SHAPES = {BoardShape(2, 3, 3), BoardShape(3, 3, 3)}


class FixtureError(Exception):
    pass


@dataclass
class FixtureSet:
    boards: dict[str, Constellation]
    patterns: dict[str, Pattern]

    @classmethod
    def parse(cls, text: str) -> "FixtureSet":
        boards: dict[str, Constellation] = {}
        patterns: dict[str, Pattern] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                name, notation = line.split()
            except ValueError:
                raise FixtureError(f"line {lineno}: expected 'NAME NOTATION'") from None
            if name in boards or name in patterns:
                raise FixtureError(f"line {lineno}: duplicate fixture {name}")
            if "?" in notation:
                patterns[name] = parse_pattern(notation)
            else:
                boards[name] = parse_constellation(notation)
        return cls(boards, patterns)

    @classmethod
    def from_file(cls, path) -> "FixtureSet":
        return cls.parse(Path(path).read_text())

    def board(self, name: str) -> Constellation:
        """Look up a board; a leading '-' negates the named fixture."""
        if name.startswith("-"):
            return negate(self.board(name[1:]))
        try:
            return self.boards[name]
        except KeyError:
            raise FixtureError(f"unknown fixture {name!r}") from None

    def names_for_shape(self, shape: BoardShape) -> list[str]:
        return [n for n, c in self.boards.items() if c.board.shape == shape]

    def standard_config(self, shape: BoardShape) -> GameConfig:
        try:
            k, start = STANDARD_GAMES[shape]
        except KeyError:
            raise FixtureError(f"no standard game on {shape}") from None
        return GameConfig(shape, k, self.board(start))

    def verify(self) -> list[str]:
        """Re-check transcription properties; returns failure messages."""
        problems: list[str] = []

        def check(cond: bool, message: str) -> None:
            if not cond:
                problems.append(message)

        for name, c in self.boards.items():
            nb, ng = c.count(Color.BLACK), c.count(Color.GRAY)
            check(nb == ng, f"{name}: unequal marble counts {nb}/{ng}")
        for i in range(5):
            check(is_self_negative(self.board(f"B{i}")), f"B{i} should be self-negative")
        for i in range(5, 14):
            check(
                not is_self_negative(self.board(f"B{i}")),
                f"B{i} should not be self-negative",
            )
        for name in ("C0", "D0", "E0"):
            check(is_self_negative(self.board(name)), f"{name} should be self-negative")

        cfg = self.standard_config(BoardShape(2, 2, 3))
        c0, c1 = self.board("C0"), self.board("C1")
        check(
            len(options_up_to_isomorphism(c0, Color.BLACK, cfg)) == 4,
            "C0 should give Black 4 nonisomorphic options",
        )
        check(
            len(options_up_to_isomorphism(c1, Color.GRAY, cfg)) == 7,
            "C1 should give Gray 7 nonisomorphic options",
        )

        neutral = self.patterns["NEUTRAL"]
        check(
            match_pattern(parse_constellation("2,2,3:GGB.BB...."), neutral),
            "NEUTRAL should match its defining constellation",
        )
        check(not match_pattern(c0, neutral), "C0 must not match NEUTRAL")
        triangle = self.patterns["TRIANGLE"]
        check(
            match_pattern(parse_constellation("2,2,3:.B..BB...."), triangle),
            "TRIANGLE should match its defining constellation",
        )
        return problems


def load_fixtures(path: Optional[str] = None) -> FixtureSet:
    """The packaged fixture set, or one parsed from ``path``."""
    if path is not None:
        return FixtureSet.from_file(path)
    text = resources.files("abalone_solver.data").joinpath("fixtures.txt").read_text()
    return FixtureSet.parse(text)
