"""Move generation and application for Abalone on any built board.

Game rules in force here:
  * 1-3 contiguous marbles move per turn, in line or broadside.
  * Broadside destinations must all be empty and on-board.
  * An in-line move may push (sumito) when the moving line strictly
    outnumbers the contiguous opposing line ahead of it and the cell
    beyond that line is empty or off the board; marbles pushed past the
    edge are lost.
  * A move may never push the mover's own marble off the board, so an
    in-line slide whose destination is off-board is illegal.
  * A player with no legal move loses immediately (solvers count these
    stalemates so the rule can be audited).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterator, Optional

from .geometry import (
    Board,
    BoardShape,
    DIRECTION_NAMES,
    N_DIRECTIONS,
    build_board,
    opposite,
)

EMPTY = 0


class Color(enum.IntEnum):
    BLACK = 1
    GRAY = 2

    @property
    def other(self) -> "Color":
        return Color.GRAY if self is Color.BLACK else Color.BLACK

    def __str__(self) -> str:
        return self.name.lower()


class MoveKind(enum.Enum):
    IN_LINE = "in-line"
    BROADSIDE = "broadside"


@dataclass(frozen=True)
class Constellation:
    """A full board configuration plus how many marbles each side has lost."""

    board: Board
    contents: bytes
    black_lost: int = 0
    gray_lost: int = 0

    def __post_init__(self) -> None:
        if len(self.contents) != self.board.n:
            raise ValueError(
                f"contents length {len(self.contents)} != {self.board.n} cells"
            )

    def at(self, index: int) -> int:
        return self.contents[index]

    def count(self, color: Color) -> int:
        return self.contents.count(int(color))

    def lost(self, color: Color) -> int:
        return self.black_lost if color is Color.BLACK else self.gray_lost

    def cells_of(self, color: Color) -> tuple[int, ...]:
        v = int(color)
        return tuple(i for i, x in enumerate(self.contents) if x == v)

    def cells_string(self) -> str:
        return "".join(".BG"[x] for x in self.contents)

    def notation(self) -> str:
        return f"{self.board.shape}:{self.cells_string()}"

    def __str__(self) -> str:
        return self.notation()


def parse_cells(board: Board, text: str) -> bytes:
    codes = {".": EMPTY, "B": int(Color.BLACK), "G": int(Color.GRAY)}
    if len(text) != board.n:
        raise ValueError(f"expected {board.n} cell characters, got {len(text)!r}")
    try:
        return bytes(codes[ch] for ch in text)
    except KeyError as exc:
        raise ValueError(f"bad cell character {exc.args[0]!r} in {text!r}") from None


def parse_constellation(text: str, board: Optional[Board] = None) -> Constellation:
    """Parse board notation ``a,b,c:cells`` (``B`` black, ``G`` gray, ``.`` empty)."""
    shape_part, sep, cells_part = text.partition(":")
    if not sep:
        raise ValueError(f"notation {text!r} missing ':'")
    shape = BoardShape.parse(shape_part)
    if board is None:
        board = build_board(shape)
    elif board.shape != shape:
        raise ValueError(f"notation shape {shape} != board shape {board.shape}")
    return Constellation(board, parse_cells(board, cells_part))


@dataclass(frozen=True)
class GameConfig:
    """One solvable game: board shape, win threshold and starting board."""

    shape: BoardShape
    k: int
    initial: Constellation

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        nb = self.initial.count(Color.BLACK)
        ng = self.initial.count(Color.GRAY)
        if nb != ng:
            raise ValueError(f"initial marble counts differ: {nb} black, {ng} gray")
        if self.k > nb:
            raise ValueError(f"k={self.k} exceeds {nb} marbles per side")
        if self.initial.black_lost or self.initial.gray_lost:
            raise ValueError("initial constellation must have zero lost counts")
        if self.initial.board.shape != self.shape:
            raise ValueError("initial constellation is on a different shape")

    @property
    def board(self) -> Board:
        return self.initial.board

    @property
    def marbles_per_side(self) -> int:
        return self.initial.count(Color.BLACK)


@dataclass(frozen=True)
class Move:
    """A displacement of 1-3 marbles.

    ``cells`` are scan indices ordered tail to head along ``direction`` for
    in-line moves (any order is geometrically fine for broadside moves).
    ``pushed`` counts opposing marbles displaced; ``ejects`` marks a push
    whose lead opposing marble leaves the board.
    """

    color: Color
    cells: tuple[int, ...]
    direction: int
    kind: MoveKind
    pushed: int = 0
    ejects: bool = False

    @property
    def is_sumito(self) -> bool:
        return self.pushed > 0

    def describe(self, board: Board) -> str:
        cells = "".join(board.label(i) for i in self.cells)
        text = f"{cells}>{DIRECTION_NAMES[self.direction]}"
        if self.is_sumito:
            text += f" ({len(self.cells)} on {self.pushed} push"
            text += ", off)" if self.ejects else ")"
        return text


def _line_windows(constellation: Constellation, color: Color) -> Iterator[tuple[int, ...]]:
    """All contiguous lines of 1-3 own marbles, each geometric line once.

    Multi-marble windows are emitted with cells ascending along one of the
    three positive axes; sub-lines of longer runs are windows of their own.
    """
    board = constellation.board
    contents = constellation.contents
    v = int(color)
    for c0 in range(board.n):
        if contents[c0] != v:
            continue
        yield (c0,)
        for axis in range(3):
            c1 = board.neighbor(c0, axis)
            if c1 < 0 or contents[c1] != v:
                continue
            yield (c0, c1)
            c2 = board.neighbor(c1, axis)
            if c2 >= 0 and contents[c2] == v:
                yield (c0, c1, c2)


def _inline_move(
    constellation: Constellation, cells: tuple[int, ...], direction: int, color: Color
) -> Optional[Move]:
    """Classify an in-line attempt; None when illegal."""
    board = constellation.board
    contents = constellation.contents
    if len(cells) > 1 and direction >= 3:
        cells = tuple(reversed(cells))  # reorder tail->head along motion
    head = cells[-1]
    front = board.neighbor(head, direction)
    if front < 0:
        return None  # own marble would fall off
    if contents[front] == EMPTY:
        return Move(color, cells, direction, MoveKind.IN_LINE)
    if contents[front] == int(color):
        return None  # blocked by own marble
    # Opposing line ahead: count its length, capped at our own.
    k = len(cells)
    pushed = 0
    cur = front
    while cur >= 0 and contents[cur] == int(color.other) and pushed < k:
        pushed += 1
        cur = board.neighbor(cur, direction)
    if pushed >= k:
        return None  # not strictly outnumbered
    if cur < 0:
        return Move(color, cells, direction, MoveKind.IN_LINE, pushed, ejects=True)
    if contents[cur] == EMPTY:
        return Move(color, cells, direction, MoveKind.IN_LINE, pushed)
    return None  # a marble sits behind the opposing line


def legal_moves(
    constellation: Constellation, mover: Color, config: GameConfig
) -> list[Move]:
    """Every legal move for ``mover``; the input must be non-terminal."""
    if is_terminal(constellation, config) is not None:
        raise ValueError("legal_moves called on a terminal constellation")
    return generate_moves(constellation, mover)


def generate_moves(constellation: Constellation, mover: Color) -> list[Move]:
    """Move generation alone, without the non-terminal precondition."""
    board = constellation.board
    contents = constellation.contents
    moves: list[Move] = []
    for cells in _line_windows(constellation, mover):
        if len(cells) == 1:
            for d in range(N_DIRECTIONS):
                move = _inline_move(constellation, cells, d, mover)
                if move is not None:
                    moves.append(move)
            continue
        axis = next(
            a for a in range(3) if board.neighbor(cells[0], a) == cells[1]
        )
        for d in (axis, opposite(axis)):
            move = _inline_move(constellation, cells, d, mover)
            if move is not None:
                moves.append(move)
        for d in range(N_DIRECTIONS):
            if d % 3 == axis:
                continue
            dests = [board.neighbor(c, d) for c in cells]
            if all(t >= 0 and contents[t] == EMPTY for t in dests):
                moves.append(Move(mover, cells, d, MoveKind.BROADSIDE))
    return moves


def apply_move(constellation: Constellation, move: Move) -> Constellation:
    """Apply a move produced by legal_moves on this constellation."""
    board = constellation.board
    contents = bytearray(constellation.contents)
    me = int(move.color)
    d = move.direction
    if move.kind is MoveKind.BROADSIDE:
        for c in move.cells:
            contents[c] = EMPTY
        for c in move.cells:
            contents[board.neighbor(c, d)] = me
        return replace(constellation, contents=bytes(contents))

    head = move.cells[-1]
    front = board.neighbor(head, d)
    # Relocate the opposing line one step first, lead marble last.
    if move.pushed:
        opp = int(move.color.other)
        line = [front]
        for _ in range(move.pushed - 1):
            line.append(board.neighbor(line[-1], d))
        for c in reversed(line):
            dest = board.neighbor(c, d)
            contents[c] = EMPTY
            if dest >= 0:
                contents[dest] = opp
        assert move.ejects == (board.neighbor(line[-1], d) < 0)
    # Only the vacated tail and the entered front change for the mover;
    # marbles between them keep their cells filled.
    contents[move.cells[0]] = EMPTY
    contents[front] = me
    new = replace(constellation, contents=bytes(contents))
    if move.ejects:
        if move.color is Color.BLACK:
            new = replace(new, gray_lost=constellation.gray_lost + 1)
        else:
            new = replace(new, black_lost=constellation.black_lost + 1)
    return new


def is_terminal(constellation: Constellation, config: GameConfig) -> Optional[Color]:
    """The winner if a side has lost k marbles, else None."""
    if constellation.gray_lost >= config.k:
        return Color.BLACK
    if constellation.black_lost >= config.k:
        return Color.GRAY
    return None


def successors(
    constellation: Constellation, mover: Color, config: GameConfig
) -> list[tuple[Move, Constellation]]:
    return [
        (move, apply_move(constellation, move))
        for move in legal_moves(constellation, mover, config)
    ]
