"""Retrograde win/loss/draw solver over the full state space of a config.

solve() labels every (constellation, side-to-move) state: a state is a
win for the mover iff some move reaches a state lost for the opponent, a
loss iff every move reaches a state the opponent wins (stalemate counts
as an immediate loss), and everything the fixpoint never labels is a
draw, which is how infinite optimal play is classified.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from ..canonical import class_representatives
from ..geometry import Board
from ..rules import (
    Color,
    Constellation,
    GameConfig,
    Move,
    apply_move,
    is_terminal,
    legal_moves,
)
from ..store import StateSpace, StoreError, state_index, state_space, unrank_state
from . import _kernels

_FORWARD_CHUNKS = 256  # fixed so results never depend on the worker count


class Result(enum.Enum):
    BLACK_WIN = "black-win"
    GRAY_WIN = "gray-win"
    DRAW = "draw"

    @property
    def winner(self) -> Optional[Color]:
        if self is Result.BLACK_WIN:
            return Color.BLACK
        if self is Result.GRAY_WIN:
            return Color.GRAY
        return None

    @classmethod
    def win_for(cls, color: Color) -> "Result":
        return cls.BLACK_WIN if color is Color.BLACK else cls.GRAY_WIN

    @property
    def swapped(self) -> "Result":
        if self is Result.DRAW:
            return self
        return Result.BLACK_WIN if self is Result.GRAY_WIN else Result.GRAY_WIN


@dataclass(frozen=True)
class GameValue:
    """Perfect-play result for one state; wins carry plies-to-end."""

    result: Result
    distance: Optional[int] = None

    def __str__(self) -> str:
        if self.result is Result.DRAW:
            return "draw"
        text = self.result.value
        if self.distance is not None:
            text += f" in {self.distance}"
        return text


class OutcomeClass(enum.Enum):
    """Named (value with Black to move, value with Gray to move) pairs.

    The six named classes cover every pair the source game theory uses;
    the three X labels name the remaining combinatorially possible pairs
    so a census can prove they never occur.
    """

    L = "L"
    R = "R"
    D = "D"
    N = "N"
    NHAT = "N^"
    NCHECK = "Nv"
    X_PREV_WIN = "X-PrevWin"
    X_GD = "X-GD"
    X_DB = "X-DB"

    @property
    def label(self) -> str:
        return self.value

    @classmethod
    def from_results(cls, black_to_move: Result, gray_to_move: Result) -> "OutcomeClass":
        return _PAIR_TO_CLASS[(black_to_move, gray_to_move)]

    @property
    def pair(self) -> tuple[Result, Result]:
        return _CLASS_TO_PAIR[self]


_PAIR_TO_CLASS = {
    (Result.BLACK_WIN, Result.BLACK_WIN): OutcomeClass.L,
    (Result.GRAY_WIN, Result.GRAY_WIN): OutcomeClass.R,
    (Result.DRAW, Result.DRAW): OutcomeClass.D,
    (Result.BLACK_WIN, Result.GRAY_WIN): OutcomeClass.N,
    (Result.BLACK_WIN, Result.DRAW): OutcomeClass.NHAT,
    (Result.DRAW, Result.GRAY_WIN): OutcomeClass.NCHECK,
    (Result.GRAY_WIN, Result.BLACK_WIN): OutcomeClass.X_PREV_WIN,
    (Result.GRAY_WIN, Result.DRAW): OutcomeClass.X_GD,
    (Result.DRAW, Result.BLACK_WIN): OutcomeClass.X_DB,
}
_CLASS_TO_PAIR = {v: k for k, v in _PAIR_TO_CLASS.items()}

_CODE_TO_RESULT = {0: Result.DRAW, 1: Result.BLACK_WIN, 2: Result.GRAY_WIN}


@dataclass
class FixpointReport:
    checked: int
    violations: int
    examples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0


@dataclass
class SolvedDatabase:
    """Frozen perfect-play values for every state of one game config."""

    config: GameConfig
    values: np.ndarray  # uint8 per state: 0 draw, 1 black wins, 2 gray wins
    distances: Optional[np.ndarray]  # uint16 plies, 0 for draws
    stalemate_count: int

    def __post_init__(self) -> None:
        self.values.setflags(write=False)
        if self.distances is not None:
            self.distances.setflags(write=False)

    @property
    def space(self) -> StateSpace:
        return state_space(self.config)

    @property
    def board(self) -> Board:
        return self.config.board

    def _terminal_value(self, nb: int, ng: int) -> Optional[GameValue]:
        m = self.config.marbles_per_side
        k = self.config.k
        black_lost, gray_lost = m - nb, m - ng
        if black_lost >= k and gray_lost >= k:
            raise StoreError("both sides have lost k marbles; state is unreachable")
        if gray_lost >= k:
            return GameValue(Result.BLACK_WIN, 0)
        if black_lost >= k:
            return GameValue(Result.GRAY_WIN, 0)
        return None

    def value(self, constellation: Constellation, to_move: Color) -> GameValue:
        """Stored perfect-play value; lost counts derive from the contents."""
        if constellation.board != self.board:
            raise StoreError("constellation is on a different board")
        nb = constellation.count(Color.BLACK)
        ng = constellation.count(Color.GRAY)
        m = self.config.marbles_per_side
        if nb > m or ng > m or nb < m - self.config.k or ng < m - self.config.k:
            raise StoreError(f"{constellation.notation()} is outside the solved space")
        terminal = self._terminal_value(nb, ng)
        if terminal is not None:
            return terminal
        idx = state_index(constellation, to_move, self.config)
        result = _CODE_TO_RESULT[int(self.values[idx])]
        if result is Result.DRAW:
            return GameValue(Result.DRAW, None)
        distance = int(self.distances[idx]) if self.distances is not None else None
        return GameValue(result, distance)

    def outcome_class(self, constellation: Constellation) -> OutcomeClass:
        return OutcomeClass.from_results(
            self.value(constellation, Color.BLACK).result,
            self.value(constellation, Color.GRAY).result,
        )

    def best_moves(
        self, constellation: Constellation, to_move: Color
    ) -> list[tuple[Move, GameValue]]:
        """Moves sorted best-first for the mover: wins by ascending
        distance, then draws, then losses by descending distance; ties
        break on (source cells, direction)."""
        annotated = []
        for move in legal_moves(constellation, to_move, self.config):
            succ = apply_move(constellation, move)
            annotated.append((move, self.value(succ, to_move.other)))

        win = Result.win_for(to_move)

        def key(item: tuple[Move, GameValue]):
            move, val = item
            if val.result is win:
                cat, d = 0, val.distance if val.distance is not None else 0
            elif val.result is Result.DRAW:
                cat, d = 1, 0
            else:
                cat, d = 2, -(val.distance if val.distance is not None else 0)
            return (cat, d, tuple(sorted(move.cells)), move.direction)

        annotated.sort(key=key)
        return annotated

    def class_census(self, black: int, gray: int) -> Counter:
        """Outcome class per canonical class with the given marble counts."""
        census: Counter = Counter()
        for rep in class_representatives(self.board, black, gray):
            census[self.outcome_class(rep)] += 1
        return census

    def verify_fixpoint(
        self, sample: Optional[int] = None, seed: int = 0
    ) -> FixpointReport:
        """Re-check the fixpoint conditions with the pure-Python rules.

        This is an independent audit of the solver kernels: move
        generation here shares no code with them.  Returns the number of
        violated states (0 for a correct database).
        """
        space = self.space
        ranks: Iterable[int]
        if sample is None or sample >= space.n_constellations:
            ranks = range(space.n_constellations)
            checked = space.n_states
        else:
            rng = np.random.default_rng(seed)
            ranks = sorted(
                int(r)
                for r in rng.choice(space.n_constellations, size=sample, replace=False)
            )
            checked = 2 * sample
        violations = 0
        examples: list[str] = []

        def flag(state: str, reason: str) -> None:
            nonlocal violations
            violations += 1
            if len(examples) < 10:
                examples.append(f"{state}: {reason}")

        for rank in ranks:
            constellation, _ = unrank_state(rank << 1, self.config)
            for mover in (Color.BLACK, Color.GRAY):
                label = f"{constellation.notation()}/{mover}"
                mine = self.value(constellation, mover)
                win = Result.win_for(mover)
                loss = Result.win_for(mover.other)
                succ_values = []
                for move in legal_moves(constellation, mover, self.config):
                    succ = apply_move(constellation, move)
                    winner = is_terminal(succ, self.config)
                    if winner is not None:
                        if self.value(succ, mover.other).result is not Result.win_for(winner):
                            flag(label, "terminal successor mislabeled")
                        succ_values.append(Result.win_for(winner))
                    else:
                        succ_values.append(self.value(succ, mover.other).result)
                if mine.result is win:
                    if win not in succ_values:
                        flag(label, "win without a winning move")
                elif not succ_values:
                    if mine.result is not loss:
                        flag(label, "stalemate not labeled as loss")
                elif mine.result is loss:
                    if any(v is not loss for v in succ_values):
                        flag(label, "loss with an escaping move")
                else:  # draw
                    if win in succ_values:
                        flag(label, "draw with a winning move available")
                    elif Result.DRAW not in succ_values:
                        flag(label, "draw without a drawing move")
        return FixpointReport(checked, violations, examples)


def solve(
    config: GameConfig,
    workers: Optional[int] = None,
    keep_distances: bool = True,
) -> SolvedDatabase:
    """Build the full perfect-play database for a config.

    ``workers`` bounds the threads used by the parallel forward pass; the
    resulting database is bit-identical for every worker count.
    """
    import numba

    space = state_space(config)  # rejects configs that overflow the index
    n_states = space.n_states
    board = config.board

    value = np.zeros(n_states, dtype=np.uint8)
    dist = np.zeros(n_states, dtype=np.uint16)
    out_deg = np.zeros(n_states, dtype=np.uint8)

    limit = numba.config.NUMBA_NUM_THREADS
    numba.set_num_threads(max(1, min(workers, limit)) if workers else limit)

    stalemates = _kernels.forward_pass(
        space.table,
        board.neighbors,
        board.n,
        config.marbles_per_side,
        config.k,
        value,
        dist,
        out_deg,
        space.n_constellations,
        min(_FORWARD_CHUNKS, space.n_constellations),
    )

    queue = np.zeros(n_states, dtype=np.uint32)
    seeded = np.flatnonzero(value != 0)
    d0 = seeded[dist[seeded] == 0]
    d1 = seeded[dist[seeded] == 1]
    tail = len(d0) + len(d1)
    queue[: len(d0)] = d0
    queue[len(d0) : tail] = d1

    _kernels.backward_pass(
        space.table,
        board.neighbors,
        board.n,
        config.marbles_per_side,
        value,
        dist,
        out_deg,
        queue,
        tail,
    )
    if value.any() and int(dist[value != 0].max()) >= 0xFFFF:
        raise StoreError("distance-to-end overflows 16 bits")

    return SolvedDatabase(
        config=config,
        values=value,
        distances=dist if keep_distances else None,
        stalemate_count=int(stalemates),
    )


def value(db: SolvedDatabase, constellation: Constellation, to_move: Color) -> GameValue:
    return db.value(constellation, to_move)


def outcome_class(db: SolvedDatabase, constellation: Constellation) -> OutcomeClass:
    return db.outcome_class(constellation)


def best_moves(db: SolvedDatabase, constellation: Constellation, to_move: Color):
    return db.best_moves(constellation, to_move)


def class_census(db: SolvedDatabase, black: int, gray: int) -> Counter:
    return db.class_census(black, gray)


def verify_fixpoint(db: SolvedDatabase, sample: Optional[int] = None) -> FixpointReport:
    return db.verify_fixpoint(sample=sample)
