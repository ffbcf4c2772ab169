"""Isomorphism classes, negation, canonical forms and orbit counting.

Two constellations are isomorphic when one is the image of the other
under the board's symmetry group; the canonical form of a constellation
is the lexicographically smallest scan-order cell string over its orbit
(optionally also over the orbit of its negative).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .geometry import Board, BoardShape, Symmetry, build_board, symmetry_group
from .rules import (
    EMPTY,
    Color,
    Constellation,
    GameConfig,
    apply_move,
    legal_moves,
)

_SWAP = bytes.maketrans(b"\x01\x02", b"\x02\x01")
DONT_CARE = 3


def negate(constellation: Constellation) -> Constellation:
    """Swap marble colors (and lost counts); an involution."""
    return Constellation(
        constellation.board,
        constellation.contents.translate(_SWAP),
        black_lost=constellation.gray_lost,
        gray_lost=constellation.black_lost,
    )


def transform(constellation: Constellation, symmetry: Symmetry) -> Constellation:
    """Image of the constellation under one board symmetry."""
    contents = bytearray(len(constellation.contents))
    for i, v in enumerate(constellation.contents):
        contents[symmetry.perm[i]] = v
    return Constellation(
        constellation.board,
        bytes(contents),
        black_lost=constellation.black_lost,
        gray_lost=constellation.gray_lost,
    )


def orbit_strings(
    contents: bytes, board: Board, identify_negation: bool = False
) -> Iterator[bytes]:
    variants = [contents]
    if identify_negation:
        variants.append(contents.translate(_SWAP))
    for sym in symmetry_group(board):
        for base in variants:
            image = bytearray(len(base))
            for i, v in enumerate(base):
                image[sym.perm[i]] = v
            yield bytes(image)


def canonical_contents(
    contents: bytes, board: Board, identify_negation: bool = False
) -> bytes:
    return min(orbit_strings(contents, board, identify_negation))


def canonicalize(
    constellation: Constellation, identify_negation: bool = False
) -> str:
    """Minimal scan-order serialization over the symmetry orbit.

    Idempotent and constant on orbits: equal strings exactly characterize
    isomorphic constellations (isomorphic-or-negative when the flag is set).
    """
    best = canonical_contents(
        constellation.contents, constellation.board, identify_negation
    )
    return "".join(".BG"[v] for v in best)


def canonical_form(
    constellation: Constellation, identify_negation: bool = False
) -> Constellation:
    """A representative constellation carrying the canonical contents."""
    best = canonical_contents(
        constellation.contents, constellation.board, identify_negation
    )
    return Constellation(
        constellation.board,
        best,
        black_lost=constellation.black_lost,
        gray_lost=constellation.gray_lost,
    )


def is_isomorphic(a: Constellation, b: Constellation) -> bool:
    return a.board == b.board and canonicalize(a) == canonicalize(b)


def is_self_negative(constellation: Constellation) -> bool:
    return canonicalize(constellation) == canonicalize(negate(constellation))


def options_up_to_isomorphism(
    constellation: Constellation, mover: Color, config: GameConfig
) -> set[str]:
    """Canonical forms of all distinct successor constellations."""
    return {
        canonicalize(succ)
        for move in legal_moves(constellation, mover, config)
        for succ in (apply_move(constellation, move),)
    }


def placements(board: Board, black: int, gray: int) -> Iterator[bytes]:
    """Every assignment of the given marble counts to the board's cells."""
    if black + gray > board.n:
        raise ValueError("more marbles than cells")
    cells = range(board.n)
    for black_cells in itertools.combinations(cells, black):
        rest = [c for c in cells if c not in black_cells]
        for gray_cells in itertools.combinations(rest, gray):
            contents = bytearray(board.n)
            for c in black_cells:
                contents[c] = int(Color.BLACK)
            for c in gray_cells:
                contents[c] = int(Color.GRAY)
            yield bytes(contents)


def class_representatives(
    board: Board, black: int, gray: int, identify_negation: bool = False
) -> Iterator[Constellation]:
    """Stream one representative per isomorphism class: exactly the
    placements that are fixed points of canonicalization.

    With negation identified and unequal counts, an orbit straddles the
    (black, gray) and (gray, black) strata, so both are swept and each
    orbit surfaces once through whichever stratum holds its canonical
    form.
    """
    strata = [(black, gray)]
    if identify_negation and black != gray:
        strata.append((gray, black))
    for nb, ng in strata:
        for contents in placements(board, nb, ng):
            if canonical_contents(contents, board, identify_negation) == contents:
                yield Constellation(board, contents)


def enumerate_classes(
    board: Board, black: int, gray: int, identify_negation: bool = False
) -> int:
    """Number of marble placements up to isomorphism, by explicit orbits."""
    return sum(
        1 for _ in class_representatives(board, black, gray, identify_negation)
    )


def _cycle_lengths(perm: tuple[int, ...]) -> list[int]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, cur = 0, start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            n += 1
        lengths.append(n)
    return lengths


def _fixed_colorings(cycles: list[int], black: int, gray: int) -> int:
    """Placements fixed by a permutation with the given cycle lengths:
    each cycle is uniformly empty, black or gray."""
    counts = {(0, 0): 1}
    for length in cycles:
        nxt: dict[tuple[int, int], int] = {}
        for (nb, ng), ways in counts.items():
            for db, dg in ((0, 0), (length, 0), (0, length)):
                key = (nb + db, ng + dg)
                if key[0] <= black and key[1] <= gray:
                    nxt[key] = nxt.get(key, 0) + ways
        counts = nxt
    return counts.get((black, gray), 0)


def _fixed_colorings_swapped(cycles: list[int], black: int, gray: int) -> int:
    """Placements fixed by (permutation followed by color swap): colors
    alternate along each cycle, so odd cycles must stay empty and an even
    cycle is empty or one of two alternating patterns."""
    if black != gray:
        return 0
    counts = {0: 1}
    for length in cycles:
        if length % 2:
            continue
        half = length // 2
        nxt: dict[int, int] = {}
        for nb, ways in counts.items():
            nxt[nb] = nxt.get(nb, 0) + ways
            if nb + half <= black:
                nxt[nb + half] = nxt.get(nb + half, 0) + 2 * ways
        counts = nxt
    return counts.get(black, 0)


def burnside_count(
    board: Board, black: int, gray: int, identify_negation: bool = False
) -> int:
    """Class count via Burnside's lemma; independent of enumerate_classes."""
    group = symmetry_group(board)
    total = 0
    for sym in group:
        cycles = _cycle_lengths(sym.perm)
        total += _fixed_colorings(cycles, black, gray)
        if identify_negation:
            # The color swap acts on the union of the (black, gray) and
            # (gray, black) strata; plain elements fix placements in both.
            if black != gray:
                total += _fixed_colorings(cycles, gray, black)
            total += _fixed_colorings_swapped(cycles, black, gray)
    order = len(group) * (2 if identify_negation else 1)
    assert total % order == 0, "Burnside sum not divisible by group order"
    return total // order


@dataclass(frozen=True)
class Pattern:
    """A partial constellation: per-cell requirement, with don't-cares."""

    board: Board
    requirement: bytes  # 0 empty, 1 black, 2 gray, 3 don't-care

    def negated(self) -> "Pattern":
        return Pattern(self.board, self.requirement.translate(_SWAP))

    def cells_string(self) -> str:
        return "".join(".BG?"[v] for v in self.requirement)

    def notation(self) -> str:
        return f"{self.board.shape}:{self.cells_string()}"


def parse_pattern(text: str, board: Optional[Board] = None) -> Pattern:
    """Parse pattern notation: board notation with ``?`` for don't-care."""
    shape_part, sep, cells_part = text.partition(":")
    if not sep:
        raise ValueError(f"pattern {text!r} missing ':'")
    shape = BoardShape.parse(shape_part)
    if board is None:
        board = build_board(shape)
    elif board.shape != shape:
        raise ValueError(f"pattern shape {shape} != board shape {board.shape}")
    if len(cells_part) != board.n:
        raise ValueError(f"expected {board.n} cells, got {len(cells_part)!r}")
    codes = {".": EMPTY, "B": int(Color.BLACK), "G": int(Color.GRAY), "?": DONT_CARE}
    try:
        requirement = bytes(codes[ch] for ch in cells_part)
    except KeyError as exc:
        raise ValueError(f"bad pattern character {exc.args[0]!r}") from None
    return Pattern(board, requirement)


def match_pattern(constellation: Constellation, pattern: Pattern) -> bool:
    """True when some symmetry image of the constellation satisfies every
    non-don't-care cell of the pattern."""
    if constellation.board != pattern.board:
        raise ValueError("pattern and constellation are on different boards")
    req = pattern.requirement
    for image in orbit_strings(constellation.contents, constellation.board):
        if all(r == DONT_CARE or r == v for r, v in zip(req, image)):
            return True
    return False
