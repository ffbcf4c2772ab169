"""Hexagonal boards with side lengths (a, b, c), adjacency and symmetries.

A board is a convex hexagon of flat-top hex cells whose perimeter runs
a, b, c, a, b, c cells per side.  Cells are laid out in columns; the scan
order (columns left to right, cells bottom to top within a column) is the
normative serialization order used everywhere else in the package.

Coordinates: a cell is (col, row) where ``row`` is a *doubled* vertical
coordinate, so cells one step up in the same column differ by 2 and cells
in adjacent columns differ by 1.  Cube coordinates (x, y, z with
x + y + z = 0) are derived from (col, row) for symmetry computations.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

# Direction indices. Opposite direction is (d + 3) % 6; the axis of a
# direction is d % 3, with 0..2 the "positive" orientations.
UP, UP_RIGHT, DOWN_RIGHT, DOWN, DOWN_LEFT, UP_LEFT = range(6)

DIRECTION_NAMES = ("U", "UR", "DR", "D", "DL", "UL")

# (dcol, drow) steps in doubled column/row coordinates.
DIRECTION_STEPS = ((0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1))

# The same six directions as cube-coordinate vectors.
DIRECTION_CUBES = (
    (0, 1, -1),
    (1, 0, -1),
    (1, -1, 0),
    (0, -1, 1),
    (-1, 0, 1),
    (-1, 1, 0),
)

N_DIRECTIONS = 6


def opposite(direction: int) -> int:
    return (direction + 3) % 6


class Cell(NamedTuple):
    """A board cell; tuple order (col, row) is exactly the scan order."""

    col: int
    row: int

    @property
    def cube(self) -> tuple[int, int, int]:
        x = self.col
        y = (self.row - self.col) // 2
        return (x, y, -x - y)


@dataclass(frozen=True)
class BoardShape:
    """Side lengths of the hexagonal board."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(f"side lengths must be >= 1, got {self}")

    @property
    def cell_count(self) -> int:
        a, b, c = self.a, self.b, self.c
        return a * b + b * c + c * a - a - b - c + 1

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    @classmethod
    def parse(cls, text: str) -> "BoardShape":
        try:
            a, b, c = (int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad shape {text!r}, expected 'a,b,c'") from exc
        return cls(a, b, c)


@dataclass(frozen=True)
class Symmetry:
    """One isometry of the plane that maps the cell set onto itself.

    ``perm[i]`` is the scan index of the image of cell ``i``.  Boards with
    degenerate geometry (single cells, single columns) can realize distinct
    isometries as the same permutation; they are kept apart by name.
    """

    name: str
    perm: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def compose(self, other: "Symmetry") -> tuple[int, ...]:
        """Permutation of self-after-other: (self ∘ other)[i]."""
        return tuple(self.perm[j] for j in other.perm)


def _column_profile(shape: BoardShape) -> list[tuple[int, int]]:
    """(bottom doubled row, height) per column, left to right.

    The left column carries side c; the bottom edge descends for a - 1
    columns and the top ascends for b - 1, which makes the perimeter run
    through sides of lengths a, b and c.
    """
    a, b, c = shape.a, shape.b, shape.c
    ncols = a + b - 1
    profile = []
    for i in range(ncols):
        bottom = -min(i, a - 1) + max(0, i - (a - 1))
        top = 2 * (c - 1) + min(i, b - 1) - max(0, i - (b - 1))
        height = (top - bottom) // 2 + 1
        profile.append((bottom, height))
    return profile


class Board:
    """Immutable cell set plus adjacency tables for one BoardShape."""

    def __init__(self, shape: BoardShape):
        self.shape = shape
        profile = _column_profile(shape)
        cells: list[Cell] = []
        for col, (bottom, height) in enumerate(profile):
            for k in range(height):
                cells.append(Cell(col, bottom + 2 * k))
        cells.sort()
        if len(cells) != shape.cell_count:
            raise AssertionError(
                f"built {len(cells)} cells for {shape}, expected {shape.cell_count}"
            )
        self.cells: tuple[Cell, ...] = tuple(cells)
        self.index: dict[Cell, int] = {cell: i for i, cell in enumerate(cells)}
        self.n = len(cells)

        nbr = np.full((self.n, N_DIRECTIONS), -1, dtype=np.int32)
        for i, cell in enumerate(cells):
            for d, (dc, dr) in enumerate(DIRECTION_STEPS):
                j = self.index.get(Cell(cell.col + dc, cell.row + dr))
                if j is not None:
                    nbr[i, d] = j
        nbr.setflags(write=False)
        self.neighbors = nbr

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Board) and other.shape == self.shape

    def __hash__(self) -> int:
        return hash(self.shape)

    def __repr__(self) -> str:
        return f"Board({self.shape})"

    def neighbor(self, index: int, direction: int) -> int:
        """Scan index of the neighbor, or -1 off-board."""
        return int(self.neighbors[index, direction])

    def degree(self, index: int) -> int:
        return int((self.neighbors[index] >= 0).sum())

    def label(self, index: int) -> str:
        """Single-letter cell label in scan order (a, b, c, ...)."""
        return string.ascii_lowercase[index]

    def label_index(self, label: str) -> int:
        i = string.ascii_lowercase.index(label.lower())
        if i >= self.n:
            raise ValueError(f"no cell {label!r} on {self.shape}")
        return i

    def columns(self) -> list[list[int]]:
        cols: dict[int, list[int]] = {}
        for i, cell in enumerate(self.cells):
            cols.setdefault(cell.col, []).append(i)
        return [cols[c] for c in sorted(cols)]


@lru_cache(maxsize=None)
def build_board(shape: BoardShape) -> Board:
    """Build (and cache) the board for a shape."""
    return Board(shape)


def _candidate_isometries() -> list[tuple[str, tuple[tuple[int, int, int], ...]]]:
    """The 12 isometries of the hex plane as cube-coordinate matrices.

    Each matrix is given as the images of the three cube basis directions;
    applying one to (x, y, z) permutes/negates coordinates.
    """

    def rot60(p: tuple[int, int, int]) -> tuple[int, int, int]:
        x, y, z = p
        return (-z, -x, -y)

    def mirror(p: tuple[int, int, int]) -> tuple[int, int, int]:
        x, y, z = p
        return (x, z, y)

    out = []
    for k in range(6):
        for reflected in (False, True):
            def apply(p, k=k, reflected=reflected):
                if reflected:
                    p = mirror(p)
                for _ in range(k):
                    p = rot60(p)
                return p

            name = f"rot{k * 60}" + ("m" if reflected else "")
            basis = tuple(apply(v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
            out.append((name, basis))
    return out


def _apply_basis(basis, p: tuple[int, int, int]) -> tuple[int, int, int]:
    x, y, z = p
    return tuple(
        x * basis[0][i] + y * basis[1][i] + z * basis[2][i] for i in range(3)
    )


@lru_cache(maxsize=None)
def symmetry_group(board: Board) -> tuple[Symmetry, ...]:
    """All plane isometries (of the 12 hexagonal candidates) that map the
    cell set onto itself, as cell permutations.

    Always contains the identity; regular boards get the full group of 12,
    boards with exactly two equal sides get 4.
    """
    cubes = [cell.cube for cell in board.cells]
    cube_set = set(cubes)
    sorted_cubes = sorted(cube_set)
    group: list[Symmetry] = []
    for name, basis in _candidate_isometries():
        images = [_apply_basis(basis, p) for p in cubes]
        # Isometry + translation maps the set to itself iff the translated
        # image coincides with the cell set; anchor on the lexicographic min.
        anchor = min(images)
        t = tuple(sorted_cubes[0][i] - anchor[i] for i in range(3))
        translated = [(p[0] + t[0], p[1] + t[1], p[2] + t[2]) for p in images]
        if set(translated) != cube_set:
            continue
        cube_index = {p: i for i, p in enumerate(cubes)}
        perm = tuple(cube_index[p] for p in translated)
        group.append(Symmetry(name, perm))
    assert any(s.is_identity for s in group)
    return tuple(group)
