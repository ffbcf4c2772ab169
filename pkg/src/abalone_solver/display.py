"""Plain-text rendering of boards and constellations."""

from __future__ import annotations

from .geometry import Board, Cell
from .rules import Constellation


def render(constellation: Constellation, labels: bool = False) -> str:
    """ASCII picture of the board, columns left to right.

    Marbles print as B/G, empty cells as '.'; with ``labels`` the cells
    print their scan-order letters instead.
    """
    board = constellation.board
    max_col = max(cell.col for cell in board.cells)
    rows = sorted({cell.row for cell in board.cells}, reverse=True)
    lines = []
    for r in rows:
        chars = []
        for col in range(max_col + 1):
            i = board.index.get(Cell(col, r))
            if i is None:
                chars.append(" ")
            elif labels:
                chars.append(board.label(i))
            else:
                chars.append(".BG"[constellation.at(i)])
        lines.append((" ".join(chars)).rstrip())
    return "\n".join(lines)


def render_board(board: Board) -> str:
    return render(Constellation(board, bytes(board.n)), labels=True)
