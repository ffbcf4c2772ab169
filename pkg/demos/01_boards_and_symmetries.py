"""Boards, adjacency and symmetry groups.

Hexagonal boards are described by three side lengths (a, b, c); the
perimeter runs a, b, c, a, b, c.  Cells serialize in scan order (columns
left to right, bottom to top), which gives every constellation a stable
string notation like "2,2,3:G.BG..BG.B".
"""

from abalone_solver import BoardShape, build_board, parse_constellation, symmetry_group, transform
from abalone_solver.display import render, render_board

for sides in [(2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 3, 3)]:
    shape = BoardShape(*sides)
    board = build_board(shape)
    group = symmetry_group(board)
    print(f"{shape}: {board.n} cells, symmetry group of order {len(group)}")

print("\nThe 10-cell board with its scan-order labels:")
print(render_board(build_board(BoardShape(2, 2, 3))))

# A regular hexagon keeps the full 12-element dihedral group; stretching
# one side leaves only the identity, the half turn and two mirrors.
board = build_board(BoardShape(2, 2, 3))
print("\n2,2,3 symmetries:", [s.name for s in symmetry_group(board)])

start = parse_constellation("2,2,3:G.BG..BG.B")
print("\nThe 2x2x3 starting board and its half-turn image:")
print(render(start))
rot = next(s for s in symmetry_group(board) if s.name == "rot180")
print()
print(render(transform(start, rot)))
