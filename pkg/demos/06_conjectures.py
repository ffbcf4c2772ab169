"""Exploratory solves of the conjecture boards.

These outcomes are reported, never asserted: the source material only
conjectures them.  The 14-cell game solves in seconds; pass --full to
also run the 19-cell game (~2.8e8 states, roughly 15-20 minutes and a
few GB of RAM).
"""

import sys
import time

from abalone_solver import BoardShape, Color, load_fixtures, solve
from abalone_solver.store import state_space

fixtures = load_fixtures()

shapes = [BoardShape(2, 3, 3)]
if "--full" in sys.argv:
    shapes.append(BoardShape(3, 3, 3))

for shape in shapes:
    config = fixtures.standard_config(shape)
    space = state_space(config)
    print(f"{shape} k={config.k}: {space.n_states} states")
    t0 = time.time()
    db = solve(config)
    start = config.initial
    print(f"  solved in {time.time() - t0:.1f} s")
    print(f"  stalemate states: {db.stalemate_count}")
    print(
        f"  CONJECTURE: o(start) = {db.outcome_class(start).label} "
        f"(B: {db.value(start, Color.BLACK)}; G: {db.value(start, Color.GRAY)})"
    )
