"""The HTTP play service, driven end to end in process.

A session walks the safe corridor of the 10-cell game: the human plays
the drawing first move, the engine answers with one of its two safe
replies, and every candidate move arrives annotated with its
perfect-play value.
"""

from fastapi.testclient import TestClient

from abalone_solver import BoardShape, canonicalize, load_fixtures, parse_constellation, solve
from abalone_solver.service import create_app

fixtures = load_fixtures()
db = solve(fixtures.standard_config(BoardShape(2, 2, 3)))
client = TestClient(create_app(db))

state = client.post(
    "/sessions", json={"shape": "2,2,3", "k": 1, "human": "black"}
).json()
sid = state["session"]
print("new session", sid, "at", state["board"], "o =", state["outcome_class"])

moves = client.get(f"/sessions/{sid}/moves").json()
print("\nBlack's annotated options:")
for m in moves:
    print(f"  {m['label']:24} -> {m['value']['result']}")

safe = next(m for m in moves if m["value"]["result"] == "draw")
state = client.post(f"/sessions/{sid}/moves", json={"move": safe["uid"]}).json()
print("\nhuman plays", safe["uid"], "->", state["board"])

state = client.post(f"/sessions/{sid}/engine-move").json()
reply = parse_constellation(state["board"])
c2 = canonicalize(fixtures.board("C2"))
c3 = canonicalize(fixtures.board("C3"))
which = "C2" if canonicalize(reply) == c2 else "C3" if canonicalize(reply) == c3 else "?"
print("engine replies ->", state["board"], f"(isomorphic to {which})")
print("game status:", state["status"], "| outcome class:", state["outcome_class"])
