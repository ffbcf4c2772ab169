"""Numba kernels for the retrograde win/loss/draw fixpoint.

States live in the ranked space of store.StateSpace: index = rank * 2 +
mover (0 black, 1 gray).  Values are 0 unknown/draw, 1 black wins, 2 gray
wins.  The forward pass counts each state's legal moves and seeds the
queue with immediate wins and stalemate losses; the backward pass pops
labeled states and un-applies moves to reach their predecessors, using
out-degree counters to detect forced losses.  Draws are whatever the
fixpoint never labels.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

UNKNOWN = np.uint8(0)


@njit(cache=True, inline="always")
def _unrank(rank, n, table, contents):
    bu = 0
    gu = 0
    for i in range(n):
        skip = table[i + 1, bu, gu]
        if rank < skip:
            contents[i] = 0
        else:
            rank -= skip
            skip = table[i + 1, bu + 1, gu]
            if rank < skip:
                contents[i] = 1
                bu += 1
            else:
                rank -= skip
                contents[i] = 2
                gu += 1


@njit(cache=True, inline="always")
def _rank(contents, n, table):
    r = 0
    bu = 0
    gu = 0
    for i in range(n):
        v = contents[i]
        if v != 0:
            r += table[i + 1, bu, gu]
            if v == 2:
                r += table[i + 1, bu + 1, gu]
                gu += 1
            else:
                bu += 1
    return r


@njit(cache=True)
def _count_moves(contents, nbr, n, mv):
    """(number of legal moves, whether any move ejects an opposing marble)."""
    ov = 3 - mv
    count = 0
    eject = False
    for c0 in range(n):
        if contents[c0] != mv:
            continue
        for d in range(6):
            f = nbr[c0, d]
            if f >= 0 and contents[f] == 0:
                count += 1
        for axis in range(3):
            c1 = nbr[c0, axis]
            if c1 < 0 or contents[c1] != mv:
                continue
            c2 = nbr[c1, axis]
            has3 = c2 >= 0 and contents[c2] == mv
            for k in range(2, 4):
                if k == 3 and not has3:
                    break
                high = c2 if k == 3 else c1
                # in-line, both orientations
                for sign in range(2):
                    if sign == 0:
                        d = axis
                        front = nbr[high, d]
                    else:
                        d = axis + 3
                        front = nbr[c0, d]
                    if front < 0:
                        continue
                    fv = contents[front]
                    if fv == 0:
                        count += 1
                    elif fv == ov:
                        j = 1
                        cur = nbr[front, d]
                        while cur >= 0 and contents[cur] == ov and j < k:
                            j += 1
                            cur = nbr[cur, d]
                        if j < k:
                            if cur < 0:
                                count += 1
                                eject = True
                            elif contents[cur] == 0:
                                count += 1
                # broadside
                for d in range(6):
                    if d % 3 == axis:
                        continue
                    t0 = nbr[c0, d]
                    if t0 < 0 or contents[t0] != 0:
                        continue
                    t1 = nbr[c1, d]
                    if t1 < 0 or contents[t1] != 0:
                        continue
                    if k == 3:
                        t2 = nbr[c2, d]
                        if t2 < 0 or contents[t2] != 0:
                            continue
                    count += 1
    return count, eject


@njit(cache=True, parallel=True)
def forward_pass(table, nbr, n, m, k_win, value, dist, out_deg, n_constellations, n_chunks):
    """Count out-degrees; label stalemate losses (dist 0) and states with a
    game-winning push (dist 1).  Returns the stalemate count."""
    stale = np.zeros(n_chunks, dtype=np.int64)
    chunk = (n_constellations + n_chunks - 1) // n_chunks
    for ci in prange(n_chunks):
        contents = np.empty(n, dtype=np.uint8)
        lo = ci * chunk
        hi = min(n_constellations, lo + chunk)
        for r in range(lo, hi):
            _unrank(r, n, table, contents)
            nb = 0
            ng = 0
            for i in range(n):
                if contents[i] == 1:
                    nb += 1
                elif contents[i] == 2:
                    ng += 1
            for mover in range(2):
                idx = (r << 1) | mover
                mv = mover + 1
                count, eject = _count_moves(contents, nbr, n, mv)
                out_deg[idx] = count
                if count == 0:
                    value[idx] = 2 - mover  # mover is stalemated and loses
                    dist[idx] = 0
                    stale[ci] += 1
                else:
                    opp_on = ng if mover == 0 else nb
                    if eject and m - opp_on == k_win - 1:
                        value[idx] = mover + 1
                        dist[idx] = 1
    return stale.sum()


@njit(cache=True, inline="always")
def _visit(contents, n, table, pm, pm_wins, v, dnext, value, dist, out_deg, queue, tail):
    """Handle one predecessor (already edited into `contents`)."""
    s_idx = (_rank(contents, n, table) << 1) | pm
    if value[s_idx] == UNKNOWN:
        if pm_wins:
            value[s_idx] = pm + 1
            dist[s_idx] = dnext
            queue[tail] = s_idx
            tail += 1
        else:
            out_deg[s_idx] -= 1
            if out_deg[s_idx] == 0:
                value[s_idx] = v
                dist[s_idx] = dnext
                queue[tail] = s_idx
                tail += 1
    return tail


@njit(cache=True)
def backward_pass(table, nbr, n, m, value, dist, out_deg, queue, tail):
    """Retrograde propagation from the seeded queue to the fixpoint."""
    contents = np.empty(n, dtype=np.uint8)
    head = 0
    while head < tail:
        t_idx = queue[head]
        head += 1
        v = value[t_idx]
        dnext = dist[t_idx] + 1
        mt = t_idx & 1
        pm = 1 - mt  # the player whose move produced this state
        pmv = pm + 1
        ov = 3 - pmv
        pm_wins = v == pmv
        _unrank(t_idx >> 1, n, table, contents)
        opp_on = 0
        for i in range(n):
            if contents[i] == ov:
                opp_on += 1
        can_uneject = opp_on < m
        for c0 in range(n):
            if contents[c0] != pmv:
                continue
            # k = 1: the marble slid from an adjacent cell
            for d in range(6):
                back = nbr[c0, (d + 3) % 6]
                if back >= 0 and contents[back] == 0:
                    contents[c0] = 0
                    contents[back] = pmv
                    tail = _visit(
                        contents, n, table, pm, pm_wins, v, dnext,
                        value, dist, out_deg, queue, tail,
                    )
                    contents[back] = 0
                    contents[c0] = pmv
            for axis in range(3):
                c1 = nbr[c0, axis]
                if c1 < 0 or contents[c1] != pmv:
                    continue
                c2 = nbr[c1, axis]
                has3 = c2 >= 0 and contents[c2] == pmv
                for k in range(2, 4):
                    if k == 3 and not has3:
                        break
                    high = c2 if k == 3 else c1
                    # undo in-line moves along both orientations
                    for sign in range(2):
                        if sign == 0:
                            d = axis
                            head_cell = high
                            rear = c0
                        else:
                            d = axis + 3
                            head_cell = c0
                            rear = high
                        vacated = nbr[rear, (d + 3) % 6]
                        if vacated < 0 or contents[vacated] != 0:
                            continue
                        # plain slide
                        contents[head_cell] = 0
                        contents[vacated] = pmv
                        tail = _visit(
                            contents, n, table, pm, pm_wins, v, dnext,
                            value, dist, out_deg, queue, tail,
                        )
                        contents[vacated] = 0
                        contents[head_cell] = pmv
                        # sumito: 1 or 2 opposing marbles ahead of the head
                        f1 = nbr[head_cell, d]
                        for j in range(1, k):
                            # cells head+1..head+j-1 hold survivors; the
                            # cell head+j is the pushed-from spot.
                            ok = True
                            cur = f1
                            for _ in range(j - 1):
                                if cur < 0 or contents[cur] != ov:
                                    ok = False
                                    break
                                cur = nbr[cur, d]
                            if not ok:
                                break
                            # cur is now the j-th cell past the head
                            if cur >= 0 and contents[cur] == ov:
                                # un-push within the board
                                contents[cur] = 0
                                contents[head_cell] = ov
                                contents[vacated] = pmv
                                tail = _visit(
                                    contents, n, table, pm, pm_wins, v, dnext,
                                    value, dist, out_deg, queue, tail,
                                )
                                contents[vacated] = 0
                                contents[head_cell] = pmv
                                contents[cur] = ov
                            elif cur < 0 and can_uneject:
                                # un-push that brings an ejected marble back
                                contents[head_cell] = ov
                                contents[vacated] = pmv
                                tail = _visit(
                                    contents, n, table, pm, pm_wins, v, dnext,
                                    value, dist, out_deg, queue, tail,
                                )
                                contents[vacated] = 0
                                contents[head_cell] = pmv
                    # undo broadside moves
                    for d in range(6):
                        if d % 3 == axis:
                            continue
                        back = (d + 3) % 6
                        s0 = nbr[c0, back]
                        if s0 < 0 or contents[s0] != 0:
                            continue
                        s1 = nbr[c1, back]
                        if s1 < 0 or contents[s1] != 0:
                            continue
                        s2 = -1
                        if k == 3:
                            s2 = nbr[c2, back]
                            if s2 < 0 or contents[s2] != 0:
                                continue
                        contents[c0] = 0
                        contents[c1] = 0
                        contents[s0] = pmv
                        contents[s1] = pmv
                        if k == 3:
                            contents[c2] = 0
                            contents[s2] = pmv
                        tail = _visit(
                            contents, n, table, pm, pm_wins, v, dnext,
                            value, dist, out_deg, queue, tail,
                        )
                        contents[s0] = 0
                        contents[s1] = 0
                        contents[c0] = pmv
                        contents[c1] = pmv
                        if k == 3:
                            contents[s2] = 0
                            contents[c2] = pmv
    return head
