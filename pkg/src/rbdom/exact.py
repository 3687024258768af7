"""Exact minimum red-blue dominating set solvers.

``brute_force_min`` enumerates subsets and is the trusted reference at toy
sizes. ``exact_min`` is a branch-and-bound solver: it branches on a blue
vertex that is hardest to dominate (smallest closed neighborhood), prunes
with a packing lower bound (blue vertices with pairwise-disjoint closed
neighborhoods, each forcing one distinct solution vertex), and starts from
the greedy incumbent. The search budget is a deterministic work counter
derived from the requested time limit, so repeated runs return identical
results; see WORK_UNITS_PER_SECOND for the calibration.
"""

import sys
from itertools import combinations

import numpy as np

from .approx import Approximator, approximate
from .graph import closed_neighborhood

# Rough adjacency-touches-per-second of the pure-Python search loop; the
# time budget is converted through this constant so results stay
# deterministic instead of depending on wall-clock jitter.
WORK_UNITS_PER_SECOND = 300_000

BRUTE_FORCE_LIMIT = 24

# Proofs never realistically need solutions this deep; beyond it the search
# is reported unproven rather than risking the interpreter stack.
_DEPTH_CAP = 800


def brute_force_min(inst):
    """Minimum solution by subset enumeration, smallest size first.

    Ties resolve to the lexicographically least vertex tuple. Guarded to
    n <= 24; raises ValueError beyond that.
    """
    g = inst.graph
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"brute_force_min refused: n={n} exceeds limit {BRUTE_FORCE_LIMIT}"
        )
    blue_mask = 0
    for v in np.flatnonzero(inst.blue):
        blue_mask |= 1 << int(v)
    if blue_mask == 0:
        return set()
    ball = [0] * n
    for v in range(n):
        b = 1 << v
        for u in g.neighbors(v):
            b |= 1 << int(u)
        ball[v] = b
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            covered = 0
            for v in combo:
                covered |= ball[v]
            if covered & blue_mask == blue_mask:
                return set(combo)
    raise AssertionError("unreachable: the full vertex set dominates everything")


class _Budget:
    __slots__ = ("left",)

    def __init__(self, units):
        self.left = units

    def spend(self, amount):
        self.left -= amount
        return self.left > 0


def _packing_lower_bound(g, blue, dom, by_ball, used, budget):
    """Greedy count of undominated blue vertices with disjoint closed balls.

    Any valid solution needs one vertex inside each such ball, so the count
    lower-bounds the remaining solution size.
    """
    used.fill(False)
    count = 0
    for v in by_ball:
        if dom[v] or not blue[v]:
            continue
        row = g.indices[g.indptr[v] : g.indptr[v + 1]]
        budget.spend(row.size + 1)
        if used[v] or used[row].any():
            continue
        used[v] = True
        used[row] = True
        count += 1
    return count


def exact_min(inst, time_budget=30.0):
    """Branch-and-bound minimum solution under a deterministic budget.

    Returns (solution, proven_optimal, lower_bound). On budget expiry the
    incumbent found so far comes back with proven_optimal=False and the
    root packing bound as lower_bound; lower_bound always holds, and equals
    the solution size when proven.
    """
    if time_budget <= 0:
        raise ValueError(f"time budget must be positive, got {time_budget}")
    g = inst.graph
    n = g.n
    blue = inst.blue

    best = sorted(approximate(inst, Approximator.GREEDY_COVER))
    best_size = len(best)
    if best_size == 0:
        return set(), True, 0

    budget = _Budget(max(10_000, int(time_budget * WORK_UNITS_PER_SECOND)))

    ball_size = np.diff(g.indptr) + 1
    blue_ids = np.flatnonzero(blue)
    by_ball = blue_ids[np.lexsort((blue_ids, ball_size[blue_ids]))]

    dom = np.zeros(n, dtype=np.bool_)
    used = np.zeros(n, dtype=np.bool_)
    banned = np.zeros(n, dtype=np.bool_)
    root_lb = _packing_lower_bound(g, blue, dom, by_ball, used, budget)
    if root_lb >= best_size:
        return set(best), True, best_size

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * _DEPTH_CAP))
    chosen = []
    blue_left = int(blue_ids.size)
    truncated = False

    def dfs(scan_from):
        nonlocal best, best_size, blue_left, truncated
        if truncated:
            return
        if blue_left == 0:
            if len(chosen) < best_size:
                best = list(chosen)
                best_size = len(best)
            return
        if len(chosen) + 1 >= best_size:
            return
        if len(chosen) >= _DEPTH_CAP:
            truncated = True
            return
        lb = _packing_lower_bound(g, blue, dom, by_ball, used, budget)
        if not budget.spend(0):
            truncated = True
            return
        if len(chosen) + lb >= best_size:
            return
        # branch on the first (smallest closed ball) undominated blue vertex
        i = scan_from
        while dom[by_ball[i]]:
            i += 1
        v = int(by_ball[i])
        options = [u for u in closed_neighborhood(g, v) if not banned[u]]
        newly_banned = []
        for u in options:
            u = int(u)
            undo = []
            for w in closed_neighborhood(g, u):
                w = int(w)
                if not dom[w]:
                    dom[w] = True
                    undo.append(w)
                    if blue[w]:
                        blue_left -= 1
            budget.spend(len(undo) + 1)
            chosen.append(u)
            dfs(i)
            chosen.pop()
            for w in undo:
                dom[w] = False
                if blue[w]:
                    blue_left += 1
            if truncated:
                break
            # solutions containing u were fully explored above
            banned[u] = True
            newly_banned.append(u)
        for u in newly_banned:
            banned[u] = False

    dfs(0)
    if best_size <= root_lb or not truncated:
        return set(best), True, best_size
    return set(best), False, root_lb
