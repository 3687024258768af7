"""Red-blue dominating set instances and the solution objective.

An instance is a graph plus a per-vertex color: blue vertices still need to
be dominated, red ones are already taken care of (but may still serve as
dominators). Solutions are plain vertex sets over the original graph; the
objective is the solution size, or INFEASIBLE when some blue vertex is left
undominated. INFEASIBLE compares greater than every integer.
"""

import math

import numpy as np

INFEASIBLE = math.inf


class RBInstance:
    """A graph with a blue/red vertex bipartition.

    Mutated in place by the reduction pipeline that owns it (rules only
    recolor blue to red); safe for concurrent reads once reductions finish.
    """

    __slots__ = ("graph", "blue")

    def __init__(self, graph, blue):
        blue = np.asarray(blue, dtype=np.bool_)
        if blue.shape != (graph.n,):
            raise ValueError(
                f"color vector length {blue.shape} does not match n={graph.n}"
            )
        self.graph = graph
        self.blue = blue

    @property
    def blue_count(self):
        return int(self.blue.sum())

    def blue_vertices(self):
        return np.flatnonzero(self.blue)

    def copy(self):
        return RBInstance(self.graph, self.blue.copy())

    def __repr__(self):
        return f"RBInstance(n={self.graph.n}, blue={self.blue_count})"


def all_blue(g):
    """The classical instance: every vertex must be dominated."""
    return RBInstance(g, np.ones(g.n, dtype=np.bool_))


def _solution_array(inst, s):
    arr = np.fromiter((int(v) for v in s), dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= inst.graph.n):
        raise ValueError("solution contains out-of-range vertex ids")
    return arr


def dominated_mask(inst, s):
    """Boolean mask of vertices inside the closed neighborhood of s."""
    g = inst.graph
    covered = np.zeros(g.n, dtype=np.bool_)
    arr = _solution_array(inst, s)
    for v in arr:
        covered[g.indices[g.indptr[v] : g.indptr[v + 1]]] = True
    covered[arr] = True
    return covered


def is_valid_solution(inst, s):
    """True iff every blue vertex lies in the closed neighborhood of s."""
    return bool((dominated_mask(inst, s) | ~inst.blue).all())


def ds_value(inst, s):
    """Solution size if s dominates all blue vertices, else INFEASIBLE."""
    s = set(int(v) for v in s)
    if is_valid_solution(inst, s):
        return len(s)
    return INFEASIBLE
