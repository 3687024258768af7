"""Drop-in approximators: deterministic algorithms dominating all blue vertices.

Both run the same greedy cover loop (always valid, always terminates, at
most n picks); they differ only in how ties between equally-covering
candidates are broken. Either can be swapped into the experiment pipelines
without touching anything else.
"""

import enum

import numpy as np

from .graph import degeneracy_order
from .kernels import greedy_cover_kernel


class Approximator(enum.Enum):
    GREEDY_COVER = "greedy"
    DEGENERACY_GUIDED = "degeneracy"


def approximate(inst, which=Approximator.GREEDY_COVER):
    """Greedy blue cover on a scratch copy of the color state.

    Repeatedly picks the vertex whose closed neighborhood contains the most
    blue vertices and recolors that neighborhood. GREEDY_COVER breaks ties
    toward the lowest vertex id; DEGENERACY_GUIDED toward the earliest
    position in the degeneracy ordering. Returns a valid solution set.
    """
    g = inst.graph
    if g.n == 0:
        return set()
    if which is Approximator.DEGENERACY_GUIDED:
        untie, _ = degeneracy_order(g)
        tie = np.empty(g.n, dtype=np.int64)
        tie[untie] = np.arange(g.n, dtype=np.int64)
    else:
        tie = np.arange(g.n, dtype=np.int64)
        untie = tie
    blue = inst.blue.copy()
    sol = greedy_cover_kernel(g.n, g.indptr, g.indices, blue, tie, untie)
    return set(int(v) for v in sol)
