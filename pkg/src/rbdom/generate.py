"""Seeded random graph generators.

Five models, all driven by numpy's default PRNG: binomial G(n, p) with
p = avg_deg/n, uniform G(n, m) with m = round(n * avg_deg / 2), Watts-Strogatz
ring rewiring, random d-regular via the pairing model with restarts, and
preferential attachment seeded with a clique on ``attach`` vertices (so
m = attach * (n - attach) + attach * (attach - 1) / 2). Outputs are
deterministic per (parameters, seed) within this implementation; no attempt
is made to match any other library's edge stream.
"""

import math

import numpy as np

from .graph import build_graph


def gen_gnp(n, avg_deg, seed):
    """Each unordered pair becomes an edge independently with p = avg_deg/n.

    Pairs are visited through geometric gap skipping, so the cost scales
    with the number of edges produced rather than n^2.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 < avg_deg < n:
        raise ValueError(f"need 0 < avg_deg < n, got avg_deg={avg_deg}")
    p = avg_deg / n
    total = n * (n - 1) // 2
    rng = np.random.default_rng(seed)
    log_q = math.log1p(-p)

    picked = []
    last = -1
    block = max(1024, int(total * p * 1.2))
    while last < total - 1:
        u = rng.random(block)
        np.clip(u, 1e-300, None, out=u)
        gaps = np.floor(np.log(u) / log_q).astype(np.int64) + 1
        positions = last + np.cumsum(gaps)
        picked.append(positions[positions <= total - 1])
        last = int(positions[-1])
    if not picked:
        return build_graph(n, [])
    t = np.concatenate(picked)

    # linear index t of pair (a, b), a < b, is b*(b-1)/2 + a
    b = ((1.0 + np.sqrt(1.0 + 8.0 * t)) / 2.0).astype(np.int64)
    b -= b * (b - 1) // 2 > t
    b += b * (b + 1) // 2 <= t
    a = t - b * (b - 1) // 2
    return build_graph(n, np.column_stack([a, b]))


def gen_gnm(n, avg_deg, seed):
    """Exactly m = round(n * avg_deg / 2) distinct edges, uniform over edge sets.

    Samples unordered pairs with rejection until m distinct ones have been
    accepted, which is the uniform-model process itself.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    m = int(round(n * avg_deg / 2))
    total = n * (n - 1) // 2
    if m < 0 or m > total:
        raise ValueError(f"edge count {m} outside [0, {total}] for n={n}")
    rng = np.random.default_rng(seed)
    chosen = set()
    while len(chosen) < m:
        k = max(64, int((m - len(chosen)) * 1.3))
        us = rng.integers(0, n, size=k).tolist()
        vs = rng.integers(0, n, size=k).tolist()
        for u, v in zip(us, vs):
            if u == v:
                continue
            e = (u, v) if u < v else (v, u)
            if e not in chosen:
                chosen.add(e)
                if len(chosen) == m:
                    break
    return build_graph(n, sorted(chosen))


def gen_watts_strogatz(n, d, p, seed):
    """Ring lattice with d//2 neighbors per side, each edge rewired w.p. p.

    Rewiring replaces (u, v) by (u, w) for a uniform w; draws that would
    create a loop or duplicate are skipped, so the edge count stays exactly
    n * (d // 2). Edges are scanned offset-major: offset 1 around the ring,
    then offset 2, and so on.
    """
    if not d >= 2:
        raise ValueError(f"need d >= 2, got {d}")
    if not n > d:
        raise ValueError(f"need n > d, got n={n}, d={d}")
    if not 0 <= p <= 1:
        raise ValueError(f"need 0 <= p <= 1, got {p}")
    rng = np.random.default_rng(seed)
    half = d // 2
    ring = [(u, (u + off) % n) for off in range(1, half + 1) for u in range(n)]
    present = set((u, v) if u < v else (v, u) for u, v in ring)
    edges = []
    for u, v in ring:
        key = (u, v) if u < v else (v, u)
        if rng.random() < p:
            w = int(rng.integers(0, n))
            new = (u, w) if u < w else (w, u)
            if w != u and new not in present:
                present.discard(key)
                present.add(new)
                edges.append(new)
                continue
        edges.append(key)
    return build_graph(n, edges)


def gen_random_regular(n, d, seed):
    """Random d-regular simple graph via the pairing model with restarts."""
    if d < 0 or d >= n:
        raise ValueError(f"need 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    if d == 0:
        return build_graph(n, [])
    while True:
        edges = _pairing_attempt(n, d, rng)
        if edges is not None:
            return build_graph(n, edges)


def _pairing_attempt(n, d, rng):
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    edges = set()
    while stubs.size:
        rng.shuffle(stubs)
        leftover = []
        progress = False
        it = stubs.tolist()
        for i in range(0, len(it) - 1, 2):
            u, v = it[i], it[i + 1]
            e = (u, v) if u < v else (v, u)
            if u == v or e in edges:
                leftover.append(u)
                leftover.append(v)
            else:
                edges.add(e)
                progress = True
        if leftover and not progress:
            return None  # stuck; caller restarts with fresh randomness
        stubs = np.asarray(leftover, dtype=np.int64)
    return sorted(edges)


def gen_barabasi_albert(n, attach, seed):
    """Preferential attachment on a clique seed of ``attach`` vertices.

    Every later vertex attaches to ``attach`` distinct existing vertices
    drawn proportionally to degree (uniformly while no edge exists yet).
    """
    if not 1 <= attach < n:
        raise ValueError(f"need 1 <= attach < n, got attach={attach}, n={n}")
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(attach) for j in range(i + 1, attach)]
    endpoints = [v for e in edges for v in e]
    for v in range(attach, n):
        targets = set()
        while len(targets) < attach:
            if endpoints:
                targets.add(endpoints[int(rng.integers(0, len(endpoints)))])
            else:
                targets.add(int(rng.integers(0, v)))
        for t in sorted(targets):
            edges.append((v, t))
            endpoints.append(v)
            endpoints.append(t)
    return build_graph(n, edges)
