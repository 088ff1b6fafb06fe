"""Balanced separators, heavy-vertex selection and the bucket potential.

Every accept/reject decision here is an integer comparison with the
threshold fraction cross-multiplied out; floats appear only in
:func:`potential`, which is telemetry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvariantViolation, NotPtFree
from .graph import Graph, bits, closed_neighborhood, components, lowest
from .paths import ColoredPathIndex, PathIndex


@dataclass(frozen=True)
class SeparatorResult:
    x: int
    halo: int
    component_sizes: list[int]
    path: tuple[int, ...] = ()


@dataclass
class HeavyVertexReport:
    w: int
    hit_buckets: int
    total_buckets: int
    per_bucket_hits: dict[tuple[int, int], int] = field(default_factory=dict)
    color: int | None = None


def _big_component(g: Graph, rest: int, n: int) -> int:
    for comp in components(g, rest):
        if 2 * comp.bit_count() > n:
            return comp
    return 0


def gyarfas_separator(g: Graph, active: int, t: int) -> SeparatorResult:
    """Grow an induced path ``X`` until no component of ``active - N[X]`` is
    larger than half of ``active``.

    The next vertex is the smallest-id neighbour of the path's last vertex
    that lies in the previous large component and touches the current one.
    Each step keeps ``X`` an induced path, so reaching ``t`` vertices yields
    an induced ``P_t``, raised as NotPtFree.
    """
    if active == 0:
        raise InvariantViolation("separator requested for an empty vertex set")
    if len(components(g, active)) != 1:
        raise InvariantViolation("separator requires a connected active set")
    n = active.bit_count()
    path = [lowest(active)]
    x = 1 << path[0]
    prev_big = active
    big = _big_component(g, active & ~closed_neighborhood(g, x), n)
    while big:
        touching = 0
        for v in bits(big):
            touching |= g.adj[v]
        cand = g.adj[path[-1]] & prev_big & touching
        if not cand:
            raise InvariantViolation("no extension of the separator path exists")
        path.append(lowest(cand))
        x |= 1 << path[-1]
        if len(path) >= t:
            raise NotPtFree(tuple(path[:t]), t)
        prev_big = big
        big = _big_component(g, active & ~closed_neighborhood(g, x), n)
    halo = closed_neighborhood(g, x) & active
    sizes = [c.bit_count() for c in components(g, active & ~halo)]
    return SeparatorResult(x, halo, sizes, tuple(path))


def covered_buckets(idx: PathIndex, halo: int) -> int:
    """Number of buckets in which every path meets ``halo``."""
    return sum(
        all(any(halo >> v & 1 for v in p) for p in bucket)
        for bucket in idx.buckets.values()
    )


def _per_bucket(hits: np.ndarray, sizes: np.ndarray) -> np.ndarray:
    offsets = np.concatenate(([0], np.cumsum(sizes)[:-1]))
    return np.add.reduceat(hits.astype(np.int64), offsets, axis=0)


def hit_counts(g: Graph, idx: PathIndex) -> np.ndarray:
    """``(buckets, n)`` array: paths of each bucket meeting ``N[w]``, per vertex ``w``."""
    pairs, sizes, members = idx.arrays
    if len(sizes) == 0:
        return np.zeros((0, g.n), dtype=np.int64)
    hits = g.closed_matrix[members].any(axis=1)
    return _per_bucket(hits, sizes)


def find_heavy_vertex(g: Graph, active: int, idx: PathIndex, t: int) -> HeavyVertexReport:
    """Active vertex that ``1/(2t)``-hits the most buckets (smallest id on ties).

    A bucket ``B`` is hit when ``2t * |paths of B meeting N[w]| >= |B|``.
    Raises InvariantViolation unless ``4t * hit_buckets >= n(n-1)``.
    """
    n = active.bit_count()
    if n < 2:
        raise InvariantViolation("heavy vertex needs at least two active vertices")
    pairs, sizes, _ = idx.arrays
    counts = hit_counts(g, idx)
    qualifies = 2 * t * counts >= sizes[:, None]
    per_vertex = qualifies.sum(axis=0)
    inactive = [v for v in range(g.n) if not active >> v & 1]
    per_vertex[inactive] = -1
    w = int(np.argmax(per_vertex))
    hit = int(per_vertex[w])
    if 4 * t * hit < n * (n - 1):
        raise InvariantViolation(
            f"no 1/(2t)-heavy vertex: best {w} hits {hit} of {n * (n - 1) // 2} buckets"
        )
    per_bucket = {
        (int(u), int(v)): int(c) for (u, v), c in zip(pairs, counts[:, w])
    }
    return HeavyVertexReport(w, hit, n * (n - 1) // 2, per_bucket)


def colored_threshold(t: int) -> int:
    """Denominator of the colored hitting fraction, ``8t * 3^(t-1)``."""
    return 8 * t * 3 ** (t - 1)


def find_heavy_vertex_color(
    g: Graph, active: int, cidx: ColoredPathIndex, t: int, lists
) -> tuple[int, int, HeavyVertexReport]:
    """Pair ``(w, c)`` with ``c`` in ``L(w)`` qualifying in the most buckets.

    A bucket qualifies when at least a ``1/(8t 3^(t-1))`` fraction of its
    colored paths contain a vertex of ``N[w]`` colored ``c``.  Ties go to
    the lexicographically smallest ``(w, c)``.  Raises InvariantViolation
    unless ``8t * q >= C(n, 2)``.
    """
    n = active.bit_count()
    if n < 2:
        raise InvariantViolation("heavy pair needs at least two active vertices")
    pairs, sizes, members, colors = cidx.arrays
    scale = colored_threshold(t)
    score = np.full((g.n, 3), -1, dtype=np.int64)
    counts_by_color = []
    for c in (1, 2, 3):
        if len(sizes):
            hits = g.closed_matrix[np.where(colors == c, members, g.n)].any(axis=1)
            counts = _per_bucket(hits, sizes)
        else:
            counts = np.zeros((0, g.n), dtype=np.int64)
        counts_by_color.append(counts)
        q = (scale * counts >= sizes[:, None]).sum(axis=0)
        for w in bits(active):
            if lists[w] >> (c - 1) & 1:
                score[w, c - 1] = q[w]
    flat = int(np.argmax(score))
    w, c = divmod(flat, 3)
    c += 1
    q = int(score[w, c - 1])
    total = n * (n - 1) // 2
    if q < 0 or 16 * t * q < n * (n - 1):
        raise InvariantViolation(
            f"no heavy (vertex, color) pair: best ({w}, {c}) qualifies in {q} of {total}"
        )
    counts = counts_by_color[c - 1]
    per_bucket = {(int(u), int(v)): int(k) for (u, v), k in zip(pairs, counts[:, w])}
    return w, c, HeavyVertexReport(w, q, total, per_bucket, color=c)


def potential(idx: PathIndex, t: int) -> float:
    """Sum over buckets of ``-log_(1 - 1/2t)(1 + |B|)``; empty buckets add 0."""
    base = -math.log1p(-1.0 / (2 * t))
    return sum(math.log1p(len(b)) for b in idx.buckets.values()) / base


def shrunk_buckets(parent: PathIndex, child: PathIndex, t: int) -> int:
    """Parent buckets that lost at least a ``1/(2t)`` fraction of their paths in ``child``."""
    count = 0
    for pair, bucket in parent.buckets.items():
        before = len(bucket)
        after = child.size(*pair)
        if 2 * t * (before - after) >= before:
            count += 1
    return count


def required_shrinkage(n: int, t: int) -> int:
    """``ceil(C(n, 2) / (2t))``."""
    return -(-(n * (n - 1) // 2) // (2 * t))
