"""Induced-path enumeration, endpoint buckets and P_t-freeness certificates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

from .errors import NotPtFree
from .graph import Graph, bits, colors_of, lowest

Pair = tuple[int, int]
Path = tuple[int, ...]


class ColoredPath(NamedTuple):
    path: Path
    colors: tuple[int, ...]


def _canonical(path: Path) -> Path:
    return path if path[0] < path[-1] else path[::-1]


def _walk(g: Graph, active: int, t: int) -> Iterator[Path]:
    """Yield every induced path on 2..t-1 vertices of ``g[active]`` once.

    A partial path extends by an active neighbour of its last vertex that
    avoids the closed neighbourhoods of all earlier vertices.  Both
    orientations are walked; only the one with the smaller first id is
    yielded.  Raises NotPtFree as soon as a (t-1)-vertex path extends.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    adj, closed = g.adj, g.closed
    limit = t - 1
    for s in bits(active):
        cand = adj[s] & active
        if limit == 1:
            if cand:
                raise NotPtFree((s, lowest(cand)), t)
            continue
        stack = [((s,), 0)]
        while stack:
            path, blocked = stack.pop()
            last = path[-1]
            cand = adj[last] & active & ~blocked
            if not cand:
                continue
            if len(path) == limit:
                raise NotPtFree(_canonical(path + (lowest(cand),)), t)
            blocked |= closed[last]
            for x in bits(cand):
                ext = path + (x,)
                if s < x:
                    yield ext
                stack.append((ext, blocked))


@dataclass(frozen=True)
class PathIndex:
    """All induced paths of ``g[active]`` on fewer than ``t`` vertices.

    ``buckets`` maps an endpoint pair ``(u, v)`` with ``u < v`` to its
    paths in sorted order; pairs with no path have no entry.
    """

    graph: Graph
    active: int
    t: int
    buckets: dict[Pair, tuple[Path, ...]]

    @cached_property
    def total_paths(self) -> int:
        return sum(len(b) for b in self.buckets.values())

    def size(self, u: int, v: int) -> int:
        return len(self.buckets.get((min(u, v), max(u, v)), ()))

    def paths(self) -> Iterator[Path]:
        for b in self.buckets.values():
            yield from b

    @cached_property
    def longest(self) -> Path | None:
        return max(self.paths(), key=len, default=None)

    @cached_property
    def arrays(self):
        """Bucket-major numpy view: ``(pairs, sizes, members)``.

        ``members`` is a ``(total_paths, t-1)`` int array of vertex ids padded
        with ``graph.n``; rows are grouped by bucket in the order of ``pairs``.
        """
        return _pack(self.graph.n, self.t - 1, self.buckets.items(), lambda p: p)


@dataclass(frozen=True)
class ColoredPathIndex:
    """Induced paths paired with each of their proper list colourings."""

    graph: Graph
    active: int
    t: int
    lists: tuple[int, ...]
    buckets: dict[Pair, tuple[ColoredPath, ...]]

    @cached_property
    def total(self) -> int:
        return sum(len(b) for b in self.buckets.values())

    @cached_property
    def arrays(self):
        """Like :attr:`PathIndex.arrays`, plus a ``colors`` array aligned with
        ``members`` (0 in padding slots)."""
        pairs, sizes, members = _pack(
            self.graph.n, self.t - 1, self.buckets.items(), lambda cp: cp.path
        )
        colors = np.zeros_like(members)
        row = 0
        for _, bucket in self.buckets.items():
            for cp in bucket:
                colors[row, : len(cp.colors)] = cp.colors
                row += 1
        return pairs, sizes, members, colors


def _pack(n, width, items, get_path):
    items = list(items)
    pairs = np.array([p for p, _ in items], dtype=np.int64).reshape(-1, 2)
    sizes = np.array([len(b) for _, b in items], dtype=np.int64)
    members = np.full((int(sizes.sum()), max(width, 1)), n, dtype=np.int64)
    row = 0
    for _, bucket in items:
        for entry in bucket:
            path = get_path(entry)
            members[row, : len(path)] = path
            row += 1
    return pairs, sizes, members


def _bucketize(paths) -> dict[Pair, tuple]:
    buckets: dict[Pair, list] = {}
    for key, item in paths:
        buckets.setdefault(key, []).append(item)
    return {k: tuple(sorted(buckets[k])) for k in sorted(buckets)}


def enumerate_induced_paths(g: Graph, active: int | None = None, t: int = 5) -> PathIndex:
    """Bucket every induced path of ``g[active]`` on 2..t-1 vertices by its endpoints.

    Raises NotPtFree with an induced t-vertex path if one is found.
    """
    if active is None:
        active = g.full
    buckets = _bucketize(((p[0], p[-1]), p) for p in _walk(g, active, t))
    return PathIndex(g, active, t, buckets)


def is_pt_free(g: Graph, active: int | None = None, t: int = 5) -> tuple[bool, Path | None]:
    """Return ``(True, None)`` or ``(False, witness)`` with an induced t-vertex path."""
    if active is None:
        active = g.full
    try:
        for _ in _walk(g, active, t):
            pass
    except NotPtFree as exc:
        return False, exc.certificate
    return True, None


def path_colorings(path: Path, lists) -> list[tuple[int, ...]]:
    """All proper colourings of ``path`` respecting ``lists``, in lexicographic order."""
    partial = [(c,) for c in colors_of(lists[path[0]])]
    for v in path[1:]:
        allowed = colors_of(lists[v])
        partial = [p + (c,) for p in partial for c in allowed if c != p[-1]]
    return partial


def color_index(idx: PathIndex, lists) -> ColoredPathIndex:
    """Expand every path of ``idx`` into its proper list colourings."""
    buckets = {}
    for pair, bucket in idx.buckets.items():
        colored = tuple(
            ColoredPath(p, cols) for p in bucket for cols in path_colorings(p, lists)
        )
        if colored:
            buckets[pair] = colored
    return ColoredPathIndex(idx.graph, idx.active, idx.t, tuple(lists), buckets)


def enumerate_colored_paths(
    g: Graph, active: int | None, t: int, lists
) -> ColoredPathIndex:
    if active is None:
        active = g.full
    return color_index(enumerate_induced_paths(g, active, t), lists)


def bucket_report(idx) -> dict:
    """Per-bucket sizes plus total and maximum, for either index kind."""
    sizes = {pair: len(b) for pair, b in idx.buckets.items()}
    return {
        "buckets": len(sizes),
        "sizes": sizes,
        "total": sum(sizes.values()),
        "max": max(sizes.values(), default=0),
    }
