"""Graph representation, vertex-set helpers and instance I/O.

Vertex sets are plain Python ints used as bit masks: bit ``v`` is set iff
vertex ``v`` is a member.  Union, intersection and difference are ``|``,
``&`` and ``& ~``; membership is ``mask >> v & 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import ParseError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

ALL_COLORS = 0b111


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def checked_add(a: int, b: int) -> int:
    """Add two int64 quantities, raising OverflowError outside the int64 range."""
    s = a + b
    if not INT64_MIN <= s <= INT64_MAX:
        raise OverflowError(f"int64 overflow: {a} + {b}")
    return s


def colors_of(list_mask: int) -> list[int]:
    """Colors (1..3) in a 3-bit list mask."""
    return [c + 1 for c in range(3) if list_mask >> c & 1]


def list_mask(colors: Iterable[int]) -> int:
    mask = 0
    for c in colors:
        if c not in (1, 2, 3):
            raise ValueError(f"color {c} not in 1..3")
        mask |= 1 << (c - 1)
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bit mask of neighbours of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if nb & ~full:
                raise ValueError(f"neighbour id out of range at {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """Closed neighbourhood masks ``N[v]``."""
        return tuple(nb | (1 << v) for v, nb in enumerate(self.adj))

    @cached_property
    def closed_matrix(self) -> np.ndarray:
        """``(n+1, n)`` bool matrix, ``[x, w]`` true iff ``x`` is in ``N[w]``.

        The extra all-false row ``n`` absorbs padding in path arrays.
        """
        mat = np.zeros((self.n + 1, self.n), dtype=bool)
        for w, nb in enumerate(self.closed):
            mat[list(bits(nb)), w] = True
        return mat

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self, active: int | None = None) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` inside ``active``, in lexicographic order."""
        if active is None:
            active = self.full
        out = []
        for u in bits(active):
            for v in bits(self.adj[u] & active & ~((2 << u) - 1)):
                out.append((u, v))
        return out

    def is_independent(self, s: int) -> bool:
        return all(not (self.adj[v] & s) for v in bits(s))

    def is_connected(self, active: int) -> bool:
        return active == 0 or len(components(self, active)) == 1


def closed_neighborhood(g: Graph, s: int) -> int:
    """``N[s]``: ``s`` together with every neighbour of a member of ``s``."""
    out = s
    for v in bits(s):
        out |= g.adj[v]
    return out


def components(g: Graph, active: int) -> list[int]:
    """Connected components of ``g[active]``, ordered by smallest member."""
    out = []
    rest = active
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


@dataclass
class Instance:
    """A parsed instance file: the graph plus every optional annotation.

    ``lists`` holds 3-bit color masks, ``costs[v]`` is a 3-tuple indexed by
    ``color - 1``, ``edge_weights`` is keyed by ``(u, v)`` with ``u < v``.
    """

    graph: Graph
    weights: list[int] = field(default_factory=list)
    lists: list[int] = field(default_factory=list)
    costs: list[tuple[int, int, int]] = field(default_factory=list)
    edge_weights: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        n = self.graph.n
        if not self.weights:
            self.weights = [1] * n
        if not self.lists:
            self.lists = [ALL_COLORS] * n
        if not self.costs:
            self.costs = [(0, 0, 0)] * n

    def edge_weight(self, u: int, v: int) -> int:
        return self.edge_weights.get((min(u, v), max(u, v)), 1)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_instance(text: str) -> Instance:
    """Parse the DIMACS-like instance format (1-based ids in the file).

    Recognised lines: ``c`` comments, one ``p edge n m`` header, then
    ``e u v``, ``w v weight``, ``l v colors``, ``k v c cost`` and
    ``ew u v weight`` in any order.
    """
    n = None
    edges: list[tuple[int, int]] = []
    weights: dict[int, int] = {}
    lists: dict[int, int] = {}
    costs: dict[tuple[int, int], int] = {}
    ew: dict[tuple[int, int], int] = {}

    def vertex(tok, lineno):
        v = _int(tok, lineno)
        if not 1 <= v <= n:
            raise ParseError(f"vertex id {v} out of range 1..{n}", lineno)
        return v - 1

    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("header must be 'p edge <n> <m>'", lineno)
            n = _int(parts[2], lineno)
            _int(parts[3], lineno)
            if n < 0:
                raise ParseError("negative vertex count", lineno)
            continue
        if n is None:
            raise ParseError(f"{kind!r} line before the 'p edge' header", lineno)
        if kind == "e" or kind == "ew":
            want = 3 if kind == "e" else 4
            if len(parts) != want:
                raise ParseError(f"malformed {kind!r} line", lineno)
            u, v = vertex(parts[1], lineno), vertex(parts[2], lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", lineno)
            if kind == "e":
                edges.append((u, v))
            else:
                ew[(min(u, v), max(u, v))] = _int(parts[3], lineno)
        elif kind == "w":
            if len(parts) != 3:
                raise ParseError("malformed 'w' line", lineno)
            w = _int(parts[2], lineno)
            if not INT64_MIN <= w <= INT64_MAX:
                raise ParseError("weight outside int64", lineno)
            weights[vertex(parts[1], lineno)] = w
        elif kind == "l":
            if len(parts) != 3 or not parts[2] or set(parts[2]) - set("123"):
                raise ParseError("list must be a nonempty string over 1,2,3", lineno)
            lists[vertex(parts[1], lineno)] = list_mask(int(ch) for ch in parts[2])
        elif kind == "k":
            if len(parts) != 4:
                raise ParseError("malformed 'k' line", lineno)
            c = _int(parts[2], lineno)
            if c not in (1, 2, 3):
                raise ParseError(f"color {c} not in 1..3", lineno)
            cost = _int(parts[3], lineno)
            if not 0 <= cost <= INT64_MAX:
                raise ParseError("cost must be a nonnegative int64", lineno)
            costs[(vertex(parts[1], lineno), c)] = cost
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")

    g = Graph.from_edges(n, edges)
    for (u, v) in ew:
        if not g.has_edge(u, v):
            raise ParseError(f"edge weight given for non-edge {u + 1}-{v + 1}")
    return Instance(
        graph=g,
        weights=[weights.get(v, 1) for v in range(n)],
        lists=[lists.get(v, ALL_COLORS) for v in range(n)],
        costs=[tuple(costs.get((v, c), 0) for c in (1, 2, 3)) for v in range(n)],
        edge_weights=ew,
    )


def parse_graph(text: str) -> Graph:
    return parse_instance(text).graph


def write_graph(g: Graph) -> str:
    """Canonical text form: header, then ``e`` lines in lexicographic order."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_instance(inst: Instance) -> str:
    """Graph text followed by every annotation that differs from its default."""
    out = [write_graph(inst.graph).rstrip("\n")]
    for v, w in enumerate(inst.weights):
        if w != 1:
            out.append(f"w {v + 1} {w}")
    for v, lm in enumerate(inst.lists):
        if lm != ALL_COLORS:
            out.append(f"l {v + 1} {''.join(map(str, colors_of(lm)))}")
    for v, row in enumerate(inst.costs):
        for c, cost in enumerate(row, start=1):
            if cost:
                out.append(f"k {v + 1} {c} {cost}")
    for (u, v), w in sorted(inst.edge_weights.items()):
        if w != 1:
            out.append(f"ew {u + 1} {v + 1} {w}")
    return "\n".join(out) + "\n"
