"""Maximum Weight Induced Matching as MWIS on the squared line graph."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, NotPtFree, SizeGuardError
from .graph import Graph, bits
from .mwis import BranchStats, find_mis
from .paths import is_pt_free

BRUTE_FORCE_EDGE_LIMIT = 20


@dataclass(frozen=True)
class SquaredLineGraph:
    h: Graph
    edge_of: tuple[tuple[int, int], ...]


@dataclass
class MatchingSolution:
    edges: list[tuple[int, int]]
    weight: int


def _conflict(g: Graph, e: tuple[int, int], f: tuple[int, int]) -> bool:
    ends = (1 << e[0]) | (1 << e[1])
    return bool((g.closed[f[0]] | g.closed[f[1]]) & ends)


def squared_line_graph(g: Graph, active: int | None = None) -> SquaredLineGraph:
    """Vertices are the edges of ``g[active]`` in lexicographic order; two are
    adjacent when they share an endpoint or an edge joins their endpoints."""
    edges = g.edges(active)
    pairs = [
        (i, j)
        for i in range(len(edges))
        for j in range(i + 1, len(edges))
        if _conflict(g, edges[i], edges[j])
    ]
    return SquaredLineGraph(Graph.from_edges(len(edges), pairs), tuple(edges))


def is_induced_matching(g: Graph, edges) -> bool:
    edges = list(edges)
    return all(
        not _conflict(g, edges[i], edges[j])
        for i in range(len(edges))
        for j in range(i + 1, len(edges))
    )


def _weight_of(edge_weights, e) -> int:
    if edge_weights is None:
        return 1
    if callable(edge_weights):
        return edge_weights(*e)
    return edge_weights.get(e, 1)


def solve_induced_matching(
    g: Graph, active: int | None, edge_weights=None, t: int = 5, *, cache: bool = False
) -> tuple[MatchingSolution, BranchStats]:
    """``edge_weights`` maps ``(u, v)`` with ``u < v`` to a weight (default 1),
    or is a callable ``(u, v) -> weight``."""
    if t < 4:
        raise ValueError("induced matching via the squared line graph needs t >= 4")
    ok, witness = is_pt_free(g, active, t)
    if not ok:
        raise NotPtFree(witness, t)
    sq = squared_line_graph(g, active)
    weights = [_weight_of(edge_weights, e) for e in sq.edge_of]
    try:
        sol, stats = find_mis(sq.h, None, weights, t, cache=cache)
    except NotPtFree as exc:
        raise InvariantViolation(
            f"squared line graph of a P{t}-free graph has an induced P{t}: {exc.certificate}"
        ) from exc
    return MatchingSolution([sq.edge_of[i] for i in bits(sol.chosen)], sol.weight), stats


def brute_force_induced_matching(
    g: Graph, active: int | None, edge_weights=None
) -> MatchingSolution:
    """Best induced matching by exhaustive search over edge subsets (first found among ties)."""
    edges = g.edges(active)
    m = len(edges)
    if m > BRUTE_FORCE_EDGE_LIMIT:
        raise SizeGuardError(f"brute force limited to {BRUTE_FORCE_EDGE_LIMIT} edges")
    weights = [_weight_of(edge_weights, e) for e in edges]
    conflict = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and _conflict(g, edges[i], edges[j]):
                conflict[i] |= 1 << j
    best = [0, 0]

    # walks every conflict-free edge subset; branches that already conflict are cut
    def extend(i: int, chosen: int, blocked: int, w: int) -> None:
        if w > best[0]:
            best[0], best[1] = w, chosen
        for j in range(i, m):
            if not blocked >> j & 1:
                extend(j + 1, chosen | (1 << j), blocked | conflict[j], w + weights[j])

    extend(0, 0, 0, 0)
    return MatchingSolution([edges[i] for i in bits(best[1])], best[0])
