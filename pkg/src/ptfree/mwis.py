"""Exact Maximum Weight Independent Set by heavy-vertex branching."""

from __future__ import annotations

import sys
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

from .decomposition import (
    find_heavy_vertex,
    potential,
    required_shrinkage,
    shrunk_buckets,
)
from .errors import InvariantViolation, NotPtFree, SizeGuardError
from .graph import Graph, bits, checked_add, components, lowest
from .paths import PathIndex, enumerate_induced_paths

BRUTE_FORCE_LIMIT = 30


@dataclass
class MwisSolution:
    weight: int
    chosen: int

    @property
    def vertices(self) -> list[int]:
        return list(bits(self.chosen))


@dataclass
class BranchStats:
    calls: int = 0
    leaves: int = 0
    max_depth: int = 0
    success_branches: int = 0
    failure_branches: int = 0
    component_splits: int = 0
    cache_hits: int = 0
    progress_checks: int = 0
    potential_samples: list[tuple[int, float]] = field(default_factory=list)

    def as_dict(self) -> dict:
        d = asdict(self)
        if not self.potential_samples:
            del d["potential_samples"]
        return d


def effective_t(t: int) -> int:
    """Order used for enumeration and thresholds; P_t-free implies P_max(t,5)-free."""
    return max(t, 5)


def build_index(g: Graph, active: int, t: int) -> PathIndex:
    """Path index at the effective order, enforcing the caller's P_t promise."""
    idx = enumerate_induced_paths(g, active, effective_t(t))
    longest = idx.longest
    if longest is not None and len(longest) >= t:
        raise NotPtFree(longest[:t], t)
    return idx


@contextmanager
def recursion_headroom(depth: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * depth + 1000))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def find_mis(
    g: Graph,
    active: int | None,
    weights,
    t: int = 5,
    *,
    cache: bool = False,
    verify: bool = False,
    sample_potential: bool = False,
) -> tuple[MwisSolution, BranchStats]:
    """Maximum weight independent set of ``g[active]``.

    Connected calls enumerate the induced paths, branch on the vertex that
    is heaviest w.r.t. the path buckets (taking it first, then discarding
    it), and disconnected calls add up their components.  The empty set is
    always feasible, so negative weights are never forced into a solution.

    ``verify`` turns on runtime checks: witness independence, strictly
    shrinking calls, and bucket shrinkage in the successful child measured
    on a fresh enumeration.  ``cache`` memoises calls by active set.
    """
    if active is None:
        active = g.full
    stats = BranchStats()
    t_eff = effective_t(t)
    memo: dict[int, tuple[int, int]] = {}
    adj, closed = g.adj, g.closed

    def solve(act: int, depth: int) -> tuple[int, int]:
        stats.calls += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        if cache and act in memo:
            stats.cache_hits += 1
            stats.leaves += 1
            return memo[act]
        size = act.bit_count()
        if size <= 1:
            stats.leaves += 1
            if size == 1 and weights[lowest(act)] > 0:
                result = (weights[lowest(act)], act)
            else:
                result = (0, 0)
        else:
            comps = components(g, act)
            if len(comps) > 1:
                stats.component_splits += 1
                total, chosen = 0, 0
                for comp in comps:
                    w, s = solve(comp, depth + 1)
                    total = checked_add(total, w)
                    chosen |= s
                result = (total, chosen)
            else:
                result = branch(act, size, depth)
        if verify:
            _check_witness(g, act, weights, result)
        if cache:
            memo[act] = result
        return result

    def branch(act: int, size: int, depth: int) -> tuple[int, int]:
        idx = build_index(g, act, t)
        if sample_potential:
            stats.potential_samples.append((depth, potential(idx, t_eff)))
        w = find_heavy_vertex(g, act, idx, t_eff).w
        taken = act & ~closed[w]
        dropped = act & ~(1 << w)
        if verify:
            _check_progress(g, act, idx, taken, t, t_eff, size)
            stats.progress_checks += 1
        stats.success_branches += 1
        ws, ss = solve(taken, depth + 1)
        ws = checked_add(ws, weights[w])
        stats.failure_branches += 1
        wf, sf = solve(dropped, depth + 1)
        if ws >= wf:
            return ws, ss | (1 << w)
        return wf, sf

    with recursion_headroom(g.n):
        weight, chosen = solve(active, 0)
    return MwisSolution(weight, chosen), stats


def _check_witness(g: Graph, act: int, weights, result) -> None:
    weight, chosen = result
    if chosen & ~act:
        raise InvariantViolation("witness leaves the active set")
    if not g.is_independent(chosen):
        raise InvariantViolation("witness is not independent")
    if sum(weights[v] for v in bits(chosen)) != weight:
        raise InvariantViolation("witness weight differs from reported weight")


def _check_progress(g, act, idx, taken, t, t_eff, size) -> None:
    if taken.bit_count() >= size:
        raise InvariantViolation("successful branch did not shrink the instance")
    child = build_index(g, taken, t)
    if shrunk_buckets(idx, child, t_eff) < required_shrinkage(size, t_eff):
        raise InvariantViolation("successful branch shrank too few buckets")


def brute_force_mis(g: Graph, active: int | None, weights) -> MwisSolution:
    """Exact optimum by exhaustive include/exclude recursion on the smallest vertex.

    Among optimal sets the lexicographically smallest sorted vertex list wins.
    """
    if active is None:
        active = g.full
    if active.bit_count() > BRUTE_FORCE_LIMIT:
        raise SizeGuardError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    memo: dict[int, tuple[int, tuple[int, ...]]] = {}

    def best(act: int) -> tuple[int, tuple[int, ...]]:
        if act == 0:
            return 0, ()
        if act in memo:
            return memo[act]
        v = lowest(act)
        wi, si = best(act & ~(1 << v) & ~g.adj[v])
        take = (wi + weights[v], (v,) + si)
        skip = best(act & ~(1 << v))
        if take[0] != skip[0]:
            res = take if take[0] > skip[0] else skip
        else:
            res = min(take, skip, key=lambda r: r[1])
        memo[act] = res
        return res

    with recursion_headroom(g.n):
        weight, chosen = best(active)
    return MwisSolution(weight, sum(1 << v for v in chosen))
