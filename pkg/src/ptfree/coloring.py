"""List 3-colouring of P_t-free graphs, its min-cost variant and
Independent Odd Cycle Transversal.

Lists are 3-bit masks (bit ``c-1`` for colour ``c``).  Infeasible instances
are reported by returning ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import find_heavy_vertex_color
from .errors import SizeGuardError
from .graph import ALL_COLORS, Graph, bits, checked_add, colors_of, components, lowest
from .mwis import BranchStats, build_index, effective_t, recursion_headroom
from .paths import color_index

MAX_T = 8
BRUTE_FORCE_LIMIT = 18


@dataclass
class ColoringInstance:
    g: Graph
    active: int
    lists: list[int]
    fixed: dict[int, int] = field(default_factory=dict)


@dataclass
class ColoringSolution:
    assignment: dict[int, int]
    cost: int | None = None


def _check_t(t: int) -> None:
    if not 2 <= t <= MAX_T:
        raise ValueError(f"list colouring supports 2 <= t <= {MAX_T}, got t={t}")


def connected_subsets(g: Graph, active: int, k: int):
    """Yield each connected vertex set of ``g[active]`` with at most ``k``
    members exactly once (ESU enumeration, anchored at the smallest member)."""
    adj, closed = g.adj, g.closed
    for v in bits(active):
        higher = active & ~((2 << v) - 1)
        stack = [(1 << v, adj[v] & higher, closed[v], 1)]
        while stack:
            sub, ext, seen, size = stack.pop()
            yield sub
            if size == k:
                continue
            while ext:
                w = ext & -ext
                ext ^= w
                x = w.bit_length() - 1
                stack.append((sub | w, ext | (adj[x] & higher & ~seen), seen | closed[x], size + 1))


def _support(g: Graph, members: tuple[int, ...], lists: tuple[int, ...]):
    """Per-member mask of colours used by some proper list colouring of
    ``g[members]``; None if there is none."""
    k = len(members)
    support = [0] * k
    goal = lists
    colour = [0] * k
    nbr_idx = [[j for j in range(i) if g.adj[members[i]] >> members[j] & 1] for i in range(k)]

    def place(i):
        if i == k:
            for j in range(k):
                support[j] |= 1 << (colour[j] - 1)
            return tuple(support) == goal
        for c in colors_of(lists[i]):
            if all(colour[j] != c for j in nbr_idx[i]):
                colour[i] = c
                if place(i + 1):
                    return True
        return False

    place(0)
    if not any(support):
        return None
    return tuple(support)


class Preprocessor:
    """Applies the three reduction rules to a fixpoint.

    Support sets are cached by (vertex set, lists on it) across calls, so
    one instance should serve a whole recursive solve.
    """

    def __init__(self, g: Graph, t: int):
        self.g = g
        self.k = effective_t(t) - 1
        self.cache: dict[tuple, tuple | None] = {}

    def support(self, sub: int, lists) -> tuple | None:
        members = tuple(bits(sub))
        sub_lists = tuple(lists[v] for v in members)
        key = (sub, sub_lists)
        try:
            return self.cache[key]
        except KeyError:
            res = self.cache[key] = _support(self.g, members, sub_lists)
            return res

    def __call__(self, inst: ColoringInstance) -> ColoringInstance | None:
        g = self.g
        lists = list(inst.lists)
        fixed = dict(inst.fixed)
        active = inst.active
        while True:
            queue = [v for v in bits(active) if lists[v].bit_count() <= 1]
            while queue:
                v = queue.pop()
                if not active >> v & 1:
                    continue
                lv = lists[v]
                if lv == 0:
                    return None
                fixed[v] = lv.bit_length()
                active &= ~(1 << v)
                for u in bits(g.adj[v] & active):
                    if lists[u] & lv:
                        lists[u] &= ~lv
                        if lists[u].bit_count() <= 1:
                            queue.append(u)
            changed = False
            for sub in connected_subsets(g, active, self.k):
                if sub & (sub - 1) == 0:
                    continue
                sup = self.support(sub, lists)
                if sup is None:
                    return None
                for v, s in zip(bits(sub), sup):
                    if lists[v] & ~s:
                        lists[v] &= s
                        changed = True
            if not changed:
                return ColoringInstance(g, active, lists, fixed)


def preprocess(inst: ColoringInstance, t: int) -> ColoringInstance | None:
    """Reduce to an equivalent instance whose lists all have two or three
    colours and where every (vertex, colour) extends to a proper colouring
    of every connected set of at most ``t-1`` vertices containing it.

    Returns None when the instance is infeasible.
    """
    _check_t(t)
    return Preprocessor(inst.g, t)(inst)


def _pick_branch(g, act, lists, t, stats, sample=None):
    idx = build_index(g, act, t)
    cidx = color_index(idx, lists)
    w, c, _ = find_heavy_vertex_color(g, act, cidx, effective_t(t), lists)
    if sample is not None:
        sample.append((w, c))
    return w, c


def _fixed_cost(fixed, costs) -> int:
    total = 0
    for v, c in fixed.items():
        total = checked_add(total, costs[v][c - 1])
    return total


def solve_list3col(
    g: Graph, active: int | None, lists, t: int = 5
) -> tuple[ColoringSolution | None, BranchStats]:
    """Decide list 3-colourability and return a colouring when one exists."""
    _check_t(t)
    if active is None:
        active = g.full
    stats = BranchStats()
    reduce = Preprocessor(g, t)

    def search(inst: ColoringInstance, depth: int, reduced: bool = False):
        stats.calls += 1
        stats.max_depth = max(stats.max_depth, depth)
        red = inst if reduced else reduce(inst)
        if red is None:
            stats.leaves += 1
            return None
        act, L = red.active, red.lists
        out = dict(red.fixed)
        if act == 0:
            stats.leaves += 1
            return out
        comps = components(g, act)
        if len(comps) > 1:
            stats.component_splits += 1
            for comp in comps:
                sub = search(ColoringInstance(g, comp, L), depth + 1, reduced=True)
                if sub is None:
                    return None
                out.update(sub)
            return out
        if act & (act - 1) == 0:
            stats.leaves += 1
            v = lowest(act)
            out[v] = colors_of(L[v])[0]
            return out
        w, c = _pick_branch(g, act, L, t, stats)
        assign = list(L)
        assign[w] = 1 << (c - 1)
        stats.success_branches += 1
        sub = search(ColoringInstance(g, act, assign), depth + 1)
        if sub is None:
            remove = list(L)
            remove[w] &= ~(1 << (c - 1))
            stats.failure_branches += 1
            sub = search(ColoringInstance(g, act, remove), depth + 1)
        if sub is None:
            return None
        out.update(sub)
        return out

    with recursion_headroom(3 * g.n):
        assignment = search(ColoringInstance(g, active, list(lists)), 0)
    if assignment is None:
        return None, stats
    return ColoringSolution(dict(sorted(assignment.items()))), stats


def solve_min_cost_3col(
    g: Graph, active: int | None, lists, costs, t: int = 5
) -> tuple[ColoringSolution | None, BranchStats]:
    """Minimum total cost proper list 3-colouring; ``costs[v][c-1]`` is the
    price of colouring ``v`` with ``c``."""
    _check_t(t)
    if active is None:
        active = g.full
    if any(x < 0 for v in bits(active) for x in costs[v]):
        raise ValueError("costs must be nonnegative")
    stats = BranchStats()
    reduce = Preprocessor(g, t)

    def search(inst: ColoringInstance, depth: int, reduced: bool = False):
        stats.calls += 1
        stats.max_depth = max(stats.max_depth, depth)
        red = inst if reduced else reduce(inst)
        if red is None:
            stats.leaves += 1
            return None
        act, L = red.active, red.lists
        total = _fixed_cost(red.fixed, costs)
        out = dict(red.fixed)
        if act == 0:
            stats.leaves += 1
            return total, out
        comps = components(g, act)
        if len(comps) > 1:
            stats.component_splits += 1
            for comp in comps:
                sub = search(ColoringInstance(g, comp, L), depth + 1, reduced=True)
                if sub is None:
                    return None
                total = checked_add(total, sub[0])
                out.update(sub[1])
            return total, out
        if act & (act - 1) == 0:
            stats.leaves += 1
            v = lowest(act)
            c = min(colors_of(L[v]), key=lambda col: (costs[v][col - 1], col))
            out[v] = c
            return checked_add(total, costs[v][c - 1]), out
        w, c = _pick_branch(g, act, L, t, stats)
        assign = list(L)
        assign[w] = 1 << (c - 1)
        remove = list(L)
        remove[w] &= ~(1 << (c - 1))
        stats.success_branches += 1
        first = search(ColoringInstance(g, act, assign), depth + 1)
        stats.failure_branches += 1
        second = search(ColoringInstance(g, act, remove), depth + 1)
        options = [r for r in (first, second) if r is not None]
        if not options:
            return None
        best = min(options, key=lambda r: r[0])
        out.update(best[1])
        return checked_add(total, best[0]), out

    with recursion_headroom(3 * g.n):
        res = search(ColoringInstance(g, active, list(lists)), 0)
    if res is None:
        return None, stats
    return ColoringSolution(dict(sorted(res[1].items())), res[0]), stats


def solve_independent_oct(
    g: Graph, active: int | None, weights, t: int = 5
) -> tuple[tuple[int, int] | None, BranchStats]:
    """Minimum-weight independent set whose removal leaves a bipartite graph.

    Colour 3 carries the vertex weight and colours 1, 2 are free, so the
    colour-3 class of a cheapest 3-colouring is an optimal transversal.
    Returns ``((vertex mask, weight), stats)`` or ``(None, stats)`` when the
    graph is not 3-colourable.
    """
    if active is None:
        active = g.full
    if any(weights[v] < 0 for v in bits(active)):
        raise ValueError("vertex weights must be nonnegative")
    costs = [(0, 0, weights[v]) for v in range(g.n)]
    sol, stats = solve_min_cost_3col(g, active, [ALL_COLORS] * g.n, costs, t)
    if sol is None:
        return None, stats
    x = sum(1 << v for v, c in sol.assignment.items() if c == 3)
    return (x, sol.cost), stats


def is_proper_list_coloring(g: Graph, active: int, lists, assignment) -> bool:
    if set(assignment) != set(bits(active)):
        return False
    for v, c in assignment.items():
        if not lists[v] >> (c - 1) & 1:
            return False
        for u in bits(g.adj[v] & active):
            if assignment[u] == c:
                return False
    return True


def is_bipartite(g: Graph, active: int) -> bool:
    side: dict[int, int] = {}
    for start in bits(active):
        if start in side:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v] & active):
                if u not in side:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def _guard(active: int) -> list[int]:
    order = list(bits(active))
    if len(order) > BRUTE_FORCE_LIMIT:
        raise SizeGuardError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    return order


def brute_force_list3col(g: Graph, active: int | None, lists) -> ColoringSolution | None:
    """Lexicographically smallest proper list colouring by plain backtracking."""
    if active is None:
        active = g.full
    order = _guard(active)
    colour: dict[int, int] = {}

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        for c in colors_of(lists[v]):
            if all(colour.get(u) != c for u in bits(g.adj[v] & active)):
                colour[v] = c
                if place(i + 1):
                    return True
                del colour[v]
        return False

    return ColoringSolution(dict(colour)) if place(0) else None


def brute_force_min_cost_3col(g: Graph, active: int | None, lists, costs) -> ColoringSolution | None:
    """Cheapest proper list colouring (lexicographically smallest among ties)."""
    if active is None:
        active = g.full
    order = _guard(active)
    floor = [min((costs[v][c - 1] for c in colors_of(lists[v])), default=0) for v in order]
    rest = [sum(floor[i:]) for i in range(len(order) + 1)]
    colour: dict[int, int] = {}
    best: list = [None, None]

    def place(i, spent):
        if best[0] is not None and spent + rest[i] >= best[0]:
            return
        if i == len(order):
            best[0], best[1] = spent, dict(colour)
            return
        v = order[i]
        for c in colors_of(lists[v]):
            if all(colour.get(u) != c for u in bits(g.adj[v] & active)):
                colour[v] = c
                place(i + 1, spent + costs[v][c - 1])
                del colour[v]

    place(0, 0)
    if best[1] is None:
        return None
    return ColoringSolution(best[1], best[0])
