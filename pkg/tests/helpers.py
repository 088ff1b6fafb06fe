"""Independent oracles and seeded corpora shared by the test modules."""

import itertools
import random

from ptfree.graph import Graph, bits, components
from ptfree.generators import GenSpec, gen
from ptfree.paths import is_pt_free


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs):
    edges, off = [], 0
    for g in graphs:
        edges += [(u + off, v + off) for u, v in g.edges()]
        off += g.n
    return Graph.from_edges(off, edges)


def brute_force_paths(g, active, max_len):
    """Every induced path on 2..max_len vertices, by checking all vertex sequences."""
    verts = list(bits(active))
    out = set()
    for k in range(2, max_len + 1):
        for seq in itertools.permutations(verts, k):
            if seq[0] > seq[-1]:
                continue
            ok = all(
                g.has_edge(seq[i], seq[j]) == (j == i + 1)
                for i in range(k)
                for j in range(i + 1, k)
            )
            if ok:
                out.add(seq)
    return out


def has_induced_path(g, active, t):
    return any(len(p) == t for p in brute_force_paths(g, active, t))


def random_graph(rng, n, p):
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def planted_3col(n, p, t, seed):
    """Random graph with a planted 3-colouring, made P_t-free by deleting an
    edge of every induced P_t found (keeps the planted colouring proper)."""
    rng = random.Random(seed)
    col = [rng.randrange(3) for _ in range(n)]
    edges = {(u, v) for u, v in itertools.combinations(range(n), 2) if col[u] != col[v] and rng.random() < p}
    while True:
        g = Graph.from_edges(n, edges)
        ok, w = is_pt_free(g, None, t)
        if ok:
            return g
        i = rng.randrange(t - 1)
        a, b = sorted((w[i], w[i + 1]))
        edges.discard((a, b))


def induced(g, mask):
    """Relabel ``g[mask]`` onto 0..k-1."""
    verts = list(bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    return Graph.from_edges(len(verts), [(pos[u], pos[v]) for u, v in g.edges(mask)])


def mixed_instance(seed, nmin, nmax, t=5):
    """One seeded P_t-free graph drawn from a mix of generator families."""
    rng = random.Random(seed)
    n = rng.randint(nmin, nmax)
    kind = rng.choice(["chord", "chord", "chord", "planted", "planted", "cograph", "split", "multipartite"])
    if kind == "chord":
        return gen(GenSpec("chord-repair", n=n, p=rng.choice([0.08, 0.15, 0.25, 0.4]), t=t, seed=seed))
    if kind == "planted":
        return planted_3col(n, rng.choice([0.3, 0.5, 0.8]), t, seed)
    if kind == "cograph":
        return gen(GenSpec("cograph", n=n, p=rng.choice([0.3, 0.5, 0.7]), t=t, seed=seed))
    if kind == "split":
        return gen(GenSpec("split", n=n, p=0.4, parts=(rng.randint(1, max(1, n // 2)),), t=t, seed=seed))
    parts = []
    while sum(parts) < n:
        parts.append(min(rng.randint(1, 4), n - sum(parts)))
    return gen(GenSpec("complete-multipartite", parts=tuple(parts), t=t, seed=seed))


def connected_corpus(count, nmin, nmax, seed=0, t=5):
    """``count`` connected P_t-free graphs with nmin <= n <= nmax (largest
    component of a mixed draw; redrawn when that is too small)."""
    out, s = [], seed
    while len(out) < count:
        g = mixed_instance(s, nmin, nmax, t)
        s += 1
        comps = components(g, g.full)
        big = max(comps, key=lambda c: c.bit_count(), default=0)
        if big.bit_count() >= nmin:
            out.append(induced(g, big) if big != g.full else g)
    return out


def random_lists(rng, n, full_bias=0.5):
    return [7 if rng.random() < full_bias else rng.randint(1, 7) for _ in range(n)]


def brute_force_oct(g, weights):
    """Cheapest independent set whose deletion leaves a bipartite graph, by
    walking all independent sets; None if there is none."""
    from ptfree.coloring import is_bipartite

    best = [None]
    n = g.n

    def walk(i, chosen, blocked, w):
        if i == n:
            if (best[0] is None or w < best[0]) and is_bipartite(g, g.full & ~chosen):
                best[0] = w
            return
        walk(i + 1, chosen, blocked, w)
        if not blocked >> i & 1:
            walk(i + 1, chosen | (1 << i), blocked | g.adj[i], w + weights[i])

    walk(0, 0, 0, 0)
    return best[0]
