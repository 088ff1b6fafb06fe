"""Seeded generators of P_t-free graphs.

All randomness comes from ``random.Random(seed)`` (Mersenne Twister), whose
output for a given seed is fixed across platforms and Python versions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph
from .paths import is_pt_free

KINDS = ("gnp-rejection", "chord-repair", "cograph", "split", "complete-multipartite", "cycle")
MAX_REJECTION_ATTEMPTS = 10_000


class GenerationFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int = 0
    t: int = 5
    p: float = 0.5
    parts: tuple[int, ...] = ()
    seed: int = 0

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.t < 2:
            raise ValueError("t must be at least 2")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        if self.kind == "complete-multipartite":
            if not self.parts or min(self.parts) < 1:
                raise ValueError("complete-multipartite needs positive part sizes")
            if self.t < 4 and len(self.parts) > 1:
                raise ValueError("complete multipartite graphs are only guaranteed P4-free")
            return
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.kind == "cycle":
            if self.n < 3 or self.n > self.t:
                raise ValueError("cycle C_n is P_t-free only for 3 <= n <= t")
        elif self.kind == "cograph" and self.t < 4:
            raise ValueError("cographs are only guaranteed P4-free")
        elif self.kind == "split":
            if self.t < 5:
                raise ValueError("split graphs are only guaranteed P5-free")
            if self.parts and not (len(self.parts) == 1 and 0 <= self.parts[0] <= self.n):
                raise ValueError("split takes one part size: the clique size")


def _binomial_edges(rng: random.Random, n: int, p: float) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def gnp_rejection(spec: GenSpec) -> Graph:
    rng = random.Random(spec.seed)
    for _ in range(MAX_REJECTION_ATTEMPTS):
        g = Graph.from_edges(spec.n, _binomial_edges(rng, spec.n, spec.p))
        if is_pt_free(g, None, spec.t)[0]:
            return g
    raise GenerationFailed(
        f"no P{spec.t}-free G({spec.n}, {spec.p}) sample in {MAX_REJECTION_ATTEMPTS} attempts"
    )


def chord_repair(spec: GenSpec) -> Graph:
    """Binomial graph, then close every induced P_t found by joining its ends."""
    rng = random.Random(spec.seed)
    edges = set(_binomial_edges(rng, spec.n, spec.p))
    while True:
        g = Graph.from_edges(spec.n, edges)
        ok, witness = is_pt_free(g, None, spec.t)
        if ok:
            return g
        u, v = witness[0], witness[-1]
        edges.add((min(u, v), max(u, v)))


def cograph(spec: GenSpec) -> Graph:
    """Random cotree: repeatedly merge two random pieces by union or join."""
    rng = random.Random(spec.seed)
    pieces = [[v] for v in range(spec.n)]
    edges = []
    while len(pieces) > 1:
        a = pieces.pop(rng.randrange(len(pieces)))
        b = pieces.pop(rng.randrange(len(pieces)))
        if rng.random() < spec.p:
            edges.extend((u, v) for u in a for v in b)
        pieces.append(a + b)
    return Graph.from_edges(spec.n, edges)


def split_graph(spec: GenSpec) -> Graph:
    rng = random.Random(spec.seed)
    k = spec.parts[0] if spec.parts else spec.n // 2
    clique = range(k)
    edges = [(u, v) for u in clique for v in clique if u < v]
    edges += [(u, v) for u in clique for v in range(k, spec.n) if rng.random() < spec.p]
    perm = list(range(spec.n))
    rng.shuffle(perm)
    return Graph.from_edges(spec.n, [(perm[u], perm[v]) for u, v in edges])


def complete_multipartite(spec: GenSpec) -> Graph:
    owner = [i for i, size in enumerate(spec.parts) for _ in range(size)]
    n = len(owner)
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]]
    )


def cycle(spec: GenSpec) -> Graph:
    return Graph.from_edges(spec.n, [(i, (i + 1) % spec.n) for i in range(spec.n)])


_BUILDERS = {
    "gnp-rejection": gnp_rejection,
    "chord-repair": chord_repair,
    "cograph": cograph,
    "split": split_graph,
    "complete-multipartite": complete_multipartite,
    "cycle": cycle,
}


def gen(spec: GenSpec) -> Graph:
    spec.validate()
    return _BUILDERS[spec.kind](spec)
