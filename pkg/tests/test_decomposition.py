import math

import pytest

from ptfree.decomposition import (
    covered_buckets,
    find_heavy_vertex,
    find_heavy_vertex_color,
    gyarfas_separator,
    potential,
    required_shrinkage,
    shrunk_buckets,
)
from ptfree.errors import InvariantViolation, NotPtFree
from ptfree.graph import Graph, bits, closed_neighborhood, components, mask_of
from ptfree.paths import enumerate_colored_paths, enumerate_induced_paths

from helpers import complete, connected_corpus, cycle, path_graph, star


def brute_hits(g, idx, w):
    """Per-bucket count of paths meeting N[w], by direct set intersection."""
    nw = set(bits(g.closed[w]))
    return {pair: sum(1 for p in b if nw & set(p)) for pair, b in idx.buckets.items()}


def test_separator_c5():
    c5 = cycle(5)
    sep = gyarfas_separator(c5, c5.full, 5)
    assert sep.x == mask_of([0])
    assert sep.halo == mask_of([4, 0, 1])
    assert sep.component_sizes == [2]


def test_separator_single_vertex_and_star():
    g = Graph.from_edges(1, [])
    sep = gyarfas_separator(g, g.full, 5)
    assert sep.x == 1 and sep.component_sizes == []
    s = star(9)
    sep = gyarfas_separator(s, s.full, 5)
    assert sep.x == 1 and sep.halo == s.full


def test_separator_certificate_on_long_path():
    p = path_graph(9)
    with pytest.raises(NotPtFree) as exc:
        gyarfas_separator(p, p.full, 3)
    assert exc.value.certificate == (0, 1, 2)


def test_separator_rejects_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InvariantViolation):
        gyarfas_separator(g, g.full, 5)


@pytest.mark.parametrize("g", connected_corpus(60, 5, 20, seed=100))
def test_separator_properties(g):
    n = g.n
    sep = gyarfas_separator(g, g.full, 5)
    assert sep.x.bit_count() <= 5
    assert len(components(g, sep.x)) == 1
    assert sep.halo == closed_neighborhood(g, sep.x)
    assert all(2 * c.bit_count() <= n for c in components(g, g.full & ~sep.halo))
    idx = enumerate_induced_paths(g, g.full, 5)
    assert 4 * covered_buckets(idx, sep.halo) >= n * (n - 1)


def test_heavy_vertex_c5():
    c5 = cycle(5)
    idx = enumerate_induced_paths(c5, c5.full, 5)
    rep = find_heavy_vertex(c5, c5.full, idx, 5)
    hits = brute_hits(c5, idx, 0)
    hit = sum(1 for pair, k in hits.items() if 10 * k >= len(idx.buckets[pair]))
    assert hit == 9
    assert (rep.w, rep.hit_buckets, rep.total_buckets) == (0, 9, 10)
    assert rep.per_bucket_hits == hits
    assert rep.per_bucket_hits[(2, 3)] == 0


def test_heavy_vertex_edge_and_star():
    e = Graph.from_edges(2, [(0, 1)])
    rep = find_heavy_vertex(e, e.full, enumerate_induced_paths(e, e.full, 5), 5)
    assert (rep.w, rep.hit_buckets) == (0, 1)
    s = star(5)
    rep = find_heavy_vertex(s, s.full, enumerate_induced_paths(s, s.full, 5), 5)
    assert (rep.w, rep.hit_buckets, rep.total_buckets) == (0, 15, 15)


def test_heavy_vertex_needs_two_vertices():
    g = Graph.from_edges(1, [])
    with pytest.raises(InvariantViolation):
        find_heavy_vertex(g, g.full, enumerate_induced_paths(g, g.full, 5), 5)


@pytest.mark.parametrize("g", connected_corpus(40, 5, 18, seed=500))
def test_heavy_vertex_matches_recount(g):
    idx = enumerate_induced_paths(g, g.full, 5)
    rep = find_heavy_vertex(g, g.full, idx, 5)
    best = None
    for w in range(g.n):
        hits = brute_hits(g, idx, w)
        count = sum(1 for pair, k in hits.items() if 10 * k >= len(idx.buckets[pair]))
        if best is None or count > best[1]:
            best = (w, count)
    assert (rep.w, rep.hit_buckets) == best
    assert 4 * 5 * rep.hit_buckets >= g.n * (g.n - 1)
    child = enumerate_induced_paths(g, g.full & ~g.closed[rep.w], 5)
    assert shrunk_buckets(idx, child, 5) >= required_shrinkage(g.n, 5)


def test_heavy_color_single_edge():
    e = Graph.from_edges(2, [(0, 1)])
    cidx = enumerate_colored_paths(e, None, 5, [7, 7])
    assert math.ceil(6 / (40 * 81)) == 1
    w, c, rep = find_heavy_vertex_color(e, e.full, cidx, 5, [7, 7])
    assert (w, c, rep.hit_buckets) == (0, 1, 1)
    assert rep.per_bucket_hits[(0, 1)] == 4


def test_heavy_color_triangle_and_short_lists():
    k3 = complete(3)
    cidx = enumerate_colored_paths(k3, None, 5, [7] * 3)
    w, c, rep = find_heavy_vertex_color(k3, k3.full, cidx, 5, [7] * 3)
    assert (w, c, rep.hit_buckets) == (0, 1, 3)
    e = Graph.from_edges(2, [(0, 1)])
    cidx = enumerate_colored_paths(e, None, 5, [3, 3])
    assert sorted(cp.colors for cp in cidx.buckets[(0, 1)]) == [(1, 2), (2, 1)]
    w, c, _ = find_heavy_vertex_color(e, e.full, cidx, 5, [3, 3])
    assert (w, c) == (0, 1)


def test_heavy_color_respects_lists():
    e = Graph.from_edges(2, [(0, 1)])
    lists = [0b110, 0b011]
    cidx = enumerate_colored_paths(e, None, 5, lists)
    w, c, _ = find_heavy_vertex_color(e, e.full, cidx, 5, lists)
    assert lists[w] >> (c - 1) & 1
    assert (w, c) == (0, 2)


def test_potential_values():
    assert potential(enumerate_induced_paths(Graph.from_edges(3, []), None, 5), 5) == 0
    e = Graph.from_edges(2, [(0, 1)])
    one = potential(enumerate_induced_paths(e, None, 5), 5)
    assert one == pytest.approx(-math.log(2, 0.9), rel=1e-12)
    assert one == pytest.approx(6.5788, abs=1e-4)
    c5 = potential(enumerate_induced_paths(cycle(5), None, 5), 5)
    assert c5 == pytest.approx(-(5 * math.log(2, 0.9) + 5 * math.log(3, 0.9)), rel=1e-12)
    assert c5 == pytest.approx(85.03, abs=0.01)


def test_required_shrinkage():
    assert required_shrinkage(5, 5) == 1
    assert required_shrinkage(11, 5) == 6
    assert required_shrinkage(2, 5) == 1
