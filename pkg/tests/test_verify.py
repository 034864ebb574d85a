import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pcc.graphs import EdgeColoring, Graph, complete_graph, cycle_graph, path_graph
from pcc.verify import (
    VerificationTimeout,
    find_distance_proper_path,
    first_failing_pair,
    is_distance_proper_path,
    verify_coloring,
)

from oracles import (
    all_simple_paths,
    path_colors,
    proper_path_exists,
    random_coloring,
    random_connected_graph,
    window_proper,
)


def _path_coloring(seq):
    """P_k colored by the given edge color sequence."""
    g = path_graph(len(seq) + 1)
    return g, EdgeColoring(dict(zip(g.edges, seq)))


def test_window_semantics_examples():
    g, c = _path_coloring([1, 2, 1])
    assert is_distance_proper_path(c, (0, 1, 2, 3), 1)
    assert not is_distance_proper_path(c, (0, 1, 2, 3), 2)
    g, c = _path_coloring([1, 2, 3, 1])
    assert is_distance_proper_path(c, (0, 1, 2, 3, 4), 2)
    assert not is_distance_proper_path(c, (0, 1, 2, 3, 4), 3)
    g, c = _path_coloring([1])
    assert is_distance_proper_path(c, (0, 1), 1)
    assert is_distance_proper_path(c, (0, 1), 99)


def test_window_one_means_adjacent_distinct():
    g, c = _path_coloring([1, 1])
    assert not is_distance_proper_path(c, (0, 1, 2), 1)


def test_path_validation_errors():
    g, c = _path_coloring([1, 2])
    with pytest.raises(ValueError):
        is_distance_proper_path(c, (0, 2), 1)  # not an edge
    with pytest.raises(ValueError):
        is_distance_proper_path(c, (0, 1, 0), 1)  # repeated vertex
    with pytest.raises(ValueError):
        is_distance_proper_path(c, (0,), 1)
    with pytest.raises(ValueError):
        is_distance_proper_path(c, (0, 1), 0)  # bad window


@given(st.lists(st.integers(1, 4), min_size=1, max_size=9), st.integers(1, 5))
@settings(max_examples=200, deadline=None)
def test_window_check_matches_direct_definition(seq, ell):
    g, c = _path_coloring(seq)
    expect = window_proper(seq, ell)
    assert is_distance_proper_path(c, tuple(range(len(seq) + 1)), ell) == expect


def test_find_path_examples():
    k4 = complete_graph(4)
    mono = EdgeColoring({e: 1 for e in k4.edges})
    assert find_distance_proper_path(k4, mono, 0, 1, 2) == (0, 1)
    g, c = _path_coloring([1, 2, 1])
    assert find_distance_proper_path(g, c, 0, 3, 2) is None
    with pytest.raises(ValueError):
        find_distance_proper_path(g, c, 1, 1, 2)


def test_verify_examples():
    for n in (3, 4, 5):
        kn = complete_graph(n)
        cert = verify_coloring(kn, EdgeColoring({e: 1 for e in kn.edges}), 3)
        assert cert.ok and len(cert.witnesses) == n * (n - 1) // 2
    g, c = _path_coloring([1, 2, 1])
    cert = verify_coloring(g, c, 2)
    assert not cert.ok and cert.failing_pair == (0, 3)
    assert first_failing_pair(g, c, 2) == (0, 3)


def test_verify_requires_total_coloring():
    g = path_graph(3)
    with pytest.raises(ValueError):
        verify_coloring(g, EdgeColoring({(0, 1): 1}), 2)


def test_certificate_witnesses_are_proper():
    rng = random.Random(0)
    for _ in range(20):
        g = random_connected_graph(rng.randint(2, 6), rng)
        c = random_coloring(g, 3, rng)
        cert = verify_coloring(g, c, 2)
        if cert.ok:
            for (u, v), paths in cert.witnesses.items():
                for p in paths:
                    assert p[0] == u and p[-1] == v
                    assert is_distance_proper_path(c, p, 2)


def test_oracle_equivalence_small_graphs():
    rng = random.Random(12)
    for _ in range(25):
        g = random_connected_graph(rng.randint(2, 6), rng)
        cache = {
            (u, v): all_simple_paths(g, u, v)
            for u, v in itertools.combinations(range(g.n), 2)
        }
        for _ in range(8):
            c = random_coloring(g, rng.randint(1, 3), rng)
            for (u, v), paths in cache.items():
                for ell in (1, 2, 3):
                    found = find_distance_proper_path(g, c, u, v, ell)
                    expect = proper_path_exists(g, c, u, v, ell, paths)
                    assert (found is not None) == expect
                    if found is not None:
                        assert found in paths
                        assert window_proper(path_colors(c, found), ell)


def test_monotonicity_in_window():
    rng = random.Random(5)
    for _ in range(15):
        g = random_connected_graph(rng.randint(3, 6), rng)
        c = random_coloring(g, 3, rng)
        for ell in (3, 2):
            if verify_coloring(g, c, ell).ok:
                assert verify_coloring(g, c, ell - 1).ok


def test_color_relabeling_invariance():
    rng = random.Random(6)
    for _ in range(15):
        g = random_connected_graph(rng.randint(3, 6), rng)
        c = random_coloring(g, 3, rng)
        used = sorted(c.used_colors())
        perm = used[:]
        rng.shuffle(perm)
        relabel = dict(zip(used, perm))
        c2 = EdgeColoring({e: relabel[v] for e, v in c.colors.items()})
        for ell in (1, 2, 3):
            a = verify_coloring(g, c, ell)
            b = verify_coloring(g, c2, ell)
            assert a.ok == b.ok
            assert a.failing_pair == b.failing_pair


def test_spanning_extension_preserves_validity():
    rng = random.Random(7)
    kept = 0
    while kept < 10:
        g = random_connected_graph(rng.randint(4, 6), rng, extra=0.5)
        tree_edges = set()
        seen = {0}
        for u, v in sorted(g.edges, key=lambda e: rng.random()):
            if (u in seen) != (v in seen):
                tree_edges.add((u, v))
                seen.update((u, v))
        if len(tree_edges) < g.m:
            h = Graph(g.n, sorted(tree_edges))
            if h.m != g.n - 1:
                continue
            c = random_coloring(h, 3, rng)
            for ell in (1, 2):
                if verify_coloring(h, c, ell).ok:
                    used = sorted(c.used_colors())
                    full = dict(c.colors)
                    for e in g.edges:
                        if e not in full:
                            full[e] = used[rng.randrange(len(used))]
                    assert verify_coloring(g, EdgeColoring(full), ell).ok
                    kept += 1


def test_disjoint_witnesses_k2():
    c4 = cycle_graph(4)
    # k = 2 on a cycle forces the long way around each adjacent pair to be
    # window-proper too, so the alternating 2-coloring passes only at
    # window 1 while the rainbow coloring passes at window 2.
    alt = EdgeColoring({(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    assert verify_coloring(c4, alt, 1, k=2).ok
    assert not verify_coloring(c4, alt, 2, k=2).ok
    rainbow = EdgeColoring({(0, 1): 1, (1, 2): 2, (2, 3): 3, (0, 3): 4})
    cert = verify_coloring(c4, rainbow, 2, k=2)
    assert cert.ok
    for (u, v), paths in cert.witnesses.items():
        assert len(paths) == 2
        interiors = [set(p[1:-1]) for p in paths]
        assert not (interiors[0] & interiors[1])
    k4 = complete_graph(4)
    assert not verify_coloring(k4, EdgeColoring({e: 1 for e in k4.edges}), 2, k=2).ok


def test_time_limit_raises():
    g = complete_graph(9)
    c = EdgeColoring({e: 1 + (i % 4) for i, e in enumerate(g.edges)})
    with pytest.raises(VerificationTimeout):
        verify_coloring(g, c, 3, time_limit=0.0)
