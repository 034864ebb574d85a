import random

import pytest

from pcc.graphs import (
    Graph,
    InvariantViolation,
    Permutation,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    double_star_graph,
    normalize_edge,
    path_graph,
    permutation_graph,
    random_tree,
    star_graph,
    wheel_graph,
)
from pcc.structure import (
    bfs_tree,
    distances,
    ear_decomposition,
    eccentricity,
    hamiltonian_path,
    is_2_connected,
    is_star,
    max_subtree_size_with_diameter,
    minimally_2connected_spanning,
    radius,
    sigma2_prime,
)

from oracles import (
    brute_force_max_subtree,
    random_connected_graph,
    two_connected_by_definition,
)

PETERSEN = Graph(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (6, 9), (6, 8), (5, 8)],
)


def test_distances_examples():
    assert distances(cycle_graph(6), 0) == [0, 1, 2, 3, 2, 1]
    st4 = star_graph(4)
    assert distances(st4, 0) == [0, 1, 1, 1, 1]
    q3_dist = distances(Graph(8, [(x, x ^ (1 << b)) for x in range(8) for b in range(3) if x < x ^ (1 << b)]), 0)
    assert q3_dist == [bin(v).count("1") for v in range(8)]


def test_distances_mark_unreachable():
    g = Graph(3, [(0, 1)])
    assert distances(g, 0) == [0, 1, -1]


def test_eccentricity_radius():
    assert radius(path_graph(7)) == 3
    assert eccentricity(wheel_graph(5), 5) == 1
    assert radius(cycle_graph(5)) == 2
    with pytest.raises(ValueError):
        radius(Graph(3, [(0, 1)]))


def test_sigma2_prime():
    assert sigma2_prime(path_graph(4)) == 4
    for n in range(2, 7):
        assert sigma2_prime(star_graph(n)) == n + 1
    assert sigma2_prime(double_star_graph(3, 4)) == 7
    with pytest.raises(ValueError):
        sigma2_prime(Graph(3, []))


def test_two_connectivity_examples():
    assert is_2_connected(cycle_graph(3))
    assert not is_2_connected(path_graph(3))
    assert is_2_connected(wheel_graph(6))
    assert not is_2_connected(star_graph(4))
    assert not is_2_connected(path_graph(2))


def test_two_connectivity_matches_definition():
    rng = random.Random(4)
    for _ in range(40):
        g = random_connected_graph(rng.randint(3, 8), rng)
        assert is_2_connected(g) == two_connected_by_definition(g)


def test_minimal_reduction_examples():
    for n in (3, 5, 8):
        assert minimally_2connected_spanning(cycle_graph(n)) == cycle_graph(n)
    h = minimally_2connected_spanning(complete_graph(4))
    assert h.m == 4  # a spanning 4-cycle
    assert is_2_connected(h)
    with pytest.raises(ValueError):
        minimally_2connected_spanning(path_graph(4))


def test_minimal_reduction_every_edge_critical():
    rng = random.Random(9)
    cases = [wheel_graph(5), complete_graph(5), complete_bipartite_graph(3, 4)]
    for seed in range(6):
        n = rng.randint(5, 12)
        from pcc.graphs import random_2connected

        cases.append(random_2connected(n, min(n * (n - 1) // 2, n + 4), seed=seed))
    for g in cases:
        h = minimally_2connected_spanning(g)
        assert h.n == g.n and set(h.edges) <= set(g.edges)
        assert is_2_connected(h)
        for e in h.edges:
            rest = Graph(h.n, [x for x in h.edges if x != e])
            assert not is_2_connected(rest), (g, e)


def _check_ear_decomposition(g, decomp):
    cyc = decomp.base_cycle
    assert len(cyc) >= 3
    for i in range(len(cyc)):
        assert g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)])
    covered_v = set(cyc)
    covered_e = {normalize_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
    for ear in decomp.ears:
        assert len(ear) >= 3  # at least one internal vertex
        assert ear[0] in covered_v and ear[-1] in covered_v
        assert ear[0] != ear[-1]
        interior = ear[1:-1]
        assert covered_v.isdisjoint(interior)
        assert len(set(interior)) == len(interior)
        for a, b in zip(ear, ear[1:]):
            e = normalize_edge(a, b)
            assert g.has_edge(a, b) and e not in covered_e
            covered_e.add(e)
        covered_v.update(interior)
    assert covered_e == set(g.edges)
    assert covered_v == set(range(g.n))


def test_ear_decomposition_examples():
    d = ear_decomposition(cycle_graph(5))
    assert len(d.base_cycle) == 5 and d.ears == ()
    d = ear_decomposition(complete_bipartite_graph(2, 3))
    assert len(d.base_cycle) == 4 and len(d.ears) == 1 and len(d.ears[0]) == 3
    _check_ear_decomposition(complete_bipartite_graph(2, 3), d)


def test_ear_decomposition_of_reduced_prism():
    prism = permutation_graph(cycle_graph(5), Permutation((1, 2, 3, 4, 5)))
    reduced = minimally_2connected_spanning(prism)
    d = ear_decomposition(reduced)
    _check_ear_decomposition(reduced, d)
    # the deterministic reduction keeps 11 of 15 edges: one long ear
    assert reduced.m == 11 and len(d.ears) == 1


def test_ear_decomposition_rejects_forced_trivial_ear():
    # K_4 admits no decomposition whose ears all have an internal vertex.
    with pytest.raises(InvariantViolation):
        ear_decomposition(complete_graph(4))


def test_ear_decomposition_random_minimal_graphs():
    from pcc.graphs import random_2connected

    for seed in range(12):
        g = random_2connected(5 + seed % 6, None, seed=seed)
        h = minimally_2connected_spanning(g)
        _check_ear_decomposition(h, ear_decomposition(h))


def test_hamiltonian_path_examples():
    assert hamiltonian_path(path_graph(5)) == (0, 1, 2, 3, 4)
    assert hamiltonian_path(star_graph(3)) is None
    hp = hamiltonian_path(PETERSEN)
    assert hp is not None
    assert sorted(hp) == list(range(10))
    for a, b in zip(hp, hp[1:]):
        assert PETERSEN.has_edge(a, b)


def test_hamiltonian_path_single_vertex_and_disconnected():
    assert hamiltonian_path(Graph(1)) == (0,)
    assert hamiltonian_path(Graph(3, [(0, 1)])) is None


def test_max_subtree_examples():
    assert max_subtree_size_with_diameter(path_graph(10), 3)[0] == 3
    assert max_subtree_size_with_diameter(star_graph(5), 2)[0] == 5
    size, witness = max_subtree_size_with_diameter(double_star_graph(3, 3), 3)
    assert size == 5
    assert witness.m == 5
    assert set(witness.edges) == set(double_star_graph(3, 3).edges)


def test_max_subtree_matches_brute_force():
    for seed in range(15):
        t = random_tree(3 + seed % 8, seed=seed)
        for d in (1, 2, 3, 4):
            size, witness = max_subtree_size_with_diameter(t, d)
            assert size == brute_force_max_subtree(t, d), (t.edges, d)
            assert witness.m == size
            assert set(witness.edges) <= set(t.edges)


def test_max_subtree_rejects_non_tree():
    with pytest.raises(ValueError):
        max_subtree_size_with_diameter(cycle_graph(4), 2)


def test_bfs_tree_depths():
    t = bfs_tree(wheel_graph(6), 6)
    assert t.depth == (1, 1, 1, 1, 1, 1, 0)
    assert t.height() == 1
    assert is_star(star_graph(3)) and is_star(path_graph(2))
    assert not is_star(path_graph(4))
