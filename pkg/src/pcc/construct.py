"""Constructive colorings, one per structural result.

Every constructor returns a ConstructionReport whose coloring is expected
to pass verify_coloring at the requested window; the constructors for
2-connected graphs, Cartesian products, and permutation graphs verify
their own output and raise InvariantViolation rather than return a bad
coloring.  Greedy choices always take the lowest admissible color so
outputs are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import (
    Edge,
    EdgeColoring,
    Graph,
    InvariantViolation,
    Permutation,
    cartesian_product,
    complete_multipartite_graph,
    hypercube_graph,
    join,
    normalize_edge,
    permutation_graph,
    wheel_graph,
)
from .structure import (
    RootedTree,
    bfs_tree,
    ear_decomposition,
    eccentricity,
    is_2_connected,
    is_complete,
    is_connected,
    is_star,
    is_tree,
    minimally_2connected_spanning,
    radius,
)
from .verify import verify_coloring, _validate_window


@dataclass(frozen=True)
class ConstructionReport:
    """A constructed coloring together with the claimed color count."""

    coloring: EdgeColoring
    claimed_colors: int
    theorem: str
    notes: str = ""

    def __post_init__(self):
        if len(self.coloring.used_colors()) > self.claimed_colors:
            raise InvariantViolation(
                f"{self.theorem}: coloring uses {len(self.coloring.used_colors())} "
                f"colors, more than the claimed {self.claimed_colors}"
            )


@dataclass(frozen=True)
class AnchorSet:
    """Two or three length-2 paths with a common end, stored outward as
    (x, a, b) for the path x-a-b.  The paths use exactly two distinct
    edges at x, and under a coloring their edges carry at most 4 colors."""

    vertex: int
    paths: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if len(self.paths) not in (2, 3):
            raise InvariantViolation(f"anchor set at {self.vertex} needs 2 or 3 paths")
        for p in self.paths:
            if p[0] != self.vertex or len(set(p)) != 3:
                raise InvariantViolation(f"bad anchor path {p} at vertex {self.vertex}")
        if len({p[1] for p in self.paths}) != 2:
            raise InvariantViolation(
                f"anchor set at {self.vertex} must touch exactly two incident edges"
            )

    def incident_neighbors(self) -> tuple[int, int]:
        return tuple(sorted({p[1] for p in self.paths}))

    def edge_colors(self, colors: dict[Edge, int]) -> set[int]:
        out = set()
        for x, a, b in self.paths:
            out.add(colors[normalize_edge(x, a)])
            out.add(colors[normalize_edge(a, b)])
        return out


def _lowest(candidates: Iterable[int], excluded: set[int], context: str) -> int:
    for c in sorted(set(candidates)):
        if c not in excluded:
            return c
    raise InvariantViolation(f"no admissible color for {context}")


# ---------------------------------------------------------------------------
# traceable graphs
# ---------------------------------------------------------------------------


def _check_hamiltonian_path(g: Graph, path: Sequence[int]) -> None:
    if len(path) != g.n or len(set(path)) != g.n:
        raise ValueError("sequence is not a spanning simple path")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"sequence is not a path: missing edge ({a}, {b})")


def color_traceable(g: Graph, ham_path: Sequence[int], ell: int) -> ConstructionReport:
    """Cycle ell+1 colors along a Hamiltonian path, color 1 elsewhere."""
    ell = _validate_window(ell)
    _check_hamiltonian_path(g, ham_path)
    colors = {e: 1 for e in g.edges}
    for i, (a, b) in enumerate(zip(ham_path, ham_path[1:])):
        colors[normalize_edge(a, b)] = (i % (ell + 1)) + 1
    return ConstructionReport(
        EdgeColoring(colors), ell + 1, "traceable", f"path of {g.n} vertices"
    )


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------


def _tree_conflict_colors(
    t: Graph, edge: Edge, ell: int, colors: dict[Edge, int]
) -> set[int]:
    """Colors of colored edges within edge-gap <= ell-1 of ``edge``.  Two
    tree edges at gap g lie on a common path with g edges strictly between
    them, so they conflict exactly when g <= ell-1."""
    a, b = edge
    reach = ell - 1
    out: set[int] = set()
    for src, block in ((a, b), (b, a)):
        dist = {src: 0}
        frontier = [src]
        while frontier:
            nxt = []
            for x in frontier:
                if dist[x] >= reach:
                    continue
                for y in t.adjacency[x]:
                    if y == block and x == src:
                        continue
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        for f, c in colors.items():
            if f == edge:
                continue
            near = min(dist.get(f[0], reach + 1), dist.get(f[1], reach + 1))
            if near <= reach:
                out.add(c)
    return out


def color_tree(t: Graph, ell: int) -> ConstructionReport:
    """Rainbow a maximum bounded-diameter core subtree, then level outward,
    giving each edge the lowest color unused within its conflict window.

    In a tree every path is the unique path between its ends, so the
    coloring must make all paths window-proper.  The color count equals
    the maximum size of a subtree with diameter <= ell+1; for ell = 2 that
    is the largest degree sum over adjacent pairs, minus one.
    """
    from .structure import max_subtree_size_with_diameter

    ell = _validate_window(ell)
    if not is_tree(t):
        raise ValueError("tree coloring requires a tree")
    if t.m < 1:
        raise ValueError("tree coloring requires at least one edge")
    k, core = max_subtree_size_with_diameter(t, ell + 1)
    colors: dict[Edge, int] = {}
    for i, e in enumerate(core.edges):
        colors[e] = i + 1
    core_vertices = {v for e in core.edges for v in e}
    dist = {v: 0 for v in core_vertices}
    frontier = sorted(core_vertices)
    while frontier:
        nxt = []
        for x in frontier:
            for y in t.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = sorted(nxt)
    pending = [e for e in t.edges if e not in colors]
    pending.sort(key=lambda e: (max(dist[e[0]], dist[e[1]]), e))
    for e in pending:
        conflict = _tree_conflict_colors(t, e, ell, colors)
        colors[e] = _lowest(range(1, k + 1), conflict, f"tree edge {e}")
    return ConstructionReport(
        EdgeColoring(colors, num_colors=k),
        k,
        "tree",
        f"core subtree of diameter <= {ell + 1} with {k} edges",
    )


# ---------------------------------------------------------------------------
# complete bipartite and multipartite graphs
# ---------------------------------------------------------------------------


def _vectors_with_units(count: int, width: int, alphabet: int) -> list[tuple[int, ...]]:
    """Distinct vectors over {1..alphabet}^width: first the single-entry
    perturbations (2,1,..,1) .. (1,..,1,2), then lexicographic fill."""
    units = [tuple(2 if j == i else 1 for j in range(width)) for i in range(width)]
    if count < width or count > alphabet**width:
        raise InvariantViolation(
            f"cannot pick {count} distinct vectors with units over "
            f"{alphabet}^{width}"
        )
    taken = set(units)
    out = list(units)
    for vec in itertools.product(range(1, alphabet + 1), repeat=width):
        if len(out) >= count:
            break
        if vec not in taken:
            taken.add(vec)
            out.append(vec)
    return out[:count]


def _binary_lex(count: int, width: int) -> list[tuple[int, ...]]:
    return list(itertools.islice(itertools.product((1, 2), repeat=width), count))


def _cross_colors(
    small: Sequence[int], large: Sequence[int], ell: int
) -> tuple[dict[Edge, int], int, str]:
    """Colors for all edges between two sides of a complete bipartite
    subgraph, vector style: each large-side vertex carries a vector indexed
    by the small side, and the edge to small[i] gets component i.  Requires
    |small| >= 2.  Returns (colors, color count, case note)."""
    s, n = len(small), len(large)
    if s < 2:
        raise InvariantViolation("vector coloring needs at least 2 vertices per side")

    def apply(vectors: list[tuple[int, ...]]) -> dict[Edge, int]:
        colors = {}
        for w, vec in zip(large, vectors):
            for i, u in enumerate(small):
                colors[normalize_edge(u, w)] = vec[i]
        return colors

    if n <= 2**s:
        return apply(_vectors_with_units(n, s, 2)), 2, "binary vectors"
    if ell == 2:
        vectors = _binary_lex(2**s, s) + [(3,) * s] * (n - 2**s)
        return apply(vectors), 3, "binary vectors plus all-3 tail"
    if n <= 3**s:
        return apply(_vectors_with_units(n, s, 3)), 3, "ternary vectors"
    tail = (3,) + (4,) * (s - 1)
    vectors = _binary_lex(2**s, s) + [tail] * (n - 2**s)
    return apply(vectors), 4, "binary vectors plus (3,4,..,4) tail"


def color_complete_bipartite(m: int, n: int, ell: int) -> ConstructionReport:
    """Vector coloring of K_{m,n} (side U is 0..m-1, side V is m..m+n-1)."""
    ell = _validate_window(ell)
    if ell < 2:
        raise ValueError(f"complete bipartite coloring requires ell >= 2, got {ell}")
    if not (1 <= m <= n):
        raise ValueError(f"requires 1 <= m <= n, got ({m}, {n})")
    if m == 1:
        colors = {(0, 1 + j): j + 1 for j in range(n)}
        return ConstructionReport(
            EdgeColoring(colors), n, "complete_bipartite", "star: all edges distinct"
        )
    colors, claimed, note = _cross_colors(
        list(range(m)), list(range(m, m + n)), ell
    )
    return ConstructionReport(
        EdgeColoring(colors), claimed, "complete_bipartite", note
    )


def balanced_split(parts: Sequence[int]) -> Optional[int]:
    """Smallest prefix length i (1 <= i <= t-1) whose prefix/suffix sums
    (m_i = smaller, M_i = larger) satisfy M_i <= 2^{m_i}, else None."""
    parts = list(parts)
    if len(parts) < 3:
        raise ValueError("balanced split requires at least 3 parts")
    if parts != sorted(parts):
        raise ValueError("parts must be sorted ascending")
    total = sum(parts)
    prefix = 0
    for i in range(1, len(parts)):
        prefix += parts[i - 1]
        lo, hi = min(prefix, total - prefix), max(prefix, total - prefix)
        if hi <= 2**lo:
            return i
    return None


def color_complete_multipartite(parts: Sequence[int], ell: int) -> ConstructionReport:
    """Coloring of the complete multipartite graph on sorted ascending parts."""
    ell = _validate_window(ell)
    parts = tuple(int(p) for p in parts)
    if len(parts) < 3:
        raise ValueError(f"requires at least 3 parts, got {len(parts)}")
    if list(parts) != sorted(parts) or parts[0] < 1:
        raise ValueError("parts must be positive and sorted ascending")
    g = complete_multipartite_graph(parts)
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    groups = [list(range(offsets[i], offsets[i + 1])) for i in range(len(parts))]
    n = parts[-1]
    m = sum(parts[:-1])

    if n == 1:
        colors = {e: 1 for e in g.edges}
        return ConstructionReport(
            EdgeColoring(colors), 1, "complete_multipartite", "complete graph"
        )

    if n > 2**m:
        u_side = [v for grp in groups[:-1] for v in grp]
        v_side = groups[-1]
        vectors = _binary_lex(2**m, m) + [(1,) + (2,) * (m - 1)] * (n - 2**m)
        colors = {}
        for w, vec in zip(v_side, vectors):
            for i, u in enumerate(u_side):
                colors[normalize_edge(u, w)] = vec[i]
        for e in g.edges:
            colors.setdefault(e, 3)
        return ConstructionReport(
            EdgeColoring(colors),
            3,
            "complete_multipartite",
            "largest part exceeds 2^m: binary vectors, (1,2,..,2) tail, color 3 inside",
        )

    # Two colors via a spanning complete bipartite subgraph.
    if m <= n:
        small = [v for grp in groups[:-1] for v in grp]
        large = groups[-1]
        note = "spanning bipartition: first t-1 parts vs largest part"
    else:
        i = balanced_split(parts)
        if i is None:
            raise InvariantViolation(
                f"no balanced split for parts {parts} although 2 <= n <= 2^m"
            )
        a_side = [v for grp in groups[:i] for v in grp]
        b_side = [v for grp in groups[i:] for v in grp]
        small, large = sorted((a_side, b_side), key=len)
        note = f"spanning bipartition from balanced split at i={i}"
    cross, claimed, _ = _cross_colors(small, large, ell if ell >= 2 else 2)
    if claimed != 2:
        raise InvariantViolation(f"expected a 2-color bipartite core, got {claimed}")
    colors = dict(cross)
    for e in g.edges:
        colors.setdefault(e, 1)
    return ConstructionReport(EdgeColoring(colors), 2, "complete_multipartite", note)


# ---------------------------------------------------------------------------
# wheels
# ---------------------------------------------------------------------------

# Two-colorings of the small wheels, recovered once by exhaustive search
# (tests regenerate and compare them).  Any valid 2-coloring here has all
# witness paths of length <= 2, so it stays valid for every window >= 2.
_SMALL_WHEEL_COLORINGS = {
    4: {(0, 1): 1, (0, 3): 1, (0, 4): 1, (1, 2): 1, (1, 4): 1, (2, 3): 1, (2, 4): 2, (3, 4): 2},
    5: {(0, 1): 1, (0, 4): 1, (0, 5): 1, (1, 2): 1, (1, 5): 1, (2, 3): 1, (2, 5): 2, (3, 4): 2, (3, 5): 2, (4, 5): 2},
    6: {(0, 1): 1, (0, 5): 1, (0, 6): 1, (1, 2): 1, (1, 6): 2, (2, 3): 2, (2, 6): 2, (3, 4): 1, (3, 6): 2, (4, 5): 2, (4, 6): 1, (5, 6): 1},
}


def color_wheel(n: int, ell: int) -> ConstructionReport:
    """Coloring of W_n (rim 0..n-1, center n).

    n = 3 is complete; 4 <= n <= 6 use the stored 2-colorings; for n >= 7
    rim edge (j, j+1) gets color (j mod 3) + 1, each spoke takes the color
    missing from its two rim neighbors, and the spoke at rim vertex 0 is
    pinned to 3.
    """
    ell = _validate_window(ell)
    if ell < 2:
        raise ValueError(f"wheel coloring requires ell >= 2, got {ell}")
    if n < 3:
        raise ValueError(f"wheel requires n >= 3, got {n}")
    g = wheel_graph(n)
    if n == 3:
        return ConstructionReport(
            EdgeColoring({e: 1 for e in g.edges}), 1, "wheel", "complete"
        )
    if n <= 6:
        return ConstructionReport(
            EdgeColoring(dict(_SMALL_WHEEL_COLORINGS[n])), 2, "wheel", "stored 2-coloring"
        )
    colors: dict[Edge, int] = {}

    def rim_color(j: int) -> int:
        return (j % 3) + 1

    for j in range(n):
        colors[normalize_edge(j, (j + 1) % n)] = rim_color(j)
    for j in range(n):
        if j == 0:
            colors[normalize_edge(0, n)] = 3
        else:
            colors[normalize_edge(j, n)] = 6 - rim_color(j) - rim_color((j - 1) % n)
    return ConstructionReport(
        EdgeColoring(colors), 3, "wheel", "mod-3 rim with complementary spokes"
    )


# ---------------------------------------------------------------------------
# hypercubes
# ---------------------------------------------------------------------------


def color_hypercube(t: int, ell: int) -> ConstructionReport:
    """Coloring of Q_t by edge dimension, folded mod ell+1 when ell < t."""
    ell = _validate_window(ell)
    if ell < 2:
        raise ValueError(f"hypercube coloring requires ell >= 2, got {ell}")
    if t < 1:
        raise ValueError(f"hypercube requires t >= 1, got {t}")
    g = hypercube_graph(t)
    if t == 1:
        return ConstructionReport(EdgeColoring({(0, 1): 1}), 1, "hypercube", "single edge")

    def dim(u: int, v: int) -> int:
        return (u ^ v).bit_length()

    if ell >= t or t == 2:
        colors = {(u, v): dim(u, v) for u, v in g.edges}
        return ConstructionReport(
            EdgeColoring(colors), t, "hypercube", "identity dimension coloring"
        )
    colors = {(u, v): ((dim(u, v) - 1) % (ell + 1)) + 1 for u, v in g.edges}
    return ConstructionReport(
        EdgeColoring(colors), ell + 1, "hypercube", f"dimensions folded mod {ell + 1}"
    )


# ---------------------------------------------------------------------------
# joins
# ---------------------------------------------------------------------------


def color_join(g: Graph, h: Graph) -> ConstructionReport:
    """Vector-color the spanning complete bipartite cross edges of G v H,
    color 1 inside both factors (window fixed at 2)."""
    if g.n < 2 or h.n < 2:
        raise ValueError("join coloring requires nontrivial factors")
    if not (is_connected(g) and is_connected(h)):
        raise ValueError("join coloring requires connected factors")
    jg = join(g, h)
    g_side = list(range(g.n))
    h_side = list(range(g.n, g.n + h.n))
    small, large = sorted((g_side, h_side), key=len)
    cross, claimed, note = _cross_colors(small, large, 2)
    colors = dict(cross)
    for e in jg.edges:
        colors.setdefault(e, 1)
    return ConstructionReport(EdgeColoring(colors), claimed, "join", note)


# ---------------------------------------------------------------------------
# Cartesian products
# ---------------------------------------------------------------------------


def _product_edge(h_n: int, u1: int, v1: int, u2: int, v2: int) -> Edge:
    return normalize_edge(u1 * h_n + v1, u2 * h_n + v2)


def _transpose_colors(colors: dict[Edge, int], a: Graph, b: Graph) -> dict[Edge, int]:
    """Map a coloring of a box b onto b box a (swap the coordinates)."""
    out = {}
    for (x, y), c in colors.items():
        xa, xb = divmod(x, b.n)
        ya, yb = divmod(y, b.n)
        out[normalize_edge(xb * a.n + xa, yb * a.n + ya)] = c
    return out


def _tree_with_root_ecc_exactly_2(g: Graph) -> Optional[RootedTree]:
    eccs = [eccentricity(g, v) for v in range(g.n)]
    rad = min(eccs)
    if rad == 2:
        return bfs_tree(g, eccs.index(2))
    if rad == 1 and g.n >= 3:
        center = eccs.index(1)
        leaf = 0 if center != 0 else 1
        parent: list[Optional[int]] = [center] * g.n
        depth = [2] * g.n
        parent[leaf], depth[leaf] = None, 0
        parent[center], depth[center] = leaf, 1
        return RootedTree(leaf, tuple(parent), tuple(depth))
    return None


def _tree_with_root_ecc_le_2(g: Graph) -> Optional[RootedTree]:
    eccs = [eccentricity(g, v) for v in range(g.n)]
    rad = min(eccs)
    if rad <= 2:
        return bfs_tree(g, eccs.index(rad))
    return None


def _tree_with_root_ecc_ge_3(g: Graph) -> Optional[RootedTree]:
    if radius(g) >= 3:
        return bfs_tree(g, 0)
    # Anchor a 4-vertex path as tree edges, then grow the rest by BFS.
    for a in range(g.n):
        for b in g.adjacency[a]:
            for c in g.adjacency[b]:
                if c in (a, b):
                    continue
                for d in g.adjacency[c]:
                    if d in (a, b, c):
                        continue
                    parent: list[Optional[int]] = [None] * g.n
                    depth = [-1] * g.n
                    depth[a], depth[b], depth[c], depth[d] = 0, 1, 2, 3
                    parent[b], parent[c], parent[d] = a, b, c
                    from collections import deque

                    queue = deque([a, b, c, d])
                    while queue:
                        x = queue.popleft()
                        for y in g.adjacency[x]:
                            if depth[y] == -1:
                                depth[y] = depth[x] + 1
                                parent[y] = x
                                queue.append(y)
                    return RootedTree(a, tuple(parent), tuple(depth))
    return None


def _tree_copy_edges_with_depth(tree: RootedTree):
    """Tree edges as (child, parent, child_depth), BFS order."""
    out = []
    for v in range(tree.n):
        p = tree.parent[v]
        if p is not None:
            out.append((v, p, tree.depth[v]))
    out.sort(key=lambda e: (e[2], e[0]))
    return out


def _root_path(tree: RootedTree, v: int) -> list[int]:
    return list(reversed(tree.path_to_root(v)))


def _template_constraints(paths: list[list[int]]) -> dict[Edge, set[Edge]]:
    """Pairwise inequality constraints: edges at positions i < j with
    j - i <= 2 on some template path must receive different colors."""
    conflicts: dict[Edge, set[Edge]] = {}
    for path in paths:
        edges = [normalize_edge(a, b) for a, b in zip(path, path[1:])]
        for j in range(len(edges)):
            for back in (1, 2):
                if j - back < 0:
                    continue
                e, f = edges[j], edges[j - back]
                conflicts.setdefault(e, set()).add(f)
                conflicts.setdefault(f, set()).add(e)
    return conflicts


def _cartesian_general(g: Graph, h: Graph) -> tuple[dict[Edge, int], str]:
    """3-coloring of a spanning tree box via template paths: anchor paths of
    both trees at a shared root so down-one-tree-up-the-other walks are
    window-proper, then greedy lowest colors subject to those windows."""
    # Prefer both roots at tree eccentricity exactly 2: depths {0,1,2} on
    # both sides feed the mod-3 witness arithmetic for every pair.  A side
    # that cannot reach 2 (only K_2) drops to eccentricity <= 2; if either
    # side is too deep for that, both go to eccentricity >= 3.
    s_tree = t_tree = None
    note = ""
    g2, h2 = _tree_with_root_ecc_exactly_2(g), _tree_with_root_ecc_exactly_2(h)
    if g2 is not None and h2 is not None:
        s_tree, t_tree, note = g2, h2, "roots at eccentricity (2, 2)"
    elif g2 is not None and _tree_with_root_ecc_le_2(h) is not None:
        s_tree, t_tree, note = g2, _tree_with_root_ecc_le_2(h), "roots at eccentricity (2, <=2)"
    elif h2 is not None and _tree_with_root_ecc_le_2(g) is not None:
        s_tree, t_tree, note = _tree_with_root_ecc_le_2(g), h2, "roots at eccentricity (<=2, 2)"
    if s_tree is None:
        s_tree = _tree_with_root_ecc_ge_3(g)
        t_tree = _tree_with_root_ecc_ge_3(h)
        note = "roots at eccentricity (>=3, >=3)"
        if s_tree is None or t_tree is None:
            raise InvariantViolation(
                "no root choice with both tree eccentricities >= 3 or one of (2, <=2)"
            )
    u1, v1 = s_tree.root, t_tree.root
    hn = h.n

    def pv(u: int, v: int) -> int:
        return u * hn + v

    templates: list[list[int]] = []
    for j in range(g.n):
        down = [pv(x, v1) for x in reversed(_root_path(s_tree, j))]
        for t in range(h.n):
            up = [pv(u1, y) for y in _root_path(t_tree, t)[1:]]
            templates.append(down + up)
    for i in range(h.n):
        if i == v1:
            continue
        t_mid = [pv(u1, y) for y in _root_path(t_tree, i)[1:]]
        for j1 in range(g.n):
            down = [pv(x, v1) for x in reversed(_root_path(s_tree, j1))]
            for ji in range(g.n):
                out = [pv(x, i) for x in _root_path(s_tree, ji)[1:]]
                templates.append(down + t_mid + out)
    for s in range(g.n):
        if s == u1:
            continue
        s_mid = [pv(x, v1) for x in _root_path(s_tree, s)[1:]]
        for t1 in range(h.n):
            down = [pv(u1, y) for y in reversed(_root_path(t_tree, t1))]
            for ts in range(h.n):
                out = [pv(s, y) for y in _root_path(t_tree, ts)[1:]]
                templates.append(down + s_mid + out)
    conflicts = _template_constraints(templates)

    order: list[Edge] = []
    for child, parent, _ in _tree_copy_edges_with_depth(t_tree):
        order.append(_product_edge(hn, u1, child, u1, parent))
    for child, parent, _ in _tree_copy_edges_with_depth(s_tree):
        order.append(_product_edge(hn, child, v1, parent, v1))
    for i in range(h.n):
        if i == v1:
            continue
        for child, parent, _ in _tree_copy_edges_with_depth(s_tree):
            order.append(_product_edge(hn, child, i, parent, i))
    for s in range(g.n):
        if s == u1:
            continue
        for child, parent, _ in _tree_copy_edges_with_depth(t_tree):
            order.append(_product_edge(hn, s, child, s, parent))

    colors: dict[Edge, int] = {}
    for e in order:
        taken = {colors[f] for f in conflicts.get(e, ()) if f in colors}
        colors[e] = _lowest(range(1, 4), taken, f"product tree edge {e}")
    return colors, note


def _cartesian_k3(other: Graph, k3: Graph) -> dict[Edge, int]:
    """3-coloring of (spanning tree of other) box K_3: the middle triangle
    copy carries ascending depth colors, the outer two descending ones, and
    the triangle rungs continue those cyclic runs."""
    s = bfs_tree(other, 0)
    hn = 3

    def pv(u: int, v: int) -> int:
        return u * hn + v

    res: dict[Edge, int] = {}
    for child, parent, d in _tree_copy_edges_with_depth(s):
        res[_product_edge(hn, child, 1, parent, 1)] = (d - 1) % 3
        for copy in (0, 2):
            res[_product_edge(hn, child, copy, parent, copy)] = (-1 - d) % 3
    res[_product_edge(hn, 0, 0, 0, 1)] = 2
    res[_product_edge(hn, 0, 1, 0, 2)] = 2
    res[_product_edge(hn, 0, 0, 0, 2)] = 2
    for u in range(other.n):
        if u == 0:
            continue
        d = s.depth[u]
        res[_product_edge(hn, u, 0, u, 1)] = d % 3
        res[_product_edge(hn, u, 1, u, 2)] = (-2 - d) % 3
        res[_product_edge(hn, u, 0, u, 2)] = (d + 1) % 3
    return {e: c + 1 for e, c in res.items()}


def _cartesian_star(star: Graph, other: Graph) -> dict[Edge, int]:
    """4-coloring of star box other.  The tree of the deep factor is rooted
    at an end of a longest path; its root copy cycles 1,2,3 by depth and all
    other copies cycle one step ahead.  Star edges take color 4 at the root
    level and, elsewhere, the single color missing around their level."""
    center = max(range(star.n), key=lambda v: star.degree(v))
    eccs = [eccentricity(other, v) for v in range(other.n)]
    root = eccs.index(max(eccs))
    t_tree = bfs_tree(other, root)
    hn = other.n

    def pv(u: int, v: int) -> int:
        return u * hn + v

    res: dict[Edge, int] = {}
    for child, parent, d in _tree_copy_edges_with_depth(t_tree):
        for u in range(star.n):
            residue = (d - 1) % 3 if u == center else d % 3
            res[_product_edge(hn, u, child, u, parent)] = residue + 1
    for v in range(other.n):
        d = t_tree.depth[v]
        if v == root or d >= 2:
            c = 4
        else:
            # Depth 1: the two color-4 star levels would sit only two apart
            # on the anchoring cycle, so take the residue missing around it.
            c = ({0, 1, 2} - {(d - 1) % 3, d % 3}).pop() + 1
        for leaf in range(star.n):
            if leaf != center:
                res[_product_edge(hn, center, v, leaf, v)] = c
    return res


def color_cartesian(g: Graph, h: Graph) -> ConstructionReport:
    """Coloring of G box H (window fixed at 2).

    A star times a factor of radius >= 3 gets the 4-color scheme; a K_3
    factor gets its dedicated 3-color scheme; everything else gets the
    template-greedy 3-coloring.  The output is verified before returning.
    """
    if g.n < 2 or h.n < 2:
        raise ValueError("product coloring requires nontrivial factors")
    if not (is_connected(g) and is_connected(h)):
        raise ValueError("product coloring requires connected factors")
    if is_complete(g) and is_complete(h):
        raise ValueError("product coloring requires at least one non-complete factor")
    pg = cartesian_product(g, h)
    if is_star(g) and radius(h) >= 3:
        colors, claimed, note = _cartesian_star(g, h), 4, "star times deep factor"
    elif is_star(h) and radius(g) >= 3:
        colors = _transpose_colors(_cartesian_star(h, g), h, g)
        claimed, note = 4, "deep factor times star"
    elif is_complete(g) and g.n == 3:
        colors = _transpose_colors(_cartesian_k3(h, g), h, g)
        claimed, note = 3, "left factor K_3"
    elif is_complete(h) and h.n == 3:
        colors, claimed, note = _cartesian_k3(g, h), 3, "right factor K_3"
    else:
        colors, note = _cartesian_general(g, h)
        claimed = 3
    full = dict(colors)
    for e in pg.edges:
        full.setdefault(e, 1)
    coloring = EdgeColoring(full)
    cert = verify_coloring(pg, coloring, 2)
    if not cert.ok:
        raise InvariantViolation(
            f"product coloring failed verification at pair {cert.failing_pair} ({note})"
        )
    return ConstructionReport(coloring, claimed, "cartesian", note)


# ---------------------------------------------------------------------------
# 2-connected graphs
# ---------------------------------------------------------------------------


def _base_cycle_pattern(r: int) -> list[int]:
    pattern = [(i % 3) + 1 for i in range(r - r % 3)]
    if r % 3 == 1:
        pattern.append(4)
    elif r % 3 == 2:
        pattern.extend((4, 5))
    return pattern


def _anchored_proper_path(
    adjacency: dict[int, list[int]],
    colors: dict[Edge, int],
    anchors: dict[int, AnchorSet],
    u: int,
    v: int,
) -> Optional[list[int]]:
    """Window-proper u-v path whose first two edges follow one of u's anchor
    paths and whose last two match one of v's, searched by ascending DFS."""
    end_ok = {(p[1], p[2]) for p in anchors[v].paths}

    def window_ok(seq: list[int], c: int) -> bool:
        return c not in seq[-2:]

    for _, w1, w2 in anchors[u].paths:
        if w1 not in adjacency.get(u, ()) or w2 not in adjacency.get(w1, ()):
            continue
        if w1 == v or (w2 == v and (w1, u) not in end_ok):
            continue
        if w2 == v:
            return [u, w1, v]
        path = [u, w1, w2]
        seq = [colors[normalize_edge(u, w1)], colors[normalize_edge(w1, w2)]]
        visited = {u, w1, w2}

        def dfs(x: int) -> Optional[list[int]]:
            for y in adjacency[x]:
                if y in visited:
                    continue
                c = colors[normalize_edge(x, y)]
                if not window_ok(seq, c):
                    continue
                if y == v:
                    if (path[-1], path[-2]) in end_ok:
                        return path + [v]
                    continue
                visited.add(y)
                path.append(y)
                seq.append(c)
                found = dfs(y)
                if found is not None:
                    return found
                seq.pop()
                path.pop()
                visited.remove(y)
            return None

        found = dfs(w2)
        if found is not None:
            return found
    return None


def _near_window_colors(w_path: list[int], idx: int, lookup) -> set[int]:
    """Colors already placed on the edges at distance <= 2 positions from
    edge idx along the working path."""
    out = set()
    for j in (idx - 2, idx - 1, idx + 1, idx + 2):
        if 0 <= j < len(w_path) - 1:
            c = lookup(w_path[j], w_path[j + 1])
            if c is not None:
                out.add(c)
    return out


def _color_ear(
    colors: dict[Edge, int],
    anchors: dict[int, AnchorSet],
    adjacency: dict[int, list[int]],
    ear_index: int,
    u: int,
    interior: list[int],
    v: int,
) -> tuple[dict[Edge, int], dict[int, AnchorSet]]:
    """Assign colors to one ear attached at (u, v); returns the new edge
    colors and the anchor sets for the interior vertices.  Raises
    InvariantViolation when no admissible color exists in this orientation.
    """
    found = _anchored_proper_path(adjacency, colors, anchors, u, v)
    if found is None:
        raise InvariantViolation(
            f"ear {ear_index}: no anchored window-proper path between {u} and {v}"
        )
    w1, w2 = found[1], found[2]
    v1, v2 = anchors[v].incident_neighbors()
    f_pv = anchors[v].edge_colors(colors)
    c_vv1 = colors[normalize_edge(v, v1)]
    c_vv2 = colors[normalize_edge(v, v2)]
    c_uw1 = colors[normalize_edge(u, w1)]
    c_w1w2 = colors[normalize_edge(w1, w2)]
    trial: dict[Edge, int] = {}

    def lookup(a: int, b: int) -> Optional[int]:
        e = normalize_edge(a, b)
        return trial.get(e, colors.get(e))

    def put(a: int, b: int, c: int) -> None:
        trial[normalize_edge(a, b)] = c

    p = len(interior)
    ctx = f"ear {ear_index} (p={p})"
    palette = range(1, 6)
    if p == 1:
        x = interior[0]
        put(x, v, _lowest(palette, f_pv, f"{ctx} end edge"))
        if c_vv1 == c_vv2:
            put(x, u, _lowest(palette, {c_w1w2, c_uw1}, f"{ctx} start edge"))
        else:
            cand = {lookup(x, v), c_vv1, c_vv2}
            put(x, u, _lowest(cand, {c_w1w2, c_uw1}, f"{ctx} start edge"))
        new_anchors = {x: AnchorSet(x, ((x, u, w1), (x, v, v1), (x, v, v2)))}
    else:
        w_path = [w2, w1, u] + interior + [v]
        last, second_last = interior[-1], interior[-2]
        put(last, v, _lowest(palette, f_pv, f"{ctx} end edge"))
        if c_vv1 == c_vv2:
            put(
                second_last,
                last,
                _lowest(palette, {lookup(last, v), c_vv1}, f"{ctx} next-to-end edge"),
            )
            for idx in range(p, 1, -1):
                put(
                    w_path[idx],
                    w_path[idx + 1],
                    _lowest(
                        palette,
                        _near_window_colors(w_path, idx, lookup),
                        f"{ctx} edge {idx}",
                    ),
                )
        elif p == 2:
            cand = {lookup(last, v), c_vv1, c_vv2}
            put(u, interior[0], _lowest(cand, {c_uw1, c_w1w2}, f"{ctx} start edge"))
            put(
                interior[0],
                interior[1],
                _lowest(
                    palette,
                    {lookup(last, v), c_vv1, c_vv2, lookup(u, interior[0]), c_uw1},
                    f"{ctx} middle edge",
                ),
            )
        else:
            put(
                interior[-3],
                interior[-2],
                _lowest({c_vv1, c_vv2}, {c_uw1}, f"{ctx} pinned edge"),
            )
            for idx in range(2, p):
                put(
                    w_path[idx],
                    w_path[idx + 1],
                    _lowest(
                        palette,
                        _near_window_colors(w_path, idx, lookup),
                        f"{ctx} edge {idx}",
                    ),
                )
            put(
                second_last,
                last,
                _lowest(
                    palette,
                    {
                        lookup(last, v),
                        c_vv1,
                        c_vv2,
                        lookup(interior[-3], interior[-2]),
                        lookup(w_path[p - 1], w_path[p]),
                    },
                    f"{ctx} next-to-end edge",
                ),
            )
        new_anchors = {}
        x2 = interior[0]
        new_anchors[x2] = AnchorSet(x2, ((x2, u, w1), (x2, w_path[4], w_path[5])))
        for i in range(1, p - 1):
            x = interior[i]
            widx = i + 3
            new_anchors[x] = AnchorSet(
                x,
                (
                    (x, w_path[widx - 1], w_path[widx - 2]),
                    (x, w_path[widx + 1], w_path[widx + 2]),
                ),
            )
        new_anchors[last] = AnchorSet(
            last, ((last, second_last, w_path[p]), (last, v, v1), (last, v, v2))
        )
    return trial, new_anchors


def color_2connected(g: Graph) -> ConstructionReport:
    """At most 5 colors for a 2-connected graph (window fixed at 2).

    Pipeline: reduce to a minimally 2-connected spanning subgraph, take an
    ear decomposition, color the base cycle 1,2,3,... with 4 (and 5) on the
    one or two leftover edges, then color each ear so the walk from the
    chosen anchor of one endpoint through the ear stays window-proper while
    each vertex keeps an anchor set spanning at most 4 colors.  Remaining
    edges of the input get color 1, and the result must verify.
    """
    if not is_2_connected(g):
        raise ValueError("coloring requires a 2-connected graph")
    reduced = minimally_2connected_spanning(g)
    decomp = ear_decomposition(reduced)
    cyc = list(decomp.base_cycle)
    r = len(cyc)
    colors: dict[Edge, int] = {}
    pattern = _base_cycle_pattern(r)
    for i in range(r):
        colors[normalize_edge(cyc[i], cyc[(i + 1) % r])] = pattern[i]
    anchors: dict[int, AnchorSet] = {}
    for i, x in enumerate(cyc):
        anchors[x] = AnchorSet(
            x,
            (
                (x, cyc[(i - 1) % r], cyc[(i - 2) % r]),
                (x, cyc[(i + 1) % r], cyc[(i + 2) % r]),
            ),
        )
    adjacency: dict[int, list[int]] = {x: [] for x in cyc}
    for i in range(r):
        adjacency[cyc[i]].append(cyc[(i + 1) % r])
        adjacency[cyc[i]].append(cyc[(i - 1) % r])
    for x in adjacency:
        adjacency[x].sort()

    for ear_index, ear in enumerate(decomp.ears):
        attempts = [(ear[0], list(ear[1:-1]), ear[-1])]
        attempts.append((ear[-1], list(reversed(ear[1:-1])), ear[0]))
        last_error: Optional[InvariantViolation] = None
        for u, interior, v in attempts:
            try:
                trial, new_anchors = _color_ear(
                    colors, anchors, adjacency, ear_index, u, interior, v
                )
                break
            except InvariantViolation as err:
                last_error = err
        else:
            raise InvariantViolation(
                f"ear {ear_index} {ear} admits no orientation: {last_error}"
            )
        colors.update(trial)
        anchors.update(new_anchors)
        seq = [u] + interior + [v]
        for a, b in zip(seq, seq[1:]):
            adjacency.setdefault(a, []).append(b)
            adjacency.setdefault(b, []).append(a)
        for x in seq:
            adjacency[x] = sorted(set(adjacency[x]))
        for x, anchor in anchors.items():
            palette = anchor.edge_colors(colors)
            if len(palette) > 4:
                raise InvariantViolation(
                    f"after ear {ear_index}: anchor at {x} spans {len(palette)} colors"
                )

    for e in g.edges:
        colors.setdefault(e, 1)
    coloring = EdgeColoring(colors)
    cert = verify_coloring(g, coloring, 2)
    if not cert.ok:
        raise InvariantViolation(
            f"2-connected coloring failed verification at pair {cert.failing_pair}"
        )
    return ConstructionReport(
        coloring,
        5,
        "two_connected",
        f"reduced to {reduced.m} edges, base cycle {r}, {len(decomp.ears)} ears",
    )


# ---------------------------------------------------------------------------
# permutation graphs
# ---------------------------------------------------------------------------


def color_permutation_graph(
    g: Graph, ham_path: Sequence[int], alpha: Permutation, ell: int
) -> ConstructionReport:
    """Coloring of the permutation graph of a traceable graph.

    The Hamiltonian path fixes position labels v_1..v_n; in those terms the
    matching permutes positions.  If the matching sends the last position to
    an end, the whole graph is traceable; otherwise the base path cycles
    ell+1 colors, the copy path continues that cyclic run outward from the
    matched split vertex in both directions, and each remaining matching
    edge repeats the color of the path edge before it.  The output is
    verified before returning.
    """
    ell = _validate_window(ell)
    _check_hamiltonian_path(g, ham_path)
    if len(alpha) != g.n:
        raise ValueError("permutation length must match the vertex count")
    n = g.n
    pg = permutation_graph(g, alpha)
    pos = {vertex: j for j, vertex in enumerate(ham_path)}

    def sigma(j: int) -> int:
        # position permutation induced by alpha under the path labeling
        return pos[alpha(ham_path[j - 1] + 1) - 1] + 1

    def v_label(j: int) -> int:
        return ham_path[j - 1]

    def u_label(j: int) -> int:
        return n + ham_path[j - 1]

    if sigma(n) in (1, n):
        copy_positions = range(n, 0, -1) if sigma(n) == n else range(1, n + 1)
        combined = [v_label(j) for j in range(1, n + 1)]
        combined += [u_label(j) for j in copy_positions]
        base = color_traceable(pg, combined, ell)
        return ConstructionReport(
            base.coloring, ell + 1, "permutation", "traceable: matching ends at a path end"
        )

    span = ell + 1
    i = sigma(n)
    colors: dict[Edge, int] = {e: 1 for e in pg.edges}

    def cyc(position: int) -> int:
        # color of the edge at 1-indexed position along a cyclic run
        return ((position - 1) % span) + 1

    for j in range(1, n):
        colors[normalize_edge(v_label(j), v_label(j + 1))] = cyc(j)
    colors[normalize_edge(v_label(n), u_label(i))] = cyc(n)
    for step, j in enumerate(range(i - 1, 0, -1), start=1):
        colors[normalize_edge(u_label(j + 1), u_label(j))] = cyc(n + step)
    for step, j in enumerate(range(i + 1, n + 1), start=1):
        colors[normalize_edge(u_label(j - 1), u_label(j))] = cyc(n + step)
    colors[normalize_edge(u_label(sigma(1)), v_label(1))] = span
    for j in range(2, n):
        colors[normalize_edge(v_label(j), u_label(sigma(j)))] = cyc(j - 1)
    coloring = EdgeColoring(colors, num_colors=span)
    cert = verify_coloring(pg, coloring, ell)
    if not cert.ok:
        raise InvariantViolation(
            f"permutation-graph coloring failed verification at pair {cert.failing_pair}"
        )
    return ConstructionReport(
        coloring, span, "permutation", f"split position {i} of {n}"
    )
