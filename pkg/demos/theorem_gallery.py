"""Gallery run: one construction per graph family, each re-verified.

Every constructor returns a report with a claimed color count; this script
builds a representative instance for each, verifies the coloring at the
relevant window, and prints a one-line summary, ending with a comparison
against the exhaustive solver where the instance is small enough.
"""

from pcc import (
    Permutation,
    cartesian_product,
    color_2connected,
    color_cartesian,
    color_complete_bipartite,
    color_complete_multipartite,
    color_hypercube,
    color_join,
    color_permutation_graph,
    color_traceable,
    color_tree,
    color_wheel,
    complete_bipartite_graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    double_star_graph,
    hypercube_graph,
    join,
    min_colors_exact,
    path_graph,
    permutation_graph,
    random_2connected,
    star_graph,
    verify_coloring,
    wheel_graph,
)


def show(name, graph, report, ell):
    cert = verify_coloring(graph, report.coloring, ell)
    used = len(report.coloring.used_colors())
    print(
        f"{name:28s} n={graph.n:3d} m={graph.m:3d} window={ell} "
        f"claimed={report.claimed_colors} used={used} verified={cert.ok}"
    )
    assert cert.ok


def main():
    print("== constructions, each verified ==")
    g = cycle_graph(8)
    show("traceable C_8", g, color_traceable(g, list(range(8)), 2), 2)

    t = double_star_graph(3, 4)
    show("tree (double star 3,4)", t, color_tree(t, 2), 2)

    show("K_{2,10}, window 3", complete_bipartite_graph(2, 10),
         color_complete_bipartite(2, 10, 3), 3)

    parts = (1, 2, 5)
    show("K_{1,2,5}", complete_multipartite_graph(parts),
         color_complete_multipartite(parts, 2), 2)

    show("wheel W_9", wheel_graph(9), color_wheel(9, 2), 2)
    show("hypercube Q_4, window 2", hypercube_graph(4), color_hypercube(4, 2), 2)

    a, b = path_graph(3), cycle_graph(5)
    show("join P_3 v C_5", join(a, b), color_join(a, b), 2)

    show("product K_3 x P_4", cartesian_product(complete_graph(3), path_graph(4)),
         color_cartesian(complete_graph(3), path_graph(4)), 2)
    show("product K_{1,3} x P_7", cartesian_product(star_graph(3), path_graph(7)),
         color_cartesian(star_graph(3), path_graph(7)), 2)

    g = random_2connected(9, 14, seed=5)
    show("random 2-connected", g, color_2connected(g), 2)

    alpha = Permutation((2, 4, 1, 3))
    show("permutation of P_4", permutation_graph(path_graph(4), alpha),
         color_permutation_graph(path_graph(4), (0, 1, 2, 3), alpha, 2), 2)

    print()
    print("== constructions versus exhaustive search ==")
    for name, graph, report in [
        ("P_6 (tree)", path_graph(6), color_tree(path_graph(6), 2)),
        ("W_5", wheel_graph(5), color_wheel(5, 2)),
        ("Q_3", hypercube_graph(3), color_hypercube(3, 2)),
        ("K_{2,4}", complete_bipartite_graph(2, 4), color_complete_bipartite(2, 4, 2)),
    ]:
        exact = min_colors_exact(graph, 2)
        marker = "==" if exact.min_colors == report.claimed_colors else "<="
        print(
            f"{name:12s} exact={exact.min_colors} {marker} claimed={report.claimed_colors} "
            f"({exact.colorings_examined} colorings examined)"
        )


if __name__ == "__main__":
    main()
