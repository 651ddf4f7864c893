"""Shared fixtures and independent reference oracles.

The reference implementations here deliberately avoid the code paths they
check: automorphism counts come from networkx's VF2 matcher, girth from a
delete-one-edge BFS, and cycle structures from networkx components.
"""

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from cubicinv.graph_core import LabeledCubicGraph


def as_networkx(g: LabeledCubicGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(2 * g.n))
    G.add_edges_from(g.edges)
    return G


def vf2_aut_order(g: LabeledCubicGraph) -> int:
    G = as_networkx(g)
    return sum(1 for _ in GraphMatcher(G, G).isomorphisms_iter())


def reference_girth(g: LabeledCubicGraph) -> int:
    """Shortest cycle through each edge: remove it, measure the reconnecting
    path.  Independent of the per-vertex BFS used by the library."""
    G = as_networkx(g)
    best = None
    for a, b in list(G.edges()):
        G.remove_edge(a, b)
        try:
            d = nx.shortest_path_length(G, a, b)
            best = d + 1 if best is None else min(best, d + 1)
        except nx.NetworkXNoPath:
            pass
        G.add_edge(a, b)
    assert best is not None
    return best


def reference_cycle_lengths(edges) -> tuple[int, ...]:
    G = nx.Graph()
    G.add_edges_from(edges)
    assert all(d == 2 for _, d in G.degree())
    return tuple(sorted(len(c) for c in nx.connected_components(G)))


@pytest.fixture(scope="session")
def acceptance_sweep():
    """The criterion-level sweep, shared by the acceptance tests."""
    from cubicinv.sweep import SweepConfig, run_sweep

    return run_sweep(SweepConfig(max_n=40, gp_max_n=24, exhaustive_cap=32, jobs=1))
