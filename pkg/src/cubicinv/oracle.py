"""Ground-truth invariance checks, independent of the parameter arithmetic.

The canonical check asks whether the full automorphism group preserves the
graph's own matching.  The exhaustive check enumerates every perfect matching
whose complement is two equal cycles and asks whether any of them is
preserved; it exists to confirm, at desk scale, that the canonical partition
is the only candidate that matters.
"""

from __future__ import annotations

from typing import Optional

from .aut_search import AutLike, analyze_aut, aut_group, is_vertex_transitive
from .graph_core import (
    AnchorSystem,
    Factorization,
    LabeledCubicGraph,
    _two_regular_cycles,
    canonical_factorization,
)
from .perm import GroupData

EXHAUSTIVE_VERTEX_CAP = 32


class OracleSizeError(ValueError):
    pass


class OraclePreconditionError(ValueError):
    pass


def is_f12_invariant_canonical(
    g: LabeledCubicGraph, aut: Optional[AutLike] = None
) -> bool:
    """True iff every automorphism maps the canonical matching onto itself.

    Requires the canonical 2-factor to be two equal cycles and the graph to
    be vertex-transitive; outside that the property is not defined.
    """
    aut = analyze_aut(g) if aut is None else aut
    if not canonical_factorization(g).two_equal_cycles:
        raise OraclePreconditionError("canonical 2-factor is not two equal cycles")
    if not is_vertex_transitive(g, aut):
        raise OraclePreconditionError("graph is not vertex-transitive")
    return _preserves_matching(g.matching, aut)


def _preserves_matching(matching, aut: AutLike) -> bool:
    return all(
        all(p.apply_edge(e) in matching for e in matching) for p in aut.generators
    )


def perfect_matchings(g: LabeledCubicGraph) -> list[frozenset]:
    """Every perfect matching, by taking the lowest uncovered vertex and
    branching over its at most three partners."""
    adj = g.adj
    nv = 2 * g.n
    out: list[frozenset] = []
    chosen: list[tuple[int, int]] = []
    covered = bytearray(nv)

    def rec(lo: int) -> None:
        while lo < nv and covered[lo]:
            lo += 1
        if lo == nv:
            out.append(frozenset(chosen))
            return
        covered[lo] = 1
        for y in adj[lo]:
            if not covered[y]:
                covered[y] = 1
                chosen.append((lo, y))
                rec(lo + 1)
                chosen.pop()
                covered[y] = 0
        covered[lo] = 0

    rec(0)
    return out


def enumerate_factorizations(g: LabeledCubicGraph) -> list[Factorization]:
    """All (matching, two-equal-cycle 2-factor) partitions of the edge set."""
    if 2 * g.n > EXHAUSTIVE_VERTEX_CAP:
        raise OracleSizeError(
            f"{2 * g.n} vertices exceeds the exhaustive cap {EXHAUSTIVE_VERTEX_CAP}"
        )
    out = []
    for m in perfect_matchings(g):
        rest = g.edges - m
        lengths = tuple(sorted(len(c) for c in _two_regular_cycles(2 * g.n, rest)))
        if len(lengths) == 2 and lengths[0] == lengths[1]:
            out.append(Factorization(m, frozenset(rest), lengths))
    return out


def is_f12_invariant_exhaustive(
    g: LabeledCubicGraph, aut: Optional[AutLike] = None
) -> bool:
    """True iff some two-equal-cycle factorization is preserved factor-wise."""
    aut = analyze_aut(g) if aut is None else aut
    return any(
        _preserves_matching(f.one_factor, aut) for f in enumerate_factorizations(g)
    )


def stabilizer_fixes_anchor_chain(
    g: LabeledCubicGraph,
    vertex: int,
    anchors: AnchorSystem,
    aut: Optional[GroupData] = None,
) -> bool:
    """Every automorphism fixing the vertex must fix its whole anchor chain
    pointwise."""
    aut = aut_group(g) if aut is None else aut
    chain = next(c for c in anchors.chains if vertex in c)
    for p in aut.elements:
        if p(vertex) == vertex and any(p(x) != x for x in chain):
            return False
    return True
