import pytest

from cubicinv.aut_search import analyze_aut, aut_group
from cubicinv.explicit_autos import branch_of, build_f
from cubicinv.families import build_gp, build_htg, build_mo
from cubicinv.graph_core import color_edges, anchor_system, canonical_factorization
from cubicinv.oracle import (
    OraclePreconditionError,
    OracleSizeError,
    enumerate_factorizations,
    is_f12_invariant_canonical,
    is_f12_invariant_exhaustive,
    perfect_matchings,
    stabilizer_fixes_anchor_chain,
)


def test_petersen_has_six_factorizations_none_invariant():
    g = build_gp(5, 2)
    assert len(perfect_matchings(g)) == 6
    facts = enumerate_factorizations(g)
    assert len(facts) == 6
    assert all(f.cycle_lengths == (5, 5) for f in facts)
    assert not is_f12_invariant_exhaustive(g)


def test_triangular_prism_spokes_qualify():
    g = build_gp(3, 1)
    facts = enumerate_factorizations(g)
    assert g.matching in [f.one_factor for f in facts]
    assert is_f12_invariant_exhaustive(g)
    assert is_f12_invariant_canonical(g)


def test_factorizations_partition_edges():
    for g in [build_gp(6, 1), build_mo(16, 3, 9), build_htg(8, 2)]:
        for f in enumerate_factorizations(g):
            assert f.one_factor | f.two_factor == g.edges
            assert not (f.one_factor & f.two_factor)
            assert f.two_equal_cycles


def test_canonical_examples():
    assert is_f12_invariant_canonical(build_mo(16, 1, 7))
    assert not is_f12_invariant_canonical(build_mo(16, 3, 9))
    assert not is_f12_invariant_canonical(build_gp(4, 1))


def test_canonical_preconditions():
    with pytest.raises(OraclePreconditionError):
        is_f12_invariant_canonical(build_gp(8, 2))  # three-cycle 2-factor
    with pytest.raises(OraclePreconditionError):
        is_f12_invariant_canonical(build_gp(9, 2))  # not vertex-transitive


def test_exhaustive_equals_canonical_small():
    for g in [build_gp(6, 1), build_gp(5, 2), build_mo(16, 1, 7), build_mo(16, 3, 9),
              build_htg(16, 4), build_htg(10, 2)]:
        aut = analyze_aut(g)
        assert is_f12_invariant_exhaustive(g, aut) == is_f12_invariant_canonical(g, aut)


def test_exhaustive_size_cap():
    with pytest.raises(OracleSizeError):
        enumerate_factorizations(build_mo(34, 1, 15))


def test_invariant_factorization_cycles_are_the_two_sides():
    for g in [build_gp(6, 1), build_mo(16, 1, 7), build_mo(24, 1, 11)]:
        assert is_f12_invariant_canonical(g)
        fact = canonical_factorization(g)
        assert fact.cycle_lengths == (g.n, g.n)
        # the cycles are exactly the outer and inner vertex sets
        outer_cycle = {x for e in fact.two_factor for x in e if x < g.n}
        inner_cycle = {x for e in fact.two_factor for x in e if x >= g.n}
        assert outer_cycle == set(range(g.n))
        assert inner_cycle == set(range(g.n, 2 * g.n))


def _anchors(n, b):
    g = build_mo(n, 1, b)
    col = color_edges(g, build_f(n, 1, b, branch_of(n, 1, b)))
    return g, anchor_system(g, col)


def test_stabilizer_fixes_anchor_chain_examples():
    g, anchors = _anchors(24, 15)
    aut = aut_group(g)
    assert stabilizer_fixes_anchor_chain(g, 0, anchors, aut)
    # trivial stabilizer case is vacuously true
    g, anchors = _anchors(16, 7)
    aut = aut_group(g)
    for x in range(32):
        assert stabilizer_fixes_anchor_chain(g, x, anchors, aut)
