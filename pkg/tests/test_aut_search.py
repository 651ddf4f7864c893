import pytest

from conftest import vf2_aut_order
from cubicinv.aut_search import (
    EdgeOrbitPattern,
    analyze_aut,
    aut_group,
    edge_orbit_pattern,
    exists_extension,
    extend_partial,
    is_vertex_transitive,
    vertex_orbit,
    vertex_stabilizer_order,
)
from cubicinv.explicit_autos import branch_of, build_f
from cubicinv.families import build_gp, build_htg, build_me, build_mo
from cubicinv.graph_core import color_edges, is_automorphism
from cubicinv.perm import GroupOrderCapExceeded, u, v


KNOWN_ORDERS = [
    (build_gp(5, 2), 120),
    (build_mo(16, 1, 7), 32),
    (build_mo(16, 3, 9), 192),
]


@pytest.mark.parametrize("g,order", KNOWN_ORDERS)
def test_known_aut_orders(g, order):
    assert analyze_aut(g).order == order
    assert aut_group(g).order == order


@pytest.mark.parametrize(
    "g",
    [
        build_gp(4, 1),
        build_gp(9, 2),
        build_gp(10, 2),
        build_htg(6, 2),
        build_htg(16, 4),
        build_mo(12, 1, 9),
        build_mo(16, 1, 5),
        build_me(12, 2, 4),
        build_mo(24, 1, 15),
    ],
)
def test_orders_match_vf2(g):
    assert analyze_aut(g).order == vf2_aut_order(g)


def test_every_element_is_an_automorphism():
    for g, order in KNOWN_ORDERS:
        grp = aut_group(g)
        assert len(set(grp.elements)) == order
        assert all(is_automorphism(g, p) for p in grp.elements)
        assert all(is_automorphism(g, p) for p in analyze_aut(g).generators)


def test_generators_are_deterministic():
    g = build_mo(16, 3, 9)
    first = aut_group(g)
    second = aut_group(g)
    assert [p.image for p in first.generators] == [p.image for p in second.generators]
    assert analyze_aut(g).order == analyze_aut(g).order


def test_vertex_transitivity():
    assert not is_vertex_transitive(build_gp(9, 2))
    assert is_vertex_transitive(build_mo(16, 1, 7))
    # two orbits, outer and inner, for the non-transitive graph
    g = build_gp(9, 2)
    aut = analyze_aut(g)
    assert vertex_orbit(g, 0, aut) == frozenset(range(9))
    assert vertex_orbit(g, 9, aut) == frozenset(range(9, 18))


def test_stabilizer_orders():
    g = build_mo(16, 1, 7)
    assert vertex_stabilizer_order(g, 0) == 1
    g = build_mo(24, 1, 15)
    assert vertex_stabilizer_order(g, 0) >= 2


def test_order_divisible_by_2n_when_transitive():
    for g in [build_gp(6, 1), build_mo(16, 3, 9), build_htg(16, 4), build_mo(24, 1, 11)]:
        aut = analyze_aut(g)
        if is_vertex_transitive(g, aut):
            assert aut.order % (2 * g.n) == 0


def test_u_stabilizer_restricts_to_dihedral_maps():
    # graphs whose canonical partition is invariant: any automorphism fixing
    # the outer set acts on it as a rotation or a reflection
    for g in [build_gp(6, 1), build_mo(16, 1, 7), build_htg(16, 4)]:
        n = g.n
        for p in aut_group(g).elements:
            if all(p(x) < n for x in range(n)):
                d = (p(1) - p(0)) % n
                assert d in (1, n - 1)
                if d == 1:
                    assert all(p(x) == (p(0) + x) % n for x in range(n))
                else:
                    assert all(p(x) == (p(0) - x) % n for x in range(n))


def _pattern(n, a, b):
    g = build_mo(n, a, b)
    col = color_edges(g, build_f(n, a, b, branch_of(n, a, b)))
    return edge_orbit_pattern(g, col)


def test_edge_orbit_patterns():
    assert _pattern(16, 3, 9) is EdgeOrbitPattern.ALL
    assert _pattern(16, 1, 7) is EdgeOrbitPattern.SEPARATE
    assert _pattern(48, 15, 25) is EdgeOrbitPattern.RB_G
    assert _pattern(48, 9, 23) is EdgeOrbitPattern.RG_B
    assert _pattern(16, 1, 11) is EdgeOrbitPattern.RB_G


def test_extend_partial_recovers_stabilizer():
    g = build_mo(24, 1, 15)
    stab = extend_partial(g, {0: 0})
    assert len(stab) == vertex_stabilizer_order(g, 0)
    assert all(is_automorphism(g, p) for p in stab)
    assert exists_extension(g, {0: 0, 1: v(0, 24)})
    # outer and inner vertices sit in different orbits of the non-transitive
    # Petersen-style graph, so no extension can cross them
    assert not exists_extension(build_gp(9, 2), {0: v(0, 9)})


def test_extend_partial_rejects_inconsistent_pins():
    g = build_gp(5, 2)
    # u0 and u2 are not adjacent, so pinning them onto adjacent images fails
    assert extend_partial(g, {u(0, 5): u(0, 5), u(2, 5): u(1, 5)}) == []


def test_exponential_group_order_and_cap():
    g = build_htg(28, 2)
    d = analyze_aut(g)
    assert d.order == 28 * 2 ** 14
    with pytest.raises(GroupOrderCapExceeded):
        aut_group(g, order_cap=10**5)
    assert is_vertex_transitive(g, d)
    assert vertex_stabilizer_order(g, 0, d) == d.order // 56
