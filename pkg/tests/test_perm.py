import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicinv.families import build_mo
from cubicinv.explicit_autos import BranchTag, build_f
from cubicinv.perm import (
    GroupData,
    GroupOrderCapExceeded,
    Permutation,
    compose,
    generate,
    is_block_system,
    make_rho,
    make_tau,
    orbits,
    parse_vertex,
    u,
    v,
)


def test_compose_identity_and_inverse():
    ident = Permutation.identity(6)
    rho = make_rho(6)
    assert compose(ident, ident) == ident
    assert compose(rho, rho.inverse()) == ident
    assert compose(rho.inverse(), rho) == ident


def test_compose_applies_right_then_left():
    rho, tau = make_rho(6), make_tau(6)
    assert compose(tau, rho)(u(0, 6)) == u(5, 6)


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(make_rho(6), make_rho(8))


def test_rho_wraparound():
    assert make_rho(6)(u(5, 6)) == u(0, 6)


def test_tau_displayed_cycle_structure():
    tau = make_tau(6)
    assert tau(u(1, 6)) == u(5, 6)
    assert tau(u(5, 6)) == u(1, 6)
    assert tau(u(3, 6)) == u(3, 6)  # -3 = 3 mod 6
    assert tau(u(0, 6)) == u(0, 6)
    assert compose(tau, tau).is_identity()


def test_tau_odd_half_order():
    tau = make_tau(5)
    assert tau(u(2, 5)) == u(3, 5)
    assert compose(tau, tau).is_identity()


def test_make_rho_rejects_tiny():
    with pytest.raises(ValueError):
        make_rho(2)


def test_generate_cyclic_and_dihedral():
    assert generate([make_rho(6)]).order == 6
    assert generate([make_rho(6), make_tau(6)]).order == 12


def test_generate_square_rotation_subgroup():
    # even n: the square-rotation/reflection subgroup is transitive on the
    # outer set without containing the full rotation
    for n in range(4, 21, 2):
        rho, tau = make_rho(n), make_tau(n)
        grp = generate([compose(rho, rho), compose(rho, tau)])
        assert grp.order == n
        assert rho not in grp
        outer = orbits(grp, range(n))
        assert len(outer) == 1 and len(outer[0]) == n


def test_generate_deterministic_in_generator_order():
    n = 8
    gens = [make_rho(n), make_tau(n), compose(make_rho(n), make_rho(n))]
    base = generate(gens)
    rng = random.Random(7)
    for _ in range(4):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        other = generate(shuffled)
        assert other.order == base.order
        assert other.elements == base.elements


def test_generate_order_cap():
    with pytest.raises(GroupOrderCapExceeded):
        generate([make_rho(30), make_tau(30)], order_cap=10)


def test_orbits_on_outer_vertices():
    n = 6
    rho = make_rho(n)
    assert orbits(generate([rho]), range(n)) == [frozenset(range(n))]
    halves = orbits(generate([compose(rho, rho)]), range(n))
    assert sorted(map(sorted, halves)) == [[0, 2, 4], [1, 3, 5]]


def test_orbits_of_canonical_regular_group_on_edges():
    # the regular group of MO(16,3,9) splits the edges into three classes of
    # size 16; cross-checked below by closing under every element, not just
    # the generators
    n = 16
    g = build_mo(n, 3, 9)
    rho, tau = make_rho(n), make_tau(n)
    from cubicinv.graph_core import faithful_extension

    gens = [
        faithful_extension(compose(rho, rho), g),
        faithful_extension(compose(rho, tau), g),
        build_f(n, 3, 9, BranchTag.B_BRANCH),
    ]
    grp = generate(gens)
    classes = orbits(grp, sorted(g.edges))
    assert sorted(len(c) for c in classes) == [16, 16, 16]

    by_edge = {}
    for cls in classes:
        for e in cls:
            by_edge[e] = cls
    for p in grp.elements:
        for e in g.edges:
            assert by_edge[p.apply_edge(e)] is by_edge[e]
    spokes = frozenset((i, n + i) for i in range(n))
    assert spokes in classes


def test_block_systems_trivial():
    grp = generate([make_rho(6), make_tau(6)])
    singletons = [{x} for x in range(12)]
    assert is_block_system(grp, singletons)
    assert is_block_system(grp, [set(range(12))])


def test_block_system_rejects_non_partition():
    grp = generate([make_rho(6)])
    with pytest.raises(ValueError):
        is_block_system(grp, [{0, 1}, {1, 2}])
    with pytest.raises(ValueError):
        is_block_system(grp, [{0, 1}])


def test_block_system_detects_non_blocks():
    grp = generate([make_rho(6)])
    blocks = [{0, 1}, {2, 3}, {4, 5}] + [{v(i, 6)} for i in range(6)]
    # rotation by one shears the outer pairs
    assert not is_block_system(grp, blocks)


@st.composite
def permutations(draw):
    n = draw(st.integers(min_value=3, max_value=12))
    image = list(range(2 * n))
    draw(st.randoms(use_true_random=False)).shuffle(image)
    return Permutation(n, image)


@given(permutations())
def test_cycle_string_round_trip(p):
    assert Permutation.from_cycle_string(p.n, p.cycle_string()) == p


def test_cycle_string_fixtures():
    p = Permutation.from_cycle_string(3, "(u0 u1 u2)(v0 v1 v2)")
    assert p(u(2, 3)) == u(0, 3)
    assert p(v(0, 3)) == v(1, 3)
    assert Permutation.from_cycle_string(3, "()").is_identity()
    assert Permutation.identity(3).cycle_string() == "()"


def test_cycle_string_rejects_garbage():
    with pytest.raises(ValueError):
        Permutation.from_cycle_string(3, "(u0 u9)")
    with pytest.raises(ValueError):
        Permutation.from_cycle_string(3, "(u0 u1)(u1 u2)")
    with pytest.raises(ValueError):
        Permutation.from_cycle_string(3, "u0 u1")
    with pytest.raises(ValueError):
        parse_vertex("w3", 6)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation(3, [0, 1, 2, 3, 4])
    with pytest.raises(ValueError):
        Permutation(3, [0, 0, 2, 3, 4, 5])


def test_group_membership_structure():
    grp = generate([make_rho(6)])
    assert make_rho(6) in grp
    assert make_tau(6) not in grp
    assert len(grp) == grp.order
    assert isinstance(grp, GroupData)
