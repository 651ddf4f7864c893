import pytest

from cubicinv.classifier import (
    ExclusionWitness,
    Reason,
    Status,
    classify,
    classify_gp,
    classify_htg,
    classify_mo,
    feasible_inequality,
    is_feasible,
    match_exclusion_items,
    resolve_redirects,
    vt_conditions,
)
from cubicinv.explicit_autos import BranchTag
from cubicinv.families import Family, FamilyParams, normalize, parse_params


def test_vt_conditions_examples():
    c = vt_conditions(16, 3, 9)
    assert c.gcd_ok and c.square_ok and c.branch is BranchTag.B_BRANCH
    c = vt_conditions(6, 1, 5)
    assert c.gcd_ok and c.square_ok and c.branch is BranchTag.A_BRANCH
    assert not vt_conditions(8, 1, 5).gcd_ok


def test_feasibility_examples():
    assert is_feasible(16, 3, 9)
    assert not is_feasible(6, 1, 5)  # boundary of the strict inequality
    assert not feasible_inequality(6, 1, 5)
    assert is_feasible(16, 1, 7)


def test_classify_gp_examples():
    assert classify_gp(5, 2).status is Status.NOT_IN_C
    assert classify_gp(5, 2).reason is Reason.GP_EXCEPTION
    assert classify_gp(6, 1).status is Status.IN_C
    assert classify_gp(9, 2).status is Status.NOT_VERTEX_TRANSITIVE
    assert classify_gp(10, 2).reason is Reason.GP_DODECAHEDRON
    assert classify_gp(10, 8).reason is Reason.GP_DODECAHEDRON


@pytest.mark.parametrize("n,k", [(4, 1), (5, 2), (8, 3), (10, 3), (12, 5), (24, 5)])
def test_gp_exception_list(n, k):
    assert classify_gp(n, k).reason is Reason.GP_EXCEPTION
    assert classify_gp(n, n - k).reason is Reason.GP_EXCEPTION


def test_classify_htg_examples():
    assert classify_htg(16, 4).status is Status.IN_C
    v = classify_htg(8, 4)
    assert v.status is Status.NOT_APPLICABLE and v.redirect == parse_params("GP(8,3)")
    assert classify_htg(12, 2).status is Status.NOT_IN_C
    assert classify_htg(12, 2).reason is Reason.HTG_SHIFT2_NONNORMAL
    # shift 2 is excluded even when no divisibility clause fires (n = 2 mod 4)
    assert classify_htg(10, 2).reason is Reason.HTG_SHIFT2_NONNORMAL


def test_classify_htg_condition_clauses():
    assert classify_htg(32, 10).reason is Reason.HTG_COND_1
    assert classify_htg(32, 14).reason is Reason.HTG_COND_2
    assert classify_htg(28, 10).reason is Reason.HTG_COND_4


def test_classify_htg_prism_redirect():
    v = classify_htg(12, 0)
    assert v.status is Status.NOT_APPLICABLE and v.redirect == parse_params("GP(12,1)")
    assert resolve_redirects(parse_params("HTG(12,0)")).status is Status.IN_C


def test_classify_mo_examples():
    v = classify_mo(24, 1, 15)
    assert v.status is Status.NOT_IN_C and v.reason is Reason.MO_GIRTH4
    assert v.witness_hint == "girth4"
    v = classify_mo(16, 3, 9)
    assert v.status is Status.NOT_IN_C and v.reason is Reason.MO_ITEM_5
    assert v.witness_hint == "sigma[BR_GREEN]"
    v = classify_mo(104, 13, 67)
    assert v.status is Status.NOT_IN_C and v.reason is Reason.MO_ITEM_1
    assert v.witness_hint == "alpha[BLUE]"
    assert classify_mo(16, 1, 7).status is Status.IN_C


def test_classify_mo_item_examples():
    assert classify_mo(56, 11, 37).reason is Reason.MO_ITEM_2
    assert classify_mo(48, 15, 25).reason is Reason.MO_ITEM_3
    assert classify_mo(48, 9, 23).reason is Reason.MO_ITEM_3
    assert classify_mo(32, 7, 21).reason is Reason.MO_ITEM_4
    assert classify_mo(32, 5, 23).reason is Reason.MO_ITEM_5


def test_classify_mo_infeasible():
    # neither branch congruence holds
    v = classify_mo(24, 3, 17)
    assert v.status is Status.NOT_VERTEX_TRANSITIVE
    assert v.reason is Reason.MO_INFEASIBLE
    # inner subgraph is not a single cycle
    assert classify_mo(16, 1, 9).status is Status.NOT_VERTEX_TRANSITIVE


def test_classify_dispatch_and_redirects():
    # honeycomb hand-off: MO(16,5,7) classifies through HTG(16,6)
    v = classify(parse_params("MO(16,5,7)"))
    assert v.status is Status.NOT_IN_C and v.reason is Reason.HTG_COND_2
    assert v.redirect == parse_params("HTG(16,6)")
    # Petersen hand-off
    v = classify(parse_params("MO(6,1,5)"))
    assert v.status is Status.IN_C and v.redirect == parse_params("GP(6,1)")
    assert classify(parse_params("GP(4,1)")).status is Status.NOT_IN_C
    # double hand-off: both a+2 = b and b = n-a, lands on Moebius-Kantor
    v = resolve_redirects(parse_params("MO(8,3,5)"))
    assert v.status is Status.NOT_IN_C and v.reason is Reason.GP_EXCEPTION


def test_me_is_not_classified():
    v = classify(parse_params("ME(8,2,6)"))
    assert v.status is Status.NOT_APPLICABLE and v.reason is Reason.ME_NOT_CLASSIFIED


def test_classify_invariant_under_normalization():
    for n in range(4, 65, 2):
        for a in range(1, n, 2):
            for b in range(a + 2, n, 2):
                p = FamilyParams(Family.MO, n, (a, b))
                v1, v2 = classify(p), classify(normalize(p))
                assert (v1.status, v1.reason) == (v2.status, v2.reason)


def test_at_most_one_exclusion_item_matches():
    for n in range(4, 201, 2):
        for a in range(3, n, 2):
            for b in range(a + 4, n - a, 2):
                if is_feasible(n, a, b):
                    matches = match_exclusion_items(n, a, b)
                    assert len(matches) <= 1, (n, a, b, [m.item for m in matches])


def test_exclusion_witness_decomposition():
    (m,) = match_exclusion_items(16, 3, 9)
    assert isinstance(m, ExclusionWitness)
    assert m.item == 5 and m.a0 == 0 and m.a0 % 2 == 0
    (m,) = match_exclusion_items(104, 13, 67)
    assert m.item == 1 and m.a0 == 3 and m.a0 % 2 == 1
    (m,) = match_exclusion_items(32, 7, 21)
    assert m.item == 4 and m.b0 == 5 and m.b0 % 2 == 1


def test_verdict_record_format():
    rec = classify(parse_params("MO(16,3,9)")).record()
    assert "params: MO(16,3,9)" in rec
    assert "status: NOT_IN_C" in rec
    assert "reason: MO_ITEM_5" in rec
    assert "witness: sigma[BR_GREEN]" in rec
