from cubicinv.classifier import Status
from cubicinv.families import Family, parse_params
from cubicinv.sweep import SweepConfig, enumerate_params, report_text, run_sweep


def test_enumerate_params_is_normalized_and_sorted():
    cfg = SweepConfig(max_n=12, gp_max_n=8)
    params = enumerate_params(cfg)
    assert len(params) == len(set(params))
    assert params == sorted(params, key=lambda p: (p.tag.value, p.n, p.args))
    from cubicinv.families import normalize

    assert all(normalize(p) == p for p in params)
    assert parse_params("MO(12,1,5)") in params
    assert parse_params("MO(12,7,9)") not in params  # normalizes to (3,5)


def test_not_in_c_rows_carry_validated_witnesses(acceptance_sweep):
    hinted = [r for r in acceptance_sweep.rows if r["witness"]]
    assert hinted, "expected some excluded rows with witnesses"
    assert all(r["witness_valid"] == "yes" for r in hinted)
    assert all(r["status"] == Status.NOT_IN_C.value for r in hinted)


def test_infeasible_claims_are_backed_by_the_oracle(acceptance_sweep):
    # a not-vertex-transitive verdict must coincide with the oracle finding
    # either no transitivity or a canonical 2-factor that is not two cycles
    for r in acceptance_sweep.rows:
        if r["family"] == "MO" and r["status"] == Status.NOT_VERTEX_TRANSITIVE.value:
            assert r["vertex_transitive"] == "no" or r["canonical_two_cycles"] == "no", r


def test_report_shape():
    result = run_sweep(SweepConfig(max_n=8, gp_max_n=6))
    text = report_text(result)
    lines = text.splitlines()
    assert lines[0].startswith("# cubicinv sweep")
    assert any(line.startswith("params,family,") for line in lines)
    assert lines[-1] == "# mismatches: 0"


def test_every_row_agrees_at_small_scale():
    result = run_sweep(SweepConfig(max_n=14, gp_max_n=10))
    assert result.mismatches == 0
    assert all(r["agree"] == "yes" for r in result.rows)
    families = {r["family"] for r in result.rows}
    assert families == {"GP", "HTG", "MO"}
