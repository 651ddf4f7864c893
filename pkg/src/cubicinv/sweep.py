"""Exhaustive classifier-versus-oracle sweep over normalized parameter space.

One row per normalized parameter set.  A row is a mismatch exactly when the
brute-force oracle is defined (vertex-transitive graph whose canonical
2-factor is two equal cycles) and disagrees with the classifier about
membership, or when the classifier claims membership where the oracle is not
even defined.  Everything else the oracle learns is recorded in the row so
that surprises show up in the report rather than vanishing.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .aut_search import (
    analyze_aut,
    edge_orbit_pattern,
    is_vertex_transitive,
    vertex_stabilizer_order,
)
from .classifier import Reason, Status, Verdict, is_feasible, resolve_redirects, vt_conditions
from .explicit_autos import (
    AlphaCase,
    BranchTag,
    SigmaCase,
    ThetaCase,
    branch_of,
    build_alpha,
    build_f,
    build_girth4_involution,
    build_sigma,
    build_theta,
)
from .families import Family, FamilyParams, build, normalize
from .graph_core import canonical_factorization, color_edges, is_automorphism
from .oracle import is_f12_invariant_canonical, is_f12_invariant_exhaustive

SWEEP_COLUMNS = [
    "params",
    "family",
    "n",
    "gcd_ok",
    "square_ok",
    "branch",
    "feasible",
    "status",
    "reason",
    "witness",
    "witness_valid",
    "aut_order",
    "stab_order",
    "vertex_transitive",
    "canonical_two_cycles",
    "edge_pattern",
    "canonical_invariant",
    "exhaustive_invariant",
    "agree",
]


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 40
    families: tuple[str, ...] = ("gp", "htg", "mo")
    gp_max_n: Optional[int] = 24
    exhaustive_cap: int = 32
    jobs: int = 1

    def bound_for(self, family: str) -> int:
        if family == "gp" and self.gp_max_n is not None:
            return min(self.max_n, self.gp_max_n)
        return self.max_n


@dataclass
class SweepResult:
    config: SweepConfig
    rows: list[dict]
    elapsed: float = 0.0
    findings: list[str] = field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return sum(1 for r in self.rows if r["agree"] == "no")


def enumerate_params(cfg: SweepConfig) -> list[FamilyParams]:
    """All normalized parameter sets for the configured families and bounds."""
    seen = set()
    out = []

    def add(p: FamilyParams) -> None:
        p = normalize(p)
        if p not in seen:
            seen.add(p)
            out.append(p)

    if "gp" in cfg.families:
        for n in range(3, cfg.bound_for("gp") + 1):
            for k in range(1, n // 2 + 1):
                if 2 * k != n:
                    add(FamilyParams(Family.GP, n, (k,)))
    if "htg" in cfg.families:
        for n in range(4, cfg.bound_for("htg") + 1, 2):
            for l in range(0, n // 2 + 1, 2):
                add(FamilyParams(Family.HTG, n, (l,)))
    if "mo" in cfg.families:
        for n in range(4, cfg.bound_for("mo") + 1, 2):
            for a in range(1, n, 2):
                for b in range(a + 2, n, 2):
                    add(FamilyParams(Family.MO, n, (a, b)))
    out.sort(key=lambda p: (p.tag.value, p.n, p.args))
    return out


def _build_witness(params: FamilyParams, hint: str):
    n, a, b = params.n, params.args[0], params.args[1]
    if hint == "girth4":
        return build_girth4_involution(n)
    builder, _, case = hint.partition("[")
    case = case.rstrip("]")
    if builder == "alpha":
        return build_alpha(n, a, b, AlphaCase(case))
    if builder == "theta":
        return build_theta(n, a, b, ThetaCase(case))
    if builder == "sigma":
        return build_sigma(n, a, b, SigmaCase(case))
    raise ValueError(f"unknown witness hint {hint!r}")


def compute_row(params: FamilyParams, exhaustive_cap: int = 32) -> dict:
    """Classifier facts, oracle facts, and the agreement flag for one row."""
    verdict: Verdict = resolve_redirects(params)
    g = build(params)
    aut = analyze_aut(g)
    vt = is_vertex_transitive(g, aut)
    fact = canonical_factorization(g)
    canon_two = fact.two_equal_cycles
    canon_inv = None
    if vt and canon_two:
        canon_inv = is_f12_invariant_canonical(g, aut)

    row = {
        "params": str(params),
        "family": params.tag.value,
        "n": params.n,
        "gcd_ok": "",
        "square_ok": "",
        "branch": "",
        "feasible": "",
        "status": verdict.status.value,
        "reason": verdict.reason.value if verdict.reason else "",
        "witness": verdict.witness_hint or "",
        "witness_valid": "",
        "aut_order": aut.order,
        "stab_order": vertex_stabilizer_order(g, 0, aut),
        "vertex_transitive": _yn(vt),
        "canonical_two_cycles": _yn(canon_two),
        "edge_pattern": "",
        "canonical_invariant": _yn(canon_inv),
        "exhaustive_invariant": "",
        "agree": "",
    }

    if params.tag is Family.MO:
        n, a, b = params.n, params.a, params.b
        conds = vt_conditions(n, a, b)
        row["gcd_ok"] = _yn(conds.gcd_ok)
        row["square_ok"] = _yn(conds.square_ok)
        row["branch"] = conds.branch.value if conds.branch else ""
        feas = is_feasible(n, a, b)
        row["feasible"] = _yn(feas)
        if feas:
            fmap = build_f(n, a, b, branch_of(n, a, b))
            coloring = color_edges(g, fmap)
            row["edge_pattern"] = edge_orbit_pattern(g, coloring, aut).value

    if verdict.witness_hint:
        w = _build_witness(normalize(params), verdict.witness_hint)
        row["witness_valid"] = _yn(is_automorphism(g, w))

    if 2 * params.n <= exhaustive_cap:
        row["exhaustive_invariant"] = _yn(is_f12_invariant_exhaustive(g, aut))

    if vt and canon_two:
        agree = (verdict.status is Status.IN_C) == canon_inv
    else:
        agree = verdict.status is not Status.IN_C
    row["agree"] = _yn(agree)
    return row


def _yn(val) -> str:
    if val is None:
        return ""
    return "yes" if val else "no"


def _row_job(args):
    params, cap = args
    return compute_row(params, cap)


def run_sweep(cfg: SweepConfig) -> SweepResult:
    start = time.time()
    params = enumerate_params(cfg)
    work = [(p, cfg.exhaustive_cap) for p in params]
    if cfg.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(cfg.jobs) as pool:
            rows = pool.map(_row_job, work, chunksize=8)
    else:
        rows = [_row_job(w) for w in work]
    result = SweepResult(cfg, rows, elapsed=time.time() - start)
    for r in rows:
        if r["agree"] == "no":
            result.findings.append(f"MISMATCH {r['params']}: {r['status']} vs oracle")
        if (
            r["status"] == Status.NOT_VERTEX_TRANSITIVE.value
            and r["vertex_transitive"] == "yes"
        ):
            result.findings.append(
                f"NOTE {r['params']}: claimed not vertex-transitive but the oracle "
                "found a transitive group"
            )
        if r["witness_valid"] == "no":
            result.findings.append(f"BAD WITNESS {r['params']}: {r['witness']}")
    return result


def write_report(result: SweepResult, stream) -> None:
    """Emit the report; identical bytes for a given (bounds, families, cap),
    however many workers computed it."""
    cfg = result.config
    stream.write(f"# cubicinv sweep v{__version__}\n")
    stream.write(
        f"# max_n={cfg.max_n} gp_max_n={cfg.bound_for('gp')} "
        f"families={','.join(cfg.families)} exhaustive_cap={cfg.exhaustive_cap}\n"
    )
    stream.write(f"# rows={len(result.rows)}\n")
    writer = csv.DictWriter(stream, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in result.rows:
        writer.writerow(row)
    for f in result.findings:
        stream.write(f"# {f}\n")
    stream.write(f"# mismatches: {result.mismatches}\n")


def report_text(result: SweepResult) -> str:
    buf = io.StringIO()
    write_report(result, buf)
    return buf.getvalue()
