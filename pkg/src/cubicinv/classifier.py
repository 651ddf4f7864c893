"""Membership decision for the invariant-partition collection.

The decision procedure mirrors the published membership list clause by
clause; every negative verdict carries a reason code naming the clause, and
the modular-arithmetic exclusions also carry a hint naming the explicit
automorphism that witnesses the extra symmetry.  The procedure is pure
parameter arithmetic; the brute-force oracle is the ground truth it gets
checked against in the sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .explicit_autos import (
    AlphaCase,
    BranchTag,
    SigmaCase,
    ThetaCase,
    branch_of,
    square_condition_holds,
)
from .families import Family, FamilyParams, normalize, validate_params


class Status(Enum):
    IN_C = "IN_C"
    NOT_IN_C = "NOT_IN_C"
    NOT_VERTEX_TRANSITIVE = "NOT_VERTEX_TRANSITIVE"
    NOT_APPLICABLE = "NOT_APPLICABLE"


class Reason(Enum):
    GP_EXCEPTION = "GP_EXCEPTION"
    GP_DODECAHEDRON = "GP_DODECAHEDRON"
    GP_NOT_VT = "GP_NOT_VT"
    HTG_COND_1 = "HTG_COND_1"
    HTG_COND_2 = "HTG_COND_2"
    HTG_COND_4 = "HTG_COND_4"
    HTG_SHIFT2_NONNORMAL = "HTG_SHIFT2_NONNORMAL"
    HTG_IS_GP = "HTG_IS_GP"
    MO_INFEASIBLE = "MO_INFEASIBLE"
    MO_GIRTH4 = "MO_GIRTH4"
    MO_ITEM_1 = "MO_ITEM_1"
    MO_ITEM_2 = "MO_ITEM_2"
    MO_ITEM_3 = "MO_ITEM_3"
    MO_ITEM_4 = "MO_ITEM_4"
    MO_ITEM_5 = "MO_ITEM_5"
    MO_IS_GP = "MO_IS_GP"
    MO_IS_HTG = "MO_IS_HTG"
    ME_NOT_CLASSIFIED = "ME_NOT_CLASSIFIED"


@dataclass(frozen=True)
class Verdict:
    params: FamilyParams
    status: Status
    reason: Optional[Reason] = None
    witness_hint: Optional[str] = None
    redirect: Optional[FamilyParams] = None

    def record(self) -> str:
        lines = [
            f"params: {self.params}",
            f"status: {self.status.value}",
            f"reason: {self.reason.value if self.reason else '-'}",
            f"witness: {self.witness_hint or '-'}",
        ]
        if self.redirect is not None:
            lines.append(f"redirect: {self.redirect}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VtConditions:
    gcd_ok: bool
    square_ok: bool
    branch: Optional[BranchTag]

    @property
    def all_hold(self) -> bool:
        return self.gcd_ok and self.square_ok and self.branch is not None


def vt_conditions(n: int, a: int, b: int) -> VtConditions:
    """The congruences governing the regular partition-preserving subgroup:
    gcd(b-a, n) = 2, (b-a)^2/2 = 2 in Z_n, and exactly one branch congruence."""
    validate_params(FamilyParams(Family.MO, n, (a, b)))
    gcd_ok = math.gcd(b - a, n) == 2
    square_ok = square_condition_holds(n, a, b)
    return VtConditions(gcd_ok, square_ok, branch_of(n, a, b))


def feasible_inequality(n: int, a: int, b: int) -> bool:
    """1 <= a < b-2 < n-a-2."""
    return 1 <= a < b - 2 < n - a - 2


def is_feasible(n: int, a: int, b: int) -> bool:
    return vt_conditions(n, a, b).all_hold and feasible_inequality(n, a, b)


@dataclass(frozen=True)
class ExclusionWitness:
    """Which of the five modular exclusion clauses matched, with the derived
    quarter parameter from the a = 4a0+1 / b = 4b0+3 style decompositions."""

    item: int
    a0: Optional[int] = None
    b0: Optional[int] = None
    builder: str = ""
    case: str = ""

    @property
    def hint(self) -> str:
        return f"{self.builder}[{self.case}]" if self.case else self.builder


def match_exclusion_items(n: int, a: int, b: int) -> list[ExclusionWitness]:
    """All matches among the five exclusion clauses for a feasible triple with
    a > 1.  The clauses are expected to be mutually exclusive; callers treat
    more than one match as a red flag."""
    h = n // 2
    out = []
    if n % 16 == 8 and a % 4 == 1:
        a0 = (a - 1) // 4
        if (
            a0 % 2 == 1
            and 4 * a < n - 4
            and (8 * (a0 * a0 + a0 + 1)) % n == 0
            and b == h + a + 2
        ):
            out.append(ExclusionWitness(1, a0=a0, builder="alpha", case=AlphaCase.BLUE.value))
    if n % 16 == 8 and b % 4 == 1:
        b0 = (b - 1) // 4
        if (
            b0 % 2 == 1
            and 2 * b > n
            and 4 * b < 3 * n - 4
            and (8 * (b0 * b0 + b0 + 1)) % n == 0
            and a == b - h + 2
        ):
            out.append(ExclusionWitness(2, b0=b0, builder="alpha", case=AlphaCase.GREEN.value))
    if n % 96 == 48:
        if a == n // 4 + 3 and b == h + 1:
            out.append(ExclusionWitness(3, builder="theta", case=ThetaCase.BR.value))
        elif a == n // 4 - 3 and b == h - 1:
            out.append(ExclusionWitness(3, builder="theta", case=ThetaCase.GR.value))
    if n % 8 == 0:
        if b % 4 == 3:
            b0 = (b - 3) // 4
            if (
                b0 > 0
                and b0 % 2 == 0
                and 4 * b < 3 * n + 4
                and (4 * (b0 + 1) ** 2 - 4) % n == 0
                and a == b - h - 2
            ):
                out.append(
                    ExclusionWitness(4, b0=b0, builder="sigma", case=SigmaCase.BR_BLUE.value)
                )
        if b % 4 == 1:
            b0 = (b - 1) // 4
            if (
                b0 % 2 == 1
                and 4 * b < 3 * n - 4
                and (4 * b0 * b0 - 4) % n == 0
                and a == b - h + 2
            ):
                out.append(
                    ExclusionWitness(4, b0=b0, builder="sigma", case=SigmaCase.GR_GREEN.value)
                )
        if a % 4 == 3:
            a0 = (a - 3) // 4
            if (
                a0 % 2 == 0
                and 4 * a < n + 4
                and (4 * (a0 + 1) ** 2 - 4) % n == 0
                and b == h + a - 2
            ):
                out.append(
                    ExclusionWitness(5, a0=a0, builder="sigma", case=SigmaCase.BR_GREEN.value)
                )
        if a % 4 == 1:
            a0 = (a - 1) // 4
            if (
                a0 % 2 == 1
                and 4 * a < n - 4
                and (4 * a0 * a0 - 4) % n == 0
                and b == h + a + 2
            ):
                out.append(
                    ExclusionWitness(5, a0=a0, builder="sigma", case=SigmaCase.GR_BLUE.value)
                )
    return out


GP_EXCEPTIONS = frozenset([(4, 1), (5, 2), (8, 3), (10, 3), (12, 5), (24, 5)])


def classify_gp(n: int, k: int) -> Verdict:
    """Square-root rule with the six exceptional pairs; the dodecahedron is
    the lone vertex-transitive graph outside the square-root rule."""
    p = normalize(FamilyParams(Family.GP, n, (k,)))
    k = p.k
    if (n, k) == (10, 2):
        return Verdict(p, Status.NOT_IN_C, Reason.GP_DODECAHEDRON)
    if (k * k - 1) % n != 0 and (k * k + 1) % n != 0:
        return Verdict(p, Status.NOT_VERTEX_TRANSITIVE, Reason.GP_NOT_VT)
    if (n, k) in GP_EXCEPTIONS:
        return Verdict(p, Status.NOT_IN_C, Reason.GP_EXCEPTION)
    return Verdict(p, Status.IN_C)


def classify_htg(n: int, l: int) -> Verdict:
    """The three gcd/divisibility exclusions, after removing the shifts that
    give generalized Petersen graphs and the non-normal shift-2 family."""
    p = normalize(FamilyParams(Family.HTG, n, (l,)))
    l = p.l
    if l == 0:
        return Verdict(
            p,
            Status.NOT_APPLICABLE,
            Reason.HTG_IS_GP,
            redirect=normalize(FamilyParams(Family.GP, n, (1,))),
        )
    if l == n // 2:
        return Verdict(
            p,
            Status.NOT_APPLICABLE,
            Reason.HTG_IS_GP,
            redirect=normalize(FamilyParams(Family.GP, n, (n // 2 - 1,))),
        )
    if l == 2 and n > 4:
        # The shift-2 graphs are the non-normal Cayley family; none of them
        # keeps the partition invariant, whether or not a gcd clause fires.
        return Verdict(p, Status.NOT_IN_C, Reason.HTG_SHIFT2_NONNORMAL)
    g_plus = math.gcd(n, l + 2)
    g_minus = math.gcd(n, l - 2)
    if g_plus == 4 and (l * l + 4 * l - 12) % (4 * n) == 0:
        return Verdict(p, Status.NOT_IN_C, Reason.HTG_COND_1)
    if g_minus == 4 and (l * l - 4 * l - 12) % (4 * n) == 0:
        return Verdict(p, Status.NOT_IN_C, Reason.HTG_COND_2)
    if g_plus == 4 == g_minus and (l * l + 12) % (4 * n) == 0:
        return Verdict(p, Status.NOT_IN_C, Reason.HTG_COND_4)
    return Verdict(p, Status.IN_C)


def classify_mo(n: int, a: int, b: int) -> Verdict:
    """Feasibility plus the girth-4 rule for a = 1 and the five modular
    exclusion clauses for a > 1.  Triples giving generalized Petersen or
    honeycomb graphs are handed off, not judged here."""
    p = normalize(FamilyParams(Family.MO, n, (a, b)))
    a, b = p.a, p.b
    if b == n - a:
        return Verdict(
            p,
            Status.NOT_APPLICABLE,
            Reason.MO_IS_GP,
            redirect=normalize(FamilyParams(Family.GP, n, (a,))),
        )
    if b == a + 2:
        return Verdict(
            p,
            Status.NOT_APPLICABLE,
            Reason.MO_IS_HTG,
            redirect=normalize(FamilyParams(Family.HTG, n, (a + 1,))),
        )
    if not is_feasible(n, a, b):
        return Verdict(p, Status.NOT_VERTEX_TRANSITIVE, Reason.MO_INFEASIBLE)
    if a == 1:
        if n % 8 == 0 and b == (n + 6) // 2:
            return Verdict(p, Status.NOT_IN_C, Reason.MO_GIRTH4, witness_hint="girth4")
        return Verdict(p, Status.IN_C)
    matches = match_exclusion_items(n, a, b)
    if len(matches) > 1:
        raise ArithmeticError(
            f"exclusion clauses {[m.item for m in matches]} all match ({n},{a},{b}); "
            "they are expected to be mutually exclusive"
        )
    if matches:
        m = matches[0]
        return Verdict(
            p,
            Status.NOT_IN_C,
            Reason[f"MO_ITEM_{m.item}"],
            witness_hint=m.hint,
        )
    return Verdict(p, Status.IN_C)


def classify(p: FamilyParams) -> Verdict:
    """Normalize, dispatch by family, and follow the MO hand-offs."""
    p = normalize(p)
    if p.tag is Family.GP:
        return classify_gp(p.n, p.k)
    if p.tag is Family.HTG:
        return classify_htg(p.n, p.l)
    if p.tag is Family.ME:
        return Verdict(p, Status.NOT_APPLICABLE, Reason.ME_NOT_CLASSIFIED)
    v = classify_mo(p.n, p.a, p.b)
    if v.status is Status.NOT_APPLICABLE and v.redirect is not None:
        inner = classify(v.redirect)
        return Verdict(
            p, inner.status, inner.reason, inner.witness_hint, redirect=v.redirect
        )
    return v


def resolve_redirects(p: FamilyParams) -> Verdict:
    """Classify and chase NOT_APPLICABLE hand-offs down to a final verdict.

    Honeycomb shifts 0 and n/2 re-parameterize as generalized Petersen
    graphs; the sweep compares the oracle against the final status.
    """
    seen = set()
    params = normalize(p)
    while True:
        v = classify(params)
        if v.status is not Status.NOT_APPLICABLE or v.redirect is None:
            return v
        if params in seen:
            return v
        seen.add(params)
        params = v.redirect
