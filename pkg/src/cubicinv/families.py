"""Constructors for the four parameterized families and parameter handling.

Constructors reject invalid parameters instead of silently normalizing them;
normalization is its own explicit operation so that sweeps can walk the raw
parameter space and check isomorph coherence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .graph_core import LabeledCubicGraph, edge
from .perm import Permutation, u, v


class Family(Enum):
    GP = "GP"
    HTG = "HTG"
    MO = "MO"
    ME = "ME"


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    """Tagged parameter record: GP(n,k) | HTG(n,l) | MO(n,a,b) | ME(n,a,b)."""

    tag: Family
    n: int
    args: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.tag.value}({self.n},{','.join(str(a) for a in self.args)})"

    @property
    def k(self) -> int:
        if self.tag is not Family.GP:
            raise AttributeError("k is a GP parameter")
        return self.args[0]

    @property
    def l(self) -> int:
        if self.tag is not Family.HTG:
            raise AttributeError("l is an HTG parameter")
        return self.args[0]

    @property
    def a(self) -> int:
        if self.tag not in (Family.MO, Family.ME):
            raise AttributeError("a is an MO/ME parameter")
        return self.args[0]

    @property
    def b(self) -> int:
        if self.tag not in (Family.MO, Family.ME):
            raise AttributeError("b is an MO/ME parameter")
        return self.args[1]


_PARAMS_RE = re.compile(r"(GP|HTG|MO|ME)\(\s*(\d+(?:\s*,\s*\d+)+)\s*\)")


def parse_params(text: str) -> FamilyParams:
    """Parse the compact grammar TAG '(' ints ')' , e.g. "MO(16,3,9)"."""
    m = _PARAMS_RE.fullmatch(text.strip())
    if m is None:
        raise ParamError(f"cannot parse family parameters from {text!r}")
    tag = Family(m.group(1))
    nums = [int(t) for t in re.split(r"\s*,\s*", m.group(2))]
    arity = 3 if tag in (Family.MO, Family.ME) else 2
    if len(nums) != arity:
        raise ParamError(f"{tag.value} takes {arity} integers, got {len(nums)}")
    p = FamilyParams(tag, nums[0], tuple(nums[1:]))
    validate_params(p)
    return p


def validate_params(p: FamilyParams) -> None:
    n = p.n
    if p.tag is Family.GP:
        k = p.k
        if n < 3:
            raise ParamError("GP needs n >= 3")
        if not 1 <= k < n:
            raise ParamError("GP needs 1 <= k < n")
        if n % 2 == 0 and k == n // 2:
            raise ParamError("GP with k = n/2 would have doubled inner edges")
    elif p.tag is Family.HTG:
        l = p.l
        if n < 4 or n % 2:
            raise ParamError("HTG needs even n >= 4")
        if not 0 <= l < n or l % 2:
            raise ParamError("HTG needs even shift with 0 <= shift < n")
    elif p.tag is Family.MO:
        a, b = p.a, p.b
        if n < 4 or n % 2:
            raise ParamError("MO needs even n >= 4")
        if not (0 < a < b < n) or a % 2 == 0 or b % 2 == 0:
            raise ParamError("MO needs odd jumps 0 < a < b < n")
    elif p.tag is Family.ME:
        a, b = p.a, p.b
        if n < 4 or n % 2:
            raise ParamError("ME needs even n >= 4")
        if not (0 < a < n and 0 < b < n) or a % 2 or b % 2:
            raise ParamError("ME needs even jumps strictly between 0 and n")
        if a == n // 2 or b == n // 2:
            raise ParamError("ME with a jump of n/2 would have doubled inner edges")


def build_gp(n: int, k: int) -> LabeledCubicGraph:
    """Generalized Petersen graph: inner edges [v_i, v_{i+k}] for all i."""
    validate_params(FamilyParams(Family.GP, n, (k,)))
    inner = {edge(v(i, n), v(i + k, n)) for i in range(n)}
    return LabeledCubicGraph(n, inner)


def build_htg(n: int, l: int) -> LabeledCubicGraph:
    """Honeycomb toroidal graph on two n-cycles.

    The u- and v-cycles are joined by [u_i, v_i] at odd i and the jump edges
    [u_{i+l}, v_i] at even i.  Note this is not the straight-spoke convention:
    the jump matching is stored as the graph's matching and the v-cycle as its
    inner edge set.
    """
    validate_params(FamilyParams(Family.HTG, n, (l,)))
    inner = {edge(v(i, n), v(i + 1, n)) for i in range(n)}
    matching = set()
    for i in range(n):
        if i % 2:
            matching.add(edge(u(i, n), v(i, n)))
        else:
            matching.add(edge(u(i + l, n), v(i, n)))
    return LabeledCubicGraph(n, inner, matching)


def build_mo(n: int, a: int, b: int) -> LabeledCubicGraph:
    """Odd-jump two-cycle graph: edges [v_i, v_{i+a}], [v_i, v_{i+b}], i even."""
    validate_params(FamilyParams(Family.MO, n, (a, b)))
    inner = set()
    for i in range(0, n, 2):
        inner.add(edge(v(i, n), v(i + a, n)))
        inner.add(edge(v(i, n), v(i + b, n)))
    return LabeledCubicGraph(n, inner)


def build_me(n: int, a: int, b: int) -> LabeledCubicGraph:
    """Even-jump graph: [v_i, v_{i+a}] at even i, [v_i, v_{i+b}] at odd i.

    The inner subgraph splits between even and odd vertices, so it is never a
    single spanning cycle.
    """
    validate_params(FamilyParams(Family.ME, n, (a, b)))
    inner = set()
    for i in range(n):
        jump = a if i % 2 == 0 else b
        inner.add(edge(v(i, n), v(i + jump, n)))
    return LabeledCubicGraph(n, inner)


def build(p: FamilyParams) -> LabeledCubicGraph:
    if p.tag is Family.GP:
        return build_gp(p.n, p.k)
    if p.tag is Family.HTG:
        return build_htg(p.n, p.l)
    if p.tag is Family.MO:
        return build_mo(p.n, p.a, p.b)
    return build_me(p.n, p.a, p.b)


def normalize(p: FamilyParams) -> FamilyParams:
    """Canonical representative under the family isomorphisms.

    GP(n,k) ~ GP(n,n-k); HTG(n,l) ~ HTG(n,n-l); MO(n,a,b) ~ MO(n,n-b,n-a),
    keeping the smaller of the two minimum odd jumps.
    """
    validate_params(p)
    n = p.n
    if p.tag is Family.GP:
        return FamilyParams(Family.GP, n, (min(p.k, n - p.k),))
    if p.tag is Family.HTG:
        return FamilyParams(Family.HTG, n, (min(p.l, (n - p.l) % n),))
    if p.tag is Family.MO and n - p.b < p.a:
        return FamilyParams(Family.MO, n, (n - p.b, n - p.a))
    return p


def htg_iso_g(n: int, a: int) -> Permutation:
    """Vertex bijection from MO(n,a,a+2) labels onto HTG(n,a+1) labels.

    Sends u_i -> u_{i+1}, v_j -> v_{j+1} for even j and v_j -> v_{j-a} for odd
    j.  Callers confirm it maps every MO edge to an HTG edge.
    """
    if n % 2 or a % 2 == 0 or not 0 < a < n - 2:
        raise ParamError("need even n and odd a with 0 < a < n-2")
    image = [0] * (2 * n)
    for i in range(n):
        image[u(i, n)] = u(i + 1, n)
        image[v(i, n)] = v(i + 1, n) if i % 2 == 0 else v(i - a, n)
    return Permutation(n, image)
