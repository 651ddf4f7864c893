"""Closed-formula automorphisms and isomorphism witnesses.

Each builder constructs a permutation symbolically from parameters and raises
``PreconditionError`` when its arithmetic conditions fail.  No builder proves
anything: the constructed map is only accepted once it passes
:func:`cubicinv.graph_core.is_automorphism` on the matching graph, which is
what the tests and the CLI witness command do.

The outer/inner swap comes in two branches, depending on which inner jump the
image of u_1 takes.  The color-rotating map and the two color-swapping
involutions each come in a displayed variant and a mirror variant; the mirror
tables swap the roles of the two jumps (and walk the outer cycle the other
way), which is the only completion consistent with the color classes.
"""

from __future__ import annotations

import math
from enum import Enum

from .aut_search import extend_partial
from .families import build_mo
from .perm import Permutation, u, v


class PreconditionError(ValueError):
    pass


class BranchTag(Enum):
    A_BRANCH = "A"
    B_BRANCH = "B"


class AlphaCase(Enum):
    BLUE = "BLUE"
    GREEN = "GREEN"


class ThetaCase(Enum):
    BR = "BR"
    GR = "GR"


class SigmaCase(Enum):
    BR_BLUE = "BR_BLUE"
    BR_GREEN = "BR_GREEN"
    GR_BLUE = "GR_BLUE"
    GR_GREEN = "GR_GREEN"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def _valid_mo_triple(n: int, a: int, b: int) -> bool:
    return n >= 4 and n % 2 == 0 and 0 < a < b < n and a % 2 == 1 and b % 2 == 1


def square_condition_holds(n: int, a: int, b: int) -> bool:
    """(b-a)^2/2 = 2 in Z_n."""
    return ((b - a) ** 2 // 2 - 2) % n == 0


def a_branch_holds(n: int, a: int, b: int) -> bool:
    """a + (a-1)(a-b)/2 = 1 in Z_n."""
    return (a + (a - 1) * (a - b) // 2 - 1) % n == 0


def b_branch_holds(n: int, a: int, b: int) -> bool:
    """b + (b-1)(b-a)/2 = 1 in Z_n."""
    return (b + (b - 1) * (b - a) // 2 - 1) % n == 0


def branch_of(n: int, a: int, b: int) -> BranchTag | None:
    """Which branch congruence holds, preferring A when both do.

    Both can hold only when gcd(b-a, n) = 2 fails (or a = n-b), so on
    feasible triples the answer is unambiguous.
    """
    if a_branch_holds(n, a, b):
        return BranchTag.A_BRANCH
    if b_branch_holds(n, a, b):
        return BranchTag.B_BRANCH
    return None


def f_preconditions_hold(n: int, a: int, b: int, branch: BranchTag) -> bool:
    if not _valid_mo_triple(n, a, b):
        return False
    if math.gcd(b - a, n) != 2 or a == n - b:
        return False
    if not square_condition_holds(n, a, b):
        return False
    if branch is BranchTag.A_BRANCH:
        return a_branch_holds(n, a, b)
    return b_branch_holds(n, a, b)


def build_f(n: int, a: int, b: int, branch: BranchTag) -> Permutation:
    """The fixed-point-free involution exchanging outer and inner vertices.

    A-branch: u_i -> v_{i(a-b)/2} for even i, u_i -> v_{a+(i-1)(a-b)/2} for
    odd i.  B-branch: the same with the roles of a and b exchanged.  The
    inner images are forced by the map being a product of transpositions.
    """
    _require(
        f_preconditions_hold(n, a, b, branch),
        f"outer/inner swap conditions fail for ({n},{a},{b}) branch {branch.value}",
    )
    c, d = (a, b) if branch is BranchTag.A_BRANCH else (b, a)
    half = (c - d) // 2
    image = [-1] * (2 * n)
    for i in range(n):
        t = i * half if i % 2 == 0 else c + (i - 1) * half
        ui, vt = u(i, n), v(t, n)
        if image[vt] != -1:
            raise PreconditionError(
                f"transposition pattern is not injective for ({n},{a},{b})"
            )
        image[ui] = vt
        image[vt] = ui
    return Permutation(n, image)


def girth4_preconditions_hold(n: int) -> bool:
    return n % 8 == 0 and n > 8


def build_girth4_involution(n: int) -> Permutation:
    """The stabilizer involution of the girth-4 graph with b = (n+6)/2.

    With m = n/2 this is the product of the eight transpositions
    (u_1 v_0)(u_2 v_{m+3})(u_3 v_{m+2})(u_4 v_5)(u_{m+1} v_m)(u_{m+2} v_3)
    (u_{m+3} v_2)(u_{m+4} v_{m+5}), every other vertex fixed.  It fixes u_0,
    so the graph's stabilizers are nontrivial.
    """
    _require(girth4_preconditions_hold(n), f"need n > 8 with 8 | n, got {n}")
    m = n // 2
    pairs = [
        (u(1, n), v(0, n)),
        (u(2, n), v(m + 3, n)),
        (u(3, n), v(m + 2, n)),
        (u(4, n), v(5, n)),
        (u(m + 1, n), v(m, n)),
        (u(m + 2, n), v(3, n)),
        (u(m + 3, n), v(2, n)),
        (u(m + 4, n), v(m + 5, n)),
    ]
    image = list(range(2 * n))
    for x, y in pairs:
        image[x] = y
        image[y] = x
    return Permutation(n, image)


def alpha_preconditions_hold(n: int, a: int, b: int, case: AlphaCase) -> bool:
    if not _valid_mo_triple(n, a, b) or n % 16 != 8:
        return False
    if case is AlphaCase.BLUE:
        if a % 4 != 1:
            return False
        a0 = (a - 1) // 4
        return (
            a0 % 2 == 1
            and 4 * a < n - 4
            and (8 * (a0 * a0 + a0 + 1)) % n == 0
            and b == n // 2 + a + 2
        )
    if b % 4 != 1:
        return False
    b0 = (b - 1) // 4
    return (
        b0 % 2 == 1
        and 2 * b > n
        and 4 * b < 3 * n - 4
        and (8 * (b0 * b0 + b0 + 1)) % n == 0
        and a == b - n // 2 + 2
    )


def build_alpha(n: int, a: int, b: int, case: AlphaCase) -> Permutation:
    """The order-3 color rotation fixing u_0 (blue -> red -> green -> blue).

    Blue case (the a-jump inner edge at v_0 is blue), with s = a-1:
        u_{4i+r} -> u_{is}, v_{is}, v_{is+a}, u_{is+a}         for r = 0..3
        v_{4i+r} -> u_{is-1}, v_{is+b}, v_{is+a-b}, u_{is+a+1}
    Green case: the same tables with a and b exchanged (s = b-1).
    """
    _require(
        alpha_preconditions_hold(n, a, b, case),
        f"color-rotation conditions fail for ({n},{a},{b}) case {case.value}",
    )
    c, d = (a, b) if case is AlphaCase.BLUE else (b, a)
    s = c - 1
    image = [-1] * (2 * n)
    for idx in range(n):
        i, r = divmod(idx, 4)
        base = i * s
        if r == 0:
            iu, iv = u(base, n), u(base - 1, n)
        elif r == 1:
            iu, iv = v(base, n), v(base + d, n)
        elif r == 2:
            iu, iv = v(base + c, n), v(base + c - d, n)
        else:
            iu, iv = u(base + c, n), u(base + c + 1, n)
        image[u(idx, n)] = iu
        image[v(idx, n)] = iv
    return Permutation(n, image)


def theta_preconditions_hold(n: int, a: int, b: int, case: ThetaCase) -> bool:
    if not _valid_mo_triple(n, a, b) or n % 96 != 48:
        return False
    if case is ThetaCase.BR:
        return a == n // 4 + 3 and b == n // 2 + 1
    return a == n // 4 - 3 and b == n // 2 - 1


def build_theta(n: int, a: int, b: int, case: ThetaCase) -> Permutation:
    """The stabilizer involution of the two length-8 two-color-cycle families.

    BR case (blue-red cycles have length 8): fixes u_{6i+1} and u_{6i+2};
    with q = n/4+1 and h = n/2, for each residue r of the index mod 6,
        u_{6i+r} -> v_{+1}, u, u, v_{-1}, v_{+q}, v_{-q}
        v_{6i+r} -> v_{+h}, u_{-1}, u_{+1}, v_{+h}, u_{+q}, u_{-q}.
    GR case (green-red cycles have length 8): the same pattern advanced by
    one position, fixing u_{6i} and u_{6i+1}, with q replaced by -(n/4-1).
    """
    _require(
        theta_preconditions_hold(n, a, b, case),
        f"stabilizer-involution conditions fail for ({n},{a},{b}) case {case.value}",
    )
    q = n // 4 + 1 if case is ThetaCase.BR else -(n // 4 - 1)
    h = n // 2
    shift = 0 if case is ThetaCase.BR else 1
    image = [-1] * (2 * n)
    for idx in range(n):
        r = (idx + shift) % 6
        if r == 0:
            iu, iv = v(idx + 1, n), v(idx + h, n)
        elif r == 1:
            iu, iv = u(idx, n), u(idx - 1, n)
        elif r == 2:
            iu, iv = u(idx, n), u(idx + 1, n)
        elif r == 3:
            iu, iv = v(idx - 1, n), v(idx + h, n)
        elif r == 4:
            iu, iv = v(idx + q, n), u(idx + q, n)
        else:
            iu, iv = v(idx - q, n), u(idx - q, n)
        image[u(idx, n)] = iu
        image[v(idx, n)] = iv
    return Permutation(n, image)


def sigma_preconditions_hold(n: int, a: int, b: int, case: SigmaCase) -> bool:
    if not _valid_mo_triple(n, a, b) or n % 8 != 0:
        return False
    h = n // 2
    if case is SigmaCase.BR_BLUE:
        if b % 4 != 3:
            return False
        b0 = (b - 3) // 4
        return (
            b0 > 0
            and b0 % 2 == 0
            and 4 * b < 3 * n + 4
            and (4 * (b0 + 1) ** 2 - 4) % n == 0
            and a == b - h - 2
        )
    if case is SigmaCase.BR_GREEN:
        if a % 4 != 3:
            return False
        a0 = (a - 3) // 4
        return (
            a0 % 2 == 0
            and 4 * a < n + 4
            and (4 * (a0 + 1) ** 2 - 4) % n == 0
            and b == h + a - 2
        )
    if case is SigmaCase.GR_BLUE:
        if a % 4 != 1:
            return False
        a0 = (a - 1) // 4
        return (
            a0 % 2 == 1
            and 4 * a < n - 4
            and (4 * a0 * a0 - 4) % n == 0
            and b == h + a + 2
        )
    if b % 4 != 1:
        return False
    b0 = (b - 1) // 4
    return (
        b0 % 2 == 1
        and 4 * b < 3 * n - 4
        and (4 * b0 * b0 - 4) % n == 0
        and a == b - h + 2
    )


def build_sigma(n: int, a: int, b: int, case: SigmaCase) -> Permutation:
    """The involutions fixing u_0 that swap one cycle color with red.

    BR cases swap blue and red (u_1 <-> v_0); GR cases swap green and red
    (u_{n-1} <-> v_0).  The BLUE/GREEN suffix records which inner jump is
    blue, which decides the step s of the image walk:

        BR_BLUE  (s = b+1):  u_{4i+r} -> u_{is}, v_{is}, v_{is+b}, u_{is+b}
                             v_{4i+r} -> u_{is+1}, v_{is+a}, v_{is+b-a}, u_{is+b-1}
        BR_GREEN (s = a+1):  same with a and b exchanged.
        GR_BLUE  (s = a-1):  u_{-(4i+r)} -> u_{is}, v_{is}, v_{is+a}, u_{is+a}
                             v_{-(4i+r)} -> u_{is-1}, v_{is+b}, v_{is+a-b}, u_{is+a+1}
        GR_GREEN (s = b-1):  same with a and b exchanged.
    """
    _require(
        sigma_preconditions_hold(n, a, b, case),
        f"color-swap conditions fail for ({n},{a},{b}) case {case.value}",
    )
    if case in (SigmaCase.BR_BLUE, SigmaCase.GR_GREEN):
        c, d = b, a
    else:
        c, d = a, b
    if case in (SigmaCase.BR_BLUE, SigmaCase.BR_GREEN):
        s, sign, off = c + 1, 1, 1
    else:
        s, sign, off = c - 1, -1, -1
    image = [-1] * (2 * n)
    for idx in range(n):
        i, r = divmod(idx, 4)
        base = i * s
        if r == 0:
            iu, iv = u(base, n), u(base + off, n)
        elif r == 1:
            iu, iv = v(base, n), v(base + d, n)
        elif r == 2:
            iu, iv = v(base + c, n), v(base + c - d, n)
        else:
            iu, iv = u(base + c, n), u(base + c - off, n)
        src = sign * idx
        image[u(src, n)] = iu
        image[v(src, n)] = iv
    return Permutation(n, image)


# ---------------------------------------------------------------------------
# parameter-space enumerators, used by the verification sweeps
# ---------------------------------------------------------------------------


def _odd_triples(max_n: int):
    for n in range(4, max_n + 1, 2):
        for a in range(1, n, 2):
            for b in range(a + 2, n, 2):
                yield n, a, b


def f_parameter_sets(max_n: int, branch: BranchTag) -> list[tuple[int, int, int]]:
    return [
        (n, a, b)
        for n, a, b in _odd_triples(max_n)
        if f_preconditions_hold(n, a, b, branch)
    ]


def girth4_parameter_sets(max_n: int) -> list[int]:
    return [n for n in range(16, max_n + 1, 8)]


def alpha_parameter_sets(max_n: int, case: AlphaCase) -> list[tuple[int, int, int]]:
    return [
        (n, a, b)
        for n, a, b in _odd_triples(max_n)
        if alpha_preconditions_hold(n, a, b, case)
    ]


def theta_parameter_sets(max_n: int, case: ThetaCase) -> list[tuple[int, int, int]]:
    out = []
    for n in range(48, max_n + 1, 96):
        a, b = (n // 4 + 3, n // 2 + 1) if case is ThetaCase.BR else (n // 4 - 3, n // 2 - 1)
        if theta_preconditions_hold(n, a, b, case):
            out.append((n, a, b))
    return out


def sigma_parameter_sets(max_n: int, case: SigmaCase) -> list[tuple[int, int, int]]:
    return [
        (n, a, b)
        for n, a, b in _odd_triples(max_n)
        if sigma_preconditions_hold(n, a, b, case)
    ]
