"""Permutations of the labeled vertex set and small permutation groups.

Every graph in this package lives on 2n vertices split into an outer set
u_0..u_{n-1} and an inner set v_0..v_{n-1}.  Internally a vertex is a plain
int: u_i is i and v_i is n + i.  That makes permutation application an array
lookup and keeps edge keys hashable and orderable (all outer vertices sort
before all inner ones, then by index, which is the canonical edge order used
throughout).

Groups are held as explicit element sets.  Every group that shows up here has
order at most a few hundred, so closure enumeration with a hash set beats any
stabilizer-chain machinery; ``ORDER_CAP`` is a tripwire against runaway
inputs, not a real resource limit.
"""

from __future__ import annotations

import re
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

ORDER_CAP = 10**6


class Side(Enum):
    OUTER = "u"
    INNER = "v"


class VertexId(NamedTuple):
    side: Side
    index: int

    def label(self) -> str:
        return f"{self.side.value}{self.index}"

    def to_int(self, n: int) -> int:
        i = self.index % n
        return i if self.side is Side.OUTER else n + i

    @staticmethod
    def from_int(x: int, n: int) -> "VertexId":
        if not 0 <= x < 2 * n:
            raise ValueError(f"vertex {x} out of range for half-order {n}")
        return VertexId(Side.OUTER, x) if x < n else VertexId(Side.INNER, x - n)


def u(i: int, n: int) -> int:
    """Int id of the outer vertex u_i (index reduced mod n)."""
    return i % n


def v(i: int, n: int) -> int:
    """Int id of the inner vertex v_i (index reduced mod n)."""
    return n + i % n


def vertex_label(x: int, n: int) -> str:
    return VertexId.from_int(x, n).label()


_VERTEX_RE = re.compile(r"([uv])(\d+)")


def parse_vertex(token: str, n: int) -> int:
    m = _VERTEX_RE.fullmatch(token.strip())
    if m is None:
        raise ValueError(f"bad vertex token {token!r}")
    side, idx = m.group(1), int(m.group(2))
    if idx >= n:
        raise ValueError(f"vertex index {idx} out of range for half-order {n}")
    return idx if side == "u" else n + idx


class Permutation:
    """A bijection on the 2n vertex labels, stored as a dense image tuple."""

    __slots__ = ("n", "image", "_hash")

    def __init__(self, n: int, image: Iterable[int]):
        image = tuple(image)
        if len(image) != 2 * n:
            raise ValueError(f"image has length {len(image)}, expected {2 * n}")
        if sorted(image) != list(range(2 * n)):
            raise ValueError("image is not a bijection on the vertex set")
        self.n = n
        self.image = image
        self._hash = hash(image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, range(2 * n))

    @classmethod
    def from_u_map(cls, n: int, u_image: Sequence[int]) -> "Permutation":
        """Permutation moving only outer vertices: u_i -> u_{u_image[i]}."""
        if sorted(x % n for x in u_image) != list(range(n)):
            raise ValueError("u_image is not a bijection on the outer indices")
        return cls(n, [x % n for x in u_image] + list(range(n, 2 * n)))

    def __call__(self, x: int) -> int:
        return self.image[x]

    def apply_edge(self, e: tuple[int, int]) -> tuple[int, int]:
        a, b = self.image[e[0]], self.image[e[1]]
        return (a, b) if a < b else (b, a)

    def inverse(self) -> "Permutation":
        inv = [0] * (2 * self.n)
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(self.n, inv)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    def moves_inner(self) -> bool:
        return any(self.image[x] != x for x in range(self.n, 2 * self.n))

    def fixes(self, x: int) -> bool:
        return self.image[x] == x

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.n}, {self.cycle_string()!r})"

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least vertex."""
        seen = [False] * (2 * self.n)
        out = []
        for start in range(2 * self.n):
            if seen[start] or self.image[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            x = self.image[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.image[x]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join(
            "(" + " ".join(vertex_label(x, self.n) for x in cyc) + ")" for cyc in cycs
        )

    @classmethod
    def from_cycle_string(cls, n: int, text: str) -> "Permutation":
        """Parse disjoint-cycle notation such as "(u0 u1 u2)(v0 v1 v2)"."""
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*[^()]*?\s*\))+", text):
            raise ValueError(f"bad cycle notation {text!r}")
        image = list(range(2 * n))
        touched = set()
        for body in re.findall(r"\(([^()]*)\)", text):
            toks = body.split()
            if not toks:
                continue
            cyc = [parse_vertex(t, n) for t in toks]
            if len(set(cyc)) != len(cyc) or touched.intersection(cyc):
                raise ValueError("cycles are not disjoint")
            touched.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                image[a] = b
        return cls(n, image)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation x -> p(q(x))."""
    if p.n != q.n:
        raise ValueError(f"half-order mismatch: {p.n} != {q.n}")
    qi = q.image
    pi = p.image
    return Permutation(p.n, [pi[x] for x in qi])


def make_rho(n: int) -> Permutation:
    """The outer rotation u_i -> u_{i+1}, fixing every inner vertex."""
    if n < 3:
        raise ValueError("half-order must be at least 3")
    return Permutation.from_u_map(n, [(i + 1) % n for i in range(n)])


def make_tau(n: int) -> Permutation:
    """The outer reflection u_i -> u_{-i}, fixing every inner vertex."""
    if n < 3:
        raise ValueError("half-order must be at least 3")
    return Permutation.from_u_map(n, [(-i) % n for i in range(n)])


class GroupOrderCapExceeded(RuntimeError):
    """Closure passed the order cap; the group is unexpectedly large."""


class GroupData:
    """A finite permutation group: generators plus the full element set."""

    __slots__ = ("generators", "elements", "_members")

    def __init__(self, generators: Sequence[Permutation], elements: Sequence[Permutation]):
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements, key=lambda p: p.image))
        self._members = frozenset(p.image for p in self.elements)

    @property
    def n(self) -> int:
        return self.elements[0].n

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p.image in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def summary(self) -> str:
        """Order plus generators in cycle notation, one per line."""
        lines = [f"order: {self.order}"]
        lines += [f"generator: {g.cycle_string()}" for g in self.generators]
        return "\n".join(lines) + "\n"


def generate(gens: Sequence[Permutation], order_cap: int = ORDER_CAP) -> GroupData:
    """Close a generator list under composition by breadth-first products."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators have mismatched half-orders")
    ident = Permutation.identity(n)
    elements = {ident.image: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q.image not in elements:
                    elements[q.image] = q
                    nxt.append(q)
                    if len(elements) > order_cap:
                        raise GroupOrderCapExceeded(
                            f"group order exceeds cap {order_cap}"
                        )
        frontier = nxt
    return GroupData(gens, list(elements.values()))


def _act(p: Permutation, point):
    if isinstance(point, int):
        return p(point)
    if isinstance(point, tuple) and len(point) == 2:
        return p.apply_edge(point)
    raise TypeError(f"cannot act on point {point!r}")


def orbits(group: GroupData, points: Iterable) -> list[frozenset]:
    """Orbit partition of the given points (vertices or unordered pairs)."""
    points = list(points)
    seen = set()
    out = []
    for seed in points:
        if seed in seen:
            continue
        orbit = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for g in group.generators:
                y = _act(g, x)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        seen |= orbit
        out.append(frozenset(orbit))
    return out


def is_block_system(group: GroupData, blocks: Iterable[Iterable[int]]) -> bool:
    """True iff every generator maps each block onto a block."""
    blocks = [frozenset(b) for b in blocks]
    domain = set(range(2 * group.n))
    covered: set[int] = set()
    for b in blocks:
        if not b or not b <= domain or covered & b:
            raise ValueError("blocks do not partition the vertex set")
        covered |= b
    if covered != domain:
        raise ValueError("blocks do not partition the vertex set")
    block_set = set(blocks)
    for g in group.generators:
        for b in blocks:
            if frozenset(g(x) for x in b) not in block_set:
                return False
    return True
