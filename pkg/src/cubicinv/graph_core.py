"""The labeled cubic graph, its canonical edge partition, and structural probes.

A graph here always has an outer n-cycle on u_0..u_{n-1}, a perfect matching
joining outer to inner vertices (the straight spokes [u_i, v_i] unless the
constructor is given something else), and a 2-regular inner edge set on the
v's.  Edges are canonical sorted int pairs, so edge sets compare and hash
exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .perm import (
    GroupData,
    Permutation,
    compose,
    generate,
    make_rho,
    make_tau,
    orbits,
    parse_vertex,
    vertex_label,
)

Edge = tuple[int, int]


def edge(x: int, y: int) -> Edge:
    if x == y:
        raise ValueError(f"loop at vertex {x}")
    return (x, y) if x < y else (y, x)


class GraphConstructionError(ValueError):
    pass


class LabeledCubicGraph:
    """Cubic graph on 2n labeled vertices with the fixed outer cycle.

    ``matching`` defaults to the straight spokes.  Honeycomb-style graphs pass
    their shifted jump matching instead; everything downstream (canonical
    factorization, automorphism checks) works off ``matching`` rather than
    assuming [u_i, v_i].
    """

    __slots__ = ("n", "inner_edges", "matching", "edges", "adj")

    def __init__(
        self,
        n: int,
        inner_edges: Iterable[Edge],
        matching: Optional[Iterable[Edge]] = None,
    ):
        if n < 3:
            raise GraphConstructionError("half-order must be at least 3")
        self.n = n
        inner = frozenset(edge(*e) for e in inner_edges)
        for a, b in inner:
            if a < n or b < n:
                raise GraphConstructionError(
                    f"inner edge {(a, b)} touches an outer vertex"
                )
        if matching is None:
            match = frozenset((i, n + i) for i in range(n))
        else:
            match = frozenset(edge(*e) for e in matching)
        ends = [x for e in match for x in e]
        if len(match) != n or len(set(ends)) != 2 * n:
            raise GraphConstructionError("matching is not a perfect matching")
        if any(not (a < n <= b) for a, b in match):
            raise GraphConstructionError("matching edge does not join outer to inner")
        outer = frozenset(edge(i, (i + 1) % n) for i in range(n))
        all_edges = outer | match | inner
        if len(all_edges) != 3 * n:
            raise GraphConstructionError("edge classes overlap; graph is not simple")
        deg = [0] * (2 * n)
        nbrs: list[list[int]] = [[] for _ in range(2 * n)]
        for a, b in all_edges:
            deg[a] += 1
            deg[b] += 1
            nbrs[a].append(b)
            nbrs[b].append(a)
        bad = [x for x in range(2 * n) if deg[x] != 3]
        if bad:
            raise GraphConstructionError(
                f"vertex {vertex_label(bad[0], n)} has degree {deg[bad[0]]}, not 3"
            )
        self.inner_edges = inner
        self.matching = match
        self.edges = all_edges
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def outer_edges(self) -> frozenset[Edge]:
        n = self.n
        return frozenset(edge(i, (i + 1) % n) for i in range(n))

    @property
    def vertex_count(self) -> int:
        return 2 * self.n

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.adj[x]

    def matching_partner(self, x: int) -> int:
        for y in self.adj[x]:
            if edge(x, y) in self.matching:
                return y
        raise AssertionError("perfect matching misses a vertex")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LabeledCubicGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"LabeledCubicGraph(n={self.n}, |E|={len(self.edges)})"


def is_automorphism(g: LabeledCubicGraph, p: Permutation) -> bool:
    """True iff p maps the edge set of g onto itself."""
    if p.n != g.n:
        raise ValueError("half-order mismatch")
    edges = g.edges
    img = p.image
    for a, b in edges:
        x, y = img[a], img[b]
        if ((x, y) if x < y else (y, x)) not in edges:
            return False
    return True


def is_isomorphism(
    g1: LabeledCubicGraph, g2: LabeledCubicGraph, p: Permutation
) -> bool:
    """True iff the vertex bijection p maps every edge of g1 to an edge of g2."""
    if g1.n != g2.n or p.n != g1.n:
        raise ValueError("half-order mismatch")
    edges2 = g2.edges
    img = p.image
    for a, b in g1.edges:
        x, y = img[a], img[b]
        if ((x, y) if x < y else (y, x)) not in edges2:
            return False
    return True


def faithful_extension(h: Permutation, g: LabeledCubicGraph) -> Permutation:
    """Extend an outer permutation through the matching of g.

    An automorphism fixing the outer cycle setwise is pinned down by its outer
    action: the inner endpoint of a matching edge has to follow the outer one.
    The result is the only candidate; it need not be an automorphism, callers
    validate with :func:`is_automorphism`.
    """
    if h.n != g.n:
        raise ValueError("half-order mismatch")
    if h.moves_inner():
        raise ValueError("restriction moves inner vertices")
    image = list(h.image)
    for x in range(g.n, 2 * g.n):
        image[x] = g.matching_partner(h(g.matching_partner(x)))
    return Permutation(g.n, image)


def _two_regular_cycles(n_verts: int, edges: Iterable[Edge]) -> list[list[int]]:
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    for x, a in nbrs.items():
        if len(a) != 2:
            raise ValueError(f"vertex {x} has degree {len(a)} in a 2-regular subgraph")
    cycles = []
    seen: set[int] = set()
    for start in sorted(nbrs):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            a, b = nbrs[cur]
            nxt = b if a == prev else a
            if nxt == start:
                break
            cyc.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt
        cycles.append(cyc)
    return cycles


def inner_cycle_structure(g: LabeledCubicGraph) -> tuple[int, ...]:
    """Sorted cycle lengths of the 2-regular inner subgraph."""
    return tuple(sorted(len(c) for c in _two_regular_cycles(g.n, g.inner_edges)))


def girth(g: LabeledCubicGraph) -> int:
    """Length of a shortest cycle, by breadth-first search from every vertex."""
    best = 4 * g.n
    adj = g.adj
    for root in range(2 * g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                dx = dist[x]
                if 2 * dx + 1 >= best:
                    break
                for y in adj[x]:
                    if y == parent[x]:
                        continue
                    if y in dist:
                        best = min(best, dx + dist[y] + 1)
                    else:
                        dist[y] = dx + 1
                        parent[y] = x
                        nxt.append(y)
            frontier = nxt
    return best


@dataclass(frozen=True)
class Factorization:
    """A (1-factor, 2-factor) edge partition with its cycle lengths.

    ``two_equal_cycles`` records whether the 2-factor is exactly two cycles of
    the same length; the sweep wants to look at near misses, so an unequal
    split is flagged here instead of raised.
    """

    one_factor: frozenset[Edge]
    two_factor: frozenset[Edge]
    cycle_lengths: tuple[int, ...]

    @property
    def two_equal_cycles(self) -> bool:
        return (
            len(self.cycle_lengths) == 2
            and self.cycle_lengths[0] == self.cycle_lengths[1]
        )


def canonical_factorization(g: LabeledCubicGraph) -> Factorization:
    """The matching as 1-factor; outer cycle plus inner subgraph as 2-factor."""
    two = g.outer_edges | g.inner_edges
    lengths = tuple(sorted(len(c) for c in _two_regular_cycles(2 * g.n, two)))
    return Factorization(g.matching, two, lengths)


@dataclass(frozen=True)
class EdgeColoring:
    """The three edge classes cut out by the canonical regular group."""

    red: frozenset[Edge]
    blue: frozenset[Edge]
    green: frozenset[Edge]

    def color_of(self, e: Edge) -> str:
        if e in self.red:
            return "red"
        if e in self.blue:
            return "blue"
        if e in self.green:
            return "green"
        raise KeyError(f"edge {e} is uncolored")

    def classes(self) -> dict[str, frozenset[Edge]]:
        return {"red": self.red, "blue": self.blue, "green": self.green}


class ColoringError(ValueError):
    pass


def color_edges(g: LabeledCubicGraph, fmap: Permutation) -> EdgeColoring:
    """Edge orbits of the regular group generated by the square rotation, the
    basic reflection, and the outer/inner swap ``fmap``.

    Red is the orbit of the spoke [u_0, v_0] and must come out as exactly the
    matching; blue holds [u_0, u_1] and green holds [u_1, u_2].
    """
    n = g.n
    rho = make_rho(n)
    rho2_ext = faithful_extension(compose(rho, rho), g)
    rhotau_ext = faithful_extension(compose(rho, make_tau(n)), g)
    group = generate([rho2_ext, rhotau_ext, fmap])
    classes = orbits(group, sorted(g.edges))
    if len(classes) != 3:
        raise ColoringError(
            f"expected 3 edge orbits, found {len(classes)}; bad parameters"
        )
    by_edge = {}
    for cls in classes:
        for e in cls:
            by_edge[e] = cls
    red = by_edge[edge(0, n)]
    blue = by_edge[edge(0, 1)]
    green = by_edge[edge(1, 2)]
    if {red, blue, green} != set(classes):
        raise ColoringError("anchor edges do not hit all three orbits")
    if red != g.matching:
        raise ColoringError("spoke orbit is not the matching")
    return EdgeColoring(red=red, blue=blue, green=green)


@dataclass(frozen=True)
class AnchorSystem:
    """Auxiliary 2-regular graph gluing green edges to 4-cycle diameters.

    ``chains`` are the vertex sets of its cycles, ``fblocks`` the 4-cycle
    vertex sets of the red-blue subgraph, and ``mblocks`` the green edge end
    pairs.
    """

    auxiliary_edges: frozenset[Edge]
    chains: tuple[frozenset[int], ...]
    fblocks: tuple[frozenset[int], ...]
    mblocks: tuple[frozenset[int], ...]


def anchor_system(g: LabeledCubicGraph, coloring: EdgeColoring) -> AnchorSystem:
    """Anchor chains of a girth-4 graph whose red-blue subgraph is a 4-cycle
    2-factor (the unit inner jump case); raises otherwise."""
    rb = coloring.red | coloring.blue
    comps = _two_regular_cycles(2 * g.n, rb)
    if any(len(c) != 4 for c in comps):
        raise ValueError(
            "red-blue subgraph is not a union of 4-cycles; anchor chains need a=1"
        )
    diagonals = set()
    for cyc in comps:
        a, b, c, d = cyc
        diagonals.add(edge(a, c))
        diagonals.add(edge(b, d))
    aux = frozenset(coloring.green | diagonals)
    chains = tuple(
        frozenset(c) for c in _two_regular_cycles(2 * g.n, aux)
    )
    fblocks = tuple(frozenset(c) for c in comps)
    mblocks = tuple(frozenset(e) for e in sorted(coloring.green))
    return AnchorSystem(aux, chains, fblocks, mblocks)


# ---------------------------------------------------------------------------
# serialization: edge list, DOT, and the versioned graph record
# ---------------------------------------------------------------------------

RECORD_MAGIC = "cubicinv-graph/1"


def to_edge_list(g: LabeledCubicGraph) -> str:
    lines = [
        f"{vertex_label(a, g.n)} {vertex_label(b, g.n)}" for a, b in sorted(g.edges)
    ]
    return "\n".join(lines) + "\n"


def _graph_from_edges(n: int, edges: set[Edge]) -> LabeledCubicGraph:
    outer = set()
    matching = set()
    inner = set()
    for a, b in edges:
        if b < n:
            outer.add((a, b))
        elif a >= n:
            inner.add((a, b))
        else:
            matching.add((a, b))
    expected_outer = {edge(i, (i + 1) % n) for i in range(n)}
    if outer != expected_outer:
        raise ValueError("edge list does not contain the standard outer cycle")
    return LabeledCubicGraph(n, inner, matching)


def from_edge_list(text: str) -> LabeledCubicGraph:
    pairs = []
    max_idx = -1
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ValueError(f"bad edge line {line!r}")
        pairs.append(toks)
        for t in toks:
            max_idx = max(max_idx, int(t[1:]))
    n = max_idx + 1
    edges = {edge(parse_vertex(a, n), parse_vertex(b, n)) for a, b in pairs}
    return _graph_from_edges(n, edges)


def to_dot(
    g: LabeledCubicGraph,
    name: str = "X",
    coloring: Optional[EdgeColoring] = None,
) -> str:
    lines = [f"graph {name} {{"]
    for a, b in sorted(g.edges):
        la, lb = vertex_label(a, g.n), vertex_label(b, g.n)
        if coloring is not None:
            lines.append(f"  {la} -- {lb} [color={coloring.color_of((a, b))}];")
        else:
            lines.append(f"  {la} -- {lb};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_EDGE = re.compile(
    r"\s*([uv]\d+)\s*--\s*([uv]\d+)\s*(?:\[color=(\w+)\])?\s*;\s*"
)


def from_dot(text: str) -> LabeledCubicGraph:
    pairs = []
    max_idx = -1
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("graph") or line == "}":
            continue
        m = _DOT_EDGE.fullmatch(line)
        if m is None:
            raise ValueError(f"bad DOT edge line {line!r}")
        pairs.append((m.group(1), m.group(2)))
        for t in (m.group(1), m.group(2)):
            max_idx = max(max_idx, int(t[1:]))
    n = max_idx + 1
    edges = {edge(parse_vertex(a, n), parse_vertex(b, n)) for a, b in pairs}
    return _graph_from_edges(n, edges)


def to_record(g: LabeledCubicGraph, params_text: str) -> str:
    lines = [RECORD_MAGIC, f"params {params_text}", f"n {g.n}", f"edges {len(g.edges)}"]
    for a, b in sorted(g.edges):
        lines.append(f"{vertex_label(a, g.n)} {vertex_label(b, g.n)}")
    return "\n".join(lines) + "\n"


def from_record(text: str) -> tuple[LabeledCubicGraph, str]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != RECORD_MAGIC:
        raise ValueError("not a cubicinv graph record")
    header = {}
    body_start = 1
    for ln in lines[1:]:
        key, _, val = ln.partition(" ")
        if key in ("params", "n", "edges") and key not in header:
            header[key] = val
            body_start += 1
        else:
            break
    if set(header) != {"params", "n", "edges"}:
        raise ValueError("graph record header is incomplete")
    n = int(header["n"])
    body = lines[body_start:]
    if len(body) != int(header["edges"]):
        raise ValueError("edge count does not match header")
    edges = set()
    for ln in body:
        a, b = ln.split()
        edges.add(edge(parse_vertex(a, n), parse_vertex(b, n)))
    return _graph_from_edges(n, edges), header["params"]
