"""Exact automorphism groups of cubic graphs by seeded propagation.

Cubic graphs make automorphism search nearly deterministic: once the image of
a vertex and of its neighbors is chosen, images propagate along a spanning
breadth-first order with only occasional genuine branch points (short even
cycles).  The search therefore seeds the image of vertex u_0, walks the BFS
order trying candidate images in ascending order, and backtracks on any edge
inconsistency.

Group sizes in this problem are usually tiny, but not always: the shift-2
honeycomb family has order n * 2^(n/2), far past anything enumerable.  So the
primary representation is an orbit-stabilizer chain (:func:`analyze_aut`):
exact order and a generating set of chain-transversal elements, computed from
one existence search per candidate image, never materializing the group.
:func:`aut_group` still builds the explicit element set when the order fits
under the cap, which is what the factorization oracles at desk scale use.

Everything is deterministic for a fixed input, so generator lists and orders
are reproducible across runs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .graph_core import EdgeColoring, LabeledCubicGraph, edge
from .perm import GroupData, GroupOrderCapExceeded, ORDER_CAP, Permutation


class DisconnectedGraphError(ValueError):
    pass


def _bfs_order(adj, roots):
    """Vertices reachable from roots in BFS order, with a mapped parent each.

    Root vertices get parent -1; every other vertex's parent precedes it.
    """
    seen = {r: True for r in roots}
    order = []
    parent = {}
    frontier = list(roots)
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in seen:
                    seen[y] = True
                    parent[y] = x
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return order, parent


def _consistent_pins(adj, colors, pins) -> bool:
    if len(set(pins.values())) != len(pins):
        return False
    for x, y in pins.items():
        if colors[x] != colors[y]:
            return False
        for z in adj[x]:
            if z in pins and pins[z] not in adj[y]:
                return False
    return True


def _refine_colors(adj, nv) -> tuple[int, ...]:
    """Iterated neighborhood refinement: split vertex classes by the multiset
    of neighbor classes until stable.  An automorphism preserves the classes."""
    colors = [0] * nv
    while True:
        sigs = [(colors[x], tuple(sorted(colors[y] for y in adj[x]))) for x in range(nv)]
        relabel = {}
        nxt = []
        for s in sigs:
            if s not in relabel:
                relabel[s] = len(relabel)
            nxt.append(relabel[s])
        if nxt == colors:
            return tuple(colors)
        colors = nxt


class _SearchContext:
    """Per-graph data shared by every search: refined vertex colors and
    all-pairs distances, both automorphism invariants used for pruning."""

    __slots__ = ("adj", "colors", "dist")

    def __init__(self, g: LabeledCubicGraph):
        adj = g.adj
        nv = 2 * g.n
        self.adj = adj
        self.colors = _refine_colors(adj, nv)
        self.dist = tuple(_bfs_distances(adj, nv, root) for root in range(nv))


def _bfs_distances(adj, nv, root) -> tuple[int, ...]:
    dist = [-1] * nv
    dist[root] = 0
    frontier = [root]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return tuple(dist)


_context_cache: dict[LabeledCubicGraph, _SearchContext] = {}


def _context(g: LabeledCubicGraph) -> _SearchContext:
    ctx = _context_cache.get(g)
    if ctx is None:
        if len(_context_cache) >= 64:
            _context_cache.clear()
        ctx = _context_cache[g] = _SearchContext(g)
    return ctx


def _extensions(g: LabeledCubicGraph, pins: dict[int, int], first_only: bool):
    """All edge-consistent completions of the pinned partial map.

    Returns image tuples.  Completions of a full pin set over a connected
    graph are exactly the automorphisms extending the pins.
    """
    ctx = _context(g)
    adj = ctx.adj
    colors = ctx.colors
    dist = ctx.dist
    nv = 2 * g.n
    if not _consistent_pins(adj, colors, pins):
        return []
    for x, y in pins.items():
        for r, ri in pins.items():
            if dist[x][r] != dist[y][ri]:
                return []
    # Assignment order: most already-mapped neighbors first, ties broken by
    # closeness to the pin that actually moves something, so contradictions
    # near a bad pin surface before the search wanders into flexible regions.
    focus = min((x for x in pins if pins[x] != x), default=min(pins, default=0))
    dist_f = dist[focus]
    counts = [0] * nv
    placed = bytearray(nv)
    seq = []
    heaps: list[list[tuple[int, int]]] = [[], [], [], []]
    for x in pins:
        placed[x] = 1
    for x in pins:
        for z in adj[x]:
            if not placed[z]:
                counts[z] += 1
                heapq.heappush(heaps[counts[z]], (dist_f[z], z))
    if not pins:
        placed[0] = 1
        seq.append(0)
        for z in adj[0]:
            counts[z] += 1
            heapq.heappush(heaps[counts[z]], (dist_f[z], z))
    remaining = nv - len(pins) - len(seq)
    for _ in range(remaining):
        x = -1
        for c in (3, 2, 1):
            heap = heaps[c]
            while heap:
                _, cand = heap[0]
                if placed[cand] or counts[cand] != c:
                    heapq.heappop(heap)
                    continue
                x = cand
                heapq.heappop(heap)
                break
            if x >= 0:
                break
        if x < 0:
            raise DisconnectedGraphError("graph is not connected")
        placed[x] = 1
        seq.append(x)
        for z in adj[x]:
            if not placed[z]:
                counts[z] += 1
                heapq.heappush(heaps[counts[z]], (dist_f[z], z))
    mapping = [-1] * nv
    used = bytearray(nv)
    for x, y in pins.items():
        mapping[x] = y
        used[y] = 1
    # a candidate image must sit at the right distance from each reference pin
    pin_keys = sorted(pins)
    if len(pin_keys) > 4:
        step = (len(pin_keys) - 1) / 3.0
        pin_keys = [pin_keys[round(i * step)] for i in range(4)]
    refs = [(dist[r], dist[pins[r]]) for r in pin_keys]
    results = []
    m = len(seq)

    def rec(pos: int) -> bool:
        if pos == m:
            results.append(tuple(mapping))
            return first_only
        x = seq[pos]
        nbrs_x = adj[x]
        anchor = -1
        for z in nbrs_x:
            if mapping[z] >= 0:
                anchor = mapping[z]
                break
        candidates = adj[anchor] if anchor >= 0 else range(nv)
        cx = colors[x]
        for y in candidates:
            if used[y] or colors[y] != cx:
                continue
            ok = True
            for dr, dri in refs:
                if dr[x] != dri[y]:
                    ok = False
                    break
            if ok:
                for z in nbrs_x:
                    mz = mapping[z]
                    if mz >= 0 and y not in adj[mz]:
                        ok = False
                        break
            if ok:
                mapping[x] = y
                used[y] = 1
                if rec(pos + 1):
                    return True
                mapping[x] = -1
                used[y] = 0
        return False

    rec(0)
    return results


def extend_partial(g: LabeledCubicGraph, pins: dict[int, int]) -> list[Permutation]:
    """Every automorphism of g agreeing with the given partial vertex map."""
    return [Permutation(g.n, img) for img in _extensions(g, pins, first_only=False)]


def exists_extension(g: LabeledCubicGraph, pins: dict[int, int]) -> bool:
    """Whether any automorphism of g agrees with the partial vertex map."""
    return bool(_extensions(g, pins, first_only=True))


@dataclass(frozen=True)
class AutData:
    """Order and generators of the automorphism group, chain-style.

    ``generators`` are the transversal elements of an orbit-stabilizer chain
    rooted at u_0, so they generate the full group; ``base_orbits`` holds the
    chain's (base vertex, orbit size) levels, whose product is the order.
    """

    order: int
    generators: tuple[Permutation, ...]
    base_orbits: tuple[tuple[int, int], ...]

    @property
    def u0_orbit_size(self) -> int:
        return self.base_orbits[0][1]


AutLike = Union[AutData, GroupData]


def analyze_aut(g: LabeledCubicGraph) -> AutData:
    """Orbit-stabilizer chain down the BFS order from u_0.

    Level zero finds one automorphism per image of u_0; each later level asks,
    with all earlier base vertices pinned in place, which neighbors of the
    current vertex's BFS parent it can still reach.  One existence search per
    candidate; the group itself is never enumerated.
    """
    adj = g.adj
    nv = 2 * g.n
    bfs, parent = _bfs_order(adj, [0])
    if len(bfs) + 1 != nv:
        raise DisconnectedGraphError("graph is not connected")
    gens: list[Permutation] = []
    levels: list[tuple[int, int]] = []
    order = 1
    count = 1
    for w in range(1, nv):
        ext = _extensions(g, {0: w}, first_only=True)
        if ext:
            gens.append(Permutation(g.n, ext[0]))
            count += 1
    levels.append((0, count))
    order *= count
    pins = {0: 0}
    for x in bfs:
        count = 1
        for y in adj[parent[x]]:
            if y == x:
                continue
            trial = dict(pins)
            trial[x] = y
            ext = _extensions(g, trial, first_only=True)
            if ext:
                gens.append(Permutation(g.n, ext[0]))
                count += 1
        if count > 1:
            levels.append((x, count))
            order *= count
        pins[x] = x
    if not gens:
        gens.append(Permutation.identity(g.n))
    return AutData(order, tuple(gens), tuple(levels))


def _greedy_generators(elements: list[Permutation]) -> list[Permutation]:
    n = elements[0].n
    ident = Permutation.identity(n)
    if len(elements) == 1:
        return [ident]
    gens: list[Permutation] = []
    closure = {ident.image}
    for el in elements:
        if el.image in closure:
            continue
        gens.append(el)
        frontier = list(closure)
        closure.add(el.image)
        frontier.append(el.image)
        while frontier:
            img = frontier.pop()
            for gen in gens:
                gi = gen.image
                prod = tuple(gi[x] for x in img)
                if prod not in closure:
                    closure.add(prod)
                    frontier.append(prod)
        if len(closure) == len(elements):
            break
    return gens


def aut_group(g: LabeledCubicGraph, order_cap: int = ORDER_CAP) -> GroupData:
    """The full automorphism group as an explicit element set, assembled from
    the stabilizer of u_0 and one coset representative per orbit vertex.

    Aborts with a diagnostic when the order exceeds the cap; callers who only
    need order, orbits, or a generating set use :func:`analyze_aut` instead.
    """
    data = analyze_aut(g)
    if data.order > order_cap:
        raise GroupOrderCapExceeded(
            f"automorphism group has order {data.order}, exceeding cap {order_cap}"
        )
    nv = 2 * g.n
    stab = _extensions(g, {0: 0}, first_only=False)
    elements = []
    for w in range(nv):
        if w == 0:
            reps = [tuple(range(nv))]
        else:
            reps = _extensions(g, {0: w}, first_only=True)
            if not reps:
                continue
        t = reps[0]
        for s in stab:
            elements.append(tuple(t[x] for x in s))
    perms = [Permutation(g.n, img) for img in sorted(elements)]
    return GroupData(_greedy_generators(perms), perms)


def vertex_orbit(g: LabeledCubicGraph, x: int, aut: Optional[AutLike] = None) -> frozenset[int]:
    aut = analyze_aut(g) if aut is None else aut
    orbit = {x}
    frontier = [x]
    while frontier:
        z = frontier.pop()
        for p in aut.generators:
            y = p(z)
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return frozenset(orbit)


def is_vertex_transitive(g: LabeledCubicGraph, aut: Optional[AutLike] = None) -> bool:
    aut = analyze_aut(g) if aut is None else aut
    return len(vertex_orbit(g, 0, aut)) == 2 * g.n


def group_order(aut: AutLike) -> int:
    return aut.order if isinstance(aut, AutData) else len(aut.elements)


def vertex_stabilizer_order(
    g: LabeledCubicGraph, x: int, aut: Optional[AutLike] = None
) -> int:
    """Exact stabilizer order, by orbit-stabilizer."""
    aut = analyze_aut(g) if aut is None else aut
    order = group_order(aut)
    orbit = len(vertex_orbit(g, x, aut))
    if order % orbit:
        raise AssertionError("orbit size does not divide the group order")
    return order // orbit


class EdgeOrbitPattern(Enum):
    SEPARATE = "SEPARATE"
    RB_G = "RB_G"
    RG_B = "RG_B"
    ALL = "ALL"


class ForbiddenOrbitPattern(RuntimeError):
    """The blue-green/red split, which the coloring theory rules out."""


def _edge_orbit(aut: AutLike, e) -> frozenset:
    orbit = {e}
    frontier = [e]
    while frontier:
        x = frontier.pop()
        for p in aut.generators:
            y = p.apply_edge(x)
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return frozenset(orbit)


def edge_orbit_pattern(
    g: LabeledCubicGraph,
    coloring: EdgeColoring,
    aut: Optional[AutLike] = None,
) -> EdgeOrbitPattern:
    """Which coarsening of the red/blue/green classes the full group realizes."""
    aut = analyze_aut(g) if aut is None else aut
    n = g.n
    red_orbit = _edge_orbit(aut, edge(0, n))
    blue_in_red = edge(0, 1) in red_orbit
    green_in_red = edge(1, 2) in red_orbit
    if blue_in_red and green_in_red:
        return EdgeOrbitPattern.ALL
    if blue_in_red:
        return EdgeOrbitPattern.RB_G
    if green_in_red:
        return EdgeOrbitPattern.RG_B
    blue_orbit = _edge_orbit(aut, edge(0, 1))
    if edge(1, 2) in blue_orbit:
        raise ForbiddenOrbitPattern(
            "edge orbits are {blue+green, red}; this split cannot occur"
        )
    return EdgeOrbitPattern.SEPARATE
