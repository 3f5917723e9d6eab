"""Kauffman states and enhanced (oriented) states of a tangle diagram.

Smoothing rule: a positive marker on ``xa`` keeps the two strands vertical and
a negative marker turns them back (a cap below a cup); ``xb`` is the other way
round.  This matches the weight split ``R = A*I + A^-1*(n (x) u)`` and
``R^-1 = A^-1*I + A*(n (x) u)``.

An orientation of a smoothed diagram is stored as one direction per edge,
``+1`` for upward and ``-1`` for downward.  A component's orientation bit is
0 when its canonical traversal is used: circles leave their smallest edge
upward, arcs leave their smallest boundary edge away from the boundary.

Gauss-map degree: every cap or cup (real or produced by smoothing) whose left
end points down and right end points up contributes ``+1/2``, otherwise
``-1/2``.  A counterclockwise circle therefore has degree ``+1`` and plays the
role of the label ``1``; a clockwise circle is ``x``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .diagram import TangleDiagram, Tile
from .ring import HalfInt

__all__ = [
    "Link",
    "Component",
    "KauffmanState",
    "EnhancedState",
    "enumerate_markers",
    "smooth",
    "component_tau",
    "enhance",
    "enhanced_states",
    "kauffman_states",
]

UP, DOWN = 1, -1

VERTICAL, CAP, CUP = "vertical", "cap", "cup"


@dataclass(frozen=True)
class Link:
    """A connection between two edge ends inside a tile.

    ``vertical``: upper end of ``a`` to lower end of ``b``.
    ``cap``: upper ends of ``a`` (left) and ``b`` (right).
    ``cup``: lower ends of ``a`` (left) and ``b`` (right).
    """

    kind: str
    a: int
    b: int


@dataclass(frozen=True)
class Component:
    kind: str  # "circle" or "arc"
    edges: tuple[int, ...]  # in canonical traversal order
    directions: tuple[int, ...]  # direction of each edge in that traversal
    events: tuple[Link, ...]  # caps and cups met along the traversal
    ports: tuple[int, ...] = ()  # boundary edges of an arc, start first

    @property
    def is_arc(self) -> bool:
        return self.kind == "arc"

    @property
    def is_circle(self) -> bool:
        return self.kind == "circle"

    @cached_property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @cached_property
    def direction_map(self) -> dict[int, int]:
        return dict(zip(self.edges, self.directions))


def enumerate_markers(d: TangleDiagram) -> list[tuple[int, ...]]:
    """All ``2**n`` marker assignments, positive before negative."""
    return list(itertools.product((1, -1), repeat=d.n_crossings))


def tile_links(d: TangleDiagram, markers: Sequence[int]) -> list[Link]:
    links = []
    c = 0
    for p in d.placements:
        kind = p.kind
        if kind is Tile.ID:
            links.append(Link(VERTICAL, p.inputs[0], p.outputs[0]))
        elif kind is Tile.CAP:
            links.append(Link(CAP, *p.inputs))
        elif kind is Tile.CUP:
            links.append(Link(CUP, *p.outputs))
        else:
            m = markers[c]
            c += 1
            vertical = (m > 0) == (kind is Tile.CROSS_A)
            if vertical:
                links.append(Link(VERTICAL, p.inputs[0], p.outputs[0]))
                links.append(Link(VERTICAL, p.inputs[1], p.outputs[1]))
            else:
                links.append(Link(CAP, *p.inputs))
                links.append(Link(CUP, *p.outputs))
    return links


@dataclass(frozen=True)
class KauffmanState:
    diagram: TangleDiagram
    markers: tuple[int, ...]
    components: tuple[Component, ...]

    @property
    def sigma(self) -> int:
        return sum(self.markers)

    @property
    def n_circles(self) -> int:
        return sum(1 for c in self.components if c.is_circle)

    @property
    def n_arcs(self) -> int:
        return len(self.components) - self.n_circles

    @cached_property
    def component_of_edge(self) -> dict[int, int]:
        return {e: k for k, comp in enumerate(self.components) for e in comp.edges}

    def orientation_of(self, directions: dict[int, int] | Sequence[int]) -> tuple[int, ...]:
        """Recover orientation bits from per-edge directions."""
        return tuple(
            0 if directions[c.edges[0]] == c.directions[0] else 1 for c in self.components
        )


def smooth(d: TangleDiagram, markers: Sequence[int]) -> KauffmanState:
    markers = tuple(markers)
    if len(markers) != d.n_crossings:
        raise ValueError(f"expected {d.n_crossings} markers, got {len(markers)}")
    return _smooth(d, markers)


@lru_cache(maxsize=4096)
def _smooth(d: TangleDiagram, markers: tuple[int, ...]) -> KauffmanState:
    # each edge has a lower and an upper end; at most one link per end
    upper: dict[int, Link] = {}
    lower: dict[int, Link] = {}
    for link in tile_links(d, markers):
        if link.kind == VERTICAL:
            upper[link.a] = link
            lower[link.b] = link
        elif link.kind == CAP:
            upper[link.a] = upper[link.b] = link
        else:
            lower[link.a] = lower[link.b] = link

    seen: set[int] = set()
    comps = []
    # arcs first from their smallest boundary edge, then circles from smallest edge
    for start in sorted(d.boundary_edges):
        if start in seen:
            continue
        # a bottom boundary edge has no lower link; leave it upward
        direction = UP if start not in lower else DOWN
        comps.append(_walk(start, direction, upper, lower, seen, arc=True))
    for start in range(d.n_edges):
        if start not in seen:
            comps.append(_walk(start, UP, upper, lower, seen, arc=False))
    comps.sort(key=lambda c: min(c.edges))
    return KauffmanState(d, markers, tuple(comps))


def _walk(start, direction, upper, lower, seen, arc):
    edges, dirs, events = [], [], []
    e, dr = start, direction
    while True:
        edges.append(e)
        dirs.append(dr)
        seen.add(e)
        link = upper.get(e) if dr == UP else lower.get(e)
        if link is None:
            break  # reached the boundary
        if link.kind == VERTICAL:
            nxt, ndr = (link.b, UP) if dr == UP else (link.a, DOWN)
        else:
            events.append(link)
            nxt = link.b if e == link.a else link.a
            ndr = DOWN if link.kind == CAP else UP
        if not arc and nxt == start:
            break
        e, dr = nxt, ndr
    if arc:
        return Component("arc", tuple(edges), tuple(dirs), tuple(events), (edges[0], edges[-1]))
    return Component("circle", tuple(edges), tuple(dirs), tuple(events))


def event_degree(link: Link, directions: dict[int, int] | Sequence[int], convention: int = 1) -> HalfInt:
    """Local Gauss-map degree of a cap or cup under the given edge directions."""
    ccw = directions[link.a] == DOWN and directions[link.b] == UP
    return HalfInt(convention if ccw else -convention)


def component_tau(c: Component, orientation: int, convention: int = 1) -> HalfInt:
    """Degree of the Gauss map of one oriented component.

    ``convention=-1`` selects the mirror-image degree convention.
    """
    s = -1 if orientation else 1
    dmap = {e: s * d for e, d in zip(c.edges, c.directions)}
    total = HalfInt(0)
    for link in c.events:
        total = total + event_degree(link, dmap, convention)
    return total


@dataclass(frozen=True)
class EnhancedState:
    state: KauffmanState
    orientation: tuple[int, ...]
    sigma: int = field(compare=False)
    tau: HalfInt = field(compare=False)

    @property
    def markers(self) -> tuple[int, ...]:
        return self.state.markers

    @property
    def p(self) -> HalfInt:
        return self.tau

    @property
    def q(self) -> int:
        return self.sigma - self.tau.twice

    @property
    def bigrade(self) -> tuple[HalfInt, int]:
        return (self.p, self.q)

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.state.markers, self.orientation)

    @cached_property
    def directions(self) -> dict[int, int]:
        out = {}
        for comp, bit in zip(self.state.components, self.orientation):
            s = -1 if bit else 1
            for e, d in zip(comp.edges, comp.directions):
                out[e] = s * d
        return out

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """Per-component degree doubled (``2`` for label 1, ``-2`` for x on circles)."""
        return tuple(
            component_tau(c, b).twice for c, b in zip(self.state.components, self.orientation)
        )

    def reversed(self) -> EnhancedState:
        return make_enhanced(self.state, tuple(1 - b for b in self.orientation))

    def __hash__(self) -> int:
        return hash(self.key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EnhancedState):
            return NotImplemented
        return self.key == other.key and self.state.diagram == other.state.diagram


def make_enhanced(s: KauffmanState, orientation: tuple[int, ...], convention: int = 1) -> EnhancedState:
    tau = HalfInt(0)
    for c, b in zip(s.components, orientation):
        tau = tau + component_tau(c, b, convention)
    return EnhancedState(s, tuple(orientation), s.sigma, tau)


def enhance(s: KauffmanState, convention: int = 1) -> list[EnhancedState]:
    """All ``2**(#components)`` orientations of ``s`` with their gradings."""
    return [
        make_enhanced(s, bits, convention)
        for bits in itertools.product((0, 1), repeat=len(s.components))
    ]


def kauffman_states(d: TangleDiagram) -> Iterator[KauffmanState]:
    for m in enumerate_markers(d):
        yield smooth(d, m)


def enhanced_states(d: TangleDiagram, convention: int = 1) -> Iterator[EnhancedState]:
    """Every enhanced state, in basis order (markers, then orientation bits)."""
    for s in kauffman_states(d):
        yield from enhance(s, convention)
