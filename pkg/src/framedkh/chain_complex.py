"""The framed Khovanov complex ``C_{p,q}(D)`` and its boundary operator.

Generators are enhanced states.  A generator carries an ordering of its
negative markers up to even permutations; the canonical representative lists
them in ascending crossing rank, and any other ordering is ``+-1`` times it.

The differential switches one positive marker ``c`` to negative.  The new
negative marker is put first in the target's ordering, so bringing the target
back to ascending order costs ``(-1)**#{negative markers ranked below c}``.

Two constructions of the differential are provided:

* ``boundary_tangle``: the grading rule.  Components untouched by the switch
  keep their orientation, arcs keep their endpoint orientations, and every
  reorientation of the touched components with ``p(T) = p(S) - 1`` is a
  target with coefficient 1.
* ``boundary_link``: the merge/split label table, for closed diagrams only.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .diagram import TangleDiagram, crossing_ranks
from .ring import HalfInt
from .states import (
    EnhancedState,
    KauffmanState,
    component_tau,
    enhanced_states,
    make_enhanced,
    smooth,
)

__all__ = [
    "ClosedOnly",
    "FROBENIUS",
    "Generator",
    "ChainGroup",
    "BoundaryMatrix",
    "KhovanovComplex",
    "chain_groups",
    "boundary_tangle",
    "boundary_link",
    "boundary_matrix",
    "verify_dsquare",
]

Bigrade = tuple[HalfInt, int]
FormalSum = dict[EnhancedState, int]


class ClosedOnly(ValueError):
    """Raised when an operation needs a diagram without boundary."""


ONE, X = "1", "x"

# merge: labels of the two circles (canonical order) -> [(label, coeff)]
# split: label of the circle -> [((label, label), coeff)]
FROBENIUS = {
    "merge": {
        (ONE, ONE): ((ONE, 1),),
        (ONE, X): ((X, 1),),
        (X, ONE): ((X, 1),),
        (X, X): (),
    },
    "split": {
        ONE: (((ONE, X), 1), ((X, ONE), 1)),
        X: (((X, X), 1),),
    },
}


def parity_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation that sorts ``seq`` (distinct entries)."""
    inv = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class Generator:
    """An enhanced state with an explicit ordering of its negative markers.

    ``negative_order`` lists crossing ids; comparison uses the ranks of the
    complex's crossing order.
    """

    enhanced: EnhancedState
    negative_order: tuple[int, ...]

    def canonical(self, ranks: Sequence[int] | None = None) -> tuple[int, Generator]:
        negs = [c for c, m in enumerate(self.enhanced.markers) if m < 0]
        if sorted(self.negative_order) != negs:
            raise ValueError("negative_order must list exactly the negative markers")
        key = (lambda c: ranks[c]) if ranks is not None else (lambda c: c)
        sign = parity_sign([key(c) for c in self.negative_order])
        return sign, Generator(self.enhanced, tuple(sorted(self.negative_order, key=key)))

    @classmethod
    def of(cls, s: EnhancedState, ranks: Sequence[int] | None = None) -> Generator:
        negs = [c for c, m in enumerate(s.markers) if m < 0]
        if ranks is not None:
            negs.sort(key=lambda c: ranks[c])
        return cls(s, tuple(negs))


@dataclass(frozen=True)
class ChainGroup:
    bigrade: Bigrade
    basis: tuple[EnhancedState, ...]

    @cached_property
    def index(self) -> dict[EnhancedState, int]:
        return {s: k for k, s in enumerate(self.basis)}

    @property
    def rank(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse integer matrix of ``d: C_{p,q} -> C_{p-1,q}``; entry (T, S)."""

    source: Bigrade
    target: Bigrade
    n_rows: int
    n_cols: int
    entries: Mapping[tuple[int, int], int]

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.n_cols for _ in range(self.n_rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((r, c, v) for (r, c), v in self.entries.items())

    def is_zero(self) -> bool:
        return not self.entries


def _port_edges(d: TangleDiagram, c: int) -> frozenset[int]:
    p = d.crossings[c]
    return frozenset(p.inputs + p.outputs)


def _switched(markers: tuple[int, ...], c: int) -> tuple[int, ...]:
    return markers[:c] + (-1,) + markers[c + 1 :]


def d3_sign(markers: Sequence[int], c: int, ranks: Sequence[int]) -> int:
    below = sum(1 for n, m in enumerate(markers) if m < 0 and ranks[n] < ranks[c])
    return -1 if below % 2 else 1


def _fixed_bit(comp, directions: Mapping[int, int], edge: int) -> int:
    return 0 if directions[edge] == comp.direction_map[edge] else 1


def tangle_targets(S: EnhancedState, c: int) -> list[EnhancedState]:
    """Unsigned targets of switching positive marker ``c`` (grading rule)."""
    d = S.state.diagram
    ports = _port_edges(d, c)
    T = smooth(d, _switched(S.markers, c))
    dirs = S.directions
    choices = []
    for comp in T.components:
        if not (comp.edge_set & ports):
            choices.append((_fixed_bit(comp, dirs, comp.edges[0]),))
        elif comp.is_arc:
            start, end = comp.ports
            bit = _fixed_bit(comp, dirs, start)
            if _fixed_bit(comp, dirs, end) != bit:
                return []  # endpoint orientations cannot both be kept
            choices.append((bit,))
        else:
            choices.append((0, 1))
    want = S.tau - 1
    out = []
    for bits in itertools.product(*choices):
        t = make_enhanced(T, bits)
        if t.tau == want:
            out.append(t)
    return out


def _label(twice_tau: int) -> str:
    return ONE if twice_tau > 0 else X


def link_targets(S: EnhancedState, c: int, table=FROBENIUS) -> list[tuple[int, EnhancedState]]:
    """Targets of switching marker ``c`` read off the merge/split table."""
    d = S.state.diagram
    if not d.is_closed:
        raise ClosedOnly("the label table applies to closed diagrams only")
    ports = _port_edges(d, c)
    T = smooth(d, _switched(S.markers, c))
    s_comps = S.state.components
    old = [k for k, comp in enumerate(s_comps) if comp.edge_set & ports]
    new = [k for k, comp in enumerate(T.components) if comp.edge_set & ports]
    labels = tuple(_label(S.labels[k]) for k in old)
    if len(old) == 2 and len(new) == 1:
        outcomes = [((lab,), coef) for lab, coef in table["merge"][labels]]
    elif len(old) == 1 and len(new) == 2:
        outcomes = list(table["split"][labels[0]])
    else:
        raise AssertionError("a planar resmoothing must merge or split circles")

    dirs = S.directions
    base = [
        None if comp.edge_set & ports else _fixed_bit(comp, dirs, comp.edges[0])
        for comp in T.components
    ]
    out = []
    for new_labels, coef in outcomes:
        bits = list(base)
        for k, lab in zip(new, new_labels):
            want = 2 if lab == ONE else -2
            bits[k] = 0 if component_tau(T.components[k], 0).twice == want else 1
        out.append((coef, make_enhanced(T, tuple(bits))))
    return out


def _boundary(S: EnhancedState, ranks, method: str, table) -> FormalSum:
    out: FormalSum = defaultdict(int)
    for c, m in enumerate(S.markers):
        if m < 0:
            continue
        sign = d3_sign(S.markers, c, ranks)
        if method == "tangle":
            for t in tangle_targets(S, c):
                out[t] += sign
        else:
            for coef, t in link_targets(S, c, table):
                out[t] += sign * coef
    return {t: v for t, v in out.items() if v}


def boundary_tangle(S: EnhancedState, order: Sequence[int] | None = None) -> FormalSum:
    ranks = crossing_ranks(S.state.diagram, order)
    return _boundary(S, ranks, "tangle", None)


def boundary_link(
    S: EnhancedState, table=FROBENIUS, order: Sequence[int] | None = None
) -> FormalSum:
    if not S.state.diagram.is_closed:
        raise ClosedOnly("the label table applies to closed diagrams only")
    ranks = crossing_ranks(S.state.diagram, order)
    return _boundary(S, ranks, "link", table)


def boundary_generator(
    g: Generator, order: Sequence[int] | None = None
) -> dict[Generator, int]:
    """Differential of a generator given with any negative-marker ordering.

    The result is expressed in canonical generators.
    """
    d = g.enhanced.state.diagram
    ranks = crossing_ranks(d, order)
    g.canonical(ranks)  # validates negative_order
    out: dict[Generator, int] = defaultdict(int)
    for c, m in enumerate(g.enhanced.markers):
        if m < 0:
            continue
        for t in tangle_targets(g.enhanced, c):
            # new negative marker goes first, then the given ordering
            s, canon = Generator(t, (c,) + g.negative_order).canonical(ranks)
            out[canon] += s
    return {k: v for k, v in out.items() if v}


class KhovanovComplex:
    """Bigraded chain groups of a diagram with a cached differential.

    ``method`` selects ``"tangle"`` (grading rule) or ``"link"`` (label
    table, closed diagrams only); ``table`` overrides the label table and
    ``order`` the crossing order used for signs.
    """

    def __init__(
        self,
        d: TangleDiagram,
        method: str = "tangle",
        table=None,
        order: Sequence[int] | None = None,
    ):
        if method not in ("tangle", "link"):
            raise ValueError(f"unknown boundary method {method!r}")
        if method == "link" and not d.is_closed:
            raise ClosedOnly("the label table applies to closed diagrams only")
        self.diagram = d
        self.method = method
        self.table = table if table is not None else FROBENIUS
        self.ranks = crossing_ranks(d, order)
        self._cache: dict[EnhancedState, FormalSum] = {}

    @cached_property
    def groups(self) -> dict[Bigrade, ChainGroup]:
        parts: dict[Bigrade, list[EnhancedState]] = defaultdict(list)
        for s in enhanced_states(self.diagram):
            parts[s.bigrade].append(s)
        return {
            bg: ChainGroup(bg, tuple(parts[bg]))
            for bg in sorted(parts, key=lambda b: (b[1], b[0]))
        }

    def group(self, p: HalfInt | int, q: int) -> ChainGroup:
        bg = (HalfInt.of(p), q)
        return self.groups.get(bg, ChainGroup(bg, ()))

    def boundary(self, S: EnhancedState) -> FormalSum:
        if S not in self._cache:
            self._cache[S] = _boundary(S, self.ranks, self.method, self.table)
        return self._cache[S]

    def matrix(self, p: HalfInt | int, q: int) -> BoundaryMatrix:
        src = self.group(p, q)
        tgt = self.group(HalfInt.of(p) - 1, q)
        entries = {}
        for col, s in enumerate(src.basis):
            for t, v in self.boundary(s).items():
                try:
                    row = tgt.index[t]
                except KeyError:
                    raise AssertionError(
                        f"boundary left bigrade {src.bigrade}: target {t.bigrade}"
                    ) from None
                entries[(row, col)] = v
        return BoundaryMatrix(src.bigrade, tgt.bigrade, tgt.rank, src.rank, entries)

    def matrices(self) -> dict[Bigrade, BoundaryMatrix]:
        return {bg: self.matrix(*bg) for bg in self.groups}

    def dsquare_ok(self) -> bool:
        for bg, group in self.groups.items():
            for s in group.basis:
                acc: dict[EnhancedState, int] = defaultdict(int)
                for t, v in self.boundary(s).items():
                    for u, w in self.boundary(t).items():
                        acc[u] += v * w
                if any(acc.values()):
                    return False
        return True

    def ranks_table(self) -> dict[Bigrade, int]:
        return {bg: g.rank for bg, g in self.groups.items()}


def chain_groups(d: TangleDiagram) -> dict[Bigrade, ChainGroup]:
    return KhovanovComplex(d).groups


def boundary_matrix(d: TangleDiagram, p: HalfInt | int, q: int) -> BoundaryMatrix:
    return KhovanovComplex(d).matrix(p, q)


def verify_dsquare(d: TangleDiagram, method: str = "tangle", table=None) -> bool:
    return KhovanovComplex(d, method=method, table=table).dsquare_ok()
