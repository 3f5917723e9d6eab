"""Integral bigraded homology of the framed Khovanov complex."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence

from .chain_complex import BoundaryMatrix, KhovanovComplex
from .diagram import TangleDiagram
from .ring import HalfInt, LaurentPoly, phase

__all__ = [
    "NotAComplex",
    "SmithDecomposition",
    "HomologyGroup",
    "BigradedHomology",
    "smith_normal_form",
    "homology",
    "compare_homology",
]


class NotAComplex(RuntimeError):
    """The differential does not square to zero (an engine bug, not bad input)."""


@dataclass(frozen=True)
class SmithDecomposition:
    invariant_factors: tuple[int, ...]
    n_rows: int
    n_cols: int

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(f for f in self.invariant_factors if f > 1)


def _as_sparse_rows(M) -> tuple[list[dict[int, int]], int, int]:
    if isinstance(M, BoundaryMatrix):
        rows: list[dict[int, int]] = [dict() for _ in range(M.n_rows)]
        for (r, c), v in M.entries.items():
            if v:
                rows[r][c] = v
        return rows, M.n_rows, M.n_cols
    dense = [list(map(int, r)) for r in M]
    n_cols = len(dense[0]) if dense else 0
    return [{c: v for c, v in enumerate(r) if v} for r in dense], len(dense), n_cols


def smith_normal_form(M: BoundaryMatrix | Sequence[Sequence[int]]) -> SmithDecomposition:
    """Invariant factors ``d1 | d2 | ...`` of an integer matrix.

    Unit pivots are eliminated first on the sparse rows, which handles the
    bulk of a Khovanov differential; whatever survives is reduced densely.
    """
    rows, n_rows, n_cols = _as_sparse_rows(M)
    cols: dict[int, set[int]] = {}
    for r, row in enumerate(rows):
        for c in row:
            cols.setdefault(c, set()).add(r)

    units = 0
    active = set(r for r, row in enumerate(rows) if row)
    while True:
        pivot = None
        best = None
        for r in active:
            row = rows[r]
            for c, v in row.items():
                if v in (1, -1):
                    cost = (len(row) - 1) * (len(cols[c]) - 1)
                    if best is None or cost < best:
                        best, pivot = cost, (r, c)
                        if cost == 0:
                            break
            if best == 0:
                break
        if pivot is None:
            break
        r, c = pivot
        prow = rows[r]
        pv = prow[c]
        for r2 in list(cols[c]):
            if r2 == r:
                continue
            row2 = rows[r2]
            f = row2[c] * pv
            for cc, v in prow.items():
                nv = row2.get(cc, 0) - f * v
                if nv:
                    row2[cc] = nv
                    cols.setdefault(cc, set()).add(r2)
                else:
                    row2.pop(cc, None)
                    cols[cc].discard(r2)
            if not row2:
                active.discard(r2)
        # column c is now clear outside the pivot row; drop row and column
        for cc in prow:
            cols[cc].discard(r)
        del cols[c]
        rows[r] = {}
        active.discard(r)
        units += 1

    rest = [rows[r] for r in sorted(active) if rows[r]]
    factors = [1] * units + _dense_diagonal(rest)
    return SmithDecomposition(_normalize(factors), n_rows, n_cols)


def _dense_diagonal(sparse_rows: list[dict[int, int]]) -> list[int]:
    if not sparse_rows:
        return []
    col_ids = sorted({c for row in sparse_rows for c in row})
    where = {c: k for k, c in enumerate(col_ids)}
    a = [[0] * len(col_ids) for _ in sparse_rows]
    for i, row in enumerate(sparse_rows):
        for c, v in row.items():
            a[i][where[c]] = v

    diag = []
    while a and a[0]:
        nz = [(abs(v), i, j) for i, row in enumerate(a) for j, v in enumerate(row) if v]
        if not nz:
            break
        _, i, j = min(nz)
        _swap(a, i, j)
        while True:
            p = a[0][0]
            for i in range(1, len(a)):
                if a[i][0]:
                    f = a[i][0] // p
                    a[i] = [x - f * y for x, y in zip(a[i], a[0])]
            for j in range(1, len(a[0])):
                if a[0][j]:
                    f = a[0][j] // p
                    for row in a:
                        row[j] -= f * row[0]
            left = [(abs(a[i][0]), i, 0) for i in range(1, len(a)) if a[i][0]]
            left += [(abs(a[0][j]), 0, j) for j in range(1, len(a[0])) if a[0][j]]
            if not left:
                break
            # a remainder smaller than the pivot survived; pivot on it
            _, i, j = min(left)
            _swap(a, i, j)
        diag.append(abs(a[0][0]))
        a = [row[1:] for row in a[1:]]
    return diag


def _swap(a: list[list[int]], i: int, j: int) -> None:
    a[0], a[i] = a[i], a[0]
    for row in a:
        row[0], row[j] = row[j], row[0]


def _normalize(diag: Iterable[int]) -> tuple[int, ...]:
    """Turn a diagonal into a divisibility chain with the same cokernel."""
    d = sorted(x for x in diag if x)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return tuple(d)


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = ["Z" if self.rank == 1 else f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class BigradedHomology:
    groups: Mapping[tuple[HalfInt, int], HomologyGroup] = field(default_factory=dict)

    def __getitem__(self, bigrade) -> HomologyGroup:
        p, q = bigrade
        return self.groups.get((HalfInt.of(p), q), HomologyGroup(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigradedHomology):
            return NotImplemented
        return dict(self.groups) == dict(other.groups)

    def __hash__(self) -> int:
        return hash(frozenset(self.groups.items()))

    def euler_characteristic(self) -> LaurentPoly:
        out = {}
        for (p, q), g in self.groups.items():
            out.setdefault(q, []).append(phase(p) * g.rank)
        return LaurentPoly((q, sum(cs[1:], cs[0])) for q, cs in out.items())

    def to_json(self) -> list[dict]:
        rows = [
            {"p2": p.twice, "q": q, "rank": g.rank, "torsion": list(g.torsion)}
            for (p, q), g in self.groups.items()
        ]
        return sorted(rows, key=lambda r: (r["q"], r["p2"]))


def homology(d: TangleDiagram | KhovanovComplex) -> BigradedHomology:
    cx = d if isinstance(d, KhovanovComplex) else KhovanovComplex(d)
    if not cx.dsquare_ok():
        raise NotAComplex(f"differential does not square to zero on\n{cx.diagram}")
    snf = {bg: smith_normal_form(cx.matrix(*bg)) for bg in cx.groups}
    out = {}
    for (p, q), group in cx.groups.items():
        out_rank = snf[(p, q)].rank
        incoming = snf.get((p + 1, q))
        in_rank = incoming.rank if incoming else 0
        torsion = incoming.torsion if incoming else ()
        free = group.rank - out_rank - in_rank
        if free or torsion:
            out[(p, q)] = HomologyGroup(free, torsion)
    return BigradedHomology(out)


def compare_homology(d1: TangleDiagram, d2: TangleDiagram) -> bool:
    return homology(d1) == homology(d2)
