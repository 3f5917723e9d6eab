"""Kauffman bracket as a contraction of R-matrix weights over the tile rows.

Every edge carries an index in {0, 1}: 1 means the strand runs upward through
the edge and 0 downward.  Crossing matrices are indexed ``[2*i + j][2*k + l]``
with ``(i, j)`` the bottom ports and ``(k, l)`` the top ports; caps read their
two bottom indices and cups their two top indices.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .chain_complex import ClosedOnly
from .diagram import TangleDiagram, Tile
from .ring import ONE, ZERO, GaussianInt, LaurentPoly, phase
from .states import enhanced_states

__all__ = [
    "Matrix4",
    "WeightTable",
    "WEIGHTS",
    "weight",
    "transfer",
    "bracket_tensor",
    "bracket_tensor_marked",
    "marked_weights",
    "check_matrix_identities",
    "matrix_identity_report",
    "matmul",
    "open_tangle_report",
]

Matrix4 = tuple[tuple[LaurentPoly, ...], ...]


def _p(terms: dict[int, int]) -> LaurentPoly:
    return LaurentPoly(terms)


def _mat(rows) -> Matrix4:
    return tuple(tuple(x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x) for x in r) for r in rows)


_a = _p({1: 1})
_ainv = _p({-1: 1})

R = _mat([
    [_a, 0, 0, 0],
    [0, 0, _ainv, 0],
    [0, _ainv, _p({1: 1, -3: -1}), 0],
    [0, 0, 0, _a],
])
RINV = _mat([
    [_ainv, 0, 0, 0],
    [0, _p({-1: 1, 3: -1}), _a, 0],
    [0, _a, 0, 0],
    [0, 0, 0, _ainv],
])
CAP_WEIGHTS = (ZERO, _a, -_ainv, ZERO)  # n_ij
CUP_WEIGHTS = (ZERO, -_a, _ainv, ZERO)  # u_kl

IDENTITY = _mat([[1 if r == c else 0 for c in range(4)] for r in range(4)])

# turn-back part shared by R and R^-1: R = A I + A^-1 M, R^-1 = A^-1 I + A M
TURNBACK = _mat([
    [0, 0, 0, 0],
    [0, _p({2: -1}), 1, 0],
    [0, 1, _p({-2: -1}), 0],
    [0, 0, 0, 0],
])
# diagonal part of TURNBACK only; A^-1 I + A * this misses two entries of R^-1
TURNBACK_DIAGONAL = _mat([
    [0, 0, 0, 0],
    [0, _p({2: -1}), 0, 0],
    [0, 0, _p({-2: -1}), 0],
    [0, 0, 0, 0],
])
# negative-marker part of R and positive-marker part of R^-1, entry by entry
R_MARKED = {(1, 1): _p({1: -1}), (2, 2): _p({-3: -1}), (2, 1): _ainv, (1, 2): _ainv}
RINV_MARKED = {(1, 1): _p({3: -1}), (2, 2): _p({-1: -1}), (2, 1): _a, (1, 2): _a}


@dataclass(frozen=True)
class WeightTable:
    R: Matrix4 = R
    Rinv: Matrix4 = RINV
    n: tuple[LaurentPoly, ...] = CAP_WEIGHTS
    u: tuple[LaurentPoly, ...] = CUP_WEIGHTS


WEIGHTS = WeightTable()

_PARTS = {
    "E1": Tile.CROSS_A,
    "E2": Tile.CROSS_B,
    "E3": Tile.CAP,
    "E4": Tile.CUP,
}


def weight(part: Tile | str, *indices: int, table: WeightTable = WEIGHTS) -> LaurentPoly:
    """Weight of an elementary part under an index assignment.

    ``part`` is a tile or one of ``"E1"`` .. ``"E4"``; crossings take
    ``(i, j, k, l)`` and caps/cups ``(i, j)``.
    """
    kind = _PARTS.get(part, part) if isinstance(part, str) else part
    if isinstance(kind, str):
        kind = Tile(kind)
    if kind.is_crossing:
        if len(indices) != 4:
            raise ValueError("crossings take four indices")
        i, j, k, l = indices
        m = table.R if kind is Tile.CROSS_A else table.Rinv
        return m[2 * i + j][2 * k + l]
    if kind is Tile.ID:
        (i, k) = indices
        return ONE if i == k else ZERO
    if len(indices) != 2:
        raise ValueError("caps and cups take two indices")
    i, j = indices
    vec = table.n if kind is Tile.CAP else table.u
    return vec[2 * i + j]


def _tile_options(kind: Tile, ins: tuple[int, ...], mat: Matrix4 | None, table: WeightTable):
    """(output indices, weight) pairs for one tile given its input indices."""
    if kind is Tile.ID:
        return [(ins, ONE)]
    if kind is Tile.CAP:
        w = table.n[2 * ins[0] + ins[1]]
        return [((), w)] if w else []
    if kind is Tile.CUP:
        return [((k, l), table.u[2 * k + l]) for k in (0, 1) for l in (0, 1) if table.u[2 * k + l]]
    row = mat[2 * ins[0] + ins[1]]
    return [((k, l), row[2 * k + l]) for k in (0, 1) for l in (0, 1) if row[2 * k + l]]


def transfer(
    d: TangleDiagram,
    crossing_matrices: Sequence[Matrix4] | None = None,
    table: WeightTable = WEIGHTS,
) -> dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPoly]:
    """Operator of ``d`` as a map ``(bottom word, top word) -> weight``.

    Rows are folded bottom to top while keeping only the index word of the
    current cut.  ``crossing_matrices`` overrides the matrix of each crossing.
    """
    vec: dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPoly] = {
        (w, w): ONE for w in itertools.product((0, 1), repeat=d.bottom_arity)
    }
    c = 0
    for row in d.rows:
        mats = []
        for t in row:
            if t.is_crossing:
                if crossing_matrices is not None:
                    mats.append(crossing_matrices[c])
                else:
                    mats.append(table.R if t is Tile.CROSS_A else table.Rinv)
                c += 1
            else:
                mats.append(None)
        new: dict = defaultdict(lambda: ZERO)
        for (bottom, word), coef in vec.items():
            pos = 0
            per_tile = []
            for t, m in zip(row, mats):
                nin = t.arity[0]
                per_tile.append(_tile_options(t, word[pos : pos + nin], m, table))
                pos += nin
            for combo in itertools.product(*per_tile):
                w = coef
                out: tuple[int, ...] = ()
                for outs, wt in combo:
                    w = w * wt
                    out += outs
                new[(bottom, out)] = new[(bottom, out)] + w
        vec = {k: v for k, v in new.items() if v}
    return vec


def bracket_tensor(d: TangleDiagram, table: WeightTable = WEIGHTS) -> LaurentPoly:
    if not d.is_closed:
        raise ClosedOnly("the tensor bracket is asserted for closed diagrams only")
    return transfer(d, table=table).get(((), ()), ZERO)


def _sub(m: Matrix4, n: Matrix4) -> Matrix4:
    return tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(m, n))


def _scale(m: Matrix4, c: LaurentPoly) -> Matrix4:
    return tuple(tuple(c * a for a in r) for r in m)


def _add(m: Matrix4, n: Matrix4) -> Matrix4:
    return tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(m, n))


def matmul(m: Matrix4, n: Matrix4) -> Matrix4:
    return tuple(
        tuple(sum((m[i][k] * n[k][j] for k in range(4)), ZERO) for j in range(4))
        for i in range(4)
    )


def marked_weights(kind: Tile, marker: int, table: WeightTable = WEIGHTS) -> Matrix4:
    """Crossing matrix restricted to one marker.

    ``xa``: ``+`` gives ``A I`` and ``-`` gives ``R - A I``.
    ``xb``: ``+`` gives ``R^-1 - A^-1 I`` and ``-`` gives ``A^-1 I``.
    """
    if kind is Tile.CROSS_A:
        diag = _scale(IDENTITY, _a)
        return diag if marker > 0 else _sub(table.R, diag)
    if kind is Tile.CROSS_B:
        diag = _scale(IDENTITY, _ainv)
        return _sub(table.Rinv, diag) if marker > 0 else diag
    raise ValueError(f"{kind} is not a crossing")


def bracket_tensor_marked(d: TangleDiagram, table: WeightTable = WEIGHTS) -> LaurentPoly:
    """Sum over marker assignments of the marker-split contractions."""
    if not d.is_closed:
        raise ClosedOnly("the tensor bracket is asserted for closed diagrams only")
    kinds = [p.kind for p in d.crossings]
    total = ZERO
    for markers in itertools.product((1, -1), repeat=len(kinds)):
        mats = [marked_weights(k, m, table) for k, m in zip(kinds, markers)]
        total = total + transfer(d, mats, table).get(((), ()), ZERO)
    return total


def _from_entries(entries: dict[tuple[int, int], LaurentPoly]) -> Matrix4:
    return tuple(tuple(entries.get((r, c), ZERO) for c in range(4)) for r in range(4))


def matrix_identity_report(table: WeightTable = WEIGHTS) -> dict[str, bool]:
    a, ainv = _a, _ainv
    return {
        "R * Rinv = I": matmul(table.R, table.Rinv) == IDENTITY,
        "Rinv * R = I": matmul(table.Rinv, table.R) == IDENTITY,
        "R = A I + A^-1 M": _add(_scale(IDENTITY, a), _scale(TURNBACK, ainv)) == table.R,
        "Rinv = A^-1 I + A N": _add(_scale(IDENTITY, ainv), _scale(TURNBACK, a)) == table.Rinv,
        "R = A I + marked part": _add(_scale(IDENTITY, a), _from_entries(R_MARKED)) == table.R,
        "Rinv = A^-1 I + marked part": _add(_scale(IDENTITY, ainv), _from_entries(RINV_MARKED))
        == table.Rinv,
        "M = n (x) u": _outer(table.n, table.u) == TURNBACK,
    }


def _outer(n, u) -> Matrix4:
    return tuple(tuple(n[r] * u[c] for c in range(4)) for r in range(4))


def check_matrix_identities(table: WeightTable = WEIGHTS) -> bool:
    return all(matrix_identity_report(table).values())


_UNITS = (GaussianInt(1), GaussianInt(-1), GaussianInt(0, 1), GaussianInt(0, -1))


def _unit_ratio(num: LaurentPoly, den: LaurentPoly) -> tuple[GaussianInt, int] | None:
    """``(c, k)`` with ``num == c * A**k * den`` and ``c`` a unit, if any."""
    if not num or not den:
        return None
    k = num.items()[0][0] - den.items()[0][0]
    for c in _UNITS:
        if den.scale(c).shift(k) == num:
            return c, k
    return None


def open_tangle_report(d: TangleDiagram) -> list[dict]:
    """Compare tensor entries with boundary-resolved state sums.

    For each assignment of directions to the boundary edges, the state sum is
    restricted to enhanced states with those endpoint directions.  Nothing is
    asserted; the per-endpoint unit ratio is reported where one exists.
    """
    ops = transfer(d)
    sums: dict = defaultdict(lambda: ZERO)
    for s in enhanced_states(d):
        dirs = s.directions
        bottom = tuple(1 if dirs[e] > 0 else 0 for e in d.bottom_edges)
        top = tuple(1 if dirs[e] > 0 else 0 for e in d.top_edges)
        term = LaurentPoly.monomial(s.q, phase(s.tau))
        sums[(bottom, top)] = sums[(bottom, top)] + term
    rows = []
    for key in sorted(set(ops) | {k for k, v in sums.items() if v}):
        t = ops.get(key, ZERO)
        s = sums.get(key, ZERO)
        ratio = _unit_ratio(s, t)
        rows.append({
            "bottom": key[0],
            "top": key[1],
            "tensor": t,
            "statesum": s,
            "ratio": None if ratio is None else (str(ratio[0]), ratio[1]),
        })
    return rows
