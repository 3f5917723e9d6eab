"""Sliced tile representation of unoriented framed tangle diagrams.

A diagram is a stack of rows read bottom to top.  Each row is a left-to-right
sequence of tiles from the alphabet ``id``, ``xa``, ``xb``, ``cap``, ``cup``.
Framing is the blackboard framing of the picture.

Edges are the strand segments crossing the horizontal cut between two rows
(plus the bottom and top boundary).  They are numbered level by level from
the bottom, left to right within a level, so edge ids are stable under
re-parsing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Tile",
    "Placement",
    "TangleDiagram",
    "DiagramError",
    "ArityMismatch",
    "UnknownToken",
    "EmptyDiagram",
    "StrandOutOfRange",
    "parse_diagram",
    "render_diagram",
    "validate",
    "insert_kink",
    "compose",
    "juxtapose",
    "mirror",
    "identity",
]


class DiagramError(ValueError):
    """Base class for malformed diagram input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ArityMismatch(DiagramError):
    def __init__(self, message: str, row: int | None = None, line: int | None = None):
        self.row = row
        super().__init__(message, line)


class UnknownToken(DiagramError):
    pass


class EmptyDiagram(DiagramError):
    pass


class StrandOutOfRange(DiagramError, IndexError):
    pass


class Tile(enum.Enum):
    ID = "id"
    CROSS_A = "xa"
    CROSS_B = "xb"
    CAP = "cap"
    CUP = "cup"

    @property
    def arity(self) -> tuple[int, int]:
        """(inputs, outputs), reading bottom to top."""
        return _ARITY[self]

    @property
    def is_crossing(self) -> bool:
        return self in (Tile.CROSS_A, Tile.CROSS_B)


_ARITY = {
    Tile.ID: (1, 1),
    Tile.CROSS_A: (2, 2),
    Tile.CROSS_B: (2, 2),
    Tile.CAP: (2, 0),
    Tile.CUP: (0, 2),
}


@dataclass(frozen=True)
class Placement:
    """A tile placed in the diagram together with the edges on its ports."""

    row: int
    kind: Tile
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]


@dataclass(frozen=True)
class TangleDiagram:
    rows: tuple[tuple[Tile, ...], ...]
    # rows carry no source line numbers once constructed
    _lines: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        validate(self)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Tile | str]]) -> TangleDiagram:
        return cls(tuple(tuple(Tile(t) if isinstance(t, str) else t for t in r) for r in rows))

    @property
    def bottom_arity(self) -> int:
        return sum(t.arity[0] for t in self.rows[0])

    @property
    def top_arity(self) -> int:
        return sum(t.arity[1] for t in self.rows[-1])

    @property
    def is_closed(self) -> bool:
        return self.bottom_arity == 0 and self.top_arity == 0

    @cached_property
    def widths(self) -> tuple[int, ...]:
        """Number of edges at each level 0..len(rows)."""
        return (self.bottom_arity,) + tuple(sum(t.arity[1] for t in r) for r in self.rows)

    @cached_property
    def _level_offsets(self) -> tuple[int, ...]:
        offs = [0]
        for w in self.widths:
            offs.append(offs[-1] + w)
        return tuple(offs)

    @property
    def n_edges(self) -> int:
        return self._level_offsets[-1]

    def edge_id(self, level: int, position: int) -> int:
        return self._level_offsets[level] + position

    @cached_property
    def placements(self) -> tuple[Placement, ...]:
        out = []
        for r, row in enumerate(self.rows):
            i = o = 0
            for tile in row:
                nin, nout = tile.arity
                ins = tuple(self.edge_id(r, i + k) for k in range(nin))
                outs = tuple(self.edge_id(r + 1, o + k) for k in range(nout))
                out.append(Placement(r, tile, ins, outs))
                i += nin
                o += nout
        return tuple(out)

    @cached_property
    def crossings(self) -> tuple[Placement, ...]:
        """Crossing tiles in row-major order; the index is the crossing id."""
        return tuple(p for p in self.placements if p.kind.is_crossing)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def bottom_edges(self) -> tuple[int, ...]:
        return tuple(range(self.widths[0]))

    @cached_property
    def top_edges(self) -> tuple[int, ...]:
        lvl = len(self.rows)
        return tuple(self.edge_id(lvl, k) for k in range(self.widths[-1]))

    @cached_property
    def boundary_edges(self) -> frozenset[int]:
        return frozenset(self.bottom_edges) | frozenset(self.top_edges)

    def __str__(self) -> str:
        return render_diagram(self)


def validate(d: TangleDiagram) -> None:
    """Raise :class:`ArityMismatch` or :class:`EmptyDiagram` if ``d`` is malformed."""
    if not d.rows:
        raise EmptyDiagram("diagram has no rows")
    lines = d._lines
    prev_out = None
    for k, row in enumerate(d.rows):
        line = lines[k] if lines else None
        if not row:
            raise ArityMismatch(f"row {k} is empty", row=k, line=line)
        nin = sum(t.arity[0] for t in row)
        if prev_out is not None and nin != prev_out:
            raise ArityMismatch(
                f"row {k} takes {nin} strands but row {k - 1} produces {prev_out}",
                row=k,
                line=line,
            )
        prev_out = sum(t.arity[1] for t in row)


def parse_diagram(text: str) -> TangleDiagram:
    """Parse the ``.tang`` text format (one row per line, bottom row first)."""
    rows = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        row = []
        for tok in body:
            try:
                row.append(Tile(tok.lower()))
            except ValueError:
                raise UnknownToken(f"unknown token {tok!r}", line=lineno) from None
        rows.append(tuple(row))
        lines.append(lineno)
    if not rows:
        raise EmptyDiagram("diagram has no rows")
    return TangleDiagram(tuple(rows), tuple(lines))


def render_diagram(d: TangleDiagram) -> str:
    return "\n".join(" ".join(t.value for t in row) for row in d.rows) + "\n"


def identity(n: int) -> TangleDiagram:
    """The trivial tangle on ``n >= 1`` vertical strands."""
    if n < 1:
        raise EmptyDiagram("identity tangle needs at least one strand")
    return TangleDiagram(((Tile.ID,) * n,))


def compose(lower: TangleDiagram, upper: TangleDiagram) -> TangleDiagram:
    """Stack ``upper`` on top of ``lower``."""
    if lower.top_arity != upper.bottom_arity:
        raise ArityMismatch(
            f"cannot stack: {lower.top_arity} strands into {upper.bottom_arity}"
        )
    return TangleDiagram(lower.rows + upper.rows)


def juxtapose(left: TangleDiagram, right: TangleDiagram) -> TangleDiagram:
    """Disjoint union, ``left`` placed to the left of ``right``.

    The rows of ``left`` run first (with ``right``'s bottom strands carried
    along as identities), then the rows of ``right``.
    """
    pad_r = (Tile.ID,) * right.bottom_arity
    pad_l = (Tile.ID,) * left.top_arity
    rows = [r + pad_r for r in left.rows] + [pad_l + r for r in right.rows]
    return TangleDiagram(tuple(rows))


def mirror(d: TangleDiagram) -> TangleDiagram:
    """Swap every ``xa`` with ``xb``."""
    swap = {Tile.CROSS_A: Tile.CROSS_B, Tile.CROSS_B: Tile.CROSS_A}
    return TangleDiagram(tuple(tuple(swap.get(t, t) for t in r) for r in d.rows))


def insert_kink(d: TangleDiagram, strand: int, sign: int | str) -> TangleDiagram:
    """Append a curl on top-strand ``strand``.

    ``sign`` is ``+1``/``"+"`` for a curl built on ``xa`` or ``-1``/``"-"``
    for one built on ``xb``.
    """
    w = d.top_arity
    if not 0 <= strand < w:
        raise StrandOutOfRange(f"strand {strand} out of range for top arity {w}")
    cross = Tile.CROSS_A if _sign(sign) > 0 else Tile.CROSS_B
    ID = Tile.ID
    rows = (
        (ID,) * (strand + 1) + (Tile.CUP,) + (ID,) * (w - strand - 1),
        (ID,) * strand + (cross,) + (ID,) * (w - strand),
        (ID,) * (strand + 1) + (Tile.CAP,) + (ID,) * (w - strand - 1),
    )
    return TangleDiagram(d.rows + rows)


def _sign(sign: int | str) -> int:
    if sign in (1, "+", "+1"):
        return 1
    if sign in (-1, "-", "-1"):
        return -1
    raise ValueError(f"kink sign must be + or -, got {sign!r}")


def crossing_ranks(d: TangleDiagram, order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Rank of each crossing id in a total order (default: row-major)."""
    n = d.n_crossings
    if order is None:
        return tuple(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the crossing ids")
    ranks = [0] * n
    for r, c in enumerate(order):
        ranks[c] = r
    return tuple(ranks)
