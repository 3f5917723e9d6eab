"""Exact Laurent polynomials in ``A`` with Gaussian-integer coefficients.

Half-integral gradings appear as soon as a tangle has open arcs, and the
sign ``(-1)**tau`` then takes the values ``+-i``.  Everything here is exact:
coefficients are pairs of Python ints and half-integers are stored doubled.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Mapping, Union

__all__ = [
    "GaussianInt",
    "HalfInt",
    "LaurentPoly",
    "A",
    "ONE",
    "ZERO",
    "I",
    "DELTA",
    "phase",
    "poly_add",
    "poly_mul",
    "parse_poly",
]


@dataclass(frozen=True, slots=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    def __add__(self, other: GaussianInt | int) -> GaussianInt:
        other = _gauss(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other: GaussianInt | int) -> GaussianInt:
        return self + (-_gauss(other))

    def __rsub__(self, other: GaussianInt | int) -> GaussianInt:
        return _gauss(other) - self

    def __mul__(self, other: GaussianInt | int) -> GaussianInt:
        other = _gauss(other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def is_unit(self) -> bool:
        return abs(self.re) + abs(self.im) == 1

    def __str__(self) -> str:
        return _render_coeff(self)

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"


def _gauss(x: GaussianInt | int) -> GaussianInt:
    if isinstance(x, GaussianInt):
        return x
    if isinstance(x, int):
        return GaussianInt(x, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianInt")


@total_ordering
@dataclass(frozen=True, slots=True)
class HalfInt:
    """A half-integer stored as ``twice / 2``."""

    twice: int

    @classmethod
    def of(cls, value: int | HalfInt) -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        return cls(2 * value)

    @property
    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other: HalfInt | int) -> HalfInt:
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: HalfInt | int) -> HalfInt:
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: HalfInt | int) -> HalfInt:
        return HalfInt.of(other) - self

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice)

    def __lt__(self, other: HalfInt | int) -> bool:
        return self.twice < HalfInt.of(other).twice

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.twice == 2 * other
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.twice)

    def __int__(self) -> int:
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __str__(self) -> str:
        if self.is_integral:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


_PHASES = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))


def phase(t: HalfInt | int) -> GaussianInt:
    """Return ``(-1)**t`` using the branch ``(-1)**(1/2) = i``."""
    return _PHASES[HalfInt.of(t).twice % 4]


Coeff = Union[GaussianInt, int]


class LaurentPoly:
    """Immutable Laurent polynomial ``sum c_e A**e`` in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | Iterable[tuple[int, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, GaussianInt] = {}
        for exp, c in items:
            c = _gauss(c)
            if not isinstance(exp, int):
                raise TypeError("exponents must be integers")
            acc[exp] = acc.get(exp, GaussianInt()) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coeff: Coeff = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def constant(cls, coeff: Coeff) -> LaurentPoly:
        return cls({0: coeff})

    @property
    def terms(self) -> dict[int, GaussianInt]:
        return dict(self._terms)

    def items(self):
        """Terms in descending exponent order."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exp: int) -> GaussianInt:
        return self._terms.get(exp, GaussianInt())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: LaurentPoly | Coeff) -> LaurentPoly:
        other = _poly(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, GaussianInt()) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | Coeff) -> LaurentPoly:
        return self + (-_poly(other))

    def __rsub__(self, other: LaurentPoly | Coeff) -> LaurentPoly:
        return _poly(other) - self

    def __mul__(self, other: LaurentPoly | Coeff) -> LaurentPoly:
        other = _poly(other)
        out: dict[int, GaussianInt] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, GaussianInt()) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                # units i and -i invert to their conjugates
                if not c.is_unit():
                    raise ValueError("coefficient is not a unit")
                c = c.conjugate()
            return LaurentPoly({-e: c}) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``A**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def scale(self, c: Coeff) -> LaurentPoly:
        c = _gauss(c)
        return LaurentPoly({e: c * v for e, v in self._terms.items()})

    def invert_variable(self) -> LaurentPoly:
        """Substitute ``A -> A**-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def conjugate(self) -> LaurentPoly:
        return LaurentPoly({e: c.conjugate() for e, c in self._terms.items()})

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self._terms.values())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, GaussianInt)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> list[dict[str, int]]:
        return [{"exp": e, "re": c.re, "im": c.im} for e, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, int]]) -> LaurentPoly:
        return cls((d["exp"], GaussianInt(d["re"], d["im"])) for d in data)


def _poly(x: LaurentPoly | Coeff) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.constant(x)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
I = LaurentPoly.constant(GaussianInt(0, 1))
A = LaurentPoly.monomial(1)
# value of a 0-framed circle
DELTA = LaurentPoly({2: -1, -2: -1})


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


# -- text rendering -----------------------------------------------------------


def _render_coeff(c: GaussianInt) -> str:
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        return {1: "i", -1: "-i"}.get(c.im, f"{c.im}i")
    im = {1: "+i", -1: "-i"}.get(c.im, f"{c.im:+d}i")
    return f"({c.re}{im})"


def _render_term(exp: int, c: GaussianInt) -> str:
    """Render one term with its leading sign, e.g. ``-i*A^2``."""
    if exp == 0:
        return _render_coeff(c)
    var = "A" if exp == 1 else f"A^{exp}"
    if c == 1:
        return var
    if c == -1:
        return "-" + var
    return f"{_render_coeff(c)}*{var}"


def render_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in p.items():
        term = _render_term(exp, c)
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(" - " + term[1:])
        else:
            parts.append(" + " + term)
    return "".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\((?P<cre>-?\d+)(?P<cim>[+-]\d*)i\)|\d+i|\d+|i)
            (?:\s*\*\s*(?P<var1>A(?:\^(?P<e1>-?\d+))?))?
          |
            (?P<var2>A(?:\^(?P<e2>-?\d+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`render_poly`."""
    text = text.strip()
    if text == "0":
        return ZERO
    pos = 0
    terms: list[tuple[int, GaussianInt]] = []
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        if terms and not m.group("sign"):
            raise ValueError(f"missing operator before {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coeff") is not None:
            raw = m.group("coeff")
            if m.group("cre") is not None:
                cim = m.group("cim")
                im = {"+": 1, "-": -1}.get(cim, None)
                coeff = GaussianInt(int(m.group("cre")), im if im is not None else int(cim))
            elif raw == "i":
                coeff = GaussianInt(0, 1)
            elif raw.endswith("i"):
                coeff = GaussianInt(0, int(raw[:-1]))
            else:
                coeff = GaussianInt(int(raw), 0)
            var, e = m.group("var1"), m.group("e1")
        else:
            coeff = GaussianInt(1, 0)
            var, e = m.group("var2"), m.group("e2")
        exp = 0 if var is None else (int(e) if e is not None else 1)
        terms.append((exp, coeff * sign))
        pos = m.end()
    return LaurentPoly(terms)
