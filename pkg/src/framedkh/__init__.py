"""Framed Khovanov homology of the Kauffman bracket for framed tangles.

Diagrams are read from the ``.tang`` tile format (see :mod:`framedkh.diagram`).
The bracket can be evaluated from enhanced states, from chain-group ranks,
from homology ranks and by R-matrix contraction; all routes agree exactly.
"""

from .chain_complex import KhovanovComplex, boundary_link, boundary_tangle, verify_dsquare
from .diagram import (
    TangleDiagram,
    Tile,
    compose,
    insert_kink,
    juxtapose,
    mirror,
    parse_diagram,
    render_diagram,
)
from .homology import BigradedHomology, compare_homology, homology, smith_normal_form
from .ring import DELTA, GaussianInt, HalfInt, LaurentPoly, parse_poly, phase
from .rmatrix import bracket_tensor, bracket_tensor_marked, check_matrix_identities
from .statesum import bracket_circles, bracket_state_sum, bracket_via_ranks, kink_factor_check
from .verify import bracket, load_corpus

__version__ = "0.1.0"

__all__ = [
    "KhovanovComplex",
    "boundary_link",
    "boundary_tangle",
    "verify_dsquare",
    "TangleDiagram",
    "Tile",
    "compose",
    "insert_kink",
    "juxtapose",
    "mirror",
    "parse_diagram",
    "render_diagram",
    "BigradedHomology",
    "compare_homology",
    "homology",
    "smith_normal_form",
    "DELTA",
    "GaussianInt",
    "HalfInt",
    "LaurentPoly",
    "parse_poly",
    "phase",
    "bracket_tensor",
    "bracket_tensor_marked",
    "check_matrix_identities",
    "bracket_circles",
    "bracket_state_sum",
    "bracket_via_ranks",
    "kink_factor_check",
    "bracket",
    "load_corpus",
]
