"""Knot invariants and Seifert fibered surgery obstructions.

Pipeline: parse a presentation (DT, Gauss, PD, braid) into a planar diagram,
extract the Seifert pairing, compute the Alexander polynomial, signature and
torsion coefficients, then run the surgery obstruction rules.  A bundled
census of prime knots through 10 crossings supports batch scans, and a
plumbing-tree classifier covers the intersection-form side.
"""

__version__ = "1.0.0"

from .algebra import LaurentPoly, IntMatrix, NotUnimodular, SingularForm
from .codec import (
    BraidWord,
    DtCode,
    DuplicateLabel,
    GaussCode,
    MalformedText,
    NotAKnot,
    OddLabel,
    PdNotation,
    RangeGap,
    Unrealizable,
    all_dt_codes,
    braid_to_diagram,
    dt_of_diagram,
    gauss_to_diagram,
    parse_braid,
    parse_dt,
    parse_gauss,
    parse_pd,
    pd_to_diagram,
    realize_dt,
    to_diagram,
)
from .diagram import (
    Crossing,
    InternalError,
    PlanarDiagram,
    SeifertData,
    is_alternating,
    seifert_circles,
    seifert_circle_count,
    seifert_matrix,
    writhe,
)

__all__ = [
    "LaurentPoly",
    "IntMatrix",
    "NotUnimodular",
    "SingularForm",
    "BraidWord",
    "DtCode",
    "GaussCode",
    "PdNotation",
    "DuplicateLabel",
    "MalformedText",
    "NotAKnot",
    "OddLabel",
    "RangeGap",
    "Unrealizable",
    "parse_dt",
    "parse_gauss",
    "parse_pd",
    "parse_braid",
    "realize_dt",
    "gauss_to_diagram",
    "pd_to_diagram",
    "braid_to_diagram",
    "to_diagram",
    "dt_of_diagram",
    "all_dt_codes",
    "Crossing",
    "PlanarDiagram",
    "SeifertData",
    "InternalError",
    "is_alternating",
    "seifert_circles",
    "seifert_circle_count",
    "seifert_matrix",
    "writhe",
]
