"""Classical knot invariants from the Seifert pairing.

The Alexander polynomial is det(V - T*V^t) normalized by a unit +-T^k to be
symmetric under T -> T^(-1) with value +1 at T = 1.  Torsion coefficients
are t_i = sum_{j>=1} j*a_(|i|+j) over the symmetrized coefficients a_k, the
signature is the signature of V + V^t, and the surgery bound
delta(m, i) = max(0, ceil((|m| - 2|i|)/4)) caps torsion coefficients of
alternating knots.  The Casson invariant of the 1/q surgery homology sphere
is q times the full torsion sum t_0 + 2*sum_{i>0} t_i.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .algebra import LaurentPoly, NotUnimodular, det_laurent, symmetric_signature
from .diagram import (
    InternalError,
    PlanarDiagram,
    SeifertData,
    is_alternating,
    seifert_matrix,
)


class GenusInconsistent(ValueError):
    def __init__(self, genus, reason):
        self.genus = genus
        self.reason = reason
        super().__init__(genus, reason)

    def __str__(self):
        return "genus %d rejected: %s" % (self.genus, self.reason)


@dataclass(frozen=True)
class AlexanderPolynomial:
    poly: LaurentPoly
    degree: int  # maximal exponent; 0 for the constant polynomial 1

    def coefficient(self, i: int) -> int:
        return self.poly.coeff(i)

    def __str__(self):
        return str(self.poly)


@dataclass(frozen=True)
class TorsionProfile:
    """Torsion coefficients t_i stored for 0 <= i < alexander_degree."""

    values: dict
    alexander_degree: int

    def t(self, i: int) -> int:
        return self.values.get(abs(i), 0)

    def total(self) -> int:
        # sum over all integers i, using t_(-i) = t_i
        return self.t(0) + 2 * sum(v for k, v in self.values.items() if k > 0)

    def nonzero(self):
        return {i: v for i, v in sorted(self.values.items()) if v != 0}


class SignClass(enum.Enum):
    ALL_ZERO = "AllZero"
    NON_NEGATIVE = "NonNegative"
    NON_POSITIVE = "NonPositive"
    MIXED = "Mixed"


@dataclass(frozen=True)
class SignCoherence:
    cls: SignClass
    positive_witness: Optional[int]  # index i with t_i > 0, if any
    negative_witness: Optional[int]


class GenusProvenance(enum.Enum):
    COMPUTED_ALTERNATING = "computed-alternating"
    USER_SUPPLIED = "user-supplied"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class KnotInvariants:
    name: Optional[str]
    alexander: AlexanderPolynomial
    signature: int
    torsion: TorsionProfile
    alternating: bool
    genus: Optional[int]
    genus_provenance: GenusProvenance

    def record(self) -> dict:
        """Stable machine-readable form (field names are part of the schema)."""
        coh = sign_coherence(self.torsion)
        return {
            "name": self.name,
            "alexander": str(self.alexander.poly),
            "coefficients": [
                [e, self.alexander.poly.coeff(e)]
                for e in range(-self.alexander.degree, self.alexander.degree + 1)
            ],
            "degree": self.alexander.degree,
            "signature": self.signature,
            "torsion": [[i, self.torsion.t(i)] for i in range(self.alexander.degree)],
            "coherence": coh.cls.value,
            "alternating": self.alternating,
            "genus": self.genus,
            "genus_provenance": self.genus_provenance.value,
        }


def alexander(sd: SeifertData) -> AlexanderPolynomial:
    """Symmetrized, normalized Alexander polynomial of a Seifert pairing."""
    V = sd.matrix
    b = V.n
    if b == 0:
        return AlexanderPolynomial(LaurentPoly.one(), 0)

    const = LaurentPoly.term
    skew = [
        [const(V.rows[i][j] - V.rows[j][i], 0) for j in range(b)] for i in range(b)
    ]
    pairing_det = det_laurent(skew).coeff(0)
    if pairing_det not in (1, -1):
        raise NotUnimodular(pairing_det)

    t = LaurentPoly.term(1, 1)
    m = [
        [const(V.rows[i][j], 0) - t * const(V.rows[j][i], 0) for j in range(b)]
        for i in range(b)
    ]
    p = det_laurent(m)
    if p.is_zero():
        raise InternalError("det(V - T V^t) vanished on a unimodular pairing")
    lo, hi = p.min_exp(), p.max_exp()
    if (lo + hi) % 2:
        raise InternalError("Alexander determinant has odd exponent span")
    q = p.shift(-(lo + hi) // 2)
    if q.mirror() != q:
        raise InternalError("centered Alexander determinant is not symmetric")
    at_one = q.evaluate(1)
    if at_one == -1:
        q = -q
    elif at_one != 1:
        raise InternalError("Alexander polynomial evaluates to %s at 1" % at_one)
    return AlexanderPolynomial(q, q.max_exp())


def torsion_profile(a: AlexanderPolynomial) -> TorsionProfile:
    deg = a.degree
    values = {}
    for i in range(deg):
        values[i] = sum(j * a.poly.coeff(i + j) for j in range(1, deg - i + 1))
    return TorsionProfile(values, deg)


def sign_coherence(t: TorsionProfile) -> SignCoherence:
    pos = neg = None
    for i in sorted(t.values):
        v = t.values[i]
        if v > 0 and pos is None:
            pos = i
        if v < 0 and neg is None:
            neg = i
    if pos is None and neg is None:
        cls = SignClass.ALL_ZERO
    elif neg is None:
        cls = SignClass.NON_NEGATIVE
    elif pos is None:
        cls = SignClass.NON_POSITIVE
    else:
        cls = SignClass.MIXED
    return SignCoherence(cls, pos, neg)


def torsion_bound(m: int, i: int) -> int:
    """max(0, ceil((|m| - 2|i|)/4)): the alternating-knot torsion cap."""
    num = abs(m) - 2 * abs(i)
    if num <= 0:
        return 0
    return -((-num) // 4)


def casson_surgery(q: int, t: TorsionProfile) -> int:
    """Casson invariant of the homology sphere from 1/q surgery."""
    if q == 0:
        raise ValueError("q = 0 is not a surgery coefficient here")
    return q * t.total()


def signature_of(sd: SeifertData) -> int:
    if sd.matrix.n == 0:
        return 0
    sig = symmetric_signature(sd.matrix.add(sd.matrix.transpose()))
    if sig % 2:
        raise InternalError("knot signature came out odd: %d" % sig)
    return sig


def assemble(
    name: Optional[str],
    d: PlanarDiagram,
    user_genus: Optional[int] = None,
) -> KnotInvariants:
    """Full invariant pipeline for one diagram.

    Genus policy: alternating diagrams get genus = deg(Alexander); otherwise
    the genus is the caller's claim (checked against |sigma| <= 2g and
    g >= deg) or left unknown.
    """
    sd = seifert_matrix(d)
    a = alexander(sd)
    sig = signature_of(sd)
    alt = is_alternating(d)
    t = torsion_profile(a)

    if alt:
        genus = a.degree
        prov = GenusProvenance.COMPUTED_ALTERNATING
        if abs(sig) > 2 * genus:
            raise InternalError(
                "alternating genus %d cannot carry signature %d" % (genus, sig)
            )
        if user_genus is not None and user_genus != genus:
            raise GenusInconsistent(
                user_genus,
                "alternating knot has genus %d (degree of the Alexander polynomial)"
                % genus,
            )
    elif user_genus is not None:
        if user_genus < 0:
            raise GenusInconsistent(user_genus, "genus is non-negative")
        if user_genus < a.degree:
            raise GenusInconsistent(
                user_genus,
                "genus is at least deg(Alexander) = %d" % a.degree,
            )
        if abs(sig) > 2 * user_genus:
            raise GenusInconsistent(
                user_genus, "|signature| = %d exceeds 2*genus" % abs(sig)
            )
        genus, prov = user_genus, GenusProvenance.USER_SUPPLIED
    else:
        genus, prov = None, GenusProvenance.UNKNOWN

    return KnotInvariants(
        name=name,
        alexander=a,
        signature=sig,
        torsion=t,
        alternating=alt,
        genus=genus,
        genus_provenance=prov,
    )
