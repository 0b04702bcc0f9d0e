"""Obstruction rules for Seifert fibered 1/q Dehn surgeries.

Orientation bookkeeping, fixed once here and audited by the soundness tests:
the Casson invariant of the 1/q surgery homology sphere is q times the full
torsion sum, and a Seifert fibered homology sphere is called positively
oriented when its Casson invariant is positive.  Replacing the knot by its
mirror swaps q with -q and the target orientation simultaneously, so each
one-sided verdict excludes a pair of cases:

    no-positively-oriented-SF-1/q  excludes {q>0, positive} and {q<0, negative}
    no-negatively-oriented-SF-1/q  excludes {q>0, negative} and {q<0, positive}
    no-SF-1/q-surgery              excludes all four.

The sign-coherence rule maps a negative torsion coefficient to the first
verdict, a positive one to the second, and mixed signs to the third.  The
known Seifert fibered surgeries (trefoil at -1, figure-eight at +1, the
(2, odd) torus knots at +1) are regression anchors: no report may exclude
them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .algebra import LaurentPoly
from .diagram import InternalError
from .hfk import HfkTable, TopGroupParity, top_group_parity
from .invariants import (
    KnotInvariants,
    SignClass,
    TorsionProfile,
    sign_coherence,
    torsion_bound,
)


class Applicability(enum.Enum):
    APPLIED = "applied"
    HYPOTHESES_NOT_MET = "hypotheses-not-met"
    INSUFFICIENT_DATA = "insufficient-data"


class Conclusion(enum.Enum):
    NO_SF = "no-SF-1/q-surgery"
    NO_POSITIVE = "no-positively-oriented-SF-1/q"
    NO_NEGATIVE = "no-negatively-oriented-SF-1/q"
    NONE = "no-conclusion"


CITATIONS = {
    "sign-coherence": (
        "A Seifert fibered 1/q surgery forces all nonzero torsion coefficients "
        "to share one sign: a positively oriented target needs every t_i >= 0, "
        "a negatively oriented target every t_i <= 0, where the target's "
        "orientation is the sign of its Casson invariant q * sum(t_i)."
    ),
    "parity-signature": (
        "An alternating knot whose genus plus half-signature is odd and whose "
        "signature is nonzero admits no Seifert fibered 1/q surgery for any q."
    ),
    "alternating-bound": (
        "For every alternating knot and every i >= 0, the quantity "
        "(-1)^(i + sigma/2) * (t_i - delta(sigma, i)) is non-positive, with "
        "delta(m, i) = max(0, ceil((|m| - 2|i|)/4)); a failure signals a "
        "computation or convention bug, not a property of the knot."
    ),
    "degree-deficit": (
        "If the Alexander degree is strictly less than the Seifert genus, no "
        "1/q surgery with q > 0 is a positively oriented Seifert fibered "
        "space; if moreover the genus exceeds one, no 1/q surgery is Seifert "
        "fibered at all."
    ),
    "floer-parity-positive": (
        "If some 1/q surgery (q > 0) is a positively oriented Seifert fibered "
        "space, the Floer group at the top Alexander grading is trivial in "
        "odd homological degrees; odd top parity therefore excludes such "
        "surgeries."
    ),
    "floer-parity-negative": (
        "If the genus exceeds one and some 1/q surgery (q > 0) is a "
        "negatively oriented Seifert fibered space, the Floer group at the "
        "top Alexander grading is trivial in even homological degrees; even "
        "top parity therefore excludes such surgeries."
    ),
    "poincare-sphere": (
        "If a rational surgery on a knot yields the Poincare sphere (either "
        "orientation), the knot has the Alexander polynomial T - 1 + T^-1 "
        "and genus one, and the surgery coefficient is -1."
    ),
    "brieskorn-237": (
        "If a rational surgery on a knot yields the Brieskorn sphere "
        "Sigma(2,3,7) (either orientation), the knot has genus one and "
        "either the Alexander polynomial T - 1 + T^-1 with coefficient -1 or "
        "the polynomial -T + 3 - T^-1 with coefficient +1."
    ),
}


@dataclass(frozen=True)
class Verdict:
    rule_id: str
    applicability: Applicability
    conclusion: Conclusion
    citation: str
    witness: dict

    def __post_init__(self):
        if (
            self.conclusion is not Conclusion.NONE
            and self.applicability is not Applicability.APPLIED
        ):
            raise InternalError(
                "rule %s concluded %s without being applied"
                % (self.rule_id, self.conclusion.value)
            )

    def record(self) -> dict:
        return {
            "rule": self.rule_id,
            "applicability": self.applicability.value,
            "conclusion": self.conclusion.value,
            "witness": self.witness,
            "citation": self.citation,
        }


def _verdict(rule_id, applicability, conclusion, witness) -> Verdict:
    return Verdict(rule_id, applicability, conclusion, CITATIONS[rule_id], witness)


@dataclass(frozen=True)
class ObstructionReport:
    name: Optional[str]
    verdicts: tuple
    summary: Conclusion

    def record(self) -> dict:
        return {
            "name": self.name,
            "summary": self.summary.value,
            "verdicts": [v.record() for v in self.verdicts],
        }


def sign_coherence_rule(t: TorsionProfile) -> Verdict:
    coh = sign_coherence(t)
    witness = {
        "class": coh.cls.value,
        "positive_index": coh.positive_witness,
        "negative_index": coh.negative_witness,
    }
    if coh.cls is SignClass.MIXED:
        concl = Conclusion.NO_SF
    elif coh.cls is SignClass.NON_NEGATIVE:
        concl = Conclusion.NO_NEGATIVE
    elif coh.cls is SignClass.NON_POSITIVE:
        concl = Conclusion.NO_POSITIVE
    else:
        concl = Conclusion.NONE
    return _verdict("sign-coherence", Applicability.APPLIED, concl, witness)


def parity_signature_rule(inv: KnotInvariants) -> Verdict:
    rule = "parity-signature"
    if not inv.alternating:
        return _verdict(
            rule,
            Applicability.HYPOTHESES_NOT_MET,
            Conclusion.NONE,
            {"alternating": False},
        )
    if inv.genus is None:
        return _verdict(
            rule, Applicability.INSUFFICIENT_DATA, Conclusion.NONE, {"genus": None}
        )
    sig = inv.signature
    witness = {"genus": inv.genus, "signature": sig}
    if sig != 0 and (inv.genus + sig // 2) % 2 == 1:
        return _verdict(rule, Applicability.APPLIED, Conclusion.NO_SF, witness)
    return _verdict(rule, Applicability.HYPOTHESES_NOT_MET, Conclusion.NONE, witness)


def audit_alternating_bound(t: TorsionProfile, sigma: int):
    """Self-check inequality for alternating knots; returns violations.

    A nonempty result means the pipeline (not the knot) is wrong; callers
    escalate it to an internal error.
    """
    if sigma % 2:
        raise ValueError("signature must be even, got %d" % sigma)
    half = sigma // 2
    out = []
    top = max(t.alexander_degree, abs(sigma) // 2) + 1
    for i in range(top):
        value = t.t(i) - torsion_bound(sigma, i)
        signed = value if (i + half) % 2 == 0 else -value
        if signed > 0:
            out.append(
                {
                    "i": i,
                    "t_i": t.t(i),
                    "bound": torsion_bound(sigma, i),
                    "signed_excess": signed,
                }
            )
    return tuple(out)


def degree_deficit_rule(degree: int, genus: Optional[int]) -> Verdict:
    rule = "degree-deficit"
    if genus is None:
        return _verdict(
            rule, Applicability.INSUFFICIENT_DATA, Conclusion.NONE, {"genus": None}
        )
    witness = {"degree": degree, "genus": genus}
    if degree >= genus:
        return _verdict(rule, Applicability.HYPOTHESES_NOT_MET, Conclusion.NONE, witness)
    concl = Conclusion.NO_SF if genus > 1 else Conclusion.NO_POSITIVE
    return _verdict(rule, Applicability.APPLIED, concl, witness)


def floer_parity_rules(parity: TopGroupParity, genus: Optional[int]):
    """The two directional parity verdicts from the top Floer group."""
    pos_rule, neg_rule = "floer-parity-positive", "floer-parity-negative"
    if genus is None:
        missing = {"genus": None, "table_top": parity.top_grading}
        return (
            _verdict(pos_rule, Applicability.INSUFFICIENT_DATA, Conclusion.NONE, missing),
            _verdict(neg_rule, Applicability.INSUFFICIENT_DATA, Conclusion.NONE, missing),
        )
    witness = {
        "genus": genus,
        "table_top": parity.top_grading,
        "top_parity": parity.parity,
    }
    if genus < 1:
        return (
            _verdict(pos_rule, Applicability.HYPOTHESES_NOT_MET, Conclusion.NONE, witness),
            _verdict(neg_rule, Applicability.HYPOTHESES_NOT_MET, Conclusion.NONE, witness),
        )
    if parity.parity == "odd":
        positive = _verdict(pos_rule, Applicability.APPLIED, Conclusion.NO_POSITIVE, witness)
    else:
        positive = _verdict(pos_rule, Applicability.APPLIED, Conclusion.NONE, witness)
    if genus <= 1:
        negative = _verdict(neg_rule, Applicability.HYPOTHESES_NOT_MET, Conclusion.NONE, witness)
    elif parity.parity == "even":
        negative = _verdict(neg_rule, Applicability.APPLIED, Conclusion.NO_NEGATIVE, witness)
    else:
        negative = _verdict(neg_rule, Applicability.APPLIED, Conclusion.NONE, witness)
    return (positive, negative)


_TREFOIL_POLY = (
    LaurentPoly.term(1, 1) + LaurentPoly.term(-1, 0) + LaurentPoly.term(1, -1)
)
_FIG8_POLY = (
    LaurentPoly.term(-1, 1) + LaurentPoly.term(3, 0) + LaurentPoly.term(-1, -1)
)


@dataclass(frozen=True)
class BrieskornRecord:
    """Which Brieskorn-sphere surgeries the invariants leave possible.

    An unknown genus cannot exclude (the conditions constrain knots of genus
    one; absence of genus data leaves the possibility open), so genus None
    is treated as "possibly one".
    """

    poincare_possible: bool
    poincare_r: Optional[int]  # -1 when possible
    sigma237_possible: bool
    sigma237_r: tuple  # required surgery coefficients, each -1 or +1

    def record(self) -> dict:
        return {
            "poincare_possible": self.poincare_possible,
            "poincare_r": self.poincare_r,
            "sigma237_possible": self.sigma237_possible,
            "sigma237_r": list(self.sigma237_r),
        }


def brieskorn_filter(inv: KnotInvariants) -> BrieskornRecord:
    genus_may_be_one = inv.genus is None or inv.genus == 1
    is_trefoil_poly = inv.alexander.poly == _TREFOIL_POLY
    is_fig8_poly = inv.alexander.poly == _FIG8_POLY

    poincare = genus_may_be_one and is_trefoil_poly
    r237 = []
    if genus_may_be_one and is_trefoil_poly:
        r237.append(-1)
    if genus_may_be_one and is_fig8_poly:
        r237.append(+1)
    return BrieskornRecord(
        poincare_possible=poincare,
        poincare_r=-1 if poincare else None,
        sigma237_possible=bool(r237),
        sigma237_r=tuple(r237),
    )


def _summary(conclusions) -> Conclusion:
    present = set(conclusions)
    if Conclusion.NO_SF in present:
        return Conclusion.NO_SF
    if Conclusion.NO_POSITIVE in present and Conclusion.NO_NEGATIVE in present:
        # jointly these cover all four (sign of q, orientation) cases
        return Conclusion.NO_SF
    if Conclusion.NO_POSITIVE in present:
        return Conclusion.NO_POSITIVE
    if Conclusion.NO_NEGATIVE in present:
        return Conclusion.NO_NEGATIVE
    return Conclusion.NONE


def full_report(inv: KnotInvariants, table: Optional[HfkTable] = None) -> ObstructionReport:
    """All rules in deterministic order; the audit runs on alternating knots."""
    verdicts = [
        sign_coherence_rule(inv.torsion),
        parity_signature_rule(inv),
        degree_deficit_rule(inv.alexander.degree, inv.genus),
    ]
    if inv.alternating:
        violations = audit_alternating_bound(inv.torsion, inv.signature)
        if violations:
            raise InternalError(
                "alternating torsion bound failed for %r: %s"
                % (inv.name, list(violations))
            )
    if table is not None:
        verdicts.extend(floer_parity_rules(top_group_parity(table), inv.genus))
    return ObstructionReport(
        name=inv.name,
        verdicts=tuple(verdicts),
        summary=_summary(v.conclusion for v in verdicts),
    )
