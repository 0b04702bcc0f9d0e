"""Floer homology tables for alternating knots, from (Alexander, signature).

For an alternating knot the bigraded Floer groups are free of rank |a_i| and
sit on the single diagonal of homological grading i - sigma/2 at Alexander
grading i (the thin structure theorem).  Homological gradings are stored as
twice their value so half-integer conventions in externally supplied tables
need no floating point.

Serialization: one row per group, "i m rank", sorted by descending Alexander
grading then ascending homological grading; m prints as an integer when the
doubled grading is even and as "<odd>/2" otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LaurentPoly
from .invariants import AlexanderPolynomial


class NotAlternating(ValueError):
    """Table construction from (Alexander, signature) needs an alternating knot."""


class MixedParity(ValueError):
    def __init__(self, top):
        self.top = top
        super().__init__(top)

    def __str__(self):
        return "top Alexander grading %d carries both parities" % self.top


def _format_m(m2: int) -> str:
    if m2 % 2 == 0:
        return str(m2 // 2)
    return "%d/2" % m2


@dataclass(frozen=True)
class HfkTable:
    """ranks: map (alexander grading i, doubled homological grading) -> rank."""

    ranks: tuple  # sorted tuple of ((i, m2), rank)

    @classmethod
    def from_dict(cls, d: dict) -> "HfkTable":
        items = []
        for (i, m2), rank in d.items():
            if rank < 0:
                raise ValueError("rank at (%d, %s) is negative" % (i, _format_m(m2)))
            if rank:
                items.append(((i, m2), rank))
        items.sort(key=lambda kv: (-kv[0][0], kv[0][1]))
        return cls(tuple(items))

    def as_dict(self) -> dict:
        return dict(self.ranks)

    def text(self) -> str:
        return "\n".join(
            "%d %s %d" % (i, _format_m(m2), rank) for ((i, m2), rank) in self.ranks
        )

    @classmethod
    def from_text(cls, text: str) -> "HfkTable":
        d = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            parts = body.split()
            if len(parts) != 3:
                raise ValueError("line %d: expected 'i m rank'" % lineno)
            i = int(parts[0])
            mtok = parts[1]
            if mtok.endswith("/2"):
                m2 = int(mtok[:-2])
                if m2 % 2 == 0:
                    raise ValueError("line %d: %s is not in lowest terms" % (lineno, mtok))
            else:
                m2 = 2 * int(mtok)
            rank = int(parts[2])
            if rank <= 0:
                raise ValueError("line %d: rank must be positive" % lineno)
            if (i, m2) in d:
                raise ValueError("line %d: duplicate grading (%d, %s)" % (lineno, i, mtok))
            d[(i, m2)] = rank
        return cls.from_dict(d)


@dataclass(frozen=True)
class TopGroupParity:
    top_grading: int  # maximal Alexander grading with a nonzero group
    parity: str  # "even" or "odd" homological parity of that group


def hfk_alternating(
    a: AlexanderPolynomial, sigma: int, alternating: bool = True
) -> HfkTable:
    """Thin table: rank |a_i| at homological grading i - sigma/2."""
    if not alternating:
        raise NotAlternating("the thin table shape holds for alternating knots")
    if sigma % 2:
        raise ValueError("knot signature must be even, got %d" % sigma)
    d = {}
    for e, c in a.poly.coeffs.items():
        d[(e, 2 * e - sigma)] = abs(c)
    if not d:
        raise ValueError("Alexander polynomial of a knot cannot be zero")
    return HfkTable.from_dict(d)


def euler_characteristic(h: HfkTable) -> LaurentPoly:
    """sum_i (sum_m (-1)^m rank(i, m)) T^i; needs integer homological gradings."""
    out = LaurentPoly.zero()
    for (i, m2), rank in h.ranks:
        if m2 % 2:
            raise ValueError(
                "half-integer homological grading %s has no Euler sign" % _format_m(m2)
            )
        sign = -1 if (m2 // 2) % 2 else 1
        out = out + LaurentPoly.term(sign * rank, i)
    return out


def genus_from_table(h: HfkTable) -> int:
    if not h.ranks:
        raise ValueError("empty table has no top grading")
    return max(i for ((i, _), _) in h.ranks)


def top_group_parity(h: HfkTable) -> TopGroupParity:
    g = genus_from_table(h)
    parities = set()
    for (i, m2), _ in h.ranks:
        if i != g:
            continue
        if m2 % 2:
            raise ValueError(
                "homological parity undefined for half-integer grading %s"
                % _format_m(m2)
            )
        parities.add((m2 // 2) % 2)
    if len(parities) != 1:
        raise MixedParity(g)
    (p,) = parities
    return TopGroupParity(g, "odd" if p else "even")
