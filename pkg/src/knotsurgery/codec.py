"""Text codecs for knot presentations.

Grammars (all plain ASCII, whitespace- or comma-separated tokens):

DT code
    Signed even integers, one per crossing: ``"4 6 2"``.  Entry i pairs the
    odd visit 2i+1 with the even visit |entry|.  A positive entry means the
    even visit passes under; a negative entry means it passes over.  The
    empty string denotes the zero-crossing unknot diagram.

Gauss code
    Tokens ``O<id><sign>`` or ``U<id><sign>`` in traversal order, e.g.
    ``"O1+ U2+ O3+ U1+ O2+ U3+"``.  Ids are positive integers, each
    appearing exactly once as O and once as U; the sign is the crossing's
    handedness and must agree between the two passages.

PD notation
    ``X[a,b,c,d]`` tuples, arcs listed counterclockwise starting from the
    incoming under-strand.  Labels may be 0- or 1-based but must cover a
    consecutive range, each exactly twice, and the under-strand must leave
    with the successor label (c = a + 1 modulo 2n).  When b = d + 1 the
    crossing is positive (over-strand d -> b); when d = b + 1 it is
    negative.  On the one-crossing diagram both congruences hold and the
    positive reading is chosen.

Braid word
    Optional ``<strands>:`` or ``<strands>,<letters>:`` prefix, then
    non-zero integers: ``"3: 1 -2 1 -2"``.  Letter k crosses the strand in
    slot k over the strand in slot k+1; letter -k crosses it under.  Without
    a prefix the strand count is max|letter| + 1.  The closure must be a
    knot: the induced permutation must be a single cycle.

DT realization is a deterministic search: crossing rotations are chosen
transversally (2^(n-1) sign vectors, the first crossing pinned positive,
vectors in lexicographic order with + before -) and the first choice whose
rotation system is planar wins; if none is, the code is Unrealizable.  The
pinned first crossing implements the reflection convention: among the two
mirror realizations the one whose first-visited crossing is positive is
returned.  Codes that admit several planar sign assignments realize to the
lexicographically first one; "4 8 6 2" for example realizes to an
all-positive unreduced trefoil diagram rather than erroring, a documented
property of the search order.  The search is exponential, so realization is
refused beyond 16 crossings.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .diagram import Crossing, InternalError, NotPlanar, PlanarDiagram

_MAX_DT_SEARCH = 16


class MalformedText(ValueError):
    """Input text that does not match the documented grammar."""


class OddLabel(ValueError):
    def __init__(self, label):
        self.label = label
        super().__init__(label)

    def __str__(self):
        return "DT labels must be even, got %d" % self.label


class DuplicateLabel(ValueError):
    def __init__(self, label):
        self.label = label
        super().__init__(label)

    def __str__(self):
        return "label %d appears more than once" % self.label


class RangeGap(ValueError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(expected, got)

    def __str__(self):
        return "labels must cover %s exactly, got %s" % (
            self.expected,
            sorted(self.got),
        )


class Unrealizable(ValueError):
    """No planar embedding exists for the given combinatorial data."""


class NotAKnot(ValueError):
    def __init__(self, cycles):
        self.cycles = cycles
        super().__init__(cycles)

    def __str__(self):
        return "braid closure has %d components, need exactly 1" % self.cycles


def _tokens(text: str):
    return [t for t in text.replace(",", " ").split() if t]


# --- value types ----------------------------------------------------------


@dataclass(frozen=True)
class DtCode:
    labels: tuple

    @property
    def n(self) -> int:
        return len(self.labels)

    def text(self) -> str:
        return " ".join(str(v) for v in self.labels)


@dataclass(frozen=True)
class GaussCode:
    # entries along the traversal: (crossing id, "O" or "U", handedness +-1)
    entries: tuple

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    def text(self) -> str:
        return " ".join(
            "%s%d%s" % (p, i, "+" if h > 0 else "-") for (i, p, h) in self.entries
        )


@dataclass(frozen=True)
class PdNotation:
    # 4-tuples counterclockwise from the incoming under-strand, 0-based arcs
    crossings: tuple

    @property
    def n(self) -> int:
        return len(self.crossings)

    def text(self) -> str:
        return " ".join("X[%d,%d,%d,%d]" % t for t in self.crossings)


@dataclass(frozen=True)
class BraidWord:
    letters: tuple
    strands: int

    def text(self) -> str:
        return "%d: %s" % (self.strands, " ".join(str(v) for v in self.letters))


# --- parsers --------------------------------------------------------------


def parse_dt(text: str) -> DtCode:
    values = []
    for tok in _tokens(text):
        try:
            values.append(int(tok))
        except ValueError:
            raise MalformedText("DT token %r is not an integer" % tok) from None
    n = len(values)
    seen = set()
    for v in values:
        if v % 2:
            raise OddLabel(v)
        if abs(v) in seen:
            raise DuplicateLabel(abs(v))
        seen.add(abs(v))
    expected = set(range(2, 2 * n + 1, 2))
    if seen != expected:
        raise RangeGap("{2, 4, ..., %d}" % (2 * n), seen)
    return DtCode(tuple(values))


_GAUSS_TOKEN = re.compile(r"^([OU])([0-9]+)([+-])$")


def parse_gauss(text: str) -> GaussCode:
    entries = []
    for tok in _tokens(text):
        m = _GAUSS_TOKEN.match(tok)
        if not m:
            raise MalformedText("Gauss token %r is not like O1+ or U2-" % tok)
        passage, ident, hand = m.groups()
        ident = int(ident)
        if ident <= 0:
            raise MalformedText("Gauss crossing ids are positive, got %d" % ident)
        entries.append((ident, passage, +1 if hand == "+" else -1))
    seen = {}
    for ident, passage, hand in entries:
        key = (ident, passage)
        if key in seen:
            raise DuplicateLabel(ident)
        seen[key] = hand
    ids = {i for (i, _, _) in entries}
    for i in ids:
        if (i, "O") not in seen or (i, "U") not in seen:
            raise MalformedText("crossing %d needs one O and one U passage" % i)
        if seen[(i, "O")] != seen[(i, "U")]:
            raise MalformedText("crossing %d has inconsistent handedness" % i)
    return GaussCode(tuple(entries))


_PD_TUPLE = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def parse_pd(text: str) -> PdNotation:
    body = text.strip()
    tuples = []
    consumed = 0
    for m in _PD_TUPLE.finditer(body):
        tuples.append(tuple(int(g) for g in m.groups()))
        consumed += len(m.group(0))
    leftover = re.sub(r"[\s,;]+", "", _PD_TUPLE.sub("", body))
    if leftover:
        raise MalformedText("unexpected PD text %r" % leftover[:40])
    if not tuples:
        raise MalformedText("PD input holds no X[a,b,c,d] tuples")
    n = len(tuples)
    counts = {}
    for t in tuples:
        for a in t:
            counts[a] = counts.get(a, 0) + 1
    for a, k in sorted(counts.items()):
        if k != 2:
            raise DuplicateLabel(a)
    lo = min(counts)
    if lo not in (0, 1):
        raise MalformedText("PD labels must start at 0 or 1, got %d" % lo)
    expected = set(range(lo, lo + 2 * n))
    if set(counts) != expected:
        raise RangeGap("{%d..%d}" % (lo, lo + 2 * n - 1), set(counts))
    if lo:
        tuples = [tuple(a - lo for a in t) for t in tuples]
    return PdNotation(tuple(tuples))


_BRAID_PREFIX = re.compile(r"^\s*(\d+)\s*(?:,\s*(\d+)\s*)?:")


def parse_braid(text: str) -> BraidWord:
    strands = None
    declared_length = None
    m = _BRAID_PREFIX.match(text)
    if m:
        strands = int(m.group(1))
        if m.group(2) is not None:
            declared_length = int(m.group(2))
        text = text[m.end():]
    letters = []
    for tok in _tokens(text):
        try:
            letters.append(int(tok))
        except ValueError:
            raise MalformedText("braid letter %r is not an integer" % tok) from None
    if any(v == 0 for v in letters):
        raise MalformedText("braid letters are non-zero integers")
    if declared_length is not None and declared_length != len(letters):
        raise MalformedText(
            "braid declares %d letters but has %d" % (declared_length, len(letters))
        )
    if strands is None:
        strands = max((abs(v) for v in letters), default=0) + 1
    if strands < 1:
        raise MalformedText("braid needs at least one strand")
    for v in letters:
        if abs(v) >= strands:
            raise MalformedText(
                "letter %d needs %d strands, only %d declared" % (v, abs(v) + 1, strands)
            )
    word = BraidWord(tuple(letters), strands)
    _braid_permutation_check(word)
    return word


def _braid_permutation_check(word: BraidWord):
    perm = list(range(word.strands))
    for v in word.letters:
        k = abs(v) - 1
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
    seen = set()
    cycles = 0
    for start in range(word.strands):
        if start in seen:
            continue
        cycles += 1
        p = start
        while p not in seen:
            seen.add(p)
            p = perm[p]
    if cycles != 1:
        raise NotAKnot(cycles)
    return perm


# --- constructors ---------------------------------------------------------


def realize_dt(code: DtCode) -> PlanarDiagram:
    """Search the transversal rotation choices for a planar realization."""
    n = code.n
    if n == 0:
        return PlanarDiagram(())
    if n > _MAX_DT_SEARCH:
        raise ValueError("DT realization search is exponential; max %d crossings"
                         % _MAX_DT_SEARCH)
    m = 2 * n
    # crossing i carries visits 2i+1 (odd) and |code[i]| (even)
    over_visit = [0] * n
    under_visit = [0] * n
    for i, v in enumerate(code.labels):
        odd = 2 * i + 1
        even = abs(v)
        if v > 0:
            over_visit[i], under_visit[i] = odd, even
        else:
            over_visit[i], under_visit[i] = even, odd

    def build(signs):
        crossings = []
        for i in range(n):
            lu, lo = under_visit[i], over_visit[i]
            crossings.append(
                Crossing(
                    under_in=lu - 1,
                    under_out=lu % m,
                    over_in=lo - 1,
                    over_out=lo % m,
                    sign=signs[i],
                )
            )
        return PlanarDiagram(crossings)

    for tail in itertools.product((+1, -1), repeat=n - 1):
        signs = (+1,) + tail
        try:
            diag = build(signs)
        except NotPlanar:
            continue
        if dt_of_diagram(diag).labels != code.labels:
            raise InternalError("realized diagram does not replay its DT code")
        return diag
    raise Unrealizable("DT code %s admits no planar transversal rotation" % code.text())


def gauss_to_diagram(code: GaussCode) -> PlanarDiagram:
    entries = code.entries
    if not entries:
        return PlanarDiagram(())
    m = len(entries)
    visits = {}  # id -> {"O": arc index whose head is here, "U": ...}
    for pos, (ident, passage, hand) in enumerate(entries):
        visits.setdefault(ident, {})[passage] = pos
        visits[ident]["sign"] = hand
    crossings = []
    for ident in sorted(visits):
        rec = visits[ident]
        ku, ko = rec["U"], rec["O"]
        crossings.append(
            Crossing(
                under_in=ku,
                under_out=(ku + 1) % m,
                over_in=ko,
                over_out=(ko + 1) % m,
                sign=rec["sign"],
            )
        )
    try:
        return PlanarDiagram(crossings)
    except NotPlanar as e:
        raise Unrealizable("Gauss code is not planar: %s" % e) from e


def pd_to_diagram(pd: PdNotation) -> PlanarDiagram:
    m = 2 * pd.n
    crossings = []
    for t in pd.crossings:
        a, b, c, d = t
        if c != (a + 1) % m:
            raise MalformedText(
                "X[%d,%d,%d,%d]: under-strand must leave with label %d"
                % (a, b, c, d, (a + 1) % m)
            )
        positive = b == (d + 1) % m
        negative = d == (b + 1) % m
        if positive:  # over-strand runs d -> b; one-crossing ambiguity lands here
            crossings.append(Crossing(a, c, d, b, +1))
        elif negative:
            crossings.append(Crossing(a, c, b, d, -1))
        else:
            raise MalformedText(
                "X[%d,%d,%d,%d]: over-strand labels must be consecutive" % (a, b, c, d)
            )
    try:
        return PlanarDiagram(crossings)
    except NotPlanar as e:
        raise Unrealizable("PD data is not planar: %s" % e) from e


def braid_to_diagram(word: BraidWord) -> PlanarDiagram:
    """Close the braid and read off the diagram.

    Positive letter k sends the slot-k strand over the slot-(k+1) strand;
    both letters route bottom-left to top-right.  The closure joins each top
    slot to the same bottom slot around the braid axis.
    """
    _braid_permutation_check(word)
    nl = len(word.letters)
    if nl == 0:
        return PlanarDiagram(())  # 1-strand identity braid closes to the unknot

    # connection[p] = port reached from port p without passing a crossing,
    # where a port is (letter index, corner) with corners BL, BR, TL, TR.
    connection = {}
    last_top = {}
    first_bottom = {}
    for t, v in enumerate(word.letters):
        k = abs(v)
        for slot, corner in ((k, "BL"), (k + 1, "BR")):
            if slot in last_top:
                connection[last_top[slot]] = (t, corner)
            else:
                first_bottom[slot] = (t, corner)
        last_top[k] = (t, "TL")
        last_top[k + 1] = (t, "TR")
    for slot, top in last_top.items():
        connection[top] = first_bottom[slot]

    # traverse the knot, numbering arcs as they are laid down
    start_letter = word.letters[0]
    exit_port = (0, "TL") if start_letter > 0 else (0, "TR")
    arcs_at = {}  # (letter, corner) -> arc label at that port
    port = exit_port
    arc = 0
    while True:
        arcs_at[port] = arc  # tail of this arc
        entry = connection[port]
        arcs_at[entry] = arc  # head of this arc
        t, corner = entry
        port = (t, "TR" if corner == "BL" else "TL")
        arc += 1
        if port == exit_port:
            break
    if arc != 2 * nl:
        raise InternalError("braid traversal covered %d arcs, expected %d" % (arc, 2 * nl))

    crossings = []
    for t, v in enumerate(word.letters):
        bl, br = arcs_at[(t, "BL")], arcs_at[(t, "BR")]
        tl, tr = arcs_at[(t, "TL")], arcs_at[(t, "TR")]
        if v > 0:
            crossings.append(Crossing(under_in=br, under_out=tl, over_in=bl, over_out=tr, sign=+1))
        else:
            crossings.append(Crossing(under_in=bl, under_out=tr, over_in=br, over_out=tl, sign=-1))
    return PlanarDiagram(crossings)


def to_diagram(presentation) -> PlanarDiagram:
    """Accept any parsed presentation (or a diagram) and return the diagram."""
    if isinstance(presentation, PlanarDiagram):
        return presentation
    if isinstance(presentation, DtCode):
        return realize_dt(presentation)
    if isinstance(presentation, GaussCode):
        return gauss_to_diagram(presentation)
    if isinstance(presentation, PdNotation):
        return pd_to_diagram(presentation)
    if isinstance(presentation, BraidWord):
        return braid_to_diagram(presentation)
    raise TypeError("cannot build a diagram from %r" % type(presentation).__name__)


# --- DT codes of a diagram -------------------------------------------------


def _relabeled(d: PlanarDiagram, mapping) -> PlanarDiagram:
    out = []
    for c in d.crossings:
        out.append(
            Crossing(
                under_in=mapping[c.under_in],
                under_out=mapping[c.under_out],
                over_in=mapping[c.over_in],
                over_out=mapping[c.over_out],
                sign=c.sign,
            )
        )
    return PlanarDiagram(out, name=d.name)


def shifted(d: PlanarDiagram, start: int) -> PlanarDiagram:
    """Relabel arcs so old arc `start` becomes arc 0."""
    m = d.arc_count
    if m == 0:
        return d
    return _relabeled(d, {a: (a - start) % m for a in range(m)})


def reversed_diagram(d: PlanarDiagram) -> PlanarDiagram:
    """Reverse the knot orientation (signs are preserved, roles swap in/out)."""
    m = d.arc_count
    if m == 0:
        return d
    r = {a: m - 1 - a for a in range(m)}
    out = []
    for c in d.crossings:
        out.append(
            Crossing(
                under_in=r[c.under_out],
                under_out=r[c.under_in],
                over_in=r[c.over_out],
                over_out=r[c.over_in],
                sign=c.sign,
            )
        )
    return PlanarDiagram(out, name=d.name)


def dt_of_diagram(d: PlanarDiagram) -> DtCode:
    """DT code of the traversal starting along arc 0."""
    n = d.n
    if n == 0:
        return DtCode(())
    labels = {}  # crossing -> {"O"/"U": 1-based visit label}
    for a, (idx, passage) in enumerate(d.visit_sequence()):
        labels.setdefault(idx, {})[passage] = a + 1
    code = [0] * n
    for idx, rec in labels.items():
        lo, lu = rec["O"], rec["U"]
        if (lo + lu) % 2 == 0:
            raise InternalError("crossing visits %d and %d share parity" % (lo, lu))
        odd, even = (lo, lu) if lo % 2 else (lu, lo)
        even_under = even == lu
        code[(odd - 1) // 2] = even if even_under else -even
    return DtCode(tuple(code))


def all_dt_codes(d: PlanarDiagram):
    """DT codes over every start arc and both orientations, as a set."""
    out = set()
    for base in (d, reversed_diagram(d)):
        for start in range(max(d.arc_count, 1)):
            out.add(dt_of_diagram(shifted(base, start)))
            if d.arc_count == 0:
                break
    return out
