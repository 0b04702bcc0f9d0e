"""Planar knot diagrams and the Seifert pairing read off from them.

Diagram model
-------------
A diagram with n crossings has 2n oriented arcs labeled 0 .. 2n-1, with arc
k+1 (mod 2n) following arc k along the knot.  Each crossing stores the four
incident arc labels by role (under_in, under_out, over_in, over_out) and a
sign.  The sign is the usual one: +1 when the frame (over direction, under
direction) is positively oriented in the plane.  The counterclockwise order
of the four ends around a crossing is determined by the sign:

    sign +1:  under_in, over_out, under_out, over_in
    sign -1:  under_in, over_in,  under_out, over_out

Faces are traced from this rotation system; a diagram is accepted only when
Euler's formula gives n + 2 faces, i.e. the rotation system is planar.

Seifert surface model
---------------------
Smoothing every crossing coherently with orientation splits the diagram into
disjoint circles.  Regions of the smoothed picture are obtained from diagram
faces by merging the two "gap" sectors at each crossing.  Choosing the region
to the right of arc 0 as the outer one makes the region adjacency graph a
rooted tree, which yields for every circle its nesting depth and its planar
sense w (+1 counterclockwise).  Each circle bounds a disc at height equal to
its depth, and each crossing contributes a half-twisted band joining two
discs; the twist angle of the band is -sign * pi.

A basis of the surface's first homology is given by the non-tree crossings of
a spanning tree of the circle/crossing graph (edges sorted by smallest
incident arc label, then crossing index).  Each basis cycle is routed through
collars: on every disc it dives radially from a band foot to a fixed inset
level (one level per cycle), travels angularly in the circle's positive
direction, and rises radially at the exit foot.  Within a band, cycle strands
occupy parallel lanes.  With this routing, all projected crossings between
two cycles fall into three classes:

  * band sites: two lanes in a half-twisted band cross exactly once; the
    crossing sign is -sign(band) when the lanes are traversed in the same
    direction and +sign(band) otherwise;
  * collar sites: the angular segment of a shallower run crosses the radial
    segments of a deeper run on the same disc; such a site contributes
    sigma_rad to V[m][n] and -sigma_rad to V[n][m], where m owns the angular
    segment and sigma_rad is +1 for a dive (entry) and -1 for a rise (exit);
  * climb sites: a band joining nested discs leaves the outer disc's
    boundary inward and above its collar, crossing every angular segment that
    passes its foot; the site sign is -direction * w(outer circle), where
    direction is +1 when the cycle climbs from the outer disc to the inner.

The matrix entry V[i][j] is lk(cycle_i pushed off along the positive surface
normal, cycle_j), computed as half the signed count of all projected
crossings between the two curves; diagonal entries are the band twist totals
sum(-sign(band))/2 over the cycle's bands.  Integrality of every entry is
asserted, as are the parity facts (even cycle length, even site totals) the
model guarantees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import IntMatrix


class NotPlanar(ValueError):
    """Rotation data that does not embed in the plane with Euler count n+2."""

    def __init__(self, faces, expected):
        self.faces = faces
        self.expected = expected
        super().__init__(faces, expected)

    def __str__(self):
        return "rotation system traces %d faces, planarity needs %d" % (
            self.faces,
            self.expected,
        )


class InternalError(RuntimeError):
    """An invariant of the diagram model failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Crossing:
    under_in: int
    under_out: int
    over_in: int
    over_out: int
    sign: int  # +1 or -1


@dataclass(frozen=True)
class BasisCycle:
    """One homology basis cycle: its defining crossing and the band walk."""

    crossing: int
    # bands as (crossing index, from circle, to circle) in traversal order
    bands: tuple

    def describe(self) -> str:
        path = ", ".join(
            "x%d: c%d->c%d" % (x, a, b) for (x, a, b) in self.bands
        )
        return "cycle through crossing %d [%s]" % (self.crossing, path)


@dataclass(frozen=True)
class SeifertData:
    """Seifert circle count, the pairing matrix, and the basis description."""

    circle_count: int
    matrix: IntMatrix
    basis: tuple

    def rank(self) -> int:
        return self.matrix.n

    def basis_description(self) -> str:
        if not self.basis:
            return "(empty basis)"
        return "; ".join(c.describe() for c in self.basis)


class PlanarDiagram:
    """An oriented knot diagram with consecutively labeled arcs."""

    def __init__(self, crossings, name=None):
        self.crossings = tuple(crossings)
        self.name = name
        self._validate()

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    def _validate(self):
        n = self.n
        if n == 0:
            return
        m = 2 * n
        heads = {}
        tails = {}
        for idx, c in enumerate(self.crossings):
            if c.sign not in (+1, -1):
                raise ValueError("crossing %d has sign %r" % (idx, c.sign))
            for a in (c.under_in, c.under_out, c.over_in, c.over_out):
                if not (0 <= a < m):
                    raise ValueError("crossing %d refers to arc %r" % (idx, a))
            if c.under_out != (c.under_in + 1) % m or c.over_out != (c.over_in + 1) % m:
                raise ValueError(
                    "crossing %d breaks consecutive arc labeling" % idx
                )
            for a, table in ((c.under_in, heads), (c.over_in, heads)):
                if a in table:
                    raise ValueError("arc %d enters two crossings" % a)
                table[a] = idx
            for a, table in ((c.under_out, tails), (c.over_out, tails)):
                if a in table:
                    raise ValueError("arc %d leaves two crossings" % a)
                table[a] = idx
        if len(heads) != m or len(tails) != m:
            raise ValueError("arc labels do not cover 0..%d exactly" % (m - 1))
        self._head = heads  # arc -> crossing index it enters
        faces = self.faces()
        if len(faces) != n + 2:
            raise NotPlanar(len(faces), n + 2)

    # --- rotation system -------------------------------------------------

    def rotation(self, idx: int):
        """Counterclockwise list of ends at crossing idx.

        An end is (arc, entering) where entering is True when the arc's head
        lies at this crossing.
        """
        c = self.crossings[idx]
        if c.sign > 0:
            return [
                (c.under_in, True),
                (c.over_out, False),
                (c.under_out, False),
                (c.over_in, True),
            ]
        return [
            (c.under_in, True),
            (c.over_in, True),
            (c.under_out, False),
            (c.over_out, False),
        ]

    def faces(self):
        """Faces of the rotation system, each a list of darts.

        A dart is (arc, direction) with direction +1 along the orientation.
        The traced face lies to the right of each of its darts.
        """
        n = self.n
        end_pos = {}
        rotations = []
        for idx in range(n):
            rot = self.rotation(idx)
            rotations.append(rot)
            for pos, end in enumerate(rot):
                if end in end_pos:
                    raise InternalError("end %r appears at two crossings" % (end,))
                end_pos[end] = (idx, pos)

        def next_dart(d):
            arc, direction = d
            e = (arc, direction > 0)  # arriving end: head if forward
            idx, pos = end_pos[e]
            rot = rotations[idx]
            arc2, entering2 = rot[(pos + 1) % 4]
            return (arc2, -1 if entering2 else +1)

        seen = set()
        out = []
        for arc in range(2 * n):
            for direction in (+1, -1):
                d = (arc, direction)
                if d in seen:
                    continue
                face = []
                cur = d
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    cur = next_dart(cur)
                if cur != d:
                    raise InternalError("face walk did not close up")
                out.append(face)
        return out

    # --- traversal-level data --------------------------------------------

    def visit_sequence(self):
        """Passages along the knot: entry (crossing, 'O'/'U') at head of arc k."""
        out = []
        for a in range(self.arc_count):
            idx = self._head[a]
            c = self.crossings[idx]
            out.append((idx, "U" if c.under_in == a else "O"))
        return out

    def __repr__(self):
        return "PlanarDiagram(n=%d, name=%r)" % (self.n, self.name)


def writhe(d: PlanarDiagram) -> int:
    return sum(c.sign for c in d.crossings)


def is_alternating(d: PlanarDiagram) -> bool:
    """True when passages alternate over/under along the knot (vacuous for 0)."""
    if d.n == 0:
        return True
    seq = [p for (_, p) in d.visit_sequence()]
    return all(seq[k] != seq[(k + 1) % len(seq)] for k in range(len(seq)))


def seifert_circles(d: PlanarDiagram):
    """Orientation-coherent smoothing cycles, each an arc list; [[]] for n=0."""
    if d.n == 0:
        return [[]]
    nxt = {}
    for c in d.crossings:
        nxt[c.under_in] = c.over_out
        nxt[c.over_in] = c.under_out
    seen = set()
    circles = []
    for start in range(d.arc_count):
        if start in seen:
            continue
        cyc = []
        a = start
        while a not in seen:
            seen.add(a)
            cyc.append(a)
            a = nxt[a]
        if a != start:
            raise InternalError("smoothing permutation is not a bijection")
        circles.append(cyc)
    return circles


def seifert_circle_count(d: PlanarDiagram) -> int:
    return len(seifert_circles(d))


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


class _Surface:
    """Circles, regions, nesting depths and senses of the smoothed diagram."""

    def __init__(self, d: PlanarDiagram):
        self.diagram = d
        self.circles = seifert_circles(d)
        self.circle_of = {}
        for ci, cyc in enumerate(self.circles):
            for a in cyc:
                self.circle_of[a] = ci

        faces = d.faces()
        face_of_dart = {}
        for fi, face in enumerate(faces):
            for dart in face:
                face_of_dart[dart] = fi
        self.face_of_dart = face_of_dart

        # merge the two gap sectors at each crossing
        uf = _UnionFind(range(len(faces)))
        for idx in range(d.n):
            c = d.crossings[idx]
            rot = d.rotation(idx)
            corners = (
                frozenset(((c.under_in, True), (c.over_out, False))),
                frozenset(((c.over_in, True), (c.under_out, False))),
            )
            gap_faces = []
            for pos in range(4):
                e1 = rot[pos]
                e2 = rot[(pos + 1) % 4]
                if frozenset((e1, e2)) in corners:
                    continue
                arc, entering = e1
                dart = (arc, +1 if entering else -1)
                gap_faces.append(face_of_dart[dart])
            if len(gap_faces) != 2:
                raise InternalError("crossing %d has %d gap sectors" % (idx, len(gap_faces)))
            uf.union(gap_faces[0], gap_faces[1])
        self._uf = uf

        regions = {uf.find(fi) for fi in range(len(faces))}
        s = len(self.circles)
        if len(regions) != s + 1:
            raise InternalError(
                "smoothing gives %d regions for %d circles" % (len(regions), s)
            )

        # boundary regions of every circle
        self.left_region = []
        self.right_region = []
        for cyc in self.circles:
            lefts = {uf.find(face_of_dart[(a, -1)]) for a in cyc}
            rights = {uf.find(face_of_dart[(a, +1)]) for a in cyc}
            if len(lefts) != 1 or len(rights) != 1:
                raise InternalError("circle has a non-constant side region")
            (l,) = lefts
            (r,) = rights
            if l == r:
                raise InternalError("circle fails to separate its sides")
            self.left_region.append(l)
            self.right_region.append(r)

        # region tree rooted at the region right of arc 0
        outer = uf.find(face_of_dart[(0, +1)])
        adj = {r: [] for r in regions}
        for ci in range(s):
            adj[self.left_region[ci]].append((self.right_region[ci], ci))
            adj[self.right_region[ci]].append((self.left_region[ci], ci))
        depth_of_region = {outer: 0}
        queue = [outer]
        while queue:
            r = queue.pop()
            for r2, _ in adj[r]:
                if r2 not in depth_of_region:
                    depth_of_region[r2] = depth_of_region[r] + 1
                    queue.append(r2)
        if len(depth_of_region) != len(regions):
            raise InternalError("region adjacency graph is disconnected")

        self.depth = []
        self.sense = []  # +1 when the circle runs counterclockwise
        for ci in range(s):
            dl = depth_of_region[self.left_region[ci]]
            dr = depth_of_region[self.right_region[ci]]
            if abs(dl - dr) != 1:
                raise InternalError("region tree depths differ by %d" % abs(dl - dr))
            self.depth.append(min(dl, dr))
            self.sense.append(+1 if dl > dr else -1)

        # corner bookkeeping: slots along each circle, feet of each crossing
        self.slot_count = [len(cyc) for cyc in self.circles]
        # corner1 of x is (under_in -> over_out), corner2 is (over_in -> under_out)
        self.foot = {}  # (crossing, 1 or 2) -> (circle, slot)
        for ci, cyc in enumerate(self.circles):
            for slot, a in enumerate(cyc):
                idx = d._head[a]
                c = d.crossings[idx]
                which = 1 if c.under_in == a else 2
                self.foot[(idx, which)] = (ci, slot)
        for idx in range(d.n):
            c1 = self.foot[(idx, 1)][0]
            c2 = self.foot[(idx, 2)][0]
            if c1 == c2:
                raise InternalError("crossing %d joins a circle to itself" % idx)
            dd = abs(self.depth[c1] - self.depth[c2])
            same = self.sense[c1] == self.sense[c2]
            if dd == 0 and same:
                raise InternalError("side-by-side circles with equal sense")
            if dd == 1 and not same:
                raise InternalError("nested circles with opposite sense")
            if dd > 1:
                raise InternalError("band spans depth gap %d" % dd)


def _crossing_sort_key(d: PlanarDiagram, idx: int):
    c = d.crossings[idx]
    return (min(c.under_in, c.under_out, c.over_in, c.over_out), idx)


def seifert_matrix(d: PlanarDiagram) -> SeifertData:
    """Seifert pairing of the layered-disc surface for this diagram.

    Returns circle count, the b x b matrix with b = crossings - circles + 1,
    and the homology basis built from the documented spanning tree.
    """
    if d.n == 0:
        return SeifertData(1, IntMatrix([]), ())
    surf = _Surface(d)
    s = len(surf.circles)
    n = d.n

    order = sorted(range(n), key=lambda i: _crossing_sort_key(d, i))
    uf = _UnionFind(range(s))
    tree_adj = {ci: [] for ci in range(s)}
    basis_crossings = []
    for idx in order:
        p = surf.foot[(idx, 1)][0]
        q = surf.foot[(idx, 2)][0]
        if uf.union(p, q):
            tree_adj[p].append((q, idx))
            tree_adj[q].append((p, idx))
        else:
            basis_crossings.append(idx)
    b = len(basis_crossings)
    if b != n - s + 1:
        raise InternalError("smoothing graph is disconnected")
    if b % 2:
        raise InternalError("odd first Betti number %d for a knot surface" % b)
    if b == 0:
        return SeifertData(s, IntMatrix([]), ())

    def tree_path(src, dst):
        # (circle sequence, band list) from src to dst inside the tree
        prev = {src: None}
        stack = [src]
        while stack:
            v = stack.pop()
            if v == dst:
                break
            for w2, e in tree_adj[v]:
                if w2 not in prev:
                    prev[w2] = (v, e)
                    stack.append(w2)
        if dst not in prev:
            raise InternalError("spanning tree does not connect the circles")
        bands = []
        v = dst
        while prev[v] is not None:
            u, e = prev[v]
            bands.append((e, u, v))
            v = u
        bands.reverse()
        return bands

    # cycle k: cross its defining band from the corner-1 circle to the
    # corner-2 circle, then return through the tree.
    cycles = []
    for idx in basis_crossings:
        p = surf.foot[(idx, 1)][0]
        q = surf.foot[(idx, 2)][0]
        bands = [(idx, p, q)] + tree_path(q, p)
        cycles.append(bands)

    ncyc = len(cycles)
    # lanes per band: which cycles traverse crossing x, and in which direction
    lanes = {}  # crossing -> list of (cycle index, from_circle, to_circle)
    for k, bands in enumerate(cycles):
        seen_here = set()
        for (x, a, bcirc) in bands:
            if x in seen_here:
                raise InternalError("cycle %d repeats band %d" % (k, x))
            seen_here.add(x)
            lanes.setdefault(x, []).append((k, a, bcirc))
    for x in lanes:
        lanes[x].sort()

    # positions: foot (x, circle) hosts one slit per lane; along the circle's
    # positive direction, corner-1 feet order lanes by ascending cycle index
    # and corner-2 feet by descending index (the half twist reverses order).
    position = {}  # (cycle, crossing, circle) -> Fraction slot position
    for x, lamb in lanes.items():
        count = len(lamb)
        for which in (1, 2):
            ci, slot = surf.foot[(x, which)]
            for rank_in_index, (k, _, _) in enumerate(lamb):
                rank = rank_in_index if which == 1 else count - 1 - rank_in_index
                position[(k, x, ci)] = Fraction(slot) + Fraction(rank + 1, count + 1)

    # runs: for each cycle and circle it visits, the angular interval
    runs_on = {ci: [] for ci in range(s)}  # circle -> list of run dicts
    twist_total = [0] * ncyc
    for k, bands in enumerate(cycles):
        for t, (x, a, bcirc) in enumerate(bands):
            twist_total[k] += -d.crossings[x].sign
            x_next, a_next, _ = bands[(t + 1) % len(bands)]
            if a_next != bcirc:
                raise InternalError("cycle %d band walk is not a path" % k)
            runs_on[bcirc].append(
                {
                    "cycle": k,
                    "p_in": position[(k, x, bcirc)],
                    "p_out": position[(k, x_next, bcirc)],
                }
            )
        if len(bands) % 2:
            raise InternalError("cycle %d uses an odd number of bands" % k)

    total = [[0] * ncyc for _ in range(ncyc)]  # doubled linking sums

    # band sites: one crossing per lane pair per band
    for x, lamb in lanes.items():
        eps = d.crossings[x].sign
        for i in range(len(lamb)):
            for j in range(i + 1, len(lamb)):
                ki, pi, _ = lamb[i]
                kj, pj, _ = lamb[j]
                same_dir = pi == pj
                sgn = -eps if same_dir else +eps
                total[ki][kj] += sgn
                total[kj][ki] += sgn

    # collar sites: shallower angular segment vs deeper radial segments
    def strictly_inside(p, lo, hi, period):
        span = (hi - lo) % period
        rel = (p - lo) % period
        return 0 < rel < span

    for ci in range(s):
        period = surf.slot_count[ci]
        runs = runs_on[ci]
        for rm in runs:
            for rn in runs:
                if rm["cycle"] >= rn["cycle"]:
                    continue  # insets follow cycle index; angular must be shallower
                for p, sigma_rad in ((rn["p_in"], +1), (rn["p_out"], -1)):
                    if strictly_inside(p, rm["p_in"], rm["p_out"], period):
                        total[rm["cycle"]][rn["cycle"]] += sigma_rad
                        total[rn["cycle"]][rm["cycle"]] -= sigma_rad

    # climb sites: nested bands sweep over the outer circle's collar
    for x, lamb in lanes.items():
        c1 = surf.foot[(x, 1)][0]
        c2 = surf.foot[(x, 2)][0]
        if surf.depth[c1] == surf.depth[c2]:
            continue
        low = c1 if surf.depth[c1] < surf.depth[c2] else c2
        w_low = surf.sense[low]
        period = surf.slot_count[low]
        for (k, a, bcirc) in lamb:
            direction = +1 if a == low else -1  # +1 climbs outer -> inner
            p = position[(k, x, low)]
            for run in runs_on[low]:
                if strictly_inside(p, run["p_in"], run["p_out"], period):
                    sgn = -direction * w_low
                    total[k][run["cycle"]] += sgn
                    total[run["cycle"]][k] += sgn

    rows = []
    for i in range(ncyc):
        row = []
        for j in range(ncyc):
            if i == j:
                if twist_total[i] % 2:
                    raise InternalError("half-integral framing on cycle %d" % i)
                row.append(twist_total[i] // 2)
            else:
                if total[i][j] % 2:
                    raise InternalError(
                        "odd site count between cycles %d and %d" % (i, j)
                    )
                row.append(total[i][j] // 2)
        rows.append(row)

    basis = tuple(
        BasisCycle(crossing=cyc[0][0], bands=tuple(cyc)) for cyc in cycles
    )
    return SeifertData(s, IntMatrix(rows), basis)
