"""Independent oracles used by the test suite.

Everything here recomputes results through different mathematics than the
package: the Alexander polynomial via the knot group's abelianized free
differential calculus (rather than any Seifert pairing), determinants via
subset-expansion and cofactor recursion (rather than fraction-free
elimination), and definiteness via principal minors (rather than symmetric
pivoting).  Only plain dicts and Fractions appear; none of the package's
arithmetic types are reused.
"""

from fractions import Fraction


# --- tiny Laurent arithmetic on plain dicts --------------------------------


def padd(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def pneg(a):
    return {e: -c for e, c in a.items()}


def pmul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def pconst(c):
    return {0: c} if c else {}


def cofactor_det(mat):
    """Determinant by first-row cofactor expansion; entries are dict polys."""
    n = len(mat)
    if n == 0:
        return pconst(1)
    if n == 1:
        return dict(mat[0][0])
    total = {}
    for j in range(n):
        entry = mat[0][j]
        if not entry:
            continue
        minor = [[mat[r][c] for c in range(n) if c != j] for r in range(1, n)]
        term = pmul(entry, cofactor_det(minor))
        if j % 2:
            term = pneg(term)
        total = padd(total, term)
    return total


def subset_det(mat):
    """Determinant by dynamic programming over column subsets.

    Processes rows in order; state = set of used columns.  Exponential in
    memory over column subsets but comfortably fast through dimension ~14,
    and algorithmically unrelated to elimination.
    """
    n = len(mat)
    if n == 0:
        return pconst(1)
    states = {0: pconst(1)}
    for r in range(n):
        nxt = {}
        for used, acc in states.items():
            sign_flips = 0
            for c in range(n):
                bit = 1 << c
                if used & bit:
                    sign_flips += 1
                    continue
                entry = mat[r][c]
                if entry:
                    term = pmul(acc, entry)
                    if sign_flips % 2:
                        term = pneg(term)
                    key = used | bit
                    nxt[key] = padd(nxt.get(key, {}), term)
        states = {k: v for k, v in nxt.items() if v}
    return states.get((1 << n) - 1, {})


# --- Fox-calculus Alexander polynomial -------------------------------------


def fox_alexander(crossing_tuples):
    """Symmetrized Alexander polynomial from Wirtinger data.

    Input: list of (under_in, under_out, over_in, over_out, sign) with arcs
    labeled consecutively along the knot.  Output: dict exponent -> int,
    symmetric, value +1 at T=1.  The empty list gives {0: 1}.
    """
    n = len(crossing_tuples)
    if n == 0:
        return {0: 1}
    m = 2 * n

    # Wirtinger generators are over-strands: arcs glued through over-passages
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (ui, uo, oi, oo, s) in crossing_tuples:
        ra, rb = find(oi), find(oo)
        if ra != rb:
            parent[rb] = ra
    strands = sorted({find(a) for a in range(m)})
    assert len(strands) == n, "a knot diagram has one strand per crossing"
    col = {s: i for i, s in enumerate(strands)}

    t = {1: 1}
    tinv = {-1: 1}
    one = {0: 1}

    rows = []
    for (ui, uo, oi, oo, s) in crossing_tuples:
        u, u2, g = col[find(ui)], col[find(uo)], col[find(oi)]
        row = [dict() for _ in range(n)]
        if s > 0:
            # relation x_g x_u x_g^-1 x_u2^-1
            row[g] = padd(row[g], padd(one, pneg(t)))
            row[u] = padd(row[u], t)
            row[u2] = padd(row[u2], pneg(one))
        else:
            # relation x_g^-1 x_u x_g x_u2^-1
            row[g] = padd(row[g], padd(one, pneg(tinv)))
            row[u] = padd(row[u], tinv)
            row[u2] = padd(row[u2], pneg(one))
        rows.append(row)

    reduced = [row[: n - 1] for row in rows[: n - 1]]
    det = subset_det(reduced)
    assert det, "Alexander determinant of a knot cannot vanish"

    lo, hi = min(det), max(det)
    assert (lo + hi) % 2 == 0, "cannot center an odd exponent span"
    shift = -(lo + hi) // 2
    det = {e + shift: c for e, c in det.items()}
    assert all(det.get(-e, 0) == c for e, c in det.items()), "not symmetric"
    at_one = sum(det.values())
    assert at_one in (1, -1), "knot Alexander polynomial has unit value at 1"
    if at_one == -1:
        det = pneg(det)
    return det


def fox_alexander_of_diagram(d):
    """Adapter: run the Fox oracle on a package diagram's raw tuples."""
    return fox_alexander(
        [(c.under_in, c.under_out, c.over_in, c.over_out, c.sign) for c in d.crossings]
    )


# --- definiteness by principal minors --------------------------------------


def fraction_det(rows):
    """Plain Gaussian elimination over Fractions."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for k in range(n):
        piv = None
        for r in range(k, n):
            if a[r][k]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
    return det


def minor_classify(rows):
    """Classify a symmetric integer matrix by principal minors.

    Returns "NegativeDefinite", "NegativeSemiDefinite", or "Other", matching
    the package's vocabulary: definite iff the leading minors of -M are all
    positive; semi-definite iff every principal minor of -M is >= 0.
    """
    n = len(rows)
    neg = [[-rows[i][j] for j in range(n)] for i in range(n)]
    definite = True
    for k in range(1, n + 1):
        lead = [row[:k] for row in neg[:k]]
        if fraction_det(lead) <= 0:
            definite = False
            break
    if definite:
        return "NegativeDefinite"
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if mask & (1 << i)]
        sub = [[neg[i][j] for j in idx] for i in idx]
        if fraction_det(sub) < 0:
            return "Other"
    return "NegativeSemiDefinite"
