"""Exact arithmetic kernel: Laurent polynomials over Z and integer quadratic forms.

Everything in this module is exact.  Laurent polynomials are sparse maps
exponent -> integer coefficient, determinants of Laurent matrices are computed
by fraction-free (Bareiss) elimination whose intermediate divisions are exact
in Z[T, T^-1], and signatures of symmetric integer matrices come from a
Sylvester inertia computation over the rationals with a documented
deterministic pivot strategy.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class NotUnimodular(ValueError):
    """A Seifert pairing whose antisymmetrization fails det(V - V^T) = +/-1."""

    def __init__(self, determinant):
        self.determinant = determinant
        super().__init__(determinant)

    def __str__(self):
        return "det(V - V^T) = %s, expected +1 or -1" % (self.determinant,)


class SingularForm(ValueError):
    """A symmetric bilinear form with nontrivial radical has no signature here."""

    def __init__(self, nullity):
        self.nullity = nullity
        super().__init__(nullity)

    def __str__(self):
        return "symmetric form is singular (nullity %d)" % self.nullity


class LaurentPoly:
    """A Laurent polynomial with integer coefficients, stored sparsely.

    The representation is a dict exponent -> coefficient with no zero values.
    Instances are immutable in spirit: all arithmetic returns new objects.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for e, c in coeffs.items():
                if not isinstance(e, int) or not isinstance(c, int):
                    raise TypeError("exponents and coefficients must be int")
                if c != 0:
                    data[e] = c
        self.coeffs = data

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by T^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute T -> T^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponent range")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponent range")
        return max(self.coeffs)

    def degree_span(self) -> int:
        """max exponent minus min exponent; 0 for monomials and for zero."""
        if not self.coeffs:
            return 0
        return self.max_exp() - self.min_exp()

    def coeff(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def evaluate(self, t: int) -> Fraction:
        """Evaluate at a nonzero integer, exactly."""
        if t == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        acc = Fraction(0)
        for e, c in self.coeffs.items():
            acc += Fraction(c) * (Fraction(t) ** e)
        return acc

    def second_derivative_at_one(self) -> int:
        # (T^e)'' evaluated at T = 1 is e(e-1).
        return sum(c * e * (e - 1) for e, c in self.coeffs.items())

    def is_symmetric(self) -> bool:
        return self.coeffs == self.mirror().coeffs

    def __repr__(self):
        return "LaurentPoly(%r)" % (dict(sorted(self.coeffs.items())),)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "T" if e == 1 else ("T^%d" % e if e > 0 else "T^(%d)" % e)
                body = var if mag == 1 else "%d*%s" % (mag, var)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text


def _divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division in Z[T, T^-1]; raises ArithmeticError if not exact.

    Both arguments are shifted into ordinary polynomials, divided by long
    division over Q, and the quotient is checked to be integral with zero
    remainder.  Bareiss elimination only ever requests divisions that are
    exact in the ring, so a failure here indicates a bug upstream.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero()
    ns, ds = num.min_exp(), den.min_exp()
    # work with plain polynomial coefficient lists
    ncof = [Fraction(num.coeff(e + ns)) for e in range(num.max_exp() - ns + 1)]
    dcof = [Fraction(den.coeff(e + ds)) for e in range(den.max_exp() - ds + 1)]
    if len(ncof) < len(dcof):
        raise ArithmeticError("inexact Laurent division (degree)")
    q = [Fraction(0)] * (len(ncof) - len(dcof) + 1)
    rem = list(ncof)
    lead = dcof[-1]
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + len(dcof) - 1] / lead
        q[k] = c
        if c:
            for j, dc in enumerate(dcof):
                rem[k + j] -= c * dc
    if any(rem):
        raise ArithmeticError("inexact Laurent division (remainder)")
    out = {}
    for k, c in enumerate(q):
        if c:
            if c.denominator != 1:
                raise ArithmeticError("inexact Laurent division (fraction)")
            out[k + ns - ds] = int(c)
    return LaurentPoly(out)


def det_laurent(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a square matrix over Z[T, T^-1].

    Fraction-free Bareiss elimination with row pivoting: divisions by the
    previous pivot are exact in the ring, which is asserted.  The empty 0x0
    matrix has determinant 1.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return LaurentPoly.one()
    a = [[LaurentPoly(dict(x.coeffs)) for x in row] for row in matrix]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = None
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                return LaurentPoly.zero()
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = _divide_exact(num, prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    result = a[n - 1][n - 1]
    if sign < 0:
        result = -result
    return result


class IntMatrix:
    """A square integer matrix with light validation."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix is not square")
            for x in r:
                if not isinstance(x, int):
                    raise TypeError("entries must be int")
        self.n = n
        self.rows = rows

    def __getitem__(self, idx):
        return self.rows[idx]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.rows[j][i] for j in range(self.n)] for i in range(self.n)])

    def add(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return IntMatrix(
            [
                [self.rows[i][j] + other.rows[i][j] for j in range(self.n)]
                for i in range(self.n)
            ]
        )

    def sub(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return IntMatrix(
            [
                [self.rows[i][j] - other.rows[i][j] for j in range(self.n)]
                for i in range(self.n)
            ]
        )

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def __repr__(self):
        return "IntMatrix(%r)" % (self.rows,)


def inertia(matrix: IntMatrix) -> tuple[int, int, int]:
    """Sylvester inertia (n_plus, n_minus, n_zero) of a symmetric matrix.

    Symmetric elimination over Q with a deterministic pivot order:

    1. if some active diagonal entry is nonzero, take the one with the
       smallest index, symmetrically swap it into the leading position and
       eliminate; its sign is counted;
    2. otherwise, if some active off-diagonal entry is nonzero, take the
       lexicographically smallest (i, j), swap the pair into the two leading
       positions and eliminate the resulting hyperbolic 2x2 block, counting
       one positive and one negative eigenvalue;
    3. otherwise the remaining block is zero and contributes nullity.
    """
    if not matrix.is_symmetric():
        raise ValueError("inertia requires a symmetric matrix")
    n = matrix.n
    a = [[Fraction(x) for x in row] for row in matrix.rows]

    def swap(p, q):
        if p == q:
            return
        a[p], a[q] = a[q], a[p]
        for row in a:
            row[p], row[q] = row[q], row[p]

    pos = neg = zero = 0
    k = 0
    while k < n:
        diag_idx = None
        for i in range(k, n):
            if a[i][i] != 0:
                diag_idx = i
                break
        if diag_idx is not None:
            swap(k, diag_idx)
            piv = a[k][k]
            if piv > 0:
                pos += 1
            else:
                neg += 1
            for i in range(k + 1, n):
                f = a[i][k] / piv
                if f:
                    for j in range(k, n):
                        a[i][j] -= f * a[k][j]
            for i in range(k + 1, n):
                a[k][i] = Fraction(0)
                a[i][k] = Fraction(0)
            k += 1
            continue
        off = None
        for i in range(k, n):
            for j in range(i + 1, n):
                if a[i][j] != 0:
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            zero += n - k
            break
        i, j = off
        swap(k, i)
        # careful: if j was k it has moved to position i under the swap
        if j == k:
            j = i
        swap(k + 1, j)
        b = a[k][k + 1]
        assert b != 0 and a[k][k] == 0 and a[k + 1][k + 1] == 0
        # block [[0, b], [b, 0]]: one positive, one negative eigenvalue
        pos += 1
        neg += 1
        for i2 in range(k + 2, n):
            u, v = a[i2][k], a[i2][k + 1]
            if u == 0 and v == 0:
                continue
            # subtract (v/b) * row_k + (u/b) * row_{k+1}
            fu, fv = v / b, u / b
            for j2 in range(k, n):
                a[i2][j2] -= fu * a[k][j2] + fv * a[k + 1][j2]
        for i2 in range(k + 2, n):
            a[k][i2] = Fraction(0)
            a[k + 1][i2] = Fraction(0)
            a[i2][k] = Fraction(0)
            a[i2][k + 1] = Fraction(0)
        k += 2
    assert pos + neg + zero == n
    return pos, neg, zero


def symmetric_signature(matrix: IntMatrix) -> int:
    """Signature of a nonsingular symmetric integer matrix.

    Raises SingularForm when the form has a nontrivial radical.
    """
    pos, neg, zero = inertia(matrix)
    if zero:
        raise SingularForm(zero)
    return pos - neg


