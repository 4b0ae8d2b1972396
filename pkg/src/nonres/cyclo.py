"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are residues modulo the N-th cyclotomic polynomial Phi_N (a field,
which is what makes rank well-defined), represented by coefficient vectors
of length phi(N) over Fraction.  Levels above 210 are rejected: phi(N)
controls the cost and the engine only ever needs desk-scale monodromy.
"""

from fractions import Fraction

from . import _kernels

__all__ = [
    "MAX_LEVEL",
    "cyclotomic_polynomial",
    "CycloField",
    "CycloElement",
    "cyclo_rank",
]

MAX_LEVEL = 210

_phi_cache = {}


def _poly_divmod_int(num, den):
    # den monic with integer coefficients, so quotient and remainder are integral
    num = list(num)
    dd = len(den) - 1
    q = [0] * max(len(num) - dd, 0)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    while num and num[-1] == 0:
        num.pop()
    return q, num


def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, low degree first, monic over the integers."""
    if n < 1:
        raise ValueError("level must be positive")
    if n in _phi_cache:
        return _phi_cache[n]
    if n == 1:
        poly = (-1, 1)
    else:
        num = [0] * (n + 1)
        num[0] = -1
        num[n] = 1
        for d in range(1, n):
            if n % d == 0:
                num, rem = _poly_divmod_int(num, list(cyclotomic_polynomial(d)))
                if rem:
                    raise ArithmeticError("cyclotomic division left a remainder")
        poly = tuple(num)
    _phi_cache[n] = poly
    return poly


class CycloField:
    """Q[x]/(Phi_N), with precomputed reduction rows for the multiply kernel."""

    _cache = {}

    def __new__(cls, level):
        level = int(level)
        if level in cls._cache:
            return cls._cache[level]
        if level < 1:
            raise ValueError("level must be positive")
        if level > MAX_LEVEL:
            raise ValueError(f"cyclotomic level {level} exceeds the cap {MAX_LEVEL}")
        self = super().__new__(cls)
        self.level = level
        phi = cyclotomic_polynomial(level)
        self.modulus = phi
        self.degree = len(phi) - 1
        deg = self.degree
        # red_rows[k - deg] = x**k mod Phi_N for deg <= k <= 2*deg - 2
        base = [-phi[c] for c in range(deg)]
        rows = [list(base)]
        for _ in range(deg - 2):
            prev = rows[-1]
            carry = prev[deg - 1]
            nxt = [0] + prev[: deg - 1]
            if carry:
                for c in range(deg):
                    nxt[c] += carry * base[c]
            rows.append(nxt)
        self.red_rows = tuple(tuple(r) for r in rows)
        cls._cache[level] = self
        return self

    def element(self, coeffs):
        """Reduce an arbitrary coefficient sequence into the field."""
        work = [Fraction(c) for c in coeffs]
        deg = self.degree
        phi = self.modulus
        for k in range(len(work) - 1, deg - 1, -1):
            c = work[k]
            if c:
                for j in range(deg):
                    work[k - deg + j] -= c * phi[j]
            work[k] = Fraction(0)
        work = work[:deg]
        work.extend([Fraction(0)] * (deg - len(work)))
        return CycloElement(self, tuple(work))

    def zero(self):
        return CycloElement(self, (Fraction(0),) * self.degree)

    def one(self):
        return self.from_rational(1)

    def from_rational(self, q):
        coeffs = [Fraction(q)] + [Fraction(0)] * (self.degree - 1)
        return CycloElement(self, tuple(coeffs))

    def zeta(self, power=1):
        """zeta_N**power as a field element (power may be negative)."""
        k = power % self.level
        return self.element([0] * k + [1])

    def __repr__(self):
        return f"CycloField({self.level})"


class CycloElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    @property
    def level(self):
        return self.field.level

    def _match(self, other):
        if isinstance(other, CycloElement):
            if other.field is not self.field:
                raise ValueError(
                    f"mixed cyclotomic levels {self.level} and {other.level}"
                )
            return other
        return self.field.from_rational(other)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CycloElement):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_rational(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.level, self.coeffs))

    def __add__(self, other):
        other = self._match(other)
        return CycloElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._match(other)
        return CycloElement(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return self._match(other) - self

    def __mul__(self, other):
        other = self._match(other)
        out = _kernels.poly_mul_reduce(
            list(self.coeffs), list(other.coeffs), self.field.red_rows, self.field.degree
        )
        return CycloElement(self.field, tuple(Fraction(c) for c in out))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm.

        Phi_N is irreducible over Q, so every nonzero residue is a unit.
        """
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        # extended gcd of self against the modulus in Q[x]
        r0 = [Fraction(c) for c in self.field.modulus]
        r1 = list(self.coeffs)
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def polysub(a, b):
            out = list(a) + [Fraction(0)] * (len(b) - len(a))
            for i, c in enumerate(b):
                out[i] -= c
            while out and out[-1] == 0:
                out.pop()
            return out

        # invariant: s_for_ri * self == ri  (mod Phi_N)
        s_for_r0, s_for_r1 = s0, s1
        while r1:
            rem = list(r0)
            d = len(r1) - 1
            lead = r1[-1]
            qpoly = [Fraction(0)] * max(len(rem) - d, 0)
            for k in range(len(rem) - 1, d - 1, -1):
                c = rem[k]
                if c:
                    f = c / lead
                    qpoly[k - d] = f
                    for j in range(d + 1):
                        rem[k - d + j] -= f * r1[j]
            while rem and rem[-1] == 0:
                rem.pop()
            # s_new = s_for_r0 - q * s_for_r1
            prodqs = [Fraction(0)] * (len(qpoly) + len(s_for_r1) - 1 if qpoly and s_for_r1 else 0)
            for i, qc in enumerate(qpoly):
                if qc:
                    for j, sc in enumerate(s_for_r1):
                        prodqs[i + j] += qc * sc
            s_new = polysub(s_for_r0, prodqs)
            r0, r1 = r1, rem
            s_for_r0, s_for_r1 = s_for_r1, s_new
        # r0 is now a nonzero constant gcd (times a unit)
        if len(r0) != 1:
            raise ArithmeticError("modulus not coprime to element")
        c = r0[0]
        inv_coeffs = [x / c for x in s_for_r0]
        return self.field.element(inv_coeffs)

    def __truediv__(self, other):
        other = self._match(other)
        return self * other.inverse()

    def __repr__(self):
        return f"Cyclo({self.level};{[str(c) for c in self.coeffs]})"


def cyclo_rank(rows, level=None):
    """Rank of a matrix of CycloElements over Q(zeta_N).

    Exact Gaussian elimination in the field; pivots are the first nonzero
    entry in column order.  Mixed levels raise ValueError.
    """
    matrix = [list(r) for r in rows]
    if not matrix or not matrix[0]:
        return 0
    field = None
    for row in matrix:
        for x in row:
            if not isinstance(x, CycloElement):
                raise ValueError("cyclo_rank expects CycloElement entries")
            if field is None:
                field = x.field
            elif x.field is not field:
                raise ValueError(
                    f"mixed cyclotomic levels {field.level} and {x.level}"
                )
    if level is not None and field.level != level:
        raise ValueError(f"matrix level {field.level} does not match {level}")
    m = len(matrix)
    n = len(matrix[0])
    if any(len(r) != n for r in matrix):
        raise ValueError("ragged matrix")
    rank = 0
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for r in range(rank, m):
            if matrix[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        matrix[rank], matrix[piv] = matrix[piv], matrix[rank]
        inv = matrix[rank][col].inverse()
        top = matrix[rank]
        for r in range(rank + 1, m):
            f = matrix[r][col]
            if f:
                factor = f * inv
                row = matrix[r]
                for c in range(col, n):
                    row[c] = row[c] - factor * top[c]
        rank += 1
    return rank
