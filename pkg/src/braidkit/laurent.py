"""Exact integer Laurent polynomial arithmetic.

A Laurent polynomial is stored as an offset (the lowest exponent) together
with a dense tuple of integer coefficients.  All arithmetic is exact over the
integers; nothing here ever touches floating point.  The module also provides
exact determinants of Laurent polynomial matrices, which is what the Burau
and Seifert pipelines reduce to.

Determinants use Kronecker substitution: every entry is evaluated at t = 2**B
for a B sound against a minor-coefficient bound, the resulting integer matrix
is eliminated fraction-free (Bareiss), and the determinant polynomial is read
back off the final integer in balanced base-2**B digits.  This keeps the hot
loop inside CPython's big-integer multiply instead of per-coefficient Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial


def _trim(offset: int, coeffs: list[int]) -> tuple[int, tuple[int, ...]]:
    lo = 0
    hi = len(coeffs)
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    if lo == hi:
        return 0, ()
    return offset + lo, tuple(coeffs[lo:hi])


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial sum(coeffs[i] * t**(offset + i))."""

    offset: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        off, cs = _trim(self.offset, list(self.coeffs))
        object.__setattr__(self, "offset", off)
        object.__setattr__(self, "coeffs", cs)

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(0, (1,))

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return LaurentPoly(exponent, (coefficient,))

    @staticmethod
    def t() -> "LaurentPoly":
        return LaurentPoly(1, (1,))

    @staticmethod
    def constant(c: int) -> "LaurentPoly":
        return LaurentPoly(0, (c,))

    @staticmethod
    def from_coeffs(coeffs, offset: int = 0) -> "LaurentPoly":
        return LaurentPoly(offset, tuple(int(c) for c in coeffs))

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Highest exponent; -1 is reported for the zero polynomial."""
        if not self.coeffs:
            return -1
        return self.offset + len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        if not self.coeffs:
            return 0
        return self.offset

    def coefficient(self, exponent: int) -> int:
        i = exponent - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.offset - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset - lo + i] += c
        return LaurentPoly(lo, tuple(out))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero()
        a, b = self.coeffs, other.coeffs
        if min(len(a), len(b)) >= 32:
            return self._mul_kronecker(other)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return LaurentPoly(self.offset + other.offset, tuple(out))

    def _mul_kronecker(self, other: "LaurentPoly") -> "LaurentPoly":
        bound = (
            max(abs(c) for c in self.coeffs)
            * max(abs(c) for c in other.coeffs)
            * min(len(self.coeffs), len(other.coeffs))
        )
        bits = bound.bit_length() + 2
        prod = _pack(self.coeffs, bits) * _pack(other.coeffs, bits)
        out = _unpack(prod, bits)
        return LaurentPoly(self.offset + other.offset, tuple(out))

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.offset + k, self.coeffs)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Divide exactly, raising ValueError when the division leaves a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        rem = list(self.coeffs)
        div = list(divisor.coeffs)
        if len(rem) < len(div):
            raise ValueError("inexact Laurent division (degree too small)")
        qlen = len(rem) - len(div) + 1
        quot = [0] * qlen
        lead = div[-1]
        for k in range(qlen - 1, -1, -1):
            c = rem[k + len(div) - 1]
            if c % lead != 0:
                raise ValueError("inexact Laurent division (leading coefficient)")
            q = c // lead
            quot[k] = q
            if q:
                for i, d in enumerate(div):
                    rem[k + i] -= q * d
        if any(rem):
            raise ValueError("inexact Laurent division (nonzero remainder)")
        return LaurentPoly(self.offset - divisor.offset, tuple(quot))

    # -- evaluation -------------------------------------------------------

    def eval(self, value):
        """Evaluate at an int, Fraction, float or complex value."""
        if not self.coeffs:
            return 0 * value if not isinstance(value, int) else 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        if self.offset:
            acc = acc * value**self.offset
        return acc

    def eval_int(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        if self.offset == 0 or not self.coeffs:
            return acc
        if self.offset > 0:
            return acc * value**self.offset
        if value == 1:
            return acc
        if value == -1:
            return acc if self.offset % 2 == 0 else -acc
        raise ValueError("negative exponents need value in {1, -1} for an integer result")

    # -- normal forms and comparisons ------------------------------------

    def unit_normalized(self) -> "LaurentPoly":
        """Multiply by +-t**k so the lowest exponent is 0 and the constant term positive."""
        if not self.coeffs:
            return LaurentPoly.zero()
        sign = 1 if self.coeffs[0] > 0 else -1
        return LaurentPoly(0, tuple(sign * c for c in self.coeffs))

    def equals_up_to_units(self, other: "LaurentPoly") -> bool:
        return self.unit_normalized() == other.unit_normalized()

    def is_palindromic(self) -> bool:
        """True when t**d * p(1/t) == p(t) up to the monomial shift."""
        return self.coeffs == tuple(reversed(self.coeffs))

    def reciprocal(self) -> "LaurentPoly":
        """p(1/t), as a Laurent polynomial."""
        if not self.coeffs:
            return self
        return LaurentPoly(-(self.offset + len(self.coeffs) - 1), tuple(reversed(self.coeffs)))

    # -- serialization ----------------------------------------------------

    def to_pair(self) -> tuple[int, list[int]]:
        return (self.offset, list(self.coeffs))

    @staticmethod
    def from_pair(pair) -> "LaurentPoly":
        offset, coeffs = pair
        return LaurentPoly(int(offset), tuple(int(c) for c in coeffs))

    def to_text(self) -> str:
        return f"{self.offset}|" + " ".join(str(c) for c in self.coeffs)

    @staticmethod
    def from_text(text: str) -> "LaurentPoly":
        head, _, tail = text.partition("|")
        coeffs = tuple(int(tok) for tok in tail.split())
        return LaurentPoly(int(head), coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.offset + i
            if e == 0:
                parts.append(f"{c:+d}")
            elif e == 1:
                parts.append(f"{c:+d}*t")
            else:
                parts.append(f"{c:+d}*t^{e}")
        return " ".join(parts)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
T = LaurentPoly.t()


def _pack(coeffs, bits: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc << bits) + c
    return acc


def _unpack(value: int, bits: int) -> list[int]:
    half = 1 << (bits - 1)
    mask = (1 << bits) - 1
    out = []
    while value:
        d = ((value + half) & mask) - half
        out.append(d)
        value = (value - d) >> bits
    return out


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix; destroys its argument."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def det_laurent(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    shift = min((p.offset for row in matrix for p in row if not p.is_zero()), default=0)
    c_max = 1
    terms_max = 1
    deg_max = 0
    for row in matrix:
        for p in row:
            if p.is_zero():
                continue
            c_max = max(c_max, max(abs(c) for c in p.coeffs))
            terms_max = max(terms_max, len(p.coeffs))
            deg_max = max(deg_max, p.degree - shift)
    # any k x k minor coefficient is bounded by n! * c_max**n * terms_max**(n-1)
    bound = factorial(n) * c_max**n * terms_max ** (n - 1)
    bits = bound.bit_length() + 2
    packed = [
        [_pack(_aligned(p, shift, deg_max), bits) for p in row]
        for row in matrix
    ]
    det_value = _bareiss_det(packed)
    coeffs = _unpack(det_value, bits)
    return LaurentPoly(n * shift, tuple(coeffs))


def _aligned(p: LaurentPoly, shift: int, deg_max: int) -> list[int]:
    out = [0] * (deg_max + 1)
    for i, c in enumerate(p.coeffs):
        out[p.offset - shift + i] = c
    return out


def charpoly(matrix) -> LaurentPoly:
    """Characteristic polynomial det(t*I - M) of an integer matrix, exactly."""
    n = len(matrix)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            m = int(matrix[i][j])
            if i == j:
                row.append(LaurentPoly(0, (-m, 1)))
            else:
                row.append(LaurentPoly.constant(-m))
        entries.append(row)
    return det_laurent(entries)


def poly_gcd_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd of two rational coefficient polynomials (dense, ascending)."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, trim(_poly_mod(a, b))
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    r = list(a)
    while len(r) >= len(b) and any(r):
        if r[-1] == 0:
            r.pop()
            continue
        q = r[-1] / b[-1]
        shift = len(r) - len(b)
        for i, c in enumerate(b):
            r[shift + i] -= q * c
        r.pop()
    return r


def sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    """Sturm chain of a squarefree-or-not rational polynomial (dense, ascending)."""

    def trim(q):
        while q and q[-1] == 0:
            q.pop()
        return q

    p0 = trim([Fraction(c) for c in p])
    if not p0:
        return []
    p1 = trim([Fraction(i * c) for i, c in enumerate(p0)][1:])
    chain = [p0]
    if p1:
        chain.append(p1)
    while len(chain[-1]) > 1:
        rem = trim([-c for c in _poly_mod(chain[-2], chain[-1])])
        if not rem:
            break
        chain.append(rem)
    return chain


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for q in chain:
        acc = Fraction(0)
        for c in reversed(q):
            acc = acc * x + c
        if acc != 0:
            signs.append(1 if acc > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(p: list[Fraction], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    chain = sturm_chain(p)
    if not chain:
        raise ValueError("root counting for the zero polynomial")
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)
