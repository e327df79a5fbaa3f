"""Homological lifts of braid words to the double cover of the disk.

A braid on 2g+1 strands permutes 2g+1 marked points of a disk.  The double
cover of the disk branched over those points is a genus-g surface with one
boundary circle, and each half-twist generator lifts to a Dehn twist along
a curve of a 2g-chain.  On first homology the twist along the i-th chain
curve acts by the symplectic transvection x -> x + e<x, a_i> a_i, so every
braid word lifts to an integer symplectic matrix.  Characteristic
polynomials of such lifts are the Alexander polynomials of the fibred
links the words describe, and the Seifert form can be recovered from the
monodromy matrix by a linear solve.

All matrices here are tuples of tuples of Python ints (or Fractions in
the solver internals); sizes stay small, so exactness beats vectorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, VARIANTS, FamilySpec, family_braid
from .laurent import LaurentPoly, charpoly

IntMatrix = tuple[tuple[int, ...], ...]

QPoly = tuple[Fraction, ...]
# rational polynomials, coefficient of t^k at position k, no trailing zeros


class ConventionError(ValueError):
    """A solve produced a non-integral matrix under the adopted convention."""


def mat_identity(size: int) -> IntMatrix:
    return tuple(
        tuple(1 if i == j else 0 for j in range(size)) for i in range(size)
    )


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    size = len(a)
    inner = len(b)
    width = len(b[0]) if b else 0
    out = []
    for i in range(size):
        row = []
        for j in range(width):
            row.append(sum(a[i][k] * b[k][j] for k in range(inner)))
        out.append(tuple(row))
    return tuple(out)


def mat_transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a)) if a else ()


def mat_max_abs(a: IntMatrix) -> int:
    return max((abs(x) for row in a for x in row), default=0)


@dataclass(frozen=True)
class ChainSurface:
    """Genus-g surface with one boundary, homology spanned by a 2g-chain.

    Basis classes a_1 .. a_{2g} with <a_i, a_{i+1}> = 1 and all other
    pairings zero; the form is antisymmetric and unimodular.
    """

    genus: int

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError("genus must be at least 1")

    @property
    def rank(self) -> int:
        return 2 * self.genus

    @property
    def strands(self) -> int:
        return 2 * self.genus + 1

    def intersection_form(self) -> IntMatrix:
        k = self.rank
        form = [[0] * k for _ in range(k)]
        for i in range(k - 1):
            form[i][i + 1] = 1
            form[i + 1][i] = -1
        return tuple(tuple(row) for row in form)


def transvection(surface: ChainSurface, index: int, sign: int) -> IntMatrix:
    """Matrix of x -> x + sign * <x, a_index> a_index on the chain basis."""
    k = surface.rank
    if not 1 <= index <= k:
        raise ValueError(f"chain index {index} out of range 1..{k}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    form = surface.intersection_form()
    i = index - 1
    rows = []
    for r in range(k):
        row = list(1 if r == c else 0 for c in range(k))
        if r == i:
            # row picks up -sign * (J row i): M = I - sign * e_i e_i^T J
            for c in range(k):
                row[c] -= sign * form[i][c]
        rows.append(tuple(row))
    return tuple(rows)


def lift_homological(word: BraidWord, surface: ChainSurface) -> IntMatrix:
    """Ordered product of chain transvections; earlier letters act first."""
    if word.strands != surface.strands:
        raise ValueError(
            f"word on {word.strands} strands does not act on a genus "
            f"{surface.genus} chain surface ({surface.strands} strands)"
        )
    acc = mat_identity(surface.rank)
    for letter in word.letters:
        t = transvection(surface, abs(letter), 1 if letter > 0 else -1)
        acc = mat_mul(t, acc)
    return acc


def is_symplectic(matrix: IntMatrix, surface: ChainSurface) -> bool:
    form = surface.intersection_form()
    return mat_mul(mat_transpose(matrix), mat_mul(form, matrix)) == form


def charpoly_int(matrix: IntMatrix) -> LaurentPoly:
    return charpoly(matrix)


def fibred_alexander(
    spec: FamilySpec,
    enhanced_phi_word: BraidWord | None = None,
    allow_extension_fixture: bool = False,
) -> LaurentPoly:
    """Normalized characteristic polynomial of the lifted family word.

    For a fibred link the Alexander polynomial is the characteristic
    polynomial of the homological monodromy; that classical bridge is
    assumed, not re-derived here.
    """
    word = family_braid(
        spec.genus,
        spec.power,
        spec.variant,
        enhanced_phi_word=enhanced_phi_word,
        allow_extension_fixture=allow_extension_fixture,
    )
    surface = ChainSurface(spec.genus)
    lift = lift_homological(word, surface)
    return charpoly_int(lift).unit_normalized()


@dataclass(frozen=True)
class BranchedCoverData:
    base_chi: int
    branch_points: int
    chi: int
    boundary: int | None
    genus: int | None


def branched_cover_euler(base_chi: int, branch_points: int) -> BranchedCoverData:
    """Euler characteristic of a double cover branched over k points.

    chi(cover) = 2 chi(base) - k.  Over a disk the cover has one boundary
    circle when k is odd and two when k is even, which pins the genus;
    for other bases only chi is reported.
    """
    if branch_points < 1:
        # with no branch points the double cover is a disjoint pair of
        # copies of the base, and the connected-surface genus formula lies
        raise ValueError("branched cover needs at least one branch point")
    chi = 2 * base_chi - branch_points
    boundary: int | None = None
    genus: int | None = None
    if base_chi == 1:
        boundary = 1 if branch_points % 2 == 1 else 2
        genus = (2 - chi - boundary) // 2
    return BranchedCoverData(base_chi, branch_points, chi, boundary, genus)


def _fraction_matrix(matrix: IntMatrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in matrix]


def _solve_right(a: list[list[Fraction]], rhs: list[list[Fraction]]):
    """Solve X * a = rhs by Gaussian elimination on the transposed system."""
    size = len(a)
    # X a = rhs  <=>  a^T X^T = rhs^T
    at = [[a[r][c] for r in range(size)] for c in range(size)]
    bt = [[rhs[r][c] for r in range(size)] for c in range(size)]
    for col in range(size):
        pivot = next(
            (r for r in range(col, size) if at[r][col] != 0), None
        )
        if pivot is None:
            return None
        at[col], at[pivot] = at[pivot], at[col]
        bt[col], bt[pivot] = bt[pivot], bt[col]
        inv = 1 / at[col][col]
        at[col] = [x * inv for x in at[col]]
        bt[col] = [x * inv for x in bt[col]]
        for r in range(size):
            if r != col and at[r][col] != 0:
                f = at[r][col]
                at[r] = [x - f * y for x, y in zip(at[r], at[col])]
                bt[r] = [x - f * y for x, y in zip(bt[r], bt[col])]
    # rows of the reduced bt are columns of X
    return [[bt[c][r] for c in range(size)] for r in range(size)]


def seifert_from_monodromy(matrix: IntMatrix, surface: ChainSurface) -> IntMatrix:
    """Integer S with S^T = S*M and S - S^T = -J, from S(I - M) = -J.

    det(S - t S^T) then agrees with the characteristic polynomial of M up
    to units.  Requires det(M - I) != 0; a non-integral solution means the
    matrix did not come from this convention and is reported as an error.
    """
    size = surface.rank
    if len(matrix) != size:
        raise ValueError("matrix size does not match surface rank")
    form = surface.intersection_form()
    i_minus_m = [
        [Fraction(int(r == c) - matrix[r][c]) for c in range(size)]
        for r in range(size)
    ]
    rhs = [[-Fraction(x) for x in row] for row in _fraction_matrix(form)]
    solved = _solve_right(i_minus_m, rhs)
    if solved is None:
        raise ValueError("monodromy has 1 as an eigenvalue; no Seifert solve")
    out = []
    for row in solved:
        out_row = []
        for x in row:
            if x.denominator != 1:
                raise ConventionError(
                    "Seifert solve is non-integral; convention mismatch"
                )
            out_row.append(int(x))
        out.append(tuple(out_row))
    return tuple(out)


def _ptrim(coeffs: list[Fraction]) -> QPoly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _pdeg(p: QPoly) -> int:
    return len(p) - 1


def _padd(p: QPoly, q: QPoly) -> QPoly:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _ptrim(out)


def _pneg(p: QPoly) -> QPoly:
    return tuple(-c for c in p)


def _pmul(p: QPoly, q: QPoly) -> QPoly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _ptrim(out)


def _pdivmod(p: QPoly, q: QPoly) -> tuple[QPoly, QPoly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    dq = _pdeg(q)
    lead = q[-1]
    for k in range(len(rem) - 1, dq - 1, -1):
        if rem[k] == 0:
            continue
        f = rem[k] / lead
        quo[k - dq] = f
        for j in range(len(q)):
            rem[k - dq + j] -= f * q[j]
    return _ptrim(quo), _ptrim(rem)


def _pmonic(p: QPoly) -> QPoly:
    if not p:
        return p
    lead = p[-1]
    return tuple(c / lead for c in p)


def alexander_module_invariants(
    matrix: IntMatrix,
) -> tuple[QPoly, ...]:
    """Nonconstant invariant factors of tI - M over the rationals.

    Diagonalization by elementary polynomial row and column moves; the
    returned factors are monic, each divides the next, and their product
    is the characteristic polynomial up to the monic normalization.
    """
    size = len(matrix)
    work: list[list[QPoly]] = [
        [
            _ptrim(
                [Fraction(-matrix[r][c]), Fraction(1)]
                if r == c
                else [Fraction(-matrix[r][c])]
            )
            for c in range(size)
        ]
        for r in range(size)
    ]

    def nonzero_positions(top: int):
        for r in range(top, size):
            for c in range(top, size):
                if work[r][c]:
                    yield r, c

    factors: list[QPoly] = []
    for top in range(size):
        while True:
            best = None
            for r, c in nonzero_positions(top):
                if best is None or _pdeg(work[r][c]) < _pdeg(
                    work[best[0]][best[1]]
                ):
                    best = (r, c)
            if best is None:
                break
            br, bc = best
            work[top], work[br] = work[br], work[top]
            for row in work:
                row[top], row[bc] = row[bc], row[top]
            pivot = work[top][top]
            dirty = False
            for r in range(top + 1, size):
                if work[r][top]:
                    q, rem = _pdivmod(work[r][top], pivot)
                    if q:
                        for c in range(top, size):
                            work[r][c] = _padd(
                                work[r][c], _pneg(_pmul(q, work[top][c]))
                            )
                    if work[r][top]:
                        dirty = True
            for c in range(top + 1, size):
                if work[top][c]:
                    q, rem = _pdivmod(work[top][c], pivot)
                    if q:
                        for r in range(top, size):
                            work[r][c] = _padd(
                                work[r][c], _pneg(_pmul(q, work[r][top]))
                            )
                    if work[top][c]:
                        dirty = True
            if dirty:
                continue
            # pivot clears its row and column; make it divide the rest
            offender = None
            for r in range(top + 1, size):
                for c in range(top + 1, size):
                    if work[r][c]:
                        _, rem = _pdivmod(work[r][c], pivot)
                        if rem:
                            offender = r
                            break
                if offender is not None:
                    break
            if offender is None:
                break
            for c in range(top, size):
                work[top][c] = _padd(work[top][c], work[offender][c])
        if work[top][top]:
            factors.append(_pmonic(work[top][top]))
        else:
            factors.append(())
    return tuple(f for f in factors if f and _pdeg(f) >= 1)


def qpoly_from_laurent(poly: LaurentPoly) -> QPoly:
    """Monic rational form of an integer polynomial with offset 0."""
    if poly.is_zero():
        return ()
    if poly.offset < 0:
        raise ValueError("negative exponents have no polynomial form")
    coeffs = [Fraction(0)] * poly.offset + [Fraction(c) for c in poly.coeffs]
    return _pmonic(_ptrim(coeffs))


def growth_sequence(
    genus: int,
    powers: range,
    variant: str = "original",
) -> tuple[int, ...]:
    """Max-absolute-entry of the lifted family word for each power."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    surface = ChainSurface(genus)
    out = []
    for n in powers:
        word = family_braid(genus, n, variant)
        out.append(mat_max_abs(lift_homological(word, surface)))
    return tuple(out)
