"""Certification of two-multitwist mapping classes on chain configurations.

Two multicurves A and B that jointly fill a surface give a representation
of the group generated by their multitwists into PSL(2, R): with mu the
largest eigenvalue of N N^T (N the geometric intersection matrix), the
multitwists map to [[1, -s], [0, 1]] and [[1, 0], [s, 1]] where s^2 = mu.
A word in the twists is pseudo-Anosov exactly when its image is hyperbolic,
so the verdict reduces to comparing |trace| with 2.

The trace of any twist word is a polynomial in mu with integer
coefficients: matrices here keep even and odd parts in s separate, and the
diagonal is always even.  Parabolic cases are therefore decided exactly
(polynomial gcd plus Sturm root counting at mu), and the strict
inequalities are decided on a rational enclosure of mu that is refined
until the verdict clears the requested margin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, charpoly, count_roots_in, poly_gcd_q

IntMatrix = tuple[tuple[int, ...], ...]

MU_TOLERANCE = Fraction(1, 10**12)
CLASSIFY_MARGIN = Fraction(1, 10**9)


class MarginError(ArithmeticError):
    """A strict comparison could not be certified at the required margin."""


@dataclass(frozen=True)
class MulticurvePair:
    """Even- and odd-index halves of a curve system with their crossings.

    matrix[i][j] counts intersections of the i-th A-curve with the j-th
    B-curve; entries are nonnegative and the pair fills when the bipartite
    crossing graph is connected and the complement has no essential piece.
    """

    matrix: IntMatrix

    def __post_init__(self) -> None:
        if not self.matrix or not self.matrix[0]:
            raise ValueError("intersection matrix must be nonempty")
        widths = {len(row) for row in self.matrix}
        if len(widths) != 1:
            raise ValueError("ragged intersection matrix")
        if any(x < 0 for row in self.matrix for x in row):
            raise ValueError("intersection counts must be nonnegative")

    @property
    def size_a(self) -> int:
        return len(self.matrix)

    @property
    def size_b(self) -> int:
        return len(self.matrix[0])

    def is_connected(self) -> bool:
        """Connectivity of the bipartite graph of nonzero crossings."""
        a, b = self.size_a, self.size_b
        seen = {("a", 0)}
        stack = [("a", 0)]
        while stack:
            side, i = stack.pop()
            if side == "a":
                nbrs = [("b", j) for j in range(b) if self.matrix[i][j]]
            else:
                nbrs = [("a", j) for j in range(a) if self.matrix[j][i]]
            for node in nbrs:
                if node not in seen:
                    seen.add(node)
                    stack.append(node)
        return len(seen) == a + b


def chain_pair(genus: int, punctured: bool = True) -> MulticurvePair:
    """Even/odd split of the 2g-chain: curve 2i crosses curves 2i-1, 2i+1.

    The punctured flag does not change the crossing pattern; it is accepted
    so call sites can mirror the surface they have in mind.
    """
    if genus < 1:
        raise ValueError("genus must be at least 1")
    g = genus
    matrix = tuple(
        tuple(1 if j == i or j == i + 1 else 0 for j in range(g))
        for i in range(g)
    )
    return MulticurvePair(matrix)


def _gram(pair: MulticurvePair) -> IntMatrix:
    n = pair.matrix
    a, b = pair.size_a, pair.size_b
    return tuple(
        tuple(sum(n[i][k] * n[j][k] for k in range(b)) for j in range(a))
        for i in range(a)
    )


def _charpoly_coeffs(matrix: IntMatrix) -> list[Fraction]:
    poly = charpoly(matrix)
    out = [Fraction(0)] * poly.offset + [Fraction(c) for c in poly.coeffs]
    return out


def mu_enclosure(
    pair: MulticurvePair, tolerance: Fraction = MU_TOLERANCE
) -> tuple[Fraction, Fraction]:
    """Rational enclosure of the top eigenvalue of N N^T, width <= tolerance.

    The interval is bisected until it both meets the width target and
    isolates a single distinct root of the characteristic polynomial, so
    later exact tests can treat "root in enclosure" as "equals mu".
    """
    if all(x == 0 for row in pair.matrix for x in row):
        raise ValueError("zero intersection matrix has no top eigenvalue")
    gram = _gram(pair)
    coeffs = _charpoly_coeffs(gram)
    bound = Fraction(max(sum(abs(x) for x in row) for row in gram) + 1)
    lo, hi = Fraction(0), bound
    # peel off the largest root: shrink from above first
    while count_roots_in(coeffs, lo, hi) > 1 or hi - lo > tolerance:
        mid = (lo + hi) / 2
        if count_roots_in(coeffs, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def mu(pair: MulticurvePair) -> float:
    lo, hi = mu_enclosure(pair)
    return float((lo + hi) / 2)


TwistWord = tuple[tuple[str, int], ...]


def parse_twist_word(text: str) -> TwistWord:
    """Parse tokens like "A B- A+" into a two-multitwist word."""
    out = []
    for token in text.split():
        symbol = token[0].upper()
        if symbol not in ("A", "B"):
            raise ValueError(f"unknown twist symbol {token!r}")
        rest = token[1:]
        if rest in ("", "+"):
            exponent = 1
        elif rest == "-":
            exponent = -1
        else:
            raise ValueError(f"malformed twist token {token!r}")
        out.append((symbol, exponent))
    return tuple(out)


# 2x2 matrices over Z[mu] + Z[mu]s with s^2 = mu: each entry is a pair
# (even, odd) of integer polynomials in mu, standing for even + odd*s.
_Sym = tuple[LaurentPoly, LaurentPoly]
_SymMatrix = tuple[tuple[_Sym, _Sym], tuple[_Sym, _Sym]]

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()
_MU = LaurentPoly.t()


def _sym_mul(x: _Sym, y: _Sym) -> _Sym:
    (a, b), (c, d) = x, y
    return (a * c + _MU * (b * d), a * d + b * c)


def _sym_add(x: _Sym, y: _Sym) -> _Sym:
    return (x[0] + y[0], x[1] + y[1])


def _mat_mul(m: _SymMatrix, n: _SymMatrix) -> _SymMatrix:
    out = []
    for i in range(2):
        row = []
        for j in range(2):
            row.append(
                _sym_add(
                    _sym_mul(m[i][0], n[0][j]), _sym_mul(m[i][1], n[1][j])
                )
            )
        out.append(tuple(row))
    return tuple(out)


def _generator(symbol: str, exponent: int) -> _SymMatrix:
    s = (_ZERO, _ONE if exponent > 0 else -_ONE)
    neg_s = (_ZERO, -_ONE if exponent > 0 else _ONE)
    one = (_ONE, _ZERO)
    zero = (_ZERO, _ZERO)
    if symbol == "A":
        return ((one, neg_s), (zero, one))
    if symbol == "B":
        return ((one, zero), (s, one))
    raise ValueError(f"unknown twist symbol {symbol!r}")


def twist_matrix(word: TwistWord) -> _SymMatrix:
    acc: _SymMatrix = (
        ((_ONE, _ZERO), (_ZERO, _ZERO)),
        ((_ZERO, _ZERO), (_ONE, _ZERO)),
    )
    for symbol, exponent in word:
        acc = _mat_mul(_generator(symbol, exponent), acc)
    return acc


def trace_polynomial(word: TwistWord) -> LaurentPoly:
    """Trace of the represented word as an integer polynomial in mu.

    Diagonal entries of twist-word matrices are always even in s, so the
    trace never carries an s part.
    """
    if not word:
        raise ValueError("empty twist word has no classification")
    m = twist_matrix(word)
    tr = _sym_add(m[0][0], m[1][1])
    if not tr[1].is_zero():
        raise AssertionError("twist word trace acquired an odd part")
    return tr[0]


def _poly_coeffs(poly: LaurentPoly) -> list[Fraction]:
    return [Fraction(0)] * poly.offset + [Fraction(c) for c in poly.coeffs]


def _interval_eval(
    poly: LaurentPoly, lo: Fraction, hi: Fraction
) -> tuple[Fraction, Fraction]:
    acc_lo, acc_hi = Fraction(0), Fraction(0)
    for c in reversed(_poly_coeffs(poly)):
        cands = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(cands) + c, max(cands) + c
    return acc_lo, acc_hi


def _vanishes_at_mu(
    poly: LaurentPoly, pair: MulticurvePair, lo: Fraction, hi: Fraction
) -> bool:
    """Exact test of poly(mu) = 0 given an isolating enclosure of mu."""
    if poly.is_zero():
        return True
    gram = _gram(pair)
    common = poly_gcd_q(_poly_coeffs(poly), _charpoly_coeffs(gram))
    if len(common) <= 1:
        return False
    return count_roots_in(common, lo, hi) >= 1


@dataclass(frozen=True)
class Classification:
    kind: str  # "pseudo-anosov" | "parabolic" | "elliptic"
    trace: float
    dilatation: float | None


def classify(
    word: TwistWord,
    pair: MulticurvePair,
    margin: Fraction = CLASSIFY_MARGIN,
) -> Classification:
    """Thurston-Veech trichotomy for a word in the two multitwists.

    |trace| > 2 gives pseudo-Anosov with dilatation (|tr|+sqrt(tr^2-4))/2;
    |trace| = 2 parabolic (decided exactly); |trace| < 2 elliptic.  Strict
    verdicts must clear the margin, else MarginError.
    """
    tr = trace_polynomial(word)
    lo, hi = mu_enclosure(pair)
    if _vanishes_at_mu(tr - LaurentPoly.constant(2), pair, lo, hi) or (
        _vanishes_at_mu(tr + LaurentPoly.constant(2), pair, lo, hi)
    ):
        mid = (lo + hi) / 2
        return Classification("parabolic", float(tr.eval(mid)), None)
    for _ in range(8):
        tlo, thi = _interval_eval(tr, lo, hi)
        if tlo > 2 or thi < -2:
            mag_lo = max(tlo, -thi)  # lower bound for |trace|
            if mag_lo - 2 >= margin:
                mid = float((tlo + thi) / 2)
                mag = abs(mid)
                dil = (mag + (mag * mag - 4) ** 0.5) / 2
                return Classification("pseudo-anosov", mid, dil)
        if -2 < tlo and thi < 2:
            if tlo + 2 >= margin and 2 - thi >= margin:
                return Classification("elliptic", float((tlo + thi) / 2), None)
        # verdict too close to the boundary: refine the mu enclosure
        lo, hi = _refine(pair, lo, hi)
    raise MarginError(
        f"trace within {float(margin)} of the parabolic boundary"
    )


def _refine(
    pair: MulticurvePair, lo: Fraction, hi: Fraction
) -> tuple[Fraction, Fraction]:
    coeffs = _charpoly_coeffs(_gram(pair))
    for _ in range(40):
        mid = (lo + hi) / 2
        if count_roots_in(coeffs, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def complement_euler(genus: int, punctured: bool) -> int:
    """chi(surface) - chi(union of chain curves), the filling residue.

    The 2g-chain union is a 4-valent graph with 2g-1 vertices and twice
    that many edges.  Residue 0 on the once-punctured surface means the
    complement is a peripheral annulus; residue 1 on the closed surface
    means a disk.
    """
    if genus < 1:
        raise ValueError("genus must be at least 1")
    surface_chi = (1 if punctured else 2) - 2 * genus
    graph_chi = (2 * genus - 1) - 2 * (2 * genus - 1)
    return surface_chi - graph_chi


@dataclass(frozen=True)
class RibbonGraph:
    """Graph with a rotation system; half-edges 2k and 2k+1 form edge k.

    rotations lists, per vertex, the counterclockwise cyclic order of the
    incident half-edges; every half-edge appears exactly once overall.
    """

    edge_count: int
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = [h for cycle in self.rotations for h in cycle]
        if sorted(seen) != list(range(2 * self.edge_count)):
            raise ValueError("rotation system must list each half-edge once")

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)


def ribbon_faces(graph: RibbonGraph) -> int:
    """Number of boundary-traced faces; V - E + F is the closed-up chi."""
    succ = {}
    for cycle in graph.rotations:
        for idx, h in enumerate(cycle):
            succ[h] = cycle[(idx + 1) % len(cycle)]
    faces = 0
    seen: set[int] = set()
    for start in range(2 * graph.edge_count):
        if start in seen:
            continue
        faces += 1
        h = start
        while h not in seen:
            seen.add(h)
            h = succ[h ^ 1]
    return faces


def chain_graph_edges(genus: int) -> tuple[tuple[int, int], ...]:
    """Edges of the union of 2g chain curves on vertices 0..2g-2.

    Vertex i is the crossing of curves i+1 and i+2.  The two end curves
    contribute loops; every middle curve contributes a parallel pair of
    edges between consecutive crossings.
    """
    if genus < 1:
        raise ValueError("genus must be at least 1")
    v = 2 * genus - 1
    edges = [(0, 0)]
    for i in range(v - 1):
        edges.append((i, i + 1))
        edges.append((i, i + 1))
    edges.append((v - 1, v - 1))
    return tuple(edges)


def chain_rotation_search(genus: int) -> tuple[RibbonGraph, int] | None:
    """Search per-vertex rotations of the chain union for a one-face embedding.

    A one-face rotation realizes the closed-surface embedding whose
    complement is a disk; returns the first such ribbon graph and its face
    count, or None if the search space has no such rotation.
    """
    from itertools import permutations, product

    edges = chain_graph_edges(genus)
    v = 2 * genus - 1
    incident: list[list[int]] = [[] for _ in range(v)]
    for k, (a, b) in enumerate(edges):
        incident[a].append(2 * k)
        incident[b].append(2 * k + 1)
    options = []
    for vertex in range(v):
        half = incident[vertex]
        if len(half) != 4:
            raise AssertionError("chain union must be 4-valent")
        fixed = half[0]
        options.append(
            [
                (fixed,) + rest
                for rest in permutations(half[1:])
            ]
        )
    for choice in product(*options):
        graph = RibbonGraph(len(edges), tuple(choice))
        if ribbon_faces(graph) == 1:
            return graph, 1
    return None
