"""Homological monodromy: transvection lifts, covers, Seifert solves, modules."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from braidkit.braid import BraidWord, FamilySpec, family_braid
from braidkit.coverlift import (
    ChainSurface,
    alexander_module_invariants,
    branched_cover_euler,
    charpoly_int,
    fibred_alexander,
    growth_sequence,
    is_symplectic,
    lift_homological,
    mat_identity,
    mat_max_abs,
    mat_mul,
    mat_transpose,
    qpoly_from_laurent,
    seifert_from_monodromy,
    transvection,
)
from braidkit.invariants import SeifertMatrix, alexander_from_seifert


def small_words(genus=2, max_len=8):
    n = 2 * genus + 1
    letter = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_len).map(
        lambda ls: BraidWord(n, tuple(ls))
    )


# -- surface and transvections -------------------------------------------


def test_chain_surface_shape():
    s = ChainSurface(3)
    assert s.rank == 6
    assert s.strands == 7
    with pytest.raises(ValueError):
        ChainSurface(0)


def test_intersection_form_is_chain_symplectic():
    form = ChainSurface(2).intersection_form()
    assert form == (
        (0, 1, 0, 0),
        (-1, 0, 1, 0),
        (0, -1, 0, 1),
        (0, 0, -1, 0),
    )


def test_transvection_matrices():
    s = ChainSurface(2)
    assert transvection(s, 1, 1)[0] == (1, -1, 0, 0)
    assert transvection(s, 1, -1)[0] == (1, 1, 0, 0)
    # opposite signs cancel
    assert (
        mat_mul(transvection(s, 2, 1), transvection(s, 2, -1))
        == mat_identity(4)
    )
    with pytest.raises(ValueError):
        transvection(s, 5, 1)
    with pytest.raises(ValueError):
        transvection(s, 1, 0)


def test_transvections_are_symplectic():
    s = ChainSurface(3)
    for i in range(1, 7):
        for sign in (1, -1):
            assert is_symplectic(transvection(s, i, sign), s)


def test_lift_respects_braid_relations():
    s = ChainSurface(2)
    assert lift_homological(BraidWord(5, (1, 2, 1)), s) == lift_homological(
        BraidWord(5, (2, 1, 2)), s
    )
    assert lift_homological(BraidWord(5, (1, 3)), s) == lift_homological(
        BraidWord(5, (3, 1)), s
    )


def test_lift_known_values():
    m = lift_homological(BraidWord(3, (2, -1)), ChainSurface(1))
    assert m == ((2, 1), (1, 1))
    assert charpoly_int(m).to_text() == "0|1 -3 1"
    trefoil_monodromy = lift_homological(BraidWord(3, (1, 2)), ChainSurface(1))
    assert charpoly_int(trefoil_monodromy).to_text() == "0|1 -1 1"


def test_lift_strand_mismatch():
    with pytest.raises(ValueError):
        lift_homological(BraidWord(4, (1,)), ChainSurface(2))


@settings(max_examples=60, deadline=None)
@given(small_words())
def test_lifts_are_symplectic(w):
    s = ChainSurface(2)
    m = lift_homological(w, s)
    assert is_symplectic(m, s)
    inv = lift_homological(w.inverse(), s)
    assert mat_mul(inv, m) == mat_identity(4)


# -- fibred Alexander ----------------------------------------------------


def test_fibred_alexander_original():
    assert fibred_alexander(FamilySpec(1, 0)).to_text() == "0|1 -3 1"
    assert fibred_alexander(FamilySpec(2, 0)).to_text() == "0|1 -7 13 -7 1"
    assert abs(fibred_alexander(FamilySpec(2, 0)).eval_int(-1)) == 29
    # the genus 1 family is constant in the power
    assert fibred_alexander(FamilySpec(1, 6)) == fibred_alexander(
        FamilySpec(1, 0)
    )


def test_fibred_alexander_enhanced_invariance():
    reference = fibred_alexander(FamilySpec(2, 0, "enhanced"))
    assert reference.to_text() == "0|1 -1 1 -1 1"
    for n in (1, 2, 3):
        assert fibred_alexander(FamilySpec(2, n, "enhanced")) == reference


def test_enhanced_stirring_word_lifts_trivially():
    from braidkit.braid import enhanced_phi

    lift = lift_homological(enhanced_phi(2), ChainSurface(2))
    assert lift == mat_identity(4)


def test_fibred_degree_is_twice_genus():
    for g in (1, 2, 3, 4):
        poly = fibred_alexander(FamilySpec(g, 1))
        assert poly.degree == 2 * g
        assert poly.is_palindromic()


# -- branched covers -----------------------------------------------------


def test_branched_cover_over_disk():
    for g in (1, 2, 5, 64):
        data = branched_cover_euler(1, 2 * g + 1)
        assert data.chi == 1 - 2 * g
        assert data.boundary == 1
        assert data.genus == g
    data = branched_cover_euler(1, 3)
    assert data.genus == 1 and data.boundary == 1


def test_branched_cover_even_points():
    data = branched_cover_euler(1, 2)
    assert data.chi == 0 and data.boundary == 2 and data.genus == 0
    data = branched_cover_euler(1, 4)
    assert data.genus == 1 and data.boundary == 2


def test_branched_cover_other_bases():
    # over a sphere only chi is defined by this bookkeeping
    data = branched_cover_euler(2, 4)
    assert data.chi == 0
    assert data.boundary is None and data.genus is None
    with pytest.raises(ValueError):
        branched_cover_euler(1, 0)
    with pytest.raises(ValueError):
        branched_cover_euler(1, -2)


# -- Seifert solve -------------------------------------------------------


def test_seifert_from_trefoil_monodromy():
    s = ChainSurface(1)
    m = lift_homological(BraidWord(3, (1, 2)), s)
    v = seifert_from_monodromy(m, s)
    assert v == ((-1, 0), (1, -1))
    sym = SeifertMatrix(v).symmetrized()
    assert sym == ((-2, 1), (1, -2))  # negative definite: positive fibred knot


def test_seifert_solve_identities():
    # S - S^T = -J and S^T = S M, the defining relations of the solve
    for g in (1, 2, 3):
        surface = ChainSurface(g)
        m = lift_homological(family_braid(g, 1), surface)
        v = seifert_from_monodromy(m, surface)
        vt = tuple(map(tuple, zip(*v)))
        j = surface.intersection_form()
        assert all(
            v[i][k] - vt[i][k] == -j[i][k]
            for i in range(2 * g)
            for k in range(2 * g)
        )
        assert mat_mul(v, m) == mat_transpose(v)


def test_seifert_solve_round_trips_charpoly():
    for g in (1, 2, 3, 4):
        surface = ChainSurface(g)
        m = lift_homological(family_braid(g, 2), surface)
        v = seifert_from_monodromy(m, surface)
        assert alexander_from_seifert(SeifertMatrix(v)).equals_up_to_units(
            charpoly_int(m)
        )


def test_seifert_solve_rejects_unit_eigenvalue():
    with pytest.raises(ValueError):
        seifert_from_monodromy(mat_identity(2), ChainSurface(1))


# -- Alexander module ----------------------------------------------------


def F(x):
    return Fraction(x)


def test_module_invariants_identity():
    assert alexander_module_invariants(((1, 0), (0, 1))) == (
        (F(-1), F(1)),
        (F(-1), F(1)),
    )


def test_module_invariants_single_factor():
    m = lift_homological(family_braid(2, 0, "enhanced"), ChainSurface(2))
    factors = alexander_module_invariants(m)
    assert len(factors) == 1
    assert factors[0] == qpoly_from_laurent(charpoly_int(m))


def _qp_mul(p, q):
    out = [F(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _qp_divides(p, q):
    # does p divide q over the rationals
    r = list(q)
    while len(r) >= len(p) and any(r):
        if r[-1] == 0:
            r.pop()
            continue
        c = r[-1] / p[-1]
        shift = len(r) - len(p)
        for i, a in enumerate(p):
            r[shift + i] -= c * a
        r.pop()
    return not any(r)


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-3, 3), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
def test_module_invariants_multiply_to_charpoly(m):
    matrix = tuple(tuple(row) for row in m)
    factors = alexander_module_invariants(matrix)
    product = (F(1),)
    for f in factors:
        assert f[-1] == 1  # monic
        product = _qp_mul(product, f)
    assert product == qpoly_from_laurent(charpoly_int(matrix))
    for a, b in zip(factors, factors[1:]):
        assert _qp_divides(a, b)


# -- growth proxy --------------------------------------------------------


def test_growth_sequence_frozen_values():
    assert growth_sequence(2, range(0, 6)) == (2, 4, 31, 238, 1678, 11603)


def test_growth_strictly_increasing_from_two():
    seq = growth_sequence(2, range(2, 8))
    assert all(a < b for a, b in zip(seq, seq[1:]))


def test_mat_max_abs():
    assert mat_max_abs(((1, -9), (3, 2))) == 9
    assert mat_max_abs(mat_identity(2)) == 1
