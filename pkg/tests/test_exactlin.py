from fractions import Fraction as F

import pytest
import sympy
from helpers import naive_rank
from hypothesis import given
from hypothesis import strategies as st

from scrollinterp.errors import FieldMismatchError, PreconditionError
from scrollinterp.exactlin import (
    GF,
    QQ,
    Matrix,
    ModP,
    Poly2,
    canonical_vector,
    gcd_all,
    kernel_rows,
    parse_field,
    poly_det,
    poly_gcd,
    poly_roots,
    rank_rows,
    rref_rows,
)

small = st.integers(-9, 9)
matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
)


def test_parse_field():
    assert parse_field("Q") is QQ
    assert parse_field("Fp:101") == GF(101)
    for bad in ("Fp:100", "Fp:x", "R", "Fp:1"):
        with pytest.raises(PreconditionError):
            parse_field(bad)


def test_modp_arithmetic():
    F7 = GF(7)
    a, b = F7(3), F7(5)
    assert a + b == F7(1) and a * b == F7(1) and a / b == F7(3 * 3)
    assert -a == F7(4) and a**6 == F7(1)
    with pytest.raises(ZeroDivisionError):
        a / F7(0)
    with pytest.raises(FieldMismatchError):
        a + GF(11)(1)
    with pytest.raises(FieldMismatchError):
        a + F(1, 2)


def test_canonical_vector():
    assert canonical_vector([F(2, 3), F(-4, 3), 0], QQ) == (1, -2, 0)
    assert canonical_vector([0, -6, 4], QQ) == (0, 3, -2)
    F7 = GF(7)
    assert canonical_vector([F7(3), F7(1)], F7) == (F7(1), F7(5))


@given(matrices)
def test_rref_matches_sympy_over_q(rows):
    ncols = len(rows[0])
    R, piv = rref_rows(rows, ncols, QQ)
    ref, ref_piv = sympy.Matrix(rows).rref()
    assert list(piv) == list(ref_piv)
    for i in range(len(piv)):
        assert [F(int(x.p), int(x.q)) for x in ref.row(i)] == list(R[i])


@given(matrices, st.sampled_from([2, 3, 7, 101]))
def test_rank_matches_naive_elimination(rows, p):
    ncols = len(rows[0])
    assert rank_rows(rows, ncols, QQ) == naive_rank(rows)
    Fp = GF(p)
    assert rank_rows([[Fp(x) for x in r] for r in rows], ncols, Fp) == naive_rank(rows, p)


@given(matrices, st.sampled_from([None, 5, 101]))
def test_kernel_is_complement(rows, p):
    field = QQ if p is None else GF(p)
    rows = [[field(x) for x in r] for r in rows]
    ncols = len(rows[0])
    ker = kernel_rows(rows, ncols, field)
    assert len(ker) + rank_rows(rows, ncols, field) == ncols
    for v in ker:
        assert all(sum((a * b for a, b in zip(r, v)), field.zero) == 0 for r in rows)
    if ker:
        assert rank_rows(ker, ncols, field) == len(ker)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_and_inverse(rows):
    M = Matrix(rows, QQ)
    assert M.det() == int(sympy.Matrix(rows).det())
    if M.det() != 0:
        assert M @ M.inverse() == Matrix.identity(len(rows), QQ)
    else:
        with pytest.raises(ZeroDivisionError):
            M.inverse()


def test_det_mod_p_matches_integer_det():
    rows = [[3, 1, 4], [1, 5, 9], [2, 6, 5]]
    d = int(sympy.Matrix(rows).det())
    F13 = GF(13)
    assert Matrix([[F13(x) for x in r] for r in rows], F13).det() == F13(d)


def test_matrix_vector_product_and_transpose():
    M = Matrix([[1, 2], [3, 4]], QQ)
    assert M @ (1, 1) == (3, 7)
    assert M.T.T == M and M.T.rows[0] == (1, 3)


# binary forms


def test_poly_roots_example():
    # s t^2 vanishes at (1:0) twice and at (0:1) once
    f = Poly2([0, 0, 1, 0], QQ)
    r = poly_roots(f)
    assert dict(r.roots) == {(1, 0): 2, (0, 1): 1}
    assert r.residual_degree == 0


def test_poly_roots_irreducible_residual():
    r = poly_roots(Poly2([1, 0, -2], QQ))
    assert r.roots == () and r.residual_degree == 2


@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(1, 6)), min_size=1, max_size=4), st.integers(1, 5))
def test_poly_roots_recovers_linear_factors(factors, scale):
    f = Poly2([scale], QQ)
    expected = {}
    for a, b in factors:
        # factor b s - a t vanishes at (a:b)
        f = f * Poly2([b, -a], QQ)
        key = canonical_vector([a, b], QQ)
        expected[key] = expected.get(key, 0) + 1
    r = poly_roots(f)
    assert {tuple(pt): m for pt, m in r.roots} == expected
    assert r.residual_degree == 0


@given(st.lists(st.integers(0, 12), min_size=1, max_size=5))
def test_poly_roots_mod_p_brute_force(coeffs):
    F13 = GF(13)
    f = Poly2([F13(c) for c in coeffs] + [F13(1)], F13)
    r = poly_roots(f)
    found = {tuple(pt) for pt, _ in r.roots}
    brute = {(F13(1), F13(0))} if f(F13(1), F13(0)) == 0 else set()
    brute |= {canonical_vector([F13(x), F13(1)], F13) for x in range(13) if f(F13(x), F13(1)) == 0}
    assert found == brute
    assert sum(m for _, m in r.roots) + r.residual_degree == f.degree


def test_poly_gcd_and_division():
    a = Poly2([1, -1], QQ) * Poly2([1, 2], QQ)  # (s-t)(s+2t)
    b = Poly2([1, -1], QQ) * Poly2([1, 0, 1], QQ)
    g = poly_gcd(a, b)
    assert g.degree == 1 and g.divides(a) and g.divides(b)
    assert g.monic() == Poly2([1, -1], QQ).monic()
    assert gcd_all([Poly2.zero(2, QQ)]) is None
    assert a.exact_div(g) * g == a


def test_poly_det_of_identity_forms():
    s = Poly2([1, 0], QQ)
    t = Poly2([0, 1], QQ)
    zero = Poly2.zero(1, QQ)
    assert poly_det([[s, zero], [zero, t]]) == s * t
    assert poly_det([[s, t], [s, t]]).is_zero


def test_modp_repr_and_hash():
    assert hash(ModP(3, 7)) == hash(ModP(10, 7))
    assert ModP(3, 7) == ModP(10, 7)
