from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollinterp.errors import DegenerateError
from scrollinterp.exactlin import GF, QQ, Matrix
from scrollinterp.projgeom import (
    HyperplaneEmbedding,
    LinSubspace,
    ProjPoint,
    frame_map,
    in_general_position,
    meet,
    moebius_through_three,
    random_config,
    random_embedding,
    random_point,
    random_subspace,
    span,
)
from scrollinterp.rng import SplitMix64

fields = st.sampled_from([QQ, GF(101), GF(3)])


def test_points_are_canonical():
    assert ProjPoint([2, 4, 6], QQ) == ProjPoint([F(1, 3), F(2, 3), 1], QQ)
    assert ProjPoint([0, -2, 1], QQ).coords == (0, 2, -1)
    F7 = GF(7)
    assert ProjPoint([F7(3), F7(6)], F7).coords == (F7(1), F7(2))
    with pytest.raises(ValueError):
        ProjPoint([0, 0], QQ)


@given(fields, st.integers(0, 2**32), st.integers(2, 5))
def test_grassmann_dimension_formula(field, seed, n):
    rng = SplitMix64(seed)
    a, b = rng.randint(0, n - 1), rng.randint(0, n - 1)
    A = random_subspace(field, n, a, rng)
    B = random_subspace(field, n, b, rng)
    S, M = span(A, B), meet(A, B)
    assert S.dim + M.dim == A.dim + B.dim
    assert S.contains(A) and S.contains(B)
    assert A.contains(M) and B.contains(M)


@given(fields, st.integers(0, 2**32), st.integers(1, 4))
def test_equations_cut_out_subspace(field, seed, n):
    rng = SplitMix64(seed)
    L = random_subspace(field, n, rng.randint(0, n), rng)
    assert LinSubspace.from_equations(n, L.equations(), field) == L
    p = random_point(field, n, rng, within=L)
    assert L.contains(p)


@given(st.integers(0, 2**32), st.integers(1, 4))
def test_frame_map_sends_frame(seed, n):
    pts = random_config(n, QQ, seed, n_points=n + 2).points
    T = frame_map(pts)
    frame = [[1 if i == j else 0 for i in range(n + 1)] for j in range(n + 1)] + [[1] * (n + 1)]
    assert [T(ProjPoint(e, QQ)) for e in frame] == list(pts)


def test_frame_map_rejects_dependent_points():
    with pytest.raises(DegenerateError) as exc:
        frame_map([[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 3]])
    assert exc.value.ledger[0] == ("first n+1 points independent", False)


def test_moebius_through_three():
    a, b, c = ProjPoint([2, 1], QQ), ProjPoint([5, 1], QQ), ProjPoint([1, 7], QQ)
    m = moebius_through_three(a, b, c)
    assert m(ProjPoint([1, 0], QQ)) == a and m(ProjPoint([1, 1], QQ)) == b and m(ProjPoint([0, 1], QQ)) == c


def test_general_position():
    assert in_general_position([[1, 0], [0, 1], [1, 1]], 1)
    assert not in_general_position([[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]], 2)


@given(fields, st.integers(0, 2**32), st.integers(1, 4))
def test_hyperplane_embedding_preserves_incidence(field, seed, n):
    rng = SplitMix64(seed)
    emb = random_embedding(field, n, rng)
    L = random_subspace(field, n - 1, rng.randint(0, n - 1), rng)
    p = random_point(field, n - 1, rng, within=L)
    assert emb.subspace(L).dim == L.dim
    assert emb.subspace(L).contains(emb.point(p))
    assert emb.image.dim == n - 1 and emb.image.contains(emb.subspace(L))


def test_embedding_requires_full_rank():
    with pytest.raises(DegenerateError):
        HyperplaneEmbedding(Matrix([[1, 0, 0], [2, 0, 0]], QQ))


def test_random_config_is_reproducible():
    a = random_config(3, GF(101), 42, n_points=6, plane_dims=(1,))
    b = random_config(3, GF(101), 42, n_points=6, plane_dims=(1,))
    assert a == b and in_general_position(a.points, 3)
