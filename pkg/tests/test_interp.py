import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollinterp.errors import PreconditionError
from scrollinterp.exactlin import GF, QQ
from scrollinterp.instances import schubert_instance
from scrollinterp.interp import (
    dim_identity_report,
    hilb_dim,
    hilb_dim_factored,
    hypersurface_through_points,
    interpolation_numerics,
    numerics_residual,
    plane_meets_lines,
    schubert_planes,
    schubert_planes_enumerate,
    syt_count,
)
from scrollinterp.projgeom import LinSubspace, ProjPoint

dk = st.integers(1, 8).flatmap(lambda k: st.tuples(st.integers(k, 30), st.just(k)))


@pytest.mark.parametrize(
    "d,k,row",
    [((3), 1, (12, 6, 2, 0)), (2, 2, (9, 8, 0, 0)), (4, 3, (37, 12, 2, 0)), (2, 1, (5, 5, 1, 0))],
)
def test_numerics_rows(d, k, row):
    q, lam = interpolation_numerics(d, k)
    assert (hilb_dim(d, k), q, lam, numerics_residual(d, k)) == row


@given(dk)
def test_hilb_forms_agree(pair):
    d, k = pair
    assert hilb_dim(d, k) == hilb_dim_factored(d, k)
    assert numerics_residual(d, k) == 0


def test_hilb_small_cases():
    # conics: 5 = dim of conics in P^2; twisted cubics: 12; quadric surfaces in P^3: 9
    assert hilb_dim(2, 1) == 5 and hilb_dim(3, 1) == 12 and hilb_dim(2, 2) == 9


def test_bad_dk():
    with pytest.raises(PreconditionError):
        hilb_dim(1, 2)
    with pytest.raises(PreconditionError):
        interpolation_numerics(0, 0)


@given(dk)
def test_identity_report_holds(pair):
    d, k = pair
    if d < 2 * k - 1 and not k + 1 <= d <= 2 * k - 2:
        with pytest.raises(PreconditionError):
            dim_identity_report(d, k)
        return
    for check in dim_identity_report(d, k):
        assert check.holds, check


def test_identity_report_gap():
    checks = {c.name: c.values for c in dim_identity_report(5, 4)}
    assert checks["component gap is 2(k-2)"] == (4, 4)


def test_hypersurface_through_points():
    pts = [ProjPoint(p, QQ) for p in ([1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3])]
    h = hypersurface_through_points(2, pts)
    assert h.solution_dim == 1
    for p in pts:
        value = sum(c * p.coords[i] * p.coords[j] for c, (i, j) in zip(h.coeffs, h.monomials))
        assert value == 0


def test_syt_counts():
    assert [syt_count(m) for m in range(1, 6)] == [1, 2, 4, 10, 26]


@pytest.mark.parametrize("k,p", [(2, 7), (2, 101), (3, 7), (3, 101)])
def test_schubert_matches_enumeration(k, p):
    F = GF(p)
    for seed in range(5):
        inst = schubert_instance(k, F, seed)
        fast = schubert_planes(inst.point, inst.lines)
        slow = schubert_planes_enumerate(inst.point, inst.lines)
        assert fast == slow
        assert len(fast.planes) == 1
        assert all(plane_meets_lines(P, inst.point, inst.lines) for P in fast.planes)


def test_schubert_pruning_is_sound():
    F7 = GF(7)
    inst = schubert_instance(2, F7, 3)
    a = schubert_planes_enumerate(inst.point, inst.lines, prune=True)
    b = schubert_planes_enumerate(inst.point, inst.lines, prune=False)
    assert a == b


def test_schubert_over_q():
    for seed in range(5):
        inst = schubert_instance(3, QQ, seed)
        res = schubert_planes(inst.point, inst.lines)
        assert len(res.planes) == 1 and not res.positive_dimensional
        assert plane_meets_lines(res.planes[0], inst.point, inst.lines)


def test_schubert_family_when_point_in_span_of_fewer_lines():
    F7 = GF(7)
    e = [[F7(int(i == j)) for i in range(6)] for j in range(6)]
    lines = [LinSubspace(5, [e[2 * i], e[2 * i + 1]], F7) for i in range(3)]
    # p lies in the span of the first two lines, so any point of the third works
    p = ProjPoint([1, 0, 1, 0, 0, 0], F7)
    assert schubert_planes(p, lines).positive_dimensional
    # over F_7 the enumeration sees the family as one plane per point of the third line
    assert len(schubert_planes_enumerate(p, lines).planes) == 8
    with pytest.raises(PreconditionError):
        schubert_planes(ProjPoint([1, 0, 0, 0, 0, 0], F7), lines)
