import dataclasses

import pytest

from scrollinterp.errors import PreconditionError
from scrollinterp.exactlin import GF, QQ
from scrollinterp.interp import interpolation_numerics
from scrollinterp.pipeline import (
    CONTAIN,
    MEET,
    assemble,
    interpolate,
    verify_level,
    verify_witness,
)
from scrollinterp.projgeom import ProjPoint
from scrollinterp.scrollcore import broken_scroll_verify

CASES = [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (5, 2), (3, 3), (4, 3), (5, 3), (6, 3), (5, 4)]


@pytest.mark.parametrize("d,k", CASES)
def test_witness_verifies(d, k):
    tree = interpolate(d, k, 0, GF(101))
    report = verify_witness(tree)
    assert report.ok, report.failures()
    q, lam = interpolation_numerics(d, k)
    assert len(tree.root.points) == q and tree.root.plane.dim == lam
    B = assemble(tree.root)
    assert sum(c.degree for c in B.components) == d and B.n == d + k - 1


@pytest.mark.parametrize("d,k", [(3, 1), (4, 2), (3, 2)])
def test_witness_over_q(d, k):
    assert verify_witness(interpolate(d, k, 5, QQ)).ok


def test_level_kinds():
    kinds = [lvl.kind for lvl in interpolate(6, 3, 1, GF(101)).levels()]
    assert kinds[-1] in ("base_points", "base_plane")
    assert kinds[0] == "high"
    roles = [lvl.plane_role for lvl in interpolate(5, 4, 1, GF(101)).levels()]
    assert roles[0] == MEET and CONTAIN in roles


def test_deterministic():
    assert interpolate(5, 2, 3, GF(101)) == interpolate(5, 2, 3, GF(101))
    assert interpolate(5, 2, 3, GF(101)) != interpolate(5, 2, 4, GF(101))


def test_tampered_point_is_caught():
    tree = interpolate(4, 2, 2, GF(101))
    root = tree.root
    moved = ProjPoint([1] + [0] * root.n, GF(101))
    bad_root = dataclasses.replace(root, points=(moved,) + root.points[1:])
    bad = dataclasses.replace(tree, root=bad_root)
    failures = [c.name for c in verify_witness(bad).failures()]
    assert any("point 0 on the union" in name for name in failures)


def test_tampered_count_is_caught():
    tree = interpolate(3, 2, 2, GF(101))
    bad = dataclasses.replace(tree, root=dataclasses.replace(tree.root, points=tree.root.points[:-1]))
    assert not verify_witness(bad).ok


def test_leaf_level_alone():
    tree = interpolate(3, 3, 0, GF(101))
    assert verify_level(tree.root).ok
    assert broken_scroll_verify(assemble(tree.root), tree.root.points).ok


def test_bad_parameters():
    with pytest.raises(PreconditionError):
        interpolate(1, 2, 0, QQ)
