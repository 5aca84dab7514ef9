"""Seeded problem instances shared by the command line and the test suite."""

from __future__ import annotations

from typing import NamedTuple

from .errors import DegenerateError
from .exactlin import Field, Matrix
from .interp import schubert_planes
from .projgeom import (
    LinSubspace,
    ProjPoint,
    random_config,
    random_invertible,
    random_point,
    random_subspace,
    retry,
)
from .rng import SplitMix64
from .scrollcore import RatCurveParam, Scroll, segre_from_config


def rnc_instance(n: int, field: Field, seed: int) -> tuple[ProjPoint, ...]:
    """n+3 points of P^n in general position."""
    return random_config(n, field, seed, n_points=n + 3).points


def slicing_plane(n: int, k: int, field: Field, rng: SplitMix64) -> LinSubspace:
    return random_subspace(field, n, n - k, rng)


class SchubertInstance(NamedTuple):
    point: ProjPoint
    lines: tuple


def _spanning_lines(k: int, field: Field, rng: SplitMix64) -> tuple:
    n = 2 * k - 1
    lines = tuple(random_subspace(field, n, 1, rng) for _ in range(k))
    rows = [r for L in lines for r in L.rows]
    if LinSubspace(n, rows, field).dim != n:
        raise DegenerateError("lines do not span", [("lines span the ambient space", False)])
    return lines


def schubert_instance(k: int, field: Field, seed: int) -> SchubertInstance:
    """k spanning lines of P^(2k-1) and a point on none of them."""
    rng = SplitMix64(seed)
    n = 2 * k - 1

    def attempt():
        lines = _spanning_lines(k, field, rng)
        p = random_point(field, n, rng)
        if any(L.contains(p) for L in lines):
            raise DegenerateError("point lies on a line")
        return SchubertInstance(p, lines)

    return retry("schubert_instance", attempt)


class SegreInstance(NamedTuple):
    lines: tuple
    planes: tuple  # three (k-1)-planes, each meeting every line
    points: tuple  # the free points the planes were built through


def segre_instance(k: int, field: Field, seed: int) -> SegreInstance:
    """k spanning lines of P^(2k-1) and three (k-1)-planes meeting all of them.

    Each plane is the unique one through a random point that meets every line.
    """
    rng = SplitMix64(seed)
    n = 2 * k - 1

    def attempt():
        lines = _spanning_lines(k, field, rng)
        pts, planes = [], []
        for _ in range(3):
            p = random_point(field, n, rng)
            if any(L.contains(p) for L in lines):
                raise DegenerateError("point lies on a line")
            res = schubert_planes(p, lines)
            if res.positive_dimensional:
                raise DegenerateError("plane through the point is not unique")
            pts.append(p)
            planes.append(res.planes[0])
        # admissible only if each line meets the three planes in distinct points
        segre_from_config(lines, *planes)
        return SegreInstance(lines, tuple(planes), tuple(pts))

    return retry("segre_instance", attempt)


def standard_scroll(type_, field: Field) -> Scroll:
    """S(a_1, ..., a_k) with directrix i on its own block of coordinates."""
    n = sum(a + 1 for a in type_) - 1
    curves, offset = [], 0
    for a in type_:
        cols = []
        for j in range(a + 1):
            col = [field.zero] * (n + 1)
            col[offset + j] = field.one
            cols.append(col)
        curves.append(RatCurveParam(Matrix.from_columns(cols, field)))
        offset += a + 1
    return Scroll(curves)


def random_scroll(type_, field: Field, seed: int) -> Scroll:
    """The standard scroll of the given type moved by a seeded projectivity."""
    S = standard_scroll(type_, field)
    g = random_invertible(field, S.n + 1, SplitMix64(seed))
    return Scroll([RatCurveParam(g @ c.coeffs) for c in S.curves])


__all__ = [
    "SchubertInstance",
    "SegreInstance",
    "random_scroll",
    "rnc_instance",
    "schubert_instance",
    "segre_instance",
    "slicing_plane",
    "standard_scroll",
]
