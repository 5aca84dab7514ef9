"""Interpolation counts, dimension identities, hypersurfaces and Schubert planes."""

from __future__ import annotations

import itertools
from typing import NamedTuple, Sequence

from .errors import PreconditionError
from .exactlin import Field, Matrix, PrimeField, kernel_rows, rank_rows
from .projgeom import LinSubspace, ProjPoint
from .scrollcore import fano_components, projective_points


def _check_dk(d: int, k: int) -> None:
    if not (isinstance(d, int) and isinstance(k, int)) or k < 1 or d < k:
        raise PreconditionError(f"need d >= k >= 1, got d={d}, k={k}")


def hilb_dim(d: int, k: int) -> int:
    """Dimension of the Hilbert scheme component of degree-d, k-dimensional scrolls."""
    _check_dk(d, k)
    return (d + k) ** 2 - k**2 - 3


def hilb_dim_factored(d: int, k: int) -> int:
    _check_dk(d, k)
    return (d - 1) * (d + 2 * k + 1) + 2 * k - 2


class Numerics(NamedTuple):
    points: int
    plane_dim: int


def interpolation_numerics(d: int, k: int) -> Numerics:
    """How many general points and which dimension of general plane to impose."""
    _check_dk(d, k)
    if d >= 2 * k - 1:
        return Numerics(d + 2 * k + 1, d - 2 * k + 1)
    return Numerics(d + 2 * k + 2, 2 * (d - k))


def numerics_residual(d: int, k: int) -> int:
    """q (n-k) + (n-k-lambda) - hilb_dim; zero when the counts match."""
    q, lam = interpolation_numerics(d, k)
    n = d + k - 1
    return q * (n - k) + (n - k - lam) - hilb_dim(d, k)


class IdentityCheck(NamedTuple):
    name: str
    values: tuple
    holds: bool


def _grassmannian_dim(r: int, m: int) -> int:
    """Dimension of G(r, m), r-dimensional subspaces of an m-dimensional space."""
    return r * (m - r)


def dim_identity_report(d: int, k: int) -> list[IdentityCheck]:
    """Evaluate the incidence-correspondence dimension counts at (d, k).

    For d >= 2k-1: the fiber-product dimension of the point/plane incidence
    against the dimension of its target, computed from the displayed closed
    form and again from products of projective spaces and a Grassmannian.

    For k+1 <= d <= 2k-2: the two component dimensions of the incidence of
    2d+2 points and a (2k-d-1)-plane on a scroll, from the closed form and
    again from the Fano-scheme component dimensions.
    """
    _check_dk(d, k)
    n = d + k - 1
    out: list[IdentityCheck] = []
    if d >= 2 * k - 1:
        hilb = hilb_dim(d, k)
        lhs = hilb + (k - 1) * (d + 2 * k - 1) + 2 * k + (k + (d - 2 * k + 1) * (3 * k - 2))
        rhs = (d + k - 2) * (d + 2 * k - 1) + 2 * (d + k - 1) + (d - 2 * k + 2) * (n + 2 * k - d - 1)
        target = (n - 1) * (d + 2 * k - 1) + 2 * n + _grassmannian_dim(d - 2 * k + 2, n + 1)
        out.append(IdentityCheck("incidence dimension equals target dimension", (lhs, rhs, target), lhs == rhs == target))
        q, lam = interpolation_numerics(d, k)
        conditions = q * (n - k) + (n - k - lam)
        out.append(IdentityCheck("conditions imposed equal hilbert dimension", (conditions, hilb), conditions == hilb))
    if k + 1 <= d <= 2 * k - 2:
        big = (k + d - 1) * (2 * d + 2) + (2 * k - d) * (2 * d - k)
        small = big - 2 * (k - 2)
        target = n * (2 * d + 2) + _grassmannian_dim(2 * k - d, n + 1)
        out.append(IdentityCheck("large component equals target dimension", (big, target), big == target))
        out.append(IdentityCheck("component gap is 2(k-2)", (big - small, 2 * (k - 2)), big - small == 2 * (k - 2)))
        # the same dimensions from the Fano scheme of (2k-d-1)-planes on a
        # balanced scroll, whose type has 2k-d entries equal to 1
        t = 2 * k - d - 1
        balanced = (2,) * (d - k) + (1,) * (2 * k - d)
        base = hilb_dim(d, k) + (2 * d + 2) * k
        if t >= 1:
            fano = fano_components(k, balanced, t)
            dims = tuple(base + c.dimension for c in fano)
            out.append(IdentityCheck("fiber-type component from the Fano scheme", (dims[0], big), dims[0] == big))
            if len(dims) == 2:
                out.append(IdentityCheck("section-type component from the Fano scheme", (dims[1], small), dims[1] == small))
    if not out:
        raise PreconditionError(f"no identity applies at d={d}, k={k}")
    return out


# ---------------------------------------------------------------------------
# Hypersurfaces
# ---------------------------------------------------------------------------


class Hypersurface(NamedTuple):
    monomials: tuple  # exponent index tuples, sorted
    coeffs: tuple  # canonical coefficient vector of one solution
    solution_dim: int  # dimension of the space of forms through the points


def degree_monomials(n: int, m: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations_with_replacement(range(n + 1), m))


def hypersurface_through_points(m: int, points: Sequence) -> Hypersurface:
    """A nonzero degree-m form vanishing at every point, from the evaluation kernel."""
    pts = [p if isinstance(p, ProjPoint) else ProjPoint(p) for p in points]
    if not pts:
        raise PreconditionError("need at least one point")
    n = pts[0].n
    field = pts[0].field
    mons = degree_monomials(n, m)
    if len(pts) > len(mons) - 1:
        raise PreconditionError(f"at most {len(mons) - 1} points for degree {m} in P^{n}")
    rows = []
    for p in pts:
        row = []
        for mon in mons:
            v = field.one
            for i in mon:
                v = v * p.coords[i]
            row.append(v)
        rows.append(row)
    ker = kernel_rows(rows, len(mons), field)
    return Hypersurface(tuple(mons), ker[0], len(ker))


# ---------------------------------------------------------------------------
# Schubert planes
# ---------------------------------------------------------------------------


class SchubertResult(NamedTuple):
    planes: tuple  # solution (k-1)-planes, sorted canonically
    positive_dimensional: bool  # true when the solutions form a family


def _check_schubert_input(p: ProjPoint, lines: Sequence[LinSubspace]) -> tuple[int, Field]:
    k = len(lines)
    n = 2 * k - 1
    if k < 1 or p.n != n or any(L.n != n or L.dim != 1 for L in lines):
        raise PreconditionError(f"need k lines and a point in P^{n}")
    field = p.field
    vecs = [r for L in lines for r in L.rows]
    if rank_rows(vecs, n + 1, field) != n + 1:
        raise PreconditionError("lines must be pairwise disjoint and span the ambient space")
    for i, L in enumerate(lines):
        if L.contains(p):
            raise PreconditionError(f"point lies on line {i}")
    return k, field


def schubert_planes(p: ProjPoint, lines: Sequence[LinSubspace]) -> SchubertResult:
    """The (k-1)-planes through p meeting each of k spanning lines of P^(2k-1).

    The lines are complementary, so p splits uniquely as a sum of vectors
    q_i on the lines.  When every q_i is nonzero, span(q_1, ..., q_k) is the
    only solution: any solution plane contains one point r_i of each line, the
    r_i are independent, and p in their span forces r_i = q_i.  When some q_i
    vanishes every choice of point on that line works, and the family is
    reported as positive-dimensional.
    """
    k, field = _check_schubert_input(p, lines)
    basis = [r for L in lines for r in L.rows]
    coeffs = Matrix.from_columns(basis, field).inverse() @ p.coords
    parts = []
    for i, L in enumerate(lines):
        a, b = coeffs[2 * i], coeffs[2 * i + 1]
        parts.append(tuple(a * x + b * y for x, y in zip(*L.rows)))
    if any(all(v == 0 for v in q) for q in parts):
        return SchubertResult((), True)
    return SchubertResult((LinSubspace(p.n, parts, field),), False)


def schubert_planes_enumerate(p: ProjPoint, lines: Sequence[LinSubspace], prune: bool = True) -> SchubertResult:
    """Exhaustive search over points q_i of each line, for prime fields.

    A plane through p meeting every line is span(p, q_1, ..., q_k) with
    q_i on line i and rank [p; q] <= k.  With ``prune`` the search discards a
    partial choice q_1..q_i as soon as p leaves span(q_1..q_i, remaining lines),
    which every completion would need.  Without pruning the full product of
    P^1(F_p) is scanned.
    """
    k, field = _check_schubert_input(p, lines)
    if not isinstance(field, PrimeField):
        raise PreconditionError("enumeration needs a prime field")
    n = 2 * k - 1
    params = list(projective_points(field, 1))
    line_points = []
    for L in lines:
        u, v = L.rows
        line_points.append([tuple(s * a + t * b for a, b in zip(u, v)) for s, t in params])
    found: set[LinSubspace] = set()
    family = False

    def search(i: int, chosen: list):
        nonlocal family
        if i == k:
            rows = [p.coords] + chosen
            if rank_rows(rows, n + 1, field) <= k:
                plane = LinSubspace(n, chosen, field)
                if plane.dim == k - 1:
                    found.add(plane)
                else:
                    family = True
            return
        for q in line_points[i]:
            nxt = chosen + [q]
            if prune:
                rest = [r for L in lines[i + 1 :] for r in L.rows]
                base = nxt + rest
                if rank_rows(base + [p.coords], n + 1, field) != rank_rows(base, n + 1, field):
                    continue
            search(i + 1, nxt)

    search(0, [])
    planes = tuple(sorted(found, key=lambda L: tuple(int(x) for r in L.rows for x in r)))
    return SchubertResult(planes, family)


def plane_meets_lines(plane: LinSubspace, p: ProjPoint, lines: Sequence[LinSubspace]) -> bool:
    from .projgeom import meet

    return plane.dim == len(lines) - 1 and plane.contains(p) and all(not meet(plane, L).is_empty for L in lines)


def syt_count(m: int) -> int:
    """Number of standard Young tableaux with m cells (involutions of m letters)."""
    a, b = 1, 1
    for i in range(2, m + 1):
        a, b = b, b + (i - 1) * a
    return b if m >= 1 else 1
