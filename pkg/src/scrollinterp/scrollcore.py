"""Rational normal curves and scrolls, their quadrics, fibers and unions.

A scroll of type (a_1, ..., a_k) is given by k directrix curves
phi_i : P^1 -> P^n of degree a_i.  Its ruling plane over (s:t) is
span(phi_1(s:t), ..., phi_k(s:t)) and the scroll is the union of these
planes.  Stacking the coefficient columns of all directrices gives the
assembled matrix M; in the coordinates y = M^{-1} x the scroll becomes the
standard one, where block i carries the monomials s^(a_i - j) t^j.

Scrolls may also live inside a proper linear subspace of a larger P^N (the
components of a broken scroll do).  Then M has full column rank but is not
square, and a fixed left inverse plays the role of M^{-1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from dataclasses import field as dc_field
from math import lcm
from typing import NamedTuple, Sequence

from .errors import DegenerateError, PreconditionError
from .exactlin import (
    QQ,
    Field,
    Matrix,
    Poly2,
    PrimeField,
    canonical_vector,
    gcd_all,
    poly_det,
    poly_minors,
    poly_roots,
    rank_rows,
    rref_rows,
)
from .projgeom import (
    HyperplaneEmbedding,
    LinSubspace,
    ProjPoint,
    frame_map,
    in_general_position,
    span,
)

Param = tuple  # a canonical (s, t) pair


def canonical_param(s, t, field: Field) -> Param:
    return canonical_vector((s, t), field)


def _monomials(degree: int, s, t) -> list:
    """(s^a, s^(a-1) t, ..., t^a) for a = degree."""
    spow = [1]
    tpow = [1]
    for _ in range(degree):
        spow.append(spow[-1] * s)
        tpow.append(tpow[-1] * t)
    return [spow[degree - j] * tpow[j] for j in range(degree + 1)]


class RatCurveParam:
    """A rational normal curve of degree ``a`` in P^n, as n+1 binary forms.

    ``coeffs`` is the (n+1) x (a+1) matrix whose column j holds the
    coefficients of s^(a-j) t^j.  Full column rank means the image spans an
    a-plane and the component forms have no common factor.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Matrix):
        if coeffs.rank() != coeffs.ncols:
            raise DegenerateError("curve coefficients do not span an a-plane")
        self.coeffs = coeffs

    @classmethod
    def from_forms(cls, forms: Sequence[Poly2]) -> "RatCurveParam":
        degrees = {f.degree for f in forms}
        if len(degrees) != 1:
            raise PreconditionError("curve components must share one degree")
        return cls(Matrix([f.coeffs for f in forms], forms[0].field))

    @property
    def n(self) -> int:
        return self.coeffs.nrows - 1

    @property
    def degree(self) -> int:
        return self.coeffs.ncols - 1

    @property
    def field(self) -> Field:
        return self.coeffs.field

    @property
    def forms(self) -> list[Poly2]:
        return [Poly2(r, self.field) for r in self.coeffs.rows]

    def vector(self, s, t) -> tuple:
        f = self.field
        return self.coeffs @ _monomials(self.degree, f(s), f(t))

    def __call__(self, s, t) -> ProjPoint:
        return ProjPoint(self.vector(s, t), self.field)

    def columns(self) -> list[tuple]:
        return [self.coeffs.column(j) for j in range(self.coeffs.ncols)]

    def embed(self, emb: HyperplaneEmbedding) -> "RatCurveParam":
        return RatCurveParam(Matrix.from_columns([emb.vector(c) for c in self.columns()], self.field))

    def __eq__(self, other):
        return isinstance(other, RatCurveParam) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatCurveParam(degree={self.degree}, n={self.n})"


class Membership(NamedTuple):
    on_scroll: bool
    params: tuple  # in-field fiber parameters, validated
    residual_degree: int  # degree of the part of the gcd with no base-field root


class Scroll:
    """A scroll swept by k directrix curves, sorted by decreasing degree."""

    __slots__ = ("curves", "matrix", "_left", "_rows")

    def __init__(self, curves: Sequence[RatCurveParam]):
        if not curves:
            raise PreconditionError("a scroll needs at least one directrix")
        ns = {c.n for c in curves}
        fields = {c.field for c in curves}
        if len(ns) != 1 or len(fields) != 1:
            raise PreconditionError("directrices must share ambient space and field")
        curves = sorted(curves, key=lambda c: -c.degree)
        cols = [col for c in curves for col in c.columns()]
        field = curves[0].field
        M = Matrix.from_columns(cols, field)
        if M.ncols > M.nrows or M.rank() != M.ncols:
            raise DegenerateError(
                "directrix spans are not complementary",
                [("assembled matrix has full column rank", False)],
            )
        self.curves = tuple(curves)
        self.matrix = M
        # left inverse from a maximal set of independent rows
        _, rows = rref_rows(list(zip(*M.rows)), M.nrows, field)
        sub = Matrix([M.rows[i] for i in rows], field).inverse()
        left = [[field.zero] * M.nrows for _ in range(M.ncols)]
        for c, i in enumerate(rows):
            for r in range(M.ncols):
                left[r][i] = sub.rows[r][c]
        self._left = Matrix(left, field)
        self._rows = tuple(rows)

    @property
    def n(self) -> int:
        return self.matrix.nrows - 1

    @property
    def field(self) -> Field:
        return self.matrix.field

    @property
    def type(self) -> tuple[int, ...]:
        return tuple(c.degree for c in self.curves)

    @property
    def k(self) -> int:
        return len(self.curves)

    @property
    def d(self) -> int:
        return sum(self.type)

    @property
    def is_nondegenerate(self) -> bool:
        return self.matrix.nrows == self.matrix.ncols

    def linear_span(self) -> LinSubspace:
        return LinSubspace(self.n, [self.matrix.column(j) for j in range(self.matrix.ncols)], self.field)

    def directrix_vectors(self, s, t) -> list[tuple]:
        return [c.vector(s, t) for c in self.curves]

    def point(self, s, t, weights: Sequence) -> ProjPoint:
        return scroll_point(self, (s, t), weights)

    def standard_coordinates(self, x: Sequence) -> tuple | None:
        """y with M y = x, or None when x is outside the span of the scroll."""
        y = self._left @ x
        if self.matrix @ y != tuple(self.field(v) for v in x):
            return None
        return y

    def blocks(self, y: Sequence) -> list[tuple]:
        out, pos = [], 0
        for a in self.type:
            out.append(tuple(y[pos : pos + a + 1]))
            pos += a + 1
        return out

    def embed(self, emb: HyperplaneEmbedding) -> "Scroll":
        return Scroll([c.embed(emb) for c in self.curves])

    def __eq__(self, other):
        return isinstance(other, Scroll) and self.curves == other.curves

    def __hash__(self):
        return hash(self.curves)

    def __repr__(self):
        return f"Scroll(type={self.type}, n={self.n}, field={self.field})"


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def scroll_from_directrices(curves: Sequence[RatCurveParam], n: int) -> Scroll:
    """The scroll of the given directrices, which must fill P^n complementarily."""
    if any(c.n != n for c in curves):
        raise PreconditionError(f"every directrix must live in P^{n}")
    if sum(c.degree + 1 for c in curves) != n + 1:
        raise PreconditionError(f"directrix degrees do not add up: need sum(a_i + 1) = {n + 1}")
    S = Scroll(curves)
    for s, t in [(1, 0), (0, 1)] + [(1, i) for i in range(1, S.k)]:
        fiber_plane(S, (s, t))
    return S


def _integral(M: Matrix) -> Matrix:
    """M times the lcm of its denominators; the identity map over F_p."""
    if M.field is not QQ:
        return M
    den = 1
    for row in M.rows:
        for x in row:
            den = lcm(den, x.denominator)
    return M.scale(den) if den != 1 else M


def _normalized_frame(pts: Sequence[ProjPoint]) -> tuple[Matrix, tuple]:
    """Frame matrix of the first n+2 points and the last point in frame coordinates."""
    n = len(pts) - 3
    T = frame_map(pts[: n + 2]).matrix
    return T, T.inverse() @ pts[-1].coords


def rnc_through_points(points: Sequence) -> RatCurveParam:
    """The rational normal curve of degree n through n+3 points of P^n.

    With T the frame map of the first n+2 points and p = T^{-1} x_last, the
    curve in frame coordinates has components p_i * prod_{j != i}(p_j t + s).
    It hits T e_i at (p_i : -1), x_last at (1:0) and the unit point at (0:1).
    """
    pts = [ProjPoint(p) if not isinstance(p, ProjPoint) else p for p in points]
    n = len(pts) - 3
    if n < 1 or any(p.n != n for p in pts):
        raise PreconditionError("need n+3 points of P^n")
    field = pts[0].field
    general = in_general_position(pts, n)
    ledger = [("every n+1 of the points independent", general)]
    if not general:
        raise DegenerateError("points are not in general position", ledger)
    T, p = _normalized_frame(pts)
    distinct = len(set(p)) == len(p) and all(x != 0 for x in p)
    ledger.append(("normalized last point has distinct nonzero coordinates", distinct))
    if not distinct:
        raise DegenerateError("normalized last point is special", ledger)
    one = field.one
    forms = []
    for i in range(n + 1):
        f = Poly2([p[i]], field)
        for j in range(n + 1):
            if j != i:
                f = f * Poly2([one, p[j]], field)
        forms.append(f)
    frame_coeffs = Matrix([f.coeffs for f in forms], field)
    return RatCurveParam(T @ frame_coeffs)


def rnc_parameters_of(points: Sequence) -> list[Param]:
    """Parameters at which ``rnc_through_points`` passes through each input."""
    pts = [p if isinstance(p, ProjPoint) else ProjPoint(p) for p in points]
    n = len(pts) - 3
    field = pts[0].field
    _, p = _normalized_frame(pts)
    params = [canonical_param(p[i], -field.one, field) for i in range(n + 1)]
    params.append(canonical_param(0, 1, field))
    params.append(canonical_param(1, 0, field))
    return params


def scroll_point(S: Scroll, param: Sequence, weights: Sequence) -> ProjPoint:
    """The point sum u_i phi_i(s:t) of the ruling plane over (s:t)."""
    field = S.field
    u = [field(w) for w in weights]
    if len(u) != S.k:
        raise PreconditionError(f"need {S.k} weights")
    if all(w == 0 for w in u):
        raise PreconditionError("weights must not all vanish")
    s, t = param
    acc = [field.zero] * (S.n + 1)
    for w, v in zip(u, S.directrix_vectors(s, t)):
        if w != 0:
            acc = [a + w * b for a, b in zip(acc, v)]
    return ProjPoint(acc, field)


def fiber_plane(S: Scroll, param: Sequence) -> LinSubspace:
    s, t = param
    L = LinSubspace(S.n, S.directrix_vectors(s, t), S.field)
    if L.dim != S.k - 1:
        raise DegenerateError(f"ruling plane over {tuple(param)} has dimension {L.dim}, expected {S.k - 1}")
    return L


def _block_minors(S: Scroll, y: Sequence) -> list[Poly2]:
    field = S.field
    forms = []
    for a, yb in zip(S.type, S.blocks(y)):
        if all(v == 0 for v in yb):
            continue
        for j, l in itertools.combinations(range(a + 1), 2):
            f = Poly2.monomial(a, j, field, yb[l]) - Poly2.monomial(a, l, field, yb[j])
            if not f.is_zero:
                forms.append(f)
    return forms


def _on_fiber(S: Scroll, y: Sequence, param: Param) -> bool:
    s, t = param
    for a, yb in zip(S.type, S.blocks(y)):
        v = _monomials(a, s, t)
        if any(yb[j] * v[l] != yb[l] * v[j] for j, l in itertools.combinations(range(a + 1), 2)):
            return False
    return True


def point_on_scroll(S: Scroll, x) -> Membership:
    """Decide whether x lies on S and find its in-field ruling parameters.

    The candidate parameters are the roots of the gcd of the 2x2 minors of
    [v_i(s:t) | y_i] over the blocks of the standard coordinates y of x; this
    gcd has the same roots as the gcd of the (k+1)-minors of [phi(s:t) | x].
    Each root is confirmed by a direct rank check.
    """
    coords = x.coords if isinstance(x, ProjPoint) else tuple(x)
    if len(coords) != S.n + 1:
        raise PreconditionError("ambient mismatch")
    y = S.standard_coordinates(coords)
    if y is None:
        return Membership(False, (), 0)
    g = gcd_all(_block_minors(S, y))
    if g is None or g.degree == 0:
        return Membership(False, (), 0)
    report = poly_roots(g)
    params = tuple(r for r, _ in report.roots if _on_fiber(S, y, r))
    return Membership(True, params, report.residual_degree)


def fiber_through_point(S: Scroll, x) -> tuple[Param, LinSubspace]:
    m = point_on_scroll(S, x)
    if not m.on_scroll:
        raise PreconditionError(f"{x} is not on the scroll")
    if len(m.params) != 1:
        raise DegenerateError(
            f"point has {len(m.params)} in-field ruling parameters (residual degree {m.residual_degree})"
        )
    param = m.params[0]
    return param, fiber_plane(S, param)


def _meet_point(line: LinSubspace, plane: LinSubspace, i: int, j: int, ledger: list) -> tuple:
    from .projgeom import meet

    X = meet(line, plane)
    ok = X.dim == 0
    ledger.append((f"line {i} meets plane {j} in a single point", ok))
    if not ok:
        raise DegenerateError(f"line {i} and plane {j} meet in dimension {X.dim}", ledger)
    return X.rows[0]


def segre_from_config(lines: Sequence[LinSubspace], L1: LinSubspace, L2: LinSubspace, L3: LinSubspace) -> Scroll:
    """The unique S(1^k) containing k spanning lines with fibers L1, L2, L3.

    Line i is parameterized so that (1:0), (1:1), (0:1) go to its meets with
    L1, L2, L3.  Writing B = alpha A + gamma C for those three points, the
    directrix is s * alpha A + t * gamma C.
    """
    k = len(lines)
    if k < 1:
        raise PreconditionError("need at least one line")
    n = 2 * k - 1
    planes = (L1, L2, L3)
    if any(L.n != n for L in (*lines, *planes)):
        raise PreconditionError(f"everything must live in P^{n}")
    if any(L.dim != 1 for L in lines):
        raise PreconditionError("lines must be 1-dimensional")
    if any(L.dim != k - 1 for L in planes):
        raise PreconditionError(f"planes must have dimension {k - 1}")
    field = L1.field
    ledger: list = []
    spans = rank_rows([r for L in lines for r in L.rows], n + 1, field) == n + 1
    ledger.append(("lines span the ambient space", spans))
    if not spans:
        raise DegenerateError("lines do not span the ambient space", ledger)
    curves = []
    for i, line in enumerate(lines):
        A, B, C = (_meet_point(line, L, i, j + 1, ledger) for j, L in enumerate(planes))
        distinct = len({ProjPoint(v, field) for v in (A, B, C)}) == 3
        ledger.append((f"three distinct meets on line {i}", distinct))
        if not distinct:
            raise DegenerateError(f"line {i} meets two of the planes in the same point", ledger)
        ker = Matrix.from_columns([A, C, B], field).kernel()
        alpha, gamma, beta = ker[0]
        alpha, gamma = -alpha / beta, -gamma / beta
        cols = [[alpha * a for a in A], [gamma * c for c in C]]
        curves.append(RatCurveParam(Matrix.from_columns(cols, field)))
    return scroll_from_directrices(curves, n)


# ---------------------------------------------------------------------------
# Quadrics
# ---------------------------------------------------------------------------


def quadric_monomials(n: int) -> list[tuple[int, int]]:
    """Index pairs (i, j), i <= j, of the monomials x_i x_j in lexicographic order."""
    return list(itertools.combinations_with_replacement(range(n + 1), 2))


class QuadricSet:
    """Row-reduced basis of a space of quadrics in monomial coordinates.

    Each row lists the coefficients of x_i x_j for i <= j in lexicographic
    order.  Working with monomials rather than symmetric matrices keeps the
    representation valid in characteristic 2.
    """

    __slots__ = ("n", "field", "rows")

    def __init__(self, n: int, rows: Sequence[Sequence], field: Field):
        size = (n + 1) * (n + 2) // 2
        rows = [list(r) for r in rows]
        if any(len(r) != size for r in rows):
            raise PreconditionError("quadric rows have the wrong length")
        R, piv = rref_rows(rows, size, field) if rows else ([], [])
        self.n = n
        self.field = field
        self.rows = tuple(tuple(r) for r in R[: len(piv)])

    def __len__(self):
        return len(self.rows)

    def evaluate(self, x: Sequence) -> list:
        x = [self.field(v) for v in x]
        mons = [x[i] * x[j] for i, j in quadric_monomials(self.n)]
        return [sum((c * m for c, m in zip(r, mons) if c != 0), self.field.zero) for r in self.rows]

    def vanishes_at(self, x) -> bool:
        coords = x.coords if isinstance(x, ProjPoint) else x
        return all(v == 0 for v in self.evaluate(coords))

    def contains_subspace(self, L: LinSubspace) -> bool:
        """True iff every quadric vanishes on L (checked on each basis pair)."""
        vecs = list(L.rows)
        tests = list(vecs)
        tests += [tuple(a + b for a, b in zip(u, v)) for u, v in itertools.combinations(vecs, 2)]
        return all(self.vanishes_at(v) for v in tests)

    def __eq__(self, other):
        return (
            isinstance(other, QuadricSet)
            and self.n == other.n
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.field, self.rows))

    def __repr__(self):
        return f"QuadricSet(n={self.n}, size={len(self.rows)})"


def _product_quadric(f: Sequence, g: Sequence, n: int, field: Field) -> list:
    out = []
    for i, j in quadric_monomials(n):
        out.append(f[i] * g[i] if i == j else f[i] * g[j] + f[j] * g[i])
    return out


def scroll_quadrics(S: Scroll) -> QuadricSet:
    """The 2x2 minors of the standard 2 x d block matrix, pulled back through M^{-1}."""
    if not S.is_nondegenerate:
        raise PreconditionError("quadric model needs a scroll spanning its ambient space")
    if S.d < 2:
        raise PreconditionError("a linear space has no quadric model")
    field = S.field
    # every quadric is homogeneous of degree 2 in N, so rescaling N is harmless
    N = _integral(S.matrix.inverse())
    starts = list(itertools.accumulate((a + 1 for a in S.type), initial=0))
    cols = [(starts[b] + j, starts[b] + j + 1) for b, a in enumerate(S.type) for j in range(a)]
    rows = []
    for (t1, b1), (t2, b2) in itertools.combinations(cols, 2):
        plus = _product_quadric(N.rows[t1], N.rows[b2], S.n, field)
        minus = _product_quadric(N.rows[t2], N.rows[b1], S.n, field)
        rows.append([a - b for a, b in zip(plus, minus)])
    return QuadricSet(S.n, rows, field)


def scrolls_equal(S1: Scroll, S2: Scroll) -> bool:
    if S1.d < 2 or S2.d < 2:
        raise PreconditionError("scroll equality via quadrics needs d >= 2")
    if (S1.n, S1.k, S1.d, S1.field) != (S2.n, S2.k, S2.d, S2.field):
        return False
    return scroll_quadrics(S1) == scroll_quadrics(S2)


# ---------------------------------------------------------------------------
# Linear sections
# ---------------------------------------------------------------------------


def _restricted_forms(S: Scroll, equations: Sequence[Sequence]) -> list[list[Poly2]]:
    """Matrix A(s:t) with entries L_j(phi_i(s:t))."""
    field = S.field
    rows = []
    for L in equations:
        row = []
        for c in S.curves:
            coeffs = [sum((a * b for a, b in zip(L, col)), field.zero) for col in c.columns()]
            row.append(Poly2(coeffs, field))
        rows.append(row)
    return rows


def degree_by_slicing(S: Scroll, plane: LinSubspace) -> int:
    """Degree of S read off det L_j(phi_i(s:t)) for a codimension-k plane."""
    if plane.n != S.n or plane.dim != S.n - S.k:
        raise PreconditionError(f"slicing plane must have dimension {S.n - S.k}")
    det = poly_det(_restricted_forms(S, plane.equations()))
    if det.is_zero:
        raise DegenerateError("slicing plane meets a ruling plane in positive dimension")
    return det.degree


class PlaneMeeting(NamedTuple):
    meets: bool
    params: tuple  # in-field parameters of ruling planes meeting the plane
    automatic: bool  # true when dimensions force an intersection


def scroll_meets_plane(S: Scroll, plane: LinSubspace) -> PlaneMeeting:
    """Whether a linear space meets the scroll.

    A ruling plane over (s:t) meets it iff L . phi(s:t) has rank < k, where L
    lists the equations of the plane.  With fewer than k equations this always
    happens; with exactly k the determinant has positive degree, so a common
    root exists over the algebraic closure.
    """
    if plane.is_empty:
        return PlaneMeeting(False, (), False)
    if plane.dim == 0:
        m = point_on_scroll(S, plane.rows[0])
        return PlaneMeeting(m.on_scroll, m.params, False)
    eqs = plane.equations()
    if len(eqs) <= S.k:
        return PlaneMeeting(True, (), True)
    minors = poly_minors(_restricted_forms(S, eqs), S.k)
    g = gcd_all(minors)
    if g is None:
        return PlaneMeeting(True, (), False)
    if g.degree == 0:
        return PlaneMeeting(False, (), False)
    params = tuple(r for r, _ in poly_roots(g).roots)
    return PlaneMeeting(True, params, False)


# ---------------------------------------------------------------------------
# Broken scrolls
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """A scroll or k-plane of a broken scroll.

    Every component after the first records the component it is glued to,
    the (k-1)-plane along which they meet, and the ruling parameter of that
    plane when the older component is a scroll.
    """

    body: Scroll | LinSubspace
    attached_to: int | None = None
    glue: LinSubspace | None = None
    param: Param | None = None

    @property
    def is_scroll(self) -> bool:
        return isinstance(self.body, Scroll)

    @property
    def degree(self) -> int:
        return self.body.d if self.is_scroll else 1

    def embed(self, emb: HyperplaneEmbedding) -> "Component":
        body = self.body.embed(emb) if self.is_scroll else emb.subspace(self.body)
        glue = None if self.glue is None else emb.subspace(self.glue)
        return Component(body, self.attached_to, glue, self.param)


@dataclass(frozen=True)
class BrokenScroll:
    """A connected union of scrolls and k-planes in P^n, with total degree d."""

    n: int
    k: int
    d: int
    components: tuple = dc_field(default_factory=tuple)

    def embed(self, emb: HyperplaneEmbedding) -> "BrokenScroll":
        return BrokenScroll(self.n + 1, self.k, self.d, tuple(c.embed(emb) for c in self.components))

    def attach(self, plane: LinSubspace, to: int, glue: LinSubspace, param: Param | None) -> "BrokenScroll":
        comp = Component(plane, to, glue, param)
        return BrokenScroll(self.n, self.k, self.d + 1, self.components + (comp,))

    @property
    def leaf(self) -> Component:
        return self.components[0]


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


class VerifyReport(NamedTuple):
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def _component_contains_point(comp: Component, x: ProjPoint) -> bool:
    if comp.is_scroll:
        return point_on_scroll(comp.body, x).on_scroll
    return comp.body.contains(x)


def _component_meets_plane(comp: Component, plane: LinSubspace) -> bool:
    from .projgeom import meet

    if comp.is_scroll:
        return scroll_meets_plane(comp.body, plane).meets
    return not meet(comp.body, plane).is_empty


def broken_scroll_verify(B: BrokenScroll, points: Sequence = (), planes: Sequence = ()) -> VerifyReport:
    """Check the structure of B and its incidences with the given points and planes."""
    checks: list[Check] = []
    total = sum(c.degree for c in B.components)
    checks.append(Check("degree sum", total == B.d, f"components sum to {total}, expected {B.d}"))
    checks.append(Check("ambient dimension", B.n == B.d + B.k - 1, f"n={B.n}, d+k-1={B.d + B.k - 1}"))
    for idx, comp in enumerate(B.components):
        body = comp.body
        dim_ok = body.k == B.k if comp.is_scroll else body.dim == B.k
        checks.append(Check(f"component {idx} has dimension k", dim_ok))
        if comp.attached_to is None:
            continue
        if not 0 <= comp.attached_to < idx:
            checks.append(Check(f"component {idx} attaches to an earlier one", False))
            continue
        old = B.components[comp.attached_to]
        glue = comp.glue
        ok = glue is not None and glue.dim == B.k - 1
        checks.append(Check(f"gluing plane {idx} is a (k-1)-plane", ok))
        if not ok:
            continue
        if old.is_scroll:
            if comp.param is None:
                checks.append(Check(f"gluing plane {idx} is a ruling plane", False, "no parameter recorded"))
            else:
                try:
                    ruling = fiber_plane(old.body, comp.param)
                    same = ruling == glue
                except DegenerateError:
                    same = False
                checks.append(Check(f"gluing plane {idx} is a ruling plane", same, f"param {comp.param}"))
        else:
            checks.append(Check(f"gluing plane {idx} lies in component {comp.attached_to}", old.body.contains(glue)))
        inside = body.contains(glue) if not comp.is_scroll else scroll_quadrics(body).contains_subspace(glue)
        checks.append(Check(f"gluing plane {idx} lies in component {idx}", inside))
    for i, x in enumerate(points):
        x = x if isinstance(x, ProjPoint) else ProjPoint(x)
        hit = next((j for j, c in enumerate(B.components) if _component_contains_point(c, x)), None)
        checks.append(Check(f"point {i} on the union", hit is not None, f"component {hit}"))
    for i, L in enumerate(planes):
        hit = next((j for j, c in enumerate(B.components) if _component_meets_plane(c, L)), None)
        checks.append(Check(f"plane {i} meets the union", hit is not None, f"component {hit}"))
    spans = [c.body.linear_span() if c.is_scroll else c.body for c in B.components]
    union = span(*spans) if spans else None
    full = union is not None and union.dim == B.n
    checks.append(Check("union spans the ambient space", full))
    return VerifyReport(tuple(checks))


# ---------------------------------------------------------------------------
# Fano schemes of linear spaces
# ---------------------------------------------------------------------------


class FanoComponent(NamedTuple):
    kind: str  # "fiber" (inside ruling planes) or "section" (spanned by degree-1 directrices)
    dimension: int
    note: str = ""


def fano_components(k: int, type_: Sequence[int], t: int) -> list[FanoComponent]:
    """Components of the variety of t-planes on a smooth scroll of the given type."""
    type_ = tuple(sorted(type_, reverse=True))
    if len(type_) != k or any(a < 1 for a in type_):
        raise PreconditionError("type must list k positive degrees")
    if not 1 <= t <= k - 1:
        raise PreconditionError(f"t must lie in [1, {k - 1}]")
    out = [FanoComponent("fiber", 1 + (t + 1) * (k - 1 - t))]
    j = type_.count(1)
    if t == 1 and j >= 1:
        note = "single line; a degenerate P^0 family" if j == 1 else ""
        out.append(FanoComponent("section", j - 1, note))
    return out


def gaussian_binomial(m: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^m."""
    if r < 0 or r > m:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def expected_line_count(type_: Sequence[int], q: int) -> int:
    """Closed-form number of F_q-lines on a smooth scroll of the given type."""
    k = len(type_)
    j = list(type_).count(1)
    fiber = (q + 1) * gaussian_binomial(k, 2, q)
    section = gaussian_binomial(j, 1, q) if j >= 1 else 0
    return fiber + section


def projective_points(field: PrimeField, m: int):
    """All points of P^m(F_p) as canonical tuples, in lexicographic order."""
    p = field.p
    for lead in range(m + 1):
        for tail in itertools.product(range(p), repeat=m - lead):
            yield tuple(field(v) for v in (0,) * lead + (1,) + tail)


def grassmannian_rows(field: PrimeField, m: int, r: int):
    """All r x m matrices in RREF of rank r over F_p (one per r-subspace)."""
    p = field.p
    for pivots in itertools.combinations(range(m), r):
        free = [(i, c) for i in range(r) for c in range(pivots[i] + 1, m) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * m for _ in range(r)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            yield [[field(v) for v in row] for row in rows]


class LineRecord(NamedTuple):
    line: LinSubspace
    kind: str  # "fiber" or "section"
    param: Param | None  # fiber parameter for fiber lines


def _line_on_quadrics(Q: QuadricSet, line: LinSubspace) -> bool:
    u, v = line.rows
    w = tuple(a + b for a, b in zip(u, v))
    return all(Q.vanishes_at(x) for x in (u, v, w))


def enumerate_lines_Fq(S: Scroll) -> list[LineRecord]:
    """Every F_p-line on a smooth scroll: lines in fibers and degree-1 sections."""
    field = S.field
    if not isinstance(field, PrimeField):
        raise PreconditionError("line enumeration needs a prime field")
    Q = scroll_quadrics(S)
    found: dict[LinSubspace, LineRecord] = {}
    k = S.k
    for param in projective_points(field, 1):
        basis = S.directrix_vectors(*param)
        for rows in grassmannian_rows(field, k, 2):
            vecs = [
                [sum((c * b[i] for c, b in zip(row, basis)), field.zero) for i in range(S.n + 1)] for row in rows
            ]
            line = LinSubspace(S.n, vecs, field)
            found.setdefault(line, LineRecord(line, "fiber", param))
    linear = [c for c in S.curves if c.degree == 1]
    for u in projective_points(field, len(linear) - 1) if linear else ():
        ends = []
        for s, t in ((1, 0), (0, 1)):
            acc = [field.zero] * (S.n + 1)
            for w, c in zip(u, linear):
                acc = [a + w * b for a, b in zip(acc, c.vector(s, t))]
            ends.append(acc)
        line = LinSubspace(S.n, ends, field)
        found.setdefault(line, LineRecord(line, "section", None))
    out = sorted(found.values(), key=lambda r: _line_key(r.line))
    bad = [r for r in out if not _line_on_quadrics(Q, r.line)]
    if bad:
        raise DegenerateError(f"{len(bad)} enumerated lines fail the quadric check")
    return out


def _line_key(L: LinSubspace):
    return tuple(int(x) for r in L.rows for x in r)


def classify_line(S: Scroll, line: LinSubspace) -> str:
    """'fiber' if the line lies in a ruling plane, 'section' if it lies in the
    span of the degree-1 directrices, otherwise 'other'."""

    u = line.rows[0]
    m = point_on_scroll(S, u)
    for param in m.params:
        if fiber_plane(S, param).contains(line):
            return "fiber"
    linear = [c for c in S.curves if c.degree == 1]
    if linear:
        span_lin = LinSubspace(S.n, [col for c in linear for col in c.columns()], S.field)
        if span_lin.contains(line):
            return "section"
    return "other"


def brute_force_lines(S: Scroll) -> list[LinSubspace]:
    """Every F_p-line on S, found from the point set cut out by the quadrics."""
    field = S.field
    if not isinstance(field, PrimeField):
        raise PreconditionError("brute force needs a prime field")
    Q = scroll_quadrics(S)
    pts = [x for x in projective_points(field, S.n) if Q.vanishes_at(x)]
    on = set(pts)
    lines: set[LinSubspace] = set()
    covered: set[frozenset] = set()
    for a, b in itertools.combinations(pts, 2):
        if frozenset((a, b)) in covered:
            continue
        L = LinSubspace(S.n, [a, b], field)
        members = [ProjPoint([x * ca + y * cb for ca, cb in zip(a, b)], field).coords
                   for x, y in ((1, 0),) + tuple((v, 1) for v in range(field.p))]
        if all(m in on for m in members):
            lines.add(L)
            covered.update(frozenset(pair) for pair in itertools.combinations(members, 2))
    return sorted(lines, key=_line_key)

