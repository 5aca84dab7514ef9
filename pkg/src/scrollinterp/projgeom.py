"""Projective points, linear subspaces, projectivities and seeded sampling.

Vectors are rows: a point of P^n is a length n+1 tuple and a subspace is the
row span of its basis.  ``dim`` is projective dimension throughout, with the
empty subspace at dimension -1.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateError, PreconditionError, RetryExhausted
from .exactlin import (
    QQ,
    Field,
    Matrix,
    canonical_vector,
    infer_field,
    kernel_rows,
    rank_rows,
    rref_rows,
)
from .rng import SplitMix64

RETRIES = 100


class ProjPoint:
    """A point of P^n stored in projective normal form."""

    __slots__ = ("coords", "field")

    def __init__(self, coords: Sequence, field: Field | None = None):
        coords = list(coords)
        if field is None:
            field = infer_field(coords)
        vec = canonical_vector(coords, field)
        if all(x == 0 for x in vec):
            raise PreconditionError("the zero vector is not a projective point")
        self.coords = vec
        self.field = field

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return "(" + ":".join(str(x) for x in self.coords) + ")"


class LinSubspace:
    """A linear subspace of P^n, stored as the RREF of a spanning set."""

    __slots__ = ("n", "rows", "field")

    def __init__(self, n: int, rows: Iterable[Sequence] = (), field: Field | None = None):
        rows = [tuple(r) for r in rows]
        if any(len(r) != n + 1 for r in rows):
            raise PreconditionError(f"spanning vectors must have length {n + 1}")
        if field is None:
            field = infer_field(x for r in rows for x in r)
        if rows:
            R, piv = rref_rows(rows, n + 1, field)
            rows = [tuple(r) for r in R[: len(piv)]]
        self.n = n
        self.rows = tuple(rows)
        self.field = field

    @classmethod
    def whole(cls, n: int, field: Field) -> "LinSubspace":
        return cls(n, [[1 if i == j else 0 for j in range(n + 1)] for i in range(n + 1)], field)

    @classmethod
    def from_equations(cls, n: int, equations: Sequence[Sequence], field: Field) -> "LinSubspace":
        """The common zero locus of linear forms given as coefficient rows."""
        eqs = [list(e) for e in equations]
        if not eqs:
            return cls.whole(n, field)
        return cls(n, kernel_rows(eqs, n + 1, field), field)

    @property
    def dim(self) -> int:
        return len(self.rows) - 1

    @property
    def is_empty(self) -> bool:
        return not self.rows

    def equations(self) -> list[tuple]:
        """Canonical basis of linear forms vanishing on the subspace."""
        if not self.rows:
            return [tuple(self.field.one if i == j else self.field.zero for j in range(self.n + 1))
                    for i in range(self.n + 1)]
        return kernel_rows(self.rows, self.n + 1, self.field)

    def basis_points(self) -> list[ProjPoint]:
        return [ProjPoint(r, self.field) for r in self.rows]

    def contains(self, item) -> bool:
        vecs = _vectors(item)
        if not vecs:
            return True
        return rank_rows(list(self.rows) + vecs, self.n + 1, self.field) == len(self.rows)

    def __contains__(self, item) -> bool:
        return self.contains(item)

    def __eq__(self, other):
        return (
            isinstance(other, LinSubspace)
            and self.n == other.n
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.field, self.rows))

    def __repr__(self):
        return f"LinSubspace(dim={self.dim} in P^{self.n}, rows={[list(map(str, r)) for r in self.rows]})"


def _vectors(item) -> list[tuple]:
    if isinstance(item, ProjPoint):
        return [item.coords]
    if isinstance(item, LinSubspace):
        return list(item.rows)
    return [tuple(item)]


def _ambient(item) -> int:
    if isinstance(item, LinSubspace):
        return item.n
    return len(item) - 1


def span(*items) -> LinSubspace:
    """Smallest linear subspace containing every point and subspace given."""
    if len(items) == 1 and isinstance(items[0], (list, tuple)) and items[0] and not _is_scalar(items[0][0]):
        items = tuple(items[0])
    if not items:
        raise PreconditionError("span of nothing")
    n = _ambient(items[0])
    if any(_ambient(it) != n for it in items):
        raise PreconditionError("span of items in different ambient spaces")
    field = _field_of_items(items)
    vecs = [v for it in items for v in _vectors(it)]
    return LinSubspace(n, vecs, field)


def _is_scalar(x) -> bool:
    return not isinstance(x, (ProjPoint, LinSubspace, list, tuple))


def _field_of_items(items) -> Field:
    for it in items:
        if isinstance(it, (ProjPoint, LinSubspace)):
            return it.field
    return infer_field(x for it in items for x in it)


def meet(A: LinSubspace, B: LinSubspace) -> LinSubspace:
    """Intersection of two subspaces, via the kernel of their stacked equations."""
    if A.n != B.n:
        raise PreconditionError("meet of subspaces in different ambient spaces")
    if A.is_empty or B.is_empty:
        return LinSubspace(A.n, [], A.field)
    eqs = A.equations() + B.equations()
    return LinSubspace.from_equations(A.n, eqs, A.field)


def rank_of(vectors: Sequence[Sequence], field: Field) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return rank_rows(vectors, len(vectors[0]), field)


def in_general_position(points: Sequence, n: int) -> bool:
    """True iff every subset of at most n+1 of the points is independent."""
    pts = [tuple(p) for p in points]
    if not pts:
        return True
    field = _field_of_items(points)
    m = min(len(pts), n + 1)
    for sub in itertools.combinations(pts, m):
        if rank_of(sub, field) < m:
            return False
    return True


# ---------------------------------------------------------------------------
# Projectivities
# ---------------------------------------------------------------------------


class ProjMap:
    """An invertible linear map of P^n, acting on column vectors, up to scale."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        if matrix.nrows != matrix.ncols:
            raise PreconditionError("a projectivity needs a square matrix")
        if not matrix.is_invertible():
            raise DegenerateError("projectivity matrix is singular")
        lead = next(x for x in matrix.rows[0] if x != 0)
        self.matrix = matrix.scale(matrix.field.one / lead)

    @property
    def n(self) -> int:
        return self.matrix.nrows - 1

    @property
    def field(self) -> Field:
        return self.matrix.field

    def vector(self, v: Sequence) -> tuple:
        return self.matrix @ v

    def __call__(self, p):
        if isinstance(p, LinSubspace):
            return LinSubspace(p.n, [self.vector(r) for r in p.rows], p.field)
        return ProjPoint(self.vector(p), self.field)

    def inverse(self):
        return type(self)(self.matrix.inverse())

    def __matmul__(self, other: "ProjMap"):
        return type(self)(self.matrix @ other.matrix)

    def __eq__(self, other):
        return isinstance(other, ProjMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"{type(self).__name__}({self.matrix!r})"


class MoebiusMap(ProjMap):
    """A projectivity of the parameter line P^1, acting on (s:t)."""

    def __init__(self, matrix: Matrix):
        if matrix.shape != (2, 2):
            raise PreconditionError("a Moebius map is 2x2")
        super().__init__(matrix)

    def params(self, s, t) -> tuple:
        """Image of the parameter (s, t) as an unnormalised pair."""
        return self.matrix @ (s, t)


def frame_map(points: Sequence) -> ProjMap:
    """The projectivity sending e_0, ..., e_n and (1:...:1) to ``points``."""
    pts = [tuple(p) for p in points]
    n = len(pts) - 2
    if n < 1 or any(len(p) != n + 1 for p in pts):
        raise PreconditionError("frame_map needs n+2 points of P^n")
    field = _field_of_items(points)
    P = Matrix.from_columns(pts[: n + 1], field)
    ledger = [("first n+1 points independent", P.is_invertible())]
    if not ledger[0][1]:
        raise DegenerateError("frame points are dependent", ledger)
    lam = P.inverse() @ pts[n + 1]
    ok = all(x != 0 for x in lam)
    ledger.append(("last point off every coordinate hyperplane", ok))
    if not ok:
        raise DegenerateError("last frame point lies on a hyperplane of the others", ledger)
    cols = [[x * lam[j] for x in pts[j]] for j in range(n + 1)]
    return ProjMap(Matrix.from_columns(cols, field))


def moebius_through_three(a, b, c) -> MoebiusMap:
    """The Moebius map with (1:0) -> a, (1:1) -> b, (0:1) -> c."""
    try:
        m = frame_map([a, c, b])
    except DegenerateError as exc:
        raise DegenerateError("Moebius data must be three distinct parameters", exc.ledger) from None
    return MoebiusMap(m.matrix)


# ---------------------------------------------------------------------------
# Embeddings of hyperplanes
# ---------------------------------------------------------------------------


class HyperplaneEmbedding:
    """Identifies P^(n-1) with a hyperplane H of P^n through an n x (n+1) matrix.

    A point x of P^(n-1) goes to the row vector x . E.
    """

    __slots__ = ("matrix", "image")

    def __init__(self, matrix: Matrix):
        if matrix.ncols != matrix.nrows + 1 or matrix.rank() != matrix.nrows:
            raise DegenerateError("embedding matrix must have full row rank")
        self.matrix = matrix
        self.image = LinSubspace(matrix.ncols - 1, matrix.rows, matrix.field)

    def vector(self, v: Sequence) -> tuple:
        E = self.matrix
        field = E.field
        out = [field.zero] * E.ncols
        for x, row in zip(v, E.rows):
            if x != 0:
                out = [o + x * e for o, e in zip(out, row)]
        return tuple(out)

    def point(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint(self.vector(p.coords), p.field)

    def subspace(self, L: LinSubspace) -> LinSubspace:
        return LinSubspace(self.image.n, [self.vector(r) for r in L.rows], L.field)


# ---------------------------------------------------------------------------
# Seeded sampling
# ---------------------------------------------------------------------------


def random_scalar(field: Field, rng: SplitMix64):
    """Uniform in [-999, 999] over Q, uniform in [0, p) over F_p."""
    if field is QQ:
        return field(rng.randint(-999, 999))
    return field(rng.below(field.p))


def random_vector(field: Field, size: int, rng: SplitMix64, nonzero: bool = True) -> tuple:
    while True:
        v = tuple(random_scalar(field, rng) for _ in range(size))
        if not nonzero or any(x != 0 for x in v):
            return v


def random_point(field: Field, n: int, rng: SplitMix64, within: LinSubspace | None = None) -> ProjPoint:
    """A random point of P^n, or of the subspace ``within``."""
    if within is None:
        return ProjPoint(random_vector(field, n + 1, rng), field)
    if within.is_empty:
        raise PreconditionError("cannot sample from the empty subspace")
    while True:
        c = random_vector(field, len(within.rows), rng)
        v = [field.zero] * (n + 1)
        for ci, r in zip(c, within.rows):
            if ci != 0:
                v = [a + ci * b for a, b in zip(v, r)]
        if any(x != 0 for x in v):
            return ProjPoint(v, field)


def random_subspace(
    field: Field,
    n: int,
    dim: int,
    rng: SplitMix64,
    within: LinSubspace | None = None,
    containing: LinSubspace | ProjPoint | None = None,
) -> LinSubspace:
    """A random ``dim``-plane inside ``within`` that contains ``containing``."""
    if containing is None:
        base = LinSubspace(n, [], field)
    elif isinstance(containing, ProjPoint):
        base = span(containing)
    else:
        base = containing
    limit = n if within is None else within.dim
    if not base.dim <= dim <= limit:
        raise PreconditionError(f"cannot fit a {dim}-plane between dims {base.dim} and {limit}")
    for _ in range(RETRIES):
        L = base
        while L.dim < dim:
            L = span(L, random_point(field, n, rng, within)) if not L.is_empty else span(
                random_point(field, n, rng, within)
            )
        if L.dim == dim:
            return L
    raise RetryExhausted("random_subspace", RETRIES)


def random_invertible(field: Field, size: int, rng: SplitMix64) -> Matrix:
    for _ in range(RETRIES):
        M = Matrix([random_vector(field, size, rng) for _ in range(size)], field)
        if M.is_invertible():
            return M
    raise RetryExhausted("random_invertible", RETRIES)


def random_embedding(field: Field, n: int, rng: SplitMix64) -> HyperplaneEmbedding:
    """A random identification of P^(n-1) with a hyperplane of P^n."""
    for _ in range(RETRIES):
        E = Matrix([random_vector(field, n + 1, rng) for _ in range(n)], field)
        if E.rank() == n:
            return HyperplaneEmbedding(E)
    raise RetryExhausted("random_embedding", RETRIES)


def points_on_line(field: Field, line: LinSubspace, count: int, rng: SplitMix64, avoid=()) -> list[ProjPoint]:
    """``count`` distinct random points of a line, different from ``avoid``."""
    if line.dim != 1:
        raise PreconditionError("points_on_line needs a line")
    out: list[ProjPoint] = []
    taken = set(avoid)
    for _ in range(RETRIES * count):
        p = random_point(field, line.n, rng, line)
        if p not in taken:
            out.append(p)
            taken.add(p)
            if len(out) == count:
                return out
    raise RetryExhausted("points_on_line", RETRIES)


class Configuration(NamedTuple):
    points: tuple
    planes: tuple


def random_config(
    n: int,
    field: Field,
    seed: int | SplitMix64,
    n_points: int = 0,
    plane_dims: Sequence[int] = (),
    points_within: LinSubspace | None = None,
    planes_meeting: LinSubspace | None = None,
) -> Configuration:
    """Seeded random points and planes in P^n under simple incidence constraints.

    ``points_within`` confines the points to a subspace (for example a
    hyperplane); the points must then be in general position inside it.
    ``planes_meeting`` makes every plane pass through a random point of the
    given subspace.  Up to 100 resamples are made before giving up.
    """
    rng = seed if isinstance(seed, SplitMix64) else SplitMix64(seed)
    room = n if points_within is None else points_within.dim
    last = None
    for _ in range(RETRIES):
        pts = tuple(random_point(field, n, rng, points_within) for _ in range(n_points))
        if not in_general_position(pts, room):
            last = DegenerateError("points not in general position")
            continue
        planes = []
        for d in plane_dims:
            anchor = random_point(field, n, rng, planes_meeting) if planes_meeting is not None else None
            planes.append(random_subspace(field, n, d, rng, containing=anchor))
        return Configuration(pts, tuple(planes))
    raise RetryExhausted("random_config", RETRIES, last)


def retry(site: str, attempt, attempts: int = RETRIES):
    """Call ``attempt()`` until it returns without a geometric failure."""
    last = None
    for _ in range(attempts):
        try:
            return attempt()
        except (DegenerateError, ZeroDivisionError) as exc:
            last = exc
    raise RetryExhausted(site, attempts, last)
