"""Recursive construction of broken-scroll witnesses for interpolation.

Each step lives in P^n = P^(d+k-1).  It builds a witness one degree lower,
places it in a random hyperplane H through an n x (n+1) embedding matrix,
and glues on a k-plane Y along a ruling plane of the innermost smooth scroll
(the leaf).  The result records, level by level, the configuration it passes
through and the plane it meets or contains.

Step kinds:

* ``leaf_line``   k = 1, d = 1: all of P^1.
* ``leaf_rnc``    k = 1: a rational normal curve through n+3 points, meeting
  a hyperplane through one of its points.
* ``base_points`` d = k: a Segre scroll through 3k+3 points, three on each of
  k spanning lines.
* ``base_plane``  d = k: a Segre scroll through 2k+2 points that contains a
  (k-1)-plane met by all k lines.
* ``mid_hyp``     k+1 <= d <= 2k-2: 2d+2 points and a contained (2k-d-1)-plane.
* ``mid``         k+1 <= d <= 2k-1: d+2k+2 points and a met 2(d-k)-plane.
* ``high``        d >= 2k (any d >= 2 when k = 1): d+2k+1 points and a met
  (d-2k+1)-plane.

When a step would ask for a 0-plane, its last point plays that role.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DegenerateError, PreconditionError, RetryExhausted
from .exactlin import Field, Matrix, rank_rows
from .interp import interpolation_numerics, schubert_planes
from .projgeom import (
    RETRIES,
    HyperplaneEmbedding,
    LinSubspace,
    ProjPoint,
    in_general_position,
    points_on_line,
    random_embedding,
    random_point,
    random_scalar,
    random_subspace,
    span,
)
from .rng import SplitMix64
from .scrollcore import (
    BrokenScroll,
    Check,
    Component,
    Scroll,
    VerifyReport,
    broken_scroll_verify,
    fiber_through_point,
    point_on_scroll,
    rnc_through_points,
    segre_from_config,
)

MEET = "meet"
CONTAIN = "contain"


@dataclass(frozen=True)
class Level:
    """One node of a witness tree.

    ``component`` is the leaf body for leaf kinds and the glued k-plane for
    the inductive kinds.  ``embedding`` maps the child's ambient space onto
    the hyperplane H of this level; ``line`` is the auxiliary line leaving H
    and ``junction`` the point q or plane Q where the new piece meets H.
    """

    kind: str
    d: int
    k: int
    points: tuple
    plane: LinSubspace
    plane_role: str
    component: Component
    embedding: Matrix | None = None
    line: LinSubspace | None = None
    junction: LinSubspace | None = None
    child: "Level | None" = None

    @property
    def n(self) -> int:
        return self.d + self.k - 1

    def depth(self) -> int:
        return 1 if self.child is None else 1 + self.child.depth()


@dataclass(frozen=True)
class WitnessTree:
    root: Level
    field: Field
    seed: int

    @property
    def d(self) -> int:
        return self.root.d

    @property
    def k(self) -> int:
        return self.root.k

    def levels(self) -> list[Level]:
        out, node = [], self.root
        while node is not None:
            out.append(node)
            node = node.child
        return out


def assemble(level: Level) -> BrokenScroll:
    """The broken scroll described by a level and everything below it."""
    if level.child is None:
        return BrokenScroll(level.n, level.k, level.d, (level.component,))
    inner = assemble(level.child).embed(HyperplaneEmbedding(level.embedding))
    c = level.component
    return inner.attach(c.body, c.attached_to, c.glue, c.param)


def _retry(site: str, attempt: Callable):
    last = None
    for _ in range(RETRIES):
        try:
            return attempt()
        except (DegenerateError, ZeroDivisionError) as exc:
            last = exc
    raise RetryExhausted(site, RETRIES, last)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DegenerateError(message)


def _point_off(field: Field, H: LinSubspace, rng: SplitMix64) -> ProjPoint:
    for _ in range(RETRIES):
        z = random_point(field, H.n, rng)
        if not H.contains(z):
            return z
    raise RetryExhausted("point off hyperplane", RETRIES)


def _leaf_fiber_of(B: BrokenScroll, plane: LinSubspace):
    """The ruling plane of the leaf scroll containing ``plane``."""
    leaf = B.leaf.body
    param, F = fiber_through_point(leaf, plane.rows[0])
    _require(F.contains(plane), "plane is not inside a ruling plane of the leaf")
    return param, F


# ---------------------------------------------------------------------------
# Leaves
# ---------------------------------------------------------------------------


def _leaf_line(field: Field, rng: SplitMix64) -> Level:
    whole = LinSubspace.whole(1, field)

    def attempt():
        pts = [random_point(field, 1, rng) for _ in range(5)]
        _require(len(set(pts)) == 5, "repeated point on P^1")
        return Level("leaf_line", 1, 1, tuple(pts[:4]), span(pts[4]), MEET, Component(whole))

    return _retry("leaf_line", attempt)


def _leaf_rnc(d: int, field: Field, rng: SplitMix64) -> Level:
    n = d

    def attempt():
        pts = [random_point(field, n, rng) for _ in range(n + 3)]
        curve = rnc_through_points(pts)
        x = curve(random_scalar(field, rng), field.one)
        plane = random_subspace(field, n, n - 1, rng, containing=x)
        return Level("leaf_rnc", d, 1, tuple(pts), plane, MEET, Component(Scroll([curve])))

    return _retry("leaf_rnc", attempt)


def _spanning_lines(field: Field, k: int, rng: SplitMix64, through: Sequence | None = None) -> list[LinSubspace]:
    n = 2 * k - 1
    lines = []
    for i in range(k):
        if through is None:
            L = random_subspace(field, n, 1, rng)
        else:
            L = span(through[i], random_point(field, n, rng))
        _require(L.dim == 1, "line collapsed to a point")
        lines.append(L)
    _require(rank_rows([r for L in lines for r in L.rows], n + 1, field) == n + 1, "lines do not span")
    return lines


def _schubert_plane(p: ProjPoint, lines: Sequence[LinSubspace]) -> LinSubspace:
    _require(not any(L.contains(p) for L in lines), "point on a line")
    res = schubert_planes(p, lines)
    _require(not res.positive_dimensional and len(res.planes) == 1, "no isolated Schubert plane")
    return res.planes[0]


def base_points_witness(k: int, field: Field, rng: SplitMix64) -> Level:
    """A Segre S(1^k) through 3k+3 points, three on each of k spanning lines."""
    if k < 2:
        raise PreconditionError("base_points_witness needs k >= 2")
    n = 2 * k - 1

    def attempt():
        lines = _spanning_lines(field, k, rng)
        on_lines = [q for L in lines for q in points_on_line(field, L, 3, rng)]
        free = [random_point(field, n, rng) for _ in range(3)]
        planes = [_schubert_plane(p, lines) for p in free]
        S = segre_from_config(lines, *planes)
        pts = free + on_lines
        return Level("base_points", k, k, tuple(pts[:-1]), span(pts[-1]), MEET, Component(S))

    return _retry("base_points", attempt)


def base_plane_witness(k: int, field: Field, rng: SplitMix64) -> Level:
    """A Segre S(1^k) through 2k+2 points containing a (k-1)-plane."""
    if k < 2:
        raise PreconditionError("base_plane_witness needs k >= 2")
    n = 2 * k - 1

    def attempt():
        plane = random_subspace(field, n, k - 1, rng)
        anchors = [random_point(field, n, rng, plane) for _ in range(k)]
        lines = _spanning_lines(field, k, rng, through=anchors)
        _require(all(not plane.contains(L) for L in lines), "line inside the plane")
        on_lines = [q for a, L in zip(anchors, lines) for q in points_on_line(field, L, 2, rng, avoid=(a,))]
        free = [random_point(field, n, rng) for _ in range(2)]
        L1, L2 = (_schubert_plane(p, lines) for p in free)
        S = segre_from_config(lines, plane, L1, L2)
        return Level("base_plane", k, k, tuple(free + on_lines), plane, CONTAIN, Component(S))

    return _retry("base_plane", attempt)


# ---------------------------------------------------------------------------
# Inductive steps
# ---------------------------------------------------------------------------


def _embed_child(child: Level, field: Field, rng: SplitMix64):
    n = child.n + 1
    emb = random_embedding(field, n, rng)
    inner = assemble(child).embed(emb)
    pts = [emb.point(p) for p in child.points]
    return emb, inner, pts, emb.subspace(child.plane)


def high_step(d: int, k: int, field: Field, rng: SplitMix64, child: Level | None = None) -> Level:
    """Glue a k-plane onto a degree d-1 witness placed in a hyperplane.

    One inner point q on the leaf is traded for two points on a line through
    q leaving H; the met plane gains one dimension off H.
    """
    if k == 1 and d < 2 or k > 1 and d < 2 * k:
        raise PreconditionError("high_step needs d >= 2k (d >= 2 when k = 1)")
    if child is None:
        child = _leaf_rnc(d - 1, field, rng) if k == 1 else interpolate_level(d - 1, k, field, rng)

    def attempt():
        emb, inner, pts, plane = _embed_child(child, field, rng)
        H = emb.image
        leaf = inner.leaf.body
        glues = [c.glue for c in inner.components[1:]]
        usable = [
            i
            for i, x in enumerate(pts)
            if point_on_scroll(leaf, x).on_scroll and not any(G.contains(x) for G in glues)
        ]
        _require(bool(usable), "no inner point on the leaf away from the gluing planes")
        qi = rng.choice(usable)
        q = pts[qi]
        z = _point_off(field, H, rng)
        line = span(q, z)
        extra = points_on_line(field, line, 2, rng, avoid=(q,))
        w = _point_off(field, H, rng)
        met = span(plane, w)
        param, P = fiber_through_point(leaf, q)
        Y = span(line, P)
        _require(Y.dim == k, "glued plane has the wrong dimension")
        outer = tuple(pts[:qi] + pts[qi + 1 :] + extra)
        comp = Component(Y, 0, P, param)
        return Level("high", d, k, outer, met, MEET, comp, emb.matrix, line, span(q), child)

    return _retry("high_step", attempt)


def _mid_child(d: int, k: int, field: Field, rng: SplitMix64) -> Level:
    if d - 1 == k:
        return base_plane_witness(k, field, rng)
    return mid_hyp_step(d - 1, k, field, rng)


def mid_hyp_step(d: int, k: int, field: Field, rng: SplitMix64) -> Level:
    """2d+2 points and a contained (2k-d-1)-plane, from the degree d-1 case."""
    if not k + 1 <= d <= 2 * k - 2:
        raise PreconditionError("mid_hyp_step needs k+1 <= d <= 2k-2")
    child = _mid_child(d, k, field, rng)

    def attempt():
        emb, inner, pts, Q = _embed_child(child, field, rng)
        H = emb.image
        plane = random_subspace(field, Q.n, Q.dim - 1, rng, within=Q)
        q0 = random_point(field, Q.n, rng, Q)
        _require(not plane.contains(q0), "junction point inside the contained plane")
        z = _point_off(field, H, rng)
        line = span(q0, z)
        extra = points_on_line(field, line, 2, rng, avoid=(q0,))
        param, S = _leaf_fiber_of(inner, Q)
        Y = span(S, line)
        _require(Y.dim == k, "glued plane has the wrong dimension")
        comp = Component(Y, 0, S, param)
        return Level("mid_hyp", d, k, tuple(pts + extra), plane, CONTAIN, comp, emb.matrix, line, Q, child)

    return _retry("mid_hyp_step", attempt)


def mid_step(d: int, k: int, field: Field, rng: SplitMix64) -> Level:
    """d+2k+2 points and a met 2(d-k)-plane, from a contained-plane witness."""
    if not k + 1 <= d <= 2 * k - 1:
        raise PreconditionError("mid_step needs k+1 <= d <= 2k-1")
    child = _mid_child(d, k, field, rng)

    def attempt():
        emb, inner, pts, Q = _embed_child(child, field, rng)
        H = emb.image
        z = _point_off(field, H, rng)
        P = span(Q, z)
        extra = [random_point(field, P.n, rng, P) for _ in range(2 * k - d + 2)]
        _require(in_general_position(extra, P.dim), "points in P are not general")
        _require(not any(H.contains(x) for x in extra), "point of P inside H")
        param, R = _leaf_fiber_of(inner, Q)
        Y = span(R, z)
        _require(Y.dim == k, "glued plane has the wrong dimension")
        comp = Component(Y, 0, R, param)
        if d == 2 * k - 1:
            outer, met = tuple(pts + extra[:-1]), span(extra[-1])
        else:
            anchor = random_point(field, Q.n, rng, Q)
            met = random_subspace(field, Q.n, 2 * (d - k), rng, containing=anchor)
            outer = tuple(pts + extra)
        return Level("mid", d, k, outer, met, MEET, comp, emb.matrix, P, Q, child)

    return _retry("mid_step", attempt)


def interpolate_level(d: int, k: int, field: Field, rng: SplitMix64) -> Level:
    if k < 1 or d < k:
        raise PreconditionError(f"need d >= k >= 1, got d={d}, k={k}")
    if k == 1:
        if d == 1:
            return _leaf_line(field, rng)
        if d == 2:
            return _leaf_rnc(2, field, rng)
        return high_step(d, 1, field, rng)
    if d == k:
        return base_points_witness(k, field, rng)
    if d <= 2 * k - 1:
        return mid_step(d, k, field, rng)
    return high_step(d, k, field, rng)


def interpolate(d: int, k: int, seed: int, field: Field) -> WitnessTree:
    """A verified-shape witness of degree d and dimension k, deterministic in (seed, field)."""
    rng = SplitMix64(seed)
    return WitnessTree(interpolate_level(d, k, field, rng), field, seed)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def _contained_in_union(B: BrokenScroll, plane: LinSubspace) -> bool:
    for comp in B.components:
        if comp.is_scroll:
            m = point_on_scroll(comp.body, plane.rows[0])
            from .scrollcore import fiber_plane

            if any(fiber_plane(comp.body, t).contains(plane) for t in m.params):
                return True
        elif comp.body.contains(plane):
            return True
    return False


def verify_level(level: Level) -> VerifyReport:
    """Check one level's witness against that level's own configuration."""
    B = assemble(level)
    planes = [level.plane] if level.plane_role == MEET else []
    report = broken_scroll_verify(B, level.points, planes)
    checks = list(report.checks)
    if level.plane_role == CONTAIN:
        checks.append(Check("contained plane lies in a component", _contained_in_union(B, level.plane)))
    return VerifyReport(tuple(checks))


def verify_witness(tree: WitnessTree, all_levels: bool = True) -> VerifyReport:
    """Root configuration checks, the expected counts, and optionally every level."""
    root = tree.root
    q, lam = interpolation_numerics(root.d, root.k)
    checks = [
        Check("point count matches interpolation numerics", len(root.points) == q, f"{len(root.points)} vs {q}"),
        Check("plane dimension matches interpolation numerics", root.plane.dim == lam, f"{root.plane.dim} vs {lam}"),
        Check("root plane is to be met", root.plane_role == MEET),
    ]
    levels = tree.levels() if all_levels else [root]
    for depth, level in enumerate(levels):
        for c in verify_level(level).checks:
            checks.append(Check(f"level {depth} ({level.kind}, d={level.d}): {c.name}", c.passed, c.detail))
    return VerifyReport(tuple(checks))
