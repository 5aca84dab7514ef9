"""JSON encoding of scalars, subspaces, scrolls and witness trees.

Rationals are strings "a/b" (or "a" for integers).  Prime-field scalars are
plain integers, and the document carries the modulus once at the top level.
Every encoder has a decoder, and decoding then re-encoding reproduces the
same text.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from typing import Any

from .errors import PreconditionError
from .exactlin import GF, QQ, Field, Matrix, ModP, PrimeField
from .pipeline import Level, WitnessTree
from .projgeom import LinSubspace, ProjPoint
from .scrollcore import Component, RatCurveParam, Scroll

FORMAT = "scrollinterp/1"


def field_header(field: Field) -> dict:
    if isinstance(field, PrimeField):
        return {"field": field.name, "modulus": field.p}
    return {"field": "Q"}


def field_from_header(doc: dict) -> Field:
    name = doc.get("field")
    if name == "Q":
        return QQ
    if isinstance(name, str) and name.startswith("Fp:"):
        p = doc.get("modulus")
        if p is None or int(name[3:]) != p:
            raise PreconditionError("field descriptor and modulus disagree")
        return GF(p)
    raise PreconditionError(f"unknown field {name!r}")


def enc_scalar(x) -> Any:
    if isinstance(x, ModP):
        return x.v
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dec_scalar(v, field: Field):
    if field is QQ:
        if isinstance(v, int) and not isinstance(v, bool):
            return Fraction(v)
        if not isinstance(v, str):
            raise PreconditionError(f"rational scalars are strings or integers, got {v!r}")
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise PreconditionError(f"bad rational {v!r}") from None
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < field.p:
        raise PreconditionError(f"bad residue {v!r} mod {field.p}")
    return field(v)


def enc_vector(v) -> list:
    return [enc_scalar(x) for x in v]


def dec_vector(v, field: Field) -> list:
    if not isinstance(v, list):
        raise PreconditionError("expected a coordinate array")
    return [dec_scalar(x, field) for x in v]


def enc_point(p: ProjPoint) -> list:
    return enc_vector(p.coords)


def dec_point(v, field: Field) -> ProjPoint:
    return ProjPoint(dec_vector(v, field), field)


def enc_matrix(M: Matrix) -> list:
    return [enc_vector(r) for r in M.rows]


def dec_matrix(rows, field: Field) -> Matrix:
    if not isinstance(rows, list) or not rows:
        raise PreconditionError("expected a nonempty matrix")
    return Matrix([dec_vector(r, field) for r in rows], field)


def enc_subspace(L: LinSubspace) -> dict:
    return {"n": L.n, "rows": [enc_vector(r) for r in L.rows]}


def dec_subspace(doc, field: Field) -> LinSubspace:
    return LinSubspace(doc["n"], [dec_vector(r, field) for r in doc["rows"]], field)


def enc_scroll(S: Scroll) -> dict:
    return {"type": list(S.type), "matrix": enc_matrix(S.matrix)}


def dec_scroll(doc, field: Field) -> Scroll:
    M = dec_matrix(doc["matrix"], field)
    curves, pos = [], 0
    for a in doc["type"]:
        cols = [M.column(j) for j in range(pos, pos + a + 1)]
        curves.append(RatCurveParam(Matrix.from_columns(cols, field)))
        pos += a + 1
    if pos != M.ncols:
        raise PreconditionError("scroll type does not match the matrix")
    return Scroll(curves)


def enc_param(t) -> list | None:
    return None if t is None else enc_vector(t)


def dec_param(v, field: Field):
    return None if v is None else tuple(dec_vector(v, field))


def enc_component(c: Component) -> dict:
    body = {"scroll": enc_scroll(c.body)} if c.is_scroll else {"plane": enc_subspace(c.body)}
    return {
        **body,
        "attached_to": c.attached_to,
        "glue": None if c.glue is None else enc_subspace(c.glue),
        "param": enc_param(c.param),
    }


def dec_component(doc, field: Field) -> Component:
    body = dec_scroll(doc["scroll"], field) if "scroll" in doc else dec_subspace(doc["plane"], field)
    glue = None if doc["glue"] is None else dec_subspace(doc["glue"], field)
    return Component(body, doc["attached_to"], glue, dec_param(doc["param"], field))


def enc_level(L: Level) -> dict:
    return {
        "kind": L.kind,
        "d": L.d,
        "k": L.k,
        "points": [enc_point(p) for p in L.points],
        "plane": enc_subspace(L.plane),
        "plane_role": L.plane_role,
        "component": enc_component(L.component),
        "embedding": None if L.embedding is None else enc_matrix(L.embedding),
        "line": None if L.line is None else enc_subspace(L.line),
        "junction": None if L.junction is None else enc_subspace(L.junction),
        "child": None if L.child is None else enc_level(L.child),
    }


def dec_level(doc, field: Field) -> Level:
    opt = lambda key, dec: None if doc[key] is None else dec(doc[key], field)  # noqa: E731
    return Level(
        doc["kind"],
        doc["d"],
        doc["k"],
        tuple(dec_point(p, field) for p in doc["points"]),
        dec_subspace(doc["plane"], field),
        doc["plane_role"],
        dec_component(doc["component"], field),
        opt("embedding", dec_matrix),
        opt("line", dec_subspace),
        opt("junction", dec_subspace),
        opt("child", dec_level),
    )


def enc_witness(T: WitnessTree) -> dict:
    return {
        "format": FORMAT,
        **field_header(T.field),
        "seed": T.seed,
        "d": T.d,
        "k": T.k,
        "tree": enc_level(T.root),
    }


def dec_witness(doc: dict) -> WitnessTree:
    if doc.get("format") != FORMAT:
        raise PreconditionError("not a witness document")
    field = field_from_header(doc)
    try:
        return WitnessTree(dec_level(doc["tree"], field), field, doc["seed"])
    except (KeyError, TypeError) as exc:
        raise PreconditionError(f"malformed witness: {exc}") from None


def _format(obj, depth: int) -> str:
    pad, inner = " " * depth, " " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = (f"{inner}{json.dumps(k)}: {_format(v, depth + 1)}" for k, v in obj.items())
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        return "[\n" + ",\n".join(inner + _format(v, depth + 1) for v in obj) + f"\n{pad}]"
    # scalars and flat coordinate vectors stay on one line
    return json.dumps(obj, ensure_ascii=False)


def dumps(doc: dict) -> str:
    """Indented JSON with each flat vector kept on a single line."""
    return _format(doc, 0) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise PreconditionError("top-level JSON value must be an object")
    return doc


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
