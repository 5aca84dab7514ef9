"""Runners for the acceptance criteria.

Each runner returns a Result whose digest hashes every serialized output, so
criterion 7 can rerun them in a fresh interpreter and compare bytes.
Running this file directly prints the digests as JSON.
"""

from __future__ import annotations

import hashlib
import json
import sys
import time
from typing import Callable, NamedTuple

from scrollinterp import serialize as ser
from scrollinterp.exactlin import GF, QQ
from scrollinterp.instances import (
    random_scroll,
    rnc_instance,
    schubert_instance,
    segre_instance,
    slicing_plane,
)
from scrollinterp.interp import (
    dim_identity_report,
    hilb_dim,
    interpolation_numerics,
    plane_meets_lines,
    schubert_planes,
    schubert_planes_enumerate,
    syt_count,
)
from scrollinterp.pipeline import interpolate, verify_witness
from scrollinterp.projgeom import retry
from scrollinterp.rng import SplitMix64
from scrollinterp.scrollcore import (
    Scroll,
    brute_force_lines,
    classify_line,
    degree_by_slicing,
    enumerate_lines_Fq,
    expected_line_count,
    fano_components,
    point_on_scroll,
    rnc_parameters_of,
    rnc_through_points,
    scroll_quadrics,
    segre_from_config,
)


class Result(NamedTuple):
    passed: bool
    detail: str
    digest: str
    seconds: float


class _Digest:
    def __init__(self):
        self.h = hashlib.sha256()

    def add(self, obj) -> None:
        self.h.update(ser.dumps({"v": obj}).encode())

    def hex(self) -> str:
        return self.h.hexdigest()


def _timed(fn: Callable[[], tuple[bool, str, str]], budget: float) -> Result:
    start = time.perf_counter()
    passed, detail, digest = fn()
    elapsed = time.perf_counter() - start
    if elapsed > budget:
        passed = False
        detail += f"; over the {budget:.0f}s budget"
    return Result(passed, detail, digest, elapsed)


def rnc_runs() -> tuple[bool, str, str]:
    dig, bad, total = _Digest(), [], 0
    for field in (QQ, GF(101)):
        for n in range(2, 7):
            for seed in range(20):
                total += 1
                pts = list(rnc_instance(n, field, seed))
                curve = rnc_through_points(pts)
                S = Scroll([curve])
                hits = all(curve(*t) == p for p, t in zip(pts, rnc_parameters_of(pts)))
                members = all(point_on_scroll(S, p).on_scroll for p in pts)
                rng = SplitMix64(seed)
                deg = retry("slice", lambda: degree_by_slicing(S, slicing_plane(n, 1, field, rng)))
                Q = scroll_quadrics(S)
                shuffled = SplitMix64(seed + 1).shuffled(pts)
                same = scroll_quadrics(Scroll([rnc_through_points(shuffled)])) == Q
                if not (hits and members and deg == n and same):
                    bad.append((field.name, n, seed))
                dig.add([ser.enc_matrix(curve.coeffs), [ser.enc_vector(r) for r in Q.rows], deg])
    return not bad, f"{total - len(bad)}/{total} instances verified", dig.hex()


def segre_runs() -> tuple[bool, str, str]:
    dig, bad, total = _Digest(), [], 0
    for k in (2, 3, 4):
        for seed in range(50):
            field = QQ if seed % 2 == 0 else GF(101)
            total += 1
            inst = segre_instance(k, field, seed)
            S = segre_from_config(inst.lines, *inst.planes)
            Q = scroll_quadrics(S)
            contained = all(Q.contains_subspace(L) for L in inst.lines + inst.planes)
            order = SplitMix64(seed).shuffled(range(k))
            same = scroll_quadrics(segre_from_config([inst.lines[i] for i in order], *inst.planes)) == Q
            if not (contained and same):
                bad.append((k, seed))
            dig.add([ser.enc_scroll(S), [ser.enc_vector(r) for r in Q.rows]])
    return not bad, f"{total - len(bad)}/{total} configurations verified", dig.hex()


def formula_runs() -> tuple[bool, str, str]:
    dig, bad = _Digest(), []
    for k in range(1, 7):
        for d in range(k, 21):
            h = hilb_dim(d, k)
            q, lam = interpolation_numerics(d, k)
            n = d + k - 1
            if h != (d - 1) * (d + 2 * k + 1) + 2 * k - 2 or q * (n - k) + (n - k - lam) != h:
                bad.append(("grid", d, k))
            dig.add([d, k, h, q, lam])
        for d in range(2 * k - 1, 2 * k + 7):
            checks = dim_identity_report(d, k)
            if not all(c.holds for c in checks):
                bad.append(("incidence", d, k))
            dig.add([[c.name, list(c.values)] for c in checks])
    for k in range(1, 9):
        for d in range(k + 1, 2 * k - 1):
            gap = {c.name: c for c in dim_identity_report(d, k)}["component gap is 2(k-2)"]
            if not gap.holds:
                bad.append(("gap", d, k))
            dig.add(list(gap.values))
    return not bad, "all identities exact" if not bad else f"failures: {bad[:5]}", dig.hex()


FANO_TYPES = [(1, 1), (2, 1), (1, 1, 1), (2, 2), (3, 1), (2, 1, 1), (1, 1, 1, 1)]


def fano_runs() -> tuple[bool, str, str]:
    dig, bad, lines_seen = _Digest(), [], 0
    if [c.dimension for c in fano_components(3, (1, 1, 1), 1)] != [3, 2]:
        bad.append("S(1,1,1) t=1 dims")
    for k in range(3, 6):
        for type_ in ((1,) * k, (2,) + (1,) * (k - 1)):
            for t in range(2, k):
                if len(fano_components(k, type_, t)) != 1:
                    bad.append((type_, t))
    for p in (3, 5):
        for type_ in FANO_TYPES:
            S = random_scroll(type_, GF(p), p)
            records = enumerate_lines_Fq(S)
            kinds = [classify_line(S, r.line) for r in records]
            ok = (
                len(records) == expected_line_count(type_, p)
                and "other" not in kinds
                and kinds == [r.kind for r in records]
            )
            # brute force scans every point of P^n(F_p); keep P^n small for p = 5
            if p == 3 or sum(type_) + len(type_) <= 6:
                brute = brute_force_lines(S)
                ok = ok and {r.line for r in records} == set(brute) and len(brute) == len(records)
            lines_seen += len(records)
            if not ok:
                bad.append((type_, p))
            dig.add([list(type_), p, [[ser.enc_vector(row) for row in r.line.rows] for r in records], kinds])
    detail = f"{lines_seen} lines enumerated and classified, 0 exceptions" if not bad else f"failures: {bad}"
    return not bad, detail, dig.hex()


def schubert_runs() -> tuple[bool, str, str]:
    dig, bad = _Digest(), []
    for seed in range(50):
        inst = schubert_instance(2, QQ, seed)
        res = schubert_planes(inst.point, inst.lines)
        if len(res.planes) != 1 or not plane_meets_lines(res.planes[0], inst.point, inst.lines):
            bad.append(("k=2", seed))
        dig.add([ser.enc_subspace(P) for P in res.planes])
    top = 0
    for p in (101, 211):
        field = GF(p)
        for seed in range(50):
            inst = schubert_instance(3, field, seed)
            res = schubert_planes(inst.point, inst.lines)
            oracle = schubert_planes_enumerate(inst.point, inst.lines)
            count = len(res.planes)
            good = (
                count > 0
                and not res.positive_dimensional
                and all(plane_meets_lines(P, inst.point, inst.lines) for P in res.planes)
                and oracle.planes == res.planes
            )
            if not good:
                bad.append((p, seed))
            top = max(top, count)
            dig.add([p, seed, [ser.enc_subspace(P) for P in res.planes]])
    prediction = syt_count(2)
    note = "agrees" if top == prediction else "differs (recorded; only positivity and finiteness are required)"
    detail = f"k=2 count 1 on 50 seeds; k=3 max count {top} vs tableaux prediction {prediction}: {note}"
    if bad:
        detail += f"; failures {bad[:5]}"
    return not bad, detail, dig.hex()


PIPELINE_CASES = (
    [(d, 1) for d in range(1, 7)]
    + [(d, 2) for d in range(2, 7)]
    + [(d, 3) for d in range(3, 7)]
    + [(d, 4) for d in range(4, 8)]
)


def pipeline_runs() -> tuple[bool, str, str]:
    dig, bad, total = _Digest(), [], 0
    jobs = [(d, k, GF(101)) for d, k in PIPELINE_CASES] + [(d, k, QQ) for d, k in PIPELINE_CASES if k <= 2]
    for d, k, field in jobs:
        for seed in range(10):
            total += 1
            tree = interpolate(d, k, seed, field)
            report = verify_witness(tree)
            if not report.ok:
                bad.append((d, k, field.name, seed))
            dig.add(ser.dumps(ser.enc_witness(tree)))
    return not bad, f"{total - len(bad)}/{total} witnesses fully verified", dig.hex()


RUNNERS = {
    1: (rnc_runs, 30.0),
    2: (segre_runs, 30.0),
    3: (formula_runs, 1.0),
    4: (fano_runs, 60.0),
    5: (schubert_runs, 120.0),
    6: (pipeline_runs, 600.0),
}


def run_criterion(n: int) -> Result:
    fn, budget = RUNNERS[n]
    return _timed(fn, budget)


if __name__ == "__main__":
    print(json.dumps({n: run_criterion(n).digest for n in RUNNERS}))
    sys.exit(0)
