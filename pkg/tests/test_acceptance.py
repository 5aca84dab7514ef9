"""Acceptance criteria 1-7, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
import time

import acceptance_runs as runs
import pytest

HERE = os.path.dirname(os.path.abspath(__file__))
TITLES = {
    1: "rational normal curves through n+3 points",
    2: "Segre scrolls through lines and planes",
    3: "dimension formulas and identities",
    4: "Fano schemes and line enumeration",
    5: "Schubert base case",
    6: "degeneration pipeline",
    7: "determinism",
}
_cache: dict[int, runs.Result] = {}


def result(n: int) -> runs.Result:
    if n not in _cache:
        _cache[n] = runs.run_criterion(n)
    return _cache[n]


def line(n: int, passed: bool, detail: str, seconds: float) -> str:
    return f"criterion {n} [{TITLES[n]}]: {'PASS' if passed else 'FAIL'} ({seconds:.1f}s) {detail}"


def _announce(capsys, text: str) -> None:
    if capsys is None:
        print(text)
        return
    with capsys.disabled():
        print("\n" + text)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_criterion(n, capsys):
    r = result(n)
    _announce(capsys, line(n, r.passed, r.detail, r.seconds))
    assert r.passed, r.detail


def determinism() -> tuple[bool, str, float]:
    start = time.perf_counter()
    local = {n: result(n).digest for n in runs.RUNNERS}
    env = dict(os.environ, PYTHONHASHSEED="977")
    proc = subprocess.run(
        [sys.executable, os.path.join(HERE, "acceptance_runs.py")],
        capture_output=True,
        text=True,
        env=env,
        cwd=HERE,
        check=False,
    )
    if proc.returncode != 0:
        return False, f"rerun failed: {proc.stderr[-300:]}", time.perf_counter() - start
    remote = {int(k): v for k, v in json.loads(proc.stdout).items()}
    differing = sorted(n for n in local if local[n] != remote.get(n))

    import contextlib
    import io

    from test_cli import GOLDEN, GOLDEN_CASES

    from scrollinterp.cli import run

    stale = []
    for name, argv in sorted(GOLDEN_CASES.items()):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = run(argv)
        with open(os.path.join(GOLDEN, name), encoding="utf-8") as fh:
            if code != 0 or buf.getvalue() != fh.read():
                stale.append(name)
    ok = not differing and not stale
    detail = (
        f"criteria 1-6 digests identical across processes; {len(GOLDEN_CASES)} golden files reproduced"
        if ok
        else f"digest mismatch in {differing}; golden mismatch in {stale}"
    )
    return ok, detail, time.perf_counter() - start


def test_criterion_7(capsys):
    ok, detail, seconds = determinism()
    _announce(capsys, line(7, ok, detail, seconds))
    assert ok, detail


if __name__ == "__main__":
    sys.path.insert(0, HERE)
    failed = 0
    for n in range(1, 7):
        r = result(n)
        print(line(n, r.passed, r.detail, r.seconds), flush=True)
        failed += not r.passed
    ok, detail, seconds = determinism()
    print(line(7, ok, detail, seconds))
    sys.exit(1 if failed or not ok else 0)
