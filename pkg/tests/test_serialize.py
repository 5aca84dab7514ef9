from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollinterp import serialize as ser
from scrollinterp.errors import PreconditionError
from scrollinterp.exactlin import GF, QQ
from scrollinterp.instances import random_scroll
from scrollinterp.pipeline import interpolate
from scrollinterp.projgeom import random_subspace
from scrollinterp.rng import SplitMix64

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x.numerator) < 10**30)


@given(rationals)
def test_rational_round_trip(x):
    text = ser.enc_scalar(x)
    assert isinstance(text, str) and ser.dec_scalar(text, QQ) == x
    assert ser.enc_scalar(ser.dec_scalar(text, QQ)) == text


def test_scalar_forms():
    assert ser.enc_scalar(F(-3, 4)) == "-3/4" and ser.enc_scalar(F(6, 3)) == "2"
    assert ser.enc_scalar(GF(7)(10)) == 3
    for bad, field in (("1/0", QQ), ("x", QQ), (7, GF(7)), (True, GF(7)), (1.5, QQ)):
        with pytest.raises(PreconditionError):
            ser.dec_scalar(bad, field)


@given(st.sampled_from([QQ, GF(101)]), st.integers(0, 2**32), st.integers(1, 5))
def test_subspace_round_trip(field, seed, n):
    rng = SplitMix64(seed)
    L = random_subspace(field, n, rng.randint(0, n), rng)
    doc = ser.enc_subspace(L)
    assert ser.dec_subspace(doc, field) == L
    assert ser.enc_subspace(ser.dec_subspace(doc, field)) == doc


@pytest.mark.parametrize("type_", [(2,), (1, 1), (3, 1, 1)])
def test_scroll_round_trip(type_):
    for field in (QQ, GF(101)):
        S = random_scroll(type_, field, 3)
        doc = ser.enc_scroll(S)
        assert doc["type"] == sorted(type_, reverse=True)
        assert ser.dec_scroll(doc, field) == S


@pytest.mark.parametrize("d,k,field", [(3, 1, QQ), (5, 2, QQ), (5, 3, GF(101)), (6, 4, GF(101))])
def test_witness_round_trip_is_bit_identical(d, k, field):
    tree = interpolate(d, k, 1, field)
    text = ser.dumps(ser.enc_witness(tree))
    back = ser.dec_witness(ser.loads(text))
    assert back == tree
    assert ser.dumps(ser.enc_witness(back)) == text


def test_field_header_checks():
    assert ser.field_from_header({"field": "Fp:13", "modulus": 13}) == GF(13)
    with pytest.raises(PreconditionError):
        ser.field_from_header({"field": "Fp:13", "modulus": 11})
    with pytest.raises(PreconditionError):
        ser.dec_witness({"format": "other"})
    with pytest.raises(PreconditionError):
        ser.loads("[1, 2]")


def test_atomic_write(tmp_path):
    path = tmp_path / "out.json"
    ser.write_atomic(str(path), "abc\n")
    ser.write_atomic(str(path), "def\n")
    assert path.read_text() == "def\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.json"]
