import numpy as np
import pytest

from ffwatermark.errors import NotUnimodular
from ffwatermark.fftrig import build_trig_table, trig_at
from ffwatermark.gf_core import PrimeField, is_prime, is_unimodular
from oracles import cos_def, sin_def

SMALL = [p for p in range(3, 32) if is_prime(p) and p % 4 == 3]


def table(p, a, b):
    return build_trig_table(PrimeField(p).element(a, b))


def test_cosine_table_example():
    t = table(7, 2, 2)
    assert t.order == 8
    assert t.cos_vals.tolist() == [1, 2, 0, 5, 6, 5, 0, 2]


def test_cas_table_example():
    assert table(3, 0, 1).cas_vals.tolist() == [1, 1, 2, 2]


def test_trig_at_wraps():
    t = table(7, 2, 2)
    assert trig_at(t, 9)[0] == 2
    assert trig_at(t, 0) == (1, 0, 1)
    assert trig_at(table(3, 0, 1), -1)[2] == 2


def test_rejects_non_unimodular():
    with pytest.raises(NotUnimodular):
        table(7, 2, 0)


def test_tables_are_read_only():
    t = table(7, 2, 2)
    with pytest.raises(ValueError):
        t.cos_vals[0] = 3


def _unimodular(p):
    f = PrimeField(p)
    return [x for x in f.elements() if is_unimodular(x)]


@pytest.mark.parametrize("p", SMALL)
def test_table_invariants(p):
    for z in _unimodular(p):
        t = build_trig_table(z)
        n = t.order
        c, s, k = t.cos_vals, t.sin_vals, t.cas_vals
        assert (c[0], s[0], k[0]) == (1, 0, 1)
        assert np.all((c * c + s * s) % p == 1)
        assert np.all(k == (c + s) % p)
        assert np.all((c >= 0) & (c < p) & (s >= 0) & (s < p))
        for i in range(-n, 2 * n):
            assert trig_at(t, i) == trig_at(t, i + n)
        for i in range(1, n):
            assert c[n - i] == c[i]
            assert s[n - i] == (p - s[i]) % p


@pytest.mark.parametrize("p", SMALL)
def test_tables_match_defining_quotients(p):
    for z in _unimodular(p):
        t = build_trig_table(z)
        zz = (z.re, z.im)
        for i in range(t.order):
            assert cos_def(zz, i, p) == (int(t.cos_vals[i]), 0)
            assert sin_def(zz, i, p) == (int(t.sin_vals[i]), 0)


def test_vectorised_lookup():
    t = table(7, 2, 2)
    assert t.cos(np.array([0, 1, 9, -1])).tolist() == [1, 2, 2, 2]
    assert t.cos(3) == 5
