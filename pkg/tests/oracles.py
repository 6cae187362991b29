"""Slow reference computations used to check the library.

Nothing here calls the trig tables or transform matrices under test: the
oracles work from first definitions, with plain loops over Python ints.
"""

from __future__ import annotations

import sympy


def brute_inverse(a: int, p: int) -> int:
    return next(x for x in range(1, p) if a * x % p == 1)


def gmul(x: tuple[int, int], y: tuple[int, int], p: int) -> tuple[int, int]:
    return ((x[0] * y[0] - x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)


def gpow(x: tuple[int, int], k: int, p: int) -> tuple[int, int]:
    """x**k by repeated multiplication; negative k via the general inverse."""
    if k < 0:
        return gpow(ginv(x, p), -k, p)
    acc = (1, 0)
    for _ in range(k):
        acc = gmul(acc, x, p)
    return acc


def ginv(x: tuple[int, int], p: int) -> tuple[int, int]:
    """(a - jb) / (a^2 + b^2), found by scanning for the norm inverse."""
    n = (x[0] * x[0] + x[1] * x[1]) % p
    n_inv = brute_inverse(n, p)
    return (x[0] * n_inv % p, -x[1] * n_inv % p)


def order_by_scan(x: tuple[int, int], p: int) -> int:
    acc, k = x, 1
    while acc != (1, 0):
        acc = gmul(acc, x, p)
        k += 1
    return k


def cos_def(zeta: tuple[int, int], i: int, p: int) -> tuple[int, int]:
    """(zeta^i + zeta^-i) / 2 evaluated in GI(p); may be non-real in general."""
    a, b = gpow(zeta, i, p), gpow(zeta, -i, p)
    half = brute_inverse(2, p)
    return ((a[0] + b[0]) * half % p, (a[1] + b[1]) * half % p)


def sin_def(zeta: tuple[int, int], i: int, p: int) -> tuple[int, int]:
    """(zeta^i - zeta^-i) / 2j evaluated in GI(p)."""
    a, b = gpow(zeta, i, p), gpow(zeta, -i, p)
    diff = ((a[0] - b[0]) % p, (a[1] - b[1]) % p)
    return gmul(diff, ginv((0, 2), p), p)


def _real(x: tuple[int, int]) -> int:
    assert x[1] == 0, f"expected a real value, got {x}"
    return x[0]


def ffct_direct(v: list[int], zeta: tuple[int, int], p: int) -> list[int]:
    n = len(v)
    return [
        sum(2 * v[i] * _real(cos_def(zeta, (2 * i + 1) * k, p)) for i in range(n)) % p
        for k in range(n)
    ]


def ffct_inverse_direct(V: list[int], zeta: tuple[int, int], p: int) -> list[int]:
    n = len(V)
    n_inv = brute_inverse(n % p, p)
    aux = [brute_inverse(2, p)] + [1] * (n - 1)
    return [
        n_inv * sum(aux[k] * V[k] * _real(cos_def(zeta, (2 * i + 1) * k, p)) for k in range(n)) % p
        for i in range(n)
    ]


def cas_def(zeta: tuple[int, int], i: int, p: int) -> int:
    c, s = cos_def(zeta, i, p), sin_def(zeta, i, p)
    return _real(((c[0] + s[0]) % p, (c[1] + s[1]) % p))


def ffht_direct(v: list[int], zeta: tuple[int, int], p: int) -> list[int]:
    n = len(v)
    return [sum(v[i] * cas_def(zeta, i * k, p) for i in range(n)) % p for k in range(n)]


def ffft_direct(v: list[int], zeta: int, p: int) -> list[int]:
    n = len(v)
    return [sum(v[i] * pow(zeta, i * k, p) for i in range(n)) % p for k in range(n)]


def hartley_2d_direct(d, zeta: tuple[int, int], p: int) -> list[list[int]]:
    """sum_i sum_j d[i][j] cas(ik + jl), the non-separable 2-D kernel."""
    n = len(d)
    cas = [cas_def(zeta, m, p) for m in range(n)]
    return [
        [sum(int(d[i][j]) * cas[(i * k + j * l) % n] for i in range(n) for j in range(n)) % p
         for l in range(n)]
        for k in range(n)
    ]


def fourier_2d_direct(d, zeta: int, p: int) -> list[list[int]]:
    n = len(d)
    return [
        [sum(int(d[i][j]) * pow(zeta, i * k + j * l, p) for i in range(n) for j in range(n)) % p
         for l in range(n)]
        for k in range(n)
    ]


def matrix_inverse_mod(m, p: int) -> list[list[int]]:
    """Inverse over GF(p) by sympy's Gaussian elimination."""
    inv = sympy.Matrix([[int(x) for x in row] for row in m]).inv_mod(p)
    return [[int(inv[r, c]) for c in range(inv.cols)] for r in range(inv.rows)]
