"""Finite-field cosine, sine and cas tables generated by a unimodular zeta.

With zeta of unit norm the inverse of zeta**i is its conjugate, so
``cos(i) = Re(zeta**i)`` and ``sin(i) = Im(zeta**i)``.  The tables are
filled from successive powers and never divide.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotUnimodular
from .gf_core import GaussianInt, gi_mul, is_unimodular


@dataclass(frozen=True, eq=False)
class TrigTable:
    zeta: GaussianInt
    order: int
    cos_vals: np.ndarray
    sin_vals: np.ndarray
    cas_vals: np.ndarray

    @property
    def p(self) -> int:
        return self.zeta.field.p

    def cos(self, i) -> np.ndarray | int:
        return _lookup(self.cos_vals, i, self.order)

    def sin(self, i) -> np.ndarray | int:
        return _lookup(self.sin_vals, i, self.order)

    def cas(self, i) -> np.ndarray | int:
        return _lookup(self.cas_vals, i, self.order)


def _lookup(values: np.ndarray, index, order: int):
    idx = np.mod(index, order)
    if np.ndim(idx) == 0:
        return int(values[int(idx)])
    return values[idx]


def build_trig_table(zeta: GaussianInt) -> TrigTable:
    """Materialise cos, sin and cas over one full period of ``zeta``."""
    if not is_unimodular(zeta):
        raise NotUnimodular(
            f"zeta={zeta} has norm {zeta.norm()} in GI({zeta.field.p}); "
            "trigonometric values would leave GF(p)"
        )
    p = zeta.field.p
    one = zeta.field.one()
    re_parts = [1]
    im_parts = [0]
    power = zeta
    while power != one:
        re_parts.append(power.re)
        im_parts.append(power.im)
        power = gi_mul(power, zeta)
    cos_vals = np.array(re_parts, dtype=np.int64)
    sin_vals = np.array(im_parts, dtype=np.int64)
    cas_vals = (cos_vals + sin_vals) % p
    for arr in (cos_vals, sin_vals, cas_vals):
        arr.setflags(write=False)
    return TrigTable(zeta, len(re_parts), cos_vals, sin_vals, cas_vals)


def trig_at(table: TrigTable, index: int) -> tuple[int, int, int]:
    """``(cos, sin, cas)`` at ``index mod N``; negative indices wrap."""
    i = index % table.order
    return int(table.cos_vals[i]), int(table.sin_vals[i]), int(table.cas_vals[i])
