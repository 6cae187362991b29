"""Finite-field cosine, Hartley and Fourier transforms over GF(p).

All three kinds share the same machinery: a validated :class:`ZetaConfig`
fixes the kernel, :func:`build_matrices` materialises the forward and inverse
N x N matrices, and every transform is an exact matrix product mod p.  Inputs
may carry leading batch axes; the trailing axis (1-D) or the trailing two
axes (2-D) are transformed.

Matrices follow the ``V = M @ v`` convention, i.e. ``M[k, i]`` is the kernel
coupling input index ``i`` to output index ``k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    ElementOutOfField,
    InvalidZeta,
    KindMismatch,
    LengthMismatch,
    ShapeMismatch,
    SingularMatrix,
)
from .fftrig import TrigTable, build_trig_table
from .gf_core import (
    GaussianInt,
    PrimeField,
    is_unimodular,
    mod_inverse,
    multiplicative_order,
    parse_gaussian,
)


class TransformKind(str, enum.Enum):
    FFCT = "ffct"
    FFHT = "ffht"
    FFFT = "ffft"

    def __str__(self) -> str:
        return self.value

    @property
    def order_factor(self) -> int:
        """Ratio between the order of zeta and the blocklength."""
        return 4 if self is TransformKind.FFCT else 1


@dataclass(frozen=True, eq=False)
class ZetaConfig:
    """A validated (p, zeta, kind, N) choice for one concrete transform.

    Build instances with :meth:`create` or :meth:`from_values`; both run the
    full validation.
    """

    field: PrimeField
    zeta: GaussianInt
    kind: TransformKind
    blocklength: int
    trig: TrigTable | None
    aux: np.ndarray | None

    @classmethod
    def create(cls, zeta: GaussianInt, kind: TransformKind | str,
               blocklength: int | None = None) -> ZetaConfig:
        kind = TransformKind(kind)
        f = zeta.field
        if not zeta:
            raise InvalidZeta("zeta must be nonzero")
        order = multiplicative_order(zeta)
        if order % kind.order_factor:
            raise InvalidZeta(
                f"zeta={zeta} has order {order}, not a multiple of "
                f"{kind.order_factor} as {kind.name} requires"
            )
        n = order // kind.order_factor
        if blocklength is not None and blocklength != n:
            need = f"4*{blocklength}" if kind is TransformKind.FFCT else str(blocklength)
            raise InvalidZeta(
                f"{kind.name} with N={blocklength} needs zeta of order {need}; "
                f"zeta={zeta} has order {order}"
            )
        if n < 2:
            raise InvalidZeta(f"blocklength N={n} is degenerate")
        if n % f.p == 0:
            raise InvalidZeta(f"N={n} is a multiple of p={f.p}; N^-1 does not exist")

        trig = None
        aux = None
        if kind is TransformKind.FFFT:
            if not zeta.is_real:
                raise InvalidZeta(f"FFFT over GF({f.p}) needs a real zeta, got {zeta}")
        else:
            if not is_unimodular(zeta):
                raise InvalidZeta(
                    f"{kind.name} needs a unimodular zeta; n({zeta}) = {zeta.norm()}"
                )
            trig = build_trig_table(zeta)
        if kind is TransformKind.FFCT:
            aux = np.ones(n, dtype=np.int64)
            aux[0] = mod_inverse(2, f)
            aux.setflags(write=False)
        return cls(f, zeta, kind, n, trig, aux)

    @classmethod
    def from_values(cls, p: int, zeta: str | tuple[int, int], kind: TransformKind | str,
                    blocklength: int | None = None) -> ZetaConfig:
        """Convenience constructor from plain values, e.g. ``(7, "2+2j", "ffct")``.

        A real zeta for the FFFT may live in a field with p = 1 (mod 4).
        """
        kind = TransformKind(kind)
        gaussian = not (kind is TransformKind.FFFT and p % 4 == 1)
        f = PrimeField(p, gaussian=gaussian)
        z = parse_gaussian(zeta, f) if isinstance(zeta, str) else f.element(*zeta)
        return cls.create(z, kind, blocklength)

    @property
    def p(self) -> int:
        return self.field.p

    @cached_property
    def n_inv(self) -> int:
        return mod_inverse(self.blocklength, self.field)

    @cached_property
    def matrices(self) -> TransformMatrix:
        return build_matrices(self)

    def __repr__(self) -> str:
        return (f"ZetaConfig(p={self.p}, zeta={self.zeta}, kind={self.kind.name}, "
                f"N={self.blocklength})")


@dataclass(frozen=True, eq=False)
class TransformMatrix:
    entries: np.ndarray
    inverse_entries: np.ndarray
    config: ZetaConfig


def _kernel_matrices(cfg: ZetaConfig) -> tuple[np.ndarray, np.ndarray]:
    n, p = cfg.blocklength, cfg.p
    k = np.arange(n).reshape(-1, 1)
    i = np.arange(n).reshape(1, -1)
    if cfg.kind is TransformKind.FFCT:
        # forward[k, i] = 2 cos((2i+1)k); inverse[i, k] = N^-1 a_k cos((2i+1)k)
        cos_ki = cfg.trig.cos((2 * i + 1) * k)
        forward = 2 * cos_ki % p
        inverse = (cfg.n_inv * cfg.aux.reshape(-1, 1) * cos_ki % p).T
    elif cfg.kind is TransformKind.FFHT:
        forward = cfg.trig.cas(i * k)
        inverse = cfg.n_inv * forward % p
    else:
        z = cfg.zeta.re
        powers = np.array([pow(z, e, p) for e in range(n)], dtype=np.int64)
        forward = powers[(i * k) % n]
        inverse = cfg.n_inv * powers[(-i * k) % n] % p
    return forward.astype(np.int64), inverse.astype(np.int64)


def build_matrices(cfg: ZetaConfig) -> TransformMatrix:
    """Forward and inverse kernel matrices, checked to multiply to I mod p."""
    forward, inverse = _kernel_matrices(cfg)
    n = cfg.blocklength
    if not np.array_equal(forward @ inverse % cfg.p, np.eye(n, dtype=np.int64)):
        raise SingularMatrix(f"{cfg!r}: forward and inverse kernels are not inverse")
    forward.setflags(write=False)
    inverse.setflags(write=False)
    return TransformMatrix(forward, inverse, cfg)


def _as_field_array(values, cfg: ZetaConfig) -> np.ndarray:
    arr = np.asarray(values)
    if arr.dtype.kind not in "iu":
        if arr.size and not np.all(np.mod(arr, 1) == 0):
            raise TypeError("transform inputs must be integers")
    arr = arr.astype(np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= cfg.p):
        raise ElementOutOfField(f"values must lie in [0, {cfg.p - 1}]")
    return arr


def _require_kind(cfg: ZetaConfig, kind: TransformKind) -> None:
    if cfg.kind is not kind:
        raise KindMismatch(f"expected a {kind.name} configuration, got {cfg.kind.name}")


def _check_vector(v: np.ndarray, cfg: ZetaConfig) -> None:
    if v.ndim == 0 or v.shape[-1] != cfg.blocklength:
        raise LengthMismatch(
            f"expected vectors of length {cfg.blocklength}, got shape {v.shape}"
        )


def _check_square(d: np.ndarray, cfg: ZetaConfig) -> None:
    n = cfg.blocklength
    if d.ndim < 2 or d.shape[-2:] != (n, n):
        raise ShapeMismatch(f"expected {n}x{n} blocks, got shape {d.shape}")


def _apply(m: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    return v @ m.T % p


# -- one-dimensional ---------------------------------------------------------

def forward(v, cfg: ZetaConfig) -> np.ndarray:
    """Forward 1-D transform of whatever kind ``cfg`` describes."""
    v = _as_field_array(v, cfg)
    _check_vector(v, cfg)
    return _apply(cfg.matrices.entries, v, cfg.p)


def inverse(V, cfg: ZetaConfig) -> np.ndarray:
    V = _as_field_array(V, cfg)
    _check_vector(V, cfg)
    return _apply(cfg.matrices.inverse_entries, V, cfg.p)


def ffct_forward(v, cfg: ZetaConfig) -> np.ndarray:
    """V_k = sum_i 2 v_i cos((2i+1)k) mod p."""
    _require_kind(cfg, TransformKind.FFCT)
    return forward(v, cfg)


def ffct_inverse(V, cfg: ZetaConfig) -> np.ndarray:
    """v_i = N^-1 sum_k a_k V_k cos((2i+1)k) mod p, with a_0 = 1/2, a_k = 1."""
    _require_kind(cfg, TransformKind.FFCT)
    return inverse(V, cfg)


def ffht_forward(v, cfg: ZetaConfig) -> np.ndarray:
    """V_k = sum_i v_i cas(ik) mod p."""
    _require_kind(cfg, TransformKind.FFHT)
    return forward(v, cfg)


def ffht_inverse(V, cfg: ZetaConfig) -> np.ndarray:
    _require_kind(cfg, TransformKind.FFHT)
    return inverse(V, cfg)


def ffft_forward(v, cfg: ZetaConfig) -> np.ndarray:
    """V_k = sum_i v_i zeta^(ik) mod p."""
    _require_kind(cfg, TransformKind.FFFT)
    return forward(v, cfg)


def ffft_inverse(V, cfg: ZetaConfig) -> np.ndarray:
    _require_kind(cfg, TransformKind.FFFT)
    return inverse(V, cfg)


# -- two-dimensional ---------------------------------------------------------

def _separable_2d(m: np.ndarray, d: np.ndarray, p: int) -> np.ndarray:
    return (m @ d % p) @ m.T % p


def _hartley_2d(d: np.ndarray, cfg: ZetaConfig) -> np.ndarray:
    """Unscaled 2-D Hartley sum via T = H D H and its index reflections."""
    h = cfg.matrices.entries
    p, n = cfg.p, cfg.blocklength
    t = (h @ d % p) @ h % p
    rev = (-np.arange(n)) % n
    t_c = t[..., :, rev]
    t_r = t[..., rev, :]
    t_cr = t[..., rev, :][..., :, rev]
    half = mod_inverse(2, cfg.field)
    return (t + t_c + t_r - t_cr) * half % p


def forward_2d(d, cfg: ZetaConfig) -> np.ndarray:
    """Forward 2-D transform of one N x N block or a stack of them."""
    d = _as_field_array(d, cfg)
    _check_square(d, cfg)
    if cfg.kind is TransformKind.FFHT:
        return _hartley_2d(d, cfg)
    return _separable_2d(cfg.matrices.entries, d, cfg.p)


def inverse_2d(d_hat, cfg: ZetaConfig) -> np.ndarray:
    d_hat = _as_field_array(d_hat, cfg)
    _check_square(d_hat, cfg)
    if cfg.kind is TransformKind.FFHT:
        return _hartley_2d(d_hat, cfg) * (cfg.n_inv * cfg.n_inv % cfg.p) % cfg.p
    return _separable_2d(cfg.matrices.inverse_entries, d_hat, cfg.p)


def ffct_2d(d, cfg: ZetaConfig) -> np.ndarray:
    """C D C^T mod p."""
    _require_kind(cfg, TransformKind.FFCT)
    return forward_2d(d, cfg)


def ffct_2d_inverse(d_hat, cfg: ZetaConfig) -> np.ndarray:
    _require_kind(cfg, TransformKind.FFCT)
    return inverse_2d(d_hat, cfg)


def ffht_2d(d, cfg: ZetaConfig) -> np.ndarray:
    """2-D Hartley transform with kernel cas(ik + jl).

    The kernel is not separable, so the result is assembled from
    T = H D H and three reflected copies of T.
    """
    _require_kind(cfg, TransformKind.FFHT)
    return forward_2d(d, cfg)


def ffht_2d_inverse(d_hat, cfg: ZetaConfig) -> np.ndarray:
    _require_kind(cfg, TransformKind.FFHT)
    return inverse_2d(d_hat, cfg)


def ffft_2d(d, cfg: ZetaConfig) -> np.ndarray:
    """Row transforms followed by column transforms (the kernel is separable)."""
    _require_kind(cfg, TransformKind.FFFT)
    return forward_2d(d, cfg)


def ffft_2d_inverse(d_hat, cfg: ZetaConfig) -> np.ndarray:
    _require_kind(cfg, TransformKind.FFFT)
    return inverse_2d(d_hat, cfg)
