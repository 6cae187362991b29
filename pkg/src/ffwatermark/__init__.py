"""Finite-field trigonometric transforms and NTT-based fragile watermarking."""

from .blockwise import BlockGrid, GrayImage, blockwise_transform, reassemble, split_blocks
from .fftrig import TrigTable, build_trig_table, trig_at
from .gf_core import (
    GaussianInt,
    PrimeField,
    find_unimodular_zeta,
    gi_mul,
    gi_norm,
    is_unimodular,
    mod_inverse,
    multiplicative_order,
)
from .transforms import TransformKind, TransformMatrix, ZetaConfig, build_matrices
from .watermark import (
    TamperMap,
    WatermarkImage,
    authenticate,
    embed,
    extract,
    psnr,
    residue_decompose,
    sign,
)

__version__ = "0.1.0"
