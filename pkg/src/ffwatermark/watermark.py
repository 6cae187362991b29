"""Fragile watermarking and signature generation in a finite-field spectrum.

The host image ``D`` splits into its residue ``D_R = D mod p`` and the
multiples of p, ``D_M = D - D_R``.  The watermark is added, mod p, to the
blockwise 2-D spectrum of ``D_R``; inverting the spectrum and adding ``D_M``
back gives the marked image ``D'``.  Extraction subtracts the spectra of the
two residues, so it is exact and any change to either image shows up in the
blocks it touched.

Signature mode runs the same computation but publishes ``S = D'`` as
authentication data for the raw image, so visual quality is irrelevant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .blockwise import GrayImage, blockwise_transform, pad_to_multiple, split_blocks
from .errors import ShapeMismatch, WatermarkOutOfField
from .gf_core import PrimeField
from .transforms import ZetaConfig

PSNR_PEAK = 255


@dataclass(frozen=True, eq=False)
class ResidueDecomposition:
    residue: GrayImage
    multiples: GrayImage


@dataclass(frozen=True, eq=False)
class WatermarkImage:
    """Watermark values in GF(p).

    ``placement`` says how :meth:`fitted` maps the mark onto a larger image:
    ``"tile"`` repeats it periodically, ``"top-left"`` places one copy at the
    origin and leaves the rest zero.
    """

    pixels: np.ndarray
    p: int
    placement: str = "tile"

    def __post_init__(self) -> None:
        px = np.asarray(self.pixels)
        if px.ndim != 2 or px.size == 0:
            raise ValueError(f"watermark must be a non-empty 2-D grid, got shape {px.shape}")
        px = px.astype(np.int64)
        if px.min() < 0 or px.max() >= self.p:
            raise WatermarkOutOfField(
                f"watermark values span [{px.min()}, {px.max()}]; GF({self.p}) needs [0, {self.p - 1}]"
            )
        if self.placement not in ("tile", "top-left"):
            raise ValueError(f"unknown placement {self.placement!r}")
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @classmethod
    def from_image(cls, img: GrayImage | np.ndarray, p: int, reduce: bool = False,
                   placement: str = "tile") -> WatermarkImage:
        """Wrap image pixels as a watermark; ``reduce`` maps them mod p first."""
        px = img.pixels if isinstance(img, GrayImage) else np.asarray(img, dtype=np.int64)
        if reduce:
            px = px % p
        return cls(px, p, placement)

    @property
    def shape(self) -> tuple[int, int]:
        return self.pixels.shape

    def fitted(self, shape: tuple[int, int]) -> WatermarkImage:
        """This watermark laid out over an image of ``shape`` (rows, cols)."""
        if self.shape == tuple(shape):
            return self
        h, w = shape
        if self.placement == "tile":
            reps = (-(-h // self.shape[0]), -(-w // self.shape[1]))
            px = np.tile(self.pixels, reps)[:h, :w]
        else:
            px = np.zeros((h, w), dtype=np.int64)
            th, tw = min(h, self.shape[0]), min(w, self.shape[1])
            px[:th, :tw] = self.pixels[:th, :tw]
        return WatermarkImage(px, self.p, self.placement)

    def to_image(self) -> GrayImage:
        return GrayImage(self.pixels, self.p - 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WatermarkImage):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.pixels, other.pixels)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class TamperMap:
    block_size: int
    flags: np.ndarray           # (blocks_y, blocks_x) bool

    @property
    def any_tampered(self) -> bool:
        return bool(self.flags.any())

    @property
    def count(self) -> int:
        return int(self.flags.sum())

    def flagged_blocks(self) -> list[tuple[int, int]]:
        """``(by, bx)`` indices of flagged blocks in row-major order."""
        return [(int(y), int(x)) for y, x in np.argwhere(self.flags)]

    def to_mask(self, maxval: int = 255) -> GrayImage:
        """Pixel mask: flagged blocks at ``maxval``, clean blocks at zero."""
        n = self.block_size
        px = np.kron(self.flags.astype(np.int64), np.ones((n, n), dtype=np.int64))
        return GrayImage(px * maxval, maxval)


def residue_decompose(img: GrayImage, f: PrimeField | int) -> ResidueDecomposition:
    p = f.p if isinstance(f, PrimeField) else f
    residue = img.pixels % p
    return ResidueDecomposition(
        GrayImage(residue, p - 1, img.original_size),
        GrayImage(img.pixels - residue, img.maxval, img.original_size),
    )


def _prepare(img: GrayImage, cfg: ZetaConfig, pad: bool) -> GrayImage:
    if pad:
        return pad_to_multiple(img, cfg.blocklength)
    split_blocks(img, cfg.blocklength)  # raises IndivisibleDimensions
    return img


def _fit(wm: WatermarkImage, shape: tuple[int, int], cfg: ZetaConfig) -> WatermarkImage:
    if wm.p != cfg.p:
        raise WatermarkOutOfField(f"watermark is over GF({wm.p}), transform over GF({cfg.p})")
    return wm.fitted(shape)


def embed(img: GrayImage, wm: WatermarkImage, cfg: ZetaConfig, pad: bool = False,
          workers: int | None = None) -> GrayImage:
    """Mark ``img``: add ``wm`` to the blockwise spectrum of its residue.

    The returned image may have pixels above the input ``maxval``; its
    ``maxval`` is raised to cover them and nothing is clamped.
    """
    img = _prepare(img, cfg, pad)
    wm = _fit(wm, img.shape, cfg)
    dec = residue_decompose(img, cfg.p)
    spectrum = blockwise_transform(dec.residue, cfg, "forward", workers=workers)
    marked = GrayImage((spectrum.pixels + wm.pixels) % cfg.p, cfg.p - 1)
    marked_residue = blockwise_transform(marked, cfg, "inverse", workers=workers)
    px = marked_residue.pixels + dec.multiples.pixels
    return GrayImage(px, max(img.maxval, int(px.max())), img.original_size)


def sign(img: GrayImage, wm: WatermarkImage, cfg: ZetaConfig, pad: bool = False,
         workers: int | None = None) -> GrayImage:
    """Signature data ``S`` for the raw image ``img``.

    Same computation as :func:`embed`.  ``S`` is meant to be published next
    to the raw data, not to replace it, so it need not look like ``img``.
    """
    return embed(img, wm, cfg, pad=pad, workers=workers)


def extract(original: GrayImage, marked: GrayImage, cfg: ZetaConfig, pad: bool = False,
            workers: int | None = None) -> WatermarkImage:
    """Recover the watermark as the spectral difference of the two residues."""
    original = _prepare(original, cfg, pad)
    marked = _prepare(marked, cfg, pad)
    if original.shape != marked.shape:
        raise ShapeMismatch(f"image shapes differ: {original.shape} vs {marked.shape}")
    ref = blockwise_transform(residue_decompose(original, cfg.p).residue, cfg, workers=workers)
    got = blockwise_transform(residue_decompose(marked, cfg.p).residue, cfg, workers=workers)
    return WatermarkImage((got.pixels - ref.pixels) % cfg.p, cfg.p)


def tamper_map(extracted: WatermarkImage, reference: WatermarkImage, block_size: int) -> TamperMap:
    """Flag every block where ``extracted`` and ``reference`` disagree."""
    reference = reference.fitted(extracted.shape)
    diff = extracted.pixels != reference.pixels
    h, w = diff.shape
    n = block_size
    flags = diff.reshape(h // n, n, w // n, n).any(axis=(1, 3))
    return TamperMap(n, flags)


def authenticate(data: GrayImage, signature: GrayImage, wm_ref: WatermarkImage,
                 cfg: ZetaConfig, pad: bool = False,
                 workers: int | None = None) -> tuple[WatermarkImage, TamperMap]:
    """Check raw ``data`` against its published ``signature``.

    Data and signature enter symmetrically, so tampering with either one is
    detected and located.
    """
    extracted = extract(data, signature, cfg, pad=pad, workers=workers)
    ref = _fit(wm_ref, extracted.shape, cfg)
    return extracted, tamper_map(extracted, ref, cfg.blocklength)


def psnr(a: GrayImage, b: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB with an 8-bit peak of 255.

    Identical images give ``math.inf``.
    """
    if a.shape != b.shape:
        raise ShapeMismatch(f"image shapes differ: {a.shape} vs {b.shape}")
    err = a.pixels.astype(np.float64) - b.pixels.astype(np.float64)
    mse = float(np.mean(err * err))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(PSNR_PEAK * PSNR_PEAK / mse)


def bernoulli_tamper(img: GrayImage, prob: float, seed: int) -> tuple[GrayImage, np.ndarray]:
    """Increment each pixel by one with probability ``prob``.

    Returns the tampered image and the boolean mask of changed pixels.
    """
    if not 0.0 <= prob <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {prob}")
    rng = np.random.default_rng(seed)
    mask = rng.random(img.shape) < prob
    px = img.pixels + mask
    return GrayImage(px, max(img.maxval, int(px.max())), img.original_size), mask
