"""Blockwise 2-D transforms of grayscale images.

An image is cut into adjacent, non-overlapping N x N blocks in row-major
order, block ``(by, bx)`` covering rows ``by*N:(by+1)*N`` and columns
``bx*N:(bx+1)*N``.  Each block is transformed on its own and the spectra are
put back in place.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import IndivisibleDimensions, PixelOutOfField
from .transforms import ZetaConfig, forward_2d, inverse_2d


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Rectangular grid of non-negative integer pixels.

    ``original_size`` is set when the image was zero-padded up to a block
    multiple; it holds the ``(width, height)`` before padding.
    """

    pixels: np.ndarray
    maxval: int
    original_size: tuple[int, int] | None = field(default=None)

    def __post_init__(self) -> None:
        px = np.asarray(self.pixels)
        if px.ndim != 2 or px.shape[0] < 1 or px.shape[1] < 1:
            raise ValueError(f"pixels must be a non-empty 2-D grid, got shape {px.shape}")
        if px.dtype.kind not in "iu":
            raise TypeError(f"pixels must be integers, got dtype {px.dtype}")
        px = px.astype(np.int64)
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)
        if self.maxval < 0:
            raise ValueError("maxval must be non-negative")
        if px.min() < 0 or px.max() > self.maxval:
            raise ValueError(
                f"pixel values span [{px.min()}, {px.max()}], outside [0, {self.maxval}]"
            )

    @classmethod
    def from_array(cls, pixels, maxval: int | None = None) -> GrayImage:
        px = np.asarray(pixels, dtype=np.int64)
        return cls(px, int(px.max()) if maxval is None else maxval)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.pixels.shape

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (self.maxval == other.maxval
                and self.original_size == other.original_size
                and np.array_equal(self.pixels, other.pixels))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class BlockGrid:
    block_size: int
    blocks: np.ndarray          # (blocks_y, blocks_x, N, N)
    maxval: int
    original_size: tuple[int, int] | None = None

    @property
    def blocks_y(self) -> int:
        return self.blocks.shape[0]

    @property
    def blocks_x(self) -> int:
        return self.blocks.shape[1]


def pad_to_multiple(img: GrayImage, n: int) -> GrayImage:
    """Zero-pad on the right and bottom up to the next multiple of ``n``."""
    h, w = img.shape
    ph, pw = -h % n, -w % n
    if not (ph or pw):
        return img
    px = np.pad(img.pixels, ((0, ph), (0, pw)))
    original = img.original_size or (w, h)
    return GrayImage(px, img.maxval, original)


def split_blocks(img: GrayImage, n: int, pad: bool = False) -> BlockGrid:
    if n < 1:
        raise ValueError(f"block size must be positive, got {n}")
    if pad:
        img = pad_to_multiple(img, n)
    h, w = img.shape
    if h % n or w % n:
        raise IndivisibleDimensions(w, h, n)
    blocks = img.pixels.reshape(h // n, n, w // n, n).swapaxes(1, 2)
    return BlockGrid(n, blocks, img.maxval, img.original_size)


def reassemble(grid: BlockGrid, maxval: int | None = None) -> GrayImage:
    by, bx, n, _ = grid.blocks.shape
    px = grid.blocks.swapaxes(1, 2).reshape(by * n, bx * n)
    return GrayImage(px, grid.maxval if maxval is None else maxval, grid.original_size)


def _transform_blocks(blocks: np.ndarray, cfg: ZetaConfig, direction: str,
                      workers: int | None) -> np.ndarray:
    fn = forward_2d if direction == "forward" else inverse_2d
    if not workers or workers <= 1:
        return fn(blocks, cfg)
    # one task per block row; assembled by index so scheduling cannot leak in
    out = np.empty_like(blocks)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(fn, blocks[r], cfg): r for r in range(blocks.shape[0])}
        for fut, r in futures.items():
            out[r] = fut.result()
    return out


def blockwise_transform(img: GrayImage, cfg: ZetaConfig, direction: str = "forward",
                        pad: bool = False, workers: int | None = None) -> GrayImage:
    """Apply the 2-D transform of ``cfg`` to every N x N block of ``img``.

    Pixels must already be residues mod p.  The result has ``maxval = p - 1``.
    ``pad`` zero-pads indivisible images and records the original size.
    """
    if direction not in ("forward", "inverse"):
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    if img.pixels.max() >= cfg.p:
        raise PixelOutOfField(
            f"pixel value {int(img.pixels.max())} is not a residue mod {cfg.p}"
        )
    grid = split_blocks(img, cfg.blocklength, pad=pad)
    spectra = _transform_blocks(grid.blocks, cfg, direction, workers)
    return reassemble(BlockGrid(grid.block_size, spectra, cfg.p - 1, grid.original_size))
