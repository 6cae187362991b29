"""Bit-exact PGM (P2 ASCII / P5 binary) reading and writing.

Binary samples are one byte for ``maxval < 256`` and two big-endian bytes up
to 65535.  A header comment ``# original-size W H`` carries the pre-padding
size of zero-padded images.
"""

from __future__ import annotations

import os
import re

import numpy as np

from .blockwise import GrayImage
from .errors import PgmFormatError

MAX_PGM_VALUE = 65535
_ORIGINAL_SIZE = re.compile(rb"#\s*original-size\s+(\d+)\s+(\d+)")


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int, tuple[int, int] | None]:
    """Read ``count`` whitespace-separated header tokens, skipping comments.

    Returns the tokens, the offset just past the single whitespace byte that
    ends the last token, and any ``original-size`` annotation.
    """
    tokens: list[bytes] = []
    original = None
    pos = 0
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos:pos + 1].isspace():
            pos += 1
        if pos >= n:
            raise PgmFormatError("truncated PGM header")
        if data[pos:pos + 1] == b"#":
            end = data.find(b"\n", pos)
            end = n if end < 0 else end
            m = _ORIGINAL_SIZE.match(data[pos:end])
            if m:
                original = (int(m.group(1)), int(m.group(2)))
            pos = end
            continue
        start = pos
        while pos < n and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    if pos < n:
        pos += 1
    return tokens, pos, original


def decode_pgm(data: bytes) -> GrayImage:
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise PgmFormatError(f"not a P2/P5 graymap (magic {magic!r})")
    tokens, offset, original = _header_tokens(data, 4)
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError:
        raise PgmFormatError(f"malformed PGM header {tokens!r}") from None
    if width < 1 or height < 1:
        raise PgmFormatError(f"invalid dimensions {width}x{height}")
    if not 0 < maxval <= MAX_PGM_VALUE:
        raise PgmFormatError(f"maxval {maxval} outside [1, {MAX_PGM_VALUE}]")
    count = width * height
    if magic == b"P5":
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        need = count * dtype.itemsize
        body = data[offset:offset + need]
        if len(body) < need:
            raise PgmFormatError(f"expected {need} bytes of raster data, found {len(body)}")
        px = np.frombuffer(body, dtype=dtype).astype(np.int64)
    else:
        # comments may appear between ASCII samples
        text = re.sub(rb"#[^\n]*", b" ", data[offset:])
        try:
            px = np.array(text.split()[:count], dtype=np.int64)
        except ValueError:
            raise PgmFormatError("non-numeric sample in ASCII raster") from None
        if px.size < count:
            raise PgmFormatError(f"expected {count} samples, found {px.size}")
    px = px.reshape(height, width)
    if px.max() > maxval:
        raise PgmFormatError(f"sample {int(px.max())} exceeds maxval {maxval}")
    return GrayImage(px, maxval, original)


def encode_pgm(img: GrayImage, binary: bool = True, maxval: int | None = None) -> bytes:
    maxval = img.maxval if maxval is None else maxval
    if not 0 < maxval <= MAX_PGM_VALUE:
        raise PgmFormatError(f"maxval {maxval} cannot be stored in a PGM")
    if img.pixels.max() > maxval:
        raise PgmFormatError(f"pixel {int(img.pixels.max())} exceeds maxval {maxval}")
    header = [b"P5" if binary else b"P2"]
    if img.original_size is not None:
        header.append(b"# original-size %d %d" % img.original_size)
    header.append(b"%d %d" % (img.width, img.height))
    header.append(b"%d" % maxval)
    head = b"\n".join(header) + b"\n"
    if binary:
        dtype = ">u2" if maxval > 255 else "u1"
        return head + img.pixels.astype(dtype).tobytes()
    rows = []
    for row in img.pixels:
        line: list[str] = []
        width = 0
        for v in row:
            s = str(int(v))
            # keep lines under 70 characters
            if line and width + len(s) + 1 > 70:
                rows.append(" ".join(line))
                line, width = [], 0
            line.append(s)
            width += len(s) + 1
        rows.append(" ".join(line))
    return head + "\n".join(rows).encode("ascii") + b"\n"


def read_pgm(path: str | os.PathLike) -> GrayImage:
    with open(path, "rb") as fh:
        return decode_pgm(fh.read())


def write_pgm(path: str | os.PathLike, img: GrayImage, binary: bool = True,
              maxval: int | None = None) -> None:
    data = encode_pgm(img, binary=binary, maxval=maxval)
    with open(path, "wb") as fh:
        fh.write(data)
