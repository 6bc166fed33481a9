#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
#
# Codec.py
#   0.1.0   2026.10.18  Initial version.
#   0.1.1   2026.10.18  Edge-replication padding (opt-in).
#   0.2.0   2026.10.18  Parallel corpus sweep.
#
#
# JPEG-like fixed-rate experiment without quantization:
#
#   image -> 16x16 blocks -> B = C * A * C^T -> keep first r zig-zag
#   coefficients -> A~ = C^T * B~ * C -> reassemble -> round, clamp
#
# Transforms wrapping an integer kernel run the kernel through its fast
# algorithm (or a dense integer product if it has none) and apply the
# diagonal S as row/column scaling afterwards.
#
import math
import time
import numpy

from typing import NamedTuple
from concurrent.futures import ThreadPoolExecutor
from skimage.metrics import structural_similarity

import log
from Config     import Config
from Transform  import Error, InvalidArgument, OrthonormalTransform


class GrayImage:
    """8-bit grayscale raster, stored row-major as a read-only uint8 array."""

    class InvalidDimensions(Error):
        reason = "invalid-dimensions"


    def __init__(self, width: int, height: int, samples, label: str = None):
        if not isinstance(width, (int, numpy.integer)) \
                or not isinstance(height, (int, numpy.integer)) \
                or width < 1 or height < 1:
            raise InvalidArgument(
                "Image dimensions must be positive, got {}x{}".format(width, height)
            )
        array = numpy.asarray(samples)
        if array.size != width * height:
            raise InvalidArgument(
                "{}x{} image needs {} samples, got {}".format(
                    width, height, width * height, array.size
                )
            )
        if array.size and (array.min() < 0 or array.max() > 255):
            raise InvalidArgument("Samples must be within 0..255")
        if array.dtype.kind == 'f' and not numpy.all(array == numpy.rint(array)):
            raise InvalidArgument("Samples must be integers")
        pixels = array.astype(numpy.uint8).reshape(height, width)
        pixels.setflags(write=False)
        self.width  = int(width)
        self.height = int(height)
        self.pixels = pixels
        self.label  = label


    @classmethod
    def from_array(cls, array, label: str = None):
        array = numpy.asarray(array)
        if array.ndim != 2:
            raise InvalidArgument("Expected a 2-D array, got shape {}".format(array.shape))
        return cls(array.shape[1], array.shape[0], array, label)


    @property
    def samples(self) -> bytes:
        return self.pixels.tobytes()


    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return numpy.array_equal(self.pixels, other.pixels)


    def __repr__(self):
        return "GrayImage({}x{}{})".format(
            self.width, self.height,
            ", '{}'".format(self.label) if self.label else ""
        )



class ZigZagOrder:
    """JPEG scan generalized to NxN: start at (0, 0), first move right,
    alternate direction on each anti-diagonal."""

    def __init__(self, size: int = None):
        size = size or Config.Codec.block
        sequence = []
        for s in range(2 * size - 1):
            rows = range(max(0, s - size + 1), min(s, size - 1) + 1)
            if s % 2 == 0:
                rows = reversed(rows)
            sequence.extend((i, s - i) for i in rows)
        self.size       = size
        self.sequence   = tuple(sequence)
        self.flat       = numpy.array([i * size + j for i, j in sequence])


    def mask(self, r: int) -> numpy.ndarray:
        if not isinstance(r, (int, numpy.integer)) or not 1 <= r <= self.size ** 2:
            raise InvalidArgument(
                "r must be within 1..{}, got {}".format(self.size ** 2, r)
            )
        keep = numpy.zeros(self.size * self.size, dtype=bool)
        keep[self.flat[:r]] = True
        return keep.reshape(self.size, self.size)


    def __len__(self):
        return len(self.sequence)



class CompressionResult(NamedTuple):
    r:              int
    reconstructed:  GrayImage
    psnr_db:        float
    ssim:           float



class SweepReport:
    """Mean PSNR/SSIM per (transform, r) over a corpus, plus per-addition
    ratios."""
    HEADER = (
        "transform", "r", "psnr_db", "ssim", "psnr_per_add", "ssim_per_add", "images"
    )

    def __init__(self):
        self._scores    = {}    # (name, r) -> [(psnr, ssim), ...]
        self._additions = {}
        self.skipped    = []    # [(label, reason), ...]


    def add(self, name: str, additions: int, r: int, psnr: float, ssim: float):
        self._additions[name] = additions
        self._scores.setdefault((name, r), []).append((psnr, ssim))


    def skip(self, label: str, reason: str):
        self.skipped.append((label, reason))


    def mean(self, name: str, r: int) -> tuple:
        scores = numpy.array(self._scores[(name, r)], dtype=numpy.float64)
        return float(numpy.mean(scores[:, 0])), float(numpy.mean(scores[:, 1]))


    def per_add(self, name: str, r: int) -> tuple:
        additions = self._additions[name]
        psnr, ssim = self.mean(name, r)
        if additions == 0:
            return math.nan, math.nan
        return psnr / additions, ssim / additions


    def rows(self) -> list:
        rows = []
        for name, r in sorted(self._scores):
            psnr, ssim = self.mean(name, r)
            psnr_add, ssim_add = self.per_add(name, r)
            rows.append(
                (name, r, psnr, ssim, psnr_add, ssim_add, len(self._scores[(name, r)]))
            )
        return rows



###############################################################################
#
# Block handling
#
###############################################################################

def _padded_shape(image: GrayImage, pad: bool) -> tuple:
    block = Config.Codec.block
    pad = Config.Codec.pad if pad is None else pad
    if image.height % block or image.width % block:
        if not pad:
            raise GrayImage.InvalidDimensions(
                "{}x{} is not a multiple of {} (enable padding)".format(
                    image.width, image.height, block
                )
            )
    return (
        -(-image.height // block) * block,
        -(-image.width // block) * block
    )


def partition_16(image: GrayImage, pad: bool = None) -> numpy.ndarray:
    """Raster-order disjoint 16x16 tiles as an (n, 16, 16) float array.
    With 'pad' the right and bottom edges are replicated."""
    block = Config.Codec.block
    rows, cols = _padded_shape(image, pad)
    pixels = image.pixels.astype(numpy.float64)
    if (rows, cols) != pixels.shape:
        pixels = numpy.pad(
            pixels,
            ((0, rows - image.height), (0, cols - image.width)),
            mode="edge"
        )
    return pixels.reshape(rows // block, block, cols // block, block) \
        .transpose(0, 2, 1, 3) \
        .reshape(-1, block, block)


def assemble(blocks: numpy.ndarray, height: int, width: int) -> numpy.ndarray:
    """Inverse of partition_16, cropped to height x width."""
    block = blocks.shape[-1]
    rows = -(-height // block) * block
    cols = -(-width // block) * block
    pixels = blocks.reshape(rows // block, cols // block, block, block) \
        .transpose(0, 2, 1, 3) \
        .reshape(rows, cols)
    return pixels[:height, :width]



###############################################################################
#
# 2-D transforms
#
###############################################################################

def _kernel_product(t: OrthonormalTransform, x, axis: int, transpose: bool):
    """T * x (or T^T * x) along 'axis', additions only when possible."""
    axis = axis % x.ndim
    if t.factorization is not None:
        ft = t.factorization.transpose() if transpose else t.factorization
        return ft.apply(x, axis)
    kernel = t.kernel.entries.T if transpose else t.kernel.entries
    return numpy.moveaxis(numpy.tensordot(kernel, x, axes=([1], [axis])), 0, axis)


def _check_blocks(x, t: OrthonormalTransform) -> numpy.ndarray:
    x = numpy.asarray(x, dtype=numpy.float64)
    if x.ndim < 2 or x.shape[-2:] != (t.order, t.order):
        raise InvalidArgument(
            "Expected {0}x{0} blocks, got shape {1}".format(t.order, x.shape)
        )
    return x


def forward_2d(block, t: OrthonormalTransform, fast: bool = True) -> numpy.ndarray:
    """B = C * A * C^T for one block or a stack of blocks (..., N, N)."""
    a = _check_blocks(block, t)
    if fast and t.kernel is not None:
        y = _kernel_product(t, a, -2, False)
        y = _kernel_product(t, y, -1, False)
        s = t.scaling.values
        return y * s.reshape(-1, 1) * s.reshape(1, -1)
    return t.matrix @ a @ t.matrix.T


def inverse_2d(coeffs, t: OrthonormalTransform, fast: bool = True) -> numpy.ndarray:
    """A = C^T * B * C for one block or a stack of blocks (..., N, N)."""
    b = _check_blocks(coeffs, t)
    if fast and t.kernel is not None:
        s = t.scaling.values
        z = b * s.reshape(-1, 1) * s.reshape(1, -1)
        z = _kernel_product(t, z, -2, True)
        return _kernel_product(t, z, -1, True)
    return t.matrix.T @ b @ t.matrix


def zigzag_truncate(coeffs, order: ZigZagOrder, r: int) -> numpy.ndarray:
    """Keep the first r zig-zag positions of each block, zero the rest."""
    coeffs = numpy.asarray(coeffs, dtype=numpy.float64)
    if coeffs.shape[-2:] != (order.size, order.size):
        raise InvalidArgument(
            "Expected {0}x{0} blocks, got shape {1}".format(order.size, coeffs.shape)
        )
    return numpy.where(order.mask(r), coeffs, 0.0)



###############################################################################
#
# Image quality
#
###############################################################################

def _pixels(image) -> numpy.ndarray:
    return numpy.asarray(getattr(image, "pixels", image), dtype=numpy.float64)


def psnr_db(a, b) -> float:
    """10 log10(255^2 / mse); identical images give math.inf."""
    x, y = _pixels(a), _pixels(b)
    if x.shape != y.shape:
        raise InvalidArgument(
            "Image dimensions differ: {} vs {}".format(x.shape, y.shape)
        )
    mse = float(numpy.mean((x - y) ** 2))
    if mse == 0.0:
        return math.inf
    peak = float(Config.Codec.max_value)
    return 10.0 * math.log10(peak * peak / mse)


def ssim(a, b) -> float:
    """Mean structural similarity, Gaussian window (sigma 1.5, 11x11),
    K1 = 0.01, K2 = 0.03, L = 255. Border of half a window is excluded."""
    x, y = _pixels(a), _pixels(b)
    if x.shape != y.shape:
        raise InvalidArgument(
            "Image dimensions differ: {} vs {}".format(x.shape, y.shape)
        )
    sigma = Config.Codec.SSIM.sigma
    window = 2 * int(Config.Codec.SSIM.truncate * sigma + 0.5) + 1
    if x.ndim != 2 or min(x.shape) < window:
        raise InvalidArgument(
            "SSIM needs images of at least {0}x{0}, got {1}".format(window, x.shape)
        )
    return float(structural_similarity(
        x, y,
        gaussian_weights        = True,
        sigma                   = sigma,
        use_sample_covariance   = False,
        data_range              = Config.Codec.max_value,
        K1                      = Config.Codec.SSIM.k1,
        K2                      = Config.Codec.SSIM.k2
    ))



###############################################################################
#
# Compression
#
###############################################################################

def _to_image(reconstruction: numpy.ndarray, label: str = None) -> GrayImage:
    # Snap to a fixed grid first, so fast and dense paths agree on .5 ties,
    # then round half up
    snapped = numpy.round(reconstruction, Config.Codec.snap_decimals)
    pixels = numpy.clip(numpy.floor(snapped + 0.5), 0, Config.Codec.max_value)
    return GrayImage.from_array(pixels.astype(numpy.uint8), label)


def reconstruct(
    image: GrayImage,
    t: OrthonormalTransform,
    r: int,
    pad: bool = None,
    fast: bool = True
) -> numpy.ndarray:
    """Lossy reconstruction before rounding (float, image sized)."""
    order = ZigZagOrder(t.order)
    order.mask(r)   # validate r before doing any work
    coeffs = forward_2d(partition_16(image, pad), t, fast)
    blocks = inverse_2d(zigzag_truncate(coeffs, order, r), t, fast)
    return assemble(blocks, image.height, image.width)


def compress(
    image: GrayImage,
    t: OrthonormalTransform,
    r: int,
    pad: bool = None,
    fast: bool = True
) -> CompressionResult:
    start = time.monotonic()
    reconstructed = _to_image(reconstruct(image, t, r, pad, fast), image.label)
    result = CompressionResult(
        r,
        reconstructed,
        psnr_db(image, reconstructed),
        ssim(image, reconstructed)
    )
    log.debug(
        "compress({}, {}, r={}) took {:1.3f} ms".format(
            image, t.provenance, r, (time.monotonic() - start) * 1000
        )
    )
    return result


def _score(image: GrayImage, entries, r_values, pad) -> list:
    """[(entry, r, psnr, ssim), ...] for one image. Forward transform is
    computed once per transform and reused for every r."""
    blocks = partition_16(image, pad)
    scores = []
    for entry in entries:
        t = entry.transform
        order = ZigZagOrder(t.order)
        coeffs = forward_2d(blocks, t)
        for r in r_values:
            pixels = assemble(
                inverse_2d(zigzag_truncate(coeffs, order, r), t),
                image.height, image.width
            )
            reconstructed = _to_image(pixels)
            scores.append(
                (entry, r, psnr_db(image, reconstructed), ssim(image, reconstructed))
            )
    return scores


def sweep(
    corpus,
    entries,
    r_values = None,
    pad: bool = None,
    workers: int = None
) -> SweepReport:
    """Average PSNR/SSIM over 'corpus' for every (entry, r). Images that
    fail are skipped and listed in report.skipped."""
    corpus = list(corpus)
    entries = list(entries)
    if not corpus:
        raise InvalidArgument("Empty corpus")
    if not entries:
        raise InvalidArgument("No transforms selected")
    if r_values is None:
        r_values = range(Config.Codec.r_min, Config.Codec.r_max + 1)
    r_values = list(r_values)
    if not r_values:
        raise InvalidArgument("Empty r grid")
    for entry in entries:
        for r in r_values:
            ZigZagOrder(entry.transform.order).mask(r)
    workers = workers or Config.Sweep.workers

    def job(image):
        start = time.monotonic()
        try:
            scores = _score(image, entries, r_values, pad)
        except Error as e:
            return image, None, e
        log.debug(
            "{} scored in {:1.3f} ms".format(image, (time.monotonic() - start) * 1000)
        )
        return image, scores, None

    report = SweepReport()
    # map() keeps corpus order, so the means are summed in a fixed order
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        for image, scores, error in executor.map(job, corpus):
            label = image.label or repr(image)
            if error is not None:
                log.warning("Skipping {}: {}: {}".format(label, error.reason, error))
                report.skip(label, "{}: {}".format(error.reason, error))
                continue
            for entry, r, psnr, similarity in scores:
                report.add(entry.name, entry.additions, r, psnr, similarity)
    if len(report.skipped) == len(corpus):
        raise InvalidArgument("Every image in the corpus failed")
    log.info(
        "Sweep: {} images, {} transforms, {} r values, {} skipped".format(
            len(corpus) - len(report.skipped), len(entries),
            len(r_values), len(report.skipped)
        )
    )
    return report


# EOF
