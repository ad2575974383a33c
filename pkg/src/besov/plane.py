"""
Homogeneous B¹_{∞,1}(ℝ²) norms for functions with closed-form Fourier data.

Two families are supported: products of Fejér atoms of a common dyadic width, and
finite exponential sums (trigonometric polynomials with arbitrary periods). Black-box
functions are refused.
"""

from __future__ import annotations

import math

import numpy as np

from src.besov.filters import LPFilterBank, make_filter
from src.besov.torus import DEFAULT_OVERSAMPLING, sup_norm_estimate
from src.core.errors import UnsupportedRepresentation
from src.funcalc.atoms import BandLimited, ExponentialFamily, FejerFamily, fejer_transform
from src.funcalc.functions import TWO_PI, ComplexArray, Function2D, RealArray, TrigPoly
from src.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_FFT_SIZE = 1024
DEFAULT_DEPTH = 12
FREQUENCY_WINDOW = 4.0 * math.pi
TOP_LEVEL = 4
TAIL_MARGIN = 64.0


def besov_norm_plane_dyadic(
    f: Function2D,
    m: int = 0,
    *,
    bank: LPFilterBank | None = None,
    fft_size: int = DEFAULT_FFT_SIZE,
    depth: int = DEFAULT_DEPTH,
    oversampling: int = DEFAULT_OVERSAMPLING,
) -> float:
    """
    Σ_n 2ⁿ ‖f_n‖_∞ for the dyadic rescaling f_ε(x, y) = ε f(x/ε, y/ε), ε = 2^{−m}.

    The value does not depend on m: rescaling shifts the level index and the
    amplitude by the same power of two.
    """
    bank = bank or make_filter()
    if isinstance(f, BandLimited):
        scaled = f.rescaled(2.0**-m) if m else f
        if isinstance(scaled.left, FejerFamily) and isinstance(scaled.right, FejerFamily):
            return _fejer_norm(scaled.left, scaled.right, scaled.weights, bank, fft_size, depth)
        if isinstance(scaled.left, ExponentialFamily) and isinstance(scaled.right, ExponentialFamily):
            freqs, coeffs, omega = _exponential_terms(scaled.left, scaled.right, scaled.weights)
            return _exponential_norm(freqs, coeffs, omega, bank, oversampling)
        raise UnsupportedRepresentation(
            f"no closed-form Fourier data for {type(f.left).__name__} x {type(f.right).__name__}"
        )
    if isinstance(f, TrigPoly):
        epsilon = 2.0**-m
        omega = f.angular_freqs / epsilon
        return _exponential_norm(f.freqs, f.coeffs * epsilon, omega, bank, oversampling)
    raise UnsupportedRepresentation(f"{type(f).__name__} has no closed-form Littlewood-Paley pieces")


def _fejer_norm(
    left: FejerFamily,
    right: FejerFamily,
    weights: ComplexArray,
    bank: LPFilterBank,
    fft_size: int,
    depth: int,
) -> float:
    if left.width != right.width:
        raise UnsupportedRepresentation("both Fejér families must share one width")
    width = left.width
    shift = math.log2(width)
    if shift != round(shift):
        raise UnsupportedRepresentation(f"Fejér width {width} is not a power of two")

    if not np.any(weights):
        return 0.0

    # u = width·ξ; every level then sees the same envelope
    centers_x = left.centers / width
    centers_y = right.centers / width
    centers_x = centers_x - 0.5 * (centers_x.max() + centers_x.min())
    centers_y = centers_y - 0.5 * (centers_y.max() + centers_y.min())
    span = max(np.ptp(centers_x), np.ptp(centers_y))

    size = _grid_size(fft_size, span)
    step = 2.0 * FREQUENCY_WINDOW / size
    grid = -FREQUENCY_WINDOW + step * np.arange(size)
    radius = np.hypot(grid[:, None], grid[None, :])
    profile = fejer_transform(grid)

    phases_x = np.exp(-1j * np.outer(grid, centers_x))
    phases_y = np.exp(-1j * np.outer(centers_y, grid))
    envelope = np.outer(profile, profile) * (phases_x @ weights @ phases_y)
    scale = (size * step) ** 2 / (4.0 * math.pi**2)

    terms: list[float] = []
    for level in range(TOP_LEVEL, TOP_LEVEL - depth, -1):
        spectrum = bank.mask(radius, level) * envelope
        sup = float(np.max(np.abs(np.fft.ifft2(spectrum)))) * scale
        terms.append(2.0 ** (level - int(round(shift))) * sup)

    logger.debug(f"Plane Besov norm on a {size}x{size} grid over {depth} levels")
    return math.fsum(terms)


def _grid_size(minimum: int, span: float) -> int:
    """Smallest power of two ≥ minimum whose dual period exceeds the center span plus a tail margin."""
    needed = 2.0 * FREQUENCY_WINDOW * (span + TAIL_MARGIN) / TWO_PI
    size = max(minimum, math.ceil(needed))
    return 1 << (size - 1).bit_length()


def _exponential_terms(
    left: ExponentialFamily, right: ExponentialFamily, weights: ComplexArray
) -> tuple[np.ndarray, ComplexArray, RealArray]:
    hx, hy = np.meshgrid(left.harmonics, right.harmonics, indexing="ij")
    freqs = np.stack([hx.reshape(-1), hy.reshape(-1)], axis=1)
    omega = np.stack([hx.reshape(-1) * left.base, hy.reshape(-1) * right.base], axis=1)
    return freqs, weights.reshape(-1), omega


def _exponential_norm(
    freqs: np.ndarray,
    coeffs: ComplexArray,
    omega: RealArray,
    bank: LPFilterBank,
    oversampling: int,
) -> float:
    radius = np.hypot(omega[:, 0], omega[:, 1])
    active = (radius > 0.0) & (coeffs != 0.0)
    if not np.any(active):
        return 0.0

    # sup over the plane equals sup over the torus in the harmonic variables
    lattice = np.asarray(freqs[active], dtype=np.int64)
    values = coeffs[active]
    radii = radius[active]
    terms: list[float] = []
    for level in bank.levels(float(radii.min()), float(radii.max())):
        masked = values * bank.mask(radii, level)
        if not np.any(masked):
            continue
        piece = TrigPoly.build(lattice, masked)
        terms.append(2.0**level * sup_norm_estimate(piece, oversampling).lower)
    return math.fsum(terms)
