"""
Littlewood–Paley pieces and B¹_{∞,1} norms of trigonometric polynomials on the torus.

Convolution with W_n multiplies the coefficient of frequency j by a mask value, so
every piece of a trigonometric polynomial is again a trigonometric polynomial and the
decomposition is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from src.besov.filters import LPFilterBank, make_filter
from src.core.errors import NotTorusFunction
from src.funcalc.functions import TWO_PI, RealArray, TrigPoly, TrigPoly1D
from src.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_OVERSAMPLING = 8
PERIOD_TOL = 1e-12

TorusPoly = TrigPoly | TrigPoly1D


@dataclass(frozen=True)
class SupInterval:
    """Grid maximum of |f| and the Bernstein-corrected upper estimate."""

    lower: float
    upper: float
    grid_size: int


@dataclass(frozen=True, eq=False)
class LPDecomposition:
    pieces: dict[int, TorusPoly]
    norms: dict[int, SupInterval] = field(default_factory=dict)

    @property
    def levels(self) -> list[int]:
        return sorted(self.pieces)

    def total(self) -> TorusPoly:
        """Σ_n f_n, coefficientwise."""
        pieces = [self.pieces[n] for n in self.levels]
        first = pieces[0]
        coeffs = np.sum([piece.coeffs for piece in pieces], axis=0)
        return first.with_coeffs(coeffs)


def _frequency_norms(f: TorusPoly) -> RealArray:
    if isinstance(f, TrigPoly1D):
        return np.abs(f.freqs).astype(np.float64)
    return np.hypot(f.freqs[:, 0], f.freqs[:, 1]).astype(np.float64)


def _require_torus(f: TorusPoly) -> None:
    if isinstance(f, TrigPoly1D):
        if abs(f.period - TWO_PI) > PERIOD_TOL:
            raise NotTorusFunction(f"expected period 2π, got {f.period}")
        return
    f.require_torus()


def torus_masks(radius: RealArray, bank: LPFilterBank, max_level: int) -> RealArray:
    """
    Mask values for n = 0..max_level; shape (max_level + 1, len(radius)).

    mask_n = w(r / 2ⁿ) for n ≥ 1. The zeroth mask is the complement 1 − Σ_{n≥1} mask_n
    on the disc r < 2 so the masks sum to one at every lattice point, including
    r = √2 where w(r/2) alone does not reach one.
    """
    masks = np.zeros((max_level + 1, radius.size), dtype=np.float64)
    for n in range(1, max_level + 1):
        masks[n] = bank.mask(radius, n)
    masks[0] = np.where(radius < 2.0, 1.0 - masks[1:].sum(axis=0), 0.0)
    return masks


def max_level(f: TorusPoly) -> int:
    radii = _frequency_norms(f)
    largest = float(np.max(radii, initial=0.0))
    if largest <= 1.0:
        return 0
    return math.floor(math.log2(largest)) + 1


def lp_decompose_torus(
    f: TorusPoly,
    bank: LPFilterBank | None = None,
    oversampling: int = DEFAULT_OVERSAMPLING,
) -> LPDecomposition:
    _require_torus(f)
    bank = bank or make_filter()
    top = max_level(f)
    masks = torus_masks(_frequency_norms(f), bank, top)

    pieces: dict[int, TorusPoly] = {}
    norms: dict[int, SupInterval] = {}
    for n in range(top + 1):
        if not np.any(masks[n] * np.abs(f.coeffs) > 0.0) and n > 0:
            continue
        piece = f.with_coeffs(f.coeffs * masks[n])
        pieces[n] = piece
        norms[n] = sup_norm_estimate(piece, oversampling)

    logger.debug(f"Littlewood-Paley pieces at levels {sorted(pieces)}")
    return LPDecomposition(pieces=pieces, norms=norms)


def _grid_size(degree: int, oversampling: int) -> int:
    target = max(oversampling * (degree + 1), 8)
    return 1 << (target - 1).bit_length()


def sup_norm_estimate(f: TorusPoly, oversampling: int = DEFAULT_OVERSAMPLING) -> SupInterval:
    """
    max |f| on a uniform grid of G points per axis, G a power of two ≥ oversampling·(deg + 1).

    The upper end inflates the grid maximum by 1 + π·deg/G, where deg is the total degree.
    """
    _require_torus(f)
    if f.coeffs.size == 0 or not np.any(f.coeffs):
        return SupInterval(lower=0.0, upper=0.0, grid_size=0)

    if isinstance(f, TrigPoly1D):
        degree = f.degree
        size = _grid_size(degree, oversampling)
        spectrum = np.zeros(size, dtype=np.complex128)
        np.add.at(spectrum, np.mod(f.freqs, size), f.coeffs)
        values = np.fft.ifft(spectrum) * size
    else:
        degree = f.degree_x + f.degree_y
        size = _grid_size(degree, oversampling)
        spectrum = np.zeros((size, size), dtype=np.complex128)
        np.add.at(spectrum, (np.mod(f.freqs[:, 0], size), np.mod(f.freqs[:, 1], size)), f.coeffs)
        values = np.fft.ifft2(spectrum) * size * size

    grid_max = float(np.max(np.abs(values)))
    return SupInterval(
        lower=grid_max,
        upper=grid_max * (1.0 + math.pi * degree / size),
        grid_size=size,
    )


def besov_norm_1_inf_1(
    f: TorusPoly,
    bank: LPFilterBank | None = None,
    oversampling: int = DEFAULT_OVERSAMPLING,
) -> float:
    """Σ_{n≥0} 2ⁿ ‖f_n‖_∞ with each sup norm taken as its grid maximum."""
    decomposition = lp_decompose_torus(f, bank, oversampling)
    return math.fsum(2.0**n * decomposition.norms[n].lower for n in decomposition.levels)


def besov_norm_upper(
    f: TorusPoly,
    bank: LPFilterBank | None = None,
    oversampling: int = DEFAULT_OVERSAMPLING,
) -> float:
    """Same sum with the upper sup-norm estimates."""
    decomposition = lp_decompose_torus(f, bank, oversampling)
    return math.fsum(2.0**n * decomposition.norms[n].upper for n in decomposition.levels)
