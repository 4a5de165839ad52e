"""Initial-data builders: wave packets and random band-limited fields."""

import numpy as np

from .grid import Grid, WaveField, from_spectrum

__all__ = [
    "gaussian_packet",
    "sech_packet",
    "modulated_packet",
    "random_band_limited",
]


def gaussian_packet(grid: Grid, amplitude=1.0, width=1.0, center=0.0,
                    velocity=0.0) -> WaveField:
    """A exp(-(x - c)^2 / (2 w^2)) e^{i v (x - c)}."""
    if width <= 0:
        raise ValueError(f"width must be positive, got {width}")
    xc = grid.x - center
    env = amplitude * np.exp(-(xc**2) / (2.0 * width**2))
    return WaveField(grid, env * np.exp(1j * velocity * xc))


def sech_packet(grid: Grid, amplitude=1.0, width=1.0, center=0.0,
                velocity=0.0) -> WaveField:
    """Soliton-like bump A sech((x - c) / w) e^{i v (x - c)}."""
    if width <= 0:
        raise ValueError(f"width must be positive, got {width}")
    xc = grid.x - center
    env = amplitude / np.cosh(xc / width)
    return WaveField(grid, env * np.exp(1j * velocity * xc))


def modulated_packet(grid: Grid, amplitude=1.0, width=1.0, center=0.0,
                     velocity=0.0) -> WaveField:
    """Standing modulated packet A cos(v (x - c)) exp(-(x - c)^2 / (2 w^2))."""
    if width <= 0:
        raise ValueError(f"width must be positive, got {width}")
    xc = grid.x - center
    env = amplitude * np.exp(-(xc**2) / (2.0 * width**2))
    return WaveField(grid, (env * np.cos(velocity * xc)).astype(np.complex128))


def random_band_limited(grid: Grid, rng: np.random.Generator, k_cut=3.0,
                        h1_norm=1.0) -> WaveField:
    """Random field with independent complex Gaussian modes on |k| <= k_cut.

    Normalized to the requested H^1 norm; used as generic test data for
    quadratic-form and virial checks.
    """
    mask = np.abs(grid.k) <= k_cut
    if not mask.any():
        raise ValueError(f"no grid modes below k_cut={k_cut}")
    coeff = np.zeros(grid.num_points, dtype=np.complex128)
    n = int(mask.sum())
    coeff[mask] = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    field = from_spectrum(grid, coeff)
    h1 = np.sqrt(np.sum((1.0 + np.abs(grid._ik) ** 2) * np.abs(coeff) ** 2))
    return WaveField(grid, field.samples * (h1_norm / h1))
