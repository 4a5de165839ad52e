"""Periodic spectral discretization of the line.

The box [-L, L) with N equispaced nodes stands in for the whole line;
everything downstream declares a wraparound horizon T_wrap = L / (2 k_max)
(k_max the Nyquist wavenumber) past which dispersing waves may re-enter
through the boundary and results are no longer trusted.

Transform convention (used by every norm formula in the package): the
forward transform is unitary with respect to the trapezoid-free rectangle
quadrature, i.e.

    spectrum_k = fft(samples)_k * dx / sqrt(2 L),

so that dx * sum |u_j|^2 == sum |spectrum_k|^2 exactly (Parseval).  A plane
wave of amplitude A on mode m has |spectrum_m| = A * sqrt(2 L).
"""

import numpy as np

from .errors import UntrustedWindowError

__all__ = [
    "Grid",
    "WaveField",
    "EvolutionTrace",
    "to_spectrum",
    "from_spectrum",
    "spatial_derivative",
    "translate",
    "lebesgue_norm",
    "sobolev_h1_norm",
    "spacetime_norm",
]


def _frozen(a):
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


class Grid:
    """Uniform periodic grid on [-half_width, half_width).

    Attributes:
        num_points: number of nodes N (power of two, >= 8).
        half_width: L; the box is [-L, L).
        dx: node spacing 2L / N.
        x: node coordinates, x[0] = -L.
        k: wavenumbers (pi/L) * j for j in {-N/2, ..., N/2 - 1}, stored in
           transform (fft) order.
        k_max: Nyquist wavenumber pi * N / (2 L).
        wrap_horizon: trusted time window L / (2 k_max).
    """

    def __init__(self, num_points: int, half_width: float):
        num_points = int(num_points)
        half_width = float(half_width)
        if num_points < 8 or num_points & (num_points - 1) != 0:
            raise ValueError(f"num_points must be a power of two >= 8, got {num_points}")
        if not half_width > 0:
            raise ValueError(f"half_width must be positive, got {half_width}")
        self.num_points = num_points
        self.half_width = half_width
        self.dx = 2.0 * half_width / num_points
        self.x = _frozen(-half_width + self.dx * np.arange(num_points))
        self.k = _frozen(2.0 * np.pi * np.fft.fftfreq(num_points, d=self.dx))
        self.k_max = np.pi * num_points / (2.0 * half_width)
        self.wrap_horizon = half_width / (2.0 * self.k_max)
        # ik multiplier with the Nyquist mode zeroed: keeps spectral
        # derivatives of real fields real.
        ik = 1j * self.k.copy()
        ik[num_points // 2] = 0.0
        self._ik = _frozen(ik)
        self._forward_scale = self.dx / np.sqrt(2.0 * half_width)

    def __eq__(self, other):
        return (
            isinstance(other, Grid)
            and other.num_points == self.num_points
            and other.half_width == self.half_width
        )

    def __hash__(self):
        return hash((self.num_points, self.half_width))

    def __repr__(self):
        return f"Grid(num_points={self.num_points}, half_width={self.half_width})"


class WaveField:
    """Complex state u sampled on a Grid.  Immutable after construction."""

    def __init__(self, grid: Grid, samples):
        samples = np.asarray(samples, dtype=np.complex128)
        if samples.shape != (grid.num_points,):
            raise ValueError(
                f"samples shape {samples.shape} does not match grid with "
                f"{grid.num_points} points"
            )
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples contain NaN or Inf")
        self.grid = grid
        self.samples = _frozen(samples.copy())

    def __repr__(self):
        return f"WaveField(N={self.grid.num_points}, L={self.grid.half_width})"


class EvolutionTrace:
    """Time-stamped sequence of WaveFields plus aligned diagnostic series.

    ``trusted_until`` marks the end of the wraparound-trusted window; times
    past it are still recorded but flagged (``is_trusted`` is False there).
    """

    def __init__(self, grid: Grid, times, snapshots, series=None,
                 trusted_until=None, dt=None, alpha=0.0):
        times = np.asarray(times, dtype=float)
        if times.ndim != 1 or len(times) == 0:
            raise ValueError("times must be a nonempty 1-d sequence")
        if len(times) > 1 and not np.all(np.diff(times) > 0):
            raise ValueError("times must be strictly increasing")
        if len(snapshots) != len(times):
            raise ValueError("snapshots and times must have the same length")
        for snap in snapshots:
            if snap.grid != grid:
                raise ValueError("snapshot grid does not match trace grid")
        self.grid = grid
        self.times = _frozen(times)
        self.snapshots = list(snapshots)
        self.series = {}
        for name, values in (series or {}).items():
            values = np.asarray(values, dtype=float)
            if values.shape != times.shape:
                raise ValueError(f"series {name!r} length does not match times")
            self.series[name] = _frozen(values)
        self.trusted_until = grid.wrap_horizon if trusted_until is None else float(trusted_until)
        self.dt = dt
        self.alpha = alpha

    def __len__(self):
        return len(self.times)

    def is_trusted(self, t: float) -> bool:
        return t <= self.trusted_until + 1e-12

    def window(self, t0: float, t1: float) -> "EvolutionTrace":
        """Sub-trace restricted to recorded times in [t0, t1]."""
        mask = (self.times >= t0 - 1e-12) & (self.times <= t1 + 1e-12)
        idx = np.nonzero(mask)[0]
        if len(idx) == 0:
            raise ValueError(f"no recorded times inside [{t0}, {t1}]")
        return EvolutionTrace(
            self.grid,
            self.times[idx],
            [self.snapshots[i] for i in idx],
            {name: values[idx] for name, values in self.series.items()},
            trusted_until=self.trusted_until,
            dt=self.dt,
            alpha=self.alpha,
        )


def to_spectrum(field: WaveField) -> np.ndarray:
    """Forward transform under the package's unitary convention."""
    return np.fft.fft(field.samples) * field.grid._forward_scale


def from_spectrum(grid: Grid, spectrum) -> WaveField:
    """Inverse of :func:`to_spectrum`."""
    spectrum = np.asarray(spectrum, dtype=np.complex128)
    if spectrum.shape != (grid.num_points,):
        raise ValueError(
            f"spectrum length {spectrum.shape} does not match grid with "
            f"{grid.num_points} points"
        )
    return WaveField(grid, np.fft.ifft(spectrum / grid._forward_scale))


def spatial_derivative(field: WaveField) -> WaveField:
    """Spectral derivative (ik multiplier, Nyquist mode zeroed)."""
    grid = field.grid
    return WaveField(grid, np.fft.ifft(np.fft.fft(field.samples) * grid._ik))


def translate(field: WaveField, y: float) -> WaveField:
    """Periodic translation u(. - y) via the frequency-domain phase e^{-iky}.

    Exact for band-limited fields.  |y| >= 2L is rejected as meaningless on
    the periodic box; callers should keep |y| < half_width so that content
    does not wrap into the region of interest.
    """
    grid = field.grid
    y = float(y)
    if abs(y) >= 2.0 * grid.half_width:
        raise ValueError(
            f"translation by {y} is meaningless on a box of period {2 * grid.half_width}"
        )
    if y == 0.0:
        return field
    phase = np.exp(-1j * grid.k * y)
    return WaveField(grid, np.fft.ifft(np.fft.fft(field.samples) * phase))


def lebesgue_norm(field: WaveField, a: float) -> float:
    """L^a norm by rectangle rule; a = inf returns max |u|."""
    a = float(a)
    if not a >= 1.0:
        raise ValueError(f"Lebesgue exponent must satisfy a >= 1, got {a}")
    absu = np.abs(field.samples)
    if np.isinf(a):
        return float(absu.max())
    return float((field.grid.dx * np.sum(absu**a)) ** (1.0 / a))


def sobolev_h1_norm(field: WaveField) -> float:
    """H^1 norm: sqrt(||u||_{L^2}^2 + ||u'||_{L^2}^2).

    Computed spectrally as sum (1 + k^2) |spectrum|^2 with the same
    Nyquist-zeroed k as :func:`spatial_derivative`, so the Parseval identity
    against the quadrature norms is exact to roundoff.
    """
    grid = field.grid
    spec2 = np.abs(to_spectrum(field)) ** 2
    weight = 1.0 + np.abs(grid._ik) ** 2
    return float(np.sqrt(np.sum(weight * spec2)))


def spacetime_norm(trace: EvolutionTrace, p: float, r: float) -> float:
    """Mixed L^p_t L^r_x norm over the recorded snapshots.

    Trapezoid rule in time over lebesgue_norm(u(t), r)^p, then the p-th
    root; p = inf takes the max over recorded times.
    """
    p = float(p)
    r = float(r)
    if not (p >= 1.0 and r >= 1.0):
        raise ValueError(f"spacetime exponents must be >= 1, got p={p}, r={r}")
    if len(trace) < 2:
        raise ValueError("spacetime norm needs at least 2 snapshots")
    spatial = np.array([lebesgue_norm(snap, r) for snap in trace.snapshots])
    if np.isinf(p):
        return float(spatial.max())
    return float(np.trapezoid(spatial**p, trace.times) ** (1.0 / p))
