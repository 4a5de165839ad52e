"""Potential library and automated checks of the scattering hypotheses.

The admissibility checks mirror the assumptions under which the defocusing
equation scatters: V nonnegative, repulsive (x V' <= 0), with V and V' in
the weighted space L^1_1 (finite integral of |V|(1 + |x|)).
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainTooSmallError
from .grid import Grid, WaveField, spatial_derivative

__all__ = [
    "PotentialSpec",
    "PotentialSample",
    "HypothesisReport",
    "builtin_potential",
    "zero_potential",
    "sample_potential",
    "hypothesis_report",
]

EDGE_DECAY_TOL = 1e-12
SIGN_TOL = 1e-12
DERIVATIVE_CROSSCHECK_RTOL = 1e-6


def _sech(t):
    # overflow-safe sech: 2 e^{-|t|} / (1 + e^{-2|t|})
    a = np.exp(-np.abs(t))
    return 2.0 * a / (1.0 + a * a)


class PotentialSpec:
    """Analytic potential: value and derivative callables plus metadata.

    Potentials carry analytic derivatives rather than relying on spectral
    differentiation, because the sign-sensitive repulsivity check x V' <= 0
    must not be polluted by differentiation noise near zero crossings.
    """

    def __init__(self, name: str, params: dict, value, derivative):
        self.name = name
        self.params = dict(params)
        self.value = value
        self.derivative = derivative

    def __repr__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"PotentialSpec({self.name}, {args})"


def builtin_potential(kind: str, v0: float, a: float) -> PotentialSpec:
    """Built-in families: sech2 barrier, gaussian barrier, attractive well.

    sech2:    V0 sech^2(x/a)
    gaussian: V0 exp(-(x/a)^2)
    well:     -|V0| sech^2(x/a)
    """
    if a <= 0:
        raise ValueError(f"width parameter must be positive, got a={a}")
    v0 = float(v0)
    a = float(a)
    if kind == "sech2":
        value = lambda x: v0 * _sech(np.asarray(x) / a) ** 2
        deriv = lambda x: -2.0 * v0 / a * _sech(np.asarray(x) / a) ** 2 * np.tanh(np.asarray(x) / a)
    elif kind == "gaussian":
        value = lambda x: v0 * np.exp(-((np.asarray(x) / a) ** 2))
        deriv = lambda x: -2.0 * np.asarray(x) / a**2 * v0 * np.exp(-((np.asarray(x) / a) ** 2))
    elif kind == "well":
        depth = -abs(v0)
        value = lambda x: depth * _sech(np.asarray(x) / a) ** 2
        deriv = lambda x: -2.0 * depth / a * _sech(np.asarray(x) / a) ** 2 * np.tanh(np.asarray(x) / a)
    else:
        raise ValueError(f"unknown potential kind {kind!r}")
    return PotentialSpec(kind, {"v0": v0, "a": a}, value, deriv)


def zero_potential() -> PotentialSpec:
    """V identically zero (free comparison case)."""
    zero = lambda x: np.zeros_like(np.asarray(x, dtype=float))
    return PotentialSpec("zero", {}, zero, zero)


def _required_half_width(spec: PotentialSpec, start: float) -> float:
    def worst(x):
        return max(
            abs(float(np.max(np.abs(spec.value(np.array([x, -x])))))),
            abs(float(np.max(np.abs(spec.derivative(np.array([x, -x])))))),
        )

    hi = max(start, 1.0)
    for _ in range(60):
        if worst(hi) <= EDGE_DECAY_TOL:
            break
        hi *= 2.0
    else:
        return float("inf")
    lo = start
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if worst(mid) <= EDGE_DECAY_TOL:
            hi = mid
        else:
            lo = mid
    return hi


class PotentialSample:
    """V and V' sampled on a grid, cross-checked against the analytic spec."""

    def __init__(self, grid: Grid, v, v_prime, spec: PotentialSpec):
        v = np.asarray(v, dtype=float)
        v_prime = np.asarray(v_prime, dtype=float)
        if v.shape != (grid.num_points,) or v_prime.shape != (grid.num_points,):
            raise ValueError("sample lengths do not match grid")
        self.grid = grid
        self.v = v
        self.v_prime = v_prime
        self.spec = spec
        self.v.flags.writeable = False
        self.v_prime.flags.writeable = False
        self._crosscheck()

    def _crosscheck(self):
        spectral = spatial_derivative(WaveField(self.grid, self.v.astype(complex)))
        diff = np.max(np.abs(spectral.samples.real - self.v_prime))
        scale = np.max(np.abs(self.v_prime))
        if diff > DERIVATIVE_CROSSCHECK_RTOL * scale + 1e-12:
            raise ValueError(
                f"analytic derivative disagrees with spectral derivative "
                f"(max deviation {diff:.3e} vs allowed "
                f"{DERIVATIVE_CROSSCHECK_RTOL * scale + 1e-12:.3e}); "
                f"the grid may be too coarse for this potential"
            )

    def __repr__(self):
        return f"PotentialSample({self.spec.name} on {self.grid!r})"


def sample_potential(spec: PotentialSpec, grid: Grid) -> PotentialSample:
    """Sample a potential, enforcing decay below tolerance at the box edge."""
    edge = grid.half_width
    edge_worst = max(
        float(np.max(np.abs(spec.value(np.array([edge, -edge]))))),
        float(np.max(np.abs(spec.derivative(np.array([edge, -edge]))))),
    )
    if edge_worst > EDGE_DECAY_TOL:
        required = _required_half_width(spec, edge)
        raise DomainTooSmallError(
            f"potential {spec.name} does not decay below {EDGE_DECAY_TOL:g} at "
            f"|x| = {edge:g} (worst edge value {edge_worst:.3e}); use "
            f"half_width >= {required:.6g}",
            required_half_width=required,
        )
    return PotentialSample(grid, spec.value(grid.x), spec.derivative(grid.x), spec)


@dataclass(frozen=True)
class HypothesisReport:
    """Quantities entering the scattering hypotheses, plus the verdicts."""

    l11_v: float            # integral of |V| (1 + |x|)
    l11_vprime: float       # integral of |V'| (1 + |x|)
    min_v: float
    max_xvprime: float
    nonneg: bool
    repulsive: bool
    admissible: bool


def hypothesis_report(sample: PotentialSample) -> HypothesisReport:
    """Check V >= 0, x V' <= 0 and the weighted-L^1 sizes by quadrature."""
    dx = sample.grid.dx
    weight = 1.0 + np.abs(sample.grid.x)
    l11_v = float(dx * np.sum(np.abs(sample.v) * weight))
    l11_vp = float(dx * np.sum(np.abs(sample.v_prime) * weight))
    min_v = float(sample.v.min())
    max_xvp = float(np.max(sample.grid.x * sample.v_prime))
    nonneg = min_v >= -SIGN_TOL
    repulsive = max_xvp <= SIGN_TOL
    return HypothesisReport(
        l11_v=l11_v,
        l11_vprime=l11_vp,
        min_v=min_v,
        max_xvprime=max_xvp,
        nonneg=nonneg,
        repulsive=repulsive,
        admissible=nonneg and repulsive,
    )
