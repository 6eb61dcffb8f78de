"""Brute-force verification of the closed-form overlap weight.

The production rate engine never integrates wavefunctions; it uses the
compact expression ``overlap_weight(n, m, X)``.  This module recomputes the
underlying object the slow way: the transverse overlap amplitude

    A = int dx exp(-i k_x x) I_m(rho_parent(x)) I_n(rho_daughter(x))

between two guiding-center-shifted Landau modes, by direct quadrature of
its real and imaginary parts.  The squared modulus, expressed per unit
field, must equal

    overlap_weight(n, m, X) / field,   X = (delta_k_y^2 + k_x^2) / (2 field),

for every admissible parameter set.  Indices are capped low: this is a
reference path, not a production path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quadrature
from .landau import transverse_wavefunction
from .rate import QuadratureConfig, DEFAULT_CONFIG
from .specfun import overlap_weight

__all__ = [
    "MAX_ORACLE_INDEX",
    "OverlapParams",
    "transverse_overlap_sq",
    "closed_form_overlap_sq",
    "OverlapVerification",
    "verify_closed_form",
]

MAX_ORACLE_INDEX = 12

# quadrature details of the reference path: window half-width in units of
# the magnetic length, growth cap, and the absolute floor for the two real
# quadratures (the amplitude itself is bounded by one)
_WINDOW_PAD = 8.0
_MAX_DOUBLINGS = 6
_ABS_TOL = 1e-15


@dataclass(frozen=True)
class OverlapParams:
    """Inputs of one overlap evaluation.

    ``k_x_neutral`` and ``delta_k_y`` are the momentum transfers [MeV]
    entering the displacement; ``field`` is |e|B in MeV^2.
    """

    n: int
    m: int
    k_x_neutral: float
    delta_k_y: float
    field: float

    def __post_init__(self) -> None:
        if self.field <= 0.0:
            raise ValueError(f"field must be positive, got {self.field}")
        if min(self.n, self.m) < 0:
            raise ValueError("indices must be nonnegative")
        if max(self.n, self.m) > MAX_ORACLE_INDEX:
            raise ValueError(
                f"indices ({self.n}, {self.m}) above the reference-path cap {MAX_ORACLE_INDEX}"
            )

    def displacement_sq(self) -> float:
        """X = (delta_k_y^2 + k_x^2) / (2 field), the closed form's argument."""
        return (self.delta_k_y**2 + self.k_x_neutral**2) / (2.0 * self.field)


def closed_form_overlap_sq(params: OverlapParams) -> float:
    """The compact prediction overlap_weight(n, m, X)/field in 1/MeV^2."""
    return overlap_weight(params.n, params.m, params.displacement_sq()) / params.field


def transverse_overlap_sq(
    params: OverlapParams, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> float:
    """|A|^2 per unit field by direct quadrature, in 1/MeV^2.

    Working in the dimensionless transverse coordinate, the amplitude is

        A = int drho exp(-i q rho) psi_m(rho) psi_n(rho + delta),

    with q = k_x/sqrt(field), delta = delta_k_y/sqrt(field) and psi the
    unit-normalized oscillator modes; the result returned is A_re^2 + A_im^2
    divided by the field.  The window starts at +-(8 + sqrt(2 max(n,m)+1))
    around the midpoint of the two envelope centers and doubles until the
    value is stable to 1e-12 of itself (capped: once the window swallows
    both envelopes whole, further change is pure roundoff).
    """
    root_field = math.sqrt(params.field)
    q = params.k_x_neutral / root_field
    delta = params.delta_k_y / root_field
    center = -delta / 2.0
    half_width = _WINDOW_PAD + math.sqrt(2.0 * max(params.n, params.m) + 1.0)

    # unit field makes transverse_wavefunction the dimensionless mode
    def product(rho: np.ndarray) -> np.ndarray:
        return transverse_wavefunction(params.m, 1.0, rho) * transverse_wavefunction(
            params.n, 1.0, rho + delta
        )

    def modulus_sq(width: float) -> float:
        lo, hi = center - width, center + width
        re, _ = quadrature.integrate(
            lambda r: np.cos(q * r) * product(r),
            lo, hi, cfg.rel_tol, _ABS_TOL, cfg.max_subdivisions,
        )
        im, _ = quadrature.integrate(
            lambda r: -np.sin(q * r) * product(r),
            lo, hi, cfg.rel_tol, _ABS_TOL, cfg.max_subdivisions,
        )
        return re * re + im * im

    value = modulus_sq(half_width)
    for _ in range(_MAX_DOUBLINGS):
        half_width *= 2.0
        wider = modulus_sq(half_width)
        converged = abs(wider - value) <= 1e-12 * abs(wider) + 1e-28
        value = wider
        if converged:
            break
    return value / params.field


@dataclass(frozen=True)
class OverlapVerification:
    """Outcome of a seeded randomized closed-form comparison."""

    trials: int
    seed: int
    index_max: int
    tolerance: float
    max_rel_err: float
    worst: OverlapParams
    failures: tuple[tuple[OverlapParams, float], ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "index_max": self.index_max,
            "tolerance": self.tolerance,
            "max_rel_err": self.max_rel_err,
            "worst": dict(vars(self.worst)),
            "failures": len(self.failures),
            "passed": self.passed,
        }


def verify_closed_form(
    trials: int,
    seed: int = 0,
    index_max: int = 8,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    tolerance: float = 1e-6,
) -> OverlapVerification:
    """Compare quadrature against the closed form on seeded random draws.

    Momentum magnitudes are drawn from [0.3, 3] sqrt(field) with random
    signs: the upper end exercises arguments out to X = 9, while the lower
    cutoff keeps the smallest weights (high |n - m| at small X) above the
    double-precision cancellation floor of the quadrature, where a relative
    comparison is still meaningful.  Identical seeds give identical reports.
    """
    if trials <= 0:
        raise ValueError(f"trials must be positive, got {trials}")
    if not 0 <= index_max <= MAX_ORACLE_INDEX:
        raise ValueError(f"index_max must lie in [0, {MAX_ORACLE_INDEX}], got {index_max}")

    rng = np.random.default_rng(seed)
    max_err = -1.0
    worst: OverlapParams | None = None
    failures: list[tuple[OverlapParams, float]] = []
    for _ in range(trials):
        n = int(rng.integers(0, index_max + 1))
        m = int(rng.integers(0, index_max + 1))
        field = float(10.0 ** rng.uniform(-0.3, 3.3))
        scale = math.sqrt(field)
        k_x = float(rng.uniform(0.3, 3.0) * scale * rng.choice((-1.0, 1.0)))
        d_ky = float(rng.uniform(0.3, 3.0) * scale * rng.choice((-1.0, 1.0)))
        params = OverlapParams(n=n, m=m, k_x_neutral=k_x, delta_k_y=d_ky, field=field)

        reference = closed_form_overlap_sq(params)
        numeric = transverse_overlap_sq(params, cfg)
        rel_err = abs(numeric - reference) / reference
        if rel_err > max_err:
            max_err, worst = rel_err, params
        if rel_err >= tolerance:
            failures.append((params, rel_err))

    assert worst is not None
    return OverlapVerification(
        trials=trials,
        seed=seed,
        index_max=index_max,
        tolerance=tolerance,
        max_rel_err=max_err,
        worst=worst,
        failures=tuple(failures),
    )
