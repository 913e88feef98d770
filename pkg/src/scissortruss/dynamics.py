"""Energy-method dynamics of the deployed ring in its deployment coordinate.

The ring of ``unit_count`` identical units, each of mass ``m``, moves as a
whole through the angular coordinate ``theta``.  Radial travel scales with
the ring radius ``R0`` and vertical travel with the unit length parameter
``L``, giving (small angles throughout)

    T   = (n/2) m (R0^2 + L^2) theta_dot^2
    V_e = (n/2) k R0^2 theta^2
    V_g = n m g L theta

Stationarity of T + V yields the linear equation of motion

    theta_ddot + (k R0^2 / (m (R0^2 + L^2))) theta + g L / (R0^2 + L^2) = 0

whose undamped natural frequency (gravity term dropped) is
``omega_n = sqrt(k R0^2 / (m (R0^2 + L^2)))``.  The time integrator is
velocity Verlet, which is symplectic and keeps the total mechanical
energy bounded over arbitrarily many periods.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "DynamicParams",
    "OscillationState",
    "FrequencyReference",
    "EnergyComponents",
    "NaturalFrequency",
    "OscillationTrajectory",
    "energy_components",
    "total_energy",
    "natural_frequency",
    "equilibrium_angle",
    "simulate_oscillation",
    "dominant_frequency",
    "compare_references",
    "FrequencyComparison",
    "TRAJECTORY_CSV_HEADER",
    "trajectory_csv",
]


@dataclass(frozen=True)
class DynamicParams:
    """Lumped parameters of the ring oscillator.

    mass/stiffness defaults reproduce the reference substitution
    (k = 1 N/m, m = 1 kg, R0 = 12.5 m, L = 6.47 m, 12 units).
    """

    mass: float = 1.0
    stiffness: float = 1.0
    ring_radius: float = 12.5
    unit_length: float = 6.47
    gravity: float = 9.81
    unit_count: int = 12

    def __post_init__(self):
        if self.mass <= 0.0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.stiffness < 0.0:
            raise ValueError(f"stiffness cannot be negative, got {self.stiffness}")
        if self.ring_radius <= 0.0:
            raise ValueError(f"ring radius must be positive, got {self.ring_radius}")
        if self.unit_length < 0.0:
            raise ValueError(f"unit length cannot be negative, got {self.unit_length}")
        if self.gravity < 0.0:
            raise ValueError(f"gravity cannot be negative, got {self.gravity}")
        if self.unit_count < 1:
            raise ValueError(f"unit count must be positive, got {self.unit_count}")

    @property
    def inertia_term(self) -> float:
        """R0^2 + L^2, the per-unit inertia length scale squared."""
        return self.ring_radius**2 + self.unit_length**2


@dataclass
class OscillationState:
    """Deployment-coordinate state (theta, theta_dot) at time t."""

    theta: float
    theta_dot: float = 0.0
    t: float = 0.0

    def __post_init__(self):
        for name in ("theta", "theta_dot", "t"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class FrequencyReference:
    """One row of the bundled frequency-reference datasets."""

    aperture_m: float | None = None
    natural_hz: float | None = None
    sim_with_links_hz: float | None = None
    sim_without_links_hz: float | None = None
    antenna_name: str | None = None
    note: str = ""

    def __post_init__(self):
        for value in (
            self.natural_hz,
            self.sim_with_links_hz,
            self.sim_without_links_hz,
        ):
            if value is not None and value < 0.0:
                raise ValueError("frequencies cannot be negative")


class EnergyComponents(NamedTuple):
    kinetic: float
    elastic: float
    gravitational: float


class NaturalFrequency(NamedTuple):
    omega_n: float
    f_n: float
    degenerate: bool


def energy_components(state: OscillationState, params: DynamicParams) -> EnergyComponents:
    """Kinetic, elastic and gravitational energies of the full ring (J)."""
    n = params.unit_count
    kinetic = 0.5 * n * params.mass * params.inertia_term * state.theta_dot**2
    elastic = 0.5 * n * params.stiffness * params.ring_radius**2 * state.theta**2
    gravitational = n * params.mass * params.gravity * params.unit_length * state.theta
    return EnergyComponents(kinetic, elastic, gravitational)


def total_energy(state: OscillationState, params: DynamicParams) -> float:
    return sum(energy_components(state, params))


def natural_frequency(params: DynamicParams) -> NaturalFrequency:
    """Undamped natural frequency; the gravity term does not enter.

    A zero stiffness gives a zero frequency flagged as degenerate.
    """
    if params.stiffness == 0.0:
        return NaturalFrequency(0.0, 0.0, True)
    omega = math.sqrt(
        params.stiffness * params.ring_radius**2 / (params.mass * params.inertia_term)
    )
    return NaturalFrequency(omega, omega / (2.0 * math.pi), False)


def equilibrium_angle(params: DynamicParams) -> float:
    """Static offset where the gravity term balances the elastic one.

    Setting theta_ddot = 0 in the equation of motion gives
    theta_eq = -m g L / (k R0^2).
    """
    if params.stiffness == 0.0:
        raise ValueError("no static equilibrium for zero stiffness")
    return -(params.mass * params.gravity * params.unit_length) / (
        params.stiffness * params.ring_radius**2
    )


@dataclass
class OscillationTrajectory:
    """Sampled solution of the deployment-coordinate oscillation."""

    time: np.ndarray
    theta: np.ndarray
    theta_dot: np.ndarray
    params: DynamicParams

    def energies(self) -> np.ndarray:
        """Total mechanical energy at every sample."""
        n = self.params.unit_count
        p = self.params
        kin = 0.5 * n * p.mass * p.inertia_term * self.theta_dot**2
        ela = 0.5 * n * p.stiffness * p.ring_radius**2 * self.theta**2
        grav = n * p.mass * p.gravity * p.unit_length * self.theta
        return kin + ela + grav


def simulate_oscillation(
    params: DynamicParams,
    initial: OscillationState,
    dt: float = 1e-3,
    t_end: float = 10.0,
) -> OscillationTrajectory:
    """Integrate the linear equation of motion with velocity Verlet.

    The gravity forcing stays in the model, so the motion oscillates
    about the static offset rather than about zero.
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    if t_end <= dt:
        raise ValueError(f"t_end must exceed dt, got {t_end}")

    omega2 = params.stiffness * params.ring_radius**2 / (params.mass * params.inertia_term)
    forcing = params.gravity * params.unit_length / params.inertia_term

    steps = int(round(t_end / dt))
    theta = np.empty(steps + 1)
    theta_dot = np.empty(steps + 1)
    theta[0] = initial.theta
    theta_dot[0] = initial.theta_dot

    def accel(th):
        return -omega2 * th - forcing

    a = accel(theta[0])
    for i in range(steps):
        theta[i + 1] = theta[i] + dt * theta_dot[i] + 0.5 * dt * dt * a
        a_next = accel(theta[i + 1])
        theta_dot[i + 1] = theta_dot[i] + 0.5 * dt * (a + a_next)
        a = a_next

    time = initial.t + dt * np.arange(steps + 1)
    return OscillationTrajectory(time, theta, theta_dot, params)


def dominant_frequency(trajectory: OscillationTrajectory) -> float:
    """Frequency of the strongest spectral line of theta(t), Hz.

    The mean is removed first so a static offset does not mask the
    oscillation peak.
    """
    theta = trajectory.theta - np.mean(trajectory.theta)
    dt = trajectory.time[1] - trajectory.time[0]
    spectrum = np.abs(np.fft.rfft(theta))
    freqs = np.fft.rfftfreq(len(theta), dt)
    return float(freqs[int(np.argmax(spectrum))])


@dataclass(frozen=True)
class FrequencyComparison:
    """Analytic frequency versus one stored simulation response."""

    reference: FrequencyReference
    analytic_hz: float | None
    simulated_hz: float | None
    relative_difference: float | None
    flagged: bool

    @property
    def label(self) -> str:
        ref = self.reference
        if ref.antenna_name:
            return ref.antenna_name
        return f"{ref.aperture_m:g} m" if ref.aperture_m is not None else "?"


def compare_references(
    params: DynamicParams,
    references: list[FrequencyReference],
    use_links: bool = True,
    flag_threshold: float = 0.5,
) -> list[FrequencyComparison]:
    """Compare the analytic frequency against stored simulation rows.

    For aperture rows the analytic model is evaluated with the row's ring
    radius and a proportionally scaled unit length; rows without a usable
    simulation value (or without an aperture, such as the cross-design
    antenna rows) become comparison-only entries.  Rows whose relative
    difference exceeds ``flag_threshold`` are flagged.
    """
    out: list[FrequencyComparison] = []
    for ref in references:
        simulated = ref.sim_with_links_hz if use_links else ref.sim_without_links_hz
        analytic = None
        if ref.aperture_m is not None:
            scale = ref.aperture_m / (2.0 * params.ring_radius)
            row_params = DynamicParams(
                mass=params.mass,
                stiffness=params.stiffness,
                ring_radius=ref.aperture_m / 2.0,
                unit_length=params.unit_length * scale,
                gravity=params.gravity,
                unit_count=params.unit_count,
            )
            analytic = natural_frequency(row_params).f_n
        if analytic is not None and simulated:
            rel = abs(analytic - simulated) / simulated
            out.append(
                FrequencyComparison(ref, analytic, simulated, rel, rel > flag_threshold)
            )
        else:
            out.append(FrequencyComparison(ref, analytic, simulated, None, False))
    return out


TRAJECTORY_CSV_HEADER = ("t_s", "theta_rad", "theta_dot")


def trajectory_csv(trajectory: OscillationTrajectory, precision: int = 6) -> str:
    lines = [",".join(TRAJECTORY_CSV_HEADER)]
    fmt = f"{{:.{precision}g}}"
    for t, th, thd in zip(trajectory.time, trajectory.theta, trajectory.theta_dot):
        lines.append(",".join((fmt.format(t), fmt.format(th), fmt.format(thd))))
    return "\n".join(lines) + "\n"
