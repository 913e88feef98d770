"""Mobility counting and planar deployment kinematics of one scissor unit.

Planar model
------------
The moving chain of one unit is reconstructed as a two-bay, two-stage
scissor grid.  With scissor angle ``theta`` between crossed diagonals,
half-width ``w = L7 * sin(theta/2)`` and half-height
``h = L7 * cos(theta/2)``, the labelled points are::

    K---L---J        y = 2h      (top corners and top center)
    | I | H |        y = 3h/2    (upper crossing pivots)
    F---G---E        y = h       (mid corners and center pivot)
    | D | C |        y = h/2     (lower crossing pivots)
    B---O---A        y = 0       (base: sliders and the fixed point)

``O`` is the only fixed point; ``A`` and ``B`` are the rope-driven base
sliders.  The cross diagonals run B-D-G-H-J (length L1) and A-C-G-I-K
(length L2); the mid diagonals O-C-E, O-D-F, E-H-L and F-I-L have length
L7 = L1/2 and pivot at their midpoints C, D, H, I.  The short links
(L7/2) double the inner half-diagonals at those pivots.  Horizontal chord
links lock the deployed state and are not part of the moving chain.

Unit height is ``2 * L7 * cos(theta/2)`` and width ``2 * L7 *
sin(theta/2)`` (two bays of chord ``L7 * sin(theta/2)`` each).  Every
link keeps orientation ``+/- theta/2`` from vertical, so all link angular
rates equal ``theta_dot / 2`` in magnitude.

Velocities and accelerations propagate point to point through the pin
joints: ``V_n = V_{n-1} + omega x r`` and ``A_n = A_{n-1} + alpha x r -
omega^2 r``, the second split into tangential and normal parts.  A
constant slider speed makes ``theta_dot`` nonconstant; the conversion
uses the slider Jacobian ``d(w)/d(theta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "LinkageCount",
    "REFERENCE_LINKAGE_CENSUS",
    "gruebler_mobility",
    "mobility_report",
    "POINT_LABELS",
    "PointKin",
    "KinematicState",
    "solve_positions",
    "make_state",
    "chain_velocities",
    "chain_accelerations",
    "rotational_velocity",
    "rotational_acceleration",
    "DeploymentProfile",
    "deployment_profile",
    "deployment_duration",
    "kinematic_curves",
    "CURVE_KEYS",
    "PROFILE_CSV_HEADER",
    "profile_csv",
]


# ---------------------------------------------------------------------------
# Mobility
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinkageCount:
    """Link and joint census of a planar mechanism."""

    n: int
    jp: int
    jh: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"a mechanism needs at least 2 links, got {self.n}")
        if self.jp < 0 or self.jh < 0:
            raise ValueError("joint counts cannot be negative")


# Census quoted for the triple-scissor drive chain.  The planar mobility
# formula evaluates it to -1, not the single degree of freedom the
# synchronized rope drive is designed for; see mobility_report.
REFERENCE_LINKAGE_CENSUS = LinkageCount(n=18, jp=26, jh=0)


def gruebler_mobility(counts: LinkageCount) -> int:
    """Planar mobility M = 3 (n - 1) - 2 jp - jh (may be <= 0)."""
    return 3 * (counts.n - 1) - 2 * counts.jp - counts.jh


def mobility_report(counts: LinkageCount, expected_dof: int | None = None):
    """Mobility value plus a warning when it misses the expected DoF.

    Returns ``(mobility, warnings)`` where warnings is a list of strings.
    """
    m = gruebler_mobility(counts)
    warnings: list[str] = []
    if expected_dof is not None and m != expected_dof:
        warnings.append(
            f"mobility formula gives M = {m} for (n={counts.n}, jp={counts.jp}, "
            f"jh={counts.jh}), not the expected {expected_dof}; the census does "
            f"not support the claimed degree of freedom (jp = "
            f"{(3 * (counts.n - 1) - counts.jh - expected_dof) // 2} would)"
        )
    return m, warnings


# ---------------------------------------------------------------------------
# Position solution
# ---------------------------------------------------------------------------

POINT_LABELS = ("O", "A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L")

# Position of each labelled point as multiples of (w, h).
_POINT_COEFFS = {
    "O": (0.0, 0.0),
    "A": (1.0, 0.0),
    "B": (-1.0, 0.0),
    "C": (0.5, 0.5),
    "D": (-0.5, 0.5),
    "E": (1.0, 1.0),
    "F": (-1.0, 1.0),
    "G": (0.0, 1.0),
    "H": (0.5, 1.5),
    "I": (-0.5, 1.5),
    "J": (1.0, 2.0),
    "K": (-1.0, 2.0),
    "L": (0.0, 2.0),
}

# Chain edges (child, parent, family sign).  Every link is tilted
# theta/2 from vertical; family sign sigma gives the link angular rate
# omega_z = sigma * theta_dot / 2 (sigma = -1 for links leaning toward
# +x, +1 for their mirror images).
_CHAIN_EDGES = (
    ("C", "O", -1),
    ("E", "O", -1),
    ("D", "O", +1),
    ("F", "O", +1),
    ("G", "C", +1),
    ("A", "C", +1),
    ("B", "D", -1),
    ("H", "G", -1),
    ("I", "G", +1),
    ("L", "E", +1),
    ("J", "H", -1),
    ("K", "I", +1),
)


def _half_dims(unit, theta: float) -> tuple[float, float]:
    w = unit.l7 * math.sin(theta / 2.0)
    h = unit.l7 * math.cos(theta / 2.0)
    return w, h


def solve_positions(unit, theta: float) -> dict[str, np.ndarray]:
    """Planar coordinates of all pivots and sliders at scissor angle theta.

    Parameters
    ----------
    unit : geometry.UnitGeometry
    theta : float
        Scissor angle in radians, within [stowed, deployed].

    Returns
    -------
    dict mapping point label to a length-2 position array (meters).
    """
    lo = unit.stowed_angle_rad
    hi = unit.deployed_angle_rad
    if not (lo - 1e-12 <= theta <= hi + 1e-12):
        raise ValueError(
            f"theta = {theta:.6f} rad outside the deployment range "
            f"[{lo:.6f}, {hi:.6f}] rad"
        )
    w, h = _half_dims(unit, theta)
    return {
        label: np.array([cx * w, cy * h])
        for label, (cx, cy) in _POINT_COEFFS.items()
    }


def unit_height(unit, theta: float) -> float:
    """Height of the unit at scissor angle theta: 2 L7 cos(theta / 2)."""
    return 2.0 * unit.l7 * math.cos(theta / 2.0)


def unit_width(unit, theta: float) -> float:
    """Width of the unit at scissor angle theta: 2 L7 sin(theta / 2)."""
    return 2.0 * unit.l7 * math.sin(theta / 2.0)


# ---------------------------------------------------------------------------
# Velocity / acceleration propagation
# ---------------------------------------------------------------------------


def rotational_velocity(omega_z: float, r: np.ndarray) -> np.ndarray:
    """Velocity of a point at offset r on a link spinning at omega_z."""
    return omega_z * np.array([-r[1], r[0]])


def rotational_acceleration(
    omega_z: float, alpha_z: float, r: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """(normal, tangential) acceleration of a point at offset r.

    Normal part ``-omega^2 r`` points toward the rotation base (magnitude
    V^2 / |r|); tangential part ``alpha x r`` vanishes at constant
    angular rate.
    """
    normal = -(omega_z**2) * r
    tangential = alpha_z * np.array([-r[1], r[0]])
    return normal, tangential


@dataclass
class PointKin:
    """Kinematic record of one labelled point."""

    label: str
    position: np.ndarray
    velocity: np.ndarray | None = None
    acceleration: np.ndarray | None = None
    acc_normal: np.ndarray | None = None
    acc_tangential: np.ndarray | None = None


@dataclass
class KinematicState:
    """State of the unit chain at one deployment angle.

    ``slider_speed`` is the signed speed of slider A along +x (positive
    deploys).  ``theta_dot`` and ``theta_ddot`` are derived from it under
    the constant-slider-speed drive.
    """

    unit: object
    theta: float
    slider_speed: float
    theta_dot: float
    theta_ddot: float
    points: dict[str, PointKin] = field(default_factory=dict)

    @property
    def velocities_solved(self) -> bool:
        return all(p.velocity is not None for p in self.points.values())


def slider_jacobian(unit, theta: float) -> float:
    """d(slider position)/d(theta) = (L7 / 2) cos(theta / 2)."""
    return 0.5 * unit.l7 * math.cos(theta / 2.0)


def theta_rate_from_slider(unit, theta: float, slider_speed: float) -> float:
    """Angle rate produced by the rope drive at the given slider speed."""
    return slider_speed / slider_jacobian(unit, theta)


def theta_accel_from_slider(unit, theta: float, slider_speed: float) -> float:
    """Angle acceleration under a constant slider speed.

    Differentiating theta_dot = v / ((L7/2) cos(theta/2)) once more gives
    theta_ddot = 2 v^2 sin(theta/2) / (L7^2 cos^3(theta/2)).
    """
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return 2.0 * slider_speed**2 * s / (unit.l7**2 * c**3)


def make_state(unit, theta: float, slider_speed: float = 0.0) -> KinematicState:
    """Solve positions and package them with the drive rates."""
    positions = solve_positions(unit, theta)
    state = KinematicState(
        unit=unit,
        theta=theta,
        slider_speed=slider_speed,
        theta_dot=theta_rate_from_slider(unit, theta, slider_speed),
        theta_ddot=theta_accel_from_slider(unit, theta, slider_speed),
        points={label: PointKin(label, pos) for label, pos in positions.items()},
    )
    return state


def chain_velocities(state: KinematicState) -> KinematicState:
    """Propagate velocities through the pin-joint chain from the fixed point.

    The fixed point O has zero velocity; every subsequent point adds the
    relative term ``omega x r`` of the link that carries it.
    """
    if not state.points:
        raise RuntimeError("positions not solved; build the state first")
    state.points["O"].velocity = np.zeros(2)
    for child, parent, sigma in _CHAIN_EDGES:
        base = state.points[parent]
        if base.velocity is None:
            raise RuntimeError(f"velocity of parent point {parent} not solved")
        omega = sigma * state.theta_dot / 2.0
        r = state.points[child].position - base.position
        state.points[child].velocity = base.velocity + rotational_velocity(omega, r)
    return state


def chain_accelerations(state: KinematicState) -> KinematicState:
    """Propagate accelerations, split into normal and tangential parts."""
    if not state.velocities_solved:
        raise RuntimeError("velocities not solved; run chain_velocities first")
    o = state.points["O"]
    o.acceleration = np.zeros(2)
    o.acc_normal = np.zeros(2)
    o.acc_tangential = np.zeros(2)
    for child, parent, sigma in _CHAIN_EDGES:
        base = state.points[parent]
        pt = state.points[child]
        omega = sigma * state.theta_dot / 2.0
        alpha = sigma * state.theta_ddot / 2.0
        r = pt.position - base.position
        dist = float(np.hypot(r[0], r[1]))
        if dist == 0.0 and omega != 0.0:
            raise ValueError(
                f"point {child} rotates about coincident base {parent} (r = 0)"
            )
        normal, tangential = rotational_acceleration(omega, alpha, r)
        pt.acc_normal = base.acc_normal + normal
        pt.acc_tangential = base.acc_tangential + tangential
        pt.acceleration = base.acceleration + normal + tangential
    return state


# ---------------------------------------------------------------------------
# Deployment profile
# ---------------------------------------------------------------------------


@dataclass
class DeploymentProfile:
    """Sampled trajectory of one deployment (or stow, or full cycle)."""

    direction: str
    slider_speed: float
    time: np.ndarray
    theta: np.ndarray
    theta_dot: np.ndarray
    theta_ddot: np.ndarray
    points: dict[str, dict[str, np.ndarray]]
    total_duration: float
    unit: object


def deployment_duration(unit, slider_speed: float) -> float:
    """Closed-form single-stroke duration at constant slider speed.

    The slider travels ``L7 * (sin(t1/2) - sin(t2/2))`` between the
    stowed and deployed angles.
    """
    if slider_speed <= 0.0:
        raise ValueError(f"slider speed must be positive, got {slider_speed}")
    travel = unit.l7 * (
        math.sin(unit.deployed_angle_rad / 2.0)
        - math.sin(unit.stowed_angle_rad / 2.0)
    )
    return travel / slider_speed


def _integrate_theta(unit, slider_speed, theta0, t_grid, sign, substeps=8):
    """Fixed-step RK4 on d(theta)/dt = sign * v / jacobian(theta).

    ``t_grid`` must be non-decreasing; theta0 applies at t_grid[0].
    """

    def rate(theta):
        # clamp inside the physical range to keep the jacobian finite
        theta = min(max(theta, 1e-9), math.pi - 1e-9)
        return sign * slider_speed / slider_jacobian(unit, theta)

    thetas = np.empty(len(t_grid))
    thetas[0] = theta0
    th = theta0
    for i in range(1, len(t_grid)):
        dt = (t_grid[i] - t_grid[i - 1]) / substeps
        for _ in range(substeps):
            k1 = rate(th)
            k2 = rate(th + 0.5 * dt * k1)
            k3 = rate(th + 0.5 * dt * k2)
            k4 = rate(th + dt * k3)
            th = th + dt * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
        thetas[i] = th
    return thetas


def deployment_profile(
    unit,
    slider_speed: float = 0.1,
    direction: str = "deploy",
    samples: int = 201,
) -> DeploymentProfile:
    """Integrate the deployment stroke at constant slider speed.

    Parameters
    ----------
    unit : geometry.UnitGeometry
    slider_speed : float
        Rope-driven slider speed, m/s (must be positive).
    direction : {"deploy", "stow", "full-cycle"}
    samples : int
        Number of time samples; 0 yields an empty profile.

    Returns
    -------
    DeploymentProfile with per-point position/velocity/acceleration
    trajectories.
    """
    if slider_speed <= 0.0:
        raise ValueError(f"slider speed must be positive, got {slider_speed}")
    if direction not in ("deploy", "stow", "full-cycle"):
        raise ValueError(f"unknown direction {direction!r}")
    if samples < 0:
        raise ValueError("samples cannot be negative")

    stroke = deployment_duration(unit, slider_speed)
    total = 2.0 * stroke if direction == "full-cycle" else stroke

    if samples == 0:
        empty = np.empty(0)
        return DeploymentProfile(
            direction=direction,
            slider_speed=slider_speed,
            time=empty,
            theta=empty.copy(),
            theta_dot=empty.copy(),
            theta_ddot=empty.copy(),
            points={},
            total_duration=total,
            unit=unit,
        )
    if samples < 2:
        raise ValueError("a non-empty profile needs at least 2 samples")

    t = np.linspace(0.0, total, samples)
    if direction == "deploy":
        theta = _integrate_theta(unit, slider_speed, unit.stowed_angle_rad, t, +1)
        signed = np.full(samples, slider_speed)
    elif direction == "stow":
        theta = _integrate_theta(unit, slider_speed, unit.deployed_angle_rad, t, -1)
        signed = np.full(samples, -slider_speed)
    else:
        # integrate each phase on its own time axis so the deploy stroke
        # ends exactly at the stroke time even when no grid point hits it
        up_mask = t <= stroke
        t_up = np.append(t[up_mask], stroke)
        theta_up = _integrate_theta(unit, slider_speed, unit.stowed_angle_rad, t_up, +1)
        t_down = np.concatenate([[0.0], t[~up_mask] - stroke])
        theta_down = _integrate_theta(unit, slider_speed, theta_up[-1], t_down, -1)
        theta = np.concatenate([theta_up[:-1], theta_down[1:]])
        signed = np.where(up_mask, slider_speed, -slider_speed)

    # clip round-off excursions beyond the physical stroke
    theta = np.clip(theta, unit.stowed_angle_rad, unit.deployed_angle_rad)

    n = len(t)
    theta_dot = np.empty(n)
    theta_ddot = np.empty(n)
    points = {
        label: {
            "position": np.empty((n, 2)),
            "velocity": np.empty((n, 2)),
            "acceleration": np.empty((n, 2)),
        }
        for label in POINT_LABELS
    }
    for i in range(n):
        state = make_state(unit, float(theta[i]), float(signed[i]))
        chain_velocities(state)
        chain_accelerations(state)
        theta_dot[i] = state.theta_dot
        theta_ddot[i] = state.theta_ddot
        for label in POINT_LABELS:
            rec = state.points[label]
            points[label]["position"][i] = rec.position
            points[label]["velocity"][i] = rec.velocity
            points[label]["acceleration"][i] = rec.acceleration

    return DeploymentProfile(
        direction=direction,
        slider_speed=slider_speed,
        time=t,
        theta=theta,
        theta_dot=theta_dot,
        theta_ddot=theta_ddot,
        points=points,
        total_duration=total,
        unit=unit,
    )


CURVE_KEYS = (
    "linear_velocity",
    "angular_velocity",
    "linear_acceleration",
    "angular_acceleration",
)

# The linear curves track the top-center point, the fastest material
# point of the chain.
TRACKED_POINT = "L"


def kinematic_curves(profile: DeploymentProfile) -> dict[str, np.ndarray]:
    """The four scalar deployment curves sampled on the profile grid.

    linear velocity/acceleration are the speed and acceleration magnitude
    of the tracked top point; the angular pair is theta_dot/theta_ddot.
    """
    if len(profile.time) == 0:
        return {key: np.empty(0) for key in CURVE_KEYS}
    tip = profile.points[TRACKED_POINT]
    return {
        "linear_velocity": np.hypot(tip["velocity"][:, 0], tip["velocity"][:, 1]),
        "angular_velocity": np.abs(profile.theta_dot),
        "linear_acceleration": np.hypot(
            tip["acceleration"][:, 0], tip["acceleration"][:, 1]
        ),
        "angular_acceleration": np.abs(profile.theta_ddot),
    }


PROFILE_CSV_HEADER = ("t_s", "theta_rad", "point", "x_m", "y_m", "vx", "vy", "ax", "ay")


def profile_csv(profile: DeploymentProfile, precision: int = 6) -> str:
    """Long-format CSV of the profile: one row per (time sample, point)."""
    lines = [",".join(PROFILE_CSV_HEADER)]
    fmt = f"{{:.{precision}g}}"
    for i in range(len(profile.time)):
        for label in POINT_LABELS:
            rec = profile.points[label]
            row = [
                fmt.format(profile.time[i]),
                fmt.format(profile.theta[i]),
                label,
                fmt.format(rec["position"][i, 0]),
                fmt.format(rec["position"][i, 1]),
                fmt.format(rec["velocity"][i, 0]),
                fmt.format(rec["velocity"][i, 1]),
                fmt.format(rec["acceleration"][i, 0]),
                fmt.format(rec["acceleration"][i, 1]),
            ]
            lines.append(",".join(row))
    return "\n".join(lines) + "\n"
