"""Parametric geometry of the triple-scissor deployable truss unit and ring.

A deployable ring antenna is assembled from N identical scissor-link units
placed on the sides of a regular N-gon of circumdiameter D (the aperture).
Each unit is a planar assembly of 14 links in four length classes:

    L1  = L2            full cross diagonals
    L3  = L4 = L5 = L6  horizontal chord links (top and bottom pairs)
    L7  = L8 = L9 = L10 mid diagonals, exactly L1 / 2
    L11 = L12 = L13 L14 pivot braces, exactly L7 / 2

Given the deployed unit height H and the deployed scissor angle t1 between
the crossed diagonals, the closed forms are

    L3 = (H / 2) * tan(t1 / 2)        horizontal half-span
    L1 = H / cos(t1 / 2)              cross diagonal
    L7 = L1 / 2,  L11 = L7 / 2        halving chain

The stowed/deployed envelope of one scissor pair follows the chord relation
``span = L * sqrt(2 * (1 + cos(theta))) = 2 * L * cos(theta / 2)``.

Two baseline deployed heights circulate in the reference data for the
25 m / 12-unit design: 5.09 m (input of the link synthesis chain) and
5.122 m (used by the design-metrics tables).  Both are kept, each where the
reference data uses it, and reports surface the discrepancy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

__all__ = [
    "DEPLOYED_ANGLE_DEG",
    "STOWED_ANGLE_DEG",
    "BASELINE_APERTURE_M",
    "BASELINE_UNIT_COUNT",
    "SYNTHESIS_UNIT_HEIGHT_M",
    "METRICS_DEPLOYED_HEIGHT_M",
    "METRICS_STOWED_HEIGHT_WITH_LINKS_M",
    "METRICS_STOWED_HEIGHT_WITHOUT_LINKS_M",
    "METRICS_STOWED_DIAMETER_M",
    "UnitGeometry",
    "AntennaDesign",
    "DesignMetrics",
    "stretched_length",
    "scissor_span",
    "synthesize_unit",
    "antenna_design",
    "ring_closure_residual",
    "polygon_prism_volume",
    "design_metrics",
    "table_row_set",
    "METRICS_CSV_HEADER",
    "metrics_csv",
]

DEPLOYED_ANGLE_DEG = 80.0
STOWED_ANGLE_DEG = 12.54

BASELINE_APERTURE_M = 25.0
BASELINE_UNIT_COUNT = 12

# Deployed unit height feeding the link-length closed forms.
SYNTHESIS_UNIT_HEIGHT_M = 5.09
# Baseline row of the design-metrics tables (25 m aperture, 12 units).
METRICS_DEPLOYED_HEIGHT_M = 5.122
METRICS_STOWED_HEIGHT_WITH_LINKS_M = 11.010
METRICS_STOWED_HEIGHT_WITHOUT_LINKS_M = 6.697
METRICS_STOWED_DIAMETER_M = 3.246


@dataclass(frozen=True)
class UnitGeometry:
    """One modular scissor unit: 14 link lengths plus its working angles.

    ``lengths`` holds L1..L14 in meters.  ``deployed_angle_deg`` and
    ``stowed_angle_deg`` are the scissor angles between the crossed
    diagonals at the two ends of the deployment stroke.
    ``stretched_length`` is the chord the unit spans on the deployed ring;
    for a free-standing unit it defaults to the top-chord span 2 * L3.
    """

    lengths: tuple[float, ...]
    deployed_angle_deg: float
    stowed_angle_deg: float
    deployed_height: float
    stretched_length: float

    def __post_init__(self):
        if len(self.lengths) != 14:
            raise ValueError(f"expected 14 link lengths, got {len(self.lengths)}")
        if any(not (L > 0.0) for L in self.lengths):
            raise ValueError("all link lengths must be positive")
        if not (0.0 < self.stowed_angle_deg < self.deployed_angle_deg < 180.0):
            raise ValueError(
                "angles must satisfy 0 < stowed < deployed < 180 degrees, got "
                f"stowed={self.stowed_angle_deg}, deployed={self.deployed_angle_deg}"
            )
        L = self.lengths
        groups = [L[0:2], L[2:6], L[6:10], L[10:14]]
        for g in groups:
            if any(abs(x - g[0]) > 1e-9 * g[0] for x in g):
                raise ValueError("link lengths break the four-group symmetry")
        if abs(L[6] - L[0] / 2.0) > 1e-9 * L[0]:
            raise ValueError("mid diagonal must equal half the cross diagonal")
        if abs(L[10] - L[6] / 2.0) > 1e-9 * L[6]:
            raise ValueError("pivot brace must equal half the mid diagonal")
        if not (self.deployed_height > 0.0 and self.stretched_length > 0.0):
            raise ValueError("deployed_height and stretched_length must be positive")

    @property
    def l1(self) -> float:
        return self.lengths[0]

    @property
    def l3(self) -> float:
        return self.lengths[2]

    @property
    def l7(self) -> float:
        return self.lengths[6]

    @property
    def l11(self) -> float:
        return self.lengths[10]

    @property
    def deployed_angle_rad(self) -> float:
        return math.radians(self.deployed_angle_deg)

    @property
    def stowed_angle_rad(self) -> float:
        return math.radians(self.stowed_angle_deg)

    def total_link_length(self) -> float:
        """Sum of all 14 link lengths (drives the mass model)."""
        return sum(self.lengths)


@dataclass(frozen=True)
class AntennaDesign:
    """A full deployable ring: aperture, unit count and the per-unit geometry."""

    aperture_m: float
    unit_count: int
    with_links: bool
    unit: UnitGeometry

    def __post_init__(self):
        if self.aperture_m <= 0.0:
            raise ValueError("aperture must be positive")
        if self.unit_count < 3:
            raise ValueError("a ring needs at least 3 units")
        chord = stretched_length(self.aperture_m, self.unit_count)
        if abs(self.unit.stretched_length - chord) > 1e-9 * chord:
            raise ValueError(
                f"unit stretched length {self.unit.stretched_length!r} does not "
                f"match the ring chord {chord!r}"
            )

    @property
    def ring_radius(self) -> float:
        return self.aperture_m / 2.0


@dataclass(frozen=True)
class DesignMetrics:
    """One row of the deployed/stowed design-parameter table."""

    aperture_m: float
    unit_count: int
    with_links: bool
    stretched_length: float
    deployed_height: float
    stowed_height: float
    deployed_diameter: float
    stowed_diameter: float
    deployed_volume: float
    stowed_volume: float
    sr_diameter: float
    sr_height: float
    sr_volume: float
    # True when the stow coefficients were extrapolated beyond the unit
    # count they were established for (anything other than 12 units).
    extrapolated: bool = False

    def __post_init__(self):
        numeric = (
            self.stretched_length,
            self.deployed_height,
            self.stowed_height,
            self.deployed_diameter,
            self.stowed_diameter,
            self.deployed_volume,
            self.stowed_volume,
            self.sr_diameter,
            self.sr_height,
            self.sr_volume,
        )
        if any(not (v > 0.0) for v in numeric):
            raise ValueError("all design metrics must be strictly positive")


def stretched_length(aperture_m: float, unit_count: int) -> float:
    """Chord spanned by one unit on the deployed ring: D * sin(pi / N)."""
    if aperture_m <= 0.0:
        raise ValueError(f"aperture must be positive, got {aperture_m}")
    if unit_count < 2:
        raise ValueError(f"unit count must be at least 2, got {unit_count}")
    return aperture_m * math.sin(math.pi / unit_count)


def scissor_span(length_m: float, angle_deg: float) -> float:
    """Chord across one scissor pair of link length L at opening angle theta.

    Cosine-law form ``L * sqrt(2 * (1 + cos(theta)))``, equal to
    ``2 * L * cos(theta / 2)``.  At 0 deg the links lie parallel and the
    chord is the full 2L; at 180 deg the pair is flat and the chord closes
    to zero.
    """
    if length_m <= 0.0:
        raise ValueError(f"link length must be positive, got {length_m}")
    if not (0.0 <= angle_deg <= 180.0):
        raise ValueError(f"scissor angle must lie in [0, 180] deg, got {angle_deg}")
    return 2.0 * length_m * math.cos(math.radians(angle_deg) / 2.0)


def synthesize_unit(
    unit_height_m: float,
    deployed_angle_deg: float = DEPLOYED_ANGLE_DEG,
    stowed_angle_deg: float = STOWED_ANGLE_DEG,
    stretched_length_m: float | None = None,
) -> UnitGeometry:
    """Derive all 14 link lengths from the deployed height and angles.

    Parameters
    ----------
    unit_height_m : float
        Height of the fully deployed unit, meters.
    deployed_angle_deg, stowed_angle_deg : float
        Scissor angles between the crossed diagonals at the deployed and
        stowed ends of the stroke, degrees.
    stretched_length_m : float, optional
        Chord assigned to the unit on a ring.  Defaults to the deployed
        top-chord span 2 * L3 of the free-standing unit.

    Returns
    -------
    UnitGeometry
    """
    if unit_height_m <= 0.0:
        raise ValueError(f"unit height must be positive, got {unit_height_m}")
    if not (0.0 < stowed_angle_deg < deployed_angle_deg < 180.0):
        raise ValueError(
            "angles must satisfy 0 < stowed < deployed < 180 degrees, got "
            f"stowed={stowed_angle_deg}, deployed={deployed_angle_deg}"
        )
    half = math.radians(deployed_angle_deg) / 2.0
    # half == pi/2 would need tan/cos of 90 deg; excluded by the check above.
    l3 = (unit_height_m / 2.0) * math.tan(half)
    l1 = unit_height_m / math.cos(half)
    l7 = l1 / 2.0
    l11 = l7 / 2.0
    if stretched_length_m is None:
        stretched_length_m = 2.0 * l3
    lengths = (l1, l1, l3, l3, l3, l3, l7, l7, l7, l7, l11, l11, l11, l11)
    return UnitGeometry(
        lengths=lengths,
        deployed_angle_deg=deployed_angle_deg,
        stowed_angle_deg=stowed_angle_deg,
        deployed_height=unit_height_m,
        stretched_length=stretched_length_m,
    )


def antenna_design(
    aperture_m: float,
    unit_count: int,
    with_links: bool = True,
    deployed_angle_deg: float = DEPLOYED_ANGLE_DEG,
    stowed_angle_deg: float = STOWED_ANGLE_DEG,
) -> AntennaDesign:
    """Build the full ring design for a given aperture and unit count.

    The unit height scales with the chord so that all units of the family
    remain geometrically similar to the 25 m / 12-unit baseline.
    """
    chord = stretched_length(aperture_m, unit_count)
    baseline_chord = stretched_length(BASELINE_APERTURE_M, BASELINE_UNIT_COUNT)
    height = SYNTHESIS_UNIT_HEIGHT_M * chord / baseline_chord
    unit = synthesize_unit(
        height,
        deployed_angle_deg=deployed_angle_deg,
        stowed_angle_deg=stowed_angle_deg,
        stretched_length_m=chord,
    )
    return AntennaDesign(
        aperture_m=aperture_m,
        unit_count=unit_count,
        with_links=with_links,
        unit=unit,
    )


def ring_closure_residual(design: AntennaDesign) -> float:
    """Distance by which N unit chords fail to close the ring polygon.

    Walking the N chords of length ``unit.stretched_length``, each rotated
    by the exterior angle 2*pi/N, must return to the start point.  The
    residual is zero (to round-off) for a consistent design.
    """
    n = design.unit_count
    chord = design.unit.stretched_length
    x = y = 0.0
    heading = 0.0
    for _ in range(n):
        x += chord * math.cos(heading)
        y += chord * math.sin(heading)
        heading += 2.0 * math.pi / n
    return math.hypot(x, y)


def polygon_prism_volume(n_sides: int, circumradius_m: float, height_m: float) -> float:
    """Volume of a prism over a regular polygon: (n/2) * R^2 * sin(2 pi/n) * h."""
    if n_sides < 3:
        raise ValueError(f"polygon needs at least 3 sides, got {n_sides}")
    if circumradius_m <= 0.0 or height_m <= 0.0:
        raise ValueError("circumradius and height must be positive")
    area = 0.5 * n_sides * circumradius_m**2 * math.sin(2.0 * math.pi / n_sides)
    return area * height_m


def design_metrics(
    aperture_m: float,
    unit_count: int = BASELINE_UNIT_COUNT,
    with_links: bool = True,
) -> DesignMetrics:
    """Deployed/stowed envelope metrics and storage ratios of one ring design.

    All stowed coefficients are established at the 25 m / 12-unit baseline
    and transferred by similarity: every linear metric is proportional to
    the unit chord, every volume to its cube.  Volumes are dodecagonal
    prisms over the (scaled) baseline ring.  For unit counts other than 12
    the same coefficients are reused and the row is flagged
    ``extrapolated``; the deployed diameter always reports the requested
    aperture.
    """
    if aperture_m <= 0.0:
        raise ValueError(f"aperture must be positive, got {aperture_m}")
    if unit_count < 3:
        raise ValueError(f"unit count must be at least 3, got {unit_count}")

    chord = stretched_length(aperture_m, unit_count)
    baseline_chord = stretched_length(BASELINE_APERTURE_M, BASELINE_UNIT_COUNT)
    scale = chord / baseline_chord

    deployed_height = METRICS_DEPLOYED_HEIGHT_M * scale
    stowed_height = (
        METRICS_STOWED_HEIGHT_WITH_LINKS_M
        if with_links
        else METRICS_STOWED_HEIGHT_WITHOUT_LINKS_M
    ) * scale
    stowed_diameter = METRICS_STOWED_DIAMETER_M * scale

    deployed_volume = polygon_prism_volume(
        BASELINE_UNIT_COUNT, scale * BASELINE_APERTURE_M / 2.0, deployed_height
    )
    stowed_volume = polygon_prism_volume(
        BASELINE_UNIT_COUNT, stowed_diameter / 2.0, stowed_height
    )

    return DesignMetrics(
        aperture_m=aperture_m,
        unit_count=unit_count,
        with_links=with_links,
        stretched_length=chord,
        deployed_height=deployed_height,
        stowed_height=stowed_height,
        deployed_diameter=aperture_m,
        stowed_diameter=stowed_diameter,
        deployed_volume=deployed_volume,
        stowed_volume=stowed_volume,
        sr_diameter=aperture_m / stowed_diameter,
        sr_height=deployed_height / stowed_height,
        sr_volume=deployed_volume / stowed_volume,
        extrapolated=unit_count != BASELINE_UNIT_COUNT,
    )


def table_row_set(
    apertures_m: list[float],
    unit_count: int = BASELINE_UNIT_COUNT,
    with_links: bool = True,
) -> list[DesignMetrics]:
    """design_metrics for a batch of apertures, preserving order."""
    return [design_metrics(a, unit_count, with_links) for a in apertures_m]


METRICS_CSV_HEADER = (
    "Aperture",
    "Stretched Length",
    "Deployed Height",
    "Stowed Height",
    "Deployed Diameter",
    "Stowed Diameter",
    "Deployed Volume",
    "Stowed Volume",
    "Storage Ratio (Diameter)",
    "Storage Ratio (Height)",
    "Storage Ratio (Volume)",
)


def metrics_csv(rows: list[DesignMetrics], precision: int = 6) -> str:
    """Render metric rows as CSV text with the fixed table header."""
    lines = [",".join(METRICS_CSV_HEADER)]
    for r in rows:
        values = (
            r.aperture_m,
            r.stretched_length,
            r.deployed_height,
            r.stowed_height,
            r.deployed_diameter,
            r.stowed_diameter,
            r.deployed_volume,
            r.stowed_volume,
            r.sr_diameter,
            r.sr_height,
            r.sr_volume,
        )
        lines.append(",".join(f"{v:.{precision}g}" for v in values))
    return "\n".join(lines) + "\n"


def scaled_unit(unit: UnitGeometry, factor: float) -> UnitGeometry:
    """Uniformly scale every length of a unit by a positive factor."""
    if factor <= 0.0:
        raise ValueError(f"scale factor must be positive, got {factor}")
    return replace(
        unit,
        lengths=tuple(L * factor for L in unit.lengths),
        deployed_height=unit.deployed_height * factor,
        stretched_length=unit.stretched_length * factor,
    )
