"""Material screening and selection for low-orbit structural service.

Pipeline: a thermal survivability filter (default window -100 C to
+150 C) removes materials that cannot take the orbital temperature
swings; mechanical features (tensile strength, Young's modulus, density)
are min-max normalized; a linear max-margin classifier trained on the
thermal labels is reported as an advisory cross-check; and a scoring
function that rewards strength and stiffness while penalizing density
ranks the surviving candidates.

The bundled database mirrors the reference property table.  Its rows
carry no minimum-temperature data, so the filter passes such materials
on the cold side and flags them ``min-temp unverified`` instead of
emptying the candidate set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "MaterialRecord",
    "ClassifierModel",
    "MaterialScore",
    "NormalizedFeatures",
    "SelectionResult",
    "FEATURE_NAMES",
    "thermal_filter",
    "normalize_features",
    "train_classifier",
    "score_material",
    "select_material",
]

FEATURE_NAMES = ("tensile_strength", "youngs_modulus", "density")

DEFAULT_MAX_TEMP_REQUIREMENT_C = 150.0
DEFAULT_MIN_TEMP_REQUIREMENT_C = -100.0


@dataclass(frozen=True)
class MaterialRecord:
    """One row of the material property database.

    Strengths in MPa, modulus in GPa, density in g/cm^3, CTE in
    um/(m C), temperatures in C.  ``min_temperature_c`` is optional; the
    reference table does not provide it.
    """

    name: str
    youngs_modulus_gpa: float
    density_g_cm3: float
    poissons_ratio: float
    cte_um_m_c: float
    yield_strength_mpa: float
    tensile_strength_mpa: float
    ultimate_strength_mpa: float
    elastic_limit_mpa: float
    breaking_strength_mpa: float
    failure_mode: str
    max_temperature_c: float
    min_temperature_c: float | None = None

    def __post_init__(self):
        positive = (
            self.youngs_modulus_gpa,
            self.density_g_cm3,
            self.poissons_ratio,
            self.cte_um_m_c,
            self.yield_strength_mpa,
            self.tensile_strength_mpa,
            self.ultimate_strength_mpa,
            self.elastic_limit_mpa,
            self.breaking_strength_mpa,
            self.max_temperature_c,
        )
        if any(not (v > 0.0) for v in positive):
            raise ValueError(f"{self.name}: all numeric properties must be positive")
        if self.failure_mode not in ("ductile", "brittle"):
            raise ValueError(
                f"{self.name}: failure mode must be 'ductile' or 'brittle', "
                f"got {self.failure_mode!r}"
            )
        if not (
            self.yield_strength_mpa
            <= self.tensile_strength_mpa
            <= self.ultimate_strength_mpa
        ):
            raise ValueError(
                f"{self.name}: strengths must be ordered yield <= tensile <= ultimate"
            )


@dataclass(frozen=True)
class ClassifierModel:
    """Linear max-margin separator over the normalized features."""

    weights: tuple[float, ...]
    bias: float
    training_accuracy: float
    margin: float
    feature_names: tuple[str, ...] = FEATURE_NAMES

    def __post_init__(self):
        if any(not np.isfinite(w) for w in self.weights) or not np.isfinite(self.bias):
            raise ValueError("classifier weights must be finite")
        if not (0.0 <= self.training_accuracy <= 1.0):
            raise ValueError("training accuracy must lie in [0, 1]")

    def decision(self, features: np.ndarray) -> np.ndarray:
        return features @ np.asarray(self.weights) + self.bias

    def predict(self, features: np.ndarray) -> np.ndarray:
        """True for rows classified as suitable."""
        return self.decision(features) >= 0.0


@dataclass(frozen=True)
class MaterialScore:
    """Score of one material with its per-feature contributions."""

    name: str
    score: float
    contributions: dict[str, float]

    def __post_init__(self):
        if not np.isfinite(self.score):
            raise ValueError(f"{self.name}: score must be finite")
        if abs(sum(self.contributions.values()) - self.score) > 1e-9:
            raise ValueError(f"{self.name}: contributions must sum to the score")


@dataclass(frozen=True)
class NormalizedFeatures:
    """Min-max normalized feature matrix with its scaling record."""

    names: tuple[str, ...]
    matrix: np.ndarray  # shape (n_materials, 3), values in [0, 1]
    mins: np.ndarray
    maxs: np.ndarray

    def row(self, name: str) -> np.ndarray:
        try:
            return self.matrix[self.names.index(name)]
        except ValueError:
            raise KeyError(f"material {name!r} not in the normalized set") from None


def _raw_features(db: list[MaterialRecord]) -> np.ndarray:
    return np.array(
        [
            (m.tensile_strength_mpa, m.youngs_modulus_gpa, m.density_g_cm3)
            for m in db
        ]
    )


def thermal_filter(
    db: list[MaterialRecord],
    t_max_req_c: float = DEFAULT_MAX_TEMP_REQUIREMENT_C,
    t_min_req_c: float = DEFAULT_MIN_TEMP_REQUIREMENT_C,
) -> tuple[list[MaterialRecord], dict[str, str]]:
    """Keep materials that survive the required temperature window.

    A material passes when its maximum service temperature reaches
    ``t_max_req_c`` and its minimum (when known) reaches down to
    ``t_min_req_c``.  Materials without minimum-temperature data pass the
    cold check but are flagged.

    Returns ``(subset, flags)`` where flags maps material name to a note
    ("min-temp unverified" for passing rows, the exclusion reason for
    rejected ones).
    """
    subset: list[MaterialRecord] = []
    flags: dict[str, str] = {}
    for m in db:
        if m.max_temperature_c < t_max_req_c:
            flags[m.name] = (
                f"excluded: max temperature {m.max_temperature_c:g} C below "
                f"required {t_max_req_c:g} C"
            )
            continue
        if m.min_temperature_c is None:
            flags[m.name] = "min-temp unverified"
        elif m.min_temperature_c > t_min_req_c:
            flags[m.name] = (
                f"excluded: min temperature {m.min_temperature_c:g} C above "
                f"required {t_min_req_c:g} C"
            )
            continue
        subset.append(m)
    return subset, flags


def normalize_features(db: list[MaterialRecord]) -> NormalizedFeatures:
    """Min-max normalize (tensile, modulus, density) over the given rows."""
    if len(db) < 2:
        raise ValueError("normalization needs at least 2 materials")
    raw = _raw_features(db)
    mins = raw.min(axis=0)
    maxs = raw.max(axis=0)
    span = maxs - mins
    degenerate = [FEATURE_NAMES[i] for i in range(len(span)) if span[i] == 0.0]
    if degenerate:
        raise ValueError(f"degenerate feature range for {', '.join(degenerate)}")
    return NormalizedFeatures(
        names=tuple(m.name for m in db),
        matrix=(raw - mins) / span,
        mins=mins,
        maxs=maxs,
    )


def train_classifier(features: np.ndarray, labels) -> ClassifierModel:
    """Fit a linear max-margin separator on (normalized) features.

    ``labels`` are truthy for suitable rows.  Both classes must be
    present.  On inseparable data the soft margin applies and the
    training accuracy reported drops below 1.
    """
    from sklearn.svm import SVC

    X = np.asarray(features, dtype=float)
    y = np.asarray([1 if bool(v) else 0 for v in labels])
    if len(set(y.tolist())) < 2:
        raise ValueError("classifier training needs both classes present")
    clf = SVC(kernel="linear", C=1e6)
    clf.fit(X, y)
    w = clf.coef_[0]
    margin = 2.0 / float(np.linalg.norm(w))
    accuracy = float(np.mean(clf.predict(X) == y))
    names = tuple(FEATURE_NAMES[: X.shape[1]]) if X.shape[1] <= 3 else tuple(
        f"f{i}" for i in range(X.shape[1])
    )
    return ClassifierModel(
        weights=tuple(float(v) for v in w),
        bias=float(clf.intercept_[0]),
        training_accuracy=accuracy,
        margin=margin,
        feature_names=names,
    )


def score_material(
    name: str,
    normalized: NormalizedFeatures,
    weights: tuple[float, float, float] = (1.0, 1.0, 1.0),
) -> MaterialScore:
    """Score = w1 * tensile + w2 * modulus - w3 * density (normalized values)."""
    row = normalized.row(name)
    w1, w2, w3 = weights
    contributions = {
        "tensile_strength": w1 * float(row[0]),
        "youngs_modulus": w2 * float(row[1]),
        "density": -w3 * float(row[2]),
    }
    return MaterialScore(name, sum(contributions.values()), contributions)


@dataclass
class SelectionResult:
    """Outcome of the full selection pipeline."""

    winner: MaterialRecord
    ranking: list[MaterialScore]
    classifier: ClassifierModel
    classifier_predictions: dict[str, bool]
    filter_flags: dict[str, str]
    suitable: list[str] = field(default_factory=list)


def select_material(
    db: list[MaterialRecord],
    t_max_req_c: float = DEFAULT_MAX_TEMP_REQUIREMENT_C,
    t_min_req_c: float = DEFAULT_MIN_TEMP_REQUIREMENT_C,
    weights: tuple[float, float, float] = (1.0, 1.0, 1.0),
) -> SelectionResult:
    """Run filter -> normalize -> classify (advisory) -> score -> argmax.

    The classifier is trained on the full database with the thermal
    outcomes as labels and reported alongside; it does not gate the
    selection.  Scoring normalizes over the suitable subset.  Ties break
    deterministically by name.
    """
    if not db:
        raise ValueError("material database is empty")
    subset, flags = thermal_filter(db, t_max_req_c, t_min_req_c)
    if not subset:
        raise LookupError(
            f"no material survives the thermal window "
            f"[{t_min_req_c:g} C, {t_max_req_c:g} C]"
        )

    suitable_names = {m.name for m in subset}
    classifier = None
    predictions: dict[str, bool] = {}
    if len(db) >= 2 and len(suitable_names) < len(db):
        # advisory only: a database the classifier cannot be trained on
        # (degenerate feature ranges) must not block the selection
        try:
            full_norm = normalize_features(db)
            labels = [m.name in suitable_names for m in db]
            classifier = train_classifier(full_norm.matrix, labels)
            predicted = classifier.predict(full_norm.matrix)
            predictions = {m.name: bool(p) for m, p in zip(db, predicted)}
        except ValueError:
            classifier = None

    if len(subset) == 1:
        only = subset[0]
        ranking = [MaterialScore(only.name, 0.0, dict.fromkeys(FEATURE_NAMES, 0.0))]
        return SelectionResult(
            winner=only,
            ranking=ranking,
            classifier=classifier,
            classifier_predictions=predictions,
            filter_flags=flags,
            suitable=[only.name],
        )

    normalized = normalize_features(subset)
    scores = [score_material(m.name, normalized, weights) for m in subset]
    scores.sort(key=lambda s: (-s.score, s.name))
    by_name = {m.name: m for m in subset}
    return SelectionResult(
        winner=by_name[scores[0].name],
        ranking=scores,
        classifier=classifier,
        classifier_predictions=predictions,
        filter_flags=flags,
        suitable=sorted(suitable_names),
    )
