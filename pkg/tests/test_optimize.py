import math

import numpy as np
import pytest

from scissortruss import geometry as geo
from scissortruss import kinematics as kin
from scissortruss import optimize as opt

BASELINE = geo.antenna_design(25, 12)


def sphere(x):
    return float(np.sum(np.asarray(x) ** 2))


def rosenbrock(x):
    return float((1.0 - x[0]) ** 2 + 100.0 * (x[1] - x[0] ** 2) ** 2)


class TestNnForward:
    def test_zero_output_weights(self):
        h = 4
        block = np.zeros(3 * h + 1)
        block[:h] = 1.7  # phi irrelevant when eta = 0
        assert opt.nn_forward(block, 0.3, h) == 0.0

    def test_single_neuron_sigmoid_midpoint(self):
        # phi=0, b=0, eta=2, out-bias=0 -> 2 * sigmoid(0) = 1
        block = np.array([0.0, 2.0, 0.0, 0.0])
        assert opt.nn_forward(block, 5.0, 1) == pytest.approx(1.0, rel=1e-15)

    def test_deterministic_reevaluation(self):
        rng = np.random.default_rng(11)
        block = rng.normal(size=31)
        t = np.linspace(0, 1, 50)
        first = opt.nn_forward(block, t, 10)
        second = opt.nn_forward(block, t, 10)
        assert np.array_equal(first, second)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            opt.nn_forward(np.zeros(30), 0.1, 10)

    def test_vector_and_scalar_agree(self):
        block = np.arange(7, dtype=float) / 10.0
        vec = opt.nn_forward(block, np.array([0.25]), 2)
        scal = opt.nn_forward(block, 0.25, 2)
        assert vec[0] == pytest.approx(scal, rel=1e-15)


class TestSurrogateGradient:
    def test_matches_central_differences(self):
        rng = np.random.default_rng(5)
        t = np.linspace(0, 1, 40)
        y = np.sin(2 * t)
        for _ in range(3):
            x = rng.normal(size=13)
            dev = opt.check_gradient(
                lambda v: opt.surrogate_mse(v, t, y, 4),
                lambda v: opt.surrogate_mse_gradient(v, t, y, 4),
                x,
            )
            assert dev < 1e-6


class TestGaOptimize:
    def test_sphere_beats_random_search(self):
        cfg = opt.GAConfig(population_size=50, generations=200, seed=7)
        res = opt.ga_optimize(sphere, 5, cfg, init_bounds=(-5, 5))
        assert res.best_fitness <= 1e-2
        rng = np.random.default_rng(7)
        random_best = min(
            sphere(rng.uniform(-5, 5, 5)) for _ in range(res.function_evals)
        )
        assert res.best_fitness < random_best

    def test_already_satisfied_target_returns_generation_zero(self):
        cfg = opt.GAConfig(seed=1, fitness_target=math.inf)
        res = opt.ga_optimize(sphere, 3, cfg)
        assert res.generations_run == 0
        assert len(res.trace) == 1
        assert res.termination == "target"

    def test_equal_seeds_equal_traces(self):
        cfg = opt.GAConfig(population_size=20, generations=30, seed=123)
        a = opt.ga_optimize(sphere, 4, cfg)
        b = opt.ga_optimize(sphere, 4, cfg)
        assert np.array_equal(a.trace, b.trace)
        assert np.array_equal(a.best_x, b.best_x)
        assert a.function_evals == b.function_evals

    def test_elitism_makes_trace_monotone(self):
        for seed in (0, 1, 2, 3):
            cfg = opt.GAConfig(population_size=12, generations=40, seed=seed)
            res = opt.ga_optimize(rosenbrock, 2, cfg, init_bounds=(-2, 2))
            assert np.all(np.diff(res.trace) <= 0.0)

    def test_nonfinite_fitness_rejected(self):
        def spiky(x):
            return math.nan if x[0] > 0 else sphere(x)

        cfg = opt.GAConfig(population_size=10, generations=10, seed=2)
        res = opt.ga_optimize(spiky, 2, cfg)
        assert math.isfinite(res.best_fitness)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            opt.GAConfig(population_size=1)
        with pytest.raises(ValueError):
            opt.GAConfig(mutation_rate=1.5)
        with pytest.raises(ValueError):
            opt.GAConfig(elitism=30, population_size=30)


class TestSqpRefine:
    def test_quadratic_minimum(self):
        res = opt.sqp_refine(lambda x: float((x[0] - 3.0) ** 2), [0.0])
        assert res.x[0] == pytest.approx(3.0, abs=1e-6)
        assert res.converged

    def test_active_inequality_constraint(self):
        res = opt.sqp_refine(
            lambda x: float(x[0] ** 2), [5.0], constraints=[lambda x: x[0] - 1.0]
        )
        assert res.x[0] == pytest.approx(1.0, abs=1e-6)
        assert res.max_violation <= 1e-9

    def test_rosenbrock_from_classic_start(self):
        res = opt.sqp_refine(rosenbrock, [-1.2, 1.0])
        assert res.fun <= 1e-8
        assert np.allclose(res.x, [1.0, 1.0], atol=1e-3)

    def test_never_worse_than_start(self):
        # a start already at the optimum cannot be worsened
        res = opt.sqp_refine(rosenbrock, [1.0, 1.0])
        assert res.fun <= rosenbrock([1.0, 1.0]) + 1e-15

    def test_budget_exhaustion_flag(self):
        cfg = opt.RefineConfig(max_function_evals=5)
        res = opt.sqp_refine(rosenbrock, [-1.2, 1.0], config=cfg)
        assert not res.converged
        assert math.isfinite(res.fun)

    def test_gradient_check_helper(self):
        x = np.array([0.3, -1.2])
        dev = opt.check_gradient(
            rosenbrock,
            lambda v: np.array(
                [
                    -2.0 * (1 - v[0]) - 400.0 * v[0] * (v[1] - v[0] ** 2),
                    200.0 * (v[1] - v[0] ** 2),
                ]
            ),
            x,
        )
        assert dev < 1e-6

    def test_config_validation(self):
        with pytest.raises(ValueError):
            opt.RefineConfig(max_function_evals=0)
        with pytest.raises(ValueError):
            opt.RefineConfig(tol_fun=0.0)


class TestFitKinematicsSurrogate:
    def test_realizable_target_recovered(self):
        arch = opt.SurrogateArchitecture(hidden_units=3)
        rng = np.random.default_rng(42)
        t = np.linspace(0.0, 1.0, 60)
        curves = {
            key: opt.nn_forward(rng.normal(0.0, 1.0, arch.block_size), t, 3)
            for key in kin.CURVE_KEYS
        }
        fit = opt.fit_kinematics_surrogate(
            opt.KinematicDataset(t=t, curves=curves),
            architecture=arch,
            runs=6,
            seed=3,
        )
        assert max(fit.block_mse.values()) <= 1e-10

    def test_constant_zero_curves(self):
        t = np.linspace(0.0, 1.0, 30)
        dataset = opt.KinematicDataset(
            t=t, curves={key: np.zeros_like(t) for key in kin.CURVE_KEYS}
        )
        fit = opt.fit_kinematics_surrogate(
            dataset, architecture=opt.SurrogateArchitecture(3), runs=2, seed=1
        )
        assert max(fit.block_mse.values()) <= 1e-8

    def test_refined_never_worse_than_ga_phase(self):
        t = np.linspace(0.0, 1.0, 40)
        dataset = opt.KinematicDataset(
            t=t,
            curves={key: np.cos((i + 1) * t) for i, key in enumerate(kin.CURVE_KEYS)},
        )
        fit = opt.fit_kinematics_surrogate(
            dataset, architecture=opt.SurrogateArchitecture(4), runs=3, seed=9
        )
        for rec in fit.runs:
            assert rec.refined_fitness <= rec.ga_fitness + 1e-15

    def test_underdetermined_warns_but_fits(self):
        t = np.linspace(0.0, 1.0, 5)
        dataset = opt.KinematicDataset(
            t=t, curves={key: t**2 for key in kin.CURVE_KEYS}
        )
        with pytest.warns(UserWarning, match="underdetermine"):
            fit = opt.fit_kinematics_surrogate(
                dataset, architecture=opt.SurrogateArchitecture(10), runs=1, seed=0
            )
        assert set(fit.block_mse) == set(kin.CURVE_KEYS)

    def test_deterministic_for_fixed_seed(self):
        t = np.linspace(0.0, 1.0, 25)
        dataset = opt.KinematicDataset(
            t=t, curves={key: np.tanh(t * 2.0) for key in kin.CURVE_KEYS}
        )
        kwargs = dict(architecture=opt.SurrogateArchitecture(3), runs=2, seed=77)
        a = opt.fit_kinematics_surrogate(dataset, **kwargs)
        b = opt.fit_kinematics_surrogate(dataset, **kwargs)
        assert a.block_mse == b.block_mse
        for key in kin.CURVE_KEYS:
            assert np.array_equal(a.chromosome.blocks[key], b.chromosome.blocks[key])

    def test_chromosome_validation(self):
        arch = opt.SurrogateArchitecture(2)
        with pytest.raises(ValueError):
            opt.Chromosome(blocks={k: np.zeros(3) for k in kin.CURVE_KEYS}, architecture=arch)
        with pytest.raises(ValueError):
            opt.Chromosome(
                blocks={k: np.full(arch.block_size, np.nan) for k in kin.CURVE_KEYS},
                architecture=arch,
            )


class TestGeometryOptimization:
    WINDOW = (0.018, 0.03)

    def problem(self, **kwargs):
        defaults = dict(
            baseline=BASELINE, radius_min=10.0, frequency_window=self.WINDOW
        )
        defaults.update(kwargs)
        return opt.GeometryProblem(**defaults)

    def test_constraints_hold_at_solution(self):
        prob = self.problem()
        res = opt.optimize_geometry(prob)
        assert res.feasible and not res.flat_objective
        assert res.radius_m >= prob.radius_min
        assert self.WINDOW[0] <= res.frequency_hz <= self.WINDOW[1]
        assert res.constraint_report["window_lo_margin_hz"] >= 0.0
        assert res.constraint_report["window_hi_margin_hz"] >= 0.0

    def test_trace_monotone_non_increasing(self):
        res = opt.optimize_geometry(self.problem())
        assert len(res.trace) >= 1
        assert all(b <= a + 1e-15 for a, b in zip(res.trace, res.trace[1:]))

    def test_local_optimality_probe(self):
        prob = self.problem()
        res = opt.optimize_geometry(prob)
        x = np.array([res.radius_m] + [res.scales[k] for k in opt.SCALE_CLASSES])
        gain = opt.local_optimality_probe(prob, x, rel=0.01)
        assert gain <= max(opt.RefineConfig().tol_fun, 1e-9)

    def test_infeasible_window_reported(self):
        prob = self.problem(radius_min=24.0, frequency_window=(0.5, 0.6))
        res = opt.optimize_geometry(prob)
        assert not res.feasible
        assert res.design is None
        assert "no radius" in res.message
        assert res.trace == []

    def test_flat_objective_flagged_without_mass_model(self):
        prob = self.problem(frequency_window=(0.1, 0.2), linear_density=None)
        res = opt.optimize_geometry(prob)
        assert res.flat_objective
        assert res.trace == [res.frequency_hz]
        assert "nothing to optimize" in res.message
        # scale-invariant closed-form value at unit mass
        assert res.frequency_hz == pytest.approx(0.1414, abs=2e-4)

    def test_reference_pair_relative_difference(self):
        res = opt.optimize_geometry(self.problem())
        ref = res.reference_comparison
        assert ref["reference_predicted_hz"] == 0.1107
        assert ref["reference_simulated_hz"] == 0.10859
        assert round(ref["reference_relative_difference_pct"], 2) == 1.94

    def test_relative_difference_helper(self):
        assert opt.relative_difference(0.1107, 0.10859) == pytest.approx(
            0.0194309, abs=1e-6
        )
        with pytest.raises(ValueError):
            opt.relative_difference(1.0, 0.0)

    def test_problem_validation(self):
        with pytest.raises(ValueError):
            self.problem(radius_min=-1.0)
        with pytest.raises(ValueError):
            self.problem(frequency_window=(0.2, 0.1))
        with pytest.raises(ValueError):
            self.problem(scale_bounds=(1.5, 2.0))
