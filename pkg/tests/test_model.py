from __future__ import annotations

import math
import random
from dataclasses import replace

import pytest

from scalesim import (
    ModelParams,
    ResourceVector,
    cluster_cost,
    cluster_throughput,
    coord_latency,
    coordination_overhead,
    is_feasible,
    node_latency,
    node_throughput,
    objective,
    parallelism_factor,
    total_latency,
)

UNIT = ResourceVector(1, 1, 1, 1)


def params(**overrides) -> ModelParams:
    return ModelParams(**overrides)


class TestResourceVector:
    def test_rejects_nonpositive_components(self):
        for bad in ({"cpu": 0}, {"ram": -1}, {"bandwidth": 0.0}, {"iops": -0.5}):
            with pytest.raises(ValueError):
                ResourceVector(**{"cpu": 1, "ram": 1, "bandwidth": 1, "iops": 1, **bad})


class TestModelParams:
    def test_theta_must_be_interior(self):
        for bad in (0.0, 1.0, -0.2, 1.5):
            with pytest.raises(ValueError):
                params(theta=bad)

    def test_negative_constants_rejected(self):
        with pytest.raises(ValueError):
            params(alpha=-1)
        with pytest.raises(ValueError):
            params(omega=-0.1)

    def test_some_objective_weight_required(self):
        with pytest.raises(ValueError):
            params(w_latency=0, w_cost=0, w_overhead=0)


class TestNodeLatency:
    def test_unit_case(self):
        p = params(alpha=1, beta=1, gamma=1, delta=1)
        assert node_latency(p, UNIT) == 4.0

    def test_weighted_case(self):
        p = params(alpha=2, beta=4, gamma=1, delta=1)
        assert node_latency(p, ResourceVector(2, 4, 1, 1)) == 4.0

    def test_zero_sensitivities(self):
        p = params(w_cost=1, w_latency=0)
        assert node_latency(p, ResourceVector(3, 7, 2, 9)) == 0.0


class TestCoordLatency:
    def test_single_node_has_only_power_term(self):
        p = params(eta=7, mu=0.5, theta=0.5)
        assert coord_latency(p, 1) == 0.5

    def test_four_nodes(self):
        p = params(eta=1, mu=0.5, theta=0.5)
        # ln 4 + 0.5 * sqrt(4), evaluated directly
        assert coord_latency(p, 4) == pytest.approx(2.386294361119891, rel=1e-14)

    def test_strictly_increasing(self):
        p = params(eta=1.5, mu=0.7, theta=0.4)
        values = [coord_latency(p, h) for h in range(1, 13)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_rejects_h_below_one(self):
        with pytest.raises(ValueError):
            coord_latency(params(), 0)


class TestTotalLatency:
    def test_combined_unit_case(self):
        p = params(alpha=1, beta=1, gamma=1, delta=1, eta=7, mu=0.5, theta=0.5)
        assert total_latency(p, 1, UNIT) == 4.5

    def test_forward_difference_signs(self):
        p = params(alpha=2, beta=3, gamma=1, delta=1, eta=1, mu=1, theta=0.5)
        v = ResourceVector(2, 2, 2, 2)
        assert total_latency(p, 5, v) > total_latency(p, 4, v)
        for bump in ("cpu", "ram", "bandwidth", "iops"):
            bigger = replace(v, **{bump: 3})
            assert total_latency(p, 4, bigger) < total_latency(p, 4, v)

    def test_degenerate_zero(self):
        p = params(mu=0, w_cost=1, w_latency=0)
        assert total_latency(p, 1, UNIT) == 0.0


class TestParallelismFactor:
    def test_single_node_is_one(self):
        assert parallelism_factor(params(omega=3.7), 1) == 1.0

    def test_four_nodes_unit_omega(self):
        # 1 / (1 + ln 4)
        assert parallelism_factor(params(omega=1), 4) == pytest.approx(
            0.41905978419640516, rel=1e-14)

    def test_no_decay_without_omega(self):
        assert parallelism_factor(params(omega=0), 9) == 1.0

    def test_nonincreasing(self):
        p = params(omega=0.6)
        values = [parallelism_factor(p, h) for h in range(1, 13)]
        assert all(b <= a for a, b in zip(values, values[1:]))


class TestNodeThroughput:
    def test_binding_component(self):
        assert node_throughput(params(kappa=100), ResourceVector(2, 4, 3, 5)) == 200

    def test_zero_kappa(self):
        assert node_throughput(params(kappa=0), ResourceVector(2, 4, 3, 5)) == 0

    def test_permutation_invariance(self):
        p = params(kappa=7)
        values = {node_throughput(p, ResourceVector(*perm))
                  for perm in [(2, 4, 3, 5), (5, 3, 4, 2), (3, 2, 5, 4)]}
        assert values == {14}


class TestClusterThroughput:
    def test_single_node(self):
        p = params(kappa=100, omega=1)
        assert cluster_throughput(p, 1, ResourceVector(2, 4, 3, 5)) == 200

    def test_four_nodes(self):
        p = params(kappa=100, omega=1)
        # 4 * 200 / (1 + ln 4)
        assert cluster_throughput(p, 4, ResourceVector(2, 4, 3, 5)) == pytest.approx(
            335.24782735712415, rel=1e-14)

    def test_nondecreasing_in_h_for_moderate_decay(self, space):
        v = space.catalog[0].resources
        for omega in (0.0, 0.25, 0.5, 0.75, 1.0):
            p = params(kappa=100, omega=omega)
            series = [cluster_throughput(p, h, v) for h in range(1, space.h_max + 1)]
            assert all(b >= a for a, b in zip(series, series[1:]))


class TestCoordinationOverhead:
    def make(self, **overrides):
        defaults = dict(eta=1, mu=0.5, theta=0.5, omega=1, kappa=100, rho=1, lambda_w=100)
        defaults.update(overrides)
        return params(**defaults)

    def test_zero_write_rate(self):
        assert coordination_overhead(self.make(lambda_w=0), 4, ResourceVector(2, 4, 3, 5)) == 0

    def test_derived_case(self):
        # (ln 4 + 0.5*2) * 100 / (4 * 200 / (1 + ln 4))
        value = coordination_overhead(self.make(), 4, ResourceVector(2, 4, 3, 5))
        assert value == pytest.approx(0.7118000972390734, rel=1e-14)

    def test_zero_rho(self):
        assert coordination_overhead(self.make(rho=0), 4, ResourceVector(2, 4, 3, 5)) == 0

    def test_zero_throughput_rejected(self):
        with pytest.raises(ValueError):
            coordination_overhead(self.make(kappa=0), 4, ResourceVector(2, 4, 3, 5))

    def test_linear_in_write_rate(self):
        v = ResourceVector(2, 4, 3, 5)
        single = coordination_overhead(self.make(lambda_w=137.5), 6, v)
        double = coordination_overhead(self.make(lambda_w=275.0), 6, v)
        assert double == pytest.approx(2 * single, rel=1e-12)


class TestClusterCost:
    def test_linear(self):
        assert cluster_cost(10, 3) == 30

    def test_free_tier(self):
        assert cluster_cost(0, 1) == 0

    def test_doubling(self):
        for h in (1, 2, 5):
            assert cluster_cost(0.22, 2 * h) == pytest.approx(2 * cluster_cost(0.22, h),
                                                              rel=1e-12)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            cluster_cost(1.0, 0)
        with pytest.raises(ValueError):
            cluster_cost(-0.1, 2)


class TestObjective:
    def test_latency_projection(self):
        p = params(alpha=2, beta=4, gamma=1, delta=1, eta=1, mu=0.5, theta=0.5,
                   w_latency=1, w_cost=0, w_overhead=0)
        v = ResourceVector(2, 4, 1, 1)
        assert objective(p, 4, v, tier_cost=10) == total_latency(p, 4, v)

    def test_sum_of_independent_addends(self):
        # Each addend recomputed inline on the same inputs.
        p = params(alpha=2, beta=4, gamma=1, delta=1, eta=1, mu=0.5, theta=0.5,
                   omega=1, kappa=100, rho=1, lambda_w=100,
                   w_latency=1, w_cost=1, w_overhead=1)
        v = ResourceVector(2, 4, 1, 1)
        latency = (2 / 2 + 4 / 4 + 1 / 1 + 1 / 1) + (math.log(4) + 0.5 * 2)
        cost = 4 * 10
        overhead = (math.log(4) + 0.5 * 2) * 100 / (4 * 100 * (1 / (1 + math.log(4))))
        assert objective(p, 4, v, tier_cost=10) == pytest.approx(
            latency + cost + overhead, rel=1e-12)
        assert objective(p, 4, v, tier_cost=10) == pytest.approx(47.80989455559804,
                                                                 rel=1e-12)


class TestFeasibility:
    def test_unbounded_sla_always_feasible(self):
        p = params(alpha=5, eta=2, mu=1, theta=0.5, kappa=10,
                   l_max=math.inf, t_min=0)
        assert is_feasible(p, 12, UNIT)

    def test_vacuous_sla(self, space):
        big = space.catalog[-1].resources
        p = params(alpha=1, beta=1, gamma=1, delta=1, mu=1, theta=0.5, kappa=100,
                   l_max=1e-6)
        # Even one node of the largest tier exceeds the latency ceiling.
        assert not is_feasible(p, 1, big)
        for h in range(1, space.h_max + 1):
            for tier in space.catalog:
                assert not is_feasible(p, h, tier.resources)

    def test_boundary_is_feasible(self):
        p = params(alpha=3, eta=1, mu=1, theta=0.5, kappa=50)
        boundary = total_latency(p, 4, UNIT)
        exact = replace(p, l_max=boundary)
        assert is_feasible(exact, 4, UNIT)
        below = replace(p, l_max=boundary * (1 - 1e-12))
        assert not is_feasible(below, 4, UNIT)
        floor = cluster_throughput(p, 4, UNIT)
        assert is_feasible(replace(p, t_min=floor), 4, UNIT)


class TestPurity:
    def test_bit_identical_reevaluation(self):
        rng = random.Random(7)
        for _ in range(50):
            p = params(alpha=rng.uniform(0, 10), beta=rng.uniform(0, 10),
                       gamma=rng.uniform(0, 10), delta=rng.uniform(0, 10),
                       eta=rng.uniform(0, 5), mu=rng.uniform(0, 3),
                       theta=rng.uniform(0.1, 0.9), kappa=rng.uniform(1, 200),
                       omega=rng.uniform(0, 1), rho=rng.uniform(0, 2),
                       lambda_w=rng.uniform(0, 1000),
                       w_latency=1, w_cost=rng.uniform(0, 1), w_overhead=rng.uniform(0, 1))
            v = ResourceVector(rng.uniform(0.5, 16), rng.uniform(0.5, 32),
                               rng.uniform(0.5, 8), rng.uniform(0.5, 24))
            h = rng.randint(1, 12)
            assert objective(p, h, v, 0.3) == objective(p, h, v, 0.3)
            assert cluster_throughput(p, h, v) == cluster_throughput(p, h, v)
