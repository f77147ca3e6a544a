"""Shared randomized-input generation for property and acceptance tests."""

from __future__ import annotations

import math
import random

from scalesim import Configuration, ModelParams, PenaltyParams

# Sane parameter ranges for randomized runs: latency sensitivities up to
# tens of ms per unit resource, coordination constants a few ms, capacity
# tens-to-hundreds of ops/s per resource unit, SLA bounds wide enough that
# feasible regions of all shapes (empty, partial, full) occur.


def random_model_params(rng: random.Random) -> ModelParams:
    return ModelParams(
        alpha=rng.uniform(0, 20),
        beta=rng.uniform(0, 20),
        gamma=rng.uniform(0, 20),
        delta=rng.uniform(0, 20),
        eta=rng.uniform(0, 5),
        mu=rng.uniform(0, 3),
        theta=rng.uniform(0.05, 0.95),
        kappa=rng.uniform(10, 500),
        omega=rng.uniform(0, 1),
        rho=rng.uniform(0, 5),
        lambda_w=rng.uniform(0, 5000),
        w_latency=rng.uniform(0.05, 2.0),
        w_cost=rng.uniform(0, 2.0),
        w_overhead=rng.uniform(0, 2.0),
        l_max=math.inf if rng.random() < 0.5 else rng.uniform(5, 100),
        t_min=rng.uniform(0, 2000),
    )


def random_penalty_params(rng: random.Random) -> PenaltyParams:
    return PenaltyParams(
        lambda1=rng.uniform(0, 2),
        lambda2=rng.uniform(0, 2),
        lambda3=rng.uniform(0, 0.01),
        w_stab=rng.uniform(0, 10),
        epsilon=10 ** rng.uniform(-9, -3),
        total_shards=rng.randint(64, 4096),
    )


def random_start(rng: random.Random, space) -> Configuration:
    return Configuration(rng.randint(1, space.h_max),
                         rng.randint(0, len(space.catalog) - 1))


def random_scenario(rng: random.Random, space):
    return random_model_params(rng), random_penalty_params(rng), random_start(rng, space)
