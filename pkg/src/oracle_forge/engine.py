"""Hybrid quantum-inspired evolutionary search for circuits.

Each population member is a vector of amplitude pairs (alpha, beta) with
alpha^2 + beta^2 = 1, stored as angles theta (alpha = cos, beta = sin) so
normalization is exact.  Per generation every member is measured several
times, measured bit strings get a small classical mutation, and each
member's amplitudes rotate toward the best string found so far whenever
that best is strictly fitter than the member's own best observation.  The
best-ever solution is elitist.  Angles are clamped away from 0 and pi/2
so every bit stays reachable.

The run terminates once the best-ever circuit meets the satisfying cost
with full correctness, or after max_gen generations.  When the guiding
best stagnates for `restart_after` generations the amplitudes and
the guide are reset to the uniform superposition (the best-ever record is
kept); this catastrophe step stops the whole population from idling in an
exhausted attractor.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .codec import codon_bits, decode
from .evaluate import EvalResult, FitnessParams, GoalSpec, evaluate_circuit, is_success
from .gates import GateSet, case_count

THETA_MIN = 0.01
THETA_MAX = math.pi / 2 - 0.01

RUN_CSV_HEADER = "gen,best_fitness,best_correctness,best_cost"


@dataclass(frozen=True)
class HqeaParams:
    fitness: FitnessParams
    pop_size: int = 20
    measurements: int = 10
    max_gen: int = 100
    delta_theta: float = 0.01 * math.pi
    mutation_prob: float = 0.02
    restart_after: int = 40
    seed: int = 0

    def __post_init__(self):
        if self.pop_size < 1 or self.measurements < 1 or self.max_gen < 1:
            raise ValueError("pop_size, measurements and max_gen must be at least 1")
        if not 0 <= self.mutation_prob <= 1:
            raise ValueError("mutation_prob must be a probability")
        if self.restart_after < 1:
            raise ValueError("restart_after must be at least 1")


@dataclass
class RunResult:
    success: bool
    best_circuit: list
    best_bits: np.ndarray
    best_eval: EvalResult
    generation_found: int | None
    generations_run: int
    history: list = field(default_factory=list)  # (gen, fitness, correctness, cost)

    def history_csv(self) -> str:
        lines = [RUN_CSV_HEADER]
        for gen, fit, corr, cost in self.history:
            lines.append(f"{gen},{fit!r},{corr!r},{cost}")
        return "\n".join(lines) + "\n"


@dataclass
class BatchStats:
    runs: int
    st: int
    as_mean: float
    ot: int | None
    results: list


def init_population(pop_size: int, n_bits: int) -> np.ndarray:
    """Uniform superposition: every amplitude pair at (1/sqrt2, 1/sqrt2)."""
    return np.full((pop_size, n_bits), math.pi / 4)


def observe(theta: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Measure each amplitude pair: bit = 1 with probability beta^2 = sin^2(theta)."""
    return (rng.random(theta.shape) < np.sin(theta) ** 2).astype(np.uint8)


def rotate_toward(theta: np.ndarray, bits: np.ndarray, delta: float) -> np.ndarray:
    """Rotate each amplitude pair by delta toward the given bit values, clamped."""
    step = np.where(bits == 1, delta, -delta)
    return np.clip(theta + step, THETA_MIN, THETA_MAX)


def evolve(goal: GoalSpec, gs: GateSet, max_gates: int, params: HqeaParams) -> RunResult:
    """Run the evolutionary loop until a satisfying circuit or max_gen generations."""
    m = goal.num_qubits
    n_cases = case_count(m, gs)
    k = codon_bits(n_cases)
    n_bits = max_gates * k
    rng = np.random.default_rng(params.seed)
    pop = init_population(params.pop_size, n_bits)

    cache: dict[bytes, EvalResult] = {}
    best_bits: np.ndarray | None = None     # best-ever by fitness (elitist record)
    best_eval: EvalResult | None = None
    guide_bits: np.ndarray | None = None    # rotation target, reset on restart
    guide_fitness = math.inf
    stagnant = 0
    history = []
    generation_found = None
    generations_run = 0

    for gen in range(1, params.max_gen + 1):
        generations_run = gen
        u = rng.random((params.pop_size, params.measurements, n_bits))
        flips = rng.random((params.pop_size, params.measurements, n_bits)) < params.mutation_prob
        prob1 = np.sin(pop) ** 2
        member_best = np.full(params.pop_size, np.inf)
        improved = False
        for c in range(params.pop_size):
            for t in range(params.measurements):
                bits = ((u[c, t] < prob1[c]) ^ flips[c, t]).astype(np.uint8)
                key = bits.tobytes()
                res = cache.get(key)
                if res is None:
                    res = evaluate_circuit(decode(bits, m, gs), goal, params.fitness)
                    cache[key] = res
                if res.fitness < member_best[c]:
                    member_best[c] = res.fitness
                if res.fitness < guide_fitness:
                    guide_fitness = res.fitness
                    guide_bits = bits.copy()
                    improved = True
                if best_eval is None or res.fitness < best_eval.fitness:
                    best_eval = res
                    best_bits = bits.copy()
        history.append((gen, best_eval.fitness, best_eval.correctness, best_eval.allcost))
        if is_success(best_eval, params.fitness):
            generation_found = gen
            break
        stagnant = 0 if improved else stagnant + 1
        if stagnant >= params.restart_after:
            pop = init_population(params.pop_size, n_bits)
            guide_bits = None
            guide_fitness = math.inf
            stagnant = 0
            continue
        if guide_bits is not None:
            for c in range(params.pop_size):
                if guide_fitness < member_best[c]:
                    pop[c] = rotate_toward(pop[c], guide_bits, params.delta_theta)

    return RunResult(
        success=generation_found is not None,
        best_circuit=decode(best_bits, m, gs),
        best_bits=best_bits,
        best_eval=best_eval,
        generation_found=generation_found,
        generations_run=generations_run,
        history=history,
    )


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("ORACLE_FORGE_THREADS", "1")))
    except ValueError:
        return 1


def _run_one(args) -> RunResult:
    goal, gs, max_gates, params = args
    return evolve(goal, gs, max_gates, params)


def run_batch(
    goal: GoalSpec,
    gs: GateSet,
    max_gates: int,
    params: HqeaParams,
    n_runs: int,
    base_seed: int | None = None,
) -> BatchStats:
    """Repeat evolve with seeds base_seed + i and aggregate ST / AS / OT."""
    if n_runs < 1:
        raise ValueError("n_runs must be at least 1")
    if base_seed is None:
        base_seed = params.seed
    jobs = [(goal, gs, max_gates, replace(params, seed=base_seed + i)) for i in range(n_runs)]
    workers = min(_worker_count(), n_runs)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    successes = [r for r in results if r.success]
    st = len(successes)
    as_mean = sum(r.generation_found for r in successes) / st if st else 0.0
    ot = None
    if goal.optimal_cost is not None:
        ot = sum(1 for r in successes if r.best_eval.allcost == goal.optimal_cost)
    return BatchStats(runs=n_runs, st=st, as_mean=as_mean, ot=ot, results=results)
