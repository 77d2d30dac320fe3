"""Maximize a cost spec over nonempty seed subsets.

Three searchers share one evaluation path: exhaustive enumeration (exact,
capped at 22 nodes), simulated annealing, and a genetic algorithm. The
two randomized searchers are heuristics; the test suite verifies them
against the exhaustive result instead of assuming global optimality.
All are deterministic for a fixed rng seed; annealing restarts draw
independent streams derived from (seed, restart index), so the result
does not depend on the worker count.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cost import CostSpec, Score, SubsetEvaluator
from .graphs import Graph

EXHAUSTIVE_NODE_CAP = 22
_MAX_START_ATTEMPTS = 1000


class InfeasibleSearchError(RuntimeError):
    """No gate-feasible candidate could be found."""


@dataclass(frozen=True)
class Candidate:
    """A seed subset together with its evaluated score."""

    seeds: frozenset[str]
    score: Score

    @property
    def sorted_seeds(self) -> tuple[str, ...]:
        return tuple(sorted(self.seeds))


@dataclass(frozen=True)
class AnnealingSchedule:
    """Geometric cooling schedule with random restarts."""

    initial_temperature: float = 1.0
    cooling_factor: float = 0.95
    steps_per_temperature: int = 50
    minimum_temperature: float = 1e-4
    restarts: int = 10

    def __post_init__(self):
        if not self.initial_temperature > 0:
            raise ValueError("initial_temperature must be positive")
        if not 0.0 < self.cooling_factor < 1.0:
            raise ValueError("cooling_factor must be in (0, 1)")
        if self.steps_per_temperature < 1:
            raise ValueError("steps_per_temperature must be >= 1")
        if not self.minimum_temperature > 0:
            raise ValueError("minimum_temperature must be positive")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


@dataclass(frozen=True)
class GaParams:
    """Genetic algorithm knobs; ``mutation_rate=None`` means 1/N."""

    population_size: int = 40
    generations: int = 100
    mutation_rate: float | None = None
    crossover_rate: float = 0.9
    tournament_size: int = 3
    elitism_count: int = 1

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")
        if self.mutation_rate is not None and not 0.0 < self.mutation_rate <= 1.0:
            raise ValueError("mutation_rate must be in (0, 1]")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise ValueError("crossover_rate must be in [0, 1]")
        if self.tournament_size < 2:
            raise ValueError("tournament_size must be >= 2")
        if not 0 <= self.elitism_count < self.population_size:
            raise ValueError("elitism_count must be in [0, population_size)")


@dataclass(frozen=True)
class SearchResult:
    """Best candidate plus the top-k ranking and bookkeeping."""

    best: Candidate
    ranked: tuple[Candidate, ...]
    evaluations: int
    rng_seed: int
    optimizer: str


def rank_key(candidate: Candidate):
    """Descending score, then fewer seeds, then lexicographic node ids."""
    return (-candidate.score.value, len(candidate.seeds), candidate.sorted_seeds)


def _result(evaluator, seen, evaluations, rng_seed, optimizer, top_k) -> SearchResult:
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    candidates = [Candidate(evaluator.seeds_of(m), sc) for m, sc in seen.items()]
    if not candidates:
        raise InfeasibleSearchError("no gate-feasible candidate was found")
    candidates.sort(key=rank_key)
    ranked = tuple(candidates[:top_k])
    return SearchResult(ranked[0], ranked, evaluations, rng_seed, optimizer)


def exhaustive_search(
    g: Graph,
    spec: CostSpec,
    top_k: int = 10,
    *,
    rng_seed: int = 0,
    node_cap: int = EXHAUSTIVE_NODE_CAP,
) -> SearchResult:
    """Evaluate every nonempty subset; the returned best is the true
    global maximum among defined scores.

    Deterministic, and independent of ``rng_seed`` (recorded only).
    Refuses graphs beyond ``node_cap`` nodes rather than sampling.
    """
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    n = g.n_nodes
    if n > node_cap:
        raise ValueError(
            f"exhaustive search over {n} nodes would take 2^{n} evaluations; cap is {node_cap}"
        )
    evaluator = SubsetEvaluator(g, spec)
    # Bounded accumulator: keep the best few, prune periodically.
    buf: list[tuple[tuple, int, Score]] = []
    keep = max(top_k, 1)
    for mask in range(1, 1 << n):
        sc = evaluator.evaluate_mask(mask)
        if sc.defined:
            key = (-sc.value, mask.bit_count(), tuple(sorted(evaluator.seeds_of(mask))))
            buf.append((key, mask, sc))
            if len(buf) > 4 * keep + 64:
                buf.sort(key=lambda item: item[0])
                del buf[keep:]
    if not buf:
        raise InfeasibleSearchError("every subset is gated out; no defined candidate exists")
    buf.sort(key=lambda item: item[0])
    seen = {mask: sc for _, mask, sc in buf[:keep]}
    return _result(evaluator, seen, (1 << n) - 1, rng_seed, "exhaustive", top_k)


def _feasible_start(evaluator, rng, n):
    for _ in range(_MAX_START_ATTEMPTS):
        bits = np.flatnonzero(rng.integers(0, 2, n))
        if bits.size == 0:
            continue
        mask = 0
        for i in bits.tolist():
            mask |= 1 << i
        score = evaluator.evaluate_mask(mask)
        if score.defined:
            return mask, score, 1
    raise InfeasibleSearchError(
        f"no gate-feasible starting subset found in {_MAX_START_ATTEMPTS} attempts"
    )


def _anneal_restart(evaluator, schedule, rng_seed, restart_index):
    n = evaluator.n_total
    rng = np.random.default_rng([rng_seed, restart_index])
    evaluations = 0
    current, score, used = _feasible_start(evaluator, rng, n)
    evaluations += used
    current_value = score.value
    seen = {current: score}
    steps = schedule.steps_per_temperature
    temperature = schedule.initial_temperature
    exp = math.exp
    evaluate = evaluator.evaluate_mask
    while temperature >= schedule.minimum_temperature:
        flips = rng.integers(0, n, steps).tolist()
        draws = rng.random(steps).tolist()
        for i in range(steps):
            neighbor = current ^ (1 << flips[i])
            if neighbor == 0:
                continue
            sc = evaluate(neighbor)
            evaluations += 1
            if not sc.defined:
                continue
            seen[neighbor] = sc
            delta = sc.value - current_value
            if delta >= 0.0 or draws[i] < exp(delta / temperature):
                current = neighbor
                current_value = sc.value
        temperature *= schedule.cooling_factor
    return seen, evaluations


def anneal(
    g: Graph,
    spec: CostSpec,
    schedule: AnnealingSchedule = AnnealingSchedule(),
    rng_seed: int = 0,
    *,
    top_k: int = 10,
    workers: int = 1,
) -> SearchResult:
    """Simulated annealing over subsets.

    Each restart starts from a uniformly random gate-feasible nonempty
    subset and flips one node's membership per step; moves that empty
    the set or fail a gate are rejected, worse moves are accepted with
    probability exp(delta/T). Restarts run on independent RNG streams
    (optionally in parallel) and the incumbent best is kept across them.
    """
    evaluator = SubsetEvaluator(g, spec)
    indices = range(schedule.restarts)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda r: _anneal_restart(evaluator, schedule, rng_seed, r), indices))
    else:
        outcomes = [_anneal_restart(evaluator, schedule, rng_seed, r) for r in indices]
    seen: dict[int, Score] = {}
    evaluations = 0
    for restart_seen, restart_evals in outcomes:
        seen.update(restart_seen)
        evaluations += restart_evals
    return _result(evaluator, seen, evaluations, rng_seed, "sa", top_k)


def _tournament(rng, fitness, size):
    pool = rng.integers(0, len(fitness), size).tolist()
    best = pool[0]
    for i in pool[1:]:
        if fitness[i] > fitness[best]:
            best = i
    return best


def evolve(
    g: Graph,
    spec: CostSpec,
    params: GaParams = GaParams(),
    rng_seed: int = 0,
    *,
    top_k: int = 10,
) -> SearchResult:
    """Genetic algorithm over N-bit membership vectors.

    Gate-undefined individuals get fitness below every defined score, so
    they lose tournaments to any defined rival and are never kept as
    elites over a defined one. Empty offspring are repaired by setting
    one random bit.
    """
    n = g.n_nodes
    evaluator = SubsetEvaluator(g, spec)
    mutation_rate = params.mutation_rate if params.mutation_rate is not None else 1.0 / n
    rng = np.random.default_rng([rng_seed])
    pop_size = params.population_size

    population = rng.integers(0, 2, (pop_size, n), dtype=np.uint8)
    for row in range(pop_size):
        if not population[row].any():
            population[row, rng.integers(0, n)] = 1

    seen: dict[int, Score] = {}
    evaluations = 0

    def assess(pop):
        nonlocal evaluations
        fitness = []
        for row in pop:
            mask = 0
            for i in np.flatnonzero(row).tolist():
                mask |= 1 << i
            sc = evaluator.evaluate_mask(mask)
            evaluations += 1
            if sc.defined:
                seen[mask] = sc
                fitness.append(sc.value)
            else:
                fitness.append(-math.inf)
        return fitness

    fitness = assess(population)
    for _ in range(params.generations):
        order = sorted(range(pop_size), key=lambda i: (-fitness[i], i))
        elites = [i for i in order if fitness[i] > -math.inf][: params.elitism_count]
        offspring = [population[i].copy() for i in elites]
        while len(offspring) < pop_size:
            a = _tournament(rng, fitness, params.tournament_size)
            b = _tournament(rng, fitness, params.tournament_size)
            if rng.random() < params.crossover_rate:
                pick = rng.integers(0, 2, n, dtype=np.uint8)
                child = np.where(pick, population[a], population[b]).astype(np.uint8)
            else:
                child = population[a].copy()
            child ^= (rng.random(n) < mutation_rate).astype(np.uint8)
            if not child.any():
                child[rng.integers(0, n)] = 1
            offspring.append(child)
        population = np.stack(offspring)
        fitness = assess(population)
    return _result(evaluator, seen, evaluations, rng_seed, "ga", top_k)
