"""Cost functions over seed subsets.

The score of a subset trades its soiled measure S against its size n out
of N graph nodes. The basic form is S^2 + beta(n) * (1 - n/N)^2; the
generalized form is alpha(n)*S^2 + beta(n)*(gamma(n) - delta(n)*n/N)^2
plus penalty terms eps_k * C_k. Gate constraints are composed by min
(fuzzy AND); a failing gate makes the score undefined rather than low,
and undefined scores can never be ranked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import constraints as _constraints
from .graphs import MEASURE_MODES, Graph, GraphError, total_weight
from .taint import seed_set

CONST = "const"
OVER_N = "inv"


class CostConfigError(ValueError):
    """Malformed cost config text."""


@dataclass(frozen=True)
class CoefficientFn:
    """Coefficient as a function of subset size n: a constant or c/n."""

    form: str
    c: float

    def __post_init__(self):
        if self.form not in (CONST, OVER_N):
            raise ValueError(f"unknown coefficient form {self.form!r}")
        if not math.isfinite(self.c):
            raise ValueError(f"coefficient must be finite, got {self.c!r}")

    def __call__(self, n: int) -> float:
        return self.c if self.form == CONST else self.c / n

    def __str__(self) -> str:
        return f"{self.form} {self.c:g}"


def constant(c: float) -> CoefficientFn:
    return CoefficientFn(CONST, float(c))


def over_n(c: float) -> CoefficientFn:
    """c/n, e.g. ``over_n(2)`` gives 2/n."""
    return CoefficientFn(OVER_N, float(c))


_ONE = constant(1.0)


@dataclass(frozen=True)
class CostSpec:
    """Everything needed to score a subset: coefficients, penalties, gates.

    ``penalties`` holds (epsilon, constraint-id) pairs added as
    eps * C_k; ``gates`` holds (constraint-id, tau) pairs composed by
    min and thresholded at tau. ``mode`` picks the soiled-measure
    weighting (node or edge).
    """

    alpha: CoefficientFn = _ONE
    beta: CoefficientFn = _ONE
    gamma: CoefficientFn = _ONE
    delta: CoefficientFn = _ONE
    penalties: tuple[tuple[float, str], ...] = ()
    gates: tuple[tuple[str, float], ...] = ()
    mode: str = "node"

    def __post_init__(self):
        object.__setattr__(self, "penalties", tuple((float(e), cid) for e, cid in self.penalties))
        object.__setattr__(self, "gates", tuple((cid, float(t)) for cid, t in self.gates))
        if self.mode not in MEASURE_MODES:
            raise ValueError(f"unknown measure mode {self.mode!r}; expected one of {MEASURE_MODES}")
        for _, cid in self.penalties:
            _constraints.resolve(cid)
        for cid, tau in self.gates:
            _constraints.resolve(cid)
            if not 0.0 < tau <= 1.0:
                raise ValueError(f"gate threshold must be in (0, 1], got {tau}")


@dataclass(frozen=True)
class Score:
    """Evaluated subset: soiled measure, size, gate degree, and the value
    (present only when every gate passed)."""

    defined: bool
    value: float | None
    soiled: float
    n: int
    gate_degree: float


def _check_n(n: int, n_total: int):
    if not 1 <= n <= n_total:
        raise ValueError(f"subset size n={n} out of range [1, {n_total}]")


def basic_cost(soiled: float, n: int, n_total: int, beta: CoefficientFn = _ONE) -> float:
    """S^2 + beta(n) * (1 - n/N)^2."""
    _check_n(n, n_total)
    return soiled * soiled + beta(n) * (1.0 - n / n_total) ** 2


def generalized_cost(
    soiled: float,
    n: int,
    n_total: int,
    spec: CostSpec,
    constraint_values: Sequence[float] = (),
) -> float:
    """alpha(n)*S^2 + beta(n)*(gamma(n) - delta(n)*n/N)^2 + sum eps_k*C_k."""
    _check_n(n, n_total)
    if len(constraint_values) != len(spec.penalties):
        raise ValueError(
            f"got {len(constraint_values)} constraint values for {len(spec.penalties)} penalties"
        )
    value = spec.alpha(n) * soiled * soiled
    value += spec.beta(n) * (spec.gamma(n) - spec.delta(n) * (n / n_total)) ** 2
    for (eps, _), c in zip(spec.penalties, constraint_values):
        value += eps * c
    return value


def gated_cost(
    soiled: float,
    n: int,
    n_total: int,
    spec: CostSpec,
    gate_degrees: Sequence[float] = (),
    constraint_values: Sequence[float] = (),
) -> Score:
    """Compose gate degrees by min and score the subset if they pass.

    The composed degree mu must reach every gate's threshold tau for the
    score to be defined; an empty gate list always passes (mu = 1).
    """
    if len(gate_degrees) != len(spec.gates):
        raise ValueError(f"got {len(gate_degrees)} gate degrees for {len(spec.gates)} gates")
    mu = 1.0
    for d in gate_degrees:
        if not 0.0 <= d <= 1.0:
            raise ValueError(f"gate degree {d!r} outside [0, 1]")
        mu = min(mu, d)
    if all(mu >= tau for _, tau in spec.gates):
        value = generalized_cost(soiled, n, n_total, spec, constraint_values)
        if not math.isfinite(value):
            raise ValueError(f"cost value is not finite: {value!r}")
        return Score(True, value, soiled, n, mu)
    _check_n(n, n_total)
    return Score(False, None, soiled, n, mu)


class SubsetEvaluator:
    """Scores seed subsets of one graph under one CostSpec, with caching.

    Subsets are encoded as bit masks over ``graph.node_ids`` (bit i is
    node i), which keeps the optimizers' inner loops cheap; reachability
    closures are precomputed per node. ``evaluate`` accepts plain node-id
    iterables and matches propagate + gated_cost done by hand.
    """

    def __init__(self, graph: Graph, spec: CostSpec, cache_limit: int = 1 << 18):
        self.graph = graph
        self.spec = spec
        self._ids = graph.node_ids
        self._index = {v: i for i, v in enumerate(self._ids)}
        self._n_total = graph.n_nodes
        self._cache: dict[int, Score] = {}
        self._cache_limit = cache_limit

        self._gate_evs = tuple((_constraints.resolve(cid), tau) for cid, tau in spec.gates)
        self._pen_evs = tuple(_constraints.resolve(cid) for _, cid in spec.penalties)

        succ = [[self._index[u] for u in graph.successors(v)] for v in self._ids]
        reach: list[int] = []
        for start in range(self._n_total):
            seen = 1 << start
            stack = [start]
            while stack:
                v = stack.pop()
                for u in succ[v]:
                    bit = 1 << u
                    if not seen & bit:
                        seen |= bit
                        stack.append(u)
            reach.append(seen)
        self._reach = reach

        if spec.mode == "node":
            self._weight = [graph.node_weight(v) for v in self._ids]
        else:
            out_w = [0.0] * self._n_total
            for s, _, w in graph.edges:
                out_w[self._index[s]] += w
            self._weight = out_w
        self._total = total_weight(graph, spec.mode)

    @property
    def n_total(self) -> int:
        return self._n_total

    def mask_of(self, seeds: Iterable[str]) -> int:
        mask = 0
        for v in seed_set(self.graph, seeds):
            mask |= 1 << self._index[v]
        return mask

    def seeds_of(self, mask: int) -> frozenset[str]:
        return frozenset(self._ids[i] for i in _bits(mask))

    def evaluate(self, seeds: Iterable[str]) -> Score:
        return self.evaluate_mask(self.mask_of(seeds))

    def evaluate_mask(self, mask: int) -> Score:
        score = self._cache.get(mask)
        if score is None:
            if mask <= 0 or mask >> self._n_total:
                raise ValueError(f"mask {mask:#x} is not a nonempty subset of the graph's nodes")
            closure = 0
            m = mask
            while m:
                low = m & -m
                closure |= self._reach[low.bit_length() - 1]
                m ^= low
            soiled_w = 0.0
            weight = self._weight
            c = closure
            while c:
                low = c & -c
                soiled_w += weight[low.bit_length() - 1]
                c ^= low
            s = soiled_w / self._total
            n = mask.bit_count()
            degrees: Sequence[float] = ()
            cvals: Sequence[float] = ()
            if self._gate_evs or self._pen_evs:
                seeds = self.seeds_of(mask)
                degrees = [ev.evaluate(self.graph, seeds) for ev, _ in self._gate_evs]
                cvals = [ev.evaluate(self.graph, seeds) for ev in self._pen_evs]
            score = gated_cost(s, n, self._n_total, self.spec, degrees, cvals)
            if len(self._cache) >= self._cache_limit:
                self._cache.clear()
            self._cache[mask] = score
        return score


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _parse_coefficient(value: str) -> CoefficientFn:
    fields = value.split()
    if len(fields) != 2 or fields[0] not in (CONST, OVER_N):
        raise ValueError(f"expected '{CONST} <c>' or '{OVER_N} <c>', got {value!r}")
    return CoefficientFn(fields[0], float(fields[1]))


def parse_cost_config(text: str) -> CostSpec:
    """Parse cost config text into a CostSpec.

    Key-value lines: ``alpha = const 1``, ``beta = inv 2`` (meaning 2/n),
    ``measure = node``, ``gate = <constraint-id> [tau=<t>]``,
    ``penalty = <constraint-id> eps=<e>``. Gate and penalty lines may
    repeat; ``#`` starts a comment.
    """
    kwargs: dict = {}
    gates: list[tuple[str, float]] = []
    penalties: list[tuple[float, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = (f.strip() for f in line.partition("="))
        if not sep or not value:
            raise CostConfigError(f"line {line_no}: expected 'key = value', got {line!r}")
        try:
            if key in ("alpha", "beta", "gamma", "delta"):
                kwargs[key] = _parse_coefficient(value)
            elif key == "measure":
                kwargs["mode"] = value
            elif key == "gate":
                fields = value.split()
                tau = 1.0
                if len(fields) == 2 and fields[1].startswith("tau="):
                    tau = float(fields[1][4:])
                elif len(fields) != 1:
                    raise ValueError(f"expected '<constraint-id> [tau=<t>]', got {value!r}")
                gates.append((fields[0], tau))
            elif key == "penalty":
                fields = value.split()
                if len(fields) != 2 or not fields[1].startswith("eps="):
                    raise ValueError(f"expected '<constraint-id> eps=<e>', got {value!r}")
                penalties.append((float(fields[1][4:]), fields[0]))
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, (CostConfigError, _constraints.ConstraintError)):
                raise
            raise CostConfigError(f"line {line_no}: {exc}") from None
    return CostSpec(gates=tuple(gates), penalties=tuple(penalties), **kwargs)
