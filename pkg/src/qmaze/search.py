"""Iterative threshold search for the maximum-fitness path.

Each round marks every path whose fitness strictly exceeds the current
cutoff, amplifies the marked set with Grover iterations on a fresh uniform
state, and measures once. A measurement that beats the cutoff is accepted
and becomes the new cutoff, so accepted cutoffs increase strictly. The run
stops when the round budget is used up, or early once no state is marked:
an empty marked set certifies the cutoff is the global maximum. The
certificate uses the simulator's access to the full table, so it can be
switched off to model a setting where only oracle queries are available.

Two policies pick the per-round iteration count:

* ``known_count`` reads the exact marked count l from the table (again a
  simulator privilege) and uses floor(pi/4 * sqrt(N/l)).
* ``unknown_count`` needs no count: the iteration count is drawn uniformly
  from a window that grows by a factor of 6/5 after every failed round
  (the classic schedule for amplifying an unknown number of solutions),
  clamped to sqrt(N), and reset once a round is accepted.
"""

import dataclasses
import math

import numpy as np

from .fitness import FitnessTable, build_fitness_table
from .maze import Maze
from .paths import DEFAULT_N_CAP
from .statevector import OracleSpec, grover_iterate, measure, uniform_superposition

KNOWN_COUNT = "known_count"
UNKNOWN_COUNT = "unknown_count"
_MODES = (KNOWN_COUNT, UNKNOWN_COUNT)

DEFAULT_GROVER_CAP = 1 << 20


@dataclasses.dataclass
class SearchConfig:
    """Knobs for one search run. max_rounds=None uses the fitness register
    bit width (minimum 1)."""

    max_rounds: int | None = None
    mode: str = KNOWN_COUNT
    rng_seed: int = 0
    grover_cap: int = DEFAULT_GROVER_CAP
    certificate_exit: bool = True

    def __post_init__(self):
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if self.max_rounds is not None and self.max_rounds < 1:
            raise ValueError("max_rounds must be >= 1")
        if self.grover_cap < 1:
            raise ValueError("grover_cap must be >= 1")
        if self.rng_seed < 0:
            raise ValueError("rng_seed must be non-negative")

    def as_dict(self) -> dict:
        return {
            "max_rounds": self.max_rounds,
            "mode": self.mode,
            "rng_seed": self.rng_seed,
            "grover_cap": self.grover_cap,
            "certificate_exit": self.certificate_exit,
        }


@dataclasses.dataclass
class IterationRecord:
    round: int
    cutoff_before: int
    marked: int
    grover_r: int
    measured_index: int
    measured_fitness: int
    accepted: bool

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass
class SearchResult:
    best_index: int
    best_fitness: int
    initial_index: int
    initial_cutoff: int
    history: tuple[IterationRecord, ...]
    oracle_calls_total: int
    optimal: bool

    @property
    def rounds_used(self) -> int:
        return len(self.history)

    @property
    def accepted_cutoffs(self) -> tuple[int, ...]:
        return tuple(rec.measured_fitness for rec in self.history if rec.accepted)

    def as_dict(self) -> dict:
        return {
            "best_index": self.best_index,
            "best_fitness": self.best_fitness,
            "initial_index": self.initial_index,
            "initial_cutoff": self.initial_cutoff,
            "oracle_calls_total": self.oracle_calls_total,
            "optimal": self.optimal,
            "rounds": [rec.as_dict() for rec in self.history],
        }


def _sample_cutoff(table: FitnessTable, rng: np.random.Generator) -> tuple[int, int]:
    idx = int(rng.integers(table.values.shape[0]))
    return idx, int(table.values[idx])


def initial_cutoff(table: FitnessTable, rng: np.random.Generator) -> int:
    """Fitness of a uniformly sampled path index: one measurement of the
    unamplified register."""
    return _sample_cutoff(table, rng)[1]


def choose_iterations(num_states: int, marked: int | None, mode: str,
                      rng: np.random.Generator | None = None,
                      cap: int = DEFAULT_GROVER_CAP,
                      schedule_bound: float = 1.0) -> int:
    """Per-round Grover iteration count.

    known_count uses floor(pi/4 * sqrt(N/l)) clamped to [1, cap];
    unknown_count draws uniformly from [0, min(schedule_bound, cap)).
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if mode == KNOWN_COUNT:
        if marked is None or not 1 <= marked <= num_states:
            raise ValueError("known_count mode needs 1 <= marked <= num_states")
        r = math.floor(math.pi / 4 * math.sqrt(num_states / marked))
        return min(max(r, 1), cap)
    if mode == UNKNOWN_COUNT:
        if rng is None:
            raise ValueError("unknown_count mode needs an rng")
        hi = max(1, math.ceil(min(schedule_bound, cap)))
        return int(rng.integers(hi))
    raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")


def search_table(table: FitnessTable, config: SearchConfig | None = None) -> SearchResult:
    """Run the iterative threshold search against a prebuilt fitness table."""
    config = config or SearchConfig()
    rng = np.random.default_rng(config.rng_seed)
    values = table.values
    num_states = values.shape[0]
    rounds = (config.max_rounds if config.max_rounds is not None
              else max(1, table.d_max.bit_length()))

    init_idx, init_fit = _sample_cutoff(table, rng)
    cutoff = init_fit
    best_idx, best_fit = init_idx, init_fit
    base = uniform_superposition(table.n)
    history: list[IterationRecord] = []
    calls = 0
    optimal = False
    bound = 1.0  # unknown_count window; grows on failure, resets on acceptance
    sqrt_n = math.sqrt(num_states)

    for rnd in range(rounds):
        l = int(np.count_nonzero(values > cutoff))
        if l == 0 and config.certificate_exit:
            optimal = True
            break
        oracle = OracleSpec(table, cutoff)
        if config.mode == KNOWN_COUNT:
            # l == 0 can only happen with the certificate disabled; nothing
            # to amplify, so just measure the uniform state.
            r = 0 if l == 0 else choose_iterations(num_states, l, KNOWN_COUNT,
                                                   rng, config.grover_cap)
        else:
            r = choose_iterations(num_states, None, UNKNOWN_COUNT, rng,
                                  config.grover_cap, schedule_bound=bound)
        state = grover_iterate(base, oracle, r)
        idx = measure(state, rng)
        fit = int(values[idx])
        calls += r
        accepted = fit > cutoff
        history.append(IterationRecord(rnd, cutoff, l, r, idx, fit, accepted))
        if accepted:
            cutoff = fit
            best_idx, best_fit = idx, fit
            bound = 1.0
        elif config.mode == UNKNOWN_COUNT:
            bound = min(bound * 6.0 / 5.0, sqrt_n)

    return SearchResult(best_index=best_idx, best_fitness=best_fit,
                        initial_index=init_idx, initial_cutoff=init_fit,
                        history=tuple(history), oracle_calls_total=calls,
                        optimal=optimal)


def search_max(maze: Maze, start, end, n: int,
               config: SearchConfig | None = None,
               cap: int = DEFAULT_N_CAP) -> SearchResult:
    """Build the fitness table for (maze, start, end, n) and search it."""
    table = build_fitness_table(maze, start, end, n, cap=cap)
    return search_table(table, config)
