"""Maze solving as an amplified maximum search on a classical statevector.

Pipeline: generate a perfect maze, view every fixed-length direction
sequence as a basis state of a 4**n register, score each by walking it
through the maze, then repeatedly mark above-cutoff states with a phase
oracle and amplify them until the best-scoring path is measured. Classical
BFS and exhaustive scans double-check every stage.
"""

from .directions import DIRECTIONS, Direction, parse_direction
from .fitness import (FitnessTable, TableParams, WalkResult,
                      build_fitness_table, fitness_bits, fitness_ceiling,
                      fitness_of, load_table, save_table, walk)
from .maze import (Maze, MazeFormatError, RoomCoord, deserialize,
                   generate_maze, generate_maze_with_log, is_open,
                   render_ascii, replay_rooms, serialize, validate_perfect)
from .paths import (DEFAULT_N_CAP, format_path, index_to_path, parse_path,
                    path_length, path_to_index)
from .search import (DEFAULT_GROVER_CAP, KNOWN_COUNT, UNKNOWN_COUNT,
                     IterationRecord, SearchConfig, SearchResult,
                     choose_iterations, initial_cutoff, search_max,
                     search_table)
from .statevector import (OracleSpec, StateVector, apply_diffusion,
                          apply_oracle, grover_iterate, marked_count,
                          marked_probability, measure, uniform_superposition)
from .verify import (BenchReport, BfsResult, TrialRecord,
                     bfs_consistency_check, bfs_shortest_path,
                     exhaustive_max, run_benchmark)

__version__ = "0.1.0"

__all__ = [
    "DIRECTIONS", "Direction", "parse_direction",
    "Maze", "MazeFormatError", "RoomCoord", "generate_maze",
    "generate_maze_with_log", "is_open", "validate_perfect", "serialize",
    "deserialize", "render_ascii", "replay_rooms",
    "DEFAULT_N_CAP", "path_length", "path_to_index", "index_to_path",
    "parse_path", "format_path",
    "WalkResult", "FitnessTable", "TableParams", "walk", "fitness_of",
    "fitness_ceiling", "fitness_bits", "build_fitness_table", "save_table",
    "load_table",
    "StateVector", "OracleSpec", "uniform_superposition", "apply_oracle",
    "apply_diffusion", "grover_iterate", "measure", "marked_count",
    "marked_probability",
    "KNOWN_COUNT", "UNKNOWN_COUNT", "DEFAULT_GROVER_CAP", "SearchConfig",
    "IterationRecord", "SearchResult", "initial_cutoff", "choose_iterations",
    "search_table", "search_max",
    "BfsResult", "TrialRecord", "BenchReport", "bfs_shortest_path",
    "exhaustive_max", "bfs_consistency_check", "run_benchmark",
    "__version__",
]
