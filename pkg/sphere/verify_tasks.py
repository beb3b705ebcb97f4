"""
Grid driver behind `verify-all`.

Each grid cell is one seeded random configuration of n dots; every check
runs on it and records failures as text. Cells run concurrently and the
results are merged back in grid order, so the summary only depends on the
grid, the seeds and the settings.
"""

import logging
import random
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor, as_completed

from . import formulas
from .circles import (avoidant_partition_count, double_count_check, hull_edge_count, hull_face_count,
                      incident_histogram, oracle_separable, rotation_invariance_check, separable_subsets)
from .dynamics import MoveKind, move_sequence_with_retry
from .errors import PoleProjection
from .geom_core import random_config, random_rotation, rotate
from .schemas import CheckResult, VerifySummary
from .voronoi import (antipodal_check, build_graph, euler_characteristic, gluing_count_check, is_connected,
                      is_three_regular, region_sampling_check, strata_counts)

logger = logging.getLogger(__name__)

CHECKS = (
    "incident_counts", "avoidant_counts", "hull_faces", "double_count", "strata_counts", "oracle_equivalence",
    "antipodal", "gluing", "rotation_invariance", "region_sampling", "dynamics",
)
DYNAMICS_CELLS = {4: 2, 5: 2, 6: 3}


class CellRun:
    """Runs the checks for one (n, seed) cell, collecting failures and time per check."""

    def __init__(self, n, seed, oracle_max_n=9, bound=64, max_retries=5, jitter_denominator=1024,
                 refine_limit=4096, k_range=None):
        self.n = n
        self.seed = seed
        self.oracle_max_n = oracle_max_n
        self.bound = bound
        self.max_retries = max_retries
        self.jitter_denominator = jitter_denominator
        self.refine_limit = refine_limit
        self.k_range = k_range
        self.rng = random.Random(n * 100003 + seed)
        self.failures = defaultdict(list)
        self.ran = set()
        self.seconds = defaultdict(float)
        self.graphs = {}

    def fail(self, check, message):
        self.failures[check].append(f"n={self.n} seed={self.seed}: {message}")

    def check(self, name, fn):
        self.ran.add(name)
        started = time.perf_counter()
        try:
            fn()
        except Exception as e:
            self.fail(name, f"{type(e).__name__}: {e}")
        finally:
            self.seconds[name] += time.perf_counter() - started

    def orders(self, lo, hi):
        """Orders k in [lo, hi], clipped to the requested k range."""
        if self.k_range is not None:
            lo, hi = max(lo, self.k_range[0]), min(hi, self.k_range[1])
        return range(lo, hi + 1)

    def graph(self, k):
        if k not in self.graphs:
            self.graphs[k] = build_graph(self.config, k)
        return self.graphs[k]

    def run(self):
        n = self.n
        self.config = random_config(n, self.rng, self.bound)
        self.check("incident_counts", self.incident_counts)
        if n >= 4:
            self.check("avoidant_counts", self.avoidant_counts)
            self.check("hull_faces", self.hull_faces)
            self.check("strata_counts", self.strata)
            self.check("gluing", self.gluing)
            self.check("rotation_invariance", self.rotation_invariance)
            self.check("region_sampling", self.region_sampling)
        if n >= 5:
            self.check("double_count", self.double_count)
        if 4 <= n <= self.oracle_max_n:
            self.check("oracle_equivalence", self.oracle_equivalence)
        if n >= 4 and n % 2 == 0 and self.orders(n // 2, n // 2):
            self.check("antipodal", self.antipodal)
        if n in DYNAMICS_CELLS and self.orders(DYNAMICS_CELLS[n], DYNAMICS_CELLS[n]):
            self.check("dynamics", self.dynamics)
        return self

    # --- checks ---

    def incident_counts(self):
        for (k, l), count in incident_histogram(self.config).items():
            if count != formulas.incident_pair(k, l):
                self.fail("incident_counts", f"{{{k},{l}}}: {count} != {formulas.incident_pair(k, l)}")

    def avoidant_counts(self):
        for k, l in formulas.avoidant_pairs(self.n):
            count = avoidant_partition_count(self.config, k, l)
            if count != formulas.avoidant_pair(k, l):
                self.fail("avoidant_counts", f"{{{k},{l}}}: {count} != {formulas.avoidant_pair(k, l)}")

    def hull_faces(self):
        faces, edges = hull_face_count(self.config), hull_edge_count(self.config)
        if (faces, edges) != (formulas.hull_faces(self.n), formulas.hull_edges(self.n)):
            self.fail("hull_faces", f"faces={faces} edges={edges}")

    def double_count(self):
        for k in self.orders(1, self.n - 3):
            if not double_count_check(self.config, k):
                self.fail("double_count", f"k={k}")

    def strata(self):
        for k in self.orders(1, self.n - 1):
            graph = self.graph(k)
            counts, expected = strata_counts(graph), formulas.strata(k, self.n)
            if counts != expected:
                self.fail("strata_counts", f"k={k}: {counts} != {expected}")
            if euler_characteristic(graph) != 2:
                self.fail("strata_counts", f"k={k}: Euler characteristic {euler_characteristic(graph)}")
            if not is_connected(graph) or not is_three_regular(graph):
                self.fail("strata_counts", f"k={k}: graph is not a connected 3-regular graph")

    def oracle_equivalence(self):
        swept = separable_subsets(self.config)
        for subset in range(1, self.config.full_mask):
            if oracle_separable(self.config, subset) != (subset in swept):
                self.fail("oracle_equivalence", f"subset mask {subset:#x} disagrees")

    def antipodal(self):
        if not antipodal_check(self.graph(self.n // 2)):
            self.fail("antipodal", f"k={self.n // 2}")

    def gluing(self):
        for k in self.orders(2, self.n - 1):
            if not gluing_count_check(self.config, k):
                self.fail("gluing", f"k={k}")

    def rotation_invariance(self):
        rotations = []
        while len(rotations) < 5:
            quaternion = random_rotation(self.rng)
            try:
                rotate(self.config, quaternion)
            except PoleProjection:
                continue
            rotations.append(quaternion)
        if not rotation_invariance_check(self.config, rotations):
            self.fail("rotation_invariance", "counts changed under rotation")

    def region_sampling(self):
        for k in self.orders(1, self.n - 1):
            if not region_sampling_check(self.graph(k), self.rng, samples=10):
                self.fail("region_sampling", f"k={k}")

    def dynamics(self):
        k = DYNAMICS_CELLS[self.n]
        other = random_config(self.n, self.rng, self.bound)
        log = move_sequence_with_retry(self.config, other, k, self.max_retries, self.seed,
                                       self.jitter_denominator, self.refine_limit)
        if not log.endpoint_match:
            self.fail("dynamics", "perturbed end graph differs from the requested end graph")
        for move in log.events:
            if self.n == 2 * k and move.kind is not MoveKind.NO_OP and not move.antipodal_paired:
                self.fail("dynamics", f"unpaired {move.kind.value} at dots {move.wall.labels}")
            if (abs(self.n - 2 * k) == 1 and move.kind is MoveKind.SQUARE_MOVE
                    and move.second_kind not in (MoveKind.WHITE_RECONNECT, MoveKind.BLACK_RECONNECT)):
                self.fail("dynamics", f"SquareMove at dots {move.wall.labels} without a merge or split opposite")


def verify_grid(update_progress, n_range, seeds, max_concurrency=4, **cell_options) -> VerifySummary:
    """
    Runs every check on every (n, seed) cell of the grid.

    Args:
        update_progress: Callback fn(progress_text, **extra), called as cells finish
        n_range: (lo, hi) inclusive range of configuration sizes
        seeds: Number of seeds per size
        max_concurrency: Worker threads
        cell_options: Passed to CellRun (oracle_max_n, bound, max_retries, k_range, ...)
    """
    started = time.perf_counter()
    lo, hi = n_range
    cells = [(n, seed) for n in range(lo, hi + 1) for seed in range(seeds)]
    total = len(cells)
    finished = {}

    update_progress(f"0/{total} cells checked", cells_total=total, cells_completed=0)

    with ThreadPoolExecutor(max_workers=max_concurrency) as executor:
        future_to_cell = {executor.submit(CellRun(n, seed, **cell_options).run): (n, seed) for n, seed in cells}

        completed = 0
        for future in as_completed(future_to_cell):
            cell = future_to_cell[future]
            completed += 1
            update_progress(f"{completed}/{total} cells checked", cells_completed=completed)
            try:
                finished[cell] = future.result()
            except Exception as e:
                logger.error(f"Cell n={cell[0]} seed={cell[1]} could not be set up: {e}")
                finished[cell] = e

    results = []
    for name in CHECKS:
        failures, ran, seconds = [], 0, 0.0
        for cell in cells:
            run = finished[cell]
            if isinstance(run, Exception):
                failures.append(f"n={cell[0]} seed={cell[1]}: {type(run).__name__}: {run}")
                continue
            if name in run.ran:
                ran += 1
                seconds += run.seconds[name]
                failures.extend(run.failures[name])
        results.append(CheckResult(name=name, passed=not failures, cells=ran, failures=failures,
                                   seconds=round(seconds, 3)))

    passed = all(r.passed for r in results)
    k_range = cell_options.get("k_range")
    return VerifySummary(n_range=[lo, hi], k_range=list(k_range) if k_range else None, seeds=seeds,
                         checks=results, passed=passed,
                         seconds=round(time.perf_counter() - started, 3))
