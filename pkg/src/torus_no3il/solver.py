"""Exact tau(T_{m x n}) by branch and bound, plus verification and a brute-force oracle.

Point sets are bitsets over the lexicographic point index ``x * n + y``;
the depth-first loop itself is compiled (see ``_kernel``).  The search adds points in increasing index order, so a
node is (chosen points, still-available larger points).  Upper bounds at a
node come from line partitions of the torus:

* every coset family of a cyclic subgroup of order lcm(m, n) splits the
  torus into g lines (the diagonals L_s are one such family), and each line
  holds at most two points;
* for a chosen point a, a cover of the torus by lines through a bounds the
  final size by 1 + the number of those lines that can still receive a
  second point.

The global cap is 2 * gcd(m, n); a witness of that size ends the search.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernel
from .constructions import EXACT_SEARCH, SearchStats, TauResult
from .lines import geometry, max_cells
from .torus import Configuration, TorusDims, TorusPoint, det_mod_test

log = logging.getLogger(__name__)

Triple = tuple[TorusPoint, TorusPoint, TorusPoint]


@dataclass(frozen=True)
class SearchLimits:
    """Budget for :func:`max_no3il`.  ``parallel_width`` is accepted but the search runs in one worker."""

    max_nodes: int = 200_000_000
    time_budget: float = 3600.0
    parallel_width: int = 1

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.time_budget <= 0 or self.parallel_width <= 0:
            raise ValueError("search limits must be positive")


def verify_no3il(dims: TorusDims, cfg: Configuration, prefilter: bool = True) -> Optional[Triple]:
    """Return the lexicographically first collinear triple of ``cfg``, or None.

    With ``prefilter`` a triple whose determinant is nonzero mod gcd(m, n)
    is dismissed without the exact test; the answer is the same either way.
    """
    geo = None
    for a, b, c in itertools.combinations(cfg.points, 3):
        if prefilter and not det_mod_test(dims, a, b, c):
            continue
        if geo is None:
            geo = geometry(dims)
        if geo.collinear(a, b, c):
            return (a, b, c)
    return None


def brute_force_tau(dims: TorusDims) -> int:
    """Largest no-three-in-line subset, by trying every subset from the top down."""
    if dims.size > 16:
        raise ValueError(f"brute force is limited to 16 cells, T_{dims.m}x{dims.n} has {dims.size}")
    pts = list(dims.points())
    geo = geometry(dims)
    for k in range(len(pts), 0, -1):
        for subset in itertools.combinations(pts, k):
            if not any(geo.collinear(a, b, c) for a, b, c in itertools.combinations(subset, 3)):
                return k
    return 0


_PENCIL_TABLE_BYTES = 256 * 2**20
_CHUNK_NODES = 1 << 20


def _mask_row(indices, n_words: int) -> np.ndarray:
    row = np.zeros(n_words, dtype=np.uint64)
    for i in indices:
        row[i >> 6] |= np.uint64(1) << np.uint64(i & 63)
    return row


class _Search:
    """Tables and resumable state for one search."""

    def __init__(self, dims: TorusDims, limits: SearchLimits, translations: bool):
        self.dims = dims
        self.limits = limits
        self.translations = translations
        geo = geometry(dims)
        m, n, size = dims.m, dims.n, dims.size
        self.upper = 2 * dims.g
        words = (size + 63) // 64

        def shifted(base: int, members) -> list[int]:
            bx, by = divmod(base, n)
            return [((bx + e // n) % m) * n + (by + e % n) % n for e in members]

        # points sharing a line with 0 and e, for every difference e
        through: list[set[int]] = [set() for _ in range(size)]
        for members in geo.subgroups:
            for e in members:
                through[e].update(members)
        self.thr_ptr = np.zeros(size + 1, dtype=np.int64)
        flat: list[int] = []
        for e in range(size):
            flat.extend(sorted(through[e]))
            self.thr_ptr[e + 1] = len(flat)
        self.thr_idx = np.array(flat, dtype=np.int64)

        # coset families of the order-lcm subgroups: g lines each
        families = [members for members in geo.subgroups if len(members) == dims.l]
        self.partitions = np.zeros((len(families), dims.g, words), dtype=np.uint64)
        for p, members in enumerate(families):
            seen: set[int] = set()
            row = 0
            for base in range(size):
                if base in seen:
                    continue
                coset = shifted(base, members)
                seen.update(coset)
                self.partitions[p, row] = _mask_row(coset, words)
                row += 1

        # greedy cover of the punctured torus by lines through the origin
        punctured = [set(members) - {0} for members in geo.subgroups]
        remaining = set(range(1, size))
        cover: list[tuple[int, ...]] = []
        while remaining:
            pick = max(range(len(punctured)), key=lambda s: len(punctured[s] & remaining))
            cover.append(geo.subgroups[pick])
            remaining -= punctured[pick]
        self.use_pencils = size * max(len(cover), 1) * words * 8 <= _PENCIL_TABLE_BYTES
        if self.use_pencils:
            self.pencils = np.zeros((size, len(cover), words), dtype=np.uint64)
            for a in range(size):
                for c, members in enumerate(cover):
                    self.pencils[a, c] = _mask_row(shifted(a, members), words)
        else:
            self.pencils = np.zeros((1, 1, words), dtype=np.uint64)

        levels = self.upper + 2
        self.depth = np.zeros(1, dtype=np.int64)
        self.chosen = np.zeros(levels, dtype=np.int64)
        self.cm = np.zeros((levels, words), dtype=np.uint64)
        self.avail = np.zeros((levels, words), dtype=np.uint64)
        self.avail[0] = _mask_row(range(size), words)
        self.fresh = np.zeros(levels, dtype=np.bool_)
        self.fresh[0] = True
        self.best = np.zeros(levels, dtype=np.int64)
        self.best_k = np.zeros(1, dtype=np.int64)
        self.counters = np.zeros(2, dtype=np.int64)

    @property
    def nodes(self) -> int:
        return int(self.counters[0])

    @property
    def prunes(self) -> int:
        return int(self.counters[1])

    def run(self) -> tuple[list[int], bool]:
        """Search to completion or budget; returns (incumbent, exact)."""
        started = time.perf_counter()
        while True:
            status = _kernel.search(
                self.dims.m, self.dims.n, self.upper, self.translations,
                self.thr_ptr, self.thr_idx,
                self.partitions, self.pencils, self.use_pencils,
                self.depth, self.chosen, self.cm, self.avail, self.fresh,
                self.best, self.best_k, self.counters, _CHUNK_NODES, self.limits.max_nodes,
            )
            best = [int(i) for i in self.best[: int(self.best_k[0])]]
            if status == _kernel.DONE:
                return best, True
            if status == _kernel.AT_CAP:
                return best, False
            elapsed = time.perf_counter() - started
            log.debug("T_%dx%d: %d nodes, incumbent %d, %.1fs", self.dims.m, self.dims.n, self.nodes, len(best), elapsed)
            if elapsed > self.limits.time_budget:
                return best, False


def max_no3il(
    dims: TorusDims,
    limits: Optional[SearchLimits] = None,
    translations: bool = False,
    cap: Optional[int] = None,
) -> TauResult:
    """Exact tau(T_{m x n}) with a witness.

    ``translations`` restricts the search to sets through the origin.  When
    the budget runs out the incumbent is returned with ``exact=False``.
    """
    limits = limits or SearchLimits()
    cap = max_cells() if cap is None else cap
    if dims.size > cap:
        raise ValueError(f"T_{dims.m}x{dims.n} has {dims.size} cells, enumeration cap is {cap}")
    started = time.perf_counter()
    search = _Search(dims, limits, translations)
    best, exact = search.run()
    witness = Configuration(dims, [dims.point(i) for i in best])
    stats = SearchStats(search.nodes, search.prunes, (time.perf_counter() - started) * 1000.0)
    violation = verify_no3il(dims, witness)
    if violation is not None:
        raise AssertionError(f"search produced a collinear triple {violation}")
    return TauResult(dims, len(best), exact, witness, EXACT_SEARCH, stats)
