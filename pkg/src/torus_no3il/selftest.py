"""Quick consistency checks run by ``no3il selftest``."""

from __future__ import annotations

import itertools
from math import gcd
from typing import Iterator, NamedTuple

from .constructions import construct_max, theorem_value
from .lines import torus_collinear, verify_diagonal_partition
from .solver import brute_force_tau, max_no3il, verify_no3il
from .torus import TorusDims

GOLDEN = {
    (2, 3): 2,
    (2, 2): 4,
    (4, 6): 4,
    (3, 3): 4,
    (3, 6): 4,
    (5, 5): 6,
    (3, 9): 6,
    (9, 3): 6,
    (6, 9): 6,
}


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str


def _projected_triples(m: int, n: int) -> set:
    lcm = m * n // gcd(m, n)
    bound = 2 * lcm
    residues = {
        (U % m, V % n)
        for U in range(-bound, bound + 1)
        for V in range(-bound, bound + 1)
        if gcd(U, V) == 1
    }
    triples = set()
    for u, v in residues:
        for a in range(m):
            for b in range(n):
                line = sorted({((a + u * k) % m, (b + v * k) % n) for k in range(lcm)})
                triples.update(itertools.combinations(line, 3))
    return triples


def run_checks() -> Iterator[Check]:
    for (m, n), tau in GOLDEN.items():
        dims = TorusDims(m, n)
        built = construct_max(dims)
        searched = max_no3il(dims)
        ok = (
            theorem_value(dims) == tau
            and built.exact
            and built.tau == tau
            and searched.exact
            and searched.tau == tau
            and verify_no3il(dims, built.witness) is None
        )
        yield Check(f"golden T_{m}x{n}", ok, f"expected {tau}, construction {built.tau}, search {searched.tau}")

    bad = [(m, n) for m in range(2, 17) for n in range(2, 17) if not verify_diagonal_partition(TorusDims(m, n))]
    yield Check("diagonal partition 2..16", not bad, f"failures: {bad}" if bad else "all hold")

    mismatches = []
    for m in range(2, 5):
        for n in range(2, 5):
            dims = TorusDims(m, n)
            oracle = _projected_triples(m, n)
            for t in itertools.combinations(dims.points(), 3):
                if torus_collinear(dims, *t) != (t in oracle):
                    mismatches.append((m, n, t))
    yield Check("collinearity vs projection oracle 2..4", not mismatches, f"{len(mismatches)} mismatches")

    diffs = []
    for m in range(2, 7):
        for n in range(2, 7):
            if m * n <= 12:
                dims = TorusDims(m, n)
                if max_no3il(dims).tau != brute_force_tau(dims):
                    diffs.append((m, n))
    yield Check("search vs brute force, mn <= 12", not diffs, f"failures: {diffs}" if diffs else "all agree")
