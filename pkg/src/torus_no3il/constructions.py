"""Extremal no-three-in-line sets and the closed-form dispatch for tau."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .lines import _check_odd_prime
from .torus import Configuration, TorusDims

THM_GCD1 = "Thm1.2(1)"
THM_GCD2 = "Thm1.2(2)"
THM_PARABOLA = "Thm1.2(3a)"
THM_CONIC = "Thm1.2(3b)"
EXACT_SEARCH = "exact-search"
LIFT_LOWER_BOUND = "lift-lower-bound"

PROVENANCES = (THM_GCD1, THM_GCD2, THM_PARABOLA, THM_CONIC, EXACT_SEARCH, LIFT_LOWER_BOUND)


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    elapsed_ms: float = 0.0


@dataclass
class TauResult:
    """tau(T_{m x n}) or a lower bound on it, with a witness set.

    ``exact`` is False when ``tau`` is only the size of the witness (an
    unresolved case or an exhausted search budget).
    """

    dims: TorusDims
    tau: int
    exact: bool
    witness: Configuration
    provenance: str
    stats: SearchStats = field(default_factory=SearchStats)

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.tau > 2 * self.dims.g:
            raise AssertionError(f"tau {self.tau} exceeds the 2*gcd bound on T_{self.dims.m}x{self.dims.n}")
        if self.exact and len(self.witness) != self.tau:
            raise AssertionError("exact tau must match witness size")

    def to_json(self) -> dict:
        return {
            "m": self.dims.m,
            "n": self.dims.n,
            "tau": self.tau,
            "exact": self.exact,
            "provenance": self.provenance,
            "witness": [[p.x, p.y] for p in self.witness],
            "nodes": self.stats.nodes,
            "prunes": self.stats.prunes,
            "elapsed_ms": round(self.stats.elapsed_ms, 3),
        }


def is_quadratic_residue(q: int, p: int) -> bool:
    """Euler's criterion: q^((p-1)/2) = 1 (mod p)."""
    _check_odd_prime(p)
    if q % p == 0:
        raise ValueError("0 is neither a residue nor a nonresidue")
    return pow(q, (p - 1) // 2, p) == 1


def conic_parameter(p: int) -> int:
    """q for x^2 + q y^2 = 1: the least nonresidue if p = 1 (mod 4), else 1."""
    _check_odd_prime(p)
    if p % 4 == 3:
        return 1
    return next(q for q in range(2, p) if not is_quadratic_residue(q, p))


def conic_points(p: int) -> Configuration:
    """{(x, y) : x^2 + q y^2 = 1 (mod p)} on T_{p x p}; has p + 1 points."""
    q = conic_parameter(p)
    pts = [(x, y) for x in range(p) for y in range(p) if (x * x + q * y * y) % p == 1]
    return Configuration(TorusDims(p, p), pts)


def construct_gcd1(dims: TorusDims) -> Configuration:
    if dims.g != 1:
        raise ValueError(f"gcd({dims.m}, {dims.n}) = {dims.g}, expected 1")
    return Configuration(dims, [(0, 0), (0, 1)])


def construct_gcd2(dims: TorusDims) -> Configuration:
    if dims.g != 2:
        raise ValueError(f"gcd({dims.m}, {dims.n}) = {dims.g}, expected 2")
    return Configuration(dims, [(0, 0), (0, 1), (1, 0), (1, 1)])


def construct_parabola_pair(dims: TorusDims) -> Configuration:
    """The 2p points (i, i^2 p) and (i, i^2 p + 1), i < p.

    Built on the y axis when gcd(p*m, n) = p^2, otherwise with coordinates
    swapped when gcd(m, p*n) = p^2.
    """
    p, m, n = dims.g, dims.m, dims.n
    try:
        _check_odd_prime(p)
    except ValueError:
        raise ValueError(f"gcd({m}, {n}) = {p} is not an odd prime") from None
    if gcd(p * m, n) == p * p:
        pts = [(i, (i * i * p + e) % n) for i in range(p) for e in (0, 1)]
    elif gcd(m, p * n) == p * p:
        pts = [((i * i * p + e) % m, i) for i in range(p) for e in (0, 1)]
    else:
        raise ValueError(
            f"neither gcd(p*m, n) = {gcd(p * m, n)} nor gcd(m, p*n) = {gcd(m, p * n)} equals p^2 = {p * p}"
        )
    return Configuration(dims, pts)


def lift_set(dims: TorusDims, small: Configuration) -> Configuration:
    """Embed a configuration of T_{g x g} into T_{m x n} unchanged."""
    if small.dims != TorusDims(dims.g, dims.g):
        raise ValueError(f"expected a configuration on T_{dims.g}x{dims.g}")
    return Configuration(dims, small.points)


def _is_odd_prime(p: int) -> bool:
    try:
        _check_odd_prime(p)
    except ValueError:
        return False
    return True


def theorem_case(dims: TorusDims) -> Optional[str]:
    """Which closed-form case covers ``dims``, or None."""
    p, m, n = dims.g, dims.m, dims.n
    if p == 1:
        return THM_GCD1
    if p == 2:
        return THM_GCD2
    if not _is_odd_prime(p):
        return None
    if gcd(p * m, n) == p * p or gcd(m, p * n) == p * p:
        return THM_PARABOLA
    if gcd(p * m, n) == p and gcd(m, p * n) == p:
        return THM_CONIC
    return None


def theorem_value(dims: TorusDims) -> Optional[int]:
    case = theorem_case(dims)
    p = dims.g
    return {THM_GCD1: 2, THM_GCD2: 4, THM_PARABOLA: 2 * p, THM_CONIC: p + 1}.get(case)


def construct_max(dims: TorusDims) -> TauResult:
    """tau with a witness whenever a closed-form case applies.

    Otherwise the result is a lift of the best small-torus witness available
    and is flagged as a lower bound only.
    """
    from .solver import verify_no3il

    case = theorem_case(dims)
    witness = _lower_bound_witness(dims) if case is None else _closed_form_witness(dims)
    violation = verify_no3il(dims, witness)
    if violation is not None:
        raise AssertionError(f"construction for T_{dims.m}x{dims.n} has collinear triple {violation}")
    if case is None:
        return TauResult(dims, len(witness), False, witness, LIFT_LOWER_BOUND)
    assert len(witness) == theorem_value(dims)
    return TauResult(dims, len(witness), True, witness, case)


def _divisors(k: int) -> list[int]:
    return [d for d in range(2, k + 1) if k % d == 0]


def _closed_form_witness(dims: TorusDims) -> Configuration:
    case = theorem_case(dims)
    if case == THM_GCD1:
        return construct_gcd1(dims)
    if case == THM_GCD2:
        return construct_gcd2(dims)
    if case == THM_PARABOLA:
        return construct_parabola_pair(dims)
    if case == THM_CONIC:
        return lift_set(dims, conic_points(dims.g))
    raise ValueError(f"no closed form for T_{dims.m}x{dims.n}")


def _lower_bound_witness(dims: TorusDims) -> Configuration:
    # reduction T_{m x n} -> T_{a x b} (a | m, b | n) maps lines onto lines,
    # so a set that is free of collinear triples downstairs stays free when
    # embedded unchanged
    best: Optional[TorusDims] = None
    for a in _divisors(dims.m):
        for b in _divisors(dims.n):
            sub = TorusDims(a, b)
            value = theorem_value(sub)
            if value is not None and (best is None or value > theorem_value(best)):
                best = sub
    assert best is not None  # (r, r) qualifies for every prime r dividing g
    return Configuration(dims, _closed_form_witness(best).points)
