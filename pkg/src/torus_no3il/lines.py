"""Lines on the discrete torus.

A line of T_{m x n} is the image of an integer line {(a + Uk, b + Vk)} with
gcd(U, V) = 1.  On the torus it is the coset ``base + <(U mod m, V mod n)>``
of a cyclic subgroup, so the point set depends only on the residue direction.
A residue direction (u, v) admits a coprime integer lift exactly when
gcd(u, v, gcd(m, n)) = 1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import NamedTuple, Sequence, Union

from .torus import TorusDims, TorusPoint, project_pi, project_rho

DEFAULT_MAX_CELLS = 4096

PencilKey = Union[int, str]


class Direction(NamedTuple):
    """A residue direction (u mod m, v mod n)."""

    u: int
    v: int


def max_cells() -> int:
    """Enumeration cap; ``NO3IL_MAX_CELLS`` overrides the default."""
    raw = os.environ.get("NO3IL_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    cap = int(raw)
    if cap <= 0:
        raise ValueError("NO3IL_MAX_CELLS must be positive")
    return cap


def is_valid_direction(dims: TorusDims, d: tuple[int, int]) -> bool:
    u, v = d[0] % dims.m, d[1] % dims.n
    if (u, v) == (0, 0):
        return False
    return gcd(gcd(u, v), dims.g) == 1


def _check_direction(dims: TorusDims, d: tuple[int, int]) -> Direction:
    if not is_valid_direction(dims, d):
        raise ValueError(
            f"direction {tuple(d)} on T_{dims.m}x{dims.n} has no coprime integer lift"
        )
    return Direction(d[0] % dims.m, d[1] % dims.n)


def coprime_representative(dims: TorusDims, d: tuple[int, int]) -> tuple[int, int]:
    """A coprime integer pair (U, V) with U = u (mod m), V = v (mod n).

    Scans U = u, u + m, u + 2m, ... and for each U the first U + 1 values
    V = v, v + n, ...; residues of V modulo the primes of U repeat within
    that window, so a U with no hit is skipped for good.
    """
    u, v = _check_direction(dims, d)
    for i in range(dims.n * dims.m + 1):
        U = u + i * dims.m
        for j in range(U + 2):
            V = v + j * dims.n
            if gcd(U, V) == 1:
                return U, V
    raise RuntimeError(f"no coprime lift found for {tuple(d)} on T_{dims.m}x{dims.n}")


def direction_period(dims: TorusDims, d: tuple[int, int]) -> int:
    """Order of (u, v) in Z_m x Z_n."""
    u, v = d[0] % dims.m, d[1] % dims.n
    pm = dims.m // gcd(u, dims.m)
    pn = dims.n // gcd(v, dims.n)
    return pm * pn // gcd(pm, pn)


@dataclass(frozen=True, eq=False)
class TorusLine:
    """A torus line.  Equality and hashing depend only on the point set."""

    dims: TorusDims
    base: TorusPoint
    dir: Direction
    period: int
    points: tuple[TorusPoint, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusLine):
            return NotImplemented
        return self.dims == other.dims and self.points == other.points

    def __hash__(self) -> int:
        return hash((self.dims, self.points))

    def __contains__(self, p: object) -> bool:
        return p in self.point_set

    def __len__(self) -> int:
        return len(self.points)

    @property
    def point_set(self) -> frozenset[TorusPoint]:
        return frozenset(self.points)

    def to_json(self) -> dict:
        return {
            "base": [self.base.x, self.base.y],
            "dir": [self.dir.u, self.dir.v],
            "period": self.period,
            "points": [[p.x, p.y] for p in self.points],
        }


def line_through(dims: TorusDims, base: tuple[int, int], d: tuple[int, int]) -> TorusLine:
    """The line through ``base`` with residue direction ``d``."""
    direction = _check_direction(dims, d)
    base = project_pi(dims, base)
    period = direction_period(dims, direction)
    pts = {
        TorusPoint((base.x + k * direction.u) % dims.m, (base.y + k * direction.v) % dims.n)
        for k in range(period)
    }
    assert len(pts) == period
    return TorusLine(dims, base, direction, period, tuple(sorted(pts)))


def diagonal_line(dims: TorusDims, s: int) -> TorusLine:
    """L_s = {pi(k, k - s)}, for 0 <= s < gcd(m, n)."""
    if not 0 <= s < dims.g:
        raise ValueError(f"diagonal index {s} outside [0, {dims.g})")
    return line_through(dims, project_pi(dims, (0, -s)), (1, 1))


def verify_diagonal_partition(dims: TorusDims) -> bool:
    """Whether the g diagonal lines are pairwise disjoint and cover the torus."""
    seen: set[TorusPoint] = set()
    for s in range(dims.g):
        pts = diagonal_line(dims, s).point_set
        if seen & pts:
            return False
        seen |= pts
    return len(seen) == dims.size


class _Geometry:
    """Cyclic subgroups of Z_m x Z_n with a valid generator, as point-index sets.

    ``diff_subgroups[i]`` is a bitmask over subgroup ids: bit ``s`` is set when
    point ``i`` (read as a difference vector) lies in subgroup ``s``.  Three
    distinct points a, b, c are collinear iff b - a and c - a share a subgroup.
    """

    def __init__(self, dims: TorusDims):
        m, n = dims.m, dims.n
        self.dims = dims
        self.generators: list[Direction] = []
        self.subgroups: list[tuple[int, ...]] = []
        diff = [0] * (m * n)
        covered = bytearray(m * n)
        for u in range(m):
            for v in range(n):
                if covered[u * n + v] or not is_valid_direction(dims, (u, v)):
                    continue
                order = direction_period(dims, (u, v))
                sid = len(self.subgroups)
                bit = 1 << sid
                members = []
                for k in range(order):
                    i = (k * u % m) * n + (k * v % n)
                    members.append(i)
                    diff[i] |= bit
                    if gcd(k, order) == 1:
                        covered[i] = 1
                self.generators.append(Direction(u, v))
                self.subgroups.append(tuple(sorted(members)))
        self.diff_subgroups = diff

    def difference(self, a: tuple[int, int], b: tuple[int, int]) -> int:
        """Index of b - a."""
        m, n = self.dims.m, self.dims.n
        return ((b[0] - a[0]) % m) * n + (b[1] - a[1]) % n

    def collinear(self, a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> bool:
        return bool(self.diff_subgroups[self.difference(a, b)] & self.diff_subgroups[self.difference(a, c)])

    def translate(self, members: Sequence[int], base: int) -> tuple[int, ...]:
        m, n = self.dims.m, self.dims.n
        bx, by = divmod(base, n)
        return tuple(sorted(((bx + i // n) % m) * n + (by + i % n) % n for i in members))

    def line_masks(self) -> list[int]:
        """Every line of the torus as a bitmask over point indices."""
        out = []
        size = self.dims.size
        for members in self.subgroups:
            seen = bytearray(size)
            for base in range(size):
                if seen[base]:
                    continue
                mask = 0
                for i in self.translate(members, base):
                    seen[i] = 1
                    mask |= 1 << i
                out.append(mask)
        return out


@lru_cache(maxsize=64)
def geometry(dims: TorusDims) -> _Geometry:
    return _Geometry(dims)


def enumerate_lines(dims: TorusDims, cap: int | None = None) -> tuple[TorusLine, ...]:
    """All distinct lines of T_{m x n}, sorted by point list.

    Raises ``ValueError`` when m*n exceeds ``cap`` (default: :func:`max_cells`).
    """
    cap = max_cells() if cap is None else cap
    if dims.size > cap:
        raise ValueError(f"T_{dims.m}x{dims.n} has {dims.size} cells, enumeration cap is {cap}")
    geo = geometry(dims)
    lines = []
    for gen, members in zip(geo.generators, geo.subgroups):
        seen: set[int] = set()
        for base in range(dims.size):
            if base in seen:
                continue
            idx = geo.translate(members, base)
            seen.update(idx)
            pts = tuple(dims.point(i) for i in idx)
            lines.append(TorusLine(dims, pts[0], gen, len(pts), pts))
    lines.sort(key=lambda ln: ln.points)
    return tuple(lines)


def torus_collinear(dims: TorusDims, a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> bool:
    """Whether three distinct torus points lie on a common line."""
    a, b, c = (project_pi(dims, p) for p in (a, b, c))
    if a == b or a == c or b == c:
        raise ValueError("collinearity is defined for three distinct points")
    return geometry(dims).collinear(a, b, c)


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or any(p % r == 0 for r in range(3, int(p**0.5) + 1, 2)):
        raise ValueError(f"{p} is not an odd prime")


def pencil_through_origin(p: int) -> dict[PencilKey, TorusLine]:
    """The p + 1 lines of T_{p x p} through the origin.

    Keys are the slopes 0..p-1 for {(k, beta k)} and ``"infinity"`` for the
    column {(0, k)}.
    """
    _check_odd_prime(p)
    dims = TorusDims(p, p)
    pencil: dict[PencilKey, TorusLine] = {
        beta: line_through(dims, (0, 0), (1, beta)) for beta in range(p)
    }
    pencil["infinity"] = line_through(dims, (0, 0), (0, 1))
    return pencil


def rho_preimage(dims: TorusDims, small: frozenset[tuple[int, int]] | set) -> frozenset[TorusPoint]:
    """All points of T_{m x n} whose reduction mod g lands in ``small``."""
    return frozenset(t for t in dims.points() if project_rho(dims, t) in small)


def _normalize_pencil_key(which: PencilKey, p: int) -> PencilKey:
    if isinstance(which, str):
        key = which.lower()
        if key in ("inf", "infinity"):
            return "infinity"
        if key == "zero":
            return 0
        raise ValueError(f"unknown pencil line {which!r}")
    if not 0 <= which < p:
        raise ValueError(f"slope {which} outside [0, {p})")
    return which


def preimage_line(dims: TorusDims, which: PencilKey) -> TorusLine:
    """The line of T_{m x n} equal to the full rho-preimage of a pencil line.

    ``which`` is a slope 1..p-1, ``0`` (or ``"zero"``) for the horizontal
    line, or ``"infinity"`` for the vertical one, where p = gcd(m, n) must be
    an odd prime.  Slopes and the horizontal case need gcd(p*m, n) = p; the
    vertical case needs gcd(m, p*n) = p.
    """
    p = dims.g
    try:
        _check_odd_prime(p)
    except ValueError:
        raise ValueError(f"gcd({dims.m}, {dims.n}) = {p} is not an odd prime") from None
    key = _normalize_pencil_key(which, p)
    m, n = dims.m, dims.n
    if key == "infinity":
        if gcd(m, p * n) != p:
            raise ValueError(f"hypothesis gcd(m, p*n) = p fails: gcd({m}, {p * n}) = {gcd(m, p * n)}")
        return line_through(dims, (0, 0), (p, 1))
    if gcd(p * m, n) != p:
        raise ValueError(f"hypothesis gcd(p*m, n) = p fails: gcd({p * m}, {n}) = {gcd(p * m, n)}")
    if key == 0:
        return line_through(dims, (0, 0), (1, p))
    alpha = find_alpha(dims, key)
    return line_through(dims, (0, 0), (1, alpha))


def find_alpha(dims: TorusDims, beta: int) -> int:
    """Smallest alpha = beta (mod p), alpha > 0, with gcd(alpha*m, n) = p."""
    p, m, n = dims.g, dims.m, dims.n
    for i in range(n * p):
        alpha = beta + i * p
        if gcd(alpha * m, n) == p:
            return alpha
    raise RuntimeError(f"no alpha = {beta} (mod {p}) with gcd(alpha*{m}, {n}) = {p} within {n * p} steps")
