"""Residue arithmetic and point geometry on the discrete torus Z_m x Z_n.

All reductions use the smallest non-negative remainder, so negative
coordinates normalize the way Python's ``%`` already does.  Python integers
are unbounded, which keeps determinant arithmetic exact for any lift size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, NamedTuple, Optional


class PlanePoint(NamedTuple):
    """A point of Z x Z."""

    x: int
    y: int


class TorusPoint(NamedTuple):
    """A residue pair.  Tuple ordering is the lexicographic point order."""

    x: int
    y: int


@dataclass(frozen=True)
class TorusDims:
    """The torus T_{m x n}: ``m`` columns (x residues), ``n`` rows (y residues)."""

    m: int
    n: int
    g: int = field(init=False, repr=False, compare=False)
    l: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("torus dimensions must be integers")
        if self.m < 2 or self.n < 2:
            raise ValueError(f"torus dimensions must exceed 1, got {self.m}x{self.n}")
        g = gcd(self.m, self.n)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "l", self.m * self.n // g)

    @property
    def size(self) -> int:
        return self.m * self.n

    def contains(self, p: tuple[int, int]) -> bool:
        return 0 <= p[0] < self.m and 0 <= p[1] < self.n

    def points(self) -> Iterator[TorusPoint]:
        """All points in lexicographic order."""
        for x in range(self.m):
            for y in range(self.n):
                yield TorusPoint(x, y)

    def index(self, p: tuple[int, int]) -> int:
        """Position of ``p`` in the lexicographic order."""
        return p[0] * self.n + p[1]

    def point(self, i: int) -> TorusPoint:
        return TorusPoint(*divmod(i, self.n))


@dataclass(frozen=True)
class Configuration:
    """A finite set of distinct torus points, stored sorted."""

    dims: TorusDims
    points: tuple[TorusPoint, ...]

    def __init__(self, dims: TorusDims, points: Iterable[tuple[int, int]]):
        pts = [TorusPoint(int(p[0]), int(p[1])) for p in points]
        for p in pts:
            if not dims.contains(p):
                raise ValueError(f"point {tuple(p)} outside T_{dims.m}x{dims.n}")
        if len(set(pts)) != len(pts):
            raise ValueError("configuration contains duplicate points")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "points", tuple(sorted(pts)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[TorusPoint]:
        return iter(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.points


def as_dims(m: int | TorusDims, n: Optional[int] = None) -> TorusDims:
    if isinstance(m, TorusDims):
        return m
    return TorusDims(m, n)


def crt(a: int, m: int, b: int, n: int) -> Optional[int]:
    """Solve x = a (mod m), x = b (mod n).

    Returns the unique solution in ``[0, lcm(m, n))``, or ``None`` when
    ``a - b`` is not divisible by ``gcd(m, n)``.
    """
    if m < 1 or n < 1:
        raise ValueError("moduli must be positive")
    g = gcd(m, n)
    if (a - b) % g:
        return None
    lcm = m // g * n
    m_g, n_g = m // g, n // g
    # x = a + m*t with m*t = b - a (mod n)  <=>  (m/g) t = (b-a)/g (mod n/g)
    t = ((b - a) // g) * pow(m_g, -1, n_g) % n_g if n_g > 1 else 0
    return (a + m * t) % lcm


def project_pi(dims: TorusDims, p: tuple[int, int]) -> TorusPoint:
    """Reduce a plane point onto the torus."""
    return TorusPoint(p[0] % dims.m, p[1] % dims.n)


def project_rho(dims: TorusDims, p: tuple[int, int]) -> TorusPoint:
    """Reduce a point of T_{m x n} onto T_{g x g}, g = gcd(m, n)."""
    if dims.g < 2:
        raise ValueError(f"T_{dims.m}x{dims.n} has gcd 1; T_1x1 is not a torus")
    return TorusPoint(p[0] % dims.g, p[1] % dims.g)


def det3(a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> int:
    """Determinant of [[1, 1, 1], [ax, bx, cx], [ay, by, cy]]; zero iff collinear in Z^2."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])


def det_mod_test(dims: TorusDims, a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> bool:
    """Necessary condition for torus collinearity: det3 vanishes modulo gcd(m, n).

    A ``True`` result does not imply collinearity.
    """
    return det3(a, b, c) % dims.g == 0


def diagonal_index(dims: TorusDims, a: tuple[int, int]) -> int:
    """Index s of the diagonal line L_s = {(k, k - s)} containing ``a``."""
    return (a[0] - a[1]) % dims.g
