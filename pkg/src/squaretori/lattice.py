"""Rank-2 sublattices of Z^2 viewed as square-tiled tori.

A sublattice arrives as a pair of integer generator vectors and is
canonicalized to cylinder coordinates (width, height, twist): the unique
basis (width, 0), (twist, height) with 0 <= twist < width. Cyclicity of
the quotient group Z^2/L can be decided four ways -- twist gcd, content
of any generating pair, Smith invariant factors, or the permutation pair
of the tiled torus -- and the routes are kept computationally independent
so they can check each other.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .arith import BudgetError, divisors, factorize, sigma

# enumerate_lattices refuses an index whose total triple count exceeds this
DEFAULT_MAX_TRIPLES = 10_000_000


class RankError(ValueError):
    """Generators fail to span a rank-2 sublattice (zero determinant)."""


@dataclass(frozen=True)
class GeneratorPair:
    """Two integer vectors spanning a finite-index sublattice of Z^2."""

    u: tuple[int, int]
    v: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", (int(self.u[0]), int(self.u[1])))
        object.__setattr__(self, "v", (int(self.v[0]), int(self.v[1])))
        if self.u[0] * self.v[1] - self.u[1] * self.v[0] == 0:
            raise RankError(
                f"generators {self.u} and {self.v} are linearly dependent"
            )


@dataclass(frozen=True)
class HnfLattice:
    """Cylinder coordinates of a square-tiled torus.

    width and height are the cylinder circumference and height, twist the
    horizontal offset used to glue top to bottom; the tiled torus has
    width * height squares.
    """

    width: int
    height: int
    twist: int

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("width and height must be positive")
        if not 0 <= self.twist < self.width:
            raise ValueError("twist must satisfy 0 <= twist < width")

    @property
    def index(self) -> int:
        """Index of the sublattice, i.e. the number of squares."""
        return self.width * self.height


@dataclass(frozen=True)
class QuotientShape:
    """Invariant factors (d1, d2), d1 | d2, of the quotient group Z^2/L."""

    d1: int
    d2: int

    def __post_init__(self) -> None:
        if self.d1 < 1 or self.d2 < 1:
            raise ValueError("invariant factors must be positive")
        if self.d2 % self.d1 != 0:
            raise ValueError(f"d1={self.d1} must divide d2={self.d2}")

    @property
    def is_cyclic(self) -> bool:
        """The quotient Z/d1 + Z/d2 is cyclic exactly when d1 = 1."""
        return self.d1 == 1


def lattice_index(g: GeneratorPair) -> int:
    """Index of the sublattice in Z^2: |det(u, v)|."""
    return abs(g.u[0] * g.v[1] - g.u[1] * g.v[0])


def content(g: GeneratorPair) -> int:
    """gcd of all four generator coordinates (a basis-independent invariant).

    Its square always divides the index: dividing both generators by the
    content leaves an integer matrix.
    """
    return gcd(g.u[0], g.u[1], g.v[0], g.v[1])


def hnf_reduce(g: GeneratorPair) -> HnfLattice:
    """Canonical cylinder coordinates of the sublattice spanned by g.

    Euclidean column reduction: run the gcd algorithm on the second
    coordinates until one generator is horizontal, normalize signs so
    width and height are positive, then reduce the twist into [0, width).
    The result depends only on the lattice, not on the basis.
    """
    a1, a2 = g.u
    b1, b2 = g.v
    while b2 != 0:
        q = a2 // b2
        a1, a2 = a1 - q * b1, a2 - q * b2
        a1, a2, b1, b2 = b1, b2, a1, a2
    # b = (b1, 0) is horizontal; a2 = +-gcd of the original second coords
    width = abs(b1)
    height = abs(a2)
    twist = (a1 if a2 > 0 else -a1) % width
    return HnfLattice(width, height, twist)


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    """(g, s, t) with s*x + t*y = g = gcd(x, y) >= 0."""
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_shape(g: GeneratorPair) -> QuotientShape:
    """Invariant factors of Z^2/L by integer row and column reduction.

    Each pass clears one off-diagonal entry with a single unimodular
    Bezout mix, pulling the pivot down to a gcd; a final fold restores
    d1 | d2 when needed. Works directly on the generator matrix without
    reusing content() or lattice_index(), so it serves as an independent
    cyclicity oracle; d1 = content and d1*d2 = index are checked as
    properties in the tests.
    """
    a, b = g.u[0], g.v[0]
    c, d = g.u[1], g.v[1]
    while True:
        if c != 0:
            if a != 0 and c % a == 0:  # plain row subtraction, pivot intact
                c, d = 0, d - (c // a) * b
            else:  # Bezout row mix; pivot strictly shrinks to gcd(a, c)
                gg, s, t = _xgcd(a, c)
                a, b, c, d = gg, s * b + t * d, 0, (a // gg) * d - (c // gg) * b
        if b != 0:
            if a != 0 and b % a == 0:  # plain column subtraction
                b, d = 0, d - (b // a) * c
            else:  # Bezout column mix
                gg, s, t = _xgcd(a, b)
                a, b, c, d = gg, 0, s * c + t * d, (a // gg) * d - (b // gg) * c
        if b == 0 and c == 0:
            a, d = abs(a), abs(d)
            if d % a == 0:
                return QuotientShape(a, d)
            c = d  # fold the second invariant back in and reduce again


def is_cyclic(lat: HnfLattice) -> bool:
    """True when the quotient group is cyclic: gcd(width, height, twist) = 1."""
    return gcd(lat.width, lat.height, lat.twist) == 1


def is_primitive(g: GeneratorPair) -> bool:
    """True when the sublattice is primitive, i.e. its content is 1."""
    return content(g) == 1


def enumerate_lattices(
    n: int, max_triples: int = DEFAULT_MAX_TRIPLES
) -> Iterator[HnfLattice]:
    """All sublattices of index n as cylinder triples, lazily.

    Yields exactly sigma(n) lattices, ordered by ascending width and then
    ascending twist; filtering with is_cyclic leaves psi(n) of them.
    Raises BudgetError up front when sigma(n) exceeds max_triples.
    """
    f = factorize(n)
    try:
        total = sigma(f)
    except OverflowError as exc:
        raise BudgetError(f"sigma({n}) overflows; enumeration refused") from exc
    if total > max_triples:
        raise BudgetError(
            f"enumerating index {n} needs {total} triples, over the "
            f"budget of {max_triples}"
        )

    def generate() -> Iterator[HnfLattice]:
        for width in divisors(f):
            height = n // width
            for twist in range(width):
                yield HnfLattice(width, height, twist)

    return generate()


def to_permutation_pair(
    lat: HnfLattice, max_squares: int = DEFAULT_MAX_TRIPLES
) -> tuple[list[int], list[int]]:
    """Permutation encoding of the tiled torus on its squares.

    Squares sit at (i, j) with 0 <= i < width, 0 <= j < height and are
    numbered row-major (i + width * j). The horizontal permutation moves
    each square one step right around the cylinder; the vertical one moves
    up a row, wrapping the top row to the bottom shifted by the twist.
    Both are returned 0-based in image-of-index form. They commute, act
    transitively, and generate an abelian group of order width * height
    that is cyclic exactly when the lattice is.
    """
    n = lat.width * lat.height
    if n > max_squares:
        raise BudgetError(f"{n} squares exceed the budget of {max_squares}")
    w, h, t = lat.width, lat.height, lat.twist
    horizontal = [0] * n
    vertical = [0] * n
    for j in range(h):
        row = w * j
        for i in range(w):
            horizontal[row + i] = row + (i + 1) % w
            if j < h - 1:
                vertical[row + i] = row + w + i
            else:
                vertical[row + i] = (i + t) % w
    return horizontal, vertical


def permutation_pair_json(lat: HnfLattice) -> str:
    """One-line JSON wire form of the permutation pair.

    Example: {"n":4,"h":[1,0,3,2],"v":[2,3,0,1]} for the 2x2 untwisted
    torus. Keys are the square count and the two image arrays.
    """
    horizontal, vertical = to_permutation_pair(lat)
    payload = {"n": lat.width * lat.height, "h": horizontal, "v": vertical}
    return json.dumps(payload, separators=(",", ":"))


def random_unimodular(g: GeneratorPair, seed: int, steps: int) -> GeneratorPair:
    """A different basis of the same sublattice, by seeded elementary moves.

    Applies `steps` random column operations (swap the generators, negate
    one, or add a small integer multiple of one to the other), driven
    deterministically by `seed`. Every move is unimodular, so the lattice,
    its index, and its content are unchanged.
    """
    rng = random.Random(seed)
    u = list(g.u)
    v = list(g.v)
    for _ in range(steps):
        move = rng.randrange(3)
        if move == 0:
            u, v = v, u
        elif move == 1:
            if rng.randrange(2):
                u = [-u[0], -u[1]]
            else:
                v = [-v[0], -v[1]]
        else:
            k = rng.choice((-3, -2, -1, 1, 2, 3))
            if rng.randrange(2):
                u = [u[0] + k * v[0], u[1] + k * v[1]]
            else:
                v = [v[0] + k * u[0], v[1] + k * u[1]]
    return GeneratorPair((u[0], u[1]), (v[0], v[1]))
