"""
Link patterns: involutions of {1..n} drawn as arcs over a line of points.

A pattern in I_{n,k} has n points and k pairwise disjoint arcs (i, j) with
i < j. Points are 1-based everywhere in the public API.

>>> s = parse("n=9 (2,6)(3,8)(4,5)")
>>> crossings(s), bridges(s)
(1, 1)
>>> str(s)
'n=9 (2,6)(3,8)(4,5)'
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .errors import (
    DegenerateArcError,
    DuplicateEndpointError,
    EndpointRangeError,
    IncomparableError,
    MalformedTextError,
    NotMaximalError,
    PatternError,
)

Arc = tuple[int, int]


@dataclass(frozen=True)
class LinkPattern:
    """An element of I_{n,k}. Arcs are kept sorted by left endpoint."""

    n: int
    arcs: tuple[Arc, ...] = ()
    _mate: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise PatternError(f"point count must be non-negative, got {self.n}")
        norm = tuple(sorted((min(a), max(a)) for a in self.arcs))
        mate = list(range(self.n + 1))
        for i, j in norm:
            if i == j:
                raise DegenerateArcError(f"arc ({i},{j}) joins a point to itself")
            if i < 1 or j > self.n:
                raise EndpointRangeError(f"arc ({i},{j}) leaves [1,{self.n}]")
            if mate[i] != i or mate[j] != j:
                raise DuplicateEndpointError(f"arc ({i},{j}) reuses an endpoint")
            mate[i], mate[j] = j, i
        object.__setattr__(self, "arcs", norm)
        object.__setattr__(self, "_mate", tuple(mate))

    @classmethod
    def empty(cls, n: int) -> LinkPattern:
        return cls(n, ())

    @property
    def k(self) -> int:
        return len(self.arcs)

    def mate(self, p: int) -> int:
        """sigma(p); equals p for a fixed point."""
        return self._mate[p]

    def is_fixed(self, p: int) -> bool:
        return self._mate[p] == p

    @cached_property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(p for p in range(1, self.n + 1) if self._mate[p] == p)

    @property
    def left_ends(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.arcs)

    @property
    def right_ends(self) -> tuple[int, ...]:
        return tuple(sorted(j for _, j in self.arcs))

    def partner_array(self) -> np.ndarray:
        """0-based partner array, the encoding used by the numeric kernels."""
        return np.asarray(self._mate[1:], dtype=np.int8) - 1

    def __contains__(self, arc) -> bool:
        i, j = arc
        return 1 <= i <= self.n and 1 <= j <= self.n and i != j and self._mate[i] == j

    def __str__(self) -> str:
        return format_pattern(self)

    def __lt__(self, other: LinkPattern) -> bool:
        # deterministic sort key only; the orbit order is leq()
        return (self.n, self.arcs) < (other.n, other.arcs)


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(n\s*=\s*(\d+))|(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)))")


def parse(text: str) -> LinkPattern:
    """
    Parse ``[n=INT] (i,j)(i,j)...``. The ``n=`` token may appear anywhere;
    without it n is the largest endpoint.

    >>> parse("(2,6)(2,7)")
    Traceback (most recent call last):
    ...
    springer_sing.errors.DuplicateEndpointError: arc (2,7) reuses an endpoint
    """
    pos, n, arcs = 0, None, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise MalformedTextError(f"cannot parse link pattern at offset {pos}: {text[pos:pos + 12]!r}")
        if m.group(1):
            if n is not None:
                raise MalformedTextError("n= given twice")
            n = int(m.group(2))
        else:
            arcs.append((int(m.group(4)), int(m.group(5))))
        pos = m.end()
    if n is None:
        n = max((max(a) for a in arcs), default=0)
    for i, j in arcs:
        if i == j:
            raise DegenerateArcError(f"arc ({i},{j}) joins a point to itself")
        if min(i, j) < 1 or max(i, j) > n:
            raise EndpointRangeError(f"arc ({i},{j}) leaves [1,{n}]")
    return LinkPattern(n, tuple(arcs))


def format_pattern(sigma: LinkPattern) -> str:
    body = "".join(f"({i},{j})" for i, j in sigma.arcs)
    return f"n={sigma.n} {body}" if body else f"n={sigma.n}"


# ---------------------------------------------------------------------------
# statistics

def right_crossings(sigma: LinkPattern, arc: Arc) -> int:
    """Number of arcs crossing ``arc`` on the right."""
    i, j = arc
    return sum(1 for a, b in sigma.arcs if i < a < j < b)


def left_crossings(sigma: LinkPattern, arc: Arc) -> int:
    i, j = arc
    return sum(1 for a, b in sigma.arcs if a < i < b < j)


def crossings(sigma: LinkPattern) -> int:
    arcs = sigma.arcs
    c = 0
    for x, (i, j) in enumerate(arcs):
        for a, b in arcs[x + 1:]:
            # arcs sorted by left end, so i < a
            if a < j < b:
                c += 1
    return c


def arc_bridges(sigma: LinkPattern, arc: Arc) -> int:
    """Fixed points under ``arc``."""
    i, j = arc
    return sum(1 for p in range(i + 1, j) if sigma.is_fixed(p))


def point_bridges(sigma: LinkPattern, f: int) -> int:
    """Arcs passing over the fixed point ``f``."""
    return sum(1 for i, j in sigma.arcs if i < f < j)


def bridges(sigma: LinkPattern) -> int:
    return sum(arc_bridges(sigma, a) for a in sigma.arcs)


@dataclass(frozen=True)
class ArcStatistics:
    right: dict[Arc, int]
    left: dict[Arc, int]
    arc_bridges: dict[Arc, int]
    point_bridges: dict[int, int]

    @property
    def c(self) -> int:
        return sum(self.right.values())

    @property
    def b(self) -> int:
        return sum(self.arc_bridges.values())


def arc_statistics(sigma: LinkPattern) -> ArcStatistics:
    return ArcStatistics(
        right={a: right_crossings(sigma, a) for a in sigma.arcs},
        left={a: left_crossings(sigma, a) for a in sigma.arcs},
        arc_bridges={a: arc_bridges(sigma, a) for a in sigma.arcs},
        point_bridges={f: point_bridges(sigma, f) for f in sigma.fixed_points},
    )


def bc(sigma: LinkPattern) -> int:
    """b(sigma) + c(sigma), the codimension of the orbit in its fiber."""
    return bridges(sigma) + crossings(sigma)


# ---------------------------------------------------------------------------
# rank matrix and the orbit order

@dataclass(frozen=True, eq=False)
class RankMatrix:
    """Strictly upper triangular; entry (i, j) counts arcs inside [i, j]."""

    array: np.ndarray

    @property
    def n(self) -> int:
        return self.array.shape[0]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return int(self.array[i - 1, j - 1])

    def __le__(self, other: RankMatrix) -> bool:
        return bool(np.all(self.array <= other.array))

    def __eq__(self, other) -> bool:
        return isinstance(other, RankMatrix) and np.array_equal(self.array, other.array)

    __hash__ = None


def rank_matrix(sigma: LinkPattern) -> RankMatrix:
    n = sigma.n
    ind = np.zeros((n, n), dtype=np.int64)
    for i, j in sigma.arcs:
        ind[i - 1, j - 1] = 1
    # R[i, j] = sum over a >= i, b <= j of ind[a, b]
    r = np.cumsum(ind, axis=1)
    r = np.cumsum(r[::-1], axis=0)[::-1]
    return RankMatrix(np.triu(r, 1))


def leq(upsilon: LinkPattern, sigma: LinkPattern) -> bool:
    """upsilon <= sigma in the orbit-closure order."""
    if upsilon.n != sigma.n or upsilon.k != sigma.k:
        raise IncomparableError(
            f"patterns live in I_{{{upsilon.n},{upsilon.k}}} and I_{{{sigma.n},{sigma.k}}}")
    return rank_matrix(upsilon) <= rank_matrix(sigma)


def omega_o(n: int, k: int) -> LinkPattern:
    """The minimum (1,n-k+1)(2,n-k+2)...(k,n) of I_{n,k}."""
    _check_nk(n, k)
    return LinkPattern(n, tuple((i, n - k + i) for i in range(1, k + 1)))


def con(k: int) -> LinkPattern:
    """k concentric arcs on 2k points."""
    return LinkPattern(2 * k, tuple((i, 2 * k + 1 - i) for i in range(1, k + 1)))


# ---------------------------------------------------------------------------
# surgery

class Projection(NamedTuple):
    """A window of a pattern, re-indexed to start at 1.

    Absolute coordinate = local coordinate + offset.
    """

    pattern: LinkPattern
    offset: int


def projection(sigma: LinkPattern, a: int, b: int) -> Projection:
    """Arcs of sigma inside [a, b], re-indexed to 1..b-a+1.

    An empty window (b = a - 1) is allowed and yields the empty pattern.
    """
    if not (1 <= a <= b + 1 and b <= sigma.n):
        raise PatternError(f"window [{a},{b}] is not inside [1,{sigma.n}]")
    off = a - 1
    arcs = tuple((i - off, j - off) for i, j in sigma.arcs if a <= i and j <= b)
    return Projection(LinkPattern(b - a + 1, arcs), off)


def window_arcs(sigma: LinkPattern, a: int, b: int) -> tuple[Arc, ...]:
    """Arcs of sigma inside [a, b], absolute coordinates."""
    return tuple((i, j) for i, j in sigma.arcs if a <= i and j <= b)


def delete_arcs(sigma: LinkPattern, arcs: Iterable[Arc]) -> LinkPattern:
    drop = {tuple(sorted(a)) for a in arcs}
    missing = drop.difference(sigma.arcs)
    if missing:
        raise PatternError(f"arcs {sorted(missing)} are not in {sigma}")
    return LinkPattern(sigma.n, tuple(a for a in sigma.arcs if a not in drop))


def add_arc(sigma: LinkPattern, i: int, j: int) -> LinkPattern:
    if i > j:
        i, j = j, i
    if i == j or not (1 <= i and j <= sigma.n):
        raise PatternError(f"cannot add ({i},{j}) to a pattern on {sigma.n} points")
    if not (sigma.is_fixed(i) and sigma.is_fixed(j)):
        raise PatternError(f"endpoint of ({i},{j}) is not a fixed point of {sigma}")
    return LinkPattern(sigma.n, sigma.arcs + ((i, j),))


def replace_arcs(sigma: LinkPattern, remove: Iterable[Arc], add: Iterable[Arc]) -> LinkPattern:
    """Delete then add; the workhorse behind elementary moves."""
    drop = set(remove)
    return LinkPattern(sigma.n, tuple(a for a in sigma.arcs if a not in drop) + tuple(add))


def shift(sigma: LinkPattern, a: int, new_n: int | None = None) -> LinkPattern:
    """Move every point i to i+a inside a pattern on new_n points."""
    if new_n is None:
        new_n = sigma.n + a
    if a < 0 or new_n < sigma.n + a:
        raise PatternError(f"cannot shift a pattern on {sigma.n} points by {a} into {new_n} points")
    return LinkPattern(new_n, tuple((i + a, j + a) for i, j in sigma.arcs))


def concatenate(*patterns: LinkPattern) -> LinkPattern:
    """Side-by-side gluing: sigma . upsilon_{+n} . ..."""
    arcs: list[Arc] = []
    off = 0
    for p in patterns:
        arcs.extend((i + off, j + off) for i, j in p.arcs)
        off += p.n
    return LinkPattern(off, tuple(arcs))


def maximal_completion(sigma: LinkPattern, side: str = "right", times: int = 1) -> LinkPattern:
    """
    Left: prepend a point and join it to the smallest fixed point.
    Right: append a point and join the largest fixed point to it.

    >>> str(maximal_completion(parse("n=6 (2,6)(4,5)"), "right"))
    'n=7 (2,6)(3,7)(4,5)'
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    for _ in range(times):
        fixed = sigma.fixed_points
        if not fixed:
            raise PatternError(f"{sigma} has no fixed point to complete")
        if side == "left":
            m1 = fixed[0]
            sigma = LinkPattern(sigma.n + 1, tuple((i + 1, j + 1) for i, j in sigma.arcs) + ((1, m1 + 1),))
        else:
            sigma = LinkPattern(sigma.n + 1, sigma.arcs + ((fixed[-1], sigma.n + 1),))
    return sigma


def completion(sigma: LinkPattern, left: int, right: int) -> LinkPattern:
    """(left, right)-maximal completion."""
    if left:
        sigma = maximal_completion(sigma, "left", left)
    if right:
        sigma = maximal_completion(sigma, "right", right)
    return sigma


def contract_arc(sigma: LinkPattern, arc: Arc) -> LinkPattern:
    """Remove ``arc`` together with its two endpoints and close the gaps."""
    i, j = sorted(arc)
    if (i, j) not in sigma:
        raise PatternError(f"arc ({i},{j}) is not in {sigma}")

    def relabel(d: int) -> int:
        return d if d < i else (d - 1 if d < j else d - 2)

    return LinkPattern(sigma.n - 2, tuple((relabel(a), relabel(b)) for a, b in sigma.arcs if (a, b) != (i, j)))


# ---------------------------------------------------------------------------
# maximal patterns

def is_maximal(sigma: LinkPattern) -> bool:
    """No crossings and no fixed point under an arc."""
    return crossings(sigma) == 0 and bridges(sigma) == 0


def tau_star(sigma: LinkPattern) -> frozenset[int]:
    return frozenset(i for i, j in sigma.arcs if j == i + 1)


def rho(sigma: LinkPattern) -> int:
    if not is_maximal(sigma):
        raise NotMaximalError(f"rho is defined on maximal patterns only; {sigma} is not maximal")
    t = len(tau_star(sigma))
    if sigma.n == 0:
        return t
    ends = sum(1 for p in {1, sigma.n} if sigma.is_fixed(p))
    if sigma.is_fixed(1) and sigma.is_fixed(sigma.n):
        return t + 2
    if ends == 1 or (1, sigma.n) in sigma:
        return t + 1
    return t


# ---------------------------------------------------------------------------
# enumeration

def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0 or 2 * k > n:
        raise PatternError(f"I_{{{n},{k}}} is empty: need 0 <= 2k <= n")


def count_patterns(n: int, k: int) -> int:
    """|I_{n,k}| = n! / (2^k k! (n-2k)!)."""
    _check_nk(n, k)
    return math.factorial(n) // (2 ** k * math.factorial(k) * math.factorial(n - 2 * k))


def _arc_lists(points: tuple[int, ...], k: int) -> Iterator[tuple[Arc, ...]]:
    # lexicographic on sorted arc lists: choose the first arc, recurse on the rest
    if k == 0:
        yield ()
        return
    for x, i in enumerate(points):
        if len(points) - x < 2 * k:
            return
        later = points[x + 1:]
        for y, j in enumerate(later):
            rest = later[:y] + later[y + 1:]
            for tail in _arc_lists(rest, k - 1):
                yield ((i, j),) + tail


def _maximal_arc_lists(n: int, k: int) -> Iterator[tuple[Arc, ...]]:
    # noncrossing, nothing fixed under an arc: every arc spans a balanced word
    def build(start: int, end: int, k: int) -> Iterator[tuple[Arc, ...]]:
        # arcs on [start, end] with exactly k arcs, each arc closes a block
        # with no fixed points inside
        if k == 0:
            yield ()
            return
        length = end - start + 1
        if length < 2 * k:
            return
        # either start is fixed ...
        if length - 1 >= 2 * k:
            yield from build(start + 1, end, k)
        # ... or start opens an arc (start, j) that encloses a complete block
        for inner in range(0, k):
            j = start + 2 * inner + 1
            if j > end:
                break
            for inside in _complete(start + 1, j - 1, inner):
                for tail in build(j + 1, end, k - 1 - inner):
                    yield tuple(sorted(((start, j),) + inside + tail))

    yield from (a for a in build(1, n, k))


def _complete(start: int, end: int, k: int) -> Iterator[tuple[Arc, ...]]:
    """Noncrossing perfect matchings of [start, end] (2k points)."""
    if k == 0:
        yield ()
        return
    for inner in range(0, k):
        j = start + 2 * inner + 1
        for inside in _complete(start + 1, j - 1, inner):
            for tail in _complete(j + 1, end, k - 1 - inner):
                yield ((start, j),) + inside + tail


def enumerate_patterns(n: int, k: int, maximal_only: bool = False) -> Iterator[LinkPattern]:
    """Every element of I_{n,k} (or I_{n,k}^max) once, lexicographic on arc lists."""
    _check_nk(n, k)
    if maximal_only:
        for arcs in sorted(_maximal_arc_lists(n, k)):
            yield LinkPattern(n, arcs)
        return
    for arcs in _arc_lists(tuple(range(1, n + 1)), k):
        yield LinkPattern(n, arcs)


def count_maximal(n: int, k: int) -> int:
    """|I_{n,k}^max| = C(n,k) - C(n,k-1), the two-column tableau count."""
    _check_nk(n, k)
    return math.comb(n, k) - (math.comb(n, k - 1) if k else 0)
