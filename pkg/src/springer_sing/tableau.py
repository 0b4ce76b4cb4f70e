"""
Standard Young tableaux of shape (2^k, 1^(n-2k)) and their link patterns.

A tableau is stored by columns. The text form has one row per line:

>>> t = parse_tableau("1 4\\n2 5\\n3 9\\n6 10\\n7\\n8")
>>> t.column1, t.column2
((1, 2, 3, 6, 7, 8), (4, 5, 9, 10))
>>> sorted(tau_star_T(t)), rho_T(t), is_smooth(t)
([3, 8], 3, True)
>>> str(tableau_to_linkpattern(t))
'n=10 (2,5)(3,4)(7,10)(8,9)'
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NotMaximalError, TableauError
from .linkpattern import LinkPattern, count_maximal, is_maximal


@dataclass(frozen=True)
class TwoColumnTableau:
    column1: tuple[int, ...]
    column2: tuple[int, ...] = ()

    def __post_init__(self):
        c1, c2 = tuple(self.column1), tuple(self.column2)
        object.__setattr__(self, "column1", c1)
        object.__setattr__(self, "column2", c2)
        entries = c1 + c2
        if len(set(entries)) != len(entries):
            dup = sorted({e for e in entries if entries.count(e) > 1})
            raise TableauError(f"repeated entries {dup}")
        n = len(entries)
        if set(entries) != set(range(1, n + 1)):
            missing = sorted(set(range(1, n + 1)) - set(entries))
            raise TableauError(f"entries must be 1..{n}; missing {missing}")
        if len(c2) > len(c1):
            raise TableauError("second column is longer than the first: not a partition shape")
        for name, col in (("first", c1), ("second", c2)):
            if any(x >= y for x, y in zip(col, col[1:])):
                raise TableauError(f"{name} column is not increasing")
        for r, (a, b) in enumerate(zip(c1, c2), start=1):
            if not a < b:
                raise TableauError(f"row {r} is not increasing ({a} {b})")

    @property
    def n(self) -> int:
        return len(self.column1) + len(self.column2)

    @property
    def k(self) -> int:
        return len(self.column2)

    @property
    def shape(self) -> tuple[int, ...]:
        return (2,) * self.k + (1,) * (self.n - 2 * self.k)

    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(x for x in (a, b) if x is not None)
                for a, b in zip(self.column1, list(self.column2) + [None] * (len(self.column1) - self.k))]

    def __str__(self) -> str:
        return format_tableau(self)


def parse_tableau(text: str) -> TwoColumnTableau:
    """
    One row per line, entries separated by spaces. A ``/`` also ends a row.

    >>> parse_tableau("1 3\\n2 2")
    Traceback (most recent call last):
    ...
    springer_sing.errors.TableauError: repeated entries [2]
    """
    rows = [ln.split() for ln in re.split(r"[\n/]", text) if ln.strip()]
    c1, c2 = [], []
    seen_short = False
    for r, row in enumerate(rows, start=1):
        try:
            vals = [int(x) for x in row]
        except ValueError:
            raise TableauError(f"row {r} has a non-integer entry: {' '.join(row)!r}") from None
        if len(vals) > 2:
            raise TableauError(f"row {r} has {len(vals)} entries; at most 2 allowed")
        if len(vals) == 2:
            if seen_short:
                raise TableauError(f"row {r} is longer than a row above it: not a partition shape")
            c1.append(vals[0])
            c2.append(vals[1])
        else:
            seen_short = True
            c1.append(vals[0])
    if not c1:
        raise TableauError("empty tableau")
    return TwoColumnTableau(tuple(c1), tuple(c2))


def format_tableau(t: TwoColumnTableau) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in t.rows()) + "\n"


def tau_star_T(t: TwoColumnTableau) -> frozenset[int]:
    second = set(t.column2)
    return frozenset(i for i in t.column1 if i + 1 in second)


def rho_T(t: TwoColumnTableau) -> int:
    """
    The three-case statistic. Conditions quantified over empty index ranges
    count as true.
    """
    n, k = t.n, t.k
    b = t.column2
    tau = len(tau_star_T(t))
    last_in_first = t.column1[-1] == n
    all_large = all(b[i - 1] > 2 * i for i in range(1, k + 1))
    all_large_but_last = all(b[i - 1] > 2 * i for i in range(1, k))
    if last_in_first and all_large:
        return tau + 2
    if last_in_first or all_large_but_last:
        return tau + 1
    return tau


def is_smooth(t: TwoColumnTableau) -> bool:
    return rho_T(t) <= 3


def tableau_to_linkpattern(t: TwoColumnTableau) -> LinkPattern:
    """Each second-column entry is joined to the nearest unused first-column entry below it."""
    free = list(t.column1)
    arcs = []
    for bs in t.column2:
        i = max(a for a in free if a < bs)
        free.remove(i)
        arcs.append((i, bs))
    return LinkPattern(t.n, tuple(arcs))


def linkpattern_to_tableau(sigma: LinkPattern) -> TwoColumnTableau:
    if not is_maximal(sigma):
        raise NotMaximalError(f"only maximal patterns correspond to tableaux; {sigma} is not maximal")
    right = sigma.right_ends
    rs = set(right)
    return TwoColumnTableau(tuple(p for p in range(1, sigma.n + 1) if p not in rs), right)


def conjugate(partition: Sequence[int]) -> tuple[int, ...]:
    """
    >>> conjugate((2, 2, 1, 1))
    (4, 2)
    """
    parts = sorted((p for p in partition if p > 0), reverse=True)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > c) for c in range(parts[0]))


def dim_springer_fiber(partition: Sequence[int]) -> int:
    """
    Sum of C(mu, 2) over the conjugate parts.

    >>> dim_springer_fiber((2, 2, 1, 1)), dim_springer_fiber((2, 2, 2, 2))
    (7, 12)
    """
    return sum(math.comb(m, 2) for m in conjugate(partition))


def enumerate_tableaux(n: int, k: int) -> Iterator[TwoColumnTableau]:
    """All standard tableaux of shape (2^k, 1^(n-2k)), via maximal link patterns."""
    from .linkpattern import enumerate_patterns

    for sigma in enumerate_patterns(n, k, maximal_only=True):
        yield linkpattern_to_tableau(sigma)


def count_tableaux(n: int, k: int) -> int:
    return count_maximal(n, k)
