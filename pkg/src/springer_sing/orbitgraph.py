"""
The orbit-graph oracle.

For sigma in I_{n,k} the graph G_sigma has the patterns below sigma as
vertices and elementary moves as edges. Its degrees decide smoothness and
locate the singular locus. Everything is computed by brute force over a
cached table of the whole of I_{n,k}, so the answers here are the reference
that the direct construction in :mod:`springer_sing.singdirect` is checked
against.

>>> from springer_sing.linkpattern import parse
>>> g = build_graph(parse("(2,3)(4,5) n=6"))
>>> g.p_sigma, g.degree(parse("(1,5)(2,6)"))
(5, 9)
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from . import _kernels as K
from .errors import IncomparableError, PatternError, SizeLimitError
from .linkpattern import LinkPattern, bc, count_patterns, format_pattern, replace_arcs

DEFAULT_MAX_N = 14


def size_guard() -> int:
    """Largest n the oracle accepts; ``SPRINGER_SING_MAX_N`` overrides the default."""
    raw = os.environ.get("SPRINGER_SING_MAX_N")
    if raw is None or not raw.strip():
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise SizeLimitError(f"SPRINGER_SING_MAX_N must be an integer, got {raw!r}") from None


def _check_size(n: int, max_n: int | None) -> None:
    limit = size_guard() if max_n is None else max_n
    if n > limit:
        raise SizeLimitError(f"n={n} exceeds the oracle size guard {limit} (set SPRINGER_SING_MAX_N to raise it)")


# ---------------------------------------------------------------------------
# geometry numbers

def d0(n: int, k: int) -> int:
    """Dimension of the smallest component, C(n-2k,2) + C(k,2)."""
    return math.comb(n - 2 * k, 2) + math.comb(k, 2)


def dim_component(sigma: LinkPattern) -> int:
    """dim F_sigma = C(n-k,2) + C(k,2) - b - c."""
    n, k = sigma.n, sigma.k
    return math.comb(n - k, 2) + math.comb(k, 2) - bc(sigma)


def p_sigma(sigma: LinkPattern) -> int:
    n, k = sigma.n, sigma.k
    return math.comb(n - k, 2) - math.comb(n - 2 * k, 2) - bc(sigma)


@dataclass(frozen=True)
class GeometryNumbers:
    d0: int
    dim: int
    p_sigma: int

    @classmethod
    def of(cls, sigma: LinkPattern) -> GeometryNumbers:
        return cls(d0(sigma.n, sigma.k), dim_component(sigma), p_sigma(sigma))


# ---------------------------------------------------------------------------
# elementary moves on single patterns

def predecessors(upsilon: LinkPattern) -> list[LinkPattern]:
    """
    Every pattern one elementary move above ``upsilon``.

    >>> [str(p) for p in predecessors(LinkPattern(3, ((1, 3),)))]
    ['n=3 (1,2)', 'n=3 (2,3)']
    """
    out = []
    for i, j in upsilon.arcs:
        for f in range(i + 1, j):
            g = upsilon.mate(f)
            if g == f:
                out.append(replace_arcs(upsilon, [(i, j)], [(i, f)]))
                out.append(replace_arcs(upsilon, [(i, j)], [(f, j)]))
            elif g > j:
                out.append(replace_arcs(upsilon, [(i, j), (f, g)], [(i, f), (j, g)]))
                out.append(replace_arcs(upsilon, [(i, j), (f, g)], [(i, g), (f, j)]))
    return sorted(set(out))


def successors(upsilon: LinkPattern) -> list[LinkPattern]:
    """
    Every pattern one elementary move below ``upsilon``, by inverting both move types.

    A type 1 move is undone by stretching an arc over a fixed point outside
    it; a type 2 move is undone by turning a non-crossing pair of arcs into a
    crossing pair.

    >>> [str(p) for p in successors(LinkPattern(3, ((1, 2),)))]
    ['n=3 (1,3)']
    """
    out = set()
    fixed = upsilon.fixed_points
    for x, y in upsilon.arcs:
        for z in fixed:
            if z > y:
                out.add(replace_arcs(upsilon, [(x, y)], [(x, z)]))
            elif z < x:
                out.add(replace_arcs(upsilon, [(x, y)], [(z, y)]))
    arcs = upsilon.arcs
    for u in range(len(arcs)):
        for v in range(u + 1, len(arcs)):
            (a, b), (c, d) = arcs[u], arcs[v]  # a < c
            if b < c:
                pts = (a, b, c, d)
            elif d < b:
                pts = (a, c, d, b)
            else:
                continue  # already crossing
            p, q, r, s = pts
            out.add(replace_arcs(upsilon, [arcs[u], arcs[v]], [(p, r), (q, s)]))
    return sorted(out)


# ---------------------------------------------------------------------------
# the per-(n,k) table

def _partner_rows(n: int, k: int) -> np.ndarray:
    """Partner rows of I_{n,k} in lexicographic order of sorted arc lists."""
    N = count_patterns(n, k)
    out = np.empty((N, n), dtype=np.int8)
    row = list(range(n))
    pos = 0

    def rec(free: list[int], k: int):
        nonlocal pos
        if k == 0:
            out[pos] = row
            pos += 1
            return
        for x in range(len(free) - 2 * k + 1):
            i = free[x]
            later = free[x + 1:]
            for y, j in enumerate(later):
                row[i], row[j] = j, i
                rec(later[:y] + later[y + 1:], k - 1)
                row[i], row[j] = i, j

    rec(list(range(n)), k)
    assert pos == N
    return out


@dataclass(frozen=True, eq=False)
class OrbitTable:
    """All of I_{n,k} as arrays: partners, rank rows, b+c and the predecessor CSR."""

    n: int
    k: int
    partners: np.ndarray
    ranks: np.ndarray
    bc: np.ndarray
    pred_ptr: np.ndarray
    pred_idx: np.ndarray
    keys: np.ndarray | None
    _key_order: np.ndarray | None

    def __len__(self) -> int:
        return self.partners.shape[0]

    def index(self, sigma: LinkPattern) -> int:
        if (sigma.n, sigma.k) != (self.n, self.k):
            raise IncomparableError(f"{sigma} is not in I_{{{self.n},{self.k}}}")
        p = sigma.partner_array()
        if self.keys is not None:
            key = int(K.encode_keys(p[None, :])[0])
            pos = int(np.searchsorted(self.keys, key, sorter=self._key_order))
            return int(self._key_order[pos])
        hit = np.nonzero(np.all(self.partners == p[None, :], axis=1))[0]
        return int(hit[0])

    def pattern(self, idx: int) -> LinkPattern:
        p = self.partners[idx]
        return LinkPattern(self.n, tuple((a + 1, int(b) + 1) for a, b in enumerate(p) if b > a))

    def dims(self) -> np.ndarray:
        base = math.comb(self.n - self.k, 2) + math.comb(self.k, 2)
        return base - self.bc


@lru_cache(maxsize=8)
def orbit_table(n: int, k: int) -> OrbitTable:
    partners = _partner_rows(n, k)
    ranks = K.rank_rows(partners)
    bcs = K.bc_counts(partners)
    ptr, idx = K.predecessor_csr(partners)
    keys = order = None
    if n <= K.MAX_KEY_N:
        keys = K.encode_keys(partners)
        order = np.argsort(keys, kind="stable")
    return OrbitTable(n, k, partners, ranks, bcs, ptr, idx, keys, order)


# ---------------------------------------------------------------------------
# the graph

@dataclass(frozen=True, eq=False)
class OrbitGraph:
    """
    G_sigma. Vertices are table indices; ``vertices`` lists them as patterns.

    ``up_edges[v]`` are the predecessors of vertex v inside the graph, so the
    edge set is the union of (v, w) for w in up_edges[v].
    """

    sigma: LinkPattern
    table: OrbitTable
    members: np.ndarray          # table indices, increasing
    degrees_arr: np.ndarray      # aligned with members
    up_ptr: np.ndarray
    up_idx: np.ndarray           # positions into members

    @property
    def n(self) -> int:
        return self.sigma.n

    @property
    def k(self) -> int:
        return self.sigma.k

    @property
    def d0(self) -> int:
        return d0(self.n, self.k)

    @property
    def p_sigma(self) -> int:
        return p_sigma(self.sigma)

    @property
    def dim(self) -> int:
        return dim_component(self.sigma)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def vertices(self) -> list[LinkPattern]:
        return [self.table.pattern(int(i)) for i in self.members]

    def _pos(self, upsilon: LinkPattern) -> int:
        if (upsilon.n, upsilon.k) != (self.n, self.k):
            raise IncomparableError(f"{upsilon} is not in I_{{{self.n},{self.k}}}")
        idx = self.table.index(upsilon)
        pos = int(np.searchsorted(self.members, idx))
        if pos >= len(self.members) or self.members[pos] != idx:
            raise PatternError(f"{upsilon} is not below {self.sigma}")
        return pos

    def __contains__(self, upsilon: LinkPattern) -> bool:
        try:
            self._pos(upsilon)
        except (PatternError, IncomparableError):
            return False
        return True

    def degree(self, upsilon: LinkPattern) -> int:
        return int(self.degrees_arr[self._pos(upsilon)])

    def degrees(self) -> dict[LinkPattern, int]:
        return {v: int(d) for v, d in zip(self.vertices, self.degrees_arr)}

    def codim(self, upsilon: LinkPattern) -> int:
        self._pos(upsilon)
        return bc(upsilon) - bc(self.sigma)

    def codims(self) -> np.ndarray:
        return self.table.bc[self.members] - bc(self.sigma)

    def tangent_dim(self, upsilon: LinkPattern) -> int:
        return self.degree(upsilon) + self.d0

    def predecessors_in_graph(self, upsilon: LinkPattern) -> list[LinkPattern]:
        pos = self._pos(upsilon)
        return sorted(self.table.pattern(int(self.members[w])) for w in self.up_idx[self.up_ptr[pos]:self.up_ptr[pos + 1]])

    def edges(self) -> Iterator[tuple[LinkPattern, LinkPattern]]:
        """(lower, upper) pairs, each edge once."""
        verts = self.vertices
        for v in range(len(verts)):
            for w in self.up_idx[self.up_ptr[v]:self.up_ptr[v + 1]]:
                yield verts[v], verts[int(w)]

    def edge_count(self) -> int:
        return int(self.up_ptr[-1])

    def is_regular(self) -> bool:
        return bool(np.all(self.degrees_arr == self.p_sigma))

    def singular_positions(self) -> np.ndarray:
        return np.nonzero(self.degrees_arr > self.p_sigma)[0]

    def singular_set(self) -> list[LinkPattern]:
        return sorted(self.table.pattern(int(self.members[p])) for p in self.singular_positions())

    def components(self) -> list[LinkPattern]:
        cand = self.members[self.singular_positions()]
        if len(cand) == 0:
            return []
        keep = K.maximal_rows(self.table.ranks, cand, self.table.dims())
        return sorted(self.table.pattern(int(i)) for i in keep)

    # -- export -------------------------------------------------------------

    def to_json(self) -> dict:
        verts = self.vertices
        return {
            "sigma": format_pattern(self.sigma),
            "n": self.n,
            "k": self.k,
            "p_sigma": self.p_sigma,
            "vertices": [format_pattern(v) for v in verts],
            "degrees": {format_pattern(v): int(d) for v, d in zip(verts, self.degrees_arr)},
            "singular_set": [format_pattern(v) for v in self.singular_set()],
            "components": [format_pattern(v) for v in self.components()],
        }

    def to_dot(self, max_codim: int | None = None) -> str:
        """Graphviz source; one rank per codimension, singular vertices drawn in red."""
        verts = self.vertices
        codims = self.codims()
        sing = set(self.singular_positions().tolist())
        keep = [v for v in range(len(verts)) if max_codim is None or codims[v] <= max_codim]
        keep_set = set(keep)
        lines = ["graph G {", "  rankdir=LR;", "  node [shape=box, fontname=\"monospace\"];"]
        label = f"G_sigma for {format_pattern(self.sigma)}, p_sigma={self.p_sigma}"
        lines.append(f"  label=\"{label}\";")
        for c in sorted({int(codims[v]) for v in keep}):
            members = [v for v in keep if codims[v] == c]
            lines.append(f"  subgraph rank_{c} {{")
            lines.append("    rank=same;")
            for v in members:
                attrs = f"label=\"{format_pattern(verts[v])}\\ndeg={int(self.degrees_arr[v])} codim={c}\""
                if v in sing:
                    attrs += ", color=red, fontcolor=red"
                lines.append(f"    v{v} [{attrs}];")
            lines.append("  }")
        for v in keep:
            for w in self.up_idx[self.up_ptr[v]:self.up_ptr[v + 1]]:
                if int(w) in keep_set:
                    lines.append(f"  v{v} -- v{int(w)};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def adjacency_text(self) -> str:
        """One line per vertex: pattern, degree, then its neighbours."""
        verts = self.vertices
        nbrs: list[set[int]] = [set() for _ in verts]
        for v in range(len(verts)):
            for w in self.up_idx[self.up_ptr[v]:self.up_ptr[v + 1]]:
                nbrs[v].add(int(w))
                nbrs[int(w)].add(v)
        rows = []
        for v, p in enumerate(verts):
            others = " ".join(format_pattern(verts[w]).split(" ", 1)[-1] for w in sorted(nbrs[v]))
            body = format_pattern(p).split(" ", 1)[-1]
            rows.append(f"{body}\tdeg={int(self.degrees_arr[v])}\t{others}")
        return "\n".join(rows) + "\n"


def build_graph(sigma: LinkPattern, max_n: int | None = None) -> OrbitGraph:
    """Build G_sigma from the cached I_{n,k} table."""
    _check_size(sigma.n, max_n)
    table = orbit_table(sigma.n, sigma.k)
    s = table.index(sigma)
    mask = K.leq_mask(table.ranks, table.ranks[s])
    members = np.nonzero(mask)[0].astype(np.int64)
    # successors of a vertex all lie below it, hence inside the graph, and
    # there are dim F_v - d_0 of them; the upward part needs the mask
    base = table.dims()[members] - d0(sigma.n, sigma.k)
    up = K.masked_counts(table.pred_ptr, table.pred_idx, mask, members)
    degrees = base + up
    # upward edges, re-indexed to positions inside members
    lookup = np.full(len(table), -1, dtype=np.int64)
    lookup[members] = np.arange(len(members))
    up_ptr = np.zeros(len(members) + 1, dtype=np.int64)
    up_ptr[1:] = np.cumsum(up)
    up_idx = np.empty(int(up_ptr[-1]), dtype=np.int64)
    for pos, m in enumerate(members):
        nb = table.pred_idx[table.pred_ptr[m]:table.pred_ptr[m + 1]]
        nb = lookup[nb[mask[nb]]]
        up_idx[up_ptr[pos]:up_ptr[pos + 1]] = np.sort(nb)
    return OrbitGraph(sigma, table, members, degrees, up_ptr, up_idx)


# ---------------------------------------------------------------------------
# thin functional API

def smooth_by_graph(sigma: LinkPattern, max_n: int | None = None) -> bool:
    """True iff G_sigma is p_sigma-regular."""
    return build_graph(sigma, max_n).is_regular()


def singular_set(sigma: LinkPattern, max_n: int | None = None) -> list[LinkPattern]:
    return build_graph(sigma, max_n).singular_set()


def sing_components_oracle(sigma: LinkPattern, max_n: int | None = None) -> list[LinkPattern]:
    """Maximal elements of the singular set: the oracle's Sing(sigma)."""
    return build_graph(sigma, max_n).components()


def tangent_dim(sigma: LinkPattern, upsilon: LinkPattern, max_n: int | None = None) -> int:
    return build_graph(sigma, max_n).tangent_dim(upsilon)


def codim(sigma: LinkPattern, upsilon: LinkPattern) -> int:
    """Codimension of the orbit of upsilon inside F_sigma; requires upsilon <= sigma."""
    from .linkpattern import leq

    if not leq(upsilon, sigma):
        raise PatternError(f"{upsilon} is not below {sigma}")
    return bc(upsilon) - bc(sigma)


def covers(sigma: LinkPattern) -> list[LinkPattern]:
    """Elements directly below sigma in the rank order."""
    table = orbit_table(sigma.n, sigma.k)
    s = table.index(sigma)
    below = np.nonzero(K.leq_mask(table.ranks, table.ranks[s]))[0]
    below = below[below != s]
    if len(below) == 0:
        return []
    # a strictly-below element is a cover iff it is maximal among the others
    keep = K.maximal_rows(table.ranks, below, table.dims())
    return sorted(table.pattern(int(i)) for i in keep)


def graph_json(graph: OrbitGraph) -> str:
    return json.dumps(graph.to_json(), indent=2, sort_keys=False)


def iter_below(sigma: LinkPattern) -> Iterable[LinkPattern]:
    """Every pattern below sigma, in enumeration order."""
    table = orbit_table(sigma.n, sigma.k)
    s = table.index(sigma)
    for i in np.nonzero(K.leq_mask(table.ranks, table.ranks[s]))[0]:
        yield table.pattern(int(i))
