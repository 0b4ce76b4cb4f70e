"""
Direct construction of the components of the singular locus.

For a maximal pattern sigma with rho(sigma) >= 4, each admissible pair of
arcs at an interval [s, t] produces one component. No orbit graph is built.

>>> from springer_sing.linkpattern import parse
>>> [str(u) for u in sing_direct(parse("(2,3)(4,5) n=6")).patterns]
['n=6 (1,6)(2,5)']
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .errors import NotMaximalError, PatternError, ScopeError
from .linkpattern import (
    Arc,
    LinkPattern,
    bc,
    format_pattern,
    is_maximal,
    rho,
    tau_star,
    window_arcs,
)
from .orbitgraph import build_graph, dim_component

# ---------------------------------------------------------------------------
# admissible pairs


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    """Two arcs (i,j), (i',j') of sigma with i < j < i' < j', and an interval [s,t]."""

    arc1: Arc
    arc2: Arc
    s: int
    t: int

    @property
    def interval(self) -> tuple[int, int]:
        return (self.s, self.t)

    def to_json(self) -> dict:
        return {"arc1": list(self.arc1), "arc2": list(self.arc2), "interval": [self.s, self.t]}


@dataclass(frozen=True)
class PairData:
    """The two counts attached to a pair at an interval."""

    kappa: int  # fixed points of the window inside [j, i']
    over: tuple[Arc, ...]  # window arcs over both pair arcs

    @property
    def r(self) -> int:
        return len(self.over)


def _window_fixed(arcs: Iterable[Arc], s: int, t: int) -> set[int]:
    used = {p for a in arcs for p in a}
    return {p for p in range(s, t + 1) if p not in used}


def pair_data(sigma: LinkPattern, arc1: Arc, arc2: Arc, s: int, t: int) -> PairData:
    (i, j), (i2, j2) = arc1, arc2
    win = window_arcs(sigma, s, t)
    fixed = _window_fixed(win, s, t)
    return PairData(
        kappa=sum(1 for p in fixed if j <= p <= i2),
        over=tuple(sorted((r, q) for r, q in win if r < i and j2 < q)),
    )


def is_admissible(sigma: LinkPattern, arc1: Arc, arc2: Arc, s: int, t: int) -> bool:
    """
    Check the six admissibility conditions against the window [s, t] of sigma.

    Arcs that lie over both pair arcs must be pairwise nested. Arcs
    that are not over the pair play no role in that condition.

    >>> from springer_sing.linkpattern import parse
    >>> sigma = parse("(2,9)(3,6)(4,5)(7,8)(10,11) n=12")
    >>> is_admissible(sigma, (3, 6), (7, 8), 1, 10), is_admissible(sigma, (7, 8), (10, 11), 1, 12)
    (True, False)
    """
    arc1, arc2 = tuple(sorted(arc1)), tuple(sorted(arc2))
    for a in (arc1, arc2):
        if a not in sigma:
            raise PatternError(f"arc {a} is not in {sigma}")
    if arc2 < arc1:
        arc1, arc2 = arc2, arc1
    (i, j), (i2, j2) = arc1, arc2
    if not (1 <= s < i < j < i2 < j2 < t <= sigma.n):
        return False
    win = window_arcs(sigma, s, t)
    fixed = _window_fixed(win, s, t)
    if s not in fixed or t not in fixed:
        return False
    if any(s < p < j or i2 < p < t for p in fixed):
        return False
    over = []
    for r, q in win:
        if (r, q) in (arc1, arc2):
            continue
        if r < i < q or r < j2 < q or (r < j and i2 < q):
            if not (r < i and j2 < q):
                return False
            over.append((r, q))
    over.sort()
    for (r1, q1), (r2, q2) in zip(over, over[1:]):
        if not q2 < q1:
            return False
    kappa = sum(1 for p in fixed if j <= p <= i2)
    return kappa * len(over) == 0


def naive_admissible_pairs(sigma: LinkPattern) -> list[AdmissiblePair]:
    """Every admissible pair at every interval, by exhaustive search."""
    out = []
    arcs = sigma.arcs
    n = sigma.n
    for x, a1 in enumerate(arcs):
        for a2 in arcs:
            if not a1[1] < a2[0]:
                continue
            for s in range(1, a1[0]):
                for t in range(a2[1] + 1, n + 1):
                    if is_admissible(sigma, a1, a2, s, t):
                        out.append(AdmissiblePair(a1, a2, s, t))
    return sorted(out)


# ---------------------------------------------------------------------------
# procedural route


def _trim(sigma: LinkPattern) -> tuple[int, int]:
    """Window [s, t] whose projection has both end points fixed."""
    n = sigma.n
    tau = tau_star(sigma)
    f1, fn = sigma.is_fixed(1), sigma.is_fixed(n)
    if f1 and fn:
        return 1, n
    if f1:
        return 1, max(tau)
    if fn:
        return min(tau) + 1, n
    if (1, n) in sigma:
        return 1, max(tau)
    return min(tau) + 1, max(tau)


def _largest_over(arcs: Iterable[Arc], l: int, cond) -> Arc | None:
    """Largest arc over (l, l+1) satisfying ``cond``; arcs over a point are nested."""
    best = None
    for r, q in arcs:
        if r <= l and l + 1 <= q and cond(r, q):
            if best is None or (r < best[0] and q > best[1]):
                best = (r, q)
    return best


def procedural_admissible_pairs(sigma: LinkPattern) -> list[AdmissiblePair]:
    """
    Admissible pairs found by walking the minimal arcs of sigma.

    Only defined for maximal sigma with rho(sigma) >= 4. Intervals are
    returned in sigma's own coordinates.
    """
    _check_scope(sigma)
    s0, t0 = _trim(sigma)
    arcs = window_arcs(sigma, s0, t0)
    tau = sorted(p for p in tau_star(sigma) if s0 <= p and p + 1 <= t0)
    used = {p for a in arcs for p in a}
    fixed = sorted(p for p in range(s0, t0 + 1) if p not in used)
    out: set[AdmissiblePair] = set()
    for x, i in enumerate(tau):
        for j in tau[x + 1:]:
            ab = _largest_over(arcs, i, lambda r, q: q < j and not any(r <= l < i for l in tau))
            cd = _largest_over(arcs, j, lambda r, q: r > i and not any(j < l <= q for l in tau))
            if ab is None or cd is None:
                raise PatternError(f"step (b) found no outer arcs for minimal arcs at {i},{j} in {sigma}")
            (a, b), (c, d) = ab, cd
            if not b < c:
                raise PatternError(f"outer arcs {ab}, {cd} overlap in {sigma}")
            lefts = [f for f in fixed if f < a]
            rights = [f for f in fixed if f > d]
            if not lefts or not rights:
                continue
            m1, m2 = lefts[-1], rights[0]
            left = _left_candidates(arcs, tau, a, b, j, m1)
            right = _right_candidates(arcs, tau, c, d, i, m2)
            # an interval may also cut an arc lying over both pair arcs, and
            # then has to end exactly on that arc's other end point
            for r, q in arcs:
                if m1 < r < a and d < q < m2:
                    left.append(r)
                    right.append(q)
            for p in left:
                for q in right:
                    if is_admissible(sigma, ab, cd, p, q):
                        out.add(AdmissiblePair(ab, cd, p, q))
    return sorted(out)


def _left_candidates(arcs, tau, a, b, j, m1) -> list[int]:
    encl = [(s, t) for s, t in arcs if m1 < s < a and b < t < j]
    if not encl:
        ls = [l for l in tau if m1 <= l < a]
        out = {m1}
    else:
        s, _ = max(encl)  # minimal enclosing arc has the largest left end
        ls = [l for l in tau if s <= l < a]
        out = set()
    for l in ls:
        arc = _largest_over(arcs, l, lambda r, q: q < a)
        if arc is not None:
            out.add(arc[1])
    return sorted(out)


def _right_candidates(arcs, tau, c, d, i, m2) -> list[int]:
    encl = [(s, t) for s, t in arcs if i < s < c and d < t < m2]
    if not encl:
        ls = [l for l in tau if d < l < m2]
        out = {m2}
    else:
        _, t = min(encl, key=lambda e: e[1])
        ls = [l for l in tau if d < l < t]
        out = set()
    for l in ls:
        arc = _largest_over(arcs, l, lambda r, q: r > d)
        if arc is not None:
            out.add(arc[0])
    return sorted(out)


def find_admissible_pairs(sigma: LinkPattern, method: str = "procedural") -> list[AdmissiblePair]:
    """Admissible pairs of a maximal sigma with rho >= 4, by either route."""
    if method == "procedural":
        return procedural_admissible_pairs(sigma)
    if method == "naive":
        _check_scope(sigma)
        return naive_admissible_pairs(sigma)
    raise ValueError(f"method must be 'procedural' or 'naive', got {method!r}")


# ---------------------------------------------------------------------------
# construction of the component


def window_pattern(sigma: LinkPattern, x: AdmissiblePair) -> tuple[tuple[Arc, ...], list[int]]:
    """Arcs of the rewired window and its fixed points, absolute coordinates."""
    win = [a for a in window_arcs(sigma, x.s, x.t) if a not in (x.arc1, x.arc2)]
    win += [(x.arc1[0], x.arc2[1]), (x.s, x.t)]
    return tuple(sorted(win)), sorted(_window_fixed(win, x.s, x.t))


def component_of(sigma: LinkPattern, x: AdmissiblePair) -> LinkPattern:
    """
    The component generated by an admissible pair.

    The window [s, t] is rewired (pair arcs replaced by (i, j') and (s, t)).
    Arcs of sigma with one end inside the window are re-attached to the
    window's fixed points with the nesting a maximal completion produces:
    outside left ends from the inside out take the fixed points in increasing
    order, outside right ends take the remaining ones in decreasing order.
    """
    s, t = x.s, x.t
    inner, free = window_pattern(sigma, x)
    kept, left, right = [], [], []
    for a, b in sigma.arcs:
        ina, inb = s <= a <= t, s <= b <= t
        if ina and inb:
            continue
        if not ina and not inb:
            kept.append((a, b))
        elif inb:
            left.append(a)
        else:
            right.append(b)
    if len(left) + len(right) > len(free):
        raise PatternError(f"window of {x} has too few fixed points to re-attach outer arcs")
    left.sort(reverse=True)
    right.sort()
    arcs = list(inner) + kept
    arcs += [(a, f) for a, f in zip(left, free)]
    rest = free[len(left):][::-1]
    arcs += [(f, b) for b, f in zip(right, rest)]
    return LinkPattern(sigma.n, tuple(arcs))


def basic_sing_element(sigma: LinkPattern, arc1: Arc, arc2: Arc) -> LinkPattern:
    """
    The component for a pair admissible on the whole line [1, n]: the two
    arcs (i,j), (i',j') are replaced by (i,j') and (1,n). Its codimension is
    4 + 2(kappa + r); this is checked before returning.

    >>> from springer_sing.linkpattern import parse
    >>> str(basic_sing_element(parse("(2,3)(4,5) n=6"), (2, 3), (4, 5)))
    'n=6 (1,6)(2,5)'
    """
    n = sigma.n
    if not is_admissible(sigma, arc1, arc2, 1, n):
        raise PatternError(f"{arc1}, {arc2} is not an admissible pair on [1,{n}] of {sigma}")
    arc1, arc2 = sorted((tuple(sorted(arc1)), tuple(sorted(arc2))))
    u = component_of(sigma, AdmissiblePair(arc1, arc2, 1, n))
    d = pair_data(sigma, arc1, arc2, 1, n)
    if bc(u) - bc(sigma) != 4 + 2 * (d.kappa + d.r):
        raise AssertionError(f"codimension of {u} in {sigma} disagrees with 4 + 2(kappa + r)")
    return u


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Component:
    pattern: LinkPattern
    pair: AdmissiblePair | None
    codim: int
    tangent_dim: int

    def to_json(self) -> dict:
        return {
            "pattern": format_pattern(self.pattern),
            "pair": self.pair.to_json() if self.pair is not None else None,
            "codim": self.codim,
            "tangent_dim": self.tangent_dim,
        }


@dataclass(frozen=True)
class SingReport:
    sigma: LinkPattern
    rho: int | None
    smooth: bool
    method: str
    components: tuple[Component, ...] = ()
    note: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def patterns(self) -> list[LinkPattern]:
        return [c.pattern for c in self.components]

    def to_json(self) -> dict:
        out = {
            "sigma": format_pattern(self.sigma),
            "n": self.sigma.n,
            "k": self.sigma.k,
            "rho": self.rho,
            "smooth": self.smooth,
            "method": self.method,
            "components": [c.to_json() for c in self.components],
        }
        if self.note:
            out["note"] = self.note
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_text(self) -> str:
        lines = [f"sigma: {format_pattern(self.sigma)}"]
        if self.rho is not None:
            lines.append(f"rho: {self.rho}")
        lines.append(f"smooth: {'yes' if self.smooth else 'no'}")
        lines.append(f"method: {self.method}")
        if self.note:
            lines.append(f"note: {self.note}")
        lines.append(f"components: {len(self.components)}")
        for c in self.components:
            where = ""
            if c.pair is not None:
                (i, j), (i2, j2) = c.pair.arc1, c.pair.arc2
                where = f"  pair ({i},{j})({i2},{j2}) at [{c.pair.s},{c.pair.t}]"
            lines.append(f"  {format_pattern(c.pattern)}  codim={c.codim} tangent={c.tangent_dim}{where}")
        return "\n".join(lines) + "\n"


def _order_key(c: Component):
    return (c.codim, c.pattern.arcs)


def _check_scope(sigma: LinkPattern) -> int:
    if not is_maximal(sigma):
        raise NotMaximalError(f"the direct algorithm needs a maximal pattern; {sigma} is not")
    r = rho(sigma)
    if r < 4:
        raise ScopeError(f"rho({sigma}) = {r} < 4: the component is smooth, there is no singular locus")
    return r


def local_tangent_dim(sigma: LinkPattern, upsilon: LinkPattern) -> int:
    """
    Tangent dimension of F_sigma along the orbit of upsilon, from the moves of
    upsilon alone: dim F_upsilon plus its predecessors lying below sigma.
    """
    from .linkpattern import leq
    from .orbitgraph import predecessors

    return dim_component(upsilon) + sum(1 for w in predecessors(upsilon) if leq(w, sigma))


def sing_direct(sigma: LinkPattern, method: str = "procedural") -> SingReport:
    """Sing(sigma) by the admissible-pair construction."""
    r = _check_scope(sigma)
    pairs = find_admissible_pairs(sigma, method)
    seen: dict[LinkPattern, Component] = {}
    base = bc(sigma)
    for x in pairs:
        u = component_of(sigma, x)
        if u in seen:
            continue
        seen[u] = Component(u, x, bc(u) - base, local_tangent_dim(sigma, u))
    comps = tuple(sorted(seen.values(), key=_order_key))
    return SingReport(sigma, r, False, "direct", comps)


def sing_graph(sigma: LinkPattern, max_n: int | None = None) -> SingReport:
    """Sing(sigma) from the orbit graph; works for any sigma."""
    g = build_graph(sigma, max_n)
    r = rho(sigma) if is_maximal(sigma) else None
    base = bc(sigma)
    comps = tuple(sorted(
        (Component(u, None, bc(u) - base, g.tangent_dim(u)) for u in g.components()),
        key=_order_key))
    return SingReport(sigma, r, g.is_regular(), "graph", comps)


def sing_any(sigma: LinkPattern, max_n: int | None = None) -> SingReport:
    """Dispatch: direct algorithm where it applies, the smoothness criterion or the oracle otherwise."""
    if is_maximal(sigma):
        r = rho(sigma)
        if r >= 4:
            return sing_direct(sigma)
        return SingReport(sigma, r, True, "direct", (), note="rho <= 3: smooth component")
    rep = sing_graph(sigma, max_n)
    return SingReport(rep.sigma, None, rep.smooth, "graph", rep.components,
                      note="not maximal: answered by the orbit graph, the direct algorithm does not apply")
