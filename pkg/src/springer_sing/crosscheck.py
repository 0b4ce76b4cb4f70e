"""
Exhaustive agreement sweep between the direct construction and the oracle.

For every maximal sigma with n <= max_n it checks that the tableau
smoothness criterion agrees with graph regularity and, when rho >= 4, that
the direct components equal the oracle components.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .linkpattern import LinkPattern, enumerate_patterns, format_pattern, rho
from .orbitgraph import _check_size, build_graph
from .singdirect import sing_direct


@dataclass
class RowSummary:
    n: int
    k: int
    maximal: int = 0
    singular: int = 0
    smooth_mismatch: int = 0
    sing_mismatch: int = 0


@dataclass
class CrosscheckResult:
    max_n: int
    rows: list[RowSummary] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)

    @property
    def cases(self) -> int:
        return sum(r.maximal for r in self.rows)

    @property
    def singular_cases(self) -> int:
        return sum(r.singular for r in self.rows)

    @property
    def total_mismatches(self) -> int:
        return sum(r.smooth_mismatch + r.sing_mismatch for r in self.rows)

    @property
    def ok(self) -> bool:
        return self.total_mismatches == 0

    def to_text(self) -> str:
        lines = [f"{'n':>3} {'k':>3} {'maximal':>8} {'rho>=4':>7} {'rho_bad':>9} {'sing_bad':>9}"]
        for r in self.rows:
            lines.append(f"{r.n:>3} {r.k:>3} {r.maximal:>8} {r.singular:>7} {r.smooth_mismatch:>9} {r.sing_mismatch:>9}")
        lines.append(f"total: {self.cases} maximal patterns, {self.singular_cases} with rho>=4, "
                     f"{self.total_mismatches} mismatches")
        lines.extend(f"MISMATCH {m}" for m in self.mismatches)
        lines.append("verdict: " + ("agree" if self.ok else "DISAGREE"))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "cases": self.cases,
            "singular_cases": self.singular_cases,
            "mismatches": self.total_mismatches,
            "rows": [r.__dict__ for r in self.rows],
            "details": self.mismatches,
            "agree": self.ok,
        }


def check_one(sigma: LinkPattern) -> tuple[bool, bool, str]:
    """(rho criterion agrees with regularity, components agree, description of any disagreement)."""
    g = build_graph(sigma)
    r = rho(sigma)
    smooth_ok = (r <= 3) == g.is_regular()
    sing_ok = True
    msg = ""
    if r >= 4:
        direct = set(sing_direct(sigma).patterns)
        oracle = set(g.components())
        sing_ok = direct == oracle
        if not sing_ok:
            msg = (f"{format_pattern(sigma)}: direct {sorted(map(format_pattern, direct))} "
                   f"oracle {sorted(map(format_pattern, oracle))}")
    if not smooth_ok:
        msg = (msg + "; " if msg else "") + f"{format_pattern(sigma)}: rho={r} but regular={g.is_regular()}"
    return smooth_ok, sing_ok, msg


def _check_block(args: tuple[int, int]) -> tuple[RowSummary, list[str]]:
    n, k = args
    row = RowSummary(n, k)
    msgs = []
    for sigma in enumerate_patterns(n, k, maximal_only=True):
        row.maximal += 1
        if rho(sigma) >= 4:
            row.singular += 1
        s_ok, g_ok, msg = check_one(sigma)
        row.smooth_mismatch += not s_ok
        row.sing_mismatch += not g_ok
        if msg:
            msgs.append(msg)
    return row, msgs


def crosscheck(max_n: int, min_n: int = 1, workers: int = 1) -> CrosscheckResult:
    """Sweep all (n, k) with min_n <= n <= max_n."""
    _check_size(max_n, None)
    blocks = [(n, k) for n in range(max(min_n, 1), max_n + 1) for k in range(n // 2 + 1)]
    res = CrosscheckResult(max_n)
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            outs = list(ex.map(_check_block, blocks))
    else:
        outs = [_check_block(b) for b in blocks]
    for row, msgs in outs:
        res.rows.append(row)
        res.mismatches.extend(msgs)
    return res
