"""
Time the numba kernels against their numpy fallbacks on whole I_{n,k} tables.

    python3 benchmarks/bench_kernels.py --n 10 --k 4
    python3 benchmarks/bench_kernels.py --n 12 --k 5 --repeat 1

Both paths are run in this process and their outputs compared, so the script
also acts as a consistency check.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from springer_sing import _kernels as K
from springer_sing.orbitgraph import _partner_rows


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    partners = _partner_rows(args.n, args.k)
    print(f"I_{{{args.n},{args.k}}}: {len(partners)} patterns, backend available: {K.backend()}")
    if not K.HAVE_NUMBA:
        print("numba is not available (or disabled); only the fallback can be timed")

    rows = [
        ("rank rows", lambda: K._rank_rows_nb(partners), lambda: K._rank_rows_np(partners)),
        ("b + c", lambda: K._bc_nb(partners), lambda: K._bc_np(partners)),
    ]
    keys = K.encode_keys(partners)
    order = np.argsort(keys, kind="stable")
    weights = np.int64(max(args.n, 2)) ** np.arange(args.n - 1, -1, -1, dtype=np.int64)
    rows.append(("predecessor CSR",
                 lambda: K._pred_csr_nb(partners, keys[order], order.astype(np.int64), weights),
                 lambda: K._pred_csr_py(partners)))

    print(f"{'kernel':<18}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  same")
    for name, fast, slow in rows:
        if K.HAVE_NUMBA:
            fast()  # compile outside the timed region
            tf, of = _time(fast, args.repeat)
        else:
            tf, of = float("nan"), None
        ts, os_ = _time(slow, max(1, args.repeat // 3))
        if of is None:
            same = "-"
        elif isinstance(of, tuple):
            same = all(np.array_equal(a, b) for a, b in zip(of, os_))
        else:
            same = np.array_equal(of, os_)
        print(f"{name:<18}{tf:>10.4f}{ts:>10.4f}{ts / tf if tf == tf else float('nan'):>9.1f}  {same}")


if __name__ == "__main__":
    main()
