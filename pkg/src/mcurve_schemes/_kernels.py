"""Exhaustive extreme search over signed run sequences.

A run sequence is a composition of ``n`` interior ovals into ``r`` runs
(``r_min <= r <= r_max``) together with a start sign per run.  A run of odd
length contributes its start sign, an even one contributes nothing; with
``with_base`` an extra base oval of either sign is added.  The kernels
return ``(min_total, max_total, configurations_visited)``.

Two interchangeable backends:

* ``extremes_numba``: compiled loop over cut points and sign masks;
* ``extremes_numpy``: per run count, the cut-point combinations are
  stacked in blocks and multiplied against the full sign matrix.

Setting ``MCURVE_SCHEMES_DISABLE_NUMBA=1`` (or not having numba) selects
the numpy path in :func:`extremes`.
"""

from __future__ import annotations

import importlib.util
import itertools
import math
import os

import numpy as np

ENV_FLAG = "MCURVE_SCHEMES_DISABLE_NUMBA"

_BIG = 1 << 30


def _extremes_loop(n, r_min, r_max, with_base):
    lo = _BIG
    hi = -_BIG
    count = 0
    cuts = np.zeros(max(n, 1), dtype=np.int64)
    odd = np.zeros(max(n, 1), dtype=np.int64)
    for r in range(r_min, min(r_max, n) + 1):
        m = r - 1
        for i in range(m):
            cuts[i] = i + 1
        while True:
            prev = 0
            for i in range(m):
                odd[i] = (cuts[i] - prev) & 1
                prev = cuts[i]
            odd[m] = (n - prev) & 1
            for mask in range(1 << r):
                tot = 0
                for i in range(r):
                    if odd[i]:
                        if (mask >> i) & 1:
                            tot += 1
                        else:
                            tot -= 1
                if with_base:
                    if tot - 1 < lo:
                        lo = tot - 1
                    if tot + 1 > hi:
                        hi = tot + 1
                    count += 2
                else:
                    if tot < lo:
                        lo = tot
                    if tot > hi:
                        hi = tot
                    count += 1
            # advance to the next (m)-subset of {1..n-1} in lexicographic order
            i = m - 1
            while i >= 0 and cuts[i] == n - m + i:
                i -= 1
            if i < 0:
                break
            cuts[i] += 1
            for j in range(i + 1, m):
                cuts[j] = cuts[j - 1] + 1
    return lo, hi, count


HAVE_NUMBA = importlib.util.find_spec("numba") is not None
_compiled = None


def _numba_kernel():
    # compiled on first use so importing the package stays cheap
    global _compiled
    if _compiled is None:
        import numba

        _compiled = numba.njit(cache=True)(_extremes_loop)
    return _compiled


def extremes_numba(n: int, r_min: int, r_max: int, with_base: bool) -> tuple[int, int, int]:
    if not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    lo, hi, count = _numba_kernel()(n, r_min, r_max, with_base)
    return int(lo), int(hi), int(count)


def extremes_loop_python(n: int, r_min: int, r_max: int, with_base: bool) -> tuple[int, int, int]:
    """The numba kernel's source run uncompiled; slow, for cross-checks."""
    lo, hi, count = _extremes_loop(n, r_min, r_max, with_base)
    return int(lo), int(hi), int(count)


def extremes_numpy(
    n: int, r_min: int, r_max: int, with_base: bool, block: int = 4096
) -> tuple[int, int, int]:
    lo, hi, count = _BIG, -_BIG, 0
    for r in range(r_min, min(r_max, n) + 1):
        bits = (np.arange(1 << r, dtype=np.int64)[:, None] >> np.arange(r, dtype=np.int64)) & 1
        signs = 2 * bits - 1  # (2^r, r)
        combos = itertools.combinations(range(1, n), r - 1)
        while True:
            chunk = list(itertools.islice(combos, block))
            if not chunk:
                break
            cuts = np.asarray(chunk, dtype=np.int64).reshape(len(chunk), r - 1)
            edges = np.hstack(
                [np.zeros((len(chunk), 1), np.int64), cuts, np.full((len(chunk), 1), n, np.int64)]
            )
            odd = np.diff(edges, axis=1) & 1
            totals = odd @ signs.T
            if with_base:
                totals = np.concatenate([totals - 1, totals + 1], axis=1)
            lo = min(lo, int(totals.min()))
            hi = max(hi, int(totals.max()))
            count += totals.size
    return lo, hi, count


def use_numba() -> bool:
    return HAVE_NUMBA and os.environ.get(ENV_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


def extremes(n: int, r_min: int, r_max: int, with_base: bool) -> tuple[int, int, int]:
    if use_numba():
        return extremes_numba(n, r_min, r_max, with_base)
    return extremes_numpy(n, r_min, r_max, with_base)


def configuration_count(n: int, r_min: int, r_max: int, with_base: bool) -> int:
    total = sum(math.comb(n - 1, r - 1) << r for r in range(max(r_min, 1), min(r_max, n) + 1))
    return total * (2 if with_base else 1)
