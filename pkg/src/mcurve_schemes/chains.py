"""Combinatorial model of a pencil sweep over the interior ovals.

A pencil based at a hull vertex B (or at an exterior oval A) distributes
the interior ovals into k - 2 chains.  Inside a chain the interior ovals
come in runs; two runs are separated by a jump over exterior ovals, and
orientations alternate along a run.  Only the contribution to
``Pi+ - Pi-`` is modelled: a run adds its start sign when its length is
odd and nothing otherwise, and a vertex base adds the sign of B.

The model over-approximates the geometry: the equality case that forces
``Pi+ - Pi- = 1 - k - alpha`` is not encoded, and folds are ignored.

:func:`oracle_extremes` searches every configuration exhaustively.  The
total depends only on the flattened sequence of runs, and any such
sequence of R runs with ``k - 2 <= R <= k - 2 + jump_budget`` splits into
k - 2 non-empty chains, so the search runs over flattened sequences (see
``_kernels``).  :func:`iter_sweep_configs` enumerates the chain-level
configurations literally and is used to cross-check small instances.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional

from . import _kernels

SEARCH_LIMIT = 10**7


class OracleDomainError(ValueError):
    pass


class SearchLimitError(OracleDomainError):
    pass


class Base(str, enum.Enum):
    VERTEX = "vertex"
    EXTERIOR = "exterior"


def _as_base(base) -> Base:
    try:
        return Base(base)
    except ValueError:
        raise OracleDomainError(f"base must be 'vertex' or 'exterior', got {base!r}") from None


@dataclass(frozen=True, order=True)
class Run:
    length: int
    start_sign: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"run length must be >= 1, got {self.length}")
        if self.start_sign not in (1, -1):
            raise ValueError(f"start sign must be +1 or -1, got {self.start_sign}")

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(self.start_sign * (-1) ** i for i in range(self.length))


@dataclass(frozen=True, order=True)
class Chain:
    runs: tuple[Run, ...]

    def __post_init__(self):
        if not self.runs:
            raise ValueError("a chain holds at least one run")

    @property
    def jumps(self) -> int:
        return len(self.runs) - 1

    @property
    def interior_ovals(self) -> int:
        return sum(r.length for r in self.runs)


@dataclass(frozen=True)
class SweepConfig:
    k: int
    alpha: int
    base: Base
    chains: tuple[Chain, ...]
    base_oval_sign: Optional[int] = None

    def __post_init__(self):
        base = _as_base(self.base)
        object.__setattr__(self, "base", base)
        if self.k < 3:
            raise ValueError(f"k must be >= 3, got {self.k}")
        if len(self.chains) != self.k - 2:
            raise ValueError(f"expected {self.k - 2} chains, got {len(self.chains)}")
        if (self.base_oval_sign is None) != (base is Base.EXTERIOR):
            raise ValueError("base_oval_sign is required for a vertex base and absent otherwise")
        if self.base_oval_sign not in (None, 1, -1):
            raise ValueError(f"base sign must be +1 or -1, got {self.base_oval_sign}")
        budget = jump_budget(self.alpha, base)
        if self.jumps > budget:
            raise ValueError(f"{self.jumps} jumps exceed the budget {budget}")

    @property
    def jumps(self) -> int:
        return sum(c.jumps for c in self.chains)

    @property
    def interior_ovals(self) -> int:
        extra = 1 if self.base is Base.VERTEX else 0
        return sum(c.interior_ovals for c in self.chains) + extra


def run_contribution(r: Run) -> int:
    return r.start_sign if r.length % 2 else 0


def chain_contribution(c: Chain) -> int:
    total = sum(run_contribution(r) for r in c.runs)
    assert abs(total) <= len(c.runs), (c, total)
    return total


def sweep_total(cfg: SweepConfig) -> int:
    total = sum(chain_contribution(c) for c in cfg.chains)
    if cfg.base is Base.VERTEX:
        total += cfg.base_oval_sign
    return total


def jump_budget(alpha: int, base) -> int:
    return alpha if _as_base(base) is Base.VERTEX else alpha - 1


def sweep_bound(k: int, alpha: int, base) -> int:
    base = _as_base(base)
    if k < 3:
        raise OracleDomainError(f"k must be >= 3, got {k}")
    if alpha < 0:
        raise OracleDomainError(f"alpha must be >= 0, got {alpha}")
    if base is Base.VERTEX:
        return k - 1 + alpha
    if alpha < 1:
        raise OracleDomainError("an exterior base needs at least one exterior oval (alpha >= 1)")
    return k + alpha - 3


def _check_instance(k: int, alpha: int, beta: int, base: Base) -> int:
    """Validate and return the number of ovals spread over the chains."""
    sweep_bound(k, alpha, base)
    chained = beta - 1 if base is Base.VERTEX else beta
    if chained < k - 2:
        need = k - 2 + (1 if base is Base.VERTEX else 0)
        raise OracleDomainError(
            f"beta = {beta} cannot populate {k - 2} non-empty chains with a {base.value} base "
            f"(need beta >= {need})"
        )
    return chained


@lru_cache(maxsize=None)
def _chains_with(n: int, max_runs: int) -> tuple[Chain, ...]:
    out = []
    for r in range(1, min(n, max_runs) + 1):
        for lengths in _compositions(n, r):
            for signs in product((1, -1), repeat=r):
                out.append(Chain(tuple(Run(l, s) for l, s in zip(lengths, signs))))
    return tuple(sorted(out))


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first, *rest)


def iter_sweep_configs(k: int, alpha: int, beta: int, base) -> Iterator[SweepConfig]:
    """Every sweep configuration, chains listed in non-decreasing order."""
    base = _as_base(base)
    chained = _check_instance(k, alpha, beta, base)
    budget = jump_budget(alpha, base)
    n_chains = k - 2

    def rec(left: int, ovals: int, jumps: int, floor: Optional[Chain]) -> Iterator[tuple[Chain, ...]]:
        if left == 0:
            if ovals == 0:
                yield ()
            return
        for n in range(1, ovals - (left - 1) + 1):
            for chain in _chains_with(n, jumps + 1):
                if floor is not None and chain < floor:
                    continue
                for tail in rec(left - 1, ovals - n, jumps - chain.jumps, chain):
                    yield (chain, *tail)

    signs = (1, -1) if base is Base.VERTEX else (None,)
    for chains in rec(n_chains, chained, budget, None):
        for s in signs:
            yield SweepConfig(k, alpha, base, chains, s)


def oracle_extremes(k: int, alpha: int, beta: int, base, *, limit: int = SEARCH_LIMIT) -> tuple[int, int]:
    """Exact (min, max) of the sweep total over all configurations."""
    base = _as_base(base)
    chained = _check_instance(k, alpha, beta, base)
    r_min = k - 2
    r_max = r_min + jump_budget(alpha, base)
    with_base = base is Base.VERTEX
    size = _kernels.configuration_count(chained, r_min, r_max, with_base)
    if size > limit:
        raise SearchLimitError(f"{size} configurations exceed the search limit {limit}")
    lo, hi, visited = _kernels.extremes(chained, r_min, r_max, with_base)
    assert visited == size, (visited, size)
    return lo, hi
