"""Enumerate complex orientations of one-nest M-schemes and sieve them.

For fixed (eps, a+) the one-nest identity fixes ``D = Pi+ - Pi-``:

    eps = +1:  D = k^2 - 2k - 1 - (a+ - a-)
    eps = -1:  D = (k^2 - 2k + 1 - (a+ - a-)) / 3     (must be integral)

and then ``b+ = (beta - eps*D) / 2``.  So each (eps, a+) yields at most one
candidate, which is run through :func:`check_all`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .restrictions import HULL_MAX_DEGREE, Report, check_all
from .schemes import ComplexScheme, CurveParams, DegreeError, RealScheme, format_canonical


@dataclass(frozen=True)
class EnumerationResult:
    params: CurveParams
    alpha: int
    survivors: tuple[tuple[ComplexScheme, Report], ...]
    searched: int

    @property
    def beta(self) -> int:
        return self.params.oval_budget - 1 - self.alpha

    @property
    def schemes(self) -> list[str]:
        return [format_canonical(cs) for cs, _ in self.survivors]


def _require_supported(p: CurveParams) -> None:
    if p.m > HULL_MAX_DEGREE:
        raise DegreeError(
            f"enumeration supports m <= {HULL_MAX_DEGREE}; for m = {p.m} the hull-dependent "
            "rules are inapplicable and every candidate would pass vacuously"
        )


def enumerate_orientations(p: CurveParams, alpha: int) -> EnumerationResult:
    _require_supported(p)
    beta = p.oval_budget - 1 - alpha
    if alpha < 0 or beta < 1:
        raise ValueError(f"alpha must lie in [0, {p.oval_budget - 2}] for m = {p.m}, got {alpha}")

    searched = 0
    found = []
    for eps in (1, -1):
        for ap in range(alpha + 1):
            searched += 1
            a = 2 * ap - alpha
            if eps == 1:
                d = p.rm_rhs - 1 - a
            else:
                num = p.rm_rhs + 1 - a
                if num % 3:
                    continue
                d = num // 3
            twice_bp = beta - eps * d
            if twice_bp % 2 or not 0 <= twice_bp <= 2 * beta:
                continue
            bp = twice_bp // 2
            cs = ComplexScheme(eps, ap, alpha - ap, bp, beta - bp)
            report = check_all(cs, p)
            if report.arithmetically_admissible:
                found.append((cs, report))

    found.sort(key=lambda row: format_canonical(row[0]))
    return EnumerationResult(p, alpha, tuple(found), searched)


def admissible_real(p: CurveParams) -> list[tuple[RealScheme, int]]:
    """Survivor count for every one-nest M-scheme of degree ``p.m``."""
    _require_supported(p)
    rows = []
    for alpha in range(p.oval_budget - 1):
        res = enumerate_orientations(p, alpha)
        rows.append((RealScheme(alpha, res.beta), len(res.survivors)))
    return rows


_DEFAULT_DB = object()


def min_alpha(p: CurveParams, db=_DEFAULT_DB) -> Optional[int]:
    """Smallest alpha with a survivor the knowledge base does not exclude.

    Survivors excluded by ``db`` (the shipped records unless given) do not
    count; with ``db=None`` this is the bare arithmetic minimum.
    """
    _require_supported(p)
    if db is _DEFAULT_DB:
        from .prohibitions import default_db

        db = default_db()
    for alpha in range(p.oval_budget - 1):
        res = enumerate_orientations(p, alpha)
        if db is None:
            if res.survivors:
                return alpha
            continue
        from .prohibitions import Status, lookup

        if any(lookup(db, p.m, cs).status is not Status.EXCLUDED for cs, _ in res.survivors):
            return alpha
    return None
