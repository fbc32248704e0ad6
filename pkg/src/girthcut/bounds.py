"""Closed-form performance guarantees and comparison tables.

Collects every scalar guarantee attached to the radial construction on a
d-regular graph of girth >= 2k: the achievable edge inner products (exact
optimum and closed form), the relative expectation that normalizes them
by -2 sqrt(d-1)/d, the competing factor-of-i.i.d. bound it is compared
against, the degree threshold above which the comparison is settled
analytically, and the normalized value scaling of the cut fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .spectral import (
    closed_form_w,
    min_eigenpair,
    path_operator,
    quadratic_form,
)

__all__ = [
    "BoundReport",
    "relative_expectation",
    "lyons_xi",
    "dominance_threshold",
    "normalized_value",
    "cut_fraction",
    "bound_report",
    "comparison_table",
    "table1_rows",
    "TABLE1_PAIRS",
    "truncate",
]

# (d, k) pairs of the published comparison table, in row order.
TABLE1_PAIRS = ((3, 3), (4, 3), (5, 3), (6, 3), (7, 3), (8, 3), (9, 3), (3, 4))


@dataclass(frozen=True)
class BoundReport:
    """Guarantees for one (d, k); xi_lyons is None for k = 1."""

    d: int
    k: int
    sigma_opt: float
    sigma_w: float
    xi_ev: float
    xi_lyons: float | None
    cut_fraction: float
    normalized_value: float


def relative_expectation(sigma: float, d: int) -> float:
    """sigma expressed in units of -2 sqrt(d-1)/d (larger is better)."""
    if d < 3:
        raise ValueError(f"degree must be >= 3, got {d}")
    return sigma / (-2.0 * math.sqrt(d - 1.0) / d)


def lyons_xi(d: int, k: int) -> float:
    """Relative expectation of the competing factor-of-i.i.d. construction.

    Equal to (1 + (d-1)/(d(k-1)))^-1 = (k-1)/(k - 1/d).
    """
    if d < 3:
        raise ValueError(f"degree must be >= 3, got {d}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return (k - 1.0) / (k - 1.0 / d)


def dominance_threshold(k: int) -> float:
    """Degree above which the comparison is settled by the quadratic cosine bound.

    For d strictly above (k - (k-1)/(1 - 0.5 (pi/(k+1))^2))^-1 the relative
    expectation of the closed-form profile exceeds :func:`lyons_xi`.  The
    quadratic lower bound on the cosine is used only for k >= 3.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    half_square = 0.5 * (math.pi / (k + 1)) ** 2
    return 1.0 / (k - (k - 1.0) / (1.0 - half_square))


def cut_fraction(sigma: float) -> float:
    """Expected cut fraction arccos(sigma)/pi of a uniform-product solution."""
    return math.acos(min(1.0, max(-1.0, sigma))) / math.pi


def normalized_value(d: int, sigma: float) -> float:
    """Excess cut fraction over 1/2, scaled by sqrt(d)."""
    if d < 3:
        raise ValueError(f"degree must be >= 3, got {d}")
    return math.sqrt(d) * (cut_fraction(sigma) - 0.5)


def bound_report(d: int, k: int, profile: str = "optimal") -> BoundReport:
    """All guarantees for one (d, k).

    ``xi_ev`` always comes from the closed-form sigma (the published table's
    method); ``cut_fraction`` and ``normalized_value`` use the sigma selected
    by ``profile`` ("optimal" or "closedform").
    """
    if profile not in ("optimal", "closedform"):
        raise ValueError(f"profile must be 'optimal' or 'closedform', got {profile!r}")
    op = path_operator(d, k, "A")
    sigma_opt = min_eigenpair(op).value
    sigma_w = quadratic_form(op, closed_form_w(k))
    selected = sigma_opt if profile == "optimal" else sigma_w
    return BoundReport(
        d=d,
        k=k,
        sigma_opt=sigma_opt,
        sigma_w=sigma_w,
        xi_ev=relative_expectation(sigma_w, d),
        xi_lyons=lyons_xi(d, k) if k >= 2 else None,
        cut_fraction=cut_fraction(selected),
        normalized_value=normalized_value(d, selected),
    )


def comparison_table(d_values, k_values, profile: str = "optimal") -> list[BoundReport]:
    """One report per (k, d) pair, k-major, matching the published layout."""
    d_values = list(d_values)
    k_values = list(k_values)
    if not d_values or not k_values:
        raise ValueError("d and k ranges must be nonempty")
    return [bound_report(d, k, profile) for k in k_values for d in d_values]


def table1_rows() -> list[BoundReport]:
    """The eight published comparison rows: (k=3, d=3..9) and (k=4, d=3)."""
    return [bound_report(d, k) for d, k in TABLE1_PAIRS]


def truncate(x: float, places: int = 5) -> float:
    """Truncate toward zero at ``places`` decimals (published-table rendering).

    A half-ulp-scale guard absorbs binary representation dust so that e.g.
    14/20 truncates to 0.70000 rather than 0.69999.
    """
    scale = 10.0 ** places
    whole = math.floor(round(abs(x) * scale, 6))
    value = whole / scale
    return -value if x < 0 else value
