"""Named series: the mock theta functions omega and nu, the partition
generating functions built from them, and the atoms ``T`` and ``K``.

``spt_omega`` and its overpartition analogue are available two ways: on odd
arguments through their eta quotients, and on all arguments through a direct
smallest-part decomposition of the defining partitions.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Callable, Dict, Optional

from .qproducts import eta_quotient, theta_phi_neg, theta_psi, triple_product
from .series import (
    Series,
    SeriesError,
    add,
    div_binomial,
    invert,
    mul,
    mul_binomial,
    negate_q,
    shift,
    truncate,
)

__all__ = [
    "NamedSeriesTag",
    "omega_series",
    "nu_series",
    "p_nu_series",
    "p_omega_series",
    "sptw_odd_series",
    "sptbarw_odd_series",
    "sptw_series",
    "sptbarw_series",
    "p_omega_by_smallest_part",
    "t_series",
    "k_series",
    "f_value",
    "named_series",
]


@lru_cache(maxsize=32)
def omega_series(N: int, modulus: Optional[int] = None) -> Series:
    """``omega(q) = sum_n q^{2n^2+2n} / (q; q^2)_{n+1}^2``."""
    acc = Series.zero(N, modulus)
    den = div_binomial(div_binomial(Series.one(N, modulus), 1), 1)
    n = 0
    while 2 * n * n + 2 * n < N:
        e = 2 * n * n + 2 * n
        if n:
            k = 2 * n + 1
            den = div_binomial(div_binomial(truncate(den, N - e), k), k)
        acc = add(acc, shift(den, e))
        n += 1
    return acc


@lru_cache(maxsize=32)
def nu_series(N: int, modulus: Optional[int] = None) -> Series:
    """``nu(q) = sum_n q^{n(n+1)} / (-q; q^2)_{n+1}``."""
    acc = Series.zero(N, modulus)
    den = div_binomial(Series.one(N, modulus), 1, 1)
    n = 0
    while n * (n + 1) < N:
        e = n * (n + 1)
        if n:
            den = div_binomial(truncate(den, N - e), 2 * n + 1, 1)
        acc = add(acc, shift(den, e))
        n += 1
    return acc


def p_nu_series(N: int, modulus: Optional[int] = None) -> Series:
    """``sum p_nu(n) q^n = nu(-q)``."""
    return negate_q(nu_series(N, modulus))


def p_omega_series(N: int, modulus: Optional[int] = None) -> Series:
    """``sum p_omega(n) q^n = q*omega(q)``."""
    if N == 1:
        return Series.zero(1, modulus)
    return shift(omega_series(N - 1, modulus), 1)


def sptw_odd_series(N: int, modulus: Optional[int] = None) -> Series:
    """Coefficient ``n`` is ``spt_omega(2n+1)``: ``E2^8/E1^5``."""
    return eta_quotient({2: 8, 1: -5}, N, modulus)


def sptbarw_odd_series(N: int, modulus: Optional[int] = None) -> Series:
    """Coefficient ``n`` is the overpartition ``spt_omega(2n+1)``: ``E2^9/E1^6``."""
    return eta_quotient({2: 9, 1: -6}, N, modulus)


def _smallest_part_sum(N: int, modulus: Optional[int], count_parts: bool,
                       overlined: bool) -> Series:
    # Partitions with smallest part s may use any part in (s, 2s] and even
    # parts beyond 2s.  Walking s downward, that part set gains s+1 and loses
    # 2s+1, so the product over it updates with two binomial factors per step.
    acc = Series.zero(N, modulus)
    rest = Series.one(N, modulus)
    for s in range(N - 1, 0, -1):
        k_in, k_out = s + 1, 2 * s + 1
        rest = mul_binomial(div_binomial(rest, k_in, -1), k_out, -1)
        if overlined:
            rest = div_binomial(mul_binomial(rest, k_in, 1), k_out, 1)
        term = div_binomial(truncate(rest, N - s), s, -1)
        if count_parts:
            term = div_binomial(term, s, -1)
        acc = add(acc, shift(term, s))
    return acc


@lru_cache(maxsize=16)
def sptw_series(N: int, modulus: Optional[int] = None) -> Series:
    """``sum spt_omega(n) q^n`` over all ``n``, by smallest part."""
    return _smallest_part_sum(N, modulus, count_parts=True, overlined=False)


@lru_cache(maxsize=16)
def sptbarw_series(N: int, modulus: Optional[int] = None) -> Series:
    """Overpartition analogue of :func:`sptw_series`, smallest part overlined."""
    return _smallest_part_sum(N, modulus, count_parts=True, overlined=True)


def p_omega_by_smallest_part(N: int, modulus: Optional[int] = None) -> Series:
    """``sum p_omega(n) q^n`` built from the partition definition, not from omega."""
    return _smallest_part_sum(N, modulus, count_parts=False, overlined=False)


def t_series(N: int, modulus: Optional[int] = None) -> Series:
    """``T(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5))``.

    Computed as a ratio of two sparse triple products; the common
    ``(q^5;q^5)_inf`` factor cancels.
    """
    return mul(triple_product(2, 5, N, modulus), invert(triple_product(1, 5, N, modulus)))


def k_series(N: int, modulus: Optional[int] = None) -> Series:
    """``K = E2*E5^5 / (E1*E10^5)``."""
    return eta_quotient({2: 1, 5: 5, 1: -1, 10: -5}, N, modulus)


def f_value(n: int) -> int:
    """1-shell totally symmetric plane partitions, on arguments ``6m+1`` only."""
    if n < 1 or n % 6 != 1:
        raise SeriesError(f"f(n) is only available for n = 6m+1, got {n}")
    m = (n - 1) // 6
    return p_nu_series(2 * m + 1).coeff(2 * m)


class NamedSeriesTag(enum.Enum):
    OMEGA = "OMEGA"
    NU = "NU"
    PNU = "PNU"
    POMEGA = "POMEGA"
    SPTW_ODD = "SPTW_ODD"
    SPTBARW_ODD = "SPTBARW_ODD"
    SPTW = "SPTW"
    SPTBARW = "SPTBARW"
    T = "T"
    K = "K"
    PHI = "PHI"
    PSI = "PSI"


_CONSTRUCTORS: Dict[NamedSeriesTag, Callable[..., Series]] = {
    NamedSeriesTag.OMEGA: omega_series,
    NamedSeriesTag.NU: nu_series,
    NamedSeriesTag.PNU: p_nu_series,
    NamedSeriesTag.POMEGA: p_omega_series,
    NamedSeriesTag.SPTW_ODD: sptw_odd_series,
    NamedSeriesTag.SPTBARW_ODD: sptbarw_odd_series,
    NamedSeriesTag.SPTW: sptw_series,
    NamedSeriesTag.SPTBARW: sptbarw_series,
    NamedSeriesTag.T: t_series,
    NamedSeriesTag.K: k_series,
    NamedSeriesTag.PHI: theta_phi_neg,
    NamedSeriesTag.PSI: theta_psi,
}


def named_series(tag, N: int, modulus: Optional[int] = None) -> Series:
    tag = NamedSeriesTag(tag)
    return _CONSTRUCTORS[tag](N, modulus)
