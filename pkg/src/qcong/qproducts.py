"""q-Pochhammer products, eta products ``E_j = (q^j; q^j)_inf`` and theta series."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Tuple

from .series import (
    Series,
    SeriesError,
    div_binomial,
    invert,
    mul,
    mul_binomial,
    power,
    substitute,
    truncate,
)

__all__ = [
    "EtaExponentMap",
    "pochhammer_inf",
    "pochhammer_fin",
    "eta",
    "eta_power",
    "eta_quotient",
    "partition_series",
    "pentagonal_series",
    "jacobi_cube_series",
    "theta_phi_neg",
    "theta_psi",
    "triple_product",
]


@dataclass(frozen=True)
class EtaExponentMap:
    """Normal form ``{j: e_j}`` of the eta quotient ``prod E_j^{e_j}``."""

    entries: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: dict = {}
        for j, e in self.entries:
            j, e = int(j), int(e)
            if j < 1:
                raise SeriesError(f"eta index must be >= 1, got {j}")
            merged[j] = merged.get(j, 0) + e
        norm = tuple(sorted((j, e) for j, e in merged.items() if e))
        object.__setattr__(self, "entries", norm)

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "EtaExponentMap":
        return cls(tuple(mapping.items()))

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.entries)

    def __getitem__(self, j: int) -> int:
        return dict(self.entries).get(j, 0)

    def __mul__(self, other: "EtaExponentMap") -> "EtaExponentMap":
        return EtaExponentMap(self.entries + other.entries)

    def __pow__(self, k: int) -> "EtaExponentMap":
        return EtaExponentMap(tuple((j, e * k) for j, e in self.entries))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return "*".join(f"E{j}^{e}" if e != 1 else f"E{j}" for j, e in self.entries)


def _as_map(m) -> EtaExponentMap:
    if isinstance(m, EtaExponentMap):
        return m
    return EtaExponentMap.of(m)


def pochhammer_inf(a: int, b: int, N: int, modulus: Optional[int] = None) -> Series:
    """``(q^a; q^b)_inf`` truncated to ``N`` coefficients."""
    if a < 1 or b < 1:
        raise SeriesError(f"need a >= 1 and b >= 1, got a={a}, b={b}")
    s = Series.one(N, modulus)
    k = a
    while k < N:
        s = mul_binomial(s, k, -1)
        k += b
    return s


def pochhammer_fin(a: int, b: int, n: int, N: int,
                   modulus: Optional[int] = None) -> Series:
    """``(q^a; q^b)_n``, exactly ``n`` factors, truncated to ``N``."""
    if n < 0:
        raise SeriesError("factor count must be nonnegative")
    s = Series.one(N, modulus)
    for i in range(n):
        k = a + i * b
        if k >= N:
            break
        s = mul_binomial(s, k, -1)
    return s


def _pentagonal_terms(N: int, step: int = 1) -> dict:
    terms = {}
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = step * kk * (3 * kk + 1) // 2
            if e < N:
                terms[e] = -1 if kk % 2 else 1
                hit = True
        if not hit:
            return terms
        k += 1


@lru_cache(maxsize=64)
def pentagonal_series(N: int, modulus: Optional[int] = None) -> Series:
    """``sum_k (-1)^k q^{k(3k+1)/2}`` over all integers ``k``."""
    return Series.from_sparse(_pentagonal_terms(N), N, modulus)


def eta(j: int, N: int, modulus: Optional[int] = None) -> Series:
    """``E_j`` from its sparse pentagonal expansion."""
    if j < 1:
        raise SeriesError(f"eta index must be >= 1, got {j}")
    return Series.from_sparse(_pentagonal_terms(N, j), N, modulus)


def _bucket(N: int) -> int:
    # Round up to at most 1/16 above N so nearby demands share cache entries.
    step = 1 << max(0, N.bit_length() - 5)
    return -(-N // step) * step


def partition_series(N: int, modulus: Optional[int] = None) -> Series:
    """``1/E_1 = sum p(n) q^n``."""
    return truncate(_partition_series(_bucket(N), modulus), N)


@lru_cache(maxsize=32)
def _partition_series(N: int, modulus: Optional[int]) -> Series:
    # Sparse pentagonal recurrence for short series, Newton iteration beyond.
    return invert(pentagonal_series(N, modulus))


def _eta1_power(e: int, N: int, modulus: Optional[int]) -> Series:
    return truncate(_eta1_power_cached(e, _bucket(N), modulus), N)


@lru_cache(maxsize=128)
def _eta1_power_cached(e: int, N: int, modulus: Optional[int]) -> Series:
    if e == 1:
        return pentagonal_series(N, modulus)
    if e == -1:
        return partition_series(N, modulus)
    if e < 0:
        # Square the partition series rather than invert a dense power.
        return power(partition_series(N, modulus), -e)
    half = _eta1_power(e // 2, N, modulus)
    sq = mul(half, half)
    return mul(sq, pentagonal_series(N, modulus)) if e % 2 else sq


def eta_power(j: int, e: int, N: int, modulus: Optional[int] = None) -> Series:
    """``E_j^e``, built as ``(E_1^e)(q^j)``."""
    if j < 1:
        raise SeriesError(f"eta index must be >= 1, got {j}")
    if e == 0:
        return Series.one(N, modulus)
    inner = _eta1_power(e, -(-N // j), modulus)
    return truncate(substitute(inner, j), N)


def eta_quotient(m, N: int, modulus: Optional[int] = None) -> Series:
    """``prod E_j^{e_j}`` to ``N`` coefficients."""
    result = None
    for j, e in _as_map(m):
        factor = eta_power(j, e, N, modulus)
        result = factor if result is None else mul(result, factor)
    return result if result is not None else Series.one(N, modulus)


def jacobi_cube_series(N: int, modulus: Optional[int] = None) -> Series:
    """``sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}``."""
    terms = {}
    k = 0
    while k * (k + 1) // 2 < N:
        terms[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    return Series.from_sparse(terms, N, modulus)


def theta_phi_neg(N: int, modulus: Optional[int] = None) -> Series:
    """``phi(-q) = sum_{j in Z} (-1)^j q^{j^2}``."""
    terms = {0: 1}
    j = 1
    while j * j < N:
        terms[j * j] = 2 * (-1) ** j
        j += 1
    return Series.from_sparse(terms, N, modulus)


def theta_psi(N: int, modulus: Optional[int] = None) -> Series:
    """``psi(q) = sum_{j>=0} q^{j(j+1)/2}``."""
    terms = {}
    j = 0
    while j * (j + 1) // 2 < N:
        terms[j * (j + 1) // 2] = 1
        j += 1
    return Series.from_sparse(terms, N, modulus)


def triple_product(a: int, m: int, N: int, modulus: Optional[int] = None) -> Series:
    """``(q^a, q^(m-a), q^m; q^m)_inf`` as the sparse sum ``sum (-1)^n q^{m n(n-1)/2 + a n}``."""
    if not 0 < a < m:
        raise SeriesError(f"need 0 < a < m, got a={a}, m={m}")
    terms = {}
    n = 0
    while True:
        hit = False
        for nn in ((n, -n) if n else (0,)):
            e = m * nn * (nn - 1) // 2 + a * nn
            if e < N:
                terms[e] = terms.get(e, 0) + (-1) ** abs(nn)
                hit = True
        if not hit:
            return Series.from_sparse(terms, N, modulus)
        n += 1


def inverse_pochhammer_inf(a: int, b: int, N: int,
                           modulus: Optional[int] = None) -> Series:
    """``1/(q^a; q^b)_inf`` by successive division by ``1 - q^k``."""
    s = Series.one(N, modulus)
    k = a
    while k < N:
        s = div_binomial(s, k, -1)
        k += b
    return s
