"""Brute-force partition counters, independent of every generating function.

Each counter enumerates the partitions it counts, fixing the smallest part
first so that the "odd parts below twice the smallest part" rule prunes the
search as parts are generated.  ``count_p`` is the one dynamic-programming
counter.
"""

from __future__ import annotations

import enum
from itertools import product
from typing import Iterator, Tuple

__all__ = [
    "PartitionStatistic",
    "OracleBoundError",
    "PLAIN_BOUND",
    "SPT_BOUND",
    "count_p",
    "count_p_omega",
    "count_p_nu",
    "count_spt_omega",
    "count_sptbar_omega",
    "omega_partitions",
    "omega_overpartitions",
    "nu_partitions",
    "oracle_value",
    "oracle_table",
]

PLAIN_BOUND = 40
SPT_BOUND = 35


class OracleBoundError(ValueError):
    pass


class PartitionStatistic(enum.Enum):
    P = "p"
    P_OMEGA = "pomega"
    P_NU = "pnu"
    SPT_OMEGA = "sptomega"
    SPTBAR_OMEGA = "sptbaromega"


def _check(n: int, bound: int, lowest: int = 0) -> None:
    if n < lowest:
        raise OracleBoundError(f"argument {n} below {lowest}")
    if n > bound:
        raise OracleBoundError(f"argument {n} exceeds enumeration bound {bound}")


def count_p(n: int) -> int:
    """p(n) by the coin-change table."""
    if n < 0:
        raise OracleBoundError(f"argument {n} below 0")
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            table[m] += table[m - part]
    return table[n]


def _allowed_above(s: int, part: int) -> bool:
    # A part above the smallest part s is either even or an odd number < 2s.
    return part % 2 == 0 or part < 2 * s


def _fill(remaining: int, smallest: int, top: int, distinct: bool) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of parts in (smallest, top] summing to remaining."""
    if remaining == 0:
        yield ()
        return
    for part in range(min(top, remaining), smallest, -1):
        if not _allowed_above(smallest, part):
            continue
        nxt = part - 1 if distinct else part
        for tail in _fill(remaining - part, smallest, nxt, distinct):
            yield (part,) + tail


def omega_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of n whose odd parts are all less than twice the smallest part."""
    for s in range(1, n + 1):
        for mult in range(1, n // s + 1):
            for rest in _fill(n - mult * s, s, n, distinct=False):
                yield rest + (s,) * mult


def nu_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Distinct-part partitions of n (one zero part allowed) with odd parts < 2*smallest."""
    if n == 0:
        yield ()
        return
    for s in range(1, n + 1):
        for rest in _fill(n - s, s, n, distinct=True):
            yield rest + (s,)
    # With a zero part the smallest part is 0 and no odd part survives.
    for rest in _fill(n, 0, n, distinct=True):
        yield rest + (0,)


def count_p_omega(n: int, bound: int = PLAIN_BOUND) -> int:
    _check(n, bound, 1)
    return sum(1 for _ in omega_partitions(n))


def count_p_nu(n: int, bound: int = PLAIN_BOUND) -> int:
    _check(n, bound, 0)
    return sum(1 for _ in nu_partitions(n))


def count_spt_omega(n: int, bound: int = SPT_BOUND) -> int:
    _check(n, bound, 1)
    return sum(lam.count(lam[-1]) for lam in omega_partitions(n))


def count_sptbar_omega(n: int, bound: int = SPT_BOUND) -> int:
    """Smallest parts over overpartitions whose smallest part is overlined."""
    _check(n, bound, 1)
    return sum(sum(1 for part, _ in lam if part == lam[-1][0])
               for lam in omega_overpartitions(n))


def omega_overpartitions(n: int) -> Iterator[Tuple[Tuple[int, bool], ...]]:
    """Overpartitions of n under the omega rule, as ``(part, overlined)`` pairs.

    Only the first occurrence of a size can carry the overline; the smallest
    size always does.
    """
    for lam in omega_partitions(n):
        sizes = sorted(set(lam), reverse=True)
        for marks in product((False, True), repeat=len(sizes) - 1):
            barred = dict(zip(sizes[:-1], marks))
            barred[sizes[-1]] = True
            out, seen = [], set()
            for part in lam:
                out.append((part, barred[part] and part not in seen))
                seen.add(part)
            yield tuple(out)


_COUNTERS = {
    PartitionStatistic.P: count_p,
    PartitionStatistic.P_OMEGA: count_p_omega,
    PartitionStatistic.P_NU: count_p_nu,
    PartitionStatistic.SPT_OMEGA: count_spt_omega,
    PartitionStatistic.SPTBAR_OMEGA: count_sptbar_omega,
}

_LOWEST = {
    PartitionStatistic.P: 0,
    PartitionStatistic.P_OMEGA: 1,
    PartitionStatistic.P_NU: 0,
    PartitionStatistic.SPT_OMEGA: 1,
    PartitionStatistic.SPTBAR_OMEGA: 1,
}


def oracle_value(kind, n: int) -> int:
    return _COUNTERS[PartitionStatistic(kind)](n)


def oracle_table(kind, max_n: int) -> list:
    """``[(n, value)]`` for every admissible n up to max_n."""
    kind = PartitionStatistic(kind)
    return [(n, _COUNTERS[kind](n)) for n in range(_LOWEST[kind], max_n + 1)]
