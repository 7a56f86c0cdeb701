"""Catalog loading, verification runs, congruence scans and oracle crosschecks."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import oracle, qproducts, special
from .dsl import (
    BUILTIN_NAMES,
    CheckResult,
    DSLError,
    Expr,
    Let,
    Statement,
    check,
    evaluate,
    free_names,
    parse_expr,
    parse_program,
)
from .series import SeriesError

__all__ = [
    "CatalogError",
    "Catalog",
    "RunReport",
    "ScanHit",
    "ScanResult",
    "CrosscheckRow",
    "CrosscheckReport",
    "shipped_catalog_path",
    "load_catalog",
    "parse_catalog",
    "effective_precision",
    "run_catalog",
    "scan_congruences",
    "crosscheck",
    "FAMILIES",
]

FAMILIES = ("p", "pomega", "pnu", "sptomega", "sptbaromega")


class CatalogError(DSLError):
    pass


def shipped_catalog_path() -> Path:
    return Path(str(resources.files("qcong") / "catalogs" / "mock_theta.qc"))


@dataclass
class Catalog:
    bindings: Dict[str, Expr] = field(default_factory=dict)
    statements: List[Statement] = field(default_factory=list)

    def names(self) -> List[str]:
        return [s.name for s in self.statements]

    def get(self, name: str) -> Statement:
        for s in self.statements:
            if s.name == name:
                return s
        raise KeyError(name)

    def select(self, pattern: Optional[str] = None) -> List[Statement]:
        if not pattern:
            return list(self.statements)
        return [s for s in self.statements if pattern in s.name]

    def add(self, item: Union[Let, Statement], source: str = "<string>") -> None:
        where = f"{source}:{item.pos[0]}" if item.pos else source
        unresolved = free_names(item) - set(self.bindings) - set(BUILTIN_NAMES)
        if unresolved:
            raise CatalogError(f"{where}: unknown name(s) {', '.join(sorted(unresolved))}")
        if isinstance(item, Let):
            if item.name in self.bindings:
                raise CatalogError(f"{where}: duplicate binding {item.name}")
            self.bindings[item.name] = item.expr
        else:
            if any(s.name == item.name for s in self.statements):
                raise CatalogError(f"{where}: duplicate statement {item.name}")
            self.statements.append(item)


def parse_catalog(text: str, source: str = "<string>",
                  into: Optional[Catalog] = None) -> Catalog:
    cat = into if into is not None else Catalog()
    try:
        items = parse_program(text)
    except DSLError as exc:
        raise CatalogError(f"{source}: {exc}") from exc
    for item in items:
        cat.add(item, source)
    return cat


def load_catalog(paths: Optional[Sequence[Union[str, Path]]] = None) -> Catalog:
    """Parse catalog files in order into one catalog; the shipped one by default."""
    paths = list(paths) if paths else [shipped_catalog_path()]
    cat = Catalog()
    for p in paths:
        parse_catalog(Path(p).read_text(encoding="utf-8"), str(p), cat)
    return cat


def effective_precision(stmt: Statement, N: Optional[int] = None) -> int:
    """A run-wide N caps a statement's own [N=...] tag and replaces the default."""
    if N is None:
        return stmt.default_precision
    if stmt.precision is not None:
        return min(N, stmt.precision)
    return N


def _check_one(task) -> CheckResult:
    stmt, N, env = task
    try:
        return check(stmt, N, env)
    except (DSLError, SeriesError) as exc:
        return CheckResult(stmt.name, stmt.kind, stmt.modulus, N, False,
                           experimental=stmt.experimental, error=str(exc))


@dataclass
class RunReport:
    results: List[CheckResult]
    millis: float = 0.0

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed and not r.experimental]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def summary(self) -> dict:
        exp = [r for r in self.results if r.experimental]
        return {
            "checked": len(self.results),
            "passed": sum(r.passed for r in self.results),
            "failed": len(self.failures),
            "experimental": len(exp),
            "experimental_failed": sum(not r.passed for r in exp),
            "millis": round(self.millis, 3),
        }

    def to_json(self) -> str:
        return json.dumps({"results": [r.as_dict() for r in self.results],
                           "summary": self.summary()}, indent=2)


def run_catalog(files: Optional[Sequence[Union[str, Path]]] = None,
                N: Optional[int] = None, filter: Optional[str] = None,
                jobs: int = 1, catalog: Optional[Catalog] = None) -> RunReport:
    """Check every selected statement; results come back in catalog order."""
    cat = catalog if catalog is not None else load_catalog(files)
    selected = cat.select(filter)
    if filter and not selected:
        # An empty selection would otherwise report a vacuous pass.
        raise CatalogError(f"no statement name contains {filter!r}")
    tasks = [(s, effective_precision(s, N), cat.bindings) for s in selected]
    t0 = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_one, tasks))
    else:
        results = [_check_one(t) for t in tasks]
    return RunReport(results, (time.perf_counter() - t0) * 1000.0)


# -- congruence scanning --------------------------------------------------------

@dataclass(frozen=True)
class ScanHit:
    step: int
    offset: int
    witnesses: int

    def as_dict(self) -> dict:
        return {"step": self.step, "offset": self.offset, "witnesses": self.witnesses}


@dataclass
class ScanResult:
    modulus: int
    max_step: int
    precision: int
    hits: List[ScanHit]

    def pairs(self) -> List[Tuple[int, int]]:
        return [(h.step, h.offset) for h in self.hits]

    def primitive(self) -> List[ScanHit]:
        """Hits not implied by a hit with a smaller step dividing this one."""
        found = set(self.pairs())
        return [h for h in self.hits
                if not any((d, h.offset % d) in found
                           for d in range(1, h.step) if h.step % d == 0)]

    def to_json(self) -> str:
        return json.dumps({"modulus": self.modulus, "max_step": self.max_step,
                           "precision": self.precision,
                           "hits": [h.as_dict() for h in self.hits]}, indent=2)


def scan_congruences(e: Union[str, Expr], M: int, max_step: int, N: int,
                     env: Optional[Dict[str, Expr]] = None) -> ScanResult:
    """All progressions A*n+B (A <= max_step) whose computed coefficients vanish mod M."""
    if M < 2:
        raise ValueError("modulus must be at least 2")
    if max_step < 1:
        raise ValueError("max_step must be at least 1")
    if N < 3 * max_step:
        raise ValueError(f"precision {N} too small: need at least 3*max_step = {3 * max_step}")
    if isinstance(e, str):
        e = parse_expr(e)
    s = evaluate(e, N, env, modulus=M)
    zero = np.asarray(s.coeffs, dtype=object) % M == 0
    hits = []
    for A in range(1, max_step + 1):
        for B in range(A):
            column = zero[B::A]
            if column.size and column.all():
                hits.append(ScanHit(A, B, int(column.size)))
    return ScanResult(M, max_step, N, hits)


# -- oracle crosschecks -----------------------------------------------------------

@dataclass(frozen=True)
class CrosscheckRow:
    n: int
    oracle: int
    series: int
    source: str


@dataclass
class CrosscheckReport:
    family: str
    max_n: int
    rows: List[CrosscheckRow]

    @property
    def mismatches(self) -> List[CrosscheckRow]:
        return [r for r in self.rows if r.oracle != r.series]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _series_values(family: str, max_n: int) -> Dict[int, Tuple[int, str]]:
    N = max_n + 1
    if family == "p":
        s = qproducts.partition_series(N)
        return {n: (s.coeff(n), "1/E1") for n in range(N)}
    if family == "pomega":
        s = special.p_omega_series(N)
        return {n: (s.coeff(n), "q*omega(q)") for n in range(1, N)}
    if family == "pnu":
        s = special.p_nu_series(N)
        return {n: (s.coeff(n), "nu(-q)") for n in range(N)}
    odd = special.sptw_odd_series if family == "sptomega" else special.sptbarw_odd_series
    full = special.sptw_series if family == "sptomega" else special.sptbarw_series
    odd_s, full_s = odd(N // 2 + 1), full(N)
    label = "E2^8/E1^5" if family == "sptomega" else "E2^9/E1^6"
    out = {}
    for n in range(1, N):
        if n % 2:
            out[n] = (odd_s.coeff((n - 1) // 2), label)
        else:
            out[n] = (full_s.coeff(n), "smallest-part sum")
    return out


def crosscheck(family: str, max_n: int) -> CrosscheckReport:
    """Compare brute-force counts with series coefficients for every n <= max_n.

    For the spt families odd n are read from the eta quotient and even n from
    the smallest-part series.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    table = oracle.oracle_table(family, max_n)
    series = _series_values(family, max_n)
    rows = [CrosscheckRow(n, v, *series[n]) for n, v in table]
    return CrosscheckReport(family, max_n, rows)
