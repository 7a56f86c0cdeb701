"""Truncated q-series, eta quotients and mock theta partition functions.

Identities and congruences are written in a small text language (``dsl``),
collected in a catalog and checked coefficient by coefficient (``harness``).
"""

from .series import (
    ModulusMismatch,
    NonUnitError,
    PrecisionError,
    Series,
    SeriesError,
    extract_ap,
    invert,
    mul,
    negate_q,
    reduce_mod,
    substitute,
)
from .qproducts import EtaExponentMap, eta, eta_quotient, partition_series, pochhammer_inf
from .special import NamedSeriesTag, named_series
from .oracle import PartitionStatistic, oracle_table, oracle_value
from .dsl import ParseError, Statement, check, evaluate, parse, required_precision, unparse
from .harness import crosscheck, load_catalog, run_catalog, scan_congruences

__version__ = "0.1.0"

__all__ = [
    "ModulusMismatch",
    "NonUnitError",
    "PrecisionError",
    "Series",
    "SeriesError",
    "extract_ap",
    "invert",
    "mul",
    "negate_q",
    "reduce_mod",
    "substitute",
    "EtaExponentMap",
    "eta",
    "eta_quotient",
    "partition_series",
    "pochhammer_inf",
    "NamedSeriesTag",
    "named_series",
    "PartitionStatistic",
    "oracle_table",
    "oracle_value",
    "ParseError",
    "Statement",
    "check",
    "evaluate",
    "parse",
    "required_precision",
    "unparse",
    "crosscheck",
    "load_catalog",
    "run_catalog",
    "scan_congruences",
]
