"""Dense truncated power series in ``q`` with exact or modular integer coefficients.

A :class:`Series` knows the coefficients of ``q^0 .. q^(precision-1)``.  Exact
series hold arbitrary-precision Python integers; modular series hold residues
in ``[0, M)`` and are stored in machine words whenever ``M < 2**31`` so that
products of two residues cannot overflow.

Binary operations truncate to the smaller precision.  Products of long dense
series go through Kronecker substitution: both operands are packed into one
big integer each, multiplied with GMP, and unpacked again.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

import gmpy2
import numpy as np

__all__ = [
    "Series",
    "SeriesError",
    "ModulusMismatch",
    "NonUnitError",
    "PrecisionError",
    "add",
    "sub",
    "neg",
    "scalar_mul",
    "mul",
    "invert",
    "power",
    "shift",
    "substitute",
    "negate_q",
    "extract_ap",
    "reduce_mod",
    "truncate",
    "coeff",
    "mul_binomial",
    "div_binomial",
    "first_difference",
]


class SeriesError(ValueError):
    """Base class for series-level contract violations."""


class ModulusMismatch(SeriesError):
    pass


class NonUnitError(SeriesError, ZeroDivisionError):
    pass


class PrecisionError(SeriesError, IndexError):
    pass


# Residues below this bound live in int64 arrays; the square of a residue
# still fits in a signed 64-bit word.
_WORD_LIMIT = 1 << 31

# Sparse-operand products cost (nonzeros * n) vector operations.
_SPARSE_TERMS = 24
# Schoolbook convolution below this length.
_SCHOOLBOOK = 48
# Sparse inversion recurrence cost budget (scalar Python operations).
_SPARSE_INVERT_BUDGET = 2_000_000


def _dtype(modulus: Optional[int]):
    if modulus is not None and modulus < _WORD_LIMIT:
        return np.int64
    return object


def _zeros(n: int, modulus: Optional[int]) -> np.ndarray:
    dt = _dtype(modulus)
    if dt is object:
        out = np.empty(n, dtype=object)
        out[:] = 0
        return out
    return np.zeros(n, dtype=np.int64)


def _to_residues(arr: np.ndarray, modulus: int) -> np.ndarray:
    """Reduce any coefficient array into the storage form for ``modulus``."""
    if _dtype(modulus) is object:
        out = np.asarray(arr, dtype=object) % modulus
        return out
    if arr.dtype == object:
        return (arr % modulus).astype(np.int64)
    return arr % modulus


class Series:
    """Immutable truncated power series ``sum c_n q^n + O(q^precision)``."""

    __slots__ = ("_c", "_m")

    def __init__(self, coeffs: Iterable[int], modulus: Optional[int] = None):
        vals = [int(c) for c in coeffs]
        if not vals:
            raise SeriesError("a series needs at least one known coefficient")
        if modulus is not None:
            modulus = int(modulus)
            if modulus < 1:
                raise SeriesError(f"modulus must be positive, got {modulus}")
        arr = np.empty(len(vals), dtype=object)
        arr[:] = vals
        if modulus is not None:
            arr = _to_residues(arr, modulus)
        arr.flags.writeable = False
        self._c = arr
        self._m = modulus

    @classmethod
    def _wrap(cls, arr: np.ndarray, modulus: Optional[int]) -> "Series":
        # Trusted constructor: arr already has the storage dtype and range.
        obj = cls.__new__(cls)
        arr.flags.writeable = False
        obj._c = arr
        obj._m = modulus
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, precision: int, modulus: Optional[int] = None) -> "Series":
        _check_precision(precision)
        return cls._wrap(_zeros(precision, modulus), modulus)

    @classmethod
    def constant(cls, c: int, precision: int, modulus: Optional[int] = None) -> "Series":
        return cls.monomial(c, 0, precision, modulus)

    @classmethod
    def one(cls, precision: int, modulus: Optional[int] = None) -> "Series":
        return cls.monomial(1, 0, precision, modulus)

    @classmethod
    def monomial(cls, c: int, m: int, precision: int,
                 modulus: Optional[int] = None) -> "Series":
        """``c*q^m`` known to ``precision`` coefficients."""
        _check_precision(precision)
        if m < 0:
            raise SeriesError("negative powers of q are not representable")
        arr = _zeros(precision, modulus)
        if m < precision:
            arr[m] = c % modulus if modulus is not None else int(c)
        return cls._wrap(arr, modulus)

    @classmethod
    def from_sparse(cls, terms: dict, precision: int,
                    modulus: Optional[int] = None) -> "Series":
        """Build from ``{exponent: coefficient}``; exponents past precision are dropped."""
        _check_precision(precision)
        arr = _zeros(precision, modulus)
        for k, c in terms.items():
            if 0 <= k < precision:
                arr[k] = (int(arr[k]) + int(c)) % modulus if modulus is not None \
                    else arr[k] + int(c)
        return cls._wrap(arr, modulus)

    # -- accessors --------------------------------------------------------

    @property
    def precision(self) -> int:
        return len(self._c)

    @property
    def modulus(self) -> Optional[int]:
        return self._m

    @property
    def coeffs(self) -> tuple:
        return tuple(int(c) for c in self._c)

    def coeff(self, n: int) -> int:
        return coeff(self, n)

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, n: int) -> int:
        return coeff(self, n)

    def signed_coeffs(self) -> tuple:
        """Coefficients, with residues mapped to the symmetric range (-M/2, M/2]."""
        if self._m is None:
            return self.coeffs
        m = self._m
        return tuple(c - m if c > m // 2 else c for c in self.coeffs)

    # -- arithmetic dunders ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            return add(self, Series.constant(other, self.precision, self._m))
        if isinstance(other, Series):
            return add(self, other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return sub(self, Series.constant(other, self.precision, self._m))
        if isinstance(other, Series):
            return sub(self, other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return sub(Series.constant(other, self.precision, self._m), self)
        return NotImplemented

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(self, other)
        if isinstance(other, Series):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return mul(self, invert(other))
        return NotImplemented

    def __pow__(self, e: int):
        return power(self, e)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self._m == other._m and self.precision == other.precision
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self._m, self.coeffs))

    def __repr__(self):
        shown = []
        for k, c in enumerate(self.coeffs[:12]):
            if c:
                shown.append(f"{c}*q^{k}" if k else str(c))
        body = " + ".join(shown) or "0"
        mod = f", mod {self._m}" if self._m is not None else ""
        return f"Series({body} + O(q^{self.precision}){mod})"


def _check_precision(n: int) -> None:
    if n < 1:
        raise PrecisionError(f"precision must be at least 1, got {n}")


def _coerce(a: Series, b: Series):
    """Shared precision, modulus and aligned storage arrays for a binary op."""
    if a._m is not None and b._m is not None and a._m != b._m:
        raise ModulusMismatch(f"moduli differ: {a._m} vs {b._m}")
    m = a._m if a._m is not None else b._m
    n = min(a.precision, b.precision)
    x, y = a._c[:n], b._c[:n]
    if m is not None:
        if a._m is None:
            x = _to_residues(x, m)
        if b._m is None:
            y = _to_residues(y, m)
    return x, y, n, m


# -- ring operations ------------------------------------------------------

def add(a: Series, b: Series) -> Series:
    x, y, n, m = _coerce(a, b)
    out = x + y
    if m is not None:
        out %= m
    return Series._wrap(out, m)


def sub(a: Series, b: Series) -> Series:
    x, y, n, m = _coerce(a, b)
    out = x - y
    if m is not None:
        out %= m
    return Series._wrap(out, m)


def neg(a: Series) -> Series:
    out = -a._c
    if a._m is not None:
        out %= a._m
    return Series._wrap(out, a._m)


def scalar_mul(a: Series, c: int) -> Series:
    c = int(c)
    if a._m is not None:
        out = (a._c * (c % a._m)) % a._m
    else:
        out = a._c * c
    return Series._wrap(out, a._m)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the shared precision."""
    x, y, n, m = _coerce(a, b)
    return Series._wrap(_mul_arrays(x, y, n, m), m)


def _mul_arrays(x: np.ndarray, y: np.ndarray, n: int, m: Optional[int]) -> np.ndarray:
    x, y = x[:n], y[:n]
    nzx, nzy = np.flatnonzero(x), np.flatnonzero(y)
    if len(nzx) == 0 or len(nzy) == 0:
        return _zeros(n, m)
    if len(nzy) < len(nzx):
        x, y, nzx, nzy = y, x, nzy, nzx
    if len(nzx) <= _SPARSE_TERMS:
        return _mul_sparse(x, nzx, y, n, m)
    if n <= _SCHOOLBOOK:
        out = np.convolve(x, y)[:n]
        if m is not None:
            out = _to_residues(out, m)
        return out
    if m is None:
        return _kronecker_exact(x, y, n)
    return _kronecker_mod(x, y, n, m)


def _mul_sparse(x, nzx, y, n, m):
    out = _zeros(n, m)
    for k in nzx:
        c = x[k]
        if m is None:
            out[k:] += c * y[: n - k]
        else:
            out[k:] = (out[k:] + c * y[: n - k]) % m
    return out


def _offset_block(count: int, width: int, offset: int) -> int:
    return int.from_bytes(offset.to_bytes(width, "little") * count, "little")


def _kronecker_exact(x: np.ndarray, y: np.ndarray, n: int) -> np.ndarray:
    mx = max(abs(int(v)) for v in x)
    my = mx if y is x else max(abs(int(v)) for v in y)
    bound = n * mx * my
    width = (bound.bit_length() + 8) // 8  # 2**(8*width-1) > bound
    offset = 1 << (8 * width - 1)
    shift_const = _offset_block(n, width, offset)

    def pack(vals):
        raw = b"".join((int(v) + offset).to_bytes(width, "little") for v in vals)
        return gmpy2.mpz(int.from_bytes(raw, "little") - shift_const)

    px = pack(x)
    prod = px * px if y is x else px * pack(y)
    mask = (gmpy2.mpz(1) << (8 * width * n)) - 1
    low = int((prod + shift_const) & mask)
    buf = low.to_bytes(width * n, "little")
    out = np.empty(n, dtype=object)
    out[:] = [int.from_bytes(buf[i * width:(i + 1) * width], "little") - offset
              for i in range(n)]
    return out


def _kronecker_mod(x: np.ndarray, y: np.ndarray, n: int, m: int) -> np.ndarray:
    bound = n * (m - 1) ** 2
    width = max(1, (bound.bit_length() + 7) // 8)
    if width > 8 or x.dtype == object:
        out = _kronecker_exact(x.astype(object), y.astype(object), n)
        return _to_residues(out, m)

    def pack(vals):
        raw = vals.astype("<u8").view(np.uint8).reshape(-1, 8)[:, :width].tobytes()
        return gmpy2.mpz(int.from_bytes(raw, "little"))

    px = pack(x)
    prod = px * px if y is x else px * pack(y)
    mask = (gmpy2.mpz(1) << (8 * width * n)) - 1
    buf = int(prod & mask).to_bytes(width * n, "little")
    wide = np.zeros((n, 8), dtype=np.uint8)
    wide[:, :width] = np.frombuffer(buf, dtype=np.uint8).reshape(n, width)
    return (wide.view("<u8").ravel() % np.uint64(m)).astype(np.int64)


def _unit_inverse(a0: int, m: Optional[int]) -> int:
    if m is None:
        if a0 not in (1, -1):
            raise NonUnitError(f"constant term {a0} is not invertible over the integers")
        return a0
    if math.gcd(a0, m) != 1:
        raise NonUnitError(f"constant term {a0} is not a unit mod {m}")
    return pow(a0, -1, m)


def invert(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be a unit."""
    n, m = a.precision, a._m
    inv0 = _unit_inverse(int(a._c[0]), m)
    nz = np.flatnonzero(a._c)
    nz = nz[nz > 0]
    if len(nz) * n <= _SPARSE_INVERT_BUDGET:
        return Series._wrap(_invert_recurrence(a._c, nz, inv0, n, m), m)
    return Series._wrap(_invert_newton(a._c, inv0, n, m), m)


def _invert_recurrence(arr, nz, inv0, n, m):
    # b_i = -inv0 * sum_{k>=1} a_k b_{i-k}, touching only the nonzero a_k.
    terms = [(int(k), int(arr[k])) for k in nz]
    b = [0] * n
    b[0] = inv0
    for i in range(1, n):
        s = 0
        for k, c in terms:
            if k > i:
                break
            s += c * b[i - k]
        s = -inv0 * s
        b[i] = s % m if m is not None else s
    out = np.empty(n, dtype=object)
    out[:] = b
    if m is not None:
        out = _to_residues(out, m)
    return out


def _invert_newton(arr, inv0, n, m):
    # b <- b + b*(1 - a*b), doubling the number of correct coefficients.
    b = _zeros(1, m)
    b[0] = inv0
    prec = 1
    while prec < n:
        p2 = min(2 * prec, n)
        bp = _zeros(p2, m)
        bp[:prec] = b
        err = _mul_arrays(arr[:p2], bp, p2, m)
        err = -err
        err[0] += 1
        if m is not None:
            err %= m
        corr = _mul_arrays(bp, err, p2, m)
        b = bp + corr
        if m is not None:
            b %= m
        prec = p2
    return b


def power(a: Series, e: int) -> Series:
    """``a**e`` by repeated squaring; negative ``e`` inverts first."""
    e = int(e)
    if e < 0:
        a = invert(a)
        e = -e
    n, m = a.precision, a._m
    result = None
    base = a._c
    while e:
        if e & 1:
            result = base if result is None else _mul_arrays(result, base, n, m)
        e >>= 1
        if e:
            base = _mul_arrays(base, base, n, m)
    if result is None:
        return Series.one(n, m)
    return Series._wrap(result.copy() if result is a._c else result, m)


# -- reindexing operations ------------------------------------------------

def shift(a: Series, m: int) -> Series:
    """Multiply by ``q^m``; the precision grows by ``m``."""
    if m < 0:
        raise SeriesError("shift exponent must be nonnegative")
    if m == 0:
        return a
    out = _zeros(a.precision + m, a._m)
    out[m:] = a._c
    return Series._wrap(out, a._m)


def substitute(a: Series, k: int) -> Series:
    """Replace ``q`` by ``q^k``."""
    if k < 1:
        raise SeriesError(f"substitution exponent must be >= 1, got {k}")
    if k == 1:
        return a
    out = _zeros(a.precision * k, a._m)
    out[::k] = a._c
    return Series._wrap(out, a._m)


def negate_q(a: Series) -> Series:
    """Replace ``q`` by ``-q``."""
    out = a._c.copy()
    out[1::2] = -out[1::2]
    if a._m is not None:
        out %= a._m
    return Series._wrap(out, a._m)


def extract_ap(a: Series, m: int, r: int) -> Series:
    """Coefficients at ``q^(m*n + r)``, reindexed to ``q^n``."""
    if m < 1 or not 0 <= r < m:
        raise SeriesError(f"need m >= 1 and 0 <= r < m, got m={m}, r={r}")
    if a.precision <= r:
        raise PrecisionError(
            f"precision {a.precision} yields no coefficient of q^({m}n+{r})")
    return Series._wrap(a._c[r::m].copy(), a._m)


def reduce_mod(a: Series, modulus: int) -> Series:
    modulus = int(modulus)
    if modulus < 2:
        raise SeriesError(f"modulus must be >= 2, got {modulus}")
    if a._m is not None:
        if a._m % modulus:
            raise ModulusMismatch(f"cannot reduce a mod-{a._m} series mod {modulus}")
        if a._m == modulus:
            return a
        src = a._c.astype(object) if a._c.dtype != object and _dtype(modulus) is object \
            else a._c
        return Series._wrap(_to_residues(src, modulus), modulus)
    return Series._wrap(_to_residues(a._c, modulus), modulus)


def truncate(a: Series, n: int) -> Series:
    if n > a.precision:
        raise PrecisionError(f"cannot truncate precision {a.precision} up to {n}")
    _check_precision(n)
    if n == a.precision:
        return a
    return Series._wrap(a._c[:n].copy(), a._m)


def coeff(a: Series, n: int) -> int:
    if n < 0:
        raise SeriesError(f"negative index {n}")
    if n >= a.precision:
        raise PrecisionError(f"coefficient of q^{n} unknown (precision {a.precision})")
    return int(a._c[n])


# -- sparse helpers -------------------------------------------------------

def mul_binomial(a: Series, k: int, c: int = -1) -> Series:
    """Multiply by ``1 + c*q^k``."""
    if k < 1:
        raise SeriesError("binomial exponent must be >= 1")
    out = a._c.copy()
    if k < len(out):
        out[k:] = a._c[k:] + c * a._c[:-k]
        if a._m is not None:
            out %= a._m
    return Series._wrap(out, a._m)


def div_binomial(a: Series, k: int, c: int = -1) -> Series:
    """Divide by ``1 + c*q^k`` for ``c`` in ``{1, -1}``."""
    if k < 1:
        raise SeriesError("binomial exponent must be >= 1")
    if c not in (1, -1):
        raise NonUnitError("only 1 +- q^k is supported")
    n, m = a.precision, a._m
    if k >= n:
        return a
    rows = -(-n // k)
    block = _zeros(rows * k, m)
    block[:n] = a._c
    block = block.reshape(rows, k)
    # a_i = b_i - c*a_{i-k}: a running sum down each residue column.
    if c == -1:
        block = np.cumsum(block, axis=0)
    else:
        signs = np.ones(rows, dtype=block.dtype)
        signs[1::2] = -1
        block = np.cumsum(block * signs[:, None], axis=0) * signs[:, None]
    out = block.reshape(-1)[:n]
    if m is not None:
        out = out % m
    else:
        out = out.copy()
    return Series._wrap(out, m)


def first_difference(a: Series, b: Series, target: int) -> Optional[int]:
    """Index of the first disagreement among the first ``target`` coefficients.

    Both series must be known to at least ``target`` terms; a shorter overlap is
    an error rather than a vacuous agreement.
    """
    if a.precision < target or b.precision < target:
        raise PrecisionError(
            f"need {target} coefficients, have {a.precision} and {b.precision}")
    x, y, _, _ = _coerce(truncate(a, target), truncate(b, target))
    diff = np.flatnonzero(x != y)
    return int(diff[0]) if len(diff) else None


def from_array(values: Sequence[int], modulus: Optional[int] = None) -> Series:
    return Series(values, modulus)
