"""A small language for writing q-series identities and congruences as text.

Grammar::

    stmt   := "let" NAME "=" expr
            | ("id" | "cong") LABEL [ "[" tag {"," tag} "]" ] ":" expr "==" expr [ "(mod" INT ")" ]
    expr   := ["-"] term { ("+" | "-") term }
    term   := factor { ("*" | "/") factor }
    factor := base [ "^" SINT ]
    base   := INT | "q" | "E" INT | "J(" INT "," INT ")"
            | "T" | "K" | "PHI" | "PSI" | "OMEGA" | "NU" | NAME
            | "AP(" INT "," INT ";" expr ")" | "sub(" INT ";" expr ")"
            | "neg(" expr ")" | "(" expr ")"
    tag    := "experimental" | "N=" INT

``neg(x)`` replaces q by -q; a leading ``-`` is ordinary negation.  ``#``
starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

from . import qproducts, special
from .qproducts import EtaExponentMap
from .series import (
    Series,
    SeriesError,
    add,
    extract_ap,
    first_difference,
    invert,
    mul,
    neg,
    negate_q,
    power,
    scalar_mul,
    shift,
    sub,
    substitute,
    truncate,
)

DEFAULT_IDENTITY_PRECISION = 200
DEFAULT_CONGRUENCE_PRECISION = 500


class DSLError(ValueError):
    pass


class ParseError(DSLError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line, self.column = line, column
        super().__init__(f"{message} at line {line}, column {column}" if line else message)


class UnknownNameError(DSLError):
    pass


class EvaluationError(DSLError):
    pass


# -- syntax tree ------------------------------------------------------------

_POS = dict(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class IntLit:
    value: int
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class QVar:
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class EAtom:
    j: int
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class JAtom:
    """``(q^a; q^b)_inf``."""
    a: int
    b: int
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class NamedAtom:
    name: str
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class Name:
    name: str
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class Subtract:
    left: "Expr"
    right: "Expr"
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class AP:
    """Coefficients at ``q^(m*n + r)`` reindexed to ``q^n``."""
    m: int
    r: int
    arg: "Expr"
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class Subst:
    """``q -> q^k``."""
    k: int
    arg: "Expr"
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class NegQ:
    """``q -> -q``."""
    arg: "Expr"
    pos: Optional[Tuple[int, int]] = field(**_POS)


Expr = Union[IntLit, QVar, EAtom, JAtom, NamedAtom, Name, Neg, Add, Subtract,
             Mul, Div, Pow, AP, Subst, NegQ]


@dataclass(frozen=True)
class Let:
    name: str
    expr: Expr
    pos: Optional[Tuple[int, int]] = field(**_POS)


@dataclass(frozen=True)
class Statement:
    name: str
    lhs: Expr
    rhs: Expr
    kind: str = "identity"
    modulus: Optional[int] = None
    precision: Optional[int] = None
    experimental: bool = False
    pos: Optional[Tuple[int, int]] = field(**_POS)

    def __post_init__(self):
        if self.kind not in ("identity", "congruence"):
            raise DSLError(f"unknown statement kind {self.kind!r}")
        if self.kind == "congruence" and self.modulus is None:
            raise DSLError(f"congruence {self.name} needs a modulus")
        if self.modulus is not None and self.modulus < 2:
            raise DSLError(f"modulus must be >= 2 in {self.name}")

    @property
    def default_precision(self) -> int:
        if self.precision is not None:
            return self.precision
        if self.kind == "congruence":
            return DEFAULT_CONGRUENCE_PRECISION
        return DEFAULT_IDENTITY_PRECISION


NAMED_ATOMS = ("T", "K", "PHI", "PSI", "OMEGA", "NU")
KEYWORDS = ("let", "id", "cong", "q", "J", "E", "AP", "sub", "neg") + NAMED_ATOMS

# Series reachable by bare name without a let binding.
BUILTIN_NAMES: Dict[str, Callable[..., Series]] = {
    "POMEGA": special.p_omega_series,
    "PNU": special.p_nu_series,
    "SPTW": special.sptw_series,
    "SPTW_ODD": special.sptw_odd_series,
    "SPTBARW": special.sptbarw_series,
    "SPTBARW_ODD": special.sptbarw_odd_series,
    "PENTAGONAL": qproducts.pentagonal_series,
    "JACOBI": qproducts.jacobi_cube_series,
}


# -- parser -------------------------------------------------------------------

_WS = re.compile(r"(?:\s+|#[^\n]*)+")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"\d+")
_LABEL = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_.\-]*")
_ETA = re.compile(r"E(\d+)$")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # position helpers
    def where(self, pos: Optional[int] = None) -> Tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        return ParseError(message, *self.where(pos))

    def skip(self) -> None:
        m = _WS.match(self.text, self.pos)
        if m:
            self.pos = m.end()

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek(self, lit: str) -> bool:
        self.skip()
        return self.text.startswith(lit, self.pos)

    def accept(self, lit: str) -> bool:
        if self.peek(lit):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit: str) -> None:
        if not self.accept(lit):
            found = self.text[self.pos:self.pos + 12] or "end of input"
            raise self.error(f"expected {lit!r}, found {found!r}")

    def match(self, regex) -> Optional[str]:
        self.skip()
        m = regex.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        return m.group(0)

    def integer(self, what: str = "integer") -> int:
        tok = self.match(_INT)
        if tok is None:
            raise self.error(f"expected {what}")
        return int(tok)

    def signed_integer(self) -> int:
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        return sign * self.integer("integer exponent")

    def peek_ident(self) -> Optional[str]:
        self.skip()
        m = _IDENT.match(self.text, self.pos)
        return m.group(0) if m else None

    # grammar
    def statement(self):
        start = self.pos
        self.skip()
        where = self.where()
        word = self.match(_IDENT)
        if word == "let":
            name = self.match(_IDENT)
            if name is None:
                raise self.error("expected a name after 'let'")
            if name in KEYWORDS or _ETA.match(name) or name in BUILTIN_NAMES:
                raise self.error(f"cannot rebind reserved name {name!r}")
            self.expect("=")
            return Let(name, self.expr(), pos=where)
        if word not in ("id", "cong"):
            self.pos = start
            raise self.error("expected 'let', 'id' or 'cong'")
        label = self.match(_LABEL)
        if label is None:
            raise self.error("expected a statement name")
        precision, experimental = None, False
        if self.accept("["):
            while True:
                if self.accept("experimental"):
                    experimental = True
                elif self.accept("N"):
                    self.expect("=")
                    precision = self.integer("precision")
                    if precision < 1:
                        raise self.error("precision must be positive")
                else:
                    raise self.error("unknown tag")
                if self.accept("]"):
                    break
                self.expect(",")
        self.expect(":")
        lhs = self.expr()
        self.expect("==")
        rhs = self.expr()
        modulus = None
        if self.peek("("):
            self.expect("(")
            self.expect("mod")
            modulus = self.integer("modulus")
            self.expect(")")
            if modulus < 2:
                raise self.error("modulus must be at least 2")
        kind = "congruence" if word == "cong" else "identity"
        if kind == "congruence" and modulus is None:
            raise self.error(f"congruence {label} needs a (mod M) suffix")
        if kind == "identity" and modulus is not None:
            raise self.error(f"identity {label} cannot carry a modulus; use 'cong'")
        return Statement(label, lhs, rhs, kind, modulus, precision, experimental, pos=where)

    def expr(self):
        self.skip()
        where = self.where()
        if self.peek("-") and not self.peek("->"):
            self.expect("-")
            node = Neg(self.term(), pos=where)
        else:
            node = self.term()
        while True:
            if self.peek("=="):
                return node
            if self.accept("+"):
                node = Add(node, self.term(), pos=where)
            elif self.accept("-"):
                node = Subtract(node, self.term(), pos=where)
            else:
                return node

    def term(self):
        self.skip()
        where = self.where()
        node = self.factor()
        while True:
            if self.accept("*"):
                node = Mul(node, self.factor(), pos=where)
            elif self.accept("/"):
                node = Div(node, self.factor(), pos=where)
            else:
                return node

    def factor(self):
        self.skip()
        where = self.where()
        node = self.base()
        if self.accept("^"):
            node = Pow(node, self.signed_integer(), pos=where)
        return node

    def base(self):
        self.skip()
        where = self.where()
        at = self.pos
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        tok = self.match(_INT)
        if tok is not None:
            return IntLit(int(tok), pos=where)
        word = self.match(_IDENT)
        if word is None:
            found = self.text[self.pos:self.pos + 12] or "end of input"
            raise self.error(f"unexpected {found!r}")
        if word == "q":
            return QVar(pos=where)
        m = _ETA.match(word)
        if m or word == "E":
            j = int(m.group(1)) if m else self.integer("eta index")
            if j < 1:
                raise self.error("eta index must be at least 1", at)
            return EAtom(j, pos=where)
        if word == "J":
            self.expect("(")
            a = self.integer()
            self.expect(",")
            b = self.integer()
            self.expect(")")
            if a < 1 or b < 1:
                raise self.error("J(a,b) needs a >= 1 and b >= 1", at)
            return JAtom(a, b, pos=where)
        if word in NAMED_ATOMS:
            return NamedAtom(word, pos=where)
        if word == "AP":
            self.expect("(")
            m_ = self.integer("step")
            self.expect(",")
            r = self.integer("offset")
            self.expect(";")
            arg = self.expr()
            self.expect(")")
            if m_ < 1:
                raise self.error("AP step must be at least 1", at)
            if r >= m_:
                raise self.error(f"AP offset {r} must be below step {m_}", at)
            return AP(m_, r, arg, pos=where)
        if word == "sub":
            self.expect("(")
            k = self.integer("substitution exponent")
            self.expect(";")
            arg = self.expr()
            self.expect(")")
            if k < 1:
                raise self.error("sub exponent must be at least 1", at)
            return Subst(k, arg, pos=where)
        if word == "neg":
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return NegQ(arg, pos=where)
        if word in ("let", "id", "cong"):
            raise self.error(f"keyword {word!r} inside an expression", at)
        return Name(word, pos=where)


def parse(text: str) -> Union[Expr, Let, Statement]:
    """Parse one expression or one statement; the whole text must be consumed."""
    p = _Parser(text)
    word = p.peek_ident()
    if word in ("let", "id", "cong"):
        node = p.statement()
    else:
        node = p.expr()
    if not p.at_end():
        raise p.error(f"trailing input {p.text[p.pos:p.pos + 12]!r}")
    return node


def parse_expr(text: str) -> Expr:
    node = parse(text)
    if isinstance(node, (Let, Statement)):
        raise DSLError("expected an expression, got a statement")
    return node


def parse_program(text: str) -> List[Union[Let, Statement]]:
    """Parse a sequence of statements; line breaks carry no meaning."""
    p = _Parser(text)
    out = []
    while not p.at_end():
        out.append(p.statement())
    return out


def free_names(node) -> set:
    """Names (not built-in atoms) referenced by an expression or statement."""
    if isinstance(node, Name):
        return {node.name}
    if isinstance(node, Statement):
        return free_names(node.lhs) | free_names(node.rhs)
    if isinstance(node, Let):
        return free_names(node.expr)
    out = set()
    for attr in ("arg", "left", "right", "base"):
        child = getattr(node, attr, None)
        if child is not None:
            out |= free_names(child)
    return out


# -- printer ------------------------------------------------------------------

def unparse(node) -> str:
    """Canonical text; ``parse(unparse(x)) == x``."""
    if isinstance(node, Let):
        return f"let {node.name} = {_u(node.expr, 0, True)}"
    if isinstance(node, Statement):
        word = "cong" if node.kind == "congruence" else "id"
        tags = []
        if node.experimental:
            tags.append("experimental")
        if node.precision is not None:
            tags.append(f"N={node.precision}")
        tag_txt = f" [{', '.join(tags)}]" if tags else ""
        mod = f" (mod {node.modulus})" if node.modulus is not None else ""
        return f"{word} {node.name}{tag_txt}: {_u(node.lhs, 0, True)} == {_u(node.rhs, 0, True)}{mod}"
    return _u(node, 0, True)


def _u(node, ctx: int, start: bool) -> str:
    # ctx: 0 free, 1 sum operand, 2 product operand, 3 power base.
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, QVar):
        return "q"
    if isinstance(node, EAtom):
        return f"E{node.j}"
    if isinstance(node, JAtom):
        return f"J({node.a},{node.b})"
    if isinstance(node, (NamedAtom, Name)):
        return node.name
    if isinstance(node, AP):
        return f"AP({node.m},{node.r}; {_u(node.arg, 0, True)})"
    if isinstance(node, Subst):
        return f"sub({node.k}; {_u(node.arg, 0, True)})"
    if isinstance(node, NegQ):
        return f"neg({_u(node.arg, 0, True)})"
    if isinstance(node, (Add, Subtract)):
        op = " + " if isinstance(node, Add) else " - "
        txt = _u(node.left, 1, start and ctx <= 1) + op + _u(node.right, 2, False)
        return f"({txt})" if ctx > 1 else txt
    if isinstance(node, (Mul, Div)):
        op = "*" if isinstance(node, Mul) else "/"
        txt = _u(node.left, 2, False) + op + _u(node.right, 3, False)
        return f"({txt})" if ctx > 2 else txt
    if isinstance(node, Pow):
        txt = f"{_u(node.base, 4, False)}^{node.exp}"
        return f"({txt})" if ctx > 3 else txt
    if isinstance(node, Neg):
        txt = "-" + _u(node.arg, 2, False)
        return txt if (start and ctx <= 1) else f"({txt})"
    raise DSLError(f"cannot print {node!r}")


# -- precision planning -------------------------------------------------------

def _q_power(node) -> Optional[int]:
    """Exponent m when node is literally ``q`` or ``q^m`` (m >= 0)."""
    if isinstance(node, QVar):
        return 1
    if isinstance(node, Pow) and isinstance(node.base, QVar) and node.exp >= 0:
        return node.exp
    return None


def _atom_key(node) -> Optional[str]:
    if isinstance(node, (EAtom, JAtom, NamedAtom)):
        return unparse(node)
    return None


def required_precision(e, N: int, env: Optional[Mapping[str, Expr]] = None) -> Dict[str, int]:
    """Coefficients each atom must supply for ``e`` to be known to ``N`` terms."""
    env = env or {}
    demands: Dict[str, int] = {}

    def need(key: str, n: int) -> None:
        demands[key] = max(demands.get(key, 0), n)

    def walk(node, n: int) -> None:
        n = max(n, 1)
        key = _atom_key(node)
        if key is not None:
            need(key, n)
        elif isinstance(node, Name):
            if node.name in env:
                walk(env[node.name], n)
            else:
                need(node.name, n)
        elif isinstance(node, (IntLit, QVar)):
            return
        elif isinstance(node, AP):
            walk(node.arg, node.m * (n - 1) + node.r + 1)
        elif isinstance(node, Subst):
            walk(node.arg, -(-n // node.k))
        elif isinstance(node, (Mul, Div)):
            m = _q_power(node.left)
            if m is not None:
                walk(node.right, n - m)
            elif isinstance(node, Mul) and _q_power(node.right) is not None:
                walk(node.left, n - _q_power(node.right))
            else:
                walk(node.left, n)
                walk(node.right, n)
        elif isinstance(node, (Add, Subtract)):
            walk(node.left, n)
            walk(node.right, n)
        elif isinstance(node, (Neg, NegQ)):
            walk(node.arg, n)
        elif isinstance(node, Pow):
            walk(node.base, n)
        else:
            raise DSLError(f"cannot plan {node!r}")

    walk(e, N)
    return demands


# -- evaluation ---------------------------------------------------------------

def _monomial(node):
    """``(c, m, eta_map)`` when node is ``c * q^m * prod E_j^{e_j}``, else None."""
    if isinstance(node, IntLit):
        return node.value, 0, EtaExponentMap()
    if isinstance(node, QVar):
        return 1, 1, EtaExponentMap()
    if isinstance(node, EAtom):
        return 1, 0, EtaExponentMap(((node.j, 1),))
    if isinstance(node, Neg):
        inner = _monomial(node.arg)
        return None if inner is None else (-inner[0], inner[1], inner[2])
    if isinstance(node, Pow):
        inner = _monomial(node.base)
        if inner is None:
            return None
        c, m, em = inner
        if node.exp < 0 and (c not in (1, -1) or m):
            return None
        return c ** abs(node.exp), m * node.exp, em ** node.exp
    if isinstance(node, (Mul, Div)):
        a, b = _monomial(node.left), _monomial(node.right)
        if a is None or b is None:
            return None
        if isinstance(node, Mul):
            return a[0] * b[0], a[1] + b[1], a[2] * b[2]
        if b[0] not in (1, -1) or b[1]:
            return None
        return a[0] * b[0], a[1], a[2] * b[2] ** -1
    return None


class Evaluator:
    """Evaluates expressions to series, in exact mode or modulo ``modulus``."""

    def __init__(self, env: Optional[Mapping[str, Expr]] = None,
                 modulus: Optional[int] = None):
        self.env = dict(env or {})
        self.modulus = modulus
        self._memo: Dict[Tuple[object, int], Series] = {}

    def evaluate(self, node, N: int) -> Series:
        if N < 1:
            raise EvaluationError(f"precision must be positive, got {N}")
        out = self._eval(node, N)
        if out.precision < N:
            raise EvaluationError(
                f"internal precision shortfall: wanted {N}, got {out.precision}")
        return truncate(out, N)

    def _eval(self, node, N: int) -> Series:
        N = max(N, 1)
        key = (node, N)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._compute(node, N)
            self._memo[key] = hit
        return hit

    def _const(self, c: int, N: int) -> Series:
        return Series.constant(c, N, self.modulus)

    def _compute(self, node, N: int) -> Series:
        M = self.modulus
        mono = None if isinstance(node, IntLit) else _monomial(node)
        if mono is not None:
            c, m, em = mono
            if m < 0:
                raise EvaluationError(f"negative power of q in {unparse(node)}")
            if m >= N:
                return Series.zero(N, M)
            body = qproducts.eta_quotient(em, N - m, M)
            return shift(scalar_mul(body, c), m)
        if isinstance(node, IntLit):
            return self._const(node.value, N)
        if isinstance(node, EAtom):
            return qproducts.eta(node.j, N, M)
        if isinstance(node, JAtom):
            return qproducts.pochhammer_inf(node.a, node.b, N, M)
        if isinstance(node, NamedAtom):
            return special.named_series(node.name, N, M)
        if isinstance(node, Name):
            if node.name in self.env:
                return self._eval(self.env[node.name], N)
            if node.name in BUILTIN_NAMES:
                return BUILTIN_NAMES[node.name](N, M)
            raise UnknownNameError(f"unbound name {node.name!r}")
        if isinstance(node, Neg):
            return neg(self._eval(node.arg, N))
        if isinstance(node, Add):
            return add(self._eval(node.left, N), self._eval(node.right, N))
        if isinstance(node, Subtract):
            return sub(self._eval(node.left, N), self._eval(node.right, N))
        if isinstance(node, Mul):
            for a, b in ((node.left, node.right), (node.right, node.left)):
                m = _q_power(a)
                if m is not None:
                    return self._shifted(self._eval(b, N - m), m, N)
            for a, b in ((node.left, node.right), (node.right, node.left)):
                if isinstance(a, IntLit):
                    return scalar_mul(self._eval(b, N), a.value)
            return mul(self._eval(node.left, N), self._eval(node.right, N))
        if isinstance(node, Div):
            m = _q_power(node.left)
            if m is not None:
                return self._shifted(self._inverse(node.right, N - m), m, N)
            return mul(self._eval(node.left, N), self._inverse(node.right, N))
        if isinstance(node, Pow):
            if isinstance(node.base, QVar):
                raise EvaluationError("negative powers of q are not representable")
            return power(self._eval(node.base, N), node.exp)
        if isinstance(node, AP):
            inner = self._eval(node.arg, node.m * (N - 1) + node.r + 1)
            return extract_ap(inner, node.m, node.r)
        if isinstance(node, Subst):
            inner = self._eval(node.arg, -(-N // node.k))
            return truncate(substitute(inner, node.k), N)
        if isinstance(node, NegQ):
            return negate_q(self._eval(node.arg, N))
        raise EvaluationError(f"cannot evaluate {node!r}")

    def _shifted(self, s: Series, m: int, N: int) -> Series:
        if m >= N:
            return Series.zero(N, self.modulus)
        return truncate(shift(s, m), N)

    def _inverse(self, node, N: int) -> Series:
        N = max(N, 1)
        try:
            return invert(self._eval(node, N))
        except SeriesError as exc:
            raise EvaluationError(f"cannot divide by {unparse(node)}: {exc}") from exc


def evaluate(e, N: int, env: Optional[Mapping[str, Expr]] = None,
             modulus: Optional[int] = None) -> Series:
    if isinstance(e, str):
        e = parse_expr(e)
    return Evaluator(env, modulus).evaluate(e, N)


# -- checking -----------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    kind: str
    modulus: Optional[int]
    precision: int
    passed: bool
    first_fail_index: Optional[int] = None
    lhs_coeff: Optional[int] = None
    rhs_coeff: Optional[int] = None
    millis: float = 0.0
    experimental: bool = False
    error: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "modulus": self.modulus,
            "precision": self.precision,
            "pass": self.passed,
            "first_fail_index": self.first_fail_index,
            "lhs_coeff": self.lhs_coeff,
            "rhs_coeff": self.rhs_coeff,
            "millis": round(self.millis, 3),
            "experimental": self.experimental,
            "error": self.error,
        }


def check(stmt: Statement, N: Optional[int] = None,
          env: Optional[Mapping[str, Expr]] = None,
          modulus: Optional[int] = None) -> CheckResult:
    """Compare both sides of ``stmt`` on their first ``N`` coefficients.

    Congruences run in modular arithmetic throughout.  Passing ``modulus`` for
    an identity checks its reduction instead.
    """
    if isinstance(stmt, str):
        stmt = parse(stmt)
    N = N if N is not None else stmt.default_precision
    M = modulus if modulus is not None else stmt.modulus
    t0 = time.perf_counter()
    try:
        ev = Evaluator(env, M)
        lhs = ev.evaluate(stmt.lhs, N)
        rhs = ev.evaluate(stmt.rhs, N)
    except (DSLError, SeriesError) as exc:
        raise EvaluationError(f"{stmt.name}: {exc}") from exc
    idx = first_difference(lhs, rhs, N)
    res = CheckResult(stmt.name, stmt.kind, M, N, idx is None,
                      experimental=stmt.experimental)
    if idx is not None:
        res.first_fail_index = idx
        res.lhs_coeff, res.rhs_coeff = lhs.coeff(idx), rhs.coeff(idx)
    res.millis = (time.perf_counter() - t0) * 1000.0
    return res
