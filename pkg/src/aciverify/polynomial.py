"""Exact multivariate polynomials over the rationals.

Polynomials are immutable and keyed on exponent tuples.  Monomial orders are
realized by :class:`MonomialCodec`, which packs a monomial into one Python
integer so that integer comparison is the order, integer addition is the
monomial product and divisibility is a single masked subtraction.  The
Groebner engine works entirely on these packed integers.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as QQ

Exps = tuple  # tuple[int, ...]

FIELD_BITS = 12
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


def rational(value) -> QQ:
    """Coerce ints, strings ("3/4") and rationals to the coefficient type."""
    return QQ(value)


# ---------------------------------------------------------------------------
# rings, monomials, orders


@dataclass(frozen=True)
class RingContext:
    """The ambient ring QQ[variable_names]."""

    variable_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not _IDENT.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")

    @classmethod
    def of(cls, names: str | Iterable[str]) -> RingContext:
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.variable_names)

    def index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise UnknownVariableError(name) from None

    def var(self, name_or_index: str | int) -> Polynomial:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.n
        e[i] = 1
        return Polynomial(self, {tuple(e): QQ(1)})

    def gens(self) -> list[Polynomial]:
        return [self.var(i) for i in range(self.n)]

    def one(self) -> Polynomial:
        return self.constant(1)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def constant(self, c) -> Polynomial:
        c = QQ(c)
        return Polynomial(self, {(0,) * self.n: c} if c else {})

    def monomial(self, exps: Sequence[int], coef=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(exps)}")
        c = QQ(coef)
        return Polynomial(self, {exps: c} if c else {})

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def n(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        _check_len(self.exponents, other.exponents)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: Monomial) -> bool:
        _check_len(self.exponents, other.exponents)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex, or block elimination of the first ``k`` variables.

    ``block`` is lex on the first ``k`` variables, refined by grevlex on the
    remaining ones.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.k < 1:
            raise ValueError("block elimination order needs k >= 1")
        if self.kind != "block" and self.k:
            raise ValueError(f"{self.kind} takes no block size")

    @classmethod
    def parse(cls, text: str) -> MonomialOrder:
        m = re.fullmatch(r"block\((\d+)\)", text)
        if m:
            return cls("block", int(m.group(1)))
        return cls(text)

    def __str__(self) -> str:
        return f"block({self.k})" if self.kind == "block" else self.kind

    def key_rows(self, n: int) -> list[list[int]]:
        """Rows of the integer matrix whose lexicographic comparison is the order."""
        def unit(i):
            row = [0] * n
            row[i] = 1
            return row

        def grevlex(lo):
            rows = [[1 if i >= lo else 0 for i in range(n)]]
            rows += [[-x for x in unit(i)] for i in range(n - 1, lo, -1)]
            return rows

        if self.kind == "lex":
            return [unit(i) for i in range(n)]
        if self.kind == "grevlex":
            return grevlex(0)
        if self.k > n:
            raise ValueError(f"cannot eliminate {self.k} of {n} variables")
        rows = [unit(i) for i in range(self.k)]
        if self.k < n:
            rows += grevlex(self.k)
        return rows


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _check_len(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"monomials from different rings ({len(a)} vs {len(b)} variables)")


def monomial_compare(a: Monomial | Sequence[int], b: Monomial | Sequence[int],
                     order: MonomialOrder = GREVLEX) -> Ordering:
    ea = a.exponents if isinstance(a, Monomial) else tuple(a)
    eb = b.exponents if isinstance(b, Monomial) else tuple(b)
    _check_len(ea, eb)
    for row in order.key_rows(len(ea)):
        da = sum(r * x for r, x in zip(row, ea))
        db = sum(r * x for r, x in zip(row, eb))
        if da != db:
            return Ordering.GREATER if da > db else Ordering.LESS
    return Ordering.EQUAL


class MonomialCodec:
    """Packs exponent tuples into integers for one (n, order, permutation).

    The packed value is ``key * 2**(n*W) + packed_exponents`` where ``key`` is
    the order's key vector written in balanced base ``2**W``.  Both parts are
    linear in the exponents, so encoding is a dot product with fixed unit
    integers and multiplication of monomials is integer addition.
    """

    def __init__(self, n: int, order: MonomialOrder = GREVLEX,
                 perm: tuple[int, ...] | None = None):
        self.n = n
        self.order = order
        # perm[i] = position of variable i in the order's variable sequence
        self.perm = tuple(range(n)) if perm is None else tuple(perm)
        w = FIELD_BITS
        rows = order.key_rows(n)
        base = 1 << w
        low = n * w
        units = []
        for i in range(n):
            j = self.perm[i]
            key = 0
            for row in rows:
                key = key * base + row[j]
            units.append((key << low) + (1 << (i * w)))
        self.units = tuple(units)
        self.guard = sum(1 << (i * w + w - 1) for i in range(n))
        self.low_mask = (1 << low) - 1
        self.field_mask = base - 1
        self.shifts = tuple(i * w for i in range(n))

    def encode(self, exps: Sequence[int]) -> int:
        if sum(exps) > MAX_EXPONENT:
            raise OverflowError(f"degree of {tuple(exps)} exceeds {MAX_EXPONENT}")
        m = 0
        for u, e in zip(self.units, exps):
            if e:
                m += u * e
        return m

    def decode(self, m: int) -> tuple[int, ...]:
        low = m & self.low_mask
        fm = self.field_mask
        return tuple((low >> s) & fm for s in self.shifts)

    def degree(self, m: int) -> int:
        return sum(self.decode(m))

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b + g - a) & g) == g

    def lcm(self, a: int, b: int) -> int:
        return self.encode([max(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def coprime(self, a: int, b: int) -> bool:
        return all(not (x and y) for x, y in zip(self.decode(a), self.decode(b)))

    def encode_poly(self, terms: Mapping[Exps, QQ]) -> dict[int, QQ]:
        enc = self.encode
        return {enc(e): c for e, c in terms.items()}

    def decode_poly(self, terms: Mapping[int, QQ]) -> dict[Exps, QQ]:
        dec = self.decode
        return {dec(m): c for m, c in terms.items()}


@lru_cache(maxsize=None)
def codec(n: int, order: MonomialOrder = GREVLEX,
          perm: tuple[int, ...] | None = None) -> MonomialCodec:
    return MonomialCodec(n, order, perm)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """An immutable polynomial in a fixed :class:`RingContext`.

    ``terms`` lists ``(coefficient, Monomial)`` pairs in strictly descending
    grevlex order; the zero polynomial has no terms.
    """

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: RingContext, terms: Mapping[Exps, object] | None = None):
        self.ctx = ctx
        clean: dict[Exps, QQ] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != ctx.n:
                    raise ValueError(f"exponent vector {e} does not match {ctx.n} variables")
                c = QQ(c)
                if c:
                    clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx: RingContext, terms: dict[Exps, QQ]) -> Polynomial:
        p = cls.__new__(cls)
        p.ctx = ctx
        p._terms = terms
        p._hash = None
        return p

    # -- views --------------------------------------------------------------
    @property
    def term_dict(self) -> Mapping[Exps, QQ]:
        return self._terms

    def sorted_exponents(self, order: MonomialOrder = GREVLEX) -> list[Exps]:
        cd = codec(self.ctx.n, order)
        return sorted(self._terms, key=cd.encode, reverse=True)

    @property
    def terms(self) -> tuple[tuple[QQ, Monomial], ...]:
        return tuple((self._terms[e], Monomial(e)) for e in self.sorted_exponents())

    def leading_exponent(self, order: MonomialOrder = GREVLEX) -> Exps:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        cd = codec(self.ctx.n, order)
        return max(self._terms, key=cd.encode)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> QQ:
        return self._terms[self.leading_exponent(order)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int | None:
        """Total degree; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial._raw(self.ctx, {e: c for e, c in self._terms.items() if sum(e) == d})

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ValueError("polynomials belong to different rings")
            return other
        return self.ctx.constant(other)

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.ctx, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def scale(self, c) -> Polynomial:
        c = QQ(c)
        if not c:
            return self.ctx.zero()
        return Polynomial._raw(self.ctx, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Exps, QQ] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ctx, out)

    def __rmul__(self, other) -> Polynomial:
        return self.scale(other)

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exps: Sequence[int], coef=1) -> Polynomial:
        c = QQ(coef)
        return Polynomial._raw(
            self.ctx,
            {tuple(a + b for a, b in zip(e, exps)): c * v for e, v in self._terms.items()} if c else {},
        )

    def exact_div(self, divisor: Polynomial) -> Polynomial:
        """Quotient of an exact division; raises ArithmeticError on a remainder."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        cd = codec(self.ctx.n, GREVLEX)
        rem = cd.encode_poly(self._terms)
        dv = cd.encode_poly(divisor._terms)
        dlm = max(dv)
        dlc = dv[dlm]
        quot: dict[int, QQ] = {}
        while rem:
            m = max(rem)
            if not cd.divides(dlm, m):
                raise ArithmeticError("inexact polynomial division")
            q = m - dlm
            c = rem[m] / dlc
            quot[q] = c
            for dm, dc in dv.items():
                k = dm + q
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return Polynomial._raw(self.ctx, cd.decode_poly(quot))

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, (int, type(QQ(0)))):
            return self == self.ctx.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    # -- printing -----------------------------------------------------------
    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    def __iter__(self) -> Iterator[tuple[QQ, Monomial]]:
        return iter(self.terms)


def degree_info(p: Polynomial) -> tuple[int | None, bool]:
    """(degree, homogeneous); the zero polynomial is (None, True)."""
    return p.degree(), p.is_homogeneous()


def poly_arith(op: str, p: Polynomial, q) -> Polynomial:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# text format

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ValueError):
    def __init__(self, name: str, position: int | None = None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown variable {name!r}{where}")
        self.name = name
        self.position = position


class _Parser:
    def __init__(self, text: str, ctx: RingContext):
        self.text = text
        self.ctx = ctx
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str):
        raise PolynomialSyntaxError(message, self.pos)

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])

    def expr(self) -> dict[Exps, QQ]:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        out: dict[Exps, QQ] = {}
        while True:
            coef, exps = self.term()
            v = out.get(exps, 0) + sign * coef
            if v:
                out[exps] = v
            else:
                out.pop(exps, None)
            ch = self.peek()
            if ch in ("+", "-"):
                sign = 1 if ch == "+" else -1
                self.pos += 1
                continue
            return out

    def term(self) -> tuple[QQ, Exps]:
        coef = QQ(1)
        exps = [0] * self.ctx.n
        while True:
            c, i, power = self.factor()
            if i is None:
                coef *= c
            else:
                exps[i] += power
            if self.peek() == "*":
                self.pos += 1
                continue
            return coef, tuple(exps)

    def factor(self) -> tuple[QQ, int | None, int]:
        ch = self.peek()
        if ch.isdigit():
            num = self.uint()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den_pos = self.pos
                den = self.uint()
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", den_pos)
            return QQ(num, den), None, 0
        m = _IDENT.match(self.text, self.pos)
        if not m:
            self.error("expected a number or a variable")
        name = m.group(0)
        try:
            i = self.ctx.index(name)
        except UnknownVariableError:
            raise UnknownVariableError(name, self.pos) from None
        self.pos = m.end()
        power = 1
        if self.peek() == "^":
            self.pos += 1
            power = self.uint()
        return QQ(1), i, power


def parse_polynomial(text: str, ctx: RingContext) -> Polynomial:
    """Parse ``expr := term (('+'|'-') term)*`` with an optional leading sign."""
    parser = _Parser(text, ctx)
    if not parser.peek():
        parser.error("empty expression")
    terms = parser.expr()
    if parser.peek():
        parser.error(f"unexpected character {parser.text[parser.pos]!r}")
    return Polynomial._raw(ctx, terms)


def _format_coef(c: QQ) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Terms in descending ``order``."""
    if not p:
        return "0"
    names = p.ctx.variable_names
    parts = []
    for idx, e in enumerate(p.sorted_exponents(order)):
        c = p.term_dict[e]
        neg = c < 0
        a = -c if neg else c
        factors = [names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k]
        if a != 1 or not factors:
            factors.insert(0, _format_coef(a))
        body = "*".join(factors)
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def monomials_of_degree(n: int, d: int) -> Iterator[Exps]:
    """All exponent vectors of total degree d, in descending lex order."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest
