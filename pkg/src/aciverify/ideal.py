"""Ideals of QQ[x_1..x_n]: Buchberger's algorithm and ideal arithmetic."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import kernels
from .polynomial import (
    GREVLEX,
    QQ,
    MonomialCodec,
    MonomialOrder,
    Polynomial,
    RingContext,
    codec,
    monomials_of_degree,
)

Encoded = dict  # dict[int, QQ]


class NotHomogeneousError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Buchberger on packed monomials


def _monic(p: Encoded) -> Encoded:
    lm = max(p)
    c = p[lm]
    if c == 1:
        return p
    inv = 1 / c
    return {m: v * inv for m, v in p.items()}


def _tail(p: Encoded, lm: int) -> list:
    return [(m, c) for m, c in p.items() if m != lm]


def buchberger(polys: Iterable[Encoded], cd: MonomialCodec,
               weights: Sequence[int] | None = None) -> list[Encoded]:
    """Reduced Groebner basis (monic, ascending leading monomials).

    Pairs are selected by weighted degree of their lcm, then by the order
    (normal strategy); useless pairs are discarded with the Gebauer-Moeller
    installation of Buchberger's two criteria.
    """
    guard = cd.guard
    decode, encode = cd.decode, cd.encode
    w = tuple(weights) if weights is not None else (1,) * cd.n

    def wdeg(e):
        return sum(a * b for a, b in zip(w, e))

    def divides(a, b):
        return ((b + guard - a) & guard) == guard

    G: list[Encoded] = []
    lms: list[int] = []
    lexps: list[tuple] = []
    tails: list[list] = []
    active: list[int] = []
    red_lms: list[int] = []
    red_tails: list[list] = []
    pairs: list[tuple] = []

    def refresh():
        red_lms[:] = [lms[i] for i in active]
        red_tails[:] = [tails[i] for i in active]

    def install(h: Encoded):
        nonlocal pairs
        h = _monic(h)
        hl = max(h)
        he = decode(hl)
        idx = len(G)
        G.append(h)
        lms.append(hl)
        lexps.append(he)
        tails.append(_tail(h, hl))

        cands = []
        for j in active:
            ge = lexps[j]
            cop = all(not (a and b) for a, b in zip(he, ge))
            cands.append((encode([max(a, b) for a, b in zip(he, ge)]), j, cop))
        kept = []
        for pos, (L, j, cop) in enumerate(cands):
            if not cop:
                if any(divides(L2, L) for L2, _, _ in cands[pos + 1:]) or any(
                        divides(L2, L) for L2, _, _ in kept):
                    continue
            kept.append((L, j, cop))
        new_pairs = [(wdeg(decode(L)), L, j, idx) for L, j, cop in kept if not cop]

        survivors = []
        for item in pairs:
            _, L, i, j = item
            if divides(hl, L):
                li = encode([max(a, b) for a, b in zip(he, lexps[i])])
                lj = encode([max(a, b) for a, b in zip(he, lexps[j])])
                if li != L and lj != L:
                    continue
            survivors.append(item)
        pairs = survivors + new_pairs
        heapq.heapify(pairs)

        active[:] = [j for j in active if not divides(hl, lms[j])] + [idx]
        refresh()

    inputs = [dict(p) for p in polys if p]
    inputs.sort(key=lambda p: (wdeg(decode(max(p))), max(p)))
    for p in inputs:
        h = kernels.reduce_full(p, red_lms, red_tails, guard)
        if h:
            if max(h) == 0:
                return [{0: QQ(1)}]
            install(h)

    while pairs:
        _, L, i, j = heapq.heappop(pairs)
        s: Encoded = {}
        q = L - lms[i]
        for m, c in tails[i]:
            s[m + q] = c
        q = L - lms[j]
        for m, c in tails[j]:
            k = m + q
            v = s.get(k, 0) - c
            if v:
                s[k] = v
            else:
                del s[k]
        h = kernels.reduce_full(s, red_lms, red_tails, guard)
        if h:
            if max(h) == 0:
                return [{0: QQ(1)}]
            install(h)

    return interreduce([G[i] for i in active], cd)


def interreduce(basis: list[Encoded], cd: MonomialCodec) -> list[Encoded]:
    """Turn a minimal-or-not Groebner basis into the reduced one."""
    guard = cd.guard
    basis = [_monic(dict(g)) for g in basis if g]
    basis.sort(key=max)
    minimal: list[Encoded] = []
    for g in basis:
        lm = max(g)
        if not any(((lm + guard - max(h)) & guard) == guard for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = [h for k, h in enumerate(minimal) if k != idx]
        lm = max(g)
        rest = kernels.reduce_full(
            {m: c for m, c in g.items() if m != lm},
            [max(h) for h in others],
            [_tail(h, max(h)) for h in others],
            guard,
        )
        rest[lm] = g[lm]
        out.append(rest)
    out.sort(key=max)
    return out


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """A finitely generated ideal; the generator list is kept as given.

    Zero generators are dropped, so the zero ideal has no generators.
    """

    def __init__(self, ctx: RingContext, generators: Iterable[Polynomial] = ()):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ctx.parse(g) if isinstance(g, str) else ctx.constant(g)
            if g.ctx != ctx:
                raise ValueError("generator from a different ring")
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        self.ctx = ctx
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._gb: dict = {}

    @classmethod
    def parse(cls, ctx: RingContext, texts: Iterable[str]) -> Ideal:
        return cls(ctx, [ctx.parse(t) for t in texts])

    @classmethod
    def maximal(cls, ctx: RingContext) -> Ideal:
        return cls(ctx, ctx.gens())

    @classmethod
    def unit(cls, ctx: RingContext) -> Ideal:
        return cls(ctx, [ctx.one()])

    def __repr__(self) -> str:
        return f"Ideal({', '.join(str(g) for g in self.generators) or '0'})"

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def require_homogeneous(self, what: str = "this operation") -> None:
        if not self.is_homogeneous():
            raise NotHomogeneousError(f"{what} needs homogeneous generators: {self!r}")

    def is_zero(self) -> bool:
        return not self.generators

    def degrees(self) -> list[int]:
        return [g.degree() for g in self.generators]

    # -- Groebner bases -----------------------------------------------------
    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> ReducedGroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            cd = codec(self.ctx.n, order)
            enc = buchberger([cd.encode_poly(g.term_dict) for g in self.generators], cd)
            gb = ReducedGroebnerBasis._from_encoded(self, order, cd, enc)
            self._gb[order] = gb
        return gb

    def _encoded_gb(self, cd: MonomialCodec) -> list[Encoded]:
        key = ("codec", cd.order, cd.perm)
        enc = self._gb.get(key)
        if enc is None:
            enc = buchberger([cd.encode_poly(g.term_dict) for g in self.generators], cd)
            self._gb[key] = enc
        return enc

    def is_unit(self) -> bool:
        return self.groebner_basis().is_unit()

    def __contains__(self, p) -> bool:
        return membership(p, self)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: Ideal) -> Ideal:
        return ideal_combine("sum", self, other)

    def __mul__(self, other: Ideal) -> Ideal:
        return ideal_combine("product", self, other)

    def __pow__(self, t: int) -> Ideal:
        return ideal_combine("power", self, t)


@dataclass(frozen=True)
class ReducedGroebnerBasis:
    elements: tuple[Polynomial, ...]
    order: MonomialOrder
    source: Ideal = field(compare=False, repr=False)
    _codec: MonomialCodec = field(compare=False, repr=False, default=None)
    _lms: tuple = field(compare=False, repr=False, default=())
    _tails: tuple = field(compare=False, repr=False, default=())

    @classmethod
    def _from_encoded(cls, source: Ideal, order: MonomialOrder, cd: MonomialCodec,
                      enc: list[Encoded]) -> ReducedGroebnerBasis:
        ctx = source.ctx
        elems = tuple(Polynomial._raw(ctx, cd.decode_poly(g)) for g in enc)
        lms = tuple(max(g) for g in enc)
        tails = tuple(_tail(g, lm) for g, lm in zip(enc, lms))
        return cls(elems, order, source, cd, lms, tails)

    @property
    def ctx(self) -> RingContext:
        return self.source.ctx

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_unit(self) -> bool:
        return len(self._lms) == 1 and self._lms[0] == 0

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [self._codec.decode(m) for m in self._lms]

    def max_degree(self) -> int:
        return max((g.degree() for g in self.elements), default=0)

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ctx != self.ctx:
            raise ValueError("polynomial from a different ring")
        cd = self._codec
        rem = kernels.reduce_full(cd.encode_poly(p.term_dict), list(self._lms),
                                  list(self._tails), cd.guard)
        return Polynomial._raw(self.ctx, cd.decode_poly(rem))

    def reduce_encoded(self, p: Encoded) -> Encoded:
        return kernels.reduce_full(p, list(self._lms), list(self._tails), self._codec.guard)

    def is_standard(self, exps: Sequence[int]) -> bool:
        cd = self._codec
        m = cd.encode(exps)
        g = cd.guard
        return not any(((m + g - lm) & g) == g for lm in self._lms)

    def s_polynomials_reduce_to_zero(self) -> bool:
        """Buchberger's criterion, checked over every pair."""
        cd = self._codec
        enc = [cd.encode_poly(g.term_dict) for g in self.elements]
        for a, b in combinations(range(len(enc)), 2):
            L = cd.lcm(self._lms[a], self._lms[b])
            s: Encoded = {}
            for idx, sign in ((a, 1), (b, -1)):
                q = L - self._lms[idx]
                for m, c in enc[idx].items():
                    k = m + q
                    v = s.get(k, 0) + sign * c
                    if v:
                        s[k] = v
                    else:
                        s.pop(k, None)
            if self.reduce_encoded(s):
                return False
        return True


def groebner_basis(ideal: Ideal, order: MonomialOrder = GREVLEX) -> ReducedGroebnerBasis:
    return ideal.groebner_basis(order)


def normal_form(p: Polynomial, gb: ReducedGroebnerBasis) -> Polynomial:
    return gb.normal_form(p)


def membership(p: Polynomial, ideal: Ideal) -> bool:
    if not isinstance(p, Polynomial):
        p = ideal.ctx.parse(p) if isinstance(p, str) else ideal.ctx.constant(p)
    if not p:
        return True
    if ideal.is_zero():
        return False
    return not ideal.groebner_basis().normal_form(p)


def contains_ideal(big: Ideal, small: Ideal) -> bool:
    return all(membership(g, big) for g in small.generators)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ctx != b.ctx:
        raise ValueError("ideals live in different rings")
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return a.groebner_basis().elements == b.groebner_basis().elements


def ideal_combine(op: str, a: Ideal, b) -> Ideal:
    """``sum`` and ``product`` of two ideals, or ``power`` of ``a`` by an int."""
    if op == "sum":
        _same_ring(a, b)
        return Ideal(a.ctx, a.generators + b.generators)
    if op == "product":
        _same_ring(a, b)
        return Ideal(a.ctx, [f * g for f in a.generators for g in b.generators])
    if op == "power":
        t = int(b)
        if t < 0:
            raise ValueError("negative ideal power")
        result = Ideal.unit(a.ctx)
        for _ in range(t):
            result = ideal_combine("product", result, a)
        return result
    raise ValueError(f"unknown ideal operation {op!r}")


def _same_ring(a: Ideal, b: Ideal) -> None:
    if not isinstance(b, Ideal):
        raise TypeError("expected an Ideal")
    if a.ctx != b.ctx:
        raise ValueError("ideals live in different rings")


def maximal_power(ctx: RingContext, t: int) -> Ideal:
    """m^t as its monomial generators."""
    return Ideal(ctx, [ctx.monomial(e) for e in monomials_of_degree(ctx.n, t)])


# ---------------------------------------------------------------------------
# intersection and colon


def intersection(a: Ideal, b: Ideal) -> Ideal:
    """Eliminate ``t`` from ``t*A + (1-t)*B``."""
    _same_ring(a, b)
    ctx = a.ctx
    if a.is_zero() or b.is_zero():
        return Ideal(ctx)
    n = ctx.n
    cd = codec(n + 1, MonomialOrder("block", 1))
    polys = []
    for g in a.generators:
        polys.append({cd.encode((1,) + e): c for e, c in g.term_dict.items()})
    for g in b.generators:
        p = {}
        for e, c in g.term_dict.items():
            p[cd.encode((0,) + e)] = c
            p[cd.encode((1,) + e)] = -c
        polys.append(p)
    gb = buchberger(polys, cd, weights=(0,) + (1,) * n)
    keep = []
    for g in gb:
        terms = cd.decode_poly(g)
        if all(e[0] == 0 for e in terms):
            keep.append(Polynomial._raw(ctx, {e[1:]: c for e, c in terms.items()}))
    return Ideal(ctx, keep)


def _single_variable(g: Polynomial) -> int | None:
    if len(g) != 1:
        return None
    (e,) = g.term_dict
    if sum(e) == 1:
        return e.index(1)
    return None


def colon_variable(a: Ideal, i: int) -> Ideal:
    """A : x_i for homogeneous A, via grevlex with x_i as the last variable.

    If G is such a basis then dividing by x_i every element it divides gives a
    Groebner basis of A : x_i.
    """
    a.require_homogeneous("colon by a variable")
    ctx = a.ctx
    n = ctx.n
    perm = [0] * n
    pos = 0
    for v in range(n):
        if v != i:
            perm[v] = pos
            pos += 1
    perm[i] = n - 1
    cd = codec(n, GREVLEX, tuple(perm))
    out = []
    for g in a._encoded_gb(cd):
        terms = cd.decode_poly(g)
        if all(e[i] for e in terms):
            terms = {e[:i] + (e[i] - 1,) + e[i + 1:]: c for e, c in terms.items()}
        out.append(Polynomial._raw(ctx, terms))
    return Ideal(ctx, out)


def colon_element(a: Ideal, g: Polynomial, method: str = "auto") -> Ideal:
    """A : (g) as (A ∩ (g)) / g; ``method='auto'`` shortcuts single variables."""
    ctx = a.ctx
    if not g:
        return Ideal.unit(ctx)
    if g.is_constant():
        return a
    if a.is_zero():
        return Ideal(ctx)
    if method == "auto":
        i = _single_variable(g)
        if i is not None and a.is_homogeneous():
            return colon_variable(a, i)
    meet = intersection(a, Ideal(ctx, [g]))
    quotients = []
    for h in meet.generators:
        try:
            quotients.append(h.exact_div(g))
        except ArithmeticError as exc:  # pragma: no cover - would be an engine bug
            raise AssertionError(f"inexact division of {h} by {g} in colon") from exc
    return Ideal(ctx, quotients)


def colon(a: Ideal, b: Ideal, method: str = "auto") -> Ideal:
    """A : B as the intersection of A : g over the generators g of B."""
    _same_ring(a, b)
    if b.is_zero():
        return Ideal.unit(a.ctx)
    result = None
    for g in b.generators:
        q = colon_element(a, g, method)
        result = q if result is None else intersection(result, q)
    return result


# ---------------------------------------------------------------------------
# dimension, regular sequences, minimal generators


def dimension(ideal: Ideal) -> int | None:
    """Krull dimension of R/I; ``None`` for the unit ideal (the zero ring)."""
    n = ideal.ctx.n
    if ideal.is_zero():
        return n
    gb = ideal.groebner_basis()
    if gb.is_unit():
        return None
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in gb.leading_exponents()]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0  # pragma: no cover - the empty set always qualifies for a proper ideal


def height(ideal: Ideal) -> int | None:
    d = dimension(ideal)
    return None if d is None else ideal.ctx.n - d


def is_regular_sequence(forms: Sequence[Polynomial]) -> bool:
    """For forms of positive degree: regular iff the ideal has height len(forms)."""
    if not forms:
        return True
    ctx = forms[0].ctx
    for f in forms:
        deg = f.degree()
        if deg is None or deg < 1 or not f.is_homogeneous():
            raise ValueError(f"{f} is not a form of positive degree")
    return height(Ideal(ctx, forms)) == len(forms)


def minimal_generators(ideal: Ideal) -> list[Polynomial]:
    """A minimal homogeneous generating set, chosen greedily by degree."""
    ideal.require_homogeneous("min_generator_count")
    ctx = ideal.ctx
    kept: list[Polynomial] = []
    for g in sorted(ideal.generators, key=lambda p: p.degree()):
        if not kept or not membership(g, Ideal(ctx, kept)):
            kept.append(g)
    return kept


def min_generator_count(ideal: Ideal) -> int:
    return len(minimal_generators(ideal))
