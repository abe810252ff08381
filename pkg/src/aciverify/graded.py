"""Hilbert series, multiplicity, length and socle of graded quotients R/I."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from . import kernels
from .ideal import Ideal, ReducedGroebnerBasis, dimension
from .polynomial import Polynomial, monomials_of_degree


class UnitIdealError(ValueError):
    pass


class NotArtinianError(ValueError):
    pass


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series of R/I written as numerator(t) / (1 - t)**dim."""

    numerator: tuple[int, ...]
    dim: int
    raw_numerator: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    def series_coefficient(self, d: int) -> int:
        """Coefficient of t**d in numerator / (1-t)**dim."""
        from math import comb

        if self.dim == 0:
            return self.numerator[d] if 0 <= d < len(self.numerator) else 0
        return sum(c * comb(d - k + self.dim - 1, self.dim - 1)
                   for k, c in enumerate(self.numerator) if k <= d)


@dataclass(frozen=True)
class GradedBasis:
    by_degree: dict[int, list[tuple[int, ...]]]

    @property
    def length(self) -> int:
        return sum(len(v) for v in self.by_degree.values())

    def hilbert_function(self) -> list[int]:
        top = max(self.by_degree, default=-1)
        return [len(self.by_degree.get(d, ())) for d in range(top + 1)]


@dataclass(frozen=True)
class SocleData:
    by_degree: dict[int, int]
    generators: tuple[Polynomial, ...]

    @property
    def dimension(self) -> int:
        return sum(self.by_degree.values())

    def degrees(self) -> list[int]:
        return sorted(d for d, k in self.by_degree.items() if k)


# ---------------------------------------------------------------------------
# Hilbert series numerators of monomial ideals


def _minimalize(gens) -> tuple:
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=65536)
def _numerator(gens: tuple) -> tuple[int, ...]:
    """K-polynomial of R/M for M minimally generated by ``gens``."""
    if not gens:
        return (1,)
    n = len(gens[0])
    # base case: pairwise coprime generators
    used = [0] * n
    coprime = True
    for g in gens:
        for i, x in enumerate(g):
            if x:
                if used[i]:
                    coprime = False
                used[i] = 1
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return tuple(out)
    # pivot on the variable occurring in the most non-pure-power generators
    counts = [0] * n
    for g in gens:
        if sum(1 for x in g if x) > 1:
            for i, x in enumerate(g):
                if x:
                    counts[i] += 1
    i = max(range(n), key=lambda k: counts[k])
    unit = tuple(1 if k == i else 0 for k in range(n))
    plus = _minimalize([g for g in gens if not g[i]] + [unit])
    quot = _minimalize([g[:i] + (max(g[i] - 1, 0),) + g[i + 1:] for g in gens])
    left = list(_numerator(plus))
    right = [0] + list(_numerator(quot))
    out = _poly_add(left, right)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def monomial_numerator(gens) -> tuple[int, ...]:
    return _numerator(_minimalize(tuple(tuple(g) for g in gens)))


def _divide_one_minus_t(p: list[int]) -> list[int]:
    # p(t) = (1 - t) q(t): q_k = sum_{j<=k} p_j
    q = []
    acc = 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return q


def _proper_gb(ideal: Ideal) -> ReducedGroebnerBasis:
    ideal.require_homogeneous("graded analysis")
    if ideal.is_zero():
        raise ValueError("the zero ideal has no Groebner basis; use a proper nonzero ideal")
    gb = ideal.groebner_basis()
    if gb.is_unit():
        raise UnitIdealError("R/I is the zero ring")
    return gb


def hilbert(ideal: Ideal) -> HilbertData:
    gb = _proper_gb(ideal)
    n = ideal.ctx.n
    raw = list(monomial_numerator(gb.leading_exponents()))
    num = raw
    dim = n
    while dim > 0 and sum(num) == 0:
        num = _divide_one_minus_t(num)
        dim -= 1
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return HilbertData(tuple(num), dim, tuple(raw))


def multiplicity(ideal: Ideal) -> int:
    return hilbert(ideal).multiplicity


def hilbert_function(ideal: Ideal, d: int) -> int:
    """Number of standard monomials of degree ``d``."""
    if d < 0:
        return 0
    gb = _proper_gb(ideal)
    return sum(1 for e in monomials_of_degree(ideal.ctx.n, d) if gb.is_standard(e))


def standard_monomials(ideal: Ideal) -> GradedBasis:
    """Standard monomials of an Artinian quotient, grouped by degree."""
    gb = _proper_gb(ideal)
    if dimension(ideal) != 0:
        raise NotArtinianError(f"R/I has positive dimension: {ideal!r}")
    n = ideal.ctx.n
    by_degree: dict[int, list[tuple[int, ...]]] = {}
    layer = [(0,) * n]
    d = 0
    while layer:
        by_degree[d] = layer
        nxt = set()
        for e in layer:
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if gb.is_standard(f):
                    nxt.add(f)
        layer = sorted(nxt, reverse=True)
        d += 1
    return GradedBasis(by_degree)


def length_artinian(ideal: Ideal) -> int:
    return standard_monomials(ideal).length


# ---------------------------------------------------------------------------
# socle


def _integer_row(coeffs) -> list[int]:
    den = 1
    for c in coeffs:
        if c:
            den = lcm(den, int(c.denominator))
    return [int(c * den) for c in coeffs]


def socle(ideal: Ideal) -> SocleData:
    """Basis of (I : m) / I, degree by degree, by exact kernel computation."""
    gb = _proper_gb(ideal)
    basis = standard_monomials(ideal)
    ctx = ideal.ctx
    n = ctx.n
    cd = gb._codec
    by_degree: dict[int, int] = {}
    reps: list[Polynomial] = []
    for d, monos in basis.by_degree.items():
        upper = basis.by_degree.get(d + 1, [])
        if not upper:
            # everything in the top degree is killed by m
            by_degree[d] = len(monos)
            reps.extend(ctx.monomial(e) for e in monos)
            continue
        index = {cd.encode(e): k for k, e in enumerate(upper)}
        # one column per standard monomial s, rows = (variable, target monomial)
        columns = []
        for e in monos:
            col = [0] * (n * len(upper))
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                nf = gb.reduce_encoded({cd.encode(f): 1})
                for m, c in nf.items():
                    col[i * len(upper) + index[m]] = c
            columns.append(col)
        rows = [_integer_row([columns[j][r] for j in range(len(monos))])
                for r in range(n * len(upper))]
        kernel = kernels.nullspace_int(rows, len(monos))
        if kernel:
            by_degree[d] = len(kernel)
            for v in kernel:
                reps.append(Polynomial(ctx, {e: c for e, c in zip(monos, v) if c}))
    return SocleData(by_degree, tuple(reps))


def socle_lift(ideal: Ideal) -> Ideal:
    """I : m for an Artinian homogeneous I, as I plus socle representatives."""
    return Ideal(ideal.ctx, ideal.generators + socle(ideal).generators)
