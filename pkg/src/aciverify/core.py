"""Reductions, reduction numbers and the core of the maximal ideal modulo a complete intersection."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .coords import LinearChange
from .graded import SocleData, socle, socle_lift
from .ideal import (
    Ideal,
    colon,
    contains_ideal,
    dimension,
    ideal_combine,
    ideal_equal,
    is_regular_sequence,
    maximal_power,
    membership,
)
from .instances import ACIInstance, general_linear_forms
from .polynomial import Polynomial


class ReductionError(ValueError):
    pass


class ReductionWitness(NamedTuple):
    B: Ideal
    A: Ideal
    reduction_number: int | None


@dataclass
class CoreResult:
    """Core of m modulo (f), presented in R as (ell^(r+1), f) : m^r.

    When ``change`` is set the colon was computed in coordinates where the
    linear forms are variables; ``transformed`` holds that ideal and ``core``
    maps it back on first access.
    """

    r: int
    ell: tuple[Polynomial, ...]
    matches_lemma: bool
    transformed: Ideal
    change: LinearChange | None = None

    @cached_property
    def core(self) -> Ideal:
        if self.change is None:
            return self.transformed
        return self.change.revert_ideal(self.transformed)

    def contains(self, p: Polynomial) -> bool:
        if self.change is not None:
            p = self.change.apply(p)
        return membership(p, self.transformed)


def _plus(ideal: Ideal, modulo: Ideal | None) -> Ideal:
    return ideal if modulo is None else ideal + modulo


def reduction_number(B: Ideal, A: Ideal, t_max: int, modulo: Ideal | None = None) -> int | None:
    """Least t <= t_max with A^(t+1) = B A^t (modulo ``modulo``), else None."""
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    if not contains_ideal(_plus(A, modulo), B):
        raise ReductionError("B is not contained in A")
    power = Ideal.unit(A.ctx)
    for t in range(t_max + 1):
        nxt = ideal_combine("product", power, A)
        if ideal_equal(_plus(nxt, modulo), _plus(ideal_combine("product", B, power), modulo)):
            return t
        power = nxt
    return None


def reduction_witness(B: Ideal, A: Ideal, t_max: int, modulo: Ideal | None = None) -> ReductionWitness:
    return ReductionWitness(B, A, reduction_number(B, A, t_max, modulo))


def _is_maximal(A: Ideal) -> bool:
    return ideal_equal(A, Ideal.maximal(A.ctx))


def colon_maximal_power(J: Ideal, r: int) -> Ideal:
    """J : m^r as r successive colons by m.

    Artinian steps use J : m = J + socle(R/J); the rest use the general colon.
    """
    m = Ideal.maximal(J.ctx)
    for _ in range(r):
        if J.is_homogeneous() and not J.is_zero() and dimension(J) == 0 and not J.is_unit():
            J = socle_lift(J)
        else:
            J = colon(J, m)
    return J


def _colon_power(J: Ideal, A: Ideal, r: int) -> Ideal:
    if r == 0:
        return J
    if _is_maximal(A):
        return colon_maximal_power(J, r)
    return colon(J, A ** r)


def core_colon(B: Ideal, A: Ideal, r: int, modulo: Ideal | None = None,
               check_stability: bool = True) -> Ideal:
    """B^(r+1) : A^r, with B a reduction of A of reduction number <= r."""
    if reduction_number(B, A, r, modulo) is None:
        raise ReductionError(f"B is not a reduction of A with reduction number <= {r}")
    result = _colon_power(_plus(B ** (r + 1), modulo), A, r)
    if check_stability:
        again = _colon_power(_plus(B ** (r + 2), modulo), A, r + 1)
        if not ideal_equal(result, again):
            raise ReductionError("B^(r+1):A^r differs from B^(r+2):A^(r+1)")
    return result


def _check_forms(f: Sequence[Polynomial]) -> list[Polynomial]:
    f = list(f)
    if not f:
        raise ValueError("need at least one form")
    if not is_regular_sequence(f):
        raise ValueError("the forms are not a regular sequence")
    return f


def ell_coordinates(f: Sequence[Polynomial], ell: Sequence[Polynomial]):
    """(change, transformed f, the variables that ell became)."""
    ctx = f[0].ctx
    change = LinearChange.sending_to_last_variables(ctx, ell)
    gens = ctx.gens()
    return change, [change.apply(p) for p in f], gens[ctx.n - len(ell):]


def core_of_maximal_ideal(f: Sequence[Polynomial], seed: int = 0,
                          ell: Sequence[Polynomial] | None = None,
                          stream: str = "ell", method: str = "coordinates") -> CoreResult:
    """The ambient ideal (ell^(r+1), f) : m^r presenting the core of m modulo (f).

    ``method='coordinates'`` computes after sending ell to coordinate
    variables; ``method='direct'`` works with ell as given.
    """
    f = _check_forms(f)
    ctx = f[0].ctx
    r = sum(p.degree() - 1 for p in f)
    if ell is None:
        ell = general_linear_forms(ctx, f, seed, stream)
    ell = tuple(ell)
    if not ell:
        # m is nilpotent modulo (f): the zero ideal is a reduction, so the core is 0
        F = Ideal(ctx, f)
        return CoreResult(r, ell, ideal_equal(F, maximal_power(ctx, r + 1) + F), F)
    change = None
    if method == "coordinates":
        change, f, ell_vars = ell_coordinates(f, ell)
    elif method == "direct":
        ell_vars = list(ell)
    else:
        raise ValueError(f"unknown method {method!r}")
    F = Ideal(ctx, f)
    core = colon_maximal_power(Ideal(ctx, ell_vars) ** (r + 1) + F, r)
    expected = maximal_power(ctx, r + 1) + F
    return CoreResult(r, ell, ideal_equal(core, expected), core, change)


def lemma_socle(f: Sequence[Polynomial], ell: Sequence[Polynomial]) -> SocleData:
    """Socle of R/(ell^(r+1), f), computed with ell as coordinates."""
    f = _check_forms(f)
    ctx = f[0].ctx
    r = sum(p.degree() - 1 for p in f)
    if not ell:
        return socle(Ideal(ctx, f))
    _, ft, ell_vars = ell_coordinates(f, ell)
    return socle(Ideal(ctx, ell_vars) ** (r + 1) + Ideal(ctx, ft))


def ell_reduction_number(f: Sequence[Polynomial], ell: Sequence[Polynomial],
                         t_max: int | None = None) -> int:
    """Reduction number of m modulo (f) with respect to the image of (ell).

    ``t_max`` defaults to r + 2; not reaching equality by then is an error.
    """
    f = _check_forms(f)
    ctx = f[0].ctx
    if t_max is None:
        t_max = sum(p.degree() - 1 for p in f) + 2
    m = Ideal.maximal(ctx)
    if not ell:
        F = Ideal(ctx, f)
        t = reduction_number(F, m, t_max, modulo=F)
    else:
        _, ft, ell_vars = ell_coordinates(f, ell)
        F = Ideal(ctx, ft)
        t = reduction_number(Ideal(ctx, ell_vars) + F, m, t_max, modulo=F)
    if t is None:
        raise ReductionError(f"no reduction number <= {t_max} for f = {[str(p) for p in f]}, "
                             f"ell = {[str(p) for p in ell]}")
    return t


def core_independence(f: Sequence[Polynomial], seed: int = 0) -> bool:
    """Whether two independently sampled ell give the same core ideal.

    A disagreement means one sample was not general enough; it is reported
    by the caller as a genericity failure, not as a failure of the lemma.
    """
    first = core_of_maximal_ideal(f, seed, stream="ell")
    second = core_of_maximal_ideal(f, seed, stream="ell-alt")
    return ideal_equal(first.core, second.core)


def core_membership_gate(inst: ACIInstance, core: Ideal | None = None) -> bool:
    """Whether f_last lies in the core; false whenever d_last <= r."""
    if core is None:
        return core_of_maximal_ideal(inst.f, inst.seed, inst.ell).contains(inst.f_last)
    return membership(inst.f_last, core)


def red_num_containment(f: Sequence[Polynomial], ell: Sequence[Polynomial], r: int) -> bool:
    """m^(r+1) is contained in (f, ell)."""
    ctx = f[0].ctx
    return contains_ideal(Ideal(ctx, list(f) + list(ell)), maximal_power(ctx, r + 1))
