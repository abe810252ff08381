"""Seeded random regular sequences, almost complete intersections and general linear forms.

Every random draw comes from :class:`random.Random` (Mersenne Twister)
seeded with the string ``"<stream>:<seed>"``, so a (parameters, seed) pair
always reproduces the same instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .graded import length_artinian
from .ideal import (
    Ideal,
    colon,
    dimension,
    height,
    ideal_equal,
    is_regular_sequence,
    membership,
    min_generator_count,
)
from .polynomial import Polynomial, RingContext, monomials_of_degree

FORM_COEFFS = (-9, 9)
LINEAR_COEFFS = (-10**6, 10**6)
REGULAR_ATTEMPTS = 32
LAST_ATTEMPTS = 32
LINEAR_RESAMPLES = 8


class GenerationError(RuntimeError):
    pass


class GenericityError(GenerationError):
    def __init__(self, message: str, seed: int):
        super().__init__(f"{message} (seed {seed})")
        self.seed = seed


def rng(seed: int, stream: str) -> random.Random:
    return random.Random(f"{stream}:{seed}")


@dataclass(frozen=True)
class ACIInstance:
    ctx: RingContext
    N: int
    degrees: tuple[int, ...]
    d_last: int
    f: tuple[Polynomial, ...]
    f_last: Polynomial
    r: int
    ell: tuple[Polynomial, ...]
    seed: int

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def e_Rf(self) -> int:
        return prod(self.degrees)

    def ideal_f(self) -> Ideal:
        return Ideal(self.ctx, self.f)

    def ideal_I(self) -> Ideal:
        return Ideal(self.ctx, self.f + (self.f_last,))

    def ideal_f_ell(self) -> Ideal:
        return Ideal(self.ctx, self.f + self.ell)

    def ideal_I_ell(self) -> Ideal:
        return Ideal(self.ctx, self.f + (self.f_last,) + self.ell)

    def summary(self) -> dict:
        return {
            "vars": list(self.ctx.variable_names),
            "f": [str(p) for p in self.f],
            "f_last": str(self.f_last),
            "ell": [str(p) for p in self.ell],
            "seed": self.seed,
        }


def default_context(n: int) -> RingContext:
    if n <= 4:
        return RingContext(("x", "y", "z", "w")[:n])
    return RingContext(tuple(f"x{i}" for i in range(1, n + 1)))


def _random_form_in_prime(ctx: RingContext, N: int, d: int, rand: random.Random) -> Polynomial:
    lo, hi = FORM_COEFFS
    while True:
        terms = {}
        for e in monomials_of_degree(ctx.n, d):
            if any(e[:N]):
                c = rand.randint(lo, hi)
                if c:
                    terms[e] = c
        if terms:
            return Polynomial(ctx, terms)


def random_regular_sequence(ctx: RingContext, N: int, degrees: Sequence[int],
                            seed: int) -> list[Polynomial]:
    """Forms of the given degrees inside (x_1..x_N) generating a height-N ideal."""
    if not 1 <= N <= ctx.n:
        raise ValueError(f"need 1 <= N <= n, got N={N}, n={ctx.n}")
    if len(degrees) != N or any(d < 1 for d in degrees):
        raise ValueError(f"need {N} positive degrees, got {list(degrees)}")
    rand = rng(seed, "f")
    for _ in range(REGULAR_ATTEMPTS):
        forms = [_random_form_in_prime(ctx, N, d, rand) for d in degrees]
        if is_regular_sequence(forms):
            return forms
    raise GenerationError(f"no regular sequence of degrees {list(degrees)} after "
                          f"{REGULAR_ATTEMPTS} attempts (seed {seed})")


def sample_linear_forms(ctx: RingContext, k: int, rand: random.Random) -> list[Polynomial]:
    """k uncertified linear forms with coefficients uniform in LINEAR_COEFFS."""
    lo, hi = LINEAR_COEFFS
    n = ctx.n
    out = []
    for _ in range(k):
        coeffs = [rand.randint(lo, hi) for _ in range(n)]
        out.append(Polynomial(ctx, {tuple(1 if j == i else 0 for j in range(n)): c
                                    for i, c in enumerate(coeffs)}))
    return out


def general_linear_forms(ctx: RingContext, f: Sequence[Polynomial], seed: int,
                         stream: str = "ell") -> list[Polynomial]:
    """n - N random linear forms certified by length(R/(f, ell)) = prod(deg f)."""
    N = len(f)
    k = ctx.n - N
    if k < 0:
        raise ValueError("more forms than variables")
    if k == 0:
        return []
    target = prod(p.degree() for p in f)
    rand = rng(seed, stream)
    for _ in range(1 + LINEAR_RESAMPLES):
        ell = sample_linear_forms(ctx, k, rand)
        if certify_linear_forms(f, ell, target):
            return ell
    raise GenericityError("general linear forms not found after "
                          f"{1 + LINEAR_RESAMPLES} samples", seed)


def certify_linear_forms(f: Sequence[Polynomial], ell: Sequence[Polynomial],
                         target: int | None = None) -> bool:
    if any(p.degree() != 1 for p in ell):
        return False
    ctx = (list(f) + list(ell))[0].ctx
    J = Ideal(ctx, list(f) + list(ell))
    if dimension(J) != 0:
        return False
    if target is None:
        target = prod(p.degree() for p in f)
    return length_artinian(J) == target


def random_aci(ctx: RingContext, degrees: Sequence[int], d_last: int, seed: int) -> ACIInstance:
    """An almost complete intersection (f_1..f_N, f_last) with f_last in (x_1..x_N)."""
    degrees = tuple(int(d) for d in degrees)
    N = len(degrees)
    if d_last < 1:
        raise ValueError("d_last must be positive")
    f = random_regular_sequence(ctx, N, degrees, seed)
    F = Ideal(ctx, f)
    rand = rng(seed, "last")
    for _ in range(LAST_ATTEMPTS):
        g = _random_form_in_prime(ctx, N, d_last, rand)
        if membership(g, F):
            continue
        if min_generator_count(Ideal(ctx, f + [g])) != N + 1:
            continue
        break
    else:
        raise GenerationError(f"no admissible f_last of degree {d_last} after "
                              f"{LAST_ATTEMPTS} attempts (seed {seed})")
    ell = general_linear_forms(ctx, f, seed)
    inst = ACIInstance(ctx, N, degrees, d_last, tuple(f), g,
                       sum(d - 1 for d in degrees), tuple(ell), seed)
    validate_instance(inst)
    return inst


def validate_instance(inst: ACIInstance, check_colon: bool = True) -> None:
    """Re-check every defining property; raises GenerationError on failure."""
    ctx, f, g = inst.ctx, list(inst.f), inst.f_last
    F = Ideal(ctx, f)
    problems = []
    if not is_regular_sequence(f):
        problems.append("f is not a regular sequence")
    if [p.degree() for p in f] != list(inst.degrees) or not all(p.is_homogeneous() for p in f):
        problems.append("degrees of f do not match")
    if g.degree() != inst.d_last or not g.is_homogeneous():
        problems.append("f_last is not a form of degree d_last")
    if membership(g, F):
        problems.append("f_last lies in (f)")
    I = Ideal(ctx, f + [g])
    if height(I) != inst.N:
        problems.append("height of I differs from N")
    if min_generator_count(I) != inst.N + 1:
        problems.append("I is not minimally generated by N+1 forms")
    if inst.r != sum(d - 1 for d in inst.degrees):
        problems.append("r is inconsistent")
    if len(inst.ell) != ctx.n - inst.N or (inst.ell and not certify_linear_forms(f, inst.ell)):
        problems.append("linear forms fail the length certificate")
    if check_colon and not problems:
        Q = colon(F, Ideal(ctx, [g]))
        if ideal_equal(Q, F) or Q.is_unit():
            problems.append("(f) : f_last is not strictly between (f) and R")
    if problems:
        raise GenerationError(f"invalid instance (seed {inst.seed}): {'; '.join(problems)}")
