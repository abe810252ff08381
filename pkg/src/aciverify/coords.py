"""Linear changes of coordinates of R = QQ[x_1..x_n].

A graded automorphism sigma fixes m, and sigma(J : K) = sigma(J) : sigma(K).
Sending general linear forms to coordinate variables therefore preserves
every colon, socle and equality question about (ell^(r+1), f) while making
ell^(r+1) a monomial ideal.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .ideal import Ideal
from .polynomial import QQ, Polynomial, RingContext


def _invert(matrix: list[list[QQ]]) -> list[list[QQ]] | None:
    n = len(matrix)
    a = [[QQ(x) for x in row] + [QQ(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def linear_coefficients(p: Polynomial) -> list[QQ]:
    if not p or p.degree() != 1 or not p.is_homogeneous():
        raise ValueError(f"{p} is not a linear form")
    n = p.ctx.n
    return [p.term_dict.get(tuple(1 if j == i else 0 for j in range(n)), QQ(0)) for i in range(n)]


class LinearChange:
    """The substitution x = inverse(matrix) * y, i.e. y_i = sum_j matrix[i][j] x_j."""

    def __init__(self, ctx: RingContext, matrix: Sequence[Sequence]):
        self.ctx = ctx
        self.matrix = [[QQ(x) for x in row] for row in matrix]
        inverse = _invert(self.matrix)
        if inverse is None:
            raise ValueError("singular coordinate change")
        self.inverse = inverse
        ys = ctx.gens()
        # image of x_i after the change, and of y_i when mapping back
        self._forward = [sum((ys[k].scale(c) for k, c in enumerate(row) if c), ctx.zero())
                         for row in inverse]
        self._backward = [sum((ys[k].scale(c) for k, c in enumerate(row) if c), ctx.zero())
                          for row in self.matrix]

    @classmethod
    def sending_to_last_variables(cls, ctx: RingContext, forms: Sequence[Polynomial]) -> LinearChange:
        """A change in which forms[j] becomes variable number n - len(forms) + j.

        The remaining new variables are old coordinate variables, preferring
        the first ones.
        """
        n = ctx.n
        k = len(forms)
        rows = [linear_coefficients(p) for p in forms]
        for keep in combinations(range(n), n - k):
            units = [[QQ(1 if j == i else 0) for j in range(n)] for i in keep]
            matrix = units + rows
            if _invert(matrix) is not None:
                return cls(ctx, matrix)
        raise ValueError("the linear forms are linearly dependent")

    @staticmethod
    def _substitute(p: Polynomial, images: list[Polynomial]) -> Polynomial:
        ctx = p.ctx
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, k: int) -> Polynomial:
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] if k == 1 else power(i, k - 1) * images[i]
            return powers[key]

        acc: dict = {}
        for e, c in p.term_dict.items():
            t = ctx.constant(c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            for te, tc in t.term_dict.items():
                v = acc.get(te, 0) + tc
                if v:
                    acc[te] = v
                else:
                    acc.pop(te, None)
        return Polynomial._raw(ctx, acc)

    def apply(self, p: Polynomial) -> Polynomial:
        """Rewrite p(x) in the new coordinates y."""
        return self._substitute(p, self._forward)

    def revert(self, p: Polynomial) -> Polynomial:
        """Rewrite p(y) back in the original coordinates x."""
        return self._substitute(p, self._backward)

    def apply_ideal(self, ideal: Ideal) -> Ideal:
        return Ideal(self.ctx, [self.apply(g) for g in ideal.generators])

    def revert_ideal(self, ideal: Ideal) -> Ideal:
        return Ideal(self.ctx, [self.revert(g) for g in ideal.generators])
