from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from aciverify import _kernels_py, kernels
from aciverify.polynomial import GREVLEX, codec


def matrices(max_rows=6, max_cols=6, bound=20):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                           max_size=max_rows).map(lambda rows: (rows, c)))


def fraction_rank(rows, ncols):
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


@settings(max_examples=150)
@given(matrices())
def test_rank_matches_fraction_elimination(kernel_module, mc):
    rows, ncols = mc
    assert kernel_module.rank_int(rows, ncols) == fraction_rank(rows, ncols)


@settings(max_examples=150)
@given(matrices())
def test_nullspace_is_kernel_of_full_dimension(kernel_module, mc):
    rows, ncols = mc
    basis = kernel_module.nullspace_int(rows, ncols)
    assert len(basis) == ncols - fraction_rank(rows, ncols)
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    assert fraction_rank(basis, ncols) == len(basis)


@settings(max_examples=100)
@given(matrices(max_rows=5, max_cols=5))
def test_echelon_is_reduced(kernel_module, mc):
    rows, ncols = mc
    ech, pivots = kernel_module.echelon_int(rows, ncols)
    assert len(ech) == len(pivots) == fraction_rank(rows, ncols)
    assert pivots == sorted(pivots)
    for i, (r, p) in enumerate(zip(ech, pivots)):
        assert r[p] != 0
        assert all(ech[j][p] == 0 for j in range(len(ech)) if j != i)


def test_rank_with_singleton_rows(kernel_module):
    rows = [[0, 1, 0, 5], [3, 0, 0, 0], [1, 1, 1, 1], [2, 2, 2, 2]]
    assert kernel_module.rank_int(rows, 4) == 3


@settings(max_examples=100)
@given(st.dictionaries(st.tuples(*[st.integers(0, 4)] * 3), st.integers(-9, 9), max_size=6))
def test_backends_reduce_identically(kernel_module, terms):
    from aciverify.ideal import Ideal
    from aciverify.polynomial import Polynomial, RingContext

    ctx = RingContext.of(("x", "y", "z"))
    gb = Ideal.parse(ctx, ["x^2 - y*z", "y^3 + x*z^2", "z^4"]).groebner_basis()
    cd = codec(3, GREVLEX)
    p = cd.encode_poly(Polynomial(ctx, terms).term_dict)
    lms, tails = list(gb._lms), list(gb._tails)
    a = kernel_module.reduce_full(dict(p), lms, tails, cd.guard)
    b = _kernels_py.reduce_full(dict(p), lms, tails, cd.guard)
    assert a == b


def test_backend_is_reported():
    assert kernels.BACKEND in ("python", "cython")


def test_pure_python_fallback_can_be_forced():
    import os
    import subprocess
    import sys

    env = dict(os.environ, ACI_PURE_PYTHON="1")
    code = "from aciverify import kernels; print(kernels.BACKEND, kernels.rank_int([[1, 2], [2, 4]], 2))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    assert out == ["python", "1"]
