from __future__ import annotations

import importlib
import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from aciverify import Polynomial, RingContext  # noqa: E402

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], print_blob=True)
settings.load_profile("default")

XYZ = RingContext.of(("x", "y", "z"))
XY = RingContext.of(("x", "y"))


def _backends():
    names = ["python"]
    try:
        importlib.import_module("aciverify._kernels")
        names.append("cython")
    except ImportError:
        pass
    return names


BACKENDS = _backends()


@pytest.fixture(params=BACKENDS, scope="module")
def kernel_module(request):
    if request.param == "cython":
        return importlib.import_module("aciverify._kernels")
    return importlib.import_module("aciverify._kernels_py")


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Route every kernel call of the package through one backend."""
    from aciverify import kernels

    mod = importlib.import_module(
        "aciverify._kernels" if request.param == "cython" else "aciverify._kernels_py")
    for name in ("reduce_full", "echelon_int", "rank_int", "nullspace_int"):
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    return request.param


def exponents(n: int, max_deg: int):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).map(tuple)


def polynomials(ctx: RingContext, max_deg: int = 3, max_terms: int = 4, coeff: int = 5):
    """Small random polynomials with integer coefficients."""
    term = st.tuples(exponents(ctx.n, max_deg), st.integers(-coeff, coeff))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: Polynomial(ctx, _accumulate(ts)))


def forms(ctx: RingContext, degree: int, max_terms: int = 4, coeff: int = 5, nonzero=True):
    """Homogeneous polynomials of a fixed degree."""
    from aciverify.polynomial import monomials_of_degree

    monos = list(monomials_of_degree(ctx.n, degree))
    term = st.tuples(st.sampled_from(monos), st.integers(-coeff, coeff))
    strat = st.lists(term, min_size=1, max_size=max_terms).map(
        lambda ts: Polynomial(ctx, _accumulate(ts)))
    return strat.filter(bool) if nonzero else strat


def _accumulate(ts):
    out: dict = {}
    for e, c in ts:
        out[e] = out.get(e, 0) + c
    return out


@st.composite
def homogeneous_ideal_gens(draw, ctx: RingContext = XYZ, max_gens: int = 3, max_deg: int = 3):
    k = draw(st.integers(1, max_gens))
    return [draw(forms(ctx, draw(st.integers(1, max_deg)), max_terms=3)) for _ in range(k)]
