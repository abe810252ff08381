"""Compare the compiled and pure-Python kernels on realistic workloads.

Run with ``python benchmarks/bench_kernels.py``.  Each workload is timed
with both backends and the results are checked to agree exactly.
"""

from __future__ import annotations

import argparse
import random
import time

from aciverify import _kernels_py
from aciverify.ideal import buchberger
from aciverify.instances import default_context, random_aci
from aciverify.polynomial import LEX, codec

try:
    from aciverify import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def groebner_workload(mod):
    """Lex Buchberger on a random almost complete intersection in four variables."""
    inst = random_aci(default_context(4), (2, 3), 3, 0)
    cd = codec(4, LEX)
    polys = [cd.encode_poly(p.term_dict) for p in inst.ideal_I().generators]

    def run():
        from aciverify import kernels

        saved = kernels.reduce_full
        kernels.reduce_full = mod.reduce_full
        try:
            basis = buchberger([dict(p) for p in polys], cd, None)
        finally:
            kernels.reduce_full = saved
        return sorted(max(p) for p in basis)

    return run


def rank_workload(mod, size=60, density=0.3, seed=1):
    rand = random.Random(seed)
    rows = [[rand.randint(-50, 50) if rand.random() < density else 0 for _ in range(size)]
            for _ in range(size)]
    return lambda: mod.rank_int(rows, size)


def nullspace_workload(mod, size=40, seed=2):
    rand = random.Random(seed)
    base = [[rand.randint(-9, 9) for _ in range(size)] for _ in range(size // 2)]
    rows = base + [[a + b for a, b in zip(base[i], base[i + 1])] for i in range(size // 4)]
    return lambda: mod.nullspace_int(rows, size)


WORKLOADS = {
    "groebner": groebner_workload,
    "rank": rank_workload,
    "nullspace": nullspace_workload,
}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _kernels_c is None:
        print("compiled kernels are not built; only the pure-Python timings are shown")
    print(f"{'workload':<12}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, make in WORKLOADS.items():
        t_py, r_py = _timed(make(_kernels_py), args.repeat)
        if _kernels_c is None:
            print(f"{name:<12}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        t_c, r_c = _timed(make(_kernels_c), args.repeat)
        if r_py != r_c:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<12}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.2f}x")


if __name__ == "__main__":
    main()
