#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three kernel entry points on representative workloads (sparse
products of the sweep polynomials, the elimination term updates, and
the integer Sylvester determinants the interpolation path runs
thousands of times), then an end-to-end sweep case via subprocess with
RESVERIFY_PURE_KERNELS toggled.

Run:  python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import subprocess
import sys
import time

from resverify import _kernels_py
from resverify.catalog import build_core, manifest
from resverify.poly import GUARD_MASK, MultiPoly

try:
    from resverify import _speedups
except ImportError:
    _speedups = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_mul(backend, h, k, repeat):
    return _time(lambda: backend.mul_dicts(h._d, k._d, GUARD_MASK), repeat)


def bench_addmul(backend, h, k, repeat):
    key = next(iter(k._d))
    coeff = k._d[key]

    def run():
        acc = dict(h._d)
        for _ in range(50):
            backend.addmul_term(acc, coeff, key, k._d, GUARD_MASK)
    return _time(run, repeat)


def bench_bareiss(backend, rows, repeat):
    return _time(lambda: backend.bareiss_det_int(rows), repeat)


def sylvester_int_rows(mm, rr, cc, at):
    core = build_core((mm, rr, cc))
    h = core.H.substitute("f", at).primitive()[1]
    k = core.K.substitute("f", at).primitive()[1]
    hk = [int(co.constant_value().numerator) for co in h.coefficients_in("k")]
    kk = [int(co.constant_value().numerator) for co in k.coefficients_in("k")]
    da, db = len(hk) - 1, len(kk) - 1
    dim = da + db
    rows = []
    for i in range(db):
        row = [0] * dim
        for j, co in enumerate(reversed(hk)):
            row[i + j] = co
        rows.append(row)
    for i in range(da):
        row = [0] * dim
        for j, co in enumerate(reversed(kk)):
            row[i + j] = co
        rows.append(row)
    return rows


def end_to_end_case(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["RESVERIFY_PURE_KERNELS"] = "1"
    else:
        env.pop("RESVERIFY_PURE_KERNELS", None)
    code = ("import time, resverify.sweep as s; t=time.perf_counter(); "
            "s.run_case(9, 5, 1, 'k'); print(time.perf_counter()-t)")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="fewer repeats")
    args = ap.parse_args()
    repeat = 3 if args.quick else 7

    if _speedups is None:
        print("compiled kernels unavailable; nothing to compare")
        return

    man = manifest()
    hgen = man["Hgen"]
    kgen = (hgen.derivative("f") * man["NumDerF"]
            + hgen.derivative("k") * man["DenDerF"])
    rows = sylvester_int_rows(9, 5, 1, at=37)

    workloads = [
        (f"mul_dicts  Hgen*Kgen ({len(hgen)}x{len(kgen)} terms)",
         lambda be: bench_mul(be, hgen, kgen, repeat)),
        ("addmul_term 50 updates into Hgen",
         lambda be: bench_addmul(be, hgen, kgen, repeat)),
        (f"bareiss_det_int {len(rows)}x{len(rows)} Sylvester sample",
         lambda be: bench_bareiss(be, rows, repeat)),
    ]
    print(f"{'workload':54} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, fn in workloads:
        t_py = fn(_kernels_py)
        t_cy = fn(_speedups)
        print(f"{label:54} {t_py*1e3:8.2f}ms {t_cy*1e3:8.2f}ms "
              f"{t_py/t_cy:7.2f}x")

    t_py = end_to_end_case(pure=True)
    t_cy = end_to_end_case(pure=False)
    print(f"{'run_case(9,5,1,k) end to end (subprocess)':54} "
          f"{t_py*1e3:8.0f}ms {t_cy*1e3:8.0f}ms {t_py/t_cy:7.2f}x")


if __name__ == "__main__":
    main()
