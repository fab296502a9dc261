"""Time the compiled linked-pair kernel against the plain Python one.

    python3 benchmarks/bench_kernels.py [--max-len 8] [--repeat 3]

Both run over every primitive cyclic word up to the length bound on the
pair of pants and the one-holed torus, and must return identical counts.
"""

import argparse
import time

from surfcurves import _kernels
from surfcurves.geodesics import _encode, _encode_surface, comparison_depth
from surfcurves.surfaces import build_surface
from surfcurves.words import cyclic_classes


def workload(max_len):
    jobs = []
    for name in ("pants", "torus1"):
        s = build_surface(name)
        gen_index, pos, twist = _encode_surface(s)
        for c in cyclic_classes(s.generators, max_len, primitive_only=True):
            w = _encode(s, c, gen_index)
            jobs.append((pos, twist, w, comparison_depth(len(w), len(w))))
    return jobs


def run(kernels, jobs):
    return [kernels.linked_count(pos, twist, w, w, True, depth) for pos, twist, w, depth in jobs]


def best_of(kernels, jobs, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = run(kernels, jobs)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    jobs = workload(args.max_len)
    print(f"{len(jobs)} words, numba available: {_kernels.NUMBA}")
    t_py, ref = best_of(_kernels.python, jobs, args.repeat)
    print(f"python   {t_py:8.3f} s")
    if not _kernels.NUMBA:
        print("compiled kernels disabled; set SURFCURVES_DISABLE_NUMBA=0 and install numba")
        return
    t0 = time.perf_counter()
    run(_kernels.compiled, jobs[:1])
    print(f"compile  {time.perf_counter() - t0:8.3f} s")
    t_nb, out = best_of(_kernels.compiled, jobs, args.repeat)
    assert out == ref, "compiled and python kernels disagree"
    print(f"numba    {t_nb:8.3f} s  ({t_py / t_nb:.1f}x)")


if __name__ == "__main__":
    main()
