"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Workloads: the coverage scan behind ``verify`` on Janet decompositions, and
the exact-cover search behind ``sdepth_exact`` on characteristic posets.
"""

import argparse
import statistics
import sys
import timeit

from stanleydepth import _purekernels
from stanleydepth.constructions import janet_quotient
from stanleydepth.decomposition import coverage_bounds
from stanleydepth.harness import draw_instance
from stanleydepth.oracles import _options, char_poset

try:
    from stanleydepth import _ckernels
except ImportError:
    _ckernels = None


def scan_workload(count=150):
    jobs = []
    for i in range(count):
        ideal = draw_instance("thm21", 100, i, {"n": (3, 4), "max_degree": 3, "g": (3, 5)})
        d = janet_quotient(ideal)
        n = d.n
        jobs.append((
            [list(s.origin) for s in d.slabs],
            [[j in s.free_vars for j in range(n)] for s in d.slabs],
            [list(g) for g in ideal.gens],
            True,
            list(coverage_bounds(d)),
            1,
        ))
    return jobs


def cover_workload(count=100):
    jobs = []
    for i in range(count):
        ideal = draw_instance("thm21", 200, i, {"n": (3, 3), "max_degree": 3, "g": (2, 4)})
        for target in ("ideal", "quotient"):
            poset = char_poset(target, ideal)
            opts = _options(poset)
            for t in range(ideal.n, -1, -1):
                chosen = [o for o in opts if o[0] >= t]
                ptr, flat = [0], []
                for o in chosen:
                    flat.extend(o[3])
                    ptr.append(len(flat))
                jobs.append((len(poset.points), ptr, flat))
    return jobs


def timed(fn, jobs, repeat):
    runs = timeit.repeat(lambda: [fn(*j) for j in jobs], number=1, repeat=repeat)
    return statistics.median(runs)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    rows = []
    for name, jobs, pure, fast in (
        ("coverage_scan", scan_workload(), _purekernels.coverage_scan, _ckernels.coverage_scan),
        ("exact_cover", cover_workload(), _purekernels.exact_cover, _ckernels.exact_cover),
    ):
        tp, tc = timed(pure, jobs, args.repeat), timed(fast, jobs, args.repeat)
        rows.append((name, len(jobs), tp, tc))
    print(f"{'kernel':<15}{'calls':>7}{'python ms':>12}{'cython ms':>12}{'speedup':>9}")
    for name, calls, tp, tc in rows:
        print(f"{name:<15}{calls:>7}{tp * 1e3:>12.1f}{tc * 1e3:>12.1f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
