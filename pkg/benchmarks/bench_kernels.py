"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--n-max 10] [--repeat 3]

Each row runs the same inputs through both backends, checks that the
outputs agree, and reports the best-of-``repeat`` wall time.
"""

import argparse
import time

from regpoly import _purekernels
from regpoly.construction import build_generators
from regpoly.fpgroup import paper_presentation

try:
    from regpoly import _ckernels
except ImportError:
    _ckernels = None


def best_of(repeat, fn, *args):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def closure_args(n):
    gens = build_generators(n).as_list()
    return [g.points() for g in gens], gens[0].frame_base(), 1 << 22


def enum_args(n):
    rels = [list(w) for w in paper_presentation(n).relators]
    return 3, rels, [], 10 ** 6


CASES = [
    ("closure", "closure_frames", closure_args),
    ("hlt", "enumerate_hlt", enum_args),
    ("felsch", "enumerate_felsch", enum_args),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [_purekernels] + ([_ckernels] if _ckernels else [])
    if _ckernels is None:
        print("compiled extension not built; timing the pure backend only")
    print(f"{'kernel':<8} {'n':>3} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, fname, make in CASES:
        for n in range(args.n_min, args.n_max + 1):
            inputs = make(n)
            times, outs = [], []
            for mod in backends:
                t, out = best_of(args.repeat, getattr(mod, fname), *inputs)
                times.append(t)
                outs.append(out)
            if len(outs) == 2 and outs[0] != outs[1]:
                raise SystemExit(f"{label} n={n}: backends disagree")
            if len(times) == 2:
                print(f"{label:<8} {n:>3} {times[0]:>10.4f} {times[1]:>10.4f} "
                      f"{times[0] / times[1]:>7.1f}x")
            else:
                print(f"{label:<8} {n:>3} {times[0]:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
