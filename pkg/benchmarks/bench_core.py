"""Benchmark the pure and compiled kernel lanes against each other.

Two levels:

* microbenchmarks call both implementations side by side in one process
  (the compiled lane is timed including its array conversions, which is
  what real callers pay);
* an end-to-end scenario runs a twist-and-intersect workload in two
  subprocesses, one with HBCOMPLEX_PURE=1 and one without, so each lane
  is exercised exactly as an installed package would use it.

Usage: python3 benchmarks/bench_core.py [--skip-end2end]
"""

import argparse
import os
import random
import subprocess
import sys
import time
from array import array

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hbcomplex._kernel import pure  # noqa: E402

try:
    from hbcomplex._kernel import _core
except ImportError:
    _core = None


def time_call(fn, reps):
    best = None
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(reps):
            fn()
        dt = (time.perf_counter() - t0) / reps
        best = dt if best is None else min(best, dt)
    return best


def fmt(seconds):
    if seconds >= 1e-3:
        return "%8.3f ms" % (seconds * 1e3)
    return "%8.3f us" % (seconds * 1e6)


def row(name, t_pure, t_comp):
    if t_comp is None:
        print("%-34s %s      (compiled lane unavailable)" % (name, fmt(t_pure)))
    else:
        print("%-34s %s %s   x%.1f" % (name, fmt(t_pure), fmt(t_comp),
                                       t_pure / t_comp))


def bench_validate(rng):
    from hbcomplex.surface import build_surface
    tris = build_surface(3).tri_edge_flat
    vecs = [tuple(rng.randrange(0, 400) for _ in range(15)) for _ in range(500)]

    def run_pure():
        for v in vecs:
            pure.validate_weights(v, tris)

    t_p = time_call(run_pure, 3)
    t_c = None
    if _core is not None:
        tri_arr = array("q", tris)

        def run_comp():
            for v in vecs:
                _core.validate_weights(array("q", v), tri_arr)

        t_c = time_call(run_comp, 3)
    row("validate_weights x500 (genus 3)", t_p, t_c)


def bench_crossings(rng, m):
    n = 2 * m
    posn = list(range(n))
    rng.shuffle(posn)
    starts = posn[:m]
    ends = posn[m:]
    curves = list(range(m))  # all distinct: every interleaving is legal

    t_p = time_call(lambda: pure.tri_crossings(starts, ends, curves, n), 3)
    t_c = None
    if _core is not None:
        def run_comp():
            ids = {}
            dense = array("q", [ids.setdefault(c, len(ids)) for c in curves])
            _core.tri_crossings(array("q", starts), array("q", ends), dense, n)

        t_c = time_call(run_comp, 3)
    row("tri_crossings, %4d chords" % m, t_p, t_c)


_END2END = r"""
import time
from hbcomplex._kernel import backend_name
from hbcomplex.refcurves import chain
from hbcomplex.twists import dehn_twist
from hbcomplex.intersect import intersection_number
t0 = time.perf_counter()
ch = chain(2)
a = dehn_twist(ch[1], ch[0], 3)
a = dehn_twist(a, ch[2], 2)
total = sum(intersection_number(a, c) for c in ch)
print(backend_name(), total, "%.3f" % (time.perf_counter() - t0))
"""


def bench_end2end():
    print("\nend-to-end: chain twists + intersections (one process per lane)")
    env = dict(os.environ)
    env["PYTHONPATH"] = os.pathsep.join(
        [os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"),
         env.get("PYTHONPATH", "")])
    for name, extra in (("pure", {"HBCOMPLEX_PURE": "1"}), ("auto", {})):
        e = dict(env)
        e.update(extra)
        out = subprocess.run([sys.executable, "-c", _END2END], env=e,
                             capture_output=True, text=True)
        print("  %-5s %s" % (name, out.stdout.strip() or out.stderr.strip()))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-end2end", action="store_true")
    args = ap.parse_args()
    rng = random.Random(20240901)
    print("kernel lanes:   pure         compiled")
    bench_validate(rng)
    for m in (50, 200, 800):
        bench_crossings(rng, m)
    if not args.skip_end2end:
        bench_end2end()


if __name__ == "__main__":
    main()
