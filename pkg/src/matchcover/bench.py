"""Benchmark the compiled kernels against the pure-Python fallback.

Run with `python -m matchcover.bench`.  Both code paths are timed on the
same workloads inside one process; the pure path is forced through the
same dispatch flag the kernels honor at import time.
"""

from __future__ import annotations

import argparse
import time

from . import kernels
from .constructions import CyclePart, build_cycle_cl, build_qr, petersen
from .graph import Graph


def _workloads() -> list[tuple[str, str, tuple]]:
    q4 = build_qr(4)
    cyc = build_cycle_cl([CyclePart(q4.graph, q4.labels["a1a2"],
                                    q4.labels["b1b2"], q4.coloring)
                          for _ in range(3)])
    pet = petersen()
    return [
        ("pm-enumeration[cycle-family-3xq4]", "pm", (cyc.graph,)),
        ("pm-enumeration[q4]", "pm", (q4.graph,)),
        ("edge-coloring[petersen,4]", "ec", (pet, 4)),
        ("edge-coloring[petersen,3-unsat]", "ec", (pet, 3)),
    ]


def _run(kind: str, args: tuple, force_pure: bool):
    if kind == "pm":
        g, = args
        fn = (kernels._pure.enumerate_perfect_matchings if force_pure
              else kernels.enumerate_perfect_matchings)
        return fn(g.n, g.edges, 10_000_000)
    g, colors = args
    fn = (kernels._pure.edge_coloring if force_pure
          else kernels.edge_coloring)
    return fn(g.n, g.edges, colors, 50_000_000)


def _time(kind: str, args: tuple, force_pure: bool,
          repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = _run(kind, args, force_pure)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()

    if not kernels.HAVE_FAST:
        print("compiled kernel unavailable; timing the pure path only")
    print(f"{'workload':40s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, kind, args in _workloads():
        t_pure, r_pure = _time(kind, args, True, opts.repeat)
        if kernels.HAVE_FAST:
            t_fast, r_fast = _time(kind, args, False, opts.repeat)
            assert r_fast == r_pure, f"kernel disagreement on {name}"
            print(f"{name:40s} {t_pure * 1e3:9.2f}ms {t_fast * 1e3:9.2f}ms "
                  f"{t_pure / t_fast:7.1f}x")
        else:
            print(f"{name:40s} {t_pure * 1e3:9.2f}ms {'-':>10s} {'-':>8s}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
