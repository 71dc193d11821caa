#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the four backend kernels on representative lattices and prints a
timing table.  Usage:

    python benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from kappalat import _pure, bits_of, full_labeling, gen_boolean, gen_weak_sym
from kappalat.lattice import Lattice

try:
    from kappalat import _fast
except ImportError:
    _fast = None


def _interval_args(lattice: Lattice):
    lab = full_labeling(lattice)
    jirr_ids = list(bits_of(lab.jirr))
    pos = {j: p for p, j in enumerate(jirr_ids)}
    n = lattice.n
    belowj = [0] * n
    kge = [0] * n
    for j in jirr_ids:
        bit = 1 << pos[j]
        for b in bits_of(lattice.up[j]):
            belowj[b] |= bit
        for a in bits_of(lattice.down[lab.kappa[j]]):
            kge[a] |= bit
    return belowj, kge


def bench(label: str, fn_pure, fn_fast, repeat: int = 3) -> None:
    t_pure = min(_timed(fn_pure) for _ in range(repeat))
    if fn_fast is None:
        print(f"{label:<44} pure {t_pure * 1e3:9.2f} ms   fast      (unavailable)")
        return
    t_fast = min(_timed(fn_fast) for _ in range(repeat))
    speedup = t_pure / t_fast if t_fast > 0 else float("inf")
    print(
        f"{label:<44} pure {t_pure * 1e3:9.2f} ms   fast {t_fast * 1e3:9.2f} ms"
        f"   x{speedup:6.1f}"
    )


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="skip the 720-element cases")
    args = parser.parse_args()

    cases = [("weak_sym(5)", gen_weak_sym(5)), ("boolean(8)", gen_boolean(8))]
    if not args.quick:
        cases.append(("weak_sym(6)", gen_weak_sym(6)))
        cases.append(("boolean(10)", gen_boolean(10)))

    if _fast is None:
        print("compiled backend not built; pure timings only\n")

    for name, lat in cases:
        n, up, down = lat.n, list(lat.up), list(lat.down)
        cover_ups = list(lat._cover_ups)
        belowj, kge = _interval_args(lat)

        def mk(impl):
            if impl is None:
                return None, None, None, None
            return (
                lambda: impl.first_missing_meet(n, up, down),
                lambda: impl.sd_witness(n, up, down),
                lambda: impl.transitive_reduction(n, up, down),
                lambda: impl.interval_images(n, up, down, belowj, kge, cover_ups, "all"),
            )

        p_meet, p_sd, p_red, p_img = mk(_pure)
        f_meet, f_sd, f_red, f_img = mk(_fast)
        bench(f"{name}: pairwise meet check", p_meet, f_meet)
        bench(f"{name}: semidistributivity sweep", p_sd, f_sd)
        bench(f"{name}: transitive reduction", p_red, f_red)
        bench(f"{name}: interval label sweep (all)", p_img, f_img)
        print()


if __name__ == "__main__":
    main()
