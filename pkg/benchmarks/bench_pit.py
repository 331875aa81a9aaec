"""Time the grid identity scan on both backends.

    python benchmarks/bench_pit.py [--n 200] [--seed 0]

Random constants are mostly non-binary-Lie and exit early, so canonical
binary-Lie algebras (full grid scans) are timed separately.
"""

import argparse
import random
import time

from bl4kit import kernels, sampling
from bl4kit.normal_form import CanonicalLabel, canonical_structure_constants


def _time(fn, reps: int) -> float:
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    random_cs = [sampling.constants(rng, 4, 5, 0.3).c for _ in range(args.n)]
    full_cs = [canonical_structure_constants(l).c for l in (CanonicalLabel.A0(), CanonicalLabel.A1(), CanonicalLabel.C(-1), CanonicalLabel.D(4, 3))]
    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    if kernels.HAVE_NUMBA:
        for kind in ("binary_lie", "malcev"):
            kernels.scan(kind, full_cs[0], "numba")  # JIT warm-up

    print(f"{'workload':<24}{'kind':<12}" + "".join(f"{b:>14}" for b in backends))
    for name, cs in (("random constants", random_cs), ("full-grid algebras", full_cs)):
        for kind in ("binary_lie", "malcev"):
            row = []
            for b in backends:
                per = _time(lambda: [kernels.scan(kind, c, b) for c in cs], 3) / len(cs)
                row.append(f"{per * 1e3:>11.3f} ms")
            agree = all(len({kernels.scan(kind, c, b) for b in backends}) == 1 for c in cs)
            print(f"{name:<24}{kind:<12}" + "".join(f"{r:>14}" for r in row) + ("" if agree else "  MISMATCH"))


if __name__ == "__main__":
    main()
