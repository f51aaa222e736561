"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the geometric enumeration and the pair census on both backends and
prints wall times plus speedup.  The numba columns include a separate warmup
pass so JIT compilation never lands in the timed region.

    python -m rotword.bench [--geom-n N] [--pairs-n N] [--repeat R]
"""

from __future__ import annotations

import argparse
import time
from typing import Callable

from .kernels import use_backend
from .rotation import enumerate_rotation_words, enumerate_via_pairs
from .sturmian import _language_keys


def _time(fn: Callable[[], object], repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        _language_keys.cache_clear()  # language cache would hide backend cost
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--geom-n", type=int, default=18,
                        help="word length for the geometric oracle (default 18)")
    parser.add_argument("--pairs-n", type=int, default=26,
                        help="pair length for the census oracle (default 26)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of this many runs (default 3)")
    args = parser.parse_args(argv)

    tasks = [
        (f"geometric n={args.geom_n}", lambda: enumerate_rotation_words(args.geom_n)),
        (
            f"pairs census n={args.pairs_n}",
            lambda: enumerate_via_pairs(args.pairs_n, with_pairs=False),
        ),
    ]

    backends = ["numpy"]
    try:
        import numba  # noqa: F401

        backends.append("numba")
    except ImportError:
        print("numba not importable; benchmarking the numpy fallback only")

    timings: dict[tuple[str, str], float] = {}
    for backend in backends:
        with use_backend(backend):
            for label, fn in tasks:
                fn()  # warmup: JIT compile + caches
                timings[(label, backend)] = _time(fn, args.repeat)

    width = max(len(label) for label, _ in tasks)
    header = f"{'task':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, _ in tasks:
        row = f"{label:<{width}}  "
        for backend in backends:
            row += f"{timings[(label, backend)]:>11.4f}s"
        if len(backends) == 2:
            ratio = timings[(label, "numpy")] / timings[(label, "numba")]
            row += f"{ratio:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
