"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from qtasm import _purekernels, ice, kernels

CASES = [
    ("asm_enumerate n=6", lambda k: k.asm_enumerate(6, kernels.SYM_NONE)),
    ("asm_enumerate n=7 (qt filter)", lambda k: k.asm_enumerate(7, kernels.SYM_QT)),
]


def _ice_case(pattern, n):
    g = ice.build_pattern(pattern, n)
    _, _, nvar, slot_var, slot_sign, fixed = g._compile()
    return (f"ice_solutions {pattern}({n})",
            lambda k: k.ice_solutions(nvar, slot_var, slot_sign, fixed, -1))


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), len(out)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    try:
        compiled = kernels.get_backend("compiled")
    except ImportError:
        raise SystemExit("compiled extension not built; run pip install -e . --no-build-isolation")
    cases = CASES + [_ice_case("dwbc", 6), _ice_case("qt-odd", 11), _ice_case("ht-odd", 7)]
    print(f"{'case':34s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>8s}  results")
    for name, fn in cases:
        tp, np_ = best_of(lambda: fn(_purekernels), args.repeat)
        tc, nc = best_of(lambda: fn(compiled), args.repeat)
        assert np_ == nc, name
        print(f"{name:34s} {tp:10.3f} {tc:13.4f} {tp / tc:7.1f}x  {nc}")


if __name__ == "__main__":
    main()
