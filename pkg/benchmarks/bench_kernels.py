"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

from cylskew.cylindric import constraints, new_shape
from cylskew.kernels import backends


def cases():
    for lam, d, mu in [((3, 3), 1, (2, 1)), ((3, 3), 2, (2, 1)), ((4, 3, 1), 1, (1,))]:
        c = new_shape(3, 4, lam, d, mu)
        _, weak, strict = constraints(c)
        yield f"count_by_composition {c.size()} cells", "count_by_composition", \
            (c.size(), weak, strict)
    for outer, inner in [((6, 5, 4, 2), (3, 1)), ((7, 6, 5, 4, 3), (4, 2, 1)),
                         ((8, 7, 6, 5, 4, 3), (5, 3, 2))]:
        yield f"lr_expand {outer}/{inner}", "lr_expand", (outer, inner)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=1)
    args = ap.parse_args(argv)

    mods = backends()
    names = list(mods)
    print(f"{'case':48s}" + "".join(f"{n:>12s}" for n in names) +
          ("     speedup" if len(names) > 1 else ""))
    for label, fn, call in cases():
        results = {mod.__name__: getattr(mod, fn)(*call) for mod in mods.values()}
        assert len({repr(r) for r in results.values()}) == 1, label
        times = [min(timeit.repeat(lambda: getattr(mods[n], fn)(*call),
                                   repeat=args.repeat, number=args.number)) / args.number
                 for n in names]
        row = f"{label:48s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)
    if len(names) == 1:
        print("compiled extension not built; only the python backend was timed")


if __name__ == "__main__":
    main()
