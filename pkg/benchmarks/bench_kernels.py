"""Compare the compiled and pure-Python tally kernels.

Runs both backends over every shape of the requested sizes and reports
wall time per backend.  The compiled extension must be built for the
comparison to run; otherwise only the pure backend is timed.

Usage: python3 benchmarks/bench_kernels.py [--sizes 6,7,8]
"""

import argparse
import time

from skewsupport.shapes import enumerate_shapes

try:
    from skewsupport import _kernels as compiled
except ImportError:
    compiled = None
from skewsupport import _kernels_py as pure


def time_backend(mod, shapes) -> tuple[float, float]:
    args = [(s.inner_padded, s.outer) for s in shapes]
    t0 = time.perf_counter()
    for ip, o in args:
        mod.descent_tally(ip, o)
    t_desc = time.perf_counter() - t0
    t0 = time.perf_counter()
    for ip, o in args:
        mod.lr_tally(ip, o)
    t_lr = time.perf_counter() - t0
    return t_desc, t_lr


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="6,7,8")
    sizes = [int(p) for p in ap.parse_args().sizes.split(",")]
    print(f"{'n':>3} {'shapes':>7} {'kernel':>8} {'pure (s)':>10} "
          f"{'compiled (s)':>13} {'speedup':>8}")
    for n in sizes:
        shapes = enumerate_shapes(n)
        p_desc, p_lr = time_backend(pure, shapes)
        if compiled is None:
            print(f"{n:>3} {len(shapes):>7} {'descent':>8} {p_desc:>10.3f} "
                  f"{'(not built)':>13}")
            print(f"{n:>3} {len(shapes):>7} {'lr':>8} {p_lr:>10.3f} "
                  f"{'(not built)':>13}")
            continue
        c_desc, c_lr = time_backend(compiled, shapes)
        for name, tp, tc in (("descent", p_desc, c_desc), ("lr", p_lr, c_lr)):
            ratio = tp / tc if tc > 0 else float("inf")
            print(f"{n:>3} {len(shapes):>7} {name:>8} {tp:>10.3f} "
                  f"{tc:>13.3f} {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
