"""Compare the compiled kernels with the pure-Python fallback.

Each backend runs in its own interpreter because the choice is made at import
time.  Usage::

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, timeit
from orecalc import kernels
from orecalc._rational import Rational
from orecalc.diffop import DiffOp, lclm
from orecalc.fraction import frac_make
from orecalc.field import Polynomial, RationalFunction

rng = random.Random(0)
def poly(n):
    return [Rational(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] + [Rational(1)]

a, b, g = poly(24), poly(24), poly(8)
fa, fb = kernels.mul(a, g), kernels.mul(b, g)
rows = [[Rational(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(14)] for _ in range(12)]
ops = [DiffOp([RationalFunction(Polynomial([rng.randint(-3, 3) for _ in range(3)])) for _ in range(4)])
       for _ in range(6)]

cases = {
    "mul deg 24": lambda: kernels.mul(a, b),
    "divmod deg 32 / 24": lambda: kernels.divmod_(fa, b),
    "gcd deg 32": lambda: kernels.gcd(fa, fb),
    "rref 12x14": lambda: kernels.rref(rows),
    "lclm of order-3 operators": lambda: lclm(ops[0], ops[1]),
    "frac_make order 3": lambda: frac_make(ops[2] * ops[3], ops[2] * ops[4]),
}
repeat = int(sys.argv[1])
out = {"backend": kernels.BACKEND, "times": {}}
for name, fn in cases.items():
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    out["times"][name] = min(timeit.repeat(fn, number=number, repeat=repeat)) / number
print(json.dumps(out))
"""


def run(pure, repeat):
    env = dict(os.environ)
    env.pop("ORECALC_PURE_PYTHON", None)
    if pure:
        env["ORECALC_PURE_PYTHON"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    if fast["backend"] != "cython":
        print("compiled kernels are not built; both runs use the Python fallback", file=sys.stderr)
    print(f"{'workload':30s} {fast['backend']:>12s} {slow['backend']:>12s} {'speedup':>8s}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:30s} {t_fast * 1e6:10.1f}us {t_slow * 1e6:10.1f}us {t_slow / t_fast:7.2f}x")


if __name__ == "__main__":
    main()
