"""Compare the compiled kernels against the pure-Python fallback on the
full reconstruction pipeline, and record solve time versus degree for
freedom 1 (informational; no thresholds).

Run:  python benchmarks/bench_backends.py
"""

import json
import os
import subprocess
import sys
import time

WORKER = """
import json, sys, time
from fractions import Fraction
from phaseless import Instance, solve
from phaseless.kernels import BACKEND

def instance_for(n):
    coeffs = [(-1) ** i * (i + 1) for i in range(n + 1)]
    from phaseless.upoly import UPoly
    q = UPoly(coeffs)
    nodes = [Fraction(x) for x in range(-n, n)]  # 2n nodes -> k = 1
    return Instance(n=n, points=tuple((x, abs(q(x))) for x in nodes))

results = []
for n in range(1, 9):
    inst = instance_for(n)
    t0 = time.perf_counter()
    sols = solve(inst)
    results.append({"n": n, "seconds": time.perf_counter() - t0,
                    "solutions": len(sols)})
print(json.dumps({"backend": BACKEND, "results": results}))
"""


def run(pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("PHASELESS_PURE_PYTHON", None)
    if pure:
        env["PHASELESS_PURE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, "-c", WORKER], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    fast = run(pure=False)
    pure = run(pure=True)
    print(f"backends: {fast['backend']} vs {pure['backend']}")
    print(f"{'n':>3} {'solutions':>9} {fast['backend']:>12} {pure['backend']:>12} {'speedup':>8}")
    for a, b in zip(fast["results"], pure["results"]):
        assert a["n"] == b["n"] and a["solutions"] == b["solutions"]
        ratio = b["seconds"] / a["seconds"] if a["seconds"] else float("inf")
        print(f"{a['n']:>3} {a['solutions']:>9} {a['seconds']:>11.4f}s "
              f"{b['seconds']:>11.4f}s {ratio:>7.2f}x")
    if fast["backend"] == pure["backend"]:
        print("note: compiled kernels unavailable; both runs used the fallback")


if __name__ == "__main__":
    main()
