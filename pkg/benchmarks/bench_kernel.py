"""Compare the compiled term kernel against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernel.py

The script times each workload twice, in a subprocess with the default
backend and in one with CLUSTERKIT_PURE=1, so both interpreters select
their kernel at import time the same way users do.
"""

import json
import os
import subprocess
import sys

WORKLOADS = ["poly_mul", "walk_b2", "enumerate_hexagon", "groebner"]


def _run_workload(name, repeat):
    import time

    from clusterkit.arith import BACKEND, VariableTable, parse_poly
    from clusterkit.ideals import IdealBasis, saturated_exchange_ideal
    from clusterkit.presets import resolve_preset
    from clusterkit.seeds import enumerate_pattern

    def poly_mul():
        table = VariableTable(["x", "y", "z", "w"])
        f = parse_poly("x + y + z + w + 1", table)
        g = f
        for _ in range(6):
            g = g * f
        return len(g.terms)

    def walk_b2():
        seed = resolve_preset("b2").seed
        for _ in range(200):
            for k in (0, 1):
                seed = seed.mutate(k)
        return str(seed.entries[0])

    def enumerate_hexagon():
        seed = resolve_preset("rectangles:3,6").seed
        return enumerate_pattern(seed, max_seeds=200).seed_count

    def groebner():
        seed = resolve_preset("b2").seed
        _, _, saturated = saturated_exchange_ideal(seed, [0, 1, 0])
        return len(saturated.groebner())

    fn = {"poly_mul": poly_mul, "walk_b2": walk_b2,
          "enumerate_hexagon": enumerate_hexagon, "groebner": groebner}[name]
    fn()  # warm caches so both backends time steady-state work
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return {"workload": name, "backend": BACKEND, "seconds": best}


def main():
    if len(sys.argv) >= 3 and sys.argv[1] == "--workload":
        print(json.dumps(_run_workload(sys.argv[2], repeat=3)))
        return 0

    rows = []
    for name in WORKLOADS:
        per_backend = {}
        for pure in (False, True):
            env = dict(os.environ)
            env.pop("CLUSTERKIT_PURE", None)
            if pure:
                env["CLUSTERKIT_PURE"] = "1"
            out = subprocess.run(
                [sys.executable, __file__, "--workload", name],
                env=env, capture_output=True, text=True, check=True,
            )
            row = json.loads(out.stdout)
            per_backend[row["backend"]] = row["seconds"]
        rows.append((name, per_backend))

    print(f"{'workload':20} " + " ".join(f"{b:>12}" for b in rows[0][1]))
    for name, per_backend in rows:
        cells = " ".join(f"{t:12.4f}" for t in per_backend.values())
        backends = list(per_backend)
        print(f"{name:20} {cells}", end="")
        if len(backends) == 2:
            a, b = (per_backend[backends[0]], per_backend[backends[1]])
            if a > 0:
                print(f"   x{b / a:.2f}", end="")
        print()
    if len(rows[0][1]) < 2:
        print("note: only one backend importable on this interpreter")
    return 0


if __name__ == "__main__":
    sys.exit(main())
