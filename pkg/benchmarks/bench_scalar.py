"""Compare the gmpy2 and pure-Python Fraction scalar backends.

Each backend runs in a fresh interpreter (the backend is fixed at import
time by ``POLYFACE_SCALAR``).  Usage::

    python benchmarks/bench_scalar.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

WORKLOAD = """
import json, random, time
from polyface import BACKEND, Q
from polyface.exactlin import LinRel
from polyface.faces import face_set
from polyface.graph import adjacency_graph, balinski_path
from polyface.lattice import build_lattice
from polyface.lp import LinProgram, solve
from polyface.poly import conv, parse_vformat
from polyface import hrep as H

data = {data!r}

def fig2_lattice():
    dim, pts = parse_vformat(open(data + "/fig2.v").read())
    build_lattice(conv(pts, dim=dim))

def cube_balinski():
    from itertools import combinations
    P = H.parse_hformat(open(data + "/cube.h").read())
    from polyface.poly import Poly
    P = Poly(P)
    G = adjacency_graph(P)
    for rem in combinations(G.vertices, 2):
        rest = [v for v in G.vertices if v not in rem]
        for v in rest:
            for w in rest:
                balinski_path(P, rem, v, w)

def random_lps():
    rng = random.Random(0)
    for _ in range(100):
        d, m = rng.randint(2, 5), rng.randint(4, 12)
        rows = tuple(LinRel(tuple(Q(rng.randint(-5, 5)) for _ in range(d)), Q(rng.randint(-5, 5)))
                     for _ in range(m))
        solve(LinProgram(rows, tuple(Q(rng.randint(-3, 3)) for _ in range(d))))

def random_hulls():
    rng = random.Random(1)
    for _ in range(10):
        pts = [tuple(Q(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3)) for _ in range(7)]
        face_set(conv(pts))

out = {{"backend": BACKEND}}
for name, fn in [("fig2_lattice", fig2_lattice), ("cube_balinski", cube_balinski),
                 ("random_lps", random_lps), ("random_hulls", random_hulls)]:
    best = None
    for _ in range({repeat}):
        t = time.perf_counter()
        fn()
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    out[name] = best
print(json.dumps(out))
"""


def run(backend, repeat):
    env = dict(os.environ, POLYFACE_SCALAR=backend)
    code = WORKLOAD.format(data=str(ROOT / "data"), repeat=repeat)
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    if res.returncode != 0:
        return None, res.stderr.strip().splitlines()[-1]
    return json.loads(res.stdout), None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="runs per workload; the best is reported")
    args = ap.parse_args(argv)
    results = {}
    for backend in ("gmpy2", "fraction"):
        res, err = run(backend, args.repeat)
        if res is None:
            print(f"{backend}: unavailable ({err})")
            continue
        results[backend] = res
    names = ["fig2_lattice", "cube_balinski", "random_lps", "random_hulls"]
    print(f"{'workload':<16}" + "".join(f"{b:>12}" for b in results) + ("    speedup" if len(results) == 2 else ""))
    for n in names:
        row = f"{n:<16}" + "".join(f"{results[b][n]:>11.3f}s" for b in results)
        if len(results) == 2:
            row += f"{results['fraction'][n] / results['gmpy2'][n]:>10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
