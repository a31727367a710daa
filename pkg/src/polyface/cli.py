"""Batch command line front end.

Exit status: 0 success, 2 unreadable or malformed input, 3 violated
precondition, 4 failed check or internal invariant.  Machine output goes to
stdout, diagnostics to stderr.
"""

import argparse
import json
import random
import sys

from . import hrep as H
from ._scalar import Q, fmt, parse_rational
from .affine import affine_json
from .errors import InvariantError, ParseError, UsageError
from .faces import face_json, face_set, facets, hull, minkowski_check, pdim, vertex_set
from .graph import adjacency_graph, balinski_path, graph_json, is_path, n_connectivity_check
from .lattice import (build_lattice, check_atomistic, check_coatomistic, check_diamond,
                      check_euler, check_graded, f_vector, lattice_dot, lattice_json,
                      vertex_figure)
from .lp import LinProgram, outcome_json, solve, verify_outcome
from .poly import Poly, compact, conv, map_poly, parse_matrix, parse_vformat

SCHEMA = 1
CHECKS = ("graded", "atomistic", "coatomistic", "diamond", "euler", "minkowski")


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_poly(path) -> Poly:
    """Read an H-format file, or a V-format file (converted by ``conv``)."""
    text = _read(path)
    if any(line.split()[:1] == ["point"] for line in text.splitlines()):
        dim, points = parse_vformat(text)
        return conv(points, dim=dim)
    return Poly(H.parse_hformat(text))


def _point(text, dim, what):
    try:
        p = tuple(parse_rational(t) for t in text.split(","))
    except ValueError as exc:
        raise ParseError(f"{what}: {exc}") from None
    if len(p) != dim:
        raise UsageError(f"{what} has {len(p)} coordinates, expected {dim}")
    return p


def _emit(obj):
    obj = {"schema": SCHEMA, **obj}
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _vec_json(v):
    return [fmt(a) for a in v]


def cmd_info(args):
    P = load_poly(args.input)
    d = pdim(P)
    _emit({
        "dim": P.dim,
        "empty": P.is_empty,
        "compact": compact(P),
        "pdim": d,
        "geometric_dim": "empty" if d == 0 else d - 1,
        "hull": affine_json(hull(P)),
    })


def cmd_lp(args):
    P = load_poly(args.input)
    c = _point(args.min, P.dim, "--min")
    lp = LinProgram(P.rows, c)
    out = solve(lp)
    if not verify_outcome(lp, out):
        raise InvariantError("LP certificate failed verification")
    _emit(outcome_json(out))


def cmd_project(args):
    P = load_poly(args.input)
    try:
        drop = [int(t) - 1 for t in args.drop.split(",") if t.strip()]
    except ValueError:
        raise ParseError("--drop expects comma separated 1-based indices") from None
    for k in drop:
        if not 0 <= k < P.dim:
            raise UsageError(f"--drop index {k + 1} out of range 1..{P.dim}")
    sys.stdout.write(H.format_hformat(H.project_out(P.hrep, drop)))


def cmd_image(args):
    P = load_poly(args.input)
    A, cols = parse_matrix(_read(args.matrix))
    if cols != P.dim:
        raise UsageError(f"matrix has {cols} columns but the polyhedron has dimension {P.dim}")
    if not A:
        raise UsageError("matrix has no rows")
    sys.stdout.write(H.format_hformat(map_poly(A, P).hrep))


def cmd_conv(args):
    dim, points = parse_vformat(_read(args.input))
    P = conv(points, dim=dim)
    sys.stdout.write(H.format_hformat(H.remove_redundancy(P.hrep)))


def cmd_faces(args):
    P = load_poly(args.input)
    L = build_lattice(P)
    _emit(lattice_json(L))


def cmd_hasse(args):
    P = load_poly(args.input)
    L = build_lattice(P)
    if args.json:
        _emit(lattice_json(L))
    else:
        sys.stdout.write(lattice_dot(L))


def cmd_vertices(args):
    P = load_poly(args.input)
    _emit({"vertices": [_vec_json(v) for v in vertex_set(P)]})


def cmd_facets(args):
    P = load_poly(args.input)
    if P.is_empty:
        raise UsageError("facets of an empty polyhedron")
    _emit({"facets": [face_json(F) for F in facets(P)]})


def run_checks(P, wanted, explicit=()):
    """Run the requested checks; inapplicable ones are reported as skipped.

    Grading by dimension (and with it the diamond property) fails above the
    empty face of a polyhedron without vertices, so ``graded`` and
    ``diamond`` are skipped there unless asked for explicitly.
    """
    results = {}
    L = build_lattice(P)
    is_compact = compact(P)
    pointed = P.is_empty or 1 in L.ranks
    for name in wanted:
        if name == "graded":
            if pointed or name in explicit:
                results[name] = check_graded(L)
            else:
                results[name] = "skipped: no vertices"
        elif name == "coatomistic":
            results[name] = check_coatomistic(L)
        elif name == "diamond":
            if pointed or name in explicit:
                results[name] = check_diamond(L)
            else:
                results[name] = "skipped: no vertices"
        elif name == "atomistic":
            results[name] = check_atomistic(L) if is_compact else "skipped: not compact"
        elif name == "euler":
            ok = is_compact and not P.is_empty
            results[name] = check_euler(L) if ok else "skipped: not a nonempty polytope"
        elif name == "minkowski":
            results[name] = minkowski_check(P) if is_compact else "skipped: not compact"
    return results


def random_polytope(rng, k, d):
    points = [tuple(Q(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(d)) for _ in range(k)]
    return points, conv(points, dim=d)


def cmd_check(args):
    explicit = [c for c in CHECKS if getattr(args, c)]
    wanted = explicit or list(CHECKS)
    if args.random:
        try:
            k, d, count = (int(t) for t in args.random.split(","))
        except ValueError:
            raise ParseError("--random expects k,d,count") from None
        rng = random.Random(args.seed)
        failures = []
        for trial in range(count):
            points, P = random_polytope(rng, k, d)
            res = run_checks(P, wanted)
            bad = [n for n, v in res.items() if v is False]
            if bad:
                failures.append({"trial": trial, "points": [_vec_json(p) for p in points], "failed": bad})
        _emit({"random": {"k": k, "d": d, "count": count, "seed": args.seed}, "failures": failures,
               "ok": not failures})
        return 0 if not failures else 4
    if args.input is None:
        raise UsageError("check needs an input file or --random")
    P = load_poly(args.input)
    for name in explicit:
        if name in ("atomistic", "minkowski", "euler") and not compact(P):
            raise UsageError(f"--{name} requires a compact polyhedron")
    res = run_checks(P, wanted, explicit)
    ok = all(v is not False for v in res.values())
    _emit({"checks": res, "ok": ok})
    return 0 if ok else 4


def cmd_vertex_figure(args):
    P = load_poly(args.input)
    v = _point(args.vertex, P.dim, "--vertex")
    vf = vertex_figure(P, v)
    L2 = vf.sliced_lattice
    iso = vf.is_isomorphism()
    _emit({
        "vertex": _vec_json(v),
        "hyperplane": {"normal": _vec_json(vf.hyperplane.normal), "offset": fmt(vf.hyperplane.offset)},
        "sliced_f_vector": f_vector(L2),
        "sliced_vertices": [_vec_json(w) for w in vertex_set(vf.sliced)],
        "interval_size": len(vf.above),
        "isomorphic": iso,
    })
    if not iso:
        raise InvariantError("vertex figure correspondence is not an order isomorphism")


def cmd_balinski(args):
    P = load_poly(args.input)
    removed = [_point(t, P.dim, "--remove") for t in args.remove.split(";") if t.strip()]
    v = _point(args.source, P.dim, "--from")
    w = _point(args.target, P.dim, "--to")
    path = balinski_path(P, removed, v, w)
    G = adjacency_graph(P)
    if not (is_path(G, path, removed) and path.last == tuple(w)):
        raise InvariantError("Balinski path failed validation")
    _emit({
        "graph": graph_json(G),
        "removed": sorted(G.index(r) for r in removed),
        "path": [G.index(p) for p in path.points()],
        "points": [_vec_json(p) for p in path.points()],
        "n_connected": n_connectivity_check(P) if args.verify else None,
    })


def build_parser():
    parser = argparse.ArgumentParser(prog="polyface", description="Exact face lattices of convex polyhedra.")
    parser.add_argument("--fm-threshold", type=int, default=H.FM_THRESHOLD,
                        help="row count triggering redundancy removal during Fourier-Motzkin (default %(default)s)")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized self-tests")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_, input_required=True):
        p = sub.add_parser(name, help=help_)
        if input_required:
            p.add_argument("input", help="H-format or V-format file")
        p.set_defaults(func=func)
        return p

    verb("info", cmd_info, "dimension, emptiness, compactness and affine hull")
    p = verb("lp", cmd_lp, "minimise a linear function with certificates")
    p.add_argument("--min", required=True, metavar="C1,...,CN")
    p = verb("project", cmd_project, "eliminate coordinates (Fourier-Motzkin)")
    p.add_argument("--drop", required=True, metavar="I[,J...]", help="1-based coordinates to drop")
    p = verb("image", cmd_image, "image under a linear map")
    p.add_argument("--matrix", required=True, help="matrix file: 'rows cols' then row-major entries")
    verb("conv", cmd_conv, "convert a V-format file to a non-redundant H-format")
    p = verb("faces", cmd_faces, "face lattice as JSON")
    p.add_argument("--json", action="store_true", help="(default) JSON output")
    p = verb("hasse", cmd_hasse, "Hasse diagram as DOT")
    p.add_argument("--json", action="store_true", help="emit lattice JSON instead of DOT")
    verb("vertices", cmd_vertices, "list vertices")
    verb("facets", cmd_facets, "list facets")
    p = sub.add_parser("check", help="lattice property checks")
    p.add_argument("input", nargs="?")
    for c in CHECKS:
        p.add_argument(f"--{c}", action="store_true")
    p.add_argument("--random", metavar="K,D,COUNT", help="check COUNT random polytopes conv(K points in dim D)")
    p.set_defaults(func=cmd_check)
    p = verb("vertex-figure", cmd_vertex_figure, "slice at a vertex and verify the interval isomorphism")
    p.add_argument("--vertex", required=True, metavar="X1,...,XN")
    p = verb("balinski", cmd_balinski, "path avoiding n-1 removed vertices")
    p.add_argument("--remove", required=True, metavar="V1;V2;...")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--verify", action="store_true", help="also run the brute-force connectivity check")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    H.FM_THRESHOLD = args.fm_threshold
    try:
        status = args.func(args)
    except ParseError as exc:
        print(f"polyface: parse error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"polyface: precondition violated: {exc}", file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"polyface: invariant failure: {exc}", file=sys.stderr)
        return 4
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
