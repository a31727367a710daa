"""Concrete H-polyhedra ``{x : A x >= b}`` and representation-level algorithms."""

import logging
from dataclasses import dataclass

from ._scalar import ONE, ZERO, fmt, parse_rational
from .exactlin import LinRel, dot, is_zero, vadd, vec, vscale
from .errors import ParseError, UsageError
from .lp import Infeasible, LinProgram, Optimal, minimize, solve

log = logging.getLogger(__name__)

#: Row count above which Fourier-Motzkin runs LP-based redundancy removal.
FM_THRESHOLD = 64


@dataclass(frozen=True)
class HPoly:
    dim: int
    rows: tuple = ()

    def __post_init__(self):
        rows = tuple(r if isinstance(r, LinRel) else LinRel.of(*r) for r in self.rows)
        for r in rows:
            if r.dim != self.dim:
                raise UsageError(f"row of dimension {r.dim} in an HPoly of dimension {self.dim}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def empty(cls, dim):
        """The canonical empty system ``0.x >= 1``."""
        return cls(dim, (LinRel((ZERO,) * dim, ONE),))

    def __len__(self):
        return len(self.rows)

    def with_rows(self, extra):
        return HPoly(self.dim, self.rows + tuple(extra))


def _check_dim(P, Q_):
    if P.dim != Q_.dim:
        raise UsageError(f"dimension mismatch: {P.dim} vs {Q_.dim}")


def member(P: HPoly, x) -> bool:
    x = vec(x)
    if len(x) != P.dim:
        raise UsageError(f"point of dimension {len(x)} tested against an HPoly of dimension {P.dim}")
    return all(dot(e.normal, x) >= e.offset for e in P.rows)


def is_empty(P: HPoly) -> bool:
    return isinstance(solve(LinProgram(P.rows, (ZERO,) * P.dim)), Infeasible)


def not_subset_witness(P: HPoly, Q_: HPoly):
    """A point of ``P`` outside ``Q_``, or ``None`` when ``P`` is included in ``Q_``."""
    _check_dim(P, Q_)
    for e in Q_.rows:
        out = minimize(P.rows, e.normal)
        if isinstance(out, Infeasible):
            return None
        if isinstance(out, Optimal):
            if out.value < e.offset:
                return out.point
            continue
        # unbounded below: walk along the ray until the row is violated
        f, r = out.feasible, out.ray
        t = max(ZERO, (dot(e.normal, f) - e.offset) / -dot(e.normal, r)) + ONE
        return vadd(f, vscale(t, r))
    return None


def subset(P: HPoly, Q_: HPoly) -> bool:
    return not_subset_witness(P, Q_) is None


def equiv(P: HPoly, Q_: HPoly) -> bool:
    return subset(P, Q_) and subset(Q_, P)


def normalize_rows(rows):
    """Normalise rows and drop duplicates and trivially true ``0 >= b <= 0`` rows.

    Returns ``None`` when a row ``0 >= b > 0`` makes the system infeasible.
    Order of first occurrence is kept.
    """
    seen = set()
    out = []
    for e in rows:
        e = e.normalized()
        if is_zero(e.normal):
            if e.offset > 0:
                return None
            continue
        if e not in seen:
            seen.add(e)
            out.append(e)
    return out


def remove_redundancy(P: HPoly) -> HPoly:
    """An inclusionwise-minimal subsystem of ``P`` describing the same set.

    Infeasible input gives :meth:`HPoly.empty`.
    """
    if is_empty(P):
        return HPoly.empty(P.dim)
    rows = [e for e in P.rows if not (is_zero(e.normal) and e.offset <= 0)]
    # exact duplicates go first, cheaply
    seen = set()
    uniq = []
    for e in rows:
        key = e.normalized()
        if key not in seen:
            seen.add(key)
            uniq.append(e)
    rows = uniq
    i = len(rows) - 1
    while i >= 0:
        rest = rows[:i] + rows[i + 1:]
        e = rows[i]
        out = minimize(rest, e.normal)
        if isinstance(out, Optimal) and out.value >= e.offset:
            rows = rest
        i -= 1
    return HPoly(P.dim, tuple(rows))


def _eliminate(rows, k, dim, threshold):
    """One Fourier-Motzkin step removing coordinate ``k`` from normalised rows."""
    pos, neg, zero = [], [], []
    for e in rows:
        a = e.normal[k]
        (pos if a > 0 else neg if a < 0 else zero).append(e)

    def drop(e):
        return LinRel(e.normal[:k] + e.normal[k + 1:], e.offset)

    def combine(p, q):
        # positive combination cancelling coordinate k
        return p.scale(-q.normal[k]).plus(q.scale(p.normal[k]))

    # An equality pair (e, -e) lets us substitute instead of pairing every row.
    posset = set(pos)
    eq = next((q for q in neg if -q in posset), None)
    new = [drop(e) for e in zero]
    if eq is not None:
        peq = -eq
        for e in pos:
            if e != peq:
                new.append(drop(combine(e, eq)))
        for e in neg:
            if e != eq:
                new.append(drop(combine(peq, e)))
    else:
        for p in pos:
            for q in neg:
                new.append(drop(combine(p, q)))
    new = normalize_rows(new)
    if new is None:
        return None
    if len(new) > threshold:
        reduced = remove_redundancy(HPoly(dim - 1, tuple(new)))
        log.debug("FM: %d rows reduced to %d", len(new), len(reduced.rows))
        new = list(reduced.rows)
    return new


def project_out(P: HPoly, coords, threshold=None) -> HPoly:
    """Project ``P`` by forgetting the (0-based) coordinates in ``coords``.

    Coordinates are eliminated in decreasing index order.
    """
    coords = sorted(set(coords), reverse=True)
    for k in coords:
        if not 0 <= k < P.dim:
            raise UsageError(f"coordinate index {k} out of range for dimension {P.dim}")
    threshold = FM_THRESHOLD if threshold is None else threshold
    rows = normalize_rows(P.rows)
    dim = P.dim
    for k in coords:
        if rows is not None:
            rows = _eliminate(rows, k, dim, threshold)
        dim -= 1
    if rows is None:
        return HPoly.empty(dim)
    return HPoly(dim, tuple(rows))


def proj0(P: HPoly, threshold=None) -> HPoly:
    """Projection onto the last ``dim - 1`` coordinates."""
    if P.dim < 1:
        raise UsageError("proj0 needs dimension >= 1")
    return project_out(P, [0], threshold)


# -- H-format text ----------------------------------------------------------

def _tokens(line):
    """Yield ``(token, column)`` pairs, 1-based columns, stopping at '#'."""
    i = 0
    n = len(line)
    while i < n:
        if line[i] == "#":
            return
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not line[j].isspace() and line[j] != "#":
            j += 1
        yield line[i:j], i + 1
        i = j


def _rational(tok, lineno, col):
    try:
        return parse_rational(tok)
    except ValueError as exc:
        raise ParseError(str(exc), lineno, col) from None


def parse_hformat(text) -> HPoly:
    """Parse the H-format (``dim``, ``ineq ... >= b``, ``eq ... = b``)."""
    dim = None
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = list(_tokens(line))
        if not toks:
            continue
        head, col = toks[0]
        if head == "dim":
            if dim is not None:
                raise ParseError("duplicate 'dim' line", lineno, col)
            if len(toks) != 2 or not toks[1][0].isdigit():
                raise ParseError("expected 'dim <n>'", lineno, col)
            dim = int(toks[1][0])
            continue
        if head not in ("ineq", "eq"):
            raise ParseError(f"unknown keyword {head!r}", lineno, col)
        if dim is None:
            raise ParseError("'dim' must come before any row", lineno, col)
        op = ">=" if head == "ineq" else "="
        if len(toks) != dim + 3:
            raise ParseError(f"expected {dim} coefficients, '{op}' and a right-hand side", lineno, col)
        if toks[dim + 1][0] != op:
            raise ParseError(f"expected {op!r}", lineno, toks[dim + 1][1])
        normal = tuple(_rational(t, lineno, c) for t, c in toks[1:dim + 1])
        offset = _rational(toks[dim + 2][0], lineno, toks[dim + 2][1])
        e = LinRel(normal, offset)
        rows.append(e)
        if head == "eq":
            rows.append(-e)
    if dim is None:
        raise ParseError("missing 'dim' line")
    return HPoly(dim, tuple(rows))


def format_hformat(P: HPoly) -> str:
    lines = [f"dim {P.dim}"]
    for e in P.rows:
        lines.append("ineq " + " ".join(fmt(a) for a in e.normal) + (" " if P.dim else "") + ">= " + fmt(e.offset))
    return "\n".join(lines) + "\n"
