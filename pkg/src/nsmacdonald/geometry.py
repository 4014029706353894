"""Discrete convex analysis and exact lattice-polytope geometry.

Everything is exact.  Convex hulls are computed by reducing to the affine
hull of the input, then running the double description method in integer
arithmetic on the homogenised dual cone.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from ._validation import ContractViolation, as_points, as_weight, check_index
from .errors import HypothesisViolation
from .lattice import swap_entries
from .lp import in_convex_hull
from .polynomial import format_rational


# --- exact linear algebra helpers ------------------------------------------

def _primitive(v):
    g = 0
    for a in v:
        g = gcd(g, a)
    return tuple(a // g for a in v) if g > 1 else tuple(v)


def _integral(v):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    den = 1
    for a in v:
        den = den * Fraction(a).denominator // gcd(den, Fraction(a).denominator)
    return _primitive([int(Fraction(a) * den) for a in v])


def rref(rows):
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    M = [[Fraction(a) for a in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        k = next((k for k in range(r, len(M)) if M[k][col] != 0), None)
        if k is None:
            continue
        M[r], M[k] = M[k], M[r]
        piv = M[r][col]
        M[r] = [a / piv for a in M[r]]
        for k in range(len(M)):
            if k != r and M[k][col] != 0:
                f = M[k][col]
                M[k] = [a - f * b for a, b in zip(M[k], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(rows, ncols):
    """Integer basis of ``{y : row . y = 0 for every row}``."""
    R, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        y = [Fraction(0)] * ncols
        y[f] = Fraction(1)
        for r, p in enumerate(pivots):
            y[p] = -R[r][f]
        basis.append(_integral(y))
    return basis


# --- point sets ------------------------------------------------------------

def coordinate_sums(S):
    return {sum(p) for p in S}


def _constant_sum(S):
    return len(coordinate_sums(S)) == 1


def is_mconvex_exchange(S):
    """Exchange axiom: for x, y in S and x_i > y_i there is j with x_j < y_j and x - e_i + e_j in S."""
    pts = as_points(S)
    if not _constant_sum(pts):
        return False
    members = set(pts)
    n = len(pts[0])
    for x in pts:
        for y in pts:
            if x == y:
                continue
            lower = [j for j in range(n) if x[j] < y[j]]
            for i in range(n):
                if x[i] <= y[i]:
                    continue
                found = False
                for j in lower:
                    z = list(x)
                    z[i] -= 1
                    z[j] += 1
                    if tuple(z) in members:
                        found = True
                        break
                if not found:
                    return False
    return True


def exchange_witness(S):
    """First ``(x, y, i)`` violating the exchange axiom, or ``None``."""
    pts = as_points(S)
    members = set(pts)
    n = len(pts[0])
    for x in pts:
        for y in pts:
            for i in range(n):
                if x[i] <= y[i]:
                    continue
                if not any(tuple(x[k] - (k == i) + (k == j) for k in range(n)) in members
                           for j in range(n) if x[j] < y[j]):
                    return x, y, i + 1
    return None


def _root(n, i, j):
    return tuple((k == i - 1) - (k == j - 1) for k in range(n))


def minkowski_root_segment(S, i, j):
    """``S + {0, e_i - e_j}``."""
    pts = as_points(S)
    n = len(pts[0])
    check_index(i, n, "i")
    check_index(j, n, "j")
    if i == j:
        raise ContractViolation("root segment needs i != j")
    r = _root(n, i, j)
    return as_points(pts + tuple(tuple(a + b for a, b in zip(p, r)) for p in pts))


def reflect(S, i, j):
    return as_points(swap_entries(p, i, j) for p in S)


def union_reflection(S, i, j):
    """``S u sigma_{i,j} S`` for an M-convex ``S`` with ``sigma_{i,j} S <= S u (S + e_i - e_j)``."""
    pts = as_points(S)
    n = len(pts[0])
    check_index(i, n, "i")
    check_index(j, n, "j")
    if i == j:
        raise ContractViolation("union_reflection needs i != j")
    if not is_mconvex_exchange(pts):
        raise HypothesisViolation("input set is not M-convex", witness=exchange_witness(pts))
    members = set(pts)
    r = _root(n, i, j)
    for p in pts:
        s = swap_entries(p, i, j)
        if s in members:
            continue
        if tuple(a - b for a, b in zip(s, r)) not in members:
            raise HypothesisViolation(
                f"sigma_{{{i},{j}}}{p} = {s} lies outside S u (S + e_{i} - e_{j})",
                witness={"point": list(p), "image": list(s)})
    return as_points(pts + reflect(pts, i, j))


# --- polytopes -------------------------------------------------------------

@dataclass(frozen=True)
class LatticePolytope:
    """Exact polytope ``conv(S)`` of an integer point set.

    ``facets`` are pairs ``(normal, offset)`` meaning ``normal . x <= offset``;
    they describe the polytope inside its affine hull, which is
    ``{x : eq . x == rhs for (eq, rhs) in equations}``.
    """

    ambient_dim: int
    dimension: int
    vertices: tuple
    edges: tuple
    facets: tuple
    equations: tuple = field(repr=False)
    points: tuple = field(repr=False, compare=False, default=())

    def contains(self, x):
        for eq, rhs in self.equations:
            if sum(a * b for a, b in zip(eq, x)) != rhs:
                return False
        return all(sum(a * b for a, b in zip(nrm, x)) <= off for nrm, off in self.facets)


def _double_description(rows):
    """Extreme rays of ``{y : r . y >= 0 for r in rows}`` (rows span the space)."""
    D = len(rows[0])
    chosen = []
    for k, r in enumerate(rows):
        trial = [rows[c] for c in chosen] + [r]
        if len(rref(trial)[1]) == len(trial):
            chosen.append(k)
            if len(chosen) == D:
                break
    if len(chosen) < D:
        raise ContractViolation("constraint rows do not span the space")
    A0 = [rows[k] for k in chosen]
    # columns of A0^{-1}
    aug = [list(map(Fraction, A0[r])) + [Fraction(int(r == c)) for c in range(D)] for r in range(D)]
    R, _ = rref(aug)
    inv_cols = [[R[r][D + c] for r in range(D)] for c in range(D)]
    rays = []
    for c in range(D):
        ray = _integral(inv_cols[c])
        zero = 0
        for k in chosen:
            if sum(a * b for a, b in zip(rows[k], ray)) == 0:
                zero |= 1 << k
        rays.append((ray, zero))
    done = set(chosen)
    for k, r in enumerate(rows):
        if k in done:
            continue
        bit = 1 << k
        vals = [sum(a * b for a, b in zip(r, ray)) for ray, _ in rays]
        pos = [m for m, v in enumerate(vals) if v > 0]
        neg = [m for m, v in enumerate(vals) if v < 0]
        new = []
        for m, v in enumerate(vals):
            if v > 0:
                new.append(rays[m])
            elif v == 0:
                new.append((rays[m][0], rays[m][1] | bit))
        for p in pos:
            zp = rays[p][1]
            for q in neg:
                common = zp & rays[q][1]
                if bin(common).count("1") < D - 2:
                    continue
                if any(o != p and o != q and rays[o][1] & common == common
                       for o in range(len(rays))):
                    continue
                vp, vq = vals[p], vals[q]
                ray = _primitive([vp * a - vq * b for a, b in zip(rays[q][0], rays[p][0])])
                new.append((ray, common | bit))
        rays = new
        done.add(k)
    return [ray for ray, _ in rays]


def convex_hull(S):
    pts = as_points(S)
    n = len(pts[0])
    p0 = pts[0]
    dirs = [tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]
    dirs = [d for d in dirs if any(d)]
    R, pivots = rref(dirs) if dirs else ([], [])
    d = len(pivots)
    equations = tuple((eq, sum(a * b for a, b in zip(eq, p0)))
                      for eq in nullspace(dirs, n)) if dirs else tuple(
        (tuple(int(k == c) for k in range(n)), p0[c]) for c in range(n))
    if d == 0:
        return LatticePolytope(n, 0, (p0,), (), (), equations, pts)
    proj = [tuple(p[c] for c in pivots) for p in pts]
    raw = sorted(set(_double_description([(1,) + y for y in proj])))
    facets = []
    for ray in raw:
        b, a = ray[0], ray[1:]
        normal = [0] * n
        for c, coef in zip(pivots, a):
            normal[c] = -coef
        facets.append((tuple(normal), b))
    tight = []
    for y in proj:
        mask = 0
        for f, ray in enumerate(raw):
            if ray[0] + sum(a * b for a, b in zip(ray[1:], y)) == 0:
                mask |= 1 << f
        tight.append(mask)
    vertex_idx = [k for k, tk in enumerate(tight)
                  if not any(o != k and tight[o] & tk == tk for o in range(len(pts)))]
    edges = []
    for u, v in combinations(vertex_idx, 2):
        common = tight[u] & tight[v]
        if not any(w != u and w != v and tight[w] & common == common for w in vertex_idx):
            edges.append((pts[u], pts[v]))
    vertices = tuple(pts[k] for k in vertex_idx)
    facets = tuple((tuple(Fraction(a) for a in nrm), Fraction(off)) for nrm, off in facets)
    equations = tuple((tuple(Fraction(a) for a in eq), Fraction(rhs)) for eq, rhs in equations)
    return LatticePolytope(n, d, vertices, tuple(sorted(edges)), facets, equations, pts)


def contains_point(P, x):
    """Exact membership of ``x`` in a polytope or in the hull of a point set.

    For a raw point set this solves the exact feasibility LP; for a
    :class:`LatticePolytope` it evaluates the exact facet description.
    """
    x = tuple(Fraction(a) for a in x)
    if isinstance(P, LatticePolytope):
        if len(x) != P.ambient_dim:
            raise ContractViolation("dimension mismatch")
        return P.contains(x)
    pts = as_points(P)
    if len(x) != len(pts[0]):
        raise ContractViolation("dimension mismatch")
    return in_convex_hull(pts, x)


def lattice_points(S):
    """All integer points of ``conv(S)`` for a constant-sum set ``S``."""
    pts = as_points(S)
    if not _constant_sum(pts):
        raise ContractViolation("lattice_points needs a constant coordinate sum")
    hull = convex_hull(pts)
    n = len(pts[0])
    total = sum(pts[0])
    lo = [min(p[k] for p in pts) for k in range(n)]
    hi = [max(p[k] for p in pts) for k in range(n)]
    found = []
    for head in product(*(range(lo[k], hi[k] + 1) for k in range(n - 1))):
        last = total - sum(head)
        if lo[-1] <= last <= hi[-1]:
            x = head + (last,)
            if contains_point(hull, x):
                found.append(x)
    return tuple(found)


def is_saturated(S):
    pts = as_points(S)
    return lattice_points(pts) == pts


def is_root_direction(d):
    nz = [a for a in d if a != 0]
    return len(nz) == 2 and nz[0] == -nz[1]


def is_generalized_permutahedron(P):
    return all(is_root_direction(tuple(a - b for a, b in zip(u, v))) for u, v in P.edges)


def is_mconvex_geometric(S):
    """Saturated and the hull's edges all point along some ``e_i - e_j``."""
    pts = as_points(S)
    if not _constant_sum(pts):
        return False
    return is_saturated(pts) and is_generalized_permutahedron(convex_hull(pts))


# --- support functions -----------------------------------------------------

def support_function(S):
    """``{A: max_{x in S} sum_{i in A} x_i}`` over non-empty ``A``, subsets as frozensets of 1-based indices."""
    pts = as_points(S)
    n = len(pts[0])
    if n > 20:
        raise ContractViolation(f"support_function enumerates 2^n subsets; n={n} is too large")
    profile = {}
    for mask in range(1, 1 << n):
        A = frozenset(k + 1 for k in range(n) if mask >> k & 1)
        profile[A] = max(sum(p[k - 1] for k in A) for p in pts)
    return profile


def is_submodular(profile):
    """Checks ``f(A+i) + f(A+j) >= f(A+i+j) + f(A)`` for all ``A`` and ``i, j`` outside it.

    This local condition is equivalent to ``f(A) + f(B) >= f(A|B) + f(A&B)``
    for all pairs.  The empty set takes value 0.
    """
    if not profile:
        return True
    ground = frozenset().union(*profile)

    def f(A):
        return profile[A] if A else 0

    elements = sorted(ground)
    for mask in range(1 << len(elements)):
        A = frozenset(e for k, e in enumerate(elements) if mask >> k & 1)
        rest = [e for e in elements if e not in A]
        for i, j in combinations(rest, 2):
            if f(A | {i}) + f(A | {j}) < f(A | {i, j}) + f(A):
                return False
    return True


# --- serialisation ---------------------------------------------------------

def polytope_to_json(P):
    return {
        "vertices": [list(v) for v in P.vertices],
        "edges": [[list(u), list(v)] for u, v in P.edges],
        "facets": [{"normal": [format_rational(a) for a in nrm], "offset": format_rational(off)}
                   for nrm, off in P.facets],
    }


def points_to_json(S):
    return [list(p) for p in as_points(S)]


def points_from_json(obj):
    return as_points(as_weight(p) for p in obj)
