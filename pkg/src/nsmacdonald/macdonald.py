"""Non-symmetric Macdonald polynomials: supports, polytopes, coefficients.

``q`` and ``t`` are always specialised to exact rationals in ``(0, 1)``;
every coefficient of the HHL formula is then strictly positive, so the
support does not depend on the particular choice.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ._validation import ContractViolation, as_composition, as_fraction, as_weight
from .errors import HypothesisViolation, ResultFailure
from .fillings import enumerate_nonattacking, multiplicity, support_by_enumeration
from .geometry import (convex_hull, is_mconvex_exchange, is_mconvex_geometric, is_submodular,
                       support_function, union_reflection)
from .bruhat import ideal, knop_sahi_image
from .lattice import normalize_weight, pi_op, unit
from .polynomial import SparsePolynomial, psi_op
from .statistics import HHL


@dataclass(frozen=True)
class QTParams:
    q: Fraction
    t: Fraction

    def __post_init__(self):
        q, t = as_fraction(self.q), as_fraction(self.t)
        if not (0 < q < 1 and 0 < t < 1):
            raise ContractViolation(f"need 0 < q, t < 1, got q={q}, t={t}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "t", t)


def _shifted(points, m):
    return tuple(sorted(tuple(a + m for a in p) for p in points))


@lru_cache(maxsize=None)
def _recursive_support(mu):
    n = len(mu)
    if not any(mu):
        return (mu,)
    if mu[0] > 0:
        return knop_sahi_image(_recursive_support(mu[1:] + (mu[0] - 1,)))
    ell = next(k for k in range(n) if mu[k] > 0) + 1
    prev = list(mu)
    prev[ell - 2], prev[ell - 1] = mu[ell - 1], 0
    S = _recursive_support(tuple(prev))
    swapped = []
    for v in S:
        w = list(v)
        w[ell - 2], w[ell - 1] = w[ell - 1], w[ell - 2]
        swapped.append(tuple(w))
    return tuple(sorted(set(S) | set(swapped)))


def support_by_recursion(mu):
    """Support of ``E_mu`` built from ``{0}`` by rotations and column shifts; no fillings."""
    m, base = normalize_weight(as_weight(mu))
    return _shifted(_recursive_support(base), m)


def support(mu):
    """Support of ``E_mu``, cross-checked by enumeration, recursion and the Bruhat ideal."""
    mu = as_weight(mu)
    m, base = normalize_weight(mu)
    by_recursion = _recursive_support(base)
    by_fillings = support_by_enumeration(base)
    by_bruhat = ideal(base).elements
    if not by_recursion == by_fillings == by_bruhat:
        raise ResultFailure("support routes disagree", witness={
            "mu": list(mu), "recursion": by_recursion, "fillings": by_fillings,
            "bruhat": by_bruhat})
    return _shifted(by_recursion, m)


# --- certificates ----------------------------------------------------------

@dataclass(frozen=True)
class Rotate:
    """``supp(E_target) = e_1 + rotate_right(supp(E_source))`` with ``target = pi(source)``."""

    source: tuple
    target: tuple

    def to_json(self):
        return {"op": "rotate", "source": list(self.source), "target": list(self.target)}


@dataclass(frozen=True)
class ShiftColumn:
    """``supp(E_target) = S u s_{ell-1} S`` with ``S = supp(E_source)``."""

    ell: int
    source: tuple
    target: tuple

    def to_json(self):
        return {"op": "shift_column", "ell": self.ell, "source": list(self.source),
                "target": list(self.target)}


@dataclass(frozen=True)
class MConvexCertificate:
    mu: tuple
    steps: tuple
    support: tuple = field(repr=False)

    @property
    def base(self):
        return (0,) * len(self.mu)

    def replay(self):
        """Re-run every step from ``{0}``, checking hypotheses and the final set."""
        S = (self.base,)
        for k, step in enumerate(self.steps):
            if isinstance(step, Rotate):
                S = knop_sahi_image(S)
            else:
                try:
                    S = union_reflection(S, step.ell, step.ell - 1)
                except HypothesisViolation as exc:
                    raise ResultFailure(f"step {k}: {exc}", witness={
                        "step": step.to_json(), "detail": exc.witness}) from None
            if not is_mconvex_exchange(S):
                raise ResultFailure(f"step {k}: set is not M-convex", witness=step.to_json())
        if S != self.support:
            raise ResultFailure("replay does not reach the claimed support",
                                witness={"mu": list(self.mu), "replayed": [list(p) for p in S]})
        return S

    def to_json(self):
        return {"mu": list(self.mu), "steps": [s.to_json() for s in self.steps],
                "support": [list(p) for p in self.support]}


def _unwind(mu):
    steps = []
    while any(mu):
        if mu[0] > 0:
            prev = mu[1:] + (mu[0] - 1,)
            steps.append(Rotate(prev, mu))
        else:
            ell = next(k for k, a in enumerate(mu) if a > 0) + 1
            prev = list(mu)
            prev[ell - 2], prev[ell - 1] = mu[ell - 1], 0
            prev = tuple(prev)
            steps.append(ShiftColumn(ell, prev, mu))
        mu = prev
    return tuple(reversed(steps))


def certify_mconvex(mu):
    """Certificate that ``supp(E_mu)`` is M-convex, checked step by step."""
    mu = as_composition(mu)
    cert = MConvexCertificate(mu, _unwind(mu), _recursive_support(mu))
    final = cert.replay()
    if not is_mconvex_geometric(final):
        raise ResultFailure("final support fails the geometric M-convexity check", witness=list(mu))
    if not is_submodular(support_function(final)):
        raise ResultFailure("support function of the final set is not submodular", witness=list(mu))
    return cert


# --- polytopes -------------------------------------------------------------

def newton_polytope(mu):
    m, base = normalize_weight(as_weight(mu))
    return convex_hull(_shifted(_recursive_support(base), m))


def moment_polytope(mu):
    """``conv(lambda <= mu)``."""
    return convex_hull(ideal(mu).elements)


# --- coefficients ----------------------------------------------------------

def coefficients(mu, params, stats=HHL):
    """``E_mu`` at the specialised ``(q, t)`` from the HHL sum over non-attacking fillings."""
    mu = as_composition(mu)
    if not isinstance(params, QTParams):
        params = QTParams(*params)
    q, t = params.q, params.t
    terms = {}
    for f in enumerate_nonattacking(mu):
        coef = q ** stats.maj(f) * t ** stats.coinv(f)
        for box, label in f.items():
            if label != f.label(box.below()):
                denom = 1 - q ** (stats.leg(mu, box) + 1) * t ** (stats.arm(mu, box) + 1)
                if denom == 0:
                    raise ContractViolation("zero denominator in the coefficient formula")
                coef *= (1 - t) / denom
        e = multiplicity(f)
        terms[e] = terms.get(e, 0) + coef
    return SparsePolynomial(len(mu), terms)


def macdonald_polynomial(mu, params, stats=HHL):
    """``E_mu`` for any ``mu`` in Z^n via ``E_mu = (x_1 ... x_n)^m E_{mu'}``."""
    m, base = normalize_weight(as_weight(mu))
    return coefficients(base, params, stats).shift((m,) * len(base))


def verify_knop_sahi(mu, params, stats=HHL):
    """Exact check of ``E_{pi(mu)} = q^{mu_n} x_1 psi(E_mu)``."""
    mu = as_weight(mu)
    if not isinstance(params, QTParams):
        params = QTParams(*params)
    lhs = macdonald_polynomial(pi_op(mu), params, stats)
    rhs = psi_op(macdonald_polynomial(mu, params, stats), params.q)
    rhs = rhs.shift(unit(len(mu), 1)) * params.q ** mu[-1]
    return lhs == rhs


__all__ = [
    "QTParams", "support_by_recursion", "support", "certify_mconvex", "MConvexCertificate",
    "Rotate", "ShiftColumn", "newton_polytope", "moment_polytope", "coefficients",
    "macdonald_polynomial", "verify_knop_sahi", "psi_op",
]
