"""Bruhat order on Z^n and its lower order ideals."""

from collections import deque
from dataclasses import dataclass

from ._validation import as_weight, same_length
from .geometry import lattice_points
from .lattice import add, normalize_weight, unit


def lower_moves(v):
    """Immediate down-moves from ``v``.

    For ``i < j``: if ``v_i < v_j`` swap the two entries; if ``v_i > v_j + 1``
    replace ``(v_i, v_j)`` by ``(v_j + 1, v_i - 1)``.
    """
    v = as_weight(v)
    n = len(v)
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            if v[i] < v[j]:
                w = list(v)
                w[i], w[j] = v[j], v[i]
                out.add(tuple(w))
            elif v[i] > v[j] + 1:
                w = list(v)
                w[i], w[j] = v[j] + 1, v[i] - 1
                out.add(tuple(w))
    return out


@dataclass(frozen=True)
class BruhatIdeal:
    top: tuple
    elements: tuple
    cover_edges: tuple = ()

    def __contains__(self, v):
        return tuple(v) in set(self.elements)


def ideal(mu, with_edges=False):
    """Lower order ideal ``{lambda : lambda <= mu}`` by breadth-first search.

    Weights with negative entries are handled through the shift
    ``mu = (m, ..., m) + mu'``.
    """
    mu = as_weight(mu)
    m, base = normalize_weight(mu)
    seen = {base}
    queue = deque([base])
    edges = []
    while queue:
        v = queue.popleft()
        for w in sorted(lower_moves(v)):
            if with_edges:
                edges.append((v, w))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    shift = (m,) * len(mu)
    elements = tuple(sorted(add(v, shift) for v in seen))
    edges = tuple(sorted((add(a, shift), add(b, shift)) for a, b in edges))
    return BruhatIdeal(mu, elements, edges)


def leq(lam, mu):
    lam, mu = as_weight(lam), as_weight(mu)
    same_length(lam, mu)
    if sum(lam) != sum(mu):
        return False
    return lam in ideal(mu)


def verify_conjecture38(mu):
    """Every non-negative lattice point of ``conv(lambda <= mu)`` is ``<= mu``."""
    elements = ideal(mu).elements
    members = set(elements)
    return all(b in members for b in lattice_points(elements) if min(b) >= 0)


def knop_sahi_image(elements):
    """``e_1 + rotate_right(S)`` for a point set ``S``."""
    n = len(elements[0])
    e1 = unit(n, 1)
    return tuple(sorted(add(e1, (v[-1],) + v[:-1]) for v in elements))
