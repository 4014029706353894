"""Weight vectors, the operators s_i, sigma_{i,j}, pi, and column diagrams.

Weight vectors are plain tuples of ints; positions are 1-based in every
public signature to match the usual indexing of x_1, ..., x_n.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from ._validation import ContractViolation, as_composition, as_weight, check_index, same_length


def simple_transposition(v, i):
    """Swap entries ``i`` and ``i+1`` of ``v``."""
    v = as_weight(v)
    check_index(i, len(v) - 1)
    w = list(v)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def transposition(v, i, j):
    """Swap entries ``i < j`` of ``v``."""
    v = as_weight(v)
    check_index(i, len(v), "i")
    check_index(j, len(v), "j")
    if i >= j:
        raise ContractViolation(f"transposition needs i < j, got ({i}, {j})")
    w = list(v)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def swap_entries(v, i, j):
    """Like :func:`transposition` but for any two distinct positions."""
    if i == j:
        raise ContractViolation("swap needs distinct positions")
    return transposition(v, min(i, j), max(i, j))


def pi_op(v):
    """``(a_1, ..., a_n) -> (a_n + 1, a_1, ..., a_{n-1})``."""
    v = as_weight(v)
    return (v[-1] + 1,) + v[:-1]


def rotate_right(v):
    """``(a_1, ..., a_n) -> (a_n, a_1, ..., a_{n-1})``, i.e. s_1 s_2 ... s_{n-1}."""
    return (v[-1],) + tuple(v[:-1])


def unit(n, i):
    e = [0] * n
    e[i - 1] = 1
    return tuple(e)


def add(u, v):
    same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def normalize_weight(v):
    """Split ``v = (m, ..., m) + c`` with ``c`` a composition and ``min(c) = 0``."""
    v = as_weight(v)
    m = min(v)
    return m, tuple(a - m for a in v)


class Box(NamedTuple):
    column: int
    row: int

    def below(self):
        return Box(self.column, self.row - 1)


def reading_key(box):
    """Rows bottom to top, left to right within a row."""
    return (box.row, box.column)


def attacks(u, v):
    """True when distinct boxes ``u`` and ``v`` attack each other."""
    if u == v:
        return False
    if u.row == v.row:
        return True
    if abs(u.row - v.row) != 1:
        return False
    lower, upper = (u, v) if u.row < v.row else (v, u)
    return lower.column > upper.column


@dataclass(frozen=True)
class Diagram:
    """Column diagram of a composition together with its basement row."""

    shape: tuple
    boxes: tuple
    basement: tuple
    attack_pairs: frozenset = field(repr=False)
    # per box (reading order): indices of earlier boxes it attacks, and the
    # basement labels it may not carry
    constraints: tuple = field(repr=False, compare=False)

    @property
    def n(self):
        return len(self.shape)

    @property
    def size(self):
        return len(self.boxes)

    def index(self, box):
        return self.boxes.index(box)


def build_diagram(c):
    c = as_composition(c)
    n = len(c)
    boxes = tuple(sorted((Box(i, j) for i in range(1, n + 1) for j in range(1, c[i - 1] + 1)),
                         key=reading_key))
    basement = tuple(Box(i, 0) for i in range(1, n + 1))
    everything = basement + boxes
    pairs = set()
    for a in range(len(everything)):
        for b in range(a + 1, len(everything)):
            u, v = everything[a], everything[b]
            if attacks(u, v):
                pairs.add(frozenset((u, v)))
    constraints = []
    for k, u in enumerate(boxes):
        earlier = tuple(m for m in range(k) if frozenset((u, boxes[m])) in pairs)
        banned = frozenset(b.column for b in basement if frozenset((u, b)) in pairs)
        constraints.append((earlier, banned))
    return Diagram(c, boxes, basement, frozenset(pairs), tuple(constraints))
