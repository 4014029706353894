"""Non-attacking fillings of column diagrams and the column-shift lemmas."""

from dataclasses import dataclass
from functools import lru_cache

from ._validation import ContractViolation, as_composition, check_index
from .errors import ResultFailure
from .lattice import Box, attacks, build_diagram, reading_key


@lru_cache(maxsize=4096)
def diagram_for(shape):
    return build_diagram(shape)


@dataclass(frozen=True)
class Filling:
    """Labels of the diagram boxes of ``shape``, listed in reading order.

    The basement is implicit: the basement box in column j carries label j.
    """

    shape: tuple
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != sum(self.shape):
            raise ContractViolation(
                f"{len(self.labels)} labels for a diagram with {sum(self.shape)} boxes")

    @property
    def n(self):
        return len(self.shape)

    @property
    def diagram(self):
        return diagram_for(self.shape)

    @classmethod
    def from_mapping(cls, shape, mapping):
        """Build from ``{(column, row): label}`` covering every diagram box."""
        shape = as_composition(shape)
        boxes = diagram_for(shape).boxes
        mapping = {Box(*k): v for k, v in mapping.items()}
        if set(mapping) != set(boxes):
            raise ContractViolation("mapping does not cover exactly the diagram boxes")
        return cls(shape, tuple(mapping[b] for b in boxes))

    def items(self):
        return zip(self.diagram.boxes, self.labels)

    def as_mapping(self):
        return dict(self.items())

    def label(self, box):
        """Label of a diagram or basement box (basement box j reads j)."""
        box = Box(*box)
        if box.row == 0:
            return box.column
        return self.labels[self.diagram.index(box)]

    def relabel(self, gamma):
        """Apply a label permutation, given as a callable or a 1-based mapping."""
        g = gamma if callable(gamma) else gamma.__getitem__
        return Filling(self.shape, tuple(g(a) for a in self.labels))


def _check_labels(f):
    for a in f.labels:
        if not 1 <= a <= f.n:
            raise ContractViolation(f"label {a} outside 1..{f.n}")


def is_nonattacking(f):
    _check_labels(f)
    for u, v in f.diagram.attack_pairs:
        if u.row == 0 and v.row == 0:
            continue
        if f.label(u) == f.label(v):
            return False
    return True


def enumerate_nonattacking(c):
    """All non-attacking fillings of ``c`` in lexicographic reading-order order."""
    c = as_composition(c)
    dg = diagram_for(c)
    n = len(c)
    size = dg.size
    out = []
    current = [0] * size

    def extend(k):
        if k == size:
            out.append(Filling(c, tuple(current)))
            return
        earlier, banned = dg.constraints[k]
        taken = {current[m] for m in earlier}
        for a in range(1, n + 1):
            if a in banned or a in taken:
                continue
            current[k] = a
            extend(k + 1)
        current[k] = 0

    extend(0)
    return out


def multiplicity(f):
    counts = [0] * f.n
    for a in f.labels:
        counts[a - 1] += 1
    return tuple(counts)


def support_by_enumeration(c):
    return tuple(sorted({multiplicity(f) for f in enumerate_nonattacking(c)}))


def brute_force_nonattacking(c):
    """Filter every labelling by :func:`is_nonattacking`; exponential, tests only."""
    from itertools import product

    c = as_composition(c)
    size = sum(c)
    fs = (Filling(c, labels) for labels in product(range(1, len(c) + 1), repeat=size))
    return [f for f in fs if is_nonattacking(f)]


# --- column-shift families -------------------------------------------------

@dataclass(frozen=True)
class NuFamily:
    """Compositions ``0^{i-1} a 0^{m-i} base`` for ``i = 1..m``.

    All members share the basement, the boxes of ``base`` and the boxes of
    the moving column (identified row by row), so a filling of one member
    can be read as a filling of any other.
    """

    base: tuple
    column_height: int
    prefix_length: int

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        if self.column_height < 1 or self.prefix_length < 2:
            raise ContractViolation("need column_height >= 1 and prefix_length >= 2")
        as_composition(self.base + (0,))

    @property
    def N(self):
        return self.prefix_length + len(self.base)

    def member(self, i):
        check_index(i, self.prefix_length)
        m, a = self.prefix_length, self.column_height
        return (0,) * (i - 1) + (a,) + (0,) * (m - i) + self.base

    @property
    def members(self):
        return [self.member(i) for i in range(1, self.prefix_length + 1)]

    def transport(self, f, i, j):
        """Move a filling of member ``i`` onto member ``j`` (labels unchanged)."""
        src = self.member(i)
        if f.shape != src:
            raise ContractViolation(f"filling has shape {f.shape}, expected {src}")
        mapping = {}
        for box, label in f.items():
            if box.column == i:
                box = Box(j, box.row)
            mapping[box] = label
        return Filling.from_mapping(self.member(j), mapping)


def _swap(a, b):
    def g(x):
        return b if x == a else a if x == b else x
    return g


def verify_partial_sym(fam, i):
    """Check ``L(nu_{i+1}) = L(nu_i) disjoint-union sigma_{1,i+1} L(nu_1)``."""
    check_index(i, fam.prefix_length - 1)
    target = set(enumerate_nonattacking(fam.member(i + 1)))
    kept = {fam.transport(f, i, i + 1) for f in enumerate_nonattacking(fam.member(i))}
    moved = {fam.transport(f, 1, i + 1).relabel(_swap(1, i + 1))
             for f in enumerate_nonattacking(fam.member(1))}
    return kept.isdisjoint(moved) and kept | moved == target


def verify_inductive_labelings(fam, i):
    """Check both identities of the corollary to :func:`verify_partial_sym`.

    ``L(nu_i)`` is the disjoint union of ``sigma_{1,k} L(nu_1)`` over
    ``k <= i``, and for ``i < m`` also ``L(nu_{i+1}) = L(nu_i) u s_i L(nu_i)``.
    """
    check_index(i, fam.prefix_length)
    first = enumerate_nonattacking(fam.member(1))
    pieces = []
    for k in range(1, i + 1):
        pieces.append({fam.transport(f, 1, i).relabel(_swap(1, k)) if k > 1
                       else fam.transport(f, 1, i) for f in first})
    union = set().union(*pieces)
    if sum(len(p) for p in pieces) != len(union):
        return False
    here = set(enumerate_nonattacking(fam.member(i)))
    if union != here:
        return False
    if i == fam.prefix_length:
        return True
    lifted = {fam.transport(f, i, i + 1) for f in here}
    swapped = {f.relabel(_swap(i, i + 1)) for f in lifted}
    return lifted | swapped == set(enumerate_nonattacking(fam.member(i + 1)))


def verify_reflection_inclusion(fam, i):
    """Check ``s_i supp(nu_i) <= supp(nu_i) u (supp(nu_i) + e_{i+1} - e_i)``."""
    check_index(i, fam.prefix_length - 1)
    supp = set(support_by_enumeration(fam.member(i)))
    for v in supp:
        w = list(v)
        w[i - 1], w[i] = w[i], w[i - 1]
        w = tuple(w)
        if w in supp:
            continue
        back = list(w)
        back[i] -= 1
        back[i - 1] += 1
        if tuple(back) not in supp:
            return False
    return True


def attacking_chain(f, i):
    """Greedy attacking chain of i/(i+1) labels starting at the bottom box of column i+1."""
    start = Box(i + 1, 1)
    chain = [start]
    boxes = sorted(f.diagram.boxes, key=reading_key)
    labels = f.as_mapping()
    for box in boxes[boxes.index(start) + 1:]:
        if labels[box] in (i, i + 1) and attacks(chain[-1], box):
            chain.append(box)
    return chain


def chain_flip(f, i):
    """Turn a filling of ``nu_{i+1}`` whose moving box reads ``i+1`` into one of ``nu_i``.

    ``f.shape`` must have its first non-zero column at position ``i+1``.  The
    labels along the attacking chain are swapped ``i <-> i+1`` and the moving
    column is shifted one step left.
    """
    shape = f.shape
    check_index(i, len(shape) - 1)
    if any(shape[:i]) or shape[i] == 0:
        raise ContractViolation(f"column {i + 1} is not the first non-empty column of {shape}")
    if f.label(Box(i + 1, 1)) != i + 1:
        raise ContractViolation(f"bottom box of the moving column must carry label {i + 1}")
    if not is_nonattacking(f):
        raise ContractViolation("input filling is attacking")
    seq = attacking_chain(f, i)
    chain = set(seq)
    labels = f.as_mapping()
    for box in f.diagram.boxes:
        if box not in chain and labels[box] in (i, i + 1):
            if any(attacks(box, c) or attacks(c, box) for c in seq):
                raise ResultFailure("attacking chain is not maximal",
                                    witness={"input": filling_to_json(f), "i": i, "box": list(box)})
    flip = _swap(i, i + 1)
    mapping = {}
    for box, label in f.items():
        if box in chain:
            label = flip(label)
        if box.column == i + 1:
            box = Box(i, box.row)
        mapping[box] = label
    new_shape = shape[:i - 1] + (shape[i], 0) + shape[i + 1:]
    out = Filling.from_mapping(new_shape, mapping)
    expected = list(multiplicity(f))
    if len(seq) % 2 == 1:
        expected[i - 1] += 1
        expected[i] -= 1
    if not is_nonattacking(out) or multiplicity(out) != tuple(expected):
        raise ResultFailure("chain flip violates the labeling lemma",
                            witness={"input": filling_to_json(f), "i": i,
                                     "output": filling_to_json(out)})
    return out


def filling_to_json(f):
    return {"shape": list(f.shape),
            "labels": [[b.column, b.row, a] for b, a in f.items()]}


def filling_from_json(obj):
    shape = as_composition(obj["shape"])
    return Filling.from_mapping(shape, {(c, r): a for c, r, a in obj["labels"]})
