"""Box and filling statistics entering the HHL coefficient formula.

The reference provider below uses the conventions matching the attack
relation of this package (a lower-row box attacks the boxes of the row
above that lie strictly to its left).  For a box ``u = (i, j)`` of a
composition ``mu``:

* ``leg(u)`` is the number of boxes above ``u`` in column ``i``.
* ``arm(u)`` counts the boxes ``(k, j)`` with ``k < i`` and
  ``mu_k <= mu_i``, plus the boxes ``(k, j-1)`` of the augmented diagram
  (basement included) with ``k > i`` and ``mu_k < mu_i``.
* A triple is ``u``, the box ``w = d(u)`` below it, and one box ``v``
  counted by ``arm(u)``.  It is a coinversion triple when the labels of
  ``u, v, w`` increase cyclically.  ``u`` and ``w`` may share a label,
  and such a triple is never a coinversion.
* ``maj`` sums ``leg(u) + 1`` over the descents ``label(u) > label(d(u))``.
"""

from typing import Protocol

from .lattice import Box


class StatisticsProvider(Protocol):
    def leg(self, shape, box) -> int: ...

    def arm(self, shape, box) -> int: ...

    def maj(self, filling) -> int: ...

    def coinv(self, filling) -> int: ...


def _arm_boxes(shape, box):
    i, j = box
    h = shape[i - 1]
    for k in range(1, i):
        if j <= shape[k - 1] <= h:
            yield Box(k, j)
    for k in range(i + 1, len(shape) + 1):
        if j - 1 <= shape[k - 1] < h:
            yield Box(k, j - 1)


class HHLStatistics:
    """Reference provider (Haglund-Haiman-Loehr statistics)."""

    def leg(self, shape, box):
        return shape[box[0] - 1] - box[1]

    def arm(self, shape, box):
        return sum(1 for _ in _arm_boxes(shape, Box(*box)))

    def maj(self, filling):
        total = 0
        for box, label in filling.items():
            if label > filling.label(box.below()):
                total += self.leg(filling.shape, box) + 1
        return total

    def coinv(self, filling):
        count = 0
        for u, a in filling.items():
            c = filling.label(u.below())
            for v in _arm_boxes(filling.shape, u):
                b = filling.label(v)
                if a < b < c or b < c < a or c < a < b:
                    count += 1
        return count


HHL = HHLStatistics()
