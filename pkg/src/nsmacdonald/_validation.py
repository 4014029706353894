"""Input checking helpers shared by the public entry points."""

from fractions import Fraction
from numbers import Integral


class ContractViolation(ValueError):
    """Raised when an operation is called outside its documented domain."""


def as_weight(v, n=None):
    """Return ``v`` as a tuple of Python ints, optionally checking its length."""
    try:
        w = tuple(v)
    except TypeError:
        raise ContractViolation(f"expected a sequence of integers, got {v!r}") from None
    if not w:
        raise ContractViolation("weight vectors need at least one entry")
    for a in w:
        if isinstance(a, bool) or not isinstance(a, Integral):
            raise ContractViolation(f"non-integer entry {a!r} in {w!r}")
    w = tuple(int(a) for a in w)
    if n is not None and len(w) != n:
        raise ContractViolation(f"expected length {n}, got {len(w)} for {w!r}")
    return w


def as_composition(v, n=None):
    w = as_weight(v, n)
    if min(w) < 0:
        raise ContractViolation(f"composition entries must be non-negative: {w!r}")
    return w


def check_index(i, n, name="i"):
    if isinstance(i, bool) or not isinstance(i, Integral) or not 1 <= i <= n:
        raise ContractViolation(f"{name}={i!r} outside 1..{n}")
    return int(i)


def same_length(*vectors):
    lengths = {len(v) for v in vectors}
    if len(lengths) > 1:
        raise ContractViolation(f"mixed vector lengths {sorted(lengths)}")
    return lengths.pop() if lengths else None


def as_fraction(x):
    """Parse an exact rational; accepts ints, Fractions and ``"p/q"`` strings."""
    if isinstance(x, float):
        raise ContractViolation("floats are not accepted, pass an exact rational")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ContractViolation(f"cannot parse rational {x!r}: {exc}") from None


def as_points(S):
    """Deduplicate and canonically order a finite point set.

    Every point must have the same length; the empty set is rejected.
    """
    pts = sorted({as_weight(p) for p in S})
    if not pts:
        raise ContractViolation("point set is empty")
    same_length(*pts)
    return tuple(pts)
