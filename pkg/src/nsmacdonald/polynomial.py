"""Sparse Laurent polynomials with exact rational coefficients."""

from fractions import Fraction
from types import MappingProxyType

from ._validation import ContractViolation, as_fraction, as_weight
from .lattice import rotate_right


def format_rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


class SparsePolynomial:
    """``{exponent tuple: Fraction}`` with zero coefficients dropped."""

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=()):
        self.n = n
        acc = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exp, c in items:
            exp = as_weight(exp, n)
            acc[exp] = acc.get(exp, 0) + Fraction(c)
        self._terms = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coefficient})

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def support(self):
        return tuple(sorted(self._terms))

    def coefficient(self, exponent):
        return self._terms.get(tuple(exponent), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.n == other.n and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*x^{e}" for e, c in self) or "0"
        return f"SparsePolynomial({body})"

    def _check(self, other):
        if other.n != self.n:
            raise ContractViolation(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(self.n, out)

    def __neg__(self):
        return SparsePolynomial(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SparsePolynomial):
            self._check(other)
            out = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
            return SparsePolynomial(self.n, out)
        k = as_fraction(other)
        return SparsePolynomial(self.n, {e: k * c for e, c in self._terms.items()})

    __rmul__ = __mul__

    def shift(self, exponent):
        """Multiply by the monomial ``x^exponent``."""
        exponent = as_weight(exponent, self.n)
        return SparsePolynomial(self.n, {tuple(a + b for a, b in zip(e, exponent)): c
                                         for e, c in self._terms.items()})

    def swap_variables(self, i, j):
        def sw(e):
            e = list(e)
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            return tuple(e)
        return SparsePolynomial(self.n, {sw(e): c for e, c in self._terms.items()})


def psi_op(p, q):
    """``x^a -> q^{-a_n} x_1^{a_n} x_2^{a_1} ... x_n^{a_{n-1}}``, extended linearly."""
    q = as_fraction(q)
    if q == 0:
        raise ContractViolation("psi needs q != 0")
    return SparsePolynomial(p.n, {rotate_right(e): c * q ** (-e[-1]) for e, c in p.terms.items()})


def polynomial_to_json(p):
    return [{"exponent": list(e), "coefficient": format_rational(c)} for e, c in p]


def polynomial_from_json(obj):
    if not obj:
        raise ContractViolation("cannot infer the variable count of an empty polynomial")
    n = len(obj[0]["exponent"])
    return SparsePolynomial(n, {tuple(t["exponent"]): as_fraction(t["coefficient"]) for t in obj})
