import json
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from nsmacdonald import ContractViolation, ResultFailure
from nsmacdonald.bruhat import ideal
from nsmacdonald.fillings import Filling, enumerate_nonattacking, support_by_enumeration
from nsmacdonald.geometry import is_generalized_permutahedron, is_mconvex_exchange
from nsmacdonald.lattice import Box, pi_op
from nsmacdonald.macdonald import (MConvexCertificate, QTParams, Rotate, ShiftColumn,
                                   certify_mconvex, coefficients, macdonald_polynomial,
                                   moment_polytope, newton_polytope, support, support_by_recursion,
                                   verify_knop_sahi)
from nsmacdonald.polynomial import (SparsePolynomial, format_rational, polynomial_from_json,
                                    polynomial_to_json, psi_op)
from nsmacdonald.statistics import HHL, HHLStatistics

from oracles import closed_form_020, intertwiner_E

SUPP_020 = ((0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0))
small = st.lists(st.integers(0, 3), min_size=1, max_size=4).map(tuple).filter(lambda c: sum(c) <= 5)


def all_compositions(n, top):
    return [c for c in product(range(top + 1), repeat=n) if sum(c) <= top]


# --- polynomials -----------------------------------------------------------

def test_polynomial_arithmetic():
    x = SparsePolynomial.monomial((1, 0))
    y = SparsePolynomial.monomial((0, 1))
    p = (x + y) * (x - y)
    assert p.terms == {(2, 0): 1, (0, 2): -1}
    assert (p - p).terms == {}
    assert p * F(1, 2) == SparsePolynomial(2, {(2, 0): F(1, 2), (0, 2): F(-1, 2)})
    assert p.shift((-1, -1)).support() == ((-1, 1), (1, -1))
    assert p.swap_variables(1, 2) == -p


def test_psi_examples():
    q = F(1, 2)
    assert psi_op(SparsePolynomial.monomial((0, 0, 2)), q) == SparsePolynomial.monomial((2, 0, 0), 4)
    assert psi_op(SparsePolynomial.one(3), q) == SparsePolynomial.one(3)
    assert psi_op(SparsePolynomial.monomial((1, 1, 0)), q) == SparsePolynomial.monomial((0, 1, 1))


def test_format_rational():
    assert format_rational(F(-3, 6)) == "-1/2"
    assert format_rational(2) == "2/1"


@given(st.dictionaries(st.tuples(st.integers(-2, 3), st.integers(0, 3)),
                       st.fractions(max_denominator=50), max_size=6))
def test_polynomial_json_round_trip(terms):
    p = SparsePolynomial(2, terms)
    obj = json.loads(json.dumps(polynomial_to_json(p)))
    if not obj:
        with pytest.raises(ContractViolation):
            polynomial_from_json(obj)
        return
    assert [e["exponent"] for e in obj] == sorted(e["exponent"] for e in obj)
    assert polynomial_from_json(obj) == p


# --- parameters ------------------------------------------------------------

@pytest.mark.parametrize("q,t", [(0, "1/2"), ("1/2", 1), ("3/2", "1/2"), (0.5, "1/2"), ("x", "1/2")])
def test_qt_params_reject(q, t):
    with pytest.raises(ContractViolation):
        QTParams(q, t)


def test_qt_params_parse():
    assert QTParams("1/3", F(1, 5)) == QTParams(F(1, 3), "1/5")


# --- supports ----------------------------------------------------------------

def test_support_examples():
    assert support((0, 2, 0)) == SUPP_020
    assert support((0, 0, 0)) == ((0, 0, 0),)
    assert set(support_by_recursion((1, 0, 2))) == {(1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0), (1, 1, 1)}
    assert support((-1, 1, 0)) == tuple(sorted(tuple(a - 1 for a in v) for v in support((0, 2, 1))))


def test_support_detects_disagreement(monkeypatch):
    import nsmacdonald.macdonald as mod
    monkeypatch.setattr(mod, "support_by_enumeration", lambda c: ((9, 9, 9),))
    with pytest.raises(ResultFailure):
        mod.support((0, 1, 2))


@given(small)
def test_support_recursion_rotates(mu):
    assert support_by_recursion(pi_op(mu)) == tuple(sorted(
        tuple(a + (k == 0) for k, a in enumerate((v[-1],) + v[:-1])) for v in support_by_recursion(mu)))


# --- statistics and coefficients ---------------------------------------------

def test_statistics_on_020():
    shape = (0, 2, 0)
    assert HHL.leg(shape, (2, 1)) == 1 and HHL.leg(shape, (2, 2)) == 0
    assert HHL.arm(shape, (2, 1)) == 1
    assert HHL.arm(shape, (2, 2)) == 0
    top_two = Filling.from_mapping(shape, {(2, 1): 2, (2, 2): 2})
    assert HHL.maj(top_two) == 0 and HHL.coinv(top_two) == 0


@given(small)
def test_statistics_are_non_negative(mu):
    stats = HHLStatistics()
    for f in enumerate_nonattacking(mu)[:30]:
        assert stats.maj(f) >= 0 and stats.coinv(f) >= 0
        for box, _ in f.items():
            assert stats.leg(mu, box) >= 0 and stats.arm(mu, box) >= 0


@pytest.mark.parametrize("q,t", [("1/2", "1/2"), ("1/3", "1/5"), ("2/7", "3/4")])
def test_coefficients_of_020_match_closed_forms(q, t):
    E = coefficients((0, 2, 0), QTParams(q, t))
    assert dict(E.terms) == closed_form_020(F(q), F(t))


def test_coefficients_at_half_half():
    E = coefficients((0, 2, 0), QTParams("1/2", "1/2"))
    assert dict(E.terms) == {(0, 2, 0): 1, (2, 0, 0): F(8, 15), (0, 1, 1): F(1, 3),
                             (1, 0, 1): F(8, 45), (1, 1, 0): F(38, 45)}


def test_coefficients_trivial():
    assert coefficients((0, 0, 0), ("1/2", "1/2")) == SparsePolynomial.one(3)
    assert coefficients((1, 0, 0), ("1/3", "1/5")) == SparsePolynomial.monomial((1, 0, 0))


def test_coefficients_match_intertwiner_oracle():
    cases = all_compositions(2, 4) + all_compositions(3, 4) + all_compositions(4, 3)
    for q, t in [(F(1, 3), F(1, 5)), (F(2, 7), F(3, 4))]:
        params = QTParams(q, t)
        for mu in cases:
            assert coefficients(mu, params) == intertwiner_E(mu, q, t), mu


def test_oracle_reproduces_closed_form():
    for q, t in [(F(1, 2), F(1, 2)), (F(1, 3), F(1, 5))]:
        assert dict(intertwiner_E((0, 2, 0), q, t).terms) == closed_form_020(q, t)


@given(small)
def test_coefficient_support_is_positive_and_generic(mu):
    a = coefficients(mu, ("1/2", "1/2"))
    b = coefficients(mu, ("5/6", "1/9"))
    assert a.support() == b.support() == support(mu)
    assert all(c > 0 for c in a.terms.values())


def test_macdonald_polynomial_shift():
    E = macdonald_polynomial((-1, 1, 0), ("1/2", "1/3"))
    base = coefficients((0, 2, 1), ("1/2", "1/3"))
    assert E == base.shift((-1, -1, -1))


def test_alternative_provider_is_used():
    class Flat(HHLStatistics):
        def maj(self, filling):
            return 0

    a = coefficients((0, 2, 0), ("1/2", "1/2"), Flat())
    b = coefficients((0, 2, 0), ("1/2", "1/2"))
    assert a.support() == b.support() and a != b


def test_knop_sahi_examples():
    assert verify_knop_sahi((0, 0, 0), ("1/2", "1/2"))
    assert verify_knop_sahi((0, 2, 0), ("1/2", "1/2"))
    assert verify_knop_sahi((-1, 2, 0), ("1/3", "1/5"))


def test_knop_sahi_fails_for_wrong_statistics():
    class Bad(HHLStatistics):
        def maj(self, filling):
            return 0

    assert not all(verify_knop_sahi(mu, ("1/3", "1/5"), Bad()) for mu in all_compositions(3, 2))


# --- certificates and polytopes ------------------------------------------------

def test_certificate_for_020():
    cert = certify_mconvex((0, 2, 0))
    kinds = [(type(s).__name__, getattr(s, "ell", None)) for s in cert.steps]
    assert kinds == [("Rotate", None), ("ShiftColumn", 2), ("ShiftColumn", 3),
                     ("Rotate", None), ("ShiftColumn", 2)]
    assert cert.steps[0] == Rotate((0, 0, 0), (1, 0, 0))
    assert cert.steps[-1] == ShiftColumn(2, (2, 0, 0), (0, 2, 0))
    assert cert.replay() == SUPP_020 == cert.support
    obj = json.loads(json.dumps(cert.to_json()))
    assert [s["op"] for s in obj["steps"]] == ["rotate", "shift_column", "shift_column", "rotate",
                                               "shift_column"]


def test_certificate_trivial():
    cert = certify_mconvex((0, 0, 0))
    assert cert.steps == () and cert.replay() == ((0, 0, 0),)


def test_tampered_certificate_fails():
    good = certify_mconvex((0, 2, 0))
    steps = good.steps[:-1] + (ShiftColumn(3, (2, 0, 0), (2, 0, 0)),)
    with pytest.raises(ResultFailure):
        MConvexCertificate((0, 2, 0), steps, good.support).replay()


def test_replay_reports_hypothesis_failures(monkeypatch):
    import nsmacdonald.macdonald as mod

    def refuse(S, i, j):
        raise mod.HypothesisViolation("refused", witness={"i": i})

    monkeypatch.setattr(mod, "union_reflection", refuse)
    with pytest.raises(ResultFailure) as info:
        MConvexCertificate((0, 2, 0), mod._unwind((0, 2, 0)), SUPP_020).replay()
    assert info.value.witness["detail"] == {"i": 2}


@given(small)
def test_certificates_replay(mu):
    cert = certify_mconvex(mu)
    S = cert.replay()
    assert S == support_by_enumeration(mu) and is_mconvex_exchange(S)


def test_polytope_examples():
    P = newton_polytope((0, 2, 0))
    assert set(P.vertices) == {(2, 0, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1)}
    assert moment_polytope((0, 2, 0)) == P
    assert newton_polytope((2, 2, 2)).vertices == ((2, 2, 2),)
    assert moment_polytope((0, 0, 0)).vertices == ((0, 0, 0),)
    shifted = newton_polytope((-1, 1, 0))
    assert set(shifted.vertices) == {tuple(a - 1 for a in v) for v in newton_polytope((0, 2, 1)).vertices}
    M = moment_polytope((1, 0, 2))
    assert set(M.points) == set(ideal((1, 0, 2)).elements) and is_generalized_permutahedron(M)


@given(small)
def test_newton_equals_moment(mu):
    P, Q = newton_polytope(mu), moment_polytope(mu)
    assert P.vertices == Q.vertices and P.edges == Q.edges
    assert is_generalized_permutahedron(Q)


def test_moving_column_bottom_label_constraint():
    for f in enumerate_nonattacking((0, 0, 2, 1)):
        assert f.label(Box(3, 1)) <= 3
