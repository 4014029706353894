"""Exhaustive checks of every identity over small compositions.

A task is a plain tuple so it can be shipped to worker processes; running
it returns ``[(suite, ok, witness), ...]`` in a fixed order.
"""


from .bruhat import knop_sahi_image, verify_conjecture38
from .errors import ResultFailure
from .fillings import (NuFamily, chain_flip, enumerate_nonattacking,
                       verify_inductive_labelings, verify_partial_sym, verify_reflection_inclusion)
from .geometry import (is_generalized_permutahedron, is_mconvex_exchange, is_mconvex_geometric,
                       is_submodular, support_function)
from .lattice import Box, pi_op
from .macdonald import (QTParams, certify_mconvex, coefficients, moment_polytope, newton_polytope,
                        support, verify_knop_sahi)

SUITES = (
    "support_three_routes", "mconvex_exchange", "mconvex_geometric", "submodular_support_function",
    "certificate_replay", "bruhat_ideal_lattice_points", "moment_equals_newton",
    "knop_sahi_support", "knop_sahi_polynomial", "coefficient_support",
    "family_partial_sym", "family_inductive_labelings", "family_reflection_inclusion",
    "family_chain_flip",
)

PARAMS = (QTParams("1/3", "1/5"), QTParams("2/7", "3/4"))


def compositions(n, total):
    """Compositions with ``n`` parts summing to exactly ``total``, lexicographic."""
    if n == 1:
        yield (total,)
        return
    for a in range(total + 1):
        for rest in compositions(n - 1, total - a):
            yield (a,) + rest


def tasks(max_n, max_weight):
    out = []
    for n in range(1, max_n + 1):
        for w in range(max_weight + 1):
            for mu in compositions(n, w):
                out.append(("composition", mu, w < max_weight))
    for N in range(2, max_n + 1):
        for m in range(2, N + 1):
            k = N - m
            for a in range(1, max_weight + 1):
                for w in range(max_weight - a + 1):
                    if k == 0 and w > 0:
                        continue
                    for base in compositions(k, w) if k else [()]:
                        out.append(("family", base, a, m))
    return out


def _guard(fn):
    try:
        return fn()
    except ResultFailure as exc:
        return False, {"error": str(exc), "witness": exc.witness}


def _composition_checks(mu, with_polynomial):
    res = []

    def record(name, fn):
        out = _guard(fn)
        ok, witness = out if isinstance(out, tuple) else (out, None)
        res.append((name, bool(ok), None if ok else (witness or {"mu": list(mu)})))

    S = None

    def triple():
        nonlocal S
        S = support(mu)
        return True

    record("support_three_routes", triple)
    if S is None:
        return res
    record("mconvex_exchange", lambda: is_mconvex_exchange(S))
    record("mconvex_geometric", lambda: is_mconvex_geometric(S))
    record("submodular_support_function", lambda: is_submodular(support_function(S)))
    record("certificate_replay", lambda: certify_mconvex(mu).support == S)
    record("bruhat_ideal_lattice_points", lambda: verify_conjecture38(mu))

    def moment():
        P, Q = newton_polytope(mu), moment_polytope(mu)
        return P.vertices == Q.vertices and P.facets == Q.facets and is_generalized_permutahedron(Q)

    record("moment_equals_newton", moment)
    record("knop_sahi_support", lambda: support(pi_op(mu)) == knop_sahi_image(S))
    if with_polynomial:
        record("knop_sahi_polynomial", lambda: all(verify_knop_sahi(mu, p) for p in PARAMS))

    def coeff_support():
        E = coefficients(mu, PARAMS[0])
        return E.support() == S and all(c > 0 for c in E.terms.values())

    record("coefficient_support", coeff_support)
    return res


def _chain_flips(fam):
    for i in range(1, fam.prefix_length):
        src = fam.member(i + 1)
        target = set(enumerate_nonattacking(fam.member(i)))
        for f in enumerate_nonattacking(src):
            if f.label(Box(i + 1, 1)) != i + 1:
                continue
            g = chain_flip(f, i)
            if g not in target:
                return False, {"family": [list(fam.base), fam.column_height, fam.prefix_length],
                               "i": i, "shape": list(src)}
    return True


def _family_checks(base, a, m):
    fam = NuFamily(base, a, m)
    tag = {"family": [list(base), a, m]}
    res = []
    for name, fn, top in (("family_partial_sym", verify_partial_sym, m - 1),
                          ("family_inductive_labelings", verify_inductive_labelings, m),
                          ("family_reflection_inclusion", verify_reflection_inclusion, m - 1)):
        bad = [i for i in range(1, top + 1) if not fn(fam, i)]
        res.append((name, not bad, dict(tag, i=bad) if bad else None))
    out = _guard(lambda: _chain_flips(fam))
    ok, witness = out if isinstance(out, tuple) else (out, None)
    res.append(("family_chain_flip", ok, witness))
    return res


def run_task(task):
    if task[0] == "composition":
        return _composition_checks(task[1], task[2])
    return _family_checks(*task[1:])


def summarize(outcomes, max_witnesses=10):
    suites = {name: {"passed": 0, "failed": 0, "witnesses": []} for name in SUITES}
    for result in outcomes:
        for name, ok, witness in result:
            entry = suites[name]
            if ok:
                entry["passed"] += 1
            else:
                entry["failed"] += 1
                if len(entry["witnesses"]) < max_witnesses:
                    entry["witnesses"].append(witness)
    return {"suites": suites,
            "all_passed": all(s["failed"] == 0 for s in suites.values())}
