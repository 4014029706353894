"""Command line front end.  Every subcommand prints JSON on stdout.

Exit status: 0 ok, 1 usage error, 2 bad input, 3 a proved identity failed.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from ._validation import ContractViolation, as_composition, as_weight
from .errors import ResultFailure
from . import sweep as sweep_mod
from .bruhat import ideal
from .fillings import enumerate_nonattacking, filling_to_json
from .geometry import (convex_hull, is_generalized_permutahedron, is_mconvex_exchange,
                       is_mconvex_geometric, is_saturated, is_submodular, points_from_json,
                       points_to_json, polytope_to_json, support_function)
from .macdonald import QTParams, certify_mconvex, coefficients, moment_polytope, newton_polytope, support
from .polynomial import polynomial_to_json

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_FAILURE = 0, 1, 2, 3
JOBS_ENV = "NSMACDONALD_JOBS"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_vector(text):
    try:
        return as_weight(int(a) for a in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise ContractViolation(f"cannot parse vector {text!r}: {exc}") from None


def _load_points(text):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return points_from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ContractViolation(f"invalid JSON point set: {exc}") from None


def _jobs(args):
    if args.jobs is not None:
        if args.jobs < 1:
            raise ContractViolation("--jobs must be at least 1")
        return args.jobs
    env = os.environ.get(JOBS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ContractViolation(f"{JOBS_ENV}={env!r} is not an integer") from None
    return 1


def cmd_support(args):
    return points_to_json(support(parse_vector(args.mu)))


def cmd_newton(args):
    return polytope_to_json(newton_polytope(parse_vector(args.mu)))


def cmd_moment(args):
    P = moment_polytope(parse_vector(args.mu))
    if not is_generalized_permutahedron(P):
        raise ResultFailure("moment polytope is not a generalized permutahedron",
                            witness=polytope_to_json(P))
    return polytope_to_json(P)


def cmd_ideal(args):
    I = ideal(parse_vector(args.mu), with_edges=args.edges)
    if args.edges:
        return {"elements": points_to_json(I.elements),
                "cover_edges": [[list(a), list(b)] for a, b in I.cover_edges]}
    return points_to_json(I.elements)


def cmd_mconvex(args):
    S = _load_points(args.points)
    return {
        "points": points_to_json(S),
        "exchange": is_mconvex_exchange(S),
        "geometric": is_mconvex_geometric(S),
        "saturated": len({sum(p) for p in S}) == 1 and is_saturated(S),
        "generalized_permutahedron": is_generalized_permutahedron(convex_hull(S)),
        "submodular": is_submodular(support_function(S)),
    }


def cmd_coeffs(args):
    params = QTParams(args.q, args.t)
    return polynomial_to_json(coefficients(as_composition(parse_vector(args.mu)), params))


def cmd_fillings(args):
    return [filling_to_json(f) for f in enumerate_nonattacking(parse_vector(args.mu))]


def cmd_certify(args):
    return certify_mconvex(parse_vector(args.mu)).to_json()


def cmd_verify(args):
    if args.max_n < 1 or args.max_weight < 0:
        raise ContractViolation("sweep bounds must be positive")
    jobs = _jobs(args)
    tasks = sweep_mod.tasks(args.max_n, args.max_weight)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(sweep_mod.run_task, tasks, chunksize=8))
    else:
        outcomes = [sweep_mod.run_task(t) for t in tasks]
    report = sweep_mod.summarize(outcomes)
    report["bounds"] = {"max_n": args.max_n, "max_weight": args.max_weight}
    if any(r["failed"] for r in report["suites"].values()):
        raise ResultFailure("some results failed on the sweep", witness=report)
    return report


def build_parser():
    p = _Parser(prog="nsmacdonald", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write JSON here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    def with_mu(name, func, help):
        s = add(name, help)
        s.add_argument("--mu", required=True, help="comma separated, e.g. 0,2,0 (use --mu=-1,1,0 for negatives)")
        s.set_defaults(func=func)
        return s

    with_mu("support", cmd_support, "support of E_mu, checked three ways")
    with_mu("newton", cmd_newton, "Newton polytope of E_mu")
    with_mu("moment-polytope", cmd_moment, "convex hull of the Bruhat ideal below mu")
    s = with_mu("bruhat-ideal", cmd_ideal, "lower Bruhat ideal of mu")
    s.add_argument("--edges", action="store_true", help="include the generating moves")
    s = add("mconvex-check", "M-convexity checks on a point set")
    s.add_argument("--points", required=True, help="JSON list of integer lists, or @file")
    s.set_defaults(func=cmd_mconvex)
    s = with_mu("coeffs", cmd_coeffs, "coefficients of E_mu at rational q, t")
    s.add_argument("--q", default="1/2")
    s.add_argument("--t", default="1/2")
    with_mu("fillings", cmd_fillings, "non-attacking fillings of mu")
    with_mu("certify", cmd_certify, "M-convexity certificate for supp(E_mu)")
    s = add("verify-paper", "run every identity over a sweep of compositions")
    s.add_argument("--jobs", "-j", type=int, default=None,
                   help=f"worker processes (default: ${JOBS_ENV} or 1)")
    s.add_argument("--max-n", type=int, default=4)
    s.add_argument("--max-weight", type=int, default=6)
    s.set_defaults(func=cmd_verify)
    return p


def _emit(obj, path):
    text = json.dumps(obj, indent=2) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        _emit(args.func(args), args.output)
    except ResultFailure as exc:
        _emit({"error": str(exc), "witness": exc.witness}, args.output)
        print(f"result failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (ContractViolation, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
