"""Command-line entry point ``tamecalc``.

Exit codes: 0 success, 1 a verification check failed, 2 invalid config,
3 parse error.  Output is JSON with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import build_metric, build_presentation, load_config
from .curvature import curvature_forms, ricci_scalar
from .errors import ConfigError, MetricError, ParseError, TameCalcError, WrongRank
from .gaussbonnet import integrate_two_form
from .algebras import State
from .levicivita import christoffel_canonical
from .parsing import parse_expression
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAILED, EXIT_CONFIG, EXIT_PARSE = 0, 1, 2, 3


def build_parser():
    p = argparse.ArgumentParser(prog="tamecalc",
                                description="Exact Levi-Civita geometry on tame noncommutative calculi.")
    p.add_argument("-c", "--config", help="JSON config file (default: NC 2-torus, theta=1/4, g0)")
    p.add_argument("--seed", type=int, default=None, help="seed for randomized suites (default 0)")
    p.add_argument("--float", dest="float_mode", action="store_true",
                   help="use floating-point coefficients")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    p.set_defaults(pretty=False)
    sub = p.add_subparsers(dest="command", required=True)
    ev = sub.add_parser("eval", help="normalize an expression")
    ev.add_argument("expr")
    sub.add_parser("christoffel", help="Christoffel symbols of the Levi-Civita connection")
    sub.add_parser("curvature", help="connection and curvature forms")
    sub.add_parser("scalar", help="scalar curvature")
    sub.add_parser("gauss-bonnet", help="integral of the Gauss-Bonnet form")
    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    return p


def _emit(data, pretty):
    if pretty:
        text = json.dumps(data, sort_keys=True, indent=2)
    else:
        text = json.dumps(data, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _dispatch(args, cfg):
    P = build_presentation(cfg)
    seed = cfg.seed if args.seed is None else args.seed
    if args.command == "eval":
        return {"expr": str(parse_expression(args.expr, P))}, EXIT_OK
    g = build_metric(cfg, P)
    if args.command == "christoffel":
        return {"metric": g.describe(), "christoffel": christoffel_canonical(g).to_json()}, EXIT_OK
    if args.command == "curvature":
        cf = curvature_forms(christoffel_canonical(g))
        return dict(cf.to_json(), metric=g.describe()), EXIT_OK
    if args.command == "scalar":
        return {"scal": str(ricci_scalar(g).Scal)}, EXIT_OK
    if args.command == "gauss-bonnet":
        if P.kind == "formal":
            raise ConfigError("the formal backend has no state to integrate against")
        omega12 = curvature_forms(christoffel_canonical(g)).Omega[0][1] if P.n == 2 else None
        if omega12 is None:
            raise WrongRank(f"Gauss-Bonnet needs n = 2, got n = {P.n}")
        value = integrate_two_form(omega12, State(P))
        return {"metric": g.describe(), "form": str(omega12),
                "integral": P.format_coeff(P.coerce(value))}, EXIT_OK
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    if P.kind == "formal":
        names = [n for n in names if n in ("levi-civita", "bianchi", "algebra")]
    result = run_suites(names, P, g, seed)
    return result, EXIT_OK if result["pass"] else EXIT_FAILED


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.float_mode:
            cfg.options["float_mode"] = True
        data, code = _dispatch(args, cfg)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, MetricError, WrongRank) as exc:
        print(f"invalid config: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except TameCalcError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    _emit(data, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
