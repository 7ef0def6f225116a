"""Verification suites shared by the CLI and the test-suite."""

from __future__ import annotations

import random

from .algebras import Cuntz, FreeGroup, State, random_element
from .curvature import bianchi_defects, curvature_forms, structure_defects
from .forms import (TensorBicovector, d0, d1, d1_curl, d_graded, one_form, p_sym, sigma,
                    wedge, wedge_tensor)
from .gaussbonnet import gb_suite
from .hopf import (basis_pair, basis_tensor, coaction_left, coaction_right, check_covariance,
                   coproduct, random_relation)
from .levicivita import (ChristoffelSymbols, check_derivation_closure, christoffel_canonical,
                         christoffel_conformal, christoffel_general, christoffel_reduced,
                         verify_levi_civita)

__all__ = ["SUITES", "run_suite", "run_suites"]


class _Collector:
    def __init__(self):
        self.checks = []

    def add(self, name, ok, detail=""):
        self.checks.append({"name": name, "pass": bool(ok), "detail": str(detail)})

    def result(self):
        return {"pass": all(c["pass"] for c in self.checks), "checks": self.checks}


def suite_levi_civita(P, g, seed=0):
    out = _Collector()
    gamma = christoffel_canonical(g)
    report = verify_levi_civita(g, gamma, seed=seed)
    for name, ok in report.summary().items():
        bad = [r["indices"] for r in report.failures() if r["check"] == name]
        out.add(name, ok, f"failures at {bad[:5]}" if bad else "")
    out.add("general_formula_agrees", christoffel_general(g, ChristoffelSymbols.zero(P)) == gamma)
    if check_derivation_closure(g) is None:
        out.add("reduced_formula_agrees", christoffel_reduced(g) == gamma)
    if g.label.get("type") == "conformal":
        out.add("conformal_formula_agrees", christoffel_conformal(g.k, g.k_inv) == gamma)
    return out.result()


def suite_bianchi(P, g, seed=0):
    out = _Collector()
    cf = curvature_forms(christoffel_canonical(g))
    bad = structure_defects(cf.omega, cf.Omega)
    out.add("structure_equation", not bad, [(i + 1, j + 1) for i, j in bad])
    bad = bianchi_defects(cf.omega, cf.Omega)
    out.add("bianchi", not bad, [(i + 1, j + 1) for i, j in bad])
    n = P.n
    anti = all((cf.r[i][j][k][l] + cf.r[i][j][l][k]).is_zero()
               for i in range(n) for j in range(n) for k in range(n) for l in range(n))
    out.add("r_antisymmetric", anti)
    return out.result()


def _default_parameters(P):
    if P.kind == "nc-torus":
        U1, U2 = P.gen(0), P.gen(1)
        return [U1, U2, U1 * U2], [U1, U2]
    if P.kind == "free-group":
        g1, g2 = P.gen(0), P.gen(1)
        return [g1, g2, g1 * g2], []
    if P.kind == "cuntz":
        # the swap s = S1 S2* + S2 S1* is a self-inverse unitary; 2 + s has inverse (2 - s)/3
        s = P.gen(0) * P.gen_star(1) + P.gen(1) * P.gen_star(0)
        if P.n == 2:
            return [(s, s), (2 + s, (2 - s) / 3)], []
        return [], []
    return [], []


def suite_gb(P, g, seed=0):
    out = _Collector()
    if P.n != 2 or P.kind == "formal":
        out.add("skipped", True, f"Gauss-Bonnet needs a rank-two backend with a state ({P.kind}, n={P.n})")
        return out.result()
    tau = State(P)
    conformal, bad = _default_parameters(P)
    if g.label.get("type") == "conformal":
        conformal = conformal + [(g.k, g.k_inv)]
    if g.label.get("type") == "badmetric":
        bad = bad + [(g.k, g.k_inv)]
    reports = gb_suite(P, conformal, bad, tau)
    records = [r.to_json() for r in reports]
    ok = all(r.passed for r in reports)
    out.add("gauss_bonnet", ok, "" if ok else [r["metric"] for r in records if not all(c["pass"] for c in r["checks"])])
    result = out.result()
    result["reports"] = records
    return result


def suite_hopf(P, g, seed=0, instances=100):
    """Always runs on the free group with the configured rank."""
    G = P if isinstance(P, FreeGroup) else FreeGroup(P.n, P.float_mode)
    rng = random.Random(seed)
    out = _Collector()
    left_ok = all(coaction_left([basis_pair(G, i)]) == basis_tensor(G, i, "left") for i in range(G.n))
    right_ok = all(coaction_right([basis_pair(G, i)]) == basis_tensor(G, i, "right") for i in range(G.n))
    out.add("basis_left_invariant", left_ok)
    out.add("basis_right_invariant", right_ok)
    cocomm = all(coproduct(a).flip() == coproduct(a)
                 for a in (random_element(G, rng) for _ in range(20)))
    out.add("cocommutative", cocomm)
    failures = 0
    for _ in range(instances):
        res = check_covariance(random_relation(G, rng))
        failures += not (res["left"] and res["right"])
    out.add("relation_instances", failures == 0, f"{instances - failures}/{instances} covariant")
    return out.result()


def suite_algebra(P, g, seed=0, count=50):
    rng = random.Random(seed)
    out = _Collector()
    rand = lambda: random_element(P, rng)
    trip = [(rand(), rand(), rand()) for _ in range(count)]
    out.add("associativity", all((a * b) * c == a * (b * c) for a, b, c in trip))
    out.add("leibniz", all((a * b).derive(i) == a.derive(i) * b + a * b.derive(i)
                           for a, b, _ in trip for i in range(P.n)))
    out.add("star_involution", all(a.star().star() == a for a, _, _ in trip))
    out.add("star_antihomomorphism", all((a * b).star() == b.star() * a.star() for a, b, _ in trip))
    if P.kind != "formal":
        # the formal derivations are real on a self-adjoint k, so no sign flip there
        out.add("star_derivation", all(a.star().derive(i) == -(a.derive(i).star())
                                       for a, _, _ in trip for i in range(P.n)))
        tau = State(P)
        zero = P.coerce(0)
        out.add("state_kills_derivatives", all(P.coeff_close(tau(a.derive(i)), zero)
                                               for a, _, _ in trip for i in range(P.n)))
        if tau.tracial:
            out.add("trace_property", all(P.coeff_close(tau(a * b), tau(b * a)) for a, b, _ in trip))
    forms = [one_form(P, [rand() for _ in range(P.n)]) for _ in range(count // 2)]
    out.add("d_squared_zero", all(d_graded(d0(a)).is_zero() for a, _, _ in trip)
            and all(d_graded(d_graded(w)).is_zero() for w in forms))
    if P.kind != "formal":
        out.add("isometry_formula_matches_curl", all(d1(w) == d1_curl(w) for w in forms))
    tensors = [TensorBicovector(P, [[rand() for _ in range(P.n)] for _ in range(P.n)])
               for _ in range(count // 5)]
    out.add("wedge_kills_symmetric", all(wedge_tensor(p_sym(t)).is_zero() for t in tensors))
    out.add("sigma_involution", all(sigma(sigma(t)) == t for t in tensors))
    out.add("wedge_antisymmetry", all(wedge_tensor(sigma(t)) == -wedge_tensor(t) for t in tensors))
    out.add("wedge_associativity", all(wedge(wedge(u, v), w) == wedge(u, wedge(v, w))
                                       for u, v, w in zip(forms, forms[1:], forms[2:])))
    if isinstance(P, Cuntz):
        one = P.one()
        out.add("cuntz_relations", all(P.gen_star(i) * P.gen(j) == (one if i == j else P.zero())
                                       for i in range(P.n) for j in range(P.n))
                and sum((P.gen(i) * P.gen_star(i) for i in range(P.n)), P.zero()) == one)
    return out.result()


SUITES = {
    "levi-civita": suite_levi_civita,
    "bianchi": suite_bianchi,
    "gb": suite_gb,
    "hopf": suite_hopf,
    "algebra": suite_algebra,
}


def run_suite(name, P, g, seed=0):
    return SUITES[name](P, g, seed=seed)


def run_suites(names, P, g, seed=0):
    results = {name: run_suite(name, P, g, seed) for name in names}
    return {"pass": all(r["pass"] for r in results.values()), "suites": results}

