"""Curvature of a connection given by Christoffel symbols.

Conventions (0-based indices):

* ``r[i][j][k][l] = 1/2 [sum_p (G^p_jk G^i_pl - G^p_jl G^i_pk) - d_l G^i_jk + d_k G^i_jl]``,
  the sum over ``p`` covering the quadratic terms only;
* ``omega_ij = sum_k e_k G^i_jk``;
* the ``e_k ^ e_l`` coefficient of ``Omega_ij`` is ``2 r^i_jkl``;
* ``Ric_jl = 2 sum_k r^k_jkl`` and ``Scal = sum_jl g_jl Ric_jl``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .forms import GradedForm, Metric, d_graded, wedge
from .levicivita import ChristoffelSymbols, christoffel_canonical

__all__ = [
    "curvature_components", "connection_forms", "curvature_forms", "CurvatureForms",
    "check_structure_equation", "check_bianchi", "RicciScalar", "ricci_scalar",
    "contraction_candidates", "pairing_search",
]


def curvature_components(gamma: ChristoffelSymbols):
    """The n^4 array ``r[i][j][k][l]``; antisymmetric in ``k, l``."""
    P, n = gamma.presentation, gamma.n
    zero = P.zero()
    r = [[[[zero] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i, j, k in product(range(n), repeat=3):
        for l in range(k + 1, n):
            acc = zero
            for p in range(n):
                acc = acc + gamma[p, j, k] * gamma[i, p, l] - gamma[p, j, l] * gamma[i, p, k]
            acc = acc - gamma[i, j, k].derive(l) + gamma[i, j, l].derive(k)
            acc = acc / 2
            r[i][j][k][l] = acc
            r[i][j][l][k] = -acc
    return r


def connection_forms(gamma: ChristoffelSymbols):
    P, n = gamma.presentation, gamma.n
    return [[GradedForm(P, 1, {(k,): gamma[i, j, k] for k in range(n)}) for j in range(n)]
            for i in range(n)]


@dataclass
class CurvatureForms:
    omega: list      # connection 1-forms
    Omega: list      # curvature 2-forms
    r: list          # raw components

    def to_json(self):
        n = len(self.omega)
        return {
            "omega": [[str(self.omega[i][j]) for j in range(n)] for i in range(n)],
            "Omega": [[str(self.Omega[i][j]) for j in range(n)] for i in range(n)],
        }


def curvature_forms(gamma: ChristoffelSymbols) -> CurvatureForms:
    P, n = gamma.presentation, gamma.n
    r = curvature_components(gamma)
    Omega = [[GradedForm(P, 2, {(k, l): r[i][j][k][l] * 2 for k in range(n) for l in range(k + 1, n)})
              for j in range(n)] for i in range(n)]
    return CurvatureForms(connection_forms(gamma), Omega, r)


def structure_defects(omega, Omega):
    """Pairs ``(i, j)`` where ``Omega_ij != d omega_ij + sum_p omega_pj ^ omega_ip``."""
    n = len(omega)
    bad = []
    for i in range(n):
        for j in range(n):
            rhs = d_graded(omega[i][j])
            for p in range(n):
                rhs = rhs + wedge(omega[p][j], omega[i][p])
            if rhs != Omega[i][j]:
                bad.append((i, j))
    return bad


def check_structure_equation(omega, Omega) -> bool:
    return not structure_defects(omega, Omega)


def bianchi_defects(omega, Omega):
    """Pairs where ``d Omega_ij != sum_p (Omega_pj ^ omega_ip - omega_pj ^ Omega_ip)``."""
    n = len(omega)
    bad = []
    for i in range(n):
        for j in range(n):
            lhs = d_graded(Omega[i][j])
            rhs = GradedForm.zero(lhs.presentation, 3)
            for p in range(n):
                rhs = rhs + wedge(Omega[p][j], omega[i][p]) - wedge(omega[p][j], Omega[i][p])
            if lhs != rhs:
                bad.append((i, j))
    return bad


def check_bianchi(omega, Omega) -> bool:
    return not bianchi_defects(omega, Omega)


@dataclass
class RicciScalar:
    Ric: list
    Scal: object

    @property
    def K(self):
        return self.Scal / 2

    def to_json(self):
        return {"ric": [[str(x) for x in row] for row in self.Ric], "scal": str(self.Scal)}


def ricci_scalar(g: Metric, gamma: ChristoffelSymbols = None, r=None) -> RicciScalar:
    if gamma is None:
        gamma = christoffel_canonical(g)
    if r is None:
        r = curvature_components(gamma)
    P, n = g.presentation, g.n
    Ric = [[sum((r[k][j][k][l] for k in range(n)), P.zero()) * 2 for l in range(n)] for j in range(n)]
    scal = P.zero()
    for j in range(n):
        for l in range(n):
            if not g.G[j][l].is_zero():
                scal = scal + g.G[j][l] * Ric[j][l]
    return RicciScalar(Ric, scal)


# -- contraction conventions ---------------------------------------------------

_SLOTS = {"j": lambda r, k, a, b: r[k][k][a][b],     # r^k_{k a b}
          "k": lambda r, k, a, b: r[k][a][k][b],     # r^k_{a k b}
          "l": lambda r, k, a, b: r[k][a][b][k]}     # r^k_{a b k}


def contraction_candidates():
    """All pairings: contracted slot, metric or inverse, side, overall sign."""
    for slot, metric, side, sign in product("jkl", ("g", "ginv"), ("left", "right"), (1, -1)):
        yield {"slot": slot, "metric": metric, "side": side, "sign": sign}


def contract(g: Metric, r, cand) -> object:
    P, n = g.presentation, g.n
    M = g.G if cand["metric"] == "g" else g.inverse
    pick = _SLOTS[cand["slot"]]
    scal = P.zero()
    for a in range(n):
        for b in range(n):
            ric = sum((pick(r, k, a, b) for k in range(n)), P.zero()) * (2 * cand["sign"])
            if M[a][b].is_zero():
                continue
            scal = scal + (M[a][b] * ric if cand["side"] == "left" else ric * M[a][b])
    return scal


def pairing_search(cases):
    """Candidates reproducing every ``(metric, expected Scal)`` case exactly."""
    prepared = [(g, curvature_components(christoffel_canonical(g)), want) for g, want in cases]
    return [c for c in contraction_candidates()
            if all(contract(g, r, c) == want for g, r, want in prepared)]
