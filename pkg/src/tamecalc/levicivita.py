"""Christoffel symbols of the Levi-Civita connection and their verification.

``gamma[i][j][k]`` is ``Gamma^i_{jk}`` with ``nabla(e_i) = sum_{j,k} e_j (x) e_k Gamma^i_{jk}``.
All indices are 0-based here and 1-based in printed output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebras import AlgebraElement, invert, random_word
from .errors import DerivationClosureViolated
from .forms import GradedForm, Metric, TensorBicovector, d0, metric_apply

__all__ = [
    "ChristoffelSymbols", "christoffel_canonical", "christoffel_general",
    "christoffel_reduced", "christoffel_conformal", "pi_g", "pi_g_basis",
    "LCReport", "verify_levi_civita", "sample_elements",
]


class ChristoffelSymbols:
    """Immutable n x n x n array of algebra elements."""

    __slots__ = ("presentation", "n", "gamma")

    def __init__(self, presentation, gamma):
        self.presentation = presentation
        self.n = presentation.n
        self.gamma = tuple(tuple(tuple(row) for row in plane) for plane in gamma)
        n = self.n
        if len(self.gamma) != n or any(len(p) != n or any(len(r) != n for r in p) for p in self.gamma):
            raise ValueError("Christoffel array must be n x n x n")

    @classmethod
    def zero(cls, P):
        z = P.zero()
        return cls(P, [[[z] * P.n for _ in range(P.n)] for _ in range(P.n)])

    @classmethod
    def from_function(cls, P, f):
        r = range(P.n)
        return cls(P, [[[f(i, j, k) for k in r] for j in r] for i in r])

    def __getitem__(self, idx):
        i, j, k = idx
        return self.gamma[i][j][k]

    def entries(self):
        n = self.n
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    yield (i, j, k), self.gamma[i][j][k]

    def is_zero(self) -> bool:
        return all(x.is_zero() for _, x in self.entries())

    def is_torsion_free(self) -> bool:
        return all(self.gamma[i][j][k] == self.gamma[i][k][j] for (i, j, k), _ in self.entries())

    def diff(self, other):
        """Index triples where the two arrays disagree."""
        return [idx for idx, x in self.entries() if x != other[idx]]

    def __eq__(self, other):
        if not isinstance(other, ChristoffelSymbols):
            return NotImplemented
        return self.presentation == other.presentation and not self.diff(other)

    __hash__ = None

    def to_json(self):
        """``{"G^1_12": "expr"}`` for nonzero entries."""
        return {f"G^{i + 1}_{j + 1}{k + 1}": str(x) for (i, j, k), x in self.entries() if not x.is_zero()}

    def __repr__(self):
        return f"ChristoffelSymbols({self.to_json()})"


def christoffel_canonical(g: Metric) -> ChristoffelSymbols:
    """Levi-Civita symbols for the calculus with ``d(e_i) = 0``.

    ``Gamma^p_{ml} = 1/2 (sum_j g^{lj} d_m(g_pj) + sum_i g^{mi} d_l(g_ip)
    - sum_{ijn} g_pn g^{li} g^{mj} d_n(g_ij))`` with the factors kept in this order.
    """
    n, P = g.n, g.presentation
    G, Ginv = g.G, g.inverse
    dG = [[[G[i][j].derive(m) for j in range(n)] for i in range(n)] for m in range(n)]
    # sum_{ij} g^{li} g^{mj} d_n(g_ij), shared across p
    inner = {}
    for l in range(n):
        for m in range(n):
            for q in range(n):
                acc = P.zero()
                for i in range(n):
                    if Ginv[l][i].is_zero():
                        continue
                    for j in range(n):
                        if Ginv[m][j].is_zero() or dG[q][i][j].is_zero():
                            continue
                        acc = acc + Ginv[l][i] * Ginv[m][j] * dG[q][i][j]
                inner[l, m, q] = acc

    def entry(p, m, l):
        acc = P.zero()
        for j in range(n):
            acc = acc + Ginv[l][j] * dG[m][p][j]
        for i in range(n):
            acc = acc + Ginv[m][i] * dG[l][i][p]
        for q in range(n):
            if not G[p][q].is_zero():
                acc = acc - G[p][q] * inner[l, m, q]
        return acc / 2

    return ChristoffelSymbols.from_function(P, entry)


def christoffel_general(g: Metric, gamma0: ChristoffelSymbols) -> ChristoffelSymbols:
    """Levi-Civita symbols relative to a torsionless reference connection ``gamma0``.

    Adds the three groups of ``gamma0`` antisymmetric parts to the canonical
    expression.  They vanish when ``gamma0`` is symmetric in its lower indices.
    """
    n, P = g.n, g.presentation
    G, Ginv = g.G, g.inverse
    base = christoffel_canonical(g)
    anti = [[[gamma0[i, a, b] - gamma0[i, b, a] for b in range(n)] for a in range(n)] for i in range(n)]

    def entry(p, m, l):
        acc = base[p, m, l] + anti[p][m][l] / 2
        for i in range(n):
            for q in range(n):
                if G[p][q].is_zero():
                    continue
                acc = acc + G[p][q] * Ginv[m][i] * anti[i][l][q] / 2
                acc = acc + G[p][q] * Ginv[l][i] * anti[i][m][q] / 2
        return acc

    return ChristoffelSymbols.from_function(P, entry)


def _closure_witnesses(g: Metric):
    n = g.n
    items = []
    for i in range(n):
        for j in range(i, n):
            items.append((f"g{i + 1}{j + 1}", g.G[i][j]))
            items.append((f"g^{i + 1}{j + 1}", g.inverse[i][j]))
            for m in range(n):
                items.append((f"d{m + 1}(g{i + 1}{j + 1})", g.G[i][j].derive(m)))
                items.append((f"d{m + 1}(g^{i + 1}{j + 1})", g.inverse[i][j].derive(m)))
    seen = []
    for name, x in items:
        if not x.is_zero() and all(x != y for _, y in seen):
            seen.append((name, x))
    return seen


def check_derivation_closure(g: Metric):
    """Return ``None`` or the first pair of non-commuting witnesses.

    The reduced formula needs ``g_ij``, ``g^{ij}`` and all their first
    derivatives to commute pairwise; this is the operational test.
    """
    seen = _closure_witnesses(g)
    for a in range(len(seen)):
        for b in range(a + 1, len(seen)):
            if not seen[a][1].commutes_with(seen[b][1]):
                return seen[a][0], seen[b][0]
    return None


def christoffel_reduced(g: Metric) -> ChristoffelSymbols:
    """``Gamma^p_{ml} = -1/2 sum_n g_pn (d_m(g^{ln}) + d_l(g^{mn}) - d_n(g^{ml}))``."""
    bad = check_derivation_closure(g)
    if bad is not None:
        raise DerivationClosureViolated(f"{bad[0]} and {bad[1]} do not commute")
    n, P = g.n, g.presentation
    G, Ginv = g.G, g.inverse
    dinv = [[[Ginv[a][b].derive(m) for b in range(n)] for a in range(n)] for m in range(n)]

    def entry(p, m, l):
        acc = P.zero()
        for q in range(n):
            if G[p][q].is_zero():
                continue
            acc = acc + G[p][q] * (dinv[m][l][q] + dinv[l][m][q] - dinv[q][m][l])
        return -acc / 2

    return ChristoffelSymbols.from_function(P, entry)


def christoffel_conformal(k: AlgebraElement, k_inv: AlgebraElement = None) -> ChristoffelSymbols:
    """Closed form for ``k g0``:
    ``Gamma^i_{jl} = 1/2 (delta_il k^-1 d_j k + delta_ij k^-1 d_l k - delta_jl k^-1 d_i k)``.
    """
    P = k.presentation
    kinv = invert(k, None if k_inv is None else {k: k_inv})
    h = [kinv * k.derive(i) for i in range(P.n)]
    z = P.zero()

    def entry(i, j, l):
        acc = z
        if i == l:
            acc = acc + h[j]
        if i == j:
            acc = acc + h[l]
        if j == l:
            acc = acc - h[i]
        return acc / 2

    return ChristoffelSymbols.from_function(P, entry)


def pi_g_basis(g: Metric, gamma: ChristoffelSymbols, i: int, j: int) -> GradedForm:
    """``Pi^0_g(nabla)(e_i (x) e_j) = sum_l e_l sum_k (g_kj Gamma^i_{kl} + g_ki Gamma^j_{kl})``."""
    P, n = g.presentation, g.n
    terms = {}
    for l in range(n):
        acc = P.zero()
        for k in range(n):
            acc = acc + g.G[k][j] * gamma[i, k, l] + g.G[k][i] * gamma[j, k, l]
        terms[(l,)] = acc
    return GradedForm(P, 1, terms)


def pi_g(g: Metric, gamma: ChristoffelSymbols, t: TensorBicovector) -> GradedForm:
    """``Pi_g(nabla)(sum e_i (x) e_j t_ij) = sum Pi^0(e_i (x) e_j) t_ij + g_ij d(t_ij)``."""
    P, n = g.presentation, g.n
    acc = GradedForm.zero(P, 1)
    for i in range(n):
        for j in range(n):
            a = t.t[i][j]
            if a.is_zero():
                continue
            acc = acc + pi_g_basis(g, gamma, i, j) * a + g.G[i][j] * d0(a)
    return acc


def sample_elements(P, rng: random.Random, count: int = 50, length: int = 3):
    """Seeded random monomials plus the generators (``k``, ``k^-1`` on the formal backend)."""
    out = []
    if P.kind == "formal":
        out += [P.k(), P.k_inv()]
    else:
        out += [P.gen(i) for i in range(P.n)] + [P.gen_star(i) for i in range(P.n)]
    for _ in range(count):
        out.append(P.monomial(random_word(P, rng, length)))
    return out


@dataclass
class LCReport:
    records: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.records)

    def failures(self):
        return [r for r in self.records if not r["pass"]]

    def add(self, check, indices, ok, lhs, rhs):
        self.records.append({"check": check, "indices": [x + 1 for x in indices], "pass": bool(ok),
                             "lhs": str(lhs), "rhs": str(rhs)})

    def summary(self) -> dict:
        checks = sorted({r["check"] for r in self.records})
        return {c: all(r["pass"] for r in self.records if r["check"] == c) for c in checks}


def verify_levi_civita(g: Metric, gamma: ChristoffelSymbols, samples=None, seed: int = 0,
                       count: int = 50) -> LCReport:
    """Torsion symmetry, metric compatibility and the ``Pi_g = d o g`` identity on samples."""
    P, n = g.presentation, g.n
    report = LCReport()
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                a, b = gamma[i, j, k], gamma[i, k, j]
                report.add("torsion", (i, j, k), a == b, a, b)
    for i in range(n):
        for j in range(n):
            form = pi_g_basis(g, gamma, i, j)
            for l in range(n):
                lhs, rhs = form.coefficient((l,)), g.G[i][j].derive(l)
                report.add("compatibility", (i, j, l), lhs == rhs, lhs, rhs)
    if samples is None:
        samples = sample_elements(P, random.Random(seed), count)
    for i in range(n):
        for j in range(n):
            for a in samples:
                t = TensorBicovector.basis(P, i, j, a)
                lhs = pi_g(g, gamma, t)
                rhs = d0(metric_apply(g, t))
                report.add("pi_g", (i, j), lhs == rhs, lhs, rhs)
    return report
