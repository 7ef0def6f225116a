"""Differential forms on the free module with central basis ``e_1..e_n``.

A p-form is stored as ``{I: a_I}`` meaning ``sum_I e_I a_I`` with ``I`` a
strictly increasing index tuple.  Since the ``e_i`` are central the product
of forms only needs the sign of the index shuffle.  Degrees above two use
the Grassmann model over the central basis.
"""

from __future__ import annotations

from .algebras import AlgebraElement, Presentation, invert
from .errors import (NotInvertible, NotStronglySigmaCompatible, NotSymmetric,
                     PresentationMismatch)

__all__ = [
    "GradedForm", "TensorBicovector", "Metric",
    "basis_form", "one_form", "d0", "d1", "d1_curl", "d_graded", "wedge",
    "sigma", "p_sym", "wedge_tensor", "metric_build", "metric_apply",
]


def _merge_sign(I, J):
    """Sign of the shuffle sorting ``I + J``, or 0 when they overlap."""
    inversions = 0
    for i in I:
        for j in J:
            if i == j:
                return 0
            if i > j:
                inversions += 1
    return -1 if inversions % 2 else 1


def _perm_sign(seq):
    seq = list(seq)
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] == seq[b]:
                return 0
            if seq[a] > seq[b]:
                sign = -sign
    return sign


class GradedForm:
    """Degree-``degree`` form ``sum_I e_I a_I`` with coefficients on the right."""

    __slots__ = ("presentation", "degree", "terms")

    def __init__(self, presentation: Presentation, degree: int, terms=None):
        self.presentation = presentation
        self.degree = degree
        clean = {}
        for I, a in (terms or {}).items():
            I = tuple(I)
            if len(I) != degree or any(x >= y for x, y in zip(I, I[1:])):
                raise ValueError(f"multi-index {I} is not strictly increasing of length {degree}")
            if not 0 <= min(I, default=0) or max(I, default=-1) >= presentation.n:
                raise IndexError(f"multi-index {I} out of range")
            if a.presentation != presentation:
                raise PresentationMismatch("coefficient from another algebra")
            if not a.is_zero():
                clean[I] = a
        self.terms = clean

    @classmethod
    def zero(cls, P, degree):
        return cls(P, degree, {})

    def coefficient(self, I) -> AlgebraElement:
        return self.terms.get(tuple(I), self.presentation.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if not isinstance(other, GradedForm):
            raise TypeError(f"expected a form, got {type(other).__name__}")
        if other.presentation != self.presentation:
            raise PresentationMismatch("forms over different algebras")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for I, a in other.terms.items():
            acc[I] = acc[I] + a if I in acc else a
        return GradedForm(self.presentation, self.degree, acc)

    def __neg__(self):
        return GradedForm(self.presentation, self.degree, {I: -a for I, a in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, a):
        """Right multiplication by an algebra element or scalar."""
        if isinstance(a, GradedForm):
            return NotImplemented
        return GradedForm(self.presentation, self.degree, {I: c * a for I, c in self.terms.items()})

    def __rmul__(self, a):
        # the basis is central: a e_I c = e_I (a c)
        return GradedForm(self.presentation, self.degree, {I: a * c for I, c in self.terms.items()})

    def __xor__(self, other):
        return wedge(self, other)

    def wedge(self, other):
        return wedge(self, other)

    def d(self):
        return d_graded(self)

    def __eq__(self, other):
        if not isinstance(other, GradedForm):
            return NotImplemented
        if other.presentation != self.presentation or other.degree != self.degree:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(I) == other.coefficient(I) for I in keys)

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        if self.degree == 0:
            return str(self.terms[()])
        parts = []
        for I in sorted(self.terms):
            basis = "^".join(f"e{i + 1}" for i in I)
            parts.append(f"{basis}*({self.terms[I]})")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self.degree}-form {self}>"

    def to_json(self):
        """``{"e1^e2": "expr", ...}`` with sorted keys."""
        return {"^".join(f"e{i + 1}" for i in I) or "1": str(a) for I, a in sorted(self.terms.items())}


def basis_form(P: Presentation, *indices, coeff=None) -> GradedForm:
    """``e_{i1} ^ ... ^ e_{ip} * coeff`` for indices in any order."""
    coeff = P.one() if coeff is None else coeff
    if not isinstance(coeff, AlgebraElement):
        coeff = P.scalar(coeff)
    s = _perm_sign(indices)
    if s == 0:
        return GradedForm.zero(P, len(indices))
    return GradedForm(P, len(indices), {tuple(sorted(indices)): coeff if s > 0 else -coeff})


def one_form(P: Presentation, coeffs) -> GradedForm:
    """``sum_i e_i a_i`` from a list of n coefficients."""
    return GradedForm(P, 1, {(i,): a for i, a in enumerate(coeffs)})


def wedge(omega: GradedForm, eta: GradedForm) -> GradedForm:
    if omega.presentation != eta.presentation:
        raise PresentationMismatch("forms over different algebras")
    P = omega.presentation
    degree = omega.degree + eta.degree
    acc = {}
    if degree > P.n:
        return GradedForm.zero(P, degree)
    for I, a in omega.terms.items():
        for J, b in eta.terms.items():
            s = _merge_sign(I, J)
            if not s:
                continue
            K = tuple(sorted(I + J))
            ab = a * b
            if s < 0:
                ab = -ab
            acc[K] = acc[K] + ab if K in acc else ab
    return GradedForm(P, degree, acc)


def d0(a: AlgebraElement) -> GradedForm:
    """``da = sum_i e_i d_i(a)``."""
    P = a.presentation
    return GradedForm(P, 1, {(i,): a.derive(i) for i in range(P.n)})


def d1(omega: GradedForm) -> GradedForm:
    """Exterior derivative on 1-forms through the isometries ``S_i``.

    ``d(sum e_i a_i) = sum_{p<q} e_p^e_q sum_i (d_p(a_i S_i*) d_q(S_i) - d_q(a_i S_i*) d_p(S_i))``
    """
    if omega.degree != 1:
        raise ValueError("d1 takes a 1-form")
    P = omega.presentation
    S = [P.gen(i) for i in range(P.n)]
    Sstar = [P.gen_star(i) for i in range(P.n)]
    dS = [[S[i].derive(p) for i in range(P.n)] for p in range(P.n)]
    acc = {}
    for (i,), a in omega.terms.items():
        aS = a * Sstar[i]
        daS = [aS.derive(p) for p in range(P.n)]
        for p in range(P.n):
            for q in range(p + 1, P.n):
                c = daS[p] * dS[q][i] - daS[q] * dS[p][i]
                if not c.is_zero():
                    acc[(p, q)] = acc[(p, q)] + c if (p, q) in acc else c
    return GradedForm(P, 2, acc)


def d1_curl(omega: GradedForm) -> GradedForm:
    """``sum_{p<q} e_p^e_q (d_p(a_q) - d_q(a_p))``."""
    P = omega.presentation
    a = [omega.coefficient((i,)) for i in range(P.n)]
    return GradedForm(P, 2, {(p, q): a[q].derive(p) - a[p].derive(q)
                             for p in range(P.n) for q in range(p + 1, P.n)})


def d_graded(theta: GradedForm) -> GradedForm:
    """``d(e_I a) = (-1)^p e_I ^ da`` on the Grassmann model."""
    P = theta.presentation
    p = theta.degree
    acc = {}
    for I, a in theta.terms.items():
        for i in range(P.n):
            s = _merge_sign(I, (i,))
            if not s:
                continue
            c = a.derive(i)
            if c.is_zero():
                continue
            if (s < 0) != (p % 2 == 1):
                c = -c
            K = tuple(sorted(I + (i,)))
            acc[K] = acc[K] + c if K in acc else c
    return GradedForm(P, p + 1, acc)


class TensorBicovector:
    """``sum_ij e_i (x) e_j t_ij`` in Omega^1 (x)_A Omega^1."""

    __slots__ = ("presentation", "t")

    def __init__(self, presentation: Presentation, t):
        n = presentation.n
        t = tuple(tuple(row) for row in t)
        if len(t) != n or any(len(r) != n for r in t):
            raise ValueError("tensor needs an n x n coefficient array")
        self.presentation = presentation
        self.t = t

    @classmethod
    def from_forms(cls, omega: GradedForm, eta: GradedForm):
        """``omega (x) eta`` for two 1-forms."""
        P = omega.presentation
        a = [omega.coefficient((i,)) for i in range(P.n)]
        b = [eta.coefficient((j,)) for j in range(P.n)]
        return cls(P, [[a[i] * b[j] for j in range(P.n)] for i in range(P.n)])

    @classmethod
    def basis(cls, P, i, j, a=None):
        a = P.one() if a is None else a
        z = P.zero()
        return cls(P, [[a if (r, s) == (i, j) else z for s in range(P.n)] for r in range(P.n)])

    def __add__(self, other):
        n = self.presentation.n
        return TensorBicovector(self.presentation,
                                [[self.t[i][j] + other.t[i][j] for j in range(n)] for i in range(n)])

    def __mul__(self, a):
        return TensorBicovector(self.presentation, [[x * a for x in row] for row in self.t])

    def __eq__(self, other):
        if not isinstance(other, TensorBicovector):
            return NotImplemented
        return self.presentation == other.presentation and self.t == other.t

    __hash__ = None

    def __repr__(self):
        return f"TensorBicovector({[[str(x) for x in row] for row in self.t]})"


def sigma(t: TensorBicovector) -> TensorBicovector:
    """Flip on the central basis: ``e_i (x) e_j a -> e_j (x) e_i a``."""
    n = t.presentation.n
    return TensorBicovector(t.presentation, [[t.t[j][i] for j in range(n)] for i in range(n)])


def p_sym(t: TensorBicovector) -> TensorBicovector:
    n = t.presentation.n
    return TensorBicovector(t.presentation,
                            [[(t.t[i][j] + t.t[j][i]) / 2 for j in range(n)] for i in range(n)])


def wedge_tensor(t: TensorBicovector) -> GradedForm:
    P = t.presentation
    return GradedForm(P, 2, {(i, j): t.t[i][j] - t.t[j][i]
                             for i in range(P.n) for j in range(i + 1, P.n)})


def _det(M):
    """Determinant by cofactor expansion; entries must commute."""
    n = len(M)
    if n == 1:
        return M[0][0]
    total = None
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else M[0][0].presentation.zero()


class Metric:
    """Strongly sigma-compatible metric given by its matrix ``G = (g(e_i (x) e_j))``.

    Construction checks symmetry, pairwise commutation of the entries and
    invertibility of ``det(G)``; the inverse matrix ``g^{ij}`` is the adjugate
    times ``det(G)^-1``.
    """

    def __init__(self, G, certified=None, label=None):
        G = tuple(tuple(row) for row in G)
        n = len(G)
        if n == 0 or any(len(r) != n for r in G):
            raise ValueError("metric matrix must be square")
        P = G[0][0].presentation
        if P.n != n:
            raise ValueError(f"metric is {n}x{n} but the algebra has rank {P.n}")
        for row in G:
            for x in row:
                if x.presentation != P:
                    raise PresentationMismatch("metric entries from different algebras")
        self.presentation = P
        self.n = n
        self.G = G
        self.label = label or {"type": "matrix"}

        bad = [(i, j) for i in range(n) for j in range(i + 1, n) if G[i][j] != G[j][i]]
        if bad:
            raise NotSymmetric("metric matrix is not symmetric",
                               [f"g{i + 1}{j + 1}" for i, j in bad])
        distinct = []
        for i in range(n):
            for j in range(i, n):
                if all(G[i][j] != e for _, e in distinct):
                    distinct.append(((i, j), G[i][j]))
        for a in range(len(distinct)):
            for b in range(a + 1, len(distinct)):
                (ia, x), (ib, y) = distinct[a], distinct[b]
                if not x.commutes_with(y):
                    raise NotStronglySigmaCompatible(
                        "metric entries do not commute",
                        [f"g{ia[0] + 1}{ia[1] + 1}", f"g{ib[0] + 1}{ib[1] + 1}"])

        self.det = _det([list(r) for r in G])
        self.adj = tuple(
            tuple(self._cofactor(j, i) for j in range(n)) for i in range(n))
        try:
            self.det_inverse = invert(self.det, certified)
        except NotInvertible as exc:
            raise NotInvertible(f"det(G) = {self.det} is not certified invertible", ["det"]) from exc
        self.inverse = tuple(tuple(self.adj[i][j] * self.det_inverse for j in range(n))
                             for i in range(n))
        one, zero = P.one(), P.zero()
        for i in range(n):
            for k in range(n):
                s = zero
                for j in range(n):
                    s = s + self.inverse[i][j] * G[j][k]
                if s != (one if i == k else zero):
                    raise NotInvertible("adjugate inverse check failed", [f"g^{i + 1}{k + 1}"])

    def _cofactor(self, i, j):
        n = self.n
        if n == 1:
            return self.presentation.one()
        minor = [[self.G[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
        c = _det(minor)
        return -c if (i + j) % 2 else c

    # -- constructors -------------------------------------------------------

    @classmethod
    def g0(cls, P: Presentation):
        one, zero = P.one(), P.zero()
        return cls([[one if i == j else zero for j in range(P.n)] for i in range(P.n)],
                   label={"type": "g0"})

    @classmethod
    def diagonal(cls, entries, inverses=None, label=None):
        entries = list(entries)
        P = entries[0].presentation
        n = len(entries)
        zero = P.zero()
        G = [[entries[i] if i == j else zero for j in range(n)] for i in range(n)]
        certified = None
        if inverses is not None:
            det, det_inv = P.one(), P.one()
            for x, y in zip(entries, inverses):
                det, det_inv = det * x, det_inv * y
            certified = {det: det_inv}
            for x, y in zip(entries, inverses):
                certified.setdefault(x, y)
        return cls(G, certified=certified,
                   label=label or {"type": "diagonal", "entries": [str(x) for x in entries]})

    @classmethod
    def conformal(cls, k: AlgebraElement, k_inv: AlgebraElement = None):
        """``k g0``; ``k_inv`` is required unless ``k`` is a scalar times an invertible word."""
        P = k.presentation
        if k_inv is None:
            k_inv = invert(k)
        m = cls.diagonal([k] * P.n, [k_inv] * P.n, label={"type": "conformal", "k": str(k)})
        m.k, m.k_inv = k, invert(k, {k: k_inv})
        return m

    @classmethod
    def badmetric(cls, k: AlgebraElement, k_inv: AlgebraElement = None):
        """``g(sum e_i (x) e_j a_ij) = k a_11 + sum_{i>=2} a_ii``."""
        P = k.presentation
        if k_inv is None:
            k_inv = invert(k)
        entries = [k] + [P.one()] * (P.n - 1)
        invs = [k_inv] + [P.one()] * (P.n - 1)
        m = cls.diagonal(entries, invs, label={"type": "badmetric", "k": str(k)})
        m.k, m.k_inv = k, invert(k, {k: k_inv})
        return m

    # -- evaluation ---------------------------------------------------------

    def __call__(self, t: TensorBicovector) -> AlgebraElement:
        return metric_apply(self, t)

    def entry(self, i, j) -> AlgebraElement:
        return self.G[i][j]

    def describe(self) -> dict:
        return dict(self.label)

    def algebra_elements(self):
        """Entries of ``G`` and ``G^-1`` (generators of the commutative algebra A_G)."""
        return [x for row in self.G for x in row] + [x for row in self.inverse for x in row]


def metric_build(G, certified=None) -> Metric:
    return Metric(G, certified)


def metric_apply(g: Metric, t: TensorBicovector) -> AlgebraElement:
    """``g(sum e_i (x) e_j t_ij) = sum g_ij t_ij``."""
    P = g.presentation
    acc = P.zero()
    for i in range(g.n):
        for j in range(g.n):
            if not g.G[i][j].is_zero() and not t.t[i][j].is_zero():
                acc = acc + g.G[i][j] * t.t[i][j]
    return acc

