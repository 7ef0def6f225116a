"""Rank-two integration and Gauss-Bonnet checks.

On a rank-two calculus every 2-form is ``e_1 ^ e_2 a`` for a unique ``a``
and ``int_tau theta = tau(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import AlgebraElement, State, invert
from .curvature import curvature_forms, ricci_scalar
from .errors import MetricError, PositivityNotCertified, WrongRank
from .forms import GradedForm, Metric
from .levicivita import christoffel_canonical
from .scalars import Scalar

__all__ = [
    "integrate_two_form", "gauss_bonnet_form", "surface_integral_K",
    "GBReport", "gb_suite", "badmetric_omega_closed_form",
]


def _need_rank_two(P):
    if P.n != 2:
        raise WrongRank(f"integration of 2-forms needs n = 2, got n = {P.n}")


def integrate_two_form(theta: GradedForm, tau: State = None):
    P = theta.presentation
    _need_rank_two(P)
    if theta.degree != 2:
        raise WrongRank(f"expected a 2-form, got degree {theta.degree}")
    tau = tau or State(P)
    return tau(theta.coefficient((0, 1)))


def gauss_bonnet_form(g: Metric, gamma=None) -> GradedForm:
    """``Omega_12`` of the Levi-Civita connection of ``g``."""
    _need_rank_two(g.presentation)
    gamma = gamma or christoffel_canonical(g)
    return curvature_forms(gamma).Omega[0][1]


def badmetric_omega_closed_form(k: AlgebraElement, k_inv: AlgebraElement = None) -> GradedForm:
    """``e_1 ^ e_2 (1/4 h h - 1/2 d_2(h))`` with ``h = k^-1 d_2(k)``."""
    kinv = invert(k, None if k_inv is None else {k: k_inv})
    h = kinv * k.derive(1)
    return GradedForm(k.presentation, 2, {(0, 1): h * h / 4 - h.derive(1) / 2})


def _certified_positive(k: AlgebraElement) -> bool:
    if not k.is_scalar():
        return False
    c = k.scalar_value()
    if isinstance(c, Scalar):
        return c.is_rational() and c.as_fraction() > 0
    if isinstance(c, (int, Fraction, float)):
        return c > 0
    return abs(c.imag) < 1e-12 and c.real > 0


def surface_integral_K(g: Metric, tau: State = None, positive: bool = False):
    """``(tau(K k^-1), tau(k^-1 K))`` for a conformal metric ``k g0``.

    ``|k^-1|`` is taken to be ``k^-1``, which needs ``k`` positive: positive
    rational scalars are accepted, anything else requires ``positive=True``.
    """
    P = g.presentation
    _need_rank_two(P)
    k = getattr(g, "k", None)
    if k is None or g.label.get("type") != "conformal":
        raise PositivityNotCertified("surface integrals are defined for conformal metrics only")
    if not positive and not _certified_positive(k):
        raise PositivityNotCertified(f"cannot certify that k = {k} is positive")
    tau = tau or State(P)
    K = ricci_scalar(g).K
    return tau(K * g.k_inv), tau(g.k_inv * K)


@dataclass
class GBReport:
    metric: dict
    integral: object = None
    checks: list = field(default_factory=list)

    def check(self, name, ok, detail=""):
        self.checks.append({"name": name, "pass": bool(ok), "detail": detail})

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self):
        return {"metric": self.metric,
                "integral": None if self.integral is None else _fmt(self.integral),
                "checks": self.checks}


def _fmt(x):
    if isinstance(x, complex):
        return f"{x.real:.12g}" if abs(x.imag) < 1e-12 else f"{x.real:.12g}{x.imag:+.12g}*i"
    return str(x)


def _is_zero(x):
    return abs(x) < 1e-9 if isinstance(x, (complex, float)) else x == 0


def _pair(item):
    if isinstance(item, AlgebraElement):
        return item, None
    k, k_inv = item
    return k, k_inv


def _conformal_item(k, k_inv, tau):
    report = GBReport({"type": "conformal", "k": str(k)})
    try:
        g = Metric.conformal(k, k_inv)
    except MetricError as exc:
        report.check("metric", False, f"{type(exc).__name__}: {exc}")
        return report, None
    cf = curvature_forms(christoffel_canonical(g))
    omega12 = cf.Omega[0][1]
    report.integral = integrate_two_form(omega12, tau)
    report.check("antisymmetry", omega12 == -cf.Omega[1][0])
    scal = ricci_scalar(g, r=cf.r).Scal
    report.check("closed_form", omega12.coefficient((0, 1)) == g.k_inv * scal / 2)
    report.check("integral_zero", _is_zero(report.integral), _fmt(report.integral))
    return report, report.integral


def gb_suite(P, params, badmetric_params=(), tau: State = None):
    """Reports for conformal ``k g0`` (each ``k`` or ``(k, k_inv)``), every ordered
    pair product, and the badmetric family (values reported, not asserted)."""
    _need_rank_two(P)
    tau = tau or State(P)
    reports = []
    values = []
    for item in params:
        k, k_inv = _pair(item)
        report, value = _conformal_item(k, k_inv, tau)
        reports.append(report)
        values.append((k, k_inv, value))
    for k1, i1, v1 in values:
        for k2, i2, v2 in values:
            if v1 is None or v2 is None:
                continue
            inv = None
            if i1 is not None or i2 is not None:
                inv = (i2 if i2 is not None else invert(k2)) * (i1 if i1 is not None else invert(k1))
            report, v12 = _conformal_item(k1 * k2, inv, tau)
            report.metric = {"type": "additivity", "k1": str(k1), "k2": str(k2)}
            if v12 is not None:
                report.check("additivity", _is_zero(v12 - v1 - v2),
                             f"{_fmt(v12)} = {_fmt(v1)} + {_fmt(v2)}")
            reports.append(report)
    for item in badmetric_params:
        k, k_inv = _pair(item)
        report = GBReport({"type": "badmetric", "k": str(k)})
        try:
            g = Metric.badmetric(k, k_inv)
        except MetricError as exc:
            report.check("metric", False, f"{type(exc).__name__}: {exc}")
            reports.append(report)
            continue
        cf = curvature_forms(christoffel_canonical(g))
        omega12 = cf.Omega[0][1]
        report.integral = integrate_two_form(omega12, tau)
        # no antisymmetry check: Omega_12 = -Omega_21 is a conformal-metric fact
        report.check("closed_form", omega12 == badmetric_omega_closed_form(k, g.k_inv))
        reports.append(report)
    return reports
