"""The shared set of test metrics, as ``(name, Metric)`` pairs."""

from fractions import Fraction

from tamecalc import Cuntz, Formal, FreeGroup, Metric, NCTorus, Scalar


def cuntz_swap(P):
    """``s = S1 S2* + S2 S1*``, a self-inverse unitary in O_2."""
    return P("S1 S2* + S2 S1*")


def metric_cases():
    T = NCTorus.with_angle(Fraction(1, 4))
    T3 = NCTorus.with_angle(Fraction(1, 4), 3)
    F2, O2, K2 = FreeGroup(2), Cuntz(2), Formal(2)
    U1, U2 = T.gens
    g1, g2 = F2.gens
    s = cuntz_swap(O2)
    k, kinv = K2.k(), K2.k_inv()
    cases = []
    for P in (T, F2, O2, K2, T3, FreeGroup(3), Cuntz(3), Formal(3)):
        cases.append((f"g0 {P.kind} n={P.n}", Metric.g0(P)))
    w13 = Scalar.root_of_unity(Fraction(1, 3))
    for name, x in [("U1", U1), ("U2", U2), ("U1U2", U1 * U2), ("w(1/3)U1^2U2^-1", w13 * U1 ** 2 * T.gen_star(1))]:
        cases.append((f"conformal {name}", Metric.conformal(x)))
    cases.append(("badmetric U1", Metric.badmetric(U1)))
    cases.append(("badmetric U2", Metric.badmetric(U2)))
    cases.append(("diag(U3,1,1)", Metric.diagonal([T3.gen(2), T3.one(), T3.one()],
                                                    [T3.gen_star(2), T3.one(), T3.one()])))
    cases.append(("conformal U1U2U3", Metric.conformal(T3("U1 U2 U3"))))
    # these two have dOmega != 0 in degree three
    cases.append(("diag(U3,U3,1)", Metric.diagonal([T3.gen(2), T3.gen(2), T3.one()],
                                                    [T3.gen_star(2), T3.gen_star(2), T3.one()])))
    K3 = Formal(3)
    cases.append(("formal conformal n=3", Metric.conformal(K3.k(), K3.k_inv())))
    O3 = Cuntz(3)
    s3 = O3("S1 S2* + S2 S1* + S3 S3*")
    cases.append(("conformal 2+s n=3", Metric.conformal(2 + s3, (2 - s3) / 3)))
    for name, x in [("g1", g1), ("g2", g2), ("g1g2", g1 * g2)]:
        cases.append((f"conformal {name}", Metric.conformal(x)))
    cases.append(("conformal s", Metric.conformal(s, s)))
    cases.append(("conformal 2+s", Metric.conformal(2 + s, (2 - s) / 3)))
    cases.append(("formal conformal", Metric.conformal(k, kinv)))
    cases.append(("formal badmetric", Metric.badmetric(k, kinv)))
    cases.append(("[[U1,U1],[U1,2U1]]", Metric([[U1, U1], [U1, 2 * U1]])))
    cases.append(("[[g1,g1],[g1,2g1]]", Metric([[g1, g1], [g1, 2 * g1]])))
    cases.append(("[[1,s],[s,2]]", Metric([[O2.one(), s], [s, 2 * O2.one()]])))
    return cases
