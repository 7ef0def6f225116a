"""Exact symbolic Levi-Civita geometry on tame noncommutative calculi."""

from .scalars import Scalar
from .algebras import (NCTorus, FreeGroup, Cuntz, Formal, AlgebraElement, State,
                       invert, mul, star, derivation, commute_check, state_apply)
from .parsing import parse_expression, parse_scalar
from .forms import (GradedForm, TensorBicovector, Metric, d0, d1, d1_curl, d_graded,
                    wedge, sigma, p_sym, metric_build, metric_apply)
from .levicivita import (ChristoffelSymbols, christoffel_canonical, christoffel_general,
                         christoffel_reduced, christoffel_conformal, pi_g, verify_levi_civita)
from .curvature import (curvature_components, connection_forms, curvature_forms,
                        check_structure_equation, check_bianchi, ricci_scalar)

__version__ = "0.1.0"
