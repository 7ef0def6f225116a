"""Generator/relation presentations, elements in normal form, derivations and states.

Every backend keeps elements as a map ``word -> coefficient`` with words in a
canonical normal form:

* ``NCTorus``: lattice points ``m`` standing for ``U1^m1 ... Un^mn``.
* ``FreeGroup``: freely reduced words, letters ``+-(i+1)`` for ``g_i^{+-1}``.
* ``Cuntz``: pairs ``(mu, nu)`` for ``S_mu S_nu*`` where ``mu`` and ``nu`` do
  not both end in the last letter.
* ``Formal``: words over ``k``, ``k^-1`` and the formal derivatives
  ``d^alpha(k)``; a free differential algebra on one invertible symbol, used
  to check identities for a noncommuting deformation parameter.

Indices are 0-based in the Python API; printed names are 1-based (``U1``,
``e1``).
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import PresentationMismatch, UnsupportedBackend, NotInvertible
from .scalars import Scalar

__all__ = [
    "Presentation", "NCTorus", "FreeGroup", "Cuntz", "Formal",
    "AlgebraElement", "State",
    "mul", "star", "derivation", "state_apply", "commute_check",
    "invert", "random_word", "random_element",
]

FLOAT_TOL = 1e-9
_PRUNE = 1e-12


@lru_cache(maxsize=4096)
def _root(e: Fraction) -> Scalar:
    return Scalar.root_of_unity(e)


def _fmt_float(x: float) -> str:
    s = format(x, ".12g")
    return "0" if s in ("-0", "0") else s


class Presentation:
    """Common interface of the backends.

    Subclasses implement word-level operations; :class:`AlgebraElement`
    extends them linearly.
    """

    kind = "abstract"
    n: int
    float_mode: bool

    # -- coefficient ring -------------------------------------------------

    def coerce(self, c):
        if self.float_mode:
            return complex(c)
        if isinstance(c, Scalar):
            return c
        if isinstance(c, complex):
            raise TypeError("complex floats need a float-mode presentation")
        return Scalar(Fraction(c))

    def coeff_is_zero(self, c) -> bool:
        if self.float_mode:
            return abs(c) < _PRUNE
        return c.is_zero()

    def coeff_close(self, a, b) -> bool:
        if self.float_mode:
            return abs(a - b) < FLOAT_TOL
        return a == b

    def phase(self, e):
        """``exp(2 pi i e)`` in the coefficient ring."""
        if self.float_mode:
            return cmath.exp(2j * math.pi * float(e))
        return _root(Fraction(e) % 1)

    def format_coeff(self, c) -> str:
        if not self.float_mode:
            return str(c)
        re, im = _fmt_float(c.real), _fmt_float(c.imag)
        if abs(c.imag) < FLOAT_TOL:
            return re
        if abs(c.real) < FLOAT_TOL:
            return f"{im}*i"
        sign = "-" if c.imag < 0 else "+"
        return f"{re} {sign} {_fmt_float(abs(c.imag))}*i"

    # -- constructors -----------------------------------------------------

    def element(self, terms) -> AlgebraElement:
        return AlgebraElement(self, {w: self.coerce(c) for w, c in dict(terms).items()})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return self.scalar(1)

    def scalar(self, c) -> AlgebraElement:
        return AlgebraElement(self, {self.identity_word(): self.coerce(c)})

    def monomial(self, word, c=1) -> AlgebraElement:
        c = self.coerce(c)
        acc = {}
        for w, e in self.normalize_word(word):
            acc[w] = acc[w] + c * e if w in acc else c * e
        return AlgebraElement(self, acc)

    def normalize_word(self, w):
        """Canonical expansion of a possibly non-canonical word."""
        return [(w, 1)]

    def gen(self, i: int) -> AlgebraElement:
        """The i-th generator ``S_i`` (0-based)."""
        self.check_index(i)
        return self.monomial(self.generator_word(i))

    def gen_star(self, i: int) -> AlgebraElement:
        self.check_index(i)
        return self.monomial(self.generator_star_word(i))

    @property
    def gens(self) -> list[AlgebraElement]:
        return [self.gen(i) for i in range(self.n)]

    def check_index(self, i: int):
        if not 0 <= i < self.n:
            raise IndexError(f"generator index {i} out of range for n={self.n}")

    def __call__(self, src: str) -> AlgebraElement:
        from .parsing import parse_expression
        return parse_expression(src, self)

    # -- word interface (overridden) --------------------------------------

    def identity_word(self):
        raise NotImplementedError

    def generator_word(self, i):
        raise NotImplementedError

    def generator_star_word(self, i):
        raise NotImplementedError

    def mul_words(self, u, v):
        """List of ``(word, coeff)`` whose sum is ``u * v``."""
        raise NotImplementedError

    def star_word(self, w):
        """List of ``(word, coeff)`` whose sum is ``w*``."""
        raise NotImplementedError

    def derive_word(self, i, w):
        raise NotImplementedError

    def state_word(self, w):
        raise UnsupportedBackend(f"{self.kind} has no canonical state")

    def invert_word(self, w):
        """``(coeff, word')`` with ``w * coeff*word' == 1``, or ``None``."""
        return None

    def word_key(self, w):
        return w

    def format_word(self, w) -> list[str]:
        raise NotImplementedError

    product_separator = "*"

    def describe(self) -> dict:
        return {"type": self.kind, "n": self.n}


@dataclass(frozen=True)
class NCTorus(Presentation):
    """Noncommutative n-torus, ``U_k U_l = exp(2 pi i theta_kl) U_l U_k``."""

    n: int
    theta: tuple = None
    float_mode: bool = False
    kind = "nc-torus"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        theta = self.theta
        if theta is None:
            theta = [[0] * self.n for _ in range(self.n)]
        conv = float if self.float_mode else Fraction
        theta = tuple(tuple(conv(x) for x in row) for row in theta)
        if len(theta) != self.n or any(len(r) != self.n for r in theta):
            raise ValueError("theta must be an n x n matrix")
        for k in range(self.n):
            for l in range(self.n):
                if theta[k][l] != -theta[l][k]:
                    raise ValueError(f"theta is not skew-symmetric at ({k + 1},{l + 1})")
        object.__setattr__(self, "theta", theta)

    @classmethod
    def with_angle(cls, angle, n=2, float_mode=False):
        """Rank-n torus with ``theta_kl = angle`` for all ``k < l``."""
        theta = [[0] * n for _ in range(n)]
        for k in range(n):
            for l in range(k + 1, n):
                theta[k][l] = angle
                theta[l][k] = -angle
        return cls(n, theta, float_mode)

    def cocycle(self, m, mp):
        th = self.theta
        return sum((th[k][l] * m[k] * mp[l]
                    for k in range(self.n) if m[k]
                    for l in range(k) if mp[l]), Fraction(0) if not self.float_mode else 0.0)

    def identity_word(self):
        return (0,) * self.n

    def generator_word(self, i):
        return tuple(1 if j == i else 0 for j in range(self.n))

    def generator_star_word(self, i):
        return tuple(-1 if j == i else 0 for j in range(self.n))

    def mul_words(self, u, v):
        w = tuple(a + b for a, b in zip(u, v))
        e = self.cocycle(u, v)
        return [(w, self.phase(e) if e else self.coerce(1))]

    def star_word(self, w):
        e = self.cocycle(w, w)
        return [(tuple(-a for a in w), self.phase(e) if e else self.coerce(1))]

    def invert_word(self, w):
        (word, c), = self.star_word(w)
        return c, word

    def derive_word(self, i, w):
        return [(w, w[i])] if w[i] else []

    def state_word(self, w):
        return 1 if not any(w) else 0

    def word_key(self, w):
        return (sum(abs(a) for a in w), w)

    def format_word(self, w):
        out = []
        for i, a in enumerate(w):
            if a == 1:
                out.append(f"U{i + 1}")
            elif a:
                out.append(f"U{i + 1}^{a}")
        return out

    def describe(self):
        rows = [[str(x) if not self.float_mode else _fmt_float(x) for x in r] for r in self.theta]
        return {"type": self.kind, "n": self.n, "theta": rows}


@dataclass(frozen=True)
class FreeGroup(Presentation):
    """Group algebra ``C[F_n]`` of the free group."""

    n: int
    float_mode: bool = False
    kind = "free-group"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")

    def identity_word(self):
        return ()

    def generator_word(self, i):
        return (i + 1,)

    def generator_star_word(self, i):
        return (-(i + 1),)

    @staticmethod
    def reduce(letters) -> tuple:
        out = []
        for x in letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return tuple(out)

    def mul_words(self, u, v):
        k = 0
        while k < len(u) and k < len(v) and u[-1 - k] == -v[k]:
            k += 1
        return [(u[:len(u) - k] + v[k:], self.coerce(1))]

    def star_word(self, w):
        return [(tuple(-x for x in reversed(w)), self.coerce(1))]

    def invert_word(self, w):
        return self.coerce(1), tuple(-x for x in reversed(w))

    def signed_count(self, i, w) -> int:
        return sum(1 if x == i + 1 else -1 if x == -(i + 1) else 0 for x in w)

    def derive_word(self, i, w):
        c = self.signed_count(i, w)
        return [(w, c)] if c else []

    def state_word(self, w):
        return 0 if w else 1

    def word_key(self, w):
        return (len(w), tuple((abs(x), x < 0) for x in w))

    def format_word(self, w):
        return [f"g{abs(x)}" + ("'" if x < 0 else "") for x in w]


@dataclass(frozen=True)
class Cuntz(Presentation):
    """Polynomial part of the Cuntz algebra ``O_n`` (Leavitt algebra ``L(1, n)``)."""

    n: int
    float_mode: bool = False
    kind = "cuntz"
    product_separator = " "

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")

    def identity_word(self):
        return ((), ())

    def generator_word(self, i):
        return ((i,), ())

    def generator_star_word(self, i):
        return ((), (i,))

    def canonical(self, mu, nu) -> list:
        """Rewrite ``S_mu S_nu*`` into canonical words.

        ``S_{mu n} S_{nu n}* -> S_mu S_nu* - sum_{i<n} S_{mu i} S_{nu i}*``.
        """
        last = self.n - 1
        out = []
        sign = 1
        while mu and nu and mu[-1] == last and nu[-1] == last:
            mu, nu = mu[:-1], nu[:-1]
            for i in range(last):
                out.append(((mu + (i,), nu + (i,)), -sign))
        out.append(((mu, nu), sign))
        return out

    def normalize_word(self, w):
        mu, nu = w
        return self.canonical(tuple(mu), tuple(nu))

    def mul_words(self, u, v):
        (mu, nu), (alpha, beta) = u, v
        k = min(len(nu), len(alpha))
        if nu[:k] != alpha[:k]:
            return []
        if len(alpha) >= len(nu):
            mu, nu = mu + alpha[len(nu):], beta
        else:
            mu, nu = mu, beta + nu[len(alpha):]
        return [(w, self.coerce(c)) for w, c in self.canonical(mu, nu)]

    def star_word(self, w):
        mu, nu = w
        return [((nu, mu), self.coerce(1))]

    def invert_word(self, w):
        if w == ((), ()):
            return self.coerce(1), w
        return None

    def derive_word(self, i, w):
        mu, nu = w
        c = mu.count(i) - nu.count(i)
        return [(w, c)] if c else []

    def state_word(self, w):
        mu, nu = w
        return Fraction(1, self.n ** len(mu)) if mu == nu else 0

    def word_key(self, w):
        mu, nu = w
        return (len(mu) + len(nu), mu, nu)

    def format_word(self, w):
        mu, nu = w
        return [f"S{i + 1}" for i in mu] + [f"S{i + 1}*" for i in reversed(nu)]


# Formal letters: ("k", 1), ("k", -1) and ("d", alpha) for the derivative d^alpha(k).

@dataclass(frozen=True)
class Formal(Presentation):
    """Free differential algebra on one invertible symbol ``k``.

    The derivations act by ``d_i(k) = d^{e_i}(k)`` and on derivative letters
    by raising the multi-index; nothing else commutes.  There is no state.
    """

    n: int
    float_mode: bool = False
    kind = "formal"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")

    def identity_word(self):
        return ()

    def generator_word(self, i):
        raise UnsupportedBackend("the formal backend has no isometry generators")

    generator_star_word = generator_word

    def k(self) -> AlgebraElement:
        return self.monomial((("k", 1),))

    def k_inv(self) -> AlgebraElement:
        return self.monomial((("k", -1),))

    def derivative_letter(self, alpha) -> AlgebraElement:
        return self.monomial((("d", tuple(alpha)),))

    def mul_words(self, u, v):
        k = 0
        while (k < len(u) and k < len(v) and u[-1 - k][0] == "k"
               and v[k][0] == "k" and u[-1 - k][1] == -v[k][1]):
            k += 1
        return [(u[:len(u) - k] + v[k:], self.coerce(1))]

    def star_word(self, w):
        return [(tuple(reversed(w)), self.coerce(1))]

    def invert_word(self, w):
        if all(x[0] == "k" for x in w):
            return self.coerce(1), tuple(("k", -x[1]) for x in reversed(w))
        return None

    def derive_word(self, i, w):
        out = []
        unit = tuple(1 if j == i else 0 for j in range(self.n))
        for pos, (tag, val) in enumerate(w):
            head, tail = w[:pos], w[pos + 1:]
            if tag == "d":
                alpha = tuple(a + b for a, b in zip(val, unit))
                out.append((head + (("d", alpha),) + tail, 1))
            elif val == 1:
                out.append((head + (("d", unit),) + tail, 1))
            else:
                mid = (("k", -1), ("d", unit), ("k", -1))
                out.append((head + mid + tail, -1))
        return out

    def word_key(self, w):
        return (len(w), tuple((0, x[1]) if x[0] == "k" else (1, x[1]) for x in w))

    def format_word(self, w):
        out = []
        for tag, val in w:
            if tag == "k":
                out.append("k" if val == 1 else "k'")
            else:
                s = "k"
                for i in reversed(range(self.n)):
                    for _ in range(val[i]):
                        s = f"d{i + 1}({s})"
                out.append(s)
        return out


class AlgebraElement:
    """Finite linear combination of canonical words; immutable."""

    __slots__ = ("presentation", "terms", "_hash")

    def __init__(self, presentation: Presentation, terms: dict):
        P = presentation
        self.presentation = P
        self.terms = {w: c for w, c in terms.items() if not P.coeff_is_zero(c)}
        self._hash = None

    # -- helpers ------------------------------------------------------------

    def _same(self, other: AlgebraElement):
        if other.presentation != self.presentation:
            raise PresentationMismatch(
                f"{self.presentation.describe()} vs {other.presentation.describe()}")

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            return other
        try:
            return self.presentation.scalar(other)
        except (TypeError, ValueError):
            return None

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc[w] + c if w in acc else c
        return AlgebraElement(self.presentation, acc)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.presentation, {w: -c for w, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> AlgebraElement:
        c = self.presentation.coerce(c)
        return AlgebraElement(self.presentation, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                return self.scale(other)
            except (TypeError, ValueError):
                return NotImplemented
        self._same(other)
        P = self.presentation
        acc = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                cuv = cu * cv
                for w, c in P.mul_words(u, v):
                    x = cuv * c
                    acc[w] = acc[w] + x if w in acc else x
        return AlgebraElement(P, acc)

    def __rmul__(self, other):
        try:
            c = self.presentation.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return AlgebraElement(self.presentation, {w: c * x for w, x in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, AlgebraElement):
            return NotImplemented
        c = self.presentation.coerce(other)
        return self.scale(1 / c)

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        result = self.presentation.one()
        for _ in range(k):
            result = result * self
        return result

    def star(self) -> AlgebraElement:
        P = self.presentation
        acc = {}
        for w, c in self.terms.items():
            cc = c.conjugate()
            for v, d in P.star_word(w):
                x = cc * d
                acc[v] = acc[v] + x if v in acc else x
        return AlgebraElement(P, acc)

    def derive(self, i: int) -> AlgebraElement:
        P = self.presentation
        P.check_index(i)
        acc = {}
        for w, c in self.terms.items():
            for v, d in P.derive_word(i, w):
                x = c * d
                acc[v] = acc[v] + x if v in acc else x
        return AlgebraElement(P, acc)

    def commutator(self, other) -> AlgebraElement:
        return self * other - other * self

    def commutes_with(self, other) -> bool:
        return self.commutator(other).is_zero()

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        P = self.presentation
        return not self.terms or set(self.terms) == {P.identity_word()}

    def scalar_value(self):
        return self.terms.get(self.presentation.identity_word(), self.presentation.coerce(0))

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            if other.presentation != self.presentation:
                return False
        else:
            other = self._lift(other)
            if other is None:
                return NotImplemented
        P = self.presentation
        if not P.float_mode:
            return self.terms == other.terms
        zero = 0j
        for w in set(self.terms) | set(other.terms):
            if not P.coeff_close(self.terms.get(w, zero), other.terms.get(w, zero)):
                return False
        return True

    def __hash__(self):
        if self._hash is None:
            if self.presentation.float_mode:
                self._hash = hash(self.presentation)
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- printing --------------------------------------------------------------

    def sorted_terms(self):
        key = self.presentation.word_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{self.presentation.kind} {self}>"


def _split_sign(P, c):
    """Return ``(negative, text)`` for a coefficient, or text needing parens."""
    if P.float_mode:
        if abs(c.imag) < FLOAT_TOL:
            return c.real < 0, _fmt_float(abs(c.real)), False
        if abs(c.real) < FLOAT_TOL:
            return c.imag < 0, f"{_fmt_float(abs(c.imag))}*i", False
        return False, P.format_coeff(c), True
    terms = c.terms()
    if len(terms) == 1:
        q, e = terms[0]
        return q < 0, str(-c if q < 0 else c), False
    return False, str(c), True


def format_element(a: AlgebraElement) -> str:
    P = a.presentation
    if not a.terms:
        return "0"
    sep = P.product_separator
    pieces = []
    only = len(a.terms) == 1
    for w, c in a.sorted_terms():
        neg, text, compound = _split_sign(P, c)
        factors = P.format_word(w)
        if not factors:
            body = f"({text})" if compound and not only else text
        else:
            word = sep.join(factors)
            if text == "1" and not compound:
                body = word
            else:
                body = f"({text}){sep}{word}" if compound else f"{text}{sep}{word}"
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


# -- module-level operations ------------------------------------------------

def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def star(a: AlgebraElement) -> AlgebraElement:
    return a.star()


def derivation(i: int, a: AlgebraElement) -> AlgebraElement:
    """The separating derivation ``d_i`` (0-based index)."""
    return a.derive(i)


def commute_check(a: AlgebraElement, b: AlgebraElement) -> bool:
    a._same(b)
    return a.commutes_with(b)


def invert(a: AlgebraElement, certified=None) -> AlgebraElement:
    """Inverse of ``a`` if it is a scalar times an invertible word.

    ``certified`` maps elements to claimed inverses; a claim is accepted only
    after checking both products equal 1.
    """
    P = a.presentation
    if certified:
        for x, y in dict(certified).items():
            if x == a:
                if a * y == P.one() and y * a == P.one():
                    return y
                raise NotInvertible(f"certified inverse of {a} fails verification", [str(a)])
    if len(a.terms) == 1:
        (w, c), = a.terms.items()
        found = P.invert_word(w)
        if found is not None:
            d, v = found
            return P.monomial(v, d / c)
    raise NotInvertible(f"cannot certify that {a} is invertible", [str(a)])


@dataclass(frozen=True)
class State:
    """The canonical state of a backend.

    Constant coefficient on the NC torus, identity coefficient on the free
    group, and the gauge-invariant KMS state ``S_mu S_nu* -> delta n^-|mu|``
    on the Cuntz algebra.
    """

    presentation: Presentation
    kind: str = field(init=False)

    def __post_init__(self):
        kinds = {"nc-torus": "ConstantCoefficient", "free-group": "IdentityCoefficient",
                 "cuntz": "KMS"}
        if self.presentation.kind not in kinds:
            raise UnsupportedBackend(f"{self.presentation.kind} has no canonical state")
        object.__setattr__(self, "kind", kinds[self.presentation.kind])

    @property
    def tracial(self) -> bool:
        return self.kind != "KMS"

    def __call__(self, a: AlgebraElement):
        P = self.presentation
        if a.presentation != P:
            raise PresentationMismatch("state and element live in different algebras")
        total = P.coerce(0)
        for w, c in a.terms.items():
            v = P.state_word(w)
            if v:
                total = total + c * P.coerce(v)
        return total


def state_apply(tau: State, a: AlgebraElement):
    return tau(a)


# -- random generation (seeded; used by property tests and verify suites) ----

def random_word(P: Presentation, rng: random.Random, length: int = 3):
    if isinstance(P, NCTorus):
        return tuple(rng.randint(-length, length) for _ in range(P.n))
    if isinstance(P, FreeGroup):
        letters = [rng.choice([1, -1]) * rng.randint(1, P.n) for _ in range(rng.randint(0, length))]
        return FreeGroup.reduce(letters)
    if isinstance(P, Cuntz):
        mu = tuple(rng.randrange(P.n) for _ in range(rng.randint(0, length)))
        nu = tuple(rng.randrange(P.n) for _ in range(rng.randint(0, length)))
        # pick a canonical word directly
        while mu and nu and mu[-1] == nu[-1] == P.n - 1:
            nu = nu[:-1]
        return (mu, nu)
    if isinstance(P, Formal):
        word = []
        for _ in range(rng.randint(0, length)):
            r = rng.random()
            if r < 0.6:
                word.append(("k", rng.choice([1, -1])))
            else:
                alpha = [0] * P.n
                alpha[rng.randrange(P.n)] = 1
                if rng.random() < 0.3:
                    alpha[rng.randrange(P.n)] += 1
                word.append(("d", tuple(alpha)))
        out = P.one()
        for x in word:
            out = out * P.monomial((x,))
        return next(iter(out.terms)) if out.terms else ()
    raise UnsupportedBackend(P.kind)


def random_coeff(P: Presentation, rng: random.Random):
    if P.float_mode:
        return complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
    q = Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3))
    if rng.random() < 0.3:
        return Scalar(q) * Scalar.root_of_unity(Fraction(rng.randint(1, 5), rng.choice([3, 4, 8])))
    return Scalar(q)


def random_element(P: Presentation, rng: random.Random, terms: int = 3, length: int = 3) -> AlgebraElement:
    acc = P.zero()
    for _ in range(rng.randint(1, terms)):
        acc = acc + P.monomial(random_word(P, rng, length), random_coeff(P, rng))
    return acc
