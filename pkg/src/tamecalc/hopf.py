"""Group-like coproduct on C[F_n] and covariance of the canonical calculus.

Tensors are dicts keyed by tuples of canonical words:

* ``A (x) A``: ``(x, y) -> c`` for ``c delta_x (x) delta_y``;
* ``A (x) Omega^1``: ``(x, i, y) -> c`` for ``c delta_x (x) e_i delta_y``;
* ``Omega^1 (x) A``: ``(i, x, y) -> c`` for ``c e_i delta_x (x) delta_y``.
"""

from __future__ import annotations

import random

from .algebras import AlgebraElement, FreeGroup, random_coeff, random_word
from .errors import NotARelation, UnsupportedBackend
from .forms import GradedForm, d0

__all__ = [
    "Tensor", "coproduct", "counit", "coaction_one_form", "coaction_left",
    "coaction_right", "relation_form", "check_covariance", "basis_pair",
    "random_relation",
]


def _need_group(P):
    if not isinstance(P, FreeGroup):
        raise UnsupportedBackend(f"coproduct is only available on the free group, not {P.kind}")


class Tensor:
    """Finite sum of pure tensors with canonical keys; zero coefficients dropped."""

    __slots__ = ("presentation", "kind", "terms")

    def __init__(self, presentation, kind, terms):
        self.presentation = presentation
        self.kind = kind
        P = presentation
        terms = {key: P.coerce(c) for key, c in terms.items()}
        self.terms = {key: c for key, c in terms.items() if not P.coeff_is_zero(c)}

    def __add__(self, other):
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc[key] + c if key in acc else c
        return Tensor(self.presentation, self.kind, acc)

    def scale(self, c):
        c = self.presentation.coerce(c)
        return Tensor(self.presentation, self.kind, {key: c * v for key, v in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not self.terms

    def flip(self):
        if self.kind != "AA":
            raise ValueError("flip is defined on A (x) A")
        return Tensor(self.presentation, "AA", {(y, x): c for (x, y), c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.kind == other.kind and (self - other).is_zero()

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        P = self.presentation

        def word(w):
            return " ".join(P.format_word(w)) or "1"

        def form(i, w):
            return f"e{i + 1}" if not w else f"e{i + 1}*{word(w)}"

        parts = []
        for key in sorted(self.terms, key=repr):
            if self.kind == "AA":
                body = f"{word(key[0])} (x) {word(key[1])}"
            elif self.kind == "AO":
                body = f"{word(key[0])} (x) {form(key[1], key[2])}"
            else:
                body = f"{form(key[0], key[1])} (x) {word(key[2])}"
            c = self.terms[key]
            parts.append(body if c == P.coerce(1) else f"{P.format_coeff(c)}*({body})")
        return " + ".join(parts)

    __repr__ = __str__


def coproduct(a: AlgebraElement) -> Tensor:
    """``delta_g -> delta_g (x) delta_g`` extended linearly."""
    P = a.presentation
    _need_group(P)
    return Tensor(P, "AA", {(w, w): c for w, c in a.terms.items()})


def counit(a: AlgebraElement):
    _need_group(a.presentation)
    total = a.presentation.coerce(0)
    for c in a.terms.values():
        total = total + c
    return total


def counit_left(t: Tensor) -> AlgebraElement:
    """``(eps (x) id) t``."""
    P = t.presentation
    acc = P.zero()
    for (x, y), c in t.terms.items():
        acc = acc + P.monomial(y, c)
    return acc


def counit_right(t: Tensor) -> AlgebraElement:
    P = t.presentation
    acc = P.zero()
    for (x, y), c in t.terms.items():
        acc = acc + P.monomial(x, c)
    return acc


def coassociativity_sides(a: AlgebraElement):
    """``((Delta (x) id) Delta a, (id (x) Delta) Delta a)`` as triple-keyed dicts."""
    t = coproduct(a)
    left, right = {}, {}
    for (x, y), c in t.terms.items():
        for (u, v), e in coproduct(a.presentation.monomial(x)).terms.items():
            left[(u, v, y)] = left.get((u, v, y), 0) + c * e
        for (u, v), e in coproduct(a.presentation.monomial(y)).terms.items():
            right[(x, u, v)] = right.get((x, u, v), 0) + c * e
    return left, right


def _expand(pairs):
    """Yield ``(coefficient, product word, signed-count vector of b)`` for each pure term."""
    for a, b in pairs:
        P = a.presentation
        _need_group(P)
        for x, alpha in a.terms.items():
            for y, beta in b.terms.items():
                counts = [P.signed_count(i, y) for i in range(P.n)]
                if not any(counts):
                    continue
                for w, c in P.mul_words(x, y):
                    yield alpha * beta * c, w, counts


def coaction_left(pairs) -> Tensor:
    """``sum_k Delta(a_k) (id (x) d) Delta(b_k)`` in ``A (x) Omega^1``."""
    pairs = list(pairs)
    P = pairs[0][0].presentation
    acc = {}
    for c, w, counts in _expand(pairs):
        for i, m in enumerate(counts):
            if m:
                key = (w, i, w)
                acc[key] = acc.get(key, 0) + c * m
    return Tensor(P, "AO", acc)


def coaction_right(pairs) -> Tensor:
    """``sum_k Delta(a_k) (d (x) id) Delta(b_k)`` in ``Omega^1 (x) A``."""
    pairs = list(pairs)
    P = pairs[0][0].presentation
    acc = {}
    for c, w, counts in _expand(pairs):
        for i, m in enumerate(counts):
            if m:
                key = (i, w, w)
                acc[key] = acc.get(key, 0) + c * m
    return Tensor(P, "OA", acc)


def coaction_one_form(pairs, side: str = "left") -> Tensor:
    if side == "left":
        return coaction_left(pairs)
    if side == "right":
        return coaction_right(pairs)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def relation_form(pairs) -> GradedForm:
    """``sum_k a_k d(b_k)``."""
    pairs = list(pairs)
    P = pairs[0][0].presentation
    acc = GradedForm.zero(P, 1)
    for a, b in pairs:
        acc = acc + a * d0(b)
    return acc


def check_covariance(pairs) -> dict:
    """Both covariance conditions for a relation ``sum a_k d(b_k) = 0``."""
    pairs = list(pairs)
    if not pairs:
        raise NotARelation("empty relation")
    _need_group(pairs[0][0].presentation)
    form = relation_form(pairs)
    if not form.is_zero():
        raise NotARelation(f"sum a_k d(b_k) = {form} is not zero")
    return {"left": coaction_left(pairs).is_zero(), "right": coaction_right(pairs).is_zero()}


def basis_pair(P, i):
    """``(delta_{g_i^-1}, delta_{g_i})`` with ``a d(b) = e_i``."""
    _need_group(P)
    return P.gen_star(i), P.gen(i)


def basis_tensor(P, i, side="left") -> Tensor:
    """``1 (x) e_i`` or ``e_i (x) 1``."""
    e = P.identity_word()
    if side == "left":
        return Tensor(P, "AO", {(e, i, e): P.coerce(1)})
    return Tensor(P, "OA", {(i, e, e): P.coerce(1)})


def _commutator(P, x, y):
    return P.mul_words(P.mul_words(x, y)[0][0], P.mul_words(P.invert_word(x)[1], P.invert_word(y)[1])[0][0])[0][0]


def null_word(P, rng: random.Random, length=3):
    """A word whose signed counts all vanish (product of commutators and conjugates)."""
    choice = rng.random()
    x, y = random_word(P, rng, length), random_word(P, rng, length)
    if choice < 0.5:
        return _commutator(P, x, y)
    # x y x^-1 y'^-1 with y' a permutation of the letters of y
    letters = list(y)
    rng.shuffle(letters)
    yp = FreeGroup.reduce(letters)
    w = P.mul_words(x, y)[0][0]
    w = P.mul_words(w, P.invert_word(x)[1])[0][0]
    return P.mul_words(w, P.invert_word(yp)[1])[0][0]


def random_relation(P, rng: random.Random, length=3):
    """Random pairs ``(a_k, b_k)`` with ``sum a_k d(b_k) = 0``, built from

    null words ``b`` with arbitrary ``a``, cancelling pairs, and families of
    words sharing a signed-count vector weighted by coefficients summing to zero.
    """
    _need_group(P)
    pairs = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.randrange(3)
        if kind == 0:
            b = P.zero()
            for _ in range(rng.randint(1, 2)):
                b = b + P.monomial(null_word(P, rng, length), random_coeff(P, rng))
            b = b + P.scalar(random_coeff(P, rng))
            a = P.monomial(random_word(P, rng, length), random_coeff(P, rng))
            pairs.append((a, b))
        elif kind == 1:
            a = P.monomial(random_word(P, rng, length), random_coeff(P, rng))
            b = P.monomial(random_word(P, rng, length), random_coeff(P, rng))
            pairs += [(a, b), (-a, b)]
        else:
            base = random_word(P, rng, length)
            x = random_word(P, rng, length)
            size = rng.randint(2, 3)
            words = [base]
            for _ in range(size - 1):
                # same signed counts: multiply by a null word on either side
                z = null_word(P, rng, length)
                w = P.mul_words(z, base)[0][0] if rng.random() < 0.5 else P.mul_words(base, z)[0][0]
                words.append(w)
            coeffs = [random_coeff(P, rng) for _ in range(size - 1)]
            last = P.coerce(0)
            for c in coeffs:
                last = last - c
            coeffs.append(last)
            for w, c in zip(words, coeffs):
                winv = P.invert_word(w)[1]
                a = P.monomial(P.mul_words(x, winv)[0][0], c)
                pairs.append((a, P.monomial(w)))
    return pairs
