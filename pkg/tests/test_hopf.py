import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements
from tamecalc import FreeGroup, NCTorus, d0
from tamecalc.errors import NotARelation, UnsupportedBackend
from tamecalc.algebras import Cuntz
from tamecalc.hopf import (Tensor, basis_pair, basis_tensor, check_covariance, coaction_left,
                           coaction_one_form, coaction_right, coassociativity_sides, coproduct,
                           counit, counit_left, counit_right, random_relation, relation_form)

F2 = FreeGroup(2)
F3 = FreeGroup(3)


def brute_left_coaction(pairs):
    """sum Delta(a)(id (x) d)Delta(b) multiplied out term by term."""
    acc = {}
    for a, b in pairs:
        P = a.presentation
        for (x, _), alpha in coproduct(a).terms.items():
            for (y, _), beta in coproduct(b).terms.items():
                left = P.monomial(x, alpha) * P.monomial(y, beta)
                right = P.monomial(x) * d0(P.monomial(y))
                for w1, c1 in left.terms.items():
                    for (i,), coeff in right.terms.items():
                        for w2, c2 in coeff.terms.items():
                            key = (w1, i, w2)
                            acc[key] = acc.get(key, 0) + c1 * c2
    return acc


def test_coproduct_examples():
    one = F2.one()
    e = F2.identity_word()
    assert coproduct(one) == Tensor(F2, "AA", {(e, e): 1})
    g1, g2 = F2.gens
    t = coproduct(g1 + g2)
    assert set(t.terms) == {((1,), (1,)), ((2,), (2,))}
    assert str(coproduct(g1)) == "g1 (x) g1"


@given(elements(F2))
def test_coalgebra_axioms(a):
    t = coproduct(a)
    assert t.flip() == t
    assert counit_left(t) == a and counit_right(t) == a
    left, right = coassociativity_sides(a)
    assert left == right


def test_counit():
    assert counit(F2("3 g1 + 2 g2' - 1")) == 4


def test_unsupported_backends():
    T = NCTorus.with_angle(0.25)
    with pytest.raises(UnsupportedBackend):
        coproduct(T.gen(0))
    with pytest.raises(UnsupportedBackend):
        check_covariance([(Cuntz(2).one(), Cuntz(2).gen(0))])


@pytest.mark.parametrize("P", [F2, F3], ids=["F2", "F3"])
def test_basis_forms_are_invariant(P):
    for i in range(P.n):
        pair = [basis_pair(P, i)]
        assert relation_form(pair) == d0(P.zero()) + basis_form_e(P, i)
        assert coaction_one_form(pair, "left") == basis_tensor(P, i, "left")
        assert coaction_one_form(pair, "right") == basis_tensor(P, i, "right")
    assert str(basis_tensor(F2, 0)) == "1 (x) e1"
    assert str(basis_tensor(F2, 1, "right")) == "e2 (x) 1"


def basis_form_e(P, i):
    from tamecalc.forms import basis_form
    return basis_form(P, i)


def test_commutator_relation():
    b = F2("g1 g2 g1' g2'")
    pairs = [(F2.one(), b)]
    assert d0(b).is_zero()
    assert coaction_left(pairs).is_zero()
    assert check_covariance(pairs) == {"left": True, "right": True}


def test_cancellation_relation():
    g1, g2 = F2.gens
    pairs = [(g1, g2), (-g1, g2)]
    assert check_covariance(pairs) == {"left": True, "right": True}


def test_not_a_relation():
    with pytest.raises(NotARelation):
        check_covariance([(F2.one(), F2.gen(0))])
    with pytest.raises(NotARelation):
        check_covariance([])
    with pytest.raises(ValueError):
        coaction_one_form([(F2.one(), F2.gen(0))], "up")


@pytest.mark.parametrize("P", [F2, F3], ids=["F2", "F3"])
def test_random_relations_are_covariant(P):
    rng = random.Random(7)
    for _ in range(60):
        pairs = random_relation(P, rng)
        assert relation_form(pairs).is_zero()
        assert check_covariance(pairs) == {"left": True, "right": True}


@given(st.lists(st.tuples(elements(F2, max_terms=2), elements(F2, max_terms=2)), min_size=1, max_size=3))
def test_left_coaction_matches_brute_force(pairs):
    ours = coaction_left(pairs).terms
    brute = {k: v for k, v in brute_left_coaction(pairs).items() if v != 0}
    assert set(ours) == set(brute)
    assert all(ours[k] == brute[k] for k in ours)


@given(st.lists(st.tuples(elements(F2, max_terms=2), elements(F2, max_terms=2)), min_size=1, max_size=3))
def test_coaction_vanishes_exactly_on_relations(pairs):
    # the left coaction is injective on one-forms
    zero = relation_form(pairs).is_zero()
    assert coaction_left(pairs).is_zero() == zero
    assert coaction_right(pairs).is_zero() == zero
