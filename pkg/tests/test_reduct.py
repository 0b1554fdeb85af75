import random

import pytest

from conftest import interp, prog
from lpod.answer_sets import candidates
from lpod.errors import NotAnLpod
from lpod.evaluation import is_model
from lpod.generate import random_program
from lpod.logic import THREE
from lpod.reduct import DefiniteRule, ReductRule, brewka_reduct, x_reduct
from lpod.syntax import Literal

L = Literal


def rr(head, guard, *body):
    return ReductRule(tuple(L(h) for h in head.split()), guard, tuple(L(b) for b in body))


def test_wine_reduct():
    p = prog("wine * beer.")
    r = x_reduct(p, interp(p, wine="F*", beer="T"))
    assert r.rules == (rr("wine", True), rr("beer", False))
    assert r.sigma == p.sigma
    assert str(r) == "wine :- F*.\nbeer.\n"


def test_blocked_rule_contributes_nothing():
    p = prog("a * b :- not c.")
    assert x_reduct(p, interp(p, a="T", b="F", c="T")).rules == ()


def test_all_levels_fstar():
    # r = n: the last level is still emitted without the F* guard
    p = prog("a * b * c.")
    r = x_reduct(p, interp(p, a="F*", b="F*", c="F*"))
    assert r.rules == (rr("a", True), rr("b", True), rr("c", False))


def test_first_level_not_fstar():
    p = prog("a * b * c :- d.")
    r = x_reduct(p, interp(p, a="F", b="F*", c="T", d="T"))
    assert r.rules == (rr("a", False, "d"),)


def test_dlpod_reduct():
    p = prog("pub * (cinema v tv).")
    r = x_reduct(p, interp(p, pub="F*", cinema="T", tv="F"))
    assert r.rules == (rr("pub", True), rr("cinema tv", False))
    assert not r.is_definite()
    assert str(r) == "pub :- F*.\n(cinema v tv).\n"


def test_fstar_negated_body_does_not_block():
    p = prog("a :- not b.")
    assert x_reduct(p, interp(p, a="T", b="F*")).rules == (rr("a", False),)


def test_brewka_reduct_examples():
    p = prog("wine * beer.")
    assert brewka_reduct(p, {L("beer")}) == (DefiniteRule(L("beer"), ()),)
    assert brewka_reduct(p, {L("wine"), L("beer")}) == (DefiniteRule(L("wine"), ()),)
    assert brewka_reduct(prog("a * b :- not a."), {L("a")}) == ()
    with pytest.raises(NotAnLpod):
        brewka_reduct(prog("a v b."), set())


@pytest.mark.parametrize("width", [1, 2])
def test_models_satisfy_their_reduct(width):
    rng = random.Random(width)
    for _ in range(250):
        p = random_program(rng, n_atoms=3, max_rules=3, max_width=width, strong_neg=False)
        for i in candidates(p.sigma, THREE):
            if is_model(i, p):
                assert x_reduct(p, i).is_model(i)


def test_reduct_shape_and_determinism():
    rng = random.Random(5)
    for _ in range(100):
        p = random_program(rng, n_atoms=3)
        for i in candidates(p.sigma, THREE):
            r = x_reduct(p, i)
            assert r == x_reduct(p, i)
            assert r.is_definite()
            assert all(set(rule.body_pos) <= set(p.sigma) for rule in r)
