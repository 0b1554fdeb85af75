"""Selecting most-preferred answer sets.

New semantics: an answer set is preferred to another when the literals it
values ``F*`` form a strict subset of the other's.  Original semantics:
per-rule degrees of satisfaction compared level by level by inclusion.
"""

from __future__ import annotations

from typing import AbstractSet, Sequence

from .answer_sets import BREWKA_BUDGET, brewka_answer_sets
from .errors import DomainError, NotAnLpod, UndefinedDegree
from .evaluation import body_holds, require_lpod
from .logic import TV, Interpretation
from .syntax import Literal, Program, Rule


def fstar_set(interp: Interpretation) -> frozenset:
    return interp.with_value(TV.FSTAR)


def preferred(m1: Interpretation, m2: Interpretation) -> bool:
    if set(m1.domain) != set(m2.domain):
        raise DomainError("answer sets are over different domains")
    return fstar_set(m1) < fstar_set(m2)


def most_preferred(answer_sets: Sequence[Interpretation]) -> list[Interpretation]:
    return [m for m in answer_sets if not any(preferred(o, m) for o in answer_sets)]


def degree(literals: AbstractSet[Literal], rule: Rule) -> int:
    if not rule.is_lpod_rule():
        raise NotAnLpod("degrees are defined for single-literal head levels only")
    if not body_holds(literals, rule):
        return 1
    for i, c in enumerate(rule.choices, start=1):
        if c in literals:
            return i
    raise UndefinedDegree(f"body of {rule} holds but no head literal is in the set")


def degree_profile(literals: AbstractSet[Literal], program: Program) -> list[int]:
    """Degree of every rule, by position in the program."""
    return [degree(literals, r) for r in program.rules]


def inclusion_preferred(s1: AbstractSet[Literal], s2: AbstractSet[Literal], program: Program) -> bool:
    """Whether ``s1`` is inclusion-preferred to ``s2``.

    Rules are identified by index, so duplicated rules count separately.
    """
    require_lpod(program)
    d1, d2 = degree_profile(s1, program), degree_profile(s2, program)
    top = max((len(r.head) for r in program.rules), default=0)
    for k in range(1, top + 1):
        at1 = {i for i, d in enumerate(d1) if d == k}
        at2 = {i for i, d in enumerate(d2) if d == k}
        if at1 != at2:
            return at2 < at1
    return False


def brewka_most_preferred(program: Program, budget: int = BREWKA_BUDGET) -> list[frozenset]:
    sets = brewka_answer_sets(program, budget)
    return [s for s in sets if not any(inclusion_preferred(o, s, program) for o in sets)]
