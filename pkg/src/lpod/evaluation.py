"""Evaluating formulas and rules under three- and four-valued interpretations."""

from __future__ import annotations

from functools import reduce
from typing import AbstractSet

from .errors import DomainError, NotAnLpod
from .logic import TV, Interpretation, times
from .syntax import And, FStar, Formula, Implies, Lit, Not, Or, Program, Rule, Times


def eval_formula(interp: Interpretation, phi: Formula) -> TV:
    """Value of ``phi`` under ``interp``; the same clauses serve both lattices."""
    if isinstance(phi, Lit):
        return interp[phi.literal]
    if isinstance(phi, FStar):
        return TV.FSTAR
    if isinstance(phi, Not):
        return TV.T if eval_formula(interp, phi.arg) <= TV.FSTAR else TV.F
    if isinstance(phi, Implies):
        return TV.T if eval_formula(interp, phi.head) >= eval_formula(interp, phi.body) else TV.F
    values = [eval_formula(interp, a) for a in phi.args]
    if isinstance(phi, And):
        return min(values, default=TV.T)
    if isinstance(phi, Or):
        return max(values, default=TV.F)
    if isinstance(phi, Times):
        return reduce(times, values)
    raise TypeError(f"not a formula: {phi!r}")


def level_value(interp: Interpretation, level) -> TV:
    return max(interp[l] for l in level)


def head_value(interp: Interpretation, rule: Rule) -> TV:
    return reduce(times, (level_value(interp, level) for level in rule.head))


def body_value(interp: Interpretation, rule: Rule) -> TV:
    value = TV.T
    for a in rule.body_pos:
        value = min(value, interp[a])
    for b in rule.body_neg:
        if interp[b] > TV.FSTAR:
            return TV.F
    return value


def rule_holds(interp: Interpretation, rule: Rule) -> bool:
    """Whether ``head <- body`` evaluates to T.

    Agrees with ``eval_formula(interp, rule.to_formula()) == TV.T``; this is
    the unrolled form used in the enumeration loops.
    """
    body = body_value(interp, rule)
    return body is TV.F or head_value(interp, rule) >= body


def check_domain(interp: Interpretation, program: Program):
    if set(interp.domain) != set(program.sigma):
        raise DomainError("interpretation domain differs from the program's literals")


def is_model(interp: Interpretation, program: Program) -> bool:
    check_domain(interp, program)
    return all(rule_holds(interp, r) for r in program.rules)


def is_consistent(interp: Interpretation) -> bool:
    return not any(
        v is TV.T and lit.complement() in interp and interp[lit.complement()] is TV.T
        for lit, v in interp.items()
    )


def require_lpod(program: Program):
    if not program.is_lpod():
        raise NotAnLpod("operation is defined for programs with single-literal head levels only")


def is_brewka_model(literals: AbstractSet, program: Program) -> bool:
    require_lpod(program)
    return all(any(c in literals for c in r.choices) for r in program.rules if body_holds(literals, r))


def body_holds(literals: AbstractSet, rule: Rule) -> bool:
    """Two-valued body truth for a set of literals."""
    return all(a in literals for a in rule.body_pos) and not any(b in literals for b in rule.body_neg)


def set_consistent(literals: AbstractSet) -> bool:
    return not any(l.complement() in literals for l in literals)
