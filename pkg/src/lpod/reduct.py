"""The three-valued ×-reduct and the original two-valued one."""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet

from .evaluation import check_domain, level_value, require_lpod
from .logic import TV, Interpretation
from .syntax import Literal, Program, render_level


@dataclass(frozen=True)
class ReductRule:
    """``head_level <- [F*,] body_pos`` with a disjunctive head and no negation."""

    head_level: tuple[Literal, ...]
    fstar_guard: bool
    body_pos: tuple[Literal, ...]

    def body_value(self, interp) -> TV:
        value = TV.FSTAR if self.fstar_guard else TV.T
        for a in self.body_pos:
            value = min(value, interp[a])
        return value

    def holds(self, interp) -> bool:
        return level_value(interp, self.head_level) >= self.body_value(interp)

    def __str__(self):
        body = (["F*"] if self.fstar_guard else []) + [str(a) for a in self.body_pos]
        head = render_level(self.head_level, bracket=True)
        return f"{head} :- {', '.join(body)}." if body else f"{head}."


@dataclass(frozen=True)
class ReductProgram:
    rules: tuple[ReductRule, ...]
    sigma: tuple[Literal, ...]

    def is_definite(self) -> bool:
        return all(len(r.head_level) == 1 for r in self.rules)

    def is_model(self, interp) -> bool:
        return all(r.holds(interp) for r in self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def __str__(self):
        return "".join(f"{r}\n" for r in self.rules)


def x_reduct(program: Program, interp: Interpretation) -> ReductProgram:
    """Reduct of ``program`` relative to a three-valued interpretation.

    A rule whose default-negated body has a true literal contributes nothing.
    Otherwise levels 1..r-1 become ``F*``-guarded rules and level r an
    unguarded one, where r is the first level not valued ``F*`` (or the last
    level).
    """
    check_domain(interp, program)
    out = []
    for rule in program.rules:
        if any(interp[b] is TV.T for b in rule.body_neg):
            continue
        last = len(rule.head) - 1
        r = 0
        while r < last and level_value(interp, rule.head[r]) is TV.FSTAR:
            r += 1
        for level in rule.head[:r]:
            out.append(ReductRule(level, True, rule.body_pos))
        out.append(ReductRule(rule.head[r], False, rule.body_pos))
    return ReductProgram(tuple(out), program.sigma)


@dataclass(frozen=True)
class DefiniteRule:
    head: Literal
    body: tuple[Literal, ...]

    def __str__(self):
        return f"{self.head} :- {', '.join(map(str, self.body))}." if self.body else f"{self.head}."


def brewka_reduct(program: Program, literals: AbstractSet[Literal]) -> tuple[DefiniteRule, ...]:
    """Two-valued ×-reduct: ``C_i <- A_1..A_m`` for every ``C_i`` in the set
    whose better choices and negated body literals are all outside it."""
    require_lpod(program)
    out = []
    for rule in program.rules:
        if any(b in literals for b in rule.body_neg):
            continue
        for c in rule.choices:
            if c in literals:
                out.append(DefiniteRule(c, rule.body_pos))
                break
    return tuple(out)


def least_herbrand_model(rules) -> frozenset:
    model: set = set()
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.head not in model and all(a in model for a in r.body):
                model.add(r.head)
                changed = True
    return frozenset(model)
