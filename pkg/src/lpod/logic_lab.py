"""Exhaustive four-valued truth tables and formula equivalence."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import TooManyVariables
from .evaluation import eval_formula
from .logic import FOUR, TV, Interpretation
from .syntax import Formula, Literal

MAX_VARIABLES = 8


@dataclass(frozen=True)
class TruthTable:
    variables: tuple[Literal, ...]
    rows: tuple[tuple[tuple[TV, ...], TV], ...]

    def column(self) -> tuple[TV, ...]:
        return tuple(v for _, v in self.rows)

    def __str__(self):
        widths = [max(2, len(str(x))) for x in self.variables]
        head = " ".join(f"{str(x):<{w}}" for x, w in zip(self.variables, widths))
        lines = [f"{head} | value".lstrip()]
        for values, result in self.rows:
            cells = " ".join(f"{str(v):<{w}}" for v, w in zip(values, widths))
            lines.append(f"{cells} | {result}".lstrip())
        return "\n".join(lines)


def _assignments(variables):
    if len(variables) > MAX_VARIABLES:
        raise TooManyVariables(f"{len(variables)} variables, at most {MAX_VARIABLES} supported")
    for values in itertools.product(FOUR, repeat=len(variables)):
        yield Interpretation(variables, values)


def truth_table(phi: Formula) -> TruthTable:
    """Rows in lexicographic order of ``F < F* < T* < T``, first variable most significant."""
    variables = phi.variables()
    rows = tuple((i.values, eval_formula(i, phi)) for i in _assignments(variables))
    return TruthTable(variables, rows)


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    variables: tuple[Literal, ...]
    counterexample: dict | None = None
    left: TV | None = None
    right: TV | None = None

    def __bool__(self):
        return self.equivalent


def equivalent(phi1: Formula, phi2: Formula) -> Equivalence:
    """Compare two formulas on every joint assignment of their variables
    (matched by name).  On failure, report the first differing row."""
    variables = tuple(dict.fromkeys(phi1.variables() + phi2.variables()))
    for interp in _assignments(variables):
        left, right = eval_formula(interp, phi1), eval_formula(interp, phi2)
        if left != right:
            return Equivalence(False, variables, interp.as_dict(), left, right)
    return Equivalence(True, variables)
