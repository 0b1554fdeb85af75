"""Answer sets without any reduct: consistent, solid models that are minimal
among all four-valued models under the ``preceq`` order.

Used as an independent oracle for :mod:`lpod.answer_sets`.
"""

from __future__ import annotations

import itertools

from .answer_sets import candidates, check_budget, filter_candidates
from .evaluation import is_consistent, is_model
from .logic import FOUR, THREE, TV, Interpretation, down_preceq
from .syntax import Program

ORACLE_BUDGET = 4**12


def is_solid(interp: Interpretation) -> bool:
    return TV.TSTAR not in interp.values


def four_valued_models(program: Program, budget: int = ORACLE_BUDGET) -> list[Interpretation]:
    check_budget(4 ** len(program.sigma), budget)
    return [i for i in candidates(program.sigma, FOUR) if is_model(i, program)]


def is_preceq_minimal_model(program: Program, interp: Interpretation) -> bool:
    """No four-valued model other than ``interp`` lies ``preceq``-below it.

    Competitors range over every four-valued interpretation, solid or not.
    """
    if not is_model(interp, program):
        return False
    below = [down_preceq(v, FOUR) for v in interp.values]
    for values in itertools.product(*below):
        if values != interp.values and is_model(Interpretation(interp.domain, values), program):
            return False
    return True


def is_oracle_answer_set(program: Program, interp: Interpretation) -> bool:
    return is_solid(interp) and is_consistent(interp) and is_preceq_minimal_model(program, interp)


def answer_sets_oracle(program: Program, budget: int = ORACLE_BUDGET, threads: int = 1) -> list[Interpretation]:
    """Consistent, solid, ``preceq``-minimal four-valued models of ``program``.

    Non-solid interpretations can never survive the final filter, so only
    solid candidates are visited; minimality is still checked against the
    full four-valued space below each candidate.  Survivors are returned as
    three-valued interpretations (the values are shared).
    """
    check_budget(4 ** len(program.sigma), budget)
    return filter_candidates(is_oracle_answer_set, program, candidates(program.sigma, THREE), threads)
