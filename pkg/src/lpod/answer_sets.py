"""Three-valued answer sets (new semantics), two-valued answer sets (original
semantics) and the collapse/lift correspondence between them."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import AbstractSet, Callable, Iterable, Sequence

from .errors import BudgetExceeded, DisjunctiveReduct, NotABrewkaAnswerSet
from .evaluation import check_domain, is_brewka_model, is_consistent, require_lpod, set_consistent
from .logic import THREE, TV, Interpretation, down_leq
from .reduct import ReductProgram, brewka_reduct, least_herbrand_model, x_reduct
from .syntax import Literal, Program

DEFAULT_BUDGET = 3**16
BREWKA_BUDGET = 2**24


def least_model(reduct: ReductProgram) -> Interpretation:
    """Least fixpoint of the immediate consequence operator of a definite reduct."""
    if not reduct.is_definite():
        raise DisjunctiveReduct("least_model needs single-literal heads")
    current = Interpretation.constant(reduct.sigma, TV.F)
    for _ in range(2 * len(reduct.sigma) + 1):
        nxt = dict.fromkeys(reduct.sigma, TV.F)
        for r in reduct.rules:
            head = r.head_level[0]
            nxt[head] = max(nxt[head], r.body_value(current))
        nxt = Interpretation(reduct.sigma, nxt.values())
        if nxt == current:
            return current
        current = nxt
    raise AssertionError("consequence operator failed to converge")  # pragma: no cover


def is_leq_minimal_model(interp: Interpretation, reduct: ReductProgram) -> bool:
    """Whether ``interp`` is a model of the reduct with no other model pointwise below it."""
    if not reduct.is_model(interp):
        return False
    domain = interp.domain
    below = [down_leq(v, THREE) for v in interp.values]
    for values in itertools.product(*below):
        if values != interp.values and reduct.is_model(Interpretation(domain, values)):
            return False
    return True


def is_answer_set(program: Program, interp: Interpretation) -> bool:
    return answer_set_failure(program, interp) is None


def answer_set_failure(program: Program, interp: Interpretation) -> str | None:
    """``None`` for an answer set, otherwise a one-line reason it is not one."""
    check_domain(interp, program)
    if not is_consistent(interp):
        return "inconsistent"
    reduct = x_reduct(program, interp)
    if program.is_lpod():
        if least_model(reduct) != interp:
            if not reduct.is_model(interp):
                return "not the least model of the reduct (not a model of it)"
            return "not the least model of the reduct"
        return None
    if not reduct.is_model(interp):
        return "not a model of the reduct"
    if not is_leq_minimal_model(interp, reduct):
        return "not a minimal model of the reduct"
    return None


def candidates(sigma: Sequence[Literal], values: Sequence[TV]) -> Iterable[Interpretation]:
    """All interpretations over ``sigma``, lexicographic with the first literal most significant."""
    for combo in itertools.product(values, repeat=len(sigma)):
        yield Interpretation(sigma, combo)


def check_budget(needed: int, budget: int):
    if needed > budget:
        raise BudgetExceeded(needed, budget)


def _keep(pred, program, chunk):
    return [c for c in chunk if pred(program, c)]


def filter_candidates(
    pred: Callable[[Program, Interpretation], bool],
    program: Program,
    pool: Iterable[Interpretation],
    threads: int = 1,
) -> list[Interpretation]:
    """Keep candidates satisfying ``pred``; output order is the input order.

    ``threads > 1`` spreads the checks over worker processes; ``pred`` must
    then be a picklable module-level function.
    """
    if threads <= 1:
        return [c for c in pool if pred(program, c)]
    pool = list(pool)
    size = max(1, len(pool) // (threads * 4))
    chunks = [pool[i : i + size] for i in range(0, len(pool), size)]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        parts = ex.map(partial(_keep, pred, program), chunks)
        return [c for part in parts for c in part]


def enumerate_answer_sets(program: Program, budget: int = DEFAULT_BUDGET, threads: int = 1) -> list[Interpretation]:
    check_budget(3 ** len(program.sigma), budget)
    return filter_candidates(is_answer_set, program, candidates(program.sigma, THREE), threads)


# ------------------------------------------------------ original semantics


def is_brewka_answer_set(program: Program, literals: AbstractSet[Literal]) -> bool:
    literals = frozenset(literals)
    return (
        set_consistent(literals)
        and is_brewka_model(literals, program)
        and least_herbrand_model(brewka_reduct(program, literals)) == literals
    )


def brewka_answer_sets(program: Program, budget: int = BREWKA_BUDGET) -> list[frozenset]:
    require_lpod(program)
    sigma = program.sigma
    check_budget(2 ** len(sigma), budget)
    out = []
    for bits in itertools.product((False, True), repeat=len(sigma)):
        s = frozenset(l for l, b in zip(sigma, bits) if b)
        if is_brewka_answer_set(program, s):
            out.append(s)
    return out


def collapse(interp: Interpretation) -> frozenset:
    return interp.with_value(TV.T)


def forced_fstar(program: Program, literals: AbstractSet[Literal]) -> frozenset:
    """Literals that must take ``F*`` in the three-valued counterpart of a
    two-valued answer set: least fixpoint of adding every choice whose better
    choices are all false, from a rule whose negated body misses the set and
    whose positive body is true or already forced."""
    forced: frozenset = frozenset()
    while True:
        nxt = set()
        for rule in program.rules:
            if any(b in literals for b in rule.body_neg):
                continue
            if not all(a in literals or a in forced for a in rule.body_pos):
                continue
            for c in rule.choices:
                if c in literals:
                    break
                nxt.add(c)
        nxt = frozenset(nxt)
        if nxt == forced:
            return forced
        forced = nxt


def lift(program: Program, literals: AbstractSet[Literal]) -> Interpretation:
    """The unique three-valued answer set whose collapse is ``literals``."""
    require_lpod(program)
    literals = frozenset(literals)
    if not literals <= set(program.sigma) or not is_brewka_answer_set(program, literals):
        raise NotABrewkaAnswerSet(f"{{{', '.join(sorted(map(str, literals)))}}} is not an answer set")
    forced = forced_fstar(program, literals)
    return Interpretation(
        program.sigma,
        (TV.T if l in literals else TV.FSTAR if l in forced else TV.F for l in program.sigma),
    )
