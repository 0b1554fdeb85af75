"""Seeded random programs for differential and property testing."""

from __future__ import annotations

import random

from .syntax import Literal, Program, Rule

ATOMS = ("a", "b", "c", "d", "e")


def random_literal(rng: random.Random, atoms, strong_neg: bool) -> Literal:
    return Literal(rng.choice(atoms), strong_neg and rng.random() < 0.3)


def random_rule(
    rng: random.Random,
    atoms,
    *,
    max_levels: int = 3,
    max_width: int = 1,
    max_body: int = 2,
    strong_neg: bool = True,
) -> Rule:
    head = tuple(
        tuple(random_literal(rng, atoms, strong_neg) for _ in range(rng.randint(1, max_width)))
        for _ in range(rng.randint(1, max_levels))
    )
    pos, neg = [], []
    for _ in range(rng.randint(0, max_body)):
        (neg if rng.random() < 0.5 else pos).append(random_literal(rng, atoms, strong_neg))
    return Rule(head, tuple(pos), tuple(neg))


def random_program(
    rng: random.Random,
    *,
    n_atoms: int = 3,
    max_rules: int = 4,
    max_levels: int = 3,
    max_width: int = 1,
    max_body: int = 2,
    strong_neg: bool = True,
) -> Program:
    """A program over the first ``n_atoms`` of a fixed alphabet.

    ``max_width == 1`` gives LPODs; ``max_levels == 1`` with width 1 gives
    programs without ordered disjunction.
    """
    atoms = ATOMS[:n_atoms]
    rules = tuple(
        random_rule(
            rng, atoms, max_levels=max_levels, max_width=max_width, max_body=max_body, strong_neg=strong_neg
        )
        for _ in range(rng.randint(1, max_rules))
    )
    return Program(rules)


def lpod_batch(seed: int, count: int) -> list[Program]:
    rng = random.Random(seed)
    return [random_program(rng, n_atoms=3, max_rules=4, max_levels=3, max_body=2) for _ in range(count)]


def dlpod_batch(seed: int, count: int) -> list[Program]:
    rng = random.Random(seed)
    return [random_program(rng, n_atoms=3, max_rules=3, max_levels=2, max_width=2, max_body=2) for _ in range(count)]


def plain_batch(seed: int, count: int) -> list[Program]:
    """Extended programs: single-literal heads, no ordered disjunction."""
    rng = random.Random(seed)
    return [random_program(rng, n_atoms=3, max_rules=4, max_levels=1, max_body=2) for _ in range(count)]
