"""Answer sets and most-preferred models of logic programs with ordered disjunction."""

from .answer_sets import (
    brewka_answer_sets,
    collapse,
    enumerate_answer_sets,
    is_answer_set,
    least_model,
    lift,
)
from .characterization import answer_sets_oracle, four_valued_models, is_solid
from .errors import (
    BudgetExceeded,
    DomainError,
    LpodError,
    LpodSyntaxError,
    NotABrewkaAnswerSet,
    NotAnLpod,
)
from .evaluation import eval_formula, is_brewka_model, is_consistent, is_model
from .logic import TV, Interpretation, interp_leq, interp_prec, interp_preceq, times
from .logic_lab import equivalent, truth_table
from .preference import (
    brewka_most_preferred,
    degree,
    fstar_set,
    inclusion_preferred,
    most_preferred,
    preferred,
)
from .reduct import brewka_reduct, x_reduct
from .syntax import Literal, Program, Rule, parse_formula, parse_program

__version__ = "0.1.0"

__all__ = [
    "answer_sets_oracle",
    "brewka_answer_sets",
    "brewka_most_preferred",
    "brewka_reduct",
    "BudgetExceeded",
    "collapse",
    "degree",
    "DomainError",
    "enumerate_answer_sets",
    "equivalent",
    "eval_formula",
    "four_valued_models",
    "fstar_set",
    "inclusion_preferred",
    "interp_leq",
    "interp_prec",
    "interp_preceq",
    "Interpretation",
    "is_answer_set",
    "is_brewka_model",
    "is_consistent",
    "is_model",
    "is_solid",
    "least_model",
    "lift",
    "Literal",
    "LpodError",
    "LpodSyntaxError",
    "most_preferred",
    "NotABrewkaAnswerSet",
    "NotAnLpod",
    "parse_formula",
    "parse_program",
    "preferred",
    "Program",
    "Rule",
    "times",
    "truth_table",
    "TV",
    "x_reduct",
]
