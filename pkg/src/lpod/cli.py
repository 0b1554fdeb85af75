"""Command-line front end.

Exit codes: 0 ok, 1 input error, 2 budget exceeded, 3 negative verdict
(no answer set, not an answer set, not equivalent), 4 unsupported fragment.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import answer_sets as asets
from .characterization import answer_sets_oracle
from .errors import BudgetExceeded, LpodError, NotAnLpod
from .logic import THREE, Interpretation
from .logic_lab import equivalent
from .preference import brewka_most_preferred, degree_profile, fstar_set, most_preferred
from .reduct import x_reduct
from .syntax import Program, parse_formula, parse_program

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_NEGATIVE, EXIT_FRAGMENT = 0, 1, 2, 3, 4


def _sorted_strs(literals):
    return sorted(str(l) for l in literals)


@dataclass
class AnswerSetReport:
    assignment: dict
    fstar_set: list
    collapse: list
    most_preferred: bool
    brewka_degrees: dict | None = field(default=None)

    @classmethod
    def from_interpretation(cls, interp: Interpretation, preferred: bool) -> AnswerSetReport:
        return cls(interp.to_json(), _sorted_strs(fstar_set(interp)), _sorted_strs(asets.collapse(interp)), preferred)

    @classmethod
    def from_literal_set(cls, program: Program, literals, preferred: bool) -> AnswerSetReport:
        assignment = {str(l): "T" if l in literals else "F" for l in program.sigma}
        degrees = {str(i): d for i, d in enumerate(degree_profile(literals, program), start=1)}
        return cls(assignment, [], _sorted_strs(literals), preferred, degrees)

    def to_json(self) -> dict:
        out = {
            "assignment": self.assignment,
            "fstar_set": self.fstar_set,
            "collapse": self.collapse,
            "most_preferred": self.most_preferred,
        }
        if self.brewka_degrees is not None:
            out["brewka_degrees"] = self.brewka_degrees
        return out


def solve_reports(program: Program, semantics: str, budget: int | None = None, threads: int = 1) -> list[AnswerSetReport]:
    if semantics == "brewka":
        sets = asets.brewka_answer_sets(program, **_budget(budget))
        best = brewka_most_preferred(program, **_budget(budget))
        return [AnswerSetReport.from_literal_set(program, s, s in best) for s in sets]
    if semantics == "oracle":
        found = answer_sets_oracle(program, threads=threads, **_budget(budget))
    else:
        found = asets.enumerate_answer_sets(program, threads=threads, **_budget(budget))
    best = most_preferred(found)
    return [AnswerSetReport.from_interpretation(m, m in best) for m in found]


def _budget(budget):
    return {} if budget is None else {"budget": budget}


def _read_program(path) -> Program:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read())


def _read_interp(program: Program, text: str) -> Interpretation:
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("interpretation must be a JSON object")
    interp = Interpretation.from_mapping(program.sigma, data)
    if any(v not in THREE for v in interp.values):
        raise ValueError("interpretation values must be T, F* or F")
    return interp


def _dump(obj):
    print(json.dumps(obj, indent=2))


def cmd_solve(args) -> int:
    program = _read_program(args.file)
    reports = solve_reports(program, args.semantics, args.budget, args.threads)
    best = [i for i, r in enumerate(reports) if r.most_preferred]
    if args.json:
        _dump(
            {
                "program": args.file,
                "semantics": args.semantics,
                "sigma": [str(l) for l in program.sigma],
                "answer_sets": [r.to_json() for r in reports],
                "most_preferred_indices": best,
            }
        )
    else:
        for i, r in enumerate(reports, start=1):
            mark = "  [most preferred]" if r.most_preferred else ""
            if args.semantics == "brewka":
                degrees = " ".join(f"{k}:{v}" for k, v in r.brewka_degrees.items())
                print(f"Answer set {i}: {{{', '.join(r.collapse)}}}  degrees {degrees}{mark}")
            else:
                body = ", ".join(f"{k}={v}" for k, v in r.assignment.items())
                print(f"Answer set {i}: {{{body}}}{mark}")
                print(f"  F*: {{{', '.join(r.fstar_set)}}}  collapse: {{{', '.join(r.collapse)}}}")
        if not reports:
            print("No answer sets.")
    return EXIT_OK if reports else EXIT_NEGATIVE


def compare(program: Program, budget: int | None = None) -> dict:
    new = most_preferred(asets.enumerate_answer_sets(program, **_budget(budget)))
    new_sets = sorted((_sorted_strs(asets.collapse(m)) for m in new))
    old_sets = sorted(_sorted_strs(s) for s in brewka_most_preferred(program, **_budget(budget)))
    return {
        "new_most_preferred": new_sets,
        "brewka_most_preferred": old_sets,
        "verdict": "AGREES" if new_sets == old_sets else "DIVERGES",
    }


def cmd_compare(args) -> int:
    program = _read_program(args.file)
    result = compare(program, args.budget)
    if args.json:
        _dump({"program": args.file, **result})
    else:
        fmt = lambda sets: "; ".join("{" + ", ".join(s) + "}" for s in sets) or "(none)"
        print(f"new:    {fmt(result['new_most_preferred'])}")
        print(f"brewka: {fmt(result['brewka_most_preferred'])}")
        print(result["verdict"])
    return EXIT_OK


def cmd_check(args) -> int:
    program = _read_program(args.file)
    interp = _read_interp(program, args.interp)
    reason = asets.answer_set_failure(program, interp)
    if reason is None:
        print("answer set")
        return EXIT_OK
    print(f"not an answer set: {reason}")
    return EXIT_NEGATIVE


def cmd_reduct(args) -> int:
    program = _read_program(args.file)
    sys.stdout.write(str(x_reduct(program, _read_interp(program, args.interp))))
    return EXIT_OK


def cmd_equiv(args) -> int:
    result = equivalent(parse_formula(args.expr1), parse_formula(args.expr2))
    row = None
    if not result:
        row = {str(l): str(v) for l, v in result.counterexample.items()}
    if args.json:
        out = {"equivalent": result.equivalent, "variables": [str(v) for v in result.variables]}
        if row is not None:
            out.update(counterexample=row, left=str(result.left), right=str(result.right))
        _dump(out)
    elif result:
        print("EQUIVALENT")
    else:
        assignment = ", ".join(f"{k}={v}" for k, v in row.items())
        print("NOT EQUIVALENT")
        print(f"counterexample: {assignment}  left={result.left} right={result.right}")
    return EXIT_OK if result else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lpod", description="Answer sets of programs with ordered disjunction.")
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_opts(p):
        p.add_argument("--budget", type=int, default=None, help="cap on the number of enumerated candidates")

    p = sub.add_parser("solve", help="print all answer sets and flag the most preferred")
    p.add_argument("file")
    p.add_argument("--semantics", choices=("new", "brewka", "oracle"), default="new")
    p.add_argument("--json", action="store_true")
    p.add_argument("--all", action="store_true", help="print all answer sets (the default)")
    p.add_argument("--threads", type=int, default=1)
    budget_opts(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("compare", help="compare most-preferred answer sets of both semantics")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    budget_opts(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("check", help="test whether an interpretation is an answer set")
    p.add_argument("file")
    p.add_argument("--interp", required=True, help='JSON object, e.g. {"a": "T", "b": "F*"}, or @file')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduct", help="print the reduct relative to an interpretation")
    p.add_argument("file")
    p.add_argument("--interp", required=True)
    p.set_defaults(func=cmd_reduct)

    p = sub.add_parser("equiv", help="decide four-valued equivalence of two formulas")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_equiv)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAnLpod as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FRAGMENT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LpodError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
