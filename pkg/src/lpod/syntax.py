"""Abstract syntax for (disjunctive) programs with ordered disjunction and
for the propositional formulas of the many-valued logic, plus a hand-written
recursive descent parser and renderers for both.

Program text::

    % comments run to end of line
    wine * beer.
    -wine.
    pub * (cinema v tv).
    gas * diesel :- mercedes, not broke.

Formula text uses ``not``, ``&``, ``v``, ``*`` and ``<-`` (tightest first,
all binary operators left-associative) and the constant ``F*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import EmptyDisjunct, EmptyHead, LpodSyntaxError

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
KEYWORDS = {"not", "v"}


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    strong_neg: bool = False

    def complement(self) -> Literal:
        return Literal(self.atom, not self.strong_neg)

    @classmethod
    def parse(cls, text: str) -> Literal:
        text = text.strip()
        neg = text.startswith("-")
        atom = text[1:] if neg else text
        if not IDENT_RE.fullmatch(atom) or atom in KEYWORDS:
            raise ValueError(f"not a literal: {text!r}")
        return cls(atom, neg)

    def __str__(self):
        return f"-{self.atom}" if self.strong_neg else self.atom


@dataclass(frozen=True)
class Rule:
    """``head[0] * head[1] * ... :- body_pos, not body_neg``.

    Every head level is a classical disjunction of literals.
    """

    head: tuple[tuple[Literal, ...], ...]
    body_pos: tuple[Literal, ...] = ()
    body_neg: tuple[Literal, ...] = ()

    def __post_init__(self):
        if not self.head:
            raise ValueError("rule head needs at least one level")
        if any(not level for level in self.head):
            raise ValueError("head levels must be nonempty")

    def is_lpod_rule(self) -> bool:
        return all(len(level) == 1 for level in self.head)

    @property
    def choices(self) -> tuple[Literal, ...]:
        """Head literals C1..Cn of an LPOD rule."""
        return tuple(level[0] for level in self.head)

    def literals(self) -> Iterator[Literal]:
        for level in self.head:
            yield from level
        yield from self.body_pos
        yield from self.body_neg

    def to_formula(self) -> Formula:
        head = Times(tuple(Or(tuple(Lit(l) for l in level)) for level in self.head))
        body = And(tuple(Lit(a) for a in self.body_pos) + tuple(Not(Lit(b)) for b in self.body_neg))
        return Implies(head, body)

    def __str__(self):
        return render_rule(self)


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...]
    sigma: tuple[Literal, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        seen = dict.fromkeys(l for r in self.rules for l in r.literals())
        object.__setattr__(self, "sigma", tuple(seen))

    def is_lpod(self) -> bool:
        return all(r.is_lpod_rule() for r in self.rules)

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __str__(self):
        return render_program(self)


# ---------------------------------------------------------------- formulas


class Formula:
    """Base of the formula tree. ``And``, ``Or`` and ``Times`` are n-ary."""

    def literals(self) -> Iterator[Literal]:
        raise NotImplementedError

    def variables(self) -> tuple[Literal, ...]:
        """Distinct literals in order of first occurrence."""
        return tuple(dict.fromkeys(self.literals()))

    def __str__(self):
        return render_formula(self)


@dataclass(frozen=True)
class Lit(Formula):
    literal: Literal

    def literals(self):
        yield self.literal


@dataclass(frozen=True)
class FStar(Formula):
    def literals(self):
        return iter(())


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula

    def literals(self):
        return self.arg.literals()


@dataclass(frozen=True)
class Implies(Formula):
    """``head <- body``."""

    head: Formula
    body: Formula

    def literals(self):
        yield from self.head.literals()
        yield from self.body.literals()


@dataclass(frozen=True)
class _NAry(Formula):
    args: tuple[Formula, ...]

    def literals(self):
        for a in self.args:
            yield from a.literals()


class And(_NAry):
    """Conjunction; the empty conjunction is true."""


class Or(_NAry):
    pass


class Times(_NAry):
    """Ordered disjunction."""


# ------------------------------------------------------------------ lexer

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<fstar>F\*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<if>:-)
  | (?P<larrow><-)
  | (?P<punct>[*&,.()\-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, not, v, fstar, eof, or the punctuation text itself
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise LpodSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "ident":
            tokens.append(Token(value if value in KEYWORDS else "ident", value, line, col))
        elif kind == "fstar":
            tokens.append(Token("fstar", value, line, col))
        elif kind in ("if", "larrow", "punct"):
            tokens.append(Token(value, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


_DESCRIBE = {"ident": "identifier", "eof": "end of input", "fstar": "'F*'"}


def _describe(kind):
    return _DESCRIBE.get(kind, repr(kind))


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset=1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "eof":
            self.pos += 1
        return t

    def accept(self, kind) -> Token | None:
        if self.tok.kind == kind:
            return self.advance()
        return None

    def error(self, expected: Iterable[str], tok: Token | None = None, cls=LpodSyntaxError):
        tok = tok or self.tok
        wanted = " or ".join(_describe(k) for k in expected)
        found = _describe(tok.kind) if tok.kind in ("eof", "fstar") else repr(tok.text)
        return cls(f"expected {wanted}, found {found}", tok.line, tok.column)

    def expect(self, kind) -> Token:
        if self.tok.kind != kind:
            raise self.error([kind])
        return self.advance()

    def literal(self) -> Literal:
        neg = self.accept("-") is not None
        if self.tok.kind != "ident":
            raise self.error(["ident"] if neg else ["-", "ident"])
        return Literal(self.advance().text, neg)

    def at_literal(self) -> bool:
        return self.tok.kind == "ident" or (self.tok.kind == "-" and self.peek().kind == "ident")

    # -- programs

    def program(self) -> Program:
        rules = []
        while self.tok.kind != "eof":
            rules.append(self.rule())
        return Program(tuple(rules))

    def rule(self) -> Rule:
        if self.tok.kind in (":-", "."):
            t = self.tok
            raise EmptyHead("rule head is empty (constraints are not supported)", t.line, t.column)
        head = self.head()
        pos, neg = [], []
        if self.accept(":-"):
            while True:
                if self.accept("not"):
                    neg.append(self.literal())
                elif self.at_literal():
                    pos.append(self.literal())
                else:
                    raise self.error(["not", "-", "ident"])
                if not self.accept(","):
                    break
        if self.tok.kind != ".":
            expected = [",", "."] if pos or neg else ["*", "v", ":-", "."]
            raise self.error(expected)
        self.advance()
        return Rule(tuple(head), tuple(pos), tuple(neg))

    def head(self) -> list[tuple[Literal, ...]]:
        levels = []
        bare_disjunction = None
        while True:
            start = self.tok
            if self.accept("("):
                if self.tok.kind == ")":
                    raise EmptyDisjunct("empty disjunction in rule head", start.line, start.column)
                level = [self.literal()]
                while self.accept("v"):
                    level.append(self.literal())
                self.expect(")")
            else:
                level = [self.literal()]
                while self.accept("v"):
                    level.append(self.literal())
                if len(level) > 1 and bare_disjunction is None:
                    bare_disjunction = start
            levels.append(tuple(level))
            if not self.accept("*"):
                break
        if bare_disjunction is not None and len(levels) > 1:
            t = bare_disjunction
            raise LpodSyntaxError(
                "a disjunctive head level must be parenthesized when the head has several levels",
                t.line,
                t.column,
            )
        return levels

    # -- formulas, precedence: not > & > v > * > <-

    def formula(self) -> Formula:
        left = self.times()
        while self.accept("<-"):
            left = Implies(left, self.times())
        return left

    def _nary(self, op, cls, sub):
        args = [sub()]
        while self.accept(op):
            args.append(sub())
        if len(args) == 1:
            return args[0]
        flat = []
        for a in args:
            flat.extend(a.args if type(a) is cls else (a,))
        return cls(tuple(flat))

    def times(self):
        return self._nary("*", Times, self.disj)

    def disj(self):
        return self._nary("v", Or, self.conj)

    def conj(self):
        return self._nary("&", And, self.unary)

    def unary(self) -> Formula:
        if self.accept("not"):
            return Not(self.unary())
        if self.accept("fstar"):
            return FStar()
        if self.accept("("):
            f = self.formula()
            self.expect(")")
            return f
        if self.at_literal():
            return Lit(self.literal())
        raise self.error(["not", "fstar", "(", "-", "ident"])


def parse_program(text: str) -> Program:
    return _Parser(text).program()


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.tok.kind != "eof":
        raise p.error(["eof"])
    return f


# --------------------------------------------------------------- rendering


def render_level(level: tuple[Literal, ...], bracket: bool) -> str:
    text = " v ".join(map(str, level))
    return f"({text})" if bracket and len(level) > 1 else text


def render_rule(rule: Rule) -> str:
    bracket = len(rule.head) > 1
    head = " * ".join(render_level(level, bracket) for level in rule.head)
    body = [str(a) for a in rule.body_pos] + [f"not {b}" for b in rule.body_neg]
    return f"{head} :- {', '.join(body)}." if body else f"{head}."


def render_program(program: Program) -> str:
    return "".join(render_rule(r) + "\n" for r in program.rules)


_PREC = {Implies: 0, Times: 1, Or: 2, And: 3, Not: 4, Lit: 5, FStar: 5}
_OPS = {Times: " * ", Or: " v ", And: " & "}


def render_formula(phi: Formula, parent: int = -1) -> str:
    prec = _PREC[type(phi)]
    if isinstance(phi, Lit):
        return str(phi.literal)
    if isinstance(phi, FStar):
        return "F*"
    if isinstance(phi, Not):
        return "not " + render_formula(phi.arg, prec)
    if isinstance(phi, Implies):
        # left-assoc: a nested implication on the right needs parens
        text = f"{render_formula(phi.head, prec - 1)} <- {render_formula(phi.body, prec)}"
    else:
        if not phi.args:
            return "(empty)"
        text = _OPS[type(phi)].join(render_formula(a, prec) for a in phi.args)
    return f"({text})" if prec <= parent else text
