"""Truth values, the ordered-disjunction truth function and interpretations.

A single enum carries both lattices: the three-valued logic uses
``F < F* < T`` and the four-valued one inserts ``T*`` between ``F*`` and
``T``.  Because the three-valued values keep their relative order, a
three-valued interpretation is also a four-valued one, unchanged.

Two orders matter:

* the truth order ``<=`` (``int`` comparison on the enum), used by the
  connectives and the least-model construction;
* the minimality order ``preceq``: ``F`` is below everything and ``T*`` is
  below ``T``; ``F*`` is incomparable with ``T*`` and ``T``.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from typing import Iterable

from .errors import DomainError
from .syntax import Literal


class TV(enum.IntEnum):
    F = 0
    FSTAR = 1
    TSTAR = 2
    T = 3

    def __str__(self):
        return _NAMES[self]

    @classmethod
    def parse(cls, text: str) -> TV:
        try:
            return _BY_NAME[text]
        except KeyError:
            raise ValueError(f"unknown truth value {text!r}") from None


_NAMES = {TV.F: "F", TV.FSTAR: "F*", TV.TSTAR: "T*", TV.T: "T"}
_BY_NAME = {v: k for k, v in _NAMES.items()}

THREE = (TV.F, TV.FSTAR, TV.T)
FOUR = (TV.F, TV.FSTAR, TV.TSTAR, TV.T)


def times(u: TV, v: TV) -> TV:
    """Ordered disjunction: fall through to ``v`` only when ``u`` is ``F*``."""
    return v if u is TV.FSTAR else u


def preceq(u: TV, v: TV) -> bool:
    return u == v or u is TV.F or (u is TV.TSTAR and v is TV.T)


def prec(u: TV, v: TV) -> bool:
    return u != v and preceq(u, v)


def down_leq(v: TV, values: Iterable[TV] = FOUR) -> tuple[TV, ...]:
    """All ``u`` in ``values`` with ``u <= v``."""
    return tuple(u for u in values if u <= v)


def down_preceq(v: TV, values: Iterable[TV] = FOUR) -> tuple[TV, ...]:
    """All ``u`` in ``values`` with ``u preceq v``."""
    return tuple(u for u in values if preceq(u, v))


class Interpretation(Mapping):
    """Total, immutable map from a finite ordered domain of literals to truth values.

    Looking up a literal outside the domain raises :class:`DomainError`.
    """

    __slots__ = ("domain", "values", "_index", "_hash")

    def __init__(self, domain: Iterable[Literal], values: Iterable[TV]):
        self.domain = tuple(domain)
        self.values = tuple(TV(v) for v in values)
        if len(self.domain) != len(self.values):
            raise ValueError("domain and values differ in length")
        self._index = {l: i for i, l in enumerate(self.domain)}
        if len(self._index) != len(self.domain):
            raise ValueError("duplicate literal in domain")
        self._hash = None

    @classmethod
    def from_mapping(cls, domain: Iterable[Literal], assignment: Mapping) -> Interpretation:
        """Build from a mapping that must cover ``domain`` exactly.

        Keys may be :class:`Literal` or literal text; values may be
        :class:`TV` or their text form ("T", "T*", "F*", "F").
        """
        domain = tuple(domain)
        norm = {}
        for k, v in assignment.items():
            lit = k if isinstance(k, Literal) else Literal.parse(k)
            norm[lit] = v if isinstance(v, TV) else TV.parse(v)
        missing = [str(l) for l in domain if l not in norm]
        extra = sorted(str(l) for l in norm if l not in set(domain))
        if missing or extra:
            raise DomainError(f"assignment does not match the domain (missing: {missing}, extra: {extra})")
        return cls(domain, (norm[l] for l in domain))

    @classmethod
    def constant(cls, domain: Iterable[Literal], value: TV) -> Interpretation:
        domain = tuple(domain)
        return cls(domain, (value,) * len(domain))

    def __getitem__(self, lit):
        try:
            return self.values[self._index[lit]]
        except KeyError:
            raise DomainError(f"literal {lit} is outside the domain") from None

    def __contains__(self, lit):
        return lit in self._index

    def __iter__(self):
        return iter(self.domain)

    def __len__(self):
        return len(self.domain)

    def __eq__(self, other):
        if isinstance(other, Interpretation):
            return self.as_dict() == other.as_dict()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(zip(self.domain, self.values)))
        return self._hash

    def as_dict(self) -> dict:
        return dict(zip(self.domain, self.values))

    def replace(self, updates: Mapping) -> Interpretation:
        outside = [str(l) for l in updates if l not in self._index]
        if outside:
            raise DomainError(f"literals outside the domain: {outside}")
        return Interpretation(self.domain, (updates.get(l, v) for l, v in zip(self.domain, self.values)))

    def is_three_valued(self) -> bool:
        return TV.TSTAR not in self.values

    def with_value(self, value: TV) -> frozenset:
        return frozenset(l for l, v in zip(self.domain, self.values) if v is value)

    def to_json(self) -> dict:
        return {str(l): str(v) for l, v in zip(self.domain, self.values)}

    def __repr__(self):
        body = ", ".join(f"{l}={v}" for l, v in zip(self.domain, self.values))
        return f"{{{body}}}"

    __str__ = __repr__


def _pairs(i1: Interpretation, i2: Interpretation):
    if set(i1.domain) != set(i2.domain):
        raise DomainError("interpretations are over different domains")
    return ((v, i2[l]) for l, v in zip(i1.domain, i1.values))


def interp_leq(i1: Interpretation, i2: Interpretation) -> bool:
    return all(u <= v for u, v in _pairs(i1, i2))


def interp_lt(i1: Interpretation, i2: Interpretation) -> bool:
    """Pointwise ``<=`` and different somewhere."""
    return interp_leq(i1, i2) and i1 != i2


def interp_lt_everywhere(i1: Interpretation, i2: Interpretation) -> bool:
    """``i1(L) < i2(L)`` for every literal (the everywhere-strict reading)."""
    return all(u < v for u, v in _pairs(i1, i2))


def interp_preceq(i1: Interpretation, i2: Interpretation) -> bool:
    return all(preceq(u, v) for u, v in _pairs(i1, i2))


def interp_prec(i1: Interpretation, i2: Interpretation) -> bool:
    """Pointwise ``preceq`` and different somewhere."""
    return interp_preceq(i1, i2) and i1 != i2


def interp_prec_everywhere(i1: Interpretation, i2: Interpretation) -> bool:
    return all(prec(u, v) for u, v in _pairs(i1, i2))
