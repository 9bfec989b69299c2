"""Selection formulas: attribute = constant atoms under not/and/or."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import SchemeError
from .relation import Scheme, Tuple


@dataclass(frozen=True)
class Atom:
    attr: str
    value: str

    def holds(self, scheme: Scheme, t: Tuple) -> bool:
        return t[scheme.position(self.attr)] == self.value

    def validate(self, scheme: Scheme) -> None:
        if self.value not in scheme.domain(self.attr):
            raise SchemeError(f"constant {self.value!r} is not in dom({self.attr})")

    def __str__(self):
        return f"{self.attr}={self.value}"


@dataclass(frozen=True)
class Not:
    arg: "Formula"

    def holds(self, scheme, t):
        return not self.arg.holds(scheme, t)

    def validate(self, scheme):
        self.arg.validate(scheme)

    def __str__(self):
        inner = str(self.arg)
        return f"not {inner}" if isinstance(self.arg, (Atom, Not)) else f"not ({inner})"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def holds(self, scheme, t):
        return self.left.holds(scheme, t) and self.right.holds(scheme, t)

    def validate(self, scheme):
        self.left.validate(scheme)
        self.right.validate(scheme)

    def __str__(self):
        return f"{_wrap(self.left, Or)} and {_wrap(self.right, (Or, And))}"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def holds(self, scheme, t):
        return self.left.holds(scheme, t) or self.right.holds(scheme, t)

    def validate(self, scheme):
        self.left.validate(scheme)
        self.right.validate(scheme)

    def __str__(self):
        return f"{self.left} or {_wrap(self.right, Or)}"


Formula = Union[Atom, Not, And, Or]


def _wrap(f, kinds) -> str:
    return f"({f})" if isinstance(f, kinds) else str(f)


def satisfying(formula: Formula, scheme: Scheme) -> frozenset:
    """All tuples of ``scheme`` on which ``formula`` holds."""
    formula.validate(scheme)
    return frozenset(t for t in scheme.tuples if formula.holds(scheme, t))
