"""Operator descriptors shared by the three algebra layers."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import SchemeError
from .formula import Formula

BINARY = ("union", "intersect", "join")
UNARY = ("complement", "select", "project")


@dataclass(frozen=True)
class Op:
    kind: str
    formula: Formula | None = None
    attrs: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.kind not in BINARY + UNARY:
            raise SchemeError(f"unknown operator {self.kind!r}")
        if self.kind == "select" and self.formula is None:
            raise SchemeError("select needs a formula")
        if self.kind == "project":
            if not self.attrs:
                raise SchemeError("project needs at least one attribute")
            object.__setattr__(self, "attrs", tuple(self.attrs))

    @property
    def arity(self) -> int:
        return 2 if self.kind in BINARY else 1

    def __str__(self):
        if self.kind == "select":
            return f"select[{self.formula}]"
        if self.kind == "project":
            return f"project[{','.join(self.attrs)}]"
        return self.kind


UNION = Op("union")
INTERSECT = Op("intersect")
COMPLEMENT = Op("complement")
JOIN = Op("join")


def select(formula: Formula) -> Op:
    return Op("select", formula=formula)


def project(attrs) -> Op:
    if isinstance(attrs, str):
        attrs = (attrs,)
    return Op("project", attrs=tuple(attrs))


def as_op(op: Op | str) -> Op:
    return op if isinstance(op, Op) else Op(op)


def check_arity(op: Op, args) -> None:
    if len(args) != op.arity:
        raise TypeError(f"{op} takes {op.arity} operand(s), got {len(args)}")
    if op.kind in ("union", "intersect") and args[0].scheme != args[1].scheme:
        raise SchemeError(f"{op} needs operands on the same scheme")
