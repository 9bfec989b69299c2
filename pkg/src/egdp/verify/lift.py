"""The set lift of a GDP operator: apply it across all combinations of members."""
from __future__ import annotations

import itertools
from typing import Callable, Iterable

from ..errors import InconsistentError
from ..gdp import g_apply
from ..ops import Op, as_op


def lift_op(
    op: Op | str,
    m1: Iterable,
    m2: Iterable | None = None,
    apply: Callable = g_apply,
) -> frozenset:
    """``{op(R1, R2) : R1 in m1, R2 in m2}`` (or the unary image of ``m1``).

    Images come back in ``g_reduce`` form; combinations whose image turns
    out contradictory are dropped, since they stand for no relation.
    """
    op = as_op(op)
    groups = [list(m1)] if m2 is None else [list(m1), list(m2)]
    out = set()
    for combo in itertools.product(*groups):
        try:
            out.add(apply(op, *combo))
        except InconsistentError:
            continue
    return frozenset(out)
