"""Bitmask evaluation engine behind the search-heavy modules.

States are numbered by position and every extension is an int bitmask.
A ModelContext precomputes, per coalition, the possible outcome sets of
each joint action; from those one table lookup answers "where can this
coalition ensure a goal with this extension".  Formulas compile once
into plain lambdas over the table, so scanning a formula over thousands
of models costs about a microsecond per model.

Everything here is internal.  The reference clauses live in `semantics`
and stay the source of truth; verdicts derived from this engine are
replayed through them before being handed out.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .formula import (
    Ability, And, Atom, Bot, Formula, Iff, Implies, Inability, Not, Or, Top,
)
from .model import Bounds, CoalitionModel, enumerate_models

__all__ = ["ModelContext", "build_space", "compile_formula"]


class ModelContext:
    """One model's lookup tables, aligned to a fixed proposition list."""

    __slots__ = ("model", "n_states", "full", "init_bit", "prop_masks",
                 "table")

    def __init__(self, m: CoalitionModel, props: tuple[str, ...]):
        self.model = m
        ns = len(m.states)
        self.n_states = ns
        self.full = (1 << ns) - 1
        index = {s: i for i, s in enumerate(m.states)}
        self.init_bit = 1 << index[m.initial]
        self.prop_masks = tuple(
            sum(1 << index[s] for s in m.valuation.get(p, ()))
            for p in props)

        # For each coalition: group the full profiles by the coalition's
        # share and record each group's set of reachable states.  The
        # coalition can ensure a goal at a state exactly when one of its
        # joint actions has all reachable states inside the goal.
        full_profiles = list(product(*m.actions))
        n = m.n_agents
        table = []
        for cmask in range(1 << n):
            members = [i for i in range(n) if cmask >> i & 1]
            per_state = []
            for s in m.states:
                reach: dict[tuple[str, ...], int] = {}
                for prof in full_profiles:
                    key = tuple(prof[i] for i in members)
                    bit = 1 << index[m.outcome[(s, prof)]]
                    reach[key] = reach.get(key, 0) | bit
                per_state.append(list(reach.values()))
            row = []
            for goal in range(self.full + 1):
                bits = 0
                for si in range(ns):
                    for cand in per_state[si]:
                        if cand & ~goal == 0:
                            bits |= 1 << si
                            break
                row.append(bits)
            table.append(row)
        self.table = table


def compile_formula(f: Formula, props: tuple[str, ...]):
    """Compile f to a lambda (table, full, prop_masks) -> extension mask.

    The compiled form is valid for any ModelContext built with the same
    proposition list and at least max_agent(f) agents.
    """
    index = {p: i for i, p in enumerate(props)}

    def emit(g: Formula) -> str:
        if isinstance(g, Atom):
            if g.name not in index:
                raise ValueError(f"atom {g.name!r} not among props {props}")
            return f"pm[{index[g.name]}]"
        if isinstance(g, Top):
            return "full"
        if isinstance(g, Bot):
            return "0"
        if isinstance(g, Not):
            return f"(full^{emit(g.body)})"
        if isinstance(g, And):
            return f"({emit(g.left)}&{emit(g.right)})"
        if isinstance(g, Or):
            return f"({emit(g.left)}|{emit(g.right)})"
        if isinstance(g, Implies):
            return f"((full^{emit(g.left)})|{emit(g.right)})"
        if isinstance(g, Iff):
            return f"(full^({emit(g.left)}^{emit(g.right)}))"
        if isinstance(g, Ability):
            return f"t[{g.coalition.bitmask()}][{emit(g.body)}]"
        if isinstance(g, Inability):
            return f"(full^t[{g.coalition.bitmask()}][{emit(g.body)}])"
        raise TypeError(f"not a formula: {g!r}")

    return eval(f"lambda t, full, pm: {emit(f)}")


@lru_cache(maxsize=None)
def build_space(b: Bounds) -> tuple[ModelContext, ...]:
    """All models within b, each wrapped in its evaluation context.

    Cached per Bounds value: the same space is typically scanned by
    thousands of formulas in a row.
    """
    return tuple(ModelContext(m, b.props) for m in enumerate_models(b))
