"""Eliminating the inability operator by definitional translation.

I[C] f is definable as !E[C] f; the translation rewrites every
Inability node that way and leaves the rest of the structure alone.
`check_truth_preservation` grinds the claimed equivalence against an
enumerated grid of formulas, models, and states.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._eval import build_space, compile_formula
from .errors import BoundsInsufficientForFormula, BoundsTooSmall
from .formula import (
    Ability, And, Atom, Bot, Formula, Iff, Implies, Inability, Not, Or, Top,
    enumerate_formulas, max_agent,
)
from .model import Bounds, CoalitionModel
from .semantics import extension

__all__ = [
    "PreservationReport", "check_truth_preservation", "is_cl_fragment",
    "translate",
]


def translate(f: Formula) -> Formula:
    """Rewrite I[C] g to !E[C] g, recursively; everything else maps as is."""
    if isinstance(f, (Atom, Top, Bot)):
        return f
    if isinstance(f, Not):
        return Not(translate(f.body))
    if isinstance(f, (And, Or, Implies, Iff)):
        return type(f)(translate(f.left), translate(f.right))
    if isinstance(f, Ability):
        return Ability(f.coalition, translate(f.body))
    if isinstance(f, Inability):
        return Not(Ability(f.coalition, translate(f.body)))
    raise TypeError(f"not a formula: {f!r}")


def is_cl_fragment(f: Formula) -> bool:
    """Whether f avoids the inability operator entirely."""
    if isinstance(f, (Atom, Top, Bot)):
        return True
    if isinstance(f, Not):
        return is_cl_fragment(f.body)
    if isinstance(f, (And, Or, Implies, Iff)):
        return is_cl_fragment(f.left) and is_cl_fragment(f.right)
    if isinstance(f, Ability):
        return is_cl_fragment(f.body)
    if isinstance(f, Inability):
        return False
    raise TypeError(f"not a formula: {f!r}")


@dataclass(frozen=True)
class PreservationReport:
    """Outcome of an exhaustive original-vs-translated comparison."""

    total_checks: int
    formulas_checked: int
    models_checked: int
    violations: tuple[tuple[Formula, CoalitionModel, str], ...]


def check_truth_preservation(b: Bounds,
                             max_formula_depth: int) -> PreservationReport:
    """Compare every enumerated formula with its translation everywhere.

    Every formula over b.props and b.max_agents agents up to the given
    depth is evaluated against every model in b at every state, once as
    written and once translated; any state where the two disagree is
    recorded as a violation (which would indict this implementation,
    not the translation).  One check = one (formula, model, state)
    triple; models with fewer agents than a formula mentions are
    skipped for that formula.

    The original formula runs through the reference satisfaction
    clauses and the translated one through the table-driven engine, so
    agreement also cross-checks the two evaluators against each other.
    Comparing both sides on the same engine would prove nothing: the
    table engine already evaluates I[C] as the negation of E[C].
    """
    if max_formula_depth < 0:
        raise BoundsTooSmall("no formulas below depth 0")
    if max_formula_depth >= 2 and not b.vary_all_states:
        raise BoundsInsufficientForFormula(
            "depth-2 formulas can nest modalities; the model grid needs "
            "vary_all_states=True")
    space = build_space(b)
    if not space:
        raise BoundsTooSmall("no models within bounds")

    jobs = [(f, max_agent(f), compile_formula(translate(f), b.props))
            for f in enumerate_formulas(b.props, b.max_agents,
                                        max_formula_depth)]
    total = 0
    violations: list[tuple[Formula, CoalitionModel, str]] = []
    # Models on the outside: one shared reference memo then covers every
    # subformula the stream has in common, which is most of it.
    for ctx in space:
        m = ctx.model
        n = m.n_agents
        memo: dict[Formula, frozenset[str]] = {}
        states = list(enumerate(m.states))
        for f, need, translated in jobs:
            if n < need:
                continue
            total += ctx.n_states
            ref = extension(m, f, memo)
            got = 0
            for i, s in states:
                if s in ref:
                    got |= 1 << i
            want = translated(ctx.table, ctx.full, ctx.prop_masks)
            if got != want:
                diff = got ^ want
                while diff:
                    bit = diff & -diff
                    violations.append((f, m, m.states[bit.bit_length() - 1]))
                    diff ^= bit
    return PreservationReport(total, len(jobs), len(space),
                              tuple(violations))
