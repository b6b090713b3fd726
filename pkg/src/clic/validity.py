"""Bounded validity checking by exhaustive countermodel search.

A search verdict is either a Counterexample (a concrete model and state
falsifying the formula, the first one in canonical enumeration order)
or NoCounterexampleWithinBounds, which only ever asserts that a finite
space was exhausted.  Validity proper is out of reach of enumeration;
exhaustion at bounds covering the known countermodel sizes is the
strongest claim made anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._eval import build_space, compile_formula
from .errors import BoundsInsufficientForFormula
from .formula import Formula, Iff, max_agent, modal_depth, propositions_of
from .model import Bounds, CoalitionModel
from .semantics import satisfies

__all__ = [
    "Counterexample", "NoCounterexampleWithinBounds", "Verdict",
    "check_equivalence", "default_bounds", "find_countermodel",
    "minimal_countermodel",
]

DEFAULT_MAX_AGENTS = 2
DEFAULT_MAX_STATES = 3
DEFAULT_MAX_ACTIONS = 2


def default_bounds(props: tuple[str, ...] = ("p", "q"),
                   vary_all_states: bool = False) -> Bounds:
    """The stock search envelope: 2 agents, 3 states, 2 actions each.

    Every invalid principle in the catalog has a countermodel within
    these sizes, so they are the default for `find_countermodel` users
    and for the laws runner.
    """
    return Bounds(DEFAULT_MAX_AGENTS, DEFAULT_MAX_STATES,
                  DEFAULT_MAX_ACTIONS, props, vary_all_states)


@dataclass(frozen=True)
class Counterexample:
    """A model and state at which the queried formula is false.

    `size` is only set by minimal_countermodel: the (states, actions,
    agents) bound tuple at which the search first succeeded.
    """

    model: CoalitionModel
    state: str
    size: tuple[int, int, int] | None = None


@dataclass(frozen=True)
class NoCounterexampleWithinBounds:
    """Exhaustion of the bounded space; never a validity claim."""

    bounds: Bounds
    models_checked: int
    states_checked: int


Verdict = Counterexample | NoCounterexampleWithinBounds


def _require_searchable(f: Formula, b: Bounds) -> None:
    need = max_agent(f)
    if need > b.max_agents:
        raise BoundsInsufficientForFormula(
            f"formula mentions agent {need} but bounds allow "
            f"{b.max_agents}")
    missing = set(propositions_of(f)) - set(b.props)
    if missing:
        raise BoundsInsufficientForFormula(
            f"bounds do not vary atoms {sorted(missing)}")
    if modal_depth(f) >= 2 and not b.vary_all_states:
        raise BoundsInsufficientForFormula(
            "nested modalities need vary_all_states=True: without it the "
            "search only varies outcomes at initial states")


def _search(f: Formula, b: Bounds) -> tuple[Verdict, int, int]:
    """Scan the space; also report how many models/states were checked.

    Models with fewer agents than f mentions cannot interpret f and are
    skipped without being counted.
    """
    _require_searchable(f, b)
    need = max_agent(f)
    compiled = compile_formula(f, b.props)
    models_checked = 0
    states_checked = 0
    for ctx in build_space(b):
        if ctx.model.n_agents < need:
            continue
        models_checked += 1
        states_checked += ctx.n_states
        got = compiled(ctx.table, ctx.full, ctx.prop_masks)
        if got != ctx.full:
            miss = got ^ ctx.full
            state = ctx.model.states[(miss & -miss).bit_length() - 1]
            if satisfies(ctx.model, state, f):
                raise RuntimeError(
                    "evaluation engines disagree on "
                    f"{f!r} at {state!r}; this is a bug")
            return (Counterexample(ctx.model, state),
                    models_checked, states_checked)
    return (NoCounterexampleWithinBounds(b, models_checked, states_checked),
            models_checked, states_checked)


def find_countermodel(f: Formula, b: Bounds) -> Verdict:
    """First countermodel of f in canonical order, or exhaustion.

    The formula is evaluated at every state of every enumerated model;
    the earliest (model, state) hit wins, which makes verdicts
    reproducible without any isomorphism reasoning.  Counterexamples
    are replayed through the reference semantics before being returned.
    """
    return _search(f, b)[0]


def check_equivalence(f: Formula, g: Formula, b: Bounds) -> Verdict:
    """Search for a model splitting f and g: find_countermodel(f <-> g)."""
    return find_countermodel(Iff(f, g), b)


def minimal_countermodel(f: Formula, b: Bounds) -> Verdict:
    """Search at growing sub-bounds; report the smallest succeeding one.

    Size tuples (states, actions, agents) run in lexicographic order up
    to b's limits.  The returned Counterexample carries the first tuple
    at which the search succeeded.  Tuples too small to interpret f
    (e.g. too few agents) are skipped; if every tuple is, the error for
    the final one propagates.
    """
    last_error: BoundsInsufficientForFormula | None = None
    verdict: Verdict | None = None
    for n_states in range(1, b.max_states + 1):
        for n_actions in range(1, b.max_actions_per_agent + 1):
            for n_agents in range(1, b.max_agents + 1):
                sub = Bounds(n_agents, n_states, n_actions, b.props,
                             b.vary_all_states)
                try:
                    verdict = find_countermodel(f, sub)
                except BoundsInsufficientForFormula as err:
                    last_error = err
                    continue
                if isinstance(verdict, Counterexample):
                    return Counterexample(
                        verdict.model, verdict.state,
                        (n_states, n_actions, n_agents))
    if verdict is None:
        assert last_error is not None
        raise last_error
    return verdict
