"""Executable catalog of structural principles of coalition inability.

Each entry pairs a parametric formula scheme with its expected status:
valid schemes must exhaust a bounded countermodel search for every
instantiation, invalid ones must produce a countermodel, and the one
satisfiability entry must produce a satisfying model.  Invalid entries
additionally pin a hand-built fixture model whose replay re-derives the
exact evaluations that justify the expected status, so the catalog is
checked both by fresh search and against frozen artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from time import perf_counter
from typing import Callable, Iterator, Sequence

from .errors import BoundsInsufficientForFormula, FixtureMissing
from .formula import (
    Ability, And, Atom, Bot, Coalition, Formula, Iff, Implies, Inability,
    Not, Or, Top, parse_formula,
)
from .model import Bounds, CoalitionModel, parse_model
from .semantics import satisfies
from .validity import Counterexample, _search, default_bounds

__all__ = [
    "Fixture", "Law", "LawReport", "LawResult",
    "catalog", "fixture_model", "instantiations", "replay_fixture",
    "run_laws",
]


@dataclass(frozen=True)
class Fixture:
    """A pinned model, state, and instantiation for one catalog entry.

    `instance` is the concrete scheme instantiation the fixture decides
    (false at the state for invalid laws, true for the satisfiability
    entry); `claims` are the individual evaluations that explain why.
    """

    model_name: str
    state: str
    instance: str
    claims: tuple[tuple[str, bool], ...]


@dataclass(frozen=True)
class Law:
    """One catalog entry: a scheme plus how it is expected to behave.

    `scheme(n, cs, fs)` builds a formula from the agent count, a tuple
    of `coalition_arity` coalitions, and a tuple of formula parameters.
    `formula_mode` selects those parameters: "none", "one", "two", or
    "entailment" (pairs (f, g) where f entails g by construction).
    `side_condition` filters coalition tuples.
    """

    id: str
    group: str
    description: str
    expected: str  # "valid" | "invalid" | "satisfiable"
    scheme: Callable[[int, tuple[Coalition, ...], tuple[Formula, ...]],
                     Formula]
    coalition_arity: int
    formula_mode: str
    side_condition: Callable[[tuple[Coalition, ...]], bool] | None = None
    fixture: Fixture | None = None


def fixture_model(name: str) -> CoalitionModel:
    """Load a pinned countermodel shipped with the package."""
    path = resources.files(__package__) / "fixtures" / f"{name}.clm"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise FixtureMissing(f"no fixture model named {name!r}") from None
    return parse_model(text)


# ---------------------------------------------------------------------------
# The catalog

def _grand(n: int) -> Coalition:
    return Coalition.from_bitmask((1 << n) - 1)


def _rest(n: int, c: Coalition) -> Coalition:
    return Coalition.from_bitmask(((1 << n) - 1) ^ c.bitmask())


def _union(c: Coalition, d: Coalition) -> Coalition:
    return Coalition.from_bitmask(c.bitmask() | d.bitmask())


def _subset(cs: tuple[Coalition, ...]) -> bool:
    return cs[0].bitmask() & ~cs[1].bitmask() == 0


def _proper_subset(cs: tuple[Coalition, ...]) -> bool:
    return _subset(cs) and cs[0].bitmask() != cs[1].bitmask()


def _disjoint(cs: tuple[Coalition, ...]) -> bool:
    return cs[0].bitmask() & cs[1].bitmask() == 0


def catalog() -> tuple[Law, ...]:
    """All cataloged principles, in presentation order."""
    E, I = Ability, Inability
    return (
        # Coalition structure.
        Law("anti-monotonicity", "coalition",
            "a coalition's inability passes down to its sub-coalitions",
            "valid",
            lambda n, cs, fs: Implies(I(cs[1], fs[0]), I(cs[0], fs[0])),
            2, "one", _subset),
        Law("upward-propagation", "coalition",
            "a sub-coalition's inability does not pass up to supersets",
            "invalid",
            lambda n, cs, fs: Implies(I(cs[0], fs[0]), I(cs[1], fs[0])),
            2, "one", _proper_subset,
            Fixture("m1", "s", "I[1] p -> I[1,2] p",
                    (("I[1] p", True), ("E[1,2] p", True),
                     ("I[1,2] p", False)))),
        Law("subadditivity", "coalition",
            "a union's inability implies each part's inability",
            "valid",
            lambda n, cs, fs: Implies(I(_union(cs[0], cs[1]), fs[0]),
                                      And(I(cs[0], fs[0]),
                                          I(cs[1], fs[0]))),
            2, "one"),
        Law("superadditivity-for-inability", "coalition",
            "disjoint inabilities do not merge into joint inability",
            "invalid",
            lambda n, cs, fs: Implies(And(I(cs[0], fs[0]), I(cs[1], fs[1])),
                                      I(_union(cs[0], cs[1]),
                                        And(fs[0], fs[1]))),
            2, "two", _disjoint,
            Fixture("m1", "s", "(I[1] p & I[2] p) -> I[1,2] (p & p)",
                    (("I[1] p", True), ("I[2] p", True),
                     ("E[1,2] p", True), ("I[1,2] p", False)))),

        # Goal strength.
        Law("contravariance", "goal",
            "inability for a weaker goal implies it for a stronger one",
            "valid",
            lambda n, cs, fs: Implies(I(cs[0], fs[1]), I(cs[0], fs[0])),
            1, "entailment"),
        Law("covariance", "goal",
            "inability for a stronger goal says nothing about weaker ones",
            "invalid",
            lambda n, cs, fs: Implies(I(cs[0], fs[0]), I(cs[0], fs[1])),
            1, "entailment",
            fixture=Fixture("covariance", "s", "I[1] (p & q) -> I[1] p",
                            (("E[1] p", True), ("I[1] p", False),
                             ("I[1] (p & q)", True)))),
        Law("absorption", "goal",
            "inability for a goal extends to any conjunction with it",
            "valid",
            lambda n, cs, fs: Implies(I(cs[0], fs[0]),
                                      I(cs[0], And(fs[0], fs[1]))),
            1, "two"),

        # Boolean structure.
        Law("conjunction-downward", "boolean",
            "inability for either conjunct gives inability for the "
            "conjunction",
            "valid",
            lambda n, cs, fs: Implies(Or(I(cs[0], fs[0]), I(cs[0], fs[1])),
                                      I(cs[0], And(fs[0], fs[1]))),
            1, "two"),
        Law("conjunction-upward", "boolean",
            "inability for a conjunction does not localize to a conjunct",
            "invalid",
            lambda n, cs, fs: Implies(I(cs[0], And(fs[0], fs[1])),
                                      Or(I(cs[0], fs[0]), I(cs[0], fs[1]))),
            1, "two",
            fixture=Fixture("conjunction_upward", "s",
                            "I[1] (p & q) -> (I[1] p | I[1] q)",
                            (("I[1] p", False), ("I[1] q", False),
                             ("I[1] (p & q)", True)))),
        Law("disjunction-upward", "boolean",
            "inability for a disjunction gives inability for both "
            "disjuncts",
            "valid",
            lambda n, cs, fs: Implies(I(cs[0], Or(fs[0], fs[1])),
                                      And(I(cs[0], fs[0]),
                                          I(cs[0], fs[1]))),
            1, "two"),
        Law("disjunction-downward", "boolean",
            "inability for both disjuncts does not cover the disjunction",
            "invalid",
            lambda n, cs, fs: Implies(And(I(cs[0], fs[0]), I(cs[0], fs[1])),
                                      I(cs[0], Or(fs[0], fs[1]))),
            1, "two",
            fixture=Fixture("disjunction_downward", "s",
                            "(I[1] p & I[1] q) -> I[1] (p | q)",
                            (("I[1] p", True), ("I[1] q", True),
                             ("E[1] (p | q)", True),
                             ("I[1] (p | q)", False)))),
        Law("implication-distribution", "boolean",
            "inability for an implication pins both the antecedent's "
            "negation and the consequent as unsecurable",
            "valid",
            lambda n, cs, fs: Implies(I(cs[0], Implies(fs[0], fs[1])),
                                      And(I(cs[0], Not(fs[0])),
                                          I(cs[0], fs[1]))),
            1, "two"),
        Law("implication-converse", "boolean",
            "joint inability for the parts does not rebuild inability "
            "for the implication",
            "invalid",
            lambda n, cs, fs: Implies(And(I(cs[0], Not(fs[0])),
                                          I(cs[0], fs[1])),
                                      I(cs[0], Implies(fs[0], fs[1]))),
            1, "two",
            fixture=Fixture("disjunction_downward", "s",
                            "(I[1] !!p & I[1] q) -> I[1] (!p -> q)",
                            (("I[1] !!p", True), ("I[1] q", True),
                             ("I[1] (!p -> q)", False)))),

        # Strategic structure.
        Law("excluded-middle", "strategic",
            "a coalition may be able to settle a goal either way",
            "invalid",
            lambda n, cs, fs: Or(I(cs[0], fs[0]), I(cs[0], Not(fs[0]))),
            1, "one",
            fixture=Fixture("excluded_middle", "s", "I[1] p | I[1] !p",
                            (("E[1] p", True), ("E[1] !p", True),
                             ("I[1] p", False), ("I[1] !p", False)))),
        Law("exclusivity", "strategic",
            "one side's ability does not force the other side's "
            "inability",
            "invalid",
            lambda n, cs, fs: Implies(E(cs[0], fs[0]),
                                      I(_rest(n, cs[0]), fs[0])),
            1, "one",
            fixture=Fixture("m1", "s", "E[1] true -> I[2] true",
                            (("E[1] true", True), ("I[2] true", False)))),
        Law("symmetry", "strategic",
            "a coalition's inability is not mirrored by its complement "
            "on the negated goal",
            "invalid",
            lambda n, cs, fs: Iff(I(cs[0], fs[0]),
                                  I(_rest(n, cs[0]), Not(fs[0]))),
            1, "one",
            fixture=Fixture("symmetry", "s", "I[1] p <-> I[2] !p",
                            (("E[1] p", True), ("I[1] p", False),
                             ("I[2] !p", True)))),
        Law("complementarity", "strategic",
            "a coalition and its complement can both escape inability",
            "invalid",
            lambda n, cs, fs: Or(I(cs[0], fs[0]), I(_rest(n, cs[0]), fs[0])),
            1, "one",
            fixture=Fixture("m1", "s", "I[1] true | I[2] true",
                            (("I[1] true", False), ("I[2] true", False)))),
        Law("opponent-ability", "strategic",
            "a coalition's inability does not hand the complement "
            "control of the negation",
            "invalid",
            lambda n, cs, fs: Implies(I(cs[0], fs[0]),
                                      E(_rest(n, cs[0]), Not(fs[0]))),
            1, "one",
            fixture=Fixture("matching_pennies", "s", "I[1] p -> E[2] !p",
                            (("I[1] p", True), ("E[2] !p", False)))),

        # Boundary cases.
        Law("grand-coalition-duality", "boundary",
            "everyone's inability is the empty coalition's ability to "
            "ensure the negation",
            "valid",
            lambda n, cs, fs: Iff(I(_grand(n), fs[0]),
                                  E(Coalition.from_bitmask(0),
                                    Not(fs[0]))),
            0, "one"),
        Law("empty-coalition-duality", "boundary",
            "the empty coalition's inability is everyone's ability to "
            "ensure the negation",
            "valid",
            lambda n, cs, fs: Iff(I(Coalition.from_bitmask(0), fs[0]),
                                  E(_grand(n), Not(fs[0]))),
            0, "one"),
        Law("contradiction", "boundary",
            "no coalition can ensure a contradiction",
            "valid",
            lambda n, cs, fs: I(cs[0], Bot()),
            1, "none"),
        Law("truth", "boundary",
            "no coalition is unable to ensure a tautology",
            "valid",
            lambda n, cs, fs: Not(I(cs[0], Top())),
            1, "none"),

        # Ability axioms, restated for search.
        Law("axiom-truth", "axiom",
            "every coalition can ensure a tautology",
            "valid",
            lambda n, cs, fs: E(cs[0], Top()),
            1, "none"),
        Law("axiom-no-contradiction", "axiom",
            "no coalition can ensure a contradiction",
            "valid",
            lambda n, cs, fs: Not(E(cs[0], Bot())),
            1, "none"),
        Law("axiom-superadditivity", "axiom",
            "disjoint coalitions combine their guarantees",
            "valid",
            lambda n, cs, fs: Implies(And(E(cs[0], fs[0]), E(cs[1], fs[1])),
                                      E(_union(cs[0], cs[1]),
                                        And(fs[0], fs[1]))),
            2, "two", _disjoint),
        Law("axiom-grand-coalition", "axiom",
            "what the empty coalition cannot block, everyone can ensure",
            "valid",
            lambda n, cs, fs: Implies(Not(E(Coalition.from_bitmask(0),
                                            Not(fs[0]))),
                                      E(_grand(n), fs[0])),
            0, "one"),
        Law("inability-definition", "axiom",
            "inability is exactly the negation of ability",
            "valid",
            lambda n, cs, fs: Iff(I(cs[0], fs[0]), Not(E(cs[0], fs[0]))),
            1, "one"),
        Law("ability-distribution", "axiom",
            "ability does not distribute over implication",
            "invalid",
            lambda n, cs, fs: Implies(E(cs[0], Implies(fs[0], fs[1])),
                                      Implies(E(cs[0], fs[0]),
                                              E(cs[0], fs[1]))),
            1, "two"),

        # Satisfiability.
        Law("strategic-impotence", "strategic",
            "a coalition can be unable to settle a goal in either "
            "direction",
            "satisfiable",
            lambda n, cs, fs: And(I(cs[0], fs[0]), I(cs[0], Not(fs[0]))),
            1, "one",
            fixture=Fixture("matching_pennies", "s", "I[1] p & I[1] !p",
                            (("I[1] p", True), ("I[1] !p", True)))),
    )


# ---------------------------------------------------------------------------
# Instantiation

def _formula_pool(atoms: Sequence[str]) -> list[Formula]:
    base = [Atom(a) for a in atoms]
    pool: list[Formula] = list(base)
    pool += [Not(a) for a in base]
    pool += [Top(), Bot()]
    pool += [And(x, y) for x, y in combinations(base, 2)]
    pool += [Or(x, y) for x, y in combinations(base, 2)]
    return pool


def instantiations(law: Law, n_agents: int,
                   atoms: Sequence[str]) -> Iterator[Formula]:
    """All concrete instances of the scheme, coalition-major order.

    Coalitions range over all subsets of {1..n_agents} that pass the
    side condition; formula parameters range over the atoms, their
    negations, truth, falsity, and pairwise conjunctions/disjunctions
    of distinct atoms.  Entailment mode yields premise/conclusion pairs
    that entail by shape: (f, f | g) and (f & g, f).
    """
    if n_agents < 1:
        raise ValueError("need at least one agent")
    subsets = [Coalition.from_bitmask(mask) for mask in range(1 << n_agents)]
    pool = _formula_pool(atoms)
    if law.formula_mode == "none":
        fss = [()]
    elif law.formula_mode == "one":
        fss = [(f,) for f in pool]
    elif law.formula_mode == "two":
        fss = [(f, g) for f in pool for g in pool]
    elif law.formula_mode == "entailment":
        fss = [(f, Or(f, g)) for f in pool for g in pool]
        fss += [(And(f, g), f) for f in pool for g in pool]
    else:
        raise ValueError(f"unknown formula mode {law.formula_mode!r}")
    if law.coalition_arity == 0:
        css = [()]
    elif law.coalition_arity == 1:
        css = [(c,) for c in subsets]
    else:
        css = [(c, d) for c in subsets for d in subsets]
    for cs in css:
        if law.side_condition is not None and not law.side_condition(cs):
            continue
        for fs in fss:
            yield law.scheme(n_agents, cs, fs)


# ---------------------------------------------------------------------------
# Running

def replay_fixture(law: Law) -> bool:
    """Re-derive a fixture's pinned evaluations from its model.

    True iff the instance comes out false at the fixture state (true
    for the satisfiability entry) and every recorded claim evaluates as
    stated.
    """
    if law.fixture is None:
        raise FixtureMissing(f"law {law.id!r} has no pinned fixture")
    fx = law.fixture
    m = fixture_model(fx.model_name)
    want = law.expected == "satisfiable"
    if satisfies(m, fx.state, parse_formula(fx.instance)) != want:
        return False
    return all(satisfies(m, fx.state, parse_formula(text)) == expected
               for text, expected in fx.claims)


@dataclass(frozen=True)
class LawResult:
    """One catalog entry's outcome under run_laws.

    `instance` is the concrete formula whose search produced
    `evidence` (for an invalid row, the falsified instantiation; for
    the satisfiability entry, the satisfied one).
    """

    law_id: str
    expected: str
    observed: str
    instantiations: int
    models_checked: int
    passed: bool
    evidence: Counterexample | None
    instance: Formula | None
    fixture_ok: bool | None
    elapsed: float


@dataclass(frozen=True)
class LawReport:
    bounds: Bounds
    results: tuple[LawResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def render(self) -> str:
        """Plain-text table, one row per catalog entry."""
        header = ("law", "expected", "observed", "instantiations",
                  "models_checked", "result")
        rows = [header]
        for r in self.results:
            rows.append((r.law_id, r.expected, r.observed,
                         str(r.instantiations), str(r.models_checked),
                         "PASS" if r.passed else "FAIL"))
        widths = [max(len(row[i]) for row in rows)
                  for i in range(len(header))]
        lines = []
        for row in rows:
            lines.append("  ".join(cell.ljust(width)
                                   for cell, width in zip(row, widths))
                         .rstrip())
        lines.insert(1, "  ".join("-" * width for width in widths))
        return "\n".join(lines)


def _candidates(law: Law, n_agents: int,
                atoms: Sequence[str]) -> Iterator[Formula]:
    # The fixture's pinned instance goes first: it is the known falsifying
    # (or satisfying) shape, so search does not wade through instances
    # that happen to be valid before reaching one that is not.
    if law.fixture is not None:
        yield parse_formula(law.fixture.instance)
    yield from instantiations(law, n_agents, atoms)


def _run_law(law: Law, b: Bounds) -> LawResult:
    start = perf_counter()
    count = 0
    models_total = 0
    evidence = None
    instance = None
    fixture_ok = None

    if law.expected == "valid":
        observed = "valid"
        for f in instantiations(law, b.max_agents, b.props):
            count += 1
            verdict, models, _ = _search(f, b)
            models_total += models
            if isinstance(verdict, Counterexample):
                observed = "invalid"
                evidence = verdict
                instance = f
                break
        passed = observed == "valid"
    elif law.expected == "invalid":
        observed = "valid"
        for f in _candidates(law, b.max_agents, b.props):
            count += 1
            # The pinned fixture instance may mention more agents than
            # the bounds allow; skip it rather than abort the row.
            try:
                verdict, models, _ = _search(f, b)
            except BoundsInsufficientForFormula:
                continue
            models_total += models
            if isinstance(verdict, Counterexample):
                observed = "invalid"
                evidence = verdict
                instance = f
                break
        if law.fixture is not None:
            fixture_ok = replay_fixture(law)
        passed = observed == "invalid" and fixture_ok is not False
    elif law.expected == "satisfiable":
        observed = "unsatisfiable"
        for f in _candidates(law, b.max_agents, b.props):
            count += 1
            try:
                verdict, models, _ = _search(Not(f), b)
            except BoundsInsufficientForFormula:
                continue
            models_total += models
            if isinstance(verdict, Counterexample):
                observed = "satisfiable"
                evidence = verdict
                instance = f
                break
        if law.fixture is not None:
            fixture_ok = replay_fixture(law)
        passed = observed == "satisfiable" and fixture_ok is not False
    else:
        raise ValueError(f"unknown expectation {law.expected!r}")

    return LawResult(law.id, law.expected, observed, count, models_total,
                     passed, evidence, instance, fixture_ok,
                     perf_counter() - start)


def run_laws(b: Bounds | None = None,
             laws: Sequence[Law] | None = None) -> LawReport:
    """Check every catalog entry (or the given ones) within bounds.

    A valid law passes when all its instantiations exhaust the search;
    an invalid law passes when some instantiation has a countermodel
    and its fixture (if any) replays; the satisfiability entry passes
    when a satisfying model turns up and its fixture replays.
    """
    if b is None:
        b = default_bounds()
    chosen = catalog() if laws is None else tuple(laws)
    return LawReport(b, tuple(_run_law(law, b) for law in chosen))
