"""Formula syntax: AST, concrete grammar, printer, and bounded enumeration.

The language is propositional logic plus two coalition modalities,
written `E[1,2] p` (the coalition of agents 1 and 2 can ensure p) and
`I[1,2] p` (it cannot).  Grammar, loosest binding first:

    formula := iff
    iff     := imp { "<->" imp }          left associative
    imp     := or [ "->" imp ]            right associative
    or      := and { "|" and }
    and     := unary { "&" unary }
    unary   := "!" unary | "E" coal unary | "I" coal unary | atom
    coal    := "[" [ int { "," int } ] "]"
    atom    := "true" | "false" | ident | "(" formula ")"

Identifiers match [a-z][a-zA-Z0-9_]* and agent indices are 1-based.
Or, Implies, Iff, Top and Bot are first-class AST nodes, not sugar, so
printing round-trips exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DuplicateAgentInCoalition, ParseError

__all__ = [
    "Formula", "Atom", "Top", "Bot", "Not", "And", "Or", "Implies", "Iff",
    "Ability", "Inability", "Coalition",
    "parse_formula", "print_formula", "ast_dump",
    "modal_depth", "propositions_of", "enumerate_formulas",
]


@dataclass(frozen=True, slots=True, repr=False)
class Coalition:
    """A set of agents, stored as a sorted tuple of 1-based indices."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if any(a < 1 for a in members):
            raise ValueError(f"agent indices are 1-based, got {members}")
        if len(set(members)) != len(members):
            raise ValueError(f"duplicate agent in coalition {members}")
        object.__setattr__(self, "members", tuple(sorted(members)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, agent: int) -> bool:
        return agent in self.members

    def __repr__(self) -> str:
        return "[%s]" % ",".join(str(a) for a in self.members)

    def bitmask(self) -> int:
        """Encode the coalition as an int, agent i on bit i-1."""
        mask = 0
        for a in self.members:
            mask |= 1 << (a - 1)
        return mask

    @staticmethod
    def from_bitmask(mask: int) -> "Coalition":
        return Coalition(tuple(i + 1 for i in range(mask.bit_length())
                               if mask >> i & 1))

    def max_agent(self) -> int:
        """Largest member, 0 for the empty coalition."""
        return self.members[-1] if self.members else 0


class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()


@dataclass(frozen=True, slots=True, repr=False)
class Atom(Formula):
    name: str

    def __repr__(self) -> str:
        return f"Atom({self.name})"


@dataclass(frozen=True, slots=True, repr=False)
class Top(Formula):
    def __repr__(self) -> str:
        return "Top"


@dataclass(frozen=True, slots=True, repr=False)
class Bot(Formula):
    def __repr__(self) -> str:
        return "Bot"


@dataclass(frozen=True, slots=True, repr=False)
class Not(Formula):
    body: Formula

    def __repr__(self) -> str:
        return f"Not({self.body!r})"


@dataclass(frozen=True, slots=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Implies({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Iff(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Iff({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Ability(Formula):
    """E[C] body: coalition C has a joint action forcing body."""

    coalition: Coalition
    body: Formula

    def __repr__(self) -> str:
        return f"Ability({self.coalition!r}, {self.body!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Inability(Formula):
    """I[C] body: every joint action of C can be countered."""

    coalition: Coalition
    body: Formula

    def __repr__(self) -> str:
        return f"Inability({self.coalition!r}, {self.body!r})"


def ast_dump(f: Formula) -> str:
    """Constructor-style rendering of the tree, as used by the CLI."""
    return repr(f)


# ---------------------------------------------------------------------------
# Printing

PREC_IFF = 1
PREC_IMP = 2
PREC_OR = 3
PREC_AND = 4
PREC_UNARY = 5
PREC_ATOM = 6


def print_formula(f: Formula) -> str:
    """Concrete syntax with the minimal parenthesization the grammar allows."""
    return _print(f, PREC_IFF)


def _print(f: Formula, required: int) -> str:
    cls = type(f)
    if cls is Atom:
        return f.name
    if cls is Top:
        return "true"
    if cls is Bot:
        return "false"
    if cls is Not:
        text = "!" + _print(f.body, PREC_UNARY)
        prec = PREC_UNARY
    elif cls is And:
        text = _print(f.left, PREC_AND) + " & " + _print(f.right, PREC_AND + 1)
        prec = PREC_AND
    elif cls is Or:
        text = _print(f.left, PREC_OR) + " | " + _print(f.right, PREC_OR + 1)
        prec = PREC_OR
    elif cls is Implies:
        # Right associative: the right operand may be another implication.
        text = _print(f.left, PREC_IMP + 1) + " -> " + _print(f.right, PREC_IMP)
        prec = PREC_IMP
    elif cls is Iff:
        text = _print(f.left, PREC_IFF) + " <-> " + _print(f.right, PREC_IFF + 1)
        prec = PREC_IFF
    elif cls is Ability:
        text = "E" + repr(f.coalition) + " " + _print(f.body, PREC_UNARY)
        prec = PREC_UNARY
    elif cls is Inability:
        text = "I" + repr(f.coalition) + " " + _print(f.body, PREC_UNARY)
        prec = PREC_UNARY
    else:
        raise TypeError(f"not a formula: {f!r}")
    if prec < required:
        return "(" + text + ")"
    return text


# ---------------------------------------------------------------------------
# Parsing

# The happy path works on bare token strings for speed; offsets are
# recovered by re-scanning only when an error message is built.
_TOKEN_RE = re.compile(r"<->|->|[a-z][A-Za-z0-9_]*|[0-9]+|[EI!&|()\[\],]|\S")

_TOP = Top()
_BOT = Bot()
_ATOM_CACHE: dict[str, Atom] = {}
_COALITION_CACHE: dict[tuple[int, ...], Coalition] = {}

_BIN_OPS: dict[str, tuple[int, type]] = {
    "<->": (PREC_IFF, Iff), "->": (PREC_IMP, Implies),
    "|": (PREC_OR, Or), "&": (PREC_AND, And),
}

_UNARY_EXPECTED = ("'!'", "'E'", "'I'", "'true'", "'false'",
                   "an identifier", "'('")


def _fail(text: str, index: int, expected: tuple[str, ...],
          message: str | None = None, error=ParseError) -> None:
    """Raise a ParseError for the token at position `index`, with its offset."""
    starts = [m.start() for m in _TOKEN_RE.finditer(text)]
    if index < len(starts):
        offset = starts[index]
        found = _TOKEN_RE.match(text, offset).group()
        what = message or f"found {found!r}"
    else:
        offset = len(text)
        what = message or "unexpected end of input"
    raise error(what, offset=offset, expected=expected)


def parse_formula(text: str) -> Formula:
    """Parse concrete syntax into an AST; raises ParseError on bad input."""
    tokens = _TOKEN_RE.findall(text)
    tokens.append("")  # end marker
    pos = 0

    def expr(min_prec: int) -> Formula:
        nonlocal pos
        left = unary()
        while True:
            entry = _BIN_OPS.get(tokens[pos])
            if entry is None or entry[0] < min_prec:
                return left
            pos += 1
            prec, node = entry
            # "->" is right associative, the rest associate to the left.
            right = expr(prec if node is Implies else prec + 1)
            left = node(left, right)

    def unary() -> Formula:
        nonlocal pos
        tok = tokens[pos]
        if tok == "!":
            pos += 1
            return Not(unary())
        if tok == "E" or tok == "I":
            pos += 1
            c = coalition()
            return Ability(c, unary()) if tok == "E" else Inability(c, unary())
        head = tok[:1]
        if "a" <= head <= "z":
            pos += 1
            if tok == "true":
                return _TOP
            if tok == "false":
                return _BOT
            atom = _ATOM_CACHE.get(tok)
            if atom is None:
                atom = _ATOM_CACHE[tok] = Atom(tok)
            return atom
        if tok == "(":
            pos += 1
            inner = expr(PREC_IFF)
            if tokens[pos] != ")":
                _fail(text, pos, ("')'",))
            pos += 1
            return inner
        _fail(text, pos, _UNARY_EXPECTED)

    def coalition() -> Coalition:
        nonlocal pos
        if tokens[pos] != "[":
            _fail(text, pos, ("'['",))
        pos += 1
        members: list[int] = []
        if tokens[pos] != "]":
            while True:
                tok = tokens[pos]
                if not tok[:1].isdigit():
                    _fail(text, pos, ("an agent index",))
                agent = int(tok)
                if agent < 1:
                    _fail(text, pos, (), message="agent indices are 1-based")
                if agent in members:
                    _fail(text, pos, (),
                          message=f"agent {agent} listed twice",
                          error=DuplicateAgentInCoalition)
                members.append(agent)
                pos += 1
                if tokens[pos] == ",":
                    pos += 1
                    continue
                break
        if tokens[pos] != "]":
            _fail(text, pos, ("']'", "','"))
        pos += 1
        key = tuple(members)
        c = _COALITION_CACHE.get(key)
        if c is None:
            c = _COALITION_CACHE[key] = Coalition(key)
        return c

    result = expr(PREC_IFF)
    if tokens[pos] != "":
        _fail(text, pos, (), message=f"trailing input {tokens[pos]!r}")
    return result


# ---------------------------------------------------------------------------
# Structural measures

def modal_depth(f: Formula) -> int:
    """Deepest nesting of E/I operators; 0 for purely Boolean formulas."""
    cls = type(f)
    if cls in (Atom, Top, Bot):
        return 0
    if cls is Not:
        return modal_depth(f.body)
    if cls in (And, Or, Implies, Iff):
        return max(modal_depth(f.left), modal_depth(f.right))
    return 1 + modal_depth(f.body)


def propositions_of(f: Formula) -> tuple[str, ...]:
    """All atoms occurring in f, sorted and without duplicates."""
    names: set[str] = set()
    _collect_atoms(f, names)
    return tuple(sorted(names))


def _collect_atoms(f: Formula, names: set[str]) -> None:
    cls = type(f)
    if cls is Atom:
        names.add(f.name)
    elif cls is Not:
        _collect_atoms(f.body, names)
    elif cls in (And, Or, Implies, Iff):
        _collect_atoms(f.left, names)
        _collect_atoms(f.right, names)
    elif cls in (Ability, Inability):
        _collect_atoms(f.body, names)


def max_agent(f: Formula) -> int:
    """Largest agent index named by any coalition in f, 0 if none."""
    cls = type(f)
    if cls in (Atom, Top, Bot):
        return 0
    if cls is Not:
        return max_agent(f.body)
    if cls in (And, Or, Implies, Iff):
        return max(max_agent(f.left), max_agent(f.right))
    return max(f.coalition.max_agent(), max_agent(f.body))


# ---------------------------------------------------------------------------
# Enumeration

def enumerate_formulas(props: Sequence[str], agents: int,
                       max_depth: int) -> Iterator[Formula]:
    """All formulas of syntactic depth <= max_depth, without duplicates.

    The connective set is deliberately small: negation, conjunction and
    the two modalities over every coalition within {1..agents}, with
    atoms and the constants at depth 0.  The stream is ordered by depth,
    then by constructor (Atom < Top < Bot < Not < And < Ability <
    Inability), then lexicographically in the children and the coalition
    bitmask, which makes counts and positions stable regression targets.
    """
    if agents < 1:
        raise ValueError("agents must be >= 1")
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    coalitions = [Coalition.from_bitmask(mask) for mask in range(1 << agents)]
    level: list[Formula] = [Atom(name) for name in sorted(set(props))]
    level += [_TOP, _BOT]
    yield from level

    upto = list(level)
    depths = [0] * len(level)
    exact = list(level)
    for depth in range(1, max_depth + 1):
        stream = _next_level(upto, depths, exact, depth, coalitions)
        if depth == max_depth:
            yield from stream
            return
        exact = []
        for f in stream:
            yield f
            exact.append(f)
        upto.extend(exact)
        depths.extend([depth] * len(exact))


def _next_level(upto: list[Formula], depths: list[int], exact: list[Formula],
                depth: int, coalitions: list[Coalition]) -> Iterator[Formula]:
    for f in exact:
        yield Not(f)
    want = depth - 1
    for i, left in enumerate(upto):
        left_shallow = depths[i] != want
        for j, right in enumerate(upto):
            if left_shallow and depths[j] != want:
                continue
            yield And(left, right)
    for f in exact:
        for c in coalitions:
            yield Ability(c, f)
    for f in exact:
        for c in coalitions:
            yield Inability(c, f)
