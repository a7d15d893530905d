"""Names, atoms, named formulas, sequents, branch sets, measures and renamings.

Names are non-negative integers.  Their textual form is a fixed shortlex
enumeration of the identifiers ``[a-z][a-z0-9]*``: ``a`` is 0, ``z`` is 25,
``a0`` is 26, and so on.  Numeric order on names is therefore the same as
shortlex order on their spellings, which keeps the single-letter names used in
worked examples readable while still giving an unbounded supply of fresh ones.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable, Iterator, Mapping, Union

from .errors import DomainTooSmall, NameNotFound, NotInjective, NotSharingFree, ParseError

Name = int
BranchName = frozenset  # frozenset[Name]

# ---------------------------------------------------------------------------
# names

_FIRST = "abcdefghijklmnopqrstuvwxyz"
_REST = "0123456789abcdefghijklmnopqrstuvwxyz"
_NAME_RE = re.compile(r"[a-z][a-z0-9]*\Z")


def name_str(k: Name) -> str:
    """Spell the name with index ``k``."""
    if k < 0:
        raise ValueError(f"names are non-negative, got {k}")
    length, block = 1, 26
    while k >= block:
        k -= block
        length += 1
        block *= 36
    tail = []
    for _ in range(length - 1):
        k, r = divmod(k, 36)
        tail.append(_REST[r])
    return _FIRST[k] + "".join(reversed(tail))


def parse_name(text: str) -> Name:
    """Inverse of :func:`name_str`."""
    if not _NAME_RE.match(text):
        raise ParseError(f"bad name {text!r}")
    offset, block = 0, 26
    for _ in range(len(text) - 1):
        offset += block
        block *= 36
    value = _FIRST.index(text[0])
    for ch in text[1:]:
        value = value * 36 + _REST.index(ch)
    return offset + value


# ---------------------------------------------------------------------------
# atoms


@dataclass(frozen=True, slots=True)
class Atom:
    """An atom symbol with a polarity bit; ``dual`` is a fixpoint-free involution."""

    base: str
    positive: bool = True

    def dual(self) -> "Atom":
        return Atom(self.base, not self.positive)

    def __str__(self) -> str:
        return self.base if self.positive else "~" + self.base


# ---------------------------------------------------------------------------
# formulas

# Shapes (formulas with names erased) are interned to small integers so that
# equivalence up to renaming is a single integer comparison.
_SHAPES: dict[tuple, int] = {}


def _shape_id(key: tuple) -> int:
    sid = _SHAPES.get(key)
    if sid is None:
        sid = _SHAPES[key] = len(_SHAPES)
    return sid


class Formula:
    """Base class of named formulas.  Instances are immutable."""

    __slots__ = ("names", "min_name", "degree", "height", "shape", "sharing_free", "_hash", "_neg", "_br")

    def __eq__(self, other: object) -> bool:  # overridden
        raise NotImplementedError

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self}>"

    @property
    def is_atomic(self) -> bool:
        return False

    def dual(self) -> "Formula":
        neg = self._neg
        if neg is None:
            neg = self._negate()
            neg._neg = self
            self._neg = neg
        return neg

    def _negate(self) -> "Formula":
        raise NotImplementedError

    def lits(self) -> Iterator["Lit"]:
        raise NotImplementedError


class Lit(Formula):
    """An atom occurrence ``x:α`` carrying the name ``x``."""

    __slots__ = ("name", "atom")

    def __init__(self, name: Name, atom: Atom):
        self.name = name
        self.atom = atom
        self.names = frozenset((name,))
        self.min_name = name
        self.degree = 0
        self.height = 0
        self.shape = _shape_id(("L", atom.base, atom.positive))
        self.sharing_free = True
        self._hash = hash(("L", name, atom))
        self._neg = None
        self._br = None

    @property
    def is_atomic(self) -> bool:
        return True

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is Lit and self.name == other.name and self.atom == other.atom
        )

    __hash__ = Formula.__hash__

    def _negate(self) -> "Lit":
        return Lit(self.name, self.atom.dual())

    def lits(self) -> Iterator["Lit"]:
        yield self

    def __str__(self) -> str:
        return f"{name_str(self.name)}:{self.atom}"


class _Binary(Formula):
    __slots__ = ("left", "right")
    symbol = "?"

    def __init__(self, left: Formula, right: Formula):
        self.left = left
        self.right = right
        self.names = left.names | right.names
        self.min_name = min(left.min_name, right.min_name)
        self.degree = 1 + left.degree + right.degree
        self.height = 1 + max(left.height, right.height)
        self.shape = _shape_id((self.symbol, left.shape, right.shape))
        self.sharing_free = (
            left.sharing_free and right.sharing_free and left.names.isdisjoint(right.names)
        )
        self._hash = hash((self.symbol, left._hash, right._hash))
        self._neg = None
        self._br = None

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is type(self)
            and self._hash == other._hash  # type: ignore[attr-defined]
            and self.left == other.left  # type: ignore[attr-defined]
            and self.right == other.right  # type: ignore[attr-defined]
        )

    __hash__ = Formula.__hash__

    def lits(self) -> Iterator[Lit]:
        yield from self.left.lits()
        yield from self.right.lits()

    def __str__(self) -> str:
        return f"({self.left} {self.symbol} {self.right})"


class Or(_Binary):
    __slots__ = ()
    symbol = "|"

    def _negate(self) -> "And":
        return And(self.left.dual(), self.right.dual())


class And(_Binary):
    __slots__ = ()
    symbol = "&"

    def _negate(self) -> "Or":
        return Or(self.left.dual(), self.right.dual())


def negate(a: Formula) -> Formula:
    """De Morgan dual of ``a``; names are preserved."""
    return a.dual()


def equiv(a: Formula, b: Formula) -> bool:
    """True iff ``a`` and ``b`` coincide once names are erased."""
    return a.shape == b.shape


# ---------------------------------------------------------------------------
# sequents


class Sequent:
    """A finite set of named formulas, printed in canonical order."""

    __slots__ = ("formulas", "_names", "_hash", "_atoms", "_ordered")

    def __init__(self, formulas: Iterable[Formula] = ()):
        self.formulas = frozenset(formulas)
        self._names: frozenset | None = None
        self._hash = hash(self.formulas)
        self._atoms: dict[Name, Atom] | None = None
        self._ordered: tuple[Formula, ...] | None = None

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.ordered())

    def __len__(self) -> int:
        return len(self.formulas)

    def __contains__(self, item: object) -> bool:
        return item in self.formulas

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Sequent) and self.formulas == other.formulas

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<Sequent {self}>"

    def __str__(self) -> str:
        return "|- " + ", ".join(str(f) for f in self.ordered()) if self.formulas else "|-"

    def ordered(self) -> tuple[Formula, ...]:
        if self._ordered is None:
            self._ordered = tuple(sorted(self.formulas, key=lambda f: (f.min_name, str(f))))
        return self._ordered

    @property
    def names(self) -> frozenset:
        if self._names is None:
            self._names = frozenset().union(*(f.names for f in self.formulas))
        return self._names

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.formulas)

    @property
    def is_atomic(self) -> bool:
        return all(f.is_atomic for f in self.formulas)

    def atoms(self) -> dict[Name, Atom]:
        """Map every name to the atom it labels (requires sharing-freedom)."""
        if self._atoms is None:
            table: dict[Name, Atom] = {}
            for f in self.formulas:
                for lit in f.lits():
                    table[lit.name] = lit.atom
            self._atoms = table
        return self._atoms

    def add(self, *formulas: Formula) -> "Sequent":
        return Sequent(self.formulas.union(formulas))

    def remove(self, *formulas: Formula) -> "Sequent":
        return Sequent(self.formulas.difference(formulas))

    def replace(self, old: Formula, *new: Formula) -> "Sequent":
        return Sequent((self.formulas - {old}).union(new))


def names_of(item) -> frozenset:
    """All names occurring in a formula, a sequent, a collection or a derivation."""
    if isinstance(item, (Formula, Sequent)):
        return item.names
    names = getattr(item, "all_names", None)
    if names is not None:
        return names() if callable(names) else names
    return frozenset().union(*(names_of(x) for x in item))


def is_sharing_free(gamma: Iterable[Formula]) -> bool:
    """Members are sharing-free and pairwise name-disjoint."""
    seen: set[Name] = set()
    for f in gamma:
        if not f.sharing_free or not seen.isdisjoint(f.names):
            return False
        seen.update(f.names)
    return True


def atom_at(gamma: Sequent, x: Name) -> Atom:
    """The atom labelled by ``x`` in ``gamma`` (written Γ[x])."""
    try:
        return gamma.atoms()[x]
    except KeyError:
        raise NameNotFound(f"{name_str(x)} not in {gamma}") from None


# ---------------------------------------------------------------------------
# branch sets


def formula_branches(a: Formula) -> frozenset:
    br = a._br
    if br is None:
        if isinstance(a, Lit):
            br = frozenset((a.names,))
        elif isinstance(a, Or):
            lb, rb = formula_branches(a.left), formula_branches(a.right)
            br = frozenset(x | y for x in lb for y in rb)
        else:
            br = formula_branches(a.left) | formula_branches(a.right)
        a._br = br
    return br


def product_branches(families: Iterable[frozenset]) -> frozenset:
    """All unions picking one member from each family (empty product is {∅})."""
    return reduce(
        lambda acc, fam: frozenset(x | y for x in acc for y in fam),
        families,
        frozenset((frozenset(),)),
    )


def branches(item: Union[Formula, Sequent, Iterable[Formula]]) -> frozenset:
    """Branch names of a formula or of a sequent.

    For a sequent the result is the set of unions obtained by picking one
    branch of every member formula.
    """
    if isinstance(item, Formula):
        if not item.sharing_free:
            raise NotSharingFree(str(item))
        return formula_branches(item)
    members = list(item)
    if not is_sharing_free(members):
        raise NotSharingFree(", ".join(map(str, members)))
    return product_branches(formula_branches(f) for f in members)


# ---------------------------------------------------------------------------
# measures


@dataclass(frozen=True)
class Measures:
    height: int
    atom_count: int
    degree: int
    size: int


def measures(item: Union[Formula, Sequent]) -> Measures:
    if isinstance(item, Formula):
        at = item.degree + 1
        return Measures(item.height, at, item.degree, at + item.degree)
    parts = [measures(f) for f in item]
    return Measures(
        sum(p.height for p in parts),
        sum(p.atom_count for p in parts),
        sum(p.degree for p in parts),
        sum(p.size for p in parts),
    )


# ---------------------------------------------------------------------------
# renamings


class Renaming:
    """A finite injective map on names."""

    __slots__ = ("mapping",)

    def __init__(self, mapping: Mapping[Name, Name]):
        mapping = dict(mapping)
        if len(set(mapping.values())) != len(mapping):
            raise NotInjective(
                "; ".join(f"{name_str(k)}->{name_str(v)}" for k, v in sorted(mapping.items()))
            )
        self.mapping = mapping

    @classmethod
    def shifting(cls, names: Iterable[Name], offset: int, domain: Iterable[Name]) -> "Renaming":
        """Send each of ``names`` to ``name + offset`` and fix the rest of ``domain``."""
        moved = set(names)
        return cls({x: (x + offset if x in moved else x) for x in domain})

    def __call__(self, x: Name) -> Name:
        return self.mapping[x]

    def inverse(self) -> "Renaming":
        return Renaming({v: k for k, v in self.mapping.items()})

    @property
    def domain(self) -> frozenset:
        return frozenset(self.mapping)


def rename_formula(a: Formula, fn: Callable[[Name], Name]) -> Formula:
    if isinstance(a, Lit):
        return Lit(fn(a.name), a.atom)
    return type(a)(rename_formula(a.left, fn), rename_formula(a.right, fn))  # type: ignore[attr-defined]


def rename_sequent(gamma: Sequent, fn: Callable[[Name], Name]) -> Sequent:
    return Sequent(rename_formula(f, fn) for f in gamma.formulas)


def rename(item, phi: Renaming):
    """Apply ``phi`` to a formula, sequent or derivation.

    Every name of ``item`` must lie in the domain of ``phi``.
    """
    missing = names_of(item) - phi.domain
    if missing:
        raise DomainTooSmall(", ".join(name_str(x) for x in sorted(missing)))
    fn = phi.mapping.__getitem__
    if isinstance(item, Formula):
        return rename_formula(item, fn)
    if isinstance(item, Sequent):
        return rename_sequent(item, fn)
    return item.renamed(fn)


# ---------------------------------------------------------------------------
# text syntax

_TOKEN_RE = re.compile(r"\s*(?:(\|-)|([(){},|&~:])|([A-Za-z_][A-Za-z0-9_']*))")


class Tokens:
    """A small token stream shared by the formula and derivation parsers."""

    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, int]] = []
        pos = 0
        n = len(text)
        while True:
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos and pos < n:
                rest = text[pos:].strip()
                if not rest:
                    break
                raise ParseError(f"unexpected character at offset {pos}: {rest[:10]!r}")
            if m.lastindex is None:
                break
            self.items.append((m.group(m.lastindex), m.start(m.lastindex)))
            pos = m.end()
        self.i = 0

    def peek(self, k: int = 0) -> str | None:
        j = self.i + k
        return self.items[j][0] if j < len(self.items) else None

    def next(self) -> str:
        if self.i >= len(self.items):
            raise ParseError("unexpected end of input")
        tok = self.items[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.peek()
        if got != tok:
            where = self.items[self.i][1] if self.i < len(self.items) else len(self.text)
            raise ParseError(f"expected {tok!r} at offset {where}, got {got!r}")
        self.i += 1

    def at_end(self) -> bool:
        return self.i >= len(self.items)


def _is_ident(tok: str | None) -> bool:
    return tok is not None and (tok[0].isalpha() or tok[0] == "_")


def read_formula(ts: Tokens) -> Formula:
    """formula := primary {op primary}, with a single repeated operator."""
    left = _read_primary(ts)
    op = ts.peek()
    if op not in ("|", "&"):
        return left
    cls = Or if op == "|" else And
    while ts.peek() == op:
        ts.next()
        left = cls(left, _read_primary(ts))
    if ts.peek() in ("|", "&"):
        raise ParseError("mixing | and & needs parentheses")
    return left


def _read_primary(ts: Tokens) -> Formula:
    tok = ts.peek()
    if tok == "(":
        ts.next()
        inner = read_formula(ts)
        ts.expect(")")
        return inner
    if not _is_ident(tok):
        raise ParseError(f"expected a formula, got {tok!r}")
    name = parse_name(ts.next())
    ts.expect(":")
    positive = True
    while ts.peek() == "~":
        ts.next()
        positive = not positive
    base = ts.next()
    if not _is_ident(base):
        raise ParseError(f"expected an atom symbol, got {base!r}")
    return Lit(name, Atom(base, positive))


def read_sequent(ts: Tokens) -> Sequent:
    ts.expect("|-")
    formulas = []
    if ts.peek() not in (None, ")", "}"):
        formulas.append(read_formula(ts))
        while ts.peek() == ",":
            ts.next()
            formulas.append(read_formula(ts))
    return Sequent(formulas)


def parse_formula(text: str) -> Formula:
    ts = Tokens(text)
    f = read_formula(ts)
    if not ts.at_end():
        raise ParseError(f"trailing input after formula: {ts.peek()!r}")
    return f


def parse_sequent(text: str) -> Sequent:
    ts = Tokens(text)
    s = read_sequent(ts)
    if not ts.at_end():
        raise ParseError(f"trailing input after sequent: {ts.peek()!r}")
    return s


def lit(name: str, atom: str) -> Lit:
    """Convenience constructor: ``lit("x", "~a")``."""
    positive = True
    while atom.startswith("~"):
        atom = atom[1:]
        positive = not positive
    return Lit(parse_name(name), Atom(atom, positive))


def fresh_names(avoid: Iterable[Name], start: int | None = None) -> Iterator[Name]:
    """Names above everything in ``avoid``, in ascending order."""
    base = max(avoid, default=-1) + 1 if start is None else start
    return itertools.count(base)
