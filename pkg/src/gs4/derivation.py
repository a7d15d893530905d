"""Derivation trees of the named calculus, their validation, measures and text format.

Conclusions are stored only at axiom leaves; every other node recomputes its
conclusion from its premisses (and caches it).  Trees are immutable.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .errors import (
    AxiomPairInvalid,
    ContextMismatch,
    DerivationNotSharingFree,
    ParseError,
    RuleMismatch,
)
from .syntax import (
    And,
    Formula,
    Name,
    Or,
    Sequent,
    Tokens,
    equiv,
    is_sharing_free,
    read_formula,
    read_sequent,
    rename_formula,
    rename_sequent,
)


class Derivation:
    __slots__ = ("_concl", "_hash", "_names", "_valid", "_cut_free", "_height", "_size", "_vh")
    rule = "?"

    def _init_caches(self, h: int) -> None:
        self._concl = None
        self._hash = h
        self._names = None
        self._valid = False
        self._cut_free = None
        self._height = None
        self._size = None
        self._vh = None

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.conclusion}>"

    def __str__(self) -> str:
        return format_derivation(self)

    # structure -------------------------------------------------------------
    @property
    def premisses(self) -> tuple["Derivation", ...]:
        return ()

    @property
    def conclusion(self) -> Sequent:
        if self._concl is None:
            self._concl = self._conclude()
        return self._concl

    def _conclude(self) -> Sequent:
        raise NotImplementedError

    def all_names(self) -> frozenset:
        """Every name occurring anywhere in the tree."""
        if self._names is None:
            if isinstance(self, Ax):
                self._names = self.conclusion.names
            else:
                self._names = frozenset().union(*(p.all_names() for p in self.premisses))
        return self._names

    def renamed(self, fn: Callable[[Name], Name]) -> "Derivation":
        raise NotImplementedError

    def nodes(self) -> Iterator["Derivation"]:
        yield self
        for p in self.premisses:
            yield from p.nodes()


class Ax(Derivation):
    """Deterministic axiom: ``selected`` is the linked pair {A, B̄}, the rest is weakening."""

    __slots__ = ("first", "second", "sequent")
    rule = "ax"

    def __init__(self, a: Formula, b: Formula, conclusion: Sequent):
        if (b.min_name, str(b)) < (a.min_name, str(a)):
            a, b = b, a
        self.first = a
        self.second = b
        self.sequent = conclusion
        self._init_caches(hash(("ax", a, b, conclusion)))

    @property
    def selected(self) -> tuple[Formula, Formula]:
        return (self.first, self.second)

    def _conclude(self) -> Sequent:
        return self.sequent

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is Ax
            and self._hash == other._hash
            and self.first == other.first
            and self.second == other.second
            and self.sequent == other.sequent
        )

    __hash__ = Derivation.__hash__

    def renamed(self, fn):
        return Ax(rename_formula(self.first, fn), rename_formula(self.second, fn), rename_sequent(self.sequent, fn))


class Cut(Derivation):
    """Context-sharing cut; ``formula`` occurs in the left premiss, its dual in the right."""

    __slots__ = ("formula", "left", "right")
    rule = "cut"

    def __init__(self, formula: Formula, left: Derivation, right: Derivation):
        self.formula = formula
        self.left = left
        self.right = right
        self._init_caches(hash(("cut", formula, left._hash, right._hash)))

    @property
    def premisses(self):
        return (self.left, self.right)

    def _conclude(self) -> Sequent:
        return self.left.conclusion.remove(self.formula)

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is Cut
            and self._hash == other._hash
            and self.formula == other.formula
            and self.left == other.left
            and self.right == other.right
        )

    __hash__ = Derivation.__hash__

    def renamed(self, fn):
        return Cut(rename_formula(self.formula, fn), self.left.renamed(fn), self.right.renamed(fn))


class Sup(Derivation):
    """Superposition of two derivations of the same sequent."""

    __slots__ = ("left", "right")
    rule = "sup"

    def __init__(self, left: Derivation, right: Derivation):
        self.left = left
        self.right = right
        self._init_caches(hash(("sup", left._hash, right._hash)))

    @property
    def premisses(self):
        return (self.left, self.right)

    def _conclude(self) -> Sequent:
        return self.left.conclusion

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is Sup
            and self._hash == other._hash
            and self.left == other.left
            and self.right == other.right
        )

    __hash__ = Derivation.__hash__

    def renamed(self, fn):
        return Sup(self.left.renamed(fn), self.right.renamed(fn))


class OrIntro(Derivation):
    __slots__ = ("principal", "premiss")
    rule = "or"

    def __init__(self, principal: Formula, premiss: Derivation):
        self.principal = principal
        self.premiss = premiss
        self._init_caches(hash(("or", principal, premiss._hash)))

    @property
    def premisses(self):
        return (self.premiss,)

    def _conclude(self) -> Sequent:
        p = self.principal
        return Sequent((self.premiss.conclusion.formulas - {p.left, p.right}) | {p})  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is OrIntro
            and self._hash == other._hash
            and self.principal == other.principal
            and self.premiss == other.premiss
        )

    __hash__ = Derivation.__hash__

    def renamed(self, fn):
        return OrIntro(rename_formula(self.principal, fn), self.premiss.renamed(fn))


class AndIntro(Derivation):
    __slots__ = ("principal", "left", "right")
    rule = "and"

    def __init__(self, principal: Formula, left: Derivation, right: Derivation):
        self.principal = principal
        self.left = left
        self.right = right
        self._init_caches(hash(("and", principal, left._hash, right._hash)))

    @property
    def premisses(self):
        return (self.left, self.right)

    def _conclude(self) -> Sequent:
        p = self.principal
        return self.left.conclusion.replace(p.left, p)  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is AndIntro
            and self._hash == other._hash
            and self.principal == other.principal
            and self.left == other.left
            and self.right == other.right
        )

    __hash__ = Derivation.__hash__

    def renamed(self, fn):
        return AndIntro(rename_formula(self.principal, fn), self.left.renamed(fn), self.right.renamed(fn))


# ---------------------------------------------------------------------------
# validation


def validate(p: Derivation, path: tuple[int, ...] = ()) -> None:
    """Raise a :class:`~gs4.errors.DerivationError` locating the first bad node."""
    if p._valid:
        return
    for i, q in enumerate(p.premisses):
        validate(q, path + (i,))
    _check_node(p, path)
    p._valid = True


def _check_node(p: Derivation, path: tuple[int, ...]) -> None:
    if isinstance(p, Ax):
        a, b = p.first, p.second
        gamma = p.sequent
        if a not in gamma or b not in gamma:
            raise AxiomPairInvalid(f"selected pair not in conclusion {gamma}", path)
        if not a.sharing_free or not b.sharing_free or not a.names.isdisjoint(b.names):
            raise AxiomPairInvalid(f"pair {a} , {b} shares names", path)
        if not equiv(a, b.dual()):
            raise AxiomPairInvalid(f"{a} and {b} are not dual up to names", path)
        if not is_sharing_free(gamma.formulas):
            raise DerivationNotSharingFree(str(gamma), path)
        return
    if isinstance(p, Cut):
        a = p.formula
        lc, rc = p.left.conclusion, p.right.conclusion
        if a not in lc:
            raise RuleMismatch(f"cut formula {a} not in left premiss", path)
        if a.dual() not in rc:
            raise RuleMismatch(f"dual of cut formula {a} not in right premiss", path)
        if lc.remove(a) != rc.remove(a.dual()):
            raise ContextMismatch(f"{lc} vs {rc}", path)
        return
    if isinstance(p, Sup):
        if p.left.conclusion != p.right.conclusion:
            raise ContextMismatch(f"{p.left.conclusion} vs {p.right.conclusion}", path)
        return
    if isinstance(p, OrIntro):
        f = p.principal
        if not isinstance(f, Or):
            raise RuleMismatch(f"or-rule principal {f} is not a disjunction", path)
        c = p.premiss.conclusion
        if f.left not in c or f.right not in c:
            raise RuleMismatch(f"premiss {c} lacks the components of {f}", path)
        return
    if isinstance(p, AndIntro):
        f = p.principal
        if not isinstance(f, And):
            raise RuleMismatch(f"and-rule principal {f} is not a conjunction", path)
        lc, rc = p.left.conclusion, p.right.conclusion
        if f.left not in lc:
            raise RuleMismatch(f"left premiss lacks {f.left}", path)
        if f.right not in rc:
            raise RuleMismatch(f"right premiss lacks {f.right}", path)
        if lc.remove(f.left) != rc.remove(f.right):
            raise ContextMismatch(f"{lc} vs {rc}", path)
        if not f.sharing_free:
            raise DerivationNotSharingFree(str(f), path)
        return
    raise RuleMismatch(f"unknown node {type(p).__name__}", path)


def is_valid(p: Derivation) -> bool:
    try:
        validate(p)
    except Exception:
        return False
    return True


def conclusion(p: Derivation) -> Sequent:
    return p.conclusion


# ---------------------------------------------------------------------------
# measures


def is_cut_free(p: Derivation) -> bool:
    if p._cut_free is None:
        p._cut_free = not isinstance(p, Cut) and all(is_cut_free(q) for q in p.premisses)
    return p._cut_free


def height(p: Derivation) -> int:
    if p._height is None:
        p._height = 0 if isinstance(p, Ax) else 1 + max(height(q) for q in p.premisses)
    return p._height


def size(p: Derivation) -> int:
    if p._size is None:
        p._size = 1 + sum(size(q) for q in p.premisses)
    return p._size


def virtual_height(p: Derivation) -> int:
    """Axioms count 1 + degree of their conclusion; other rules add one to the max."""
    if p._vh is None:
        if isinstance(p, Ax):
            p._vh = 1 + p.sequent.degree
        else:
            p._vh = 1 + max(virtual_height(q) for q in p.premisses)
    return p._vh


# ---------------------------------------------------------------------------
# s-expression format


def format_derivation(p: Derivation, indent: int | None = 2) -> str:
    """Render ``p``; ``indent=None`` gives a single line."""
    lines: list[str] = []

    def emit(q: Derivation, depth: int) -> None:
        pad = "" if indent is None else " " * (indent * depth)
        if isinstance(q, Ax):
            lines.append(f"{pad}(ax {{{q.first} , {q.second}}} {q.sequent})")
            return
        head = {Cut: "cut", Sup: "sup", OrIntro: "or", AndIntro: "and"}[type(q)]
        arg = getattr(q, "formula", None) or getattr(q, "principal", None)
        lines.append(f"{pad}({head}" + (f" {arg}" if arg is not None else ""))
        for sub in q.premisses:
            emit(sub, depth + 1)
        lines[-1] += ")"

    emit(p, 0)
    return (" " if indent is None else "\n").join(lines)


def read_derivation(ts: Tokens) -> Derivation:
    ts.expect("(")
    head = ts.next()
    if head == "ax":
        ts.expect("{")
        a = read_formula(ts)
        ts.expect(",")
        b = read_formula(ts)
        ts.expect("}")
        gamma = read_sequent(ts)
        node: Derivation = Ax(a, b, gamma)
    elif head == "cut":
        f = read_formula(ts)
        node = Cut(f, read_derivation(ts), read_derivation(ts))
    elif head == "or":
        f = read_formula(ts)
        node = OrIntro(f, read_derivation(ts))
    elif head == "and":
        f = read_formula(ts)
        node = AndIntro(f, read_derivation(ts), read_derivation(ts))
    elif head == "sup":
        node = Sup(read_derivation(ts), read_derivation(ts))
    else:
        raise ParseError(f"unknown rule {head!r}")
    ts.expect(")")
    return node


def parse_derivation(text: str) -> Derivation:
    ts = Tokens(text)
    p = read_derivation(ts)
    if not ts.at_end():
        raise ParseError(f"trailing input after derivation: {ts.peek()!r}")
    return p
