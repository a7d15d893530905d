"""Inversion, isolation, weakening and derived contraction.

All functions are pure: they build new trees and leave their input alone.
Shared subtrees are transformed once per call.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .derivation import Ax, AndIntro, Cut, Derivation, OrIntro, Sup
from .errors import (
    DeltaNotSharingFree,
    DeltaSharesNamesWithConclusion,
    NotEquivalentPair,
    TargetAtomic,
    TargetNotConjunction,
    TargetNotDisjunction,
    TargetNotInConclusion,
)
from .syntax import And, Formula, Lit, Or, Sequent, equiv, is_sharing_free

Rewrite = Callable[[Derivation], Derivation]


def _traverse(p: Derivation, leaf: Rewrite, intro: Callable[[Derivation, Rewrite], Derivation | None]) -> Derivation:
    """Rebuild ``p`` bottom-up, delegating axioms to ``leaf``.

    ``intro`` may short-circuit a logical node by returning a replacement.
    """
    memo: dict[int, Derivation] = {}

    def go(q: Derivation) -> Derivation:
        key = id(q)
        done = memo.get(key)
        if done is not None:
            return done
        if isinstance(q, Ax):
            out = leaf(q)
        else:
            out = intro(q, go)
            if out is None:
                if isinstance(q, Cut):
                    out = Cut(q.formula, go(q.left), go(q.right))
                elif isinstance(q, Sup):
                    out = Sup(go(q.left), go(q.right))
                elif isinstance(q, OrIntro):
                    out = OrIntro(q.principal, go(q.premiss))
                else:
                    out = AndIntro(q.principal, go(q.left), go(q.right))  # type: ignore[attr-defined]
        memo[key] = out
        return out

    return go(p)


def _other(ax: Ax, target: Formula) -> Formula | None:
    if ax.first == target:
        return ax.second
    if ax.second == target:
        return ax.first
    return None


def _check_target(p: Derivation, target: Formula, kind: type, err: type) -> None:
    if not isinstance(target, kind):
        raise err(str(target))
    if target not in p.conclusion:
        raise TargetNotInConclusion(f"{target} not in {p.conclusion}")


def inv_or(p: Derivation, target: Formula) -> Derivation:
    """From a derivation of ⊢Γ, A∨B build one of ⊢Γ, A, B."""
    _check_target(p, target, Or, TargetNotDisjunction)
    a, b = target.left, target.right  # type: ignore[attr-defined]

    def leaf(ax: Ax) -> Derivation:
        other = _other(ax, target)
        if other is None:
            return Ax(ax.first, ax.second, ax.sequent.replace(target, a, b))
        # the selected pair is {C̄∧D̄, A∨B}: split it into two axioms
        delta = ax.sequent.remove(target, other)
        c, d = other.left, other.right  # type: ignore[attr-defined]
        return AndIntro(
            other,
            Ax(c, a, delta.add(c, a, b)),
            Ax(d, b, delta.add(d, a, b)),
        )

    def intro(q: Derivation, go: Rewrite) -> Derivation | None:
        if isinstance(q, OrIntro) and q.principal == target:
            return q.premiss
        return None

    return _traverse(p, leaf, intro)


def _inv_and(p: Derivation, target: Formula, right: bool) -> Derivation:
    _check_target(p, target, And, TargetNotConjunction)
    keep = target.right if right else target.left  # type: ignore[attr-defined]

    def leaf(ax: Ax) -> Derivation:
        other = _other(ax, target)
        if other is None:
            return Ax(ax.first, ax.second, ax.sequent.replace(target, keep))
        # the selected pair is {C̄∨D̄, A∧B}: keep the component facing ``keep``
        delta = ax.sequent.remove(target, other)
        c, d = other.left, other.right  # type: ignore[attr-defined]
        mate = d if right else c
        return OrIntro(other, Ax(mate, keep, delta.add(c, d, keep)))

    def intro(q: Derivation, go: Rewrite) -> Derivation | None:
        if isinstance(q, AndIntro) and q.principal == target:
            return q.right if right else q.left
        return None

    return _traverse(p, leaf, intro)


def inv_and_l(p: Derivation, target: Formula) -> Derivation:
    """From a derivation of ⊢Γ, A∧B build one of ⊢Γ, A."""
    return _inv_and(p, target, right=False)


def inv_and_r(p: Derivation, target: Formula) -> Derivation:
    """From a derivation of ⊢Γ, A∧B build one of ⊢Γ, B."""
    return _inv_and(p, target, right=True)


def isolate(p: Derivation, target: Formula) -> Derivation:
    """Same conclusion, but the last rule introduces ``target``."""
    if isinstance(target, Lit):
        raise TargetAtomic(str(target))
    if target not in p.conclusion:
        raise TargetNotInConclusion(f"{target} not in {p.conclusion}")
    if isinstance(target, Or):
        return OrIntro(target, inv_or(p, target))
    return AndIntro(target, inv_and_l(p, target), inv_and_r(p, target))


def weaken(p: Derivation, delta: Iterable[Formula]) -> Derivation:
    """Add the formulas of ``delta`` to every sequent of ``p``.

    Names of cut formulas that collide with ``delta`` are shifted upwards by
    ``k = 1 + max`` of the names in play, so the result stays sharing-free.
    """
    delta = frozenset(delta)
    if not delta:
        return p
    if not is_sharing_free(delta):
        raise DeltaNotSharingFree(", ".join(map(str, delta)))
    dnames = frozenset().union(*(f.names for f in delta))
    if not dnames.isdisjoint(p.conclusion.names):
        raise DeltaSharesNamesWithConclusion(f"{Sequent(delta)} vs {p.conclusion}")
    return _weaken(p, delta, dnames)


def _weaken(p: Derivation, delta: frozenset, dnames: frozenset) -> Derivation:
    # values keep their key alive, so ids of renamed temporaries are never reused
    memo: dict[int, tuple[Derivation, Derivation]] = {}

    def go(q: Derivation) -> Derivation:
        key = id(q)
        done = memo.get(key)
        if done is not None:
            return done[1]
        orig = q
        if isinstance(q, Ax):
            out: Derivation = Ax(q.first, q.second, Sequent(q.sequent.formulas | delta))
        elif isinstance(q, Cut):
            clash = q.all_names() & dnames
            if clash:
                k = 1 + max(max(q.all_names()), max(dnames))
                q = q.renamed(lambda x: x + k if x in clash else x)
            out = Cut(q.formula, go(q.left), go(q.right))  # type: ignore[attr-defined]
        elif isinstance(q, Sup):
            out = Sup(go(q.left), go(q.right))
        elif isinstance(q, OrIntro):
            out = OrIntro(q.principal, go(q.premiss))
        else:
            out = AndIntro(q.principal, go(q.left), go(q.right))  # type: ignore[attr-defined]
        memo[key] = (orig, out)
        return out

    return go(p)


def contract(p: Derivation, a: Formula, b: Formula) -> Derivation:
    """From ⊢Γ, A, B with A ≡ B derive ⊢Γ, A by cutting B against ax{A, B̄}."""
    gamma = p.conclusion
    if a not in gamma or b not in gamma or not equiv(a, b) or not a.names.isdisjoint(b.names):
        raise NotEquivalentPair(f"{a} , {b} in {gamma}")
    nb = b.dual()
    return Cut(b, p, Ax(a, nb, gamma.replace(b, nb)))
