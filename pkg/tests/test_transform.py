from __future__ import annotations

import pytest
from conftest import seeds
from hypothesis import given

from gs4 import figures
from gs4.derivation import AndIntro, Ax, Cut, OrIntro, is_cut_free, parse_derivation, validate, virtual_height
from gs4.errors import (
    DeltaNotSharingFree,
    DeltaSharesNamesWithConclusion,
    NotEquivalentPair,
    TargetAtomic,
    TargetNotConjunction,
    TargetNotDisjunction,
    TargetNotInConclusion,
)
from gs4.generate import random_derivation
from gs4.syntax import And, Atom, Lit, Or, Renaming, parse_formula, parse_sequent, rename
from gs4.transform import contract, inv_and_l, inv_and_r, inv_or, isolate, weaken

F = parse_formula
D = parse_derivation


# ---------------------------------------------------------------------------
# inversion of a disjunction


def test_inv_or_expands_an_axiom_on_the_target() -> None:
    p = D("(ax {(u:~a & v:~b) , (x:a | y:b)} |- (u:~a & v:~b), (x:a | y:b), z:c)")
    q = inv_or(p, F("(x:a | y:b)"))
    assert q == AndIntro(
        F("(u:~a & v:~b)"),
        D("(ax {u:~a , x:a} |- u:~a, x:a, y:b, z:c)"),
        D("(ax {v:~b , y:b} |- v:~b, x:a, y:b, z:c)"),
    )


def test_inv_or_strips_the_introducing_rule() -> None:
    inner = D("(ax {x:a , y:~a} |- x:a, y:~a, z:b)")
    disj = F("(y:~a | z:b)")
    assert inv_or(OrIntro(disj, inner), disj) is inner


def test_inv_or_splits_a_weakened_context_formula() -> None:
    p = D("(ax {x:a , y:~a} |- x:a, y:~a, (u:b | v:c))")
    assert inv_or(p, F("(u:b | v:c)")) == D("(ax {x:a , y:~a} |- u:b, v:c, x:a, y:~a)")


def test_inv_or_target_errors() -> None:
    p = D("(ax {x:a , y:~a} |- x:a, y:~a, (u:b & v:c))")
    with pytest.raises(TargetNotInConclusion):
        inv_or(p, F("(u:b | v:c)"))
    with pytest.raises(TargetNotDisjunction):
        inv_or(p, F("(u:b & v:c)"))


# ---------------------------------------------------------------------------
# inversion of a conjunction


def test_inv_and_on_an_axiom_keeps_one_component() -> None:
    p = D("(ax {(u:~c | v:~d) , (x:c & y:d)} |- (u:~c | v:~d), (x:c & y:d))")
    target = F("(x:c & y:d)")
    assert inv_and_l(p, target) == OrIntro(F("(u:~c | v:~d)"), D("(ax {u:~c , x:c} |- u:~c, v:~d, x:c)"))
    assert inv_and_r(p, target) == OrIntro(F("(u:~c | v:~d)"), D("(ax {v:~d , y:d} |- u:~c, v:~d, y:d)"))


def test_inv_and_strips_the_introducing_rule() -> None:
    q = D("(ax {x:a , y:~a} |- x:a, y:~a, u:b)")
    r = D("(ax {x:a , y:~a} |- x:a, y:~a, v:c)")
    conj = F("(u:b & v:c)")
    p = AndIntro(conj, q, r)
    assert inv_and_l(p, conj) is q
    assert inv_and_r(p, conj) is r


def test_inv_and_replaces_a_weakened_context_formula() -> None:
    p = D("(ax {x:a , y:~a} |- x:a, y:~a, (u:b & v:c))")
    assert inv_and_l(p, F("(u:b & v:c)")) == D("(ax {x:a , y:~a} |- u:b, x:a, y:~a)")


def test_inv_and_target_errors() -> None:
    p = D("(ax {x:a , y:~a} |- x:a, y:~a, (u:b | v:c))")
    with pytest.raises(TargetNotConjunction):
        inv_and_l(p, F("(u:b | v:c)"))
    with pytest.raises(TargetNotInConclusion):
        inv_and_r(p, F("(u:b & v:c)"))


@given(seeds)
def test_inversion_conclusions(seed: int) -> None:
    p = random_derivation(seed)
    gamma = p.conclusion
    for a in gamma.ordered():
        if isinstance(a, Or):
            q = inv_or(p, a)
            validate(q)
            assert q.conclusion == gamma.replace(a, a.left, a.right)
        elif isinstance(a, And):
            for inv, part in ((inv_and_l, a.left), (inv_and_r, a.right)):
                q = inv(p, a)
                validate(q)
                assert q.conclusion == gamma.replace(a, part)


# ---------------------------------------------------------------------------
# isolation


def test_isolating_fig2a_gives_fig2b() -> None:
    p = figures.fig2a()
    target = next(iter(p.conclusion.formulas))
    assert isolate(p, target) == figures.fig2b()


def test_isolating_an_introduced_target_keeps_the_premisses() -> None:
    q = D("(ax {x:a , y:~a} |- x:a, y:~a, u:b)")
    r = D("(ax {x:a , y:~a} |- x:a, y:~a, v:c)")
    conj = F("(u:b & v:c)")
    out = isolate(AndIntro(conj, q, r), conj)
    assert out.left is q and out.right is r


def test_isolate_rejects_atomic_and_absent_targets() -> None:
    p = D("(ax {x:a , y:~a} |- x:a, y:~a)")
    with pytest.raises(TargetAtomic):
        isolate(p, F("x:a"))
    with pytest.raises(TargetNotInConclusion):
        isolate(p, F("(u:a | v:b)"))


@given(seeds)
def test_isolation_properties(seed: int) -> None:
    p = random_derivation(seed)
    for a in p.conclusion.ordered():
        if a.is_atomic:
            continue
        q = isolate(p, a)
        validate(q)
        assert q.conclusion == p.conclusion
        assert getattr(q, "principal", None) == a
        assert is_cut_free(q) or not is_cut_free(p)
        assert virtual_height(q) <= virtual_height(p)
        assert isolate(q, a) == q


# ---------------------------------------------------------------------------
# weakening and contraction


def test_weaken_an_axiom() -> None:
    p = D("(ax {x:a , y:~a} |- x:a, y:~a)")
    assert weaken(p, [F("z:b")]) == D("(ax {x:a , y:~a} |- x:a, y:~a, z:b)")


def test_weaken_with_nothing_is_identity() -> None:
    p = figures.fig2a()
    assert weaken(p, []) is p


def test_weaken_renames_a_colliding_cut_formula() -> None:
    p = figures.fig2a()  # cuts on u
    q = weaken(p, [F("u:b")])
    validate(q)
    assert q.conclusion == p.conclusion.add(F("u:b"))
    assert isinstance(q, Cut) and q.formula.is_atomic and q.formula != F("u:a")
    assert q.formula.atom == F("u:a").atom


def test_weaken_errors() -> None:
    p = D("(ax {x:a , y:~a} |- x:a, y:~a)")
    with pytest.raises(DeltaSharesNamesWithConclusion):
        weaken(p, [F("x:b")])
    with pytest.raises(DeltaNotSharingFree):
        weaken(p, [F("z:b"), F("(z:c | w:c)")])


def _fresh_copy(a, above: int):
    """``a`` with every name moved above ``above``."""
    return rename(a, Renaming({x: x + above + 1 for x in a.names}))


@given(seeds)
def test_weakening_random_derivations(seed: int) -> None:
    p = random_derivation(seed)
    extra = _fresh_copy(p.conclusion.ordered()[0], max(p.all_names()))
    q = weaken(p, [extra])
    validate(q)
    assert q.conclusion == p.conclusion.add(extra)
    assert is_cut_free(q) == is_cut_free(p)


@given(seeds)
def test_weakening_renames_only_inside_cuts(seed: int) -> None:
    p = random_derivation(seed)
    # reuse a name that only a cut formula carries, forcing the renaming branch
    hidden = sorted(p.all_names() - p.conclusion.names)
    if not hidden:
        return
    extra = Lit(hidden[0], Atom("b", True))
    q = weaken(p, [extra])
    validate(q)
    assert q.conclusion == p.conclusion.add(extra)


def test_contract_two_equivalent_formulas() -> None:
    p = D("(ax {z:~a , x:a} |- z:~a, x:a, y:a)")
    q = contract(p, F("x:a"), F("y:a"))
    validate(q)
    assert q.conclusion == parse_sequent("|- z:~a, x:a")
    assert q == Cut(F("y:a"), p, Ax(F("x:a"), F("y:~a"), parse_sequent("|- z:~a, x:a, y:~a")))


def test_contract_needs_equivalent_formulas() -> None:
    p = D("(ax {z:~a , x:a} |- z:~a, x:a, y:b)")
    with pytest.raises(NotEquivalentPair):
        contract(p, F("x:a"), F("y:b"))


@given(seeds)
def test_contract_random_eligible_derivations(seed: int) -> None:
    p = random_derivation(seed)
    a = p.conclusion.ordered()[-1]
    b = _fresh_copy(a, max(p.all_names()))
    q = contract(weaken(p, [b]), a, b)
    validate(q)
    assert q.conclusion == p.conclusion
