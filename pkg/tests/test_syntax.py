from __future__ import annotations

import pytest
from conftest import formulas, sequents
from hypothesis import given
from hypothesis import strategies as st
from oracles import decomposition_branches, formula_size, powerset_branches

from gs4.errors import DomainTooSmall, NameNotFound, NotInjective, NotSharingFree, ParseError
from gs4.syntax import (
    And,
    Atom,
    Lit,
    Or,
    Renaming,
    Sequent,
    atom_at,
    branches,
    equiv,
    is_sharing_free,
    lit,
    measures,
    name_str,
    names_of,
    negate,
    parse_formula,
    parse_name,
    parse_sequent,
    rename,
)


def names(text: str) -> frozenset:
    return frozenset(parse_name(c) for c in text)


# ---------------------------------------------------------------------------
# names and parsing


def test_single_letter_names_follow_the_alphabet() -> None:
    assert [name_str(k) for k in range(3)] == ["a", "b", "c"]
    assert name_str(25) == "z"
    assert name_str(26) == "a0"
    assert parse_name("x") == 23


@given(st.integers(0, 10**7))
def test_name_spelling_round_trips(k: int) -> None:
    assert parse_name(name_str(k)) == k


@given(st.integers(0, 10**5), st.integers(0, 10**5))
def test_name_order_is_shortlex_order_of_spellings(i: int, j: int) -> None:
    a, b = name_str(i), name_str(j)
    assert (i < j) == ((len(a), a) < (len(b), b))


@pytest.mark.parametrize("bad", ["X", "1a", "", "a-b"])
def test_bad_names_are_rejected(bad: str) -> None:
    with pytest.raises(ParseError):
        parse_name(bad)


def test_double_negation_normalizes_at_parse_time() -> None:
    assert parse_formula("x:~~a") == lit("x", "a")


def test_mixed_connectives_need_parentheses() -> None:
    with pytest.raises(ParseError):
        parse_formula("x:a | y:b & z:c")
    assert parse_formula("x:a | y:b | z:c") == Or(Or(lit("x", "a"), lit("y", "b")), lit("z", "c"))


@given(formulas())
def test_formula_text_round_trips(a) -> None:
    assert parse_formula(str(a)) == a


@given(sequents())
def test_sequent_text_round_trips(gamma) -> None:
    assert parse_sequent(str(gamma)) == gamma


def test_empty_sequent_prints_as_turnstile() -> None:
    assert str(Sequent()) == "|-"
    assert parse_sequent("|-") == Sequent()


def test_sequent_members_print_by_least_name() -> None:
    gamma = parse_sequent("|- z:a, (x:a | y:b)")
    assert str(gamma) == "|- (x:a | y:b), z:a"


# ---------------------------------------------------------------------------
# atoms, negation, equivalence


def test_atom_duality_is_a_fixpoint_free_involution() -> None:
    a = Atom("a", True)
    assert a.dual() != a
    assert a.dual().dual() == a


def test_negate_dualizes_an_atom() -> None:
    assert negate(parse_formula("x:a")) == parse_formula("x:~a")


def test_negate_swaps_connectives() -> None:
    assert negate(parse_formula("(x:a | y:b)")) == parse_formula("(x:~a & y:~b)")


def test_negate_is_involutive_on_an_example() -> None:
    a = parse_formula("(x:a & (y:b | z:~a))")
    assert negate(negate(a)) == a


@given(formulas())
def test_negate_is_involutive(a) -> None:
    assert negate(negate(a)) == a


@given(formulas())
def test_negation_preserves_names(a) -> None:
    assert names_of(negate(a)) == names_of(a)


@given(formulas())
def test_negation_commutes_with_atom_lookup(a) -> None:
    gamma, dual_gamma = Sequent([a]), Sequent([negate(a)])
    for x in a.names:
        assert atom_at(dual_gamma, x) == atom_at(gamma, x).dual()


@pytest.mark.parametrize(
    "left, right, expected",
    [("x:a", "y:a", True), ("x:a", "y:~a", False), ("(x:a | y:b)", "(u:a | v:b)", True),
     ("(x:a | y:b)", "(u:a & v:b)", False), ("(x:a | y:b)", "(u:b | v:a)", False)],
)
def test_equiv_ignores_names_only(left: str, right: str, expected: bool) -> None:
    assert equiv(parse_formula(left), parse_formula(right)) is expected


# ---------------------------------------------------------------------------
# names and sharing-freedom


def test_names_of_atom_and_sequent() -> None:
    assert names_of(parse_formula("x:a")) == names("x")
    assert names_of(parse_sequent("|- (x:a | y:b), z:~a")) == names("xyz")


def test_sharing_free_examples() -> None:
    assert is_sharing_free([parse_formula("(x:a | y:b)"), parse_formula("z:~a")])
    assert not is_sharing_free([Or(lit("x", "a"), lit("x", "b"))])
    assert not is_sharing_free([parse_formula("x:a"), parse_formula("(x:~a & y:b)")])


def test_atom_at_finds_the_labelled_atom() -> None:
    assert atom_at(parse_sequent("|- (x:~a | y:a)"), parse_name("y")) == Atom("a", True)


def test_atom_at_missing_name() -> None:
    with pytest.raises(NameNotFound):
        atom_at(parse_sequent("|- x:a"), parse_name("z"))


# ---------------------------------------------------------------------------
# branches


def test_branches_of_an_atom() -> None:
    assert branches(parse_formula("x:a")) == {names("x")}


def test_branches_of_an_atomic_sequent() -> None:
    assert branches(parse_sequent("|- x:a, y:~a, z:b")) == {names("xyz")}


def test_branches_of_the_lower_blg_example() -> None:
    gamma = parse_sequent("|- (x:a & y:~b), (z:b & u:~c), (v:~a | w:c)")
    assert branches(gamma) == {names("xzvw"), names("xuvw"), names("yzvw"), names("yuvw")}


def test_branches_of_the_empty_sequent() -> None:
    assert branches(Sequent()) == {frozenset()}


def test_branches_reject_sharing() -> None:
    with pytest.raises(NotSharingFree):
        branches(Or(lit("x", "a"), lit("x", "b")))


@given(formulas())
def test_formula_branches_are_nonempty(a) -> None:
    assert all(x for x in branches(a))


@given(sequents(max_formulas=3, max_leaves=4))
def test_branches_match_the_subset_definition(gamma) -> None:
    assert branches(gamma) == powerset_branches(gamma)


@given(sequents())
def test_branches_match_the_rule_decomposition(gamma) -> None:
    assert branches(gamma) == decomposition_branches(gamma)


# ---------------------------------------------------------------------------
# measures


def test_measures_of_an_atom() -> None:
    m = measures(parse_formula("x:a"))
    assert (m.height, m.atom_count, m.degree, m.size) == (0, 1, 0, 1)


def test_measures_of_a_conjunction() -> None:
    m = measures(parse_formula("(x:a & y:b)"))
    assert (m.height, m.atom_count, m.degree, m.size) == (1, 2, 1, 3)


@given(formulas())
def test_formula_measure_identities(a) -> None:
    m = measures(a)
    assert m.atom_count == 1 + m.degree
    assert m.size == 1 + 2 * m.degree == formula_size(a)
    assert m.height <= m.degree


@given(sequents())
def test_sequent_measure_identities(gamma) -> None:
    m = measures(gamma)
    assert m.atom_count == len(gamma) + m.degree
    assert m.size == len(gamma) + 2 * m.degree


# ---------------------------------------------------------------------------
# renaming


def test_rename_an_atom() -> None:
    phi = Renaming({parse_name("x"): parse_name("y")})
    assert rename(parse_formula("x:a"), phi) == parse_formula("y:a")


def test_renaming_must_be_injective() -> None:
    with pytest.raises(NotInjective):
        Renaming({1: 5, 2: 5})


def test_renaming_must_cover_every_name() -> None:
    with pytest.raises(DomainTooSmall):
        rename(parse_formula("(x:a | y:b)"), Renaming({parse_name("x"): 1}))


@given(formulas(), st.integers(1, 500))
def test_rename_then_inverse_is_identity(a, shift) -> None:
    phi = Renaming({x: x + shift for x in a.names})
    b = rename(a, phi)
    assert equiv(a, b)
    assert b.sharing_free
    assert rename(b, phi.inverse()) == a


@given(formulas())
def test_identity_renaming_is_identity(a) -> None:
    assert rename(a, Renaming({x: x for x in a.names})) == a


@given(formulas(), st.integers(1, 500))
def test_renaming_commutes_with_negation(a, shift) -> None:
    phi = Renaming({x: x + shift for x in a.names})
    assert rename(negate(a), phi) == negate(rename(a, phi))


def test_and_or_are_distinct_types() -> None:
    x, y = lit("x", "a"), lit("y", "b")
    assert Or(x, y) != And(x, y)
    assert hash(Lit(parse_name("x"), Atom("a", True))) == hash(x)
