"""Seeded random derivations for property tests and experiments.

Generation is top-down: pick a valid conclusion, then repeatedly choose a rule
whose premisses are again valid.  A sequent is valid when each of its branches
contains two names labelling dual atoms, which is exactly what lets an atomic
leaf close with an axiom.  Every rule choice preserves validity, so the
generator never gets stuck.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import prod

from .derivation import Ax, AndIntro, Cut, Derivation, OrIntro, Sup
from .syntax import And, Atom, Formula, Lit, Or, Sequent, equiv, formula_branches, branches, rename_formula

ATOM_BASES = ("a", "b", "c")


@dataclass(frozen=True)
class GenParams:
    max_depth: int = 6
    max_formula_degree: int = 4
    allow_cut: bool = True
    allow_sup: bool = True
    atomic_context_cuts_only: bool = False
    max_context: int = 5
    max_branches: int = 48
    bases: tuple = ATOM_BASES


def is_valid_sequent(gamma: Sequent) -> bool:
    atoms = gamma.atoms()
    for branch in branches(gamma.formulas):
        seen = {(atoms[x].base, atoms[x].positive) for x in branch}
        if not any((b, not pos) in seen for b, pos in seen):
            return False
    return True


def branch_count(gamma) -> int:
    return prod(len(formula_branches(f)) for f in gamma)


class Generator:
    def __init__(self, seed: int, params: GenParams = GenParams(), first_name: int = 0):
        self.rng = random.Random(seed)
        self.params = params
        self.fresh = itertools.count(first_name)
        # axioms touching these names are preferred (used to aim at a cut interface)
        self.focus: frozenset = frozenset()

    # formulas ------------------------------------------------------------
    def formula(self, degree: int) -> Formula:
        if degree == 0:
            return Lit(next(self.fresh), Atom(self.rng.choice(self.params.bases), self.rng.random() < 0.5))
        left = self.rng.randint(0, degree - 1)
        cls = Or if self.rng.random() < 0.5 else And
        return cls(self.formula(left), self.formula(degree - 1 - left))

    def copy(self, a: Formula) -> Formula:
        """``a`` with fresh names."""
        table: dict[int, int] = {}
        return rename_formula(a, lambda x: table.setdefault(x, next(self.fresh)))

    def conclusion(self) -> Sequent:
        rng, maxdeg = self.rng, self.params.max_formula_degree
        if rng.random() < 0.5:
            for _ in range(60):
                k = rng.randint(1, 3)
                gamma = Sequent(self.formula(rng.randint(0, maxdeg)) for _ in range(k))
                if branch_count(gamma) <= self.params.max_branches and is_valid_sequent(gamma):
                    return gamma
        a = self.formula(rng.randint(0, min(maxdeg, 3)))
        extras = [self.formula(rng.randint(0, 2)) for _ in range(rng.randint(0, 1))]
        return Sequent([a, self.copy(a).dual(), *extras])

    # derivations ---------------------------------------------------------
    def derivation(self, gamma: Sequent | None = None) -> Derivation:
        gamma = self.conclusion() if gamma is None else gamma
        return self._gen(gamma, 0)

    def _axiom_pairs(self, gamma: Sequent) -> list[tuple[Formula, Formula]]:
        fs = gamma.ordered()
        return [(f, g) for f, g in itertools.combinations(fs, 2) if equiv(f, g.dual())]

    def _gen(self, gamma: Sequent, depth: int) -> Derivation:
        rng, prm = self.rng, self.params
        pairs = self._axiom_pairs(gamma)
        compound = [f for f in gamma.ordered() if not f.is_atomic]
        free = depth < prm.max_depth
        weights: dict[str, float] = {}
        if pairs:
            weights["ax"] = 3.0 if free else 1.0
        if compound:
            weights["dec"] = 4.0
        if free:
            room = len(gamma) < prm.max_context
            if (
                prm.allow_cut
                and room
                and (not prm.atomic_context_cuts_only or gamma.is_atomic)
                and branch_count(gamma) <= prm.max_branches
            ):
                weights["cut"] = 2.0 if depth < prm.max_depth - 1 else 0.5
            if prm.allow_sup:
                weights["sup"] = 1.0 if depth < prm.max_depth - 1 else 0.3
        if not free and "ax" in weights:
            weights = {"ax": 1.0}
        if not weights:
            raise ValueError(f"{gamma} is not valid")
        choice = rng.choices(list(weights), weights=list(weights.values()))[0]
        if choice == "ax":
            hits = [pr for pr in pairs if not self.focus.isdisjoint(pr[0].names | pr[1].names)]
            pool = hits if hits and rng.random() < 0.8 else pairs
            a, b = pool[rng.randrange(len(pool))]
            return Ax(a, b, gamma)
        if choice == "dec":
            f = compound[rng.randrange(len(compound))]
            if isinstance(f, Or):
                return OrIntro(f, self._gen(gamma.replace(f, f.left, f.right), depth + 1))
            return AndIntro(
                f,
                self._gen(gamma.replace(f, f.left), depth + 1),  # type: ignore[attr-defined]
                self._gen(gamma.replace(f, f.right), depth + 1),  # type: ignore[attr-defined]
            )
        if choice == "sup":
            return Sup(self._gen(gamma, depth + 1), self._gen(gamma, depth + 1))
        a = self._cut_formula(gamma)
        return Cut(a, self._gen(gamma.add(a), depth + 1), self._gen(gamma.add(a.dual()), depth + 1))

    def _cut_formula(self, gamma: Sequent) -> Formula:
        rng, prm = self.rng, self.params
        members = gamma.ordered()
        if members and rng.random() < 0.4:
            candidates = [f for f in members if f.degree <= prm.max_formula_degree]
            if candidates:
                # a renamed dual of a context formula sets up a compound axiom
                return self.copy(rng.choice(candidates).dual())
        for _ in range(20):
            a = self.formula(rng.randint(0, prm.max_formula_degree))
            if branch_count(list(gamma.formulas) + [a]) <= prm.max_branches and branch_count(
                list(gamma.formulas) + [a.dual()]
            ) <= prm.max_branches:
                return a
        return self.formula(0)


def random_derivation(seed: int, params: GenParams | dict | None = None) -> Derivation:
    """Deterministic in ``seed``; always valid."""
    if isinstance(params, dict):
        params = GenParams(**params)
    return Generator(seed, params or GenParams()).derivation()


def random_atomic_cut(seed: int, max_cut_degree: int = 5, max_tries: int = 500) -> tuple[Derivation, Derivation, Formula]:
    """Cut-free P ⊢Γ,A and Q ⊢Γ,Ā over an atomic context Γ.

    Prefers contexts that are not provable on their own, so the cut carries
    information.
    """
    gen = Generator(seed, GenParams(allow_cut=False, max_depth=4, max_formula_degree=max_cut_degree))
    rng = gen.rng
    chosen = None
    for attempt in range(max_tries):
        gamma = Sequent(gen.formula(0) for _ in range(rng.randint(1, 4)))
        a = gen.formula(rng.randint(0, max_cut_degree))
        left, right = gamma.add(a), gamma.add(a.dual())
        if is_valid_sequent(left) and is_valid_sequent(right):
            chosen = (gamma, a, left, right)
            if not is_valid_sequent(gamma) or attempt > max_tries // 2:
                break
    if chosen is None:
        raise RuntimeError(f"no atomic cut found for seed {seed}")
    gamma, a, left, right = chosen
    return gen.derivation(left), gen.derivation(right), a


def random_logical_cut(seed: int, max_component_degree: int = 2, max_tries: int = 500) -> Derivation:
    """A cut on A∨B whose premisses end with the matching ∨ and ∧ introductions.

    Atoms are drawn from two bases so dual pairs are common, and axioms
    prefer names of the cut formula so that paths cross the interface.
    """
    gen = Generator(seed, GenParams(allow_cut=False, max_depth=6, max_formula_degree=2, bases=("a", "b")))
    rng = gen.rng
    found = None
    for _ in range(max_tries):
        gamma = Sequent(gen.formula(rng.choice((0, 0, 1))) for _ in range(rng.randint(1, 4)))
        a = gen.formula(rng.randint(0, max_component_degree))
        b = gen.formula(rng.randint(0, max_component_degree))
        seqs = (gamma.add(a, b), gamma.add(a.dual()), gamma.add(b.dual()))
        if all(is_valid_sequent(s) for s in seqs):
            found = (a, b, seqs)
            break
    if found is None:
        raise RuntimeError(f"no logical cut found for seed {seed}")
    a, b, (s0, sq, sr) = found
    disj = Or(a, b)
    gen.focus = disj.names
    p0, q, r = gen.derivation(s0), gen.derivation(sq), gen.derivation(sr)
    return Cut(disj, OrIntro(disj, p0), AndIntro(disj.dual(), q, r))
