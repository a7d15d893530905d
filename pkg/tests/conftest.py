from __future__ import annotations

import itertools
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from gs4.generate import GenParams, random_derivation  # noqa: E402
from gs4.syntax import And, Atom, Formula, Lit, Or, Sequent  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CORPUS_SIZE = 1000
CORPUS_PARAMS = GenParams(max_depth=6, max_formula_degree=4, allow_cut=True, allow_sup=True)


@pytest.fixture(scope="session")
def corpus():
    """The seeded derivations shared by the property suites."""
    return [random_derivation(seed, CORPUS_PARAMS) for seed in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def corpus_sequents(corpus):
    """Every distinct conclusion occurring at some node of the corpus."""
    seen: dict[Sequent, None] = {}
    for p in corpus:
        for node in p.nodes():
            seen.setdefault(node.conclusion, None)
    return list(seen)


# ---------------------------------------------------------------------------
# hypothesis strategies

atoms = st.builds(Atom, st.sampled_from("abc"), st.booleans())


def _shapes(max_leaves: int = 8):
    leaf = atoms.map(lambda a: ("L", a))
    return st.recursive(
        leaf,
        lambda kids: st.tuples(st.sampled_from(("|", "&")), kids, kids),
        max_leaves=max_leaves,
    )


def _build(shape, counter) -> Formula:
    if shape[0] == "L":
        return Lit(next(counter), shape[1])
    cls = Or if shape[0] == "|" else And
    return cls(_build(shape[1], counter), _build(shape[2], counter))


@st.composite
def formulas(draw, max_leaves: int = 8, first: int = 0) -> Formula:
    """Sharing-free formulas with names allocated from ``first`` upwards."""
    start = draw(st.integers(first, first + 40))
    return _build(draw(_shapes(max_leaves)), itertools.count(start))


@st.composite
def sequents(draw, max_formulas: int = 4, max_leaves: int = 5) -> Sequent:
    counter = itertools.count(draw(st.integers(0, 30)))
    shapes = draw(st.lists(_shapes(max_leaves), min_size=0, max_size=max_formulas))
    return Sequent(_build(s, counter) for s in shapes)


seeds = st.integers(min_value=0, max_value=2**20)
