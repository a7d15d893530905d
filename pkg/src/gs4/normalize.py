"""Graph-preserving cut elimination and the tools around it.

* :func:`normalize` removes every cut without changing the bl-axiom graph.
* :func:`nbe_atomic_cut` rebuilds a cut-free derivation from the composite
  graph of a cut whose context is atomic.
* :func:`witness_path` runs the polarity-assignment state machine that
  produces a complete alternating path through a cut interface.
* :func:`reduce_cut_logical` and :func:`reduce_cut_superposed` are the two
  classic logical cut-reduction steps and their superposition.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from typing import Iterable

from .blgraph import BlGraph, bl_axiom_graph, bl_compose, pair_key
from .derivation import Ax, AndIntro, Cut, Derivation, OrIntro, Sup, is_cut_free, validate
from .errors import EmptyComposite, InternalStuck, PreconditionViolated, ShapeMismatch
from .namegraph import AltPath, edge
from .syntax import And, Formula, Name, Or, Sequent, name_str
from .transform import isolate, weaken

# ---------------------------------------------------------------------------
# normalization


def build_atomic(g: BlGraph, gamma: Sequent) -> Derivation:
    """Cut-free derivation of an atomic ``gamma`` whose bl-graph is ``g``.

    One axiom per edge; the least edge is split off first and the rest is
    folded to the right with superpositions.
    """
    edges = sorted({e for e, _ in sorted(g.pairs, key=pair_key)})
    if not edges:
        raise EmptyComposite(f"no edge over {gamma}")
    by_name = {f.name: f for f in gamma.formulas}  # type: ignore[attr-defined]
    axioms = [Ax(by_name[x], by_name[y], gamma) for x, y in edges]
    out = axioms[-1]
    for ax in reversed(axioms[:-1]):
        out = Sup(ax, out)
    return out


def nbe_atomic_cut(p: Derivation, q: Derivation, a: Formula) -> Derivation:
    """Replace ``cut(a, p, q)`` over an atomic context by a cut-free derivation."""
    gamma = p.conclusion.remove(a)
    if not gamma.is_atomic:
        raise ShapeMismatch(f"context {gamma} is not atomic")
    composite = bl_compose(bl_axiom_graph(p), bl_axiom_graph(q), a.names)
    return build_atomic(composite, gamma)


def _context_target(gamma: Sequent) -> Formula | None:
    compound = [f for f in gamma.formulas if not f.is_atomic]
    return min(compound, key=lambda f: f.min_name) if compound else None


def normalize(p: Derivation) -> Derivation:
    """A cut-free derivation with the same conclusion and bl-axiom graph."""
    validate(p)
    return _normalize(p)


def _normalize(p: Derivation) -> Derivation:
    if is_cut_free(p):
        return p
    if isinstance(p, Sup):
        return Sup(_normalize(p.left), _normalize(p.right))
    if isinstance(p, OrIntro):
        return OrIntro(p.principal, _normalize(p.premiss))
    if isinstance(p, AndIntro):
        return AndIntro(p.principal, _normalize(p.left), _normalize(p.right))
    assert isinstance(p, Cut)
    target = _context_target(p.conclusion)
    if target is not None:
        # the isolated derivation ends with a logical rule, handled above
        return _normalize(isolate(p, target))
    return nbe_atomic_cut(_normalize(p.left), _normalize(p.right), p.formula)


# ---------------------------------------------------------------------------
# the witness state machine

CIRCLE, BULLET = 0, 1  # polarity p selects graph p


def co(p: int) -> int:
    return 1 - p


Assignment = frozenset  # of (name, polarity)
Pair = tuple  # (Assignment, path tuple)


@dataclass
class WitnessTrace:
    """Live-name sets seen at each step of a :func:`witness_path` run."""

    live_names: list[frozenset]
    states: int


class _Machine:
    def __init__(self, g: BlGraph, h: BlGraph, interface: frozenset):
        self.iface = interface
        self.edges = (g.edges, h.edges)

    def is_initial(self, path: tuple, p: int) -> bool:
        """Odd edges in G_p, even edges in the other graph."""
        return all(edge(path[i], path[i + 1]) in self.edges[p if i % 2 == 0 else co(p)] for i in range(len(path) - 1))

    def is_final(self, path: tuple, p: int) -> bool:
        n = len(path)
        return self.is_initial(path, p) if n % 2 == 0 else self.is_initial(path, co(p))

    def is_path(self, path: tuple) -> bool:
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        if any(v not in self.iface for v in path[1:-1]):
            return False
        return self.is_initial(path, CIRCLE) or self.is_initial(path, BULLET)

    def consistent(self, pair: Pair) -> bool:
        s, path = pair
        names = [x for x, _ in s]
        if len(names) != len(set(names)):
            return False
        if not self.is_path(path):
            return False
        pol = dict(s)
        for end, check in ((path[0], self.is_initial), (path[-1], self.is_final)):
            if end in self.iface and end not in pol:
                return False
            if end in pol and not check(path, pol[end]):
                return False
        return True

    @staticmethod
    def partner_key(s: Assignment, x: Name, p: int) -> Assignment:
        return (s - {(x, p)}) | {(x, co(p))}

    def live(self, state: set) -> bool:
        if not state:
            return False
        keys = {s for s, _ in state}
        return all(self.partner_key(s, x, p) in keys for s, _ in state for x, p in s)

    @staticmethod
    def live_names(state: set) -> frozenset:
        return frozenset(x for s, _ in state for x, _ in s)

    def join(self, z: tuple, w: tuple, x: Name) -> tuple | None:
        if z[-1] == x and w[0] == x:
            out = z + w[1:]
        elif z[-1] == x and w[-1] == x:
            out = z + w[-2::-1]
        elif z[0] == x and w[0] == x:
            out = z[::-1] + w[1:]
        else:  # z[0] == x and w[-1] == x
            out = z[::-1] + w[-2::-1]
        return out if len(set(out)) == len(out) else None

    def step(self, state: set, x: Name) -> set:
        by_key: dict[Assignment, list[tuple]] = {}
        for s, path in state:
            by_key.setdefault(s, []).append(path)
        for paths in by_key.values():
            paths.sort()
        new: set = set()
        for s, z in sorted(state, key=lambda pr: (sorted(pr[0]), pr[1])):
            pol = dict(s)
            if x not in pol:
                new.add((s, z))
                continue
            p = pol[x]
            s2 = s - {(x, p)}
            partners = by_key.get(self.partner_key(s, x, p), [])
            if not partners:
                raise InternalStuck(f"no partner for {name_str(x)} in a live state")
            if x not in (z[0], z[-1]):
                new.add((s2, z))
                continue
            free = [w for w in partners if x not in (w[0], w[-1])]
            if free:
                new.add((s2, free[0]))
                continue
            for w in partners:
                joined = self.join(z, w, x)
                if joined is not None:
                    new.add((s2, joined))
                    break
            else:
                raise InternalStuck(
                    f"every join on {name_str(x)} repeats a vertex: "
                    + ",".join(name_str(v) for v in z)
                )
        return new


def _unique_label(g: BlGraph, h: BlGraph, iface: frozenset) -> frozenset:
    labels = {label - iface for _, label in g.pairs} | {label - iface for _, label in h.pairs}
    if len(labels) != 1:
        raise PreconditionViolated(f"{len(labels)} branch labels up to the interface, need exactly one")
    return next(iter(labels))


def initial_state(g: BlGraph, h: BlGraph, interface: Iterable[Name]) -> set:
    """Pairs ⟨f, (x, y)⟩ for every total polarity assignment f on the interface.

    The edge xy of graph p qualifies when f sends the interface part of one of
    its labels into {p}.
    """
    iface = frozenset(interface)
    names = sorted(iface)
    graphs = (g, h)
    state: set = set()
    for values in itertools.product((CIRCLE, BULLET), repeat=len(names)):
        f = dict(zip(names, values))
        fs = frozenset(f.items())
        for p in (CIRCLE, BULLET):
            for e, label in graphs[p].pairs:
                if all(f[y] == p for y in label & iface):
                    state.add((fs, e))
    return state


def witness_path(g: BlGraph, h: BlGraph, interface: Iterable[Name], trace: WitnessTrace | None = None) -> AltPath:
    """Run the reduction of polarity states to a terminal one and return a complete path."""
    iface = frozenset(interface)
    _unique_label(g, h, iface)
    m = _Machine(g, h, iface)
    state = initial_state(g, h, iface)
    if not all(m.consistent(pr) for pr in state):
        raise PreconditionViolated("initial state is not consistent")
    if not m.live(state):
        raise PreconditionViolated("initial state is not live")
    names = m.live_names(state)
    if trace is not None:
        trace.live_names.append(names)
    while names:
        x = min(names)
        state = m.step(state, x)
        new_names = m.live_names(state)
        if not new_names < names:
            raise InternalStuck("live names did not shrink")
        if not all(m.consistent(pr) for pr in state) or not m.live(state):
            raise InternalStuck(f"state lost consistency or liveness after removing {name_str(x)}")
        names = new_names
        if trace is not None:
            trace.live_names.append(names)
    if trace is not None:
        trace.states = len(state)
    complete = sorted(path for _, path in state if path[0] not in iface and path[-1] not in iface)
    if not complete:
        raise InternalStuck("terminal state holds no complete path")
    path = complete[0]
    return AltPath(path, CIRCLE if m.is_initial(path, CIRCLE) else BULLET)


# ---------------------------------------------------------------------------
# logical cut-reduction steps


def _split_logical_cut(p: Derivation) -> tuple[Formula, Formula, Derivation, Derivation, Derivation]:
    """Return (A, B, P0, Q, R) for a cut of A∨B introduced on both sides."""
    if not isinstance(p, Cut):
        raise ShapeMismatch("root is not a cut")
    f = p.formula
    if isinstance(f, Or):
        or_side, and_side, disj = p.left, p.right, f
    elif isinstance(f, And):
        or_side, and_side, disj = p.right, p.left, f.dual()
    else:
        raise ShapeMismatch(f"cut formula {f} is atomic")
    if not (isinstance(or_side, OrIntro) and or_side.principal == disj):
        raise ShapeMismatch(f"premiss does not end by introducing {disj}")
    if not (isinstance(and_side, AndIntro) and and_side.principal == disj.dual()):
        raise ShapeMismatch(f"premiss does not end by introducing {disj.dual()}")
    a, b = disj.left, disj.right  # type: ignore[attr-defined]
    return a, b, or_side.premiss, and_side.left, and_side.right


def reduce_cut_logical(p: Derivation, side: str = "left") -> Derivation:
    """``left`` keeps B as the outer cut, ``right`` keeps A."""
    a, b, p0, q, r = _split_logical_cut(p)
    if side == "left":
        return Cut(b, Cut(a, p0, weaken(q, [b])), r)
    if side == "right":
        return Cut(a, Cut(b, p0, weaken(r, [a])), q)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def reduce_cut_superposed(p: Derivation) -> Derivation:
    return Sup(reduce_cut_logical(p, "left"), reduce_cut_logical(p, "right"))


CSV_FIELDS = ["seed", "eligible", "preserved_logical_left", "preserved_logical_right", "preserved_superposed"]


def pulcini_row(seed: int, p: Derivation | None) -> dict:
    row = dict.fromkeys(CSV_FIELDS, 0)
    row["seed"] = seed
    if p is None:
        return row
    try:
        _split_logical_cut(p)
    except ShapeMismatch:
        return row
    row["eligible"] = 1
    before = bl_axiom_graph(p)
    for key, q in (
        ("preserved_logical_left", reduce_cut_logical(p, "left")),
        ("preserved_logical_right", reduce_cut_logical(p, "right")),
        ("preserved_superposed", reduce_cut_superposed(p)),
    ):
        validate(q)
        row[key] = int(bl_axiom_graph(q) == before)
    return row


def pulcini_experiment(seeds: Iterable[int], make) -> str:
    """CSV report over ``seeds``; ``make(seed)`` builds the derivation to reduce."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for seed in seeds:
        writer.writerow(pulcini_row(seed, make(seed)))
    return buf.getvalue()
