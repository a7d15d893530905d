"""The BLG proof system: total bl-graph/sequent pairs.

A bl-graph is total w.r.t. a sharing-free sequent when its vertices are the
sequent's names, its labels are exactly the sequent's branches, and each edge
links dual atoms.  :func:`is_total` checks this by enumerating every branch;
:func:`check_totality_poly` matches branches one at a time against the
graph's labels and never builds the full branch set.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field

from .blgraph import BlGraph, bl_compose, bl_id, bl_restrict, bl_union, bl_wk, bl_axiom_graph, from_dict, to_dict
from .blgraph import _fmt_set
from .derivation import AndIntro, Derivation, OrIntro, validate
from .errors import (
    ExcessBranches,
    MissingBranch,
    NonDualEdge,
    NotTotal,
    PairInvalid,
    ParseError,
    ShapeMismatch,
    TotalityError,
    VertexMismatch,
)
from .namegraph import edge
from .normalize import build_atomic
from .syntax import And, Formula, Or, Sequent, branches, is_sharing_free, measures, name_str, parse_sequent


@dataclass(frozen=True)
class BlgProof:
    graph: BlGraph
    sequent: Sequent


# ---------------------------------------------------------------------------
# totality


def _dual_atoms(gamma: Sequent, x: int, y: int) -> bool:
    atoms = gamma.atoms()
    return x in atoms and y in atoms and atoms[x] == atoms[y].dual()


def is_total(g: BlGraph, gamma: Sequent) -> bool:
    """Reference check; enumerates all branches of ``gamma``."""
    return (
        g.vertices == gamma.names
        and g.branches == branches(gamma)
        and all(_dual_atoms(gamma, x, y) for x, y in g.edges)
    )


@dataclass
class TotalityResult:
    ok: bool
    error: TotalityError | None = None
    steps: int = 0
    matched: list = field(default_factory=list)

    def raise_for_error(self) -> None:
        if self.error is not None:
            raise self.error


def _reduce(delta: list[Formula], delayed: deque) -> tuple[list[Formula], int]:
    """Rewrite ``delta`` to an atomic list; returns it and the work spent."""
    work = 0
    while True:
        work += sum(2 * f.degree + 1 for f in delta)  # size of the active sequent
        i = next((k for k, f in enumerate(delta) if isinstance(f, Or)), None)
        if i is not None:
            f = delta[i]
            delta = delta[:i] + [f.left, f.right] + delta[i + 1 :]  # type: ignore[attr-defined]
            continue
        i = next((k for k, f in enumerate(delta) if isinstance(f, And)), None)
        if i is None:
            return delta, work
        f = delta[i]
        rest = delta[:i] + delta[i + 1 :]
        delayed.append(rest + [f.right])  # type: ignore[attr-defined]
        delta = rest + [f.left]  # type: ignore[attr-defined]


def check_totality_poly(g: BlGraph, gamma: Sequent) -> TotalityResult:
    """Worklist totality check; ``steps`` counts the elementary work done."""
    steps = len(g.vertices) + len(gamma.names)
    if g.vertices != gamma.names:
        missing, extra = gamma.names - g.vertices, g.vertices - gamma.names
        return TotalityResult(
            False, VertexMismatch(f"missing={_fmt_set(missing)} extra={_fmt_set(extra)}"), steps
        )
    atoms = gamma.atoms()
    for x, y in sorted(g.edges):
        steps += 1
        if atoms[x] != atoms[y].dual():
            return TotalityResult(False, NonDualEdge(f"{name_str(x)}{name_str(y)}"), steps)

    candidates = set(g.branches)
    steps += sum(len(label) for label in candidates)
    delayed: deque = deque()
    matched = []
    delta: list[Formula] | None = list(gamma.ordered())
    while delta is not None:
        atomic, work = _reduce(delta, delayed)
        steps += work
        x = frozenset(f.name for f in atomic)  # type: ignore[attr-defined]
        steps += len(x)
        if x not in candidates:
            return TotalityResult(False, MissingBranch(_fmt_set(x)), steps, matched)
        candidates.remove(x)
        matched.append(x)
        steps += 1
        if not candidates and not delayed:
            delta = None
        elif not candidates:
            rest, _ = _reduce(delayed.popleft(), deque())
            missing = frozenset(f.name for f in rest)  # type: ignore[attr-defined]
            return TotalityResult(False, MissingBranch(_fmt_set(missing)), steps, matched)
        elif not delayed:
            excess = " ".join(_fmt_set(c) for c in sorted(candidates, key=sorted))
            return TotalityResult(False, ExcessBranches(excess), steps, matched)
        else:
            delta = delayed.popleft()
    return TotalityResult(True, None, steps, matched)


def blg_size(p: BlgProof) -> int:
    return measures(p.sequent).size + len(p.graph.vertices) + sum(len(label) for _, label in p.graph.pairs)


def is_blg(p: BlgProof) -> bool:
    return is_sharing_free(p.sequent) and check_totality_poly(p.graph, p.sequent).ok


# ---------------------------------------------------------------------------
# sequentialization


def blg_from_derivation(p: Derivation) -> BlgProof:
    validate(p)
    return BlgProof(bl_axiom_graph(p), p.conclusion)


def sequentialize(proof: BlgProof) -> Derivation:
    """A cut-free derivation whose bl-axiom graph is ``proof.graph``."""
    result = check_totality_poly(proof.graph, proof.sequent)
    if not result.ok:
        raise NotTotal(result.error.record())  # type: ignore[union-attr]
    return _sequentialize(proof.graph, proof.sequent)


def _sequentialize(g: BlGraph, gamma: Sequent) -> Derivation:
    compound = sorted((f for f in gamma.formulas if not f.is_atomic), key=lambda f: f.min_name)
    if not compound:
        return build_atomic(g, gamma)
    disj = [f for f in compound if isinstance(f, Or)]
    if disj:
        f = disj[0]
        return OrIntro(f, _sequentialize(g, gamma.replace(f, f.left, f.right)))  # type: ignore[attr-defined]
    f = compound[0]
    left, right = gamma.replace(f, f.left), gamma.replace(f, f.right)  # type: ignore[attr-defined]
    return AndIntro(
        f,
        _sequentialize(bl_restrict(g, left.names), left),
        _sequentialize(bl_restrict(g, right.names), right),
    )


# ---------------------------------------------------------------------------
# admissible rules


def _need(cond: bool, detail: str) -> None:
    if not cond:
        raise ShapeMismatch(detail)


def blg_or_intro(p: BlgProof, disj: Formula) -> BlgProof:
    _need(isinstance(disj, Or), f"{disj} is not a disjunction")
    _need(disj.left in p.sequent and disj.right in p.sequent, f"{disj} components not in {p.sequent}")  # type: ignore[attr-defined]
    return BlgProof(p.graph, p.sequent.remove(disj.left, disj.right).add(disj))  # type: ignore[attr-defined]


def blg_or_elim(p: BlgProof, disj: Formula) -> BlgProof:
    _need(isinstance(disj, Or) and disj in p.sequent, f"{disj} is not a disjunction of {p.sequent}")
    return BlgProof(p.graph, p.sequent.replace(disj, disj.left, disj.right))  # type: ignore[attr-defined]


def blg_and(p: BlgProof, q: BlgProof, conj: Formula) -> BlgProof:
    _need(isinstance(conj, And), f"{conj} is not a conjunction")
    a, b = conj.left, conj.right  # type: ignore[attr-defined]
    _need(a in p.sequent and b in q.sequent, f"{a} or {b} missing from the premisses")
    _need(p.sequent.remove(a) == q.sequent.remove(b), "premiss contexts differ")
    return BlgProof(bl_union((p.graph, q.graph)), p.sequent.replace(a, conj))


def _and_proj(p: BlgProof, conj: Formula, side: int) -> BlgProof:
    _need(isinstance(conj, And) and conj in p.sequent, f"{conj} is not a conjunction of {p.sequent}")
    keep = conj.left if side == 0 else conj.right  # type: ignore[attr-defined]
    gamma = p.sequent.replace(conj, keep)
    return BlgProof(bl_restrict(p.graph, gamma.names), gamma)


def blg_and_proj_l(p: BlgProof, conj: Formula) -> BlgProof:
    return _and_proj(p, conj, 0)


def blg_and_proj_r(p: BlgProof, conj: Formula) -> BlgProof:
    return _and_proj(p, conj, 1)


def blg_cut(p: BlgProof, q: BlgProof, a: Formula) -> BlgProof:
    _need(a in p.sequent and a.dual() in q.sequent, f"cut formula {a} does not match the premisses")
    gamma = p.sequent.remove(a)
    _need(gamma == q.sequent.remove(a.dual()), "premiss contexts differ")
    return BlgProof(bl_compose(p.graph, q.graph, a.names), gamma)


def blg_ax(gamma: Sequent, a: Formula, b: Formula) -> BlgProof:
    try:
        ident = bl_id(a, b)
    except PairInvalid as err:
        raise ShapeMismatch(err.detail) from None
    _need(gamma.names.isdisjoint(a.names | b.names), "context shares names with the axiom pair")
    return BlgProof(bl_wk(gamma.formulas, ident), gamma.add(a, b))


def blg_sup(p: BlgProof, q: BlgProof) -> BlgProof:
    _need(p.sequent == q.sequent, "superposed conclusions differ")
    return BlgProof(bl_union((p.graph, q.graph)), p.sequent)


# ---------------------------------------------------------------------------
# negative instances


MUTATIONS = ("drop_branch", "add_branch", "flip_edge", "vertex")


def mutate(p: BlgProof, kind: str, rng: random.Random) -> BlgProof:
    """Break exactly one totality clause of a total ``p``."""
    g, gamma = p.graph, p.sequent
    pairs = sorted(g.pairs, key=lambda pr: (pr[0], sorted(pr[1])))
    if kind == "drop_branch":
        labels = sorted(g.branches, key=sorted)
        gone = labels[rng.randrange(len(labels))]
        return BlgProof(BlGraph(g.vertices, frozenset(pr for pr in pairs if pr[1] != gone)), gamma)
    if kind == "add_branch":
        e, label = pairs[rng.randrange(len(pairs))]
        outside = sorted(gamma.names - label)
        if not outside:
            return mutate(p, "vertex", rng)
        # branches of a sharing-free sequent are never nested, so this is spurious
        extra = label | {outside[rng.randrange(len(outside))]}
        return BlgProof(BlGraph(g.vertices, g.pairs | {(e, extra)}), gamma)
    if kind == "flip_edge":
        atoms = gamma.atoms()
        (x, y), label = pairs[rng.randrange(len(pairs))]
        others = sorted(z for z in label if z != x and atoms[z] != atoms[x].dual())
        if not others:
            others = sorted(z for z in gamma.names if z != x and atoms[z] != atoms[x].dual())
            if not others:
                return mutate(p, "vertex", rng)
            z = others[rng.randrange(len(others))]
            bad = (edge(x, z), label | {z})
        else:
            z = others[rng.randrange(len(others))]
            bad = (edge(x, z), label)
        return BlgProof(BlGraph(g.vertices, (g.pairs - {((x, y), label)}) | {bad}), gamma)
    if kind == "vertex":
        used = {v for e in g.edges for v in e}
        spare = sorted(g.vertices - used)
        if spare:
            return BlgProof(BlGraph(g.vertices - {spare[rng.randrange(len(spare))]}, g.pairs), gamma)
        return BlgProof(BlGraph(g.vertices | {max(gamma.names) + 1}, g.pairs), gamma)
    raise ValueError(f"unknown mutation {kind}")


# ---------------------------------------------------------------------------
# file format


def proof_to_dict(p: BlgProof) -> dict:
    data = to_dict(p.graph)
    data["sequent"] = str(p.sequent)
    return data


def proof_from_dict(data: dict) -> BlgProof:
    return BlgProof(from_dict(data), parse_sequent(data["sequent"]))


def proof_to_json(p: BlgProof) -> str:
    return json.dumps(proof_to_dict(p), sort_keys=True, indent=1)


def proof_from_json(text: str) -> BlgProof:
    try:
        data = json.loads(text)
        graph = from_dict(data)
        sequent = data["sequent"]
    except (KeyError, TypeError, ValueError) as err:
        raise ParseError(f"bad BLG file: {err}") from None
    return BlgProof(graph, parse_sequent(sequent))
