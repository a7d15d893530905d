"""Branch-labeled graphs: every edge carries one or more branch names.

A bl-graph is a vertex set together with a relation of ``(edge, label)``
pairs, where each label is a frozenset of names containing the edge.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .derivation import Ax, Cut, Derivation
from .errors import PairInvalid
from .kernels import alternating_endpoints
from .namegraph import AltPath, Edge, NameGraph, alternating_paths, edge, vertex_label
from .syntax import Formula, Lit, Name, Or, Sequent, branches, equiv, name_str, parse_name

Pair = tuple[Edge, frozenset]


@dataclass(frozen=True)
class BlGraph:
    vertices: frozenset
    pairs: frozenset  # of (edge, label)

    def __post_init__(self) -> None:
        for (x, y), label in self.pairs:
            if not x < y or x not in label or y not in label:
                raise ValueError(f"edge {name_str(x)}{name_str(y)} not inside its label {_fmt_set(label)}")
            if x not in self.vertices or y not in self.vertices:
                raise ValueError(f"edge {name_str(x)}{name_str(y)} leaves the vertex set")

    @property
    def edges(self) -> frozenset:
        return frozenset(e for e, _ in self.pairs)

    @property
    def branches(self) -> frozenset:
        return frozenset(label for _, label in self.pairs)

    def simple(self) -> NameGraph:
        """Forget the labels."""
        return NameGraph(self.vertices, self.edges)

    def sorted_pairs(self) -> list[Pair]:
        return sorted(self.pairs, key=pair_key)

    def __str__(self) -> str:
        return " ".join(
            f"{name_str(x)}{name_str(y)}@{_fmt_set(label)}" for (x, y), label in self.sorted_pairs()
        )


def pair_key(pair: Pair) -> tuple:
    (x, y), label = pair
    return (x, y, sorted(label))


def _fmt_set(names: Iterable[Name]) -> str:
    return "{" + ",".join(name_str(v) for v in sorted(names)) + "}"


EMPTY = BlGraph(frozenset(), frozenset())


def bl_union(graphs: Iterable[BlGraph]) -> BlGraph:
    vs: set[Name] = set()
    ps: set[Pair] = set()
    for g in graphs:
        vs |= g.vertices
        ps |= g.pairs
    return BlGraph(frozenset(vs), frozenset(ps))


def bl_restrict(g: BlGraph, names: Iterable[Name]) -> BlGraph:
    """Keep the vertices in ``names`` and the pairs whose label lies inside ``names``."""
    s = frozenset(names)
    return BlGraph(g.vertices & s, frozenset(p for p in g.pairs if p[1] <= s))


def bl_subgraph(g: BlGraph, h: BlGraph) -> bool:
    return g.vertices <= h.vertices and g.pairs <= h.pairs


def relativize(g: BlGraph, interface: Iterable[Name]) -> frozenset:
    iface = frozenset(interface)
    return frozenset((e, label - iface) for e, label in g.pairs)


def _by_label(g: BlGraph, iface: frozenset) -> dict[frozenset, list[Edge]]:
    groups: dict[frozenset, list[Edge]] = defaultdict(list)
    for e, label in g.pairs:
        groups[label - iface].append(e)
    return groups


@dataclass(frozen=True, order=True)
class LabeledPath:
    path: AltPath
    label: frozenset
    complete: bool


def bl_alternating_paths(g: BlGraph, h: BlGraph, interface: Iterable[Name]) -> set[LabeledPath]:
    """All X-labeled alternating paths; the label is fixed before the search."""
    iface = frozenset(interface)
    gl, hl = _by_label(g, iface), _by_label(h, iface)
    out: set[LabeledPath] = set()
    for label in set(gl) | set(hl):
        gg = NameGraph(g.vertices | h.vertices, frozenset(gl.get(label, ())))
        hh = NameGraph(g.vertices | h.vertices, frozenset(hl.get(label, ())))
        for path in alternating_paths(gg, hh, iface):
            out.add(LabeledPath(path, label, path.complete(iface)))
    return out


def bl_compose(g: BlGraph, h: BlGraph, interface: Iterable[Name]) -> BlGraph:
    """Record ``(xy, X)`` whenever a complete X-labeled alternating path joins x and y."""
    iface = frozenset(interface)
    gl, hl = _by_label(g, iface), _by_label(h, iface)
    pairs: set[Pair] = set()
    for label in set(gl) | set(hl):
        for e in alternating_endpoints(gl.get(label, ()), hl.get(label, ()), iface):
            pairs.add((e, label))
    return BlGraph((g.vertices | h.vertices) - iface, frozenset(pairs))


def bl_wk(gamma: Iterable[Formula], g: BlGraph) -> BlGraph:
    """Add the names of ``gamma`` and extend every label by each branch of ``gamma``."""
    gamma = list(gamma)
    if not gamma:
        return g
    ys = branches(gamma)
    extra = frozenset().union(*(f.names for f in gamma))
    return BlGraph(g.vertices | extra, frozenset((e, label | y) for e, label in g.pairs for y in ys))


def bl_id(a: Formula, b: Formula) -> BlGraph:
    """Identity bl-graph of two dual formulas."""
    if not (a.sharing_free and b.sharing_free and a.names.isdisjoint(b.names) and equiv(a, b.dual())):
        raise PairInvalid(f"{a} , {b}")
    return _bl_id(a, b)


def _bl_id(a: Formula, b: Formula) -> BlGraph:
    if isinstance(a, Lit):
        x, y = a.name, b.name  # type: ignore[attr-defined]
        return BlGraph(frozenset((x, y)), frozenset(((edge(x, y), frozenset((x, y))),)))
    if not isinstance(a, Or):
        a, b = b, a
    a1, a2 = a.left, a.right  # type: ignore[attr-defined]
    b1, b2 = b.left, b.right  # type: ignore[attr-defined]
    return bl_union((bl_wk([a2], _bl_id(a1, b1)), bl_wk([a1], _bl_id(a2, b2))))


def axiom_bl_graph(ax: Ax) -> BlGraph:
    rest = ax.sequent.remove(ax.first, ax.second)
    return bl_wk(rest.formulas, bl_id(ax.first, ax.second))


def bl_axiom_graph(p: Derivation) -> BlGraph:
    """Ax is weakened identity, Cut composes on the cut formula, other rules union."""
    memo: dict[int, BlGraph] = {}

    def go(q: Derivation) -> BlGraph:
        got = memo.get(id(q))
        if got is not None:
            return got
        if isinstance(q, Ax):
            out = axiom_bl_graph(q)
        elif isinstance(q, Cut):
            out = bl_compose(go(q.left), go(q.right), q.formula.names)
        else:
            out = bl_union(go(r) for r in q.premisses)
        memo[id(q)] = out
        return out

    return go(p)


# ---------------------------------------------------------------------------
# output formats


def to_dict(g: BlGraph) -> dict:
    grouped: dict[Edge, list] = defaultdict(list)
    for e, label in g.pairs:
        grouped[e].append(sorted(label))
    return {
        "vertices": [name_str(v) for v in sorted(g.vertices)],
        "edges": [
            {
                "u": name_str(x),
                "v": name_str(y),
                "branches": [[name_str(n) for n in lab] for lab in sorted(grouped[(x, y)])],
            }
            for x, y in sorted(grouped)
        ],
    }


def from_dict(data: dict) -> BlGraph:
    pairs = set()
    for item in data["edges"]:
        e = edge(parse_name(item["u"]), parse_name(item["v"]))
        for lab in item["branches"]:
            pairs.add((e, frozenset(parse_name(n) for n in lab)))
    return BlGraph(frozenset(parse_name(v) for v in data["vertices"]), frozenset(pairs))


def to_json(g: BlGraph) -> str:
    return json.dumps(to_dict(g), sort_keys=True)


def from_json(text: str) -> BlGraph:
    return from_dict(json.loads(text))


def to_dot(g: BlGraph, gamma: Sequent | None = None, name: str = "bl_axiom_graph") -> str:
    lines = [f"graph {name} {{"]
    for v in sorted(g.vertices):
        lines.append(f'  {name_str(v)} [label="{vertex_label(v, gamma)}"];')
    for (x, y), label in g.sorted_pairs():
        lines.append(f'  {name_str(x)} -- {name_str(y)} [label="{_fmt_set(label)}"];')
    lines.append("}")
    return "\n".join(lines)


def to_fig5(g: BlGraph, gamma: Sequent) -> str:
    """One row per branch listing its edges as ``x/y``, above the conclusion."""
    rows: dict[frozenset, list[Edge]] = defaultdict(list)
    for e, label in g.pairs:
        rows[label].append(e)
    lines = []
    for label in sorted(rows, key=sorted):
        links = " ".join(f"{name_str(x)}/{name_str(y)}" for x, y in sorted(rows[label]))
        lines.append(f"{_fmt_set(label)}: {links}")
    rule = "-" * max([len(str(gamma))] + [len(line) for line in lines])
    return "\n".join(lines + [rule, str(gamma)])
