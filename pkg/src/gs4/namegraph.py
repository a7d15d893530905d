"""Simple name graphs and the plain axiom-graph semantics of derivations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .derivation import Ax, Cut, Derivation
from .errors import PairInvalid
from .kernels import alternating_endpoints
from .syntax import Formula, Lit, Name, Sequent, equiv, name_str

Edge = tuple[Name, Name]


def edge(x: Name, y: Name) -> Edge:
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class NameGraph:
    vertices: frozenset
    edges: frozenset

    def __post_init__(self) -> None:
        for x, y in self.edges:
            if not x < y or x not in self.vertices or y not in self.vertices:
                raise ValueError(f"bad edge {x},{y} for vertices {sorted(self.vertices)}")

    def __str__(self) -> str:
        return " ".join(name_str(x) + name_str(y) for x, y in sorted(self.edges))

    def adjacency(self) -> dict[Name, set[Name]]:
        adj: dict[Name, set[Name]] = {v: set() for v in self.vertices}
        for x, y in self.edges:
            adj[x].add(y)
            adj[y].add(x)
        return adj


EMPTY = NameGraph(frozenset(), frozenset())


def g_union(graphs: Iterable[NameGraph]) -> NameGraph:
    vs: set[Name] = set()
    es: set[Edge] = set()
    for g in graphs:
        vs |= g.vertices
        es |= g.edges
    return NameGraph(frozenset(vs), frozenset(es))


def g_restrict(g: NameGraph, s: Iterable[Name]) -> NameGraph:
    s = frozenset(s)
    return NameGraph(g.vertices & s, frozenset(e for e in g.edges if e[0] in s and e[1] in s))


def g_subgraph(g: NameGraph, h: NameGraph) -> bool:
    """``g ⊑ h``: componentwise inclusion."""
    return g.vertices <= h.vertices and g.edges <= h.edges


def wk_graph(gamma: Iterable[Formula]) -> NameGraph:
    return NameGraph(frozenset().union(*(f.names for f in gamma)), frozenset())


def _check_pair(a: Formula, b: Formula) -> None:
    if not (a.sharing_free and b.sharing_free and a.names.isdisjoint(b.names) and equiv(a, b.dual())):
        raise PairInvalid(f"{a} , {b}")


def identity_edges(a: Formula, b: Formula) -> Iterator[Edge]:
    """Edges linking corresponding atoms of two dual formulas."""
    if isinstance(a, Lit):
        yield edge(a.name, b.name)  # type: ignore[attr-defined]
    else:
        yield from identity_edges(a.left, b.left)  # type: ignore[attr-defined]
        yield from identity_edges(a.right, b.right)  # type: ignore[attr-defined]


def id_graph(a: Formula, b: Formula) -> NameGraph:
    _check_pair(a, b)
    return NameGraph(a.names | b.names, frozenset(identity_edges(a, b)))


@dataclass(frozen=True, order=True)
class AltPath:
    """A vertex sequence; ``start`` says which graph (0 for G, 1 for H) supplies the odd edges."""

    vertices: tuple
    start: int

    def __str__(self) -> str:
        return ",".join(name_str(v) for v in self.vertices)

    def complete(self, interface: frozenset) -> bool:
        return len(self.vertices) > 1 and self.vertices[0] not in interface and self.vertices[-1] not in interface


def is_alternating(path: tuple, start: int, g_edges, h_edges, interface: frozenset) -> bool:
    """Check the alternating-path conditions for an explicit vertex sequence."""
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    if any(v not in interface for v in path[1:-1]):
        return False
    sides = (g_edges, h_edges)
    return all(edge(path[i], path[i + 1]) in sides[(start + i) % 2] for i in range(len(path) - 1))


def alternating_paths(g: NameGraph, h: NameGraph, interface: Iterable[Name]) -> set[AltPath]:
    """Every alternating path with at least one edge (both orientations, both parities)."""
    iface = frozenset(interface)
    adj = (g.adjacency(), h.adjacency())
    out: set[AltPath] = set()

    def extend(path: list, start: int, side: int) -> None:
        v = path[-1]
        for u in sorted(adj[side].get(v, ())):
            if u in path:
                continue
            path.append(u)
            out.add(AltPath(tuple(path), start))
            if u in iface:
                extend(path, start, 1 - side)
            path.pop()

    for v in sorted(g.vertices | h.vertices):
        for start in (0, 1):
            extend([v], start, start)
    return out


def g_compose(g: NameGraph, h: NameGraph, interface: Iterable[Name]) -> NameGraph:
    """Composite on ``interface``: endpoints of complete alternating paths."""
    iface = frozenset(interface)
    vertices = (g.vertices | h.vertices) - iface
    return NameGraph(frozenset(vertices), frozenset(alternating_endpoints(g.edges, h.edges, iface)))


def axiom_graph(p: Derivation) -> NameGraph:
    """Ax gives weakening plus identity, Cut composes, every other rule unions."""
    memo: dict[int, NameGraph] = {}

    def go(q: Derivation) -> NameGraph:
        got = memo.get(id(q))
        if got is not None:
            return got
        if isinstance(q, Ax):
            out = NameGraph(q.sequent.names, frozenset(identity_edges(q.first, q.second)))
        elif isinstance(q, Cut):
            out = g_compose(go(q.left), go(q.right), q.formula.names)
        else:
            out = g_union(go(r) for r in q.premisses)
        memo[id(q)] = out
        return out

    return go(p)


# ---------------------------------------------------------------------------
# output formats


def to_json(g: NameGraph) -> str:
    return json.dumps(
        {
            "vertices": [name_str(v) for v in sorted(g.vertices)],
            "edges": [[name_str(x), name_str(y)] for x, y in sorted(g.edges)],
        },
        sort_keys=True,
    )


def from_json(text: str) -> NameGraph:
    from .syntax import parse_name

    data = json.loads(text)
    return NameGraph(
        frozenset(parse_name(v) for v in data["vertices"]),
        frozenset(edge(parse_name(x), parse_name(y)) for x, y in data["edges"]),
    )


def vertex_label(x: Name, gamma: Sequent | None) -> str:
    if gamma is not None and x in gamma.atoms():
        return f"{name_str(x)}:{gamma.atoms()[x]}"
    return name_str(x)


def to_dot(g: NameGraph, gamma: Sequent | None = None, name: str = "axiom_graph") -> str:
    lines = [f"graph {name} {{"]
    for v in sorted(g.vertices):
        lines.append(f'  {name_str(v)} [label="{vertex_label(v, gamma)}"];')
    for x, y in sorted(g.edges):
        lines.append(f"  {name_str(x)} -- {name_str(y)};")
    lines.append("}")
    return "\n".join(lines)
