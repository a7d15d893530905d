"""Worked examples: the derivations and BLG objects used as golden regressions.

Each derivation is kept in the s-expression format so that it doubles as
sample input for the command line tool.
"""

from __future__ import annotations

from .blgraph import BlGraph
from .derivation import Derivation, parse_derivation
from .namegraph import edge
from .syntax import Sequent, parse_name, parse_sequent

FIG2A = """
(cut u:a
  (and ((x:~a | y:a) & (z:~a | w:a))
    (or (x:~a | y:a) (ax {x:~a , u:a} |- x:~a, y:a, u:a))
    (or (z:~a | w:a) (ax {z:~a , u:a} |- z:~a, w:a, u:a)))
  (and ((x:~a | y:a) & (z:~a | w:a))
    (or (x:~a | y:a) (ax {y:a , u:~a} |- x:~a, y:a, u:~a))
    (or (z:~a | w:a) (ax {w:a , u:~a} |- z:~a, w:a, u:~a))))
"""

# isolating the conjunction of FIG2A: one cut per conjunct
FIG2B = """
(and ((x:~a | y:a) & (z:~a | w:a))
  (cut u:a
    (or (x:~a | y:a) (ax {x:~a , u:a} |- x:~a, y:a, u:a))
    (or (x:~a | y:a) (ax {y:a , u:~a} |- x:~a, y:a, u:~a)))
  (cut u:a
    (or (z:~a | w:a) (ax {z:~a , u:a} |- z:~a, w:a, u:a))
    (or (z:~a | w:a) (ax {w:a , u:~a} |- z:~a, w:a, u:~a))))
"""

FIG3A = """
(cut (v:a & w:b)
  (and (t:a & u:b)
    (and (v:a & w:b)
      (ax {x:~a , t:a} |- x:~a, y:~a, z:~b, t:a, v:a)
      (ax {x:~a , t:a} |- x:~a, y:~a, z:~b, t:a, w:b))
    (and (v:a & w:b)
      (ax {y:~a , v:a} |- x:~a, y:~a, z:~b, u:b, v:a)
      (ax {z:~b , w:b} |- x:~a, y:~a, z:~b, u:b, w:b)))
  (and (t:a & u:b)
    (or (v:~a | w:~b) (ax {t:a , v:~a} |- x:~a, y:~a, z:~b, t:a, v:~a, w:~b))
    (or (v:~a | w:~b) (ax {u:b , w:~b} |- x:~a, y:~a, z:~b, u:b, v:~a, w:~b))))
"""

FIG4A = """
(cut ((z:a & s:~a) | (t:~a & u:a))
  (or ((z:a & s:~a) | (t:~a & u:a))
    (and (z:a & s:~a)
      (and (t:~a & u:a)
        (ax {z:a , t:~a} |- x:b, y:~b, z:a, t:~a, v:~a, w:a)
        (ax {x:b , y:~b} |- x:b, y:~b, z:a, u:a, v:~a, w:a))
      (and (t:~a & u:a)
        (ax {x:b , y:~b} |- x:b, y:~b, s:~a, t:~a, v:~a, w:a)
        (ax {s:~a , u:a} |- x:b, y:~b, s:~a, u:a, v:~a, w:a))))
  (and ((z:~a | s:a) & (t:a | u:~a))
    (or (z:~a | s:a) (ax {z:~a , s:a} |- x:b, y:~b, z:~a, s:a, v:~a, w:a))
    (or (t:a | u:~a)
      (sup
        (ax {t:a , v:~a} |- x:b, y:~b, t:a, u:~a, v:~a, w:a)
        (ax {u:~a , w:a} |- x:b, y:~b, t:a, u:~a, v:~a, w:a)))))
"""

FIG4B = """
(cut (t:~a & u:a)
  (cut (z:a & s:~a)
    (and (z:a & s:~a)
      (and (t:~a & u:a)
        (ax {z:a , t:~a} |- x:b, y:~b, z:a, t:~a, v:~a, w:a)
        (ax {x:b , y:~b} |- x:b, y:~b, z:a, u:a, v:~a, w:a))
      (and (t:~a & u:a)
        (ax {x:b , y:~b} |- x:b, y:~b, s:~a, t:~a, v:~a, w:a)
        (ax {s:~a , u:a} |- x:b, y:~b, s:~a, u:a, v:~a, w:a)))
    (or (z:~a | s:a) (ax {z:~a , s:a} |- x:b, y:~b, z:~a, s:a, (t:~a & u:a), v:~a, w:a)))
  (or (t:a | u:~a)
    (sup
      (ax {t:a , v:~a} |- x:b, y:~b, t:a, u:~a, v:~a, w:a)
      (ax {u:~a , w:a} |- x:b, y:~b, t:a, u:~a, v:~a, w:a))))
"""

FIG5_UPPER_SEQUENT = "|- (x:a & y:a), (z:~a & w:~a)"
FIG5_UPPER_ROWS = {"xz": "xz", "xw": "xw", "yz": "yz", "yw": "yw"}

FIG5_LOWER_SEQUENT = "|- (x:a & y:~b), (z:b & u:~c), (v:~a | w:c)"
FIG5_LOWER_ROWS = {"xzvw": "xv", "xuvw": "xv uw", "yzvw": "yz", "yuvw": "uw"}


def derivation(text: str) -> Derivation:
    return parse_derivation(text)


def fig2a() -> Derivation:
    return parse_derivation(FIG2A)


def fig2b() -> Derivation:
    return parse_derivation(FIG2B)


def fig3a() -> Derivation:
    return parse_derivation(FIG3A)


def fig4a() -> Derivation:
    return parse_derivation(FIG4A)


def fig4b() -> Derivation:
    return parse_derivation(FIG4B)


def _blg_object(sequent: str, rows: dict[str, str]) -> tuple[BlGraph, Sequent]:
    gamma = parse_sequent(sequent)
    pairs = set()
    for label, links in rows.items():
        branch = frozenset(parse_name(c) for c in label)
        for link in links.split():
            pairs.add((edge(parse_name(link[0]), parse_name(link[1])), branch))
    return BlGraph(gamma.names, frozenset(pairs)), gamma


def fig5_upper() -> tuple[BlGraph, Sequent]:
    return _blg_object(FIG5_UPPER_SEQUENT, FIG5_UPPER_ROWS)


def fig5_lower() -> tuple[BlGraph, Sequent]:
    return _blg_object(FIG5_LOWER_SEQUENT, FIG5_LOWER_ROWS)


def edges_of(text: str) -> frozenset:
    """``"xy zw"`` to a set of canonical edges."""
    return frozenset(edge(parse_name(e[0]), parse_name(e[1])) for e in text.split())
