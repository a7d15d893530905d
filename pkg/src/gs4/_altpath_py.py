"""Pure-Python twin of the compiled ``_altpath`` kernel (same inputs, same output)."""

from __future__ import annotations


def alt_endpoints(n, gp, gi, hp, hi, iface):
    ptrs = (gp, hp)
    idxs = (gi, hi)
    out = []
    found = set()
    on_path = [False] * n
    for s in range(n):
        if iface[s]:
            continue
        for first in (0, 1):
            # frames: [vertex, side of the edges leaving it, cursor]
            stack = [[s, first, ptrs[first][s]]]
            on_path[s] = True
            while stack:
                frame = stack[-1]
                v, side, pos = frame
                if pos >= ptrs[side][v + 1]:
                    on_path[v] = False
                    stack.pop()
                    continue
                u = idxs[side][pos]
                frame[2] = pos + 1
                if on_path[u]:
                    continue
                if not iface[u]:
                    if s < u and (s, u) not in found:
                        found.add((s, u))
                        out.append((s, u))
                    continue
                other = 1 - side
                stack.append([u, other, ptrs[other][u]])
                on_path[u] = True
    return out
