# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search for endpoints of complete alternating paths.

Vertices are local indices ``0..n-1``.  Each graph is given in CSR form
(``ptr`` of length n+1, ``idx`` of neighbours).  ``iface[v]`` is non-zero for
interface vertices.  The result lists every pair ``(s, t)`` with ``s < t``,
both outside the interface, joined by a simple path whose edges alternate
between the two graphs and whose internal vertices all lie in the interface.
"""

from libc.stdlib cimport calloc, free, malloc


def alt_endpoints(int n, const int[:] gp, const int[:] gi, const int[:] hp,
                  const int[:] hi, const unsigned char[:] iface):
    cdef int *sv = <int *> malloc((n + 1) * sizeof(int))
    cdef int *ss = <int *> malloc((n + 1) * sizeof(int))
    cdef int *spos = <int *> malloc((n + 1) * sizeof(int))
    cdef unsigned char *onp = <unsigned char *> calloc(n + 1, 1)
    cdef unsigned char *found = <unsigned char *> calloc(<size_t> n * n + 1, 1)
    cdef int s, first, depth, v, side, u, end
    out = []
    if sv == NULL or ss == NULL or spos == NULL or onp == NULL or found == NULL:
        free(sv); free(ss); free(spos); free(onp); free(found)
        raise MemoryError()
    try:
        for s in range(n):
            if iface[s]:
                continue
            for first in range(2):
                depth = 0
                sv[0] = s
                ss[0] = first
                spos[0] = gp[s] if first == 0 else hp[s]
                onp[s] = 1
                while depth >= 0:
                    v = sv[depth]
                    side = ss[depth]
                    end = gp[v + 1] if side == 0 else hp[v + 1]
                    if spos[depth] >= end:
                        onp[v] = 0
                        depth -= 1
                        continue
                    u = gi[spos[depth]] if side == 0 else hi[spos[depth]]
                    spos[depth] += 1
                    if onp[u]:
                        continue
                    if not iface[u]:
                        if s < u and not found[s * n + u]:
                            found[s * n + u] = 1
                            out.append((s, u))
                        continue
                    depth += 1
                    sv[depth] = u
                    ss[depth] = 1 - side
                    spos[depth] = hp[u] if side == 0 else gp[u]
                    onp[u] = 1
    finally:
        free(sv); free(ss); free(spos); free(onp); free(found)
    return out
