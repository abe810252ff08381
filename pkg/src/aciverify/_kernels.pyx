# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled hot kernels; same API and results as ``_kernels_py``.

Monomials and matrix entries are arbitrary-precision Python ints and
coefficients are whatever exact number type the caller uses, so the gain
comes from typed loops and avoided attribute lookups.
"""

from math import gcd


def reduce_full(dict p, lms_in, tails, object guard):
    cdef dict rem = {}
    cdef list lms = list(lms_in)
    cdef Py_ssize_t i, nlm = len(lms)
    cdef tuple term
    cdef object m, c, lm, q, k, v
    while p:
        m = max(p)
        c = p.pop(m)
        for i in range(nlm):
            lm = lms[i]
            if ((m + guard - lm) & guard) == guard:
                q = m - lm
                for term in tails[i]:
                    k = term[0] + q
                    v = p.get(k, 0) - c * term[1]
                    if v:
                        p[k] = v
                    else:
                        del p[k]
                break
        else:
            rem[m] = c
    return rem


cdef list _primitive(list row):
    cdef object g = 0, x
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


cdef list _combine(object a, list r, object b, list prow):
    cdef Py_ssize_t j, n = len(r)
    cdef list out = [0] * n
    for j in range(n):
        out[j] = a * r[j] - b * prow[j]
    return _primitive(out)


cdef bint _nonzero(list r):
    cdef object x
    for x in r:
        if x:
            return True
    return False


def echelon_int(rows, Py_ssize_t ncols):
    cdef list work = [_primitive([int(x) for x in r]) for r in rows if any(r)]
    cdef list out = [], pivots = [], nxt, prow, r
    cdef Py_ssize_t col, idx, j, piv
    cdef object a, b, best
    for col in range(ncols):
        piv = -1
        best = None
        for idx in range(len(work)):
            b = (<list>work[idx])[col]
            if b:
                if piv < 0 or abs(b) < best:
                    piv = idx
                    best = abs(b)
        if piv < 0:
            continue
        prow = work.pop(piv)
        a = prow[col]
        nxt = []
        for r in work:
            b = r[col]
            if b:
                r = _combine(a, r, b, prow)
                if _nonzero(r):
                    nxt.append(r)
            else:
                nxt.append(r)
        work = nxt
        for j in range(len(out)):
            r = <list>out[j]
            b = r[col]
            if b:
                out[j] = _combine(a, r, b, prow)
        out.append(prow)
        pivots.append(col)
        if not work:
            break
    return out, pivots


cdef tuple _strip_singletons(rows, Py_ssize_t ncols):
    cdef list work = [[int(x) for x in r] for r in rows], rest, r, keep
    cdef set dead = set()
    cdef Py_ssize_t count = 0, j, last, nlive
    cdef bint changed = True
    while changed:
        changed = False
        rest = []
        for r in work:
            nlive = 0
            last = -1
            for j in range(ncols):
                if r[j] and j not in dead:
                    nlive += 1
                    last = j
                    if nlive > 1:
                        break
            if nlive == 1:
                dead.add(last)
                count += 1
                changed = True
            elif nlive:
                rest.append(r)
        work = rest
    keep = [j for j in range(ncols) if j not in dead]
    return count, [[r[j] for j in keep] for r in work], len(keep)


def rank_int(rows, Py_ssize_t ncols):
    count, rest, width = _strip_singletons(rows, ncols)
    if not rest:
        return count
    return count + len(echelon_int(rest, width)[1])


def nullspace_int(rows, Py_ssize_t ncols):
    ech, pivots = echelon_int(rows, ncols)
    cdef set pivset = set(pivots)
    cdef list basis = [], v, r
    cdef Py_ssize_t free, k, p
    cdef object scale, a
    for free in range(ncols):
        if free in pivset:
            continue
        scale = 1
        for k in range(len(ech)):
            r = <list>ech[k]
            if r[free]:
                a = abs(r[<Py_ssize_t>pivots[k]])
                scale = scale * a // gcd(scale, a)
        v = [0] * ncols
        v[free] = scale
        for k in range(len(ech)):
            r = <list>ech[k]
            p = pivots[k]
            if r[free]:
                v[p] = -(scale // r[p]) * r[free]
        basis.append(_primitive(v))
    return basis
