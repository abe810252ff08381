"""Pure-Python hot kernels.

Polynomials here are ``dict[int, coefficient]`` keyed on packed monomials
(see ``MonomialCodec``).  ``_kernels.pyx`` implements the same functions.
"""

from math import gcd


def reduce_full(p, lms, tails, guard):
    """Fully reduce ``p`` modulo monic polynomials given by (lms[i], tails[i]).

    ``tails[i]`` is a list of ``(monomial, coefficient)`` pairs of the i-th
    basis element without its leading term.  ``p`` is consumed.
    """
    rem = {}
    nlm = len(lms)
    while p:
        m = max(p)
        c = p.pop(m)
        for i in range(nlm):
            lm = lms[i]
            if ((m + guard - lm) & guard) == guard:
                q = m - lm
                get = p.get
                for gm, gc in tails[i]:
                    k = gm + q
                    v = get(k, 0) - c * gc
                    if v:
                        p[k] = v
                    else:
                        del p[k]
                break
        else:
            rem[m] = c
    return rem


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def echelon_int(rows, ncols):
    """Reduced row echelon form of an integer matrix, fraction free.

    Returns ``(rows, pivots)``: nonzero primitive integer rows in which every
    pivot column is zero outside its own row.
    """
    work = [_primitive([int(x) for x in r]) for r in rows if any(r)]
    out = []
    pivots = []
    for col in range(ncols):
        piv = None
        for idx, r in enumerate(work):
            if r[col]:
                if piv is None or abs(r[col]) < abs(work[piv][col]):
                    piv = idx
        if piv is None:
            continue
        prow = work.pop(piv)
        a = prow[col]
        nxt = []
        for r in work:
            b = r[col]
            if b:
                r = _primitive([a * x - b * y for x, y in zip(r, prow)])
                if any(r):
                    nxt.append(r)
            else:
                nxt.append(r)
        work = nxt
        for j, r in enumerate(out):
            b = r[col]
            if b:
                out[j] = _primitive([a * x - b * y for x, y in zip(r, prow)])
        out.append(prow)
        pivots.append(col)
        if not work:
            break
    return out, pivots


def _strip_singletons(rows, ncols):
    """Remove rows with one live entry together with that column.

    Such a row clears its column from every other row without changing
    anything else, so each removal adds exactly one to the rank.  Returns
    the count and the remaining rows restricted to the live columns.
    """
    rows = [[int(x) for x in r] for r in rows]
    dead = set()
    count = 0
    changed = True
    while changed:
        changed = False
        rest = []
        for r in rows:
            live = [j for j, x in enumerate(r) if x and j not in dead]
            if len(live) == 1:
                dead.add(live[0])
                count += 1
                changed = True
            elif live:
                rest.append(r)
        rows = rest
    keep = [j for j in range(ncols) if j not in dead]
    return count, [[r[j] for j in keep] for r in rows], len(keep)


def rank_int(rows, ncols):
    count, rest, width = _strip_singletons(rows, ncols)
    if not rest:
        return count
    return count + len(echelon_int(rest, width)[1])


def nullspace_int(rows, ncols):
    """Integer basis of {v : M v = 0}, one vector per free column."""
    ech, pivots = echelon_int(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        scale = 1
        for r, p in zip(ech, pivots):
            if r[free]:
                a = abs(r[p])
                scale = scale * a // gcd(scale, a)
        v = [0] * ncols
        v[free] = scale
        for r, p in zip(ech, pivots):
            if r[free]:
                v[p] = -(scale // r[p]) * r[free]
        basis.append(_primitive(v))
    return basis
