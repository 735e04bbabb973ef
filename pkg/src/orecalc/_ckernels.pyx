# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; same contracts, typed loop indices."""

from math import gcd as igcd, isqrt, lcm

from ._rational import ONE, ZERO, Rational


cpdef list trim(a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return list(a[:n])


cpdef list add(a, b):
    cdef Py_ssize_t i, nb
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    nb = len(b)
    for i in range(nb):
        out[i] = out[i] + b[i]
    return trim(out)


cpdef list sub(a, b):
    cdef Py_ssize_t i, na = len(a), nb = len(b)
    cdef Py_ssize_t n = na if na > nb else nb
    cdef list out = [ZERO] * n
    for i in range(na):
        out[i] = a[i]
    for i in range(nb):
        out[i] = out[i] - b[i]
    return trim(out)


cpdef list scale(a, c):
    if not c:
        return []
    return [c * v for v in a]


cpdef list mul(a, b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef list la = list(a), lb = list(b)
    cdef list out = [ZERO] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = la[i]
        if not ai:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * lb[j]
    return out


def divmod_(a, b):
    cdef Py_ssize_t na = len(a), nb = len(b), db, k, j
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = nb - 1
    if na <= db:
        return [], list(a)
    cdef list r = list(a), lb = list(b)
    cdef list q = [ZERO] * (na - db)
    cdef object inv = ONE / lb[db]
    cdef object c
    for k in range(na - 1 - db, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * lb[j]
    return trim(q), trim(r[:db])


cpdef list monic(a):
    if not a:
        return []
    cdef object inv = ONE / a[len(a) - 1]
    return [v * inv for v in a]


cdef list _primitive_ints(a):
    cdef Py_ssize_t i, n = len(a)
    den = 1
    for i in range(n):
        den = lcm(den, int(a[i].denominator))
    cdef list ints = [int(a[i].numerator) * (den // int(a[i].denominator)) for i in range(n)]
    g = 0
    for i in range(n):
        g = igcd(g, ints[i])
    if ints[n - 1] < 0:
        g = -g
    return [v // g for v in ints]


cdef bint _int_divides(list f, list g):
    cdef Py_ssize_t j, k, db = len(g) - 1
    cdef list r = list(f)
    lead = g[db]
    for k in range(len(f) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lead)
        if rem:
            return False
        if c:
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * g[j]
    for k in range(db):
        if r[k]:
            return False
    return True


cdef object _heuristic_gcd(list f, list g):
    cdef Py_ssize_t k, attempt
    nf = max([abs(v) for v in f])
    ng = max([abs(v) for v in g])
    xi = 2 * min(nf, ng) + 29
    cdef list cand
    for attempt in range(6):
        vf = 0
        for k in range(len(f) - 1, -1, -1):
            vf = vf * xi + f[k]
        vg = 0
        for k in range(len(g) - 1, -1, -1):
            vg = vg * xi + g[k]
        h = igcd(vf, vg)
        cand = []
        half = xi // 2
        while h:
            c = h % xi
            if c > half:
                c -= xi
            cand.append(c)
            h = (h - c) // xi
        if cand:
            cg = 0
            for v in cand:
                cg = igcd(cg, v)
            if cand[len(cand) - 1] < 0:
                cg = -cg
            cand = [v // cg for v in cand]
            if _int_divides(f, cand) and _int_divides(g, cand):
                return cand
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    return None


cdef list _euclid_gcd(a, b):
    a = monic(a)
    b = monic(b)
    while b:
        a, b = b, monic(divmod_(a, b)[1])
    return a


cpdef list gcd(a, b):
    if not a:
        return monic(b)
    if not b:
        return monic(a)
    if len(a) == 1 or len(b) == 1:
        return [ONE]
    h = _heuristic_gcd(_primitive_ints(a), _primitive_ints(b))
    if h is None:
        return _euclid_gcd(a, b)
    lead = h[len(h) - 1]
    return [Rational(v, lead) for v in h]


cpdef list deriv(a):
    cdef Py_ssize_t i, n = len(a)
    return [i * a[i] for i in range(1, n)]


def rref(rows):
    cdef list m = [list(r) for r in rows]
    if not m:
        return [], []
    cdef Py_ssize_t ncols = len(m[0]), nrows = len(m)
    cdef Py_ssize_t col, i, k, piv, rank = 0
    cdef list pivots = [], row, other
    cdef object inv, f
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        row = m[rank]
        inv = ONE / row[col]
        row = [v * inv for v in row]
        m[rank] = row
        for i in range(nrows):
            if i != rank:
                other = m[i]
                f = other[col]
                if f:
                    m[i] = [other[k] - f * row[k] for k in range(ncols)]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return m[:rank], pivots
