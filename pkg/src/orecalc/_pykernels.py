"""Pure-Python reference kernels.

Dense univariate polynomials over the rationals, stored as lists of
coefficients in ascending order with no trailing zeros, plus exact row
reduction.  ``_ckernels.pyx`` is a line-for-line compiled twin; the two must
stay behaviourally identical (see tests/test_kernels.py).
"""

from math import gcd as igcd, isqrt, lcm

from ._rational import ONE, ZERO, Rational


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return list(a[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return trim(out)


def sub(a, b):
    n = max(len(a), len(b))
    out = [ZERO] * n
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return trim(out)


def scale(a, c):
    if not c:
        return []
    return [c * v for v in a]


def mul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        ai = a[i]
        if not ai:
            continue
        for j in range(len(b)):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def divmod_(a, b):
    """Return ``(q, r)`` with ``a = q*b + r`` and ``deg r < deg b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    r = list(a)
    q = [ZERO] * (len(a) - db)
    inv = ONE / b[db]
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * b[j]
    return trim(q), trim(r[:db])


def monic(a):
    if not a:
        return []
    inv = ONE / a[-1]
    return [v * inv for v in a]


def _primitive_ints(a):
    """Integer primitive part of a nonzero rational coefficient list."""
    den = 1
    for c in a:
        den = lcm(den, int(c.denominator))
    ints = [int(c.numerator) * (den // int(c.denominator)) for c in a]
    g = 0
    for v in ints:
        g = igcd(g, v)
    if ints[-1] < 0:
        g = -g
    return [v // g for v in ints]


def _int_divides(f, g):
    """True if integer polynomial ``g`` divides ``f`` over the integers."""
    r = list(f)
    db = len(g) - 1
    lead = g[db]
    for k in range(len(f) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lead)
        if rem:
            return False
        if c:
            for j in range(db + 1):
                r[k + j] -= c * g[j]
    for k in range(db):
        if r[k]:
            return False
    return True


def _heuristic_gcd(f, g):
    """Primitive gcd of primitive integer polynomials, or None if the heuristic gives up.

    Evaluates at a large integer, takes the integer gcd and reads the
    polynomial back from its balanced digits.  With the evaluation point above
    2*min(|f|, |g|) + 2, a candidate dividing both inputs is the gcd.
    """
    nf = max(abs(v) for v in f)
    ng = max(abs(v) for v in g)
    xi = 2 * min(nf, ng) + 29
    for _ in range(6):
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
            if cand[-1] < 0:
                cg = -cg
            cand = [v // cg for v in cand]
            if _int_divides(f, cand) and _int_divides(g, cand):
                return cand
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    return None


def _euclid_gcd(a, b):
    a = monic(a)
    b = monic(b)
    while b:
        a, b = b, monic(divmod_(a, b)[1])
    return a


def gcd(a, b):
    """Monic gcd; ``gcd(0, 0) = 0``."""
    if not a:
        return monic(b)
    if not b:
        return monic(a)
    if len(a) == 1 or len(b) == 1:
        return [ONE]
    h = _heuristic_gcd(_primitive_ints(a), _primitive_ints(b))
    if h is None:
        return _euclid_gcd(a, b)
    lead = h[-1]
    return [Rational(v, lead) for v in h]


def deriv(a):
    return [i * a[i] for i in range(1, len(a))]


def rref(rows):
    """Reduced row echelon form; returns ``(nonzero_rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    nrows = len(m)
    pivots = []
    rank = 0
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
                f = m[i][col]
                if f:
                    other = m[i]
                    m[i] = [other[k] - f * row[k] for k in range(ncols)]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return m[:rank], pivots
