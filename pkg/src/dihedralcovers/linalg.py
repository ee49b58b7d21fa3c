"""Exact linear algebra helpers.

Two tiers:

* field matrices (lists of lists of field elements): rank, nullspace,
  solving, determinant by plain Gaussian elimination with exact
  division;
* integral-domain matrices (e.g. polynomial entries): rank and
  determinant by fraction-free Bareiss elimination, which only ever
  performs divisions that are exact in the domain.

Matrices are plain nested lists; nothing here mutates its input.
"""


def _clone(m):
    return [list(r) for r in m]


def rank(m):
    """Rank of a matrix over a field."""
    if not m or not m[0]:
        return 0
    m = _clone(m)
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        for i in range(r + 1, rows):
            if not m[i][c]:
                continue
            f = m[i][c] / inv
            for j in range(c, cols):
                m[i][j] = m[i][j] - f * m[r][j]
        r += 1
        if r == rows:
            break
    return r


def rref(m):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = _clone(m)
    if not m or not m[0]:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(m, field):
    """Basis of the right kernel of m, as a list of column vectors."""
    if not m:
        return []
    cols = len(m[0])
    if cols == 0:
        return []
    red, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * cols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(m, b, field):
    """One solution x of m x = b over a field, or None if inconsistent."""
    if not m:
        return [] if all(not x for x in b) else None
    cols = len(m[0])
    aug = [list(r) + [bv] for r, bv in zip(m, b)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [field.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def det(m, field):
    """Determinant over a field."""
    n = len(m)
    if n == 0:
        return field.one
    m = _clone(m)
    sign = field.one
    d = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        d = d * m[c][c]
        inv = m[c][c]
        for i in range(c + 1, n):
            if not m[i][c]:
                continue
            f = m[i][c] / inv
            for j in range(c, n):
                m[i][j] = m[i][j] - f * m[c][j]
    return d * sign


def bareiss_rank(m, one):
    """Rank of a matrix with entries in an integral domain.

    Entries must support *, -, bool and an exact_div method (or
    __truediv__ that is exact).  ``one`` is the multiplicative identity
    of the domain; it seeds the previous-pivot chain.
    """
    if not m or not m[0]:
        return 0
    m = _clone(m)
    rows, cols = len(m), len(m[0])
    prev = one
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            ric = m[i][c]
            for j in range(c + 1, cols):
                m[i][j] = _exact(m[r][c] * m[i][j] - ric * m[r][j], prev)
            m[i][c] = ric - ric
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def bareiss_det(m, one):
    """Determinant of a square matrix over an integral domain."""
    n = len(m)
    if n == 0:
        return one
    m = _clone(m)
    prev = one
    sign = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return one - one
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                num = m[c][c] * m[i][j] - m[i][c] * m[c][j]
                m[i][j] = _exact(num, prev)
        prev = m[c][c]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def _exact(a, b):
    if hasattr(a, "exact_div"):
        return a.exact_div(b)
    return a / b
