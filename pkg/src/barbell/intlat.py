"""Exact integer-lattice normal forms: Smith form, rank, cokernels.

Everything here runs over Python's unbounded integers; there are no
floating-point or modular shortcuts anywhere.  Matrices are small (at
most a few hundred rows), so the simple quadratic pivoting algorithms
are fast enough and easy to audit.
"""


def xgcd(a, b):
    # returns (g, x, y) with x*a + y*b == g, g >= 0 when (a, b) != (0, 0)
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


class IntMatrix:
    """Dense integer matrix; rows and cols survive even when empty."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[0] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError("matrix data does not match declared shape")
            self.data = [list(r) for r in data]

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("need explicit column count for an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    def copy(self):
        return IntMatrix(self.rows, self.cols, self.data)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = IntMatrix(self.rows, other.cols)
        for i in range(self.rows):
            ai = self.data[i]
            oi = out.data[i]
            for k in range(self.cols):
                a = ai[k]
                if a:
                    bk = other.data[k]
                    for j in range(other.cols):
                        if bk[j]:
                            oi[j] += a * bk[j]
        return out

    def diagonal(self):
        return [self.data[i][i] for i in range(min(self.rows, self.cols))]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __repr__(self):
        return "IntMatrix(%d, %d, %r)" % (self.rows, self.cols, self.data)

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "data": [[str(x) for x in row] for row in self.data]}


class QuotientStructure:
    """Finitely generated abelian group: free rank plus invariant factors."""

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank, torsion=()):
        torsion = tuple(torsion)
        if any(t < 2 for t in torsion):
            raise ValueError("torsion factors must be >= 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        self.free_rank = free_rank
        self.torsion = torsion

    def __eq__(self, other):
        return (isinstance(other, QuotientStructure)
                and self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        parts = []
        if self.free_rank:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z_%d" % t for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def _pivot_search(a, t, rows, cols):
    # first entry (row-major) of minimal nonzero absolute value in a[t:, t:]
    best = None
    best_abs = None
    for i in range(t, rows):
        ai = a[i]
        for j in range(t, cols):
            v = ai[j]
            if v:
                av = -v if v < 0 else v
                if best_abs is None or av < best_abs:
                    best, best_abs = (i, j), av
                    if av == 1:
                        return best
    return best


def _row_combine(a, u, t, i, cols_a, cols_u, col):
    # one unimodular 2x2 transform on rows (t, i) that puts
    # gcd(a[t][col], a[i][col]) at (t, col) and zero at (i, col)
    p, q = a[t][col], a[i][col]
    if q % p == 0:
        f = q // p
        if f:
            at, ai = a[t], a[i]
            for j in range(col, cols_a):
                ai[j] -= f * at[j]
            ut, ui = u[t], u[i]
            for j in range(cols_u):
                ui[j] -= f * ut[j]
        return
    g, x, y = xgcd(p, q)
    pg, qg = p // g, q // g
    at, ai = a[t], a[i]
    for j in range(col, cols_a):
        s_, v_ = at[j], ai[j]
        at[j] = x * s_ + y * v_
        ai[j] = -qg * s_ + pg * v_
    ut, ui = u[t], u[i]
    for j in range(cols_u):
        s_, v_ = ut[j], ui[j]
        ut[j] = x * s_ + y * v_
        ui[j] = -qg * s_ + pg * v_


def _col_combine(a, v, t, j, rows_a, rows_v, row):
    p, q = a[row][t], a[row][j]
    if q % p == 0:
        f = q // p
        if f:
            for i in range(rows_a):
                a[i][j] -= f * a[i][t]
            for i in range(rows_v):
                v[i][j] -= f * v[i][t]
        return
    g, x, y = xgcd(p, q)
    pg, qg = p // g, q // g
    for i in range(rows_a):
        s_, w_ = a[i][t], a[i][j]
        a[i][t] = x * s_ + y * w_
        a[i][j] = -qg * s_ + pg * w_
    for i in range(rows_v):
        s_, w_ = v[i][t], v[i][j]
        v[i][t] = x * s_ + y * w_
        v[i][j] = -qg * s_ + pg * w_


def smith_normal_form(m):
    """Diagonalize m over Z.

    Returns (d, u, v) with d = u * m * v, u and v unimodular, and the
    diagonal of d nonnegative with each entry dividing the next.  Each
    elimination step is a single extended-gcd 2x2 transform (so a pivot
    becomes the gcd of its line in one pass), with the smallest nonzero
    entry of the remaining submatrix promoted first; both choices keep
    coefficient growth tame.
    """
    rows, cols = m.rows, m.cols
    a = [row[:] for row in m.data]
    u = IntMatrix.identity(rows).data
    v = IntMatrix.identity(cols).data
    t = 0
    while t < rows and t < cols:
        piv = _pivot_search(a, t, rows, cols)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        while True:
            for i in range(t + 1, rows):
                if a[i][t]:
                    _row_combine(a, u, t, i, cols, rows, t)
            for j in range(t + 1, cols):
                if a[t][j]:
                    _col_combine(a, v, t, j, rows, cols, t)
            # a column combine may resurrect entries below the pivot
            if any(a[i][t] for i in range(t + 1, rows)):
                continue
            # the pivot must divide the remaining block; if it does not,
            # fold the offending row in and restart the clearing loop
            p = a[t][t]
            offender = None
            for i in range(t + 1, rows):
                ai = a[i]
                for j in range(t + 1, cols):
                    if ai[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            ai, at = a[offender], a[t]
            for j in range(t, cols):
                at[j] += ai[j]
            ui, ut = u[offender], u[t]
            for j in range(rows):
                ut[j] += ui[j]
        if a[t][t] < 0:
            for j in range(t, cols):
                a[t][j] = -a[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]
        t += 1
    return (IntMatrix(rows, cols, a), IntMatrix(rows, rows, u),
            IntMatrix(cols, cols, v))


def rank_over_rationals(m):
    """Rank of m over Q by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in m.data]
    rows, cols = m.rows, m.cols
    rank = 0
    prev = 1
    col = 0
    while rank < rows and col < cols:
        piv = None
        for i in range(rank, rows):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        for i in range(rank + 1, rows):
            ai = a[i]
            if any(ai[col:]):
                lead = ai[col]
                for j in range(col, cols):
                    ai[j] = (pr[col] * ai[j] - lead * pr[j]) // prev
        prev = pr[col]
        rank += 1
        col += 1
    return rank


def determinant(m):
    # Bareiss; exact for any square integer matrix
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [row[:] for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            piv = None
            for i in range(k + 1, n):
                if a[i][k]:
                    piv = i
                    break
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def cokernel_structure(relations):
    """Structure of Z^cols / (integer row span of `relations`)."""
    d, _, _ = smith_normal_form(relations)
    diag = [x for x in d.diagonal() if x]
    free_rank = relations.cols - len(diag)
    torsion = [x for x in diag if x > 1]
    return QuotientStructure(free_rank, torsion)


class IntegerRowSpan:
    """Incremental echelon basis for an integer row span.

    Rows are kept sparse (column -> coefficient) with a positive pivot at
    their least nonzero column.  Membership testing reduces a query
    vector against the basis with exact divisibility checks, so both
    `add` and `contains` cost O(#pivots touched * row weight).
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}  # pivot column -> sparse row

    @staticmethod
    def _sparsify(vec):
        if isinstance(vec, dict):
            return {j: c for j, c in vec.items() if c}
        return {j: c for j, c in enumerate(vec) if c}

    def add(self, vec):
        v = self._sparsify(vec)
        while v:
            j = min(v)
            row = self.rows.get(j)
            if row is None:
                if v[j] < 0:
                    v = {k: -c for k, c in v.items()}
                self.rows[j] = v
                return
            a, b = row[j], v[j]
            if b % a == 0:
                q = b // a
                for k, c in row.items():
                    nc = v.get(k, 0) - q * c
                    if nc:
                        v[k] = nc
                    else:
                        v.pop(k, None)
            else:
                g, x, y = xgcd(a, b)
                new_row = {}
                for k in set(row) | set(v):
                    c = x * row.get(k, 0) + y * v.get(k, 0)
                    if c:
                        new_row[k] = c
                new_v = {}
                for k in set(row) | set(v):
                    c = (a // g) * v.get(k, 0) - (b // g) * row.get(k, 0)
                    if c:
                        new_v[k] = c
                self.rows[j] = new_row
                v = new_v

    def contains(self, vec):
        v = self._sparsify(vec)
        while v:
            j = min(v)
            row = self.rows.get(j)
            if row is None or v[j] % row[j]:
                return False
            q = v[j] // row[j]
            for k, c in row.items():
                nc = v.get(k, 0) - q * c
                if nc:
                    v[k] = nc
                else:
                    v.pop(k, None)
        return True

    def covers(self, other):
        return all(self.contains(dict(r)) for r in other.rows.values())

    def equals(self, other):
        return self.covers(other) and other.covers(self)


def in_row_span(m, vec):
    """True iff vec lies in the integer row span of m."""
    span = IntegerRowSpan()
    for row in m.data:
        span.add(row)
    return span.contains(vec)
