"""Small exact linear-algebra kernel used by colon ideals, membership
tests and the Hilbert-coefficient fit.

Rows are sparse dicts {column index: field element}; everything is exact
(mpq over Q, residues over F_p).  Sizes stay in the hundreds-to-few-
thousand range, so plain sparse Gaussian elimination is enough.
"""


class SparseRREF:
    """Incremental reduced row echelon form over an exact field."""

    def __init__(self):
        self.pivot_rows = {}  # pivot column -> row dict (coeff 1 at pivot)

    def reduce_row(self, row):
        """Reduce `row` (dict, consumed) by the current pivots; returns the
        reduced row."""
        row = dict(row)
        # iterate until no entry sits in a pivot column
        while True:
            hit = None
            for col in row:
                if col in self.pivot_rows:
                    hit = col
                    break
            if hit is None:
                return row
            factor = row.pop(hit)
            for c, v in self.pivot_rows[hit].items():
                if c == hit:
                    continue
                s = row.get(c, 0) - factor * v
                if s == 0:
                    row.pop(c, None)
                else:
                    row[c] = s

    def add_row(self, row):
        """Reduce and, if nonzero, install as a new pivot row.  Returns the
        new pivot column, or None if the row reduced to zero."""
        row = self.reduce_row(row)
        if not row:
            return None
        pivot = min(row)
        inv = row[pivot]
        row = {c: v / inv for c, v in row.items()}
        # keep existing pivot rows fully reduced
        for p, prow in self.pivot_rows.items():
            if pivot in prow:
                factor = prow.pop(pivot)
                for c, v in row.items():
                    if c == pivot:
                        continue
                    s = prow.get(c, 0) - factor * v
                    if s == 0:
                        prow.pop(c, None)
                    else:
                        prow[c] = s
        self.pivot_rows[pivot] = row
        return pivot

    @property
    def rank(self):
        return len(self.pivot_rows)

    def contains(self, row):
        """True iff `row` lies in the span of the added rows."""
        return not self.reduce_row(row)


def nullspace(rows, ncols):
    """Basis of the right nullspace of the matrix given by `rows` (sparse
    dicts over columns 0..ncols-1).  Returns vectors as sparse dicts, in a
    deterministic order (by free column index)."""
    rref = SparseRREF()
    for row in rows:
        rref.add_row(row)
    pivots = rref.pivot_rows
    basis = []
    for j in range(ncols):
        if j in pivots:
            continue
        vec = {j: 1}
        for p, prow in pivots.items():
            c = prow.get(j)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def rank(rows):
    rref = SparseRREF()
    for row in rows:
        rref.add_row(row)
    return rref.rank


def solve_dense(matrix, rhs, field):
    """Solve a small square system exactly; raises ValueError if singular.

    `matrix` is a list of lists, `rhs` a list; returns a list."""
    n = len(matrix)
    aug = [[field(0) + x for x in row] + [field(0) + rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if aug[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            raise ValueError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if f != 0:
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]
