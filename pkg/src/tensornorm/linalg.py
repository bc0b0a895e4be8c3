"""Exact Gaussian elimination over elements of the closure tower.

All routines work on lists of :class:`~tensornorm.closure.ClosureElem`
and never leave the field generated by their inputs, so a system whose
entries lie in a subfield is solved inside that subfield.
"""

from __future__ import annotations


class LinearSolution:
    """Outcome of an exact linear solve.

    Either ``solution`` is a vector (with ``nullspace`` a basis of the
    homogeneous solutions), or ``certificate`` is a row combination c with
    c^T M = 0 but c^T rhs != 0, proving inconsistency.
    """

    def __init__(self, solution=None, nullspace=None, certificate=None):
        self.solution = solution
        self.nullspace = nullspace if nullspace is not None else []
        self.certificate = certificate

    @property
    def consistent(self):
        return self.solution is not None


def solve_linear(matrix, rhs, config):
    """Solve M x = rhs exactly; returns a :class:`LinearSolution`.

    ``matrix`` is a list of rows; all entries and ``rhs`` are closure
    elements of one configuration.  Raises ValueError on shape mismatch.
    """
    nrows = len(matrix)
    if len(rhs) != nrows:
        raise ValueError(f"matrix has {nrows} rows but rhs has {len(rhs)} entries")
    ncols = len(matrix[0]) if nrows else 0
    for row in matrix:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    zero, one = config.zero(), config.one()

    rows = [list(r) for r in matrix]
    b = list(rhs)
    track = [[one if i == j else zero for j in range(nrows)] for i in range(nrows)]

    pivots = []  # (column, row index in reduced order)
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        b[r], b[sel] = b[sel], b[r]
        track[r], track[sel] = track[sel], track[r]
        inv = rows[r][c].inv()
        rows[r] = [x * inv for x in rows[r]]
        b[r] = b[r] * inv
        track[r] = [x * inv for x in track[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                b[i] = b[i] - f * b[r]
                track[i] = [x - f * y for x, y in zip(track[i], track[r])]
        pivots.append(c)
        r += 1

    for i in range(r, nrows):
        if not b[i].is_zero:
            return LinearSolution(certificate=track[i])

    solution = [zero] * ncols
    for k, c in enumerate(pivots):
        solution[c] = b[k]
    pivot_set = set(pivots)
    nullspace = []
    for c in range(ncols):
        if c in pivot_set:
            continue
        vec = [zero] * ncols
        vec[c] = one
        for k, pc in enumerate(pivots):
            vec[pc] = -rows[k][c]
        nullspace.append(vec)
    return LinearSolution(solution=solution, nullspace=nullspace)


def first_dependency(matrix, config):
    """First row that is a combination of the rows before it.

    Returns (index, coefficients over the earlier rows) or None when the
    rows are linearly independent.  Zero rows count as dependent with an
    empty combination.
    """
    zero = config.zero()
    one = config.one()
    pivots = []  # (column, reduced row, expansion over original rows)
    for i, row in enumerate(matrix):
        vec = list(row)
        expansion = {i: one}
        for col, prow, pexp in pivots:
            f = vec[col]
            if f.is_zero:
                continue
            vec = [x - f * y for x, y in zip(vec, prow)]
            for j, c in pexp.items():
                expansion[j] = expansion.get(j, zero) - f * c
        lead = None
        for col, x in enumerate(vec):
            if not x.is_zero:
                lead = col
                break
        if lead is None:
            # sum expansion[j] * orig_j = 0 with expansion[i] = 1
            coeffs = [-expansion.get(j, zero) for j in range(i)]
            return i, coeffs
        inv = vec[lead].inv()
        vec = [x * inv for x in vec]
        expansion = {j: c * inv for j, c in expansion.items()}
        pivots.append((lead, vec, expansion))
    return None


class IncrementalSystem:
    """Equations over the closure added one at a time, reduced on the fly.

    Used for grade-by-grade elimination: report per equation whether it is
    newly pivoting, redundant, or inconsistent with what came before, and
    produce the free-variables-zero solution of everything accepted so far.
    """

    OK = "ok"
    REDUNDANT = "redundant"
    INCONSISTENT = "inconsistent"

    def __init__(self, num_unknowns, config):
        self.n = num_unknowns
        self.config = config
        self.pivots = []  # (column, coeff vector normalized, rhs)

    def add_equation(self, coeffs, rhs):
        """Reduce one equation sum coeffs[j] x_j = rhs against the pivots.

        Inconsistent equations are NOT retained.
        """
        vec = list(coeffs)
        for col, prow, prhs in self.pivots:
            f = vec[col]
            if f.is_zero:
                continue
            vec = [x - f * y for x, y in zip(vec, prow)]
            rhs = rhs - f * prhs
        lead = None
        for col, x in enumerate(vec):
            if not x.is_zero:
                lead = col
                break
        if lead is None:
            return self.REDUNDANT if rhs.is_zero else self.INCONSISTENT
        inv = vec[lead].inv()
        self.pivots.append((lead, [x * inv for x in vec], rhs * inv))
        return self.OK

    def solve_free_zero(self):
        """The solution with all non-pivot coordinates zero."""
        zero = self.config.zero()
        out = [zero] * self.n
        # back-substitute in reverse insertion order; pivot rows may involve
        # later-added pivots' columns
        for col, row, rhs in reversed(self.pivots):
            acc = rhs
            for j in range(self.n):
                if j != col and not row[j].is_zero and not out[j].is_zero:
                    acc = acc - row[j] * out[j]
            out[col] = acc
        return out
