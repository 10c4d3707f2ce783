"""Exact integer linear algebra: Smith normal form, kernels, solves, indices.

Matrices are lists of row lists of Python ints.  Inputs are never mutated.
"""

from __future__ import annotations

from .errors import StructureError

Matrix = "list[list[int]]"


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a or not b:
        return []
    cols = len(b[0])
    inner = len(b)
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    if not a:
        return []
    return [[row[j] for row in a] for j in range(len(a[0]))]


def smith_normal_form(m):
    """Return (u, d, v) with u*m*v == d, u and v unimodular, d diagonal.

    Diagonal entries are nonnegative and each divides the next.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [[int(x) for x in row] for row in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, k):
        # row i += k * row j
        d[i] = [x + k * y for x, y in zip(d[i], d[j])]
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, k):
        # col i += k * col j
        for r in d:
            r[i] += k * r[j]
        for r in v:
            r[i] += k * r[j]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    bound = min(rows, cols)
    while t < bound:
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    add_row(i, t, -q)
                    if d[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    add_col(j, t, -q)
                    if d[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty and all(d[i][t] == 0 for i in range(t + 1, rows)) \
                    and all(d[t][j] == 0 for j in range(t + 1, cols)):
                break

        # divisibility: d[t][t] must divide every later entry
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    add_col(t, j, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if d[t][t] < 0:
                negate_row(t)
            t += 1

    return u, d, v


def diagonal(d):
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def kernel_basis(m):
    """Basis of the integer kernel {x : m x = 0}, as a list of vectors.

    The basis spans a saturated sublattice (a direct summand) of Z^cols.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [row[:] for row in identity(cols)]
    _, d, v = smith_normal_form(m)
    diag = diagonal(d)
    basis = []
    for j in range(cols):
        dj = diag[j] if j < len(diag) else 0
        if dj == 0:
            basis.append([v[i][j] for i in range(cols)])
    return basis


def solve_integer(m, b):
    """One integer solution x of m x = b, or None if none exists."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u, d, v = smith_normal_form(m)
    ub = matvec(u, b)
    diag = diagonal(d)
    y = [0] * cols
    for i in range(rows):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % di != 0:
                return None
            y[i] = ub[i] // di
    return matvec(v, y)


def image_index(m):
    """Index [Z^rows : column span of m]; raises if the span has infinite index."""
    rows = len(m)
    _, d, _ = smith_normal_form(m)
    diag = [x for x in diagonal(d) if x != 0]
    if len(diag) < rows:
        raise StructureError("column span has infinite index")
    idx = 1
    for x in diag:
        idx *= abs(x)
    return idx
