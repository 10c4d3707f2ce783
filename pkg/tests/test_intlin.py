import random
from fractions import Fraction

import pytest

from fdquot import intlin
from fdquot.errors import StructureError


def test_snf_reconstructs():
    m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    u, d, v = intlin.smith_normal_form(m)
    assert intlin.matmul(intlin.matmul(u, m), v) == d
    diag = intlin.diagonal(d)
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        if a and b:
            assert b % a == 0


def test_kernel_basis_annihilates():
    m = [[1, 2, 3], [2, 4, 6]]
    basis = intlin.kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert intlin.matvec(m, v) == [0, 0]


def test_solve_integer():
    m = [[2, 0], [0, 3]]
    assert intlin.solve_integer(m, [4, 9]) == [2, 3]
    assert intlin.solve_integer(m, [1, 0]) is None
    assert intlin.solve_integer([[1, 1]], [5]) is not None


def test_image_index_diagonal():
    assert intlin.image_index([[2, 0], [0, 3]]) == 6
    assert intlin.image_index([[1]]) == 1
    with pytest.raises(StructureError):
        intlin.image_index([[0, 0], [0, 1]])


# ---------------------------------------------------------------------------
# independent oracle: coset counting with rational-elimination membership


def _det_fraction(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def _solve_fraction(m, b):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(m, b)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        a[col] = [x / a[col][col] for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def _coset_count(m, bound=2000):
    """Breadth-first count of Z^n modulo the column span, membership over Q."""
    n = len(m)

    def in_image(v):
        x = _solve_fraction(m, v)
        return all(f.denominator == 1 for f in x)

    reps = [[0] * n]
    frontier = [[0] * n]
    while frontier:
        fresh = []
        for rep in frontier:
            for i in range(n):
                for s in (1, -1):
                    cand = rep[:]
                    cand[i] += s
                    if not any(in_image([a - b for a, b in zip(cand, known)]) for known in reps):
                        reps.append(cand)
                        fresh.append(cand)
                        if len(reps) > bound:
                            raise AssertionError("quotient larger than expected")
        frontier = fresh
    return len(reps)


def test_image_index_matches_brute_force_coset_count():
    rng = random.Random(20240817)
    done = 0
    while done < 20:
        n = rng.choice((2, 2, 3))
        m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        det = _det_fraction(m)
        if det == 0 or abs(det) > 60:
            continue
        assert intlin.image_index(m) == _coset_count(m) == abs(det)
        done += 1
