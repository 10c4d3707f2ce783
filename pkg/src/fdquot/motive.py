"""Invariant degrees, point counts over F_q, and parabolic measure factors.

The degree tables are the classical ones for the simple types; every lookup
is cross-checked on the spot against the Weyl group order computed by
orbit-stabilizer, so a typo in the tables cannot survive.  All q-dependence
is carried exactly by :class:`~fdquot.qpoly.QRational`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intlin
from .errors import InputError, StructureError
from .qpoly import QRational
from .roots import CartanMatrix, build_root_system, weyl_order


def _degrees_of_type(letter, rank):
    if letter == "A":
        return list(range(2, rank + 2))
    if letter in ("B", "C"):
        return [2 * i for i in range(1, rank + 1)]
    if letter == "D":
        return [2 * i for i in range(1, rank)] + [rank]
    if letter == "E":
        return {
            6: [2, 5, 6, 8, 9, 12],
            7: [2, 6, 8, 10, 12, 14, 18],
            8: [2, 8, 12, 14, 18, 20, 24, 30],
        }[rank]
    if letter == "F":
        return [2, 6, 8, 12]
    if letter == "G":
        return [2, 6]
    raise InputError(f"unsupported simple type {letter}{rank}")


def _candidate_types(rank):
    out = [("A", rank)]
    if rank >= 2:
        out += [("B", rank), ("C", rank)]
    if rank >= 4:
        out.append(("D", rank))
    if rank in (6, 7, 8):
        out.append(("E", rank))
    if rank == 4:
        out.append(("F", rank))
    if rank == 2:
        out.append(("G", rank))
    return out


def _matches_up_to_permutation(a, b):
    """True when some relabeling p gives a[p[i]][p[j]] == b[i][j]."""
    n = len(a)

    def row_sig(m, i):
        return tuple(sorted((m[i][j], m[j][i]) for j in range(n) if j != i and m[i][j] != 0))

    sig_a = [row_sig(a, i) for i in range(n)]
    sig_b = [row_sig(b, i) for i in range(n)]

    assignment = [None] * n
    used = [False] * n

    def backtrack(i):
        if i == n:
            return True
        for k in range(n):
            if used[k] or sig_a[k] != sig_b[i]:
                continue
            ok = True
            for j in range(i):
                kj = assignment[j]
                if a[k][kj] != b[i][j] or a[kj][k] != b[j][i]:
                    ok = False
                    break
            if ok:
                assignment[i] = k
                used[k] = True
                if backtrack(i + 1):
                    return True
                used[k] = False
        return False

    return backtrack(0)


def identify_simple_type(cartan):
    """Name a connected Cartan matrix as (letter, rank), up to relabeling."""
    from .roots import cartan_entries

    n = cartan.rank
    for letter, rank in _candidate_types(n):
        try:
            cand = cartan_entries(letter, rank)
        except InputError:
            continue
        if _matches_up_to_permutation(cand, cartan.entries):
            return letter, rank
    raise InputError(f"unsupported type: rank {n} Cartan matrix is not of type A-G")


@dataclass(frozen=True)
class MotiveData:
    """Invariant degrees with multiplicity, plus the two dimension totals."""

    degrees: tuple   # ((degree, multiplicity), ...) ascending by degree
    dim_g: int
    dim_t: int

    def multiplicity(self, d):
        for deg, mult in self.degrees:
            if deg == d:
                return mult
        return 0


def _degrees_for(cartan, lattice_rank):
    counts = {}
    for comp in cartan.components():
        sub = cartan.submatrix(comp)
        letter, rank = identify_simple_type(sub)
        degs = _degrees_of_type(letter, rank)
        prod = 1
        for d in degs:
            prod *= d
            counts[d] = counts.get(d, 0) + 1
        if prod != weyl_order(sub):
            raise StructureError(
                f"degree table for {letter}{rank} fails the Weyl-order self-check"
            )
    central = lattice_rank - cartan.rank
    if central:
        counts[1] = counts.get(1, 0) + central
    return tuple(sorted(counts.items()))


def motive_degrees(datum):
    """Degrees of the motive of a split datum, with all identities enforced."""
    rs = datum.root_system
    if any(d != 1 for d in rs.root_dims):
        raise InputError("motives are computed for split data only")
    degrees = _degrees_for(rs.cartan, datum.lattice_rank)
    dim_g = datum.dimension()
    dim_t = datum.lattice_rank
    if sum((2 * d - 1) * m for d, m in degrees) != dim_g:
        raise StructureError("degree table violates the dimension identity")
    if sum(m for _, m in degrees) != dim_t:
        raise StructureError("degree table violates the rank identity")
    return MotiveData(degrees=degrees, dim_g=dim_g, dim_t=dim_t)


def iwahori_volume_exponent(md):
    """Exponent v with pro-unipotent Iwahori volume q^(-v)."""
    return Fraction(md.dim_g + md.dim_t, 2)


def _point_count_from(degrees, num_positive):
    pc = QRational.monomial(num_positive)
    for d, mult in degrees:
        factor = QRational.of((-1,) + (0,) * (d - 1) + (1,))  # q^d - 1
        pc = pc * factor ** mult
    return pc


def point_count(datum):
    """Order of the F_q points as a polynomial in q."""
    md = motive_degrees(datum)
    return _point_count_from(md.degrees, datum.root_system.num_positive)


def _levi_closure(datum, theta):
    theta = tuple(sorted(theta))
    n = datum.semisimple_rank
    for i in theta:
        if not 0 <= i < n:
            raise InputError(f"theta index {i} out of range")
    sub = datum.root_system.cartan.submatrix(theta)
    return theta, sub, build_root_system(sub)


def gamma_gm(datum, theta):
    """Parabolic measure constant: point-count ratio times q^(-dim N).

    Equal to point_count(G) / (point_count(M) q^(2 dim N)); the hyperspecial
    normalization makes it tend to 1 as q grows.
    """
    rs = datum.root_system
    if any(d != 1 for d in rs.root_dims):
        raise InputError("gamma(G/M) is computed for split data only")
    theta, sub, sub_rs = _levi_closure(datum, theta)
    dim_n = rs.num_positive - sub_rs.num_positive
    g_degrees = _degrees_for(rs.cartan, datum.lattice_rank)
    m_degrees = _degrees_for(sub, datum.lattice_rank)
    pc_g = _point_count_from(g_degrees, rs.num_positive)
    pc_m = _point_count_from(m_degrees, sub_rs.num_positive)
    return pc_g / (pc_m * QRational.monomial(2 * dim_n))


def central_torus_dims(datum, theta):
    """(dim A_M, dim A_G) from the kernels of the root-pairing constraints."""
    theta = tuple(sorted(theta))
    rows_m = [list(datum.root_embed[i]) for i in theta]
    rows_g = [list(datum.root_embed[i]) for i in range(datum.semisimple_rank)]
    dim_a_m = len(intlin.kernel_basis(rows_m)) if rows_m else datum.lattice_rank
    dim_a_g = len(intlin.kernel_basis(rows_g)) if rows_g else datum.lattice_rank
    return dim_a_m, dim_a_g


def measure_quotient_factor(datum, theta):
    """Full conversion factor between the two Haar measure normalizations."""
    dim_a_m, dim_a_g = central_torus_dims(datum, theta)
    return gamma_gm(datum, theta) * QRational.one_minus_q_inverse() ** (dim_a_m - dim_a_g)


def root_subgroup_index(rs, coords):
    """Index of the depth filtration step of one root subgroup: q^(dim U)."""
    return QRational.monomial(rs.dim_of(coords))
