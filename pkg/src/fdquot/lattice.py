"""Integer-lattice structure constants of a maximal Levi inside a root datum.

Computes the rank-one lattice of Levi characters trivial on the ambient
central torus, its primitive generator chi oriented against the removed
coroot, and the index of its restriction inside the character lattice of the
Levi's central torus.  Everything runs through Smith normal form; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import intlin
from .errors import InputError, StructureError
from .roots import RootDatum


@dataclass(frozen=True)
class StructureConstants:
    chi: tuple              # lattice coordinates of the generator
    chi_pairing: int        # <chi, alpha^vee> > 0
    m_idx: int              # index of res(X*(M)^G) in X*(A_M)^G
    dim_a_m: int
    dim_a_g: int

    def compat_constant(self, j):
        """j <chi, alpha^vee> / m, the component-group compatibility ratio."""
        return Fraction(j * self.chi_pairing, self.m_idx)

    @property
    def heiermann_constant(self):
        return Fraction(self.m_idx, self.chi_pairing)


def _pairing_rows(datum, indices, side):
    """Rows of pairing constraints against the chosen simple (co)roots."""
    if side == "coroot":
        return [list(datum.coroot_embed[i]) for i in indices]
    return [list(datum.root_embed[i]) for i in indices]


def structure_constants(datum, theta, alpha):
    """Structure constants for the maximal Levi theta = Delta - {alpha}."""
    n = datum.semisimple_rank
    if not 0 <= alpha < n:
        raise InputError(f"simple root index {alpha} out of range")
    if tuple(sorted(theta)) != tuple(i for i in range(n) if i != alpha):
        raise StructureError("theta must be the complement of the removed root")
    theta = tuple(sorted(theta))

    # cocharacter lattices of the central tori, as kernels on the dual side
    def _kernel(rows):
        if not rows:
            return [row[:] for row in intlin.identity(datum.lattice_rank)]
        return intlin.kernel_basis(rows)

    a_m_basis = _kernel(_pairing_rows(datum, theta, "root"))
    a_g_basis = _kernel(_pairing_rows(datum, range(n), "root"))
    dim_a_m, dim_a_g = len(a_m_basis), len(a_g_basis)

    # X*(M)^G: characters orthogonal to the Levi coroots and to A_G
    constraints = _pairing_rows(datum, theta, "coroot") + a_g_basis
    kernel = _kernel(constraints)
    if len(kernel) != 1:
        raise StructureError(
            f"X*(M)^G has rank {len(kernel)}, expected 1 (is theta maximal?)"
        )
    chi = kernel[0]
    g = 0
    for x in chi:
        g = gcd(g, abs(x))
    if g > 1:  # kernel bases from Smith form are already primitive; belt and braces
        chi = [x // g for x in chi]

    alpha_covee = datum.embed_coroot_vector(
        datum.root_system.coroots[datum.root_system.simple_index(alpha)].coords
    )
    pair = datum.pairing(tuple(chi), alpha_covee)
    if pair == 0:
        raise StructureError("generator pairs to zero with the removed coroot")
    if pair < 0:
        chi = [-x for x in chi]
        pair = -pair
    if pair.denominator != 1:
        raise StructureError("non-integral pairing on an integral datum")

    # Hom(X_*(A_M)/X_*(A_G), Z): functionals on A_M coordinates killing A_G
    cols_bg = []
    for v in a_g_basis:
        sol = intlin.solve_integer(intlin.transpose(a_m_basis), v)
        if sol is None:
            raise StructureError("A_G cocharacters do not lie in the A_M lattice")
        cols_bg.append(sol)
    if cols_bg:
        hom_basis = intlin.kernel_basis(cols_bg)
    else:
        hom_basis = [row[:] for row in intlin.identity(dim_a_m)]
    if len(hom_basis) != 1:
        raise StructureError(
            f"X*(A_M)^G has rank {len(hom_basis)}, expected 1 (is theta maximal?)"
        )
    eta = hom_basis[0]

    # res(chi) expressed in the Hom generator: the multiple is the index
    res_chi = [
        int(datum.pairing(tuple(chi), tuple(lam))) for lam in a_m_basis
    ]
    multiple = None
    for r, e in zip(res_chi, eta):
        if e != 0:
            if r % e != 0:
                raise StructureError("restriction does not land in the Hom lattice")
            k = r // e
            if multiple is not None and k != multiple:
                raise StructureError("restriction is not a multiple of the generator")
            multiple = k
        elif r != 0:
            raise StructureError("restriction is not a multiple of the generator")
    if not multiple:
        raise StructureError("restriction of chi vanishes")
    m_idx = intlin.image_index([[multiple]])

    return StructureConstants(
        chi=tuple(chi),
        chi_pairing=int(pair),
        m_idx=m_idx,
        dim_a_m=dim_a_m,
        dim_a_g=dim_a_g,
    )


@dataclass(frozen=True)
class FormalMultiple:
    """An exact rational multiple of a formal unit such as 2*pi/log q."""

    coefficient: Fraction
    unit: str  # "", "2pi/logq" or "logq/2pi"

    def __str__(self):
        units = {"": "", "2pi/logq": " * (2 pi / log q)", "logq/2pi": " * (log q / 2 pi)"}
        return f"{self.coefficient}{units[self.unit]}"


@dataclass(frozen=True)
class OrbitVolumeData:
    """Orbit length, volume and their ratio for the unitary twisting circle."""

    l: int
    torsion_t: int
    y1: FormalMultiple
    vol: Fraction
    ratio: FormalMultiple


def orbit_volume(sc, l, torsion_t):
    """Volume bookkeeping for the unitary orbit; l and t cancel in the ratio."""
    if l < 1 or torsion_t < 1:
        raise InputError("l and t must be positive integers")
    lt = l * torsion_t
    y1 = FormalMultiple(Fraction(sc.chi_pairing, lt), "2pi/logq")
    vol = Fraction(sc.m_idx, lt)
    ratio = FormalMultiple(Fraction(sc.m_idx, sc.chi_pairing), "logq/2pi")
    return OrbitVolumeData(l=l, torsion_t=torsion_t, y1=y1, vol=vol, ratio=ratio)
