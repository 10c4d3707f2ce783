"""Standard maximal parabolic data for a marked simple root.

For theta = Delta - {alpha} this computes the roots of the nilradical, the
half sum rho_P, the fundamental weight (rho_P normalized to pair to 1 with
alpha's coroot), the level grading of the dual nilradical by that pairing,
and the order-at-most-2 relative Weyl group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, StructureError
from .roots import RootSystem, WeylElement, longest_element


@dataclass(frozen=True)
class LeviData:
    """Everything attached to the standard parabolic that removes one simple root."""

    rs: RootSystem
    removed: int
    theta: tuple
    sigma_p: tuple          # indices of positive roots in the nilradical
    levi_positive: tuple    # indices of positive roots of the Levi
    dim_n: int
    rho_p: tuple            # Fractions, simple-root basis
    alpha_tilde: tuple      # Fractions, simple-root basis

    @property
    def theta_size(self):
        return len(self.theta)


def levi_data(rs, alpha):
    """Parabolic package for removing the simple root with index ``alpha``."""
    if not 0 <= alpha < rs.rank:
        raise InputError(f"simple root index {alpha} out of range")
    theta = tuple(i for i in range(rs.rank) if i != alpha)
    theta_set = set(theta)

    sigma_p, levi_pos = [], []
    for k, root in enumerate(rs.positive_roots):
        support = {i for i, c in enumerate(root.coords) if c != 0}
        if support <= theta_set:
            levi_pos.append(k)
        else:
            sigma_p.append(k)

    dim_n = sum(rs.root_dims[k] for k in sigma_p)
    rho = [Fraction(0)] * rs.rank
    for k in sigma_p:
        for i, c in enumerate(rs.positive_roots[k].coords):
            rho[i] += Fraction(rs.root_dims[k] * c, 2)
    rho = tuple(rho)

    alpha_covee = rs.coroots[rs.simple_index(alpha)]
    denom = rs.pairing(rho, alpha_covee)
    if denom == 0:
        raise StructureError("rho_P pairs to zero with the removed coroot")
    a_tilde = tuple(c / denom for c in rho)

    data = LeviData(
        rs=rs,
        removed=alpha,
        theta=theta,
        sigma_p=tuple(sigma_p),
        levi_positive=tuple(levi_pos),
        dim_n=dim_n,
        rho_p=rho,
        alpha_tilde=a_tilde,
    )
    # the defining normalizations; cheap, so always checked
    if rs.pairing(a_tilde, alpha_covee) != 1:
        raise StructureError("fundamental weight fails its defining normalization")
    for i in theta:
        if rs.pairing(a_tilde, rs.coroots[rs.simple_index(i)]) != 0:
            raise StructureError(
                "rho_P is not orthogonal to the Levi coroots; "
                "root dimensions are not invariant under the Levi Weyl group"
            )
    return data


@dataclass(frozen=True)
class ShahidiLevels:
    """Partition of the nilradical's reduced coroots by pairing with the weight."""

    levels: tuple   # ((level, (positive-root indices...)), ...) ascending
    m_ls: int
    dim_n: int

    def level_of(self, k):
        for lvl, members in self.levels:
            if k in members:
                return lvl
        raise InputError("root index not in any level")

    def counts(self):
        return {lvl: len(members) for lvl, members in self.levels}


def shahidi_levels(levi):
    """Grade the nilradical coroots by their integer pairing with the weight.

    Levels are computed on reduced roots only; root dimensions carry any
    multiplicity so the weighted level sizes still add up to dim N.
    """
    rs = levi.rs
    buckets = {}
    weighted = 0
    for k in levi.sigma_p:
        coords = rs.positive_roots[k].coords
        half = tuple(Fraction(c, 2) for c in coords)
        if all(f.denominator == 1 for f in half) and rs.contains(tuple(int(f) for f in half)):
            continue  # non-reduced companion; the halved root carries the coroot
        val = rs.pairing(levi.alpha_tilde, rs.coroots[k])
        if val.denominator != 1 or val <= 0:
            raise StructureError(f"non-integral or non-positive level {val} encountered")
        buckets.setdefault(int(val), []).append(k)
        weighted += rs.root_dims[k]
    if weighted != levi.dim_n and rs.is_reduced():
        raise StructureError("level sizes do not add up to dim N")
    levels = tuple((lvl, tuple(sorted(members))) for lvl, members in sorted(buckets.items()))
    return ShahidiLevels(levels=levels, m_ls=levels[-1][0] if levels else 0, dim_n=levi.dim_n)


@dataclass(frozen=True)
class RelativeWeylData:
    wm_order: int
    nontrivial_rep: WeylElement | None
    stab_a_order: int = 1


def relative_weyl(rs, levi):
    """Order of N(M)/M and, when it is 2, the standard representative.

    The candidate is the longest element modulo the Levi: the class is
    nontrivial exactly when that element preserves theta setwise and sends
    alpha into -alpha plus the theta span.  Brute force over W gives the
    same answer and is used as the test oracle.
    """
    w = longest_element(rs, levi.theta)
    theta_coords = {rs.positive_roots[rs.simple_index(i)].coords for i in levi.theta}
    preserves = all(w.apply(c) in theta_coords for c in theta_coords)
    if preserves:
        alpha_c = rs.positive_roots[rs.simple_index(levi.removed)].coords
        img = w.apply(alpha_c)
        shifted = tuple(a + b for a, b in zip(img, alpha_c))
        in_theta_span = all(
            c == 0 for i, c in enumerate(shifted) if i not in set(levi.theta)
        )
        if in_theta_span:
            return RelativeWeylData(wm_order=2, nontrivial_rep=w)
    return RelativeWeylData(wm_order=1, nontrivial_rep=None)


@dataclass(frozen=True)
class AdjointDimensionCheck:
    ok: bool
    adjoint_dim: int
    decomposed_dim: int


def adjoint_dimension_check(rs, levi):
    """dim g^ - dim z(g^) against 1 + (dim m^ - dim z(m^)) + 2 dim N.

    Split case with the root lattice as X, so the ambient center is trivial
    and the Levi's central torus is one dimensional (or the full torus in
    rank one).
    """
    if any(d != 1 for d in rs.root_dims):
        raise InputError("adjoint dimension check requires a split (dims all 1) system")
    dim_g = rs.rank + 2 * rs.num_positive
    dim_m = rs.rank + 2 * len(levi.levi_positive)
    z_m = rs.rank - len(levi.theta)
    lhs = dim_g
    rhs = 1 + (dim_m - z_m) + 2 * levi.dim_n
    return AdjointDimensionCheck(ok=lhs == rhs, adjoint_dim=lhs, decomposed_dim=rhs)
