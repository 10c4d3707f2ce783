from fractions import Fraction

import pytest

from fdquot.errors import InputError
from fdquot.parabolic import (
    adjoint_dimension_check,
    levi_data,
    relative_weyl,
    shahidi_levels,
)
from fdquot.roots import (
    CartanMatrix,
    build_root_system,
    builtin_datum,
    cartan_entries,
    enumerate_weyl_perms,
    weyl_order,
)

SIMPLE_TYPES_RANK_LE_8 = (
    ["A%d" % n for n in range(1, 9)]
    + ["B%d" % n for n in range(2, 9)]
    + ["C%d" % n for n in range(2, 9)]
    + ["D%d" % n for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


def test_g2_half_sums_and_weights(g2):
    rs = g2.root_system
    # removing beta: Levi through alpha
    levi = levi_data(rs, 1)
    assert levi.rho_p == (Fraction(9, 2), Fraction(3))
    assert levi.alpha_tilde == (Fraction(3), Fraction(2))
    assert levi.dim_n == 5
    # removing alpha: Levi through beta
    levi = levi_data(rs, 0)
    assert levi.rho_p == (Fraction(5), Fraction(5, 2))
    assert levi.alpha_tilde == (Fraction(2), Fraction(1))
    assert levi.dim_n == 5


def test_a1_borel_half_sum():
    rs = build_root_system(CartanMatrix(((2,),)))
    levi = levi_data(rs, 0)
    assert levi.rho_p == (Fraction(1, 2),)
    assert levi.alpha_tilde == (Fraction(1, 2),)
    assert levi.dim_n == 1


def test_g2_level_tables(g2):
    rs = g2.root_system

    def coroots_at(levels, lvl):
        return {rs.coroots[k].coords for _, members in levels.levels for k in members if _ == lvl}

    levels = shahidi_levels(levi_data(rs, 1))  # remove beta
    assert levels.m_ls == 3
    assert coroots_at(levels, 1) == {(0, 1), (1, 1)}
    assert coroots_at(levels, 2) == {(1, 2)}
    assert coroots_at(levels, 3) == {(1, 3), (2, 3)}

    levels = shahidi_levels(levi_data(rs, 0))  # remove alpha
    assert levels.m_ls == 2
    assert coroots_at(levels, 1) == {(1, 0), (1, 3), (1, 1), (1, 2)}
    assert coroots_at(levels, 2) == {(2, 3)}


def test_gl4_middle_levi_single_level():
    # brute force: every e_i - e_j with i <= 2 < j pairs to 1 with the weight
    d = builtin_datum("GL4")
    rs = d.root_system
    levi = levi_data(rs, 1)
    levels = shahidi_levels(levi)
    assert levels.m_ls == 1
    assert levels.counts() == {1: 4}
    assert levi.dim_n == 4


def test_invalid_marked_root():
    rs = builtin_datum("A2").root_system
    with pytest.raises(InputError):
        levi_data(rs, 5)


def test_levels_cover_nilradical_exhaustively():
    for name in SIMPLE_TYPES_RANK_LE_8:
        rs = builtin_datum(name).root_system
        for alpha in range(rs.rank):
            levi = levi_data(rs, alpha)
            levels = shahidi_levels(levi)
            alpha_covee = rs.coroots[rs.simple_index(alpha)]
            assert rs.pairing(levi.alpha_tilde, alpha_covee) == 1
            for i in levi.theta:
                assert rs.pairing(levi.alpha_tilde, rs.coroots[rs.simple_index(i)]) == 0
            assert sum(len(m) for _, m in levels.levels) == len(levi.sigma_p)
            assert sum(rs.root_dims[k] for _, m in levels.levels for k in m) == levi.dim_n
            for lvl, members in levels.levels:
                assert lvl >= 1
                for k in members:
                    assert rs.pairing(levi.alpha_tilde, rs.coroots[k]) == lvl


def test_rho_p_vanishes_on_levi_coroots():
    for name in ("A3", "B4", "D5", "E6"):
        rs = builtin_datum(name).root_system
        for alpha in range(rs.rank):
            levi = levi_data(rs, alpha)
            for i in levi.theta:
                assert rs.pairing(levi.rho_p, rs.coroots[rs.simple_index(i)]) == 0


def _wm_order_brute_force(rs, theta):
    """|W(M)| by scanning all of W for stabilizers of the Levi root set."""
    pos = [r.coords for r in rs.positive_roots]
    allroots = pos + [tuple(-c for c in v) for v in pos]
    theta_set = set(theta)
    levi_idx = frozenset(
        k
        for k, v in enumerate(allroots)
        if {i for i, c in enumerate(v) if c != 0} <= theta_set
    )
    stab = sum(
        1 for w in enumerate_weyl_perms(rs) if frozenset(w[i] for i in levi_idx) == levi_idx
    )
    sub = rs.cartan.submatrix(theta)
    levi_order = weyl_order(sub)
    assert stab % levi_order == 0
    return stab // levi_order


def test_relative_weyl_g2_both_levis(g2):
    rs = g2.root_system
    for alpha in (0, 1):
        levi = levi_data(rs, alpha)
        rel = relative_weyl(rs, levi)
        assert rel.wm_order == 2 == _wm_order_brute_force(rs, levi.theta)
        w = rel.nontrivial_rep
        theta_c = tuple(1 if j == levi.theta[0] else 0 for j in range(2))
        assert w.apply(theta_c) == theta_c
        assert rel.stab_a_order == 1


def test_relative_weyl_a2_is_trivial():
    rs = builtin_datum("A2").root_system
    levi = levi_data(rs, 1)  # theta = {a1}
    rel = relative_weyl(rs, levi)
    assert rel.wm_order == 1 == _wm_order_brute_force(rs, levi.theta)
    assert rel.nontrivial_rep is None


def test_relative_weyl_a1_full_torus():
    rs = build_root_system(CartanMatrix(((2,),)))
    levi = levi_data(rs, 0)
    assert relative_weyl(rs, levi).wm_order == 2


def test_relative_weyl_matches_brute_force_small_types():
    for name in ("A3", "B2", "B3", "C3", "D4"):
        rs = builtin_datum(name).root_system
        for alpha in range(rs.rank):
            levi = levi_data(rs, alpha)
            assert relative_weyl(rs, levi).wm_order == _wm_order_brute_force(rs, levi.theta)


def test_adjoint_dimension_identity(g2):
    rs = g2.root_system
    for alpha in (0, 1):
        chk = adjoint_dimension_check(rs, levi_data(rs, alpha))
        assert chk.ok
        assert chk.adjoint_dim == 14
        # 14 = 1 + 3 + 2*5
        assert chk.decomposed_dim == 1 + 3 + 10


def test_adjoint_dimension_rank_one_degenerate():
    rs = build_root_system(CartanMatrix(((2,),)))
    chk = adjoint_dimension_check(rs, levi_data(rs, 0))
    assert chk.ok and chk.adjoint_dim == 3


def test_adjoint_dimension_requires_split():
    # a rank-one relative system with a two-dimensional root space
    rs = build_root_system(CartanMatrix(((2,),), root_dims=(2,)))
    levi = levi_data(rs, 0)
    assert levi.dim_n == 2
    assert levi.alpha_tilde == (Fraction(1, 2),)
    with pytest.raises(InputError):
        adjoint_dimension_check(rs, levi)


def test_uneven_root_dims_rejected_for_levi():
    from fdquot.errors import StructureError

    cartan = CartanMatrix(cartan_entries("A", 2), root_dims=(1, 2, 1))
    rs = build_root_system(cartan)
    with pytest.raises(StructureError):
        levi_data(rs, 0)
