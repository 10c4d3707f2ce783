from fractions import Fraction

import pytest

from fdquot.errors import StructureError
from fdquot.lattice import orbit_volume, structure_constants
from fdquot.roots import CartanMatrix, RootDatum, build_root_system, builtin_datum, cartan_entries


def _maximal_theta(datum, alpha):
    return tuple(i for i in range(datum.semisimple_rank) if i != alpha)


def test_gl2n_block_levi_constants():
    for n in range(1, 7):
        d = builtin_datum(f"GL{2 * n}")
        alpha = n - 1
        sc = structure_constants(d, _maximal_theta(d, alpha), alpha)
        assert sc.chi == tuple([1] * n + [-1] * n)
        assert sc.chi_pairing == 2
        assert sc.m_idx == n
        assert sc.compat_constant(1) == Fraction(2, n)
        assert sc.dim_a_m == 2 and sc.dim_a_g == 1


def test_g2_rows():
    d = builtin_datum("G2")
    # remove alpha: generator is the fundamental weight 2a+b
    sc = structure_constants(d, (1,), 0)
    assert sc.chi == (2, 1)
    assert sc.chi_pairing == 1
    assert sc.m_idx == 2
    assert sc.heiermann_constant == 2
    # remove beta: generator 3a+2b
    sc = structure_constants(d, (0,), 1)
    assert sc.chi == (3, 2)
    assert sc.chi_pairing == 1
    assert sc.m_idx == 2
    assert sc.compat_constant(2) == 1


def test_non_maximal_theta_rejected():
    d = builtin_datum("SL2")
    with pytest.raises(StructureError):
        structure_constants(d, (0,), 0)
    d3 = builtin_datum("A3")
    with pytest.raises(StructureError):
        structure_constants(d3, (0,), 2)


def _reversed_gl_datum(n):
    """GL_n with the basis read backwards, flipping every simple root."""
    cartan = CartanMatrix(cartan_entries("A", n - 1))

    def vec(i):
        out = [0] * n
        out[n - 1 - i] = 1
        out[n - 2 - i] = -1
        return tuple(out)

    embeds = tuple(vec(i) for i in range(n - 1))
    return RootDatum(
        name=f"GL{n}-reversed",
        root_system=build_root_system(cartan),
        lattice_rank=n,
        root_embed=embeds,
        coroot_embed=embeds,
        labels=tuple(f"a{i + 1}" for i in range(n - 1)),
    )


def test_orientation_flip_changes_only_chi_sign():
    for n in (1, 2, 3):
        straight = builtin_datum(f"GL{2 * n}")
        flipped = _reversed_gl_datum(2 * n)
        alpha = n - 1
        sc0 = structure_constants(straight, _maximal_theta(straight, alpha), alpha)
        sc1 = structure_constants(flipped, _maximal_theta(flipped, alpha), alpha)
        assert sc1.chi == tuple(-x for x in sc0.chi)
        assert sc1.chi_pairing == sc0.chi_pairing
        assert sc1.m_idx == sc0.m_idx


def test_sl2_versus_pgl2_index():
    # simply connected A1: chi = the fundamental weight, pairing 1
    sl2 = builtin_datum("SL2")
    sc = structure_constants(sl2, (), 0)
    assert sc.chi_pairing == 1
    # adjoint A1: chi = the root itself, pairing 2
    pgl2 = builtin_datum("A1")
    sc = structure_constants(pgl2, (), 0)
    assert sc.chi_pairing == 2
    assert sc.m_idx == 1


def test_orbit_volume_g2_example():
    d = builtin_datum("G2")
    sc = structure_constants(d, (1,), 0)
    ov = orbit_volume(sc, 1, 1)
    assert ov.y1.coefficient == 1 and ov.y1.unit == "2pi/logq"
    assert ov.vol == 2
    assert ov.ratio.coefficient == 2 and ov.ratio.unit == "logq/2pi"
    assert str(ov.ratio) == "2 * (log q / 2 pi)"


def test_orbit_volume_ratio_independent_of_l_and_t():
    d = builtin_datum("GL6")
    sc = structure_constants(d, (0, 1, 3, 4), 2)
    base = orbit_volume(sc, 1, 1).ratio
    for l in range(1, 11):
        for t in range(1, 11):
            ov = orbit_volume(sc, l, t)
            assert ov.ratio == base
            assert ov.y1.coefficient == Fraction(sc.chi_pairing, l * t)
            assert ov.vol == Fraction(sc.m_idx, l * t)
    assert base.coefficient == Fraction(3, 2)


def test_orbit_volume_validates_inputs():
    d = builtin_datum("G2")
    sc = structure_constants(d, (1,), 0)
    from fdquot.errors import InputError

    with pytest.raises(InputError):
        orbit_volume(sc, 0, 1)
