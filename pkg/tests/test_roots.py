from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fdquot.errors import InputError, NotFiniteTypeError, UnknownNameError
from fdquot.roots import (
    BUILTIN_NAMES,
    CartanMatrix,
    build_root_system,
    builtin_datum,
    cartan_entries,
    datum_from_json,
    enumerate_weyl_perms,
    longest_element,
    reflection_matrix,
    weyl_order,
    word_to_matrix,
    _matmul,
    _identity_matrix,
)

G2 = CartanMatrix(cartan_entries("G", 2))

# the six positive roots of G2 with their coroots, alpha short, beta long
G2_TABLE = {
    (1, 0): (1, 0),
    (0, 1): (0, 1),
    (1, 1): (1, 3),
    (2, 1): (2, 3),
    (3, 1): (1, 1),
    (3, 2): (1, 2),
}


def test_g2_positive_roots_and_coroots():
    rs = build_root_system(G2)
    got = {r.coords: c.coords for r, c in zip(rs.positive_roots, rs.coroots)}
    assert got == G2_TABLE
    assert rs.num_positive == 6


def test_g2_length_classes():
    rs = build_root_system(G2)
    classes = {r.coords: r.length2class for r in rs.positive_roots}
    assert classes[(1, 0)] == "short"
    assert classes[(0, 1)] == "long"
    assert classes[(1, 1)] == "short"
    assert classes[(2, 1)] == "short"
    assert classes[(3, 1)] == "long"
    assert classes[(3, 2)] == "long"


def test_g2_long_coroots_look_short():
    # coefficient shapes swap across the coroot bijection: long roots get the
    # short-root coefficient profiles of the dual system and vice versa
    rs = build_root_system(G2)
    long_coroots = {c.coords for r, c in zip(rs.positive_roots, rs.coroots) if r.length2class == "long"}
    short_coroots = {c.coords for r, c in zip(rs.positive_roots, rs.coroots) if r.length2class == "short"}
    assert long_coroots == {(0, 1), (1, 1), (1, 2)}
    assert short_coroots == {(1, 0), (1, 3), (2, 3)}


def test_a1_trivial():
    rs = build_root_system(CartanMatrix(((2,),)))
    assert [r.coords for r in rs.positive_roots] == [(1,)]
    assert rs.pairing((1,), rs.coroots[0]) == 2


def test_a2_closure_by_hand():
    # brute force: close {a1, a2} under the two reflections directly
    cartan = CartanMatrix(cartan_entries("A", 2))
    seen = {(1, 0), (0, 1)}
    for _ in range(4):
        for c in list(seen):
            for i in (0, 1):
                k = sum(cartan.entries[i][j] * c[j] for j in range(2))
                img = list(c)
                img[i] -= k
                if all(x >= 0 for x in img) and any(img):
                    seen.add(tuple(img))
    rs = build_root_system(cartan)
    assert {r.coords for r in rs.positive_roots} == seen == {(1, 0), (0, 1), (1, 1)}


def test_pairing_examples():
    rs = build_root_system(G2)
    beta_covee = rs.coroot_of((0, 1))
    alpha_covee = rs.coroot_of((1, 0))
    assert rs.pairing((3, 2), beta_covee) == 1
    assert rs.pairing((2, 1), alpha_covee) == 1
    for i in range(2):
        e = tuple(1 if j == i else 0 for j in range(2))
        assert rs.pairing(e, rs.coroot_of(e)) == 2


def test_pairing_bilinear_and_rank_checked():
    rs = build_root_system(G2)
    x = (Fraction(1, 2), Fraction(-3, 7))
    y = (2, 5)
    cv = rs.coroots[3]
    assert rs.pairing(tuple(a + b for a, b in zip(x, y)), cv) == rs.pairing(x, cv) + rs.pairing(y, cv)
    with pytest.raises(InputError):
        rs.pairing((1,), cv)


def test_every_root_pairs_two_with_own_coroot():
    for name in ("A3", "B3", "C3", "D4", "F4", "G2"):
        rs = builtin_datum(name).root_system
        for r, c in zip(rs.positive_roots, rs.coroots):
            assert rs.pairing(r.coords, c) == 2


def test_simple_reflection_permutes_other_positives():
    for name in ("A2", "B2", "G2"):
        rs = builtin_datum(name).root_system
        for i in range(rs.rank):
            simple = tuple(1 if j == i else 0 for j in range(rs.rank))
            others = {r.coords for r in rs.positive_roots} - {simple}
            from fdquot.roots import reflect_root_coords

            images = {reflect_root_coords(rs.cartan, i, c) for c in others}
            assert images == others
            assert reflect_root_coords(rs.cartan, i, simple) == tuple(-x for x in simple)


def test_closure_idempotent():
    for name in ("A4", "B3", "G2", "F4"):
        rs = builtin_datum(name).root_system
        again = build_root_system(rs.cartan)
        assert again.positive_roots == rs.positive_roots
        assert again.coroots == rs.coroots


def _all_weyl_matrices(cartan):
    gens = [reflection_matrix(cartan, i) for i in range(cartan.rank)]
    seen = {_identity_matrix(cartan.rank)}
    frontier = list(seen)
    while frontier:
        fresh = []
        for m in frontier:
            for g in gens:
                mg = _matmul(m, g)
                if mg not in seen:
                    seen.add(mg)
                    fresh.append(mg)
        frontier = fresh
    return seen


def test_g2_longest_element_is_minus_identity():
    rs = build_root_system(G2)
    w0 = longest_element(rs)
    assert w0.matrix == ((-1, 0), (0, -1))
    assert len(w0.word) == 6
    assert word_to_matrix(G2, w0.word) == w0.matrix
    # brute force over all 12 elements: -1 is the unique longest
    mats = _all_weyl_matrices(G2)
    assert len(mats) == 12
    assert ((-1, 0), (0, -1)) in mats


def test_a1_longest_element():
    rs = build_root_system(CartanMatrix(((2,),)))
    w0 = longest_element(rs)
    assert w0.apply((1,)) == (-1,)
    assert w0.word == (0,)


def test_g2_longest_modulo_levi_by_brute_force():
    rs = build_root_system(G2)
    for alpha in (0, 1):
        theta = tuple(i for i in range(2) if i != alpha)
        w = longest_element(rs, theta)
        alpha_c = tuple(1 if j == alpha else 0 for j in range(2))
        theta_c = tuple(1 if j == theta[0] else 0 for j in range(2))
        assert all(x >= 0 for x in w.apply(theta_c))
        assert all(x <= 0 for x in w.apply(alpha_c))
        # uniqueness among all 12 elements
        hits = [
            m
            for m in _all_weyl_matrices(G2)
            if all(
                x >= 0
                for x in tuple(sum(row[j] * theta_c[j] for j in range(2)) for row in m)
            )
            and all(
                x <= 0
                for x in tuple(sum(row[j] * alpha_c[j] for j in range(2)) for row in m)
            )
            and m != _identity_matrix(2)
        ]
        assert w.matrix in hits


def test_weyl_element_word_reproduces_action():
    rs = builtin_datum("B3").root_system
    w = longest_element(rs, (0, 2))
    assert word_to_matrix(rs.cartan, w.word) == w.matrix
    perm = w.root_permutation(rs)
    assert len(perm) == rs.num_positive


@given(st.sampled_from(["A1", "A2", "A3", "B2", "B3", "C3", "G2"]))
def test_weyl_order_matches_enumeration(name):
    rs = builtin_datum(name).root_system
    assert weyl_order(rs.cartan) == len(enumerate_weyl_perms(rs))


def test_weyl_orders_match_known_values():
    known = {"G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}
    for name, order in known.items():
        assert weyl_order(CartanMatrix(cartan_entries(name[0], int(name[1])))) == order
    assert weyl_order(cartan := CartanMatrix(cartan_entries("B", 6))) == 2**6 * 720
    assert cartan.rank == 6


def test_not_finite_type_rejected():
    affine = CartanMatrix(((2, -2), (-2, 2)))
    with pytest.raises(NotFiniteTypeError):
        build_root_system(affine)


def test_malformed_cartan_rejected():
    with pytest.raises(InputError):
        CartanMatrix(((1,),))
    with pytest.raises(InputError):
        CartanMatrix(((2, 1), (-1, 2)))
    with pytest.raises(InputError):
        CartanMatrix(((2, 0), (-1, 2)))
    with pytest.raises(InputError):
        CartanMatrix(((2, -1), (-1, 2), (0, 0)))


def test_builtin_names_and_unknown():
    assert "G2" in BUILTIN_NAMES
    with pytest.raises(UnknownNameError):
        builtin_datum("NoSuchType")


def test_gl_datum_shape():
    d = builtin_datum("GL4")
    assert d.lattice_rank == 4
    assert d.semisimple_rank == 3
    assert d.central_rank == 1
    assert d.root_embed[0] == (1, -1, 0, 0)
    assert d.pairing(d.root_embed[1], d.coroot_embed[1]) == 2


def test_datum_from_json_roundtrip_and_errors():
    doc = {
        "cartan": [[2, -3], [-1, 2]],
        "latticeRank": 2,
        "rootEmbed": [[1, 0], [0, 1]],
        "corootEmbed": [[2, -3], [-1, 2]],
        "name": "G2-custom",
    }
    d = datum_from_json(doc)
    assert d.root_system.num_positive == 6
    with pytest.raises(InputError):
        datum_from_json({"cartan": [[2, -1]]})
    with pytest.raises(InputError):
        datum_from_json({"cartan": [[2, -3], [-1, 2]], "rootEmbed": [[1, 0], [0, 1]]})
    bad = dict(doc, corootEmbed=[[2, -3], [-1, 3]])
    with pytest.raises(InputError):
        datum_from_json(bad)


def test_root_dims_validated():
    cartan = CartanMatrix(cartan_entries("A", 2), root_dims=(1, 2, 1))
    rs = build_root_system(cartan)
    assert rs.root_dims == (1, 2, 1)
    with pytest.raises(InputError):
        build_root_system(CartanMatrix(cartan_entries("A", 2), root_dims=(1, 2)))


def test_enumeration_order_is_height_then_lex():
    rs = builtin_datum("B2").root_system
    coords = [r.coords for r in rs.positive_roots]
    assert coords == sorted(coords, key=lambda c: (sum(c), c))
