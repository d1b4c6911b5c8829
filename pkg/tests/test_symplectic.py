import itertools
import random

import pytest

from mcgverify.surface import NamedCurve, all_curves, basis_class, geometric_intersection
from mcgverify.symplectic import (
    SymplecticMatrix,
    default_cutoff,
    form_matrix,
    identity,
    is_prime,
    is_prime_power,
    matrix_order,
    mod_p,
    rotation_matrix,
    sp_order,
    twist_matrix,
    word_matrix,
    word_order,
)
from mcgverify.words import Twist, TwistWord, invert, parse


def c(fam, i):
    return NamedCurve(fam, i)


def test_twist_matrix_formula_g3():
    g = 3
    m = twist_matrix(c("A", 1), 1, g)
    x1, y1 = basis_class("x", 1, g), basis_class("y", 1, g)
    assert m.apply(x1) == tuple(a + b for a, b in zip(x1, y1))
    assert m.apply(y1) == y1
    for i in (2, 3):
        for kind in ("x", "y"):
            v = basis_class(kind, i, g)
            assert m.apply(v) == v


def test_twist_inverse_pairs():
    g = 4
    for fam in "ABC":
        m = twist_matrix(c(fam, 2), 1, g) * twist_matrix(c(fam, 2), -1, g)
        assert m.is_identity()


def test_braid_relation_on_matrices():
    g = 5
    a, b = twist_matrix(c("A", 1), 1, g), twist_matrix(c("B", 1), 1, g)
    assert a * b * a == b * a * b


def test_relation_suite_small():
    for g in (3, 4, 5):
        mats = {x: twist_matrix(x, 1, g) for x in all_curves(g)}
        for x, y in itertools.combinations(all_curves(g), 2):
            if geometric_intersection(x, y, g) == 0:
                assert mats[x] * mats[y] == mats[y] * mats[x]
            else:
                assert mats[x] * mats[y] * mats[x] == mats[y] * mats[x] * mats[y]


def test_rotation_matrix():
    r3 = rotation_matrix(3)
    assert not r3.is_identity()
    assert (r3 ** 3).is_identity()
    assert matrix_order(rotation_matrix(6), 40) == 6
    assert matrix_order(rotation_matrix(10), 50) == 10


def test_rotation_conjugates_twists():
    g = 5
    r = rotation_matrix(g)
    assert r * twist_matrix(c("A", 1), 1, g) * r.inverse() == twist_matrix(c("A", 2), 1, g)


def test_sign_insensitivity_of_transvection():
    # T_v = T_{-v}: build the c-curve transvection from the negated class.
    g = 4
    from mcgverify.surface import homology_class
    from mcgverify.symplectic import _from_columns, _transvect_columns

    v = homology_class(c("C", 2), g)
    neg = tuple(-a for a in v)
    n = 2 * g
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    _transvect_columns(cols, neg, 1, g)
    assert _from_columns(cols, g, None) == twist_matrix(c("C", 2), 1, g)


def test_word_matrix_and_cor32():
    g = 6
    assert word_matrix(TwistWord((), g)).is_identity()
    w = parse("R C1 B4 A6 A1^-1 B5^-1 C2^-1", g)
    assert word_matrix(invert(w)) == word_matrix(w).inverse()
    f5f6 = parse("B4 A6 A2 A1^-1 B5^-1 A3^-1", g) * parse("B5 A1 A3 A2^-1 B6^-1 A4^-1", g)
    assert word_matrix(f5f6) == word_matrix(parse("B4 A6 B6^-1 A4^-1", g))


def test_everything_is_symplectic():
    for g in (3, 6):
        assert rotation_matrix(g).is_symplectic()
        for x in all_curves(g):
            assert twist_matrix(x, 1, g).is_symplectic()
            assert twist_matrix(x, -1, g).is_symplectic()


def test_matrix_order_basics():
    g = 4
    assert matrix_order(identity(g), 5) == 1
    assert matrix_order(twist_matrix(c("B", 1), 1, g), default_cutoff(g)) is None


def test_word_order_matches_matrix_order():
    rng = random.Random(3)
    for _ in range(40):
        g = rng.randrange(3, 7)
        m = rng.randrange(1, g)
        w = parse(f"R^{m}", g)
        cutoff = default_cutoff(g)
        assert word_order(w, cutoff) == matrix_order(word_matrix(w), cutoff)


def test_mod_p():
    g = 3
    assert mod_p(identity(g), 2) == identity(g, 2)
    t = twist_matrix(c("A", 2), 1, g)
    sq = mod_p(t, 2) * mod_p(t, 2)
    assert sq.is_identity()
    assert matrix_order(mod_p(rotation_matrix(6), 3), 20) == 6
    with pytest.raises(ValueError):
        mod_p(t, 6)


def brute_force_sp2(p):
    """All invertible 2x2 matrices over F_p preserving the symplectic form."""
    j = ((0, 1), (-1, 0))
    count = 0
    for a, b, cc, d in itertools.product(range(p), repeat=4):
        m = ((a, b), (cc, d))
        ok = True
        for u in range(2):
            for v in range(2):
                val = sum(m[i][u] * j[i][k] * m[k][v] for i in range(2) for k in range(2))
                if val % p != j[u][v] % p:
                    ok = False
        count += ok
    return count


def test_sp_order_against_enumeration():
    assert sp_order(1, 2) == 6 == brute_force_sp2(2)
    assert sp_order(1, 3) == 24 == brute_force_sp2(3)
    assert sp_order(2, 2) == 720


def test_primality_helpers():
    assert [p for p in range(2, 20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime_power(8) and is_prime_power(9) and not is_prime_power(12)


def test_form_matrix_antisymmetric():
    j = form_matrix(4)
    for i in range(8):
        for k in range(8):
            assert j[i][k] == -j[k][i]
