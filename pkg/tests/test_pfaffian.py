import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from qtasm import pfaffian as pf
from qtasm.exact import LaurentPoly, alpha, sigma

entry = st.fractions(min_value=-12, max_value=12, max_denominator=12)


def skew(n, values):
    rows = [[F(0)] * n for _ in range(n)]
    it = iter(values)
    for i, j in itertools.combinations(range(n), 2):
        v = next(it)
        rows[i][j], rows[j][i] = v, -v
    return rows


@st.composite
def skew_matrices(draw, max_half=3):
    n = 2 * draw(st.integers(1, max_half))
    vals = draw(st.lists(entry, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return skew(n, vals)


def test_two_by_two():
    c = F(7, 3)
    assert pf.pfaffian([[0, c], [-c, 0]]) == c


def test_four_by_four_expansion():
    c = LaurentPoly.var
    names = {(i, j): c(f"a{i}{j}") for i, j in itertools.combinations(range(1, 5), 2)}
    rows = [[LaurentPoly.constant(0)] * 4 for _ in range(4)]
    for (i, j), v in names.items():
        rows[i - 1][j - 1], rows[j - 1][i - 1] = v, -v
    expected = names[1, 2] * names[3, 4] - names[1, 3] * names[2, 4] + names[1, 4] * names[2, 3]
    assert pf.pfaffian_matchings(rows) == expected


def test_pivoting_with_zero_leading_entry():
    rows = skew(4, [0, 1, 2, 3, 4, 5])
    assert pf.pfaffian(rows) == pf.pfaffian_matchings(rows) == 0 * 5 - 1 * 4 + 2 * 3


def test_random_eight_square_is_det():
    rng = random.Random(8)
    rows = skew(8, [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(28)])
    assert pf.pfaffian(rows) ** 2 == pf.determinant(rows)


@given(skew_matrices())
def test_elimination_matches_matchings(rows):
    assert pf.pfaffian(rows) == pf.pfaffian_matchings(rows)


@given(skew_matrices(max_half=5))
def test_square_is_determinant(rows):
    assert pf.pfaffian(rows) ** 2 == pf.determinant(rows)


def test_contract_errors():
    with pytest.raises(pf.ContractError):
        pf.SkewMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    with pytest.raises(pf.ContractError):
        pf.SkewMatrix([[0, 1], [1, 0]])
    with pytest.raises(pf.ContractError):
        pf.SkewMatrix([[1, 1], [-1, 0]])


def test_build_M_entries():
    a = F(5, 2)
    M = pf.build_M(1, 1, [F(2), F(3)], a)
    assert M[0, 1] == sigma(F(3, 2)) / alpha(F(3, 2), a)
    M = pf.build_M(2, 2, [F(2), F(3), F(7, 5), F(1, 4)], a)
    for i in range(4):
        assert M[i, i] == 0
        for j in range(4):
            assert M[i, j] == -M[j, i]


def test_z_r_initial_values():
    a = F(9, 4)
    assert pf.z_r_qt(1, 1, [F(2), F(5, 3)], a) == 1
    x1, x2 = F(2), F(5, 3)
    assert pf.z_r_qt(2, 1, [x1, x2], a) == x2 / x1 + x1 / x2
    assert pf.z_tilde(1, [F(3, 7)], a) == 1


def test_extract_c_l1():
    x1 = F(4, 3)
    assert pf.extract_c(1, [x1], F(5, 2)) == [x1, 1 / x1]


def test_extract_c_consistency_and_independence():
    a, xs = F(7, 2), [F(2), F(3, 5), F(5, 7)]
    c = pf.extract_c(2, xs, a)
    c2 = pf.extract_c(2, xs, a, offset=40)
    assert c == c2
    t = F(11, 13)
    rebuilt = sum(ci * t ** (2 * i - 5) for i, ci in enumerate(c, 1))
    assert rebuilt == pf.z_r_qt(2, 2, xs + [t], a)


@pytest.mark.parametrize("r,l", [(1, 2), (2, 2), (1, 3)])
def test_z_r_symmetric(r, l):
    rng = random.Random(r * 10 + l)
    a = F(rng.randint(2, 9), 19)
    xs = [F(p, 11) for p in (2, 3, 5, 7, 13, 17)[:2 * l]]
    base = pf.z_r_qt(r, l, xs, a)
    for i, j in itertools.combinations(range(2 * l), 2):
        ys = list(xs)
        ys[i], ys[j] = ys[j], ys[i]
        assert pf.z_r_qt(r, l, ys, a) == base


def test_z_tilde_symmetric():
    a, xs = F(8, 3), [F(2), F(3, 5), F(5, 7)]
    base = pf.z_tilde(2, xs, a)
    for perm in itertools.permutations(xs):
        assert pf.z_tilde(2, list(perm), a) == base


def test_singular_point():
    with pytest.raises(pf.SingularPointError):
        pf.z_r_qt(1, 1, [F(2), F(-2)], F(3))


def test_specialize_removable_singularity():
    a = F(5, 3)
    xs = [F(2), F(7, 4), F(3, 8), F(9, 5)]
    f = lambda y: pf.z_r_qt(1, 2, y, a)
    v = pf.specialize(f, xs, 0, a * xs[1], pf.width_z_r(1, 2))
    with pytest.raises(ZeroDivisionError):
        f([a * xs[1]] + xs[1:])
    assert v != 0
