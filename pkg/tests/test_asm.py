import pytest
from hypothesis import given, strategies as st

from qtasm import asm
from qtasm.asm import AsmMatrix, AsmViolation, SymmetryClass as S


def test_validate_examples():
    asm.validate([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    asm.validate([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
    with pytest.raises(AsmViolation):
        asm.validate([[1, -1, 1], [0, 1, 0], [0, 1, 0]])


def test_validate_reports_location():
    with pytest.raises(AsmViolation) as exc:
        asm.validate([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert exc.value.condition.startswith("row")


def test_enumerate_order_one():
    got = list(asm.enumerate(1, S.ALL))
    assert [m.rows for m in got] == [((1,),)]


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429)])
def test_all_counts_two_strategies(n, expected):
    rows = [m.rows for m in asm.enumerate_asms(n, S.ALL, strategy="rows")]
    tri = [m.rows for m in asm.enumerate_asms(n, S.ALL, strategy="triangles")]
    assert rows == tri
    assert len(rows) == expected


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_qt_filter_matches_domain(n):
    filt = [m.rows for m in asm.enumerate_asms(n, S.QT, strategy="rows")]
    dom = [m.rows for m in asm.enumerate_asms(n, S.QT, strategy="domain")]
    assert filt == dom


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_ht_filter_matches_domain(n):
    filt = [m.rows for m in asm.enumerate_asms(n, S.HT, strategy="rows")]
    dom = [m.rows for m in asm.enumerate_asms(n, S.HT, strategy="domain")]
    assert filt == dom


def test_counts_examples():
    assert asm.count(2, S.QT) == 0
    assert asm.count(4, S.ALL) == 42
    assert asm.count(7, S.QT) == 12
    assert asm.count(5, S.QT) == 3


def test_no_qt_for_two_mod_four():
    for n in (2, 6, 10):
        assert asm.count(n, S.QT) == 0


def test_center_entry():
    (only,) = asm.enumerate(3, S.QT)
    assert only.rows == ((0, 1, 0), (1, -1, 1), (0, 1, 0))
    assert asm.center_entry(only) == -1
    assert all(asm.center_entry(m) == 1 for m in asm.enumerate(5, S.QT))
    assert all(asm.center_entry(m) == -1 for m in asm.enumerate(7, S.QT))


def test_center_entry_rejects():
    with pytest.raises(ValueError):
        asm.center_entry(next(iter(asm.enumerate(4, S.QT))))
    with pytest.raises(ValueError):
        asm.center_entry(asm.validate([[1, 0, 0], [0, 0, 1], [0, 1, 0]]))


def test_search_bound():
    with pytest.raises(asm.SearchBoundError):
        list(asm.enumerate(9, S.ALL))
    with pytest.raises(ValueError):
        list(asm.enumerate(3, S.QT, strategy="triangles"))


def test_compact_round_trip():
    for m in asm.enumerate(4, S.ALL):
        assert AsmMatrix.from_compact(m.compact()) == m


asms5 = list(asm.enumerate(5, S.ALL))


@given(st.sampled_from(asms5))
def test_rotations_preserve_asm(m):
    asm.validate(m.rotate90().rows)
    assert m.rotate90().rotate90() == m.rotate180()
    assert m.rotate180().rotate180() == m
    if m.is_qt():
        assert m.is_ht()


@given(st.sampled_from(asms5))
def test_every_enumerated_matrix_validates(m):
    assert asm.validate(m.rows) == m
    for r in m.rows:
        nz = [v for v in r if v]
        assert nz[0] == 1 and nz[-1] == 1
        assert all(nz[k] == -nz[k + 1] for k in range(len(nz) - 1))


@given(st.lists(st.lists(st.integers(-1, 1), min_size=3, max_size=3), min_size=3, max_size=3))
def test_validate_agrees_with_membership(rows):
    members = {m.rows for m in asm.enumerate(3, S.ALL)}
    try:
        asm.validate(rows)
        ok = True
    except AsmViolation:
        ok = False
    assert ok == (tuple(map(tuple, rows)) in members)
