import pytest

from qtasm import _purekernels, ice, kernels

try:
    compiled = kernels.get_backend("compiled")
except ImportError:  # extension not built
    compiled = None

needs_ext = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


@needs_ext
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("sym", [kernels.SYM_NONE, kernels.SYM_HT, kernels.SYM_QT])
def test_asm_backends_agree(n, sym):
    assert list(compiled.asm_enumerate(n, sym)) == list(_purekernels.asm_enumerate(n, sym))


@needs_ext
@pytest.mark.parametrize("pattern,n", [("dwbc", 4), ("qt-odd", 7), ("qt-even", 4), ("ht-odd", 5)])
def test_ice_backends_agree(pattern, n):
    g = ice.build_pattern(pattern, n)
    _, _, nvar, slot_var, slot_sign, fixed = g._compile()
    args = (nvar, slot_var, slot_sign, fixed, -1)
    assert [tuple(s) for s in compiled.ice_solutions(*args)] == \
        [tuple(s) for s in _purekernels.ice_solutions(*args)]


def test_limit_raises_in_pure():
    g = ice.build_pattern("dwbc", 4)
    _, _, nvar, slot_var, slot_sign, fixed = g._compile()
    with pytest.raises(kernels.SearchLimitExceeded):
        _purekernels.ice_solutions(nvar, slot_var, slot_sign, fixed, 5)


def test_backend_name():
    assert kernels.BACKEND in ("compiled", "pure")
    with pytest.raises(ValueError):
        kernels.get_backend("gpu")
