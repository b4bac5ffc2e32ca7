import pytest
from hypothesis import given, strategies as st

from sloped_width.surface import (
    Surface, SurfaceError, cap_off, complexity, tube_merge, tube_same_component,
)


def chi_genus(chi, boundary):
    # genus from Euler characteristic of a connected orientable surface
    g2 = 2 - chi - boundary
    assert g2 % 2 == 0
    return g2 // 2


@pytest.mark.parametrize("comps,c", [
    ([(0, 0)], 0),
    ([(1, 2)], 4),
    ([(2, 0)], 5),
    ([(0, 4)], 3),
    ([(0, 2), (0, 2)], 2),
    ([], 0),
])
def test_complexity(comps, c):
    assert complexity(Surface(comps)) == c


def test_components_are_unordered():
    assert Surface([(0, 2), (1, 3)]) == Surface([(1, 3), (0, 2)])


@pytest.mark.parametrize("bad", [[(-1, 0)], [(0, -2)], [(1.0, 2)]])
def test_rejects_bad_components(bad):
    with pytest.raises(SurfaceError):
        Surface(bad)


def test_tube_same_component_examples():
    assert tube_same_component(Surface([(1, 2)])) == Surface([(2, 0)])
    assert tube_same_component(Surface([(0, 2)])) == Surface([(1, 0)])
    # chi is kept, two circles go
    g = chi_genus(2 - 0 - 4, 4 - 2)
    assert tube_same_component(Surface([(0, 4)])) == Surface([(g, 2)]) == Surface([(1, 2)])


def test_tube_same_component_errors():
    with pytest.raises(SurfaceError):
        tube_same_component(Surface([(3, 1)]))
    with pytest.raises(SurfaceError):
        tube_same_component(Surface([(0, 2)]), 1)


def test_tube_merge_examples():
    assert tube_merge(Surface([(0, 1), (0, 1)]), 0, 1) == Surface([(0, 0)])
    # chi adds (annulus has chi 0), two circles go
    chi = (2 - 2 - 2) * 2
    assert tube_merge(Surface([(1, 2), (1, 2)]), 0, 1) == Surface([(chi_genus(chi, 2), 2)]) == Surface([(2, 2)])
    assert tube_merge(Surface([(0, 2), (0, 2)]), 0, 1) == Surface([(chi_genus(0, 2), 2)]) == Surface([(0, 2)])


def test_tube_merge_keeps_other_components():
    s = Surface([(3, 0), (1, 1), (0, 3)])
    # canonical order: (3,0), (1,1), (0,3)
    assert tube_merge(s, 1, 2) == Surface([(3, 0), (1, 2)])


def test_tube_merge_errors():
    with pytest.raises(SurfaceError):
        tube_merge(Surface([(0, 2), (0, 2)]), 0, 0)
    with pytest.raises(SurfaceError):
        tube_merge(Surface([(1, 0), (0, 2)]), 0, 1)


@pytest.mark.parametrize("before,after", [
    ([(1, 2)], [(1, 0)]),
    ([(0, 2)], [(0, 0)]),
    ([(2, 2)], [(2, 0)]),
])
def test_cap_off(before, after):
    assert cap_off(Surface(before)) == Surface(after)


components = st.tuples(st.integers(0, 6), st.integers(0, 10))
surfaces = st.lists(components, max_size=4).map(Surface)


@given(surfaces)
def test_cap_off_idempotent(s):
    assert cap_off(cap_off(s)) == cap_off(s)


@given(surfaces)
def test_cap_off_keeps_genus(s):
    assert cap_off(s).genus == s.genus and cap_off(s).boundary == 0


@given(components.filter(lambda c: c[1] >= 2))
def test_tube_keeps_euler_characteristic(c):
    before = Surface([c]).components[0]
    after = tube_same_component(Surface([c])).components[0]
    assert after.euler_characteristic == before.euler_characteristic
