import numpy as np
import pytest

from vizing8.generators import STYLES, generate_planar


@pytest.mark.parametrize("n", [0, 1, 2])
def test_floor_is_single_edge(n):
    g = generate_planar(n, 0)
    assert (g.n, g.m) == (2, 1)


@pytest.mark.parametrize("style", STYLES)
def test_post_contract(style):
    for n in (3, 5, 17, 60, 500):
        for s in range(4):
            g = generate_planar(n, s, style)
            assert g.max_degree <= 8
            assert not np.any(g.deg == 0)
            assert g.n <= max(n, 2)
            if style != "butterfly":
                assert g.n == n


@pytest.mark.parametrize("style", STYLES)
def test_planar(style):
    nx = pytest.importorskip("networkx")
    for s in range(3):
        g = generate_planar(400, s, style)
        h = nx.Graph(g.edges)
        assert nx.check_planarity(h)[0]


@pytest.mark.parametrize("style", STYLES)
def test_deterministic(style):
    a = generate_planar(300, 9, style)
    b = generate_planar(300, 9, style)
    c = generate_planar(300, 10, style)
    assert a.edges == b.edges
    assert a.edges != c.edges


def test_lattice_degree():
    assert generate_planar(2000, 0, "lattice").max_degree <= 6


def test_sparse_average_degree():
    g = generate_planar(3000, 0, "sparse")
    assert 2 * g.m / g.n <= 5


def test_bad_style():
    with pytest.raises(ValueError):
        generate_planar(10, 0, "cubic")
