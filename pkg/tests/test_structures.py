from fractions import Fraction

import pytest

from dualhahn.errors import DegenerateGrid
from dualhahn.structures import DiscreteMeasure, SpectralGrid, Stencil, bandwidth


def test_grid_rejects_duplicates():
    with pytest.raises(DegenerateGrid) as info:
        SpectralGrid([1, 2, 1])
    assert info.value.indices == (0, 2)
    g = SpectralGrid([Fraction(1), Fraction(4)])
    assert g.N == 1 and g.shifted(1) == (2, 5)


def test_measure_inner_and_positivity():
    m = DiscreteMeasure((Fraction(1), Fraction(2)), Fraction(3))
    assert m.inner([1, 1], [1, 2]) == 5
    assert m.total() == m.kappa0
    assert m.positive
    assert not DiscreteMeasure((1, -1), 0).positive
    with pytest.raises(ValueError):
        m.inner([1], [1])


def test_stencil_rejects_outgoing_coefficients():
    with pytest.raises(ValueError):
        Stencil({1: (1, 1, 1)})
    with pytest.raises(ValueError):
        Stencil({0: (1, 1)})


def test_stencil_matrix_and_apply_agree():
    st = Stencil({1: (Fraction(2), Fraction(3), 0), -1: (0, Fraction(5), Fraction(7))})
    f = [Fraction(1), Fraction(-2), Fraction(4)]
    M = st.matrix()
    assert [sum(M[i][j] * f[j] for j in range(3)) for i in range(3)] == st.apply(f)
    assert all(sum(row) == 0 for row in M)
    assert bandwidth(M) == 1
