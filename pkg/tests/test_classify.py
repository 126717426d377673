"""Finite-type recognition, checked against independent enumeration.

The classifier's catalog values (positive-root counts and orders) are
verified two ways: exhaustive word enumeration where braid classes stay
small, and the numeric reflection representation for F4/H4/E6 where they
do not.  E7/E8 orders are asserted against the standard values only; see
the README for this trust boundary.
"""

import pytest

from coxgrowth import (GeometricOracle, WordOracle, classify, get,
                       growth_table, is_spherical, spherical_subsets)
from coxgrowth.coxeter import INFINITY, coxeter_matrix
from coxgrowth.ratfunc import series_expand


def path(n, labels=None):
    """Coxeter matrix of a path diagram on n nodes with the given edge labels."""
    labels = labels or [3] * (n - 1)
    return coxeter_matrix(n, {(i, i + 1): labels[i] for i in range(n - 1)})


E6 = coxeter_matrix(6, {(0, 1): 3, (1, 2): 3, (2, 3): 3, (3, 4): 3, (2, 5): 3})
E7 = coxeter_matrix(7, {(0, 1): 3, (1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 5): 3, (2, 6): 3})
E8 = coxeter_matrix(8, {(0, 1): 3, (1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 5): 3,
                        (5, 6): 3, (2, 7): 3})
F4 = path(4, [3, 4, 3])
H4 = path(4, [5, 3, 3])
D5 = coxeter_matrix(5, {(0, 2): 3, (1, 2): 3, (2, 3): 3, (3, 4): 3})


@pytest.mark.parametrize("matrix,order,longest", [
    (path(1), 2, 1),
    (path(2), 6, 3),
    (path(3), 24, 6),
    (path(4), 120, 10),
    (path(2, [4]), 8, 4),
    (path(3, [3, 4]), 48, 9),
    (path(4, [3, 3, 4]), 384, 16),
    (path(3, [5, 3]), 120, 15),
    (coxeter_matrix(4, {(0, 2): 3, (1, 2): 3, (2, 3): 3}), 192, 12),
    (D5, 1920, 20),
    (F4, 1152, 24),
    (H4, 14400, 60),
    (E6, 51840, 36),
    (E7, 2903040, 63),
    (E8, 696729600, 120),
    (path(2, [7]), 14, 7),
])
def test_recognizes_finite_types(matrix, order, longest):
    info = classify(matrix, matrix.full_mask)
    assert info.finite
    assert info.order == order
    assert info.longest_length == longest


@pytest.mark.parametrize("matrix", [
    coxeter_matrix(2, {(0, 1): INFINITY}),
    path(3, [3, 6]),                                       # affine G2
    coxeter_matrix(3, {(0, 1): 3, (0, 2): 3, (1, 2): 3}),  # affine A2
    coxeter_matrix(4, {(0, 2): INFINITY, (1, 3): INFINITY}),
    path(5, [4, 3, 3, 4]),                                 # affine C4
    coxeter_matrix(9, {(i, i + 1): 3 for i in range(8)} | {(2, 8): 3}),  # affine E8
])
def test_recognizes_infinite_types(matrix):
    assert not classify(matrix, matrix.full_mask).finite


def test_relabelling_invariance():
    # D4 with the branch node placed at different indices
    for centre in range(4):
        others = [i for i in range(4) if i != centre]
        m = coxeter_matrix(4, {(min(centre, o), max(centre, o)): 3 for o in others})
        info = classify(m, m.full_mask)
        assert info.finite and info.order == 192


def test_reducible_product():
    # A2 x B2 x A1
    m = coxeter_matrix(5, {(0, 1): 3, (2, 3): 4})
    info = classify(m, m.full_mask)
    assert info.finite
    assert info.order == 6 * 8 * 2
    assert info.longest_length == 3 + 4 + 1
    assert sorted(c.label for c in info.components) == ["A", "A", "B"]


def test_subset_classification():
    m = get("tilde-a2").matrix
    assert not classify(m, m.full_mask).finite
    for sub in (0b011, 0b101, 0b110):
        info = classify(m, sub)
        assert info.finite and info.order == 6
    assert classify(m, 0).finite
    assert classify(m, 0).order == 1


def test_spherical_subsets_examples():
    m = get("tilde-a2").matrix
    assert spherical_subsets(m) == (0, 1, 2, 3, 4, 5, 6)
    m = get("inf-dihedral").matrix
    assert spherical_subsets(m) == (0, 1, 2)
    m = get("a2").matrix
    assert spherical_subsets(m) == (0, 1, 2, 3)
    assert is_spherical(m, 3)


def test_spherical_subsets_downward_closed():
    for name in ("triangle-237", "racg-4cycle", "b3"):
        m = get(name).matrix
        sph = set(spherical_subsets(m))
        for t in sph:
            sub = t
            while True:
                assert sub in sph
                if sub == 0:
                    break
                sub = (sub - 1) & t


# ---------------------------------------------------------------------------
# catalog values against independent enumeration
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("matrix", [
    path(1), path(2), path(3), path(4),
    path(2, [4]), path(3, [3, 4]), path(4, [3, 3, 4]),
    coxeter_matrix(4, {(0, 2): 3, (1, 2): 3, (2, 3): 3}),
    path(3, [5, 3]),
    path(2, [5]), path(2, [6]), path(2, [12]),
])
def test_orders_against_word_enumeration(matrix):
    info = classify(matrix, matrix.full_mask)
    hist = WordOracle(matrix).full_histogram()
    assert sum(hist) == info.order
    assert len(hist) - 1 == info.longest_length
    assert hist == series_expand(growth_table(matrix).series(), info.longest_length)


# every finite type of order <= 10^5 that braid-class enumeration cannot
# reach cheaply; together with the word-oracle cases above this covers all
# catalog types up to that order bound by element-level enumeration
@pytest.mark.parametrize("matrix", [
    path(5), path(6), path(7),                              # A5, A6, A7
    path(5, [3, 3, 3, 4]), path(6, [3, 3, 3, 3, 4]),        # B5, B6
    D5,
    coxeter_matrix(6, {(0, 2): 3, (1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 5): 3}),
    F4, H4, E6,
])
def test_orders_against_numeric_enumeration(matrix):
    info = classify(matrix, matrix.full_mask)
    sizes = GeometricOracle(matrix).sphere_sizes(info.longest_length)
    assert sum(sizes) == info.order
    assert sizes == series_expand(growth_table(matrix).series(), info.longest_length)
