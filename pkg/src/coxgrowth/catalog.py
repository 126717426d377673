"""Built-in example systems, with expected values derived independently.

The growth strings were computed by hand: finite entries are the length
histograms (products of the classical degree factors, cross-checked against
the group orders), and the infinite entries come from inverting the
alternating sum of reciprocal subgroup series manually.  Sphere-size tuples
are length histograms for the finite entries and hand-derived prefixes for
the infinite ones.  The test suite re-derives all of them by brute force.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import INFINITY, CoxeterMatrix, coxeter_matrix


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    matrix: CoxeterMatrix
    growth: str        # canonical display of the growth series, or None
    spheres: tuple     # expected sphere sizes from length 0, or None


def _dihedral_poly(m):
    return "1 + " + " + ".join(f"2*t^{k}" if k > 1 else "2*t" for k in range(1, m)) + f" + t^{m}"


ENTRIES = (
    CatalogEntry(
        "a1", "single reflection (order 2)",
        coxeter_matrix(1),
        "(1 + t) / (1)", (1, 1)),
    CatalogEntry(
        "a1xa1", "two commuting reflections (Klein four-group)",
        coxeter_matrix(2),
        "(1 + 2*t + t^2) / (1)", (1, 2, 1)),
    CatalogEntry(
        "a2", "symmetric group S3",
        coxeter_matrix(2, {(0, 1): 3}),
        "(1 + 2*t + 2*t^2 + t^3) / (1)", (1, 2, 2, 1)),
    CatalogEntry(
        "a3", "symmetric group S4",
        coxeter_matrix(3, {(0, 1): 3, (1, 2): 3}),
        "(1 + 3*t + 5*t^2 + 6*t^3 + 5*t^4 + 3*t^5 + t^6) / (1)",
        (1, 3, 5, 6, 5, 3, 1)),
    CatalogEntry(
        "b2", "square symmetries (dihedral of order 8)",
        coxeter_matrix(2, {(0, 1): 4}),
        f"({_dihedral_poly(4)}) / (1)", (1, 2, 2, 2, 1)),
    CatalogEntry(
        "b3", "cube symmetries (order 48)",
        coxeter_matrix(3, {(0, 1): 3, (1, 2): 4}),
        "(1 + 3*t + 5*t^2 + 7*t^3 + 8*t^4 + 8*t^5 + 7*t^6 + 5*t^7 + 3*t^8 + t^9) / (1)",
        (1, 3, 5, 7, 8, 8, 7, 5, 3, 1)),
    CatalogEntry(
        "h3", "icosahedral symmetries (order 120)",
        coxeter_matrix(3, {(0, 1): 5, (1, 2): 3}),
        "(1 + 3*t + 5*t^2 + 7*t^3 + 9*t^4 + 11*t^5 + 12*t^6 + 12*t^7 + 12*t^8"
        " + 12*t^9 + 11*t^10 + 9*t^11 + 7*t^12 + 5*t^13 + 3*t^14 + t^15) / (1)",
        (1, 3, 5, 7, 9, 11, 12, 12, 12, 12, 11, 9, 7, 5, 3, 1)),
    CatalogEntry(
        "i2-5", "pentagon symmetries (dihedral of order 10)",
        coxeter_matrix(2, {(0, 1): 5}),
        f"({_dihedral_poly(5)}) / (1)", (1, 2, 2, 2, 2, 1)),
    CatalogEntry(
        "i2-6", "hexagon symmetries (dihedral of order 12)",
        coxeter_matrix(2, {(0, 1): 6}),
        f"({_dihedral_poly(6)}) / (1)", (1, 2, 2, 2, 2, 2, 1)),
    CatalogEntry(
        "i2-7", "heptagon symmetries (dihedral of order 14)",
        coxeter_matrix(2, {(0, 1): 7}),
        f"({_dihedral_poly(7)}) / (1)", (1, 2, 2, 2, 2, 2, 2, 1)),
    CatalogEntry(
        "i2-8", "octagon symmetries (dihedral of order 16)",
        coxeter_matrix(2, {(0, 1): 8}),
        f"({_dihedral_poly(8)}) / (1)", (1, 2, 2, 2, 2, 2, 2, 2, 1)),
    CatalogEntry(
        "inf-dihedral", "infinite dihedral group",
        coxeter_matrix(2, {(0, 1): INFINITY}),
        "(1 + t) / (1 - t)", (1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2)),
    CatalogEntry(
        "tilde-a2", "affine triangle reflections (3,3,3)",
        coxeter_matrix(3, {(0, 1): 3, (0, 2): 3, (1, 2): 3}),
        "(1 + t + t^2) / (1 - 2*t + t^2)",
        (1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30)),
    CatalogEntry(
        "triangle-244", "affine triangle reflections (2,4,4)",
        coxeter_matrix(3, {(0, 1): 2, (0, 2): 4, (1, 2): 4}),
        "(1 + 2*t + 2*t^2 + 2*t^3 + t^4) / (1 - t - t^3 + t^4)", None),
    CatalogEntry(
        "triangle-237", "hyperbolic triangle reflections (2,3,7)",
        coxeter_matrix(3, {(0, 1): 2, (0, 2): 3, (1, 2): 7}),
        "(1 + 4*t + 8*t^2 + 11*t^3 + 12*t^4 + 12*t^5 + 12*t^6 + 11*t^7 + 8*t^8"
        " + 4*t^9 + t^10) / (1 + t - t^3 - t^4 - t^5 - t^6 - t^7 + t^9 + t^10)",
        None),
    CatalogEntry(
        "free-product-3", "free product of three reflections (no relations)",
        coxeter_matrix(3, {(0, 1): INFINITY, (0, 2): INFINITY, (1, 2): INFINITY}),
        "(1 + t) / (1 - 2*t)",
        (1, 3, 6, 12, 24, 48, 96, 192, 384, 768, 1536)),
    CatalogEntry(
        "racg-4cycle", "right-angled group on a 4-cycle (product of two infinite dihedrals)",
        coxeter_matrix(4, {(0, 2): INFINITY, (1, 3): INFINITY}),
        "(1 + 2*t + t^2) / (1 - 2*t + t^2)",
        (1, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40)),
)

_BY_NAME = {e.name: e for e in ENTRIES}


def names() -> list:
    return [e.name for e in ENTRIES]


def get(name: str) -> CatalogEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(names())}") from None
