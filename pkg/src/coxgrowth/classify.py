"""Recognition of finite standard parabolic subgroups by diagram shape.

The connected diagrams of finite Coxeter groups form a short catalog, so a
subgroup is finite exactly when every connected component of its induced
diagram is isomorphic (as an edge-labelled graph) to a catalog entry.
Matching runs a degree/label prefilter and then an explicit isomorphism
search; with rank capped at 16 this is instant.

Each catalog family carries two numbers used downstream: the number of
positive roots (= the length of the longest element) and the group order.
Entries small enough to enumerate are re-derived by the word oracle in the
test suite; the remaining values (E-family, H4, large B/D) are trusted
catalog data, as noted in the README.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .coxeter import INFINITY, CoxeterMatrix, Mask, bits_of, diagram_components


@dataclass(frozen=True)
class ComponentType:
    """One connected component of a finite-type diagram."""

    label: str            # "A", "B", "D", "E6", "E7", "E8", "F4", "H3", "H4", "I2"
    rank: int
    parameter: int        # dihedral order m for I2, else 0
    mask: Mask
    positive_roots: int
    order: int


@dataclass(frozen=True)
class FiniteTypeInfo:
    """Classification result for one generator subset."""

    finite: bool
    components: tuple
    longest_length: int   # sum of positive-root counts; None when infinite
    order: int            # product of component orders; None when infinite


_INFINITE = FiniteTypeInfo(False, (), None, None)


def _path(labels):
    return tuple((i, i + 1, m) for i, m in enumerate(labels))


def _candidate_diagrams(n):
    """Catalog diagrams at rank n >= 3 as (label, edges, roots, order, parameter)."""
    yield ("A", _path((3,) * (n - 1)), n * (n + 1) // 2, factorial(n + 1), 0)
    yield ("B", _path((3,) * (n - 2) + (4,)), n * n, 2 ** n * factorial(n), 0)
    if n >= 4:
        edges = ((0, 2, 3), (1, 2, 3)) + tuple((i, i + 1, 3) for i in range(2, n - 1))
        yield ("D", edges, n * (n - 1), 2 ** (n - 1) * factorial(n), 0)
    if n == 3:
        yield ("H3", _path((5, 3)), 15, 120, 0)
    if n == 4:
        yield ("F4", _path((3, 4, 3)), 24, 1152, 0)
        yield ("H4", _path((5, 3, 3)), 60, 14400, 0)
    if n == 6:
        yield ("E6", _path((3, 3, 3, 3)) + ((2, 5, 3),), 36, 51840, 0)
    if n == 7:
        yield ("E7", _path((3, 3, 3, 3, 3)) + ((2, 6, 3),), 63, 2903040, 0)
    if n == 8:
        yield ("E8", _path((3, 3, 3, 3, 3, 3)) + ((2, 7, 3),), 120, 696729600, 0)


def _isomorphic(n, edges, cand_edges):
    """Exact isomorphism of two edge-labelled graphs on n vertices.

    ``edges`` maps (a, b) with a < b to the label; ``cand_edges`` is a tuple
    of (a, b, label).  Both graphs here are trees with the same label
    multiset, so the backtracking search is tiny.
    """
    cand = {}
    cadj = [[] for _ in range(n)]
    for a, b, m in cand_edges:
        cand[(min(a, b), max(a, b))] = m
        cadj[a].append((b, m))
        cadj[b].append((a, m))

    adj = [[] for _ in range(n)]
    for (a, b), m in edges.items():
        adj[a].append((b, m))
        adj[b].append((a, m))

    def profile(neighbors):
        return sorted(m for _, m in neighbors)

    cand_profiles = [profile(cadj[v]) for v in range(n)]
    profiles = [profile(adj[v]) for v in range(n)]
    if sorted(cand_profiles) != sorted(profiles):
        return False

    assignment = [None] * n       # candidate vertex -> component vertex
    used = [False] * n

    def place(k):
        if k == n:
            return True
        for v in range(n):
            if used[v] or profiles[v] != cand_profiles[k]:
                continue
            ok = True
            for u, m in cadj[k]:
                if u < k:
                    w = assignment[u]
                    key = (min(v, w), max(v, w))
                    if edges.get(key) != m:
                        ok = False
                        break
            if ok:
                assignment[k] = v
                used[v] = True
                if place(k + 1):
                    return True
                used[v] = False
        return False

    return place(0)


def _match_component(matrix, comp):
    """Match one connected component against the catalog; None if infinite."""
    verts = bits_of(comp)
    n = len(verts)
    if n == 1:
        return ComponentType("A", 1, 0, comp, 1, 2)

    local = {v: i for i, v in enumerate(verts)}
    edges = {}
    for ai, a in enumerate(verts):
        for b in verts[ai + 1:]:
            m = matrix.orders[a][b]
            if m is INFINITY:
                return None
            if m >= 3:
                edges[(local[a], local[b])] = m

    if n == 2:
        m = next(iter(edges.values()))
        if m == 3:
            return ComponentType("A", 2, 0, comp, 3, 6)
        if m == 4:
            return ComponentType("B", 2, 0, comp, 4, 8)
        return ComponentType("I2", 2, m, comp, m, 2 * m)

    if len(edges) != n - 1:        # finite-type diagrams are trees
        return None
    labels = sorted(edges.values())
    for label, cand_edges, roots, order, param in _candidate_diagrams(n):
        if sorted(m for _, _, m in cand_edges) != labels:
            continue
        if _isomorphic(n, edges, cand_edges):
            return ComponentType(label, n, param, comp, roots, order)
    return None


@lru_cache(maxsize=None)
def classify(matrix: CoxeterMatrix, subset: Mask) -> FiniteTypeInfo:
    """Decide finiteness of the parabolic subgroup on ``subset``.

    For a finite subgroup the result carries the component decomposition,
    the longest element length (sum of the components' positive-root counts)
    and the group order (product of component orders).
    """
    if subset & ~matrix.full_mask:
        raise ValueError("subset is not within the generator set")
    if subset == 0:
        return FiniteTypeInfo(True, (), 0, 1)
    matched = []
    for comp in diagram_components(matrix, subset):
        ct = _match_component(matrix, comp)
        if ct is None:
            return _INFINITE
        matched.append(ct)
    length = sum(c.positive_roots for c in matched)
    order = 1
    for c in matched:
        order *= c.order
    return FiniteTypeInfo(True, tuple(matched), length, order)


def is_spherical(matrix: CoxeterMatrix, subset: Mask) -> bool:
    return classify(matrix, subset).finite


@lru_cache(maxsize=None)
def spherical_subsets(matrix: CoxeterMatrix) -> tuple:
    """All subsets generating finite subgroups, in increasing mask order.

    Always contains 0 and every singleton.  Downward closed: any subset of a
    spherical set is spherical.
    """
    return tuple(T for T in range(1 << matrix.rank) if classify(matrix, T).finite)
