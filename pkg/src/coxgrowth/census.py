"""Simplex censuses of the chamber systems attached to a Coxeter system.

Three combinatorial models share one piece of coset bookkeeping: a simplex is
a coset w * W_T together with kind-specific type data, and it is recorded by
the canonical word of the coset's unique shortest element.

* ``"coxeter"`` -- the chamber is a full simplex; simplices are cosets
  w * W_T over ALL proper subsets T, with dimension |S| - |T| - 1.
* ``"davis"``  -- the chamber is spanned by barycentres of spherical-type
  faces; a simplex is a coset w * W_{T0} together with a strict chain
  T0 < T1 < ... < Tk of spherical subsets, with dimension k and type the
  chain minimum T0.  Only defined for infinite groups (a finite group's
  chamber would include the missing top face).
* ``"tits"``   -- spherical-type faces only; simplices are cosets w * W_T
  over spherical proper T, weighted by the LONGEST chamber length.

The length value of a record is length(shortest representative) for coxeter
and davis, and length(shortest) + longest_length(T) for tits (the longest
element of the coset).  ``euler_series`` collects sum (-1)^dim t^length over
all records; the per-type slices have exact closed forms in terms of the
growth table, which ``euler_series_by_type`` attaches for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .classify import classify, spherical_subsets
from .coxeter import CoxeterMatrix, Mask, format_subset, submasks
from .growth import growth_table, nerve_coefficient
from .oracle import WordOracle
from .ratfunc import RatFunc, series_expand, substitute_inverse

KINDS = ("coxeter", "davis", "tits")


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


@dataclass(frozen=True)
class SimplexRecord:
    kind: str
    rep: tuple            # canonical word of the coset's shortest element
    type_mask: Mask       # T for coxeter/tits; the chain minimum for davis
    chain: tuple          # davis only: the full chain of subset masks, else None
    dim: int
    length_value: int


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


@lru_cache(maxsize=None)
def spherical_chains(matrix: CoxeterMatrix) -> tuple:
    """All strict chains T0 < T1 < ... < Tk of spherical subsets, as mask tuples."""
    sph = spherical_subsets(matrix)

    @lru_cache(maxsize=None)
    def chains_from(t):
        out = [(t,)]
        for u in sph:
            if u != t and u & t == t:
                out.extend((t,) + c for c in chains_from(u))
        return tuple(out)

    all_chains = []
    for t in sph:
        all_chains.extend(chains_from(t))
    return tuple(all_chains)


def valid_type_masks(matrix: CoxeterMatrix, kind: str) -> list:
    """The subset types a record of this kind can carry."""
    _check_kind(kind)
    full = matrix.full_mask
    if kind == "coxeter":
        return [t for t in range(full + 1) if t != full]
    if kind == "davis":
        return list(spherical_subsets(matrix))
    return [t for t in spherical_subsets(matrix) if t != full]


def enumerate_simplices(matrix: CoxeterMatrix, kind: str, horizon: int = None,
                        oracle: WordOracle = None) -> list:
    """All simplex records with length value <= horizon, sorted deterministically.

    For a finite group with kind "coxeter" or "tits" the horizon may be
    omitted and the whole (finite) complex is enumerated.  Kind "davis"
    requires an infinite group.  A coset is recorded by its shortest element
    u, recognized by its descent set missing T entirely.
    """
    _check_kind(kind)
    info = classify(matrix, matrix.full_mask)
    if kind == "davis" and info.finite:
        raise ValueError("the davis chamber model is only defined for infinite groups")
    if horizon is None:
        if not info.finite:
            raise ValueError("a horizon is required for an infinite group")
        horizon = info.longest_length
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    if oracle is None:
        oracle = WordOracle(matrix)

    full = matrix.full_mask
    rank = matrix.rank
    records = []

    if kind == "tits":
        for t in valid_type_masks(matrix, "tits"):
            top = classify(matrix, t).longest_length
            dim = rank - t.bit_count() - 1
            for k in range(horizon - top + 1):
                for w in oracle.sphere(k):
                    if oracle.descent_mask(w) & t == 0:
                        records.append(SimplexRecord("tits", w, t, None, dim, k + top))
    elif kind == "coxeter":
        for k in range(horizon + 1):
            for w in oracle.sphere(k):
                d = oracle.descent_mask(w)
                for t in submasks(full, proper=True):
                    if d & t == 0:
                        records.append(SimplexRecord(
                            "coxeter", w, t, None, rank - t.bit_count() - 1, k))
    else:
        by_start = {}
        for chain in spherical_chains(matrix):
            by_start.setdefault(chain[0], []).append(chain)
        for k in range(horizon + 1):
            for w in oracle.sphere(k):
                d = oracle.descent_mask(w)
                for t0, chains in by_start.items():
                    if d & t0 == 0:
                        for chain in chains:
                            records.append(SimplexRecord(
                                "davis", w, t0, chain, len(chain) - 1, k))

    records.sort(key=lambda r: (r.length_value, r.type_mask, r.chain or (), r.rep))
    return records


def euler_series(matrix: CoxeterMatrix, kind: str, horizon: int = None,
                 oracle: WordOracle = None, records=None) -> list:
    """Coefficients of sum (-1)^dim t^length over the census, up to the horizon."""
    if records is None:
        records = enumerate_simplices(matrix, kind, horizon, oracle)
    if horizon is None:
        horizon = classify(matrix, matrix.full_mask).longest_length
    coeffs = [0] * (horizon + 1)
    for rec in records:
        coeffs[rec.length_value] += _sign(rec.dim)
    return coeffs


@dataclass(frozen=True)
class TypeCensus:
    """One type's census slice next to its closed form."""

    kind: str
    type_mask: Mask
    census: tuple
    closed_form: RatFunc
    closed_series: tuple

    @property
    def matches(self) -> bool:
        return self.census == self.closed_series


def euler_series_by_type(matrix: CoxeterMatrix, kind: str, type_mask: Mask,
                         horizon: int, oracle: WordOracle = None) -> TypeCensus:
    """Census restricted to one type, with the exact closed form attached.

    Closed forms (W the full series, W_T the subset series, S the generators):

        coxeter:  (-1)^{|S|-|T|-1} * W(t) / W_T(t)
        davis:    (-1)^{|T|} chi_T * W(t) / W_T(t)
        tits:     (-1)^{|S|-|T|-1} * W(t) / W_T(1/t)
    """
    _check_kind(kind)
    if type_mask not in valid_type_masks(matrix, kind):
        raise ValueError(f"{format_subset(type_mask)} is not a valid {kind} type")
    records = enumerate_simplices(matrix, kind, horizon, oracle)
    if horizon is None:
        horizon = classify(matrix, matrix.full_mask).longest_length
    coeffs = [0] * (horizon + 1)
    for rec in records:
        if rec.type_mask == type_mask:
            coeffs[rec.length_value] += _sign(rec.dim)

    table = growth_table(matrix)
    w = table.series()
    wt = table.series(type_mask)
    rank = matrix.rank
    size = type_mask.bit_count()
    if kind == "coxeter":
        closed = _sign(rank - size - 1) * w / wt
    elif kind == "davis":
        closed = nerve_coefficient(matrix, type_mask) * _sign(size) * w / wt
    else:
        closed = _sign(rank - size - 1) * w / substitute_inverse(wt)
    return TypeCensus(kind, type_mask, tuple(coeffs), closed,
                      tuple(series_expand(closed, horizon)))


# ---------------------------------------------------------------------------
# face-length criterion and local sums
# ---------------------------------------------------------------------------

@dataclass
class FaceLengthReport:
    kind: str
    horizon: int
    chambers_checked: int
    simplices_checked: int
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def check_face_length_drop(matrix: CoxeterMatrix, kind: str, horizon: int = None,
                           oracle: WordOracle = None) -> FaceLengthReport:
    """Check, for every chamber w in the ball, and every face of that chamber:

        length(face) < length(w)   <=>   type(face) meets the descent set of w

    where length(face) is the length of the shortest chamber containing the
    face, computed independently as the minimum over the face's coset piece
    inside the ball (reachable by right multiplications, never through
    descent-set reasoning).
    """
    if kind not in ("coxeter", "davis"):
        raise ValueError("the face-length criterion applies to kinds 'coxeter' and 'davis'")
    info = classify(matrix, matrix.full_mask)
    if kind == "davis" and info.finite:
        raise ValueError("the davis chamber model is only defined for infinite groups")
    if horizon is None:
        if not info.finite:
            raise ValueError("a horizon is required for an infinite group")
        horizon = info.longest_length
    if oracle is None:
        oracle = WordOracle(matrix)
    from .oracle import coset_components

    ball = oracle.ball(horizon)
    if kind == "coxeter":
        weighted_types = [(t, 1) for t in valid_type_masks(matrix, "coxeter")]
    else:
        chain_count = {}
        for chain in spherical_chains(matrix):
            chain_count[chain[0]] = chain_count.get(chain[0], 0) + 1
        weighted_types = sorted(chain_count.items())

    report = FaceLengthReport(kind=kind, horizon=horizon,
                              chambers_checked=len(ball), simplices_checked=0)
    for t, weight in weighted_types:
        comp = coset_components(oracle, ball, t)
        comp_min = {}
        for w, cid in comp.items():
            cur = comp_min.get(cid)
            if cur is None or len(w) < cur:
                comp_min[cid] = len(w)
        for w in ball:
            face_length = comp_min[comp[w]]
            drops = face_length < len(w)
            meets = oracle.descent_mask(w) & t != 0
            report.simplices_checked += weight
            if drops != meets:
                report.counterexamples.append(
                    f"chamber {w}, type {format_subset(t)}: "
                    f"face length {face_length} vs chamber length {len(w)}, "
                    f"descent intersection {'nonempty' if meets else 'empty'}")
    return report


def panel_union_euler(matrix: CoxeterMatrix, kind: str, subset: Mask) -> int:
    """Euler characteristic of the union of panels Y_s, s in ``subset``,
    inside one chamber of the given kind.

    A face belongs to the union exactly when its type meets ``subset``.  For
    kind "davis" every subset of ``subset`` must be spherical (equivalently,
    ``subset`` itself is), which holds for every descent set.
    """
    if kind not in ("coxeter", "davis"):
        raise ValueError("panel unions live in the chamber models 'coxeter' and 'davis'")
    full = matrix.full_mask
    if subset & ~full:
        raise ValueError("subset is not within the generator set")
    rank = matrix.rank
    if kind == "coxeter":
        return sum(_sign(rank - t.bit_count() - 1)
                   for t in submasks(full, proper=True) if t & subset)
    if classify(matrix, full).finite:
        raise ValueError("the davis chamber model is only defined for infinite groups")
    if not classify(matrix, subset).finite:
        raise ValueError("davis panel unions need every subset of the set to be spherical")
    return sum(_sign(len(chain) - 1)
               for chain in spherical_chains(matrix) if chain[0] & subset)


@dataclass
class LocalSumReport:
    horizon: int
    chambers_checked: int
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def check_local_alternating_sum(matrix: CoxeterMatrix, horizon: int = None,
                                oracle: WordOracle = None) -> LocalSumReport:
    """Per chamber w, sum (-1)^{|S|-|T|-1} over all T inside the descent set.

    The direct sum must be 0 for every w except the identity, where it is
    (-1)^{|S|-1}: the binomial alternating sum collapses unless the descent
    set is empty.
    """
    if horizon is None:
        info = classify(matrix, matrix.full_mask)
        if not info.finite:
            raise ValueError("a horizon is required for an infinite group")
        horizon = info.longest_length
    if oracle is None:
        oracle = WordOracle(matrix)
    rank = matrix.rank
    report = LocalSumReport(horizon=horizon, chambers_checked=0)
    for w, length in oracle.ball(horizon).items():
        report.chambers_checked += 1
        value = sum(_sign(rank - t.bit_count() - 1)
                    for t in submasks(oracle.descent_mask(w)))
        expected = _sign(rank - 1) if length == 0 else 0
        if value != expected:
            report.counterexamples.append(
                f"chamber {w}: local sum {value}, expected {expected}")
    return report
