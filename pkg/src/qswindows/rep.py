"""Quasi-symmetric representation data: the weight zonotope, the window
polytope cut out by the one-parameter-subgroup slabs, and validity flags.

Weight indices carry identity (values may repeat); all index bookkeeping
downstream refers to positions in ``weights``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import geometry, linalg
from .errors import InputError, InternalInconsistencyError
from .geometry import HalfSpace, Polytope
from .linalg import IntVec
from .root_data import RootDatum, Weight


class Ternary(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def check_quasi_symmetric(weights) -> bool:
    """Whether the weights sum to zero along every line through the origin."""
    lines: dict[IntVec, list] = {}
    for b in weights:
        if linalg.is_zero(b):
            continue
        lines.setdefault(linalg.sign_normalized(linalg.primitive(b)), []).append(b)
    return all(linalg.is_zero(tuple(sum(c) for c in zip(*group))) for group in lines.values())


def is_symplectic(weights) -> bool:
    """Whether the weight multiset is invariant under negation."""
    from collections import Counter
    tally = Counter(tuple(b) for b in weights)
    return tally == Counter(tuple(linalg.neg(b)) for b in weights)


@dataclass(frozen=True)
class QSRep:
    root_datum: RootDatum
    weights: tuple[Weight, ...]
    sigma: Polytope
    nabla: Polytope
    spans: bool
    quasi_symmetric: bool
    generic: Ternary
    symplectic: bool

    @classmethod
    def build(cls, root_datum: RootDatum, weights, assert_generic: bool | None = None) -> "QSRep":
        weights = tuple(tuple(int(x) for x in b) for b in weights)
        if not weights:
            raise InputError("a representation needs at least one weight")
        if any(len(b) != root_datum.rank for b in weights):
            raise InputError("weight length does not match the lattice rank")
        qs = check_quasi_symmetric(weights)
        spans = linalg.rank(weights) == root_datum.rank
        if not qs:
            raise InputError("weights are not quasi-symmetric")
        if not spans:
            raise InputError("weights do not span the weight lattice over the rationals")
        _check_w_invariance(root_datum, weights)
        sigma = geometry.zonotope(weights)
        nabla = build_nabla(root_datum, weights, sigma)
        generic = check_generic(root_datum, weights)
        if assert_generic is not None and generic is Ternary.UNKNOWN:
            generic = Ternary.YES if assert_generic else Ternary.NO
        return cls(
            root_datum=root_datum,
            weights=weights,
            sigma=sigma,
            nabla=nabla,
            spans=spans,
            quasi_symmetric=qs,
            generic=generic,
            symplectic=is_symplectic(weights),
        )

    @classmethod
    def from_dict(cls, data: dict) -> "QSRep":
        try:
            datum = RootDatum.from_dict(data["root_datum"])
            weights = data["weights"]
        except KeyError as exc:
            raise InputError(f"rep input missing {exc}") from exc
        return cls.build(datum, weights, assert_generic=data.get("assert_generic"))

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def rank(self) -> int:
        return self.root_datum.rank

    def half_sigma_at(self, delta) -> Polytope:
        return geometry.zonotope(self.weights, Fraction(1, 2)).translate(delta)

    def nabla_at(self, delta) -> Polytope:
        return self.nabla.translate(delta)

    def dominant_halfspaces(self) -> tuple[HalfSpace, ...]:
        """Dot-product half-spaces cutting out the dominant cone."""
        out = []
        for a in self.root_datum.positive_roots:
            converted = linalg.mat_vec(self.root_datum.pairing, a)
            out.append(HalfSpace(linalg.primitive(converted), Fraction(0)))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "weights": [list(b) for b in self.weights],
            "quasi_symmetric": self.quasi_symmetric,
            "spans": self.spans,
            "generic": self.generic.value,
            "symplectic": self.symplectic,
            "sigma": self.sigma.to_json(),
            "nabla": self.nabla.to_json(),
        }


def eta(root_datum: RootDatum, weights, lam) -> Fraction:
    """Weighted count of the negative-side weights minus the root correction.

    For a one-parameter subgroup lam, sums <-b, lam> over weights pairing
    negatively with lam and subtracts the same sum over the roots.
    """
    if linalg.is_zero(lam):
        raise InputError("eta is undefined at lambda = 0")
    pair = root_datum.pair
    weight_part = sum(max(0, -pair(b, lam)) for b in weights)
    root_part = sum(max(0, pair(a, lam)) for a in root_datum.roots)
    return Fraction(weight_part - root_part)


def eta_of_rep(rep: QSRep, lam) -> Fraction:
    return eta(rep.root_datum, rep.weights, lam)


def slab_candidates(root_datum: RootDatum, weights) -> list[IntVec]:
    """Primitive normals of hyperplanes spanned by (n-1)-subsets of wt(X) + roots.

    These are the only directions in which the slab intersection can have a
    facet; correctness is enforced afterwards by the dominant-slice
    cross-check.
    """
    n = root_datum.rank
    vectors = sorted({tuple(b) for b in weights if not linalg.is_zero(b)}
                     | set(root_datum.roots))
    pairing = root_datum.pairing
    found = set()
    if n == 1:
        return [(1,)]
    for combo in itertools.combinations(vectors, n - 1):
        rows = [linalg.mat_vec(pairing, v) for v in combo]
        if linalg.rank(rows) < n - 1:
            continue
        kernel = linalg.kernel_basis([list(r) for r in rows])
        if len(kernel) != 1:
            continue
        found.add(linalg.sign_normalized(linalg.primitive(kernel[0])))
    return sorted(found)


def build_nabla(root_datum: RootDatum, weights, sigma: Polytope) -> Polytope:
    """Intersect the slabs |<chi, lam>| <= eta_lam / 2 over candidate normals.

    The finite candidate set is verified against the dominant-slice identity
    (the dominant part must equal that of -rho + half the zonotope) and
    against Weyl invariance; any mismatch raises InternalInconsistencyError.
    """
    halfspaces = []
    pairing = root_datum.pairing
    for lam in slab_candidates(root_datum, weights):
        bound = eta(root_datum, weights, lam) / 2
        paired = linalg.mat_vec(pairing, lam)
        converted = linalg.primitive(paired)
        j = next(i for i, x in enumerate(converted) if x != 0)
        rescale = Fraction(converted[j]) / Fraction(paired[j])
        halfspaces.append(HalfSpace(converted, -bound * rescale))
        halfspaces.append(HalfSpace(linalg.primitive(linalg.neg(converted)), -bound * rescale))
    nabla = geometry.from_halfspaces(halfspaces, center=(Fraction(0),) * root_datum.rank)
    _cross_check_nabla(root_datum, weights, sigma, nabla)
    return nabla


def _cross_check_nabla(root_datum, weights, sigma, nabla) -> None:
    dominant = []
    for a in root_datum.positive_roots:
        converted = linalg.mat_vec(root_datum.pairing, a)
        dominant.append(HalfSpace(linalg.primitive(converted), Fraction(0)))
    half_sigma = geometry.zonotope(weights, Fraction(1, 2))
    shifted = half_sigma.translate(linalg.neg(root_datum.rho))
    slice_nabla = geometry.intersect(nabla, dominant)
    slice_sigma = geometry.intersect(shifted, dominant)
    if not geometry.polytopes_equal(slice_nabla, slice_sigma):
        raise InternalInconsistencyError(
            "dominant slice of the window polytope does not match the shifted zonotope")
    for w in root_datum.weyl_elements:
        for v in nabla.vertices:
            if not nabla.contains(root_datum.apply(w, v)):
                raise InternalInconsistencyError("window polytope is not Weyl invariant")
    if root_datum.is_torus:
        if not geometry.polytopes_equal(nabla, half_sigma):
            raise InternalInconsistencyError(
                "torus window polytope must be half the zonotope")


def _check_w_invariance(root_datum, weights) -> None:
    from collections import Counter
    tally = Counter(weights)
    for w in root_datum.simple_reflections:
        if Counter(tuple(root_datum.apply(w, b)) for b in weights) != tally:
            raise InputError("weight multiset is not Weyl invariant")


def check_generic(root_datum: RootDatum, weights) -> Ternary:
    """Genericity in the torus case: dropping any one weight must still
    generate the lattice and keep the origin interior to the hull.

    No combinatorial criterion is implemented for nonabelian groups; those
    report UNKNOWN (overridable by an explicit assertion on input).
    """
    if not root_datum.is_torus:
        return Ternary.UNKNOWN
    n = root_datum.rank
    candidates = _direction_candidates(weights, n)
    for i in range(len(weights)):
        rest = [b for j, b in enumerate(weights) if j != i]
        if not linalg.lattice_generates(rest, n):
            return Ternary.NO
        if not _zero_in_interior(rest, n, candidates):
            return Ternary.NO
    return Ternary.YES


def _direction_candidates(vectors, n) -> list[IntVec]:
    """Normals of hyperplanes spanned by (n-1)-subsets; every facet normal
    of any sub-multiset's cone appears here."""
    nonzero = sorted({tuple(v) for v in vectors if not linalg.is_zero(v)})
    if n == 1:
        return [(1,)]
    out = set()
    for combo in itertools.combinations(nonzero, n - 1):
        rows = [list(v) for v in combo]
        if linalg.rank(rows) < n - 1:
            continue
        kernel = linalg.kernel_basis(rows)
        if len(kernel) == 1:
            out.add(linalg.sign_normalized(linalg.primitive(kernel[0])))
    return sorted(out)


def _zero_in_interior(vectors, n, candidates) -> bool:
    """0 is interior to conv(vectors) iff every candidate direction sees
    vectors on both sides (strictly)."""
    nonzero = [tuple(v) for v in vectors if not linalg.is_zero(v)]
    if linalg.rank(nonzero) < n:
        return False
    for lam in candidates:
        values = [linalg.dot(v, lam) for v in nonzero]
        if max(values) <= 0 or min(values) >= 0:
            return False
    return True
