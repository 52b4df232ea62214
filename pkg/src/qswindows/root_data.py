"""Root data: weight lattice, roots, Weyl group, and the dotted action.

A root datum is given explicitly by a W-invariant pairing matrix, the root
set, and the simple reflections; the Weyl group is enumerated from the
generators (desk scale, hard cap on the group order).  Builtin constructors
cover tori and GL(n).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InputError
from .linalg import IntVec, Vec

WEYL_SIZE_CAP = 10_000

Weight = IntVec
WeylMatrix = tuple[IntVec, ...]


class _Singular:
    """Sentinel for weights whose shifted Weyl orbit hits a wall."""

    def __repr__(self) -> str:
        return "Singular"

    def __bool__(self) -> bool:
        return False


SINGULAR = _Singular()


@dataclass(frozen=True)
class DominantRep:
    """Outcome of moving rho+chi into the open dominant cone."""

    w: WeylMatrix
    weight: Weight
    length: int


@dataclass(frozen=True)
class RootDatum:
    rank: int
    pairing: tuple[tuple[Fraction, ...], ...]
    roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    simple_reflections: tuple[WeylMatrix, ...]
    weyl_elements: tuple[WeylMatrix, ...]
    lengths: dict
    w0: WeylMatrix
    two_rho: Weight
    invariant_basis: tuple[Weight, ...]

    # -- construction ------------------------------------------------------

    @classmethod
    def torus(cls, rank: int) -> "RootDatum":
        if rank < 1:
            raise InputError("torus rank must be positive")
        return cls.from_data(rank, linalg.identity_matrix(rank), [], [])

    @classmethod
    def gl(cls, n: int) -> "RootDatum":
        if n < 1:
            raise InputError("gl rank must be positive")
        roots = []
        for i in range(n):
            for j in range(n):
                if i != j:
                    roots.append(tuple(1 if k == i else -1 if k == j else 0 for k in range(n)))
        simples = []
        for i in range(n - 1):
            perm = list(range(n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            simples.append(tuple(tuple(1 if perm[r] == c else 0 for c in range(n)) for r in range(n)))
        return cls.from_data(n, linalg.identity_matrix(n), roots, simples)

    @classmethod
    def from_data(cls, rank, pairing, roots, simple_reflections, positive_roots=None,
                  size_cap: int = WEYL_SIZE_CAP) -> "RootDatum":
        pairing = tuple(tuple(Fraction(x) for x in row) for row in pairing)
        roots = tuple(sorted({tuple(int(x) for x in r) for r in roots}))
        simples = tuple(tuple(tuple(int(x) for x in row) for row in s) for s in simple_reflections)
        elements, lengths = _enumerate_weyl(rank, simples, size_cap)
        w0 = max(elements, key=lambda w: (lengths[w], w))
        if positive_roots is None:
            positive = _derive_positive_roots(rank, roots, simples)
        else:
            positive = tuple(sorted({tuple(int(x) for x in r) for r in positive_roots}))
        two_rho = tuple(sum(col) for col in zip(*positive)) if positive else (0,) * rank
        inv = _invariant_lattice_basis(rank, elements)
        datum = cls(
            rank=rank,
            pairing=pairing,
            roots=roots,
            positive_roots=positive,
            simple_reflections=simples,
            weyl_elements=elements,
            lengths=lengths,
            w0=w0,
            two_rho=two_rho,
            invariant_basis=inv,
        )
        datum._validate()
        return datum

    @classmethod
    def from_dict(cls, data: dict) -> "RootDatum":
        builtin = data.get("builtin")
        if builtin == "torus":
            return cls.torus(int(data["rank"]))
        if builtin == "gl":
            return cls.gl(int(data["n"]))
        if builtin is not None:
            raise InputError(f"unknown builtin root datum {builtin!r}")
        try:
            rank = int(data["rank"])
            pairing = _parse_matrix(data["pairing"], rank)
            roots = [tuple(int(x) for x in r) for r in data.get("roots", [])]
            simples = [tuple(tuple(int(x) for x in row) for row in m) for m in data.get("simple_reflections", [])]
            positive = data.get("positive_roots")
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad root datum block: {exc}") from exc
        return cls.from_data(rank, pairing, roots, simples, positive_roots=positive)

    def _validate(self) -> None:
        n = self.rank
        root_set = set(self.roots)
        if {linalg.neg(r) for r in root_set} != root_set:
            raise InputError("root set is not symmetric under negation")
        pos = set(self.positive_roots)
        if pos | {linalg.neg(r) for r in pos} != root_set or pos & {linalg.neg(r) for r in pos}:
            raise InputError("positive roots do not split the root set")
        for w in self.weyl_elements:
            if {self.apply(w, r) for r in root_set} != root_set:
                raise InputError("a Weyl element does not permute the roots")
        basis = linalg.identity_matrix(n)
        for s in self.simple_reflections:
            for x in basis:
                for y in basis:
                    if self.pair(self.apply(s, x), self.apply(s, y)) != self.pair(x, y):
                        raise InputError("pairing is not Weyl invariant")
        if self.lengths[linalg.identity_matrix(n)] != 0:
            raise InputError("identity length must be 0")
        if linalg.mat_mul(self.w0, self.w0) != linalg.identity_matrix(n):
            raise InputError("longest element is not an involution")

    # -- basic operations --------------------------------------------------

    def pair(self, x, y) -> Fraction:
        return linalg.dot(x, linalg.mat_vec(self.pairing, y))

    def apply(self, w: WeylMatrix, chi):
        return linalg.mat_vec(w, chi)

    def is_dominant(self, chi) -> bool:
        return all(self.pair(chi, a) >= 0 for a in self.positive_roots)

    def is_strictly_dominant(self, x) -> bool:
        return all(self.pair(x, a) > 0 for a in self.positive_roots)

    @property
    def rho(self) -> Vec:
        return tuple(Fraction(x, 2) for x in self.two_rho)

    def length(self, w: WeylMatrix) -> int:
        return self.lengths[w]

    def dotted(self, w: WeylMatrix, chi) -> Weight:
        """w * chi = w(rho + chi) - rho; lands back in the weight lattice."""
        shifted = self.apply(w, linalg.add(chi, self.rho))
        out = [Fraction(x) for x in linalg.sub(shifted, self.rho)]
        if any(x.denominator != 1 for x in out):
            raise InputError("dotted action applied to a non-lattice weight")
        return tuple(int(x) for x in out)

    def dominant_representative(self, chi):
        """Unique (w, chi+, l(w)) with w(rho+chi) strictly dominant, or SINGULAR.

        rho+chi is singular exactly when it pairs to zero with some root,
        i.e. when a reflection fixes it.
        """
        shifted = linalg.add(chi, self.rho)
        if any(self.pair(shifted, a) == 0 for a in self.roots):
            return SINGULAR
        for w in self.weyl_elements:
            if self.is_strictly_dominant(self.apply(w, shifted)):
                return DominantRep(w=w, weight=self.dotted(w, chi), length=self.lengths[w])
        raise InputError("no Weyl element moves the weight into the dominant cone")

    def is_invariant_vector(self, v) -> bool:
        return all(self.apply(w, v) == tuple(v) for w in self.simple_reflections)

    @property
    def is_torus(self) -> bool:
        return not self.roots


def _enumerate_weyl(rank, simples, size_cap=WEYL_SIZE_CAP):
    identity = linalg.identity_matrix(rank)
    lengths = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for s in simples:
                ws = linalg.mat_mul(s, w)
                if ws not in lengths:
                    lengths[ws] = lengths[w] + 1
                    nxt.append(ws)
        frontier = nxt
        if len(lengths) > size_cap:
            raise InputError(f"Weyl group exceeds the size cap {size_cap}")
    elements = tuple(sorted(lengths, key=lambda w: (lengths[w], w)))
    return elements, lengths


def _derive_positive_roots(rank, roots, simples):
    """Split the roots using the simple-root basis.

    Each simple reflection negates a unique root pair; a root is positive
    when its coordinates in the chosen simple roots are all nonnegative.
    """
    if not roots:
        return ()
    if not simples:
        raise InputError("nonempty root set needs simple reflections")
    simple_roots = []
    for s in simples:
        negated = sorted(r for r in roots if linalg.mat_vec(s, r) == linalg.neg(r))
        if not negated:
            raise InputError("a simple reflection negates no root")
        simple_roots.append(negated[-1])
    positive = []
    for r in roots:
        coeffs = linalg.solve(linalg.transpose(simple_roots), r)
        if coeffs is None:
            raise InputError("a root lies outside the span of the simple roots")
        if all(c >= 0 for c in coeffs):
            positive.append(r)
    if 2 * len(positive) != len(roots):
        raise InputError("positive-root derivation did not split the roots in half")
    return tuple(sorted(positive))


def _invariant_lattice_basis(rank, elements):
    """Z-basis of the fixed sublattice of all Weyl elements."""
    rows = []
    identity = linalg.identity_matrix(rank)
    for w in elements:
        if w == identity:
            continue
        for r in range(rank):
            rows.append(tuple(w[r][c] - identity[r][c] for c in range(rank)))
    if not rows:
        return tuple(identity)
    basis = linalg.integer_kernel_basis(rows)
    return tuple(sorted(linalg.sign_normalized(b) for b in basis))


def _parse_matrix(entries, rank):
    if isinstance(entries[0], (list, tuple)):
        rows = [[Fraction(str(x)) for x in row] for row in entries]
    else:
        flat = [Fraction(str(x)) for x in entries]
        if len(flat) != rank * rank:
            raise InputError("row-major pairing has the wrong length")
        rows = [flat[i * rank:(i + 1) * rank] for i in range(rank)]
    return rows


def parse_weight(xs) -> Weight:
    return tuple(int(x) for x in xs)
