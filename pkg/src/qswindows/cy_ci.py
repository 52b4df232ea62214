"""Weighted-projective Calabi-Yau complete intersections as a rank-one
two-torus model.

From degrees (a_1..a_n; d_1..d_r) with equal sums, the first torus factor
acts with weights (1, a_1..a_n, -1, -d_1..-d_r); all wall-crossing And
mutation bookkeeping happens in that direction, the second grading is
carried as metadata only.  The half-period shift of the wall pattern is
decided by the parity of alpha = sum(a).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalInconsistencyError
from .mutation import mutation_word
from .rep import QSRep
from .root_data import RootDatum
from .windows import Context, wall_crossing


@dataclass(frozen=True)
class CYModel:
    a: tuple[int, ...]
    d: tuple[int, ...]
    alpha: int
    bigraded_weights: tuple[tuple[int, int], ...]
    g1_rep: QSRep
    arrangement_offset: Fraction

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def r(self) -> int:
        return len(self.d)

    def context(self) -> Context:
        return Context(self.g1_rep)

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "d": list(self.d),
            "alpha": self.alpha,
            "bigraded_weights": [list(w) for w in self.bigraded_weights],
            "arrangement": "Z+1/2" if self.arrangement_offset == Fraction(1, 2) else "Z",
            "window_size": self.alpha + 1,
        }


def build(a, d) -> CYModel:
    a = tuple(int(x) for x in a)
    d = tuple(int(x) for x in d)
    if not a or not d or any(x <= 0 for x in a + d):
        raise InputError("degree lists must be nonempty positive integers")
    alpha = sum(a)
    if sum(d) != alpha:
        raise InputError(
            f"Calabi-Yau condition fails: sum(d)={sum(d)} differs from sum(a)={alpha}")
    bigraded = [(1, 0)] + [(ai, 0) for ai in a] + [(-1, 1)] + [(-dj, 1) for dj in d]
    weights = [(1,)] + [(ai,) for ai in a] + [(-1,)] + [(-dj,) for dj in d]
    g1 = QSRep.build(RootDatum.torus(1), weights)
    model = CYModel(
        a=a, d=d, alpha=alpha,
        bigraded_weights=tuple(bigraded),
        g1_rep=g1,
        arrangement_offset=_wall_offset(g1),
    )
    expected = Fraction(1, 2) if alpha % 2 == 0 else Fraction(0)
    if model.arrangement_offset != expected:
        raise InternalInconsistencyError(
            "computed wall pattern contradicts the parity rule")
    return model


def _wall_offset(g1: QSRep) -> Fraction:
    ctx = Context(g1)
    families = ctx.arrangement.families
    if len(families) != 1 or families[0].offset_step != 1:
        raise InternalInconsistencyError("the rank-one model must have unit wall spacing")
    return families[0].base_offset


def crossing_data(model: CYModel, wall, ctx: Context | None = None) -> tuple[int, int]:
    """(d^+ of the upward face, d^+ of its dual) at a given wall point."""
    ctx = ctx or model.context()
    wall = Fraction(wall)
    fam = ctx.arrangement.families[0]
    if (wall - fam.base_offset) % fam.offset_step != 0:
        raise InputError(f"{wall} is not a wall of this model")
    half = fam.offset_step / 2
    crossing = wall_crossing(model.g1_rep, (wall - half,), (wall + half,), ctx)
    (fd,) = crossing.faces.values()
    return fd.d_plus, fd.d_minus


def spherical_twist_word(model: CYModel, m: int, ctx: Context | None = None) -> dict:
    """The down-then-up loop at delta = m + alpha/2 + 1 around the wall below.

    Its two legs have lengths r and n, total n + r, which is the mutation
    period of the wall; the pivot is the module of the shared window.
    """
    ctx = ctx or model.context()
    delta = Fraction(m) + Fraction(model.alpha, 2) + 1
    arr = ctx.arrangement
    if arr.on_wall((delta,)):
        raise InternalInconsistencyError("twist base point unexpectedly on a wall")
    down = mutation_word(model.g1_rep, (delta,), (delta - 1,), ctx)
    up = mutation_word(model.g1_rep, (delta - 1,), (delta,), ctx)
    total = down.total + up.total
    if total != model.n + model.r:
        raise InternalInconsistencyError("twist word length must equal n + r")
    return {
        "delta": delta,
        "convention": "down-then-up",
        "down": down,
        "up": up,
        "length": total,
        "pivot": down.pivot,
    }
