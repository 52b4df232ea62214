"""Randomized GL(2) coverage: weight sets built from Weyl orbits of small
pairs, with the crossing bijection and partition checked on the first wall.

Orbit unions are always quasi-symmetric and Weyl invariant; reps whose
weights do not span, or whose slab intersection is empty (the functional
can go negative when the weights are too sparse against the roots), are
skipped.
"""
import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from qswindows import windows
from qswindows.errors import InputError
from qswindows.rep import QSRep
from qswindows.root_data import RootDatum
from qswindows.windows import Context

F = Fraction


def orbit_rep(pairs):
    weights = []
    for a, b in pairs:
        for w in {(a, b), (b, a), (-a, -b), (-b, -a)}:
            weights.append(w)
    return QSRep.build(RootDatum.gl(2), weights)


@settings(deadline=None, max_examples=25)
@given(st.sets(
    st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda p: p != (0, 0)),
    min_size=1, max_size=3,
))
def test_first_wall_crossing_properties(pairs):
    try:
        rep = orbit_rep(sorted(pairs))
        ctx = Context(rep)
    except InputError:
        # non-spanning weights, an empty slab intersection, or no generic
        # labels (a zonotope facet containing the invariant line) are all
        # legitimate rejections
        return
    arr = ctx.arrangement
    (family,) = arr.families[:1]
    wall = family.base_offset if family.base_offset != 0 else family.offset_step
    half = family.offset_step / 2
    lo = arr.to_ambient((Fraction(wall) - half,))
    hi = arr.to_ambient((Fraction(wall) + half,))
    crossing = windows.wall_crossing(rep, lo, hi, ctx)
    back = windows.wall_crossing(rep, hi, lo, ctx)
    forward = windows.mu_map(rep, crossing)
    backward = windows.mu_map(rep, back)
    assert all(backward[img] == chi for chi, img in forward.items())
    assert len(crossing.window.chars) == len(crossing.window_prime.chars)
    seen = set(crossing.common)
    for chars in crossing.chars_by_face.values():
        assert not (seen & set(chars))
        seen |= set(chars)
    assert seen == set(crossing.window.chars)
    direction = (1, 1)
    for fd in crossing.faces.values():
        assert all(sum(d * n for d, n in zip(direction, lam)) > 0
                   for lam in fd.inward_normals)
