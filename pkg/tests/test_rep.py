from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qswindows import catalog, geometry, linalg, rep
from qswindows.errors import InputError
from qswindows.rep import QSRep, Ternary
from qswindows.root_data import RootDatum

GL2_NABLA_VERTICES = {
    (Fraction(5, 2), Fraction(5, 2)), (Fraction(5, 2), Fraction(1, 2)),
    (Fraction(3, 2), Fraction(-3, 2)), (Fraction(-1, 2), Fraction(-5, 2)),
    (Fraction(-5, 2), Fraction(-5, 2)), (Fraction(-5, 2), Fraction(-1, 2)),
    (Fraction(-3, 2), Fraction(3, 2)), (Fraction(1, 2), Fraction(5, 2)),
}


def test_check_quasi_symmetric_examples():
    assert rep.check_quasi_symmetric([(1,), (1,), (-1,), (-1,)])
    assert not rep.check_quasi_symmetric([(1,), (1,), (-1,)])
    assert rep.check_quasi_symmetric(catalog.GL2_WEIGHTS)
    # zero-sum along a line without symmetric pairing still qualifies
    assert rep.check_quasi_symmetric([(2,), (-1,), (-1,)])


def test_eta_examples(torus22, gl2rep):
    assert rep.eta_of_rep(torus22, (1,)) == 2
    assert rep.eta_of_rep(torus22, (-1,)) == 2
    assert rep.eta_of_rep(gl2rep, (1, 1)) == 12
    with pytest.raises(InputError):
        rep.eta_of_rep(torus22, (0,))


def test_nabla_intervals(torus22, torus33):
    assert sorted(torus22.nabla.vertices) == [(-1,), (1,)]
    assert sorted(torus33.nabla.vertices) == [(Fraction(-3, 2),), (Fraction(3, 2),)]


def test_torus_nabla_is_half_sigma(small_corpus):
    for r in small_corpus[:6]:
        half = r.sigma.scale(Fraction(1, 2))
        assert geometry.polytopes_equal(r.nabla, half)


def test_gl2_nabla_octagon(gl2rep):
    assert set(map(tuple, gl2rep.nabla.vertices)) == GL2_NABLA_VERTICES


def test_gl2_dominant_slice_identity(gl2rep):
    datum = gl2rep.root_datum
    cone = gl2rep.dominant_halfspaces()
    slice_nabla = geometry.intersect(gl2rep.nabla, cone)
    shifted = gl2rep.sigma.scale(Fraction(1, 2)).translate(linalg.neg(datum.rho))
    slice_sigma = geometry.intersect(shifted, cone)
    assert geometry.polytopes_equal(slice_nabla, slice_sigma)
    for w in datum.weyl_elements:
        for v in gl2rep.nabla.vertices:
            assert gl2rep.nabla.contains(datum.apply(w, v))


def test_generic_examples():
    t1 = RootDatum.torus(1)
    assert rep.check_generic(t1, [(1,), (1,), (-1,), (-1,)]) is Ternary.YES
    assert rep.check_generic(t1, [(1,), (-1,)]) is Ternary.NO
    assert rep.check_generic(RootDatum.gl(2), catalog.GL2_WEIGHTS) is Ternary.UNKNOWN


def test_generic_assertion_flag():
    data = {
        "root_datum": {"builtin": "gl", "n": 2},
        "weights": [list(w) for w in catalog.GL2_WEIGHTS],
        "assert_generic": True,
    }
    assert QSRep.from_dict(data).generic is Ternary.YES


def test_symplectic_examples(gl2rep):
    assert rep.is_symplectic([(1,), (-1,)])
    assert not rep.is_symplectic([(1,), (1,), (-1,)])
    assert gl2rep.symplectic


def test_invalid_reps_rejected():
    t1 = RootDatum.torus(1)
    with pytest.raises(InputError):
        QSRep.build(t1, [(1,), (1,), (-1,)])
    with pytest.raises(InputError):
        QSRep.build(RootDatum.torus(2), [(1, 0), (-1, 0)])


@settings(deadline=None, max_examples=20)
@given(st.integers(0, 10_000))
def test_eta_symmetry_on_random_reps(seed):
    import random
    r = catalog.random_torus_rep(random.Random(seed), rank=seed % 2 + 1)
    datum = r.root_datum
    for lam in [(1,) * r.rank] + [linalg.primitive(b) for b in r.weights]:
        plus = sum(max(0, datum.pair(b, lam)) for b in r.weights)
        minus = sum(max(0, -datum.pair(b, lam)) for b in r.weights)
        assert plus == minus


def test_weight_indices_carry_identity(torus22):
    # repeated values stay distinguishable by index
    assert torus22.weights == ((1,), (1,), (-1,), (-1,))
    assert len(torus22.weights) == 4
