from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from qswindows import linalg

ints = st.integers(min_value=-6, max_value=6)


def test_primitive():
    assert linalg.primitive((2, 4, -6)) == (1, 2, -3)
    assert linalg.primitive((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
    assert linalg.primitive((-3,)) == (-3 // 3,)


def test_sign_normalized():
    assert linalg.sign_normalized((0, -2, 1)) == (0, 2, -1)
    assert linalg.sign_normalized((3, -1)) == (3, -1)


def test_solve_and_kernel():
    rows = [(1, 1), (1, -1)]
    assert linalg.solve(rows, (3, 1)) == (2, 1)
    assert linalg.solve([(1, 1), (2, 2)], (1, 3)) is None
    kb = linalg.kernel_basis([(1, 1, 0)])
    assert len(kb) == 2
    for v in kb:
        assert linalg.dot((1, 1, 0), v) == 0


def test_integer_kernel_is_saturated():
    rows = [(2, -2)]
    basis = linalg.integer_kernel_basis(rows)
    assert len(basis) == 1
    assert linalg.sign_normalized(linalg.primitive(basis[0])) == (1, 1)


def test_lattice_generates():
    assert linalg.lattice_generates([(1, 0), (0, 1)], 2)
    assert linalg.lattice_generates([(2, 1), (1, 1)], 2)
    assert not linalg.lattice_generates([(2, 0), (0, 1)], 2)
    assert not linalg.lattice_generates([(1, 1)], 2)


@given(st.lists(st.tuples(ints, ints, ints), min_size=1, max_size=5))
def test_kernel_vectors_annihilate(rows):
    rows = [r for r in rows if any(r)]
    if not rows:
        return
    for v in linalg.kernel_basis(rows):
        for r in rows:
            assert linalg.dot(r, v) == 0


@given(st.tuples(ints, ints), st.tuples(ints, ints), st.tuples(ints, ints))
def test_solve_reproduces_rhs(r1, r2, x):
    rows = [r1, r2]
    rhs = linalg.mat_vec(rows, x)
    sol = linalg.solve(rows, rhs)
    assert sol is not None
    assert linalg.mat_vec(rows, sol) == tuple(rhs)


@given(st.lists(st.tuples(ints, ints), min_size=1, max_size=6))
def test_hnf_transform_is_consistent(rows):
    h, u = linalg.hnf_with_transform(rows)
    assert linalg.mat_mul(u, rows) == tuple(tuple(r) for r in h)
