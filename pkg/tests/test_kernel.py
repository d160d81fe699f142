from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mocklie.kernel import (
    LCG,
    GradedDimension,
    GradedLinearMap,
    InconsistentSystem,
    Matrix,
    allowed_positions,
    block_layout,
    in_span,
    inverse,
    is_invertible,
    map_from_unknowns,
    nullspace,
    parse_rational,
    rank,
    render_rational,
    sign,
    solve,
)

small = st.integers(-4, 4)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@pytest.mark.parametrize("text,value", [
    ("1", Fraction(1)), ("-3/6", Fraction(-1, 2)), (" 7 / 14 ", Fraction(1, 2)), ("0", Fraction(0)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "", "abc", "1.5", "2/-3", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError, match="malformed rational"):
        parse_rational(text)


@given(small, st.integers(1, 9))
def test_render_parse_round_trip(p, q):
    x = Fraction(p, q)
    assert parse_rational(render_rational(x)) == x
    assert "/" not in render_rational(Fraction(p))


def test_sign():
    assert [sign(k) for k in range(4)] == [1, -1, 1, -1]


def test_rank_example():
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_nullspace_example():
    M = Matrix.from_rows([[1, 2], [2, 4]])
    (v,) = nullspace(M)
    assert M.apply(v) == (0, 0)
    assert v == (Fraction(-2), Fraction(1))


def test_solve_inconsistent():
    with pytest.raises(InconsistentSystem):
        solve(Matrix.from_rows([[1, 2], [2, 4]]), [1, 3])


@given(matrices())
def test_rank_nullity(rows):
    M = Matrix.from_rows(rows)
    ns = nullspace(M)
    assert rank(M) + len(ns) == M.cols
    for v in ns:
        assert not any(M.apply(v))


@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_solve_reproduces_consistent_rhs(rows, x):
    M = Matrix.from_rows(rows)
    b = M.apply(tuple(Fraction(a) for a in x[:M.cols]))
    assert M.apply(solve(M, b)) == b


@given(matrices(3, 3))
def test_inverse(rows):
    M = Matrix.from_rows(rows)
    if M.rows != M.cols:
        return
    if is_invertible(M):
        assert inverse(M) @ M == Matrix.identity(M.rows)
    else:
        with pytest.raises(ValueError):
            inverse(M)


def test_in_span():
    assert in_span([(1, 0, 1)], (2, 0, 2))
    assert not in_span([(1, 0, 1)], (0, 1, 0))


def test_block_layout_evens_first():
    total, (m1, m2) = block_layout([GradedDimension(1, 1), GradedDimension(2, 1)])
    assert total == GradedDimension(3, 2)
    assert m1 == [0, 3] and m2 == [1, 2, 4]


def test_graded_map_respects_grading():
    d = GradedDimension(1, 1)
    odd = GradedLinearMap(Matrix.from_rows([[0, 1], [1, 0]]), 1, d, d)
    assert odd.respects_grading()
    bad = GradedLinearMap(Matrix.from_rows([[1, 0], [0, 0]]), 1, d, d)
    assert not bad.respects_grading()
    assert len(allowed_positions(d, d, 1)) == 2


@given(st.integers(0, 1), st.lists(small, min_size=4, max_size=4))
def test_map_from_unknowns_is_homogeneous(degree, vals):
    d = GradedDimension(1, 1)
    pos = allowed_positions(d, d, degree)
    m = map_from_unknowns(vals[:len(pos)], pos, d, d, degree)
    assert m.respects_grading()


def test_lcg_is_deterministic_and_bounded():
    a, b = LCG(7), LCG(7)
    xs = [a.next_int() for _ in range(200)]
    assert xs == [b.next_int() for _ in range(200)]
    assert set(xs) <= set(range(-5, 6))
    assert xs != [LCG(8).next_int() for _ in range(200)]
