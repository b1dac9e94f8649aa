"""Smith normal form against the determinant-divisor oracle.

For any integer matrix the product d_1 ... d_k of the first k invariant factors
equals the gcd of all k x k minors, which gives an oracle computed by a
completely different route than the elimination."""

from itertools import combinations
from math import gcd

from hypothesis import given, settings, strategies as st

from dehnkit import IntMatrix, smith_normal_form, cokernel_invariants


def minor_gcd(a: IntMatrix, k: int) -> int:
    g = 0
    for rows in combinations(range(a.nrows), k):
        for cols in combinations(range(a.ncols), k):
            sub = IntMatrix([[a.rows[i][j] for j in cols] for i in rows])
            g = gcd(g, sub.det())
            if g == 1:
                return 1
    return g


matrices_st = st.integers(1, 5).flatmap(
    lambda nr: st.integers(1, 5).flatmap(
        lambda nc: st.lists(
            st.lists(st.integers(-9, 9), min_size=nc, max_size=nc),
            min_size=nr,
            max_size=nr,
        ).map(IntMatrix)
    )
)


@given(matrices_st)
@settings(max_examples=250, deadline=None)
def test_snf_transforms_and_divisibility(a):
    res = smith_normal_form(a)
    assert res.verify()
    assert (res.U @ a @ res.V) == res.D
    assert res.U.is_unimodular and res.V.is_unimodular
    for i in range(len(res.divisors) - 1):
        assert res.divisors[i + 1] % res.divisors[i] == 0
    for i in range(res.D.nrows):
        for j in range(res.D.ncols):
            if i != j:
                assert res.D[i, j] == 0


@given(matrices_st)
@settings(max_examples=120, deadline=None)
def test_snf_matches_determinant_divisors(a):
    res = smith_normal_form(a)
    prod = 1
    for k, d in enumerate(res.divisors, start=1):
        prod *= d
        assert prod == minor_gcd(a, k)
    if len(res.divisors) < min(a.nrows, a.ncols):
        assert minor_gcd(a, len(res.divisors) + 1) == 0


def test_known_forms():
    a = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert smith_normal_form(a).divisors == (2, 2, 156)
    assert smith_normal_form(IntMatrix.identity(4)).divisors == (1, 1, 1, 1)
    assert smith_normal_form(IntMatrix.zeros(3, 2)).divisors == ()


def test_cokernel_invariants():
    # Z^3 / <(2,0,0), (0,3,0)> = Z/2 + Z/3 + Z = Z/6 + Z
    rel = IntMatrix([[2, 0, 0], [0, 3, 0]])
    assert cokernel_invariants(rel, 3) == (1, (6,))
    rel2 = IntMatrix([[1, 0], [0, 1]])
    assert cokernel_invariants(rel2, 2) == (0, ())
    assert cokernel_invariants(IntMatrix([]), 5) == (5, ())


def test_matrix_basics():
    a = IntMatrix([[1, 2], [3, 4]])
    b = IntMatrix([[0, 1], [1, 0]])
    assert (a @ b) == IntMatrix([[2, 1], [4, 3]])
    assert a.det() == -2
    assert not a.is_unimodular
    assert b.is_unimodular
    assert a.apply((1, 1)) == (3, 7)
    assert a.transpose() == IntMatrix([[1, 3], [2, 4]])
    assert (a - a) == IntMatrix.zeros(2, 2)
    assert IntMatrix.from_columns([(1, 2), (3, 4)]) == IntMatrix([[1, 3], [2, 4]])
