"""Smith normal form: exactness, unimodularity, divisibility.

The determinant oracle is an independent fraction-free Bareiss expansion,
and the invariant factors are cross-checked against the gcd-of-minors
characterization (k = 1 and k = full rank) on the seeded random suite.
"""

import random
from itertools import combinations
from math import gcd

import pytest

from effhom import IntMatrix, smith_normal_form


def bareiss_det(rows):
    """Exact determinant by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def minor_gcd(a: IntMatrix, k: int) -> int:
    g = 0
    for rows in combinations(range(a.rows), k):
        for cols in combinations(range(a.cols), k):
            sub = [[a.entry(i, j) for j in cols] for i in rows]
            g = gcd(g, bareiss_det(sub))
    return abs(g)


def assert_snf_contract(a: IntMatrix):
    result = smith_normal_form(a)
    u, v, d = result.U, result.V, result.D
    assert u.rows == u.cols == a.rows
    assert v.rows == v.cols == a.cols
    assert (u @ a) @ v == d
    assert abs(bareiss_det(u.to_rows())) == 1
    assert abs(bareiss_det(v.to_rows())) == 1
    assert d.is_diagonal()
    diag = [d.entry(i, i) for i in range(min(d.rows, d.cols))]
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    # nonzero entries lead and form a divisibility chain
    assert diag[: len(nonzero)] == nonzero
    for first, second in zip(nonzero, nonzero[1:]):
        assert second % first == 0
    assert result.invariant_factors == tuple(nonzero)
    return result


class TestGoldens:
    def test_two_by_two(self):
        # gcd of entries is 2 and |det| = 8, so the factors are (2, 4)
        a = IntMatrix.from_rows([[2, 4], [6, 8]])
        assert assert_snf_contract(a).invariant_factors == (2, 4)

    def test_zero_matrix(self):
        a = IntMatrix.zeros(3, 2)
        result = assert_snf_contract(a)
        assert result.invariant_factors == ()
        assert result.D == IntMatrix.zeros(3, 2)

    def test_identity(self):
        a = IntMatrix.identity(3)
        assert assert_snf_contract(a).invariant_factors == (1, 1, 1)

    def test_single_negative_entry(self):
        a = IntMatrix.from_rows([[-6]])
        result = assert_snf_contract(a)
        assert result.invariant_factors == (6,)

    def test_rank_deficient(self):
        a = IntMatrix.from_rows([[2, 4], [1, 2]])
        assert assert_snf_contract(a).invariant_factors == (1,)

    def test_empty_shapes(self):
        for rows, cols in ((0, 0), (0, 3), (3, 0)):
            result = assert_snf_contract(IntMatrix.zeros(rows, cols))
            assert result.invariant_factors == ()


class TestSeededSuite:
    def test_hundred_random_matrices(self):
        rng = random.Random(1729)
        for _ in range(100):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            a = IntMatrix.from_rows(
                [
                    [rng.randint(-50, 50) for _ in range(cols)]
                    for _ in range(rows)
                ],
                rows,
                cols,
            )
            result = assert_snf_contract(a)
            factors = result.invariant_factors
            # spot oracles: gcd of entries, and gcd of full-rank minors
            entry_gcd = 0
            for x in a.entries:
                entry_gcd = gcd(entry_gcd, x)
            if factors:
                assert factors[0] == abs(entry_gcd)
                product = 1
                for f in factors:
                    product *= f
                assert product == minor_gcd(a, len(factors))
            else:
                assert entry_gcd == 0


class TestIntMatrix:
    def test_matmul(self):
        a = IntMatrix.from_rows([[1, 2], [3, 4]])
        b = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert a @ b == IntMatrix.from_rows([[2, 1], [4, 3]])

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1]]) @ IntMatrix.from_rows([[1, 2], [3, 4]])

    def test_large_entries_stay_exact(self):
        big = 10**40
        a = IntMatrix.from_rows([[big, 1], [1, big]])
        result = assert_snf_contract(a)
        assert result.invariant_factors[0] == 1
        assert result.invariant_factors[1] == big * big - 1
