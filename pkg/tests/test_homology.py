"""Tests for Smith normal form, homology, determinant and signature."""

import itertools
import random
from math import gcd

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from kirbycert.analysis.homology import (
    HomologyClass,
    determinant,
    first_homology,
    homology_from_matrix,
    invariant_factors,
    matmul,
    signature,
    smith_normal_form,
    transpose,
)
from kirbycert.data.presentation import UNKNOT, Slope, new_presentation
from kirbycert.errors import Meridional, NonSquare, NonSymmetric
from tests.randomized import random_matrix


def cofactor_det(m):
    """Brute-force determinant by cofactor expansion."""
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]])
        for j in range(len(m))
        if m[0][j]
    )


def minor_gcds(m):
    """gcd of all k x k minors, for k = 1 .. min(rows, cols)."""
    rows, cols = len(m), len(m[0])
    result = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = gcd(g, cofactor_det([[m[r][c] for c in cs] for r in rs]))
        result.append(g)
    return result


def check_decomposition(m):
    snf = smith_normal_form(m)
    rows, cols = len(m), len(m[0])
    assert matmul(matmul(snf.U, m), snf.V) == snf.D
    assert abs(determinant(snf.U)) == 1
    assert abs(determinant(snf.V)) == 1

    diagonal = snf.diagonal
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert snf.D[i][j] == 0
    assert all(d >= 0 for d in diagonal)
    nonzero = [d for d in diagonal if d]
    assert diagonal == nonzero + [0] * (len(diagonal) - len(nonzero))
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0

    # d_1 ... d_k equals the gcd of the k x k minors
    product = 1
    for d, g in zip(diagonal, minor_gcds(m)):
        product *= d
        assert product == g


def test_snf_unimodular_example():
    snf = smith_normal_form([[0, 1], [1, 2]])
    assert snf.D == ((1, 0), (0, 1))
    check_decomposition([[0, 1], [1, 2]])


def test_snf_coprime_diagonal():
    assert smith_normal_form([[2, 0], [0, 3]]).D == ((1, 0), (0, 6))


def test_snf_zero_matrix():
    snf = smith_normal_form([[0, 0], [0, 0]])
    assert snf.D == ((0, 0), (0, 0))
    assert snf.rank == 0


def test_snf_known_matrix():
    m = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    assert smith_normal_form(m).diagonal == [1, 10, 30, 0]
    check_decomposition(m)


def test_snf_is_deterministic():
    m = [[4, 6, -2], [2, 8, 10], [6, 0, 4]]
    assert smith_normal_form(m) == smith_normal_form(m)


@pytest.mark.parametrize("shape", [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (2, 3), (3, 2)])
def test_snf_exhaustive_small_shapes(shape):
    rows, cols = shape
    for entries in itertools.product(range(-2, 3), repeat=rows * cols):
        m = [list(entries[r * cols:(r + 1) * cols]) for r in range(rows)]
        check_decomposition(m)


@pytest.mark.slow
def test_snf_exhaustive_3x3():
    for entries in itertools.product(range(-2, 3), repeat=9):
        check_decomposition([list(entries[0:3]), list(entries[3:6]), list(entries[6:9])])


def test_snf_random_3x3():
    rng = random.Random(3)
    for _ in range(3000):
        check_decomposition(random_matrix(rng, 3, 3, 2))


def test_snf_random_4x4():
    rng = random.Random(4)
    for _ in range(1000):
        check_decomposition(random_matrix(rng, 4, 4, 9))


def test_invariant_factors_against_sympy():
    rng = random.Random(8)
    for _ in range(100):
        size = rng.randint(1, 4)
        m = random_matrix(rng, size, size, 6)
        ours = invariant_factors(m)
        theirs = sympy_smith_normal_form(sympy.Matrix(m), domain=sympy.ZZ)
        theirs_nonzero = sorted(abs(int(theirs[i, i])) for i in range(size) if theirs[i, i] != 0)
        assert sorted(d for d in ours if d) == [d for d in theirs_nonzero if d != 1]
        assert ours.count(0) == size - len(theirs_nonzero)


def test_abs_det_is_product_of_invariant_factors():
    rng = random.Random(9)
    for _ in range(300):
        m = random_matrix(rng, 4, 4, 5)
        det = determinant(m)
        if det:
            assert abs(det) == HomologyClass(tuple(invariant_factors(m))).torsion_order


def test_homology_class():
    assert str(HomologyClass(())) == "0"
    assert str(HomologyClass((2, 0))) == "Z/2 + Z"
    assert HomologyClass((0, 0)).betti_number == 2
    assert HomologyClass((2, 6)).torsion_order == 12
    assert homology_from_matrix([[0]]).invariant_factors == (0,)


def test_first_homology_lens_space():
    assert first_homology(new_presentation([(UNKNOT, Slope(3))], [[0]])).invariant_factors == (3,)


def test_first_homology_s1xs2():
    assert first_homology(new_presentation([(UNKNOT, Slope(0))], [[0]])).invariant_factors == (0,)


def test_first_homology_empty_is_trivial():
    assert first_homology(new_presentation([], [])).is_trivial


def test_first_homology_rational_hopf():
    # |det [[0,1],[2,5]]| = 2
    hopf = new_presentation([(UNKNOT, Slope(0)), (UNKNOT, Slope(5, 2))], [[0, 1], [1, 0]])
    assert first_homology(hopf).invariant_factors == (2,)


def test_first_homology_meridional():
    p = new_presentation([(UNKNOT, Slope(1, 0)), (UNKNOT, Slope(4))], [[0, 1], [1, 0]])
    with pytest.raises(Meridional):
        first_homology(p)
    assert first_homology(p, fill=True).invariant_factors == (4,)


def test_determinant_examples():
    assert determinant([[1, 2, 2], [2, 3, 3], [2, 3, 4]]) == -1
    assert determinant([[int(i == j) for j in range(4)] for i in range(4)]) == 1
    assert determinant([[0, 1], [1, 2]]) == -1
    assert determinant([]) == 1
    assert determinant([[0, 0], [0, 5]]) == 0


def test_determinant_against_sympy():
    rng = random.Random(10)
    for _ in range(200):
        size = rng.randint(1, 6)
        m = random_matrix(rng, size, size, 9)
        assert determinant(m) == sympy.Matrix(m).det()


def test_determinant_non_square():
    with pytest.raises(NonSquare):
        determinant([[1, 2]])


def test_signature_examples():
    assert signature([[1, 0], [0, -1]]) == 0
    assert signature([[0, 1], [1, 0]]) == 0
    assert signature([[0, 1], [1, 2]]) == 0
    assert signature([[2, 1], [1, 2]]) == 2
    assert signature([[-1]]) == -1
    assert signature([[0, 0], [0, 0]]) == 0
    assert signature([]) == 0


def test_signature_non_symmetric():
    with pytest.raises(NonSymmetric):
        signature([[0, 1], [2, 0]])


def random_unimodular(rng, size):
    e = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(size * 3):
        i, j = rng.sample(range(size), 2)
        factor = rng.choice([-2, -1, 1, 2])
        e = [
            [e[r][c] + (factor * e[j][c] if r == i else 0) for c in range(size)]
            for r in range(size)
        ]
    return e


def test_signature_congruence_invariance():
    rng = random.Random(12)
    for _ in range(300):
        size = rng.randint(2, 5)
        m = random_matrix(rng, size, size, 4)
        sym = [[m[i][j] + m[j][i] if i != j else m[i][i] for j in range(size)] for i in range(size)]
        e = random_unimodular(rng, size)
        congruent = matmul(matmul(transpose(e), sym), e)
        assert signature(congruent) == signature(sym)


def sign_changes(coefficients):
    signs = [c > 0 for c in coefficients if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def test_signature_matches_characteristic_polynomial():
    # all roots of a symmetric matrix's characteristic polynomial are real, so
    # Descartes' rule counts positive and negative eigenvalues exactly
    rng = random.Random(13)
    x = sympy.Symbol("x")
    for _ in range(150):
        size = rng.randint(1, 5)
        m = random_matrix(rng, size, size, 3)
        rows = [[m[i][j] + m[j][i] for j in range(size)] for i in range(size)]
        coefficients = sympy.Matrix(rows).charpoly(x).all_coeffs()
        positive = sign_changes(coefficients)
        negative = sign_changes([c * (-1) ** (len(coefficients) - 1 - i) for i, c in enumerate(coefficients)])
        assert signature(rows) == positive - negative


def test_cofactor_oracle_matches_determinant():
    rng = random.Random(14)
    for _ in range(200):
        m = random_matrix(rng, 3, 3, 9)
        assert cofactor_det(m) == determinant(m)
