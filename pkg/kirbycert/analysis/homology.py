"""
Exact integer linear algebra: Smith normal form, first homology of a surgered
manifold, determinants and signatures.

Everything runs on Python integers and Fractions; there is no floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..data.presentation import (
    Matrix,
    SurgeryPresentation,
    as_matrix,
    fill_meridians,
    generalized_relation_matrix,
)
from ..errors import NonSquare, NonSymmetric


def identity(size: int) -> List[List[int]]:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    """Exact integer matrix product."""
    inner = len(b)
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum(row[t] * b[t][j] for t in range(inner)) for j in range(cols))
        for row in a
    )


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*a)) if a else ()


@dataclass(frozen=True)
class SmithDecomposition:
    """D = U * M * V with U, V unimodular and D diagonal."""

    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> List[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


class _Reducer:
    """Working state for one Smith normal form computation."""

    def __init__(self, matrix: Sequence[Sequence[int]]):
        self.a = [list(row) for row in matrix]
        self.rows = len(self.a)
        self.cols = len(self.a[0]) if self.a else 0
        self.u = identity(self.rows)
        self.v = identity(self.cols)

    def swap_rows(self, i: int, j: int):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int):
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            for row in self.v:
                row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: int):
        """row[target] += factor * row[source]"""
        for m in (self.a, self.u):
            src, dst = m[source], m[target]
            for t in range(len(dst)):
                dst[t] += factor * src[t]

    def add_col(self, target: int, source: int, factor: int):
        """col[target] += factor * col[source]"""
        for m in (self.a, self.v):
            for row in m:
                row[target] += factor * row[source]

    def negate_row(self, i: int):
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]

    def pivot(self, s: int):
        """Nonzero entry of least absolute value in the trailing block.

        Ties go to the lowest (row, column) index.
        """
        best = None
        for i in range(s, self.rows):
            for j in range(s, self.cols):
                x = self.a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return None if best is None else best[1:]

    def reduce(self) -> SmithDecomposition:
        a = self.a
        for s in range(min(self.rows, self.cols)):
            while True:
                found = self.pivot(s)
                if found is None:
                    return self.result()
                self.swap_rows(s, found[0])
                self.swap_cols(s, found[1])
                p = a[s][s]

                clean = True
                for i in range(s + 1, self.rows):
                    if a[i][s]:
                        self.add_row(i, s, -(a[i][s] // p))
                        clean = clean and a[i][s] == 0
                for j in range(s + 1, self.cols):
                    if a[s][j]:
                        self.add_col(j, s, -(a[s][j] // p))
                        clean = clean and a[s][j] == 0
                if not clean:
                    continue

                stray = next(
                    (
                        i
                        for i in range(s + 1, self.rows)
                        for j in range(s + 1, self.cols)
                        if a[i][j] % p
                    ),
                    None,
                )
                if stray is None:
                    break
                self.add_row(s, stray, 1)

            if a[s][s] < 0:
                self.negate_row(s)
        return self.result()

    def result(self) -> SmithDecomposition:
        return SmithDecomposition(as_matrix(self.a), as_matrix(self.u), as_matrix(self.v))


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with unimodular transforms, D = U * M * V.

    Diagonal entries are non-negative, each divides the next, zeros last.
    """
    return _Reducer(matrix).reduce()


def invariant_factors(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Invariant factors of the cokernel of ``matrix``, with the 1s dropped.

    Rows are relations on the column generators; zero rows or missing rows
    contribute free summands.
    """
    cols = len(matrix[0]) if matrix else 0
    diagonal = smith_normal_form(matrix).diagonal if cols else []
    factors = [d for d in diagonal if d != 1]
    factors.extend([0] * (cols - len(diagonal)))
    return factors


@dataclass(frozen=True)
class HomologyClass:
    """A finitely generated abelian group as its invariant factors (1s dropped)."""

    invariant_factors: Tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def betti_number(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def torsion_order(self) -> int:
        order = 1
        for d in self.invariant_factors:
            if d:
                order *= d
        return order

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.invariant_factors)


def homology_from_matrix(matrix: Sequence[Sequence[int]]) -> HomologyClass:
    return HomologyClass(tuple(invariant_factors(matrix)))


def first_homology(p: SurgeryPresentation, fill: bool = False) -> HomologyClass:
    """H_1 of the manifold obtained by surgery on ``p``.

    With ``fill`` set, meridional components are filled (removed) first;
    otherwise a meridional slope raises Meridional.
    """
    if fill:
        p = fill_meridians(p)
    return homology_from_matrix(generalized_relation_matrix(p))


def _require_square(matrix: Sequence[Sequence[int]]) -> int:
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise NonSquare(f"expected a square matrix, got {size} rows of lengths "
                        f"{sorted({len(row) for row in matrix})}")
    return size


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    size = _require_square(matrix)
    a = [list(row) for row in matrix]
    sign, previous = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[-1][-1] if size else 1


def signature(matrix: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix via rational congruence.

    A zero-diagonal block with a nonzero off-diagonal entry b is a hyperbolic
    pair; adding one basis vector to the other turns it into a nonzero pivot
    2b without changing the form's congruence class.
    """
    size = _require_square(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    for i in range(size):
        for j in range(i + 1, size):
            if a[i][j] != a[j][i]:
                raise NonSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")

    def swap(i: int, j: int):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    positive = negative = 0
    for k in range(size):
        pivot = next((i for i in range(k, size) if a[i][i]), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in range(k, size) for j in range(i + 1, size) if a[i][j]),
                None,
            )
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j
            for t in range(size):
                a[i][t] += a[j][t]
            for t in range(size):
                a[t][i] += a[t][j]
            pivot = i
        swap(k, pivot)

        d = a[k][k]
        if d > 0:
            positive += 1
        else:
            negative += 1
        for i in range(k + 1, size):
            if a[i][k]:
                factor = a[i][k] / d
                for t in range(k, size):
                    a[i][t] -= factor * a[k][t]
                a[i][k] = Fraction(0)
        for i in range(k + 1, size):
            a[k][i] = Fraction(0)
    return positive - negative
