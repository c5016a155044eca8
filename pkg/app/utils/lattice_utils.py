"""Lattice helpers: row-style Hermite normal form, lattice index, and row reduction over Q and GF(p)."""
from fractions import Fraction
from math import lcm

from app.errors.business_exception import BusinessException, ErrorCodes


def hermite_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """
    Row-style Hermite normal form of the lattice spanned by the integer rows.

    Returns the nonzero rows: upper echelon form, positive pivots, entries above each
    pivot reduced into [0, pivot).
    """
    matrix = [list(row) for row in rows if any(row)]
    if not matrix:
        return []
    ncols = len(matrix[0])
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(matrix):
            break
        while True:
            candidates = [i for i in range(pivot_row, len(matrix)) if matrix[i][col] != 0]
            if not candidates:
                break
            best = min(candidates, key=lambda i: abs(matrix[i][col]))
            matrix[pivot_row], matrix[best] = matrix[best], matrix[pivot_row]
            pivot = matrix[pivot_row][col]
            done = True
            for i in range(pivot_row + 1, len(matrix)):
                if matrix[i][col] != 0:
                    q = matrix[i][col] // pivot
                    matrix[i] = [a - q * b for a, b in zip(matrix[i], matrix[pivot_row])]
                    if matrix[i][col] != 0:
                        done = False
            if done:
                break
        if pivot_row < len(matrix) and matrix[pivot_row][col] != 0:
            if matrix[pivot_row][col] < 0:
                matrix[pivot_row] = [-a for a in matrix[pivot_row]]
            pivot = matrix[pivot_row][col]
            for i in range(pivot_row):
                q = matrix[i][col] // pivot
                if q:
                    matrix[i] = [a - q * b for a, b in zip(matrix[i], matrix[pivot_row])]
            pivot_row += 1
    return matrix[:pivot_row]


def lattice_determinant(rows: list[list[int]]) -> int:
    """Covolume of a full-rank integer lattice given by spanning rows."""
    hnf = hermite_normal_form(rows)
    ncols = len(rows[0]) if rows else 0
    if len(hnf) != ncols:
        raise BusinessException(ErrorCodes.INVALID_STATE, f"lattice has rank {len(hnf)} < {ncols}")
    det = 1
    for i, row in enumerate(hnf):
        det *= row[i]
    return det


def rational_lattice_index(vectors: list[list[Fraction]]) -> int:
    """
    Index [Z^k + span_Z(vectors) : Z^k] for rational vectors of length k.

    Denominators are cleared by their lcm D; the index is D^k divided by the covolume of the
    integer lattice spanned by D*e_j and D*v_i.
    """
    if not vectors or not vectors[0]:
        return 1
    k = len(vectors[0])
    scale = lcm(1, *(x.denominator for v in vectors for x in v))
    rows = [[scale if i == j else 0 for j in range(k)] for i in range(k)]
    rows += [[int(x * scale) for x in v] for v in vectors]
    det = lattice_determinant(rows)
    index, remainder = divmod(scale ** k, det)
    if remainder:
        raise BusinessException(ErrorCodes.INTERNAL_SERVER_ERROR, f"covolume {det} does not divide {scale}^{k}")
    return index


def rational_rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns the nonzero rows and their pivot columns."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    ncols = len(matrix[0]) if matrix else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][col]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
    return matrix[:r], pivots


def gf_matrix_rank(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination."""
    matrix = [[x % p for x in row] for row in rows]
    ncols = len(matrix[0]) if matrix else 0
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inverse = pow(matrix[rank][col], p - 2, p)
        matrix[rank] = [x * inverse % p for x in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and matrix[i][col]:
                factor = matrix[i][col]
                matrix[i] = [(a - factor * b) % p for a, b in zip(matrix[i], matrix[rank])]
        rank += 1
    return rank
