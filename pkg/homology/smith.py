"""
Smith normal form over the integers.

Matrices are numpy arrays of dtype ``object`` holding Python ints, so entries
grow without bound instead of wrapping.
"""
from collections import namedtuple

import numpy as np


SmithForm = namedtuple('SmithForm', ['D', 'U', 'V'])


def integer_matrix(rows, shape=None):
    """Coerce to a 2-d object array of Python ints."""
    if shape is not None and not len(rows):
        return np.zeros(shape, dtype=object)
    matrix = np.array(rows, dtype=object)
    if matrix.ndim != 2:
        raise ValueError('expected a 2-d matrix, got shape {}'.format(matrix.shape))
    return np.vectorize(int, otypes=[object])(matrix) if matrix.size else matrix


def identity(n):
    matrix = np.zeros((n, n), dtype=object)
    for i in range(n):
        matrix[i, i] = 1
    return matrix


def _swap_rows(M, a, b):
    if a != b:
        M[[a, b], :] = M[[b, a], :]


def _swap_cols(M, a, b):
    if a != b:
        M[:, [a, b]] = M[:, [b, a]]


def _nearest_quotient(a, p):
    """q with a - q·p in [-p/2, p/2), for p > 0."""
    return (2 * a + p) // (2 * p)


def _smallest_entry(D, t):
    m, n = D.shape
    best = None
    for i in range(t, m):
        for j in range(t, n):
            if D[i, j] != 0 and (best is None or abs(D[i, j]) < best[0]):
                best = (abs(D[i, j]), i, j)
    return best


def smith_normal_form(matrix):
    """
    Return (D, U, V) with U·A·V = D, U and V unimodular and the diagonal of D
    non-negative with each entry dividing the next.

    The pivot is always the smallest nonzero entry of the remaining block and
    every reduction leaves a balanced remainder, so the pivot strictly shrinks
    until it divides its row, its column and the rest of the block.
    """
    A = integer_matrix(matrix)
    m, n = A.shape
    D = A.copy()
    U = identity(m)
    V = identity(n)

    for t in range(min(m, n)):
        while True:
            smallest = _smallest_entry(D, t)
            if smallest is None:
                return SmithForm(D, U, V)
            _, i, j = smallest
            _swap_rows(D, t, i)
            _swap_rows(U, t, i)
            _swap_cols(D, t, j)
            _swap_cols(V, t, j)
            if D[t, t] < 0:
                D[t, :] *= -1
                U[t, :] *= -1
            p = D[t, t]

            for i in range(t + 1, m):
                q = _nearest_quotient(D[i, t], p)
                if q:
                    D[i, :] -= q * D[t, :]
                    U[i, :] -= q * U[t, :]
            for j in range(t + 1, n):
                q = _nearest_quotient(D[t, j], p)
                if q:
                    D[:, j] -= q * D[:, t]
                    V[:, j] -= q * V[:, t]
            if any(D[i, t] for i in range(t + 1, m)) or any(D[t, j] for j in range(t + 1, n)):
                continue

            # pivot must divide the rest of the block
            stray = next((i for i in range(t + 1, m) for j in range(t + 1, n) if D[i, j] % p), None)
            if stray is None:
                break
            D[t, :] += D[stray, :]
            U[t, :] += U[stray, :]

    return SmithForm(D, U, V)


def invariant_factors(D):
    """Nonzero diagonal entries of a Smith form, in order."""
    return [int(D[i, i]) for i in range(min(D.shape)) if D[i, i] != 0]
