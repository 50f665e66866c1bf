"""
Exact ranks and kernels over Z, Q and F_p.
"""
from collections import namedtuple

import numpy as np
from sympy import isprime

from helpers.conf import topology_setting

from .smith import integer_matrix, invariant_factors, smith_normal_form


class CoefficientError(ValueError):
    pass


class Coefficients(namedtuple('Coefficients', ['name', 'prime'])):
    """``int`` (with torsion), ``q`` or ``p<prime>``."""
    __slots__ = ()

    @classmethod
    def parse(cls, name=None):
        if isinstance(name, cls):
            return name
        name = (name or topology_setting('COEFFICIENTS')).lower()
        if name in ('int', 'z'):
            return cls('int', None)
        if name in ('q', 'rational'):
            return cls('q', None)
        if name.startswith('p'):
            try:
                p = int(name[1:])
            except ValueError:
                p = 0
            if isprime(p):
                return cls(name, p)
        raise CoefficientError('unknown coefficients {!r} (use int, q or p<prime>)'.format(name))

    @property
    def is_field(self):
        return self.name != 'int'

    def __str__(self):
        return {'int': 'Z', 'q': 'Q'}.get(self.name, 'F_{}'.format(self.prime))


INTEGERS = Coefficients('int', None)
RATIONALS = Coefficients('q', None)


def rank_mod_p(matrix, p):
    A = integer_matrix(matrix) % p
    m, n = A.shape
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if A[i, c] % p), None)
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        inv = pow(int(A[r, c]), -1, p)
        A[r, :] = (A[r, :] * inv) % p
        for i in range(r + 1, m):
            if A[i, c] % p:
                A[i, :] = (A[i, :] - A[i, c] * A[r, :]) % p
        r += 1
        if r == m:
            break
    return r


def fraction_free_rank(matrix):
    """Rank over Q by Bareiss elimination; independent of the Smith form code."""
    A = integer_matrix(matrix).copy()
    m, n = A.shape
    r = 0
    previous = 1
    for c in range(n):
        pivot = next((i for i in range(r, m) if A[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                A[i, j] = (A[r, c] * A[i, j] - A[i, c] * A[r, j]) // previous
            A[i, c] = 0
        previous = A[r, c]
        r += 1
        if r == m:
            break
    return r


def rank(matrix, coefficients=RATIONALS):
    """Rank over the given coefficients; over Z this is the rank over Q."""
    coefficients = Coefficients.parse(coefficients)
    A = integer_matrix(matrix)
    if not A.size:
        return 0
    if coefficients.prime:
        return rank_mod_p(A, coefficients.prime)
    return len(invariant_factors(smith_normal_form(A).D))


def torsion(matrix):
    """Invariant factors greater than one."""
    A = integer_matrix(matrix)
    if not A.size:
        return []
    return [d for d in invariant_factors(smith_normal_form(A).D) if d > 1]


def kernel_basis(matrix):
    """
    Integer basis of the kernel (columns of the returned matrix), read off the
    column transform of the Smith form.
    """
    A = integer_matrix(matrix)
    n = A.shape[1]
    if not A.size:
        return _identity_columns(n)
    D, _, V = smith_normal_form(A)
    r = len(invariant_factors(D))
    return V[:, r:]


def _identity_columns(n):
    basis = np.zeros((n, n), dtype=object)
    for i in range(n):
        basis[i, i] = 1
    return basis


def hstack(*blocks, rows):
    """Join column blocks, any of which may have no columns."""
    blocks = [b for b in blocks if b.shape[1]]
    if not blocks:
        return np.zeros((rows, 0), dtype=object)
    return np.hstack(blocks)
