"""Small exact linear algebra over the rationals.

Matrices are tuples of row tuples of Fractions.  Inversion and Smith normal
form go through sympy; products are done here because the matrices are tiny
and converting to sympy on every product would dominate the run time.
"""

from fractions import Fraction

import sympy
from sympy.matrices.normalforms import smith_normal_form


def frac_matrix(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def vecmat(v, a):
    return matvec(transpose(a), v)


def dot(u, v):
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def _to_sympy(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])


def _from_sympy(m):
    return tuple(tuple(Fraction(int(m[i, j].p), int(m[i, j].q)) for j in range(m.cols)) for i in range(m.rows))


def inverse(m):
    return _from_sympy(_to_sympy(frac_matrix(m)).inv())


def solve(m, v):
    """Solve m x = v for square invertible m."""
    return matvec(inverse(m), tuple(Fraction(x) for x in v))


def is_integral(v):
    return all(Fraction(x).denominator == 1 for x in v)


def as_int_tuple(v):
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"non-integral entry {x}")
        out.append(x.numerator)
    return tuple(out)


def smith_invariants(m):
    """Diagonal of the Smith normal form of an integer matrix."""
    snf = smith_normal_form(sympy.Matrix([[int(x) for x in row] for row in m]), domain=sympy.ZZ)
    n = min(snf.rows, snf.cols)
    return tuple(abs(int(snf[i, i])) for i in range(n))
