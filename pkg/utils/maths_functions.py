# -*- coding: utf-8 -*-
"""
Define mathematical functions: exact integer sequences, characteristic
polynomials and their roots, and the floating point closed forms used as
cross-checks of the exact counts
"""


from decimal import Decimal, ROUND_HALF_UP

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import bisect

from utils.errors import PreconditionError


# golden ratio
PHI = (1 + 5 ** 0.5) / 2


def fibonacci(m):
    """
    Fibonacci number F(m) with F(0) = 0, F(1) = F(2) = 1 (fast doubling, exact)
    """
    if m < 0:
        raise PreconditionError(f'Fibonacci index must be non-negative, got {m}')

    a, b = 0, 1  # F(0), F(1)
    for bit in bin(m)[2:]:
        # doubling step : F(2j) = F(j)(2F(j+1) - F(j)) ; F(2j+1) = F(j)^2 + F(j+1)^2
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == '1':
            a, b = d, c + d
        else:
            a, b = c, d
    return a


def bell_number(n):
    """
    Number of set partitions of an n-set (Bell triangle)
    """
    if n < 0:
        raise PreconditionError(f'Bell index must be non-negative, got {n}')
    row = [1]
    for _ in range(n):
        new_row = [row[-1]]
        for value in row:
            new_row.append(new_row[-1] + value)
        row = new_row
    return row[0]


def characteristic_polynomial(k):
    """
    Characteristic polynomial x^k - x^(k-1) - 1 of the caterpillar recurrence
    g(n) = g(n-1) + g(n-k)
    """
    if k < 2:
        raise PreconditionError(f'characteristic polynomial needs k >= 2, got {k}')
    coefficients = [0] * (k + 1)
    coefficients[0] = -1
    coefficients[k - 1] = -1
    coefficients[k] = 1
    return Polynomial(coefficients)


def bisection_root(poly, lower, upper, xtol=1e-15):
    """
    Root of poly inside [lower, upper] by bisection; the bracket must change sign
    """
    f_lower = poly(lower)
    f_upper = poly(upper)
    if f_lower * f_upper > 0:
        raise PreconditionError(f'no sign change of the polynomial on [{lower}, {upper}]')
    root = bisect(poly, lower, upper, xtol=xtol, rtol=4 * np.finfo(float).eps, maxiter=200)
    return float(root)


def narayana_constant():
    """
    Constant c of g_3(Cat_n) = floor(c * alpha^n + 1/2):
    real root of 31x^3 - 31x^2 + 9x - 1 divided by alpha^3
    """
    alpha = bisection_root(characteristic_polynomial(3), 1.0, 2.0)
    # the cubic has a single real root, inside [0.5, 0.7]
    root = bisection_root(Polynomial([-1, 9, -31, 31]), 0.5, 0.7)
    return root / alpha ** 3, alpha


def float_guard_limit():
    """
    Largest exponent m for which floor(phi^m / sqrt(5) + 1/2) is exact in numpy
    long double: the error of phi is amplified m times, so phi^m * m must stay
    below 2^(mantissa bits - 1)
    """
    mantissa = np.finfo(np.longdouble).nmant
    bound = 2.0 ** (mantissa - 1)
    m = 0
    while PHI ** (m + 1) * (m + 1) < bound:
        m += 1
    return m


def binet_floor(m):
    """
    floor(phi^m / sqrt(5) + 1/2) in long double, i.e. F(m) when the guard holds
    """
    limit = float_guard_limit()
    if m < 0 or m > limit:
        raise PreconditionError(f'float closed form only valid for 0 <= m <= {limit}, got {m}')
    sqrt5 = np.sqrt(np.longdouble(5))
    phi = (np.longdouble(1) + sqrt5) / np.longdouble(2)
    value = np.floor(phi ** np.longdouble(m) / sqrt5 + np.longdouble(0.5))
    return int(value)


def g3_caterpillar_float(n, max_n=60):
    """
    floor(0.194254... * 1.46557...^n + 1/2) in long double
    """
    if n < 0 or n > max_n:
        raise PreconditionError(f'g_3 float closed form only checked for 0 <= n <= {max_n}, got {n}')
    constant, alpha = narayana_constant()
    value = np.longdouble(constant) * np.longdouble(alpha) ** np.longdouble(n) + np.longdouble(0.5)
    return int(np.floor(value))


def round_half_up(x, places=3):
    """
    Decimal text of x rounded half up, e.g. 1.2720196 -> '1.272'
    """
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_HALF_UP))
