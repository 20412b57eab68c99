"""q- and (q,t)-analogs of integers, factorials and binomials.

All results are :class:`BiLaurent` polynomials in ``q`` and ``t``.

>>> print(q_binomial(4, 2))
1 + q + 2*q^2 + q^3 + q^4
>>> print(qt_even_number(2))
1 + q + q*t + q^2*t
"""

from __future__ import annotations

from functools import lru_cache

from .bilaurent import BiLaurent

Q = BiLaurent.q()
T = BiLaurent.t()
ONE = BiLaurent.one()


@lru_cache(maxsize=None)
def q_number(m: int) -> BiLaurent:
    """``[m]_q = 1 + q + ... + q^(m-1)``."""
    if m < 1:
        raise ValueError("q_number needs m >= 1")
    return BiLaurent({(k, 0): 1 for k in range(m)})


@lru_cache(maxsize=None)
def q_factorial(m: int) -> BiLaurent:
    if m < 0:
        raise ValueError("q_factorial needs m >= 0")
    out = ONE
    for k in range(1, m + 1):
        out = out * q_number(k)
    return out


@lru_cache(maxsize=None)
def q_binomial(m: int, i: int) -> BiLaurent:
    """Gaussian binomial as the exact quotient ``[m]! / ([i]! [m-i]!)``."""
    if not 0 <= i <= m:
        raise ValueError(f"q_binomial needs 0 <= i <= m, got ({m}, {i})")
    return q_factorial(m).exact_div(q_factorial(i) * q_factorial(m - i))


@lru_cache(maxsize=None)
def qt_even_number(m: int) -> BiLaurent:
    """``[2m]_{q,t} = [m]_q (1 + t q^(m-1))``."""
    if m < 1:
        raise ValueError("qt_even_number needs m >= 1")
    return q_number(m) * (ONE + T * Q ** (m - 1))


@lru_cache(maxsize=None)
def qt_double_factorial(m: int) -> BiLaurent:
    """``[2m]_{q,t}!!``, the product of the first m (q,t)-even numbers."""
    if m < 0:
        raise ValueError("qt_double_factorial needs m >= 0")
    out = ONE
    for k in range(1, m + 1):
        out = out * qt_even_number(k)
    return out


def qt_double_factorial_product(m: int) -> BiLaurent:
    """Same value as :func:`qt_double_factorial`, as ``[m]_q! prod (1 + t q^i)``."""
    out = q_factorial(m)
    for i in range(m):
        out = out * (ONE + T * Q**i)
    return out


def qt_binomial_mod_product(m: int, i: int) -> BiLaurent:
    """``qbin(m, i) * prod_{j=i}^{m-1} (1 + t q^j)``."""
    out = q_binomial(m, i)
    for j in range(i, m):
        out = out * (ONE + T * Q**j)
    return out


@lru_cache(maxsize=None)
def qt_binomial_mod(m: int, i: int) -> BiLaurent:
    """The modified (q,t)-binomial ``[2m]!! / ([2i]!! [m-i]_q!)``.

    Computed as an exact quotient and checked against the product form.
    """
    if not 0 <= i <= m:
        raise ValueError(f"qt_binomial_mod needs 0 <= i <= m, got ({m}, {i})")
    quot = qt_double_factorial(m).exact_div(qt_double_factorial(i) * q_factorial(m - i))
    prod = qt_binomial_mod_product(m, i)
    if quot != prod:
        raise ArithmeticError(f"modified binomial ({m}, {i}): quotient and product forms disagree")
    return quot
