"""Small number-theory lookups shared across modules.

Thin cached wrappers over sympy's ntheory functions, so every module agrees
on conventions (in particular: "the" primitive root mod p is the least one).
"""

from functools import lru_cache

from sympy import divisors as _divisors
from sympy import isprime as _isprime
from sympy import primitive_root as _primitive_root
from sympy import totient as _totient


@lru_cache(maxsize=None)
def divisor_list(m):
    """Sorted positive divisors of m."""
    return tuple(int(d) for d in _divisors(int(m)))


@lru_cache(maxsize=None)
def euler_phi(m):
    return int(_totient(int(m)))


@lru_cache(maxsize=None)
def is_prime(n):
    return bool(_isprime(int(n)))


def is_odd_prime(p):
    return p > 2 and is_prime(p)


@lru_cache(maxsize=None)
def least_primitive_root(p):
    """The least primitive root mod the odd prime p.

    sympy's primitive_root already returns the smallest one; the test suite
    re-checks that by brute force so the convention stays pinned.
    """
    if not is_odd_prime(p):
        raise ValueError("least_primitive_root needs an odd prime, got %r" % (p,))
    return int(_primitive_root(p))


@lru_cache(maxsize=None)
def discrete_log_table(p):
    """Map k -> index of k with respect to the least primitive root mod p."""
    rho = least_primitive_root(p)
    table = {}
    acc = 1
    for t in range(p - 1):
        table[acc] = t
        acc = acc * rho % p
    return table
