"""Generators for the named arithmetical functions.

Everything is exact except the Mangoldt function and the logarithm,
whose values are irrational and therefore live in float mode.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd

from .primes import factorize, is_prime
from .ring import ArithFunc, EXACT, FLOAT, delta, identity
from .witness import Witness, member_witness, non_member_witness

FLOAT_TOL = 1e-12  # absolute tolerance for comparisons in float mode


def mobius(n: int) -> ArithFunc:
    """1 at 1; (-1)^k on products of k distinct primes; 0 otherwise."""
    vals = []
    for k in range(1, n + 1):
        fac = factorize(k)
        if fac.is_squarefree:
            vals.append(Fraction((-1) ** fac.distinct_count))
        else:
            vals.append(Fraction(0))
    return ArithFunc(vals, EXACT)


def euler_phi(n: int) -> ArithFunc:
    """Count of 1..k coprime to k, via k * prod(1 - 1/p) over p | k."""
    vals = []
    for k in range(1, n + 1):
        phi = k
        for p, _ in factorize(k).factors:
            phi = phi // p * (p - 1)
        vals.append(Fraction(phi))
    return ArithFunc(vals, EXACT)


def mangoldt(n: int) -> ArithFunc:
    """log p at prime powers p^m, 0 elsewhere.  Float mode."""
    vals = []
    for k in range(1, n + 1):
        fac = factorize(k).factors
        if len(fac) == 1:
            vals.append(math.log(fac[0][0]))
        else:
            vals.append(0.0)
    return ArithFunc(vals, FLOAT)


def liouville(n: int) -> ArithFunc:
    """1 at 1, otherwise (-1) to the number of prime factors with multiplicity."""
    vals = []
    for k in range(1, n + 1):
        if k == 1:
            vals.append(Fraction(1))
        else:
            vals.append(Fraction((-1) ** factorize(k).big_omega))
    return ArithFunc(vals, EXACT)


def ramanujan_tau(n: int) -> ArithFunc:
    """Coefficients of x * prod_{j>=1} (1 - x^j)^24, truncated at degree n.

    Plain truncated integer polynomial arithmetic; each factor is folded
    in as 24 in-place multiplications by (1 - x^j).
    """
    # coeffs[d] is the degree-d coefficient of the product, d < n
    coeffs = [0] * n
    coeffs[0] = 1
    for j in range(1, n):
        for _ in range(24):
            for d in range(n - 1, j - 1, -1):
                coeffs[d] -= coeffs[d - j]
    return ArithFunc([Fraction(c) for c in coeffs], EXACT)


def dedekind_psi(n: int) -> ArithFunc:
    """k * prod(1 + 1/p) over p | k; exact, the product telescopes."""
    vals = []
    for k in range(1, n + 1):
        psi = k
        for p, _ in factorize(k).factors:
            psi = psi // p * (p + 1)
        vals.append(Fraction(psi))
    return ArithFunc(vals, EXACT)


def big_omega(n: int) -> ArithFunc:
    """Number of prime factors counted with multiplicity."""
    return ArithFunc([Fraction(factorize(k).big_omega) for k in range(1, n + 1)], EXACT)


def distinct_prime_count(n: int) -> ArithFunc:
    """Number of distinct prime divisors."""
    return ArithFunc(
        [Fraction(factorize(k).distinct_count) for k in range(1, n + 1)], EXACT
    )


def p_adic_valuation(p: int, n: int) -> ArithFunc:
    """Largest exponent a with p^a dividing k."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    vals = []
    for k in range(1, n + 1):
        a = 0
        while k % p == 0:
            k //= p
            a += 1
        vals.append(Fraction(a))
    return ArithFunc(vals, EXACT)


def log_function(n: int) -> ArithFunc:
    """Natural logarithm at each index.  Float mode."""
    return ArithFunc([math.log(k) for k in range(1, n + 1)], FLOAT)


def unit(n: int) -> ArithFunc:
    """The constant-one function u."""
    return ArithFunc([Fraction(1)] * n, EXACT)


def natural(n: int) -> ArithFunc:
    """The inclusion k -> k."""
    return ArithFunc([Fraction(k) for k in range(1, n + 1)], EXACT)


_PLAIN = {
    "mobius": mobius,
    "euler_phi": euler_phi,
    "mangoldt": mangoldt,
    "liouville": liouville,
    "ramanujan_tau": ramanujan_tau,
    "dedekind_psi": dedekind_psi,
    "big_omega": big_omega,
    "distinct_prime_count": distinct_prime_count,
    "log": log_function,
    "identity_e": identity,
    "unit_u": unit,
    "natural_N": natural,
}

_PARAMETRIC = {
    "p_adic_valuation": p_adic_valuation,
    "delta": delta,
}

FUNCTION_TAGS = tuple(sorted(_PLAIN)) + tuple(sorted(_PARAMETRIC))


def generate(tag: str, n: int, param: int | None = None) -> ArithFunc:
    """Build a named function by tag; parametric tags need ``param``."""
    if n < 1:
        raise ValueError("window length must be at least 1")
    if tag in _PLAIN:
        if param is not None:
            raise ValueError(f"{tag} takes no parameter")
        return _PLAIN[tag](n)
    if tag in _PARAMETRIC:
        if param is None:
            raise ValueError(f"{tag} needs a parameter")
        return _PARAMETRIC[tag](param, n)
    raise ValueError(f"unknown function tag {tag!r}")


# additivity ------------------------------------------------------------


def _addition_defect(f: ArithFunc, m: int, k: int):
    return f(m * k) - f(m) - f(k)


def _scan_pairs(f: ArithFunc, coprime_only: bool) -> Witness:
    n = len(f)
    exact = f.mode == EXACT
    m = 1
    while m * m <= n:
        for k in range(m, n // m + 1):
            if coprime_only and gcd(m, k) != 1:
                continue
            defect = _addition_defect(f, m, k)
            bad = bool(defect) if exact else abs(defect) > FLOAT_TOL
            if bad:
                return non_member_witness(
                    pair=(m, k), note=f"f({m}*{k}) != f({m}) + f({k})"
                )
        m += 1
    return member_witness(note=f"all pairs with product <= {n} pass")


def is_additive(f: ArithFunc) -> Witness:
    """Check f(mk) = f(m) + f(k) for every coprime pair with mk <= len(f)."""
    return _scan_pairs(f, coprime_only=True)


def is_completely_additive(f: ArithFunc) -> Witness:
    """Check f(mk) = f(m) + f(k) for every pair with mk <= len(f)."""
    return _scan_pairs(f, coprime_only=False)
