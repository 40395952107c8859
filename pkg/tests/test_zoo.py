"""Function generators against independent brute-force evaluators, plus
the additivity oracles."""

import math
import random

import pytest

from dirichlet_ring import (
    FLOAT,
    delta,
    generate,
    identity,
    is_additive,
    is_completely_additive,
    make,
)
from dirichlet_ring.primes import divisors, factorize, is_prime, nth_prime
from dirichlet_ring.sampling import random_additive
from dirichlet_ring.witness import MEMBER, NON_MEMBER
from dirichlet_ring.zoo import (
    big_omega,
    dedekind_psi,
    distinct_prime_count,
    euler_phi,
    liouville,
    log_function,
    mangoldt,
    mobius,
    natural,
    p_adic_valuation,
    ramanujan_tau,
    unit,
)

from oracles import (
    big_omega_scan,
    distinct_count_scan,
    is_prime_scan,
    liouville_scan,
    mobius_scan,
    nu_p_scan,
    phi_count,
    psi_scan,
    tau_eta_product,
)

# factorization -------------------------------------------------------------


def test_factorize_one_is_empty():
    assert factorize(1).factors == ()


def test_factorize_twelve():
    assert factorize(12).factors == ((2, 2), (3, 1))


def test_factorize_prime():
    assert factorize(97).factors == ((97, 1),)


def test_factorize_invariants_small_range():
    for n in range(1, 400):
        fac = factorize(n)
        prod = 1
        for p, a in fac.factors:
            assert is_prime_scan(p)
            assert a >= 1
            prod *= p**a
        assert prod == n
        assert list(fac.distinct_primes) == sorted(fac.distinct_primes)


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)


def test_is_prime_matches_scan():
    for n in range(1, 200):
        assert is_prime(n) == is_prime_scan(n)


def test_nth_prime_sequence():
    assert [nth_prime(k) for k in range(1, 9)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_divisors_of_twelve():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


# golden generator values ----------------------------------------------------


def test_mobius_first_six():
    assert [int(v) for v in mobius(6).values] == [1, -1, -1, 0, -1, 1]


def test_identity_shape():
    assert [int(v) for v in identity(4).values] == [1, 0, 0, 0]


def test_euler_phi_first_six():
    assert [int(v) for v in euler_phi(6).values] == [1, 1, 2, 2, 4, 2]


def test_tau_starts_at_one_minus_twentyfour():
    assert [int(v) for v in ramanujan_tau(2).values] == [1, -24]


def test_tau_against_schoolbook_expansion():
    expected = tau_eta_product(50)
    assert [int(v) for v in ramanujan_tau(50).values] == expected


def test_generators_match_scans_to_200():
    n = 200
    assert [int(v) for v in mobius(n).values] == [mobius_scan(k) for k in range(1, n + 1)]
    assert [int(v) for v in euler_phi(n).values] == [phi_count(k) for k in range(1, n + 1)]
    assert [int(v) for v in liouville(n).values] == [liouville_scan(k) for k in range(1, n + 1)]
    assert [int(v) for v in dedekind_psi(n).values] == [psi_scan(k) for k in range(1, n + 1)]
    assert [int(v) for v in big_omega(n).values] == [big_omega_scan(k) for k in range(1, n + 1)]
    assert [int(v) for v in distinct_prime_count(n).values] == [
        distinct_count_scan(k) for k in range(1, n + 1)
    ]
    assert [int(v) for v in p_adic_valuation(2, n).values] == [
        nu_p_scan(2, k) for k in range(1, n + 1)
    ]


def test_mangoldt_values_and_norm():
    f = mangoldt(16)
    assert f.mode == FLOAT
    assert f(1) == 0.0
    assert f(2) == pytest.approx(math.log(2))
    assert f(6) == 0.0
    assert f(8) == pytest.approx(math.log(2))
    assert f(9) == pytest.approx(math.log(3))
    assert f.norm() == 2


def test_log_function_values():
    f = log_function(5)
    assert f(1) == 0.0
    assert f(4) == pytest.approx(math.log(4))


def test_delta_generalizes_to_any_support():
    f = generate("delta", 10, param=6)
    assert f == delta(6, 10)
    assert generate("delta", 4, param=6).is_zero()  # support beyond the window


def test_generate_registry_errors():
    with pytest.raises(ValueError):
        generate("no_such_tag", 8)
    with pytest.raises(ValueError):
        generate("p_adic_valuation", 8, param=6)  # 6 is not prime
    with pytest.raises(ValueError):
        generate("delta", 8, param=0)
    with pytest.raises(ValueError):
        generate("mobius", 8, param=3)  # no parameter expected
    with pytest.raises(ValueError):
        generate("delta", 8)  # parameter required


# invertibility split ---------------------------------------------------------


def test_invertibility_classification_of_the_zoo():
    n = 32
    for f in (big_omega(n), distinct_prime_count(n), mangoldt(n),
              p_adic_valuation(3, n), log_function(n)):
        assert not f(1)
    for f in (mobius(n), euler_phi(n), liouville(n), ramanujan_tau(n),
              dedekind_psi(n)):
        assert f(1)


# additivity -------------------------------------------------------------------


def test_big_omega_is_completely_additive():
    f = big_omega(64)
    assert is_additive(f).verdict == MEMBER
    assert is_completely_additive(f).verdict == MEMBER


def test_mangoldt_is_not_additive():
    w = is_additive(mangoldt(64))
    assert w.verdict == NON_MEMBER
    assert w.pair == (2, 3)  # log 6 = 0 but log 2 + log 3 is not


def test_identity_e_not_additive_at_one_one():
    w = is_additive(identity(8))
    assert w.verdict == NON_MEMBER
    assert w.pair == (1, 1)


def test_distinct_prime_count_additive_but_not_completely():
    f = distinct_prime_count(64)
    assert is_additive(f).verdict == MEMBER
    w = is_completely_additive(f)
    assert w.verdict == NON_MEMBER
    assert w.pair == (2, 2)


def test_p_adic_valuation_completely_additive():
    assert is_completely_additive(p_adic_valuation(2, 64)).verdict == MEMBER


def test_zero_function_completely_additive():
    assert is_completely_additive(make([0, 0, 0, 0])).verdict == MEMBER


def test_log_is_completely_additive_within_tolerance():
    assert is_completely_additive(log_function(256)).verdict == MEMBER


def test_sampled_additive_functions_form_a_group():
    rng = random.Random(42)
    for _ in range(6):
        f = random_additive(rng, 64)
        g = random_additive(rng, 64)
        assert is_additive(f).verdict == MEMBER
        assert is_additive(f + g).verdict == MEMBER
        assert is_additive(-f).verdict == MEMBER


# the classical inversion identities -------------------------------------------


def test_mobius_pair_at_256():
    assert mobius(256) == unit(256).invert()


def test_totient_identity_at_256():
    assert mobius(256).convolve(natural(256)) == euler_phi(256)


def test_tau_coefficients_are_integers():
    assert all(v.denominator == 1 for v in ramanujan_tau(64).values)
    assert ramanujan_tau(1)(1) == 1
