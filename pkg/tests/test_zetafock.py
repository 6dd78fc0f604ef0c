import math
import random
from fractions import Fraction

import pytest

from phasequant.zetafock import (
    FACTOR_LIMIT,
    FockInteger,
    euler_product,
    euler_product_tail_factor,
    factorize,
    partition_function,
    primes_up_to,
    smooth_sum_bruteforce,
    smooth_sum_exact,
    zeta_bracket,
)


def test_factorize_small():
    assert factorize(1) == {}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(997) == {997: 1}
    assert factorize(999999937) == {999999937: 1}


def test_factorize_guard():
    with pytest.raises(ValueError):
        factorize(FACTOR_LIMIT + 1)
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_random_roundtrip():
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randint(1, 10**7)
        prod = 1
        for p, k in factorize(n).items():
            prod *= p**k
        assert prod == n


def test_occupation_and_number_operator():
    s = FockInteger(360)
    assert s.occupation() == [(2, 3), (3, 2), (5, 1)]
    assert s.particle_number() == 6
    assert s.number_eigenvalue() == 360
    assert FockInteger(1).occupation() == []
    assert abs(s.log_energy() - math.log(360)) < 1e-12


def test_primes_sieve():
    ps = list(primes_up_to(30))
    assert ps == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_partition_function_brackets_zeta2():
    partial, (lo, hi) = partition_function(2.0, 10**4)
    target = math.pi**2 / 6.0
    assert partial + lo <= target <= partial + hi
    assert hi - lo < 1e-7


def test_bracket_tightens():
    w1 = (lambda t: t[1] - t[0])(zeta_bracket(2.0, 100))
    w2 = (lambda t: t[1] - t[0])(zeta_bracket(2.0, 10000))
    assert w2 < w1


def test_partition_function_validation():
    with pytest.raises(ValueError):
        partition_function(1.0, 100)
    with pytest.raises(ValueError):
        partition_function(2.0, 0)


def test_euler_product_converges_from_below():
    target = math.pi**2 / 6.0
    e1 = euler_product(2.0, 100)
    e2 = euler_product(2.0, 10000)
    assert e1 < e2 < target
    assert target < e2 * euler_product_tail_factor(2.0, 10000)


def test_smooth_sum_exact():
    # (1 - 1/4)^-1 (1 - 1/9)^-1 (1 - 1/25)^-1
    assert smooth_sum_exact(2, 5) == Fraction(25, 16)


def test_smooth_bruteforce_matches_truncated_product():
    depth = 12
    truncated = Fraction(1)
    for p in (2, 3, 5):
        truncated *= sum(Fraction(1, p ** (2 * e)) for e in range(depth))
    assert smooth_sum_bruteforce(2, 5, depth) == truncated
