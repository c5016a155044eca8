import logging
from functools import lru_cache
from math import gcd, isqrt, lcm

import gmpy2

from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.number_dto import PrimeFactorization

_log = logging.getLogger(__name__)

# Deterministic Miller-Rabin: these witnesses are complete below 3.3 * 10^24 > 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 1 << 24


def _is_strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = pow(x, 2, n)
        if x == n - 1:
            return True
    return False


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise BusinessException(ErrorCodes.INTERNAL_SERVER_ERROR, f"Pollard rho failed on {n}")


@lru_cache(maxsize=65536)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    found: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    p = 5
    bound = min(isqrt(n), _TRIAL_LIMIT)
    while p <= bound:
        for q in (p, p + 2):
            if n % q == 0:
                while n % q == 0:
                    found[q] = found.get(q, 0) + 1
                    n //= q
                bound = min(isqrt(n), _TRIAL_LIMIT)
        p += 6
    pending = [n] if n > 1 else []
    while pending:
        m = pending.pop()
        if NumberCoreService.is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        pending.extend((d, m // d))
    return tuple(sorted(found.items()))


class NumberCoreService:
    """
    Exact integer primitives shared by every other service: primality, factorization,
    perfect powers, multiplicative order.

    All methods are pure and operate on arbitrary precision integers.
    """

    @staticmethod
    def is_prime(n: int) -> bool:
        if n < 2:
            return False
        for p in _MR_WITNESSES:
            if n % p == 0:
                return n == p
        return all(_is_strong_probable_prime(n, a) for a in _MR_WITNESSES)

    @staticmethod
    def factor(n: int) -> PrimeFactorization:
        if n < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"factor requires n >= 1, got {n}")
        return PrimeFactorization(factors=list(_factor_cached(n)))

    @staticmethod
    def factor_dict(n: int) -> dict[int, int]:
        if n < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"factor requires n >= 1, got {n}")
        return dict(_factor_cached(n))

    def perfect_power_decompose(self, n: int) -> tuple[int, int]:
        """
        Write n = base^k with k maximal.

        :param n: integer >= 2
        :return: (base, k) where k is the gcd of the multiplicities of n
        """
        if n <= 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"perfect_power_decompose requires n >= 2, got {n}")
        factors = self.factor_dict(n)
        k = 0
        for e in factors.values():
            k = gcd(k, e)
        base = 1
        for p, e in factors.items():
            base *= p ** (e // k)
        return base, k

    @staticmethod
    def integer_root(n: int, k: int) -> tuple[int, bool]:
        """Floor of the k-th root of n >= 0 and whether it is exact."""
        root, exact = gmpy2.iroot(gmpy2.mpz(n), k)
        return int(root), bool(exact)

    def is_perfect_power(self, n: int, k: int) -> bool:
        return self.integer_root(n, k)[1]

    def euler_phi(self, n: int) -> int:
        result = n
        for p in self.factor_dict(n):
            result = result // p * (p - 1)
        return result

    def divisors(self, n: int) -> list[int]:
        result = [1]
        for p, e in self.factor_dict(n).items():
            result = [d * p ** i for d in result for i in range(e + 1)]
        return sorted(result)

    def multiplicative_order(self, d: int, n: int) -> int:
        if n < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"modulus must be positive, got {n}")
        if gcd(d, n) != 1:
            raise BusinessException(ErrorCodes.NOT_COPRIME, f"gcd({d}, {n}) = {gcd(d, n)} != 1")
        if n == 1:
            return 1
        order = self.euler_phi(n)
        for q in self.factor_dict(order):
            while order % q == 0 and pow(d, order // q, n) == 1:
                order //= q
        return order

    @staticmethod
    def lcm_all(values) -> int:
        result = 1
        for v in values:
            result = lcm(result, v)
        return result

    def primorial_upto(self, k: int) -> int:
        """Product of the primes p <= k."""
        result = 1
        for p in range(2, k + 1):
            if self.is_prime(p):
                result *= p
        return result


number_core_service = NumberCoreService()
