"""
Dense polynomial helpers. A polynomial is a list of coefficients, constant term first.

Integer polynomials back the cyclotomic field; polynomials over GF(p) back the finite field tower.
"""
from fractions import Fraction
from functools import lru_cache


def trim(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


# region integer polynomials

def poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    result = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                result[i + j] += x * y
    return trim(result)


def poly_divmod_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of a by the monic integer polynomial b."""
    a = trim(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    quotient = [0] * (len(a) - db)
    remainder = list(a)
    for i in range(len(a) - 1, db - 1, -1):
        c = remainder[i]
        if c:
            quotient[i - db] = c
            for j in range(db + 1):
                remainder[i - db + j] -= c * b[j]
    return trim(quotient), trim(remainder[:db])


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """n-th cyclotomic polynomial: x^n - 1 divided by the cyclotomic polynomials of the proper divisors."""
    numerator = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            numerator, remainder = poly_divmod_monic(numerator, list(cyclotomic_poly(d)))
            assert not remainder
    return tuple(numerator)

# endregion integer polynomials

# region rational polynomials

def qpoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    lead = Fraction(b[-1])
    quotient = [Fraction(0)] * (len(a) - db)
    remainder = [Fraction(x) for x in a]
    for i in range(len(a) - 1, db - 1, -1):
        c = remainder[i] / lead
        if c:
            quotient[i - db] = c
            for j in range(db + 1):
                remainder[i - db + j] -= c * b[j]
    return trim(quotient), trim(remainder[:db])


def qpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def qpoly_inverse_mod(a: list[Fraction], modulus: list[int]) -> list[Fraction]:
    """Inverse of a modulo an irreducible modulus by the extended Euclidean algorithm over Q."""
    r0, r1 = [Fraction(x) for x in modulus], trim([Fraction(x) for x in a])
    if not r1:
        raise ZeroDivisionError("zero has no inverse")
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, qpoly_sub(s0, poly_mul(q, s1))
    if len(r0) != 1:
        raise ArithmeticError(f"polynomial is not invertible modulo {modulus}")
    return [x / r0[0] for x in s0]

# endregion rational polynomials


# region polynomials over GF(p)

def gf_trim(a: list[int], p: int) -> list[int]:
    return trim([x % p for x in a])


def gf_add(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def gf_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def gf_mul(a: list[int], b: list[int], p: int) -> list[int]:
    return gf_trim(poly_mul(a, b), p)


def gf_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = gf_trim(a, p)
    b = gf_trim(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    inverse = pow(b[-1], p - 2, p)
    if len(a) - 1 < db:
        return [], a
    quotient = [0] * (len(a) - db)
    remainder = list(a)
    for i in range(len(a) - 1, db - 1, -1):
        c = remainder[i] * inverse % p
        if c:
            quotient[i - db] = c
            for j in range(db + 1):
                remainder[i - db + j] = (remainder[i - db + j] - c * b[j]) % p
    return trim(quotient), trim(remainder[:db])


def gf_mod(a: list[int], b: list[int], p: int) -> list[int]:
    return gf_divmod(a, b, p)[1]


def gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = gf_trim(a, p), gf_trim(b, p)
    while b:
        a, b = b, gf_mod(a, b, p)
    if a:
        inverse = pow(a[-1], p - 2, p)
        a = [x * inverse % p for x in a]
    return a


def gf_pow(a: list[int], e: int, p: int, modulus: list[int] | None = None) -> list[int]:
    result = [1]
    base = gf_mod(a, modulus, p) if modulus else gf_trim(a, p)
    while e:
        if e & 1:
            result = gf_mul(result, base, p)
            if modulus:
                result = gf_mod(result, modulus, p)
        e >>= 1
        if e:
            base = gf_mul(base, base, p)
            if modulus:
                base = gf_mod(base, modulus, p)
    return result


def gf_is_irreducible(f: list[int], p: int) -> bool:
    """Ben-Or test: a monic f of degree v is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= v/2."""
    f = gf_trim(f, p)
    v = len(f) - 1
    if v < 1:
        return False
    if v == 1:
        return True
    x = [0, 1]
    power = x
    for _ in range(1, v // 2 + 1):
        power = gf_pow(power, p, p, f)
        if len(gf_gcd(f, gf_sub(power, x, p), p)) > 1:
            return False
    return True


def index_to_coeffs(index: int, p: int, length: int) -> list[int]:
    """Base-p digits of index, least significant first, padded to length."""
    digits = []
    for _ in range(length):
        index, digit = divmod(index, p)
        digits.append(digit)
    return digits


def lowest_irreducible(p: int, v: int) -> list[int]:
    """Monic irreducible of degree v whose lower coefficients have the smallest base-p index."""
    for index in range(p ** v):
        candidate = index_to_coeffs(index, p, v) + [1]
        if gf_is_irreducible(candidate, p):
            return candidate
    raise ValueError(f"no irreducible polynomial of degree {v} over GF({p})")

# endregion polynomials over GF(p)
