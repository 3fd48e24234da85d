"""Prime classification and the bound vocabulary attached to a prime p.

All equality-sensitive quantities are exact: the balanced factorization of
p-1 is integer arithmetic, the (p+3)/2 and (49p+1)/60 bounds are Fractions,
and "a+b equals 2*sqrt(p-1)" is decided by perfect-square testing, never by
float comparison.  2*sqrt(p-1) and the logarithmic reference value are the
only floats, and they are reported, not compared.

Primality is deterministic Miller-Rabin with a witness set that is proven
complete for all 64-bit inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "is_prime",
    "classify_prime",
    "PrimeClassification",
    "divisors",
    "factorize",
    "balanced_divisor_pair",
    "bound_profile",
    "BoundProfile",
    "primes_below",
    "primitive_root",
    "sqrt_mod",
]

_MAX_INPUT = 2**63

# complete for n < 3,317,044,064,679,887,385,961,981 (> 2^63)
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _check_range(n: int, minimum: int = 1) -> None:
    if not isinstance(n, int):
        raise ValueError(f"expected an integer, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"input {n} below minimum {minimum}")
    if n >= _MAX_INPUT:
        raise ValueError(f"input {n} outside the supported 64-bit range")


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n < 2^63."""
    if n < 2:
        return False
    _check_range(n)
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeClassification:
    is_prime: bool
    is_safe: bool
    is_sophie_germain: bool


def classify_prime(p: int) -> PrimeClassification:
    """Primality plus the safe / Sophie Germain properties.

    p is safe when (p-1)/2 is also prime; p is Sophie Germain when 2p+1 is
    also prime.
    """
    _check_range(p, minimum=2)
    if not is_prime(p):
        return PrimeClassification(False, False, False)
    safe = p > 2 and is_prime((p - 1) // 2)
    germain = is_prime(2 * p + 1)
    return PrimeClassification(True, safe, germain)


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite n (n odd, not a prime power edge)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to factor {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: multiplicity}."""
    _check_range(n)
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(factors.items()))


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    _check_range(n)
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def balanced_divisor_pair(p: int) -> tuple[int, int]:
    """The factorization p-1 = a*b with a <= b and |a-b| minimal.

    The minimizing unordered pair is unique: among divisor pairs of a fixed
    product, the sum (and hence the difference) determines the pair.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = p - 1
    if n == 1:
        return (1, 1)
    a = max(d for d in divisors(n) if d * d <= n)
    return (a, n // a)


@dataclass(frozen=True)
class BoundProfile:
    """Every bound attached to a prime p by the class-count conjecture."""

    p: int
    a: int
    b: int
    sum_ab: int
    lower_old: float            # 2*sqrt(p-1)
    lower_old_ceil: int
    upper_safe: Fraction        # (p+3)/2
    solvable_p2_bound: Fraction  # (49p+1)/60
    star_value: float           # (p-1)/log2(p+1) + 2*log2(p+1)
    sqrt_integral: bool
    is_safe: bool
    is_sophie_germain: bool


def bound_profile(p: int) -> BoundProfile:
    """Assemble the full bound profile of a prime."""
    cls = classify_prime(p)
    if not cls.is_prime:
        raise ValueError(f"{p} is not prime")
    a, b = balanced_divisor_pair(p)
    n = p - 1
    root = math.isqrt(n)
    sqrt_integral = root * root == n
    # exact integer ceiling of 2*sqrt(p-1) = ceil(sqrt(4(p-1)))
    s = math.isqrt(4 * n)
    ceil_lower = s if s * s == 4 * n else s + 1
    log_term = math.log2(p + 1)
    return BoundProfile(
        p=p,
        a=a,
        b=b,
        sum_ab=a + b,
        lower_old=2.0 * math.sqrt(n),
        lower_old_ceil=ceil_lower,
        upper_safe=Fraction(p + 3, 2),
        solvable_p2_bound=Fraction(49 * p + 1, 60),
        star_value=n / log_term + 2.0 * log_term,
        sqrt_integral=sqrt_integral,
        is_safe=cls.is_safe,
        is_sophie_germain=cls.is_sophie_germain,
    )


def primes_below(limit: int) -> list[int]:
    """All primes < limit, by sieve."""
    if limit <= 2:
        return []
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def primitive_root(p: int) -> int:
    """Least primitive root modulo the prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    prime_factors = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors):
            return g
    raise ArithmeticError(f"no primitive root found for {p}")  # pragma: no cover


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo the odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
