"""Small integer helpers shared by the group builders and the configuration layer."""


def is_prime(n: int) -> bool:
    """Return True if n is prime."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p**k, or None if q is not a prime power."""
    if q < 2:
        return None
    p = 2
    while q % p:
        p += 1
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    return (p, k) if rest == 1 else None


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a positive integer n."""
    if n <= 0:
        raise ValueError(f"valuation is defined for positive integers, got {n}")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def inverse_mod(a: int, p: int) -> int:
    """Inverse of a modulo the prime p."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    return pow(a, p - 2, p)
