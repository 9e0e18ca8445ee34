"""Elementary number theory and parameter validation for the pq construction."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

# Miller-Rabin with these bases is deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

MAX_PRIME = 1 << 20


class ParamError(ValueError):
    """Invalid construction parameters.

    ``reason`` is a stable machine-readable code: ``not-prime``,
    ``equal-primes``, ``gcd-not-2``, ``congruence-violation``, ``odd-e``,
    ``too-large`` or ``bad-generator``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n == sp:
            return True
        if n % sp == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
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
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    factors: dict[int, int] = {}
    for sp in _SMALL_PRIMES:
        while n % sp == 0:
            factors[sp] = factors.get(sp, 0) + 1
            n //= sp
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))
    return dict(sorted(factors.items()))


def euler_phi(n: int) -> int:
    result = n
    for prime in factorize(n):
        result -= result // prime
    return result


def mult_order(a: int, n: int) -> int:
    """Multiplicative order of ``a`` modulo ``n``.

    Starts from phi(n) and strips prime factors while the power stays 1, so
    the cost is a handful of modular exponentiations rather than a scan.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = euler_phi(n)
    for prime, exp in factorize(order).items():
        for _ in range(exp):
            if pow(a, order // prime, n) == 1:
                order //= prime
            else:
                break
    return order


def is_primitive_root(g: int, p: int) -> bool:
    return math.gcd(g, p) == 1 and mult_order(g, p) == p - 1


def find_common_primitive_root(p: int, q: int) -> int:
    """Smallest ``g >= 2`` that is a primitive root of both primes."""
    for g in range(2, p * q):
        if g % p == 0 or g % q == 0:
            continue
        if is_primitive_root(g % p, p) and is_primitive_root(g % q, q):
            return g
    raise ParamError("bad-generator", f"no common primitive root of {p} and {q} below {p * q}")


def crt_x(p: int, q: int, g: int) -> int:
    """The unique ``x`` in ``[0, pq)`` with ``x = g (mod p)`` and ``x = 1 (mod q)``."""
    # x = 1 + q*t with q*t = g - 1 (mod p)
    t = (g - 1) * pow(q, -1, p) % p
    return (1 + q * t) % (p * q)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime ``p``, in {-1, 0, 1}."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@dataclass(frozen=True)
class SequenceParams:
    p: int
    q: int
    N: int
    g: int
    x: int
    e: int
    strict: bool = True
    theorem1_applicable: bool = field(default=False, compare=False)
    theorem2_applicable: bool = field(default=False, compare=False)

    @property
    def lower_bound(self) -> int:
        return self.p * self.q - self.p - self.q - 1

    @property
    def satisfies_congruences(self) -> bool:
        return self.p % 4 == 1 and self.q % 4 == 3

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "N": self.N,
            "g": self.g,
            "x": self.x,
            "e": self.e,
            "strict": self.strict,
            "theorem1_applicable": self.theorem1_applicable,
            "theorem2_applicable": self.theorem2_applicable,
        }


def theorem1_applies(p: int, q: int) -> bool:
    """Exact test of ``|q - p| < sqrt(pq) - 1``."""
    lhs = abs(q - p) + 1
    return lhs * lhs < p * q


def make_params(p: int, q: int, strict: bool = True, g: int | None = None) -> SequenceParams:
    """Validate ``(p, q)`` and assemble the construction parameters.

    The smallest common primitive root is used unless ``g`` is given.
    Strict mode additionally requires ``p = 1 (mod 4)`` and ``q = 3 (mod 4)``.
    """
    for name, value in (("p", p), ("q", q)):
        if not is_prime(value):
            raise ParamError("not-prime", f"{name}={value} is not prime")
        if value >= MAX_PRIME:
            raise ParamError("too-large", f"{name}={value} exceeds the 2^20 cap")
    if p == q:
        raise ParamError("equal-primes", f"p and q must differ (both {p})")
    if math.gcd(p - 1, q - 1) != 2:
        raise ParamError("gcd-not-2", f"gcd({p - 1}, {q - 1}) = {math.gcd(p - 1, q - 1)}")
    if strict and not (p % 4 == 1 and q % 4 == 3):
        raise ParamError(
            "congruence-violation",
            f"strict mode needs p = 1 (mod 4) and q = 3 (mod 4), got p = {p % 4}, q = {q % 4}",
        )
    e = (p - 1) * (q - 1) // 2
    if e % 2:
        raise ParamError("odd-e", f"e = {e} is odd; the four-way split of D_0, D_1 is undefined")
    N = p * q
    if g is None:
        g = find_common_primitive_root(p, q)
    elif not (2 <= g < N and is_primitive_root(g % p, p) and is_primitive_root(g % q, q)):
        raise ParamError("bad-generator", f"g={g} is not a common primitive root of {p} and {q}")
    return SequenceParams(
        p=p,
        q=q,
        N=N,
        g=g,
        x=crt_x(p, q, g),
        e=e,
        strict=strict,
        theorem1_applicable=theorem1_applies(p, q),
        theorem2_applicable=(q - p == 2),
    )


def common_primitive_roots(p: int, q: int) -> list[int]:
    """All common primitive roots in ``[2, pq)``."""
    return [
        g
        for g in range(2, p * q)
        if g % p and g % q and is_primitive_root(g % p, p) and is_primitive_root(g % q, q)
    ]
