"""Integer polynomial algebra for digit sets and tilings of Z_n.

The digit polynomial of a set A of nonnegative integers is sum_a x^a; its
mask vanishes at k/s exactly when the s-th cyclotomic polynomial divides it.
This module computes cyclotomic polynomials by exact division over Z (no
modular shortcuts), extracts the prime-power cyclotomic divisors of a digit
polynomial, checks the two classical tiling conditions (T1)/(T2), builds the
associated rational spectrum, and finds tiling complements inside Z_n.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .rational import frac_mod1


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[i] is the x^i coefficient.

    Normalized to have no trailing zeros; the zero polynomial has empty
    coefficients.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(tuple(out))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __divmod__(self, divisor: "IntPolynomial"):
        """Exact long division over Z.

        Requires every elimination step to divide exactly (always true for a
        monic divisor); raises ValueError otherwise.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        lead = dcs[-1]
        qlen = len(rem) - len(dcs) + 1
        if qlen <= 0:
            return IntPolynomial(()), self
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            c = rem[i + len(dcs) - 1]
            if c % lead != 0:
                raise ValueError("division is not exact over the integers")
            q = c // lead
            quot[i] = q
            if q:
                for j, d in enumerate(dcs):
                    rem[i + j] -= q * d
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem))

    def divides(self, other: "IntPolynomial") -> bool:
        try:
            _, rem = divmod(other, self)
        except ValueError:
            return False
        return rem.is_zero()

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def compose_power(self, p: int) -> "IntPolynomial":
        """Substitute x -> x^p."""
        if p < 1:
            raise ValueError("power must be >= 1")
        if self.is_zero():
            return self
        out = [0] * ((len(self.coeffs) - 1) * p + 1)
        for i, c in enumerate(self.coeffs):
            out[i * p] = c
        return IntPolynomial(tuple(out))

    @staticmethod
    def monomial_minus_one(s: int) -> "IntPolynomial":
        return IntPolynomial((-1,) + (0,) * (s - 1) + (1,))


def digit_polynomial(digits: Sequence[int]) -> IntPolynomial:
    """sum_a x^a for a set of distinct nonnegative integers."""
    ds = sorted(int(d) for d in digits)
    if len(set(ds)) != len(ds):
        raise ValueError("digits must be distinct")
    if ds and ds[0] < 0:
        raise ValueError("digits must be nonnegative")
    out = [0] * (ds[-1] + 1 if ds else 1)
    for d in ds:
        out[d] = 1
    return IntPolynomial(tuple(out))


@lru_cache(maxsize=None)
def cyclotomic(s: int) -> IntPolynomial:
    """The s-th cyclotomic polynomial, by dividing x^s - 1 by the proper
    divisors' cyclotomics (exact integer division throughout)."""
    if s < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if s == 1:
        return IntPolynomial((-1, 1))
    num = IntPolynomial.monomial_minus_one(s)
    for d in range(1, s):
        if s % d == 0:
            quot, rem = divmod(num, cyclotomic(d))
            assert rem.is_zero()
            num = quot
    return num


def divides_cyclotomic(digits: Sequence[int], s: int) -> bool:
    """Does the s-th cyclotomic polynomial divide the digit polynomial?

    Equivalently: does the uniform mask of `digits` vanish at k/s for k
    coprime to s?
    """
    if s < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = digit_polynomial(digits)
    if euler_phi(s) > max(0, poly.degree):
        return False
    return cyclotomic(s).divides(poly)


# ---------------------------------------------------------------------------
# prime-power bookkeeping


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_power_split(q: int) -> Optional[tuple[int, int]]:
    """(p, alpha) if q = p^alpha with alpha >= 1, else None."""
    if q < 2:
        return None
    for p in _primes_upto(int(q**0.5) + 1):
        if q % p == 0:
            alpha = 0
            while q % p == 0:
                q //= p
                alpha += 1
            return (p, alpha) if q == 1 else None
    return (q, 1)  # q itself prime


def euler_phi(s: int) -> int:
    out = s
    m = s
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


PrimePowerSet = tuple[int, ...]


def prime_power_divisors(digits: Sequence[int]) -> PrimePowerSet:
    """All prime powers p^alpha > 1 whose cyclotomic divides the digit
    polynomial.

    The candidate list is finite because phi(p^alpha) (the cyclotomic degree)
    can be at most deg = max(digits).
    """
    poly = digit_polynomial(digits)
    deg = max(0, poly.degree)
    found = []
    for p in _primes_upto(deg + 1):
        q = p
        while (q // p) * (p - 1) <= deg:
            if cyclotomic(q).divides(poly):
                found.append(q)
            q *= p
    return tuple(sorted(found))


def cyclotomic_divisor_orders(digits: Sequence[int]) -> tuple[int, ...]:
    """All s >= 2 whose cyclotomic divides the digit polynomial.

    Candidates are bounded by phi(s) <= deg, and phi(s) >= sqrt(s/2) caps
    s at 2*deg^2.  These orders give every root-of-unity zero k/s of the
    uniform mask; when the digit polynomial splits entirely into cyclotomic
    factors (e.g. for any set tiling {0..n-1}) they give every zero on the
    unit circle.
    """
    poly = digit_polynomial(digits)
    deg = max(0, poly.degree)
    out = []
    for s in range(2, 2 * deg * deg + 2):
        if euler_phi(s) <= deg and cyclotomic(s).divides(poly):
            out.append(s)
    return tuple(out)


def cyclotomic_free_remainder(digits: Sequence[int]) -> IntPolynomial:
    """Divide every cyclotomic factor (with multiplicity) out of the digit
    polynomial; a constant remainder certifies that all unit-circle mask
    zeros are roots of unity."""
    poly = digit_polynomial(digits)
    for s in cyclotomic_divisor_orders(digits):
        phi_s = cyclotomic(s)
        while phi_s.divides(poly):
            poly, _ = divmod(poly, phi_s)
    return poly


def satisfies_t1(digits: Sequence[int]) -> bool:
    """Size condition: #digits equals the product of the primes underlying
    the prime-power cyclotomic divisors."""
    prod = 1
    for q in prime_power_divisors(digits):
        p, _ = prime_power_split(q)
        prod *= p
    return prod == len(set(digits))


def satisfies_t2(digits: Sequence[int]) -> bool:
    """Product condition: for prime powers q_1, ..., q_r (r >= 2) of pairwise
    distinct primes in the divisor set, the cyclotomic of q_1 * ... * q_r
    also divides the digit polynomial.

    Vacuously true when the divisor set touches at most one prime.
    """
    by_prime: dict[int, list[int]] = {}
    for q in prime_power_divisors(digits):
        p, _ = prime_power_split(q)
        by_prime.setdefault(p, []).append(q)
    primes = sorted(by_prime)
    for r in range(2, len(primes) + 1):
        for chosen in itertools.combinations(primes, r):
            for combo in itertools.product(*(by_prime[p] for p in chosen)):
                if not divides_cyclotomic(digits, math.prod(combo)):
                    return False
    return True


def laba_spectrum(digits: Sequence[int]) -> tuple[Fraction, ...]:
    """Rational spectrum sum_q k_q / q (k_q < prime of q), reduced mod 1.

    Requires both tiling conditions; the result always has exactly #digits
    elements and is a bi-zero set of the uniform mask (verified by the
    cyclotomic divisibility of each difference's denominator downstream).
    """
    if not satisfies_t1(digits):
        raise ValueError("size condition (T1) fails for this digit set")
    if not satisfies_t2(digits):
        raise ValueError("product condition (T2) fails for this digit set")
    S = prime_power_divisors(digits)
    choices = []
    for q in S:
        p, _ = prime_power_split(q)
        choices.append([Fraction(k, q) for k in range(p)])
    values = {frac_mod1(sum(combo, Fraction(0))) for combo in itertools.product(*choices)}
    out = tuple(sorted(values))
    if len(out) != len(set(digits)):
        raise AssertionError("spectrum size disagrees with the digit count")
    return out


# ---------------------------------------------------------------------------
# tilings of Z_n


def verify_tiling(digits: Sequence[int], complement: Sequence[int], modulus: int) -> bool:
    """Exact check that every element of {0..modulus-1} has a unique
    representation a + b."""
    sums = sorted(a + b for a in digits for b in complement)
    return sums == list(range(modulus))


def tiling_complement(digits: Sequence[int], modulus: int) -> Optional[tuple[int, ...]]:
    """Greedy complement B with digits + B = {0..modulus-1}, or None.

    The smallest uncovered point must lie in any valid complement, so the
    greedy construction is complete: it finds the (unique) complement
    whenever one exists.
    """
    A = sorted(set(int(d) for d in digits))
    if not A or A[0] != 0 or A[-1] >= modulus:
        raise ValueError("digit set must satisfy 0 in A subset {0..modulus-1}")
    if modulus % len(A) != 0:
        return None
    covered = [False] * modulus
    B = []
    while not all(covered):
        b = covered.index(False)
        cells = [a + b for a in A]
        if any(c >= modulus or covered[c] for c in cells):
            return None
        for c in cells:
            covered[c] = True
        B.append(b)
    assert verify_tiling(A, B, modulus)
    return tuple(B)


def long_decomposition(
    digits: Sequence[int], complement: Sequence[int], modulus: int
) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Peel one block level off a tiling pair: A = m*A' + {0..m-1}, B = m*B'.

    m is the smallest nonzero element of B (or m = modulus when B = {0}).
    Returns (m, A', B') with A' + B' tiling {0..modulus/m - 1}.  Requires
    1 in A except in the base case; for pairs with 1 in B instead, swap the
    arguments (the tiling relation is symmetric).
    """
    A = sorted(set(int(a) for a in digits))
    B = sorted(set(int(b) for b in complement))
    if not verify_tiling(A, B, modulus):
        raise ValueError("inputs do not tile {0..modulus-1}")
    if B == [0]:
        if A != list(range(modulus)):
            raise ValueError("block equation A = m*A' + {0..m-1} fails in the base case")
        return modulus, (0,), (0,)
    if 1 not in A:
        raise ValueError(
            "decomposition needs 1 in the digit set; swap the pair "
            "(the tiling relation is symmetric) and decompose the complement side"
        )
    m = min(b for b in B if b != 0)
    if modulus % m != 0:
        raise ValueError(f"block size {m} does not divide the modulus {modulus}")
    if any(b % m != 0 for b in B):
        bad = next(b for b in B if b % m != 0)
        raise ValueError(f"discrete part equation B = m*B' fails at {bad}")
    B_out = tuple(b // m for b in B)
    A_out = tuple(sorted({a // m for a in A}))
    rebuilt = sorted(m * ap + r for ap in A_out for r in range(m))
    if rebuilt != A:
        raise ValueError("block equation A = m*A' + {0..m-1} fails")
    if not verify_tiling(A_out, B_out, modulus // m):
        raise ValueError("peeled pair does not tile the quotient")
    return m, A_out, B_out


def scaled_prime_power_divisors(digits: Sequence[int], m: int) -> PrimePowerSet:
    """Divisor set of the dilated digit set m*A via the scaling law: each
    p^alpha becomes p^(alpha + v_p(m))."""
    if m < 1:
        raise ValueError("scale factor must be >= 1")
    out = []
    for q in prime_power_divisors(digits):
        p, alpha = prime_power_split(q)
        gamma = 0
        mm = m
        while mm % p == 0:
            mm //= p
            gamma += 1
        out.append(p ** (alpha + gamma))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class TileCertificate:
    """Everything the tiling analysis of (digits, modulus) established."""

    digits: tuple[int, ...]
    modulus: int
    complement: Optional[tuple[int, ...]]
    prime_powers: PrimePowerSet
    t1: bool
    t2: bool
    spectrum: Optional[tuple[Fraction, ...]]


def tile_certificate(digits: Sequence[int], modulus: int) -> TileCertificate:
    """Run the complement search and the (T1)/(T2) checks; attach the
    rational spectrum only when the set tiles and both conditions hold,
    and only after verifying it is a genuine bi-zero set."""
    A = tuple(sorted(set(int(d) for d in digits)))
    complement = tiling_complement(A, modulus)
    S = prime_power_divisors(A)
    t1 = satisfies_t1(A)
    t2 = satisfies_t2(A)
    spectrum = None
    if complement is not None and t1 and t2:
        spectrum = laba_spectrum(A)
        for i, lam in enumerate(spectrum):
            for mu in spectrum[:i]:
                d = lam - mu
                if d.denominator == 1 or not divides_cyclotomic(A, d.denominator):
                    raise AssertionError(f"spectrum difference {d} is not a mask zero")
    return TileCertificate(A, modulus, complement, S, t1, t2, spectrum)
