"""Exact arithmetic foundations.

Integers are Python ints and rationals are :class:`fractions.Fraction`, both
exact at any magnitude. This module adds residues mod m, dense integer
polynomials, CRT reconstruction and a primality test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Iterable, Sequence

ExactInt = int
Rational = Fraction

#: Degree of the zero polynomial.
NEG_INF = float("-inf")

_TRIAL_DIVISION_LIMIT = 10**10
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _trial_division(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    k = 5
    while k * k <= n:
        if n % k == 0 or n % (k + 2) == 0:
            return False
        k += 6
    return True


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Trial division for ``n < 10**10``; above that a Miller-Rabin test with
    the first thirteen prime bases, which is exact for ``n < 3.3e24``.
    """
    if n < 0:
        raise ValueError(f"is_prime expects n >= 0, got {n}")
    if n < _TRIAL_DIVISION_LIMIT:
        return _trial_division(n)
    if any(n % q == 0 for q in _MR_BASES):
        return False
    return _miller_rabin(n)


@dataclass(frozen=True)
class PrimeModulus:
    """A prime, checked at construction."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"prime modulus must be an int, got {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __int__(self):
        return self.p

    def __index__(self):
        return self.p

    def __str__(self):
        return str(self.p)


def as_prime(p: int | PrimeModulus) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


@dataclass(frozen=True)
class ModInt:
    """Residue class of ``residue`` modulo ``modulus``, kept in ``[0, modulus)``."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.residue
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.residue + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.residue - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.residue * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.residue, self.modulus)

    def __pow__(self, e: int):
        return ModInt(pow(self.residue, e, self.modulus), self.modulus)

    def inverse(self) -> ModInt:
        return ModInt(pow(self.residue, -1, self.modulus), self.modulus)

    def __int__(self):
        return self.residue

    def __str__(self):
        return f"{self.residue} (mod {self.modulus})"


class IntPoly:
    """Dense integer polynomial, little-endian: ``coeffs[j]`` multiplies ``t**j``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and degree :data:`NEG_INF`.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls([0] * degree + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[j] + other[j] for j in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = IntPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                var = "t" if j == 1 else f"t^{j}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    return IntPoly(x)


def poly_mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if f.is_zero() or g.is_zero():
        return IntPoly()
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return IntPoly(out)


def poly_divmod(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide by a monic ``g``; quotient and remainder stay integral."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not g.is_monic():
        raise ValueError(f"divisor must be monic, got {g}")
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return IntPoly(), IntPoly(r)
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c == 0:
            continue
        q[k - dg] = c
        for j, b in enumerate(g.coeffs):
            r[k - dg + j] -= c * b
    return IntPoly(q), IntPoly(r[:dg])


def poly_exact_div(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """Quotient ``f / g`` over Z, or ``None`` if ``g`` does not divide ``f`` in Z[t]."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return IntPoly() if not r else None
    lead = g.coeffs[-1]
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c == 0:
            continue
        if c % lead:
            return None
        c //= lead
        q[k - dg] = c
        for j, b in enumerate(g.coeffs):
            r[k - dg + j] -= c * b
    if any(r[:dg]):
        return None
    return IntPoly(q)


def poly_compose(f: IntPoly, g: IntPoly) -> IntPoly:
    """Return ``f(g(t))`` by Horner's rule."""
    out = IntPoly()
    for c in reversed(f.coeffs):
        out = out * g + c
    return out


def content_and_primitive(f: IntPoly) -> tuple[int, IntPoly]:
    """Split ``f = c * fp`` with ``fp`` primitive and ``fp.lead > 0``.

    The sign of ``f`` travels with ``c``. The zero polynomial maps to ``(0, 0)``.
    """
    if f.is_zero():
        return 0, IntPoly()
    c = reduce(gcd, f.coeffs, 0)
    if f.lead < 0:
        c = -c
    return c, IntPoly(x // c for x in f.coeffs)


def content(f: IntPoly) -> int:
    return reduce(gcd, f.coeffs, 0)


def symmetric_residue(x: int, m: int) -> int:
    """Representative of ``x mod m`` in ``(-m/2, m/2]``."""
    x %= m
    return x - m if x > m // 2 else x


def crt_combine(residues: Sequence[ModInt]) -> int:
    """Reconstruct the integer in ``(-M/2, M/2]`` matching every residue."""
    if not residues:
        raise ValueError("crt_combine needs at least one residue")
    moduli = [r.modulus for r in residues]
    for i, a in enumerate(moduli):
        for b in moduli[i + 1:]:
            if gcd(a, b) != 1:
                raise ValueError(f"moduli {a} and {b} are not coprime")
    x, m = 0, 1
    for r in residues:
        # x + m*k == r.residue (mod r.modulus)
        k = (r.residue - x) * pow(m, -1, r.modulus) % r.modulus
        x += m * k
        m *= r.modulus
    return symmetric_residue(x, m)


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n != 0`` in increasing order."""
    n = abs(n)
    if n == 0:
        raise ValueError("zero has infinitely many divisors")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n >= 1``, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out
