"""Exact arithmetic with a primitive p-th root of unity, and irreducibility checks.

``zeta`` never appears as a complex number. An element of ``Z[zeta]`` is an
integer polynomial reduced mod ``Phi_p = 1 + t + ... + t^(p-1)``, and
``f(zeta) == 0`` is decided by exact division. That criterion relies on
``Phi_p`` being irreducible, which the factorization and Eisenstein routines
check independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import lcm
from typing import Iterable, Sequence

from .circulant import CirculantVector
from .ring import (
    IntPoly,
    PrimeModulus,
    as_prime,
    content_and_primitive,
    divisors,
    poly_compose,
    poly_divmod,
    poly_exact_div,
)

FACTOR_DEGREE_LIMIT = 8
DEFAULT_SEED = 1729


def phi(p: int | PrimeModulus) -> IntPoly:
    """The p-th cyclotomic polynomial ``1 + t + ... + t^(p-1)``."""
    return IntPoly([1] * as_prime(p).p)


class CyclotomicInt:
    """Element of ``Z[zeta_p]``, stored as its remainder mod ``Phi_p`` (degree < p-1)."""

    __slots__ = ("residue", "p")

    def __init__(self, f: IntPoly | Iterable[int], p: int | PrimeModulus):
        self.p = as_prime(p).p
        f = f if isinstance(f, IntPoly) else IntPoly(f)
        self.residue = poly_divmod(f, phi(self.p))[1]

    @classmethod
    def zeta(cls, p, k: int = 1) -> CyclotomicInt:
        p = as_prime(p).p
        return cls(IntPoly.monomial(k % p), p)

    def _other(self, other) -> IntPoly:
        if isinstance(other, CyclotomicInt):
            if other.p != self.p:
                raise ValueError(f"cannot mix Z[zeta_{self.p}] and Z[zeta_{other.p}]")
            return other.residue
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return CyclotomicInt(self.residue + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return CyclotomicInt(self.residue - o, self.p)

    def __neg__(self):
        return CyclotomicInt(-self.residue, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return CyclotomicInt(self.residue * o, self.p)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = CyclotomicInt([1], self.p)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (CyclotomicInt, int)):
            o = self._other(other)
            return self.residue == CyclotomicInt(o, self.p).residue
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.residue.coeffs))

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def __repr__(self):
        return f"CyclotomicInt({list(self.residue.coeffs)}, p={self.p})"

    def __str__(self):
        return str(self.residue).replace("t", "ζ")


def vanishes_at_zeta(f: IntPoly, p: int | PrimeModulus) -> bool:
    return poly_divmod(f, phi(p))[1].is_zero()


@dataclass
class LemmaReport:
    p: int
    poly: IntPoly
    vanishes: bool
    value_at_1: int
    p_divides_value: bool

    @property
    def consistent(self) -> bool:
        return (not self.vanishes) or self.p_divides_value

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "poly": list(self.poly.coeffs),
            "vanishes": self.vanishes,
            "f(1)": self.value_at_1,
            "p_divides_f(1)": self.p_divides_value,
            "consistent": self.consistent,
        }


def kronecker_lemma_check(f: IntPoly, p: int | PrimeModulus) -> LemmaReport:
    """If ``f(zeta) == 0`` then ``p | f(1)``; report whether this instance agrees."""
    p = as_prime(p).p
    v = f(1)
    return LemmaReport(p=p, poly=f, vanishes=vanishes_at_zeta(f, p),
                       value_at_1=v, p_divides_value=v % p == 0)


def zeta_identity_rows(v, p: int | PrimeModulus) -> list[CyclotomicInt]:
    """Entries of ``A @ (1, zeta, ..., zeta^(p-1))`` for the circulant ``A`` of ``v``."""
    v = v if isinstance(v, CirculantVector) else CirculantVector(v)
    p = as_prime(p).p
    if v.n != p:
        raise ValueError(f"vector length {v.n} does not match p={p}")
    return [CyclotomicInt([v.entry(i, j) for j in range(p)], p) for i in range(p)]


def circulant_zeta_identity(v, p: int | PrimeModulus) -> bool:
    return all(row.is_zero() for row in zeta_identity_rows(v, p))


# -- Kronecker factorization over Z -------------------------------------------

def evaluation_points():
    """0, 1, -1, 2, -2, ..."""
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _signed_divisors(n: int) -> list[int]:
    return [s * d for d in divisors(n) for s in (1, -1)]


def _lagrange_basis(xs: Sequence[int]) -> tuple[list[IntPoly], list[int]]:
    nums, dens = [], []
    for i, xi in enumerate(xs):
        num, den = IntPoly([1]), 1
        for j, xj in enumerate(xs):
            if j != i:
                num = num * IntPoly([-xj, 1])
                den *= xi - xj
        nums.append(num)
        dens.append(den)
    return nums, dens


def _normalize(g: IntPoly) -> IntPoly:
    return content_and_primitive(g)[1]


def _smallest_factor(f: IntPoly) -> IntPoly:
    """An irreducible factor of primitive ``f`` of least degree (``f`` itself if irreducible)."""
    n = f.degree
    if n <= 1:
        return f
    half = n // 2
    xs, ys = [], []
    for x in evaluation_points():
        if len(xs) == half + 1:
            break
        y = f(x)
        if y == 0:
            return IntPoly([-x, 1])
        xs.append(x)
        ys.append(y)
    for d in range(1, half + 1):
        pts = xs[:d + 1]
        nums, dens = _lagrange_basis(pts)
        big = reduce(lcm, (abs(q) for q in dens))
        scale = [big // q for q in dens]
        # g and -g are the same divisor, so fix the sign of g(xs[0]).
        choices = [divisors(ys[0])] + [_signed_divisors(y) for y in ys[1:d + 1]]
        for vals in product(*choices):
            coeffs = []
            for k in range(d + 1):
                c = sum(v * s * num[k] for v, s, num in zip(vals, scale, nums))
                if c % big:
                    break
                coeffs.append(c // big)
            else:
                if coeffs[-1] == 0:
                    continue
                g = _normalize(IntPoly(coeffs))
                if poly_exact_div(f, g) is not None:
                    return g
    return f


def _factor_order(item: tuple[IntPoly, int]):
    g = item[0]
    return g.degree, g.coeffs


@dataclass
class Factorization:
    unit: int
    content: int
    factors: list[tuple[IntPoly, int]]

    def expand(self) -> IntPoly:
        out = IntPoly([self.unit * self.content])
        for g, m in self.factors:
            out = out * g ** m
        return out

    @property
    def irreducible(self) -> bool:
        """True for a primitive polynomial with no nontrivial factorization."""
        return self.content == 1 and len(self.factors) == 1 and self.factors[0][1] == 1

    def __str__(self):
        head = "-" if self.unit < 0 else ""
        if self.content != 1 or not self.factors:
            head += str(self.content)
        parts = [f"({g})" + (f"^{m}" if m > 1 else "") for g, m in self.factors]
        if head in ("", "-"):
            return head + " * ".join(parts)
        return " * ".join([head] + parts)

    def to_json(self) -> dict:
        return {
            "unit": self.unit,
            "content": self.content,
            "factors": [{"coeffs": list(g.coeffs), "multiplicity": m} for g, m in self.factors],
            "irreducible": self.irreducible,
        }


def kronecker_factor(f: IntPoly, max_degree: int = FACTOR_DEGREE_LIMIT) -> Factorization:
    """Factor ``f`` over Z by Kronecker's evaluate-and-interpolate search."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > max_degree:
        raise ValueError(f"degree {f.degree} exceeds the factorization limit {max_degree}")
    c, rest = content_and_primitive(f)
    factors = []
    while rest.degree >= 1:
        g = _smallest_factor(rest)
        mult = 0
        while True:
            q = poly_exact_div(rest, g)
            if q is None:
                break
            rest = q
            mult += 1
        factors.append((g, mult))
    assert rest == IntPoly([1]), rest
    factors.sort(key=_factor_order)
    return Factorization(unit=1 if c > 0 else -1, content=abs(c), factors=factors)


def eisenstein_shift(p: int | PrimeModulus) -> IntPoly:
    """``Phi_p(t + 1)``."""
    return poly_compose(phi(p), IntPoly([1, 1]))


def eisenstein_shift_check(p: int | PrimeModulus) -> bool:
    p = as_prime(p).p
    g = eisenstein_shift(p)
    c = g.coeffs
    return c[-1] % p != 0 and all(x % p == 0 for x in c[:-1]) and c[0] % (p * p) != 0


# -- theorem-level reports ------------------------------------------------------

def random_poly(rng: random.Random, max_degree: int, bound: int) -> IntPoly:
    """Nonzero polynomial of degree <= max_degree, coefficients in [-bound, bound]."""
    d = rng.randint(0, max_degree)
    coeffs = [rng.randint(-bound, bound) for _ in range(d)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return IntPoly(coeffs + [lead])


@dataclass
class IrreducibilityReport:
    p: int
    seed: int
    phi_at_1: int
    p_squared_does_not_divide: bool
    factorization: Factorization | None
    eisenstein: bool
    lemma_trials: int
    lemma_failures: list[list[int]] = field(default_factory=list)

    @property
    def phi_at_1_is_p(self) -> bool:
        return self.phi_at_1 == self.p

    @property
    def single_factor(self) -> bool | None:
        if self.factorization is None:
            return None
        return self.factorization.irreducible and self.factorization.factors[0][0] == phi(self.p)

    @property
    def lemma_holds(self) -> bool:
        return not self.lemma_failures

    @property
    def holds(self) -> bool:
        legs = [self.phi_at_1_is_p, self.p_squared_does_not_divide, self.lemma_holds, self.eisenstein]
        if self.factorization is not None:
            legs.append(self.single_factor)
        return all(legs)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "seed": self.seed,
            "phi(1)": self.phi_at_1,
            "phi(1)_equals_p": self.phi_at_1_is_p,
            "p^2_does_not_divide_p": self.p_squared_does_not_divide,
            "factorization": self.factorization.to_json() if self.factorization else None,
            "single_irreducible_factor": self.single_factor,
            "eisenstein": self.eisenstein,
            "lemma_trials": self.lemma_trials,
            "lemma_failures": self.lemma_failures,
            "holds": self.holds,
        }


def irreducibility_report(p: int | PrimeModulus, seed: int = DEFAULT_SEED, trials: int = 50,
                          include_factorization: bool = True,
                          max_degree: int = FACTOR_DEGREE_LIMIT) -> IrreducibilityReport:
    """Numerical rerun of the argument that ``Phi_p`` cannot split over Z.

    A factorization ``Phi_p = f g`` with both factors nonconstant would give
    ``p | f(1)`` and ``p | g(1)``, hence ``p**2 | Phi_p(1) = p``. The report
    checks ``Phi_p(1) = p``, that ``p**2`` does not divide ``p``, that
    Kronecker's search finds no factor, that the Eisenstein shift applies,
    and that ``p | f(1)`` for ``trials`` random multiples ``f`` of ``Phi_p``.
    """
    p = as_prime(p).p
    ph = phi(p)
    fact = kronecker_factor(ph, max_degree) if include_factorization else None
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        f = ph * random_poly(rng, 6, 50)
        rep = kronecker_lemma_check(f, p)
        if not (rep.vanishes and rep.p_divides_value):
            failures.append(list(f.coeffs))
    value = ph(1)
    return IrreducibilityReport(
        p=p,
        seed=seed,
        phi_at_1=value,
        p_squared_does_not_divide=value % (p * p) != 0,
        factorization=fact,
        eisenstein=eisenstein_shift_check(p),
        lemma_trials=trials,
        lemma_failures=failures,
    )


@dataclass
class RelationReport:
    p: int
    values: list[Fraction]
    integer_vector: list[int]
    is_relation: bool
    is_constant: bool

    @property
    def theorem_consistent(self) -> bool:
        return (not self.is_relation) or self.is_constant

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "values": [str(x) for x in self.values],
            "integer_vector": self.integer_vector,
            "is_relation": self.is_relation,
            "is_constant": self.is_constant,
            "theorem_consistent": self.theorem_consistent,
        }


def rational_relation_check(a: Sequence, p: int | PrimeModulus) -> RelationReport:
    """Is ``sum a_j zeta^j == 0``, and if so are all ``a_j`` equal?"""
    p = as_prime(p).p
    vals = [Fraction(x) for x in a]
    if len(vals) != p:
        raise ValueError(f"expected {p} rationals, got {len(vals)}")
    den = reduce(lcm, (x.denominator for x in vals), 1)
    ints = [int(x * den) for x in vals]
    return RelationReport(
        p=p,
        values=vals,
        integer_vector=ints,
        is_relation=vanishes_at_zeta(IntPoly(ints), p),
        is_constant=len(set(vals)) == 1,
    )


__all__ = [
    "phi", "CyclotomicInt", "vanishes_at_zeta", "kronecker_lemma_check", "LemmaReport",
    "circulant_zeta_identity", "zeta_identity_rows", "kronecker_factor", "Factorization",
    "irreducibility_report", "IrreducibilityReport", "eisenstein_shift", "eisenstein_shift_check",
    "rational_relation_check", "RelationReport",
]
