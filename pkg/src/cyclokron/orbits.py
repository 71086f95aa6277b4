"""The diagonal-shift action on permutations and the symbolic circulant determinant.

A permutation ``sigma`` of ``Z/p`` is a rook arrangement ``{(i, sigma[i])}``.
Shifting every rook one step down and one step right (cyclically) gives

    T.sigma = (sigma[p-1] + 1, sigma[0] + 1, ..., sigma[p-2] + 1)   (mod p)

Each rook at ``(i, sigma[i])`` picks the circulant entry ``a[(sigma[i] - i) % p]``,
and the diagonal shift does not change that offset, so every ``T``-orbit
contributes a single monomial. This module enumerates those orbits and
checks the consequences exhaustively.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Sequence

from .ring import PrimeModulus, as_prime

ORBIT_LIMIT = 8


class Permutation:
    """A bijection on ``{0, ..., n-1}`` stored as its image sequence."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def cyclic(cls, n: int, c: int) -> Permutation:
        """``i -> i + c (mod n)``."""
        return cls((i + c) % n for i in range(n))

    def __len__(self):
        return len(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def __iter__(self):
        return iter(self.images)

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.images == other.images
        if isinstance(other, tuple):
            return self.images == other
        return NotImplemented

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.images})"

    def __str__(self):
        return "(" + ",".join(map(str, self.images)) + ")"

    def inversions(self) -> int:
        s = self.images
        n = len(s)
        return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])

    def offsets(self) -> tuple[int, ...]:
        """Which circulant entry each rook lands on: ``(sigma[i] - i) % n``."""
        n = len(self.images)
        return tuple((s - i) % n for i, s in enumerate(self.images))

    def exponent_vector(self) -> tuple[int, ...]:
        """Exponents of ``a_0 .. a_{n-1}`` in this permutation's Leibniz product."""
        e = [0] * len(self.images)
        for k in self.offsets():
            e[k] += 1
        return tuple(e)


def t_action(s: Permutation) -> Permutation:
    p = len(s)
    img = s.images
    return Permutation((img[i - 1] + 1) % p for i in range(p))


def sign(s: Permutation) -> int:
    """``(-1) ** inversions``."""
    return -1 if s.inversions() & 1 else 1


def _check_limit(p: PrimeModulus, limit: int):
    if p.p > limit:
        raise ValueError(f"p={p.p} exceeds the enumeration limit {limit}")


def orbit_decompose(p: int | PrimeModulus, limit: int = ORBIT_LIMIT) -> list[list[Permutation]]:
    """Partition ``S_p`` into ``T``-orbits.

    Orbits are listed in order of their smallest element (the orbit
    representative comes first), each orbit in the order ``sigma, T.sigma, ...``.
    """
    p = as_prime(p)
    _check_limit(p, limit)
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for images in permutations(range(p.p)):
        if images in seen:
            continue
        orbit = []
        s = Permutation(images)
        while s.images not in seen:
            seen.add(s.images)
            orbit.append(s)
            s = t_action(s)
        orbits.append(orbit)
    return orbits


def fixed_points(p: int | PrimeModulus, limit: int = ORBIT_LIMIT) -> list[Permutation]:
    p = as_prime(p)
    _check_limit(p, limit)
    return [s for s in map(Permutation, permutations(range(p.p))) if t_action(s) == s]


def _monomial_key(e: tuple[int, ...]):
    return tuple(sorted(e, reverse=True)), e


class SymbolicDet:
    """Integer combination of monomials ``prod a_j ** e_j``, keyed by exponent vector.

    Every monomial has total degree ``nvars``, as each Leibniz term of an
    ``n x n`` determinant does.
    """

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            self.add(e, c)

    def add(self, e: tuple[int, ...], c: int):
        if len(e) != self.nvars:
            raise ValueError(f"exponent vector {e} has wrong length")
        if sum(e) != self.nvars or min(e) < 0:
            raise ValueError(f"exponent vector {e} is not of degree {self.nvars}")
        c = self.terms.get(e, 0) + c
        if c:
            self.terms[e] = c
        else:
            self.terms.pop(e, None)

    def __eq__(self, other):
        if not isinstance(other, SymbolicDet):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda kv: _monomial_key(kv[0]), reverse=True)

    def evaluate(self, a: Sequence[int]) -> int:
        if len(a) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(a)}")
        return sum(c * prod(x ** k for x, k in zip(a, e) if k) for e, c in self.terms.items())

    def reduce_mod(self, m: int) -> SymbolicDet:
        """Coefficients taken into ``[0, m)``; vanishing terms drop out."""
        return SymbolicDet(self.nvars, {e: c % m for e, c in self.terms.items()})

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            factors = []
            for j, k in enumerate(e):
                if k == 1:
                    factors.append(f"a{j}")
                elif k > 1:
                    factors.append(f"a{j}^{k}")
            parts.append(f"{'+' if c > 0 else '-'}{abs(c)}·" + "·".join(factors or ["1"]))
        return " ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": c} for e, c in self.items()]


def leibniz_symbolic(p: int | PrimeModulus, limit: int = ORBIT_LIMIT) -> SymbolicDet:
    """Exact determinant of the circulant in indeterminates ``a_0 .. a_{p-1}``."""
    p = as_prime(p)
    _check_limit(p, limit)
    acc = Counter()
    for images in permutations(range(p.p)):
        s = Permutation(images)
        acc[s.exponent_vector()] += sign(s)
    return SymbolicDet(p.p, dict(acc))


def power_sum(p: int) -> SymbolicDet:
    """``a_0**p + ... + a_{p-1}**p``."""
    terms = {}
    for j in range(p):
        e = [0] * p
        e[j] = p
        terms[tuple(e)] = 1
    return SymbolicDet(p, terms)


@dataclass
class ClaimReport:
    p: int
    n_permutations: int
    n_fixed: int
    orbit_sizes: dict[int, int]
    expansion: SymbolicDet
    reduced: SymbolicDet
    reduces_to_power_sum: bool
    orbits_homogeneous: bool
    fixed_points_are_powers: bool
    failures: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.reduces_to_power_sum and self.orbits_homogeneous and self.fixed_points_are_powers

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "permutations": self.n_permutations,
            "fixed_points": self.n_fixed,
            "orbit_sizes": {str(k): v for k, v in sorted(self.orbit_sizes.items())},
            "expansion": str(self.expansion),
            "reduced_mod_p": str(self.reduced),
            "reduces_to_power_sum": self.reduces_to_power_sum,
            "orbits_homogeneous": self.orbits_homogeneous,
            "fixed_points_are_powers": self.fixed_points_are_powers,
            "failures": self.failures,
            "holds": self.holds,
        }


def verify_claim(p: int | PrimeModulus, limit: int = ORBIT_LIMIT) -> ClaimReport:
    """Check ``det A == sum a_j**p (mod p)`` through the orbit structure of ``T``."""
    p = as_prime(p)
    _check_limit(p, limit)
    n = p.p
    orbits = orbit_decompose(p, limit)
    failures = []

    homogeneous = True
    fixed_ok = True
    fixed = []
    for orbit in orbits:
        if len(orbit) == 1:
            s = orbit[0]
            fixed.append(s)
            e = s.exponent_vector()
            if sorted(e) != [0] * (n - 1) + [n]:
                fixed_ok = False
                failures.append(f"fixed point {s} gives non-power monomial {e}")
            continue
        if len(orbit) != n:
            homogeneous = False
            failures.append(f"orbit of {orbit[0]} has size {len(orbit)}, expected {n}")
        e0, s0 = orbit[0].exponent_vector(), sign(orbit[0])
        for s in orbit[1:]:
            if s.exponent_vector() != e0 or sign(s) != s0:
                homogeneous = False
                failures.append(f"{s} differs from orbit representative {orbit[0]}")
                break

    powers = sorted(s.exponent_vector() for s in fixed)
    if powers != sorted(power_sum(n).terms) or any((sign(s) - 1) % n for s in fixed):
        fixed_ok = False
        failures.append("fixed points do not yield each a_j**p exactly once with coefficient 1 mod p")

    expansion = leibniz_symbolic(p, limit)
    reduced = expansion.reduce_mod(n)
    reduces = reduced == power_sum(n)
    if not reduces:
        failures.append(f"expansion mod {n} is {reduced}, not the power sum")

    return ClaimReport(
        p=n,
        n_permutations=factorial(n),
        n_fixed=len(fixed),
        orbit_sizes=dict(Counter(len(o) for o in orbits)),
        expansion=expansion,
        reduced=reduced,
        reduces_to_power_sum=reduces,
        orbits_homogeneous=homogeneous,
        fixed_points_are_powers=fixed_ok,
        failures=failures,
    )
