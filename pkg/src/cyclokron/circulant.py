"""Circulant matrices and exact determinants.

The circulant of ``(a0, ..., a_{n-1})`` has entry ``A[i][j] = a[(j - i) % n]``:
row ``i`` is row 0 rotated right ``i`` times. Four determinant routes are
provided and are deliberately independent of one another:

* :func:`det_leibniz` sums over all ``n!`` permutations (the oracle),
* :func:`det_bareiss` runs fraction-free elimination,
* :func:`det_multimodular` works mod word-size primes and CRT-combines,
* :func:`det_powersum_mod_p` gives ``det mod p`` as ``sum(a_j**p) mod p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import prod
from typing import Iterable, Sequence

from .ring import ModInt, PrimeModulus, as_prime, crt_combine, is_prime, prime_factors

LEIBNIZ_LIMIT = 9
MULTIMODULAR_START = 2**15


@dataclass(frozen=True)
class CirculantVector:
    a: tuple[int, ...]

    def __init__(self, a: Iterable[int]):
        a = tuple(int(x) for x in a)
        if not a:
            raise ValueError("a circulant needs at least one entry")
        object.__setattr__(self, "a", a)

    @property
    def n(self) -> int:
        return len(self.a)

    def __len__(self):
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    def __getitem__(self, j):
        return self.a[j]

    def entry(self, i: int, j: int) -> int:
        return self.a[(j - i) % self.n]

    def matrix(self) -> list[list[int]]:
        n = self.n
        return [[self.a[(j - i) % n] for j in range(n)] for i in range(n)]

    def rotate(self, k: int = 1) -> CirculantVector:
        """Shift the defining row right by ``k`` (``(a0, a1, a2) -> (a2, a0, a1)``)."""
        k %= self.n
        return CirculantVector(self.a[-k:] + self.a[:-k] if k else self.a)


def _vec(v) -> CirculantVector:
    return v if isinstance(v, CirculantVector) else CirculantVector(v)


@lru_cache(maxsize=None)
def _signed_permutations(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    out = []
    for sigma in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])
        out.append((-1 if inv & 1 else 1, sigma))
    return tuple(out)


def det_leibniz(v, limit: int = LEIBNIZ_LIMIT) -> int:
    """Brute-force Leibniz expansion; refuses ``n > limit``."""
    v = _vec(v)
    n = v.n
    if n > limit:
        raise ValueError(f"Leibniz expansion limited to n <= {limit}, got n={n}")
    a = v.a
    total = 0
    for s, sigma in _signed_permutations(n):
        term = prod(a[(sigma[i] - i) % n] for i in range(n))
        if term:
            total += s * term
    return total


def bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free elimination on a square integer matrix; the input is left intact."""
    m = [list(row) for row in m]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division was not exact"
                m[i][j] = q
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] if n else 1


def det_bareiss(v) -> int:
    return bareiss_det(_vec(v).matrix())


def hadamard_bound_squared(v) -> int:
    """Square of the Hadamard bound: every row has squared norm ``sum(a_j**2)``."""
    v = _vec(v)
    return sum(x * x for x in v.a) ** v.n


def _det_mod_gauss(m: list[list[int]], q: int) -> int:
    m = [[x % q for x in row] for row in m]
    n = len(m)
    det = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k]), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        pk = m[k][k]
        det = det * pk % q
        inv = pow(pk, -1, q)
        for i in range(k + 1, n):
            f = m[i][k] * inv % q
            if f:
                row_k = m[k]
                row_i = m[i]
                for j in range(k, n):
                    row_i[j] = (row_i[j] - f * row_k[j]) % q
    return det % q


@lru_cache(maxsize=None)
def _root_of_unity(n: int, q: int) -> int:
    """A primitive ``n``-th root of unity mod prime ``q`` (requires ``q % n == 1``)."""
    factors = prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // f, q) != 1 for f in factors):
            return pow(g, (q - 1) // n, q)
    raise ArithmeticError(f"no generator found mod {q}")


def _det_mod_eigen(a: Sequence[int], q: int) -> int:
    n = len(a)
    w = _root_of_unity(n, q)
    det = 1
    for k in range(n):
        x = pow(w, k, q)
        acc = 0
        for c in reversed(a):
            acc = (acc * x + c) % q
        det = det * acc % q
    return det


def det_mod_prime(v, q: int, fast: bool = True) -> int:
    """``det A mod q``; with ``fast`` and ``q % n == 1`` multiplies the DFT eigenvalues."""
    v = _vec(v)
    if fast and (q - 1) % v.n == 0:
        return _det_mod_eigen(v.a, q)
    return _det_mod_gauss(v.matrix(), q)


def _primes_from(start: int):
    q = start + 1
    while True:
        if is_prime(q):
            yield q
        q += 1


def det_multimodular(v, fast: bool = True) -> int:
    v = _vec(v)
    # product of primes must exceed 2*B, i.e. M**2 > 4*B**2
    target = 4 * hadamard_bound_squared(v)
    residues = []
    m = 1
    for q in _primes_from(MULTIMODULAR_START):
        residues.append(ModInt(det_mod_prime(v, q, fast=fast), q))
        m *= q
        if m * m > target:
            break
    return crt_combine(residues)


def det_powersum_mod_p(v, p: int | PrimeModulus) -> ModInt:
    """``sum(a_j**p) mod p``, which the circulant congruence equates with ``det A mod p``."""
    v = _vec(v)
    p = as_prime(p).p
    if v.n != p:
        raise ValueError(f"vector length {v.n} does not match p={p}")
    return ModInt(sum(pow(x, p, p) for x in v.a), p)


def cyclic_convolve(u, w) -> CirculantVector:
    u, w = _vec(u), _vec(w)
    if u.n != w.n:
        raise ValueError(f"length mismatch: {u.n} vs {w.n}")
    n = u.n
    out = [0] * n
    for i, x in enumerate(u.a):
        if x:
            for j, y in enumerate(w.a):
                out[(i + j) % n] += x * y
    return CirculantVector(out)


ALGORITHMS = {
    "leibniz": det_leibniz,
    "bareiss": det_bareiss,
    "multimodular": det_multimodular,
}


def determinant(v, algorithm: str = "bareiss") -> int:
    try:
        fn = ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
    return fn(v)


def matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*y)] for row in x]


__all__ = [
    "CirculantVector", "det_leibniz", "det_bareiss", "det_multimodular",
    "det_powersum_mod_p", "det_mod_prime", "cyclic_convolve", "determinant",
    "bareiss_det", "hadamard_bound_squared", "matmul",
]
