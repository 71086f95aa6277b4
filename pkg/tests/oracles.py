"""Slow, independent reference computations used only by the tests."""

import cmath
from itertools import permutations


def laplace_det(m):
    """Cofactor expansion along the first row."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * laplace_det(minor)
    return total


def circulant_matrix(a):
    n = len(a)
    return [[a[(j - i) % n] for j in range(n)] for i in range(n)]


def sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for k in range(2, int(limit ** 0.5) + 1):
        if flags[k]:
            flags[k * k::k] = bytearray(len(flags[k * k::k]))
    return flags


def crt_enumerate(pairs):
    """Scan the symmetric range for the unique solution."""
    m = 1
    for _, q in pairs:
        m *= q
    lo = -((m - 1) // 2)
    for x in range(lo, lo + m):
        if all((x - r) % q == 0 for r, q in pairs):
            return x
    raise AssertionError("no solution")


def cycle_sign(images):
    """Sign from the cycle decomposition, independent of inversion counting."""
    seen = [False] * len(images)
    sgn = 1
    for i in range(len(images)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


def complex_vanishes(coeffs, p, tol=1e-6):
    """Float evaluation at exp(2*pi*i/p); only sound for small coefficients."""
    z = cmath.exp(2j * cmath.pi / p)
    return abs(sum(c * z ** j for j, c in enumerate(coeffs))) < tol


def all_permutations(n):
    return list(permutations(range(n)))
