"""
Split classical dual groups: graded standard representations and the
general-linear realisation of their Steinberg-parameter orbits.

For each family the standard representation is graded by the pairing of its
weights with the coroot sum, so every simple root vector raises the grade by
exactly one.  A subset S of simple roots determines a point x_S (the sum of
the chosen root vectors); its general-linear shadow is the multisegment read
off the exact ranks of the graded powers of x_S.  That shadow is what the
Arthur-type test consumes.

Matrix conventions (split forms, Gram matrix antidiagonal):

* Sp(2n): basis v_1..v_n, v_{n+1}..v_{2n} with v_i of weight e_i and
  v_{2n+1-i} of weight -e_i; X in sp iff X^T J + J X = 0 for the standard
  antidiagonal symplectic J.
* SO(2n+1), SO(2n): same index pattern around the antidiagonal symmetric
  form, with a weight-0 middle vector in the odd case.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import InputError, UnsupportedFamilyError
from .variety import GL, SO_EVEN, SO_ODD, SP_DUAL, Chain, steinberg_grading


def _zero(dim: int) -> list[list[int]]:
    return [[0] * dim for _ in range(dim)]


def _weights_and_rho(family: str, n: int):
    """Weight of each basis vector (as +i / -i / 0) and the coroot-sum pairing."""
    if family == SP_DUAL:
        dim = 2 * n
        weights = list(range(1, n + 1)) + [-(n - i) for i in range(n)]
        rho = {i: Fraction(2 * (n - i) + 1, 2) for i in range(1, n + 1)}
    elif family == SO_ODD:
        dim = 2 * n + 1
        weights = list(range(1, n + 1)) + [0] + [-(n - i) for i in range(n)]
        rho = {i: Fraction(n - i + 1) for i in range(1, n + 1)}
    elif family == SO_EVEN:
        dim = 2 * n
        weights = list(range(1, n + 1)) + [-(n - i) for i in range(n)]
        rho = {i: Fraction(n - i) for i in range(1, n + 1)}
    else:
        raise UnsupportedFamilyError(f"no classical model for family {family!r}")
    exps = [rho[w] if w > 0 else (-rho[-w] if w < 0 else Fraction(0)) for w in weights]
    return dim, weights, exps


def simple_root_matrices(family: str, n: int) -> list[list[list[int]]]:
    """Root vectors for the simple roots, acting on the graded standard rep."""
    if family == SP_DUAL:
        dim = 2 * n
        prime = lambda i: 2 * n + 1 - i  # noqa: E731
        mats = []
        for i in range(1, n):  # e_i - e_{i+1}
            m = _zero(dim)
            m[i - 1][i] = 1
            m[prime(i + 1) - 1][prime(i) - 1] = -1
            mats.append(m)
        m = _zero(dim)  # 2 e_n
        m[n - 1][n] = 1
        mats.append(m)
        return mats
    if family == SO_ODD:
        dim = 2 * n + 1
        prime = lambda i: 2 * n + 2 - i  # noqa: E731
        mid = n + 1
        mats = []
        for i in range(1, n):
            m = _zero(dim)
            m[i - 1][i] = 1
            m[prime(i + 1) - 1][prime(i) - 1] = -1
            mats.append(m)
        m = _zero(dim)  # e_n
        m[n - 1][mid - 1] = 1
        m[mid - 1][prime(n) - 1] = -1
        mats.append(m)
        return mats
    if family == SO_EVEN:
        dim = 2 * n
        prime = lambda i: 2 * n + 1 - i  # noqa: E731
        mats = []
        for i in range(1, n):
            m = _zero(dim)
            m[i - 1][i] = 1
            m[prime(i + 1) - 1][prime(i) - 1] = -1
            mats.append(m)
        m = _zero(dim)  # e_{n-1} + e_n
        m[n - 2][prime(n) - 1] = 1
        m[n - 1][prime(n - 1) - 1] = -1
        mats.append(m)
        return mats
    raise UnsupportedFamilyError(f"no classical model for family {family!r}")


def graded_exponents(family: str, n: int) -> list[Fraction]:
    return _weights_and_rho(family, n)[2]


def subset_point_matrix(family: str, n: int, subset) -> list[list[int]]:
    mats = simple_root_matrices(family, n)
    if any(i < 0 or i >= len(mats) for i in subset):
        raise InputError(f"root index out of range (have {len(mats)} simple roots)")
    dim = len(mats[0])
    x = _zero(dim)
    for i in subset:
        for a in range(dim):
            for b in range(dim):
                x[a][b] += mats[i][a][b]
    return x


def gl_multisegment_of_subset(family: str, n: int, subset) -> tuple[Chain, tuple]:
    """
    The multisegment of x_S, read on the standard-representation grading.

    Returns (chain, segments) with segments a sorted tuple of (b, e) index
    pairs on the chain grid.  Segment counts come from the exact ranks of the
    graded powers of x_S via inclusion-exclusion.
    """
    family_chain = steinberg_grading(family, n)
    x = subset_point_matrix(family, n, subset)
    exps = graded_exponents(family, n)
    # indices of basis vectors per grade, grade i <-> chain index i
    k = family_chain.length
    grade_of = {family_chain.exponent(i): i for i in range(k)}
    buckets: list[list[int]] = [[] for _ in range(k)]
    for idx, e in enumerate(exps):
        buckets[grade_of[e]].append(idx)

    def restricted_rank(a: int, b: int) -> int:
        """Rank of x^(b-a) from grade a to grade b."""
        if a == b:
            return len(buckets[a])
        power = x
        for _ in range(b - a - 1):
            power = linalg.matmul(linalg.to_fractions(power), linalg.to_fractions(x))
        sub = [[power[r][c] for c in buckets[a]] for r in buckets[b]]
        return linalg.rank(sub)

    r = {}
    for a in range(k):
        for b in range(a, k):
            r[(a, b)] = restricted_rank(a, b)

    def r_at(a: int, b: int) -> int:
        if a < 0 or b >= k or a > b:
            return 0
        return r[(a, b)]

    segments = []
    for a in range(k):
        for b in range(a, k):
            mult = r_at(a, b) - r_at(a - 1, b) - r_at(a, b + 1) + r_at(a - 1, b + 1)
            if mult < 0:
                raise InputError("inconsistent rank data for subset point")
            segments.extend([(a, b)] * mult)
    return family_chain, tuple(sorted(segments))


def two_eigenvalue_gl_segments(n: int, rank: int) -> tuple:
    """GL shadow of the rank-r stratum on the (n, n) two-eigenvalue grid."""
    segs = [(0, 1)] * rank + [(0, 0)] * (n - rank) + [(1, 1)] * (n - rank)
    return tuple(sorted(segs))


def steinberg_family_label(family: str, n: int) -> str:
    names = {
        GL: f"GL({n})",
        SP_DUAL: f"Sp({2 * n},C) dual (G = SO({2 * n + 1}))",
        SO_ODD: f"SO({2 * n + 1},C) dual (G = Sp({2 * n}))",
        SO_EVEN: f"SO({2 * n},C) dual (G = SO({2 * n}))",
    }
    return names[family]
