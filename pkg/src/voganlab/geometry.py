"""
Smoothness of orbit closures, conormal geometry, and duality.

Tangent spaces.  The closure of a chain orbit C is cut out by the conditions
rank(composite arrow map i -> j) <= r_C[i][j]; these rank conditions generate
a radical ideal (a classical fact for equioriented type-A loci, and for the
(anti)symmetric determinantal loci of the two-eigenvalue shapes), so the
scheme tangent space at a point x is computed from first-order data: a pair
(i, j) contributes the conditions

    coker(c) . dc(v) . ker(c) = 0,    c = composite at x,

exactly when the rank of c at x equals the bound r_C[i][j]; pairs where the
rank at x is strictly smaller contribute nothing at first order (their minors
vanish to order >= 2).  Everything is exact rational linear algebra.  The
KL-based rational-smoothness test in the multiplicity module provides an
independent cross-check of the resulting smooth/singular verdicts.

Duality.  V* is the opposite-orientation variety; its orbits are labelled by
multisegments on the same grid (a segment [b, e] is a strand descending from
grade e to grade b), so the dual of an orbit is reported as an entry of the
same canonical orbit table.  The dual C* of C is the orbit of a generic
covector in the conormal space { xi : [x, xi] = 0 } at a representative: its
rank data is the entrywise maximum over the conormal space, found by seeded
randomized evaluation with verification retries and an exact symbolic
fallback.  The greedy multisegment involution (extracting, from the top grade
down, the shortest segment ending at each grade that still extends the
current chain) computes the same bijection combinatorially and is kept as an
independent route.

The duality is an involution and swaps the open and closed orbits, but it
does NOT reverse the closure order in general: on the chain with dims
(1, 2, 1) the orbits {[0..1], [1], [2]} and {[0..1], [1..2]} are nested, and
so are their duals, in the same direction.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg, orbits
from .errors import InputError, UnsupportedFamilyError
from .orbits import ChainSegs, OrbitRecord
from .variety import VoganVariety

RANDOM_BOUND = 1 << 16
MAX_RETRIES = 8


# ---------------------------------------------------------------------------
# tangent spaces


def _chain_tangent_conditions_at(
    segs_c: ChainSegs, x: list[linalg.Matrix], dims: tuple[int, ...]
) -> list[list[Fraction]]:
    """Rows of first-order conditions on v in the chain coordinates, at the
    point with arrow matrices x (rank data of the stratum is read off x)."""
    k = len(dims)
    arrow_dims = [dims[i] * dims[i + 1] for i in range(k - 1)]
    ncols = sum(arrow_dims)
    offs = [0]
    for a in arrow_dims:
        offs.append(offs[-1] + a)
    rc = orbits.chain_rank_matrix(segs_c, k)

    comp: dict[tuple[int, int], linalg.Matrix] = {}
    for i in range(k - 1):
        comp[(i, i + 1)] = x[i]
        for j in range(i + 2, k):
            comp[(i, j)] = linalg.matmul(x[j - 1], comp[(i, j - 1)])
    rd = {(i, i): dims[i] for i in range(k)}
    for i in range(k):
        for j in range(i + 1, k):
            rd[(i, j)] = linalg.rank(comp[(i, j)])

    rows: list[list[Fraction]] = []
    for i in range(k):
        for j in range(i + 1, k):
            if rd[(i, j)] != rc[(i, j)]:
                continue
            c = comp[(i, j)]
            ker = linalg.nullspace(c)
            cok = linalg.left_nullspace(c)
            if not ker or not cok:
                continue
            for p in cok:
                for kv in ker:
                    row = [Fraction(0)] * ncols
                    for l in range(i, j):
                        left = p if l == j - 1 else linalg.matvec(
                            linalg.transpose(comp[(l + 1, j)]), p
                        )
                        right = kv if l == i else linalg.matvec(comp[(i, l)], kv)
                        base = offs[l]
                        for a in range(dims[l + 1]):
                            if left[a]:
                                for b in range(dims[l]):
                                    if right[b]:
                                        row[base + a * dims[l] + b] += left[a] * right[b]
                    rows.append(row)
    return rows


def tangent_dim_at(c: OrbitRecord, d: OrbitRecord) -> int:
    """Dimension of the scheme tangent space to the closure of c at x_d."""
    if not orbits.closure_leq(d, c):
        raise InputError("tangent_dim_at requires d <= c in the closure order")
    v = c.variety
    if v.kind == "steinberg":
        return c.dim  # closures are coordinate subspaces
    if v.kind == "two_eigenvalue":
        return _two_eig_tangent(c, d)
    total = 0
    for segs_c, segs_d, chain in zip(c.msegs, d.msegs, v.chains):
        x = [
            linalg.to_fractions(m)
            for m in orbits.chain_representative(segs_d, chain.dims)
        ]
        total += chain_tangent_dim_at_point(segs_c, x, chain.dims)
    return total


def chain_tangent_dim_at_point(
    segs_c: ChainSegs, x: list[linalg.Matrix], dims: tuple[int, ...]
) -> int:
    """Tangent dimension of the closure of the orbit of ``segs_c`` at an
    arbitrary point x of it, given by arrow matrices."""
    rows = _chain_tangent_conditions_at(segs_c, x, dims)
    arrow_dim = sum(dims[i] * dims[i + 1] for i in range(len(dims) - 1))
    return arrow_dim - (linalg.rank(rows) if rows else 0)


def _two_eig_tangent(c: OrbitRecord, d: OrbitRecord) -> int:
    v = c.variety
    if d.rank != c.rank:
        # below the rank bound all first-order minor (or pfaffian) data vanishes
        return v.total_dim
    x = linalg.to_fractions(orbits.two_eig_representative(v, d.rank))
    ker = linalg.nullspace(x)
    cok = linalg.left_nullspace(x)
    if not ker or not cok:
        return v.total_dim
    cond_cols = []
    for basis_mat in v.subspace_basis():
        bm = linalg.to_fractions(basis_mat)
        col = []
        for p in cok:
            pb = linalg.matvec(linalg.transpose(bm), p)
            for kv in ker:
                col.append(sum((a * b for a, b in zip(pb, kv)), Fraction(0)))
        cond_cols.append(col)
    sys_rows = linalg.transpose(cond_cols)
    return v.total_dim - (linalg.rank(sys_rows) if sys_rows else 0)


def is_smooth_closure(c: OrbitRecord, table: list[OrbitRecord] | None = None) -> bool:
    """True iff the closure of c is smooth (tangent dim = dim c at all strata)."""
    table = table if table is not None else orbits.enumerate_orbits(c.variety)
    return all(
        tangent_dim_at(c, d) == c.dim for d in table if orbits.closure_leq(d, c)
    )


# ---------------------------------------------------------------------------
# conormal spaces


def chain_conormal_basis(segs: ChainSegs, dims: tuple[int, ...]) -> list[list[Fraction]]:
    """Basis of { xi : [x, xi] = 0 } in dual coordinates of one chain.

    The trace pairing matches the dual coordinate of the arrow entry
    (l; a, b) with the entry (b, a) of the reversed arrow xi_l, with no
    rescaling, so these vectors read directly as reversed-arrow blocks.
    """
    if len(dims) <= 1:
        return []
    action = orbits._commutator_matrix(orbits.chain_representative(segs, dims), dims)
    return linalg.left_nullspace(action)


def _two_eig_conormal_matrices(v: VoganVariety, rank: int) -> list[linalg.Matrix]:
    """Matrix basis of { Xi of the same symmetry type : x Xi = 0 }.

    For both symmetry types the trace pairing reduces the annihilator of the
    tangent space to the single matrix equation x Xi = 0.
    """
    x = linalg.to_fractions(orbits.two_eig_representative(v, rank))
    basis = [linalg.to_fractions(b) for b in v.subspace_basis()]
    n = v.n
    rows = []
    for bm in basis:
        prod = linalg.matmul(x, bm)
        rows.append([prod[i][j] for i in range(n) for j in range(n)])
    kernel_coeffs = linalg.left_nullspace(rows)
    out = []
    for coeffs in kernel_coeffs:
        m = linalg.zeros(n, n)
        for cf, bm in zip(coeffs, basis):
            if cf:
                for i in range(n):
                    for j in range(n):
                        m[i][j] += cf * bm[i][j]
        out.append(m)
    return out


def conormal_space(orbit: OrbitRecord) -> list[list[Fraction]]:
    """Exact basis of the conormal space at the canonical representative,
    as coordinate vectors (chain coordinates / root-line coordinates /
    subspace coordinates)."""
    v = orbit.variety
    if v.kind == "chain":
        widths = [c.arrow_dim for c in v.chains]
        out = []
        offset = 0
        for segs, chain, width in zip(orbit.msegs, v.chains, widths):
            for vec in chain_conormal_basis(segs, chain.dims):
                padded = [Fraction(0)] * sum(widths)
                padded[offset : offset + width] = vec
                out.append(padded)
            offset += width
        return out
    if v.kind == "steinberg":
        # bracketing pairs each root line only with its own opposite, so the
        # annihilator is spanned by the lines missing from the orbit
        basis = []
        for i in range(v.n):
            if i not in orbit.subset:
                vec = [Fraction(0)] * v.n
                vec[i] = Fraction(1)
                basis.append(vec)
        return basis
    mats = _two_eig_conormal_matrices(v, orbit.rank)
    n = v.n
    if v.symmetric_form:
        return [[m[i][j] for i in range(n) for j in range(i, n)] for m in mats]
    return [[m[i][j] for i in range(n) for j in range(i + 1, n)] for m in mats]


# ---------------------------------------------------------------------------
# duality via a generic conormal covector


def _reversed_blocks(vec, dims: tuple[int, ...]):
    """Dual-coordinate vector -> reversed-arrow blocks xi_l: grade l+1 -> l."""
    blocks = []
    pos = 0
    for l in range(len(dims) - 1):
        rows_fwd, cols_fwd = dims[l + 1], dims[l]
        block = [[0] * rows_fwd for _ in range(cols_fwd)]
        for a in range(rows_fwd):
            for b in range(cols_fwd):
                block[b][a] = vec[pos + a * cols_fwd + b]
        pos += rows_fwd * cols_fwd
        blocks.append(block)
    return blocks


def _downward_rank_key(blocks, dims: tuple[int, ...]) -> tuple[int, ...]:
    """Rank data of a covector: ranks of the descending composites j -> i."""
    k = len(dims)
    comp: dict[tuple[int, int], list] = {}
    for l in range(k - 1):
        comp[(l, l + 1)] = linalg.to_fractions(blocks[l])
    for span in range(2, k):
        for i in range(k - span):
            j = i + span
            comp[(i, j)] = linalg.matmul(comp[(i, j - 1)], linalg.to_fractions(blocks[j - 1]))
    out = []
    for i in range(k):
        for j in range(i, k):
            out.append(dims[i] if i == j else linalg.rank(comp[(i, j)]))
    return tuple(out)


def _segs_from_rank_key(key: tuple[int, ...], k: int) -> ChainSegs:
    r = {}
    pos = 0
    for i in range(k):
        for j in range(i, k):
            r[(i, j)] = key[pos]
            pos += 1

    def r_at(i: int, j: int) -> int:
        if i < 0 or j >= k or i > j:
            return 0
        return r[(i, j)]

    segs = []
    for i in range(k):
        for j in range(i, k):
            m = r_at(i, j) - r_at(i - 1, j) - r_at(i, j + 1) + r_at(i - 1, j + 1)
            if m < 0:
                raise InputError("rank data is not a valid orbit invariant")
            segs.extend([(i, j)] * m)
    return tuple(sorted(segs))


def _generic_chain_dual(
    segs: ChainSegs, dims: tuple[int, ...], rng: random.Random
) -> ChainSegs:
    k = len(dims)
    if k <= 1:
        return segs
    basis = chain_conormal_basis(segs, dims)
    if not basis:
        # open orbit: the conormal space is zero, the dual is the zero orbit
        return tuple((i, i) for i in range(k) for _ in range(dims[i]))
    best: tuple[int, ...] | None = None
    confirmations = 0
    for _ in range(MAX_RETRIES):
        coeffs = [Fraction(rng.randint(-RANDOM_BOUND, RANDOM_BOUND)) for _ in basis]
        vec = [
            sum((c * bv[t] for c, bv in zip(coeffs, basis)), Fraction(0))
            for t in range(len(basis[0]))
        ]
        key = _downward_rank_key(_reversed_blocks(vec, dims), dims)
        if best is None:
            best = key
            continue
        if key == best:
            confirmations += 1
            if confirmations >= 2:
                return _segs_from_rank_key(best, k)
        elif all(b <= a for a, b in zip(best, key)):
            continue  # weaker sample, keep the current candidate
        else:
            best = tuple(max(a, b) for a, b in zip(best, key))
            confirmations = 0
    return _segs_from_rank_key(_symbolic_chain_dual(basis, dims), k)


def _symbolic_chain_dual(basis, dims: tuple[int, ...]) -> tuple[int, ...]:
    """Exact generic rank data over the conormal span, by symbolic ranks over
    the rational function field."""
    import sympy

    k = len(dims)
    ts = sympy.symbols(f"t0:{len(basis)}")
    vec = [
        sum((t * sympy.Rational(bv[idx]) for t, bv in zip(ts, basis)), sympy.Integer(0))
        for idx in range(len(basis[0]))
    ]
    blocks = _reversed_blocks(vec, dims)
    mats = [sympy.Matrix(b) for b in blocks]
    comp: dict[tuple[int, int], object] = {}
    for l in range(k - 1):
        comp[(l, l + 1)] = mats[l]
    for span in range(2, k):
        for i in range(k - span):
            j = i + span
            comp[(i, j)] = comp[(i, j - 1)] * mats[j - 1]
    out = []
    for i in range(k):
        for j in range(i, k):
            out.append(dims[i] if i == j else comp[(i, j)].rank())
    return tuple(out)


def pyasetskii_dual(
    orbit: OrbitRecord, seed: int = 0, dual_table: list[OrbitRecord] | None = None
) -> OrbitRecord:
    """
    The dual orbit, reported in the canonical table of the same variety
    (orbits of the opposite-orientation variety carry the same labels).
    """
    v = orbit.variety
    table = dual_table if dual_table is not None else orbits.enumerate_orbits(v)
    rng = random.Random(seed)
    if v.kind == "chain":
        dual_msegs = tuple(
            _generic_chain_dual(segs, chain.dims, rng)
            for segs, chain in zip(orbit.msegs, v.chains)
        )
        return orbits.orbit_by_key(table, dual_msegs)
    if v.kind == "steinberg":
        complement = tuple(i for i in range(v.n) if i not in orbit.subset)
        return orbits.orbit_by_key(table, complement)
    return orbits.orbit_by_key(table, _two_eig_dual_rank(v, orbit.rank, rng))


def _two_eig_dual_rank(v: VoganVariety, rank: int, rng: random.Random) -> int:
    mats = _two_eig_conormal_matrices(v, rank)
    if not mats:
        return 0
    n = v.n
    best = -1
    confirmations = 0
    for _ in range(MAX_RETRIES):
        coeffs = [rng.randint(-RANDOM_BOUND, RANDOM_BOUND) for _ in mats]
        m = linalg.zeros(n, n)
        for cf, bm in zip(coeffs, mats):
            for i in range(n):
                for j in range(n):
                    m[i][j] += cf * bm[i][j]
        r = linalg.rank(m)
        if r == best:
            confirmations += 1
            if confirmations >= 2:
                return best
        elif r > best:
            best, confirmations = r, 0
    import sympy

    ts = sympy.symbols(f"t0:{len(mats)}")
    sym = sympy.zeros(n, n)
    for t, bm in zip(ts, mats):
        sym += t * sympy.Matrix([[sympy.Rational(x) for x in row] for row in bm])
    return sym.rank()


# ---------------------------------------------------------------------------
# greedy multisegment involution (independent combinatorial route)


def mw_chain_involution(segs: ChainSegs) -> ChainSegs:
    """
    Greedy maximal-chain extraction, one dual segment per pass.

    Pass: let b be the largest grade ending a segment; take the segment
    ending at b with the largest start.  Walk k = b-1, b-2, ...: at each step
    take, among the remaining segments ending at k whose start is strictly
    below the current segment's start, the one with the largest start; stop
    when none qualifies.  The pass contributes the dual segment
    [b - steps + 1, b]; each segment used is then shortened by one grade
    from the top (disappearing if it was a singleton).

    >>> mw_chain_involution(((0, 1),))
    ((0, 0), (1, 1))
    >>> mw_chain_involution(((0, 0), (1, 1), (2, 2)))
    ((0, 2),)
    """
    pool = sorted(segs)
    out = []
    while pool:
        b = max(e for _, e in pool)
        current = max((s for s in pool if s[1] == b), key=lambda s: s[0])
        pool.remove(current)
        used = [current]
        k = b - 1
        while True:
            cands = [s for s in pool if s[1] == k and s[0] < current[0]]
            if not cands:
                break
            current = max(cands, key=lambda s: s[0])
            pool.remove(current)
            used.append(current)
            k -= 1
        out.append((b - len(used) + 1, b))
        for s in used:
            if s[1] > s[0]:
                pool.append((s[0], s[1] - 1))
        pool.sort()
    return tuple(sorted(out))


def mw_involution(orbit: OrbitRecord, table: list[OrbitRecord] | None = None) -> OrbitRecord:
    """Greedy involution on multisegments; defined for chain varieties only."""
    v = orbit.variety
    if v.kind != "chain":
        raise UnsupportedFamilyError("the multisegment involution needs a chain variety")
    table = table if table is not None else orbits.enumerate_orbits(v)
    dual = tuple(mw_chain_involution(segs) for segs in orbit.msegs)
    return orbits.orbit_by_key(table, dual)
