"""
From orbits to permutations: the multiplicity matrix of standard modules.

Each chain orbit determines a contingency table over the grade composition
d = (d_0, ..., d_{k-1}): every segment walks one strand up the grades and
wraps from its top grade back to its start, so the table T[i][j] counts
strand moves from grade i to grade j.  Both margins of T equal d, so T picks
out a double coset of the parabolic pair (W_d, W_d) in S_N, N = sum(d).  The
dictionary sends the orbit to the unique maximal-length element of that
coset; under it the closure order becomes Bruhat order and orbit dimensions
become length differences.

The multiplicity of the irreducible attached to orbit D inside the standard
module of the irreducible attached to orbit C (trivial local systems) is then
the Kazhdan-Lusztig value

    entry[C][D] = P_{w(C), w(D)}(1),

zero unless C <= D (intersection complexes are supported on closures).  For
a multi-chain variety the entries multiply over chains.

Convention note: of the eight a-priori conventions (min vs max length coset
representative, argument order, table vs its transpose) exactly two survive
calibration against varieties whose multiplicities are forced by smooth
closures, and the two survivors -- (max, (C, D), table) and its global
inverse (max, (C, D), transpose) -- give identical output because
P_{u,w} = P_{u^{-1}, w^{-1}}.  The frozen convention is the first.
"""

from __future__ import annotations

from functools import lru_cache

from . import geometry, kl, orbits
from .errors import UnsupportedFamilyError
from .kl import Perm, Poly
from .orbits import ChainSegs, OrbitRecord
from .variety import VoganVariety

# frozen bridge convention; see calibrate()
CONVENTION = {"rep": "max", "args": "CD", "table": "cycle"}


# ---------------------------------------------------------------------------
# tables and coset representatives


def cycle_table(segs: ChainSegs, k: int) -> list[list[int]]:
    """Strand-move counts: T[i][i+1] along each segment, plus top-to-start."""
    t = [[0] * k for _ in range(k)]
    for b, e in segs:
        for i in range(b, e):
            t[i][i + 1] += 1
        t[e][b] += 1
    return t


def max_coset_rep(table: list[list[int]], dims: tuple[int, ...]) -> Perm:
    """Longest permutation whose block pattern over (dims, dims) is ``table``.

    Row blocks are filled top to bottom; within a row block the column blocks
    are visited right to left and each contributes its largest remaining
    values in descending order.
    """
    k = len(dims)
    starts = [0]
    for d in dims:
        starts.append(starts[-1] + d)
    stocks = [list(range(starts[j] + dims[j], starts[j], -1)) for j in range(k)]
    word: list[int] = []
    for i in range(k):
        for j in range(k - 1, -1, -1):
            for _ in range(table[i][j]):
                word.append(stocks[j].pop(0))
    return tuple(word)


def min_coset_rep(table: list[list[int]], dims: tuple[int, ...]) -> Perm:
    """Shortest permutation with the given block pattern (calibration foil)."""
    k = len(dims)
    starts = [0]
    for d in dims:
        starts.append(starts[-1] + d)
    stocks = [list(range(starts[j] + 1, starts[j] + dims[j] + 1)) for j in range(k)]
    word: list[int] = []
    for i in range(k):
        for j in range(k):
            for _ in range(table[i][j]):
                word.append(stocks[j].pop(0))
    return tuple(word)


def _chain_perm(segs: ChainSegs, dims: tuple[int, ...], convention=None) -> Perm:
    conv = convention or CONVENTION
    table = cycle_table(segs, len(dims))
    if conv["table"] == "transpose":
        table = [list(row) for row in zip(*table)]
    rep = max_coset_rep if conv["rep"] == "max" else min_coset_rep
    return rep(table, dims)


def multisegment_to_permutation(orbit: OrbitRecord) -> tuple[Perm, ...]:
    """Bridge permutations, one per chain."""
    v = orbit.variety
    if v.kind != "chain":
        raise UnsupportedFamilyError("the permutation dictionary needs a chain variety")
    return tuple(
        _chain_perm(segs, chain.dims) for segs, chain in zip(orbit.msegs, v.chains)
    )


# ---------------------------------------------------------------------------
# multiplicities


def _pair_poly(c: OrbitRecord, d: OrbitRecord, convention=None) -> Poly:
    """Product over chains of P_{w(C), w(D)} (argument order per convention)."""
    conv = convention or CONVENTION
    v = c.variety
    result = kl.ONE
    for segs_c, segs_d, chain in zip(c.msegs, d.msegs, v.chains):
        wc = _chain_perm(segs_c, chain.dims, conv)
        wd = _chain_perm(segs_d, chain.dims, conv)
        u, w = (wc, wd) if conv["args"] == "CD" else (wd, wc)
        p = kl.kl_poly(u, w)
        if not p:
            return kl.ZERO
        result = _poly_mul(result, p)
    return result


def _poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return kl.ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return kl.poly_trim(out)


def multiplicity_poly(c: OrbitRecord, d: OrbitRecord) -> Poly:
    """Graded multiplicity (the polynomial itself; internal/debug use)."""
    return _pair_poly(c, d)


def multiplicity(c: OrbitRecord, d: OrbitRecord) -> int:
    """[standard module of C : irreducible of D], trivial local systems."""
    return kl.poly_eval_at_one(_pair_poly(c, d))


def multiplicity_matrix(table: list[OrbitRecord]) -> dict:
    """
    Square multiplicity data over the orbit table.

    Chain varieties get the full KL-backed matrix.  Classical shapes get the
    entries forced by support and by smooth closures (complete for the
    steinberg shape, partial for two-eigenvalue middles), with a marker for
    what the source was; undetermined entries are None.
    """
    if not table:
        return {"entries": [], "source": "kl", "complete": True}
    v = table[0].variety
    n = len(table)
    if v.kind == "chain":
        entries = [[multiplicity(c, d) for d in table] for c in table]
        return {"entries": entries, "source": "kl", "complete": True}
    smooth = {d.index: geometry.is_smooth_closure(d, table) for d in table}
    entries = []
    complete = True
    for c in table:
        row = []
        for d in table:
            if not orbits.closure_leq(c, d):
                row.append(0)
            elif smooth[d.index]:
                row.append(1)
            else:
                row.append(None)
                complete = False
        entries.append(row)
    return {"entries": entries, "source": "smooth-closure-support", "complete": complete}


def rationally_smooth(c: OrbitRecord, table: list[OrbitRecord] | None = None) -> bool:
    """True iff every KL polynomial over strata of the closure of c is 1."""
    v = c.variety
    if v.kind != "chain":
        raise UnsupportedFamilyError("rational smoothness via KL needs a chain variety")
    table = table if table is not None else orbits.enumerate_orbits(v)
    for d in table:
        if not orbits.closure_leq(d, c):
            continue
        p = _pair_poly(d, c)
        if p != kl.ONE:
            return False
    return True


# ---------------------------------------------------------------------------
# calibration of the dictionary conventions


def _check_convention(conv: dict, table: list[OrbitRecord]) -> bool:
    """A convention must make Bruhat order match closure order and reproduce
    every multiplicity forced by support, smooth closures, the open orbit,
    and the first singular stratum value 2."""
    v = table[0].variety
    chain = v.chains[0]
    perms = {
        o.index: _chain_perm(o.msegs[0], chain.dims, conv) for o in table
    }
    for c in table:
        for d in table:
            leq = orbits.closure_leq(c, d)
            if kl.bruhat_leq(perms[c.index], perms[d.index]) != leq:
                return False
    smooth = {o.index: geometry.is_smooth_closure(o, table) for o in table}
    open_orbit = next(o for o in table if o.is_open)
    for c in table:
        for d in table:
            value = kl.poly_eval_at_one(_pair_poly(c, d, conv))
            if c.index == d.index and value != 1:
                return False
            if not orbits.closure_leq(c, d) and value != 0:
                return False
            if smooth[d.index]:
                expected = 1 if orbits.closure_leq(c, d) else 0
                if value != expected:
                    return False
            if c.index == open_orbit.index:
                if value != (1 if d.index == c.index else 0):
                    return False
            if not smooth[d.index] and c.is_closed and d.dim == 3 and v.total_dim == 4:
                # two-eigenvalue (2, 2): stalk of the quadric cone at the origin
                if value != 2:
                    return False
    return True


@lru_cache(maxsize=1)
def calibrate() -> tuple[tuple[tuple[str, str], ...], ...]:
    """Try all eight conventions on the calibration varieties; return the
    survivors as sorted tuples of items."""
    from .variety import steinberg_variety, two_eigenvalue_variety

    tables = [
        orbits.enumerate_orbits(steinberg_variety("gl", 3)),
        orbits.enumerate_orbits(two_eigenvalue_variety("gl", 2)),
    ]
    winners = []
    for rep in ("max", "min"):
        for args in ("CD", "DC"):
            for tab in ("cycle", "transpose"):
                conv = {"rep": rep, "args": args, "table": tab}
                if all(_check_convention(conv, t) for t in tables):
                    winners.append(tuple(sorted(conv.items())))
    return tuple(winners)
