"""
Orbit enumeration, rank invariants, representatives, and the closure order.

Orbits of a chain variety are multisegments: multisets of intervals [b, e] on
the chain grid whose coverage at every grade equals the dimension there.  The
complete orbit invariant is the rank matrix r[i][j] = number of segments
containing [i, j], which equals the rank of the composed arrow maps at any
orbit point.  The closure order is entrywise rank dominance (smaller orbit =
smaller ranks); dimensions come from the exact rank of the infinitesimal
action of the symmetry group at a representative.

Ids are deterministic: orbits are sorted by dimension, then by their rank
data, so identical inputs always produce identical tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import classical, linalg
from .errors import InputError, InternalInvariantError, UnsupportedFamilyError
from .variety import GL, Chain, VoganVariety

Seg = tuple[int, int]
ChainSegs = tuple[Seg, ...]


# ---------------------------------------------------------------------------
# single-chain multisegment combinatorics


def chain_multisegments(dims: tuple[int, ...]) -> list[ChainSegs]:
    """All multisegments covering ``dims``, by exhaustive backtracking.

    Intervals are tried in decreasing length (singleton multiplicities are
    then forced by the residual coverage).
    """
    k = len(dims)
    if k == 0:
        return [()]
    intervals = [
        (b, b + length - 1)
        for length in range(k, 1, -1)
        for b in range(0, k - length + 1)
    ]
    residual = list(dims)
    segs: list[Seg] = []
    out: list[ChainSegs] = []

    def rec(idx: int) -> None:
        if idx == len(intervals):
            for b, r in enumerate(residual):
                segs.extend([(b, b)] * r)
            out.append(tuple(sorted(segs)))
            del segs[len(segs) - sum(residual):]
            return
        b, e = intervals[idx]
        cap = min(residual[b : e + 1])
        for mult in range(cap, -1, -1):
            for i in range(b, e + 1):
                residual[i] -= mult
            segs.extend([(b, e)] * mult)
            rec(idx + 1)
            if mult:
                del segs[-mult:]
            for i in range(b, e + 1):
                residual[i] += mult
        return

    rec(0)
    return out


def chain_rank_matrix(segs: ChainSegs, k: int) -> dict[Seg, int]:
    """r[(i, j)] = number of segments containing [i, j]."""
    r = {(i, j): 0 for i in range(k) for j in range(i, k)}
    for b, e in segs:
        for i in range(b, e + 1):
            for j in range(i, e + 1):
                r[(i, j)] += 1
    return r


@lru_cache(maxsize=None)
def rank_key(segs: ChainSegs, k: int) -> tuple[int, ...]:
    r = chain_rank_matrix(segs, k)
    return tuple(r[(i, j)] for i in range(k) for j in range(i, k))


def segment_counts(segs: ChainSegs) -> dict[Seg, int]:
    counts: dict[Seg, int] = {}
    for s in segs:
        counts[s] = counts.get(s, 0) + 1
    return counts


def chain_representative(segs: ChainSegs, dims: tuple[int, ...]) -> list[list[list[int]]]:
    """Arrow matrices (one per adjacent grade pair) of the shift-operator sum.

    Longer segments claim lower slot indices, so rank strata come out in
    partial-identity normal form (e.g. diag(I_r, 0) on two grades).
    """
    k = len(dims)
    slot_next = [0] * k
    order = sorted(segs, key=lambda s: (s[0] - s[1], s[0]))
    slots: list[dict[int, int]] = []
    for b, e in order:
        assignment = {}
        for i in range(b, e + 1):
            assignment[i] = slot_next[i]
            slot_next[i] += 1
        slots.append(assignment)
    if list(slot_next) != list(dims):
        raise InputError("segment coverage does not match chain dims")
    arrows = [
        [[0] * dims[i] for _ in range(dims[i + 1])] for i in range(k - 1)
    ]
    for (b, e), assignment in zip(order, slots):
        for i in range(b, e):
            arrows[i][assignment[i + 1]][assignment[i]] = 1
    return arrows


def _commutator_matrix(arrows: list[list[list[int]]], dims: tuple[int, ...]):
    """Matrix of A -> [A, x] from the symmetry Lie algebra to the chain space."""
    k = len(dims)
    ncols = sum(d * d for d in dims)
    nrows = sum(dims[i] * dims[i + 1] for i in range(k - 1))
    m = [[0] * ncols for _ in range(nrows)]
    col = 0
    col_of = {}
    for g in range(k):
        for a in range(dims[g]):
            for b in range(dims[g]):
                col_of[(g, a, b)] = col
                col += 1
    row = 0
    for i in range(k - 1):
        x = arrows[i]
        for r in range(dims[i + 1]):
            for c in range(dims[i]):
                # entry (r, c) of A_{i+1} x_i - x_i A_i
                for t in range(dims[i + 1]):
                    if x[t][c]:
                        m[row][col_of[(i + 1, r, t)]] += x[t][c]
                for t in range(dims[i]):
                    if x[r][t]:
                        m[row][col_of[(i, t, c)]] -= x[r][t]
                row += 1
    return m


@lru_cache(maxsize=None)
def chain_orbit_dim(segs: ChainSegs, dims: tuple[int, ...]) -> int:
    """Rank of the infinitesimal action at the representative."""
    if len(dims) <= 1:
        return 0
    arrows = chain_representative(segs, dims)
    return linalg.rank(_commutator_matrix(arrows, dims))


# ---------------------------------------------------------------------------
# orbit records


@dataclass(frozen=True)
class OrbitRecord:
    variety: VoganVariety
    index: int
    dim: int
    is_open: bool
    is_closed: bool
    # family-specific labels (exactly one is set for classical shapes)
    msegs: tuple[ChainSegs, ...] | None = None  # chain varieties
    subset: tuple[int, ...] | None = None  # classical steinberg
    rank: int | None = None  # classical two-eigenvalue

    @property
    def key(self):
        if self.msegs is not None:
            return self.msegs
        if self.subset is not None:
            return self.subset
        return self.rank

    def label(self) -> str:
        if self.msegs is not None:
            return multisegment_str(self.variety, self.msegs)
        if self.subset is not None:
            return "{" + ", ".join(f"a{i + 1}" for i in self.subset) + "}"
        return f"rank {self.rank}"


def multisegment_str(v: VoganVariety, msegs: tuple[ChainSegs, ...]) -> str:
    parts = []
    for chain, segs in zip(v.chains, msegs):
        for b, e in segs:
            lo, hi = chain.exponent(b), chain.exponent(e)
            parts.append(f"[{lo}]" if b == e else f"[{lo}..{hi}]")
    return "{" + ", ".join(parts) + "}" if parts else "{}"


def _sort_and_finish(v: VoganVariety, raw: list[dict]) -> list[OrbitRecord]:
    raw.sort(key=lambda o: (o["dim"], o["sort_key"]))
    total = v.total_dim
    records = [
        OrbitRecord(
            variety=v,
            index=i,
            dim=o["dim"],
            is_open=o["dim"] == total,
            is_closed=o["dim"] == 0,
            msegs=o.get("msegs"),
            subset=o.get("subset"),
            rank=o.get("rank"),
        )
        for i, o in enumerate(raw)
    ]
    if sum(r.is_open for r in records) != 1 or sum(r.is_closed for r in records) != 1:
        raise InternalInvariantError("expected exactly one open and one closed orbit")
    return records


def enumerate_orbits(v: VoganVariety) -> list[OrbitRecord]:
    """Complete, duplicate-free orbit list with deterministic ids."""
    if v.kind == "chain":
        per_chain = [chain_multisegments(c.dims) for c in v.chains]
        raw = []
        for combo in itertools.product(*per_chain) if per_chain else [()]:
            dim = sum(
                chain_orbit_dim(segs, chain.dims)
                for segs, chain in zip(combo, v.chains)
            )
            key = tuple(
                rank_key(segs, chain.length) for segs, chain in zip(combo, v.chains)
            )
            raw.append({"msegs": tuple(combo), "dim": dim, "sort_key": key})
        return _sort_and_finish(v, raw)
    if v.kind == "steinberg":
        raw = [
            {"subset": s, "dim": len(s), "sort_key": s}
            for r in range(v.n + 1)
            for s in itertools.combinations(range(v.n), r)
        ]
        return _sort_and_finish(v, raw)
    if v.kind == "two_eigenvalue":
        ranks = range(0, v.n + 1) if v.symmetric_form else range(0, v.n + 1, 2)
        raw = [
            {"rank": r, "dim": two_eig_orbit_dim(v, r), "sort_key": (r,)}
            for r in ranks
        ]
        return _sort_and_finish(v, raw)
    raise UnsupportedFamilyError(f"cannot enumerate orbits for kind {v.kind!r}")


# ---------------------------------------------------------------------------
# classical two-eigenvalue helpers


def two_eig_representative(v: VoganVariety, rank: int) -> list[list[int]]:
    n = v.n
    m = [[0] * n for _ in range(n)]
    if v.symmetric_form:
        for i in range(rank):
            m[i][i] = 1
    else:
        if rank % 2:
            raise InputError("antisymmetric ranks are even")
        for t in range(rank // 2):
            m[2 * t][2 * t + 1] = 1
            m[2 * t + 1][2 * t] = -1
    return m


def _two_eig_coords(v: VoganVariety, m) -> list:
    """Coordinates of a form-compatible matrix in the subspace basis."""
    n = v.n
    if v.symmetric_form:
        return [m[i][j] for i in range(n) for j in range(i, n)]
    return [m[i][j] for i in range(n) for j in range(i + 1, n)]


def two_eig_action_matrix(v: VoganVariety, x) -> list[list]:
    """Matrix of A -> A x + x A^T from gl_n to the subspace, in coordinates."""
    n = v.n
    cols = []
    for a in range(n):
        for b in range(n):
            img = [[0] * n for _ in range(n)]
            # (E_ab x + x E_ba) entries
            for j in range(n):
                img[a][j] += x[b][j]
            for i in range(n):
                img[i][a] += x[i][b]
            cols.append(_two_eig_coords(v, img))
    return linalg.transpose(linalg.to_fractions(cols))


def two_eig_orbit_dim(v: VoganVariety, rank: int) -> int:
    x = two_eig_representative(v, rank)
    return linalg.rank(two_eig_action_matrix(v, x))


# ---------------------------------------------------------------------------
# rank data, representatives, closure order


def rank_matrices(orbit: OrbitRecord) -> tuple[dict[Seg, int], ...]:
    v = orbit.variety
    if orbit.msegs is None:
        raise UnsupportedFamilyError("rank matrices are defined for chain varieties")
    return tuple(
        chain_rank_matrix(segs, chain.length)
        for segs, chain in zip(orbit.msegs, v.chains)
    )


def representative(orbit: OrbitRecord):
    """Rational point of V: arrow matrices per chain, or the (anti)symmetric
    normal form, or the root-line coefficient vector."""
    v = orbit.variety
    if v.kind == "chain":
        return [
            chain_representative(segs, chain.dims)
            for segs, chain in zip(orbit.msegs, v.chains)
        ]
    if v.kind == "steinberg":
        return [1 if i in orbit.subset else 0 for i in range(v.n)]
    return two_eig_representative(v, orbit.rank)


def orbit_dim(orbit: OrbitRecord) -> int:
    return orbit.dim


def closure_leq(a: OrbitRecord, b: OrbitRecord) -> bool:
    """a <= b iff a lies in the closure of b (entrywise rank dominance)."""
    if a.variety != b.variety:
        raise InputError("closure comparison across different varieties")
    v = a.variety
    if v.kind == "chain":
        return all(
            x <= y
            for sa, sb, chain in zip(a.msegs, b.msegs, v.chains)
            for x, y in zip(rank_key(sa, chain.length), rank_key(sb, chain.length))
        )
    if v.kind == "steinberg":
        return set(a.subset) <= set(b.subset)
    return a.rank <= b.rank


def hasse(orbits: list[OrbitRecord]) -> list[tuple[int, int]]:
    """Covering relations (a, b): orbit a is covered by orbit b."""
    n = len(orbits)
    leq = [[closure_leq(orbits[i], orbits[j]) for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            if not any(k != i and k != j and leq[i][k] and leq[k][j] for k in range(n)):
                edges.append((i, j))
    return sorted(edges)


def orbit_by_key(orbits: list[OrbitRecord], key) -> OrbitRecord:
    for o in orbits:
        if o.key == key:
            return o
    raise InputError(f"no orbit with key {key!r}")


# ---------------------------------------------------------------------------
# general-linear shadows (consumed by the Arthur-type test)


def gl_shadow(orbit: OrbitRecord) -> list[tuple[Chain, ChainSegs]]:
    """The orbit as chain multisegment data, via the standard-representation
    realisation for the classical shapes."""
    v = orbit.variety
    if v.kind == "chain":
        return list(zip(v.chains, orbit.msegs))
    if v.kind == "steinberg":
        chain, segs = classical.gl_multisegment_of_subset(v.family, v.n, orbit.subset)
        return [(chain, segs)]
    chain = Chain(Fraction(-1, 2), (v.n, v.n))
    return [(chain, classical.two_eigenvalue_gl_segments(v.n, orbit.rank))]
