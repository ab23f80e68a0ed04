"""
Arthur-type classification by centered rectangle decompositions.

A rectangle (d, a, center) stands for a block of a segments of length d whose
start grades are consecutive; its center of mass is the common average of
the segment centers.  A parameter with a bounded Weil-part restricted to an
untwisted chain decomposes into rectangles centered at exponent 0, so an
orbit is of Arthur type exactly when its multisegment splits into
zero-centered rectangles on the true exponent grid.

Decompositions are found by forced greedy extraction: rectangles never mix
segment lengths, and within a length class the leftmost remaining start must
open a run whose width is pinned by the zero-center condition, so the search
needs no backtracking (large lengths are processed first; the verdict is the
contract, the decomposition is a witness).  Classical-family orbits are
tested through their general-linear realisation.  For varieties with several
chains the criterion is applied per chain and the verdict carries a caveat
flag, since the boundedness analysis is per-twist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import orbits
from .errors import InputError
from .orbits import ChainSegs, OrbitRecord
from .variety import Chain


@dataclass(frozen=True)
class Rectangle:
    """a segments of length d at consecutive starts, with the given center."""

    d: int
    a: int
    center: Fraction

    def segments(self) -> list[tuple[Fraction, Fraction]]:
        """Expand to (start, end) pairs in true exponents."""
        s0 = self.center - Fraction(self.d + self.a, 2) + 1
        return [(s0 + i, s0 + i + self.d - 1) for i in range(self.a)]


def rectangle_multisegment(d: int, a: int, center) -> tuple[Chain, ChainSegs]:
    """The chain and multisegment a single rectangle expands to.

    >>> chain, segs = rectangle_multisegment(2, 1, 0)
    >>> str(chain.offset), segs
    ('-1/2', ((0, 1),))
    """
    if d < 1 or a < 1:
        raise InputError("rectangle needs d >= 1 and a >= 1")
    center = Fraction(center)
    s0 = center - Fraction(d + a, 2) + 1
    if s0.denominator not in (1, 2) or (2 * s0).denominator != 1:
        raise InputError(f"center {center} is incompatible with the half-integer grid")
    lo = s0
    hi = s0 + (a - 1) + (d - 1)
    length = int(hi - lo) + 1
    dims = [0] * length
    segs = []
    for i in range(a):
        b = int(s0 + i - lo)
        e = b + d - 1
        segs.append((b, e))
        for t in range(b, e + 1):
            dims[t] += 1
    if any(x == 0 for x in dims):
        raise InputError("rectangle produced a gapped grid")  # cannot happen
    return Chain(lo, tuple(dims)), tuple(sorted(segs))


@dataclass(frozen=True)
class ArthurVerdict:
    is_arthur: bool
    decomposition: tuple[Rectangle, ...] = ()
    per_chain_criterion: bool = False  # caveat: several chains, tested separately

    def as_dict(self) -> dict:
        return {
            "is_arthur": self.is_arthur,
            "decomposition": [
                {"d": r.d, "a": r.a, "center": str(r.center)} for r in self.decomposition
            ],
            "per_chain_criterion": self.per_chain_criterion,
        }


def _chain_rectangles(chain: Chain, segs: ChainSegs) -> list[Rectangle] | None:
    """Partition one chain's segments into zero-centered rectangles."""
    by_length: dict[int, list[Fraction]] = {}
    for b, e in segs:
        by_length.setdefault(e - b + 1, []).append(chain.exponent(b))
    out: list[Rectangle] = []
    for d in sorted(by_length, reverse=True):
        starts = sorted(by_length[d])
        while starts:
            s0 = starts[0]
            a = 2 - d - 2 * s0  # forced by center 0: s0 = 1 - (d + a)/2
            if a.denominator != 1 or a < 1:
                return None
            a = int(a)
            run = [s0 + i for i in range(a)]
            for r in run:
                try:
                    starts.remove(r)
                except ValueError:
                    return None
            out.append(Rectangle(d, a, Fraction(0)))
    return out


def is_arthur_type(orbit: OrbitRecord) -> ArthurVerdict:
    """Decide Arthur type via the zero-centered rectangle criterion.

    Grids that are not symmetric about exponent 0 admit no decomposition and
    always produce a negative verdict.
    """
    shadow = orbits.gl_shadow(orbit)
    rects: list[Rectangle] = []
    for chain, segs in shadow:
        found = _chain_rectangles(chain, segs)
        if found is None:
            return ArthurVerdict(False, per_chain_criterion=len(shadow) > 1)
        rects.extend(found)
    return ArthurVerdict(True, tuple(rects), per_chain_criterion=len(shadow) > 1)


def brute_force_arthur(chain: Chain, segs: ChainSegs) -> bool:
    """Independent oracle: search over all multisets of zero-centered
    rectangles with total content equal to the chain coverage."""
    target = sorted((chain.exponent(b), chain.exponent(e)) for b, e in segs)

    def all_rectangles():
        total = sum(e - b + 1 for b, e in segs)
        rects = []
        for d in range(1, total + 1):
            for a in range(1, total // d + 1):
                try:
                    r = Rectangle(d, a, Fraction(0))
                    expanded = r.segments()
                except InputError:
                    continue
                lo = min(s for s, _ in expanded)
                hi = max(e for _, e in expanded)
                if lo < chain.exponent(0) or hi > chain.exponent(chain.length - 1):
                    continue
                rects.append(r)
        return rects

    rects = all_rectangles()

    def search(remaining: list, idx: int) -> bool:
        if not remaining:
            return True
        if idx >= len(rects):
            return False
        expansion = sorted(rects[idx].segments())
        rem = list(remaining)
        usable = True
        for s in expansion:
            if s in rem:
                rem.remove(s)
            else:
                usable = False
                break
        if usable and search(rem, idx):
            return True
        return search(remaining, idx + 1)

    return search(target, 0)


def grid_symmetric_about_zero(chain: Chain) -> bool:
    lo = chain.exponent(0)
    hi = chain.exponent(chain.length - 1)
    if lo != -hi:
        return False
    return all(
        chain.dims[i] == chain.dims[chain.length - 1 - i] for i in range(chain.length)
    )


# ---------------------------------------------------------------------------
# the per-orbit speculation report


def speculation_rows(
    table: list[OrbitRecord], smooth_flags: dict[int, bool] | None = None
) -> list[dict]:
    """Rows (orbit, open/closed, smooth closure, arthur, violation)."""
    from . import geometry

    rows = []
    for o in table:
        smooth = (
            smooth_flags[o.index]
            if smooth_flags is not None
            else geometry.is_smooth_closure(o, table)
        )
        verdict = is_arthur_type(o)
        open_or_closed = o.is_open or o.is_closed
        rows.append(
            {
                "orbit": o.index,
                "label": o.label(),
                "open_or_closed": open_or_closed,
                "smooth_closure": smooth,
                "arthur": verdict.is_arthur,
                "arthur_verdict": verdict,
                "violation": verdict.is_arthur and not open_or_closed and smooth,
            }
        )
    return rows


def speculation_table(rows: list[dict]) -> list[dict]:
    """Aggregate rows into the two-line open/closed vs rest summary.

    The representation-level column repeats the orbit column for the built-in
    families: their nontrivial local systems either do not exist or belong to
    non-split forms, so they contribute no further Arthur members.
    """
    out = []
    for cls, name in ((True, "Open/Closed"), (False, "Non-Open/Closed")):
        group = [r for r in rows if r["open_or_closed"] == cls]
        if not group:
            continue
        smooth_vals = {r["smooth_closure"] for r in group}
        arthur_vals = {r["arthur"] for r in group}
        out.append(
            {
                "class": name,
                "smooth": _summarise(smooth_vals),
                "arthur_orbit": _summarise(arthur_vals),
                "arthur_rep": _summarise(arthur_vals),
            }
        )
    return out


def _summarise(values: set) -> str:
    if values == {True}:
        return "Yes"
    if values == {False}:
        return "No"
    return "Mixed"
