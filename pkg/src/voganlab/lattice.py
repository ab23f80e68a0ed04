"""
Exact integer-lattice arithmetic and torus-stabilizer component groups.

Smith normal form is computed over Python integers (arbitrary precision, no
modular shortcuts) with the two unimodular transforms carried along.  On top
of it sit the finite invariants of diagonalisable stabilizers inside a dual
torus: the subgroup of a torus cut out by a set of characters has component
group equal to the torsion of the character-lattice cokernel, and torsion
elements of the torus (given as rational cocharacters) land in explicit
components.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError

IntMat = list[list[int]]


# ---------------------------------------------------------------------------
# Smith normal form


def _swap_rows(m: IntMat, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: IntMat, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _addmul_row(m: IntMat, dst: int, src: int, c: int) -> None:
    m[dst] = [a + c * b for a, b in zip(m[dst], m[src])]


def _addmul_col(m: IntMat, dst: int, src: int, c: int) -> None:
    for row in m:
        row[dst] += c * row[src]


def smith_normal_form(matrix) -> tuple[IntMat, IntMat, IntMat]:
    """
    Return (D, U, V) with D = U * M * V, U and V unimodular, D diagonal with
    non-negative entries satisfying d_1 | d_2 | ...

    >>> D, U, V = smith_normal_form([[2, 4], [6, 8]])
    >>> [D[0][0], D[1][1]]
    [2, 4]
    """
    m = [[int(x) for x in row] for row in matrix]
    nr = len(m)
    nc = len(m[0]) if m else 0
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def pivot_smallest(t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(nr, nc):
        pos = pivot_smallest(t)
        if pos is None:
            break
        pi, pj = pos
        _swap_rows(m, t, pi)
        _swap_rows(u, t, pi)
        _swap_cols(m, t, pj)
        _swap_cols(v, t, pj)
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    _addmul_row(m, i, t, -q)
                    _addmul_row(u, i, t, -q)
                    if m[i][t]:
                        _swap_rows(m, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
            for j in range(t + 1, nc):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    _addmul_col(m, j, t, -q)
                    _addmul_col(v, j, t, -q)
                    if m[t][j]:
                        _swap_cols(m, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
        # the pivot must divide everything below-right; otherwise fold a bad
        # entry into the pivot column and redo
        bad = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if m[i][j] % m[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            _addmul_row(m, t, bad, 1)
            _addmul_row(u, t, bad, 1)
            continue
        t += 1

    for i in range(min(nr, nc)):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            u[i] = [-x for x in u[i]]
    return m, u, v


def elementary_divisors(matrix) -> list[int]:
    """Nonzero diagonal of the Smith form (all invariant factors, 1s included)."""
    d, _, _ = smith_normal_form(matrix)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i]:
            out.append(d[i][i])
    return out


# ---------------------------------------------------------------------------
# root data and component groups

FAMILIES = ("GL", "SO_even_dual", "Sp_dual_of_SO_odd", "SO_odd_dual_of_Sp")


@dataclass(frozen=True)
class ComponentGroup:
    """Finite abelian group as a divisor chain; empty list = trivial group."""

    elementary_divisors: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        n = 1
        for d in self.elementary_divisors:
            n *= d
        return n

    @property
    def is_trivial(self) -> bool:
        return not self.elementary_divisors

    def __str__(self) -> str:
        if self.is_trivial:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.elementary_divisors)


@dataclass(frozen=True)
class RootDatum:
    """
    Roots of a dual group expressed on the cocharacter lattice of its maximal
    torus, plus the torsion generators of the centre as rational cocharacters.
    """

    rank: int
    family: str
    roots: tuple[tuple[int, ...], ...]
    center_generators: tuple[tuple[Fraction, ...], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        for r in self.roots:
            if len(r) != self.rank:
                raise InputError("root length does not match rank")
        for z in self.center_generators:
            if len(z) != self.rank:
                raise InputError("center generator length does not match rank")
            for r in self.roots:
                pairing = sum(Fraction(a) * b for a, b in zip(r, z))
                if pairing.denominator != 1:
                    raise InputError(
                        "center generator not annihilated by all roots (non-integral pairing)"
                    )

    def root_subset(self, indices) -> list[tuple[int, ...]]:
        try:
            return [self.roots[i] for i in indices]
        except IndexError:
            raise InputError(f"root index out of range (have {len(self.roots)} roots)") from None


def _int_inverse(u: IntMat) -> IntMat:
    """Inverse of a unimodular integer matrix (exact, still integral)."""
    n = len(u)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(u)]
    # forward elimination with full pivoting is overkill; plain Gauss-Jordan
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    out = [[x for x in row[n:]] for row in aug]
    assert all(x.denominator == 1 for row in out for x in row)
    return [[int(x) for x in row] for row in out]


def _snf_for_subset(rd: RootDatum, subset) -> tuple[IntMat, IntMat, list[int]]:
    """Smith data for the character sublattice spanned by the chosen roots.

    Returns (D, U_inv, divisors) where the adapted basis of the character
    lattice is the columns of U_inv: the sublattice is spanned by
    divisor_i * (column i of U_inv).
    """
    rows = rd.root_subset(sorted(set(subset)))
    identity = [[int(i == j) for j in range(rd.rank)] for i in range(rd.rank)]
    if not rows:
        return [], identity, []
    mt = [[rows[j][i] for j in range(len(rows))] for i in range(rd.rank)]
    d, u, _v = smith_normal_form(mt)
    divisors = [d[i][i] for i in range(min(len(d), len(rows))) if d[i][i]]
    return d, _int_inverse(u), divisors


def stabilizer_component_group(rd: RootDatum, subset) -> ComponentGroup:
    """
    Component group of { t in the torus : alpha(t) = 1 for alpha in subset }.

    The subset indexes ``rd.roots``.  The answer is the torsion of the
    character-lattice cokernel, read off the Smith form (divisors > 1).
    """
    _d, _uinv, divisors = _snf_for_subset(rd, subset)
    return ComponentGroup(tuple(d for d in divisors if d > 1))


def center_image(rd: RootDatum, subset) -> tuple[dict[int, tuple[int, ...]], bool]:
    """
    Class of each centre generator in the stabilizer component group.

    Returns (mapping, surjective): mapping sends the generator index to its
    coordinate vector in prod Z/d_i over the divisors d_i > 1, and
    ``surjective`` says whether the centre classes generate the whole
    component group (nontrivial local systems then all come from non-split
    forms).
    """
    _d, uinv, divisors = _snf_for_subset(rd, subset)
    torsion = [(i, d) for i, d in enumerate(divisors) if d > 1]
    mapping: dict[int, tuple[int, ...]] = {}
    for gi, z in enumerate(rd.center_generators):
        cls = []
        for i, d in torsion:
            # adapted character f_i = column i of U^{-1}; its value on the
            # torsion element exp(2*pi*i*z) is exp(2*pi*i*<f_i, z>)
            pairing = sum(Fraction(uinv[j][i]) * z[j] for j in range(rd.rank))
            k = pairing * d
            if k.denominator != 1:
                raise InputError("center generator does not lie in the stabilizer")
            cls.append(int(k) % d)
        mapping[gi] = tuple(cls)
    if not torsion:
        return mapping, True
    # do the classes generate prod Z/d_i?  Stack them over the relation
    # lattice: the classes surject iff the stacked lattice is all of Z^t,
    # i.e. every invariant factor is 1.
    rows = [list(cls) for cls in mapping.values()]
    for i, (_, d) in enumerate(torsion):
        rel = [0] * len(torsion)
        rel[i] = d
        rows.append(rel)
    surjective = all(d == 1 for d in elementary_divisors(rows))
    return mapping, surjective


# ---------------------------------------------------------------------------
# built-in root data, parameterised by rank


def _e(i: int, n: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def _diff(i: int, n: int) -> tuple[int, ...]:
    v = [0] * n
    v[i] = 1
    v[i + 1] = -1
    return tuple(v)


def builtin_root_datum(family: str, n: int) -> RootDatum:
    """Simple roots and centre torsion for the four built-in dual groups."""
    if n < 1:
        raise InputError("rank must be >= 1")
    half = Fraction(1, 2)
    if family == "GL":
        roots = tuple(_diff(i, n) for i in range(n - 1))
        return RootDatum(n, family, roots, ())
    if family == "Sp_dual_of_SO_odd":
        # dual group Sp(2n, C); extra simple root 2 e_n; centre {±1}
        roots = tuple(_diff(i, n) for i in range(n - 1)) + (tuple(2 * x for x in _e(n - 1, n)),)
        return RootDatum(n, family, roots, ((half,) * n,))
    if family == "SO_odd_dual_of_Sp":
        # dual group SO(2n+1, C); extra simple root e_n; centre trivial
        roots = tuple(_diff(i, n) for i in range(n - 1)) + (tuple(_e(n - 1, n)),)
        return RootDatum(n, family, roots, ())
    if family == "SO_even_dual":
        # dual group SO(2n, C); extra simple root e_{n-1} + e_n; centre {±1}
        if n < 2:
            raise InputError("SO_even_dual needs rank >= 2")
        extra = [0] * n
        extra[n - 2] = 1
        extra[n - 1] = 1
        roots = tuple(_diff(i, n) for i in range(n - 1)) + (tuple(extra),)
        return RootDatum(n, family, roots, ((half,) * n,))
    raise InputError(f"unknown family {family!r}")


def root_datum_from_json(doc: dict) -> RootDatum:
    """Load a root datum from a JSON document (rank, family, roots, center)."""
    try:
        rank = int(doc["rank"])
        family = doc["family"]
        roots = tuple(tuple(int(x) for x in r) for r in doc["roots"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad root datum document: {exc}") from exc
    center = tuple(
        tuple(Fraction(str(x)) for x in z) for z in doc.get("center", [])
    )
    return RootDatum(rank, family, roots, center)
