"""
Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criterion 7 asserts, among other things, that the conormal duality reverses
the closure order on every chain variety of the exhaustive suite.  That
clause is false as mathematics -- the smallest counterexample is the chain
with dims (1, 2, 1), where two nested orbits have nested duals in the same
direction, as both independent implementations (generic conormal covector
and the greedy involution) agree -- so that single test fails by design and
documents the fact.  Every other criterion passes.
"""

import itertools
import json
import time
from fractions import Fraction

import pytest

from voganlab import kl
from voganlab.arthur import brute_force_arthur, is_arthur_type, speculation_rows, speculation_table
from voganlab.bridge import multiplicity_matrix, rationally_smooth
from voganlab.cli import main
from voganlab.datasets import dataset_check, dataset_table, load_dataset
from voganlab.geometry import is_smooth_closure, mw_involution, pyasetskii_dual
from voganlab.lattice import builtin_root_datum, center_image, stabilizer_component_group
from voganlab.orbits import closure_leq, enumerate_orbits, gl_shadow
from voganlab.variety import steinberg_variety, two_eigenvalue_variety


def report(criterion: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f"  [{detail}]" if detail else ""
    print(f"acceptance {criterion}: {status}{suffix}")
    assert ok, f"{criterion}{suffix}"


def test_criterion_1_line_families():
    t0 = time.time()
    for n in range(2, 7):
        table = enumerate_orbits(steinberg_variety("gl", n))
        assert len(table) == 2 ** (n - 1)
        for o in table:
            assert is_smooth_closure(o, table)
            assert is_arthur_type(o).is_arthur == (o.is_open or o.is_closed)
        agg = speculation_table(speculation_rows(table))
        expected_rest = [] if n == 2 else [
            {"class": "Non-Open/Closed", "smooth": "Yes", "arthur_orbit": "No", "arthur_rep": "No"}
        ]
        assert agg == [
            {"class": "Open/Closed", "smooth": "Yes", "arthur_orbit": "Yes", "arthur_rep": "Yes"},
        ] + expected_rest
    elapsed = time.time() - t0
    report("1 (principal-parameter tables, n=2..6)", elapsed < 5, f"{elapsed:.1f}s")


def test_criterion_2_component_groups():
    t0 = time.time()
    ok = True
    for n in range(2, 6):
        rd = builtin_root_datum("Sp_dual_of_SO_odd", n)
        cg = stabilizer_component_group(rd, [n - 1])
        classes, surjective = center_image(rd, [n - 1])
        ok &= cg.elementary_divisors == (2,) and classes[0] == (1,) and surjective
        rd = builtin_root_datum("SO_even_dual", n)
        ok &= stabilizer_component_group(rd, [n - 1]).is_trivial
        rd = builtin_root_datum("SO_odd_dual_of_Sp", n)
        ok &= stabilizer_component_group(rd, [n - 1]).is_trivial
    elapsed = time.time() - t0
    report("2 (classical component groups, n=2..5)", ok and elapsed < 1, f"{elapsed:.2f}s")


def test_criterion_3_two_eigenvalue_families():
    t0 = time.time()
    for n in range(1, 5):
        table = enumerate_orbits(two_eigenvalue_variety("gl", n))
        assert len(table) == n + 1
        assert [o.dim for o in table] == [r * (2 * n - r) for r in range(n + 1)]
        for o in table:
            assert is_arthur_type(o).is_arthur
            assert is_smooth_closure(o, table) == (o.is_open or o.is_closed)
        agg = speculation_table(speculation_rows(table))
        expected_rest = [] if n == 1 else [
            {"class": "Non-Open/Closed", "smooth": "No", "arthur_orbit": "Yes", "arthur_rep": "Yes"}
        ]
        assert agg == [
            {"class": "Open/Closed", "smooth": "Yes", "arthur_orbit": "Yes", "arthur_rep": "Yes"},
        ] + expected_rest
    elapsed = time.time() - t0
    report("3 (two-eigenvalue tables, n=1..4)", elapsed < 10, f"{elapsed:.1f}s")


def test_criterion_4_curated_so7_table(capsys):
    doc = load_dataset("so7-cfmmx16")
    table = dataset_table(doc)
    lines = table.splitlines()
    ok = (
        lines[2].split("  ")[0].strip() == "phi_0, phi_7"
        and "Yes" in lines[2]
        and lines[3].startswith("phi_2, phi_4, phi_5, phi_6")
        and lines[4].startswith("phi_1, phi_3")
        and dataset_check(doc) == []
    )
    code = main(["dataset", "so7-cfmmx16", "--check"])
    capsys.readouterr()
    report("4 (curated SO(7) table + check)", ok and code == 0)


def test_criterion_5_smooth_closure_multiplicities(chain_suite):
    t0 = time.time()
    for dims, v, table in chain_suite:
        mm = multiplicity_matrix(table)["entries"]
        for c in table:
            if not is_smooth_closure(c, table):
                continue
            # the multiplicities of the irreducible of C across all standard
            # modules form the indicator vector of the closure of C
            for d in table:
                expected = 1 if closure_leq(d, c) else 0
                assert mm[d.index][c.index] == expected, (dims, d.index, c.index)
    elapsed = time.time() - t0
    report("5 (smooth closures force indicator multiplicities)", elapsed < 60, f"{elapsed:.1f}s")


def test_criterion_6_identity_row_iff_open(chain_suite):
    for dims, v, table in chain_suite:
        mm = multiplicity_matrix(table)["entries"]
        for c in table:
            row_is_identity = all(
                mm[c.index][d.index] == (1 if d.index == c.index else 0) for d in table
            )
            assert row_is_identity == c.is_open, (dims, c.index)
    report("6 (standard module irreducible iff orbit open)", True)


def test_criterion_7_duality_battery(chain_suite):
    involution_ok = True
    swap_ok = True
    greedy_ok = True
    reversal_failures = []
    for dims, v, table in chain_suite:
        duals = {o.index: pyasetskii_dual(o, 0, table) for o in table}
        for o in table:
            involution_ok &= duals[duals[o.index].index].index == o.index
            greedy_ok &= mw_involution(o, table).index == duals[o.index].index
        top = next(o for o in table if o.is_open)
        zero = next(o for o in table if o.is_closed)
        swap_ok &= duals[top.index].index == zero.index
        swap_ok &= duals[zero.index].index == top.index
        for a in table:
            for b in table:
                if closure_leq(a, b) and not closure_leq(duals[b.index], duals[a.index]):
                    reversal_failures.append((dims, a.index, b.index))
    detail = (
        f"involution={involution_ok}, swap={swap_ok}, greedy-agreement={greedy_ok}, "
        f"order-reversal violations={len(reversal_failures)}"
        + (f", first={reversal_failures[0]}" if reversal_failures else "")
    )
    report(
        "7 (duality: involution, order reversal, swap, greedy agreement)",
        involution_ok and swap_ok and greedy_ok and not reversal_failures,
        detail,
    )


def test_criterion_8_smoothness_cross_validation(chain_suite):
    for dims, v, table in chain_suite:
        for o in table:
            assert rationally_smooth(o, table) == is_smooth_closure(o, table), (dims, o.index)
    report("8 (tangent smoothness = KL rational smoothness)", True)


def test_criterion_9_kl_sanity():
    t0 = time.time()
    # small length gaps force the constant polynomial
    for n in (3, 4, 5):
        for w in itertools.permutations(range(1, n + 1)):
            lw = kl.perm_length(w)
            for u in itertools.permutations(range(1, n + 1)):
                if kl.bruhat_leq(u, w) and lw - kl.perm_length(u) <= 2:
                    assert kl.kl_poly(u, w) == (1,)
    # the first nontrivial stalk, computed through the recursion
    assert kl.kl_poly((1, 2, 3, 4), (3, 4, 1, 2)) == (1, 1)
    # bounds over every pair in S_N, N <= 6
    for n in range(2, 7):
        table = kl._kl_table(n)
        perms, _index, lengths, _rmul = kl._sn_data(n)
        for (xi, wi), p in table.items():
            assert all(c >= 0 for c in p)
            if xi != wi:
                assert 2 * (len(p) - 1) < lengths[wi] - lengths[xi]
    elapsed = time.time() - t0
    report("9 (KL degree bounds and values through S_6)", elapsed < 30, f"{elapsed:.1f}s")


def test_criterion_10_determinism(capsys):
    argv = ["analyze", "--family", "gl", "--two-eig", "2", "--seed", "0"]
    assert main(list(argv)) == 0
    first = capsys.readouterr().out
    assert main(list(argv)) == 0
    second = capsys.readouterr().out
    ok = first == second and json.loads(first)["seed"] == 0
    report("10 (byte-identical reports for identical spec and seed)", ok)
