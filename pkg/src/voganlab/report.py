"""
Orbit reports: one self-contained record of everything the library computes
about a variety, serialisable to stable JSON (byte-identical across runs for
the same spec, version, and seed) and to a DOT digraph for the closure order.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor

from . import arthur, bridge, geometry, kl, lattice, orbits
from .orbits import OrbitRecord
from .variety import GL, VoganVariety

ABV_NOTE = (
    "orbits with smooth closure define singleton ABV-packet membership for "
    "restrictions of irreducible equivariant local systems on the closure; "
    "recorded from the smoothness flag, not from vanishing-cycle computations"
)


def _rank_matrix_json(orbit: OrbitRecord) -> list[dict] | None:
    if orbit.msegs is None:
        return None
    out = []
    for segs, chain in zip(orbit.msegs, orbit.variety.chains):
        r = orbits.chain_rank_matrix(segs, chain.length)
        out.append({f"{i},{j}": r[(i, j)] for i in range(chain.length) for j in range(i, chain.length)})
    return out


def _multisegment_json(orbit: OrbitRecord) -> list[list[list[str]]] | None:
    if orbit.msegs is None:
        return None
    out = []
    for segs, chain in zip(orbit.msegs, orbit.variety.chains):
        out.append([[str(chain.exponent(b)), str(chain.exponent(e))] for b, e in segs])
    return out


def _component_group_json(orbit: OrbitRecord):
    v = orbit.variety
    if v.kind != "steinberg":
        if v.kind == "chain":
            # stabilizers of chain orbits are open subgroups of endomorphism
            # algebras, hence connected
            return {"elementary_divisors": [], "center_classes": {}, "nonsplit_flag": True}
        return None
    rd = lattice.builtin_root_datum(v.family, v.n)
    cg = lattice.stabilizer_component_group(rd, orbit.subset)
    classes, surjective = lattice.center_image(rd, orbit.subset)
    return {
        "elementary_divisors": list(cg.elementary_divisors),
        "center_classes": {str(k): list(vv) for k, vv in classes.items()},
        "nonsplit_flag": surjective,
    }


def assemble_report(v: VoganVariety, seed: int = 0, jobs: int = 1) -> dict:
    from . import __version__

    table = orbits.enumerate_orbits(v)

    def per_orbit(o: OrbitRecord) -> dict:
        smooth = geometry.is_smooth_closure(o, table)
        verdict = arthur.is_arthur_type(o)
        dual = geometry.pyasetskii_dual(o, seed=seed, dual_table=table)
        rs = None
        if v.kind == "chain" and all(c.total <= kl.KL_TABLE_MAX for c in v.chains):
            rs = bridge.rationally_smooth(o, table)
        return {
            "id": o.index,
            "label": o.label(),
            "multisegment": _multisegment_json(o),
            "subset": list(o.subset) if o.subset is not None else None,
            "rank": o.rank,
            "dim": o.dim,
            "rank_matrix": _rank_matrix_json(o),
            "is_open": o.is_open,
            "is_closed": o.is_closed,
            "smooth_closure": smooth,
            "rationally_smooth": rs,
            "abv_singleton": smooth,
            "arthur": verdict.as_dict(),
            "dual_orbit": dual.index,
            "component_group": _component_group_json(o),
            "representative": orbits.representative(o),
            "violation": verdict.is_arthur and not (o.is_open or o.is_closed) and smooth,
        }

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            orbit_rows = list(pool.map(per_orbit, table))
    else:
        orbit_rows = [per_orbit(o) for o in table]

    if v.kind == "chain" and not all(c.total <= kl.KL_TABLE_MAX for c in v.chains):
        smooth_flags = {r["id"]: r["smooth_closure"] for r in orbit_rows}
        mult = _partial_multiplicity(table, smooth_flags)
    else:
        mult = bridge.multiplicity_matrix(table)

    report = {
        "tool": {"name": "voganlab", "version": __version__},
        "seed": seed,
        "conventions": {
            "arrow_orientation": "grade e to grade e+1 within each chain",
            "bridge": dict(bridge.CONVENTION),
            "dual_orbit_labels": "multisegment labels shared between V and its opposite",
        },
        "abv_note": ABV_NOTE,
        "variety": {
            **v.spec_dict(),
            "total_dim": v.total_dim,
            "group_dim": v.group_dim,
        },
        "orbits": orbit_rows,
        "multiplicity_matrix": mult,
        "hasse": [list(e) for e in orbits.hasse(table)],
    }
    return report


def _partial_multiplicity(table: list[OrbitRecord], smooth_flags: dict[int, bool]) -> dict:
    """Entries forced by support and smooth closures only (large chains)."""
    entries = []
    complete = True
    for c in table:
        row = []
        for d in table:
            if not orbits.closure_leq(c, d):
                row.append(0)
            elif smooth_flags[d.index]:
                row.append(1)
            else:
                row.append(None)
                complete = False
        entries.append(row)
    return {
        "entries": entries,
        "source": "smooth-closure-support (chain totals exceed the KL table range)",
        "complete": complete,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def hasse_dot(v: VoganVariety) -> str:
    """Covering digraph in DOT form; an edge D -> C means D is covered by C."""
    table = orbits.enumerate_orbits(v)
    edges = orbits.hasse(table)
    lines = ["digraph closure_order {", "  rankdir=BT;"]
    for o in table:
        lines.append(f'  "{o.index}" [label="{o.index}: {o.label()} (dim {o.dim})"];')
    for a, b in edges:
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def speculation_text(v: VoganVariety) -> str:
    """Aligned per-class table of smoothness vs Arthur type."""
    table = orbits.enumerate_orbits(v)
    rows = arthur.speculation_rows(table)
    agg = arthur.speculation_table(rows)
    cols = ["", "Closure smooth", "Orbit Arthur type", "Rep Arthur type"]
    body = [[r["class"], r["smooth"], r["arthur_orbit"], r["arthur_rep"]] for r in agg]
    return format_table(cols, body)


def format_table(header: list[str], body: list[list[str]]) -> str:
    widths = [
        max(len(str(row[i])) for row in [header] + body) for i in range(len(header))
    ]
    def fmt(row):
        return "  ".join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip()
    lines = [fmt(header), fmt(["-" * w for w in widths])]
    lines.extend(fmt(row) for row in body)
    return "\n".join(lines) + "\n"
