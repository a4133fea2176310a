"""Assemble the full analysis report for one group.

The report is a plain JSON-serializable dict with fixed field names
(report_version 1). Every decided property carries the method that decided
it, and every witness is re-validated against the graph before being
embedded.
"""

from __future__ import annotations

import datetime as _dt

from . import properties as props
from . import spectra
from .graph import ThetaGraph, build_theta, min_degree, prime_order_set
from .groups import GroupSpec, order_profile

__all__ = ["analyze_group", "spectrum_section"]

REPORT_VERSION = 1
SPECTRUM_MATCH_TOL = 1e-7


def _spectrum_entries(result: spectra.SpectrumResult) -> list[dict]:
    return [
        {
            "value_display": display,
            "value_numeric": numeric,
            "multiplicity": mult,
            "kind": result.kind,
        }
        for display, numeric, mult in result.display_items()
    ]


def spectrum_section(t: ThetaGraph) -> dict:
    """Numeric spectrum always; the exact closed form and a match flag when
    the family and order shape are covered by one."""
    q = spectra.build_Q(t)
    numeric = spectra.eig_sym(q)
    section: dict = {"numeric": _spectrum_entries(numeric)}
    family = t.group.family
    n = t.group.params.get("n")
    try:
        if family not in ("cyclic", "dihedral") or n is None:
            raise spectra.UnsupportedFamilyError(
                f"no closed-form spectrum for family {family!r}"
            )
        closed = spectra.closed_form_spectrum(family, n)
    except spectra.UnsupportedFamilyError as exc:
        section["closed_form"] = None
        section["closed_form_supported"] = False
        section["closed_form_note"] = str(exc)
        section["match"] = None
        return section
    section["closed_form"] = _spectrum_entries(closed)
    section["closed_form_supported"] = True
    section["match"] = spectra.spectra_equal(closed, numeric, SPECTRUM_MATCH_TOL)
    return section


def analyze_group(
    g: GroupSpec,
    hamiltonian_budget: int = props.DEFAULT_NODE_BUDGET,
    include_spectrum: bool = True,
    timestamp: bool = True,
) -> dict:
    t = build_theta(g)
    n = t.n_vertices

    report: dict = {"report_version": REPORT_VERSION}
    if timestamp:
        report["generated_at"] = _dt.datetime.now(_dt.timezone.utc).isoformat()

    report["group"] = {
        "family": g.family,
        "params": g.params,
        "order": g.size,
        "identity": g.labels[g.identity_index],
        "order_profile": [[o, c] for o, c in order_profile(g).items()],
    }
    report["graph"] = {
        "vertices": n,
        "edges": t.edge_count,
        "min_degree": min_degree(t),
        "max_degree": int(t.degrees.max()),
    }

    connected = props.is_connected(t)
    diam = props.diameter(t) if connected else None
    g_girth = props.girth(t)
    dom_number, dom_witness = props.domination_number(t)
    planar, planar_method = props.planarity_decision(t)
    ham = props.is_hamiltonian(t, node_budget=hamiltonian_budget)
    conn = props.vertex_connectivity(t)
    s_set = prime_order_set(t)
    classification = props.open_problem_classify(t)

    if ham.cycle is not None and not props.validate_cycle(t, ham.cycle):
        raise props.CrossCheckError("report: Hamiltonian cycle failed re-validation")
    if conn.witness_cut is not None and len(conn.witness_cut) > 0:
        if props.components_after_removal(t, conn.witness_cut) < 2:
            raise props.CrossCheckError("report: connectivity cut failed re-validation")

    report["properties"] = {
        "connected": {"value": connected, "method": "bfs"},
        "diameter": {"value": diam, "method": "bfs"},
        "girth": {
            "value": None if g_girth == float("inf") else int(g_girth),
            "finite": g_girth != float("inf"),
            "method": "bfs",
        },
        "eulerian": {"value": props.is_eulerian(t), "method": "dual_criteria"},
        "complete": {"value": props.is_complete(t), "method": "dual_criteria"},
        "planar": {"value": planar, "method": planar_method},
        "hamiltonian": {
            "status": ham.status,
            "method": ham.method,
            "cycle": list(ham.cycle) if ham.cycle is not None else None,
            "nodes_explored": ham.nodes_explored,
            "witness_cut": sorted(ham.witness_cut) if ham.witness_cut else None,
        },
        "domination_number": {
            "value": dom_number,
            "witness": sorted(dom_witness),
            "method": "identity_universal",
        },
        "vertex_connectivity": {
            "value": conn.kappa,
            "method": conn.method,
            "witness_cut": sorted(conn.witness_cut) if conn.witness_cut else None,
        },
        "prime_order_set": {
            "size": s_set.size,
            "indices": sorted(s_set.indices),
        },
        "open_problem_class": classification,
    }

    if include_spectrum:
        report["spectrum"] = spectrum_section(t)

    report["warnings"] = [{"code": c, "message": m} for c, m in t.warnings]
    return report
