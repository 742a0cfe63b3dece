"""Exact barycentric geometry of generalized orthocenters.

Points are homogeneous barycentric triples over quadratic towers; every
computation is exact. See the project README for the conventions.
"""

from ._cevian import (
    A,
    B,
    C,
    G,
    CevianError,
    FieldElement,
    Line,
    Point,
    anticomplement,
    bary_to_w,
    classify_M,
    complement,
    compute_json,
    derive,
    es_contains,
    es_sample,
    figure_names,
    is_valid,
    isotom_complement,
    isotomic,
    j_invariant,
    join,
    meet,
    p_tilde,
    render,
    run_suite,
    s_formula,
    suite_names,
    torsion12,
    vertex_orthocenter,
    w_add,
    w_multiple,
    w_order,
    w_to_bary,
)

__all__ = [name for name in dir() if not name.startswith("_")]
