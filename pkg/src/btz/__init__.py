"""Vanishing complexes W(d,k) and A(d,k) in the Bruhat-Tits building of PGL(r)."""

from btz.core import (
    BTZError,
    Box,
    DDiagram,
    DSequence,
    RationalPoint,
    Vertex,
    admissible,
    critical_index,
    d_diagram,
    d_sequence,
    fundamental_weight,
    hat,
    is_weyl,
    k_capped,
    member_A_dk,
    member_A_k,
    member_W_dk,
    member_W_k,
    normalize,
    predict_add_weight,
    predict_down_shift,
    weyl_apply,
)

__version__ = "0.1.0"

__all__ = [
    "BTZError",
    "Box",
    "DDiagram",
    "DSequence",
    "RationalPoint",
    "Vertex",
    "admissible",
    "critical_index",
    "d_diagram",
    "d_sequence",
    "fundamental_weight",
    "hat",
    "is_weyl",
    "k_capped",
    "member_A_dk",
    "member_A_k",
    "member_W_dk",
    "member_W_k",
    "normalize",
    "predict_add_weight",
    "predict_down_shift",
    "weyl_apply",
]
