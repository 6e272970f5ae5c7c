"""Koszul pairs of graphs: closedness certificates, pair verdicts, Groebner
bases of pair ideals, colon ideals, linear quotients and Betti numbers."""

from ._core import (
    CapExceeded,
    Graph,
    ParseError,
    betti,
    brute_force_closed,
    closed_labeling,
    colon,
    cross_check,
    decide_pair,
    groebner_basis,
    is_closed,
    koszul_probe,
    linear_quotients,
    pair_generators,
    verify_closed_labeling,
    verify_paper,
)

__all__ = [
    "CapExceeded",
    "Graph",
    "ParseError",
    "betti",
    "brute_force_closed",
    "closed_labeling",
    "colon",
    "cross_check",
    "decide_pair",
    "groebner_basis",
    "is_closed",
    "koszul_probe",
    "linear_quotients",
    "pair_generators",
    "verify_closed_labeling",
    "verify_paper",
]
